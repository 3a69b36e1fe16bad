# -----------------------------------------------------------------------------
# /*
#  * Copyright (C) 2025 Squarefree
#  *
#  * This program is free software; you can redistribute it and/or modify
#  * it under the terms of the GNU General Public License as published by
#  * the Free Software Foundation; Version 2.
#  *
#  * This program is distributed in the hope that it will be useful,
#  * but WITHOUT ANY WARRANTY; without even the implied warranty of
#  * MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE. See the
#  * GNU General Public License for more details.
#  *
#  * You should have received a copy of the GNU General Public License
#  * along with this program; if not, write to the Free Software Foundation.
#  */
# -----------------------------------------------------------------------------

from squarefree.context import GlobalContext
from squarefree.pipelines.invariant_pipeline import InvariantPipeline


def run_ann(
    global_context: GlobalContext, path: str, order: str | None, verify: bool
) -> None:
    pipeline = InvariantPipeline(global_context, path, "ann", order, verify)
    pipeline.annihilator()
    pipeline.emit()
