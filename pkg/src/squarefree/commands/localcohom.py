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
from squarefree.core.exceptions import ValidationError
from squarefree.pipelines.invariant_pipeline import InvariantPipeline


def run_localcohom(
    global_context: GlobalContext,
    path: str,
    degree: str | None,
    patterns: bool,
    order: str | None,
    verify: bool,
) -> None:
    if degree is not None and patterns:
        raise ValidationError("--degree and --patterns cannot be combined")

    pipeline = InvariantPipeline(global_context, path, "localcohom", order, verify)
    pipeline.localcohom(degree)
    pipeline.emit()
