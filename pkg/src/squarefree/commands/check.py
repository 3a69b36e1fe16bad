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


def run_check(
    global_context: GlobalContext, path: str, order: str | None, verify: bool
) -> None:
    """Report whether the matrix is multigraded and admits a squarefree solution.

    A matrix without a squarefree solution is reported, not rejected: the
    report carries the general solution instead of the canonical one.
    """
    pipeline = InvariantPipeline(global_context, path, "check", order, verify)
    pipeline.check()
    pipeline.emit()
