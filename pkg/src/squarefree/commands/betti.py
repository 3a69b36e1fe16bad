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


def run_betti(
    global_context: GlobalContext,
    path: str,
    degree: str | None,
    order: str | None,
    verify: bool,
) -> None:
    """Betti numbers at one degree, or the whole table over {0,1}^n.

    With ``verify`` every computed degree is compared against the Koszul
    strand (and Hochster's formula when s = 1).
    """
    pipeline = InvariantPipeline(global_context, path, "betti", order, verify)
    pipeline.betti(degree)
    pipeline.emit()
