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

from pathlib import Path

from squarefree.context import GlobalContext
from squarefree.core.exceptions import ValidationError
from squarefree.core.io.generator import generate_test_matrix
from squarefree.core.io.matrix_file import serialize
from squarefree.core.ui.theme import themed


def run_gen(
    global_context: GlobalContext,
    n: int,
    s: int,
    l: int,
    seed: int,
    output: str | None,
) -> None:
    from loguru import logger

    text = serialize(generate_test_matrix(n, s, l, seed))
    header = f"# generated: n={n} s={s} l={l} seed={seed}\n"

    if output is None:
        print(header + text, end="")
        return

    target = Path(output)
    if target.exists() and not global_context.config.force:
        raise ValidationError(f"{output} already exists; pass --force to overwrite it")
    target.write_text(header + text, encoding="utf-8")
    logger.info("Wrote generated matrix to {path}", path=target)
    if not global_context.config.silent:
        print(themed("success", f"Wrote {target}"))
