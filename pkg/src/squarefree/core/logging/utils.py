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

import contextlib
from time import perf_counter


@contextlib.contextmanager
def time_block(block_name: str):
    """Log the wall time of a code block at DEBUG."""
    from loguru import logger

    logger.debug(f"Starting {block_name}")
    start_time = perf_counter()

    try:
        yield
    finally:
        duration_ms = int((perf_counter() - start_time) * 1000)
        logger.debug(f"Finished {block_name}. Timing(ms)={duration_ms}")


def sweep_progress(label: str):
    """A progress callback for the algebra sweeps that steps the active bar."""
    from squarefree.core.logging.progress_manager import ProgressBarManager

    def report(degree) -> None:
        ProgressBarManager.advance(postfix=f"{label}={degree}")

    return report
