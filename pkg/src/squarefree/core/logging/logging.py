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

"""Logging configuration for the squarefree CLI.

Reports go to stdout through typer; loguru only carries diagnostics. The
console sink therefore defaults to WARNING while the per-run log file
keeps everything from DEBUG up.
"""

import os
from datetime import datetime
from pathlib import Path

from squarefree.constants import ENV_APP_PREFIX, LOG_DIR


class StructuredLogger:
    """Configures loguru sinks for one command invocation."""

    def __init__(
        self,
        command_name: str,
        debug: bool = False,
        silent: bool = False,
        no_log_files: bool = False,
    ):
        self.command_name = command_name
        self.debug = debug
        self.silent = silent
        self.no_log_files = no_log_files
        self.logfile: Path | None = None
        self._setup_logger()

    def _levels(self) -> tuple[str, str]:
        """(file level, console level); flags win over environment variables."""
        if self.debug:
            return "DEBUG", "DEBUG"
        if self.silent:
            return "ERROR", "ERROR"
        log_level = os.getenv(f"{ENV_APP_PREFIX}LOG_LEVEL", "INFO").upper()
        console_level = os.getenv(f"{ENV_APP_PREFIX}CONSOLE_LOG_LEVEL", "WARNING").upper()
        return log_level, console_level

    def _setup_logger(self) -> None:
        from loguru import logger

        logger.remove()
        log_level, console_level = self._levels()

        def console_sink(message):
            import sys

            from tqdm import tqdm

            from squarefree.core.logging.progress_manager import ProgressBarManager

            text = message.record["message"].rstrip("\n")
            if ProgressBarManager.is_active():
                tqdm.write(text, file=sys.stderr)
            else:
                print(text, file=sys.stderr)

        logger.add(console_sink, level=console_level, format="{message}", catch=True)

        if self.no_log_files:
            logger.debug("File logging disabled")
            return

        LOG_DIR.mkdir(parents=True, exist_ok=True)
        timestamp = datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        logfile = LOG_DIR / f"sqf_{timestamp}.log"

        logger.add(
            logfile,
            level=log_level,
            format="<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
            "<level>{level: <8}</level> | "
            "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
            "<level>{message}</level>",
            rotation="10 MB",
            retention="14 days",
            compression="gz",
            catch=True,
            backtrace=True,
            diagnose=False,
        )

        logger.bind(
            command=self.command_name, logfile=str(logfile), log_level=log_level
        ).debug("Logger initialized")

        self.logfile = logfile

    def get_logfile(self) -> Path | None:
        return self.logfile


def setup_logger(
    command_name: str,
    debug: bool = False,
    silent: bool = False,
    no_log_files: bool = False,
) -> Path | None:
    """Set up logging for a command.

    Args:
        command_name: Name of the command being executed
        debug: Enable debug logging on the console and in the file
        silent: Only errors reach either sink
        no_log_files: Disable logging to files

    Returns:
        Path to the log file, or None if file logging is disabled
    """
    structured_logger = StructuredLogger(
        command_name, debug=debug, silent=silent, no_log_files=no_log_files
    )
    return structured_logger.get_logfile()


def get_log_directory() -> Path:
    return LOG_DIR
