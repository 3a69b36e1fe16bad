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

from platformdirs import user_config_dir, user_log_path

VERSION = "0.1.0"

APP_NAME = "squarefree"
PROG_NAME = "sqf"
ENV_APP_PREFIX = APP_NAME.upper() + "_"
LOG_DIR = Path(user_log_path(appname=APP_NAME))

CONFIG_FILENAME = "squarefreeconfig.toml"

GLOBAL_CONFIG_FILE = Path(user_config_dir(APP_NAME)) / CONFIG_FILENAME
LOCAL_CONFIG_FILE = Path(CONFIG_FILENAME)

# commands that sweep 2^n or 3^n degrees and are subject to the size guard
# (`check` joins them when --verify is given)
SWEEP_COMMANDS = {
    "ideals",
    "basis",
    "reduce",
    "ann",
    "dim",
    "betti",
    "localcohom",
    "report",
}

DEFAULT_MAX_SWEEP_N = 16

# box bound for the squarefreeness and direct-sum checks of `check --verify`
VERIFY_BOX_BOUND = 2
