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

from dataclasses import dataclass, field
from typing import Literal, Protocol

from squarefree.constants import DEFAULT_MAX_SWEEP_N
from squarefree.core.algebra.exponents import MAX_VARIABLES
from squarefree.core.config.type_constraints import (
    BoolConstraint,
    LiteralTypeConstraint,
    RangeTypeConstraint,
    TypeConstraint,
)


class SquarefreeConfig(Protocol):
    """Protocol for configuration models understood by ConfigLoader."""

    constraints: dict[str, TypeConstraint]
    descriptions: dict[str, str]
    arg_options: dict[str, list[str]]


@dataclass
class GlobalConfig:
    output_format: Literal["text", "json"] = "text"
    verbose: bool = False
    silent: bool = False
    no_log_files: bool = False
    force: bool = False
    max_sweep_n: int = DEFAULT_MAX_SWEEP_N
    pattern_check_scale: int = 2
    console_theme: Literal["classic", "ocean", "mono"] = "classic"

    constraints = {
        "output_format": LiteralTypeConstraint(allowed=["text", "json"]),
        "verbose": BoolConstraint(),
        "silent": BoolConstraint(),
        "no_log_files": BoolConstraint(),
        "force": BoolConstraint(),
        "max_sweep_n": RangeTypeConstraint(min_value=1, max_value=MAX_VARIABLES, is_int=True),
        "pattern_check_scale": RangeTypeConstraint(min_value=2, max_value=5, is_int=True),
        "console_theme": LiteralTypeConstraint(allowed=["classic", "ocean", "mono"]),
    }

    descriptions = {
        "output_format": "Report format written to stdout (text or json)",
        "verbose": "Enable debug logging on the console",
        "silent": "Only print the report and errors; no progress bars or warnings",
        "no_log_files": "Disable logging to files, only output to console",
        "force": "Run 2^n / 3^n sweeps even when n exceeds max_sweep_n",
        "max_sweep_n": f"Largest number of variables a sweep runs on without --force (1-{MAX_VARIABLES})",
        "pattern_check_scale": "Multiplier for the second representative checked per sign pattern (2-5)",
        "console_theme": "Console theme for colored output (classic, ocean, mono)",
    }

    arg_options = {
        "output_format": ["--format", "-f"],
        "verbose": ["--verbose", "-v"],
        "silent": ["--silent", "-s"],
        "no_log_files": ["--no-log-files"],
        "force": ["--force"],
        "max_sweep_n": ["--max-sweep-n"],
        "pattern_check_scale": ["--pattern-check-scale"],
        "console_theme": ["--console-theme"],
    }

    @classmethod
    def get_cli_params(cls):
        """Typer option specs for every field, keyed by field name.

        Every option defaults to None so that unset flags fall through to
        the config files and environment.
        """
        from dataclasses import fields

        import typer

        params = {}
        for config_field in fields(cls):
            name = config_field.name
            arg_names = cls.arg_options.get(name, [f"--{name.replace('_', '-')}"])
            option = typer.Option(None, *arg_names, help=cls.descriptions.get(name, ""))
            field_type = config_field.type

            if field_type is bool:
                params[name] = (bool | None, option)
            elif field_type is int:
                params[name] = (int | None, option)
            elif getattr(field_type, "__origin__", None) is Literal:
                params[name] = (field_type | None, option)
            else:
                params[name] = (str | None, option)

        return params


@dataclass
class GlobalContext:
    config: GlobalConfig
    used_sources: set[str] = field(default_factory=set)

    @property
    def json_output(self) -> bool:
        return self.config.output_format == "json"

    def sweep_limit(self) -> int | None:
        """The size guard for sweeps, or None when --force lifts it."""
        return None if self.config.force else self.config.max_sweep_n
