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

import os
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from dataclasses import MISSING, fields
from pathlib import Path
from textwrap import shorten
from typing import Any

import typer

from squarefree.constants import (
    ENV_APP_PREFIX,
    GLOBAL_CONFIG_FILE,
    LOCAL_CONFIG_FILE,
    PROG_NAME,
)
from squarefree.core.exceptions import ConfigurationError
from squarefree.core.ui.theme import themed
from squarefree.runtimeutil import confirm_strict

_SCOPE_FILES = {"local": LOCAL_CONFIG_FILE, "global": GLOBAL_CONFIG_FILE}


def display_config(rows: list[tuple[str, str, str, str]], max_value_length: int = 60) -> None:
    """Print (key, description, value, source) rows as

    key: description
      value (source)
    """
    for key, description, value, source in rows:
        value_display = shorten(value, width=max_value_length, placeholder="...")
        print(f"{themed('label', key)}: {themed('primary', description)}")
        print(f"  {themed('value', value_display)} {themed('source', f'({source})')}")
        print()


def _config_schema() -> dict[str, dict[str, Any]]:
    from squarefree.context import GlobalConfig

    return {
        field.name: {
            "description": GlobalConfig.descriptions.get(field.name, ""),
            "default": None if field.default is MISSING else field.default,
            "constraint": GlobalConfig.constraints.get(field.name),
        }
        for field in fields(GlobalConfig)
    }


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    escaped = str(value).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def _write_toml_config(config_path: Path, config_data: dict) -> None:
    config_path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{key} = {_format_value(value)}" for key, value in sorted(config_data.items())]
    config_path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def _load_toml_config(config_path: Path) -> dict:
    """Read a scope's TOML file; a missing file is an empty config.

    Raises:
        ConfigurationError: If the TOML file is malformed
    """
    if not config_path.exists():
        return {}
    try:
        with open(config_path, "rb") as f:
            return tomllib.load(f)
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(f"Failed to parse config at {config_path}: {e}")


def _env_config() -> dict:
    return {
        k[len(ENV_APP_PREFIX) :].lower(): v
        for k, v in os.environ.items()
        if k.upper().startswith(ENV_APP_PREFIX)
    }


def _print_env_instructions(key: str | None, value: str | None) -> None:
    env_var = f"{ENV_APP_PREFIX}{key.upper()}" if key else f"{ENV_APP_PREFIX}*"
    if value is None:
        print(
            f"{themed('info', 'Info:')} Environment variables cannot be deleted by {PROG_NAME}."
        )
        print(f"  Windows (PowerShell): Remove-Item Env:\\{env_var}")
        print(f"  Linux/macOS: unset {env_var}")
    else:
        print(themed("success", "To set this as an environment variable:"))
        print(f"  Windows (PowerShell): $env:{env_var}='{value}'")
        print(f"  Linux/macOS: export {env_var}='{value}'")


def print_describe_options() -> None:
    print(f"{themed('primary', 'Available configuration options:')}\n")
    display_config(
        [
            (
                key,
                info["description"],
                f"Default: {info['default']}",
                f"Options: {info['constraint']}",
            )
            for key, info in sorted(_config_schema().items())
        ],
        max_value_length=80,
    )


def _require_key(key: str) -> dict[str, Any]:
    schema = _config_schema()
    if key not in schema:
        print(f"{themed('error', 'Error:')} Unknown configuration key '{key}'\n")
        print_describe_options()
        raise typer.Exit(1)
    return schema[key]


def set_config(key: str, value: str, scope: str) -> None:
    info = _require_key(key)

    if scope == "env":
        _print_env_instructions(key, value)
        return

    constraint = info["constraint"]
    try:
        final_value = constraint.coerce(value) if constraint else value
    except ConfigurationError as e:
        raise ConfigurationError(f"Invalid value for {key}: {e}")

    config_path = _SCOPE_FILES[scope]
    try:
        config_data = _load_toml_config(config_path)
    except ConfigurationError as e:
        print(f"{themed('warn', 'Warning:')} {e}. Creating new config.")
        config_data = {}

    config_data[key] = final_value
    _write_toml_config(config_path, config_data)
    print(themed("success", f"Set {key} = {_format_value(final_value)} ({scope})"))
    print(f"Config file: {config_path.absolute()}")


def _sources(scope: str | None) -> list[tuple[str, dict]]:
    """Config sources in priority order: local, environment, global."""
    sources = []
    if scope in (None, "local"):
        sources.append(("Local Config", _load_toml_config(LOCAL_CONFIG_FILE)))
    if scope in (None, "env"):
        sources.append(("Environment", _env_config()))
    if scope in (None, "global"):
        sources.append(("Global Config", _load_toml_config(GLOBAL_CONFIG_FILE)))
    return [(name, data) for name, data in sources if data]


def get_config(key: str | None, scope: str | None) -> None:
    schema = _config_schema()
    keys = sorted(schema) if key is None else [key]
    if key is not None:
        _require_key(key)

    sources = _sources(scope)
    rows = []
    for k in keys:
        description = schema[k]["description"]
        found = [(name, data[k]) for name, data in sources if k in data]
        if key is None:
            found = found[:1]
        for source_name, value in found:
            rows.append((k, description, str(value), source_name))
        if not found:
            rows.append((k, description, str(schema[k]["default"]), "Default"))

    if key is not None and len(rows) > 1:
        print(themed("primary", f"Configuration for key={key} in order of priority:"))
    display_config(rows)


def delete_config(key: str | None, scope: str) -> None:
    if scope == "env":
        _print_env_instructions(key, None)
        return

    config_path = _SCOPE_FILES[scope]
    config_data = _load_toml_config(config_path)
    if not config_data:
        print(f"{themed('info', 'Info:')} No {scope} config found at {config_path}")
        return

    if key is not None:
        if key not in config_data:
            print(f"{themed('info', 'Info:')} Key '{key}' not found in {scope} config")
            return
        del config_data[key]
        print(themed("success", f"Deleted {key} from {scope} config"))
    else:
        if not confirm_strict(
            f"Delete ALL config from {scope} scope ({', '.join(sorted(config_data))})?"
        ):
            print("Delete cancelled.")
            return
        config_data.clear()
        print(themed("success", f"Deleted all config from {scope} scope"))

    if config_data:
        _write_toml_config(config_path, config_data)
    else:
        config_path.unlink()
        print(f"Removed empty config file: {config_path}")


def describe_callback(ctx: typer.Context, param, value: bool):
    if not value or ctx.resilient_parsing:
        return

    print_describe_options()
    raise typer.Exit()


def run_config(
    key: str | None, value: str | None, scope: str | None, delete: bool
) -> None:
    if delete:
        if value is not None:
            raise ConfigurationError("Cannot specify a value when deleting")
        delete_config(key, scope or "local")
    elif value is not None:
        if key is None:
            raise ConfigurationError("Key is required when setting a value")
        set_config(key, value, scope or "local")
    else:
        get_config(key, scope)
