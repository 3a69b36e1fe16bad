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
from dataclasses import fields
from pathlib import Path
from typing import TYPE_CHECKING, Any

from squarefree.constants import ENV_APP_PREFIX, GLOBAL_CONFIG_FILE, LOCAL_CONFIG_FILE
from squarefree.core.config.type_constraints import TypeConstraint
from squarefree.core.exceptions import ConfigurationError

if TYPE_CHECKING:
    from squarefree.context import SquarefreeConfig


class ConfigLoader:
    """Loads configuration from every source and merges it into one config model."""

    @staticmethod
    def get_full_config(
        config_model: "type[SquarefreeConfig]",
        input_args: dict,
        local_config_path: Path = LOCAL_CONFIG_FILE,
        env_app_prefix: str = ENV_APP_PREFIX,
        global_config_path: Path = GLOBAL_CONFIG_FILE,
        custom_config_path: Path | None = None,
    ) -> tuple["SquarefreeConfig", set[str], bool]:
        """Merge sources with priority: input args, custom config, local config,
        environment variables, global config.

        Returns the built model, the names of the sources that contributed a
        value, and whether any field fell back to its default.
        """
        source_names = [
            "Input Args",
            "Local Config",
            "Environment Variables",
            "Global Config",
        ]
        sources = [
            input_args,
            ConfigLoader.load_toml(local_config_path),
            ConfigLoader.load_env(env_app_prefix),
            ConfigLoader.load_toml(global_config_path),
        ]

        if custom_config_path is not None:
            if not custom_config_path.exists():
                raise ConfigurationError(f"Custom config not found: {custom_config_path}")
            sources.insert(1, ConfigLoader.load_toml(custom_config_path, strict=True))
            source_names.insert(1, "Custom Config")

        return ConfigLoader.build(config_model, sources, source_names)

    @staticmethod
    def load_toml(path: Path, strict: bool = False) -> dict:
        """Read a TOML file; a missing file is empty and a broken one is empty
        unless ``strict``."""
        from loguru import logger

        if not path.exists():
            return {}

        try:
            with open(path, "rb") as f:
                return tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            if strict:
                raise ConfigurationError(f"Invalid TOML in {path}: {e}")
            logger.warning(f"Ignoring unreadable config file {path}: {e}")
            return {}

    @staticmethod
    def load_env(app_prefix: str) -> dict:
        """Collect ``<PREFIX>KEY`` environment variables (after loading .env) as
        lowercase keys."""
        from dotenv import load_dotenv

        load_dotenv()

        data = {}
        for k, v in os.environ.items():
            if k.lower().startswith(app_prefix.lower()):
                data[k[len(app_prefix) :].lower()] = v
        return data

    @staticmethod
    def build(
        config_model: "type[SquarefreeConfig]",
        sources: list[dict],
        source_names: list[str],
    ) -> tuple["SquarefreeConfig", set[str], bool]:
        from loguru import logger

        remaining_keys = {field.name for field in fields(config_model)}

        final_data = {}
        final_sources = {}

        for source, name in zip(sources, source_names, strict=True):
            if not remaining_keys:
                break

            contributions = source.keys() & remaining_keys
            for key in contributions:
                final_data[key] = source[key]
                final_sources[key] = name
            remaining_keys -= contributions

        coerced_data = {}
        for name, value in final_data.items():
            source_name = final_sources[name]
            try:
                coerced_data[name] = ConfigLoader.coerce_value(
                    value, config_model.constraints.get(name)
                )
            except ConfigurationError as e:
                logger.error(
                    f"Failed to coerce config value for field {name!r} with value {value!r} from source {source_name}: {e}."
                )
                raise ConfigurationError(
                    f"Invalid configuration for field {name!r} from source {source_name}:\n{e}"
                )

        model = config_model(**coerced_data)
        return model, set(final_sources.values()), bool(remaining_keys)

    @staticmethod
    def coerce_value(value: Any, constraint: TypeConstraint | None = None) -> Any:
        """Coerce through the field's constraint; values without one pass through."""
        if constraint:
            return constraint.coerce(value)
        return value
