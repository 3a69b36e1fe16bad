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

from dataclasses import fields

from squarefree.constants import DEFAULT_MAX_SWEEP_N
from squarefree.context import GlobalConfig, GlobalContext

# -----------------------------------------------------------------------------
# GlobalConfig Tests
# -----------------------------------------------------------------------------


def test_global_config_defaults():
    config = GlobalConfig()
    assert config.output_format == "text"
    assert config.verbose is False
    assert config.silent is False
    assert config.force is False
    assert config.max_sweep_n == DEFAULT_MAX_SWEEP_N
    assert config.pattern_check_scale == 2
    assert config.console_theme == "classic"


def test_every_field_is_described_and_constrained():
    for config_field in fields(GlobalConfig):
        assert config_field.name in GlobalConfig.descriptions
        assert config_field.name in GlobalConfig.constraints
        assert config_field.name in GlobalConfig.arg_options


def test_cli_params_default_to_none():
    params = GlobalConfig.get_cli_params()

    assert set(params) == {f.name for f in fields(GlobalConfig)}
    annotation, option = params["max_sweep_n"]
    assert annotation == int | None
    assert option.default is None
    assert params["output_format"][1].param_decls == ("--format", "-f")


# -----------------------------------------------------------------------------
# GlobalContext Tests
# -----------------------------------------------------------------------------


def test_json_output():
    assert GlobalContext(GlobalConfig(output_format="json")).json_output
    assert not GlobalContext(GlobalConfig()).json_output


def test_sweep_limit():
    assert GlobalContext(GlobalConfig(max_sweep_n=5)).sweep_limit() == 5
    assert GlobalContext(GlobalConfig(max_sweep_n=5, force=True)).sweep_limit() is None
