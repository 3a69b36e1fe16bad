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

from tests.integration.conftest import run_cli


class TestConfigCommand:
    """Test the config command with various scenarios."""

    def test_config_help(self, cli_exe, temp_dir):
        """Test that config --help works."""
        result = run_cli(cli_exe, ["config", "--help"], cwd=temp_dir)
        assert result.returncode == 0
        assert "configuration" in result.stdout.lower()

    def test_config_set_local(self, cli_exe, temp_dir):
        """Test setting a local configuration value."""
        result = run_cli(
            cli_exe, ["config", "output_format", "json", "--scope", "local"], cwd=temp_dir
        )
        assert result.returncode == 0

        config_file = temp_dir / "squarefreeconfig.toml"
        assert config_file.exists()
        assert 'output_format = "json"' in config_file.read_text()

    def test_config_set_env(self, cli_exe, temp_dir):
        """Test getting environment variable instructions."""
        result = run_cli(
            cli_exe, ["config", "max_sweep_n", "20", "--scope", "env"], cwd=temp_dir
        )
        assert result.returncode == 0
        assert "squarefree_max_sweep_n" in result.stdout.lower()
        assert not (temp_dir / "squarefreeconfig.toml").exists()

    def test_config_get_local(self, cli_exe, temp_dir):
        run_cli(cli_exe, ["config", "pattern_check_scale", "3"], cwd=temp_dir)

        result = run_cli(
            cli_exe, ["config", "pattern_check_scale", "--scope", "local"], cwd=temp_dir
        )
        assert result.returncode == 0
        assert "3 (Local Config)" in result.stdout

    def test_config_update_existing(self, cli_exe, temp_dir):
        run_cli(cli_exe, ["config", "console_theme", "ocean"], cwd=temp_dir)
        result = run_cli(cli_exe, ["config", "console_theme", "mono"], cwd=temp_dir)
        assert result.returncode == 0

        content = (temp_dir / "squarefreeconfig.toml").read_text()
        assert "mono" in content
        assert "ocean" not in content

    def test_config_invalid_value(self, cli_exe, temp_dir):
        result = run_cli(cli_exe, ["config", "output_format", "yaml"], cwd=temp_dir)
        assert result.returncode == 1
        assert "invalid value for output_format" in result.stderr.lower()

    def test_config_get_nonexistent(self, cli_exe, temp_dir):
        """Test getting a non-existent configuration key."""
        result = run_cli(cli_exe, ["config", "nonexistent_key"], cwd=temp_dir)
        assert result.returncode == 1
        assert "unknown configuration key" in result.stdout.lower()
        assert "available configuration options" in result.stdout.lower()

    def test_config_describe(self, cli_exe, temp_dir):
        result = run_cli(cli_exe, ["config", "--describe"], cwd=temp_dir)
        assert result.returncode == 0
        assert "max_sweep_n" in result.stdout
        assert "pattern_check_scale" in result.stdout

    def test_config_delete(self, cli_exe, temp_dir):
        run_cli(cli_exe, ["config", "force", "true"], cwd=temp_dir)
        result = run_cli(cli_exe, ["config", "force", "--delete"], cwd=temp_dir)
        assert result.returncode == 0
        assert not (temp_dir / "squarefreeconfig.toml").exists()

    def test_local_config_drives_commands(self, cli_exe, matrix_dir):
        result = run_cli(cli_exe, ["dim", "example.mat"], cwd=matrix_dir)
        assert result.returncode == 0
        assert not result.stdout.lstrip().startswith("{")

        (matrix_dir / "squarefreeconfig.toml").write_text('output_format = "json"\n')
        result = run_cli(cli_exe, ["dim", "example.mat"], cwd=matrix_dir)
        assert result.returncode == 0
        assert result.stdout.lstrip().startswith("{")
