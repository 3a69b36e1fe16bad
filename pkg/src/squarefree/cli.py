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

import sys
from pathlib import Path
from typing import Literal

import typer
from colorama import init

from squarefree.commands.config import describe_callback
from squarefree.constants import APP_NAME
from squarefree.core.config.config_loader import ConfigLoader
from squarefree.core.exceptions import handle_squarefree_exception
from squarefree.core.logging.logging import setup_logger
from squarefree.core.logging.progress_manager import ProgressBarManager
from squarefree.core.ui.theme import set_theme
from squarefree.runtimeutil import (
    ensure_utf8_output,
    get_log_dir_callback,
    setup_signal_handlers,
    version_callback,
)

# a broken config must not stop `sqf config` from inspecting or fixing it
config_override_command = "config"

init(autoreset=True)

app = typer.Typer(
    help=f"{APP_NAME}: Invariants of squarefree modules from their presentation matrices",
    pretty_exceptions_show_locals=False,
    pretty_exceptions_enable=False,
    add_completion=False,
)

MATRIX_ARGUMENT_HELP = "Path to a matrix file (see 'sqf gen' for the format)."
ORDER_HELP = (
    "Row order for the position-over-term order, highest first, e.g. 2,1 "
    "makes v_2 > v_1. Defaults to the input order with the last row highest."
)


def _silent(ctx: typer.Context) -> bool:
    return ctx.obj.config.silent


@app.command(name="check")
def main_check(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
    verify: bool = typer.Option(
        False,
        "--verify",
        help="Check squarefreeness, the direct-sum decomposition and the uniform-rank rules over {0,1,2}^n.",
    ),
) -> None:
    """Check whether a matrix is multigraded, squarefree and of uniform rank.

    Examples:
        # Grading solution of a matrix
        sqf check example.mat

        # Also verify squarefreeness directly from the presentation
        sqf check example.mat --verify
    """
    from squarefree.commands.check import run_check

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Checking grading", silent=_silent(ctx)),
    ):
        run_check(ctx.obj, path, order, verify)


@app.command(name="ideals")
def main_ideals(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
) -> None:
    """Show the ideals I_1..I_s of the initial module with their facets.

    Examples:
        sqf ideals example.mat

        # Reverse the order of the rows
        sqf ideals example.mat --order 1,2
    """
    from squarefree.commands.ideals import run_ideals

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Initial ideals", silent=_silent(ctx)),
    ):
        run_ideals(ctx.obj, path, order)


@app.command(name="basis")
def main_basis(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    degree: str = typer.Option(..., "--degree", "-d", help="Degree as comma-separated integers."),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
) -> None:
    """List the standard k-basis of M in one degree.

    Examples:
        sqf basis example.mat --degree 1,1,1,1
    """
    from squarefree.commands.basis import run_basis

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description=f"Basis at ({degree})", silent=_silent(ctx)),
    ):
        run_basis(ctx.obj, path, degree, order)


@app.command(name="reduce")
def main_reduce(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    row: int = typer.Option(..., "--row", "-r", help="Input row i of x^degree v_i."),
    degree: str = typer.Option(
        ..., "--degree", "-d", help="Exponent as comma-separated nonnegative integers."
    ),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
) -> None:
    """Rewrite x^degree v_row in terms of lower standard basis elements.

    Examples:
        # r_{2,1,(0,1,0,1)} = -1
        sqf reduce example.mat --row 2 --degree 0,1,0,1
    """
    from squarefree.commands.reduce import run_reduce

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description=f"Reducing v{row}", silent=_silent(ctx)),
    ):
        run_reduce(ctx.obj, path, row, degree, order)


@app.command(name="ann")
def main_ann(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
    verify: bool = typer.Option(
        False, "--verify", help="Compare with the membership sweep and I_1 ∩ ... ∩ I_s."
    ),
) -> None:
    """Compute the annihilator of M as a squarefree monomial ideal.

    Examples:
        sqf ann example.mat --verify
    """
    from squarefree.commands.ann import run_ann

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Annihilator", silent=_silent(ctx)),
    ):
        run_ann(ctx.obj, path, order, verify)


@app.command(name="dim")
def main_dim(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
) -> None:
    """Compute the Krull dimension of M (-1 for the zero module).

    Examples:
        sqf dim example.mat
    """
    from squarefree.commands.dim import run_dim

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Dimension", silent=_silent(ctx)),
    ):
        run_dim(ctx.obj, path, order)


@app.command(name="betti")
def main_betti(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    degree: str | None = typer.Option(
        None, "--degree", "-d", help="Only this degree; defaults to every degree in {0,1}^n."
    ),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
    verify: bool = typer.Option(False, "--verify", help="Compare with the Koszul complex."),
) -> None:
    """Compute multigraded Betti numbers.

    Examples:
        # b_1 at (1,0,1,1)
        sqf betti example.mat --degree 1,0,1,1

        # Whole table, checked against the Koszul complex
        sqf --format json betti example.mat --verify
    """
    from squarefree.commands.betti import run_betti

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Betti numbers", silent=_silent(ctx)),
    ):
        run_betti(ctx.obj, path, degree, order, verify)


@app.command(name="localcohom")
def main_localcohom(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    degree: str | None = typer.Option(
        None, "--degree", "-d", help="Only this degree (negative coordinates allowed)."
    ),
    patterns: bool = typer.Option(
        False,
        "--patterns",
        help="Sweep all 3^n sign patterns (the default when --degree is not given).",
    ),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
    verify: bool = typer.Option(False, "--verify", help="Compare with the Čech complex."),
) -> None:
    """Compute graded local cohomology with support in the maximal ideal.

    Examples:
        # H^3 at (0,-1,-1,0)
        sqf localcohom example.mat --degree 0,-1,-1,0

        # Every sign pattern, checked against the Čech complex
        sqf localcohom example.mat --patterns --verify
    """
    from squarefree.commands.localcohom import run_localcohom

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Local cohomology", silent=_silent(ctx)),
    ):
        run_localcohom(ctx.obj, path, degree, patterns, order, verify)


@app.command(name="report")
def main_report(
    ctx: typer.Context,
    path: str = typer.Argument(..., help=MATRIX_ARGUMENT_HELP),
    order: str | None = typer.Option(None, "--order", help=ORDER_HELP),
    verify: bool = typer.Option(False, "--verify", help="Run every oracle comparison."),
) -> None:
    """Compute every invariant in one report.

    Examples:
        sqf report example.mat

        sqf --format json report example.mat --verify > report.json
    """
    from squarefree.commands.report import run_report

    with (
        handle_squarefree_exception(),
        ProgressBarManager.set_pbar(description="Full report", silent=_silent(ctx)),
    ):
        run_report(ctx.obj, path, order, verify)


@app.command(name="gen")
def main_gen(
    ctx: typer.Context,
    n: int = typer.Option(..., "--n", help="Number of variables."),
    s: int = typer.Option(..., "--s", help="Number of rows."),
    l: int = typer.Option(..., "--l", help="Number of columns (at least s)."),
    seed: int = typer.Option(0, "--seed", help="Random seed; equal seeds give equal files."),
    output: str | None = typer.Option(
        None, "--output", "-o", help="Write to this file instead of stdout."
    ),
) -> None:
    """Generate a random squarefree matrix of uniform rank.

    The file format is line based, with '#' starting a comment:

        n 4
        vars x y z w
        size 2 2
        entry 1 1 1    1 1 0 0
        entry 2 2 2    0 0 1 1

    Examples:
        sqf gen --n 4 --s 2 --l 3 --seed 7 -o random.mat
    """
    from squarefree.commands.gen import run_gen

    with handle_squarefree_exception():
        run_gen(ctx.obj, n, s, l, seed, output)


@app.command(name="config")
def main_config(
    ctx: typer.Context,
    describe: bool = typer.Option(
        False,
        "--describe",
        callback=describe_callback,
        is_eager=True,
        help="Describe available configuration options and exit.",
    ),
    key: str | None = typer.Argument(None, help="Configuration key to get or set."),
    value: str | None = typer.Argument(
        None, help="Value to set (omit to get current value)."
    ),
    scope: Literal["local", "global", "env"] = typer.Option(
        None,
        "--scope",
        help="Select which scope to modify. Defaults to local for setting/deleting, all for getting.",
    ),
    delete: bool = typer.Option(
        False,
        "--delete",
        help="Delete configuration. Deletes all config in scope if no key specified, or specific key if provided.",
    ),
) -> None:
    """Manage global and local squarefree configurations.

    Priority order: program arguments > custom config > local config > environment variables > global config

    Examples:
        # Show all configuration
        sqf config

        # Always print JSON reports in this directory
        sqf config output_format json

        # Allow sweeps up to n = 20 everywhere
        sqf config max_sweep_n 20 --scope global

        # Delete a key from local config
        sqf config output_format --delete
    """
    from squarefree.commands.config import run_config

    with handle_squarefree_exception():
        run_config(key, value, scope, delete)


def load_global_config(custom_config_path: str | None, **input_args):
    # input args are the runtime overrides
    from squarefree.context import GlobalConfig

    config_args = {key: item for key, item in input_args.items() if item is not None}

    return ConfigLoader.get_full_config(
        GlobalConfig,
        config_args,
        custom_config_path=Path(custom_config_path)
        if custom_config_path is not None
        else None,
    )


def create_global_callback():
    """Build the main callback with one option per GlobalConfig field."""
    from squarefree.context import GlobalConfig, GlobalContext

    cli_params = GlobalConfig.get_cli_params()

    def callback(
        ctx: typer.Context,
        version: bool = typer.Option(
            False,
            "--version",
            "-V",
            callback=version_callback,
            help="Show version and exit",
        ),
        log_path: bool = typer.Option(
            False,
            "--log-dir",
            "-LD",
            callback=get_log_dir_callback,
            help="Show log path (where logs for squarefree live) and exit",
        ),
        custom_config: str | None = typer.Option(
            None,
            "--custom-config",
            help="Path to a custom config file",
        ),
        **kwargs,  # GlobalConfig params injected here
    ) -> None:
        """Global setup callback.

        Initialize global context/config used by commands
        """
        with handle_squarefree_exception():
            if ctx.invoked_subcommand is None:
                print(ctx.get_help())
                raise typer.Exit()

            # skip --help in subcommands
            if any(arg in ctx.help_option_names for arg in sys.argv):
                return

            if ctx.invoked_subcommand == config_override_command:
                return

            config, used_config_sources, _ = load_global_config(custom_config, **kwargs)

            setup_logger(
                ctx.invoked_subcommand,
                debug=config.verbose,
                silent=config.silent,
                no_log_files=config.no_log_files,
            )
            set_theme(config.console_theme)
            setup_signal_handlers()

            ctx.obj = GlobalContext(config=config, used_sources=set(used_config_sources))

    import inspect

    sig = inspect.signature(callback)
    params = [p for p in sig.parameters.values() if p.name != "kwargs"]
    for param_name, (param_type, param_default) in cli_params.items():
        params.append(
            inspect.Parameter(
                param_name,
                inspect.Parameter.KEYWORD_ONLY,
                default=param_default,
                annotation=param_type,
            )
        )

    callback.__signature__ = sig.replace(parameters=params)
    return callback


main = create_global_callback()
app.callback(invoke_without_command=True)(main)


def run_app():
    """Run the application with global exception handling."""
    ensure_utf8_output()
    app(prog_name="sqf")


if __name__ == "__main__":
    run_app()
