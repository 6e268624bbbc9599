# -*- coding: utf-8 -*-
"""
cmd line interface for depth computation, outlier detection and the simulation bench

> tvdepth detect curves.csv --out report.json
> tvdepth simulate --model 4 --seed 1 | tvdepth detect -
> tvdepth bench --models 1-7 --reps 200

Exit codes: 0 success, 1 usage error, 2 data or parse error, 3 numerical error.
"""
from __future__ import annotations

import sys
from typing import Optional
from typing import Sequence

import click

from tvdepth import actions
from tvdepth import error_codes
from tvdepth.exc import DataError
from tvdepth.exc import NumericalError
from tvdepth.version import __version__


class TVDepthClickError(click.ClickException):
    def __init__(self, message: str, exit_code: int) -> None:
        super().__init__(message)
        self.exit_code = exit_code


def _translate(e: Exception) -> click.ClickException:
    if isinstance(e, NumericalError):
        return TVDepthClickError(str(e), error_codes.NUMERICAL_ERROR)
    elif isinstance(e, OSError) and e.filename:
        return TVDepthClickError(f"{e.strerror or e}: {e.filename}", error_codes.DATA_ERROR)
    return TVDepthClickError(str(e), error_codes.DATA_ERROR)


class TVDepthGroup(click.Group):
    """
    Maps library exceptions onto the exit codes in tvdepth.error_codes.
    """

    def make_context(self, *args, **kwargs):  # type: ignore
        try:
            return super().make_context(*args, **kwargs)
        except click.UsageError as e:
            e.exit_code = error_codes.USAGE_ERROR
            raise e

    def invoke(self, ctx: click.Context):  # type: ignore
        try:
            return super().invoke(ctx)
        except click.UsageError as e:
            e.exit_code = error_codes.USAGE_ERROR
            raise e
        except (DataError, NumericalError, OSError) as e:
            raise _translate(e) from e


@click.group(cls=TVDepthGroup, invoke_without_command=True)
@click.pass_context
def tvd(ctx: click.Context) -> None:
    """
    Total variation depth, shape variation and outlier detection for functional data.

    Configuration: ~/.tvdepth/config.ini, or the file named by TVDEPTH_CONFIG.
    """
    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@tvd.command(name="version", short_help="print the tvdepth version")
@click.option("--verbose", "-v", is_flag=True, help="show library versions too")
def version(verbose: bool) -> None:
    click.echo(__version__)
    if verbose:
        import platform

        import msgspec
        import numpy
        import scipy

        click.echo(f"Python:          {platform.python_version()}")
        click.echo(f"numpy:           {numpy.__version__}")
        click.echo(f"scipy:           {scipy.__version__}")
        click.echo(f"msgspec:         {msgspec.__version__}")


tvd.add_command(actions.depth.click_depth)
tvd.add_command(actions.detect.click_detect)
tvd.add_command(actions.simulate.click_simulate)
tvd.add_command(actions.bench.click_bench)
tvd.add_command(actions.consistency.click_consistency)


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        tvd.main(args=list(argv) if argv is not None else None, prog_name="tvdepth")
    except SystemExit as e:
        if e.code is None:
            return error_codes.SUCCESS
        return e.code if isinstance(e.code, int) else error_codes.USAGE_ERROR
    return error_codes.SUCCESS


def main() -> None:
    sys.exit(cli_main())
