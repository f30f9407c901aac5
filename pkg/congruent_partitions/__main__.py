#  Copyright The congruent-partitions Authors. All Rights Reserved.
#
#    Licensed under the Apache License, Version 2.0 (the "License").
#    You may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

import logging
import sys
from fractions import Fraction
from typing import Any, Callable, List, Optional, TypeVar, cast

import click

from congruent_partitions import LOGGER, commands, resource_path
from congruent_partitions._classes import CongruenceMode, PartitionConfig, load_config
from congruent_partitions._render import RenderSpec
from congruent_partitions.commands import CommandReport
from congruent_partitions.errors import PartitionRuntimeError

DEBUG_LOGGING_FORMAT = "[%(asctime)s][%(filename)-13s:%(lineno)3d] %(message)s"

F = TypeVar("F", bound=Callable[..., Any])


class PartitionCLIError(click.ClickException):
    """Library failure surfaced on the command line with exit code 2"""

    exit_code = 2


def set_log_level(level: int, format: Optional[str] = None) -> None:
    kwargs = {"level": level, "stream": sys.stderr}
    if format:
        kwargs["format"] = format  # type: ignore
    logging.basicConfig(**kwargs)  # type: ignore
    LOGGER.setLevel(level)


def _common(func: F) -> F:
    """``--debug`` and ``--config`` for every command"""
    func = click.option(
        "--config",
        "config_path",
        type=click.Path(exists=True, dir_okay=False),
        default=None,
        help="YAML file overriding the default configuration",
    )(func)
    return click.option(
        "--debug/--no-debug",
        default=False,
        help="Enable detailed logging.",
        show_default=True,
    )(func)


def _settings(debug: bool, config_path: Optional[str]) -> PartitionConfig:
    if debug:
        set_log_level(level=logging.DEBUG, format=DEBUG_LOGGING_FORMAT)
    else:
        set_log_level(level=logging.INFO, format="%(message)s")
    try:
        config = load_config(resource_path("config.yaml"))
        return load_config(config_path, base=config) if config_path else config
    except PartitionRuntimeError as e:
        raise PartitionCLIError(str(e)) from e


def _mode(config: PartitionConfig, no_reflection: bool) -> CongruenceMode:
    return CongruenceMode(allow_reflection=config.allow_reflection and not no_reflection)


def _render_spec(config: PartitionConfig, output: Optional[str], show_leftover: bool = True) -> Optional[RenderSpec]:
    if not output:
        return None
    return RenderSpec(
        output=output,
        scale=config.render_scale,
        palette=tuple(config.palette),
        show_leftover=config.show_leftover and show_leftover,
    )


def _emit(run: Callable[[], CommandReport]) -> None:
    try:
        report = run()
    except (PartitionRuntimeError, OSError) as e:
        LOGGER.debug("Command failed", exc_info=True)
        raise PartitionCLIError(str(e)) from e
    click.echo(report.text(), nl=False)
    click.get_current_context().exit(report.exit_code)


def _rational(value: str) -> Fraction:
    try:
        result = Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise click.BadParameter(f"'{value}' is not a rational number") from e
    if result <= 0:
        raise click.BadParameter("must be positive")
    return result


no_reflection_option = click.option(
    "--no-reflection",
    is_flag=True,
    default=False,
    help="Only translations and rotations make pieces congruent.",
)
approx_option = click.option(
    "--approx",
    "eps",
    type=click.FloatRange(min=0.0, min_open=True),
    default=None,
    help="Read coordinates as floats and compare with this absolute tolerance.",
)


@click.group()
def cli() -> None:
    """Construct, verify, bound and search congruent partitions of polygons"""
    pass


@click.group(name="construct")
def construct() -> None:
    """Write constructed perfect partitions to a file"""
    pass


@click.group(name="bounds")
def bounds() -> None:
    """Counting relations between layout vertex numbers"""
    pass


@click.group(name="search")
def search() -> None:
    """Grid searches for congruent polyomino tilings"""
    pass


################################################################################
#
# Geometry Commands
#
################################################################################
@cli.command(name="congruent")
@click.argument("poly_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("poly_b", type=click.Path(exists=True, dir_okay=False))
@no_reflection_option
@approx_option
@_common
def congruent_cmd(
    poly_a: str, poly_b: str, no_reflection: bool, eps: Optional[float], debug: bool, config_path: Optional[str]
) -> None:
    """Decide whether two polygon files describe congruent polygons"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.congruent_polygons(poly_a, poly_b, _mode(config, no_reflection), eps or 0.0))


@cli.command(name="verify")
@click.argument("partition", type=click.Path(exists=True, dir_okay=False))
@no_reflection_option
@approx_option
@click.option("--render", "render_output", type=click.Path(dir_okay=False), default=None, help="Also write an SVG")
@_common
def verify_cmd(
    partition: str,
    no_reflection: bool,
    eps: Optional[float],
    render_output: Optional[str],
    debug: bool,
    config_path: Optional[str],
) -> None:
    """Check a partition file and report its exact leftover area"""
    config = _settings(debug, config_path)
    _emit(
        lambda: commands.verify_partition(
            partition,
            _mode(config, no_reflection),
            eps or 0.0,
            max_workers=config.max_workers,
            render_spec=_render_spec(config, render_output),
        )
    )


@cli.command(name="stats")
@click.argument("partition", type=click.Path(exists=True, dir_okay=False))
@no_reflection_option
@approx_option
@_common
def stats_cmd(
    partition: str, no_reflection: bool, eps: Optional[float], debug: bool, config_path: Optional[str]
) -> None:
    """Layout vertex counts of a perfect partition, with the counting relations"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.partition_stats(partition, _mode(config, no_reflection), eps or 0.0))


@cli.command(name="render")
@click.argument("partition", type=click.Path(exists=True, dir_okay=False))
@click.option("--output", type=click.Path(dir_okay=False), required=True, help="SVG file to write")
@click.option("--scale", type=click.FloatRange(min=0.0, min_open=True), default=None, help="Pixels per unit")
@click.option("--no-leftover", is_flag=True, default=False, help="Do not hatch the uncovered area.")
@approx_option
@_common
def render_cmd(
    partition: str,
    output: str,
    scale: Optional[float],
    no_leftover: bool,
    eps: Optional[float],
    debug: bool,
    config_path: Optional[str],
) -> None:
    """Draw a partition file as SVG"""
    config = _settings(debug, config_path)
    if scale is not None:
        config.render_scale = scale
    spec = cast(RenderSpec, _render_spec(config, output, show_leftover=not no_leftover))
    _emit(lambda: commands.render_partition_file(partition, spec, config.mode, eps or 0.0))


################################################################################
#
# Construct Commands
#
################################################################################
output_option = click.option(
    "--output", "-o", type=click.Path(dir_okay=False), required=True, help="Partition file to write"
)


@construct.command(name="quarter")
@click.argument("poly", type=click.Path(exists=True, dir_okay=False))
@output_option
@_common
def construct_quarter(poly: str, output: str, debug: bool, config_path: Optional[str]) -> None:
    """Cut a triangle into 4 congruent triangles through its edge midpoints"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.construct_quarter(poly, output, config.mode, config.max_workers))


@construct.command(name="sets")
@click.argument("poly", type=click.Path(exists=True, dir_okay=False))
@click.option("--s", "s", type=click.IntRange(min=1), required=True, help="Subdivision order; N = s * s")
@output_option
@_common
def construct_sets(poly: str, s: int, output: str, debug: bool, config_path: Optional[str]) -> None:
    """Cut any polygon into s * s identical tile-sets of triangles"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.construct_sets(poly, s, output, config.mode, config.max_workers))


@construct.command(name="strips")
@click.argument("poly", type=click.Path(exists=True, dir_okay=False))
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of strips")
@output_option
@_common
def construct_strips(poly: str, n: int, output: str, debug: bool, config_path: Optional[str]) -> None:
    """Cut an axis-aligned rectangle into n congruent vertical strips"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.construct_strips(poly, n, output, config.mode, config.max_workers))


@construct.command(name="eq3")
@output_option
@_common
def construct_eq3(output: str, debug: bool, config_path: Optional[str]) -> None:
    """Cut the unit equilateral triangle into 3 congruent quadrilaterals"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.construct_eq3(output, config.approx_eps, config.max_workers))


################################################################################
#
# Bounds Commands
#
################################################################################
@bounds.command(name="check")
@click.option("--p", "p", type=click.IntRange(min=3), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--k", "k", type=click.IntRange(min=3), required=True)
@click.option("--r", "r", type=click.IntRange(min=0), required=True)
@click.option("--m", "m", type=click.IntRange(min=0), required=True)
@_common
def bounds_check(p: int, n: int, k: int, r: int, m: int, debug: bool, config_path: Optional[str]) -> None:
    """Evaluate the counting relations on one set of layout counts"""
    _settings(debug, config_path)
    _emit(lambda: commands.bounds_check(p, n, k, r, m))


@bounds.command(name="enumerate")
@click.option("--max-p", type=click.IntRange(min=3), required=True)
@click.option("--max-n", type=click.IntRange(min=2), required=True)
@click.option("--max-r", type=click.IntRange(min=0), required=True)
@click.option("--min-alpha", type=click.IntRange(min=1), default=1, show_default=True)
@click.option("--table/--no-table", default=True, show_default=True, help="Print every feasible tuple.")
@_common
def bounds_enumerate(
    max_p: int, max_n: int, max_r: int, min_alpha: int, table: bool, debug: bool, config_path: Optional[str]
) -> None:
    """List every tuple that satisfies the counting relations with k > p"""
    _settings(debug, config_path)
    _emit(lambda: commands.bounds_enumerate(max_p, max_n, max_r, min_alpha, table))


################################################################################
#
# Search Commands
#
################################################################################
@search.command(name="tile")
@click.option("--region", type=click.Path(exists=True, dir_okay=False), required=True, help="Grid file")
@click.option("--tile", type=click.Path(exists=True, dir_okay=False), required=True, help="Tile grid file")
@click.option("--n", "n", type=click.IntRange(min=0), required=True, help="Number of tiles")
@click.option("--best-partial", is_flag=True, default=False, help="Maximize coverage instead of exact cover.")
@click.option("--lift", "lift_path", type=click.Path(exists=True, dir_okay=False), default=None, help="Region polygon")
@click.option("--cell-size", type=str, default=None, help="Cell edge length used when lifting, e.g. 1/2")
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the lifted partition here")
@click.option("--render", "render_output", type=click.Path(dir_okay=False), default=None, help="Also write an SVG")
@no_reflection_option
@_common
def search_tile(
    region: str,
    tile: str,
    n: int,
    best_partial: bool,
    lift_path: Optional[str],
    cell_size: Optional[str],
    output: Optional[str],
    render_output: Optional[str],
    no_reflection: bool,
    debug: bool,
    config_path: Optional[str],
) -> None:
    """Place n copies of a polyomino in a grid region"""
    config = _settings(debug, config_path)
    size = _rational(cell_size or config.cell_size)
    _emit(
        lambda: commands.search_tile(
            region,
            tile,
            n,
            _mode(config, no_reflection),
            partial=best_partial,
            lift_path=lift_path,
            cell_size=size,
            output=output,
            render_spec=_render_spec(config, render_output),
        )
    )


@search.command(name="auto")
@click.option("--region", type=click.Path(exists=True, dir_okay=False), required=True, help="Grid file")
@click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of tiles")
@no_reflection_option
@_common
def search_auto(region: str, n: int, no_reflection: bool, debug: bool, config_path: Optional[str]) -> None:
    """Try every polyomino of |cells| // n cells"""
    config = _settings(debug, config_path)
    _emit(lambda: commands.search_auto_command(region, n, _mode(config, no_reflection), config.max_workers))


cli.add_command(construct)
cli.add_command(bounds)
cli.add_command(search)


def dispatch(argv: Optional[List[str]] = None) -> int:
    """Run one command line and return its exit code

    0 is an affirmative answer, 1 a negative one (not congruent, not valid, no tiling) and 2 a
    usage, parse or input error.
    """
    try:
        result = cli.main(args=argv, prog_name="congruent-partitions", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


def main() -> int:
    return dispatch()


if __name__ == "__main__":
    sys.exit(main())
