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

from fractions import Fraction
from typing import List, Optional

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions._formats import (
    format_partition,
    format_tile,
    parse_grid_file,
    parse_polygon_file,
    parse_tile_file,
)
from congruent_partitions._render import RenderSpec, render
from congruent_partitions.commands._report import CommandReport, read_text, write_text
from congruent_partitions.geometry import Polygon
from congruent_partitions.partition import verify
from congruent_partitions.search import (
    SearchResult,
    best_partial,
    lift_to_partition,
    perfect_tiling,
    search_auto,
)


def _describe(report: CommandReport, result: SearchResult) -> None:
    for index, placement in enumerate(result.placements):
        cells = " ".join(f"({c},{r})" for c, r in sorted(placement.cells, key=lambda cell: (cell[1], cell[0])))
        report.lines.append(f"tile {index}: symmetry {placement.symmetry} at {placement.offset}: {cells}")
    report.lines.append(f"covered {result.covered_cells} cell(s), leftover {result.leftover_area}")
    report.add("placements", result.n)
    report.add("covered", result.covered_cells)
    report.add("leftover", result.leftover_area)


def _lift(
    report: CommandReport,
    result: SearchResult,
    region_poly: Polygon,
    cell_size: Fraction,
    mode: CongruenceMode,
    output: Optional[str],
) -> None:
    part = lift_to_partition(region_poly, result, cell_size, mode)
    checked = verify(part)
    report.lines.append(
        f"lifted partition: leftover {checked.leftover_area} ({checked.leftover_fraction} of the region)"
    )
    report.add("lifted_valid", checked.valid)
    report.add("lifted_leftover", checked.leftover_area)
    report.add("lifted_fraction", checked.leftover_fraction)
    report.add("lifted_perfect", checked.perfect)
    if output:
        write_text(output, format_partition(part))
        report.lines.append(f"wrote {output}")


def search_tile(
    region_path: str,
    tile_path: str,
    n: int,
    mode: CongruenceMode,
    partial: bool = False,
    lift_path: Optional[str] = None,
    cell_size: Fraction = Fraction(1),
    output: Optional[str] = None,
    render_spec: Optional[RenderSpec] = None,
) -> CommandReport:
    region = parse_grid_file(read_text(region_path))
    tile = parse_tile_file(read_text(tile_path))
    if partial:
        result: Optional[SearchResult] = best_partial(region, tile, n, mode)
    else:
        result = perfect_tiling(region, tile, n, mode)
    if result is None:
        report = CommandReport(False, [f"no tiling of the region by {n} cop(ies) of the tile"])
        report.add("found", False)
        return report
    found = result.covered_cells == min(n * len(tile), len(region.cells))
    headline = "exact cover found" if not partial else f"best coverage with {n} tile(s)"
    report = CommandReport(found, [headline])
    report.add("found", found)
    _describe(report, result)
    region_poly = parse_polygon_file(read_text(lift_path)) if lift_path else None
    if region_poly is not None:
        _lift(report, result, region_poly, cell_size, mode, output)
    if render_spec is not None:
        render(result, render_spec, region_poly, cell_size)
    LOGGER.info("Search finished: covered=%s leftover=%s", result.covered_cells, result.leftover_area)
    return report


def search_auto_command(
    region_path: str, n: int, mode: CongruenceMode, max_workers: Optional[int] = None
) -> CommandReport:
    region = parse_grid_file(read_text(region_path))
    result = search_auto(region, n, mode, max_workers=max_workers)
    if result is None:
        report = CommandReport(False, [f"no tile of {len(region.cells) // n} cells tiles the region {n} times"])
        report.add("found", False)
        return report
    lines: List[str] = ["best tile:"] + format_tile(result.tile).splitlines()[1:]
    report = CommandReport(True, lines)
    report.add("found", True)
    report.add("tile_cells", len(result.tile))
    _describe(report, result)
    return report
