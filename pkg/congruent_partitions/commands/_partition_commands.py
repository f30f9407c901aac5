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

from typing import Optional

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions._formats import (
    format_partition,
    format_tile_sets,
    parse_partition_file,
    parse_polygon_file,
)
from congruent_partitions._render import RenderSpec, render
from congruent_partitions.bounds import check_relations
from congruent_partitions.commands._report import CommandReport, read_text, write_text
from congruent_partitions.congruence import congruent
from congruent_partitions.constructions import (
    equilateral_three_quads,
    quarter_triangle,
    square_tile_sets,
    strips,
    verify_tile_sets,
)
from congruent_partitions.geometry import area
from congruent_partitions.partition import Partition, VerificationReport, layout_stats, verify


def congruent_polygons(path_a: str, path_b: str, mode: CongruenceMode, eps: float = 0.0) -> CommandReport:
    exact = not eps
    a = parse_polygon_file(read_text(path_a), exact=exact, eps=eps)
    b = parse_polygon_file(read_text(path_b), exact=exact, eps=eps)
    verdict = congruent(a, b, mode, eps)
    motions = "translation, rotation and reflection" if mode.allow_reflection else "translation and rotation"
    report = CommandReport(verdict, [f"{'congruent' if verdict else 'not congruent'} under {motions}"])
    report.add("congruent", verdict)
    report.add("allow_reflection", mode.allow_reflection)
    report.add("vertices_a", len(a))
    report.add("vertices_b", len(b))
    return report


def _describe(report: CommandReport, result: VerificationReport, part: Partition) -> None:
    report.lines += [
        f"region area {area(part.region, part.eps)} with {part.n} tile(s)",
        f"tiles mutually congruent: {'yes' if result.mutually_congruent else 'no'}",
        f"tiles inside region: {'yes' if result.all_contained else 'no'}",
        f"overlap area: {result.overlap_area}",
        f"leftover area: {result.leftover_area} ({result.leftover_fraction} of the region)",
        "perfect congruent partition" if result.perfect else "not a perfect congruent partition",
    ]
    report.add("n", part.n)
    report.add("congruent", result.mutually_congruent)
    report.add("contained", result.all_contained)
    report.add("overlap", result.overlap_area)
    report.add("leftover", result.leftover_area)
    report.add("fraction", result.leftover_fraction)
    report.add("perfect", result.perfect)
    report.add("convex", result.tiles_convex)
    report.add("valid", result.valid)


def verify_partition(
    path: str,
    mode: CongruenceMode,
    eps: float = 0.0,
    max_workers: Optional[int] = None,
    render_spec: Optional[RenderSpec] = None,
) -> CommandReport:
    part = parse_partition_file(read_text(path), mode, exact=not eps, eps=eps)
    result = verify(part, max_workers=max_workers)
    report = CommandReport(result.valid)
    _describe(report, result, part)
    if render_spec is not None:
        render(part, render_spec)
    LOGGER.info("Verified %s: valid=%s perfect=%s", path, result.valid, result.perfect)
    return report


def partition_stats(path: str, mode: CongruenceMode, eps: float = 0.0) -> CommandReport:
    part = parse_partition_file(read_text(path), mode, exact=not eps, eps=eps)
    stats = layout_stats(part)
    relations = check_relations(stats)
    report = CommandReport(
        True,
        [
            f"p={stats.p} region vertices, n={stats.n} tiles of k={stats.k} vertices",
            f"r={stats.r} boundary and m={stats.m} interior layout vertices",
            "edge-to-edge layout" if stats.edge_to_edge else "layout has a T-junction",
        ],
    )
    for key, value in stats._asdict().items():
        report.add(key, value)
    for key, value in relations._asdict().items():
        report.add(key, value)
    return report


def render_partition_file(path: str, spec: RenderSpec, mode: CongruenceMode, eps: float = 0.0) -> CommandReport:
    part = parse_partition_file(read_text(path), mode, exact=not eps, eps=eps)
    render(part, spec)
    report = CommandReport(True, [f"rendered {part.n} tile(s) to {spec.output}"])
    report.add("output", spec.output)
    report.add("tiles", part.n)
    return report


def _constructed(part: Partition, output: str, max_workers: Optional[int]) -> CommandReport:
    write_text(output, format_partition(part))
    result = verify(part, max_workers=max_workers)
    report = CommandReport(result.perfect, [f"wrote {output}"])
    _describe(report, result, part)
    return report


def construct_quarter(
    path: str, output: str, mode: CongruenceMode, max_workers: Optional[int] = None
) -> CommandReport:
    return _constructed(quarter_triangle(parse_polygon_file(read_text(path)), mode), output, max_workers)


def construct_strips(
    path: str, n: int, output: str, mode: CongruenceMode, max_workers: Optional[int] = None
) -> CommandReport:
    return _constructed(strips(parse_polygon_file(read_text(path)), n, mode), output, max_workers)


def construct_eq3(output: str, eps: float, max_workers: Optional[int] = None) -> CommandReport:
    return _constructed(equilateral_three_quads(eps), output, max_workers)


def construct_sets(
    path: str, s: int, output: str, mode: CongruenceMode, max_workers: Optional[int] = None
) -> CommandReport:
    tsp = square_tile_sets(parse_polygon_file(read_text(path)), s, mode)
    write_text(output, format_tile_sets(tsp))
    result = verify_tile_sets(tsp, max_workers=max_workers)
    report = CommandReport(
        result.perfect,
        [
            f"wrote {output}",
            f"{len(tsp.sets)} tile-sets of {len(tsp.sets[0])} piece(s) each",
            f"leftover area: {result.leftover_area}",
        ],
    )
    report.add("sets", len(tsp.sets))
    report.add("pieces_per_set", len(tsp.sets[0]))
    report.add("per_index_congruent", result.per_index_congruent)
    report.add("overlap", result.overlap_area)
    report.add("leftover", result.leftover_area)
    report.add("perfect", result.perfect)
    return report
