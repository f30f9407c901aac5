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

import concurrent.futures
import dataclasses
import functools
import itertools
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.congruence import congruent
from congruent_partitions.errors import ComparisonError, PreconditionError, StatsUndefinedError
from congruent_partitions.geometry import (
    Point,
    Polygon,
    Scalar,
    area,
    contains,
    intersection_area,
    is_convex,
    is_zero,
    normalize,
    point_on_boundary,
    same_point,
    strictly_inside_segment,
)


@dataclasses.dataclass(frozen=True)
class Partition:
    """A region P together with N candidate tiles

    Parameters
    ----------
    region : Polygon
        The polygon being partitioned
    tiles : Tuple[Polygon, ...]
        The tiles; an empty tuple describes the trivial layout that covers nothing
    mode : CongruenceMode
        Congruence mode used when checking the tiles against each other
    eps : float
        0.0 for exact rational verification, otherwise the absolute tolerance of approximate mode
    """

    region: Polygon
    tiles: Tuple[Polygon, ...]
    mode: CongruenceMode = CongruenceMode()
    eps: float = 0.0

    @property
    def n(self) -> int:
        return len(self.tiles)


class VerificationReport(NamedTuple):
    mutually_congruent: bool
    all_contained: bool
    overlap_area: Scalar
    leftover_area: Scalar
    leftover_fraction: Scalar
    perfect: bool
    tiles_convex: bool

    @property
    def valid(self) -> bool:
        """Congruent, contained and interior-disjoint; says nothing about leftover"""
        return self.mutually_congruent and self.all_contained and is_zero(self.overlap_area)


class LayoutStats(NamedTuple):
    p: int
    n: int
    k: int
    r: int
    m: int
    edge_to_edge: bool


def _overlap(pair: Tuple[Polygon, Polygon], eps: float) -> Scalar:
    return intersection_area(pair[0], pair[1], eps)


def make_partition(
    region: Polygon, tiles: Iterable[Polygon], mode: CongruenceMode = CongruenceMode(), eps: float = 0.0
) -> Partition:
    """Build a partition from possibly unnormalized polygons"""
    return Partition(normalize(region, eps), tuple(normalize(t, eps) for t in tiles), mode, eps)


def verify(part: Partition, max_workers: Optional[int] = None) -> VerificationReport:
    """Check a partition and measure its leftover area exactly

    Parameters
    ----------
    part : Partition
        The partition to check
    max_workers : Optional[int], optional
        If greater than 1, pairwise tile overlaps are computed on a thread pool. Results are
        aggregated in pair order so the report does not depend on scheduling, by default None

    Returns
    -------
    VerificationReport
        Congruence, containment, overlap, leftover and classification of the partition
    """
    eps = part.eps
    region_area = area(part.region, eps)
    tiles = part.tiles
    tile_areas = [area(t, eps) for t in tiles]

    mutually_congruent = all(congruent(tiles[0], t, part.mode, eps) for t in tiles[1:])
    contained = [contains(part.region, t, eps) for t in tiles]
    all_contained = all(contained)

    pairs = list(itertools.combinations(tiles, 2))
    if max_workers and max_workers > 1 and len(pairs) > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
            overlaps = list(executor.map(functools.partial(_overlap, eps=eps), pairs))
    else:
        overlaps = [_overlap(pair, eps) for pair in pairs]
    overlap_area: Scalar = sum(overlaps, 0 * region_area)
    if is_zero(overlap_area, eps):
        overlap_area = 0 * region_area

    if all_contained and is_zero(overlap_area, eps):
        leftover = region_area - sum(tile_areas, 0 * region_area)
    else:
        # union coverage estimated by inclusion-exclusion truncated at pairs
        covered = sum((intersection_area(part.region, t, eps) for t in tiles), 0 * region_area) - overlap_area
        leftover = min(max(region_area - covered, 0 * region_area), region_area)
        LOGGER.warning(
            "Partition is not valid (contained=%s, overlap=%s); leftover is an estimate", all_contained, overlap_area
        )
    if is_zero(leftover, eps):
        leftover = 0 * region_area

    valid = mutually_congruent and all_contained and is_zero(overlap_area, eps)
    report = VerificationReport(
        mutually_congruent=mutually_congruent,
        all_contained=all_contained,
        overlap_area=overlap_area,
        leftover_area=leftover,
        leftover_fraction=leftover / region_area,
        perfect=valid and len(tiles) > 0 and is_zero(leftover, eps),
        tiles_convex=all(is_convex(t, eps) for t in tiles),
    )
    LOGGER.debug("Verified %s tiles: %s", len(tiles), report)
    return report


def _distinct_points(points: Iterable[Point], eps: float) -> List[Point]:
    distinct: List[Point] = []
    for p in points:
        if eps:
            if not any(same_point(p, q, eps) for q in distinct):
                distinct.append(p)
        elif p not in distinct:
            distinct.append(p)
    return distinct


def layout_stats(part: Partition) -> LayoutStats:
    """Counts used by the tile-complexity relations, for a perfect partition

    Every distinct tile vertex is classified as a vertex of P, a boundary vertex (on the
    boundary of P but not one of its vertices, counted in ``r``) or an interior vertex (``m``).

    Raises
    ------
    PreconditionError
        If the partition is not perfect
    StatsUndefinedError
        If the tiles do not all have the same number of vertices
    """
    ks = {len(t) for t in part.tiles}
    if len(ks) > 1:
        raise StatsUndefinedError(f"Tiles have differing vertex counts: {sorted(ks)}")
    if not verify(part).perfect:
        raise PreconditionError("Layout statistics are defined only for perfect partitions")
    eps = part.eps
    region = part.region

    vertices = _distinct_points((v for t in part.tiles for v in t.vertices), eps)
    r = m = 0
    for v in vertices:
        if any(same_point(v, corner, eps) for corner in region.vertices):
            continue
        if point_on_boundary(region, v, eps):
            r += 1
        else:
            m += 1

    edge_to_edge = not any(
        strictly_inside_segment(a, b, v, eps) for v in vertices for t in part.tiles for a, b in t.edges()
    )
    if not edge_to_edge:
        LOGGER.warning("Layout has a T-junction; the angle-count relations do not apply to it")
    return LayoutStats(p=len(region), n=part.n, k=ks.pop(), r=r, m=m, edge_to_edge=edge_to_edge)


def _same_region(a: Polygon, b: Polygon, eps: float) -> bool:
    return len(a) == len(b) and all(same_point(p, q, eps) for p, q in zip(a.vertices, b.vertices))


def compare_partitions(a: Partition, b: Partition) -> int:
    """Order by leftover area, then by tile edge count: -1 if ``a`` is better, 1 if ``b`` is, else 0

    Raises
    ------
    ComparisonError
        If the partitions cover different regions, have different N, or are not valid
        congruent partitions
    """
    eps = max(a.eps, b.eps)
    if not _same_region(a.region, b.region, eps):
        raise ComparisonError("Partitions are of different regions")
    if a.n != b.n:
        raise ComparisonError(f"Partitions have different tile counts ({a.n} vs {b.n})")
    report_a, report_b = verify(a), verify(b)
    if not (report_a.valid and report_b.valid):
        raise ComparisonError("Only valid congruent partitions can be compared")
    key_a = (report_a.leftover_area, len(a.tiles[0]) if a.tiles else 0)
    key_b = (report_b.leftover_area, len(b.tiles[0]) if b.tiles else 0)
    if key_a < key_b:
        return -1
    return 1 if key_b < key_a else 0


def simplest_optimal(partitions: Sequence[Partition]) -> Partition:
    """The partition with least leftover, and among those the fewest tile edges"""
    if not partitions:
        raise ComparisonError("No partitions to choose from")
    return min(partitions, key=functools.cmp_to_key(compare_partitions))
