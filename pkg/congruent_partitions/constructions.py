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

"""Constructive perfect partitions: quartered and subdivided triangles, strips, tile-sets"""

import dataclasses
import math
from typing import List, NamedTuple, Optional, Tuple

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.congruence import congruent
from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry import Point, Polygon, Scalar, is_zero, normalize, polygon, triangulate
from congruent_partitions.partition import Partition, verify


@dataclasses.dataclass(frozen=True)
class TileSetPartition:
    """A region cut into N identical sets of pieces

    Parameters
    ----------
    region : Polygon
        The partitioned polygon
    sets : Tuple[Tuple[Polygon, ...], ...]
        The N tile-sets. Piece ``j`` of every set is congruent to piece ``j`` of every other set.
    mode : CongruenceMode
        Congruence mode for the per-index check
    eps : float
        0.0 for exact verification, otherwise the approximate-mode tolerance
    """

    region: Polygon
    sets: Tuple[Tuple[Polygon, ...], ...]
    mode: CongruenceMode = CongruenceMode()
    eps: float = 0.0

    def __post_init__(self) -> None:
        if len({len(s) for s in self.sets}) > 1:
            raise ValidationError("All tile-sets must hold the same number of pieces")

    @property
    def pieces(self) -> Tuple[Polygon, ...]:
        return tuple(piece for tile_set in self.sets for piece in tile_set)


class TileSetReport(NamedTuple):
    per_index_congruent: bool
    all_contained: bool
    overlap_area: Scalar
    leftover_area: Scalar
    leftover_fraction: Scalar
    perfect: bool


def triangle_corners(tri: Polygon, eps: float = 0.0) -> Tuple[Point, Point, Point]:
    """Counterclockwise corners of a triangle, rejecting anything else"""
    normalized = normalize(tri, eps)
    if len(normalized) != 3:
        raise ValidationError(f"Expected a triangle, got a polygon with {len(normalized)} vertices")
    a, b, c = normalized.vertices
    return a, b, c


def _lattice(a: Point, b: Point, c: Point, s: int, i: int, j: int) -> Point:
    return Point(a.x + (b.x - a.x) * i / s + (c.x - a.x) * j / s, a.y + (b.y - a.y) * i / s + (c.y - a.y) * j / s)


def subdivide_triangle(tri: Polygon, s: int, eps: float = 0.0) -> List[Polygon]:
    """Cut a triangle into s² congruent copies by lines parallel to its sides

    Pieces are listed row by row from the first edge; in each row every upward triangle is
    followed by its downward neighbour. Downward pieces are the upward ones turned by π.
    """
    if s < 1:
        raise ValidationError(f"Subdivision order must be at least 1, got {s}")
    a, b, c = triangle_corners(tri, eps)
    if s == 1:
        return [normalize(tri, eps)]

    def at(i: int, j: int) -> Point:
        return _lattice(a, b, c, s, i, j)

    pieces: List[Polygon] = []
    for j in range(s):
        for i in range(s - j):
            pieces.append(normalize(Polygon((at(i, j), at(i + 1, j), at(i, j + 1))), eps))
            if i + j <= s - 2:
                pieces.append(normalize(Polygon((at(i + 1, j), at(i + 1, j + 1), at(i, j + 1))), eps))
    return pieces


def quarter_triangle(tri: Polygon, mode: CongruenceMode = CongruenceMode(), eps: float = 0.0) -> Partition:
    """Three corner triangles plus the medial triangle"""
    region = normalize(tri, eps)
    return Partition(region, tuple(subdivide_triangle(region, 2, eps)), mode, eps)


def strips(rect: Polygon, n: int, mode: CongruenceMode = CongruenceMode(), eps: float = 0.0) -> Partition:
    """Split an axis-aligned rectangle into n congruent vertical strips"""
    if n < 1:
        raise ValidationError(f"Strip count must be at least 1, got {n}")
    region = normalize(rect, eps)
    vs = region.vertices
    if len(vs) != 4 or not (
        vs[0].y == vs[1].y and vs[1].x == vs[2].x and vs[2].y == vs[3].y and vs[3].x == vs[0].x
    ):
        raise ValidationError("strips needs an axis-aligned rectangle")
    x0, y0, x1, y1 = vs[0].x, vs[0].y, vs[2].x, vs[2].y
    width = (x1 - x0) / n
    tiles = tuple(
        Polygon(
            (
                Point(x0 + width * i, y0),
                Point(x0 + width * (i + 1), y0),
                Point(x0 + width * (i + 1), y1),
                Point(x0 + width * i, y1),
            )
        )
        for i in range(n)
    )
    return Partition(region, tiles, mode, eps)


def square_tile_sets(
    poly: Polygon, s: int, mode: CongruenceMode = CongruenceMode(), eps: float = 0.0
) -> TileSetPartition:
    """Partition any polygon into s² identical tile-sets of m - 2 triangles each

    Parameters
    ----------
    poly : Polygon
        The region, with m vertices
    s : int
        Subdivision order; N = s²
    mode : CongruenceMode, optional
        Mode recorded for the per-index congruence check, reflections allowed by default
    eps : float, optional
        Tolerance, by default 0.0 (exact)

    Returns
    -------
    TileSetPartition
        Set ``t`` receives sub-triangle ``t`` (in subdivision order) of every triangle
    """
    region = normalize(poly, eps)
    subdivided = [subdivide_triangle(t, s, eps) for t in triangulate(region, eps)]
    LOGGER.debug("Triangulated %s-gon into %s triangles for %s tile-sets", len(region), len(subdivided), s * s)
    sets = tuple(tuple(pieces[t] for pieces in subdivided) for t in range(s * s))
    return TileSetPartition(region, sets, mode, eps)


def verify_tile_sets(tsp: TileSetPartition, max_workers: Optional[int] = None) -> TileSetReport:
    """Check per-index congruence, containment and overlap of a tile-set partition"""
    per_index = all(
        congruent(tsp.sets[0][j], other[j], tsp.mode, tsp.eps) for other in tsp.sets[1:] for j in range(len(other))
    )
    report = verify(Partition(tsp.region, tsp.pieces, tsp.mode, tsp.eps), max_workers=max_workers)
    return TileSetReport(
        per_index_congruent=per_index,
        all_contained=report.all_contained,
        overlap_area=report.overlap_area,
        leftover_area=report.leftover_area,
        leftover_fraction=report.leftover_fraction,
        perfect=per_index
        and report.all_contained
        and is_zero(report.leftover_area, tsp.eps)
        and is_zero(report.overlap_area, tsp.eps),
    )


def equilateral_three_quads(eps: float = 1e-9) -> Partition:
    """Unit equilateral triangle cut from its centroid to the edge midpoints (approximate mode)"""
    h = math.sqrt(3) / 2
    a, b, c = (0.0, 0.0), (1.0, 0.0), (0.5, h)
    g = (0.5, h / 3)
    mid_ab, mid_bc, mid_ca = (0.5, 0.0), (0.75, h / 2), (0.25, h / 2)
    region = polygon(a, b, c, exact=False, eps=eps)
    tiles = (
        polygon(a, mid_ab, g, mid_ca, exact=False, eps=eps),
        polygon(b, mid_bc, g, mid_ab, exact=False, eps=eps),
        polygon(c, mid_ca, g, mid_bc, exact=False, eps=eps),
    )
    return Partition(region, tiles, CongruenceMode(), eps)
