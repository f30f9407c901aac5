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

import math

import pytest
from conftest import random_polygon, random_triangle

from congruent_partitions import CongruenceMode
from congruent_partitions.bounds import check_relations
from congruent_partitions.congruence import congruent
from congruent_partitions.constructions import (
    TileSetPartition,
    equilateral_three_quads,
    quarter_triangle,
    square_tile_sets,
    strips,
    subdivide_triangle,
    triangle_corners,
    verify_tile_sets,
)
from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry import area, polygon
from congruent_partitions.partition import Partition, layout_stats, verify

NO_REFLECTION = CongruenceMode(allow_reflection=False)


def test_subdivide_order():
    pieces = subdivide_triangle(polygon((0, 0), (2, 0), (0, 2)), 2)
    assert pieces == [
        polygon((0, 0), (1, 0), (0, 1)),
        polygon((1, 0), (1, 1), (0, 1)),
        polygon((1, 0), (2, 0), (1, 1)),
        polygon((0, 1), (1, 1), (0, 2)),
    ]


def test_subdivide_identity_and_errors():
    tri = polygon((0, 0), (3, 1), (1, 4))
    assert subdivide_triangle(tri, 1) == [tri]
    with pytest.raises(ValidationError):
        subdivide_triangle(tri, 0)
    with pytest.raises(ValidationError):
        triangle_corners(polygon((0, 0), (1, 0), (1, 1), (0, 1)))


def test_quarter_triangle_stats():
    part = quarter_triangle(polygon((0, 0), (4, 0), (1, 3)))
    assert verify(part).perfect
    assert tuple(layout_stats(part))[:5] == (3, 4, 3, 3, 0)


def test_quarter_randomized(rng):
    for _ in range(200):
        tri = random_triangle(rng)
        part = quarter_triangle(tri, NO_REFLECTION)
        report = verify(part)
        assert report.perfect, tri
        assert report.tiles_convex


def test_subdivide_randomized(rng):
    for _ in range(200):
        tri = random_triangle(rng)
        s = rng.randint(1, 4)
        pieces = subdivide_triangle(tri, s)
        assert len(pieces) == s * s
        assert all(congruent(pieces[0], p, NO_REFLECTION) for p in pieces)
        assert area(pieces[0]) * s * s == area(tri)
        part = Partition(tri, tuple(pieces), NO_REFLECTION)
        assert verify(part).perfect, tri
        stats = layout_stats(part)
        assert (stats.r, stats.m) == (3 * (s - 1), (s - 1) * (s - 2) // 2)
        relations = check_relations(stats)
        assert relations.ineq1_holds and relations.eq2_holds


@pytest.mark.parametrize("n", range(1, 11))
def test_strips(n):
    part = strips(polygon((0, 0), (5, 0), (5, 2), (0, 2)), n)
    assert verify(part).perfect
    stats = layout_stats(part)
    assert (stats.p, stats.n, stats.k, stats.r, stats.m, stats.edge_to_edge) == (4, n, 4, 2 * (n - 1), 0, True)
    relations = check_relations(stats)
    assert relations.ineq1_holds and relations.eq2_holds and relations.ineq3_holds


def test_strips_rejects():
    with pytest.raises(ValidationError):
        strips(polygon((0, 0), (1, 0), (0, 1)), 2)
    with pytest.raises(ValidationError):
        strips(polygon((0, 0), (3, 4), (-1, 7), (-4, 3)), 2)
    with pytest.raises(ValidationError):
        strips(polygon((0, 0), (1, 0), (1, 1), (0, 1)), 0)


def test_square_tile_sets_hexagon():
    hexagon = polygon((0, 0), (2, 0), (3, 2), (2, 4), (0, 4), (-1, 2))
    tsp = square_tile_sets(hexagon, 2)
    assert len(tsp.sets) == 4
    assert all(len(s) == 4 for s in tsp.sets)
    report = verify_tile_sets(tsp)
    assert report.per_index_congruent and report.all_contained
    assert report.leftover_area == 0 and report.overlap_area == 0
    assert report.perfect


def test_square_tile_sets_concave():
    concave = polygon((0, 0), (4, 0), (4, 4), (2, 1), (0, 4))
    report = verify_tile_sets(square_tile_sets(concave, 3), max_workers=4)
    assert report.perfect


def test_tile_sets_randomized(rng):
    for _ in range(200):
        poly = random_polygon(rng, rng.randint(3, 8))
        s = rng.randint(1, 3)
        tsp = square_tile_sets(poly, s, NO_REFLECTION)
        assert len(tsp.sets) == s * s
        assert all(len(tile_set) == len(poly) - 2 for tile_set in tsp.sets)
        assert sum(area(p) for p in tsp.pieces) == area(poly)
        for tile_set in tsp.sets[1:]:
            assert all(congruent(a, b, NO_REFLECTION) for a, b in zip(tsp.sets[0], tile_set))
        report = verify_tile_sets(tsp)
        assert report.perfect, poly
        assert report.overlap_area == 0


def test_tile_sets_unequal_lengths():
    tri = polygon((0, 0), (1, 0), (0, 1))
    with pytest.raises(ValidationError):
        TileSetPartition(tri, ((tri,), ()))


def test_tile_sets_mismatch_detected():
    square = polygon((0, 0), (2, 0), (2, 2), (0, 2))
    left = polygon((0, 0), (1, 0), (1, 2), (0, 2))
    lower_right = polygon((1, 0), (2, 0), (2, 1), (1, 1))
    upper_right = polygon((1, 1), (2, 1), (2, 2), (1, 2))
    report = verify_tile_sets(TileSetPartition(square, ((left,), (lower_right,), (upper_right,))))
    assert not report.per_index_congruent
    assert not report.perfect


def test_equilateral_three_quads():
    part = equilateral_three_quads()
    report = verify(part)
    assert report.perfect and report.tiles_convex
    assert math.isclose(report.leftover_area, 0.0, abs_tol=1e-9)
    stats = layout_stats(part)
    assert (stats.p, stats.n, stats.k, stats.r, stats.m, stats.edge_to_edge) == (3, 3, 4, 3, 1, True)
    relations = check_relations(stats)
    assert relations.ineq1_holds and relations.eq2_holds and relations.ineq3_holds
