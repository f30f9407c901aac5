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
from fractions import Fraction

import pytest
from conftest import random_motion

from congruent_partitions import CongruenceMode
from congruent_partitions._formats import parse_partition_file
from congruent_partitions.bounds import check_relations
from congruent_partitions.errors import ComparisonError, PreconditionError, StatsUndefinedError
from congruent_partitions.geometry import apply_motion, polygon
from congruent_partitions.partition import (
    Partition,
    compare_partitions,
    layout_stats,
    make_partition,
    simplest_optimal,
    verify,
)

UNIT_SQUARE = polygon((0, 0), (1, 0), (1, 1), (0, 1))


@pytest.fixture
def bisection() -> Partition:
    return make_partition(
        UNIT_SQUARE,
        [polygon((0, 0), (1, 0), (1, "1/2"), (0, "1/2")), polygon((0, "1/2"), (1, "1/2"), (1, 1), (0, 1))],
    )


@pytest.fixture
def diagonal_cut() -> Partition:
    return make_partition(UNIT_SQUARE, [polygon((0, 0), (1, 0), (1, 1)), polygon((0, 0), (1, 1), (0, 1))])


@pytest.fixture
def friedman(friedman_partition_path) -> Partition:
    with open(friedman_partition_path) as file:
        return parse_partition_file(file.read())


@pytest.fixture
def t_junction() -> Partition:
    return make_partition(
        polygon((0, 0), (3, 0), (3, 2), (0, 2)),
        [
            polygon((0, 0), (1, 0), (1, 2), (0, 2)),
            polygon((1, 0), (3, 0), (3, 1), (1, 1)),
            polygon((1, 1), (3, 1), (3, 2), (1, 2)),
        ],
    )


def test_verify_bisection(bisection):
    report = verify(bisection)
    assert report.mutually_congruent and report.all_contained
    assert report.overlap_area == 0
    assert report.leftover_area == 0
    assert report.leftover_fraction == 0
    assert report.perfect and report.valid and report.tiles_convex


def test_verify_friedman(friedman):
    report = verify(friedman)
    assert report.valid
    assert report.leftover_area == Fraction(1, 2)
    assert report.leftover_fraction == Fraction(1, 41)
    assert not report.perfect
    assert not report.tiles_convex


def test_verify_overlapping(caplog):
    part = make_partition(
        polygon((0, 0), (2, 0), (2, 2), (0, 2)),
        [UNIT_SQUARE, polygon(("1/2", "1/2"), ("3/2", "1/2"), ("3/2", "3/2"), ("1/2", "3/2"))],
    )
    with caplog.at_level(logging.WARNING):
        report = verify(part)
    assert report.overlap_area == Fraction(1, 4)
    assert not report.perfect and not report.valid
    assert report.leftover_area == 4 - (2 - Fraction(1, 4))
    assert "not valid" in caplog.text


def test_verify_not_contained():
    part = make_partition(UNIT_SQUARE, [polygon(("1/2", 0), ("3/2", 0), ("3/2", 1), ("1/2", 1))])
    report = verify(part)
    assert not report.all_contained
    assert report.leftover_area == Fraction(1, 2)
    assert 0 <= report.leftover_fraction <= 1


def test_verify_not_congruent():
    part = make_partition(UNIT_SQUARE, [polygon((0, 0), (1, 0), (1, 1)), polygon((0, 0), ("1/2", "1/2"), (0, 1))])
    report = verify(part)
    assert not report.mutually_congruent
    assert not report.valid


def test_verify_empty_partition():
    report = verify(Partition(UNIT_SQUARE, ()))
    assert report.leftover_area == 1
    assert report.leftover_fraction == 1
    assert not report.perfect


def test_verify_concurrent_matches_sequential(friedman):
    assert verify(friedman, max_workers=4) == verify(friedman)


def test_verify_invariant_under_motion(rng, friedman):
    expected = verify(friedman)
    for _ in range(5):
        motion = random_motion(rng, reflect=rng.random() < 0.5)
        moved = Partition(
            apply_motion(friedman.region, motion), tuple(apply_motion(t, motion) for t in friedman.tiles)
        )
        assert verify(moved) == expected


def test_layout_stats_bisection(bisection):
    stats = layout_stats(bisection)
    assert (stats.p, stats.n, stats.k, stats.r, stats.m, stats.edge_to_edge) == (4, 2, 4, 2, 0, True)


def test_layout_stats_quartered_triangle():
    tri = polygon((0, 0), (2, 0), (0, 2))
    part = make_partition(
        tri,
        [
            polygon((0, 0), (1, 0), (0, 1)),
            polygon((1, 0), (2, 0), (1, 1)),
            polygon((0, 1), (1, 1), (0, 2)),
            polygon((1, 0), (1, 1), (0, 1)),
        ],
    )
    stats = layout_stats(part)
    assert (stats.p, stats.n, stats.k, stats.r, stats.m, stats.edge_to_edge) == (3, 4, 3, 3, 0, True)


def test_layout_stats_t_junction(t_junction, caplog):
    with caplog.at_level(logging.WARNING):
        stats = layout_stats(t_junction)
    assert (stats.p, stats.n, stats.k, stats.r, stats.m) == (4, 3, 4, 3, 1)
    assert not stats.edge_to_edge
    assert "T-junction" in caplog.text
    assert not check_relations(stats).eq2_holds


def test_layout_stats_requires_perfect(friedman):
    with pytest.raises(PreconditionError):
        layout_stats(friedman)


def test_layout_stats_unequal_vertex_counts():
    part = make_partition(
        polygon((0, 0), (2, 0), (2, 1), (0, 1)),
        [polygon((0, 0), (1, 0), (1, 1), (0, 1)), polygon((1, 0), (2, 0), (2, 1)), polygon((1, 0), (2, 1), (1, 1))],
    )
    with pytest.raises(StatsUndefinedError):
        layout_stats(part)


def test_compare_partitions(bisection, diagonal_cut):
    lower = polygon((0, 0), ("1/2", 0), ("1/2", "1/2"), (0, "1/2"))
    upper = polygon((0, "1/2"), ("1/2", "1/2"), ("1/2", 1), (0, 1))
    quarters = make_partition(UNIT_SQUARE, [lower, upper])
    assert compare_partitions(bisection, quarters) == -1
    assert compare_partitions(quarters, bisection) == 1
    assert compare_partitions(diagonal_cut, bisection) == -1
    assert compare_partitions(bisection, bisection) == 0
    assert simplest_optimal([quarters, bisection, diagonal_cut]) is diagonal_cut


def test_compare_partitions_mismatch(bisection, friedman):
    with pytest.raises(ComparisonError):
        compare_partitions(bisection, friedman)
    single = make_partition(UNIT_SQUARE, [UNIT_SQUARE])
    with pytest.raises(ComparisonError):
        compare_partitions(bisection, single)
    with pytest.raises(ComparisonError):
        simplest_optimal([])


def test_compare_partitions_invalid(bisection):
    broken = make_partition(UNIT_SQUARE, [polygon((0, 0), (1, 0), (1, 1)), polygon((0, 0), ("1/2", "1/2"), (0, 1))])
    with pytest.raises(ComparisonError):
        compare_partitions(bisection, broken)


def test_reflection_free_mode():
    l_shape = polygon((0, 0), (2, 0), (2, 1), (1, 1), (1, 3), (0, 3))
    j_shape = polygon((2, 0), (4, 0), (4, 3), (3, 3), (3, 1), (2, 1))
    region = polygon((0, 0), (4, 0), (4, 3), (0, 3))
    assert verify(make_partition(region, [l_shape, j_shape])).mutually_congruent
    strict = make_partition(region, [l_shape, j_shape], CongruenceMode(allow_reflection=False))
    assert not verify(strict).mutually_congruent
