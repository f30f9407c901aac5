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

import pytest

from congruent_partitions.bounds import (
    FeasibleTuple,
    check_relations,
    enumerate_feasible,
    k_upper_bound,
    max_alpha,
    summarize_feasible,
)
from congruent_partitions.errors import ValidationError
from congruent_partitions.partition import LayoutStats


def test_check_relations_quartered_triangle():
    report = check_relations(LayoutStats(p=3, n=4, k=3, r=3, m=0, edge_to_edge=True))
    assert report.ineq1_holds and report.eq2_holds and report.ineq3_holds
    assert report.alpha == 0


def test_check_relations_bisection():
    report = check_relations(LayoutStats(p=4, n=2, k=4, r=2, m=0, edge_to_edge=True))
    assert report.ineq1_holds and report.eq2_holds and report.ineq3_holds


def test_check_relations_violation():
    report = check_relations(LayoutStats(p=4, n=2, k=6, r=0, m=0, edge_to_edge=True))
    assert not report.eq2_holds
    assert report.ineq1_holds
    assert not report.ineq3_holds
    assert report.alpha == 2


@pytest.mark.parametrize(
    "stats",
    [
        LayoutStats(p=2, n=2, k=3, r=0, m=0, edge_to_edge=True),
        LayoutStats(p=3, n=0, k=3, r=0, m=0, edge_to_edge=True),
        LayoutStats(p=3, n=2, k=3, r=-1, m=0, edge_to_edge=True),
    ],
)
def test_check_relations_out_of_range(stats):
    with pytest.raises(ValidationError):
        check_relations(stats)


@pytest.mark.parametrize(
    "p, n, r, expected",
    [(3, 2, 0, 1), (3, 3, 3, 1), (4, 2, 0, 1), (5, 2, 0, None), (3, 10, 0, 2), (4, 3, 2, None), (11, 2, 0, None)],
)
def test_max_alpha(p, n, r, expected):
    assert max_alpha(p, n, r) == expected


@pytest.mark.parametrize("p, n, r", [(2, 2, 0), (3, 1, 0), (3, 2, -1)])
def test_max_alpha_invalid(p, n, r):
    with pytest.raises(ValidationError):
        max_alpha(p, n, r)


def test_max_alpha_antitone():
    for n in range(2, 30):
        for r in range(0, 20):
            values = [max_alpha(p, n, r) or 0 for p in range(3, 12)]
            assert values == sorted(values, reverse=True)
            assert (max_alpha(3, n, r + 1) or 0) <= (max_alpha(3, n, r) or 0)


@pytest.mark.parametrize("p, n, expected", [(3, 1, 3), (4, 2, 5), (6, 5, 6), (3, 3, 5), (10, 2, 8), (12, 6, 7)])
def test_k_upper_bound(p, n, expected):
    assert k_upper_bound(p, n) == expected


def test_k_upper_bound_invalid():
    with pytest.raises(ValidationError):
        k_upper_bound(2, 3)


def test_enumerate_contains_known_layouts():
    feasible = enumerate_feasible(6, 10, 10)
    assert FeasibleTuple(3, 3, 4, 3, 1) in feasible
    assert FeasibleTuple(4, 2, 5, 0, 2) in feasible
    assert feasible == sorted(feasible)
    assert all(t.k - t.p >= 1 for t in feasible)


def test_enumerate_satisfies_relations():
    feasible = enumerate_feasible(8, 60, 60)
    assert len(feasible) > 100
    for t in feasible[:10000]:
        report = check_relations(LayoutStats(*t, edge_to_edge=True))
        assert report.ineq1_holds and report.eq2_holds and report.ineq3_holds
        assert max_alpha(t.p, t.n, t.r) is not None


def test_enumerate_max_p():
    summary = summarize_feasible(enumerate_feasible(20, 200, 200))
    assert summary.max_p is not None and summary.max_p <= 10
    assert summary.max_p == 4
    assert summary.max_k == 5


def test_enumerate_alpha_two():
    summary = summarize_feasible(enumerate_feasible(20, 200, 200, min_alpha=2))
    assert summary.max_p == 3
    assert summary.max_k == 5
    assert summary.max_p <= 8 and summary.max_k <= 10


def test_enumerate_empty_and_invalid():
    assert summarize_feasible(enumerate_feasible(20, 200, 200, min_alpha=4)) == (0, None, None)
    with pytest.raises(ValidationError):
        enumerate_feasible(2, 10, 10)
    with pytest.raises(ValidationError):
        enumerate_feasible(5, 10, 10, min_alpha=0)


def test_relations_imply_ineq3(rng):
    hits = 0
    for _ in range(10000):
        p, n, k, r = rng.randint(3, 12), rng.randint(1, 40), rng.randint(3, 8), rng.randint(0, 40)
        # interior count forced by the angle-sum equation
        twice_m = n * (k - 2) - r - p + 2
        if twice_m < 0 or twice_m % 2:
            continue
        stats = LayoutStats(p=p, n=n, k=k, r=r, m=twice_m // 2, edge_to_edge=True)
        report = check_relations(stats)
        assert report.eq2_holds, stats
        if report.ineq1_holds:
            hits += 1
            assert report.ineq3_holds, stats
    assert hits >= 200
