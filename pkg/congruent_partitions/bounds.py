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

"""Counting relations between the vertex numbers of a perfect convex layout

With ``p`` vertices on the region, ``n`` tiles of ``k`` vertices each, ``r`` layout vertices on
the region boundary that are not region corners and ``m`` interior layout vertices:

- (1) ``n*k >= 3*m + 2*r + p``; every interior vertex meets at least three convex tiles and
  every boundary vertex at least two
- (2) ``n*(k - 2) == 2*m + r + p - 2``; tile angle sums equal the layout angle sums
- (3) ``(6 - k)*n >= r - p + 6``; a consequence of (1) and (2)

With ``k = p + alpha`` relation (3) becomes ``p*(n - 1)/n <= 6 - 6/n - alpha - r/n``.
"""

import math
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Optional

from congruent_partitions import LOGGER
from congruent_partitions.errors import ValidationError
from congruent_partitions.partition import LayoutStats


class RelationReport(NamedTuple):
    ineq1_holds: bool
    eq2_holds: bool
    ineq3_holds: bool
    alpha: int


class FeasibleTuple(NamedTuple):
    p: int
    n: int
    k: int
    r: int
    m: int


class FeasibleSummary(NamedTuple):
    count: int
    max_p: Optional[int]
    max_k: Optional[int]


def check_relations(stats: LayoutStats) -> RelationReport:
    p, n, k, r, m = stats.p, stats.n, stats.k, stats.r, stats.m
    if min(n, r, m) < 0 or p < 3 or k < 3 or n < 1:
        raise ValidationError(f"Layout counts out of range: {stats}")
    return RelationReport(
        ineq1_holds=n * k >= 3 * m + 2 * r + p,
        eq2_holds=n * (k - 2) == 2 * m + r + p - 2,
        ineq3_holds=(6 - k) * n >= r - p + 6,
        alpha=k - p,
    )


def max_alpha(p: int, n: int, r: int) -> Optional[int]:
    """Largest integer alpha >= 1 allowed by the rearranged relation, or None

    Parameters
    ----------
    p : int
        Region vertex count, at least 3
    n : int
        Tile count, at least 2
    r : int
        Boundary layout vertices, at least 0

    Returns
    -------
    Optional[int]
        ``floor((6n - 6 - r - p(n - 1)) / n)`` when that is at least 1
    """
    if p < 3 or n < 2 or r < 0:
        raise ValidationError(f"max_alpha needs p >= 3, n >= 2, r >= 0; got p={p}, n={n}, r={r}")
    bound = math.floor(Fraction(6 * n - 6 - r - p * (n - 1), n))
    return bound if bound >= 1 else None


def _ineq1_slack(p: int, n: int, k: int, r: int) -> int:
    # 2 * (n*k - 3*m - 2*r - p) with m taken from (2); decreasing in both k and r
    return -n * k + 6 * n - r + p - 6


def enumerate_feasible(max_p: int, max_n: int, max_r: int, min_alpha: int = 1) -> List[FeasibleTuple]:
    """All integer tuples with k = p + alpha (alpha >= min_alpha) satisfying (1) and (2)

    ``m`` is solved from (2) and the tuple is discarded when it is negative or not integral.
    Feasibility is a necessary condition only; it never implies a layout exists.

    Returns
    -------
    List[FeasibleTuple]
        Tuples sorted lexicographically by (p, n, k, r, m)
    """
    if max_p < 3 or max_n < 2 or max_r < 0 or min_alpha < 1:
        raise ValidationError("enumerate_feasible needs max_p >= 3, max_n >= 2, max_r >= 0 and min_alpha >= 1")
    feasible: List[FeasibleTuple] = []
    for p in range(3, max_p + 1):
        for n in range(2, max_n + 1):
            for r in range(0, max_r + 1):
                if _ineq1_slack(p, n, p + min_alpha, r) < 0:
                    break
                k = p + min_alpha
                while _ineq1_slack(p, n, k, r) >= 0:
                    twice_m = n * (k - 2) - r - p + 2
                    if twice_m >= 0 and twice_m % 2 == 0:
                        feasible.append(FeasibleTuple(p, n, k, r, twice_m // 2))
                    k += 1
    feasible.sort()
    LOGGER.debug("Enumerated %s feasible tuples up to p=%s n=%s r=%s", len(feasible), max_p, max_n, max_r)
    return feasible


def summarize_feasible(tuples: Iterable[FeasibleTuple]) -> FeasibleSummary:
    items = list(tuples)
    if not items:
        return FeasibleSummary(0, None, None)
    return FeasibleSummary(len(items), max(t.p for t in items), max(t.k for t in items))


def k_upper_bound(p: int, n: int) -> int:
    """Upper bound on the tile vertex count from (3) with r = 0; never a claim of existence"""
    if p < 3 or n < 1:
        raise ValidationError(f"k_upper_bound needs p >= 3 and n >= 1; got p={p}, n={n}")
    return math.floor(6 + Fraction(p - 6, n))
