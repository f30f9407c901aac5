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
import random
from fractions import Fraction
from typing import List, Tuple

import pytest

from congruent_partitions import resource_path
from congruent_partitions.geometry import Point, Polygon, RigidMotion, normalize

TRIPLES = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)]


def random_polygon(rng: random.Random, m: int) -> Polygon:
    """Star-shaped rational polygon around the origin with up to ``m`` vertices"""
    while True:
        directions: List[Tuple[int, int]] = []
        angles = set()
        while len(directions) < m:
            d = (rng.randint(-6, 6), rng.randint(-6, 6))
            if d == (0, 0):
                continue
            angle = math.atan2(d[1], d[0])
            if any(abs(angle - a) < 1e-9 for a in angles):
                continue
            angles.add(angle)
            directions.append(d)
        directions.sort(key=lambda d: math.atan2(d[1], d[0]))
        ordered = sorted(angles)
        gaps = [b - a for a, b in zip(ordered, ordered[1:])] + [ordered[0] + 2 * math.pi - ordered[-1]]
        if max(gaps) >= math.pi - 1e-6:
            continue
        points = []
        for dx, dy in directions:
            radius = Fraction(rng.randint(3, 12), rng.randint(1, 3))
            points.append(Point(dx * radius, dy * radius))
        return normalize(Polygon(tuple(points)))


def random_triangle(rng: random.Random) -> Polygon:
    while True:
        a, b, c = (Point(Fraction(rng.randint(-20, 20)), Fraction(rng.randint(-20, 20))) for _ in range(3))
        if (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x) != 0:
            return normalize(Polygon((a, b, c)))


def random_motion(rng: random.Random, reflect: bool = False) -> RigidMotion:
    a, b, hyp = rng.choice(TRIPLES)
    if rng.random() < 0.5:
        a, b = b, a
    a, b = a * rng.choice([1, -1]), b * rng.choice([1, -1])
    dx = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
    dy = Fraction(rng.randint(-50, 50), rng.randint(1, 7))
    return RigidMotion.pythagorean(a, b, hyp, dx, dy, reflect)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20090501)


@pytest.fixture
def friedman_partition_path() -> str:
    return resource_path("friedman.partition")


@pytest.fixture
def friedman_poly_path() -> str:
    return resource_path("friedman.poly")


@pytest.fixture
def friedman_grid_path() -> str:
    return resource_path("friedman.grid")


@pytest.fixture
def l_tetromino_path() -> str:
    return resource_path("l_tetromino.grid")
