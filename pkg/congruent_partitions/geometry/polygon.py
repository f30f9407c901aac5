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

import dataclasses
from typing import List, NamedTuple, Sequence, Tuple

from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry._utils import Coordinate, Scalar, is_zero, sign, to_scalar


class Point(NamedTuple):
    x: Scalar
    y: Scalar


@dataclasses.dataclass(frozen=True)
class Polygon:
    """Simple polygon stored as a cyclic vertex tuple

    Instances built through ``polygon()`` or ``normalize()`` are counterclockwise, free of
    collinear vertices and start at their lowest (x, y) vertex, so structural equality is
    geometric equality.
    """

    vertices: Tuple[Point, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise ValidationError(f"A polygon needs at least 3 vertices, got {len(self.vertices)}")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> List[Tuple[Point, Point]]:
        n = len(self.vertices)
        return [(self.vertices[i], self.vertices[(i + 1) % n]) for i in range(n)]


def polygon(*coords: Tuple[Coordinate, Coordinate], exact: bool = True, eps: float = 0.0) -> Polygon:
    """Build a normalized polygon from (x, y) pairs

    Parameters
    ----------
    *coords : Tuple[Coordinate, Coordinate]
        Vertex coordinates as ints, Fractions, floats or rational strings such as ``"41/2"``
    exact : bool, optional
        Store Fractions (True) or floats (False), by default True
    eps : float, optional
        Tolerance for approximate mode, by default 0.0 (exact)

    Returns
    -------
    Polygon
        The validated, normalized polygon
    """
    if len(coords) < 3:
        raise ValidationError(f"A polygon needs at least 3 vertices, got {len(coords)}")
    points = tuple(Point(to_scalar(x, exact), to_scalar(y, exact)) for x, y in coords)
    return normalize(Polygon(points), eps=eps)


def cross(o: Point, a: Point, b: Point) -> Scalar:
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def _dot(o: Point, a: Point, b: Point) -> Scalar:
    return (a.x - o.x) * (b.x - o.x) + (a.y - o.y) * (b.y - o.y)


def same_point(a: Point, b: Point, eps: float = 0.0) -> bool:
    return is_zero(a.x - b.x, eps) and is_zero(a.y - b.y, eps)


def on_segment(a: Point, b: Point, p: Point, eps: float = 0.0) -> bool:
    """True if ``p`` lies on the closed segment ``ab``"""
    if not is_zero(cross(a, b, p), eps):
        return False
    return (
        min(a.x, b.x) - eps <= p.x <= max(a.x, b.x) + eps and min(a.y, b.y) - eps <= p.y <= max(a.y, b.y) + eps
    )


def strictly_inside_segment(a: Point, b: Point, p: Point, eps: float = 0.0) -> bool:
    return on_segment(a, b, p, eps) and not same_point(a, p, eps) and not same_point(b, p, eps)


def _segments_intersect(a1: Point, a2: Point, b1: Point, b2: Point, eps: float) -> bool:
    d1 = sign(cross(b1, b2, a1), eps)
    d2 = sign(cross(b1, b2, a2), eps)
    d3 = sign(cross(a1, a2, b1), eps)
    d4 = sign(cross(a1, a2, b2), eps)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return (
        (d1 == 0 and on_segment(b1, b2, a1, eps))
        or (d2 == 0 and on_segment(b1, b2, a2, eps))
        or (d3 == 0 and on_segment(a1, a2, b1, eps))
        or (d4 == 0 and on_segment(a1, a2, b2, eps))
    )


def _is_simple(points: Sequence[Point], eps: float) -> bool:
    n = len(points)
    edges = [(points[i], points[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            (a1, a2), (b1, b2) = edges[i], edges[j]
            if j == i + 1 or (i == 0 and j == n - 1):
                # adjacent edges may only share their common endpoint
                shared, other_a, other_b = (a2, a1, b2) if j == i + 1 else (a1, a2, b1)
                if is_zero(cross(shared, other_a, other_b), eps) and _dot(shared, other_a, other_b) > 0:
                    return False
                continue
            if _segments_intersect(a1, a2, b1, b2, eps):
                return False
    return True


def _signed_area2(points: Sequence[Point]) -> Scalar:
    n = len(points)
    total: Scalar = 0
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return total


def signed_area(poly: Polygon) -> Scalar:
    return _signed_area2(poly.vertices) / 2


def _drop_repeats(points: List[Point], eps: float) -> List[Point]:
    result: List[Point] = []
    for p in points:
        if not result or not same_point(result[-1], p, eps):
            result.append(p)
    while len(result) > 1 and same_point(result[0], result[-1], eps):
        result.pop()
    return result


def _drop_straight(points: List[Point], eps: float) -> List[Point]:
    changed = True
    while changed and len(points) >= 3:
        changed = False
        n = len(points)
        for i in range(n):
            a, b, c = points[i - 1], points[i], points[(i + 1) % n]
            # only straight continuations; a backtracking spike is left for the simplicity check
            forward = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)
            if is_zero(cross(a, b, c), eps) and forward > 0:
                del points[i]
                changed = True
                break
    return points


def normalize(poly: Polygon, eps: float = 0.0) -> Polygon:
    """Return the canonical form of a simple polygon

    The result is counterclockwise, has straight-run vertices removed and starts at its lowest
    (x, y) vertex. The area is unchanged.

    Raises
    ------
    ValidationError
        If the outline is degenerate or self-intersecting
    """
    points = _drop_straight(_drop_repeats(list(poly.vertices), eps), eps)
    if len(points) < 3:
        raise ValidationError("Degenerate polygon: fewer than 3 non-collinear vertices")
    if not _is_simple(points, eps):
        raise ValidationError("Polygon is not simple (self-intersecting)")
    doubled = _signed_area2(points)
    if is_zero(doubled, eps):
        raise ValidationError("Degenerate polygon: zero area")
    if doubled < 0:
        points.reverse()
    start = min(range(len(points)), key=lambda i: (points[i].x, points[i].y))
    return Polygon(tuple(points[start:] + points[:start]))


def area(poly: Polygon, eps: float = 0.0) -> Scalar:
    """Exact (shoelace) area of a polygon

    Raises
    ------
    ValidationError
        If the polygon has zero area
    """
    value = abs(signed_area(poly))
    if is_zero(value, eps):
        raise ValidationError("Degenerate polygon: zero area")
    return value


def is_convex(poly: Polygon, eps: float = 0.0) -> bool:
    vs = poly.vertices
    n = len(vs)
    return all(sign(cross(vs[i - 1], vs[i], vs[(i + 1) % n]), eps) >= 0 for i in range(n))


def bounding_box(poly: Polygon) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
    xs = [p.x for p in poly.vertices]
    ys = [p.y for p in poly.vertices]
    return min(xs), min(ys), max(xs), max(ys)


def point_on_boundary(poly: Polygon, p: Point, eps: float = 0.0) -> bool:
    return any(on_segment(a, b, p, eps) for a, b in poly.edges())


def _in_closed_triangle(a: Point, b: Point, c: Point, p: Point, eps: float) -> bool:
    return sign(cross(a, b, p), eps) >= 0 and sign(cross(b, c, p), eps) >= 0 and sign(cross(c, a, p), eps) >= 0


def _ear_clip(vertices: Sequence[Point], eps: float) -> List[Polygon]:
    remaining = list(vertices)
    triangles: List[Polygon] = []
    while len(remaining) > 3:
        n = len(remaining)
        for i in range(n):
            a, b, c = remaining[i - 1], remaining[i], remaining[(i + 1) % n]
            if sign(cross(a, b, c), eps) <= 0:
                continue
            if any(_in_closed_triangle(a, b, c, p, eps) for p in remaining if p not in (a, b, c)):
                continue
            triangles.append(Polygon((a, b, c)))
            del remaining[i]
            break
        else:
            raise ValidationError("No ear found while triangulating; polygon is not simple")
    triangles.append(Polygon(tuple(remaining)))
    return triangles


def triangulate(poly: Polygon, eps: float = 0.0) -> List[Polygon]:
    """Split a normalized m-gon into m - 2 interior-disjoint triangles

    Convex polygons are fanned from their first vertex; others are ear clipped.
    """
    vs = poly.vertices
    if len(vs) == 3:
        return [poly]
    if is_convex(poly, eps):
        return [Polygon((vs[0], vs[i], vs[i + 1])) for i in range(1, len(vs) - 1)]
    return _ear_clip(vs, eps)
