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

from typing import List

from congruent_partitions.geometry._utils import Scalar, is_close
from congruent_partitions.geometry.polygon import Point, Polygon, area, bounding_box, cross, triangulate


def _boxes_overlap(a: Polygon, b: Polygon) -> bool:
    ax0, ay0, ax1, ay1 = bounding_box(a)
    bx0, by0, bx1, by1 = bounding_box(b)
    return ax0 < bx1 and bx0 < ax1 and ay0 < by1 and by0 < ay1


def _clip_convex(subject: List[Point], clip: Polygon) -> List[Point]:
    """Sutherland-Hodgman clip of a polygon against a counterclockwise convex polygon"""
    output = subject
    for cp1, cp2 in clip.edges():
        if not output:
            return []
        candidates, output = output, []
        s = candidates[-1]
        s_side = cross(cp1, cp2, s)
        for e in candidates:
            e_side = cross(cp1, cp2, e)
            if e_side >= 0:
                if s_side < 0:
                    output.append(_crossing(s, e, s_side, e_side))
                output.append(e)
            elif s_side >= 0:
                output.append(_crossing(s, e, s_side, e_side))
            s, s_side = e, e_side
    return output


def _crossing(s: Point, e: Point, s_side: Scalar, e_side: Scalar) -> Point:
    t = s_side / (s_side - e_side)
    return Point(s.x + t * (e.x - s.x), s.y + t * (e.y - s.y))


def _shoelace(points: List[Point]) -> Scalar:
    total: Scalar = 0
    n = len(points)
    for i in range(n):
        p, q = points[i], points[(i + 1) % n]
        total += p.x * q.y - q.x * p.y
    return abs(total) / 2


def intersection_area(a: Polygon, b: Polygon, eps: float = 0.0) -> Scalar:
    """Exact area of a ∩ b, summed over clipped pairs of triangles"""
    if not _boxes_overlap(a, b):
        return 0 * a.vertices[0].x
    total: Scalar = 0 * a.vertices[0].x
    b_triangles = triangulate(b, eps)
    for ta in triangulate(a, eps):
        for tb in b_triangles:
            if not _boxes_overlap(ta, tb):
                continue
            clipped = _clip_convex(list(ta.vertices), tb)
            if len(clipped) >= 3:
                total += _shoelace(clipped)
    return total


def contains(outer: Polygon, inner: Polygon, eps: float = 0.0) -> bool:
    return is_close(intersection_area(outer, inner, eps), area(inner, eps), eps)
