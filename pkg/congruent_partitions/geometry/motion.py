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
from fractions import Fraction

from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry._utils import Scalar, is_zero
from congruent_partitions.geometry.polygon import Point, Polygon, normalize


@dataclasses.dataclass(frozen=True)
class RigidMotion:
    """Optional reflection across the x-axis, then rotation by (c, s), then translation

    In exact mode (c, s) must be a rational point on the unit circle.
    """

    c: Scalar = Fraction(1)
    s: Scalar = Fraction(0)
    dx: Scalar = Fraction(0)
    dy: Scalar = Fraction(0)
    reflect: bool = False

    @classmethod
    def identity(cls) -> "RigidMotion":
        return cls()

    @classmethod
    def pythagorean(
        cls, a: int, b: int, hypotenuse: int, dx: Scalar = Fraction(0), dy: Scalar = Fraction(0), reflect: bool = False
    ) -> "RigidMotion":
        """Rotation with cosine a/hypotenuse and sine b/hypotenuse, e.g. (3, 4, 5)"""
        return cls(Fraction(a, hypotenuse), Fraction(b, hypotenuse), dx, dy, reflect)

    def is_valid(self, eps: float = 0.0) -> bool:
        return is_zero(self.c * self.c + self.s * self.s - 1, eps)

    def apply(self, p: Point) -> Point:
        y = -p.y if self.reflect else p.y
        return Point(self.c * p.x - self.s * y + self.dx, self.s * p.x + self.c * y + self.dy)


def apply_motion(poly: Polygon, mot: RigidMotion, eps: float = 0.0) -> Polygon:
    """Image of a polygon under a rigid motion, re-normalized to counterclockwise order

    Raises
    ------
    ValidationError
        If c² + s² != 1
    """
    if not mot.is_valid(eps):
        raise ValidationError(f"Invalid rotation pair ({mot.c}, {mot.s}): c^2 + s^2 must equal 1")
    return normalize(Polygon(tuple(mot.apply(p) for p in poly.vertices)), eps=eps)
