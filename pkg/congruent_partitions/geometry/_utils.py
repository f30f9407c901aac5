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

from fractions import Fraction
from typing import Union

from congruent_partitions.errors import ValidationError

# Fraction in exact mode, float in approximate mode. Never mixed within one polygon.
Scalar = Union[Fraction, float]
Coordinate = Union[Fraction, float, int, str]


def to_scalar(value: Coordinate, exact: bool = True) -> Scalar:
    """Convert a coordinate to a ``Fraction`` (exact mode) or ``float`` (approximate mode)

    Strings may be integers, ``a/b`` rationals or decimals; decimals are read exactly.
    """
    if isinstance(value, float):
        return Fraction(value) if exact else value
    try:
        rational = value if isinstance(value, Fraction) else Fraction(value)
    except (ValueError, ZeroDivisionError) as e:
        raise ValidationError(f"Malformed rational '{value}'") from e
    return rational if exact else float(rational)


def format_scalar(value: Scalar) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return format(value, ".12g")


def is_zero(value: Scalar, eps: float = 0.0) -> bool:
    return abs(value) <= eps if eps else value == 0


def sign(value: Scalar, eps: float = 0.0) -> int:
    if is_zero(value, eps):
        return 0
    return 1 if value > 0 else -1


def is_close(a: Scalar, b: Scalar, eps: float = 0.0) -> bool:
    return is_zero(a - b, eps)
