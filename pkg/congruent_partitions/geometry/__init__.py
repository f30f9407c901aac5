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

from congruent_partitions.geometry._utils import Scalar, format_scalar, is_close, is_zero, to_scalar
from congruent_partitions.geometry.clipping import contains, intersection_area
from congruent_partitions.geometry.motion import RigidMotion, apply_motion
from congruent_partitions.geometry.polygon import (
    Point,
    Polygon,
    area,
    bounding_box,
    is_convex,
    normalize,
    on_segment,
    point_on_boundary,
    polygon,
    same_point,
    signed_area,
    strictly_inside_segment,
    triangulate,
)

__all__ = [
    "Point",
    "Polygon",
    "RigidMotion",
    "Scalar",
    "apply_motion",
    "area",
    "bounding_box",
    "contains",
    "format_scalar",
    "intersection_area",
    "is_close",
    "is_convex",
    "is_zero",
    "normalize",
    "on_segment",
    "point_on_boundary",
    "polygon",
    "same_point",
    "signed_area",
    "strictly_inside_segment",
    "to_scalar",
    "triangulate",
]
