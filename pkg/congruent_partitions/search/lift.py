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

"""Conversion between rational polygons and grid regions"""

import math
from fractions import Fraction
from typing import Dict, FrozenSet, List, Set

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.errors import SearchError, ValidationError
from congruent_partitions.geometry import Point, Polygon, bounding_box, intersection_area, normalize
from congruent_partitions.partition import Partition
from congruent_partitions.search.grid import Cell, GridRegion, PartialCell
from congruent_partitions.search.solver import SearchResult


def _square(col: int, row: int, size: Fraction) -> Polygon:
    x, y = col * size, row * size
    return Polygon((Point(x, y), Point(x + size, y), Point(x + size, y + size), Point(x, y + size)))


def discretize(poly: Polygon, cell_size: Fraction = Fraction(1)) -> GridRegion:
    """Grid region of a polygon lying in the first quadrant

    Cells are anchored at the origin. A cell fully inside the polygon is a full cell, a cell
    with some but not all of its area inside becomes a partial cell carrying that fraction.

    Raises
    ------
    ValidationError
        If the cell size is not positive, the polygon reaches below 0 on either axis, or no cell
        lies fully inside it
    """
    if cell_size <= 0:
        raise ValidationError(f"Cell size must be positive, got {cell_size}")
    x0, y0, x1, y1 = bounding_box(poly)
    if x0 < 0 or y0 < 0:
        raise ValidationError("Only polygons with non-negative coordinates can be discretized")
    width, height = math.ceil(x1 / cell_size), math.ceil(y1 / cell_size)
    cell_area = cell_size * cell_size
    cells: Set[Cell] = set()
    partial: Set[PartialCell] = set()
    for row in range(height):
        for col in range(width):
            fraction = Fraction(intersection_area(poly, _square(col, row, cell_size))) / cell_area
            if fraction == 1:
                cells.add((col, row))
            elif fraction > 0:
                partial.add(PartialCell(col, row, fraction))
    LOGGER.debug("Discretized into %s full and %s partial cells", len(cells), len(partial))
    return GridRegion(width, height, frozenset(cells), frozenset(partial))


def trace_outline(cells: FrozenSet[Cell], cell_size: Fraction = Fraction(1)) -> Polygon:
    """Counterclockwise outline of a simply connected cell set

    Raises
    ------
    ValidationError
        If the cells touch only at a corner or enclose a hole
    """
    edges: Dict[Cell, Cell] = {}
    for c, r in cells:
        sides = [
            ((c, r - 1), (c, r), (c + 1, r)),
            ((c + 1, r), (c + 1, r), (c + 1, r + 1)),
            ((c, r + 1), (c + 1, r + 1), (c, r + 1)),
            ((c - 1, r), (c, r + 1), (c, r)),
        ]
        for neighbour, start, end in sides:
            if neighbour in cells:
                continue
            if start in edges:
                raise ValidationError("Cell set is pinched at a corner; its outline is not simple")
            edges[start] = end
    first = min(edges)
    outline: List[Cell] = [first]
    current = edges[first]
    while current != first:
        outline.append(current)
        current = edges[current]
    if len(outline) != len(edges):
        raise ValidationError("Cell set has a hole; its outline is not a single polygon")
    return normalize(Polygon(tuple(Point(Fraction(x) * cell_size, Fraction(y) * cell_size) for x, y in outline)))


def lift_to_partition(
    region_poly: Polygon,
    result: SearchResult,
    cell_size: Fraction = Fraction(1),
    mode: CongruenceMode = CongruenceMode(),
) -> Partition:
    """Turn a grid search result into an exact partition of the polygon it was discretized from

    Raises
    ------
    SearchError
        If ``region_poly`` does not discretize to ``result.region`` at this cell size
    """
    if discretize(region_poly, cell_size) != result.region:
        raise SearchError(
            "Search result was computed for a different discretization", error_info={"cell_size": str(cell_size)}
        )
    tiles = tuple(trace_outline(p.cells, cell_size) for p in result.placements)
    return Partition(normalize(region_poly), tiles, mode)
