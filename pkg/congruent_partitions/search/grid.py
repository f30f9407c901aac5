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

"""Cell sets on the unit square grid: regions, polyomino tiles and their symmetries

Cells are ``(col, row)`` pairs with row 0 at the bottom, so a cell covers
``[col, col + 1] x [row, row + 1]`` in region coordinates.
"""

import dataclasses
from fractions import Fraction
from typing import Callable, FrozenSet, Iterable, List, NamedTuple, Set, Tuple

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry import Polygon, polygon

Cell = Tuple[int, int]


class PartialCell(NamedTuple):
    col: int
    row: int
    fraction: Fraction


# rotations first, then the reflected forms; the reflection-free mode uses the first four
TRANSFORMS: List[Callable[[int, int], Cell]] = [
    lambda x, y: (x, y),
    lambda x, y: (-y, x),
    lambda x, y: (-x, -y),
    lambda x, y: (y, -x),
    lambda x, y: (-x, y),
    lambda x, y: (-y, -x),
    lambda x, y: (x, -y),
    lambda x, y: (y, x),
]


def allowed_transforms(mode: CongruenceMode) -> range:
    return range(8 if mode.allow_reflection else 4)


def normalize_cells(cells: Iterable[Cell]) -> FrozenSet[Cell]:
    """Translate a cell set so its minimum column and row are 0"""
    items = list(cells)
    if not items:
        return frozenset()
    min_col = min(c for c, _ in items)
    min_row = min(r for _, r in items)
    return frozenset((c - min_col, r - min_row) for c, r in items)


def transform_cells(cells: Iterable[Cell], index: int) -> FrozenSet[Cell]:
    func = TRANSFORMS[index]
    return normalize_cells(func(c, r) for c, r in cells)


def _connected(cells: FrozenSet[Cell]) -> bool:
    start = min(cells)
    seen: Set[Cell] = {start}
    stack = [start]
    while stack:
        c, r = stack.pop()
        for nb in ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1)):
            if nb in cells and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cells)


def _sort_key(cells: Iterable[Cell]) -> Tuple[Cell, ...]:
    return tuple(sorted(cells, key=lambda cell: (cell[1], cell[0])))


@dataclasses.dataclass(frozen=True)
class GridRegion:
    """Discretized region

    Parameters
    ----------
    width : int
        Columns in the bounding box
    height : int
        Rows in the bounding box
    cells : FrozenSet[Cell]
        Cells fully inside the region
    partial_cells : FrozenSet[PartialCell]
        Cells only partly inside, with the covered fraction of their area
    """

    width: int
    height: int
    cells: FrozenSet[Cell]
    partial_cells: FrozenSet[PartialCell] = frozenset()

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValidationError("A grid region needs at least one full cell")
        positions = list(self.cells) + [(p.col, p.row) for p in self.partial_cells]
        if any(not (0 <= c < self.width and 0 <= r < self.height) for c, r in positions):
            raise ValidationError(f"Region cells must lie inside the {self.width}x{self.height} box")
        partial_positions = {(p.col, p.row) for p in self.partial_cells}
        if len(partial_positions) != len(self.partial_cells) or partial_positions & self.cells:
            raise ValidationError("Partial cells must be distinct from each other and from full cells")
        if any(not (0 < p.fraction < 1) for p in self.partial_cells):
            raise ValidationError("Partial cell fractions must lie strictly between 0 and 1")

    @property
    def area(self) -> Fraction:
        return len(self.cells) + sum((p.fraction for p in self.partial_cells), Fraction(0))

    def sorted_cells(self) -> List[Cell]:
        """Full cells in row-major order (bottom row first)"""
        return list(_sort_key(self.cells))


@dataclasses.dataclass(frozen=True)
class GridTile:
    """Polyomino translated so its minimum column and row are 0; edge-connected"""

    cells: FrozenSet[Cell]

    def __post_init__(self) -> None:
        if not self.cells:
            raise ValidationError("A grid tile needs at least one cell")
        if normalize_cells(self.cells) != self.cells:
            raise ValidationError("Grid tile cells must be normalized to minimum column and row 0")
        if not _connected(self.cells):
            raise ValidationError("Grid tile cells must be edge-connected")

    def __len__(self) -> int:
        return len(self.cells)


def grid_tile(cells: Iterable[Cell]) -> GridTile:
    return GridTile(normalize_cells(cells))


def oriented(tile: GridTile, mode: CongruenceMode = CongruenceMode()) -> List[Tuple[int, FrozenSet[Cell]]]:
    """Distinct images of a tile with the first transform index producing each"""
    images: List[Tuple[int, FrozenSet[Cell]]] = []
    for index in allowed_transforms(mode):
        image = transform_cells(tile.cells, index)
        if all(image != seen for _, seen in images):
            images.append((index, image))
    return images


def symmetries(tile: GridTile, mode: CongruenceMode = CongruenceMode()) -> List[GridTile]:
    return [GridTile(image) for _, image in oriented(tile, mode)]


def canonical_tile(cells: Iterable[Cell], mode: CongruenceMode = CongruenceMode()) -> GridTile:
    """Representative of a polyomino's class: its least image in row-major order"""
    items = frozenset(cells)
    best = min((transform_cells(items, i) for i in allowed_transforms(mode)), key=_sort_key)
    return GridTile(best)


def enumerate_tiles(c: int, mode: CongruenceMode = CongruenceMode()) -> List[GridTile]:
    """All free (or, without reflection, one-sided) polyominoes with ``c`` cells

    Grown one cell at a time from the monomino and deduplicated by canonical form.
    """
    if c < 1:
        raise ValidationError(f"Tile size must be at least 1, got {c}")
    layer = {canonical_tile([(0, 0)], mode)}
    for _ in range(c - 1):
        grown: Set[GridTile] = set()
        for tile in layer:
            for col, row in tile.cells:
                for nb in ((col + 1, row), (col - 1, row), (col, row + 1), (col, row - 1)):
                    if nb not in tile.cells:
                        grown.add(canonical_tile(tile.cells | {nb}, mode))
        layer = grown
    tiles = sorted(layer, key=lambda t: _sort_key(t.cells))
    LOGGER.debug("Enumerated %s polyominoes of size %s (reflection=%s)", len(tiles), c, mode.allow_reflection)
    return tiles


def region_transform(region: GridRegion, index: int) -> Callable[[int, int], Cell]:
    """Transform ``index`` re-anchored so the image of the region starts at column and row 0"""
    func = TRANSFORMS[index]
    positions = [func(c, r) for c, r in region.cells] + [func(p.col, p.row) for p in region.partial_cells]
    min_col = min(c for c, _ in positions)
    min_row = min(r for _, r in positions)

    def mapped(c: int, r: int) -> Cell:
        x, y = func(c, r)
        return x - min_col, y - min_row

    return mapped


def _transform_region(region: GridRegion, index: int) -> Tuple[FrozenSet[Cell], FrozenSet[PartialCell]]:
    func = region_transform(region, index)
    return (
        frozenset(func(c, r) for c, r in region.cells),
        frozenset(PartialCell(*func(p.col, p.row), p.fraction) for p in region.partial_cells),
    )


def region_symmetries(region: GridRegion, mode: CongruenceMode = CongruenceMode()) -> List[int]:
    """Transform indices mapping the region, partial cells included, onto itself"""
    base = _transform_region(region, 0)
    return [i for i in allowed_transforms(mode) if _transform_region(region, i) == base]


def friedman_polygon() -> Polygon:
    """3 x 7 rectangle with an area 1/2 isosceles triangle cut from one corner"""
    return polygon((0, 0), (7, 0), (7, 3), (1, 3), (0, 2))


def friedman_region() -> GridRegion:
    cells = frozenset((c, r) for c in range(7) for r in range(3)) - {(0, 2)}
    return GridRegion(7, 3, cells, frozenset({PartialCell(0, 2, Fraction(1, 2))}))


def l_tetromino() -> GridTile:
    return GridTile(frozenset({(0, 0), (1, 0), (0, 1), (0, 2)}))
