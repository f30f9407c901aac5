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

"""Text formats for polygons, partitions, tile-set partitions and grids

Polygon block::

    polygon <v>
    <x> <y>        # v lines, integers, a/b rationals or decimals

Partition file: ``partition``, the region block, ``tiles <n>``, then n polygon blocks.
Tile-set file: ``tileset-partition``, the region block, ``sets <N>``, then per set
``set <i> <count>`` followed by its polygon blocks. Lines starting with ``#`` are comments.

Grid file: ``grid <w> <h>`` then h rows of w characters, top row first, where ``#`` is a full
cell, ``.`` is outside and ``P`` is a partial cell; every ``P`` needs a
``partial <col> <row> <a>/<b>`` line after the rows. Grid files have no comment lines.
"""

from fractions import Fraction
from typing import List, Optional, Set, Tuple

from congruent_partitions._classes import CongruenceMode
from congruent_partitions.constructions import TileSetPartition
from congruent_partitions.errors import ParseError, ValidationError
from congruent_partitions.geometry import Point, Polygon, format_scalar, normalize, to_scalar
from congruent_partitions.partition import Partition
from congruent_partitions.search.grid import Cell, GridRegion, GridTile, PartialCell, grid_tile


class _Lines:
    """Numbered, whitespace-split content lines with a read cursor"""

    def __init__(self, text: str, comments: bool = True):
        self.items: List[Tuple[int, List[str]]] = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or (comments and stripped.startswith("#")):
                continue
            self.items.append((number, stripped.split()))
        self.pos = 0

    @property
    def last_line(self) -> int:
        return self.items[-1][0] if self.items else 1

    def done(self) -> bool:
        return self.pos >= len(self.items)

    def next(self, what: str, after: Optional[int] = None) -> Tuple[int, List[str]]:
        if self.done():
            raise ParseError(f"unexpected end of input, expected {what}", line=after or self.last_line)
        item = self.items[self.pos]
        self.pos += 1
        return item

    def header(self, keyword: str, count: int) -> Tuple[int, List[int]]:
        """Read ``<keyword> <int> ...`` with ``count`` integer arguments"""
        number, tokens = self.next(f"'{keyword}'")
        if tokens[0] != keyword or len(tokens) != count + 1:
            raise ParseError(f"expected '{keyword}' followed by {count} integer(s)", line=number)
        try:
            values = [int(t) for t in tokens[1:]]
        except ValueError as e:
            raise ParseError(f"malformed integer in '{' '.join(tokens)}'", line=number) from e
        if any(v < 0 for v in values):
            raise ParseError(f"negative count in '{' '.join(tokens)}'", line=number)
        return number, values

    def finish(self) -> None:
        if not self.done():
            raise ParseError("unexpected trailing content", line=self.items[self.pos][0])


def _read_polygon(lines: _Lines, exact: bool, eps: float) -> Polygon:
    header_line, (count,) = lines.header("polygon", 1)
    if count < 3:
        raise ParseError(f"a polygon needs at least 3 vertices, got {count}", line=header_line)
    points: List[Point] = []
    for i in range(count):
        number, tokens = lines.next(f"vertex {i + 1} of {count}", after=header_line)
        if len(tokens) != 2:
            raise ParseError(f"expected '<x> <y>', found {len(tokens)} field(s)", line=number)
        try:
            points.append(Point(to_scalar(tokens[0], exact), to_scalar(tokens[1], exact)))
        except ValidationError as e:
            raise ParseError(str(e), line=number) from e
    try:
        return normalize(Polygon(tuple(points)), eps)
    except ValidationError as e:
        raise ParseError(str(e), line=header_line) from e


def parse_polygon_file(text: str, exact: bool = True, eps: float = 0.0) -> Polygon:
    lines = _Lines(text)
    poly = _read_polygon(lines, exact, eps)
    lines.finish()
    return poly


def parse_partition_file(
    text: str, mode: CongruenceMode = CongruenceMode(), exact: bool = True, eps: float = 0.0
) -> Partition:
    lines = _Lines(text)
    number, tokens = lines.next("'partition'")
    if tokens != ["partition"]:
        raise ParseError("expected 'partition'", line=number)
    region = _read_polygon(lines, exact, eps)
    _, (n,) = lines.header("tiles", 1)
    tiles = tuple(_read_polygon(lines, exact, eps) for _ in range(n))
    lines.finish()
    return Partition(region, tiles, mode, eps)


def parse_tile_sets_file(
    text: str, mode: CongruenceMode = CongruenceMode(), exact: bool = True, eps: float = 0.0
) -> TileSetPartition:
    lines = _Lines(text)
    number, tokens = lines.next("'tileset-partition'")
    if tokens != ["tileset-partition"]:
        raise ParseError("expected 'tileset-partition'", line=number)
    region = _read_polygon(lines, exact, eps)
    _, (count,) = lines.header("sets", 1)
    sets = []
    for expected in range(count):
        number, (index, pieces) = lines.header("set", 2)
        if index != expected:
            raise ParseError(f"expected set {expected}, found set {index}", line=number)
        sets.append(tuple(_read_polygon(lines, exact, eps) for _ in range(pieces)))
    lines.finish()
    try:
        return TileSetPartition(region, tuple(sets), mode, eps)
    except ValidationError as e:
        raise ParseError(str(e)) from e


def parse_grid_file(text: str) -> GridRegion:
    lines = _Lines(text, comments=False)
    header_line, (width, height) = lines.header("grid", 2)
    cells: Set[Cell] = set()
    marked: Set[Cell] = set()
    for offset in range(height):
        row = height - 1 - offset
        number, tokens = lines.next(f"grid row {offset + 1} of {height}", after=header_line)
        text_row = "".join(tokens)
        if len(text_row) != width:
            raise ParseError(f"grid row has {len(text_row)} cells, expected {width}", line=number)
        for col, char in enumerate(text_row):
            if char == "#":
                cells.add((col, row))
            elif char == "P":
                marked.add((col, row))
            elif char != ".":
                raise ParseError(f"unknown grid character '{char}'", line=number)
    partial: Set[PartialCell] = set()
    while not lines.done():
        number, tokens = lines.next("'partial'")
        if tokens[0] != "partial" or len(tokens) != 4:
            raise ParseError("expected 'partial <col> <row> <a>/<b>'", line=number)
        try:
            col, row, fraction = int(tokens[1]), int(tokens[2]), Fraction(tokens[3])
        except (ValueError, ZeroDivisionError) as e:
            raise ParseError(f"malformed partial cell '{' '.join(tokens)}'", line=number) from e
        if (col, row) not in marked:
            raise ParseError(f"partial cell ({col}, {row}) is not marked 'P' in the grid", line=number)
        partial.add(PartialCell(col, row, fraction))
    missing = marked - {(p.col, p.row) for p in partial}
    if missing:
        raise ParseError(f"no fraction given for partial cell(s) {sorted(missing)}", line=header_line)
    try:
        return GridRegion(width, height, frozenset(cells), frozenset(partial))
    except ValidationError as e:
        raise ParseError(str(e), line=header_line) from e


def parse_tile_file(text: str) -> GridTile:
    """A tile is the set of ``#`` cells of a grid file"""
    region = parse_grid_file(text)
    if region.partial_cells:
        raise ParseError("tile files cannot contain partial cells")
    try:
        return grid_tile(region.cells)
    except ValidationError as e:
        raise ParseError(str(e)) from e


def format_polygon(poly: Polygon) -> str:
    rows = [f"polygon {len(poly)}"] + [f"{format_scalar(p.x)} {format_scalar(p.y)}" for p in poly.vertices]
    return "\n".join(rows) + "\n"


def format_partition(part: Partition) -> str:
    return "partition\n" + format_polygon(part.region) + f"tiles {part.n}\n" + "".join(
        format_polygon(t) for t in part.tiles
    )


def format_tile_sets(tsp: TileSetPartition) -> str:
    out = ["tileset-partition\n", format_polygon(tsp.region), f"sets {len(tsp.sets)}\n"]
    for index, tile_set in enumerate(tsp.sets):
        out.append(f"set {index} {len(tile_set)}\n")
        out.extend(format_polygon(piece) for piece in tile_set)
    return "".join(out)


def format_grid(region: GridRegion) -> str:
    partial = {(p.col, p.row): p for p in region.partial_cells}
    rows = [f"grid {region.width} {region.height}"]
    for row in reversed(range(region.height)):
        rows.append(
            "".join(
                "#" if (col, row) in region.cells else "P" if (col, row) in partial else "."
                for col in range(region.width)
            )
        )
    rows.extend(f"partial {p.col} {p.row} {p.fraction}" for p in sorted(partial.values()))
    return "\n".join(rows) + "\n"


def format_tile(tile: GridTile) -> str:
    width = max(c for c, _ in tile.cells) + 1
    height = max(r for _, r in tile.cells) + 1
    return format_grid(GridRegion(width, height, tile.cells))
