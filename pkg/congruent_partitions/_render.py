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

"""Deterministic SVG rendering of partitions and grid search results"""

import dataclasses
import xml.etree.ElementTree as ET
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from congruent_partitions import LOGGER
from congruent_partitions._classes import DEFAULT_PALETTE
from congruent_partitions.errors import ValidationError
from congruent_partitions.geometry import Point, Polygon, Scalar, bounding_box
from congruent_partitions.partition import Partition, verify
from congruent_partitions.search.grid import Cell
from congruent_partitions.search.lift import trace_outline
from congruent_partitions.search.solver import SearchResult

MARGIN = 10.0
HATCH_ID = "leftover-hatch"


@dataclasses.dataclass(frozen=True)
class RenderSpec:
    """Rendering options

    Parameters
    ----------
    output : Optional[str]
        File to write the SVG to; None only returns the document
    scale : float
        Pixels per length unit, must be positive
    palette : Tuple[str, ...]
        Tile fill colours, cycled by tile index
    show_leftover : bool
        Hatch the part of the region not covered by tiles
    """

    output: Optional[str] = None
    scale: float = 40.0
    palette: Tuple[str, ...] = tuple(DEFAULT_PALETTE)
    show_leftover: bool = True

    def __post_init__(self) -> None:
        if self.scale <= 0:
            raise ValidationError(f"Render scale must be positive, got {self.scale}")
        if not self.palette:
            raise ValidationError("Render palette must not be empty")


class _Canvas:
    def __init__(self, box: Tuple[Scalar, Scalar, Scalar, Scalar], scale: float):
        self.min_x, self.min_y, max_x, self.max_y = (float(v) for v in box)
        self.scale = scale
        width = (max_x - self.min_x) * scale + 2 * MARGIN
        height = (self.max_y - self.min_y) * scale + 2 * MARGIN
        self.root = ET.Element(
            "svg",
            xmlns="http://www.w3.org/2000/svg",
            version="1.1",
            width=f"{width:.3f}",
            height=f"{height:.3f}",
            viewBox=f"0 0 {width:.3f} {height:.3f}",
        )

    def add_hatch(self) -> None:
        defs = ET.SubElement(self.root, "defs")
        pattern = ET.SubElement(
            defs,
            "pattern",
            id=HATCH_ID,
            patternUnits="userSpaceOnUse",
            width="8",
            height="8",
            patternTransform="rotate(45)",
        )
        ET.SubElement(pattern, "line", x1="0", y1="0", x2="0", y2="8", stroke="#555555", attrib={"stroke-width": "2"})

    def path(
        self, outline: Sequence[Point], fill: str, stroke: str = "#222222", extra: Optional[Dict[str, str]] = None
    ) -> None:
        d = "M" + " L".join(self._xy(p) for p in outline) + " Z"
        ET.SubElement(self.root, "path", d=d, fill=fill, stroke=stroke, attrib={"stroke-width": "1", **(extra or {})})

    def _xy(self, p: Point) -> str:
        # y grows downwards in SVG
        x = MARGIN + (float(p.x) - self.min_x) * self.scale
        y = MARGIN + (self.max_y - float(p.y)) * self.scale
        return f"{x:.3f} {y:.3f}"

    def document(self) -> str:
        return '<?xml version="1.0" encoding="UTF-8"?>\n' + ET.tostring(self.root, encoding="unicode") + "\n"


def _draw(
    canvas: _Canvas,
    region: Iterable[Polygon],
    tiles: Sequence[Sequence[Polygon]],
    hatched: bool,
    spec: RenderSpec,
    partial: Iterable[Tuple[Polygon, Fraction]] = (),
) -> str:
    if hatched:
        canvas.add_hatch()
    background = f"url(#{HATCH_ID})" if hatched else "#ffffff"
    for outline in region:
        canvas.path(outline.vertices, fill=background, stroke="#000000")
    for square, fraction in partial:
        canvas.path(
            square.vertices,
            fill=background,
            stroke="#000000",
            extra={"fill-opacity": f"{float(fraction):.3f}", "stroke-dasharray": "4 2"},
        )
    for index, pieces in enumerate(tiles):
        for piece in pieces:
            canvas.path(piece.vertices, fill=spec.palette[index % len(spec.palette)])
    document = canvas.document()
    if spec.output:
        with open(spec.output, "w") as file:
            file.write(document)
        LOGGER.info("Wrote %s", spec.output)
    return document


def render_partition(part: Partition, spec: RenderSpec) -> str:
    hatched = spec.show_leftover and verify(part).leftover_area > 0
    canvas = _Canvas(bounding_box(part.region), spec.scale)
    return _draw(canvas, [part.region], [[tile] for tile in part.tiles], hatched, spec)


def _cell_square(cell: Cell) -> Polygon:
    c, r = cell
    x, y = Fraction(c), Fraction(r)
    return Polygon((Point(x, y), Point(x + 1, y), Point(x + 1, y + 1), Point(x, y + 1)))


def _tile_pieces(cells: FrozenSet[Cell]) -> List[Polygon]:
    try:
        return [trace_outline(cells)]
    except ValidationError:
        LOGGER.debug("Tile outline is not simple, drawing its %s cells", len(cells))
        return [_cell_square(cell) for cell in sorted(cells, key=lambda cell: (cell[1], cell[0]))]


def render_search_result(
    result: SearchResult, spec: RenderSpec, region_poly: Optional[Polygon] = None, cell_size: Fraction = Fraction(1)
) -> str:
    """Region cells and tile outlines in cell units

    With ``region_poly`` (the polygon the grid was discretized from at ``cell_size``) the polygon
    is drawn underneath the full cells, so partial cells show their true shape. Without it each
    partial cell is a dashed square whose opacity is its area fraction.
    """
    region = result.region
    squares: List[Polygon] = [_cell_square(cell) for cell in region.sorted_cells()]
    partial: List[Tuple[Polygon, Fraction]] = []
    if region_poly is not None:
        squares.insert(
            0, Polygon(tuple(Point(Fraction(p.x) / cell_size, Fraction(p.y) / cell_size) for p in region_poly.vertices))
        )
    else:
        partial = [(_cell_square((p.col, p.row)), p.fraction) for p in sorted(region.partial_cells)]
    tiles = [_tile_pieces(p.cells) for p in result.placements]
    hatched = spec.show_leftover and result.leftover_area > 0
    canvas = _Canvas((Fraction(0), Fraction(0), Fraction(region.width), Fraction(region.height)), spec.scale)
    return _draw(canvas, squares, tiles, hatched, spec, partial)


def render(
    obj: Union[Partition, SearchResult],
    spec: RenderSpec,
    region_poly: Optional[Polygon] = None,
    cell_size: Fraction = Fraction(1),
) -> str:
    """SVG document for a partition or a search result, also written to ``spec.output`` if set

    ``region_poly`` and ``cell_size`` only apply to search results; see ``render_search_result``.
    """
    if isinstance(obj, SearchResult):
        return render_search_result(obj, spec, region_poly, cell_size)
    return render_partition(obj, spec)
