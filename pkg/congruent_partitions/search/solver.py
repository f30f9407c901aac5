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

"""Exact-cover and best-coverage search for placements of one polyomino in a grid region"""

import concurrent.futures
import dataclasses
import functools
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from mypy_extensions import NamedArg

from congruent_partitions import LOGGER
from congruent_partitions._classes import CongruenceMode
from congruent_partitions.errors import SearchError, ValidationError
from congruent_partitions.search.grid import (
    Cell,
    GridRegion,
    GridTile,
    enumerate_tiles,
    oriented,
    region_symmetries,
    region_transform,
    transform_cells,
)


@functools.lru_cache(maxsize=None)
def _image(tile: GridTile, symmetry: int) -> FrozenSet[Cell]:
    return transform_cells(tile.cells, symmetry)


@dataclasses.dataclass(frozen=True)
class Placement:
    tile: GridTile
    symmetry: int
    offset: Cell

    @property
    def cells(self) -> FrozenSet[Cell]:
        dc, dr = self.offset
        return frozenset((c + dc, r + dr) for c, r in _image(self.tile, self.symmetry))


@dataclasses.dataclass(frozen=True)
class SearchResult:
    """Disjoint placements of one tile and the area they leave uncovered

    ``leftover_area`` is measured in cells: uncovered full cells plus every partial-cell fraction.
    """

    region: GridRegion
    tile: GridTile
    placements: Tuple[Placement, ...]
    covered_cells: int
    leftover_area: Fraction

    @property
    def n(self) -> int:
        return len(self.placements)


SearchCallback = Callable[[NamedArg(SearchResult, "result")], None]  # noqa: F821


def _result(region: GridRegion, tile: GridTile, placements: Sequence[Placement]) -> SearchResult:
    covered = sum(len(p.cells) for p in placements)
    return SearchResult(
        region=region,
        tile=tile,
        placements=tuple(placements),
        covered_cells=covered,
        leftover_area=region.area - covered,
    )


def enumerate_placements(
    region: GridRegion, tile: GridTile, mode: CongruenceMode = CongruenceMode()
) -> List[Placement]:
    """Every placement of every image of ``tile`` inside the full cells of ``region``

    Ordered by symmetry index, then by offset row, then by offset column.
    """
    placements: List[Placement] = []
    for index, image in oriented(tile, mode):
        for row in range(region.height):
            for col in range(region.width):
                if all((c + col, r + row) in region.cells for c, r in image):
                    placements.append(Placement(tile, index, (col, row)))
    LOGGER.debug("%s placements of a %s-cell tile in %s cells", len(placements), len(tile), len(region.cells))
    return placements


class _ExactCover:
    """Algorithm X over a cell -> placement-index incidence map"""

    def __init__(self, region: GridRegion, placements: Sequence[Placement]):
        self.columns: Dict[Cell, Set[int]] = {cell: set() for cell in region.cells}
        self.rows: List[List[Cell]] = []
        for index, placement in enumerate(placements):
            row = sorted(placement.cells)
            self.rows.append(row)
            for cell in row:
                self.columns[cell].add(index)
        self.nodes = 0

    def _select(self, r: int) -> List[Set[int]]:
        removed = []
        for cell in self.rows[r]:
            for other in self.columns[cell]:
                for other_cell in self.rows[other]:
                    if other_cell != cell:
                        self.columns[other_cell].discard(other)
            removed.append(self.columns.pop(cell))
        return removed

    def _deselect(self, r: int, removed: List[Set[int]]) -> None:
        for cell in reversed(self.rows[r]):
            self.columns[cell] = removed.pop()
            for other in self.columns[cell]:
                for other_cell in self.rows[other]:
                    if other_cell != cell:
                        self.columns[other_cell].add(other)

    def solve(self, chosen: Optional[List[int]] = None) -> Iterator[List[int]]:
        chosen = [] if chosen is None else chosen
        self.nodes += 1
        if not self.columns:
            yield sorted(chosen)
            return
        # most constrained cell first, ties broken row-major
        cell = min(self.columns, key=lambda c: (len(self.columns[c]), c[1], c[0]))
        for r in sorted(self.columns[cell]):
            chosen.append(r)
            removed = self._select(r)
            yield from self.solve(chosen)
            self._deselect(r, removed)
            chosen.pop()


def perfect_tiling(
    region: GridRegion, tile: GridTile, n: int, mode: CongruenceMode = CongruenceMode()
) -> Optional[SearchResult]:
    """First exact cover of the full cells by ``n`` placements, or None if none exists

    Parameters
    ----------
    region : GridRegion
        Region whose full cells must each be covered exactly once
    tile : GridTile
        The tile shape
    n : int
        Number of tiles; the cell counts must satisfy ``|cells| == n * |tile|``
    mode : CongruenceMode, optional
        Whether mirrored placements are allowed, by default True

    Returns
    -------
    Optional[SearchResult]
        The first solution in search order, its placements sorted in enumeration order

    Notes
    -----
    The search branches on the cell with the fewest candidate placements (ties row-major) and
    tries placements in enumeration order. The returned cover is the first one reached in that
    order, which is deterministic but is not necessarily the lexicographically least cover.
    Region symmetries are not pruned during the search; ``count_tilings`` reduces solutions
    by symmetry after they are found. Neither choice changes whether a cover exists.
    """
    if n < 0:
        raise ValidationError(f"Tile count must not be negative, got {n}")
    if len(region.cells) != n * len(tile):
        LOGGER.debug("No exact cover: %s cells vs %s x %s", len(region.cells), n, len(tile))
        return None
    placements = enumerate_placements(region, tile, mode)
    solver = _ExactCover(region, placements)
    solution = next(solver.solve(), None)
    LOGGER.debug("Exact cover search visited %s nodes", solver.nodes)
    if solution is None:
        return None
    return _result(region, tile, [placements[i] for i in solution])


class _BranchAndBound:
    def __init__(self, region: GridRegion, tile: GridTile, n: int, placements: Sequence[Placement]):
        self.order = region.sorted_cells()
        self.placements = placements
        self.size = len(tile)
        self.n = n
        self.target = min(n * self.size, len(self.order))
        self.by_anchor: Dict[Cell, List[int]] = {}
        for index, placement in enumerate(placements):
            anchor = min(placement.cells, key=lambda c: (c[1], c[0]))
            self.by_anchor.setdefault(anchor, []).append(index)
        self.best: List[int] = []
        self.best_covered = 0
        self.nodes = 0
        self.pruned = 0

    def run(self) -> List[int]:
        if self.n > 0:
            self._search(0, set(), [], 0)
        return sorted(self.best)

    def _search(self, pos: int, covered: Set[Cell], chosen: List[int], skipped: int) -> None:
        self.nodes += 1
        covered_count = len(chosen) * self.size
        if covered_count > self.best_covered:
            self.best, self.best_covered = list(chosen), covered_count
        if self.best_covered >= self.target or len(chosen) == self.n:
            return
        free = len(self.order) - covered_count - skipped
        if covered_count + min((self.n - len(chosen)) * self.size, free) <= self.best_covered:
            self.pruned += 1
            return
        while pos < len(self.order) and self.order[pos] in covered:
            pos += 1
        if pos == len(self.order):
            return
        for index in self.by_anchor.get(self.order[pos], []):
            cells = self.placements[index].cells
            if not cells.isdisjoint(covered):
                continue
            chosen.append(index)
            covered |= cells
            self._search(pos + 1, covered, chosen, skipped)
            covered -= cells
            chosen.pop()
            if self.best_covered >= self.target:
                return
        # leave this cell uncovered
        self._search(pos + 1, covered, chosen, skipped + 1)


def best_partial(
    region: GridRegion, tile: GridTile, n: int, mode: CongruenceMode = CongruenceMode()
) -> SearchResult:
    """Branch and bound for ``n`` disjoint placements covering as many full cells as possible

    Cells are visited in row-major order; at each first free cell the search tries every
    placement anchored there before leaving the cell uncovered. The first optimum found wins.

    Raises
    ------
    SearchError
        If ``n`` tiles need more cells than the region holds
    """
    if n < 0:
        raise ValidationError(f"Tile count must not be negative, got {n}")
    if n * len(tile) > len(region.cells) + len(region.partial_cells):
        raise SearchError(
            f"{n} tiles of {len(tile)} cells cannot fit in {len(region.cells)} cells",
            error_info={"n": str(n), "tile_cells": str(len(tile))},
        )
    placements = enumerate_placements(region, tile, mode)
    search = _BranchAndBound(region, tile, n, placements)
    solution = search.run()
    LOGGER.debug("Branch and bound visited %s nodes, pruned %s", search.nodes, search.pruned)
    return _result(region, tile, [placements[i] for i in solution])


def greedy_partial(
    region: GridRegion, tile: GridTile, n: int, mode: CongruenceMode = CongruenceMode()
) -> SearchResult:
    """Take placements in enumeration order whenever they fit, up to ``n``"""
    covered: Set[Cell] = set()
    chosen: List[Placement] = []
    for placement in enumerate_placements(region, tile, mode):
        if len(chosen) == n:
            break
        if placement.cells.isdisjoint(covered):
            chosen.append(placement)
            covered |= placement.cells
    return _result(region, tile, chosen)


def count_tilings(
    region: GridRegion,
    tile: GridTile,
    n: int,
    mode: CongruenceMode = CongruenceMode(),
    up_to_symmetry: bool = True,
    callback: Optional[SearchCallback] = None,
) -> int:
    """Count exact covers of the region by ``n`` copies of ``tile``

    Parameters
    ----------
    region : GridRegion
        Region to cover
    tile : GridTile
        Tile shape
    n : int
        Number of tiles
    mode : CongruenceMode, optional
        Congruence mode for tile images and region symmetries, by default reflections allowed
    up_to_symmetry : bool, optional
        Count tilings related by a symmetry of the region once, by default True
    callback : Optional[SearchCallback], optional
        Called with ``result=`` for every counted tiling, by default None

    Returns
    -------
    int
        Number of distinct tilings
    """
    if len(region.cells) != n * len(tile):
        return 0
    placements = enumerate_placements(region, tile, mode)
    maps = [region_transform(region, i) for i in region_symmetries(region, mode)] if up_to_symmetry else []
    seen: Set[Tuple[Tuple[Cell, ...], ...]] = set()
    count = 0
    for solution in _ExactCover(region, placements).solve():
        chosen = [placements[i] for i in solution]
        if up_to_symmetry:
            key = min(
                tuple(sorted(tuple(sorted(func(c, r) for c, r in p.cells)) for p in chosen)) for func in maps
            )
            if key in seen:
                continue
            seen.add(key)
        count += 1
        if callback is not None:
            callback(result=_result(region, tile, chosen))
    LOGGER.debug("Counted %s tilings (up_to_symmetry=%s)", count, up_to_symmetry)
    return count


def _try_tile(region: GridRegion, tile: GridTile, n: int, mode: CongruenceMode) -> Optional[SearchResult]:
    if len(region.cells) == n * len(tile):
        return perfect_tiling(region, tile, n, mode)
    return best_partial(region, tile, n, mode)


def search_auto(
    region: GridRegion, n: int, mode: CongruenceMode = CongruenceMode(), max_workers: Optional[int] = None
) -> Optional[SearchResult]:
    """Try every polyomino of ``|cells| // n`` cells and keep the best outcome

    When the full cells divide evenly, the first tile (in enumeration order) admitting an exact
    cover wins. Otherwise each tile gets a best-coverage search and the least leftover wins,
    ties going to the earlier tile. Candidates run on a thread pool; results are merged in tile
    order so the outcome does not depend on scheduling.
    """
    if n < 1:
        raise ValidationError(f"Tile count must be at least 1, got {n}")
    size = len(region.cells) // n
    if size < 1:
        raise SearchError(f"{n} tiles cannot share {len(region.cells)} cells")
    tiles = enumerate_tiles(size, mode)
    LOGGER.debug("Trying %s candidate tiles of %s cells", len(tiles), size)
    try_one = functools.partial(_try_tile, region, n=n, mode=mode)
    if max_workers and max_workers > 1:
        with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
            outcomes = list(executor.map(try_one, tiles))
    else:
        outcomes = [try_one(tile) for tile in tiles]
    best: Optional[SearchResult] = None
    for outcome in outcomes:
        if outcome is not None and (best is None or outcome.leftover_area < best.leftover_area):
            best = outcome
    return best
