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

from congruent_partitions.search.grid import (
    Cell,
    GridRegion,
    GridTile,
    PartialCell,
    canonical_tile,
    enumerate_tiles,
    friedman_polygon,
    friedman_region,
    grid_tile,
    l_tetromino,
    region_symmetries,
    symmetries,
)
from congruent_partitions.search.lift import discretize, lift_to_partition, trace_outline
from congruent_partitions.search.solver import (
    Placement,
    SearchResult,
    best_partial,
    count_tilings,
    enumerate_placements,
    greedy_partial,
    perfect_tiling,
    search_auto,
)

__all__ = [
    "Cell",
    "GridRegion",
    "GridTile",
    "PartialCell",
    "Placement",
    "SearchResult",
    "best_partial",
    "canonical_tile",
    "count_tilings",
    "discretize",
    "enumerate_placements",
    "enumerate_tiles",
    "friedman_polygon",
    "friedman_region",
    "greedy_partial",
    "grid_tile",
    "l_tetromino",
    "lift_to_partition",
    "perfect_tiling",
    "region_symmetries",
    "search_auto",
    "symmetries",
    "trace_outline",
]
