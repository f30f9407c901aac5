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

from congruent_partitions.commands._bounds_commands import bounds_check, bounds_enumerate
from congruent_partitions.commands._partition_commands import (
    congruent_polygons,
    construct_eq3,
    construct_quarter,
    construct_sets,
    construct_strips,
    partition_stats,
    render_partition_file,
    verify_partition,
)
from congruent_partitions.commands._report import CommandReport
from congruent_partitions.commands._search_commands import search_auto_command, search_tile

__all__ = [
    "CommandReport",
    "bounds_check",
    "bounds_enumerate",
    "congruent_polygons",
    "construct_eq3",
    "construct_quarter",
    "construct_sets",
    "construct_strips",
    "partition_stats",
    "render_partition_file",
    "search_auto_command",
    "search_tile",
    "verify_partition",
]
