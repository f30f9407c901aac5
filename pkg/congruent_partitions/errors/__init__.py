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

from congruent_partitions.errors._partition_errors import (
    ComparisonError,
    ParseError,
    PartitionRuntimeError,
    PreconditionError,
    SearchError,
    StatsUndefinedError,
    ValidationError,
)

__all__ = [
    "ComparisonError",
    "ParseError",
    "PartitionRuntimeError",
    "PreconditionError",
    "SearchError",
    "StatsUndefinedError",
    "ValidationError",
]
