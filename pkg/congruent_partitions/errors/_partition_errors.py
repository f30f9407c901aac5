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

from typing import Dict, Optional


class PartitionRuntimeError(RuntimeError):
    def __init__(self, *args: str, error_info: Optional[Dict[str, str]] = None):
        super().__init__(*args)
        self.error_info = error_info


class ValidationError(PartitionRuntimeError, ValueError):
    """Invalid geometric input: degenerate or self-intersecting polygons, bad motions, bad grids"""


class ParseError(ValidationError):
    """Malformed input file, reported with the offending line number when known"""

    def __init__(self, message: str, line: Optional[int] = None, error_info: Optional[Dict[str, str]] = None):
        super().__init__(f"line {line}: {message}" if line is not None else message, error_info=error_info)
        self.line = line


class PreconditionError(PartitionRuntimeError):
    pass


class StatsUndefinedError(PartitionRuntimeError):
    pass


class ComparisonError(PartitionRuntimeError):
    pass


class SearchError(PartitionRuntimeError):
    pass
