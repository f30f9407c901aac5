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

import dataclasses
from fractions import Fraction
from typing import Dict, List, Union

from congruent_partitions.geometry import format_scalar

Value = Union[bool, int, float, Fraction, str, None]


def format_value(value: Value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (Fraction, float)):
        return format_scalar(value)
    return str(value)


@dataclasses.dataclass()
class CommandReport:
    """Outcome of one command: human readable lines, then a ``key=value`` block after ``---``

    ``verdict`` is False for negative answers (not congruent, not valid, no tiling), which the
    CLI turns into exit code 1.
    """

    verdict: bool
    lines: List[str] = dataclasses.field(default_factory=list)
    values: Dict[str, str] = dataclasses.field(default_factory=dict)

    def add(self, key: str, value: Value) -> None:
        self.values[key] = format_value(value)

    def text(self) -> str:
        block = [f"{key}={value}" for key, value in self.values.items()]
        return "\n".join(self.lines + ["---"] + block) + "\n"

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict else 1


def read_text(path: str) -> str:
    with open(path, "r") as file:
        return file.read()


def write_text(path: str, content: str) -> None:
    with open(path, "w") as file:
        file.write(content)
