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
import os
from typing import Any, Dict, List, Optional, cast

import yaml

from congruent_partitions.errors import ValidationError

DEFAULT_PALETTE: List[str] = [
    "#4e79a7",
    "#f28e2b",
    "#e15759",
    "#76b7b2",
    "#59a14f",
    "#edc948",
    "#b07aa1",
    "#ff9da7",
]


@dataclasses.dataclass(frozen=True)
class CongruenceMode:
    """Which rigid motions may carry one tile onto another

    Parameters
    ----------
    allow_reflection : bool
        Accept mirror images ("flipping over") as congruent, by default True. With False only
        translations and rotations are allowed.
    """

    allow_reflection: bool = True


@dataclasses.dataclass()
class PartitionConfig:
    """Configuration dataclass

    Parameters
    ----------
    approx_eps : float, optional
        Absolute tolerance used when a command runs in approximate mode, by default 1e-9
    allow_reflection : bool, optional
        Default congruence mode for commands that do not pass ``--no-reflection``, by default True
    render_scale : float, optional
        SVG pixels per length unit, by default 40.0
    palette : Optional[List[str]], optional
        Fill colours cycled by tile index when rendering, by default an 8 colour palette
    show_leftover : bool, optional
        Hatch the area of the region not covered by tiles, by default True
    max_workers : int, optional
        Thread pool size for pairwise verification and candidate-tile search, by default 4
    cell_size : str, optional
        Grid cell edge length (a rational string such as ``1`` or ``1/2``) used when lifting grid
        search results to polygons, by default "1"
    """

    approx_eps: float = 1e-9
    allow_reflection: bool = True
    render_scale: float = 40.0
    palette: List[str] = cast(List[str], dataclasses.field(default_factory=lambda: list(DEFAULT_PALETTE)))
    show_leftover: bool = True
    max_workers: int = 4
    cell_size: str = "1"

    @property
    def mode(self) -> CongruenceMode:
        return CongruenceMode(allow_reflection=self.allow_reflection)


def _check_type(name: str, value: Any, expected: Any) -> None:
    if expected is float:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    elif expected is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
    elif expected == List[str]:
        ok = isinstance(value, list) and all(isinstance(v, str) for v in value)
    else:
        ok = isinstance(value, expected)
    if not ok:
        type_name = getattr(expected, "__name__", str(expected))
        raise ValidationError(
            f"Config key {name} must be of type {type_name}, got {value!r}",
            error_info={"key": name, "value": repr(value)},
        )


def load_config(path: str, base: Optional[PartitionConfig] = None) -> PartitionConfig:
    """Load a ``PartitionConfig`` from a YAML file

    Parameters
    ----------
    path : str
        Location of the YAML document. Keys match the ``PartitionConfig`` field names.
    base : Optional[PartitionConfig], optional
        Configuration the file values are layered over, by default the ``PartitionConfig`` defaults

    Returns
    -------
    PartitionConfig
        The configuration with file values overriding ``base``

    Raises
    ------
    ValidationError
        If the file is missing, is not a mapping, names unknown keys or holds a value of the wrong type
    """
    base = base or PartitionConfig()
    if not os.path.isfile(path):
        raise ValidationError(f"Config file not found: {path}")
    with open(path, "r") as file:
        content = yaml.safe_load(file)
    if content is None:
        return base
    if not isinstance(content, dict):
        raise ValidationError(f"Config file {path} must contain a mapping")
    fields = {f.name: f.type for f in dataclasses.fields(PartitionConfig)}
    unknown = sorted(set(content) - set(fields))
    if unknown:
        raise ValidationError(f"Unknown config keys: {', '.join(unknown)}", error_info={"path": path})
    values: Dict[str, Any] = dict(content)
    for name, value in values.items():
        _check_type(name, value, fields[name])
    config = dataclasses.replace(base, **values)
    if config.render_scale <= 0:
        raise ValidationError("render_scale must be positive")
    if config.approx_eps <= 0:
        raise ValidationError("approx_eps must be positive")
    if config.max_workers < 1:
        raise ValidationError("max_workers must be at least 1")
    if not config.palette:
        raise ValidationError("palette must not be empty")
    return config
