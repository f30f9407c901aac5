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

import logging
import os
from importlib import metadata
from typing import Optional

from congruent_partitions.__metadata__ import __description__, __license__, __title__
from congruent_partitions._classes import CongruenceMode, PartitionConfig, load_config

try:
    __version__: str = metadata.version(__title__)
except metadata.PackageNotFoundError:
    __version__ = "0.0.0"

LOGGER: logging.Logger = logging.getLogger(__name__)

CLI_ROOT = os.path.dirname(os.path.abspath(__file__))
"""Absolute path of the package directory

Used internally to locate the fixture files shipped in ``resources/``
"""

RESOURCES_ROOT = os.path.join(CLI_ROOT, "resources")
"""Absolute path of the shipped fixture files (Friedman pentagon, grids, tiles)"""


__all__ = [
    "__description__",
    "__license__",
    "__title__",
    "__version__",
    "CongruenceMode",
    "PartitionConfig",
    "LOGGER",
    "CLI_ROOT",
    "RESOURCES_ROOT",
    "get_logger",
    "load_config",
    "resource_path",
]


def resource_path(name: str) -> str:
    """Helper function returning the absolute path of a shipped fixture file

    Parameters
    ----------
    name : str
        File name inside the ``resources`` directory, e.g. ``friedman.partition``

    Returns
    -------
    str
        Full path of the fixture file
    """
    return os.path.join(RESOURCES_ROOT, name)


def get_logger(level: int, format: Optional[str] = None) -> logging.Logger:
    """Helper function set LOG_LEVEL and optional log FORMAT

    Parameters
    ----------
    level : int
        logger.LOG_LEVEL
    format : Optional[str], optional
        Optional string format to apply to log lines, by default None
    """
    kwargs = {"level": level}
    if format:
        kwargs["format"] = format  # type: ignore
    logging.basicConfig(**kwargs)  # type: ignore
    LOGGER.setLevel(level=level)
    return LOGGER
