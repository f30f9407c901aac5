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

import os
from io import open
from typing import Dict

from setuptools import find_packages, setup

here = os.path.abspath(os.path.dirname(__file__))
about: Dict[str, str] = {}
path = os.path.join(here, "congruent_partitions", "__metadata__.py")
with open(file=path, mode="r", encoding="utf-8") as f:
    exec(f.read(), about)

with open(os.path.join(here, "VERSION"), "r") as version_file:
    version = version_file.read().strip()

with open(os.path.join(here, "README.md")) as fp:
    long_description = fp.read()

setup(
    name=about["__title__"],
    version=version,
    author="The congruent-partitions Authors",
    description=about["__description__"],
    long_description=long_description,
    long_description_content_type="text/markdown",
    license=about["__license__"],
    packages=find_packages(include=["congruent_partitions", "congruent_partitions.*"]),
    package_data={"congruent_partitions": ["resources/*"]},
    keywords=["geometry", "polygon", "partition", "tiling", "polyomino"],
    python_requires=">=3.8, <3.13",
    install_requires=[
        "pyyaml>=5.4",
        "click>=8.0.0",
        "mypy_extensions>=0.4.3",
    ],
    entry_points={"console_scripts": ["congruent-partitions = congruent_partitions.__main__:main"]},
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Programming Language :: Python :: 3 :: Only",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Typing :: Typed",
    ],
    include_package_data=True,
)
