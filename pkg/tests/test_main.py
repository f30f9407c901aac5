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

import pytest
from click.testing import CliRunner

from congruent_partitions import PartitionConfig, __main__, resource_path
from congruent_partitions._formats import parse_partition_file, parse_tile_sets_file
from congruent_partitions.commands import CommandReport

L_SHAPE = "polygon 6\n0 0\n2 0\n2 1\n1 1\n1 3\n0 3\n"
J_SHAPE = "polygon 6\n2 0\n4 0\n4 3\n3 3\n3 1\n2 1\n"
TRIANGLE = "polygon 3\n0 0\n4 0\n1 3\n"
RECTANGLE = "polygon 4\n0 0\n6 0\n6 2\n0 2\n"


@pytest.fixture
def write(tmp_path):
    def _write(name: str, content: str) -> str:
        path = tmp_path / name
        path.write_text(content)
        return str(path)

    return _write


def _invoke(*args: str):
    return CliRunner().invoke(__main__.cli, list(args))


def test_verify_friedman(friedman_partition_path):
    result = _invoke("verify", friedman_partition_path, "--debug")
    assert result.exit_code == 0
    assert "leftover=1/2" in result.output
    assert "fraction=1/41" in result.output
    assert "perfect=false" in result.output
    assert "valid=true" in result.output


def test_verify_render(friedman_partition_path, tmp_path):
    svg = tmp_path / "friedman.svg"
    result = _invoke("verify", friedman_partition_path, "--render", str(svg))
    assert result.exit_code == 0
    assert svg.read_text().startswith("<?xml")


def test_verify_mocked(mocker, friedman_partition_path):
    mocked = mocker.patch(
        "congruent_partitions.__main__.commands.verify_partition", return_value=CommandReport(False, ["no"])
    )
    result = _invoke("verify", friedman_partition_path, "--no-reflection")
    assert result.exit_code == 1
    assert mocked.call_args.args[1].allow_reflection is False


def test_congruent(friedman_poly_path, write):
    result = _invoke("congruent", friedman_poly_path, friedman_poly_path)
    assert result.exit_code == 0
    assert "congruent=true" in result.output
    triangle = write("triangle.poly", TRIANGLE)
    assert _invoke("congruent", friedman_poly_path, triangle).exit_code == 1


def test_congruent_reflection(write):
    l_path, j_path = write("l.poly", L_SHAPE), write("j.poly", J_SHAPE)
    assert _invoke("congruent", l_path, j_path).exit_code == 0
    assert _invoke("congruent", l_path, j_path, "--no-reflection").exit_code == 1
    assert _invoke("congruent", l_path, j_path, "--approx", "1e-9").exit_code == 0


def test_config_file(write):
    l_path, j_path = write("l.poly", L_SHAPE), write("j.poly", J_SHAPE)
    config = write("config.yaml", "allow_reflection: false\n")
    assert _invoke("congruent", l_path, j_path, "--config", config).exit_code == 1
    bad = write("bad.yaml", "colour: red\n")
    result = _invoke("congruent", l_path, j_path, "--config", bad)
    assert result.exit_code == 2
    assert "Unknown config keys: colour" in result.output


def test_config_file_wrong_type(write):
    l_path, j_path = write("l.poly", L_SHAPE), write("j.poly", J_SHAPE)
    bad = write("bad.yaml", "render_scale: big\n")
    result = _invoke("congruent", l_path, j_path, "--config", bad)
    assert result.exit_code == 2
    assert "render_scale" in result.output


def test_shipped_config_is_base_layer(mocker, write):
    l_path, j_path = write("l.poly", L_SHAPE), write("j.poly", J_SHAPE)
    config = write("config.yaml", "render_scale: 10.0\n")
    spy = mocker.spy(__main__, "load_config")
    assert _invoke("congruent", l_path, j_path, "--config", config).exit_code == 0
    assert spy.call_count == 2
    assert spy.call_args_list[0].args[0] == resource_path("config.yaml")
    assert spy.call_args_list[1].args[0] == config
    assert spy.call_args_list[1].kwargs["base"] == PartitionConfig()


def test_parse_error_exit_code(write):
    broken = write("broken.partition", "partition\npolygon 3\n0 0\n1 0\n")
    result = _invoke("verify", broken)
    assert result.exit_code == 2
    assert "line 2" in result.output


def test_stats(write, tmp_path):
    output = str(tmp_path / "quarter.partition")
    assert _invoke("construct", "quarter", write("t.poly", TRIANGLE), "-o", output).exit_code == 0
    result = _invoke("stats", output)
    assert result.exit_code == 0
    assert "r=3" in result.output and "m=0" in result.output
    assert "eq2_holds=true" in result.output


def test_stats_not_perfect(friedman_partition_path):
    assert _invoke("stats", friedman_partition_path).exit_code == 2


def test_render(friedman_partition_path, tmp_path):
    svg = tmp_path / "out.svg"
    result = _invoke("render", friedman_partition_path, "--output", str(svg), "--scale", "10", "--no-leftover")
    assert result.exit_code == 0
    assert "tiles=5" in result.output
    assert 'width="90.000"' in svg.read_text()
    assert _invoke("render", friedman_partition_path, "--output", str(svg), "--scale", "0").exit_code == 2


def test_construct(write, tmp_path):
    rectangle = write("r.poly", RECTANGLE)
    strips = str(tmp_path / "strips.partition")
    result = _invoke("construct", "strips", rectangle, "--n", "3", "--output", strips)
    assert result.exit_code == 0
    assert "perfect=true" in result.output
    with open(strips) as file:
        assert parse_partition_file(file.read()).n == 3

    sets = str(tmp_path / "sets.tilesets")
    assert _invoke("construct", "sets", rectangle, "--s", "2", "-o", sets).exit_code == 0
    with open(sets) as file:
        assert len(parse_tile_sets_file(file.read()).sets) == 4

    eq3 = str(tmp_path / "eq3.partition")
    assert _invoke("construct", "eq3", "-o", eq3).exit_code == 0
    assert os.path.isfile(eq3)

    assert _invoke("construct", "strips", write("t.poly", TRIANGLE), "--n", "2", "-o", strips).exit_code == 2
    assert _invoke("construct", "quarter", rectangle).exit_code == 2


def test_bounds_check():
    result = _invoke("bounds", "check", "--p", "3", "--n", "3", "--k", "4", "--r", "3", "--m", "1")
    assert result.exit_code == 0
    assert "ineq1_holds=true" in result.output and "eq2_holds=true" in result.output
    assert "alpha=1" in result.output
    failing = _invoke("bounds", "check", "--p", "4", "--n", "2", "--k", "6", "--r", "0", "--m", "0")
    assert failing.exit_code == 1
    assert _invoke("bounds", "check", "--p", "2", "--n", "2", "--k", "3", "--r", "0", "--m", "0").exit_code == 2


def test_bounds_enumerate():
    result = _invoke("bounds", "enumerate", "--max-p", "20", "--max-n", "50", "--max-r", "50", "--no-table")
    assert result.exit_code == 0
    assert "max_p=4" in result.output and "max_k=5" in result.output
    table = _invoke("bounds", "enumerate", "--max-p", "4", "--max-n", "3", "--max-r", "3")
    assert "3 3 4 3 1" in table.output
    none = _invoke("bounds", "enumerate", "--max-p", "20", "--max-n", "50", "--max-r", "50", "--min-alpha", "4")
    assert none.exit_code == 1
    assert "max_p=none" in none.output


def test_search_tile_lift(friedman_grid_path, l_tetromino_path, friedman_poly_path, tmp_path):
    output = tmp_path / "lifted.partition"
    svg = tmp_path / "search.svg"
    result = _invoke(
        "search",
        "tile",
        "--region",
        friedman_grid_path,
        "--tile",
        l_tetromino_path,
        "--n",
        "5",
        "--lift",
        friedman_poly_path,
        "--output",
        str(output),
        "--render",
        str(svg),
    )
    assert result.exit_code == 0
    assert "covered=20" in result.output
    assert "lifted_leftover=1/2" in result.output and "lifted_fraction=1/41" in result.output
    assert _invoke("verify", str(output)).exit_code == 0
    assert svg.exists()
    assert "stroke-dasharray" not in svg.read_text()


def test_search_tile_no_solution(write):
    region = write("strip.grid", "grid 4 1\n####\n")
    tile = write("s.grid", "grid 3 2\n.##\n##.\n")
    result = _invoke("search", "tile", "--region", region, "--tile", tile, "--n", "1")
    assert result.exit_code == 1
    assert "found=false" in result.output


def test_search_tile_best_partial(write):
    region = write("square.grid", "grid 3 3\n###\n###\n###\n")
    tile = write("domino.grid", "grid 2 1\n##\n")
    result = _invoke("search", "tile", "--region", region, "--tile", tile, "--n", "4", "--best-partial")
    assert result.exit_code == 0
    assert "covered=8" in result.output and "leftover=1" in result.output
    too_many = _invoke("search", "tile", "--region", region, "--tile", tile, "--n", "5", "--best-partial")
    assert too_many.exit_code == 2


def test_search_tile_bad_cell_size(friedman_grid_path, l_tetromino_path):
    args = ["search", "tile", "--region", friedman_grid_path, "--tile", l_tetromino_path, "--n", "5"]
    assert _invoke(*args, "--cell-size", "-1").exit_code == 2


def test_search_auto(friedman_grid_path):
    result = _invoke("search", "auto", "--region", friedman_grid_path, "--n", "5")
    assert result.exit_code == 0
    assert "tile_cells=4" in result.output and "leftover=1/2" in result.output


def test_dispatch(friedman_partition_path, capsys):
    assert __main__.dispatch(["verify", friedman_partition_path]) == 0
    assert "leftover=1/2" in capsys.readouterr().out
    assert __main__.dispatch(["no-such-command"]) == 2
    assert __main__.dispatch(["bounds", "check", "--p", "4", "--n", "2", "--k", "6", "--r", "0", "--m", "0"]) == 1
