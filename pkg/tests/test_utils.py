import json
from dataclasses import dataclass, field
from pathlib import Path

import pytest

import markoff
from markoff.configs import CantorConfig, CensusConfig, FiguresConfig, SweepConfig, VerifyConfig
from markoff.errors import InputError
from markoff.utils import log_utils
from markoff.utils.config_utils import (
    apply_overrides,
    cli_with_yaml,
    defaults_with_yaml,
    load_yaml,
    peek_option,
)
from markoff.utils.format_utils import format_digits, read_records, render_mapping, render_rows
from markoff.utils.parse_utils import parse_bound, parse_ints, parse_pair, parse_triple, power_of_ten

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


@pytest.mark.parametrize("text", ["1e100", "1E100", "10^100", "10**100", " 10 ^ 100 ", "1" + "0" * 100])
def test_parse_bound(text):
    assert parse_bound(text) == 10**100


@pytest.mark.parametrize("text", ["", "ten", "0", "-5", "1e", "10^1000000"])
def test_parse_bound_rejects(text):
    with pytest.raises(InputError):
        parse_bound(text)


def test_power_of_ten():
    assert power_of_ten(1) == 0
    assert power_of_ten(10**300) == 300
    with pytest.raises(InputError):
        power_of_ten(200)


def test_parse_integers():
    assert parse_ints("[6, 1, 3, 6]") == [6, 1, 3, 6]
    assert parse_ints("") == []
    assert parse_triple("13,194,5") == (13, 194, 5)
    assert parse_pair("(29,7)") == (29, 7)
    with pytest.raises(InputError):
        parse_triple("1,5")
    with pytest.raises(InputError):
        parse_ints("1,x")


def test_render_rows():
    rows = [[1, "LR"], [2, "RL"]]
    assert render_rows(rows, ["k", "path"], "csv") == "k,path\n1,LR\n2,RL\n"
    assert render_rows(rows, ["k", "path"], "tsv", header=False) == "1\tLR\n2\tRL\n"
    assert json.loads(render_rows(rows, ["k", "path"], "json")) == [
        {"k": "1", "path": "LR"},
        {"k": "2", "path": "RL"},
    ]
    with pytest.raises(ValueError):
        render_rows(rows, ["k", "path"], "xml")


def test_render_mapping():
    mapping = {"m": 194, "cf": "2,1,1,2", "period": (2, 1)}
    assert render_mapping(mapping, "tsv") == "m\t194\ncf\t2,1,1,2\nperiod\t(2, 1)\n"
    assert json.loads(render_mapping(mapping, "json")) == {"m": 194, "cf": "2,1,1,2", "period": [2, 1]}


def test_read_records():
    records = read_records("k\tM\n0\t1\n", delimiter="\t")
    assert records == [{"k": "0", "M": "1"}]
    assert format_digits((6, 4)) == "6,4"


@dataclass
class Inner:
    cap: int = 3


@dataclass
class Outer:
    name: str = "x"
    sizes: tuple = (1, 2)
    inner: Inner = field(default_factory=Inner)


def test_apply_overrides():
    cfg = apply_overrides(Outer(), {"name": "y", "sizes": [3], "inner": {"cap": 9}})
    assert cfg == Outer("y", (3,), Inner(9))
    with pytest.raises(InputError):
        apply_overrides(Outer(), {"inner": {"depth": 1}})


def test_load_yaml(tmp_path):
    path = tmp_path / "census.yaml"
    path.write_text("bound: 10^30\nthreads: 2\nlimits:\n  census-nodes: 1000\n")
    cfg = apply_overrides(CensusConfig(), load_yaml(str(path)))
    assert (cfg.bound, cfg.threads, cfg.limits.census_nodes) == ("10^30", 2, 1000)
    empty = tmp_path / "empty.yaml"
    empty.write_text("")
    assert load_yaml(str(empty)) == {}
    listing = tmp_path / "list.yaml"
    listing.write_text("- 1\n- 2\n")
    with pytest.raises(InputError):
        load_yaml(str(listing))
    with pytest.raises(InputError):
        load_yaml(str(tmp_path / "missing.yaml"))


def test_peek_option():
    assert peek_option(["tree", "--yaml-path", "a.yaml"], "--yaml-path") == "a.yaml"
    assert peek_option(["tree", "--yaml-path=b.yaml"], "--yaml-path") == "b.yaml"
    assert peek_option(["tree"], "--yaml-path") is None


def test_defaults_with_yaml(tmp_path):
    path = tmp_path / "zagier.yaml"
    path.write_text("stop: 40\nstep: 20\n")
    cfg = defaults_with_yaml(SweepConfig, ["--yaml-path", str(path)])
    assert (cfg.start, cfg.stop, cfg.step, cfg.yaml_path) == (0, 40, 20, str(path))
    assert defaults_with_yaml(SweepConfig, [], fallback=str(path)).stop == 40
    assert defaults_with_yaml(SweepConfig, [], fallback=str(tmp_path / "missing.yaml")) == SweepConfig()


def test_cli_with_yaml_flag_wins(tmp_path):
    path = tmp_path / "zagier.yaml"
    path.write_text("stop: 40\nthreads: 3\n")
    cfg = cli_with_yaml(SweepConfig, ["--stop", "60"], fallback=str(path))
    assert (cfg.stop, cfg.threads) == (60, 3)


@pytest.mark.parametrize(
    "name, cls",
    [
        ("zagier", SweepConfig),
        ("census", CensusConfig),
        ("verify", VerifyConfig),
        ("cantor", CantorConfig),
        ("figures", FiguresConfig),
    ],
)
def test_shipped_configs_load(name, cls):
    cfg = apply_overrides(cls(), load_yaml(str(CONFIGS / f"{name}.yaml")))
    assert isinstance(cfg, cls)


def test_log_levels(capsys):
    log_utils.info("hidden")
    log_utils.error("shown")
    log_utils.set_quiet(False)
    log_utils.warn("careful")
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hidden" not in captured.err
    assert "Error: shown" in captured.err
    assert "Warning: careful" in captured.err


def test_package_version():
    assert isinstance(markoff.__version__, str)
    assert markoff.__version__
