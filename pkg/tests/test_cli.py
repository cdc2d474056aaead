import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from chatternet.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def config_file(fixture_config_dict, tmp_path):
    cfg = dict(fixture_config_dict)
    cfg["out_dir"] = str(tmp_path / "out")
    path = tmp_path / "config.json"
    path.write_text(json.dumps(cfg), encoding="utf-8")
    return path


def test_run_filter_ok(runner, config_file):
    result = runner.invoke(main, ["run", "filter", "--config", str(config_file)])
    assert result.exit_code == 0, result.output
    assert "[filter] ok" in result.output
    assert "filtered" in result.output


def test_run_all_produces_manifest(runner, config_file, tmp_path):
    result = runner.invoke(main, ["run", "all", "--config", str(config_file)])
    assert result.exit_code == 0, result.output
    out = json.loads(config_file.read_text())["out_dir"]
    assert len((Path(out) / "manifest.jsonl").read_text().splitlines()) == 11


def test_unknown_stage_exits_2(runner, config_file):
    result = runner.invoke(main, ["run", "brew", "--config", str(config_file)])
    assert result.exit_code == 2


def test_bad_config_json_exits_2(runner, tmp_path):
    bad = tmp_path / "cfg.json"
    bad.write_text("{not json", encoding="utf-8")
    result = runner.invoke(main, ["run", "filter", "--config", str(bad)])
    assert result.exit_code == 2


def test_invalid_body_exits_2(runner, config_file):
    result = runner.invoke(
        main, ["run", "filter", "--config", str(config_file), "--window", "0"]
    )
    assert result.exit_code == 2


def test_missing_upstream_exits_3(runner, config_file):
    result = runner.invoke(main, ["run", "code", "--config", str(config_file)])
    assert result.exit_code == 3
    assert "missing_upstream" in result.output


def test_data_error_exits_4(runner, config_file, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("foo,bar\n1,2\n", encoding="utf-8")
    result = runner.invoke(
        main,
        [
            "run",
            "filter",
            "--config",
            str(config_file),
            "--corpus",
            str(bad),
            "--corpus-format",
            "csv",
        ],
    )
    assert result.exit_code == 4


def test_flags_override_config(runner, config_file, tmp_path):
    override = tmp_path / "elsewhere"
    result = runner.invoke(
        main, ["run", "filter", "--config", str(config_file), "--out", str(override)]
    )
    assert result.exit_code == 0, result.output
    assert (override / "filtered.jsonl").is_file()


def test_validate_ok(runner, config_file):
    result = runner.invoke(main, ["validate", "--config", str(config_file)])
    assert result.exit_code == 0
    assert "config ok" in result.output


def test_validate_rejects_missing_paths(runner, config_file, tmp_path):
    cfg = json.loads(config_file.read_text())
    cfg["corpus"] = str(tmp_path / "ghost.jsonl")
    bad = tmp_path / "cfg2.json"
    bad.write_text(json.dumps(cfg), encoding="utf-8")
    result = runner.invoke(main, ["validate", "--config", str(bad)])
    assert result.exit_code == 2
