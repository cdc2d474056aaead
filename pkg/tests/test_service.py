import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from chatternet.service import app


@pytest.fixture()
def client():
    return TestClient(app)


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_stage_listing_order_and_upstreams(client):
    body = client.get("/stages").json()
    assert [s["name"] for s in body] == [
        "filter", "edges", "nodes", "code", "network", "daily",
        "slice", "paths", "timeline", "overlap", "animate",
    ]
    by_name = {s["name"]: s["upstream"] for s in body}
    assert by_name["network"] == ["edges", "nodes", "code"]
    assert by_name["filter"] == []


def test_run_single_stage(client, fixture_config):
    cfg = fixture_config.model_dump()
    response = client.post("/stages/filter", json=cfg)
    assert response.status_code == 200
    body = response.json()
    assert body["stage"] == "filter"
    assert Path(body["artifacts"]["filtered"]).is_file()


def test_missing_upstream_maps_to_409(client, fixture_config):
    response = client.post("/stages/code", json=fixture_config.model_dump())
    assert response.status_code == 409
    detail = response.json()["detail"]
    assert detail["code"] == "missing_upstream"
    assert detail["run_first"] == "filter"


def test_semantic_config_error_maps_to_422(client, fixture_config, tmp_path):
    cfg = fixture_config.model_dump()
    cfg["corpus"] = str(tmp_path / "missing.jsonl")
    response = client.post("/stages/filter", json=cfg)
    assert response.status_code == 422
    assert response.json()["detail"]["code"] == "config_error"


def test_body_validation_error_is_422(client, fixture_config):
    cfg = fixture_config.model_dump()
    cfg["window"] = 0
    assert client.post("/stages/filter", json=cfg).status_code == 422


def test_data_error_maps_to_400(client, fixture_config, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("foo,bar\n1,2\n", encoding="utf-8")
    cfg = fixture_config.model_dump()
    cfg["corpus"] = str(bad)
    cfg["corpus_format"] = "csv"
    response = client.post("/stages/filter", json=cfg)
    assert response.status_code == 400
    assert response.json()["detail"]["code"] == "data_error"


def test_unknown_stage_404(client, fixture_config):
    assert client.post("/stages/brew", json=fixture_config.model_dump()).status_code == 404


def test_pipeline_endpoint_runs_all_stages(client, fixture_config):
    response = client.post("/pipeline", json=fixture_config.model_dump())
    assert response.status_code == 200
    results = response.json()["results"]
    assert len(results) == 11
    out = Path(fixture_config.out_dir)
    manifest = (out / "manifest.jsonl").read_text().splitlines()
    assert len(manifest) == 11
    assert json.loads((out / "animation" / "animation.json").read_text())["version"] == 1
