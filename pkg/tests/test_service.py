"""The HTTP API: same engine as the CLI, JSON in and out."""
import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from gddx import data
from gddx.cli import main
from gddx.service import build_app


@pytest.fixture(scope="module")
def client():
    return TestClient(build_app())


NINEPOINT = data.fixture_text("ninepoint")
MIDLINE = data.fixture_text("midline")
SCALENE = data.fixture_text("scalene")


# -- /api/parse ------------------------------------------------------------------

def test_parse_returns_points_steps_and_goals(client):
    res = client.post("/api/parse", json={"source": NINEPOINT, "seed": 0})
    assert res.status_code == 200
    body = res.json()
    names = [p["name"] for p in body["points"]]
    assert names == sorted(set(names), key=names.index)  # declaration order, no dups
    assert {"A", "B", "C", "D", "E", "F", "G"} <= set(names)
    for p in body["points"]:
        assert isinstance(p["x"], float) and isinstance(p["y"], float)
    kinds = {s["kind"] for s in body["steps"]}
    assert "midpoint" in kinds and "foot" in kinds
    assert body["goals"] == ["cyclic(D,E,F,G)"]


def test_parse_rejects_bad_sources_with_line_info(client):
    res = client.post("/api/parse", json={"source": "point A\nfrobnicate B\n"})
    assert res.status_code == 422
    assert res.json()["detail"].startswith("line 2:")


def test_parse_rejects_degenerate_diagrams(client):
    src = (
        "point A 0 0\npoint B 1 0\npoint C 0 1\npoint D 1 1\n"
        "intersect P A B C D\ngoal coll P A B\n"
    )
    res = client.post("/api/parse", json={"source": src})
    assert res.status_code == 422
    assert "parallel" in res.json()["detail"]


# -- /api/detect ------------------------------------------------------------------

def test_detect_numbers_candidates_from_one(client):
    res = client.post("/api/detect", json={"source": NINEPOINT, "seed": 0})
    assert res.status_code == 200
    cands = res.json()["candidates"]
    assert [c["index"] for c in cands] == list(range(1, len(cands) + 1))
    assert any(c["fact"] == "cyclic D E F G" for c in cands)


def test_detect_matches_the_cli_listing(client, tmp_path):
    res = client.post("/api/detect", json={"source": MIDLINE, "seed": 0})
    path = tmp_path / "midline.gcs"
    path.write_text(MIDLINE, encoding="utf-8")
    cli = CliRunner().invoke(main, ["detect", str(path)], catch_exceptions=False)
    api_lines = [f"{c['index']}. {c['fact']}" for c in res.json()["candidates"]]
    assert api_lines == cli.output.splitlines()


# -- /api/prove ------------------------------------------------------------------

def test_prove_returns_the_dag_alongside_the_rendering(client):
    res = client.post("/api/prove", json={"source": NINEPOINT})
    assert res.status_code == 200
    body = res.json()
    assert body["status"] == "proved"
    assert body["diagnostics"] == ""
    assert body["ndgs"] == []
    nodes = body["dag"]
    assert [n["index"] for n in nodes] == list(range(1, len(nodes) + 1))
    assert nodes[-1]["fact"] == "cyclic(D,E,F,G)"
    for n in nodes:
        assert all(a < n["index"] for a in n["antecedents"])
        if not n["antecedents"]:
            assert n["reason"] == "hypothesis"
    assert body["rendering"].splitlines()[-1].startswith(f"{len(nodes)}. ")


def test_prove_not_proved_keeps_the_witness_verdict(client):
    res = client.post("/api/prove", json={"source": SCALENE})
    body = res.json()
    assert body["status"] == "not_proved"
    assert body["rendering"] == (
        "not proved: cong(A,B,A,C) (the goal fails on the witness diagram)\n"
    )
    assert body["dag"] == []


def test_prove_reports_domain_errors_in_band(client):
    res = client.post("/api/prove", json={"source": "point A\nfrobnicate B\n"})
    assert res.status_code == 200
    body = res.json()
    assert body["status"] == "error"
    assert body["diagnostics"].startswith("line 2:")
    assert body["rendering"] == ""


def test_prove_auto_goal_is_the_detect_candidate(client):
    detect = client.post("/api/detect", json={"source": MIDLINE}).json()
    first = detect["candidates"][0]["fact"]
    auto = client.post("/api/prove", json={"source": MIDLINE, "goal": "auto:1"}).json()
    explicit = client.post("/api/prove", json={"source": MIDLINE, "goal": first}).json()
    assert auto == explicit


def test_prove_wu_backend_returns_ndgs(client):
    res = client.post("/api/prove", json={"source": MIDLINE, "backend": "wu"})
    body = res.json()
    assert body["status"] == "proved"
    assert body["dag"] == []
    assert body["ndgs"]
    assert all("!= 0" in n for n in body["ndgs"])
    assert body["rendering"].startswith("proved: para(A,B,E,F)")


def test_prove_wu_unsupported_goal_is_an_error_status(client):
    res = client.post(
        "/api/prove", json={"source": data.fixture_text("isosceles"), "backend": "wu"}
    )
    body = res.json()
    assert body["status"] == "error"
    assert "eqangle" in body["diagnostics"]


@pytest.mark.parametrize("render", ["flat", "tree", "dot"])
@pytest.mark.parametrize("lang", ["en", "de"])
def test_prove_rendering_is_byte_identical_to_the_cli(client, tmp_path, render, lang):
    path = tmp_path / "rt.gcs"
    path.write_text(data.fixture_text("rt_median"), encoding="utf-8")
    cli = CliRunner().invoke(
        main,
        ["prove", str(path), "--format", render, "--lang", lang],
        catch_exceptions=False,
    )
    api = client.post(
        "/api/prove",
        json={"source": data.fixture_text("rt_median"), "render": render, "lang": lang},
    ).json()
    assert cli.exit_code == 0
    assert api["rendering"] == cli.output


def test_prove_structure_flag_collapses_the_tree(client):
    kw = {"source": NINEPOINT, "render": "tree"}
    shared = client.post("/api/prove", json=kw).json()
    flat = client.post("/api/prove", json={**kw, "structure": False}).json()
    assert shared["rendering"] != flat["rendering"]
    assert flat["rendering"] == client.post(
        "/api/prove", json={**kw, "render": "flat"}
    ).json()["rendering"]


# -- /api/i18n and /api/rules ------------------------------------------------------

def test_catalog_endpoint_serves_german(client):
    res = client.get("/api/i18n/de")
    assert res.status_code == 200
    body = res.json()
    assert body["language"] == "de"
    by_key = {e["key"]: e["text"] for e in body["entries"]}
    assert by_key["by HYP"] == "nach Voraussetzung"


def test_catalog_endpoint_serves_english_identity(client):
    body = client.get("/api/i18n/en").json()
    assert all(e["key"] == e["text"] for e in body["entries"])


def test_unknown_language_is_404(client):
    res = client.get("/api/i18n/zz")
    assert res.status_code == 404
    assert res.json()["detail"] == "no catalog for language 'zz'"


def test_rules_endpoint_lists_patterns(client):
    body = client.get("/api/rules").json()
    assert body["name"] == "baseline"
    assert body["version"] == "1"
    by_id = {r["id"]: r for r in body["rules"]}
    assert by_id["midline"]["pattern"] == "midp(e,a,c), midp(f,b,c) => para(e,f,a,b)"
    assert by_id["midline"]["structural"] is False
    assert by_id["cong_transitivity"]["structural"] is True
    assert all(r["phrase"] for r in body["rules"])


def test_static_mount_serves_files(tmp_path):
    (tmp_path / "index.html").write_text("<h1>gddx</h1>", encoding="utf-8")
    app = build_app(static_dir=str(tmp_path))
    res = TestClient(app).get("/")
    assert res.status_code == 200
    assert "<h1>gddx</h1>" in res.text
