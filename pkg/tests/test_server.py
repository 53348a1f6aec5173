"""Serve API: catalog, tournaments, advisor, and simulation endpoints."""

from fractions import Fraction

import pytest
from fastapi.testclient import TestClient

from schuette.server import create_app


@pytest.fixture(scope="module")
def client():
    return TestClient(create_app())


def frac_of(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def test_catalog(client):
    payload = client.get("/api/dice-sets").json()
    names = [s["name"] for s in payload["sets"]]
    assert "jeffries-five" in names


def test_get_one_set(client):
    payload = client.get("/api/dice-sets/jeffries-five").json()
    assert payload["name"] == "jeffries-five"
    assert payload["dice"][1]["faces"] == [0, 0, 30]


def test_unknown_set_404(client):
    assert client.get("/api/dice-sets/nope").status_code == 404


def test_tournaments_endpoint(client):
    payload = client.get("/api/dice-sets/jeffries-five/tournaments", params={"m": 5}).json()
    assert payload["s_k"]["4"] is True
    r3 = payload["tournaments"][2]
    assert r3["unresolved"] == [["D1", "D2"], ["D4", "D5"]]
    for roll in payload["tournaments"]:
        for edge in roll["edges"]:
            assert frac_of(edge["win"]) > Fraction(1, 2)


def test_tournaments_m_validation(client):
    assert client.get("/api/dice-sets/jeffries-five/tournaments", params={"m": 0}).status_code == 422


def test_advise_endpoint(client):
    resp = client.post(
        "/api/advise",
        json={"set": "jeffries-five", "opponents": ["D1", "D2", "D4", "D5"], "m": 5},
    )
    assert resp.status_code == 200
    payload = resp.json()
    assert payload["die"] == "D3" and payload["rolls"] == 3
    for odds in payload["odds"]:
        assert frac_of(odds["win"]) > Fraction(1, 2)
        total = sum(frac_of(odds[key]) for key in ("win", "tie", "loss"))
        assert total == 1


def test_advise_unknown_label_404(client):
    resp = client.post(
        "/api/advise", json={"set": "jeffries-five", "opponents": ["zzz"], "m": 5}
    )
    assert resp.status_code == 404


def test_advise_invalid_body_422(client):
    resp = client.post("/api/advise", json={"set": "jeffries-five"})
    assert resp.status_code == 422
    resp = client.post(
        "/api/advise", json={"set": "jeffries-five", "opponents": ["D1", "D1"], "m": 5}
    )
    assert resp.status_code == 422


def test_advise_no_dominating_choice_409(client):
    # only one roll allowed: nothing beats the r=1 winner D1
    resp = client.post(
        "/api/advise", json={"set": "jeffries-five", "opponents": ["D1"], "m": 1}
    )
    assert resp.status_code == 409
    payload = resp.json()
    assert "matrix" in payload and len(payload["matrix"]) == 5


def test_simulate_endpoint_deterministic(client):
    body = {"set": "jeffries-five", "a": "D1", "b": "D2", "r": 1,
            "trials": 10000, "seed": 4242}
    one = client.post("/api/simulate", json=body).json()
    two = client.post("/api/simulate", json=body).json()
    assert one == two
    assert one["wins"] + one["ties"] + one["losses"] == 10000


def test_simulate_unknown_label_404(client):
    resp = client.post(
        "/api/simulate",
        json={"set": "jeffries-five", "a": "D1", "b": "zzz", "r": 1,
              "trials": 10, "seed": 1},
    )
    assert resp.status_code == 404
