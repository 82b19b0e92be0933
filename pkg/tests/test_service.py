import pytest
from fastapi.testclient import TestClient

from bordcat.serialization import manifold_to_file
from bordcat.manifolds import library
from bordcat.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_healthz(client):
    resp = client.get("/healthz")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_library_listing(client):
    data = client.get("/library").json()
    assert "torus2" in data["manifolds"]
    assert "axioms" in data["suites"]


def test_cohomology_by_name(client):
    resp = client.post(
        "/cohomology",
        json={"manifold": {"name": "torus2"}, "degree": 1, "coeff": "Z2"},
    )
    assert resp.status_code == 200
    data = resp.json()
    assert data["group"] == "Z2 x Z2"
    assert data["order"] == 4


def test_cohomology_by_file(client):
    doc = manifold_to_file(library("sphere2"))
    resp = client.post(
        "/cohomology",
        json={"manifold": {"file": doc}, "degree": 2, "coeff": "Z3"},
    )
    assert resp.status_code == 200
    assert resp.json()["group"] == "Z3"


def test_cohomology_skeleton_pair(client):
    resp = client.post(
        "/cohomology",
        json={
            "manifold": {"name": "circle"},
            "degree": 1,
            "coeff": "Z2",
            "pair": "skeleton",
            "q": 0,
        },
    )
    assert resp.status_code == 200
    assert resp.json()["order"] == 8


def test_validation_errors_are_422(client):
    assert (
        client.post(
            "/cohomology",
            json={"manifold": {"name": "nope"}, "degree": 1},
        ).status_code
        == 422
    )
    assert (
        client.post(
            "/gauge",
            json={"manifold": {"name": "disk"}, "q": 0},
        ).status_code
        == 422
    )
    assert (
        client.post(
            "/gauge",
            json={"manifold": {"name": "torus2"}, "q": 0, "s": "2"},
        ).status_code
        == 422
    )
    assert (
        client.post("/verify", json={"suite": "nope"}).status_code == 422
    )


def test_cap_exceeded_is_409(client):
    resp = client.post(
        "/gauge",
        json={"manifold": {"name": "torus2"}, "q": 0, "coeff": "Z2", "cap": 2},
    )
    assert resp.status_code == 409


def test_gauge_value(client):
    resp = client.post(
        "/gauge",
        json={"manifold": {"name": "torus2"}, "q": 0, "coeff": "Z2"},
    )
    data = resp.json()
    assert data["value"]["exact"] == "2"
    assert data["coefficient"] == "1/2"
    assert data["backgrounds"] == 4


def test_gauge_refined_value(client):
    resp = client.post(
        "/gauge",
        json={
            "manifold": {"name": "sphere2"},
            "q": 0,
            "coeff": "Z2",
            "refined": [],
        },
    )
    assert resp.json()["value"]["exact"] == "1/2"


def test_verify_endpoint(client):
    resp = client.post("/verify", json={"suite": "delta"})
    data = resp.json()
    assert data["passed"] is True
    assert all(c["passed"] for c in data["checks"])
