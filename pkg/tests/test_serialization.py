import json
from fractions import Fraction

import pytest

from bordcat.cyclotomic import Amplitude
from bordcat.manifolds import library, library_names
from bordcat.serialization import (
    amplitude_to_strings,
    group_name,
    manifold_from_file,
    manifold_to_file,
    parse_amplitude,
    parse_group,
    parse_s,
    report_to_csv,
    report_to_json,
    skeleton_from_file,
)


def test_every_library_manifold_round_trips():
    for name in library_names():
        m = library(name)
        doc = json.loads(json.dumps(manifold_to_file(m)))
        back = manifold_from_file(doc)
        assert back.dimension == m.dimension
        assert back.complex.euler_characteristic() == m.complex.euler_characteristic()
        assert len(back.boundary_components) == len(m.boundary_components)
        assert back.is_closed == m.is_closed


def test_manifold_file_rejects_bad_data():
    doc = manifold_to_file(library("torus2"))
    bad = dict(doc, top_simplices=doc["top_simplices"] + [[0, 1, 99]])
    with pytest.raises(ValueError):
        manifold_from_file(bad)
    tampered = dict(doc, boundary={"edge": [[0, 1]]})
    with pytest.raises(ValueError):
        manifold_from_file(tampered)


def test_skeleton_spec():
    doc = manifold_to_file(library("torus2"), skeleton={"q": 0, "source": "dual"})
    m = manifold_from_file(doc)
    sk = skeleton_from_file(m, doc)
    assert sk.is_dual
    assert sk.q == 1  # torus objects live in bulk d=3, so q* = 3-0-2 = 1


def test_parse_group():
    assert parse_group("Z2").invariant_factors == (2,)
    assert parse_group("Z2xZ4").invariant_factors == (2, 4)
    assert parse_group("Z2 x Z3").invariant_factors == (6,)
    assert parse_group("Z1").order == 1
    with pytest.raises(ValueError):
        parse_group("S3")


def test_parse_s():
    assert parse_s("1/2") == Fraction(1, 2)
    assert parse_s("0") == 0
    with pytest.raises(ValueError):
        parse_s("2/3")


def test_group_name():
    assert group_name((2, 4)) == "Z2 x Z4"
    assert group_name(()) == "0"


def test_amplitude_strings_round_trip():
    samples = [
        Amplitude.rational(Fraction(-7, 3)),
        Amplitude.root_of_unity(Fraction(2, 5)),
        Amplitude.sqrt_int(8),
    ]
    for z in samples:
        info = amplitude_to_strings(z)
        assert parse_amplitude(info["exact"]) == z


def test_report_emission():
    report = {"value": {"exact": "2"}, "checks": [{"name": "x", "passed": True}]}
    as_json = report_to_json(report)
    assert json.loads(as_json)["value"]["exact"] == "2"
    as_csv = report_to_csv(report)
    assert "value.exact,2" in as_csv
    assert "checks[0].passed,True" in as_csv
