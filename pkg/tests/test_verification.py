import pytest

from bordcat.verification import (
    SUITES,
    run_suite,
    sequences_suite,
    skeleton_change_suite,
    torus_from_annuli,
)


def test_registry_names_are_callable():
    assert {"axioms", "sequences", "gauging", "double-gauge", "delta"} <= set(SUITES)
    with pytest.raises(KeyError):
        run_suite("nope")


def test_torus_pieces_are_composable(z2):
    earlier, later = torus_from_annuli(z2)
    assert earlier.incoming is None and later.outgoing is None
    assert earlier.outgoing.obj == later.incoming.obj


def test_sequences_suite_passes(z2):
    report = sequences_suite(z2)
    assert report.passed, str(report)


def test_skeleton_change_suite_passes():
    report = skeleton_change_suite()
    assert report.passed, str(report)


def test_delta_suite_passes_z3(z3):
    report = run_suite("delta", z3)
    assert report.passed, str(report)


def test_gauging_suite_filters_by_coefficient(z3):
    report = run_suite("gauging", z3)
    assert report.passed and len(report.checks) == 1
