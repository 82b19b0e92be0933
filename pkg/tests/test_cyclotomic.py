import cmath
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from bordcat.cyclotomic import Amplitude, power

phases = st.fractions(
    min_value=0, max_value=1, max_denominator=12
).map(lambda f: f % 1)


def close(a: complex, b: complex) -> bool:
    return abs(a - b) < 1e-9


@settings(max_examples=60, deadline=None)
@given(phases, phases)
def test_roots_multiply_by_adding_phases(p1, p2):
    z1 = Amplitude.root_of_unity(p1)
    z2 = Amplitude.root_of_unity(p2)
    assert z1 * z2 == Amplitude.root_of_unity((p1 + p2) % 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12))
def test_full_root_sum_vanishes(n):
    total = Amplitude.zero()
    for k in range(n):
        total = total + Amplitude.root_of_unity(Fraction(k, n))
    if n == 1:
        assert total == Amplitude.one()
    else:
        assert total.is_zero()


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 30))
def test_sqrt_squares_back(m):
    root = Amplitude.sqrt_int(m)
    assert root * root == Amplitude.rational(m)
    assert close(root.approx(), complex(m**0.5))


@settings(max_examples=40, deadline=None)
@given(phases)
def test_approx_matches_root(p):
    z = Amplitude.root_of_unity(p)
    assert close(z.approx(), cmath.exp(2j * cmath.pi * float(p)))


def test_as_rational_detects_hidden_rationals():
    # zeta_3 + zeta_3^2 = -1 even though the coefficients look irrational
    z = Amplitude.root_of_unity(Fraction(1, 3)) + Amplitude.root_of_unity(
        Fraction(2, 3)
    )
    assert z.as_rational() == Fraction(-1)
    assert Amplitude.root_of_unity(Fraction(1, 5)).as_rational() is None


@settings(max_examples=40, deadline=None)
@given(phases, st.fractions(min_value=-3, max_value=3, max_denominator=6))
def test_serialize_round_trip(p, c):
    z = Amplitude.root_of_unity(p) * Amplitude.rational(c)
    assert Amplitude.deserialize(z.serialize()) == z


def test_string_round_trip_through_parser():
    from bordcat.serialization import parse_amplitude

    samples = [
        Amplitude.rational(Fraction(3, 7)),
        Amplitude.root_of_unity(Fraction(1, 3)),
        Amplitude.sqrt_int(2),
        Amplitude.root_of_unity(Fraction(1, 4)) + Amplitude.rational(2),
    ]
    for z in samples:
        assert parse_amplitude(str(z)) == z


def test_division_and_power():
    z = Amplitude.root_of_unity(Fraction(1, 8))
    assert z / z == Amplitude.one()
    assert power(z, 8) == Amplitude.one()
    assert power(z, 4) == Amplitude.rational(-1)
