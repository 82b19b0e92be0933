import random

from hypothesis import given, settings
from hypothesis import strategies as st

from bordcat.complexes import (
    Cochain,
    SimplicialComplex,
    SimplicialMap,
    SimplicialPair,
    coboundary,
    disjoint_union,
    relabel,
    subdivision_of,
)
from bordcat.manifolds import library, library_names


def random_cochain(pair, degree, factors, rng):
    c = Cochain(degree, factors)
    for s in pair.relative_simplices(degree):
        c.set_value(s, [rng.randrange(n) for n in factors])
    return c


@settings(max_examples=25, deadline=None)
@given(
    st.sampled_from(["circle", "torus2", "sphere2", "disk", "annulus", "sphere3"]),
    st.integers(0, 2),
    st.sampled_from([(2,), (3,), (2, 4)]),
    st.integers(0, 10**6),
)
def test_coboundary_squares_to_zero(name, degree, factors, seed):
    pair = SimplicialPair.absolute(library(name).complex)
    c = random_cochain(pair, degree, factors, random.Random(seed))
    assert coboundary(pair, coboundary(pair, c)).is_zero()


def test_coboundary_squares_to_zero_relative():
    rng = random.Random(0)
    pair = SimplicialPair.make(
        library("torus2").complex, [(0,), (1,), (0, 1)]
    )
    for degree in (0, 1):
        c = random_cochain(pair, degree, (2, 3), rng)
        assert coboundary(pair, coboundary(pair, c)).is_zero()


def test_subdivision_preserves_euler_characteristic():
    for name in library_names():
        base = library(name).complex
        sd = subdivision_of(base)
        assert sd.complex.euler_characteristic() == base.euler_characteristic()


def test_subdivision_carriers_are_flags():
    sd = subdivision_of(library("torus2").complex)
    top_dim = sd.complex.dim
    for s in sd.complex.n_simplices(top_dim):
        sizes = sorted(len(v) for v in s)
        assert sizes == list(range(1, top_dim + 2))  # strictly increasing flag
        assert sd.carrier(s) == max(s, key=len)


def test_full_subcomplex_closed_under_faces():
    sd = subdivision_of(library("circle").complex)
    chosen = [v for v in sd.complex.vertices if len(v) == 1]
    sub = sd.full_subcomplex(chosen)
    for s in sub:
        for i in range(len(s)):
            if len(s) > 1:
                assert s[:i] + s[i + 1 :] in sub


def test_pullback_commutes_with_coboundary():
    # fold the square boundary circle onto the triangle circle
    rng = random.Random(7)
    src = SimplicialPair.absolute(library("circle4").complex)
    tgt = SimplicialPair.absolute(library("circle").complex)
    f = SimplicialMap(src, tgt, {0: 0, 1: 1, 2: 2, 3: 0})
    for factors in ((2,), (3,), (2, 4)):
        c = random_cochain(tgt, 0, factors, rng)
        lhs = coboundary(src, f.pullback(c))
        rhs = f.pullback(coboundary(tgt, c))
        assert (lhs - rhs).is_zero()


def test_degenerate_images_pull_back_to_zero():
    src = SimplicialPair.absolute(library("circle").complex)
    tgt = SimplicialPair.absolute(
        SimplicialComplex.from_maximal([0], [(0,)])
    )
    f = SimplicialMap(src, tgt, {0: 0, 1: 0, 2: 0})
    c = Cochain(1, (5,))
    assert f.pullback(c).is_zero()


def test_disjoint_union_and_relabel():
    a = library("circle").complex
    b = library("circle4").complex
    u, ma, mb = disjoint_union(a, b)
    assert len(u.vertices) == len(a.vertices) + len(b.vertices)
    assert u.euler_characteristic() == a.euler_characteristic() + b.euler_characteristic()
    swapped = relabel(a, {v: f"w{v}" for v in a.vertices})
    assert swapped.euler_characteristic() == a.euler_characteristic()


def test_pair_validation():
    import pytest

    cx = library("circle").complex
    with pytest.raises(ValueError):
        SimplicialPair.make(cx, [(0, 1)])  # not closed under faces
    with pytest.raises((ValueError, KeyError)):
        SimplicialPair.make(cx, [(7,)])  # not in the complex


def test_cochain_arithmetic():
    c = Cochain(0, (4,))
    c.set_value((0,), (3,))
    d = Cochain(0, (4,))
    d.set_value((0,), (1,))
    assert (c + d).is_zero()
    assert (c - c).is_zero()
    assert c.scale(4).is_zero()
    assert c.value((9,)) == (0,)
