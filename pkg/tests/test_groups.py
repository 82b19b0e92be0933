from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bordcat.groups import (
    EnumerationCapExceeded,
    FinAbGroup,
    Homomorphism,
    character,
    characters,
    pontryagin_dual,
)

factor_lists = st.lists(st.integers(2, 6), min_size=0, max_size=3)


@settings(max_examples=40, deadline=None)
@given(factor_lists)
def test_invariant_factors_divide(factors):
    G = FinAbGroup.from_factors(factors)
    fs = G.invariant_factors
    for a, b in zip(fs, fs[1:]):
        assert b % a == 0
    order = 1
    for n in factors:
        order *= n
    assert G.order == order


def test_invariant_factor_examples():
    assert FinAbGroup.from_factors([2, 3]).invariant_factors == (6,)
    assert FinAbGroup.from_factors([4, 2, 3]).invariant_factors == (2, 12)
    assert FinAbGroup.trivial().order == 1


def test_elements_enumeration_and_cap():
    G = FinAbGroup.from_factors([2, 3])
    assert len(list(G.elements())) == 6
    with pytest.raises(EnumerationCapExceeded):
        list(G.elements(cap=3))


@settings(max_examples=30, deadline=None)
@given(factor_lists)
def test_group_arithmetic(factors):
    G = FinAbGroup.from_factors(factors)
    for g in G.elements():
        assert (g + G.zero()).coords == g.coords
        assert (g - g).is_zero()
        assert g.scale(G.exponent if G.order > 1 else 1).is_zero()


def test_pontryagin_dual_same_invariants():
    G = FinAbGroup.from_factors([2, 4, 3])
    assert pontryagin_dual(G).invariant_factors == G.invariant_factors


def test_character_orthogonality():
    G = FinAbGroup.from_factors([2, 3])
    for chi in characters(G):
        total = sum(
            1 if chi.pair(g) % 1 == 0 else 0 for g in G.elements()
        )
        # sum of the character over G vanishes unless chi is trivial; for a
        # root-of-unity-valued character that shows up as "all phases zero"
        if chi.is_zero():
            assert total == G.order
        else:
            assert total < G.order


def test_character_bilinearity():
    G = FinAbGroup.from_factors([4])
    dual = pontryagin_dual(G)
    chi = character(G, dual.element((1,)))
    g, h = G.element((1,)), G.element((2,))
    assert (chi.pair(g) + chi.pair(h)) % 1 == chi.pair(g + h) % 1
    assert chi.pair(g) == Fraction(1, 4)


def test_homomorphism_kernel_image():
    G = FinAbGroup.from_factors([4])
    H = FinAbGroup.from_factors([2])
    from bordcat.intlinalg import IntMatrix

    f = Homomorphism(G, H, IntMatrix.from_rows([[1]]))  # reduction mod 2
    assert len(f.kernel_coords()) == 2
    assert len(f.image_coords()) == 2
    assert not f.is_injective()
