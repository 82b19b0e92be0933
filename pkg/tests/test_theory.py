from fractions import Fraction

from bordcat.bordisms import compose, identity_bordism, symmetry_cylinder
from bordcat.cyclotomic import Amplitude
from bordcat.fixtures import circle_object, fixture_set
from bordcat.theory import (
    LinearMap,
    ScaledTheory,
    rho,
    trivial_theory,
    verify_functor,
)


def amp(x):
    return Amplitude.rational(Fraction(x))


def test_linear_map_algebra():
    labels = ("a", "b")
    ident = LinearMap.identity(labels)
    m = LinearMap.from_rows(labels, labels, [[amp(1), amp(2)], [amp(0), amp(1)]])
    assert (m @ ident).same_matrix(m)
    assert (ident @ m).same_matrix(m)
    assert (m + LinearMap.zero(labels, labels)).same_matrix(m)
    assert m.scale(amp(2)).entry(0, 1) == amp(4)
    assert m.trace() == amp(2)


def test_tensor_and_trace():
    a = LinearMap.from_rows(("x",), ("x",), [[amp(3)]])
    b = LinearMap.from_rows(("y", "z"), ("y", "z"), [[amp(1), amp(0)], [amp(0), amp(5)]])
    t = a.tensor(b)
    assert t.trace() == amp(18)  # 3 * (1 + 5)
    assert len(t.source) == 2


def test_permute_reorders_basis():
    m = LinearMap.from_rows(("a", "b"), ("a", "b"), [[amp(1), amp(2)], [amp(3), amp(4)]])
    p = m.permute(("b", "a"), ("b", "a"))
    assert p.entry(0, 0) == amp(4)
    assert p.entry(0, 1) == amp(3)


def test_trivial_theory_is_a_functor(z2):
    fx = fixture_set(z2, dual=False)
    report = verify_functor(
        trivial_theory(0, z2),
        objects=fx["objects"],
        composable_pairs=fx["composable_pairs"],
        union_pairs=fx["union_pairs"],
        symmetry_objects=fx["symmetry_objects"],
    )
    assert report.passed, str(report)


def test_trivial_theory_z3_identity_and_symmetry(z3):
    Z = trivial_theory(0, z3)
    obj = circle_object(z3)
    ident = Z.value(identity_bordism(obj))
    assert ident.same_matrix(LinearMap.identity(Z.state_labels(obj)))
    betas = list(obj.symmetry_group().classes())
    acts = {b.raw: rho(Z, obj, b) for b in betas}
    for b1 in betas:
        for b2 in betas:
            comp = acts[b1.raw] @ acts[b2.raw].relabel(
                acts[b1.raw].source, acts[b1.raw].source
        )
            assert comp.same_matrix(acts[(b1 + b2).raw])


def test_scaled_theory_breaks_composition(z2):
    obj = circle_object(z2)
    ident = identity_bordism(obj)
    bad = ScaledTheory(trivial_theory(0, z2), 2)
    report = verify_functor(bad, composable_pairs=[(ident, ident)])
    assert not report.passed


def test_closed_values_of_trivial_theory(z2):
    from bordcat.manifolds import library

    Z = trivial_theory(0, z2)
    assert Z.closed_value(library("torus2"), None) == Amplitude.one()
