import pytest

from bordcat.complexes import SimplicialComplex
from bordcat.manifolds import (
    SkeletonPair,
    TriangulatedManifold,
    ValidationError,
    glue,
    library,
    library_names,
)

EXPECTED = {
    # name: (dimension, euler characteristic, boundary component count)
    "circle": (1, 0, 0),
    "circle4": (1, 0, 0),
    "disk": (2, 1, 1),
    "annulus": (2, 0, 2),
    "annulus4": (2, 0, 2),
    "pants": (2, -1, 3),
    "torus2": (2, 0, 0),
    "sphere2": (2, 2, 0),
    "genus2": (2, -2, 0),
    "sphere3": (3, 0, 0),
    "torus3": (3, 0, 0),
}


def test_library_shapes():
    assert sorted(EXPECTED) == sorted(library_names())
    for name, (dim, chi, comps) in EXPECTED.items():
        m = library(name)
        assert m.dimension == dim
        assert m.euler_characteristic() == chi
        assert len(m.boundary_components) == comps
        assert m.is_closed == (comps == 0)


def test_fundamental_cycle_boundary_cancels():
    for name in ("circle", "torus2", "sphere2", "sphere3", "torus3", "genus2"):
        m = library(name)
        boundary: dict = {}
        for t, sign in m.fundamental_cycle():
            for i in range(len(t)):
                f = t[:i] + t[i + 1 :]
                boundary[f] = boundary.get(f, 0) + sign * (-1) ** i
        assert all(v == 0 for v in boundary.values())


def test_validation_rejects_bad_complexes():
    # three triangles sharing one edge
    bad = SimplicialComplex.from_maximal(
        range(5), [(0, 1, 2), (0, 1, 3), (0, 1, 4)]
    )
    with pytest.raises(ValidationError):
        TriangulatedManifold(bad, 2)
    # a dangling edge attached to a triangle violates purity
    impure = SimplicialComplex(
        list(range(4)),
        {0: [(0,), (1,), (2,), (3,)], 1: [(0, 1), (0, 2), (1, 2), (2, 3)], 2: [(0, 1, 2)]},
    )
    with pytest.raises(ValidationError):
        TriangulatedManifold(impure, 2)


def test_glue_two_disks_into_sphere():
    disk = library("disk")
    glued, va, vb = glue(disk, disk, 0, 0, {0: 0, 1: 1, 2: 2})
    assert glued.is_closed
    assert glued.euler_characteristic() == 2
    assert glued._is_connected()


def test_glue_rejects_non_isomorphic_match():
    disk = library("disk")
    with pytest.raises(ValueError):
        glue(disk, disk, 0, 0, {0: 0, 1: 2, 2: 2})


def _component_containing(manifold, vertex):
    for i, comp in enumerate(manifold.boundary_components):
        if (vertex,) in comp:
            return i
    raise AssertionError(f"{vertex} not on the boundary")


def test_self_glue_triple_annulus_into_torus():
    ann = library("annulus4")
    dbl, va, vb = glue(ann, ann, 1, 0, {(v, 1): (v, 0) for v in range(4)})
    trip, vd, vc = glue(
        dbl,
        ann,
        _component_containing(dbl, vb[(0, 1)]),
        0,
        {vb[(v, 1)]: (v, 0) for v in range(4)},
    )
    # a one-notch rotation keeps the identification simplicial; fewer than
    # three annulus segments would collide along the diagonal edges
    match = {
        vd[va[(v, 0)]]: vc[((v + 1) % 4, 1)] for v in range(4)
    }
    start = _component_containing(trip, vd[va[(0, 0)]])
    end = _component_containing(trip, vc[(0, 1)])
    glued, _, _ = glue(trip, None, start, end, match)
    assert glued.is_closed
    assert glued.euler_characteristic() == 0
    assert glued._is_connected()


def test_skeleton_pair_models_partition_barycenters():
    for name, q in (("circle", 0), ("torus2", 0), ("torus2", 1)):
        sk = SkeletonPair(library(name), q)
        model_verts = {v for s in sk.sk_model for v in s}
        dual_verts = {v for s in sk.dual_model for v in s}
        assert not (model_verts & dual_verts)
        assert model_verts | dual_verts == set(sk.subdivision.complex.vertices)
        # model barycenters sit on low-dimensional carriers, dual on the rest
        d = sk.bulk_dimension
        assert all(len(v) - 1 <= d - q - 2 for v in model_verts)
        assert all(len(v) - 1 > d - q - 2 for v in dual_verts)


def test_skeleton_dual_swaps_degrees():
    sk = SkeletonPair(library("torus2"), 0)
    dual = sk.dual()
    assert dual.q == sk.bulk_dimension - sk.q - 2
    assert dual.sk_model == sk.dual_model
    assert dual.dual_model == sk.sk_model


def test_skeleton_pair_rejects_bad_input():
    with pytest.raises(ValueError):
        SkeletonPair(library("disk"), 0)  # boundary not allowed
    with pytest.raises(ValueError):
        SkeletonPair(library("circle"), 1)  # q out of range
    with pytest.raises(ValueError):
        SkeletonPair(library("torus2"), 0, kept={(0, 1)})  # kept not closed
