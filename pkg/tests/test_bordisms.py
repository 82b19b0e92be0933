import pytest

from bordcat.bordisms import (
    braiding,
    canonical_form,
    compose,
    enumerate_backgrounds,
    identity_bordism,
    make_object,
    object_union,
    skeleton_change,
    symmetry_cylinder,
)
from bordcat.fixtures import annulus_bordism, cap_bordism, circle_object, fixture_set
from bordcat.groups import FinAbGroup
from bordcat.manifolds import library


def test_identity_restricts_to_its_object(z2):
    for b in circle_object(z2).background_group().classes():
        obj = circle_object(z2, b_raw=b.raw)
        ident = identity_bordism(obj)
        out, inn = ident.restrict()
        assert inn == obj.b
        assert out == obj.b


def test_symmetry_cylinder_restricts_to_same_object(z2):
    obj = circle_object(z2)
    for beta in obj.symmetry_group().classes():
        cyl = symmetry_cylinder(obj, beta)
        out, inn = cyl.restrict()
        assert inn == obj.b and out == obj.b


def test_composition_is_associative_up_to_relabeling(z2):
    fx = fixture_set(z2, dual=False)
    ann = fx["bordisms"]["annulus"]
    disk_in = fx["bordisms"]["disk_destroy"]
    disk_out = fx["bordisms"]["disk_create"]
    left = compose(disk_in, compose(ann, disk_out))
    right = compose(compose(disk_in, ann), disk_out)
    assert canonical_form(left) == canonical_form(right)


def test_enumerate_backgrounds_restrict_correctly(z2):
    obj = circle_object(z2)
    shell = identity_bordism(obj)
    found = enumerate_backgrounds(shell)
    assert len(found) > 0
    for B in found.backgrounds:
        dec = shell.with_B(B)
        out, inn = dec.restrict()
        assert inn == obj.b and out == obj.b


def test_disk_boundaries_constrain_backgrounds(z2):
    # the nontrivial circle class does not bound across the disk
    group = circle_object(z2).background_group()
    nonzero = [c for c in group.classes() if not c.is_zero()]
    obj = circle_object(z2, b_raw=nonzero[0].raw)
    from bordcat.bordisms import BoundaryEmbedding, DecoratedBordism
    from bordcat.fixtures import _matching_embedding

    disk = library("disk")
    emb = _matching_embedding(obj, disk, {0: 0, 1: 1, 2: 2})
    shell = DecoratedBordism(disk, z2, 0, emb, None)
    assert len(enumerate_backgrounds(shell)) == 0
    with pytest.raises(ValueError):
        cap_bordism(obj)


def test_braiding_swaps_the_factors(z2):
    a = circle_object(z2)
    group = a.background_group()
    nonzero = [c for c in group.classes() if not c.is_zero()][0]
    b = circle_object(z2, b_raw=nonzero.raw)
    swap = braiding(a, b)
    out, inn = swap.restrict()
    assert inn == object_union(a, b).b
    assert out == object_union(b, a).b


def test_skeleton_change_exists_iff_classes_agree(z3):
    base = library("circle")
    objA = make_object(base, 0, z3, kept={(0,)})
    for bB in make_object(base, 0, z3, kept={(0,), (1,)}).background_group().classes():
        objB = make_object(base, 0, z3, b_raw=bB.raw, kept={(0,), (1,)})
        found, count = skeleton_change(objA, objB)
        from bordcat.cohomology import forget_relative

        gA = forget_relative(objA.skeleton.background_pair(), 1, z3)
        gB = forget_relative(objB.skeleton.background_pair(), 1, z3)
        agrees = gA(objA.b).raw == gB(objB.b).raw
        assert (found is not None) == agrees
        if found is not None:
            assert count == 3  # |H^0(circle; Z3)|


def test_compose_requires_matching_boundary(z2):
    obj = circle_object(z2)
    group = obj.background_group()
    other_raw = [c for c in group.classes() if not c.is_zero()][0].raw
    other = circle_object(z2, b_raw=other_raw)
    with pytest.raises(ValueError):
        compose(identity_bordism(other), identity_bordism(obj))


def test_annulus_preserves_decoration(z2):
    group = circle_object(z2).background_group()
    for b in group.classes():
        obj = circle_object(z2, b_raw=b.raw)
        ann = annulus_bordism(obj, obj)
        out, inn = ann.restrict()
        assert inn == obj.b and out == obj.b
