"""Reusable decorated-bordism fixtures in dimension two.

Builders for circle objects (plain and dual-symmetry flavor), disk caps,
annuli, and the pair of pants, plus :func:`fixture_set` which assembles a
named collection of composable bordisms for functor-axiom verification.
"""

from __future__ import annotations

from .bordisms import (
    BoundaryEmbedding,
    DecoratedBordism,
    DecoratedObject,
    enumerate_backgrounds,
    make_object,
    object_union,
)
from .cohomology import cohomology
from .groups import FinAbGroup, pontryagin_dual
from .manifolds import SkeletonPair, TriangulatedManifold, library


def circle_object(
    coeff: FinAbGroup, n: int = 3, b_raw=(), kept=None
) -> DecoratedObject:
    """A decorated circle (q = 0) on the n-vertex triangulation."""
    name = "circle" if n == 3 else f"circle{n}"
    return make_object(library(name), 0, coeff, b_raw=b_raw, kept=kept)


def dual_object(
    primal: DecoratedObject, a_raw=()
) -> DecoratedObject:
    """The same underlying circle viewed through the dual skeleton, carrying
    a background for the dual symmetry group."""
    sk = primal.skeleton.dual()
    coeff = pontryagin_dual(primal.coeff)
    group = cohomology(sk.background_pair(), sk.q + 1, coeff)
    raw = tuple(a_raw) if a_raw else (0,) * len(group.orders)
    return DecoratedObject(sk, coeff, group.element(raw))


def dual_circle_object(coeff: FinAbGroup, n: int = 3, a_raw=()) -> DecoratedObject:
    return dual_object(circle_object(coeff, n=n), a_raw=a_raw)


def decorate_first(shell: DecoratedBordism, cap: int = 10**6) -> DecoratedBordism:
    """The shell with the first admissible bulk class for its boundary data."""
    found = enumerate_backgrounds(shell, cap=cap).backgrounds
    if not found:
        raise ValueError("no bulk class restricts to the boundary decorations")
    return shell.with_B(found[0])


def _matching_embedding(
    obj: DecoratedObject, manifold: TriangulatedManifold, vertex_map: dict
) -> BoundaryEmbedding:
    verts = {vertex_map[v] for v in obj.manifold.complex.vertices}
    comps = tuple(
        i
        for i, comp in enumerate(manifold.boundary_components)
        if any((v,) in comp for v in verts)
    )
    return BoundaryEmbedding(obj, vertex_map, comps)


def cap_bordism(obj: DecoratedObject, incoming: bool = True) -> DecoratedBordism:
    """The disk as a bordism: circle -> empty if incoming, else empty -> circle.

    ``obj`` must live on the 3-vertex circle; its vertices match the disk's
    boundary circle 0-1-2.
    """
    disk = library("disk")
    emb = _matching_embedding(obj, disk, {0: 0, 1: 1, 2: 2})
    if incoming:
        shell = DecoratedBordism(disk, obj.coeff, obj.q, emb, None)
    else:
        shell = DecoratedBordism(disk, obj.coeff, obj.q, None, emb)
    return decorate_first(shell)


def annulus_bordism(
    obj_in: DecoratedObject, obj_out: DecoratedObject
) -> DecoratedBordism:
    """The library annulus as a bordism circle -> circle (both 3-vertex)."""
    ann = library("annulus")
    emb_in = _matching_embedding(obj_in, ann, {v: (v, 0) for v in (0, 1, 2)})
    emb_out = _matching_embedding(obj_out, ann, {v: (v, 1) for v in (0, 1, 2)})
    shell = DecoratedBordism(
        ann, obj_in.coeff, obj_in.q, emb_in, emb_out
    )
    return decorate_first(shell)


def pants_bordism(
    obj_in_pair: DecoratedObject, obj_out: DecoratedObject
) -> DecoratedBordism:
    """The three-holed sphere as a bordism (circle u circle) -> circle.

    ``obj_in_pair`` must be the union of two 3-vertex circle objects; its two
    summands land on the boundary circles 0-1-2 and 3-7-8, the outgoing
    circle on 4-5-9.
    """
    pants = library("pants")
    vmap_in = {
        (0, 0): 0, (0, 1): 1, (0, 2): 2,
        (1, 0): 3, (1, 1): 7, (1, 2): 8,
    }
    emb_in = _matching_embedding(obj_in_pair, pants, vmap_in)
    emb_out = _matching_embedding(obj_out, pants, {0: 4, 1: 5, 2: 9})
    shell = DecoratedBordism(
        pants, obj_out.coeff, obj_out.q, emb_in, emb_out
    )
    return decorate_first(shell)


def fixture_set(coeff: FinAbGroup | None = None, dual: bool = True) -> dict:
    """A named set of composable d=2 decorated bordisms on the circle.

    With ``dual=True`` (the default) every object carries the dual-skeleton
    flavor so the set feeds a gauged theory's verifier directly.  Returns a
    dict with the objects, the bordisms, and suggested check pairs.
    """
    from .bordisms import (
        bordism_union,
        compose,
        identity_bordism,
        symmetry_cylinder,
    )

    if coeff is None:
        coeff = FinAbGroup.cyclic(2)
    if dual:
        obj = dual_circle_object(coeff)
    else:
        obj = circle_object(coeff)
    obj2 = object_union(obj, obj)

    sym = obj.symmetry_group()
    betas = list(sym.classes())
    ident = identity_bordism(obj)
    ident2 = identity_bordism(obj2)
    cylinders = [symmetry_cylinder(obj, beta) for beta in betas[1:]]
    disk_in = cap_bordism(obj, incoming=True)
    disk_out = cap_bordism(obj, incoming=False)
    annulus = annulus_bordism(obj, obj)
    pants = pants_bordism(obj2, obj)

    bordisms = {
        "identity": ident,
        "identity_pair": ident2,
        "disk_create": disk_out,
        "disk_destroy": disk_in,
        "annulus": annulus,
        "pants": pants,
        "annulus_twice": compose(annulus, annulus),
        "disk_then_annulus": compose(annulus, disk_out),
        "annulus_then_disk": compose(disk_in, annulus),
        "cylinder_pair": bordism_union(ident, cylinders[0]),
    }
    for i, cyl in enumerate(cylinders):
        bordisms[f"symmetry_{i + 1}"] = cyl

    composable_pairs = [
        (ident, ident),
        (cylinders[0], cylinders[0]),
        (cylinders[0], ident),
        (annulus, annulus),
        (annulus, disk_out),
        (disk_in, annulus),
        (disk_in, disk_out),
        (pants, ident2),
        (disk_in, pants),
        (cylinders[0], annulus),
    ]
    union_pairs = [
        (ident, cylinders[0]),
        (disk_in, disk_out),
    ]
    return {
        "object": obj,
        "object_pair": obj2,
        "bordisms": bordisms,
        "objects": [obj, obj2],
        "composable_pairs": composable_pairs,
        "union_pairs": union_pairs,
        "symmetry_objects": [obj],
    }
