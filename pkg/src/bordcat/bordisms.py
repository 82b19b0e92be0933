"""The decorated bordism category: objects carry a closed manifold with a
skeleton choice and a relative background class; morphisms carry a bordism
with a compatible bulk class.  Composition glues triangulations, matches
cochain representatives on the cut, and pushes the glued cocycle forward to
the boundary-relative group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cohomology import (
    CohomologyClass,
    CohomologyGroup,
    InducedMap,
    cohomology,
    induced_pullback,
    solve_coboundary,
)
from .complexes import (
    Cochain,
    SimplicialComplex,
    SimplicialMap,
    SimplicialPair,
    Subdivision,
    subdivision_of,
)
from .groups import EnumerationCapExceeded, FinAbGroup
from .manifolds import (
    SkeletonPair,
    TriangulatedManifold,
    align_orientation,
    cylinder_manifold,
    glue,
    prism_complex,
)

_uid_counter = itertools.count()


@dataclass(frozen=True)
class DecoratedObject:
    """(Sigma, skeleton, b): a closed (d-1)-manifold with skeleton and
    background class b in H^{q+1}(sd Sigma, dual-skeleton model; G)."""

    skeleton: SkeletonPair
    coeff: FinAbGroup
    b: CohomologyClass

    def __post_init__(self):
        expected = self.background_group()
        if self.b.parent is not expected:
            raise ValueError("b does not live in the object's background group")

    @property
    def manifold(self) -> TriangulatedManifold:
        return self.skeleton.base

    @property
    def q(self) -> int:
        return self.skeleton.q

    def background_group(self) -> CohomologyGroup:
        return cohomology(self.skeleton.background_pair(), self.q + 1, self.coeff)

    def with_b(self, b: CohomologyClass) -> "DecoratedObject":
        return DecoratedObject(self.skeleton, self.coeff, b)

    def symmetry_group(self) -> CohomologyGroup:
        """H^q(sd Sigma; G): the group acting on this object's states."""
        return cohomology(
            SimplicialPair.absolute(self.skeleton.subdivision.complex),
            self.q,
            self.coeff,
        )

    def __eq__(self, other):
        return (
            isinstance(other, DecoratedObject)
            and self.skeleton == other.skeleton
            and self.coeff == other.coeff
            and self.b == other.b
        )

    def __hash__(self):
        return hash((self.skeleton, self.coeff, self.b.raw))


def make_object(
    base: TriangulatedManifold,
    q: int,
    coeff: FinAbGroup,
    b_raw: Sequence[int] = (),
    kept=None,
) -> DecoratedObject:
    sk = SkeletonPair(base, q, kept=kept)
    group = cohomology(sk.background_pair(), q + 1, coeff)
    raw = tuple(b_raw) if b_raw else (0,) * len(group.orders)
    return DecoratedObject(sk, coeff, group.element(raw))


@dataclass(frozen=True)
class BoundaryEmbedding:
    """Identification of an object's Sigma with boundary components of M."""

    obj: DecoratedObject
    vertex_map: dict  # object vertex -> bordism vertex
    components: tuple  # indices into the bordism's boundary components

    def sd_vertex_map(self) -> dict:
        """The induced map on subdivision vertices (barycenters)."""
        out = {}
        for s in self.obj.skeleton.subdivision.complex.vertices:
            out[s] = tuple(sorted((self.vertex_map[v] for v in s), key=str))
        return out


class DecoratedBordism:
    """A bordism manifold with a relative background class B.

    ``B`` lives in H^{q+1}(sd M, W; G) where W is the union of the boundary
    objects' dual-skeleton models transported into sd M.
    """

    def __init__(
        self,
        manifold: TriangulatedManifold,
        coeff: FinAbGroup,
        q: int,
        incoming: BoundaryEmbedding | None,
        outgoing: BoundaryEmbedding | None,
        B: CohomologyClass | None = None,
        origin: dict | None = None,
    ):
        self.manifold = manifold
        self.coeff = coeff
        self.q = q
        self.incoming = incoming
        self.outgoing = outgoing
        covered = []
        for emb in (incoming, outgoing):
            if emb is not None:
                covered.extend(emb.components)
        if sorted(covered) != list(range(len(manifold.boundary_components))):
            raise ValueError("boundary embeddings must cover each component once")
        self.subdivision = subdivision_of(manifold.complex)
        self._check_embeddings()
        self.W = frozenset().union(
            *(
                self._transported_dual_model(emb)
                for emb in (incoming, outgoing)
                if emb is not None
            )
        ) if (incoming or outgoing) else frozenset()
        self.pair = SimplicialPair.make(self.subdivision.complex, self.W)
        if origin is None:
            uid = next(_uid_counter)
            origin = {v: (uid, str(v)) for v in manifold.complex.vertices}
        self.origin = origin
        self._pulls: dict = {}
        group = self.background_group()
        self.B = group.zero() if B is None else B
        if self.B.parent is not group:
            raise ValueError("B does not live in the bordism's background group")

    def _check_embeddings(self):
        for emb in (self.incoming, self.outgoing):
            if emb is None:
                continue
            target = set().union(
                *(self.manifold.boundary_components[c] for c in emb.components)
            )
            source = emb.obj.manifold.complex
            rank = self.manifold.complex.vertex_rank
            image = set()
            for d, sims in source.simplices.items():
                for s in sims:
                    t = tuple(sorted((emb.vertex_map[v] for v in s), key=rank))
                    if len(set(t)) != len(t) or t not in target:
                        raise ValueError(
                            f"embedding is not a simplicial isomorphism at {s}"
                        )
                    image.add(t)
            if image != target:
                raise ValueError("embedding does not cover its boundary components")

    def _transported_dual_model(self, emb: BoundaryEmbedding) -> set:
        rank = self.manifold.complex.vertex_rank
        vmap = emb.vertex_map
        out = set()
        sd = self.subdivision.complex
        for s in emb.obj.skeleton.dual_model:
            image = tuple(
                tuple(sorted((vmap[v] for v in carrier), key=rank)) for carrier in s
            )
            image = tuple(sorted(image, key=sd.vertex_rank))
            out.add(image)
        return out

    def background_group(self) -> CohomologyGroup:
        return cohomology(self.pair, self.q + 1, self.coeff)

    # -- boundary restriction ---------------------------------------------

    def _embedding_map(self, emb: BoundaryEmbedding) -> SimplicialMap:
        rank = self.manifold.complex.vertex_rank
        vmap = emb.vertex_map
        sd_map = {
            s: tuple(sorted((vmap[v] for v in s), key=rank))
            for s in emb.obj.skeleton.subdivision.complex.vertices
        }
        return SimplicialMap(emb.obj.skeleton.background_pair(), self.pair, sd_map)

    def boundary_pullback(self, emb: BoundaryEmbedding) -> InducedMap:
        """Cached pullback to one boundary object's background group."""
        key = id(emb)
        got = self._pulls.get(key)
        if got is None:
            f = self._embedding_map(emb)
            got = induced_pullback(f, self.q + 1, self.coeff)
            self._pulls[key] = got
        return got

    def restriction(self, emb: BoundaryEmbedding) -> CohomologyClass:
        return self.boundary_pullback(emb)(self.B)

    def restrict(self):
        """(b_out, b_in) pullbacks of B; None where there is no boundary."""
        b_out = self.restriction(self.outgoing) if self.outgoing else None
        b_in = self.restriction(self.incoming) if self.incoming else None
        return b_out, b_in

    def check_decoration(self):
        if self.incoming and self.restriction(self.incoming) != self.incoming.obj.b:
            raise ValueError("B does not restrict to the incoming object's b")
        if self.outgoing and self.restriction(self.outgoing) != self.outgoing.obj.b:
            raise ValueError("B does not restrict to the outgoing object's b")

    def with_B(self, B: CohomologyClass) -> "DecoratedBordism":
        """A copy with a different bulk class; shares all derived data."""
        if B.parent is not self.background_group():
            raise ValueError("B does not live in the bordism's background group")
        out = object.__new__(DecoratedBordism)
        out.__dict__.update(self.__dict__)
        out.B = B
        return out

    def __repr__(self):
        return (
            f"DecoratedBordism(d={self.manifold.dimension}, q={self.q}, "
            f"G={self.coeff}, |B-group|={self.background_group().order})"
        )


# ---------------------------------------------------------------------------
# builders


def _layer_components(cyl: TriangulatedManifold, layer: int) -> tuple:
    """Boundary components of a prism whose vertices all sit at the layer."""
    return tuple(
        i
        for i, comp in enumerate(cyl.boundary_components)
        if all(v[1] == layer for s in comp for v in s)
    )


def _cylinder_embeddings(
    obj_in: DecoratedObject, obj_out: DecoratedObject
) -> tuple:
    """Embeddings of the two ends of the prism over a shared base Sigma."""
    base = obj_in.manifold
    cyl = cylinder_manifold(base)
    emb_in = BoundaryEmbedding(
        obj_in, {v: (v, 0) for v in base.complex.vertices}, _layer_components(cyl, 0)
    )
    emb_out = BoundaryEmbedding(
        obj_out, {v: (v, 1) for v in base.complex.vertices}, _layer_components(cyl, 1)
    )
    return cyl, emb_in, emb_out


_CYL_SHELL_CACHE: dict = {}


def _cylinder_shell(obj_in: DecoratedObject, obj_out: DecoratedObject) -> DecoratedBordism:
    """A cached zero-decorated cylinder bordism between objects on one base.

    Identity and symmetry cylinders over the same objects share this shell
    (and with it the cached boundary pullbacks), differing only in B.
    """
    key = (obj_in, obj_out)
    got = _CYL_SHELL_CACHE.get(key)
    if got is None:
        cyl, emb_in, emb_out = _cylinder_embeddings(obj_in, obj_out)
        got = DecoratedBordism(cyl, obj_in.coeff, obj_in.q, emb_in, emb_out)
        _CYL_SHELL_CACHE[key] = got
    return got


def _parallel_transport_class(shell: DecoratedBordism) -> Cochain:
    """(sd p)^* of rep(b) along the projection Sigma x I -> Sigma."""
    obj = shell.incoming.obj
    sd_base = obj.skeleton.subdivision.complex
    rank = sd_base.vertex_rank
    proj = {}
    for s in shell.subdivision.complex.vertices:
        image = tuple(sorted({v for (v, layer) in s}, key=obj.manifold.complex.vertex_rank))
        proj[s] = image
    f = SimplicialMap(shell.pair, obj.skeleton.background_pair(), proj)
    return f.pullback(obj.b.representative())


def _end_twist(shell: DecoratedBordism, emb: BoundaryEmbedding, cocycle: Cochain) -> Cochain:
    """delta of the zero-extension of a dual-model cocycle placed on one end.

    ``cocycle`` is a degree-q cocycle supported on the object's dual-model
    simplices; the result is a relative cocycle of the shell whose class
    shifts the A.3-perpendicular component.
    """
    rank = shell.manifold.complex.vertex_rank
    vmap = emb.vertex_map
    sd = shell.subdivision.complex
    lifted = Cochain(cocycle.dimension, cocycle.factors)
    for s, val in cocycle.values.items():
        image = tuple(
            tuple(sorted((vmap[v] for v in carrier), key=rank)) for carrier in s
        )
        image = tuple(sorted(image, key=sd.vertex_rank))
        lifted.set_value(image, val)
    from .cohomology import _GROUP_CACHE  # noqa: F401  (cache warm not needed)
    from .complexes import coboundary

    return coboundary(SimplicialPair.absolute(sd), lifted).restrict_support(
        set(shell.pair.relative_simplices(cocycle.dimension + 1))
    )


def identity_bordism(obj: DecoratedObject) -> DecoratedBordism:
    """The identity cylinder (Sigma x I, b "parallel-transported")."""
    shell = _cylinder_shell(obj, obj)
    cochain = _parallel_transport_class(shell)
    B = shell.background_group().class_of(cochain)
    return shell.with_B(B)


def symmetry_cylinder(obj: DecoratedObject, beta: CohomologyClass) -> DecoratedBordism:
    """The cylinder implementing the symmetry action of beta in H^q(Sigma).

    The bulk class is the parallel-transported b shifted by the coboundary of
    beta's restriction to the incoming end's dual model; both ends still
    restrict to b.
    """
    sym = obj.symmetry_group()
    if beta.parent is not sym:
        raise ValueError("beta must lie in H^q(Sigma)")
    shell = _cylinder_shell(obj, obj)
    cochain = _parallel_transport_class(shell)
    dual_rep = beta.representative().restrict_support(obj.skeleton.dual_model)
    cochain = cochain + _end_twist(shell, shell.incoming, dual_rep)
    B = shell.background_group().class_of(cochain)
    bordism = shell.with_B(B)
    bordism.check_decoration()
    return bordism


def compose(later: DecoratedBordism, earlier: DecoratedBordism) -> DecoratedBordism:
    """later o earlier: glue along later.incoming == earlier.outgoing.

    The bulk classes are matched on the cut at cochain level (unique up to
    the coboundary ambiguity the relative Mayer-Vietoris sequence kills) and
    the glued cocycle's class is taken relative to the remaining boundary.
    """
    if later.incoming is None or earlier.outgoing is None:
        raise ValueError("bordisms are not composable along a shared object")
    cut_obj = earlier.outgoing.obj
    if later.incoming.obj != cut_obj:
        raise ValueError("middle objects differ")
    if (later.coeff, later.q) != (earlier.coeff, earlier.q):
        raise ValueError("symmetry data differs")
    coeff, q = later.coeff, later.q

    # --- match cochain representatives on the cut
    rep_e = earlier.B.representative()
    rep_l = later.B.representative()
    pull_e = earlier._embedding_map(earlier.outgoing).pullback(rep_e)
    pull_l = later._embedding_map(later.incoming).pullback(rep_l)
    diff = pull_e - pull_l
    lam = solve_coboundary(cut_obj.skeleton.background_pair(), coeff, diff)
    if lam is None:
        raise ValueError("cut classes disagree; bordisms not composable")
    rep_l = rep_l + _shift_by_cut_cochain(later, later.incoming, lam)
    # now the pullbacks agree simplex-by-simplex on the cut

    # --- glue the manifolds
    match = {
        earlier.outgoing.vertex_map[v]: later.incoming.vertex_map[v]
        for v in cut_obj.manifold.complex.vertices
    }
    glued, vmap_e, vmap_l = glue(
        earlier.manifold,
        later.manifold,
        earlier.outgoing.components,
        later.incoming.components,
        match,
    )

    # --- transported boundary embeddings
    new_in = _transport_embedding(earlier.incoming, vmap_e, glued)
    new_out = _transport_embedding(later.outgoing, vmap_l, glued)
    origin = {}
    for v, w in vmap_e.items():
        origin[w] = min(origin.get(w, earlier.origin[v]), earlier.origin[v])
    for v, w in vmap_l.items():
        origin[w] = min(origin.get(w, later.origin[v]), later.origin[v])
    shell = DecoratedBordism(glued, coeff, q, new_in, new_out, origin=origin)

    # --- glue the cocycles
    glued_cochain = Cochain(q + 1, coeff.invariant_factors)
    for rep, src, vmap in ((rep_e, earlier, vmap_e), (rep_l, later, vmap_l)):
        rank = glued.complex.vertex_rank
        sd = shell.subdivision.complex
        for s, val in rep.values.items():
            image = tuple(
                tuple(sorted((vmap[v] for v in carrier), key=rank)) for carrier in s
            )
            image = tuple(sorted(image, key=sd.vertex_rank))
            existing = glued_cochain.values.get(image)
            if existing is not None and existing != tuple(val):
                raise ValueError("cut matching failed (cocycles disagree)")
            glued_cochain.set_value(image, val)
    B = shell.background_group().class_of(glued_cochain)
    out = shell.with_B(B)
    out.check_decoration()
    return out


def _shift_by_cut_cochain(
    bordism: DecoratedBordism, emb: BoundaryEmbedding, lam: Cochain
) -> Cochain:
    """delta of the zero-extension of a relative cut cochain into the bulk."""
    return _end_twist(bordism, emb, lam)


def _transport_embedding(
    emb: BoundaryEmbedding | None, vmap: dict, glued: TriangulatedManifold
):
    if emb is None:
        return None
    new_map = {v: vmap[w] for v, w in emb.vertex_map.items()}
    verts = {new_map[v] for v in emb.obj.manifold.complex.vertices}
    comps = tuple(
        i
        for i, comp in enumerate(glued.boundary_components)
        if any((v,) in comp for v in verts)
    )
    return BoundaryEmbedding(emb.obj, new_map, comps)


def skeleton_change(
    obj_from: DecoratedObject, obj_to: DecoratedObject, cap: int = 10**6
):
    """A cylinder bordism obj_from -> obj_to changing the skeleton, or None.

    Both objects live on the same base triangulation.  Returns (bordism,
    solution_count); the bordism is the first admissible background in the
    deterministic enumeration order, None when no background restricts to
    (b_from, b_to).
    """
    if obj_from.manifold is not obj_to.manifold:
        raise ValueError("skeleton change requires the same base triangulation")
    shell = _cylinder_shell(obj_from, obj_to)
    found = None
    count = 0
    group = shell.background_group()
    pull_in = shell.boundary_pullback(shell.incoming)
    pull_out = shell.boundary_pullback(shell.outgoing)
    for B in group.classes(cap=cap):
        if pull_in(B) == obj_from.b and pull_out(B) == obj_to.b:
            count += 1
            if found is None:
                found = shell.with_B(B)
    return found, count


@dataclass
class BackgroundSet:
    """All admissible bulk classes for fixed boundary decorations."""

    bordism: DecoratedBordism
    backgrounds: tuple

    def __len__(self):
        return len(self.backgrounds)


def enumerate_backgrounds(shell: DecoratedBordism, cap: int = 10**6) -> BackgroundSet:
    """All B restricting to the boundary objects' classes on a shell bordism."""
    group = shell.background_group()
    pulls = []
    for emb in (shell.incoming, shell.outgoing):
        if emb is not None:
            pulls.append((shell.boundary_pullback(emb), emb.obj.b))
    found = tuple(
        B
        for B in group.classes(cap=cap)
        if all(pull(B) == target for pull, target in pulls)
    )
    return BackgroundSet(shell, found)


# ---------------------------------------------------------------------------
# monoidal structure


def object_union(a: DecoratedObject, b: DecoratedObject) -> DecoratedObject:
    """Disjoint union of decorated objects."""
    if (a.coeff, a.q) != (b.coeff, b.q):
        raise ValueError("objects carry different symmetry data")
    from .complexes import disjoint_union

    union, map_a, map_b = disjoint_union(a.manifold.complex, b.manifold.complex)
    base = TriangulatedManifold(union, a.manifold.dimension)
    align_orientation(base, [(a.manifold, map_a), (b.manifold, map_b)])
    kept = {tuple(map_a[v] for v in s) for s in a.skeleton.kept} | {
        tuple(map_b[v] for v in s) for s in b.skeleton.kept
    }
    if a.skeleton.is_dual != b.skeleton.is_dual:
        raise ValueError("objects carry skeletons of different flavors")
    if a.skeleton.is_dual:
        sk = SkeletonPair(base, a.skeleton.primal.q, kept=kept).dual()
    else:
        sk = SkeletonPair(base, a.q, kept=kept)
    group = cohomology(sk.background_pair(), a.q + 1, a.coeff)
    # the union background restricts to the two summands; find it by
    # transporting both representatives
    rep = Cochain(a.q + 1, a.coeff.invariant_factors)
    sdc = sk.subdivision.complex
    for (o, vmap) in ((a, map_a), (b, map_b)):
        for s, val in o.b.representative().values.items():
            image = tuple(
                tuple(sorted((vmap[v] for v in carrier), key=base.complex.vertex_rank))
                for carrier in s
            )
            image = tuple(sorted(image, key=sdc.vertex_rank))
            rep.set_value(image, val)
    return DecoratedObject(sk, a.coeff, group.class_of(rep))


def braiding(a: DecoratedObject, b: DecoratedObject) -> DecoratedBordism:
    """The swap cylinder (a x b) -> (b x a), a relabeling bordism."""
    ab = object_union(a, b)
    ba = object_union(b, a)
    base = ab.manifold
    cyl = cylinder_manifold(base)
    emb_in = BoundaryEmbedding(
        ab, {v: (v, 0) for v in base.complex.vertices}, _layer_components(cyl, 0)
    )
    swap = {}
    for v in a.manifold.complex.vertices:
        swap[(1, v)] = ((0, v), 1)
    for v in b.manifold.complex.vertices:
        swap[(0, v)] = ((1, v), 1)
    emb_out = BoundaryEmbedding(ba, swap, _layer_components(cyl, 1))
    shell = DecoratedBordism(cyl, a.coeff, a.q, emb_in, emb_out)
    cochain = _parallel_transport_class(shell)
    B = shell.background_group().class_of(cochain)
    bordism = shell.with_B(B)
    bordism.check_decoration()
    return bordism


def bordism_union(f: "DecoratedBordism", g: "DecoratedBordism") -> "DecoratedBordism":
    """Disjoint union of bordisms (the monoidal product on morphisms)."""
    if (f.coeff, f.q) != (g.coeff, g.q):
        raise ValueError("bordisms carry different symmetry data")
    from .complexes import disjoint_union

    union, map_f, map_g = disjoint_union(f.manifold.complex, g.manifold.complex)
    manifold = TriangulatedManifold(union, f.manifold.dimension)
    align_orientation(manifold, [(f.manifold, map_f), (g.manifold, map_g)])

    def combined(emb_f, emb_g):
        if emb_f is None and emb_g is None:
            return None
        if emb_g is None:
            return _transport_embedding(emb_f, map_f, manifold)
        if emb_f is None:
            return _transport_embedding(emb_g, map_g, manifold)
        obj = object_union(emb_f.obj, emb_g.obj)
        vmap = {}
        for v, w in emb_f.vertex_map.items():
            vmap[(0, v)] = map_f[w]
        for v, w in emb_g.vertex_map.items():
            vmap[(1, v)] = map_g[w]
        verts = set(vmap.values())
        comps = tuple(
            i
            for i, comp in enumerate(manifold.boundary_components)
            if any((v,) in comp for v in verts)
        )
        return BoundaryEmbedding(obj, vmap, comps)

    origin = {map_f[v]: f.origin[v] for v in f.manifold.complex.vertices}
    origin.update({map_g[v]: g.origin[v] for v in g.manifold.complex.vertices})
    shell = DecoratedBordism(
        manifold,
        f.coeff,
        f.q,
        combined(f.incoming, g.incoming),
        combined(f.outgoing, g.outgoing),
        origin=origin,
    )
    rep = Cochain(f.q + 1, f.coeff.invariant_factors)
    rank = manifold.complex.vertex_rank
    sdc = shell.subdivision.complex
    for src, vmap in ((f, map_f), (g, map_g)):
        for s, val in src.B.representative().values.items():
            image = tuple(
                tuple(sorted((vmap[v] for v in carrier), key=rank)) for carrier in s
            )
            image = tuple(sorted(image, key=sdc.vertex_rank))
            rep.set_value(image, val)
    out = shell.with_B(shell.background_group().class_of(rep))
    out.check_decoration()
    return out


def canonical_form(bordism: DecoratedBordism):
    """A relabeling-invariant fingerprint of a decorated bordism.

    Vertices are renamed by their origin labels (which survive composition in
    either association order), so two composites of the same pieces compare
    equal exactly when their glued triangulations and bulk classes agree.
    """
    from .complexes import relabel

    names = bordism.origin
    order = sorted(names.values())
    renamed = relabel(bordism.manifold.complex, names, order)
    manifold = TriangulatedManifold(renamed, bordism.manifold.dimension)
    sd = subdivision_of(renamed)
    rep = bordism.B.representative()
    rank = renamed.vertex_rank
    cochain = Cochain(rep.dimension, rep.factors)
    for s, val in rep.values.items():
        image = tuple(
            tuple(sorted((names[v] for v in carrier), key=rank)) for carrier in s
        )
        image = tuple(sorted(image, key=sd.complex.vertex_rank))
        cochain.set_value(image, val)
    W = set()
    for s in bordism.W:
        image = tuple(
            tuple(sorted((names[v] for v in carrier), key=rank)) for carrier in s
        )
        W.add(tuple(sorted(image, key=sd.complex.vertex_rank)))
    pair = SimplicialPair.make(sd.complex, W)
    group = cohomology(pair, bordism.q + 1, bordism.coeff)
    cls = group.class_of(cochain)
    return (renamed, frozenset(W), cls.raw)
