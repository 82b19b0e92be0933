"""Oriented triangulated manifolds: validation, skeletons, cylinders, gluing.

A manifold here is a pure simplicial complex whose (d-1)-simplices each lie
in one or two top simplices, equipped with a consistent orientation (a sign
per top simplex).  Boundary components are derived, not declared.  Gluing is
strictly combinatorial: the matched boundary components must be identified
by a simplicial isomorphism, and the result is revalidated from scratch.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .complexes import (
    SimplicialComplex,
    SimplicialPair,
    Subdivision,
    _sort_sign,
    subdivision_of,
)


class ValidationError(Exception):
    def __init__(self, failures):
        super().__init__("; ".join(failures))
        self.failures = list(failures)


def _faces_with_signs(top: tuple):
    for i in range(len(top)):
        yield top[:i] + top[i + 1 :], (-1) ** i


class TriangulatedManifold:
    """A validated, oriented, triangulated manifold (with boundary allowed)."""

    def __init__(self, complex_: SimplicialComplex, dimension: int):
        self.complex = complex_
        self.dimension = dimension
        failures = []
        tops = complex_.n_simplices(dimension)
        if not tops:
            failures.append(f"no {dimension}-simplices")
        if complex_.dim != dimension:
            failures.append(
                f"complex dimension {complex_.dim} != declared {dimension}"
            )
        face_to_tops: dict = {}
        for t in tops:
            for f, s in _faces_with_signs(t):
                face_to_tops.setdefault(f, []).append((t, s))
        for f, ts in face_to_tops.items():
            if len(ts) > 2:
                failures.append(f"face {f} lies in {len(ts)} top simplices")
        # purity: every simplex is a face of a top simplex
        in_top = set()
        for t in tops:
            stack = [t]
            while stack:
                s = stack.pop()
                if s in in_top:
                    continue
                in_top.add(s)
                if len(s) > 1:
                    for i in range(len(s)):
                        stack.append(s[:i] + s[i + 1 :])
        for d, sims in complex_.simplices.items():
            for s in sims:
                if s not in in_top:
                    failures.append(f"simplex {s} not contained in any top simplex")
        if failures:
            raise ValidationError(failures)
        self._face_to_tops = face_to_tops
        self.orientation = self._orient(tops, face_to_tops)
        self.boundary_faces = tuple(
            sorted((f for f, ts in face_to_tops.items() if len(ts) == 1),
                   key=lambda f: tuple(complex_.vertex_rank(v) for v in f))
        )
        self.boundary_components = self._split_boundary()

    def _orient(self, tops, face_to_tops) -> dict:
        """Propagate orientation signs; the first top simplex of each
        connected component gets +1."""
        sign: dict = {}
        for seed in tops:
            if seed in sign:
                continue
            sign[seed] = 1
            stack = [seed]
            while stack:
                t = stack.pop()
                for f, s in _faces_with_signs(t):
                    for t2, s2 in face_to_tops[f]:
                        if t2 == t:
                            continue
                        # induced orientations on a shared interior face
                        # must cancel
                        want = -sign[t] * s * s2
                        if t2 in sign:
                            if sign[t2] != want:
                                raise ValidationError(
                                    [f"orientation conflict across face {f}"]
                                )
                        else:
                            sign[t2] = want
                            stack.append(t2)
        return sign

    def _split_boundary(self) -> tuple:
        """Connected components of the boundary, each a frozenset of faces
        (closed under faces), ordered deterministically."""
        if not self.boundary_faces:
            return ()
        adj: dict = {}
        for f in self.boundary_faces:
            for sub, _ in _faces_with_signs(f):
                adj.setdefault(sub, []).append(f)
        comp_of: dict = {}
        comps = []
        for f in self.boundary_faces:
            if f in comp_of:
                continue
            comp = set()
            stack = [f]
            while stack:
                g = stack.pop()
                if g in comp:
                    continue
                comp.add(g)
                comp_of[g] = len(comps)
                for sub, _ in _faces_with_signs(g):
                    for g2 in adj[sub]:
                        if g2 not in comp:
                            stack.append(g2)
            comps.append(comp)
        out = []
        for comp in comps:
            closed = set()
            stack = list(comp)
            while stack:
                s = stack.pop()
                if s in closed:
                    continue
                closed.add(s)
                if len(s) > 1:
                    for i in range(len(s)):
                        stack.append(s[:i] + s[i + 1 :])
            out.append(frozenset(closed))
        rank = self.complex.vertex_rank
        out.sort(key=lambda c: min(tuple(rank(v) for v in s) for s in c))
        return tuple(out)

    # -- derived data ------------------------------------------------------

    @property
    def is_closed(self) -> bool:
        return not self.boundary_faces

    def fundamental_cycle(self) -> list:
        """[(top simplex, sign)] over all top simplices.

        The signs come from the stored orientation, which gluing and
        cylinder construction keep coherent with their input pieces, so the
        cycle is well defined componentwise even for disconnected manifolds.
        """
        return [
            (t, self.orientation[t])
            for t in self.complex.n_simplices(self.dimension)
        ]

    def _is_connected(self) -> bool:
        tops = self.complex.n_simplices(self.dimension)
        seen = {tops[0]}
        stack = [tops[0]]
        while stack:
            t = stack.pop()
            for f, _ in _faces_with_signs(t):
                for t2, _ in self._face_to_tops[f]:
                    if t2 not in seen:
                        seen.add(t2)
                        stack.append(t2)
        return len(seen) == len(tops)

    def boundary_component_manifold(self, idx: int) -> "TriangulatedManifold":
        comp = self.boundary_components[idx]
        verts = [v for v in self.complex.vertices if (v,) in comp]
        by_dim: dict = {}
        for s in comp:
            by_dim.setdefault(len(s) - 1, []).append(s)
        return TriangulatedManifold(
            SimplicialComplex(verts, by_dim), self.dimension - 1
        )

    def boundary_orientation(self, idx: int) -> dict:
        """Induced orientation sign for each (d-1)-face of the component."""
        comp = self.boundary_components[idx]
        out = {}
        for f in self.boundary_faces:
            if f in comp:
                (t, s), = self._face_to_tops[f]
                out[f] = self.orientation[t] * s
        return out

    def euler_characteristic(self) -> int:
        return self.complex.euler_characteristic()

    def __repr__(self):
        return (
            f"TriangulatedManifold(d={self.dimension}, "
            f"chi={self.euler_characteristic()}, "
            f"boundary_components={len(self.boundary_components)})"
        )


def validate(complex_: SimplicialComplex, dimension: int):
    """Build a manifold, returning (manifold, []) or (None, failures)."""
    try:
        return TriangulatedManifold(complex_, dimension), []
    except ValidationError as e:
        return None, e.failures


# ---------------------------------------------------------------------------
# skeleton pairs


class SkeletonPair:
    """A skeleton choice on a closed manifold, realized in the subdivision.

    ``kept`` is a subcomplex of the base triangulation of dimension at most
    d-q-2 (by default the full (d-q-2)-skeleton).  The model of the skeleton
    is the full subcomplex of the barycentric subdivision spanned by the
    barycenters of kept simplices; the dual model is the full subcomplex
    spanned by the remaining barycenters.  The complement of either
    deformation retracts onto the other, so relative groups "rel complement
    of sk" are computed rel the dual model and vice versa.
    """

    def __init__(self, base: TriangulatedManifold, q: int, kept: Iterable | None = None):
        d = base.dimension + 1  # bulk dimension the object lives in
        if not base.is_closed:
            raise ValueError("skeletons live on closed manifolds")
        if not (0 <= q <= d - 2):
            raise ValueError(f"q={q} out of range for d={d}")
        self.base = base
        self.q = q
        self.bulk_dimension = d
        max_dim = d - q - 2
        if kept is None:
            kept = [
                s
                for dim, sims in base.complex.simplices.items()
                if dim <= max_dim
                for s in sims
            ]
        self.kept = frozenset(
            tuple(sorted(s, key=base.complex.vertex_rank)) for s in kept
        )
        for s in self.kept:
            if len(s) - 1 > max_dim:
                raise ValueError(f"skeleton simplex {s} exceeds dimension {max_dim}")
            if not base.complex.has_simplex(s):
                raise ValueError(f"skeleton simplex {s} not in the triangulation")
            for i in range(len(s)):
                if len(s) > 1 and s[:i] + s[i + 1 :] not in self.kept:
                    raise ValueError("skeleton must be a subcomplex")
        self.subdivision = subdivision_of(base.complex)
        sd = self.subdivision
        self.sk_model = frozenset(
            sd.full_subcomplex([v for v in sd.complex.vertices if v in self.kept])
        )
        self.dual_model = frozenset(
            sd.full_subcomplex([v for v in sd.complex.vertices if v not in self.kept])
        )
        self.is_dual = False
        self.primal = self

    def dual(self) -> "SkeletonPair":
        """The dual-flavor view: the roles of skeleton and dual skeleton swap.

        On the dual view, ``q`` is the dual form degree d-q-2 and background
        classes live rel the original skeleton model.  Dualizing twice gives
        back the original view.
        """
        if self.is_dual:
            return self.primal
        out = object.__new__(SkeletonPair)
        out.base = self.base
        out.bulk_dimension = self.bulk_dimension
        out.q = self.bulk_dimension - self.q - 2
        out.kept = self.kept
        out.subdivision = self.subdivision
        out.sk_model = self.dual_model
        out.dual_model = self.sk_model
        out.is_dual = True
        out.primal = self
        return out

    @property
    def is_default(self) -> bool:
        if self.is_dual:
            return self.primal.is_default
        max_dim = self.bulk_dimension - self.q - 2
        return self.kept == frozenset(
            s
            for dim, sims in self.base.complex.simplices.items()
            if dim <= max_dim
            for s in sims
        )

    def background_pair(self) -> SimplicialPair:
        """(sd Sigma, dual model): background classes live in H^{q+1} of this."""
        return SimplicialPair.make(self.subdivision.complex, self.dual_model)

    def dual_background_pair(self) -> SimplicialPair:
        """(sd Sigma, sk model): dual backgrounds live in H^{q*+1} of this."""
        return SimplicialPair.make(self.subdivision.complex, self.sk_model)

    def __eq__(self, other):
        return (
            isinstance(other, SkeletonPair)
            and self.base is other.base
            and self.q == other.q
            and self.kept == other.kept
            and self.is_dual == other.is_dual
        )

    def __hash__(self):
        return hash((id(self.base), self.q, self.kept, self.is_dual))


def skeleton_pair(base: TriangulatedManifold, q: int) -> SkeletonPair:
    return SkeletonPair(base, q)


# ---------------------------------------------------------------------------
# cylinders


def prism_complex(base: SimplicialComplex) -> SimplicialComplex:
    """Triangulation of base x [0,1] with vertices (v, layer).

    Each base d-simplex (v0 < ... < vd) yields the d+1 simplices
    (v0^0 .. vi^0, vi^1 .. vd^1); adjacent prisms match on shared faces.
    Layer-0 vertices come first in the vertex order.
    """
    verts = [(v, 0) for v in base.vertices] + [(v, 1) for v in base.vertices]
    d = base.dim
    tops = []
    for s in base.n_simplices(d):
        for i in range(len(s)):
            tops.append(
                tuple((v, 0) for v in s[: i + 1]) + tuple((v, 1) for v in s[i:])
            )
    return SimplicialComplex.from_maximal(verts, tops)


def _top_component_ids(m: TriangulatedManifold) -> dict:
    """Connected-component index for each top simplex."""
    out: dict = {}
    next_id = 0
    for t in m.complex.n_simplices(m.dimension):
        if t in out:
            continue
        out[t] = next_id
        stack = [t]
        while stack:
            cur = stack.pop()
            for f, _ in _faces_with_signs(cur):
                for t2, _ in m._face_to_tops[f]:
                    if t2 not in out:
                        out[t2] = next_id
                        stack.append(t2)
        next_id += 1
    return out


def _flip_components(m: TriangulatedManifold, comp_ids: dict, flip: set):
    for t, c in comp_ids.items():
        if c in flip:
            m.orientation[t] = -m.orientation[t]


def align_orientation(out: TriangulatedManifold, pieces):
    """Flip components of ``out`` to match the orientations of its pieces.

    ``pieces`` is an iterable of (manifold, vertex_map) whose top simplices
    map into ``out``; the first piece meeting each component of ``out``
    decides its sign.  Within one component all tops of one piece agree
    automatically, since both orientations are consistent.
    """
    comp_ids = _top_component_ids(out)
    rank = out.complex.vertex_rank
    decided: dict = {}
    for ref, vmap in pieces:
        for t in ref.complex.n_simplices(ref.dimension):
            image_list = [vmap[v] for v in t]
            sign = _sort_sign(image_list, rank)
            image = tuple(sorted(image_list, key=rank))
            c = comp_ids[image]
            if c not in decided:
                decided[c] = out.orientation[image] * sign == ref.orientation[t]
    _flip_components(out, comp_ids, {c for c, ok in decided.items() if not ok})


def cylinder_manifold(base: TriangulatedManifold) -> TriangulatedManifold:
    """base x I as a manifold; boundary components are base x {0} and {1}.

    Oriented so the layer-1 end carries the induced orientation of the base.
    """
    cyl = TriangulatedManifold(prism_complex(base.complex), base.dimension + 1)
    comp_ids = _top_component_ids(cyl)
    rank = cyl.complex.vertex_rank
    decided: dict = {}
    for t in base.complex.n_simplices(base.dimension):
        face_list = [(v, 1) for v in t]
        sign = _sort_sign(face_list, rank)
        face = tuple(sorted(face_list, key=rank))
        ((top, fsign),) = cyl._face_to_tops[face]
        c = comp_ids[top]
        if c not in decided:
            decided[c] = cyl.orientation[top] * fsign * sign == base.orientation[t]
    _flip_components(cyl, comp_ids, {c for c, ok in decided.items() if not ok})
    return cyl


_SD_MANIFOLD_CACHE: dict = {}


def subdivided_manifold(m: TriangulatedManifold) -> TriangulatedManifold:
    """The barycentric subdivision as a manifold, with induced orientation.

    A top flag (s_0 < ... < s_d) inherits the sign of its top carrier times
    the parity of the vertex sequence the flag spells out, which makes the
    subdivided fundamental cycle represent the same class as the original.
    """
    got = _SD_MANIFOLD_CACHE.get(id(m))
    if got is not None:
        return got[1]
    sd = subdivision_of(m.complex)
    out = TriangulatedManifold(sd.complex, m.dimension)
    rank = m.complex.vertex_rank
    for flag in sd.complex.n_simplices(m.dimension):
        seq = []
        prev: set = set()
        for carrier in flag:
            (new,) = set(carrier) - prev
            seq.append(new)
            prev = set(carrier)
        out.orientation[flag] = m.orientation[flag[-1]] * _sort_sign(seq, rank)
    _SD_MANIFOLD_CACHE[id(m)] = (m, out)
    return out


# ---------------------------------------------------------------------------
# gluing


def glue(
    m_a: TriangulatedManifold,
    m_b: TriangulatedManifold | None,
    comp_a,
    comp_b,
    vertex_match: dict,
):
    """Glue boundary component(s) comp_a of m_a to comp_b of m_b.

    ``comp_a`` / ``comp_b`` are component indices or sequences of them;
    ``vertex_match`` maps the boundary vertices of the comp_a components to
    those of the comp_b components and must restrict to a simplicial
    isomorphism on each matched piece.  Pass ``m_b=None`` to glue boundary
    components of m_a to each other.  Returns (manifold, vmap_a, vmap_b):
    the maps from original vertex ids into the glued complex.
    """
    self_glue = m_b is None
    mb = m_a if self_glue else m_b
    comp_a = (comp_a,) if isinstance(comp_a, int) else tuple(comp_a)
    comp_b = (comp_b,) if isinstance(comp_b, int) else tuple(comp_b)
    if self_glue and set(comp_a) & set(comp_b):
        raise ValueError("cannot glue a component to itself")
    ca = frozenset().union(*(m_a.boundary_components[i] for i in comp_a))
    cb = frozenset().union(*(mb.boundary_components[i] for i in comp_b))
    verts_a = {v for s in ca for v in s}
    verts_b = {v for s in cb for v in s}
    if set(vertex_match) != verts_a or set(vertex_match.values()) != verts_b:
        raise ValueError("vertex match must be a bijection of the two components")
    # simplicial isomorphism check
    for s in ca:
        image = tuple(sorted((vertex_match[v] for v in s), key=mb.complex.vertex_rank))
        if image not in cb:
            raise ValueError(f"match does not send component simplex {s} into target")
    inv_match = {w: v for v, w in vertex_match.items()}
    if len(inv_match) != len(vertex_match):
        raise ValueError("vertex match is not injective")

    if self_glue:
        vmap_a = {}
        for v in m_a.complex.vertices:
            if v in verts_b:
                vmap_a[v] = ("g", inv_match[v])
            elif v in verts_a:
                vmap_a[v] = ("g", v)
            else:
                vmap_a[v] = ("a", v)
        vmap_b = vmap_a
        tagged_tops = [
            tuple(vmap_a[v] for v in t)
            for t in m_a.complex.n_simplices(m_a.dimension)
        ]
    else:
        vmap_a = {
            v: ("g", v) if v in verts_a else ("a", v) for v in m_a.complex.vertices
        }
        vmap_b = {
            v: ("g", inv_match[v]) if v in verts_b else ("b", v)
            for v in m_b.complex.vertices
        }
        tagged_tops = [
            tuple(vmap_a[v] for v in t)
            for t in m_a.complex.n_simplices(m_a.dimension)
        ] + [
            tuple(vmap_b[v] for v in t)
            for t in m_b.complex.n_simplices(m_b.dimension)
        ]
    vertex_order = sorted({v for t in tagged_tops for v in t})
    glued = SimplicialComplex.from_maximal(vertex_order, tagged_tops)
    manifold = TriangulatedManifold(glued, m_a.dimension)
    pieces = [(m_a, vmap_a)] if self_glue else [(m_a, vmap_a), (m_b, vmap_b)]
    align_orientation(manifold, pieces)
    return manifold, vmap_a, vmap_b


# ---------------------------------------------------------------------------
# the fixture library


def _circle_complex(n: int = 3) -> SimplicialComplex:
    return SimplicialComplex.from_maximal(
        list(range(n)), [(i, (i + 1) % n) for i in range(n)]
    )


def _torus2_complex() -> SimplicialComplex:
    faces = []
    for i in range(7):
        faces.append((i, (i + 1) % 7, (i + 3) % 7))
        faces.append((i, (i + 2) % 7, (i + 3) % 7))
    return SimplicialComplex.from_maximal(list(range(7)), faces)

def _sphere2_complex() -> SimplicialComplex:
    # octahedron: poles 0/5, equator 1-4
    faces = []
    for i in range(4):
        a, b = 1 + i, 1 + (i + 1) % 4
        faces.append((0, a, b))
        faces.append((5, a, b))
    return SimplicialComplex.from_maximal(list(range(6)), faces)


def _genus2_complex() -> SimplicialComplex:
    """Two one-holed 7-vertex tori glued along the hole boundary (0,1,3)."""
    hole = (0, 1, 3)
    tops = []
    for copy in (0, 1):
        for i in range(7):
            for f in ((i, (i + 1) % 7, (i + 3) % 7), (i, (i + 2) % 7, (i + 3) % 7)):
                f = tuple(sorted(f))
                if f == hole:
                    continue
                tops.append(
                    tuple(v if v in hole else (copy, v) for v in f)
                )
    verts = sorted({v for t in tops for v in t}, key=str)
    return SimplicialComplex.from_maximal(verts, tops)


def _sphere3_complex() -> SimplicialComplex:
    return SimplicialComplex.from_maximal(
        list(range(5)), list(itertools.combinations(range(5), 4))
    )


def _torus3_complex() -> SimplicialComplex:
    """27-vertex 3-torus: unit-cube staircase triangulation on (Z_3)^3."""
    verts = list(itertools.product(range(3), repeat=3))
    tops = []
    basis = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    for p in verts:
        for perm in itertools.permutations(basis):
            chain = [p]
            cur = p
            for step in perm:
                cur = tuple((a + b) % 3 for a, b in zip(cur, step))
                chain.append(cur)
            tops.append(tuple(chain))
    return SimplicialComplex.from_maximal(verts, tops)


def _disk_complex() -> SimplicialComplex:
    """Cone on the 3-vertex circle; boundary is the circle 0-1-2."""
    return SimplicialComplex.from_maximal(
        [0, 1, 2, 3], [(0, 1, 3), (1, 2, 3), (0, 2, 3)]
    )


def _annulus_complex(n: int = 3) -> SimplicialComplex:
    return prism_complex(_circle_complex(n))


def _pants_complex() -> SimplicialComplex:
    """Icosahedron minus three vertex-disjoint faces: a three-holed sphere."""
    ico = [
        (0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
        (11, 6, 7), (11, 7, 8), (11, 8, 9), (11, 9, 10), (11, 10, 6),
        (1, 2, 6), (2, 6, 7), (2, 3, 7), (3, 7, 8), (3, 4, 8),
        (4, 8, 9), (4, 5, 9), (5, 9, 10), (5, 1, 10), (1, 10, 6),
    ]
    removed = {(0, 1, 2), (3, 7, 8), (4, 5, 9)}
    tops = [tuple(sorted(f)) for f in ico if tuple(sorted(f)) not in removed]
    return SimplicialComplex.from_maximal(list(range(12)), tops)


_LIBRARY = {
    "circle": (_circle_complex, 1),
    "circle4": (lambda: _circle_complex(4), 1),
    "torus2": (_torus2_complex, 2),
    "sphere2": (_sphere2_complex, 2),
    "genus2": (_genus2_complex, 2),
    "sphere3": (_sphere3_complex, 3),
    "torus3": (_torus3_complex, 3),
    "disk": (_disk_complex, 2),
    "annulus": (_annulus_complex, 2),
    "annulus4": (lambda: _annulus_complex(4), 2),
    "pants": (_pants_complex, 2),
}

_LIBRARY_CACHE: dict = {}


def library(name: str) -> TriangulatedManifold:
    if name not in _LIBRARY:
        raise KeyError(f"unknown library manifold {name!r}; known: {sorted(_LIBRARY)}")
    if name not in _LIBRARY_CACHE:
        builder, dim = _LIBRARY[name]
        _LIBRARY_CACHE[name] = TriangulatedManifold(builder(), dim)
    return _LIBRARY_CACHE[name]


def library_names() -> list:
    return sorted(_LIBRARY)


# ---------------------------------------------------------------------------
# serialization


def to_json(m: TriangulatedManifold) -> str:
    idx = {v: i for i, v in enumerate(m.complex.vertices)}
    return json.dumps(
        {
            "dimension": m.dimension,
            "vertex_count": len(m.complex.vertices),
            "top_simplices": [
                [idx[v] for v in t] for t in m.complex.n_simplices(m.dimension)
            ],
            "orientation": [
                m.orientation[t] for t in m.complex.n_simplices(m.dimension)
            ],
            "boundary_components": len(m.boundary_components),
        }
    )


def from_json(text: str) -> TriangulatedManifold:
    data = json.loads(text)
    n = data["vertex_count"]
    complex_ = SimplicialComplex.from_maximal(
        list(range(n)), [tuple(t) for t in data["top_simplices"]]
    )
    return TriangulatedManifold(complex_, data["dimension"])
