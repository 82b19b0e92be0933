"""Finite simplicial complexes, pairs, cochains, and barycentric subdivision.

Vertices are arbitrary hashable ids; each complex fixes a total order on its
vertices (the order of the ``vertices`` tuple) and stores every simplex as a
tuple of vertex ids sorted by that order.  The global vertex order doubles as
the orientation convention for coboundary signs and for the front-face /
back-face cup product.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .intlinalg import IntMatrix, _SparseMat


class SimplicialComplex:
    """Immutable finite simplicial complex closed under faces."""

    def __init__(self, vertices: Sequence, simplices_by_dim: dict):
        self.vertices = tuple(vertices)
        self._rank = {v: i for i, v in enumerate(self.vertices)}
        if len(self._rank) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        self.simplices = {}
        for d in sorted(simplices_by_dim):
            sims = sorted(
                (self._canon(s) for s in simplices_by_dim[d]),
                key=lambda s: tuple(self._rank[v] for v in s),
            )
            if len(set(sims)) != len(sims):
                raise ValueError(f"duplicate {d}-simplices")
            self.simplices[d] = tuple(sims)
        self._index = {
            d: {s: i for i, s in enumerate(sims)} for d, sims in self.simplices.items()
        }
        self._check_closed()

    def _canon(self, simplex) -> tuple:
        t = tuple(sorted(simplex, key=self._rank.__getitem__))
        if len(set(t)) != len(t):
            raise ValueError(f"degenerate simplex {simplex}")
        return t

    def _check_closed(self):
        for d, sims in self.simplices.items():
            if d == 0:
                for s in sims:
                    if s[0] not in self._rank:
                        raise ValueError("unknown vertex")
                continue
            lower = self._index.get(d - 1, {})
            for s in sims:
                for i in range(len(s)):
                    if s[:i] + s[i + 1 :] not in lower:
                        raise ValueError(f"face of {s} missing")

    @staticmethod
    def from_maximal(vertices: Sequence, maximal: Iterable) -> "SimplicialComplex":
        """Build the closure of the given simplices under taking faces."""
        rank = {v: i for i, v in enumerate(vertices)}
        by_dim: dict = {}
        seen = set()
        stack = [tuple(sorted(s, key=rank.__getitem__)) for s in maximal]
        for v in vertices:
            stack.append((v,))
        while stack:
            s = stack.pop()
            if s in seen:
                continue
            seen.add(s)
            by_dim.setdefault(len(s) - 1, []).append(s)
            if len(s) > 1:
                for i in range(len(s)):
                    stack.append(s[:i] + s[i + 1 :])
        return SimplicialComplex(vertices, by_dim)

    @property
    def dim(self) -> int:
        return max(self.simplices) if self.simplices else -1

    def n_simplices(self, d: int) -> tuple:
        return self.simplices.get(d, ())

    def index_of(self, simplex: tuple) -> int:
        return self._index[len(simplex) - 1][simplex]

    def has_simplex(self, simplex) -> bool:
        s = tuple(sorted(simplex, key=self._rank.__getitem__))
        return s in self._index.get(len(s) - 1, {})

    def euler_characteristic(self) -> int:
        return sum((-1) ** d * len(s) for d, s in self.simplices.items())

    def vertex_rank(self, v) -> int:
        return self._rank[v]

    def simplex_set(self) -> set:
        return {s for sims in self.simplices.values() for s in sims}

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.simplices == other.simplices
        )

    def __hash__(self):
        if not hasattr(self, "_hash"):
            self._hash = hash((self.vertices, tuple(sorted(self.simplices.items()))))
        return self._hash

    def __repr__(self):
        counts = {d: len(s) for d, s in self.simplices.items()}
        return f"SimplicialComplex(dim={self.dim}, counts={counts})"


@dataclass(frozen=True)
class SimplicialPair:
    """A complex together with a subcomplex (possibly empty)."""

    total: SimplicialComplex
    sub: frozenset  # simplices of the subcomplex, as canonical tuples

    @staticmethod
    def make(total: SimplicialComplex, sub_simplices: Iterable = ()) -> "SimplicialPair":
        sub = frozenset(
            tuple(sorted(s, key=total.vertex_rank)) for s in sub_simplices
        )
        for s in sub:
            if not total.has_simplex(s):
                raise ValueError(f"subcomplex simplex {s} not in total complex")
            for i in range(len(s)):
                if len(s) > 1 and s[:i] + s[i + 1 :] not in sub:
                    raise ValueError(f"subcomplex not closed under faces at {s}")
        return SimplicialPair(total, sub)

    @staticmethod
    def absolute(total: SimplicialComplex) -> "SimplicialPair":
        return SimplicialPair(total, frozenset())

    def relative_simplices(self, k: int) -> tuple:
        return tuple(s for s in self.total.n_simplices(k) if s not in self.sub)

    def sub_complex(self) -> SimplicialComplex:
        verts = [v for v in self.total.vertices if (v,) in self.sub]
        by_dim: dict = {}
        for s in self.sub:
            by_dim.setdefault(len(s) - 1, []).append(s)
        return SimplicialComplex(verts, by_dim)


def coboundary_matrix(pair: SimplicialPair, k: int) -> IntMatrix:
    """Matrix of the coboundary map on relative k-cochains.

    Rows are indexed by relative (k+1)-simplices and columns by relative
    k-simplices; the entry for (tau, sigma) is the alternating sign with
    which sigma occurs as a face of tau.  Works for any coefficient group
    since the entries are just signs.
    """
    return _coboundary_sparse(pair, k).to_int_matrix()


def _coboundary_sparse(pair: SimplicialPair, k: int) -> _SparseMat:
    rows = pair.relative_simplices(k + 1)
    cols = pair.relative_simplices(k)
    colindex = {s: j for j, s in enumerate(cols)}
    m = _SparseMat(len(rows), len(cols))
    for i, tau in enumerate(rows):
        for drop in range(len(tau)):
            face = tau[:drop] + tau[drop + 1 :]
            j = colindex.get(face)
            if j is not None:
                m.set(i, j, m.get(i, j) + (-1) ** drop)
    return m


@dataclass
class Cochain:
    """A k-cochain with values in a finite abelian coefficient group.

    Values are per-factor integer residues (a tuple of the same length as the
    coefficient group's invariant factors) on each k-simplex; absent simplices
    carry zero.  Relative cochains simply have no support on the subcomplex.
    """

    dimension: int
    factors: tuple  # coefficient invariant factors
    values: dict = field(default_factory=dict)

    def value(self, simplex: tuple) -> tuple:
        return self.values.get(simplex, (0,) * len(self.factors))

    def set_value(self, simplex: tuple, coords: Sequence[int]):
        reduced = tuple(c % n for c, n in zip(coords, self.factors, strict=True))
        if any(reduced):
            self.values[simplex] = reduced
        else:
            self.values.pop(simplex, None)

    def __add__(self, other: "Cochain") -> "Cochain":
        if (other.dimension, other.factors) != (self.dimension, self.factors):
            raise ValueError("cochain mismatch")
        out = Cochain(self.dimension, self.factors, dict(self.values))
        for s, v in other.values.items():
            out.set_value(s, [a + b for a, b in zip(out.value(s), v)])
        return out

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scale(-1)

    def scale(self, k: int) -> "Cochain":
        out = Cochain(self.dimension, self.factors)
        for s, v in self.values.items():
            out.set_value(s, [k * a for a in v])
        return out

    def is_zero(self) -> bool:
        return not self.values

    def restrict_support(self, allowed: Iterable) -> "Cochain":
        allowed = set(allowed)
        return Cochain(
            self.dimension,
            self.factors,
            {s: v for s, v in self.values.items() if s in allowed},
        )

    def rename(self, vertex_map: dict, target: SimplicialComplex) -> "Cochain":
        """Transport along a relabeling isomorphism of complexes."""
        out = Cochain(self.dimension, self.factors)
        for s, v in self.values.items():
            image = [vertex_map[x] for x in s]
            sign = _sort_sign(image, target.vertex_rank)
            if sign == 0:
                raise ValueError("relabeling must be injective on simplices")
            out.set_value(tuple(sorted(image, key=target.vertex_rank)), [sign * a for a in v])
        return out


def coboundary(pair: SimplicialPair, c: Cochain) -> Cochain:
    """delta(c) as a relative cochain of the pair."""
    out = Cochain(c.dimension + 1, c.factors)
    for tau in pair.relative_simplices(c.dimension + 1):
        acc = [0] * len(c.factors)
        for drop in range(len(tau)):
            face = tau[:drop] + tau[drop + 1 :]
            if face in c.values:
                sign = (-1) ** drop
                for i, a in enumerate(c.values[face]):
                    acc[i] += sign * a
        out.set_value(tau, acc)
    return out


def _sort_sign(vertex_list: list, rank) -> int:
    """Parity sign of sorting the list by rank; 0 if entries repeat."""
    keys = [rank(v) for v in vertex_list]
    if len(set(keys)) != len(keys):
        return 0
    sign = 1
    keys = list(keys)
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if keys[i] > keys[j]:
                keys[i], keys[j] = keys[j], keys[i]
                sign = -sign
    return sign


@dataclass(frozen=True)
class SimplicialMap:
    """A simplicial map of pairs given by its action on vertices."""

    source: SimplicialPair
    target: SimplicialPair
    vertex_map: dict

    def __post_init__(self):
        tc = self.target.total
        for d, sims in self.source.total.simplices.items():
            for s in sims:
                image = set(self.vertex_map[v] for v in s)
                if not tc.has_simplex(tuple(image)):
                    raise ValueError(f"image of {s} is not a simplex")
        for s in self.source.sub:
            image = tuple(set(self.vertex_map[v] for v in s))
            canon = tuple(sorted(image, key=tc.vertex_rank))
            if canon not in self.target.sub:
                raise ValueError(f"map does not send subcomplex into subcomplex at {s}")

    def pullback(self, c: Cochain) -> Cochain:
        """f^*(c): evaluate c on the (signed, possibly degenerate) image."""
        out = Cochain(c.dimension, c.factors)
        tc = self.target.total
        for s in self.source.relative_simplices(c.dimension):
            image = [self.vertex_map[v] for v in s]
            sign = _sort_sign(image, tc.vertex_rank)
            if sign == 0:
                continue
            canon = tuple(sorted(image, key=tc.vertex_rank))
            v = c.values.get(canon)
            if v:
                out.set_value(s, [sign * a for a in v])
        return out

    def compose(self, inner: "SimplicialMap") -> "SimplicialMap":
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        return SimplicialMap(
            inner.source,
            self.target,
            {v: self.vertex_map[w] for v, w in inner.vertex_map.items()},
        )


# ---------------------------------------------------------------------------
# barycentric subdivision


class Subdivision:
    """Barycentric subdivision of a complex, with carrier bookkeeping.

    The subdivided complex has one vertex per simplex of the original; its
    vertex order puts barycenters of lower-dimensional carriers first
    (dimension-major).  Every simplex of the subdivision is then a strictly
    dimension-increasing flag of faces, which is what makes the front/back
    face decomposition of top simplices split cleanly between a skeleton and
    its dual.
    """

    def __init__(self, base: SimplicialComplex):
        self.base = base
        vertices = [s for d in sorted(base.simplices) for s in base.simplices[d]]
        flags = []
        for d, sims in base.simplices.items():
            for s in sims:
                for flag in _flags_of(s, d):
                    flags.append(flag)
        # top-dimensional flags suffice as maximal simplices: every flag is a
        # subflag of a full flag of its largest carrier
        self.complex = SimplicialComplex.from_maximal(
            vertices,
            [f for f in flags if len(f) == len(f[-1])],
        )

    def carrier(self, sd_simplex: tuple) -> tuple:
        """The smallest base simplex containing the given sd-simplex."""
        return max(sd_simplex, key=len)

    def vertices_with_carrier_in(self, simplices: Iterable) -> list:
        allowed = set(simplices)
        return [v for v in self.complex.vertices if v in allowed]

    def full_subcomplex(self, vertex_subset: Iterable) -> set:
        """All sd-simplices whose vertices all lie in the given subset."""
        allowed = set(vertex_subset)
        out = set()
        for sims in self.complex.simplices.values():
            for s in sims:
                if all(v in allowed for v in s):
                    out.add(s)
        return out

    def sd_of_subcomplex(self, base_simplices: Iterable) -> set:
        """The subdivision of a base subcomplex, as a set of sd-simplices."""
        carriers = set(base_simplices)
        return self.full_subcomplex(
            [v for v in self.complex.vertices if v in carriers]
        )

    def flatten_map(self) -> dict:
        """Vertex map of the standard simplicial approximation sd X -> X.

        Sends the barycenter of each simplex to its last vertex.  Induces an
        isomorphism on (co)homology.
        """
        return {s: s[-1] for s in self.complex.vertices}


_SUBDIVISION_CACHE: dict = {}


def subdivision_of(base: SimplicialComplex) -> Subdivision:
    """Cached barycentric subdivision (subdivisions are pure data)."""
    got = _SUBDIVISION_CACHE.get(base)
    if got is None:
        got = Subdivision(base)
        _SUBDIVISION_CACHE[base] = got
    return got


def _flags_of(s: tuple, d: int):
    """All flags of faces of s ending at s itself."""
    if d == 0:
        yield (s,)
        return
    for i in range(len(s)):
        face = s[:i] + s[i + 1 :]
        for sub in _flags_of(face, d - 1):
            yield sub + (s,)
    yield (s,)


def disjoint_union(a: SimplicialComplex, b: SimplicialComplex):
    """Disjoint union with tagged vertices; returns (complex, inj_a, inj_b)."""
    map_a = {v: (0, v) for v in a.vertices}
    map_b = {v: (1, v) for v in b.vertices}
    vertices = [map_a[v] for v in a.vertices] + [map_b[v] for v in b.vertices]
    by_dim: dict = {}
    for d, sims in a.simplices.items():
        by_dim.setdefault(d, []).extend(tuple(map_a[v] for v in s) for s in sims)
    for d, sims in b.simplices.items():
        by_dim.setdefault(d, []).extend(tuple(map_b[v] for v in s) for s in sims)
    return SimplicialComplex(vertices, by_dim), map_a, map_b


def relabel(X: SimplicialComplex, vertex_map: dict, new_order: Sequence | None = None) -> SimplicialComplex:
    """Rename vertices by a bijection, optionally imposing a new vertex order."""
    if new_order is None:
        new_order = [vertex_map[v] for v in X.vertices]
    by_dim = {
        d: [tuple(vertex_map[v] for v in s) for s in sims]
        for d, sims in X.simplices.items()
    }
    return SimplicialComplex(new_order, by_dim)
