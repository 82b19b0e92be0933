"""Functorial field theory values on decorated bordisms.

A theory assigns a labelled basis to each decorated object and an exact
:class:`LinearMap` (entries in a cyclotomic field) to each decorated
bordism.  :func:`verify_functor` checks the contract on concrete fixtures:
identities go to identities, composition to matrix product, disjoint union
to tensor product, and the symmetry action is additive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .bordisms import (
    DecoratedBordism,
    DecoratedObject,
    bordism_union,
    compose,
    identity_bordism,
    symmetry_cylinder,
)
from .cohomology import CohomologyClass
from .cyclotomic import Amplitude
from .manifolds import TriangulatedManifold

#: basis label tuple of the monoidal unit (the empty object)
UNIT = ("1",)


@dataclass(frozen=True)
class LinearMap:
    """A matrix with labelled source/target bases and Amplitude entries.

    ``entries[i][j]`` is the coefficient of target basis vector i in the
    image of source basis vector j.
    """

    source: tuple
    target: tuple
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.target) or any(
            len(r) != len(self.source) for r in self.entries
        ):
            raise ValueError("matrix shape does not match the labels")

    @staticmethod
    def from_rows(source: Sequence, target: Sequence, rows) -> "LinearMap":
        ent = tuple(
            tuple(
                e if isinstance(e, Amplitude) else Amplitude.rational(e) for e in r
            )
            for r in rows
        )
        return LinearMap(tuple(source), tuple(target), ent)

    @staticmethod
    def identity(labels: Sequence) -> "LinearMap":
        n = len(labels)
        return LinearMap.from_rows(
            labels, labels, [[int(i == j) for j in range(n)] for i in range(n)]
        )

    @staticmethod
    def zero(source: Sequence, target: Sequence) -> "LinearMap":
        return LinearMap.from_rows(
            source, target, [[0] * len(source) for _ in target]
        )

    @staticmethod
    def scalar(value) -> "LinearMap":
        return LinearMap.from_rows(UNIT, UNIT, [[value]])

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.target != self.source:
            raise ValueError("basis labels do not match for composition")
        rows = []
        for i in range(len(self.target)):
            row = []
            for j in range(len(other.source)):
                acc = Amplitude.zero()
                for k in range(len(self.source)):
                    a = self.entries[i][k]
                    b = other.entries[k][j]
                    if not (a.is_zero() or b.is_zero()):
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return LinearMap.from_rows(other.source, self.target, rows)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        if (self.source, self.target) != (other.source, other.target):
            raise ValueError("basis labels do not match for addition")
        return LinearMap.from_rows(
            self.source,
            self.target,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def scale(self, value) -> "LinearMap":
        if not isinstance(value, Amplitude):
            value = Amplitude.rational(value)
        return LinearMap.from_rows(
            self.source,
            self.target,
            [[value * e for e in r] for r in self.entries],
        )

    def tensor(self, other: "LinearMap") -> "LinearMap":
        src = tuple((a, b) for a in self.source for b in other.source)
        tgt = tuple((a, b) for a in self.target for b in other.target)
        rows = []
        for i1 in range(len(self.target)):
            for i2 in range(len(other.target)):
                rows.append(
                    [
                        self.entries[i1][j1] * other.entries[i2][j2]
                        for j1 in range(len(self.source))
                        for j2 in range(len(other.source))
                    ]
                )
        return LinearMap.from_rows(src, tgt, rows)

    def trace(self) -> Amplitude:
        if self.source != self.target:
            raise ValueError("trace requires matching bases")
        acc = Amplitude.zero()
        for i in range(len(self.source)):
            acc = acc + self.entries[i][i]
        return acc

    def entry(self, i: int, j: int) -> Amplitude:
        return self.entries[i][j]

    def same_matrix(self, other: "LinearMap") -> bool:
        """Entrywise equality ignoring basis labels (shapes must agree)."""
        if (len(self.source), len(self.target)) != (
            len(other.source),
            len(other.target),
        ):
            return False
        return all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2)
        )

    def relabel(self, source: Sequence, target: Sequence) -> "LinearMap":
        return LinearMap(tuple(source), tuple(target), self.entries)

    def permute(self, source: Sequence, target: Sequence) -> "LinearMap":
        """Reindex rows/columns to the given permutations of the labels."""
        src = tuple(source)
        tgt = tuple(target)
        jmap = [self.source.index(l) for l in src]
        imap = [self.target.index(l) for l in tgt]
        return LinearMap(
            src,
            tgt,
            tuple(tuple(self.entries[i][j] for j in jmap) for i in imap),
        )

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.same_matrix(other)
        )

    def __hash__(self):
        return hash((self.source, self.target))

    def __str__(self):
        rows = [
            "[" + ", ".join(str(e) for e in r) + "]" for r in self.entries
        ]
        return "\n".join(rows)

    def serialize(self) -> dict:
        return {
            "source": [str(l) for l in self.source],
            "target": [str(l) for l in self.target],
            "entries": [[e.serialize() for e in r] for r in self.entries],
        }


class TheoryInterface:
    """Contract every theory object satisfies.

    ``q`` and ``coeff`` describe the symmetry the theory is equipped with;
    ``state_labels`` fixes an ordered basis per decorated object, ``value``
    evaluates a decorated bordism, and ``closed_value`` evaluates a closed
    manifold with an absolute background class.
    """

    q: int
    coeff = None

    def state_labels(self, obj: DecoratedObject) -> tuple:
        raise NotImplementedError

    def value(self, bordism: DecoratedBordism) -> LinearMap:
        raise NotImplementedError

    def closed_value(
        self, manifold: TriangulatedManifold, background: CohomologyClass
    ) -> Amplitude:
        raise NotImplementedError


class TrivialTheory(TheoryInterface):
    """The theory with a one-dimensional state space and all values 1."""

    def __init__(self, q: int, coeff):
        self.q = q
        self.coeff = coeff

    def state_labels(self, obj: DecoratedObject) -> tuple:
        return ("vac",)

    def value(self, bordism: DecoratedBordism) -> LinearMap:
        if (bordism.q, bordism.coeff) != (self.q, self.coeff):
            raise ValueError("bordism symmetry data does not match the theory")
        bordism.check_decoration()
        src = (
            self.state_labels(bordism.incoming.obj) if bordism.incoming else UNIT
        )
        tgt = (
            self.state_labels(bordism.outgoing.obj) if bordism.outgoing else UNIT
        )
        return LinearMap.from_rows(src, tgt, [[1] * len(src) for _ in tgt])

    def closed_value(self, manifold, background) -> Amplitude:
        return Amplitude.one()


def trivial_theory(q: int, coeff) -> TrivialTheory:
    return TrivialTheory(q, coeff)


class ScaledTheory(TheoryInterface):
    """A deliberately broken wrapper multiplying every value by a constant.

    Used as a negative control: it fails the composition law whenever the
    constant is not idempotent, so a passing report actually constrains the
    theory under test.
    """

    def __init__(self, inner: TheoryInterface, factor):
        self.inner = inner
        self.q = inner.q
        self.coeff = inner.coeff
        self.factor = factor

    def state_labels(self, obj):
        return self.inner.state_labels(obj)

    def value(self, bordism):
        return self.inner.value(bordism).scale(self.factor)

    def closed_value(self, manifold, background):
        return self.inner.closed_value(manifold, background) * self.factor


def rho(Z: TheoryInterface, obj: DecoratedObject, beta: CohomologyClass) -> LinearMap:
    """The symmetry action of beta in H^q(Sigma) on the states of obj."""
    return Z.value(symmetry_cylinder(obj, beta))


@dataclass
class FunctorReport:
    checks: list = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checks.append((name, passed, detail))

    @property
    def passed(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def failures(self) -> list:
        return [(n, d) for n, ok, d in self.checks if not ok]

    def __str__(self):
        lines = [
            f"[{'ok' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "")
            for name, ok, detail in self.checks
        ]
        return "\n".join(lines)


def verify_functor(
    Z: TheoryInterface,
    objects: Iterable[DecoratedObject] = (),
    composable_pairs: Iterable = (),
    union_pairs: Iterable = (),
    symmetry_objects: Iterable[DecoratedObject] = (),
    symmetry_cap: int = 64,
) -> FunctorReport:
    """Check the functor axioms of ``Z`` on explicit fixtures.

    * each object's identity cylinder must map to the identity matrix,
    * each (later, earlier) pair must satisfy Z(later o earlier) =
      Z(later) Z(earlier),
    * each (f, g) union pair must satisfy Z(f u g) = Z(f) (x) Z(g) up to
      the induced basis identification,
    * the symmetry action on each listed object must be additive.
    """
    report = FunctorReport()
    for obj in objects:
        ident = Z.value(identity_bordism(obj))
        ok = ident.same_matrix(LinearMap.identity(Z.state_labels(obj)))
        report.add(f"identity on {obj.manifold!r}", ok)
    for later, earlier in composable_pairs:
        lhs = Z.value(compose(later, earlier))
        rhs = Z.value(later) @ Z.value(earlier).relabel(
            Z.value(earlier).source, Z.value(later).source
        )
        ok = lhs.same_matrix(rhs)
        report.add("composition", ok, "" if ok else f"{lhs}\n!=\n{rhs}")
    for f, g in union_pairs:
        lhs = Z.value(bordism_union(f, g))
        rhs = Z.value(f).tensor(Z.value(g))
        ok = lhs.same_matrix(rhs)
        report.add("monoidality", ok, "" if ok else f"{lhs}\n!=\n{rhs}")
    for obj in symmetry_objects:
        sym = obj.symmetry_group()
        betas = list(sym.classes(cap=symmetry_cap))
        actions = {b.raw: rho(Z, obj, b) for b in betas}
        ok = True
        detail = ""
        for b1 in betas:
            for b2 in betas:
                lhs = actions[(b1 + b2).raw]
                rhs = actions[b1.raw] @ actions[b2.raw].relabel(
                    actions[b2.raw].source, actions[b1.raw].source
                )
                if not lhs.same_matrix(rhs):
                    ok = False
                    detail = f"beta1={b1.raw}, beta2={b2.raw}"
                    break
            if not ok:
                break
        report.add("symmetry action additivity", ok, detail)
    return report
