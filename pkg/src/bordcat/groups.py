"""Finite abelian groups, elements, characters, and homomorphisms.

A group is stored by its invariant factors n1 | n2 | ... | nk (each >= 2, or
no factors for the trivial group).  Elements are coordinate tuples reduced
modulo the factors; characters live in the Pontryagin dual, which for a
finite abelian group has the same invariant factors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Iterator, Sequence

from .intlinalg import IntMatrix, snf_diagonal


class EnumerationCapExceeded(Exception):
    """Raised when an exhaustive sum would exceed the configured cap."""

    def __init__(self, order: int, cap: int):
        super().__init__(f"enumeration over {order} elements exceeds cap {cap}")
        self.order = order
        self.cap = cap


@dataclass(frozen=True)
class FinAbGroup:
    """Product of cyclic groups Z_{n1} x ... x Z_{nk} with n1 | n2 | ... | nk."""

    invariant_factors: tuple

    def __post_init__(self):
        fs = self.invariant_factors
        for i, n in enumerate(fs):
            if n < 2:
                raise ValueError("invariant factors must be >= 2")
            if i and fs[i] % fs[i - 1] != 0:
                raise ValueError("invariant factors must form a divisibility chain")

    @staticmethod
    def from_factors(factors: Sequence[int]) -> "FinAbGroup":
        """Build from arbitrary cyclic orders, normalizing to a divisibility chain.

        >>> FinAbGroup.from_factors([2, 3]).invariant_factors
        (6,)
        >>> FinAbGroup.from_factors([4, 2, 3]).invariant_factors
        (2, 12)
        """
        return FinAbGroup(invariant_factors_of(factors))

    @staticmethod
    def cyclic(n: int) -> "FinAbGroup":
        return FinAbGroup(()) if n == 1 else FinAbGroup((n,))

    @staticmethod
    def trivial() -> "FinAbGroup":
        return FinAbGroup(())

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def exponent(self) -> int:
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def element(self, coords: Sequence[int]) -> "GroupElement":
        return GroupElement(self, tuple(c % n for c, n in zip(coords, self.invariant_factors, strict=True)))

    def zero(self) -> "GroupElement":
        return self.element((0,) * self.rank)

    def elements(self, cap: int | None = None) -> Iterator["GroupElement"]:
        """Iterate over all elements; raises if the order exceeds ``cap``."""
        if cap is not None and self.order > cap:
            raise EnumerationCapExceeded(self.order, cap)
        for coords in itertools.product(*(range(n) for n in self.invariant_factors)):
            yield GroupElement(self, coords)

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        return " x ".join(f"Z{n}" for n in self.invariant_factors)


def invariant_factors_of(cyclic_orders: Sequence[int]) -> tuple:
    """Invariant factors of a product of cyclic groups of the given orders.

    >>> invariant_factors_of([2, 4, 3])
    (2, 12)
    >>> invariant_factors_of([1, 1])
    ()
    """
    orders = [n for n in cyclic_orders if n > 1]
    if not orders:
        return ()
    diag = snf_diagonal([[orders[i] if i == j else 0 for j in range(len(orders))] for i in range(len(orders))])
    return tuple(sorted(d for d in diag if d > 1))


@dataclass(frozen=True)
class GroupElement:
    group: FinAbGroup
    coords: tuple

    def __post_init__(self):
        ns = self.group.invariant_factors
        if len(self.coords) != len(ns):
            raise ValueError("coordinate length mismatch")
        if any(not (0 <= c < n) for c, n in zip(self.coords, ns)):
            raise ValueError("coordinates not reduced")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return self.group.element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        if other.group != self.group:
            raise ValueError("elements of different groups")
        return self.group.element([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self) -> "GroupElement":
        return self.group.element([-a for a in self.coords])

    def scale(self, k: int) -> "GroupElement":
        return self.group.element([k * a for a in self.coords])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    @property
    def order(self) -> int:
        from math import gcd, lcm

        return lcm(1, *(n // gcd(c, n) for c, n in zip(self.coords, self.group.invariant_factors)))


@dataclass(frozen=True)
class Character:
    """Element of the Pontryagin dual G* = Hom(G, R/Z).

    Stored by its own coordinates in G* (same invariant factors as G); the
    character with coordinates (m1,...,mk) sends (a1,...,ak) to
    sum_i m_i a_i / n_i mod 1.
    """

    group: FinAbGroup  # the group G being paired against
    coords: tuple

    def __post_init__(self):
        ns = self.group.invariant_factors
        if len(self.coords) != len(ns):
            raise ValueError("coordinate length mismatch")
        if any(not (0 <= c < n) for c, n in zip(self.coords, ns)):
            raise ValueError("coordinates not reduced")

    def pair(self, g: GroupElement) -> Fraction:
        """Value of the character on g, as a fraction in [0, 1)."""
        if g.group != self.group:
            raise ValueError("element of a different group")
        total = Fraction(0)
        for m, a, n in zip(self.coords, g.coords, self.group.invariant_factors):
            total += Fraction(m * a, n)
        return total % 1

    def __add__(self, other: "Character") -> "Character":
        if other.group != self.group:
            raise ValueError("characters of different groups")
        return Character(
            self.group,
            tuple((a + b) % n for a, b, n in zip(self.coords, other.coords, self.group.invariant_factors)),
        )

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)


def pontryagin_dual(G: FinAbGroup) -> FinAbGroup:
    """Hom(G, R/Z) — abstractly isomorphic to G itself."""
    return FinAbGroup(G.invariant_factors)


def character(G: FinAbGroup, dual_element: GroupElement) -> Character:
    """Interpret an element of the dual group as a character of G."""
    if dual_element.group.invariant_factors != G.invariant_factors:
        raise ValueError("dual element has mismatched factors")
    return Character(G, dual_element.coords)


def characters(G: FinAbGroup, cap: int | None = None) -> Iterator[Character]:
    for e in pontryagin_dual(G).elements(cap=cap):
        yield Character(G, e.coords)


@dataclass(frozen=True)
class Homomorphism:
    """Group homomorphism given by an integer matrix on coordinates."""

    source: FinAbGroup
    target: FinAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        m = self.matrix
        if m.rows != self.target.rank or m.cols != self.source.rank:
            raise ValueError("matrix shape does not match group ranks")
        # well-definedness: n_j * (column j) must vanish in the target
        for j, nj in enumerate(self.source.invariant_factors):
            for i, mi in enumerate(self.target.invariant_factors):
                if (nj * m[i, j]) % mi != 0:
                    raise ValueError(
                        f"matrix not well defined on residues at entry ({i},{j})"
                    )

    def __call__(self, g: GroupElement) -> GroupElement:
        if g.group != self.source:
            raise ValueError("element not in the source group")
        return self.target.element(self.matrix.apply(list(g.coords)))

    def compose(self, inner: "Homomorphism") -> "Homomorphism":
        if inner.target != self.source:
            raise ValueError("composition mismatch")
        return Homomorphism(inner.source, self.target, self.matrix @ inner.matrix)

    def is_injective(self) -> bool:
        seen = set()
        for g in self.source.elements():
            img = self(g).coords
            if img in seen:
                return False
            seen.add(img)
        return True

    def image_coords(self) -> set:
        return {self(g).coords for g in self.source.elements()}

    def kernel_coords(self) -> set:
        return {g.coords for g in self.source.elements() if self(g).is_zero()}

    @staticmethod
    def identity(G: FinAbGroup) -> "Homomorphism":
        return Homomorphism(G, G, IntMatrix.identity(G.rank))

    @staticmethod
    def zero(source: FinAbGroup, target: FinAbGroup) -> "Homomorphism":
        return Homomorphism(source, target, IntMatrix.zero(target.rank, source.rank))
