"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An :class:`Amplitude` is a rational linear combination of N-th roots of
unity, stored as a coefficient vector of length N and compared after
reduction modulo the relations of the cyclotomic field.  This covers every
scalar the engine needs: rationals, character phases e^{2 pi i k/N}, and the
square roots of integers that appear in half-integer normalization exponents
(embedded through Gauss sums).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm


@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple:
    """Coefficients (ascending) of the n-th cyclotomic polynomial."""
    # Phi_n(x) = (x^n - 1) / prod_{d|n, d<n} Phi_d(x), exact polynomial division
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            den = list(_cyclotomic_poly(d))
            num = _polydiv(num, den)
    return tuple(num)


def _polydiv(num, den):
    num = list(num)
    den = list(den)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1] / den[-1]
        out[k] = c
        if c:
            for i, dv in enumerate(den):
                num[k + i] -= c * dv
    return out


@lru_cache(maxsize=None)
def _reduction_rows(n: int) -> tuple:
    """Row k: coefficients of x^k reduced mod Phi_n(x), for k in [0, n)."""
    phi = _cyclotomic_poly(n)
    deg = len(phi) - 1
    rows = []
    # x^deg = -(phi[0] + ... + phi[deg-1] x^{deg-1})   (phi is monic)
    for k in range(n):
        if k < deg:
            row = [Fraction(0)] * deg
            row[k] = Fraction(1)
        else:
            prev = rows[k - 1]
            shifted = [Fraction(0)] + list(prev[:-1])
            top = prev[-1]
            if top:
                for i in range(deg):
                    shifted[i] -= top * phi[i]
            row = shifted
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class Amplitude:
    """Element of Q(zeta_N): sum_k coeffs[k] * zeta_N^k."""

    order: int
    coeffs: tuple  # length == order, Fractions

    def __post_init__(self):
        if len(self.coeffs) != self.order or self.order < 1:
            raise ValueError("coefficient vector must have length == order")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def rational(x) -> "Amplitude":
        return Amplitude(1, (Fraction(x),))

    @staticmethod
    def zero() -> "Amplitude":
        return Amplitude.rational(0)

    @staticmethod
    def one() -> "Amplitude":
        return Amplitude.rational(1)

    @staticmethod
    def root_of_unity(phase: Fraction) -> "Amplitude":
        """e^{2 pi i phase} for a rational phase."""
        phase = Fraction(phase) % 1
        n = phase.denominator
        k = phase.numerator
        coeffs = [Fraction(0)] * n
        coeffs[k % n] = Fraction(1)
        return Amplitude(n, tuple(coeffs))

    @staticmethod
    def sqrt_int(m: int) -> "Amplitude":
        """Exact square root of a positive integer, via Gauss sums."""
        if m <= 0:
            raise ValueError("need a positive integer")
        r = isqrt(m)
        if r * r == m:
            return Amplitude.rational(r)
        # strip square factors, take sqrt of the squarefree part
        square = 1
        rest = m
        d = 2
        while d * d <= rest:
            while rest % (d * d) == 0:
                rest //= d * d
                square *= d
            d += 1
        out = Amplitude.rational(square)
        # factor the squarefree part into primes
        p = 2
        n = rest
        while n > 1:
            while n % p:
                p += 1
            out = out * _sqrt_prime(p)
            n //= p
        return out

    # -- arithmetic --------------------------------------------------------

    def lift(self, n: int) -> "Amplitude":
        if n == self.order:
            return self
        if n % self.order:
            raise ValueError("can only lift to a multiple order")
        step = n // self.order
        coeffs = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            coeffs[k * step] = c
        return Amplitude(n, tuple(coeffs))

    def _common(self, other: "Amplitude"):
        n = lcm(self.order, other.order)
        return self.lift(n), other.lift(n)

    def __add__(self, other) -> "Amplitude":
        if not isinstance(other, Amplitude):
            other = Amplitude.rational(other)
        a, b = self._common(other)
        return Amplitude(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self) -> "Amplitude":
        return Amplitude(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Amplitude":
        if not isinstance(other, Amplitude):
            other = Amplitude.rational(other)
        return self + (-other)

    def __mul__(self, other) -> "Amplitude":
        if not isinstance(other, Amplitude):
            other = Amplitude.rational(other)
        a, b = self._common(other)
        n = a.order
        coeffs = [Fraction(0)] * n
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        coeffs[(i + j) % n] += x * y
        return Amplitude(n, tuple(coeffs))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other) -> "Amplitude":
        if isinstance(other, Amplitude):
            q = other.as_rational()
            if q is not None:
                other = q
            else:
                return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def inverse(self) -> "Amplitude":
        """Multiplicative inverse, via a rational linear solve in the
        power basis of Q(zeta_N)."""
        n = self.order
        rows = _reduction_rows(n)
        deg = len(rows[0])
        # columns: reduced coordinates of self * zeta^j for j < deg
        cols = []
        for j in range(deg):
            shifted = Amplitude(
                n, tuple(self.coeffs[(k - j) % n] for k in range(n))
            )
            cols.append(shifted.reduced())
        # solve sum_j x_j * cols[j] = (1, 0, ..., 0)
        aug = [[cols[j][i] for j in range(deg)] + [Fraction(int(i == 0))] for i in range(deg)]
        piv = 0
        for col in range(deg):
            sel = next((r for r in range(piv, deg) if aug[r][col] != 0), None)
            if sel is None:
                continue
            aug[piv], aug[sel] = aug[sel], aug[piv]
            inv = 1 / aug[piv][col]
            aug[piv] = [v * inv for v in aug[piv]]
            for r in range(deg):
                if r != piv and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [a - c * b for a, b in zip(aug[r], aug[piv])]
            piv += 1
        x = [Fraction(0)] * deg
        col = 0
        for r in range(deg):
            while col < deg and aug[r][col] != 1:
                col += 1
            if col == deg:
                if aug[r][deg] != 0:
                    raise ZeroDivisionError("amplitude is zero")
                break
            x[col] = aug[r][deg]
        out = Amplitude(n, tuple(x) + (Fraction(0),) * (n - deg))
        if not (out * self == Amplitude.one()):
            raise ZeroDivisionError("amplitude is zero or not invertible")
        return out

    # -- comparison / canonical form --------------------------------------

    def reduced(self) -> tuple:
        """Canonical coordinates in the power basis of Q(zeta_N) mod Phi_N."""
        rows = _reduction_rows(self.order)
        deg = len(rows[0])
        out = [Fraction(0)] * deg
        for k, c in enumerate(self.coeffs):
            if c:
                row = rows[k]
                for i in range(deg):
                    out[i] += c * row[i]
        return tuple(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Amplitude):
            if isinstance(other, (int, Fraction)):
                other = Amplitude.rational(other)
            else:
                return NotImplemented
        a, b = self._common(other)
        return a.reduced() == b.reduced()

    def __hash__(self):
        # hash the minimal rational value when rational, else the reduced
        # form at the stored order (callers should normalize orders first)
        q = self.as_rational()
        if q is not None:
            return hash(q)
        return hash((self.order, self.reduced()))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.reduced())

    def as_rational(self):
        """The value as a Fraction if it is rational, else None."""
        red = self.reduced()
        if all(c == 0 for c in red[1:]):
            return red[0]
        # the value may be rational without lying in the power-basis span
        # visible at this order (e.g. sums over all roots); reduced() handles
        # that, so reaching here means genuinely irrational
        return None

    # -- display -----------------------------------------------------------

    def approx(self) -> complex:
        import cmath

        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * k / self.order)
            for k, c in enumerate(self.coeffs)
            if c
        )

    def __str__(self):
        q = self.as_rational()
        if q is not None:
            return str(q)
        parts = []
        for k, c in enumerate(self.coeffs):
            if c:
                parts.append(f"{c}*z{self.order}^{k}")
        return " + ".join(parts) if parts else "0"

    def serialize(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def deserialize(data: dict) -> "Amplitude":
        return Amplitude(data["order"], tuple(Fraction(c) for c in data["coeffs"]))


@lru_cache(maxsize=None)
def _sqrt_prime(p: int) -> Amplitude:
    """sqrt(p) for a prime p, via the quadratic Gauss sum."""
    if p == 2:
        # zeta_8 + zeta_8^{-1} = 2 cos(pi/4) = sqrt(2)
        coeffs = [Fraction(0)] * 8
        coeffs[1] = Fraction(1)
        coeffs[7] = Fraction(1)
        return Amplitude(8, tuple(coeffs))
    # g = sum_k zeta_p^{k^2} equals sqrt(p) (p = 1 mod 4) or i sqrt(p) (p = 3 mod 4)
    coeffs = [Fraction(0)] * p
    for k in range(p):
        coeffs[(k * k) % p] += 1
    g = Amplitude(p, tuple(coeffs))
    if p % 4 == 1:
        return g
    # divide by i = zeta_4
    minus_i = Amplitude.root_of_unity(Fraction(3, 4))
    return g * minus_i


def power(base: Amplitude, k: int) -> Amplitude:
    out = Amplitude.one()
    for _ in range(k):
        out = out * base
    return out
