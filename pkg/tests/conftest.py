"""Shared independent oracles for the test suite.

The cohomology oracles here deliberately avoid the package's linear-algebra
pipeline: ranks come from plain Gaussian elimination over GF(p), and small
groups are counted by enumerating cochains outright.
"""

from __future__ import annotations

import itertools

import pytest


def faces_with_signs(simplex):
    return [(simplex[:i] + simplex[i + 1 :], (-1) ** i) for i in range(len(simplex))]


def relative_simplex_lists(pair, k):
    """(k-simplices, (k+1)-simplices) of the pair, excluding the subcomplex."""
    sub = set(pair.sub)
    rows = [s for s in pair.total.n_simplices(k + 1) if s not in sub]
    cols = [s for s in pair.total.n_simplices(k) if s not in sub]
    return cols, rows


def delta_matrix(pair, k):
    """Rows: relative (k+1)-simplices, columns: relative k-simplices."""
    cols, rows = relative_simplex_lists(pair, k)
    col_index = {s: j for j, s in enumerate(cols)}
    matrix = []
    for s in rows:
        row = [0] * len(cols)
        for f, sign in faces_with_signs(s):
            j = col_index.get(f)
            if j is not None:
                row[j] += sign
        matrix.append(row)
    return matrix, len(cols)


def rank_gf_p(matrix, p):
    """Row-reduction rank over GF(p)."""
    rows = [[x % p for x in row] for row in matrix]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    pivot_row = 0
    for col in range(ncols):
        pivot = None
        for r in range(pivot_row, len(rows)):
            if rows[r][col] % p:
                pivot = r
                break
        if pivot is None:
            continue
        rows[pivot_row], rows[pivot] = rows[pivot], rows[pivot_row]
        inv = pow(rows[pivot_row][col], p - 2, p) if p > 2 else 1
        rows[pivot_row] = [(x * inv) % p for x in rows[pivot_row]]
        for r in range(len(rows)):
            if r != pivot_row and rows[r][col] % p:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], rows[pivot_row])]
        pivot_row += 1
        rank += 1
    return rank


def cohomology_order_gf_p(pair, degree, p):
    """|H^degree(pair; Z_p)| by counting GF(p) ranks."""
    dk, m = delta_matrix(pair, degree)
    rank_k = rank_gf_p(dk, p) if dk else 0
    if degree > 0:
        dkm1, _ = delta_matrix(pair, degree - 1)
        rank_km1 = rank_gf_p(dkm1, p) if dkm1 else 0
    else:
        rank_km1 = 0
    return p ** (m - rank_k - rank_km1)


def cohomology_order_brute(pair, degree, factors, limit=2**21):
    """|H^degree| over a product of cyclic groups by enumerating cochains.

    Returns None when the enumeration would exceed ``limit`` assignments.
    """
    total = 1
    for n in factors:
        order = _brute_cyclic(pair, degree, n, limit)
        if order is None:
            return None
        total *= order
    return total


def _brute_cyclic(pair, degree, n, limit):
    dk, m = delta_matrix(pair, degree)
    if n**m > limit:
        return None
    cocycles = 0
    for c in itertools.product(range(n), repeat=m):
        if all(sum(a * x for a, x in zip(row, c)) % n == 0 for row in dk):
            cocycles += 1
    if degree == 0:
        coboundaries = 1
    else:
        dkm1, mm1 = delta_matrix(pair, degree - 1)
        if n**mm1 > limit:
            return None
        images = set()
        for c in itertools.product(range(n), repeat=mm1):
            images.add(
                tuple(sum(a * x for a, x in zip(row, c)) % n for row in dkm1)
            )
        coboundaries = len(images)
    return cocycles // coboundaries


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def z2():
    from bordcat.groups import FinAbGroup

    return FinAbGroup.cyclic(2)


@pytest.fixture(scope="session")
def z3():
    from bordcat.groups import FinAbGroup

    return FinAbGroup.cyclic(3)
