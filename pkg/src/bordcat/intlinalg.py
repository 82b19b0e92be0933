"""Exact integer linear algebra: Smith normal form, modular kernels, cokernels.

All computations use arbitrary-precision Python integers.  Matrices are kept
sparse internally (dict-of-rows) because the coboundary matrices arising from
barycentric subdivisions are large but very sparse; the public ``IntMatrix``
type is a small dense wrapper.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match rows*cols")

    @staticmethod
    def from_rows(rows: Sequence[Sequence[int]]) -> "IntMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        flat = []
        for r in rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            flat.extend(int(x) for x in r)
        return IntMatrix(nrows, ncols, tuple(flat))

    @staticmethod
    def identity(n: int) -> "IntMatrix":
        return IntMatrix(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @staticmethod
    def zero(rows: int, cols: int) -> "IntMatrix":
        return IntMatrix(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        orows = other.to_rows()
        for i in range(self.rows):
            srow = self.row(i)
            acc = [0] * other.cols
            for k, a in enumerate(srow):
                if a:
                    orow = orows[k]
                    for j in range(other.cols):
                        acc[j] += a * orow[j]
            out.extend(acc)
        return IntMatrix(self.rows, other.cols, tuple(out))

    def apply(self, vec: Sequence[int]) -> list:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum(a * x for a, x in zip(self.row(i), vec)) for i in range(self.rows)]

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0 for i in range(self.rows) for j in range(self.cols) if i != j
        )


class _SparseMat:
    """Mutable sparse matrix with row dicts plus a column index."""

    __slots__ = ("nrows", "ncols", "rows", "colidx")

    def __init__(self, nrows, ncols):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)]
        self.colidx = [set() for _ in range(ncols)]

    @staticmethod
    def from_entries(nrows, ncols, items) -> "_SparseMat":
        m = _SparseMat(nrows, ncols)
        for i, j, v in items:
            if v:
                m.rows[i][j] = m.rows[i].get(j, 0) + v
                if m.rows[i][j] == 0:
                    del m.rows[i][j]
                    m.colidx[j].discard(i)
                else:
                    m.colidx[j].add(i)
        return m

    def get(self, i, j):
        return self.rows[i].get(j, 0)

    def set(self, i, j, v):
        if v:
            self.rows[i][j] = v
            self.colidx[j].add(i)
        elif j in self.rows[i]:
            del self.rows[i][j]
            self.colidx[j].discard(i)

    def add_row(self, dst, src, c):
        """row[dst] += c * row[src]"""
        if c == 0:
            return
        rd = self.rows[dst]
        for j, v in list(self.rows[src].items()):
            nv = rd.get(j, 0) + c * v
            if nv:
                rd[j] = nv
                self.colidx[j].add(dst)
            elif j in rd:
                del rd[j]
                self.colidx[j].discard(dst)

    def add_col(self, dst, src, c):
        """col[dst] += c * col[src]"""
        if c == 0:
            return
        for i in list(self.colidx[src]):
            v = self.rows[i].get(src, 0)
            nv = self.rows[i].get(dst, 0) + c * v
            if nv:
                self.rows[i][dst] = nv
                self.colidx[dst].add(i)
            elif dst in self.rows[i]:
                del self.rows[i][dst]
                self.colidx[dst].discard(i)

    def swap_rows(self, a, b):
        if a == b:
            return
        self.rows[a], self.rows[b] = self.rows[b], self.rows[a]
        for j in self.colidx:
            ina, inb = a in j, b in j
            if ina != inb:
                if ina:
                    j.discard(a)
                    j.add(b)
                else:
                    j.discard(b)
                    j.add(a)

    def swap_cols(self, a, b):
        if a == b:
            return
        touched = self.colidx[a] | self.colidx[b]
        for i in touched:
            r = self.rows[i]
            va, vb = r.pop(a, 0), r.pop(b, 0)
            if vb:
                r[a] = vb
            if va:
                r[b] = va
        self.colidx[a], self.colidx[b] = (
            {i for i in touched if a in self.rows[i]},
            {i for i in touched if b in self.rows[i]},
        )

    def scale_row(self, i, c):
        for j in list(self.rows[i]):
            self.rows[i][j] *= c

    def scale_col(self, j, c):
        for i in self.colidx[j]:
            self.rows[i][j] *= c

    def to_int_matrix(self) -> IntMatrix:
        flat = [0] * (self.nrows * self.ncols)
        for i, r in enumerate(self.rows):
            base = i * self.ncols
            for j, v in r.items():
                flat[base + j] = v
        return IntMatrix(self.nrows, self.ncols, tuple(flat))


@dataclass
class SmithDecomposition:
    """U @ A @ V == D with U, V unimodular and D = diag(d1 | d2 | ...)."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    Uinv: IntMatrix
    Vinv: IntMatrix

    @property
    def diagonal(self) -> list:
        n = min(self.D.rows, self.D.cols)
        return [self.D[i, i] for i in range(n)]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _as_sparse(A) -> _SparseMat:
    if isinstance(A, _SparseMat):
        return A
    if isinstance(A, IntMatrix):
        return _SparseMat.from_entries(
            A.rows,
            A.cols,
            (
                (i, j, A[i, j])
                for i in range(A.rows)
                for j in range(A.cols)
                if A[i, j]
            ),
        )
    # list of rows
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    return _SparseMat.from_entries(
        nrows, ncols, ((i, j, v) for i, r in enumerate(A) for j, v in enumerate(r) if v)
    )


def sparse_from_columns(nrows: int, columns: Sequence[dict]) -> _SparseMat:
    m = _SparseMat(nrows, len(columns))
    for j, col in enumerate(columns):
        for i, v in col.items():
            if v:
                m.set(i, j, v)
    return m


def _pick_pivot(m: _SparseMat, start: int):
    """Smallest |value|; ties broken by Markowitz count to limit fill-in."""
    best = None
    best_key = None
    for i in range(start, m.nrows):
        ri = m.rows[i]
        for j, v in ri.items():
            if j < start:
                continue
            a = abs(v)
            fill = (len(ri) - 1) * (len(m.colidx[j]) - 1)
            key = (a, fill)
            if best_key is None or key < best_key:
                best, best_key = (i, j), key
                if a == 1 and fill == 0:
                    return best
    return best


def smith_normal_form(A, want_transforms: bool = True) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Accepts an ``IntMatrix``, a list of rows, or an internal sparse matrix.
    Total function: any integer matrix (including empty shapes) is accepted.
    """
    m = _as_sparse(A)
    nr, nc = m.nrows, m.ncols
    if want_transforms:
        U = _SparseMat.from_entries(nr, nr, ((i, i, 1) for i in range(nr)))
        Uinv = _SparseMat.from_entries(nr, nr, ((i, i, 1) for i in range(nr)))
        V = _SparseMat.from_entries(nc, nc, ((i, i, 1) for i in range(nc)))
        Vinv = _SparseMat.from_entries(nc, nc, ((i, i, 1) for i in range(nc)))

    def row_op(dst, src, c):
        m.add_row(dst, src, c)
        if want_transforms:
            U.add_row(dst, src, c)
            Uinv.add_col(src, dst, -c)

    def col_op(dst, src, c):
        m.add_col(dst, src, c)
        if want_transforms:
            V.add_col(dst, src, c)
            Vinv.add_row(src, dst, -c)

    def row_swap(a, b):
        m.swap_rows(a, b)
        if want_transforms:
            U.swap_rows(a, b)
            Uinv.swap_cols(a, b)

    def col_swap(a, b):
        m.swap_cols(a, b)
        if want_transforms:
            V.swap_cols(a, b)
            Vinv.swap_rows(a, b)

    def row_negate(i):
        m.scale_row(i, -1)
        if want_transforms:
            U.scale_row(i, -1)
            Uinv.scale_col(i, -1)

    t = 0
    limit = min(nr, nc)
    while t < limit:
        piv = _pick_pivot(m, t)
        if piv is None:
            break
        while True:
            pi, pj = piv
            row_swap(t, pi)
            col_swap(t, pj)
            p = m.get(t, t)
            if p < 0:
                row_negate(t)
                p = -p
            # clear column t below the pivot
            dirty = False
            for i in list(m.colidx[t]):
                if i == t:
                    continue
                v = m.get(i, t)
                row_op(i, t, -(v // p))
                if m.get(i, t):
                    dirty = True
            if not dirty:
                # clear row t right of the pivot
                for j in [j for j in m.rows[t] if j != t]:
                    v = m.get(t, j)
                    col_op(j, t, -(v // p))
                    if m.get(t, j):
                        dirty = True
            if not dirty and not any(i != t for i in m.colidx[t]):
                break
            # a reduction left a remainder strictly smaller than the pivot;
            # re-pick so the pivot magnitude strictly decreases
            piv = _pick_pivot(m, t)
        t += 1
    rank = t
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for k in range(rank - 1):
            a, b = m.get(k, k), m.get(k + 1, k + 1)
            if b % a != 0:
                changed = True
                # fold entry b into row k and rediagonalize the 2x2 block
                row_op(k, k + 1, 1)
                while True:
                    a = m.get(k, k)
                    b = m.get(k, k + 1)
                    if b == 0:
                        break
                    q = b // a
                    col_op(k + 1, k, -q)
                    if m.get(k, k + 1):
                        col_swap(k, k + 1)
                # clear any reintroduced sub-diagonal entry
                v = m.get(k + 1, k)
                if v:
                    row_op(k + 1, k, -(v // m.get(k, k)))
                if m.get(k, k) < 0:
                    row_negate(k)
                if m.get(k + 1, k + 1) < 0:
                    row_negate(k + 1)
    if want_transforms:
        return SmithDecomposition(
            U=U.to_int_matrix(),
            D=m.to_int_matrix(),
            V=V.to_int_matrix(),
            Uinv=Uinv.to_int_matrix(),
            Vinv=Vinv.to_int_matrix(),
        )
    return SmithDecomposition(
        U=IntMatrix.identity(0),
        D=m.to_int_matrix(),
        V=IntMatrix.identity(0),
        Uinv=IntMatrix.identity(0),
        Vinv=IntMatrix.identity(0),
    )


def snf_diagonal(A) -> list:
    """Diagonal of the Smith form only (no transforms; faster)."""
    dec = smith_normal_form(A, want_transforms=False)
    return [d for d in dec.diagonal if d != 0]


def kernel_mod(A, modulus: int) -> list:
    """Basis of the lattice {x in Z^cols : A @ x == 0 (mod modulus)}.

    Returned as a list of integer column vectors; together with the
    observation that modulus * Z^cols is contained in the lattice, these
    columns form a full-rank basis.
    """
    if modulus <= 0:
        raise ValueError("modulus must be positive")
    m = _as_sparse(A)
    dec = smith_normal_form(m)
    nc = m.ncols
    diag = dec.diagonal
    basis = []
    for i in range(nc):
        d = diag[i] if i < len(diag) else 0
        g = gcd(d, modulus)
        scale = modulus // g
        col = [scale * dec.V[r, i] for r in range(nc)]
        basis.append(col)
    return basis


def image_lattice_mod(A, modulus: int) -> int:
    """|image of (x -> A x mod modulus)| for an integer matrix A."""
    size = 1
    for d in snf_diagonal(A):
        size *= modulus // gcd(d, modulus)
    return size


def solve_int(A, b: Sequence[int]):
    """One integer solution x of A @ x == b, or None."""
    m = _as_sparse(A)
    dec = smith_normal_form(m)
    c = dec.U.apply(list(b))
    diag = dec.diagonal
    y = [0] * m.ncols
    for i in range(m.nrows):
        ci = c[i]
        d = diag[i] if i < len(diag) else 0
        if i < m.ncols and d != 0:
            if ci % d != 0:
                return None
            y[i] = ci // d
        elif ci != 0:
            return None
    return dec.V.apply(y)


def solve_mod(A, row_moduli: Sequence[int], b: Sequence[int]):
    """One integer x with (A @ x)[i] == b[i] (mod row_moduli[i]), or None.

    Row moduli may differ per row; a modulus of 0 means an exact equation.
    """
    m = _as_sparse(A)
    nr, nc = m.nrows, m.ncols
    aug = _SparseMat(nr, nc + nr)
    for i, r in enumerate(m.rows):
        for j, v in r.items():
            aug.set(i, j, v)
    for i, mod in enumerate(row_moduli):
        if mod:
            aug.set(i, nc + i, mod)
    sol = solve_int(aug, b)
    if sol is None:
        return None
    return sol[:nc]


def kernel_mod_mixed(A, row_moduli: Sequence[int]) -> list:
    """Generators of {x : (A @ x)[i] == 0 (mod row_moduli[i])} over Z."""
    m = _as_sparse(A)
    nr, nc = m.nrows, m.ncols
    aug = _SparseMat(nr, nc + nr)
    for i, r in enumerate(m.rows):
        for j, v in r.items():
            aug.set(i, j, v)
    for i, mod in enumerate(row_moduli):
        if mod:
            aug.set(i, nc + i, mod)
    dec = smith_normal_form(aug)
    diag = dec.diagonal
    rank = sum(1 for d in diag if d != 0)
    gens = []
    for k in range(rank, nc + nr):
        gens.append([dec.V[r, k] for r in range(nc)])
    return gens


@dataclass
class CokernelPresentation:
    """Finite presentation of (ambient module) / (relations)."""

    invariant_factors: tuple  # factors > 1, each dividing the next
    _kept: tuple
    _snf: SmithDecomposition
    ambient_rank: int

    def project(self, vec: Sequence[int]) -> tuple:
        w = self._snf.U.apply(list(vec))
        return tuple(
            w[i] % self.invariant_factors[k] for k, i in enumerate(self._kept)
        )

    def section(self, coords: Sequence[int]) -> list:
        v = [0] * self.ambient_rank
        for k, i in enumerate(self._kept):
            v[i] = coords[k] % self.invariant_factors[k]
        return self._snf.Uinv.apply(v)


def cokernel_presentation(relations, ambient_rank: int, moduli) -> CokernelPresentation:
    """Present Z^ambient_rank / (columns of relations + diag(moduli) Z).

    ``relations`` is given as a list of column vectors; ``moduli`` is either a
    single integer applied to every coordinate or a per-coordinate sequence.
    The presentation drops trivial (order 1) factors, and ``project`` /
    ``section`` satisfy project(section(c)) == c.
    """
    if isinstance(moduli, int):
        moduli = [moduli] * ambient_rank
    cols = list(relations) + [
        [moduli[i] if r == i else 0 for r in range(ambient_rank)]
        for i in range(ambient_rank)
        if moduli[i]
    ]
    m = _SparseMat(ambient_rank, len(cols))
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v:
                m.set(i, j, v)
    dec = smith_normal_form(m)
    diag = dec.diagonal
    factors = []
    kept = []
    for i in range(ambient_rank):
        d = diag[i] if i < len(diag) else 0
        if d == 1:
            continue
        kept.append(i)
        factors.append(d)
    if any(d == 0 for d in factors):
        raise ValueError("cokernel is infinite; expected finite moduli")
    return CokernelPresentation(
        invariant_factors=tuple(factors),
        _kept=tuple(kept),
        _snf=dec,
        ambient_rank=ambient_rank,
    )


def subgroup_order(gens: Iterable[Sequence[int]], moduli: Sequence[int]) -> int:
    """Order of the subgroup of prod Z_moduli generated by ``gens``."""
    moduli = list(moduli)
    n = len(moduli)
    cols = [list(g) for g in gens] + [
        [moduli[i] if r == i else 0 for r in range(n)] for i in range(n)
    ]
    m = _SparseMat(n, len(cols))
    for j, col in enumerate(cols):
        for i, v in enumerate(col):
            if v:
                m.set(i, j, v)
    diag = snf_diagonal(m)
    coker = prod(diag) if len(diag) == n else 0
    if coker == 0:
        raise ValueError("generators do not span a finite-index subgroup")
    total = prod(moduli)
    assert total % coker == 0
    return total // coker
