"""Exact dense matrices and the elimination routines behind every solver.

Basis-order convention for tensor products: the left factor index varies
slowest, so ``e_i (x) f_j`` sits at position ``i * dim(f) + j``.

Entries are raw field values (see :mod:`nkwb.exactfield`).  Row reduction
dispatches on the field: fraction-free Gauss-Jordan on Python integers for
Q, vectorised residue arithmetic for prime fields, and a generic loop for
extensions.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

from .exactfield import Field, FieldMismatch, PrimeField, Rationals, Scalar


class NoSolution(ValueError):
    """Inconsistent linear system; ``row`` is the 1-based index of the first
    equation that cannot be satisfied together with the ones above it."""

    def __init__(self, row: int):
        super().__init__(f"inconsistent system at row {row}")
        self.row = row


class Matrix:
    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: Field, rows: list[list], nrows: int | None = None, ncols: int | None = None):
        self.field = field
        self.rows = rows
        self.nrows = len(rows) if nrows is None else nrows
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        self.ncols = ncols

    # construction -----------------------------------------------------
    @classmethod
    def from_values(cls, field: Field, data: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = [[field.coerce(x) for x in row] for row in data]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(field, rows, len(rows), ncols)

    @classmethod
    def zeros(cls, field: Field, nrows: int, ncols: int) -> "Matrix":
        z = field.zero
        return cls(field, [[z] * ncols for _ in range(nrows)], nrows, ncols)

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        m = cls.zeros(field, n, n)
        for i in range(n):
            m.rows[i][i] = field.one
        return m

    @classmethod
    def from_columns(cls, field: Field, cols: Sequence[Sequence], nrows: int) -> "Matrix":
        rows = [[c[i] for c in cols] for i in range(nrows)]
        return cls(field, rows, nrows, len(cols))

    @classmethod
    def column(cls, field: Field, vec: Sequence) -> "Matrix":
        return cls(field, [[x] for x in vec], len(vec), 1)

    # access -----------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return Scalar(self.field, self.rows[i][j])

    def col(self, j: int) -> list:
        return [r[j] for r in self.rows]

    def columns(self) -> list[list]:
        return [self.col(j) for j in range(self.ncols)]

    def copy(self) -> "Matrix":
        return Matrix(self.field, [r[:] for r in self.rows], self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, [list(c) for c in zip(*self.rows)] if self.nrows else [[] for _ in range(self.ncols)],
                      self.ncols, self.nrows)

    def select_columns(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [[r[j] for j in idx] for r in self.rows], self.nrows, len(idx))

    def select_rows(self, idx: Sequence[int]) -> "Matrix":
        return Matrix(self.field, [self.rows[i][:] for i in idx], len(idx), self.ncols)

    # arithmetic -------------------------------------------------------
    def _check(self, other: "Matrix"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        add = self.field.add
        return Matrix(self.field, [[add(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.nrows, self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        sub = self.field.sub
        return Matrix(self.field, [[sub(a, b) for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
                      self.nrows, self.ncols)

    def __neg__(self) -> "Matrix":
        neg = self.field.neg
        return Matrix(self.field, [[neg(a) for a in r] for r in self.rows], self.nrows, self.ncols)

    def scale(self, c) -> "Matrix":
        """Multiply by a raw scalar (or anything the field can coerce)."""
        F = self.field
        c = F.coerce(c) if not _is_raw(F, c) else c
        mul = F.mul
        return Matrix(F, [[mul(c, a) for a in r] for r in self.rows], self.nrows, self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.field, _matmul_rows(self.field, self.rows, other.rows, other.ncols), self.nrows, other.ncols)

    def apply(self, vec: Sequence) -> list:
        F = self.field
        add, mul, z = F.add, F.mul, F.zero
        out = []
        for r in self.rows:
            acc = z
            for a, b in zip(r, vec):
                if a != z and b != z:
                    acc = add(acc, mul(a, b))
            out.append(acc)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, tuple(tuple(r) for r in self.rows)))

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(a == z for r in self.rows for a in r)

    def is_identity(self) -> bool:
        F = self.field
        if self.nrows != self.ncols:
            return False
        return all(a == (F.one if i == j else F.zero) for i, r in enumerate(self.rows) for j, a in enumerate(r))

    def trace(self):
        return self.field.sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def rank(self) -> int:
        return len(rref_rows(self.field, self.rows, self.ncols)[1])

    def inverse(self) -> "Matrix":
        if self.nrows != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        F = self.field
        aug = [r[:] + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)]
        rows, piv = rref_rows(F, aug, 2 * n)
        if piv[:n] != list(range(n)) or len([p for p in piv if p < n]) != n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(F, [r[n:] for r in rows[:n]], n, n)

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows

    def power(self, k: int) -> "Matrix":
        if k < 0:
            return self.inverse().power(-k)
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def hstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [a + b for a, b in zip(self.rows, other.rows)], self.nrows, self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.field, [r[:] for r in self.rows] + [r[:] for r in other.rows],
                      self.nrows + other.nrows, self.ncols)

    def to_strings(self) -> list[list[str]]:
        fmt = self.field.fmt
        return [[fmt(a) for a in r] for r in self.rows]

    def __repr__(self):
        return f"Matrix({self.field!r}, {self.to_strings()})"


def _is_raw(F: Field, c) -> bool:
    if isinstance(F, Rationals):
        return isinstance(c, Fraction)
    if isinstance(F, PrimeField):
        return isinstance(c, int) and not isinstance(c, bool) and 0 <= c < F.p
    return isinstance(c, tuple)


def _matmul_rows(F: Field, A: list[list], B: list[list], ncols: int) -> list[list]:
    if isinstance(F, PrimeField) and F.p < (1 << 26) and A and B and len(A) * len(B) * ncols > 4000:
        a = np.array(A, dtype=np.int64).reshape(len(A), len(B))
        b = np.array(B, dtype=np.int64).reshape(len(B), ncols)
        p = F.p
        if len(B) * (p - 1) ** 2 < (1 << 62):
            return ((a @ b) % p).tolist()
    z = F.zero
    add, mul = F.add, F.mul
    out = []
    for r in A:
        acc = [z] * ncols
        for k, a in enumerate(r):
            if a == z:
                continue
            brow = B[k]
            for j in range(ncols):
                b = brow[j]
                if b != z:
                    acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


def kron(A: Matrix, B: Matrix) -> Matrix:
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    F = A.field
    mul, z = F.mul, F.zero
    rows = []
    for ra in A.rows:
        for rb in B.rows:
            row = []
            for a in ra:
                if a == z:
                    row.extend([z] * B.ncols)
                else:
                    row.extend(mul(a, b) if b != z else z for b in rb)
            rows.append(row)
    return Matrix(F, rows, A.nrows * B.nrows, A.ncols * B.ncols)


def block_diag(F: Field, blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    out = Matrix.zeros(F, n, m)
    r = c = 0
    for b in blocks:
        for i, row in enumerate(b.rows):
            out.rows[r + i][c:c + b.ncols] = row
        r += b.nrows
        c += b.ncols
    return out


# ---------------------------------------------------------------------------
# row reduction


def rref_rows(F: Field, rows: list[list], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form.  Returns the nonzero rows and pivot columns."""
    if not rows or ncols == 0:
        return [], []
    if isinstance(F, PrimeField) and F.p < (1 << 31):
        return _rref_mod_p(rows, ncols, F.p)
    if isinstance(F, Rationals):
        return _rref_fraction_free(rows, ncols)
    return _rref_generic(F, rows, ncols)


def _rref_mod_p(rows, ncols, p):
    M = np.array(rows, dtype=np.int64).reshape(len(rows), ncols) % p
    nrows = M.shape[0]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        col = M[:, c].copy()
        col[r] = 0
        idx = np.nonzero(col)[0]
        if idx.size:
            M[idx] = (M[idx] - np.outer(col[idx], M[r])) % p
        pivots.append(c)
        r += 1
    return M[:r].tolist(), pivots


def _rref_fraction_free(rows, ncols):
    # integerise each row, then Bareiss-style Gauss-Jordan with exact division
    M = []
    for row in rows:
        den = 1
        for x in row:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
        M.append([int(x * den) for x in row])
    nrows = len(M)
    pivots = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        piv_row = M[r]
        p = piv_row[c]
        for i in range(nrows):
            if i == r:
                continue
            row = M[i]
            a = row[c]
            if a == 0:
                if p != prev:
                    # keep all rows on the same determinant scale
                    M[i] = [(p * x) // prev for x in row]
                continue
            M[i] = [(p * x - a * y) // prev for x, y in zip(row, piv_row)]
        prev = p
        pivots.append(c)
        r += 1
    out = []
    for i in range(r):
        row = M[i]
        lead = row[pivots[i]]
        out.append([Fraction(x, lead) for x in row])
    return out, pivots


def _rref_generic(F, rows, ncols):
    M = [r[:] for r in rows]
    nrows = len(M)
    z = F.zero
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        k = next((i for i in range(r, nrows) if M[i][c] != z), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        prow = M[r]
        for i in range(nrows):
            if i != r and M[i][c] != z:
                a = M[i][c]
                M[i] = [F.sub(x, F.mul(a, y)) for x, y in zip(M[i], prow)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    rows, piv = rref_rows(A.field, A.rows, A.ncols)
    return Matrix(A.field, rows, len(rows), A.ncols), piv


def nullspace_vectors(F: Field, rows: list[list], ncols: int) -> list[list]:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    R, piv = rref_rows(F, rows, ncols) if rows else ([], [])
    pivset = set(piv)
    out = []
    for j in range(ncols):
        if j in pivset:
            continue
        v = [F.zero] * ncols
        v[j] = F.one
        for row, pc in zip(R, piv):
            if row[j] != F.zero:
                v[pc] = F.neg(row[j])
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# subspaces


class Subspace:
    """A subspace of F^n stored canonically.

    ``basis`` has the basis vectors as columns in reduced column echelon
    form, so two equal subspaces have identical representations.
    """

    __slots__ = ("field", "ambient_dim", "basis", "_rows", "_pivots")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence]):
        self.field = field
        self.ambient_dim = ambient_dim
        vecs = [list(v) for v in vectors]
        rows, piv = rref_rows(field, vecs, ambient_dim) if vecs else ([], [])
        self._rows = rows
        self._pivots = piv
        self.basis = Matrix.from_columns(field, rows, ambient_dim) if rows else Matrix(field, [[] for _ in range(ambient_dim)], ambient_dim, 0)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def vectors(self) -> list[list]:
        return [r[:] for r in self._rows]

    def coords(self, v: Sequence) -> list:
        """Coordinates of ``v`` in the echelon basis; raises if v is outside."""
        F = self.field
        c = [v[p] for p in self._pivots]
        recon = [F.zero] * self.ambient_dim
        for a, row in zip(c, self._rows):
            if a != F.zero:
                recon = [F.add(x, F.mul(a, y)) for x, y in zip(recon, row)]
        if list(recon) != list(v):
            raise ValueError("vector not in subspace")
        return c

    def contains(self, v: Sequence) -> bool:
        try:
            self.coords(v)
            return True
        except ValueError:
            return False

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other._rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self._rows == other._rows

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(r) for r in self._rows)))

    def __repr__(self):
        return f"Subspace(dim={self.dim} in {self.ambient_dim})"


def kernel(A: Matrix) -> Subspace:
    return Subspace(A.field, A.ncols, nullspace_vectors(A.field, A.rows, A.ncols))


def image(A: Matrix) -> Subspace:
    return Subspace(A.field, A.nrows, A.columns())


@dataclass
class Cokernel:
    projection: Matrix  # dim x nrows(A), kernel = image(A)
    section: Matrix  # nrows(A) x dim, projection @ section = I
    dim: int


def cokernel_of_subspace(W: Subspace) -> Cokernel:
    F = W.field
    n = W.ambient_dim
    pivset = set(W._pivots)
    free = [j for j in range(n) if j not in pivset]
    proj = Matrix.zeros(F, len(free), n)
    for a, j in enumerate(free):
        proj.rows[a][j] = F.one
        # a vector v is reduced modulo W by v - sum_p v_p w_p; its free
        # coordinate j then reads v_j - sum_p v_p w_p[j]
        for row, p in zip(W._rows, W._pivots):
            if row[j] != F.zero:
                proj.rows[a][p] = F.neg(row[j])
    sec = Matrix.zeros(F, n, len(free))
    for a, j in enumerate(free):
        sec.rows[j][a] = F.one
    return Cokernel(proj, sec, len(free))


def cokernel(A: Matrix) -> Cokernel:
    return cokernel_of_subspace(image(A))


@dataclass
class SolveResult:
    solution: Matrix
    nullspace: Subspace


def rref_solve(A: Matrix, B: Matrix) -> SolveResult:
    """Solve A X = B exactly (one particular solution plus ker A)."""
    if A.field != B.field:
        raise FieldMismatch(f"{A.field} vs {B.field}")
    if A.nrows != B.nrows:
        raise ValueError("A and B must have the same number of rows")
    F = A.field
    n, k = A.ncols, B.ncols
    aug = [ra + rb for ra, rb in zip(A.rows, B.rows)]
    R, piv = rref_rows(F, aug, n + k)
    if any(p >= n for p in piv):
        raise NoSolution(_first_inconsistent_row(F, A, B))
    X = Matrix.zeros(F, n, k)
    for row, p in zip(R, piv):
        X.rows[p] = row[n:]
    return SolveResult(X, kernel(A))


def _first_inconsistent_row(F, A, B) -> int:
    lo, hi = 1, A.nrows
    # smallest prefix whose augmented rank exceeds the coefficient rank
    def bad(m):
        a = A.rows[:m]
        ab = [ra + rb for ra, rb in zip(a, B.rows[:m])]
        return len(rref_rows(F, ab, A.ncols + B.ncols)[1]) > len(rref_rows(F, a, A.ncols)[1])

    while lo < hi:
        mid = (lo + hi) // 2
        if bad(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


class CoordinateSolver:
    """Express vectors in a fixed independent family (columns of ``basis``).

    Uses a left inverse built from pivot rows so repeated queries are a
    single matrix-vector product plus a membership check.
    """

    def __init__(self, F: Field, vectors: Sequence[Sequence], ambient_dim: int):
        self.field = F
        self.ambient_dim = ambient_dim
        self.vectors = [list(v) for v in vectors]
        r = len(self.vectors)
        self.dim = r
        if r == 0:
            self.rows_idx: list[int] = []
            self.left_inv = Matrix(F, [], 0, 0)
            return
        # pivot rows of the basis matrix = pivot columns of its transpose
        _, piv = rref_rows(F, self.vectors, ambient_dim)
        if len(piv) != r:
            raise ValueError("vectors are linearly dependent")
        self.rows_idx = piv
        square = Matrix(F, [[v[i] for v in self.vectors] for i in piv], r, r)
        self.left_inv = square.inverse()

    def coords(self, v: Sequence, check: bool = True) -> list:
        F = self.field
        if self.dim == 0:
            if check and any(x != F.zero for x in v):
                raise ValueError("vector not in span")
            return []
        c = self.left_inv.apply([v[i] for i in self.rows_idx])
        if check:
            recon = [F.zero] * self.ambient_dim
            for a, vec in zip(c, self.vectors):
                if a != F.zero:
                    recon = [F.add(x, F.mul(a, y)) for x, y in zip(recon, vec)]
            if recon != list(v):
                raise ValueError("vector not in span")
        return c

    def coords_matrix(self, M: Matrix, check: bool = True) -> Matrix:
        """Coordinates of every column of M, as columns."""
        cols = [self.coords(c, check) for c in M.columns()]
        return Matrix.from_columns(self.field, cols, self.dim)


def vec_combination(F: Field, coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> list:
    out = [F.zero] * n
    for a, v in zip(coeffs, vectors):
        if a == F.zero:
            continue
        for i, x in enumerate(v):
            if x != F.zero:
                out[i] = F.add(out[i], F.mul(a, x))
    return out


def mat_combination(F: Field, coeffs: Sequence, mats: Sequence[Matrix], nrows: int, ncols: int) -> Matrix:
    out = [[F.zero] * ncols for _ in range(nrows)]
    add, mul, z = F.add, F.mul, F.zero
    for a, M in zip(coeffs, mats):
        if a == z:
            continue
        for i, row in enumerate(M.rows):
            orow = out[i]
            for j, x in enumerate(row):
                if x != z:
                    orow[j] = add(orow[j], mul(a, x))
    return Matrix(F, out, nrows, ncols)


def vec_of(M: Matrix) -> list:
    """Row-major flattening."""
    return [x for r in M.rows for x in r]


def unvec(F: Field, v: Sequence, nrows: int, ncols: int) -> Matrix:
    return Matrix(F, [list(v[i * ncols:(i + 1) * ncols]) for i in range(nrows)], nrows, ncols)


class IncrementalSpan:
    """Growing span kept in reduced echelon form; ``add`` reports novelty."""

    def __init__(self, F: Field, n: int):
        self.field = F
        self.n = n
        self.rows: list[list] = []
        self.pivots: list[int] = []
        self.originals: list[list] = []

    def reduce(self, v: Sequence) -> list:
        F = self.field
        z = F.zero
        v = list(v)
        for row, p in zip(self.rows, self.pivots):
            a = v[p]
            if a != z:
                v = [F.sub(x, F.mul(a, y)) if y != z else x for x, y in zip(v, row)]
        return v

    def add(self, v: Sequence) -> bool:
        F = self.field
        z = F.zero
        w = self.reduce(v)
        p = next((i for i, x in enumerate(w) if x != z), None)
        if p is None:
            return False
        inv = F.inv(w[p])
        w = [F.mul(inv, x) for x in w]
        for k, row in enumerate(self.rows):
            a = row[p]
            if a != z:
                self.rows[k] = [F.sub(x, F.mul(a, y)) if y != z else x for x, y in zip(row, w)]
        self.rows.append(w)
        self.pivots.append(p)
        self.originals.append(list(v))
        return True

    def contains(self, v: Sequence) -> bool:
        z = self.field.zero
        return all(x == z for x in self.reduce(v))

    @property
    def dim(self) -> int:
        return len(self.rows)
