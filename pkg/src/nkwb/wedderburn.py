"""Structure of a finite-dimensional algebra given by structure constants.

Radical by the trace form (certified afterwards: the candidate must be a
nilpotent two-sided ideal), semisimple quotient, central idempotents,
rank-one idempotents inside each matrix block, and lifting of a complete
orthogonal set of primitive idempotents back along the radical.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import isqrt
from typing import Callable, Sequence

from .exactfield import Field, RootFindingUnsupported, poly_roots
from .linalg import (CoordinateSolver, IncrementalSpan, Matrix, Subspace, cokernel_of_subspace,
                     nullspace_vectors, rref_solve, NoSolution)


class SplitnessError(ArithmeticError):
    def __init__(self, message: str, block_dim: int | None = None):
        super().__init__(message)
        self.block_dim = block_dim


class CharTooSmall(ArithmeticError):
    pass


class FDAlgebra:
    """Finite-dimensional unital algebra on F^n with a bilinear product."""

    def __init__(self, F: Field, n: int, mul: Callable[[Sequence, Sequence], list], unit: Sequence):
        self.field = F
        self.n = n
        self._mul = mul
        self.unit = list(unit)

    def mul(self, x, y) -> list:
        return self._mul(x, y)

    def basis_vector(self, k: int) -> list:
        F = self.field
        return [F.one if i == k else F.zero for i in range(self.n)]

    def add(self, x, y):
        F = self.field
        return [F.add(a, b) for a, b in zip(x, y)]

    def sub(self, x, y):
        F = self.field
        return [F.sub(a, b) for a, b in zip(x, y)]

    def smul(self, c, x):
        F = self.field
        return [F.mul(c, a) for a in x]

    def is_zero(self, x) -> bool:
        z = self.field.zero
        return all(a == z for a in x)

    def left_matrix(self, x) -> Matrix:
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.n)]
        return Matrix.from_columns(self.field, cols, self.n)

    def table(self) -> list[list[list]]:
        return [[self.mul(self.basis_vector(i), self.basis_vector(j)) for j in range(self.n)] for i in range(self.n)]


def table_algebra(F: Field, table: list[list[list]], unit: Sequence) -> FDAlgebra:
    n = len(unit)
    z = F.zero

    def mul(x, y):
        out = [z] * n
        for i, a in enumerate(x):
            if a == z:
                continue
            row = table[i]
            for j, b in enumerate(y):
                if b == z:
                    continue
                ab = F.mul(a, b)
                for k, c in enumerate(row[j]):
                    if c != z:
                        out[k] = F.add(out[k], F.mul(ab, c))
        return out

    return FDAlgebra(F, n, mul, unit)


# ---------------------------------------------------------------------------


def trace_form_radical(A: FDAlgebra) -> list[list]:
    """Radical of (x, y) -> tr(L_x L_y), checked to be a nilpotent ideal."""
    F, n = A.field, A.n
    L = [A.left_matrix(A.basis_vector(i)) for i in range(n)]
    T = [[F.zero] * n for _ in range(n)]
    for i in range(n):
        Li = L[i].rows
        for j in range(i, n):
            Lj = L[j].rows
            acc = F.zero
            for k in range(n):
                rk = Li[k]
                for l in range(n):
                    a = rk[l]
                    if a != F.zero:
                        b = Lj[l][k]
                        if b != F.zero:
                            acc = F.add(acc, F.mul(a, b))
            T[i][j] = T[j][i] = acc
    J = nullspace_vectors(F, T, n)
    if J and not _is_nilpotent_ideal(A, J):
        raise CharTooSmall(
            f"trace-form radical is not a nilpotent ideal in characteristic {F.characteristic} (dim {n})")
    return J


def _is_nilpotent_ideal(A: FDAlgebra, J: list[list]) -> bool:
    F, n = A.field, A.n
    span = IncrementalSpan(F, n)
    for v in J:
        span.add(v)
    for v in J:
        for k in range(n):
            b = A.basis_vector(k)
            if not span.contains(A.mul(v, b)) or not span.contains(A.mul(b, v)):
                return False
    power = [list(v) for v in J]
    for _ in range(n + 1):
        nxt = IncrementalSpan(F, n)
        for x in power:
            for y in J:
                nxt.add(A.mul(x, y))
        if nxt.dim == 0:
            return True
        if nxt.dim == len(power):
            return False
        power = nxt.rows
    return False


def min_poly(A: FDAlgebra, y: Sequence, unit: Sequence) -> list:
    """Monic minimal polynomial of ``y`` in the corner algebra with identity
    ``unit`` (little-endian raw coefficients)."""
    F = A.field
    powers = [list(unit)]
    span = IncrementalSpan(F, A.n)
    span.add(unit)
    cur = list(unit)
    while True:
        cur = A.mul(cur, y)
        if not span.contains(cur):
            span.add(cur)
            powers.append(cur)
            continue
        solver = CoordinateSolver(F, powers, A.n)
        c = solver.coords(cur)
        return [F.neg(a) for a in c] + [F.one]


def _poly_in(A: FDAlgebra, coeffs: Sequence, y: Sequence, unit: Sequence) -> list:
    F = A.field
    out = [F.zero] * A.n
    for c in reversed(coeffs):
        out = A.add(A.mul(out, y), A.smul(c, unit))
    return out


def _roots(F: Field, poly: Sequence) -> list:
    try:
        return poly_roots(F, poly)
    except RootFindingUnsupported as exc:
        raise SplitnessError(f"cannot split over {F!r}: {exc}") from exc


def _span_dim(A: FDAlgebra, vecs) -> int:
    span = IncrementalSpan(A.field, A.n)
    for v in vecs:
        span.add(v)
    return span.dim


def _corner_basis(A: FDAlgebra, e: Sequence) -> list[list]:
    span = IncrementalSpan(A.field, A.n)
    out = []
    for k in range(A.n):
        v = A.mul(A.mul(e, A.basis_vector(k)), e)
        if span.add(v):
            out.append(v)
    return out


def _candidates(A: FDAlgebra, basis: list[list], rng: random.Random, budget: int):
    F = A.field
    for b in basis:
        yield b
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield A.add(basis[i], basis[j])
    for _ in range(budget):
        coeffs = [F.from_int(rng.randint(-3, 3)) for _ in basis]
        out = [F.zero] * A.n
        for c, b in zip(coeffs, basis):
            out = A.add(out, A.smul(c, b))
        yield out


def central_idempotents(A: FDAlgebra, rng: random.Random) -> list[list]:
    """Primitive central idempotents of a split semisimple algebra."""
    F, n = A.field, A.n
    rows = []
    basis = [A.basis_vector(k) for k in range(n)]
    for j in range(n):
        # sum_i z_i (b_i b_j - b_j b_i) = 0
        comm = [A.sub(A.mul(basis[i], basis[j]), A.mul(basis[j], basis[i])) for i in range(n)]
        for k in range(n):
            rows.append([comm[i][k] for i in range(n)])
    Z = nullspace_vectors(F, rows, n)
    done: list[list] = []
    pending = [list(A.unit)]
    while pending:
        c = pending.pop()
        Zc = []
        span = IncrementalSpan(F, n)
        for z in Z:
            v = A.mul(c, z)
            if span.add(v):
                Zc.append(v)
        if len(Zc) <= 1:
            done.append(c)
            continue
        split = None
        for y in _candidates(A, Zc, rng, 64):
            m = min_poly(A, y, c)
            if len(m) <= 2:
                continue
            roots = _roots(F, m)
            if len(roots) < len(m) - 1:
                raise SplitnessError("center of the semisimple quotient is not split over the field", len(Zc))
            split = []
            for r in roots:
                e = list(c)
                denom = F.one
                for s in roots:
                    if s == r:
                        continue
                    e = A.mul(e, A.sub(y, A.smul(s, c)))
                    denom = F.mul(denom, F.sub(r, s))
                split.append(A.smul(F.inv(denom), e))
            break
        if split is None:
            raise SplitnessError("could not split the center", len(Zc))
        pending.extend(split)
    return done


def _right_identity(A: FDAlgebra, L: list[list]) -> list | None:
    F = A.field
    # f = sum a_i L_i with l_j f = l_j for all j
    r = len(L)
    rows, rhs = [], []
    for lj in L:
        prods = [A.mul(lj, li) for li in L]
        for k in range(A.n):
            rows.append([prods[i][k] for i in range(r)])
            rhs.append([lj[k]])
    try:
        sol = rref_solve(Matrix(F, rows, len(rows), r), Matrix(F, rhs, len(rhs), 1)).solution.col(0)
    except NoSolution:
        return None
    f = [F.zero] * A.n
    for a, li in zip(sol, L):
        f = A.add(f, A.smul(a, li))
    return f


def split_idempotent(A: FDAlgebra, e: list, rng: random.Random, budget: int = 200) -> list[list]:
    """Split an idempotent of a split semisimple algebra into orthogonal
    rank-one (primitive) idempotents."""
    F = A.field
    corner = _corner_basis(A, e)
    d = len(corner)
    r = isqrt(d)
    if r * r != d:
        raise SplitnessError(f"block of dimension {d} is not a full matrix algebra", d)
    if r == 1:
        return [e]
    for y in _candidates(A, corner, rng, budget):
        m = min_poly(A, y, e)
        if len(m) <= 2:
            continue
        for rho in _roots(F, m):
            z = A.sub(y, A.smul(rho, e))
            span = IncrementalSpan(F, A.n)
            L = []
            for x in corner:
                v = A.mul(x, z)
                if span.add(v):
                    L.append(v)
            if not L or len(L) == d:
                continue
            f = _right_identity(A, L)
            if f is None or A.mul(f, f) != f or A.is_zero(f) or f == e:
                continue
            return split_idempotent(A, f, rng, budget) + split_idempotent(A, A.sub(e, f), rng, budget)
    raise SplitnessError(f"no rank-one idempotent found in a block of dimension {d}; try a field extension", d)


def lift_idempotent(A: FDAlgebra, x: list, max_iter: int = 64) -> list:
    """Iterate e <- 3e^2 - 2e^3 until e is idempotent."""
    F = A.field
    three, two = F.from_int(3), F.from_int(2)
    e = list(x)
    for _ in range(max_iter):
        e2 = A.mul(e, e)
        if e2 == e:
            return e
        e3 = A.mul(e2, e)
        e = A.sub(A.smul(three, e2), A.smul(two, e3))
    raise ArithmeticError("idempotent lifting did not stabilise")


# ---------------------------------------------------------------------------


@dataclass
class Block:
    central: list  # central idempotent of the quotient
    size: int  # d, the block is d x d matrices
    idempotents: list[list]  # rank-one idempotents of the quotient summing to central
    order_key: int


@dataclass
class Decomposition:
    algebra: FDAlgebra
    radical: list[list]
    proj: Matrix  # A -> A/J
    section: Matrix  # A/J -> A
    quotient: FDAlgebra
    blocks: list[Block]
    lifted: list[list] = field(default_factory=list)  # primitive idempotents of A
    lifted_block: list[int] = field(default_factory=list)  # block index of each lifted idempotent

    def characters(self) -> list[list]:
        """Algebra maps A -> k, one per 1x1 block, as value lists on the basis."""
        F = self.algebra.field
        out = []
        for b in self.blocks:
            if b.size != 1:
                continue
            c = b.central
            piv = next(i for i, x in enumerate(c) if x != F.zero)
            inv = F.inv(c[piv])
            vals = []
            for k in range(self.algebra.n):
                xk = self.proj.apply(self.algebra.basis_vector(k))
                vals.append(F.mul(self.quotient.mul(xk, c)[piv], inv))
            out.append(vals)
        return out

    def to_quotient(self, x) -> list:
        return self.proj.apply(x)

    def simple_module(self, block_index: int) -> list[Matrix]:
        """Matrices of the basis elements of A acting on the simple module of a block
        (the left ideal of the quotient generated by a rank-one idempotent)."""
        Ab = self.quotient
        F = Ab.field
        e = self.blocks[block_index].idempotents[0]
        span = IncrementalSpan(F, Ab.n)
        basis = []
        for k in range(Ab.n):
            v = Ab.mul(Ab.basis_vector(k), e)
            if span.add(v):
                basis.append(v)
        solver = CoordinateSolver(F, basis, Ab.n)
        mats = []
        for k in range(self.algebra.n):
            xk = self.proj.apply(self.algebra.basis_vector(k))
            cols = [solver.coords(Ab.mul(xk, b)) for b in basis]
            mats.append(Matrix.from_columns(F, cols, len(basis)))
        return mats


def decompose(A: FDAlgebra, seed: int = 0) -> Decomposition:
    F, n = A.field, A.n
    rng = random.Random(seed)
    J = trace_form_radical(A)
    W = Subspace(F, n, J)
    cok = cokernel_of_subspace(W)
    P, S = cok.projection, cok.section
    r = cok.dim
    table = []
    for i in range(r):
        row = []
        si = S.col(i)
        for j in range(r):
            row.append(P.apply(A.mul(si, S.col(j))))
        table.append(row)
    Ab = table_algebra(F, table, P.apply(A.unit))
    cents = central_idempotents(Ab, rng)
    blocks = []
    for c in cents:
        ids = split_idempotent(Ab, c, rng)
        key = next(k for k in range(n) if not Ab.is_zero(Ab.mul(P.apply(A.basis_vector(k)), c)))
        blocks.append(Block(c, len(ids), ids, key))
    blocks.sort(key=lambda b: (b.order_key, b.size))
    dec = Decomposition(A, J, P, S, Ab, blocks)
    _lift_all(dec)
    return dec


def _lift_all(dec: Decomposition) -> None:
    A = dec.algebra
    F = A.field
    targets = [(bi, e) for bi, b in enumerate(dec.blocks) for e in b.idempotents]
    lifted: list[list] = []
    owner: list[int] = []
    remaining = list(A.unit)
    for t, (bi, e) in enumerate(targets):
        if t == len(targets) - 1:
            f = remaining
        else:
            a = A.mul(A.mul(remaining, dec.section.apply(e)), remaining)
            f = lift_idempotent(A, a)
        lifted.append(f)
        owner.append(bi)
        remaining = A.sub(remaining, f)
    if not A.is_zero(remaining):
        raise ArithmeticError("lifted idempotents do not sum to the unit")
    for i, x in enumerate(lifted):
        for j, y in enumerate(lifted):
            xy = A.mul(x, y)
            if (xy != x) if i == j else not A.is_zero(xy):
                raise ArithmeticError("lifted idempotents are not orthogonal")
        if dec.proj.apply(x) != targets[i][1]:
            raise ArithmeticError("lift does not reduce to the chosen idempotent")
    dec.lifted = lifted
    dec.lifted_block = owner
