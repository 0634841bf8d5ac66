"""Comodules over a finite-dimensional coalgebra.

A comodule of dimension m is stored through its action matrices: ``actions[k]``
is the m x m matrix of ``f_k -> (.)`` where ``f_k`` is the k-th dual basis
functional.  For a right comodule with delta(m_a) = sum rho[a][b][k] m_b (x) c_k
this means ``actions[k][b][a] = rho[a][b][k]``.  The same convention is used for
left comodules (delta(m_a) = sum rho[a][b][k] c_k (x) m_b); a left C-comodule is
then literally a right comodule over C^cop, which is how every algorithm below
treats it.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Sequence

from ._util import Report, cached
from .coalgebra import Coalgebra, combine
from .exactfield import Field
from .linalg import (CoordinateSolver, IncrementalSpan, Matrix, Subspace, cokernel_of_subspace, kron,
                     nullspace_vectors)


class Comodule:
    def __init__(self, C: Coalgebra, actions: Sequence[Matrix], side: str = "right", name: str | None = None):
        if side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', not {side!r}")
        if len(actions) != C.n:
            raise ValueError(f"expected {C.n} action matrices, got {len(actions)}")
        self.coalgebra = C
        self.field = C.field
        self.actions = list(actions)
        self.side = side
        self.dim = self.actions[0].nrows
        self.name = name or "M"

    def __repr__(self):
        return f"Comodule({self.name}, {self.side}, dim={self.dim})"

    @property
    def acting(self) -> Coalgebra:
        """Coalgebra over which this is a right comodule."""
        return self.coalgebra if self.side == "right" else self.coalgebra.opposite()

    def act(self, f: Sequence) -> Matrix:
        return combine(self.field, f, self.actions, self.dim, self.dim)

    def coaction(self) -> list:
        """rho[a][b][k] as nested lists."""
        m, n = self.dim, self.coalgebra.n
        return [[[self.actions[k].rows[b][a] for k in range(n)] for b in range(m)] for a in range(m)]

    def renamed(self, name: str) -> "Comodule":
        return Comodule(self.coalgebra, self.actions, self.side, name)

    @classmethod
    def from_coaction(cls, C: Coalgebra, dim: int, triples, side="right", name=None) -> "Comodule":
        """Build from (a, b, k, coeff) entries of rho."""
        F = C.field
        mats = [Matrix.zeros(F, dim, dim) for _ in range(C.n)]
        for a, b, k, c in triples:
            mats[k].rows[b][a] = F.add(mats[k].rows[b][a], F.coerce(c))
        return cls(C, mats, side, name)

    def to_json(self) -> dict:
        F = self.field
        triples = []
        for k, A in enumerate(self.actions):
            for b, row in enumerate(A.rows):
                for a, c in enumerate(row):
                    if c != F.zero:
                        triples.append([a, b, k, F.fmt(c)])
        triples.sort()
        return {"side": self.side, "dim": self.dim, "name": self.name, "coaction": triples}

    @classmethod
    def from_json(cls, obj: dict, C: Coalgebra) -> "Comodule":
        return cls.from_coaction(C, int(obj["dim"]), obj["coaction"], obj.get("side", "right"), obj.get("name"))

    def same_category(self, other: "Comodule") -> bool:
        return self.side == other.side and (self.coalgebra is other.coalgebra or self.coalgebra == other.coalgebra)


@dataclass
class ComoduleMap:
    source: Comodule
    target: Comodule
    matrix: Matrix

    def is_colinear(self) -> bool:
        X = self.matrix
        return all(B @ X == X @ A for A, B in zip(self.source.actions, self.target.actions))

    def compose(self, other: "ComoduleMap") -> "ComoduleMap":
        """self after other."""
        return ComoduleMap(other.source, self.target, self.matrix @ other.matrix)


def check_comodule(M: Comodule) -> Report:
    """Comodule axioms in action form: A_i A_j = sum_k Delta[k][i][j] A_k and
    sum_k eps_k A_k = I (for the acting coalgebra)."""
    C = M.acting
    F, n = C.field, C.n
    rep = Report()
    # sum_k Delta[k][i][j] A_k, grouped by (i, j)
    expected: dict = {}
    for k, d in enumerate(C.comul):
        for (i, j), c in d.items():
            expected.setdefault((i, j), []).append((k, c))
    witness = None
    zero = Matrix.zeros(F, M.dim, M.dim)
    for i in range(n):
        for j in range(n):
            lhs = M.actions[i] @ M.actions[j]
            terms = expected.get((i, j), [])
            rhs = combine(F, [c for _, c in terms], [M.actions[k] for k, _ in terms], M.dim, M.dim) if terms else zero
            if lhs != rhs:
                witness = f"action of f_{i} * f_{j} differs from f_{i} after f_{j}"
                break
        if witness:
            break
    rep.add("coassociativity", witness is None, witness)
    ok = M.act(C.counit).is_identity() if M.dim else True
    rep.add("counit", ok, None if ok else "counit does not act as the identity")
    return rep


# ---------------------------------------------------------------------------
# constructors


def regular_comodule(C: Coalgebra, side: str = "right") -> Comodule:
    if side == "right":
        return Comodule(C, C.left_hits(), "right", "C")
    return Comodule(C, C.right_hits(), "left", "C")


def one_dimensional(C: Coalgebra, g: Sequence, name: str | None = None, side: str = "right") -> Comodule:
    """k_g: 1 -> 1 (x) g for a grouplike g."""
    F = C.field
    return Comodule(C, [Matrix(F, [[g[k]]], 1, 1) for k in range(C.n)], side, name or "k_g")


def vertex_comodule(C: Coalgebra, label: str) -> Comodule:
    i = C.labels.index(label)
    F = C.field
    g = [F.one if k == i else F.zero for k in range(C.n)]
    return one_dimensional(C, g, f"k_{label}")


def zero_comodule(C: Coalgebra, side: str = "right") -> Comodule:
    return Comodule(C, [Matrix.zeros(C.field, 0, 0) for _ in range(C.n)], side, "0")


def direct_sum(M: Comodule, N: Comodule) -> Comodule:
    from .linalg import block_diag

    mats = [block_diag(M.field, [A, B]) for A, B in zip(M.actions, N.actions)]
    return Comodule(M.coalgebra, mats, M.side, f"{M.name}+{N.name}")


def twist_comodule(M: Comodule, phi: Matrix, check: bool = True) -> Comodule:
    """M^(phi): coaction composed with id (x) phi, phi a coalgebra endomorphism
    given by its matrix (phi(b_l) = sum_j phi[j][l] b_j)."""
    from .coalgebra import is_coalgebra_map

    C = M.coalgebra
    if check:
        ok, why = is_coalgebra_map(C, C, phi)
        if not ok:
            raise NotCoalgebraMap(why or "not a coalgebra map")
    F = C.field
    mats = [combine(F, phi.rows[j], M.actions, M.dim, M.dim) for j in range(C.n)]
    return Comodule(C, mats, M.side, f"{M.name}^(phi)")


class NotCoalgebraMap(ValueError):
    pass


def dual_comodule(M: Comodule) -> Comodule:
    """M* with the dual coaction; the side flips.  Applying twice returns M
    under the identification M** = M."""
    side = "left" if M.side == "right" else "right"
    return Comodule(M.coalgebra, [A.T for A in M.actions], side, f"{M.name}*")


# ---------------------------------------------------------------------------
# sub-objects and quotients


def subcomodule(M: Comodule, vectors: Sequence[Sequence], name: str | None = None) -> tuple[Comodule, Matrix]:
    """Restriction to an invariant subspace; returns (sub, inclusion)."""
    F = M.field
    W = Subspace(F, M.dim, vectors)
    basis = W.vectors()
    solver = CoordinateSolver(F, basis, M.dim)
    incl = Matrix.from_columns(F, basis, M.dim) if basis else Matrix.zeros(F, M.dim, 0)
    mats = []
    for A in M.actions:
        cols = [solver.coords(A.apply(v)) for v in basis]  # raises if not invariant
        mats.append(Matrix.from_columns(F, cols, len(basis)) if basis else Matrix.zeros(F, 0, 0))
    return Comodule(M.coalgebra, mats, M.side, name or f"sub({M.name})"), incl


def quotient_comodule(M: Comodule, vectors: Sequence[Sequence], name: str | None = None) -> tuple[Comodule, Matrix]:
    """Quotient by an invariant subspace; returns (quotient, projection)."""
    F = M.field
    cok = cokernel_of_subspace(Subspace(F, M.dim, vectors))
    P, S = cok.projection, cok.section
    mats = [P @ A @ S for A in M.actions]
    Qm = Comodule(M.coalgebra, mats, M.side, name or f"{M.name}/W")
    for A, B in zip(M.actions, mats):
        if P @ A != B @ P:
            raise ValueError("subspace is not invariant; quotient is not a comodule")
    return Qm, P


def _dual_decomposition(M: Comodule):
    return M.acting.dual().decomposition()


def radical_vectors(M: Comodule) -> list[list]:
    """J(C*) -> M."""
    J = _dual_decomposition(M).radical
    span = IncrementalSpan(M.field, M.dim)
    out = []
    for j in J:
        A = M.act(j)
        for v in A.columns():
            if span.add(v):
                out.append(v)
    return out


def socle_vectors(M: Comodule) -> list[list]:
    """{m : J(C*) -> m = 0}, the sum of all simple subcomodules."""
    J = _dual_decomposition(M).radical
    rows = []
    for j in J:
        rows.extend(M.act(j).rows)
    return nullspace_vectors(M.field, rows, M.dim) if rows else [
        [M.field.one if i == t else M.field.zero for i in range(M.dim)] for t in range(M.dim)]


def socle(M: Comodule) -> tuple[Comodule, Matrix]:
    return subcomodule(M, socle_vectors(M), f"soc({M.name})")


def top(M: Comodule) -> tuple[Comodule, Matrix]:
    return quotient_comodule(M, radical_vectors(M), f"top({M.name})")


# ---------------------------------------------------------------------------
# simples, idempotents, hulls and covers


def simple_comodules(C: Coalgebra, side: str = "right") -> list[Comodule]:
    """Pairwise non-isomorphic simple comodules, ordered by the first dual
    basis functional acting nontrivially on each."""

    def build():
        acting = C if side == "right" else C.opposite()
        dec = acting.dual().decomposition()
        return [Comodule(C, dec.simple_module(i), side, f"S{i}") for i in range(len(dec.blocks))]

    return cached(C, f"simples-{side}", build)


def primitive_idempotents(C: Coalgebra) -> list[list]:
    """Orthogonal primitive idempotents of C* summing to the counit."""
    return [list(e) for e in C.dual().decomposition().lifted]


def _idempotent_for(S: Comodule) -> list:
    dec = _dual_decomposition(S)
    for e in dec.lifted:
        if not S.act(e).is_zero():
            return e
    raise ValueError(f"{S.name} is not a simple comodule (no primitive idempotent acts on it)")


def _nonzero_map(S: Comodule, M: Comodule) -> Matrix | None:
    for X in hom_space(S, M):
        if not X.is_zero():
            return X
    return None


def injective_hull(S: Comodule) -> tuple[Comodule, ComoduleMap]:
    """E(S) = C <- e for a primitive idempotent e with e -> S != 0, together
    with an embedding of S."""
    C = S.acting
    e = _idempotent_for(S)
    R = C.right_hit(e)
    span = IncrementalSpan(C.field, C.n)
    vecs = [v for v in R.columns() if span.add(v)]
    reg = Comodule(S.coalgebra, C.left_hits(), S.side, "C")
    E, _ = subcomodule(reg, vecs, f"E({S.name})")
    X = _nonzero_map(S, E)
    if X is None or X.rank() != S.dim:
        raise ArithmeticError(f"no embedding of {S.name} into its injective hull")
    return E, ComoduleMap(S, E, X)


def projective_cover(S: Comodule, route: str = "ideal") -> tuple[Comodule, ComoduleMap]:
    """Projective cover with its surjection onto S.

    ``route="ideal"`` builds C* * e with left multiplication; ``route="dual"``
    builds E(S*)* and dualises the embedding.  The two are isomorphic.
    """
    if route == "dual":
        Sd = dual_comodule(S)
        E, emb = injective_hull(Sd)
        P = dual_comodule(E).renamed(f"P({S.name})")
        return P, ComoduleMap(P, S, emb.matrix.T)
    C = S.acting
    A = C.dual()
    F = C.field
    e = _idempotent_for(S)
    span = IncrementalSpan(F, C.n)
    basis = []
    for k in range(C.n):
        v = A.mul(A.basis_vector(k), e)
        if span.add(v):
            basis.append(v)
    solver = CoordinateSolver(F, basis, C.n)
    mats = []
    for k in range(C.n):
        fk = A.basis_vector(k)
        mats.append(Matrix.from_columns(F, [solver.coords(A.mul(fk, b)) for b in basis], len(basis)))
    P = Comodule(S.coalgebra, mats, S.side, f"P({S.name})")
    Ae = S.act(e)
    s0 = next(c for c in Ae.columns() if any(x != F.zero for x in c))
    cols = [S.act(b).apply(s0) for b in basis]
    return P, ComoduleMap(P, S, Matrix.from_columns(F, cols, S.dim))


# ---------------------------------------------------------------------------
# Hom spaces and coHom


def colinearity_rows(M: Comodule, N: Comodule, gens: Sequence[Sequence] | None = None) -> list[list]:
    """Linear equations on vec(X) (row-major, X of shape dim N x dim M) for
    N_f X = X M_f, f ranging over algebra generators of C*."""
    F = M.field
    m, d = M.dim, N.dim
    if gens is None:
        gens = M.acting.dual().generators()
    rows = []
    for f in gens:
        Mf, Nf = M.act(f).rows, N.act(f).rows
        for p in range(d):
            for q in range(m):
                row = [F.zero] * (d * m)
                for r in range(d):
                    c = Nf[p][r]
                    if c != F.zero:
                        row[r * m + q] = F.add(row[r * m + q], c)
                for r in range(m):
                    c = Mf[r][q]
                    if c != F.zero:
                        row[p * m + r] = F.sub(row[p * m + r], c)
                if any(x != F.zero for x in row):
                    rows.append(row)
    return rows


def hom_space(M: Comodule, N: Comodule) -> list[Matrix]:
    """Canonical basis of Hom^C(M, N) as dim N x dim M matrices."""
    if not M.same_category(N):
        raise ValueError("comodules live in different categories")
    F = M.field
    m, d = M.dim, N.dim
    if m == 0 or d == 0:
        return []
    rows = colinearity_rows(M, N)
    if not rows:
        vecs = [[F.one if i == t else F.zero for i in range(d * m)] for t in range(d * m)]
    else:
        vecs = nullspace_vectors(F, rows, d * m)
    return [Matrix(F, [v[p * m:(p + 1) * m] for p in range(d)], d, m) for v in vecs]


def hom_dim(M: Comodule, N: Comodule) -> int:
    return len(hom_space(M, N))


@dataclass
class CoHom:
    dim: int
    dim_via_hom: int
    dim_via_tensor: int
    universal: Matrix  # Y -> coHom(X, Y) (x) X, coHom index slow
    projection: Matrix  # X* (x) Y -> X* (x)_{C*} Y


def tensor_over_dual(X: Comodule, Y: Comodule):
    """X* (x)_{C*} Y as a cokernel of X* (x) Y (X* index slow)."""
    F = X.field
    gens = X.acting.dual().generators()
    m, d = X.dim, Y.dim
    Im, Id = Matrix.identity(F, m), Matrix.identity(F, d)
    vecs = []
    for f in gens:
        rel = kron(X.act(f).T, Id) - kron(Im, Y.act(f))
        vecs.extend(rel.columns())
    return cokernel_of_subspace(Subspace(F, m * d, vecs))


def cohom(X: Comodule, Y: Comodule) -> CoHom:
    """coHom(X, Y), computed both as Hom(Y, X)* and as X* (x)_{C*} Y."""
    F = X.field
    via_hom = hom_dim(Y, X)
    cok = tensor_over_dual(X, Y)
    m, d = X.dim, Y.dim
    # y -> sum_i [x^i (x) y] (x) x_i
    cols = []
    for b in range(d):
        col = [F.zero] * (cok.dim * m)
        for i in range(m):
            rep = [F.zero] * (m * d)
            rep[i * d + b] = F.one
            cls = cok.projection.apply(rep)
            for t, c in enumerate(cls):
                if c != F.zero:
                    col[t * m + i] = F.add(col[t * m + i], c)
        cols.append(col)
    U = Matrix.from_columns(F, cols, cok.dim * m) if d else Matrix.zeros(F, cok.dim * m, 0)
    return CoHom(via_hom if via_hom == cok.dim else -1, via_hom, cok.dim, U, cok.projection)


# ---------------------------------------------------------------------------
# isomorphism testing


@dataclass
class Certificate:
    matrix: Matrix

    kind = "certificate"


@dataclass
class NotIsomorphic:
    witness: str

    kind = "not-isomorphic"


@dataclass
class Undecided:
    reason: str

    kind = "undecided"


def _combination(F: Field, coeffs, mats: Sequence[Matrix], nrows: int, ncols: int) -> Matrix:
    return combine(F, coeffs, mats, nrows, ncols)


def find_invertible(F: Field, mats: Sequence[Matrix], n: int, seed: int = 0, trials: int = 64) -> Matrix | None:
    """Seeded random search then a sweep over combinations with at most two
    nonzero coefficients."""
    if not mats:
        return None
    for A in mats:
        if A.is_invertible():
            return A
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = [F.random(rng) for _ in mats]
        A = _combination(F, coeffs, mats, n, n)
        if A.is_invertible():
            return A
    scalars = [F.one, F.neg(F.one)] + [F.from_int(c) for c in (2, 3)]
    for i, j in itertools.combinations(range(len(mats)), 2):
        for s in scalars:
            A = mats[i] + mats[j].scale(s)
            if A.is_invertible():
                return A
    return None


def hom_profile(M: Comodule) -> tuple:
    simples = simple_comodules(M.coalgebra, M.side)
    return tuple((hom_dim(S, M), hom_dim(M, S)) for S in simples)


def iso_comodules(M: Comodule, N: Comodule, seed: int = 0):
    if M.dim != N.dim:
        return NotIsomorphic(f"dimensions differ ({M.dim} vs {N.dim})")
    F = M.field
    if M.dim == 0:
        return Certificate(Matrix.zeros(F, 0, 0))
    H = hom_space(M, N)
    if not H:
        return NotIsomorphic(f"Hom({M.name}, {N.name}) = 0")
    X = find_invertible(F, H, M.dim, seed)
    if X is not None:
        if not ComoduleMap(M, N, X).is_colinear():
            raise ArithmeticError("isomorphism candidate is not colinear")
        return Certificate(X)
    pm, pn = hom_profile(M), hom_profile(N)
    if pm != pn:
        return NotIsomorphic(f"Hom profiles against simples differ: {pm} vs {pn}")
    if len(H) == 1:
        # every comodule map is a multiple of a singular one
        return NotIsomorphic("the unique (up to scalar) comodule map is singular")
    return Undecided("no invertible element found in the Hom space")


def find_simple(S: Comodule, seed: int = 0) -> tuple[int, Matrix]:
    """Index of the simple isomorphic to S, with the certificate."""
    for i, T in enumerate(simple_comodules(S.coalgebra, S.side)):
        res = iso_comodules(S, T, seed)
        if isinstance(res, Certificate):
            return i, res.matrix
    raise ValueError(f"{S.name} is not isomorphic to any simple comodule")


def is_simple(M: Comodule) -> bool:
    if M.dim == 0:
        return False
    return any(isinstance(iso_comodules(M, T), Certificate) for T in simple_comodules(M.coalgebra, M.side))
