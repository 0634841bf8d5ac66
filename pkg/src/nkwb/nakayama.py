"""Nakayama functors, their adjunction, balanced forms, the Nakayama
automorphism and the coalgebra classification.

N^r(M) = C (x)_{C*} M is the cokernel of the balancing relations inside C (x) M
(C index slow).  N^l(M) = Hom^C(C, M) with (f . xi)(c) = xi(c <- f); in finite
dimension every such module is rational, and the comodule structure is
reconstructed from the action and verified.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Sequence

from .coalgebra import Coalgebra, combine, is_coalgebra_map
from .comodule import (Certificate, Comodule, ComoduleMap, NotIsomorphic, Undecided, check_comodule,
                       find_invertible, find_simple, hom_space, injective_hull, iso_comodules,
                       projective_cover, regular_comodule, simple_comodules, socle, top, twist_comodule)
from .linalg import CoordinateSolver, Matrix, Subspace, cokernel_of_subspace, kron, nullspace_vectors


class NotRational(ArithmeticError):
    pass


class DegenerateForm(ValueError):
    pass


class DegenerateSearchInconclusive(ArithmeticError):
    pass


class NotQcF(ValueError):
    pass


# ---------------------------------------------------------------------------
# the functors


@dataclass
class RightNakayama:
    """N^r(M) with the data needed to compute on representatives."""
    module: Comodule
    source: Comodule
    projection: Matrix  # C (x) M -> N^r(M)
    section: Matrix


def nakayama_right(M: Comodule) -> RightNakayama:
    C = M.coalgebra
    if M.side != "right":
        raise ValueError("N^r is defined here for right comodules")
    F, n, m = C.field, C.n, M.dim
    In, Im = Matrix.identity(F, n), Matrix.identity(F, m)
    vecs = []
    for f in C.dual().generators():
        rel = kron(C.right_hit(f), Im) - kron(In, M.act(f))
        vecs.extend(rel.columns())
    cok = cokernel_of_subspace(Subspace(F, n * m, vecs))
    P, S = cok.projection, cok.section
    mats = []
    for L in C.left_hits():
        big = kron(L, Im)
        mats.append(P @ big @ S)
    N = Comodule(C, mats, "right", f"Nr({M.name})")
    return RightNakayama(N, M, P, S)


@dataclass
class LeftNakayama:
    module: Comodule
    source: Comodule
    basis: list  # Hom^C(C, M) basis, dim M x dim C matrices
    solver: CoordinateSolver


def nakayama_left(M: Comodule) -> LeftNakayama:
    C = M.coalgebra
    if M.side != "right":
        raise ValueError("N^l is defined here for right comodules")
    F, n, m = C.field, C.n, M.dim
    reg = regular_comodule(C)
    H = hom_space(reg, M)
    flat = [_vec(X) for X in H]
    solver = CoordinateSolver(F, flat, m * n)
    mats = []
    for R in C.right_hits():
        cols = [solver.coords(_vec(X @ R)) for X in H]
        mats.append(Matrix.from_columns(F, cols, len(H)) if H else Matrix.zeros(F, 0, 0))
    N = Comodule(C, mats, "right", f"Nl({M.name})")
    if N.dim and not check_comodule(N).ok:
        raise NotRational(f"Hom(C, {M.name}) does not carry a comodule structure")
    return LeftNakayama(N, M, H, solver)


def _vec(X: Matrix) -> list:
    return [x for row in X.rows for x in row]


def nakayama_right_map(A: RightNakayama, B: RightNakayama, phi: Matrix) -> Matrix:
    """N^r(phi) for phi: A.source -> B.source."""
    F = phi.field
    n = A.source.coalgebra.n
    return B.projection @ kron(Matrix.identity(F, n), phi) @ A.section


def nakayama_left_map(A: LeftNakayama, B: LeftNakayama, phi: Matrix) -> Matrix:
    F = phi.field
    cols = [B.solver.coords(_vec(phi @ X)) for X in A.basis]
    return Matrix.from_columns(F, cols, len(B.basis)) if A.basis else Matrix.zeros(F, len(B.basis), 0)


# ---------------------------------------------------------------------------
# adjunction N^r -| N^l


def adjunction_unit(M: Comodule, Nr: RightNakayama | None = None, NlNr: LeftNakayama | None = None) -> Matrix:
    """u_M(m)(c) = c (x) m, in coordinates of N^l N^r M."""
    Nr = Nr or nakayama_right(M)
    NlNr = NlNr or nakayama_left(Nr.module)
    F = M.field
    n, m = M.coalgebra.n, M.dim
    cols = []
    for a in range(m):
        # columns c_i -> P (e_i (x) e_a)
        X = Matrix.from_columns(F, [Nr.projection.col(i * m + a) for i in range(n)], Nr.module.dim) \
            if Nr.module.dim else Matrix.zeros(F, 0, n)
        cols.append(NlNr.solver.coords(_vec(X)) if NlNr.basis else [])
    return Matrix.from_columns(F, cols, len(NlNr.basis)) if m else Matrix.zeros(F, len(NlNr.basis), 0)


def adjunction_counit(M: Comodule, Nl: LeftNakayama | None = None, NrNl: RightNakayama | None = None) -> Matrix:
    """e_M(c (x) xi) = xi(c)."""
    Nl = Nl or nakayama_left(M)
    NrNl = NrNl or nakayama_right(Nl.module)
    F = M.field
    n, m, d = M.coalgebra.n, M.dim, len(Nl.basis)
    E = Matrix.zeros(F, m, n * d)
    for a in range(n):
        for j, X in enumerate(Nl.basis):
            col = X.col(a)
            for r in range(m):
                E.rows[r][a * d + j] = col[r]
    # E must vanish on the balancing relations
    In, Id = Matrix.identity(F, n), Matrix.identity(F, d)
    for f in M.coalgebra.dual().generators():
        rel = kron(M.coalgebra.right_hit(f), Id) - kron(In, Nl.module.act(f))
        if not (E @ rel).is_zero():
            raise ArithmeticError("evaluation does not factor through the balanced tensor product")
    return E @ NrNl.section


@dataclass
class TriangleReport:
    unit: Matrix
    counit: Matrix
    left_identity: bool  # e_{N^r M} o N^r(u_M) = id
    right_identity: bool  # N^l(e_M) o u_{N^l M} = id
    unit_colinear: bool
    counit_colinear: bool

    @property
    def ok(self) -> bool:
        return self.left_identity and self.right_identity and self.unit_colinear and self.counit_colinear


def adjunction_data(M: Comodule) -> TriangleReport:
    Nr = nakayama_right(M)
    NlNr = nakayama_left(Nr.module)
    u = adjunction_unit(M, Nr, NlNr)
    Nl = nakayama_left(M)
    NrNl = nakayama_right(Nl.module)
    e = adjunction_counit(M, Nl, NrNl)
    # first triangle: N^r M -> N^r N^l N^r M -> N^r M
    NrNlNr = nakayama_right(NlNr.module)
    Nr_u = nakayama_right_map(Nr, NrNlNr, u)
    e_Nr = adjunction_counit(Nr.module, NlNr, NrNlNr)
    first = (e_Nr @ Nr_u).is_identity() if Nr.module.dim else True
    # second triangle: N^l M -> N^l N^r N^l M -> N^l M
    NlNrNl = nakayama_left(NrNl.module)
    u_Nl = adjunction_unit(Nl.module, NrNl, NlNrNl)
    Nl_e = nakayama_left_map(NlNrNl, Nl, e)
    second = (Nl_e @ u_Nl).is_identity() if Nl.module.dim else True
    return TriangleReport(u, e, first, second,
                          ComoduleMap(M, NlNr.module, u).is_colinear(),
                          ComoduleMap(NrNl.module, M, e).is_colinear())


# ---------------------------------------------------------------------------
# balanced forms and the Nakayama automorphism


@dataclass
class BalancedForm:
    coalgebra: Coalgebra
    matrix: Matrix  # beta(b_i, b_j)
    nondegenerate: bool
    label: str = "beta"

    def value(self, x: Sequence, y: Sequence):
        F = self.matrix.field
        return F.sum(F.mul(a, b) for a, b in zip(x, self.matrix.apply(y)))

    def is_balanced(self) -> bool:
        C = self.coalgebra
        B = self.matrix
        return all(R.T @ B == B @ L for R, L in zip(C.right_hits(), C.left_hits()))


@dataclass
class NoneExists:
    witness: str

    kind = "none"


def balanced_form_space(C: Coalgebra) -> list[Matrix]:
    """Basis of {B : beta(x <- f, y) = beta(x, f -> y)}, i.e. R_f^T B = B L_f."""
    F, n = C.field, C.n
    rows = []
    for f in C.dual().generators():
        R, L = C.right_hit(f).rows, C.left_hit(f).rows
        for p in range(n):
            for q in range(n):
                # (R^T B)[p][q] - (B L)[p][q]
                row = [F.zero] * (n * n)
                for r in range(n):
                    c = R[r][p]
                    if c != F.zero:
                        row[r * n + q] = F.add(row[r * n + q], c)
                    c = L[r][q]
                    if c != F.zero:
                        row[p * n + r] = F.sub(row[p * n + r], c)
                if any(x != F.zero for x in row):
                    rows.append(row)
    vecs = nullspace_vectors(F, rows, n * n)
    return [Matrix(F, [v[p * n:(p + 1) * n] for p in range(n)], n, n) for v in vecs]


def _grid_certifies_degenerate(F, space: list[Matrix], n: int, budget: int) -> bool | None:
    """Is det(sum t_i B_i) identically zero?  Evaluates on the full grid
    {0..n}^d, which decides a polynomial of degree <= n in each variable; over
    a finite field of order <= n the grid is the whole space.  Returns None
    when the grid exceeds the budget."""
    d = len(space)
    if F.order is not None and F.order <= n:
        pts = list(F.elements())
    else:
        pts = [F.from_int(i) for i in range(n + 1)]
    if len(pts) ** d > budget:
        return None
    for coeffs in itertools.product(pts, repeat=d):
        if combine(F, coeffs, space, n, n).is_invertible():
            return False
    return True


def frobenius_pairing(C: Coalgebra, seed: int = 0, grid_budget: int = 20000):
    """A non-degenerate balanced form, or NoneExists with a certificate."""
    F, n = C.field, C.n
    space = balanced_form_space(C)
    B = find_invertible(F, space, n, seed)
    if B is not None:
        return BalancedForm(C, B, True)
    if not space:
        return NoneExists("the space of balanced forms is zero")
    # a non-degenerate balanced form is the same as an isomorphism of left
    # comodules C -> (C_right)*, so an invariant separating them certifies
    from .comodule import dual_comodule

    left_reg = regular_comodule(C, "left")
    dual_right = dual_comodule(regular_comodule(C, "right"))
    res = iso_comodules(left_reg, dual_right, seed)
    if isinstance(res, NotIsomorphic):
        return NoneExists(f"C is not isomorphic to the dual of C as a left comodule ({res.witness})")
    if isinstance(res, Certificate):
        # transport the isomorphism into a balanced form
        B = res.matrix.T
        return BalancedForm(C, B, True)
    grid = _grid_certifies_degenerate(F, space, n, grid_budget)
    if grid is True:
        return NoneExists("generic determinant vanishes on a full evaluation grid")
    if grid is False:
        raise ArithmeticError("grid found a non-degenerate form the search missed")
    raise DegenerateSearchInconclusive("could not certify degeneracy; try a larger field")


@dataclass
class NakayamaAutomorphism:
    matrix: Matrix
    form: BalancedForm


def nakayama_automorphism(beta: BalancedForm) -> NakayamaAutomorphism:
    """nu with beta(y, x) = beta(nu(x), y), i.e. nu = (B^T)^{-1} B."""
    B = beta.matrix
    if not B.is_invertible():
        raise DegenerateForm("balanced form is degenerate")
    return NakayamaAutomorphism(B.T.inverse() @ B, beta)


def check_nakayama_automorphism(nu: NakayamaAutomorphism) -> dict[str, bool]:
    C = nu.form.coalgebra
    F, n = C.field, C.n
    B, V = nu.form.matrix, nu.matrix
    out = {}
    out["defining identity"] = B.T == V.T @ B
    out["coalgebra automorphism"] = is_coalgebra_map(C, C, V)[0] and V.is_invertible()
    # beta(x_(1), y) x_(2) = nu(y_(1)) beta(x, y_(2))
    ok = True
    for x in range(n):
        for y in range(n):
            lhs = [F.zero] * n
            for (j, k), c in C.comul[x].items():
                w = F.mul(c, B.rows[j][y])
                if w != F.zero:
                    lhs[k] = F.add(lhs[k], w)
            pre = [F.zero] * n
            for (j, k), c in C.comul[y].items():
                w = F.mul(c, B.rows[x][k])
                if w != F.zero:
                    pre[j] = F.add(pre[j], w)
            if V.apply(pre) != lhs:
                ok = False
                break
        if not ok:
            break
    out["comultiplication identity"] = ok
    return out


# ---------------------------------------------------------------------------
# coinner automorphisms


@dataclass
class InnerWitness:
    alpha: list
    alpha_inverse: list

    kind = "inner"


@dataclass
class NotCoinner:
    witness: str

    kind = "not-coinner"


def coinner_test(C: Coalgebra, phi: Matrix, seed: int = 0):
    """Is phi(c) = alpha -> c <- alpha^{-1} for an invertible alpha in C*?"""
    F, n = C.field, C.n
    A = C.dual()
    L, R = C.left_hits(), C.right_hits()
    # sum_k a_k (R_k phi - L_k) = 0
    cols = [_vec(R[k] @ phi - L[k]) for k in range(n)]
    rows = [[cols[k][t] for k in range(n)] for t in range(n * n)]
    rows = [r for r in rows if any(x != F.zero for x in r)]
    W = nullspace_vectors(F, rows, n) if rows else [A.basis_vector(k) for k in range(n)]
    if not W:
        return NotCoinner("no alpha satisfies phi(c) <- alpha = alpha -> c")
    mats = [A.left_mult(w) for w in W]
    X = find_invertible(F, mats, n, seed)
    if X is not None:
        # recover alpha from its left multiplication operator
        alpha = X.apply(A.unit)
        inv = A.inverse(alpha)
        if C.left_hit(alpha) @ C.right_hit(inv) != phi:
            raise ArithmeticError("coinner witness failed verification")
        return InnerWitness(alpha, inv)
    dec = A.decomposition()
    Jspace = Subspace(F, n, dec.radical)
    if all(Jspace.contains(w) for w in W):
        return NotCoinner("every solution alpha lies in the radical of C*")
    chars = iter(dec.characters())
    for b_index, blk in enumerate(dec.blocks):
        if blk.size != 1:
            continue
        chi = next(chars)
        if all(_evaluate_character(chi, w, F) == F.zero for w in W):
            return NotCoinner(f"every solution alpha is killed by the character of block {b_index}")
    return Undecided("no invertible solution found")


def _evaluate_character(chi: Sequence, w: Sequence, F):
    # chi lists values on the dual basis f_k; characters are linear
    return F.sum(F.mul(a, b) for a, b in zip(chi, w))


# ---------------------------------------------------------------------------
# classification


@dataclass
class SimpleData:
    simple: Comodule
    hull: Comodule
    embedding: ComoduleMap
    cover: Comodule
    surjection: ComoduleMap


def simple_data(C: Coalgebra) -> list[SimpleData]:
    out = []
    for S in simple_comodules(C):
        E, emb = injective_hull(S)
        P, sur = projective_cover(S)
        out.append(SimpleData(S, E, emb, P, sur))
    return out


@dataclass
class Flag:
    value: bool | None  # None = inconclusive
    reason: str
    artifact: object = None

    def label(self) -> str:
        if self.value is None:
            return "inconclusive"
        return "yes" if self.value else "no"


@dataclass
class ClassificationReport:
    coalgebra: str
    semiperfect: Flag
    qcf: Flag
    cofrobenius: Flag
    symmetric: Flag
    permutation: list | None = None
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        out = {}
        for key in ("semiperfect", "qcf", "cofrobenius", "symmetric"):
            f = getattr(self, key)
            out[key] = {"value": f.label(), "reason": f.reason}
        if self.permutation is not None:
            out["nakayama_permutation"] = self.permutation
        if self.notes:
            out["notes"] = list(self.notes)
        return out


def _match(objs: list[Comodule], targets: list[Comodule], seed: int):
    """Bijection objs -> targets up to isomorphism; returns (perm, certs) or
    (None, reason) and flags undecided comparisons."""
    used = set()
    perm, certs = [], []
    undecided = False
    for i, X in enumerate(objs):
        hit = None
        for j, Y in enumerate(targets):
            if j in used:
                continue
            res = iso_comodules(X, Y, seed)
            if isinstance(res, Certificate):
                hit = (j, res.matrix)
                break
            if isinstance(res, Undecided):
                undecided = True
        if hit is None:
            return None, f"{X.name} is not isomorphic to any of the remaining targets", undecided
        used.add(hit[0])
        perm.append(hit[0])
        certs.append(hit[1])
    return perm, certs, undecided


def nakayama_permutation(C: Coalgebra, seed: int = 0, data: list[SimpleData] | None = None) -> dict:
    """pi with N^l(S_i) = S_pi(i), together with the four certified isomorphisms
    per simple: P(S) = E(N^l S), soc P(S) = N^l(S), E(S) = P(N^r S),
    top E(S) = N^r(S)."""
    data = data or simple_data(C)
    simples = [d.simple for d in data]
    perm, inv_perm, certs = [], [], []
    for i, d in enumerate(data):
        NlS = nakayama_left(d.simple).module
        NrS = nakayama_right(d.simple).module
        if NlS.dim == 0 or NrS.dim == 0:
            raise NotQcF(f"N^l or N^r kills {d.simple.name}")
        j, _ = find_simple(NlS, seed)
        k, _ = find_simple(NrS, seed)
        soc, _ = socle(d.cover)
        tp, _ = top(d.hull)
        c1 = iso_comodules(d.cover, data[j].hull, seed)
        c2 = iso_comodules(soc, NlS, seed)
        c3 = iso_comodules(d.hull, data[k].cover, seed)
        c4 = iso_comodules(tp, NrS, seed)
        perm.append(j)
        inv_perm.append(k)
        certs.append({"P(S)~E(Nl S)": c1, "soc P(S)~Nl(S)": c2, "E(S)~P(Nr S)": c3, "top E(S)~Nr(S)": c4})
    if sorted(perm) != list(range(len(simples))):
        raise NotQcF("S -> N^l(S) is not a bijection on simples")
    return {"permutation": perm, "inverse": inv_perm, "certificates": certs}


def classify(C: Coalgebra, seed: int = 0) -> ClassificationReport:
    data = simple_data(C)
    semi = Flag(True, "finite-dimensional; every simple has a projective cover",
                [d.cover.dim for d in data])
    hulls = [d.hull for d in data]
    covers = [d.cover for d in data]
    matched = _match(hulls, covers, seed)
    notes = []
    if matched[0] is not None:
        primary = True
        primary_reason = "injective hulls and projective covers agree as multisets"
    else:
        primary = None if matched[2] else False
        primary_reason = matched[1]
    # cross-check: the Nakayama permutation route
    try:
        perm = nakayama_permutation(C, seed, data)
        cross = all(isinstance(v, Certificate) for cs in perm["certificates"] for v in cs.values())
    except (NotQcF, ValueError) as exc:
        perm, cross = None, False
        notes.append(f"permutation route: {exc}")
    if primary is None:
        qcf = Flag(None, "isomorphism test undecided: " + primary_reason)
    elif primary != cross:
        qcf = Flag(None, f"routes disagree (multiset: {primary}, permutation: {cross})")
    else:
        reason = primary_reason if primary else _qcf_witness(data, seed) or primary_reason
        qcf = Flag(primary, reason, perm)
    if qcf.value is not True:
        cofrob = Flag(False if qcf.value is False else None, "not QcF" if qcf.value is False else qcf.reason)
        sym = Flag(cofrob.value, cofrob.reason)
        return ClassificationReport(C.name, semi, qcf, cofrob, sym, None, notes)
    dims_ok = all(nakayama_left(d.simple).module.dim == d.simple.dim for d in data)
    pairing = frobenius_pairing(C, seed)
    has_pairing = isinstance(pairing, BalancedForm)
    if dims_ok != has_pairing:
        cofrob = Flag(None, f"dimension test ({dims_ok}) and pairing search ({has_pairing}) disagree")
    else:
        cofrob = Flag(dims_ok, "dim N^l(S) = dim S for every simple S" if dims_ok
                      else "some simple S has dim N^l(S) != dim S", pairing)
    if cofrob.value is not True:
        sym = Flag(cofrob.value, "not co-Frobenius" if cofrob.value is False else cofrob.reason)
        return ClassificationReport(C.name, semi, qcf, cofrob, sym, perm["permutation"], notes)
    nu = nakayama_automorphism(pairing)
    inner = coinner_test(C, nu.matrix, seed)
    if isinstance(inner, InnerWitness):
        sym = Flag(True, "Nakayama automorphism is coinner", inner)
    elif isinstance(inner, NotCoinner):
        sym = Flag(False, "Nakayama automorphism is not coinner: " + inner.witness, inner)
    else:
        sym = Flag(None, "coinner test undecided")
    if all(d.hull.dim == d.simple.dim for d in data) and sym.value is not True:
        notes.append("cosemisimple coalgebra reported as not symmetric")
        sym = Flag(None, "cosemisimple but coinner test failed")
    return ClassificationReport(C.name, semi, qcf, cofrob, sym, perm["permutation"], notes)


def _qcf_witness(data: list[SimpleData], seed: int) -> str | None:
    hulls = [d.hull for d in data]
    for d in data:
        if not any(isinstance(iso_comodules(d.cover, E, seed), Certificate) for E in hulls):
            return f"{d.cover.name} (dim {d.cover.dim}) is not injective"
    return None


def twist_by_nakayama(M: Comodule, nu: NakayamaAutomorphism, inverse: bool = False) -> Comodule:
    phi = nu.matrix.inverse() if inverse else nu.matrix
    return twist_comodule(M, phi)
