"""Coalgebras given by structure constants.

Conventions (used everywhere in the package):

* ``comul[i]`` is a dict ``{(j, k): c}`` meaning Delta(b_i) = sum c b_j (x) b_k.
* The dual basis of C* is ``f_0, ..., f_{n-1}`` and convolution reads
  ``f_i * f_j = sum_k Delta[k][i][j] f_k``.
* Hit actions of C* on C:  ``f -> c = c_(1) f(c_(2))`` and
  ``c <- f = f(c_(1)) c_(2)``.  The first is the left C*-module structure of
  the right comodule C, the second the right C*-module structure of the
  left comodule C.  Matrices act on column vectors.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ._util import Report, memoized
from .exactfield import Field, Q, field_from_json
from .linalg import IncrementalSpan, Matrix, kron


class SearchIncomplete(Exception):
    pass


class Coalgebra:
    def __init__(self, field: Field, labels: Sequence[str], comul: Sequence[dict], counit: Sequence, name: str | None = None):
        self.field = field
        self.labels = list(labels)
        self.n = len(self.labels)
        if len(comul) != self.n or len(counit) != self.n:
            raise ValueError("comultiplication/counit length does not match the basis")
        z = field.zero
        self.comul = [{jk: c for jk, c in d.items() if c != z} for d in comul]
        self.counit = list(counit)
        self.name = name or "coalgebra"

    @property
    def dim(self) -> int:
        return self.n

    @classmethod
    def from_triples(cls, field: Field, labels, triples, counit, name=None) -> "Coalgebra":
        n = len(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        comul: list[dict] = [dict() for _ in range(n)]
        for t in triples:
            i, j, k = (index[x] if isinstance(x, str) else int(x) for x in t[:3])
            c = field.coerce(t[3])
            comul[i][(j, k)] = field.add(comul[i].get((j, k), field.zero), c)
        return cls(field, labels, comul, [field.coerce(c) for c in counit], name)

    def __eq__(self, other):
        if not isinstance(other, Coalgebra):
            return NotImplemented
        return (self.field == other.field and self.n == other.n and self.comul == other.comul
                and self.counit == other.counit)

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return f"Coalgebra({self.name}, dim={self.n}, {self.field!r})"

    def coef(self, i: int, j: int, k: int):
        return self.comul[i].get((j, k), self.field.zero)

    # derived data -------------------------------------------------------
    def delta_matrix(self) -> Matrix:
        """Delta as an (n^2 x n) matrix, tensor index j*n + k."""
        F, n = self.field, self.n
        M = Matrix.zeros(F, n * n, n)
        for i, d in enumerate(self.comul):
            for (j, k), c in d.items():
                M.rows[j * n + k][i] = c
        return M

    def counit_matrix(self) -> Matrix:
        return Matrix(self.field, [list(self.counit)], 1, self.n)

    @memoized
    def left_hits(self) -> list[Matrix]:
        """``L[k]`` is the matrix of ``c -> f_k -> c``."""
        F, n = self.field, self.n
        mats = [Matrix.zeros(F, n, n) for _ in range(n)]
        for a, d in enumerate(self.comul):
            for (b, k), c in d.items():
                mats[k].rows[b][a] = F.add(mats[k].rows[b][a], c)
        return mats

    @memoized
    def right_hits(self) -> list[Matrix]:
        """``R[k]`` is the matrix of ``c -> c <- f_k``."""
        F, n = self.field, self.n
        mats = [Matrix.zeros(F, n, n) for _ in range(n)]
        for a, d in enumerate(self.comul):
            for (k, b), c in d.items():
                mats[k].rows[b][a] = F.add(mats[k].rows[b][a], c)
        return mats

    def left_hit(self, f: Sequence) -> Matrix:
        return combine(self.field, f, self.left_hits(), self.n, self.n)

    def right_hit(self, f: Sequence) -> Matrix:
        return combine(self.field, f, self.right_hits(), self.n, self.n)

    @memoized
    def opposite(self) -> "Coalgebra":
        D = cop(self)
        D.__dict__["_memo_opposite"] = self
        return D

    @memoized
    def dual(self) -> "DualAlgebra":
        return DualAlgebra(self)

    def to_json(self) -> dict:
        F = self.field
        triples = []
        for i, d in enumerate(self.comul):
            for (j, k), c in sorted(d.items()):
                triples.append([i, j, k, F.fmt(c)])
        return {
            "field": F.to_json(),
            "name": self.name,
            "basis": list(self.labels),
            "comul": triples,
            "counit": [F.fmt(c) for c in self.counit],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Coalgebra":
        F = field_from_json(obj.get("field", {"kind": "Q"}))
        labels = obj["basis"]
        if isinstance(labels, int):
            labels = [f"b{i}" for i in range(labels)]
        return cls.from_triples(F, labels, obj["comul"], obj["counit"], obj.get("name"))


def combine(F: Field, coeffs: Sequence, mats: Sequence[Matrix], nrows: int, ncols: int) -> Matrix:
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


class DualAlgebra:
    """The convolution algebra C*; elements are raw coordinate lists in the
    dual basis."""

    def __init__(self, C: Coalgebra):
        self.coalgebra = C
        self.field = C.field
        self.n = C.n
        self.unit = list(C.counit)

    def basis_vector(self, k: int) -> list:
        F = self.field
        return [F.one if i == k else F.zero for i in range(self.n)]

    def mul(self, f: Sequence, g: Sequence) -> list:
        F, C = self.field, self.coalgebra
        z = F.zero
        out = [z] * self.n
        for k, d in enumerate(C.comul):
            acc = z
            for (i, j), c in d.items():
                a, b = f[i], g[j]
                if a != z and b != z:
                    acc = F.add(acc, F.mul(c, F.mul(a, b)))
            out[k] = acc
        return out

    convolve = mul

    @memoized
    def left_regular(self) -> list[Matrix]:
        """``Lreg[i]`` is left multiplication by ``f_i`` on C*."""
        F, n = self.field, self.n
        mats = [Matrix.zeros(F, n, n) for _ in range(n)]
        for k, d in enumerate(self.coalgebra.comul):
            for (i, j), c in d.items():
                mats[i].rows[k][j] = F.add(mats[i].rows[k][j], c)
        return mats

    @memoized
    def right_regular(self) -> list[Matrix]:
        """``Rreg[j]`` is right multiplication by ``f_j`` on C*."""
        F, n = self.field, self.n
        mats = [Matrix.zeros(F, n, n) for _ in range(n)]
        for k, d in enumerate(self.coalgebra.comul):
            for (i, j), c in d.items():
                mats[j].rows[k][i] = F.add(mats[j].rows[k][i], c)
        return mats

    def left_mult(self, f: Sequence) -> Matrix:
        return combine(self.field, f, self.left_regular(), self.n, self.n)

    def right_mult(self, f: Sequence) -> Matrix:
        return combine(self.field, f, self.right_regular(), self.n, self.n)

    def is_invertible(self, f: Sequence) -> bool:
        return self.left_mult(f).is_invertible()

    def inverse(self, f: Sequence) -> list:
        L = self.left_mult(f)
        # f * g = unit  <=>  L g = unit
        from .linalg import rref_solve

        sol = rref_solve(L, Matrix.column(self.field, self.unit)).solution
        return sol.col(0)

    def power(self, f: Sequence, k: int) -> list:
        out = list(self.unit)
        for _ in range(k):
            out = self.mul(out, f)
        return out

    @memoized
    def generators(self) -> list[list]:
        """A small set of dual-basis vectors generating C* as a unital algebra."""
        F, n = self.field, self.n
        gens: list[list] = []
        span = IncrementalSpan(F, n)
        span.add(self.unit)
        for k in range(n):
            fk = self.basis_vector(k)
            if span.contains(fk):
                continue
            gens.append(fk)
            span = IncrementalSpan(F, n)
            span.add(self.unit)
            queue = [list(self.unit)]
            while queue:
                x = queue.pop()
                for g in gens:
                    y = self.mul(x, g)
                    if span.add(y):
                        queue.append(y)
            if span.dim == n:
                break
        return gens

    def as_fd(self):
        from .wedderburn import FDAlgebra

        return FDAlgebra(self.field, self.n, self.mul, self.unit)

    @memoized
    def decomposition(self):
        """Wedderburn data of C* (radical, blocks, lifted idempotents)."""
        from .wedderburn import decompose

        return decompose(self.as_fd())

    def generator_indices(self) -> list[int]:
        F = self.field
        return [g.index(F.one) for g in self.generators()]


def dual_algebra(C: Coalgebra) -> DualAlgebra:
    return C.dual()


def convolve(C: Coalgebra, f: Sequence, g: Sequence) -> list:
    return C.dual().mul(f, g)


def hit_actions(C: Coalgebra) -> tuple[list[Matrix], list[Matrix]]:
    return C.left_hits(), C.right_hits()


def cop(C: Coalgebra) -> Coalgebra:
    comul = [{(k, j): c for (j, k), c in d.items()} for d in C.comul]
    name = C.name[:-4] if C.name.endswith("^cop") else C.name + "^cop"
    return Coalgebra(C.field, C.labels, comul, C.counit, name)


def check_coalgebra(C: Coalgebra) -> Report:
    F, n = C.field, C.n
    rep = Report()
    coassoc_witness = None
    for i in range(n):
        left: dict = {}
        right: dict = {}
        for (j, k), c in C.comul[i].items():
            for (a, b), d in C.comul[j].items():  # (Delta (x) id) Delta
                key = (a, b, k)
                left[key] = F.add(left.get(key, F.zero), F.mul(c, d))
            for (a, b), d in C.comul[k].items():  # (id (x) Delta) Delta
                key = (j, a, b)
                right[key] = F.add(right.get(key, F.zero), F.mul(c, d))
        left = {k: v for k, v in left.items() if v != F.zero}
        right = {k: v for k, v in right.items() if v != F.zero}
        if left != right:
            coassoc_witness = f"basis {C.labels[i]}: {_fmt_tensor(C, left)} != {_fmt_tensor(C, right)}"
            break
    rep.add("coassociativity", coassoc_witness is None, coassoc_witness)
    counit_witness = None
    for i in range(n):
        lv = [F.zero] * n
        rv = [F.zero] * n
        for (j, k), c in C.comul[i].items():
            lv[k] = F.add(lv[k], F.mul(C.counit[j], c))
            rv[j] = F.add(rv[j], F.mul(c, C.counit[k]))
        target = [F.one if t == i else F.zero for t in range(n)]
        if lv != target or rv != target:
            bad = lv if lv != target else rv
            side = "(eps (x) id)" if lv != target else "(id (x) eps)"
            counit_witness = f"basis {C.labels[i]}: {side} Delta = {_fmt_vec(C, bad)}"
            break
    rep.add("counit", counit_witness is None, counit_witness)
    return rep


def _fmt_vec(C: Coalgebra, v) -> str:
    F = C.field
    terms = [f"{F.fmt(c)}*{C.labels[i]}" for i, c in enumerate(v) if c != F.zero]
    return " + ".join(terms) or "0"


def _fmt_tensor(C: Coalgebra, d: dict) -> str:
    F = C.field
    terms = [f"{F.fmt(c)}*" + "(x)".join(C.labels[t] for t in key) for key, c in sorted(d.items())]
    return " + ".join(terms) or "0"


def is_coalgebra_map(C: Coalgebra, D: Coalgebra, phi: Matrix) -> tuple[bool, str | None]:
    """Check Delta_D phi = (phi (x) phi) Delta_C and eps_D phi = eps_C."""
    if phi.shape != (D.n, C.n):
        return False, f"shape {phi.shape} does not match {D.n}x{C.n}"
    lhs = D.delta_matrix() @ phi
    rhs = kron(phi, phi) @ C.delta_matrix()
    if lhs != rhs:
        for i in range(C.n):
            if lhs.col(i) != rhs.col(i):
                return False, f"comultiplication differs at basis {C.labels[i]}"
    if (D.counit_matrix() @ phi) != C.counit_matrix():
        return False, "counit not preserved"
    return True, None


# ---------------------------------------------------------------------------
# quivers


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str, str], ...]  # (label, source, target)

    def __post_init__(self):
        labels = list(self.vertices) + [a[0] for a in self.arrows]
        if len(set(labels)) != len(labels):
            raise ValueError("vertex and arrow labels must be unique")
        vs = set(self.vertices)
        for lab, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise ValueError(f"arrow {lab} has an unknown endpoint")

    @classmethod
    def from_json(cls, obj: dict) -> "Quiver":
        return cls(tuple(obj["vertices"]), tuple(tuple(a) for a in obj["arrows"]))

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "arrows": [list(a) for a in self.arrows]}


def quiver_coalgebra(Qv: Quiver, field: Field = Q, name: str | None = None) -> Coalgebra:
    """Span of vertices and arrows: vertices grouplike, arrows skew-primitive
    (Delta(e) = s(e) (x) e + e (x) t(e), eps(e) = 0)."""
    labels = list(Qv.vertices) + [a[0] for a in Qv.arrows]
    idx = {lab: i for i, lab in enumerate(labels)}
    one = field.one
    comul: list[dict] = []
    counit = []
    for v in Qv.vertices:
        i = idx[v]
        comul.append({(i, i): one})
        counit.append(one)
    for lab, s, t in Qv.arrows:
        e = idx[lab]
        comul.append({(idx[s], e): one, (e, idx[t]): one})
        counit.append(field.zero)
    return Coalgebra(field, labels, comul, counit, name or "quiver")


def grouplikes(C: Coalgebra) -> tuple[list[list], bool]:
    """Grouplike elements of C and whether the list is certified complete.

    Grouplikes are exactly the algebra maps C* -> k, i.e. the one-dimensional
    split blocks of C*/J.  When that decomposition is unavailable we fall
    back to scanning scalar multiples of basis vectors and report the result
    as incomplete.
    """
    from .wedderburn import SplitnessError, CharTooSmall

    F, n = C.field, C.n
    try:
        dec = C.dual().decomposition()
    except (SplitnessError, CharTooSmall):
        found = []
        for i in range(n):
            d = C.comul[i]
            if set(d) == {(i, i)} and C.counit[i] != F.zero:
                s = F.inv(C.counit[i])
                if d[(i, i)] == F.one and s == F.one:
                    found.append([F.one if t == i else F.zero for t in range(n)])
        return found, False
    out = []
    for chi in dec.characters():
        g = list(chi)
        ok = _is_grouplike(C, g)
        if not ok:
            raise AssertionError("character does not give a grouplike element")
        out.append(g)
    out.sort(key=lambda v: [0 if x == F.zero else 1 for x in v], reverse=True)
    return out, True


def _is_grouplike(C: Coalgebra, g: Sequence) -> bool:
    F, n = C.field, C.n
    dg = C.delta_matrix().apply(g)
    gg = [F.mul(g[j], g[k]) for j in range(n) for k in range(n)]
    eps = F.sum(F.mul(C.counit[i], g[i]) for i in range(n))
    return dg == gg and eps == F.one


def is_grouplike(C: Coalgebra, g: Sequence) -> bool:
    return _is_grouplike(C, g)
