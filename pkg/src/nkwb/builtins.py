"""Named example objects: quiver coalgebras, comatrix coalgebras, and small
Hopf algebras (Sweedler, Taft, group algebras and their duals)."""
from __future__ import annotations

import itertools
from pathlib import Path

from .coalgebra import Coalgebra, Quiver, quiver_coalgebra
from .exactfield import Field, PrimeField, Q, is_prime, root_of_unity


class UnknownBuiltin(KeyError):
    pass


def k2(field: Field = Q) -> Coalgebra:
    return quiver_coalgebra(Quiver(("u", "v"), (("e", "u", "v"),)), field, "k2")


def star_quiver(N: int) -> Quiver:
    """w -> w' plus N arrows v_i -> w."""
    if N < 1:
        raise ValueError("star:N needs N >= 1")
    vertices = ("w", "w'") + tuple(f"v{i}" for i in range(1, N + 1))
    arrows = (("e0", "w", "w'"),) + tuple((f"f{i}", f"v{i}", "w") for i in range(1, N + 1))
    return Quiver(vertices, arrows)


def star(N: int, field: Field = Q) -> Coalgebra:
    return quiver_coalgebra(star_quiver(N), field, f"star:{N}")


def example0(N: int, field: Field = Q) -> Coalgebra:
    """u -> v followed by N parallel arrows v -> w."""
    if N < 1:
        raise ValueError("example0:N needs N >= 1")
    arrows = (("e0", "u", "v"),) + tuple((f"p{i}", "v", "w") for i in range(1, N + 1))
    return quiver_coalgebra(Quiver(("u", "v", "w"), arrows), field, f"example0:{N}")


def comatrix(N: int, field: Field = Q) -> Coalgebra:
    """Delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij."""
    if N < 1:
        raise ValueError("mat:N needs N >= 1")
    idx = {(i, j): i * N + j for i in range(N) for j in range(N)}
    labels = [f"e{i + 1}{j + 1}" for i in range(N) for j in range(N)]
    comul = []
    counit = []
    for i in range(N):
        for j in range(N):
            comul.append({(idx[i, k], idx[k, j]): field.one for k in range(N)})
            counit.append(field.one if i == j else field.zero)
    return Coalgebra(field, labels, comul, counit, f"mat:{N}")


# ---------------------------------------------------------------------------
# Hopf algebras


def sweedler(field: Field = Q):
    """H4 with basis 1, g, x, gx: g^2 = 1, x^2 = 0, xg = -gx,
    Delta(x) = x (x) 1 + g (x) x, S(x) = -gx."""
    return taft(2, field=field, name="sweedler")


def taft(N: int, P: int | None = None, field: Field | None = None, name: str | None = None):
    """Taft algebra of dimension N^2 on normal forms g^i x^j (basis ordered
    by the power of x, then of g), with
    g^N = 1, x^N = 0, x g = zeta g x, Delta(g) = g (x) g,
    Delta(x) = x (x) 1 + g (x) x."""
    from .hopf import HopfAlgebra

    if N < 2:
        raise ValueError("taft:N:P needs N >= 2")
    if field is None:
        if P is None:
            raise ValueError("taft needs a prime or a field")
        if not is_prime(P):
            raise ValueError(f"{P} is not prime")
        if (P - 1) % N:
            raise ValueError(f"taft:{N}:{P} needs {N} | {P} - 1")
        field = PrimeField(P)
    F = field
    zeta = root_of_unity(F, N).value
    zp = [F.pow(zeta, e) for e in range(N)]

    def idx(i, j):
        return j * N + (i % N)

    labels = []
    for j in range(N):
        for i in range(N):
            gpart = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            xpart = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            labels.append((gpart + xpart) or "1")
    n = N * N
    # x^j g^k = zeta^{jk} g^k x^j, hence (g^a x^b)(g^c x^d) = zeta^{bc} g^{a+c} x^{b+d}
    mul = {}
    for a, b, c, d in itertools.product(range(N), repeat=4):
        if b + d < N:
            mul[(idx(a, b), idx(c, d))] = {idx(a + c, b + d): zp[(b * c) % N]}
    # Delta is multiplicative: Delta(g^a x^b) = Delta(g)^a Delta(x)^b in H (x) H
    dg = {(idx(1, 0), idx(1, 0)): F.one}
    dx = {(idx(0, 1), idx(0, 0)): F.one, (idx(1, 0), idx(0, 1)): F.one}
    comul = []
    counit = []
    for b in range(N):
        for a in range(N):
            d = {(idx(0, 0), idx(0, 0)): F.one}
            for _ in range(a):
                d = _mul_tensors(F, mul, d, dg)
            for _ in range(b):
                d = _mul_tensors(F, mul, d, dx)
            comul.append(d)
            counit.append(F.one if b == 0 else F.zero)
    # S(g^a x^b) = S(x)^b S(g)^a, S(g) = g^{-1}, S(x) = -g^{-1} x
    antipode_images = []
    for b in range(N):
        for a in range(N):
            img = {idx(0, 0): F.one}
            sx = {idx(N - 1, 1): F.neg(F.one)}
            for _ in range(b):
                img = _mul_elems(F, mul, img, sx)
            img = _mul_elems(F, mul, img, {idx(-a, 0): F.one})
            antipode_images.append(img)
    unit = [F.one if k == 0 else F.zero for k in range(n)]
    if name is None:
        name = f"taft:{N}:{F.characteristic}" if F.characteristic else f"taft:{N}"
    return HopfAlgebra.from_tables(F, labels, comul, counit, mul, unit, antipode_images, name)


def _mul_tensors(F, mul, u: dict, v: dict) -> dict:
    out: dict = {}
    for (i1, i2), a in u.items():
        for (j1, j2), b in v.items():
            ab = F.mul(a, b)
            for k1, c1 in mul.get((i1, j1), {}).items():
                for k2, c2 in mul.get((i2, j2), {}).items():
                    key = (k1, k2)
                    out[key] = F.add(out.get(key, F.zero), F.mul(ab, F.mul(c1, c2)))
    return {k: c for k, c in out.items() if c != F.zero}


def _mul_elems(F, mul, u: dict, v: dict) -> dict:
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            for k, c in mul.get((i, j), {}).items():
                out[k] = F.add(out.get(k, F.zero), F.mul(F.mul(a, b), c))
    return {k: c for k, c in out.items() if c != F.zero}


# ---------------------------------------------------------------------------
# groups


def symmetric_group_table(n: int) -> tuple[list[str], list[list[int]]]:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    labels = ["".join(str(x + 1) for x in p) for p in perms]
    # (p q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return labels, table


def cyclic_group_table(n: int) -> tuple[list[str], list[list[int]]]:
    return [f"c{i}" for i in range(n)], [[(i + j) % n for j in range(n)] for i in range(n)]


def read_cayley(path: str | Path) -> tuple[list[str], list[list[int]]]:
    """N on the first line, then N rows of N 0-based indices (row = left factor)."""
    tokens = Path(path).read_text().split()
    if not tokens:
        raise ValueError(f"{path}: empty Cayley file")
    n = int(tokens[0])
    vals = [int(t) for t in tokens[1:]]
    if len(vals) != n * n:
        raise ValueError(f"{path}: expected {n * n} entries, found {len(vals)}")
    table = [vals[i * n:(i + 1) * n] for i in range(n)]
    check_group_table(table)
    return [f"g{i}" for i in range(n)], table


def check_group_table(table: list[list[int]]) -> int:
    """Validate a Cayley table; returns the index of the identity."""
    n = len(table)
    if any(len(r) != n or any(not 0 <= x < n for x in r) for r in table):
        raise ValueError("Cayley table entries out of range")
    e = next((i for i in range(n) if all(table[i][j] == j and table[j][i] == j for j in range(n))), None)
    if e is None:
        raise ValueError("Cayley table has no identity")
    for a in range(n):
        if sorted(table[a]) != list(range(n)) or sorted(table[b][a] for b in range(n)) != list(range(n)):
            raise ValueError("Cayley table is not a Latin square")
    for a, b, c in itertools.product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ValueError(f"Cayley table is not associative at ({a}, {b}, {c})")
    return e


def _group_table(spec: str):
    named = {"S3": lambda: symmetric_group_table(3), "S4": lambda: symmetric_group_table(4)}
    if spec in named:
        return named[spec]()
    if spec.startswith("C") and spec[1:].isdigit():
        return cyclic_group_table(int(spec[1:]))
    return read_cayley(spec)


def group_algebra(labels, table, field: Field = Q, name: str = "kG"):
    from .hopf import HopfAlgebra

    F = field
    n = len(table)
    e = check_group_table(table)
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    mul = {(a, b): {table[a][b]: F.one} for a in range(n) for b in range(n)}
    comul = [{(a, a): F.one} for a in range(n)]
    counit = [F.one] * n
    unit = [F.one if k == e else F.zero for k in range(n)]
    antipode = [{inv[a]: F.one} for a in range(n)]
    return HopfAlgebra.from_tables(F, list(labels), comul, counit, mul, unit, antipode, name)


def dual_group_algebra(labels, table, field: Field = Q, name: str = "k^G"):
    """Functions on G with basis of point masses d_g."""
    from .hopf import HopfAlgebra

    F = field
    n = len(table)
    e = check_group_table(table)
    inv = [next(b for b in range(n) if table[a][b] == e) for a in range(n)]
    mul = {(a, a): {a: F.one} for a in range(n)}
    comul = []
    for c in range(n):
        comul.append({(a, b): F.one for a in range(n) for b in range(n) if table[a][b] == c})
    counit = [F.one if k == e else F.zero for k in range(n)]
    unit = [F.one] * n
    antipode = [{inv[a]: F.one} for a in range(n)]
    return HopfAlgebra.from_tables(F, [f"d_{x}" for x in labels], comul, counit, mul, unit, antipode, name)


# ---------------------------------------------------------------------------
# registry


def builtin(name: str, field: Field | None = None):
    """Resolve a builtin name such as "k2", "star:3", "taft:3:13",
    "group:S3" or "dualgroup:path/to/cayley.txt"."""
    head, _, rest = name.partition(":")
    F = field or Q
    try:
        if head == "k2" and not rest:
            return k2(F)
        if head == "star":
            return star(int(rest), F)
        if head == "example0":
            return example0(int(rest), F)
        if head == "mat":
            return comatrix(int(rest), F)
        if head == "sweedler" and not rest:
            return sweedler(F)
        if head == "taft":
            parts = rest.split(":")
            N, P = int(parts[0]), int(parts[1])
            return taft(N, P, field, name=name)
        if head in ("group", "dualgroup") and rest:
            labels, table = _group_table(rest)
            make = group_algebra if head == "group" else dual_group_algebra
            return make(labels, table, F, name)
    except (IndexError, ValueError) as exc:
        raise ValueError(f"bad parameters for builtin {name!r}: {exc}") from exc
    raise UnknownBuiltin(name)


BUILTIN_COALGEBRAS = ["k2", "star:1", "star:2", "star:3", "mat:2", "mat:3"]
BUILTIN_HOPF = ["sweedler", "taft:2:7", "taft:3:13", "taft:4:13", "group:S3", "dualgroup:S3"]
