"""Independent brute-force computations used to cross-check the library.

Nothing here calls the library's linear algebra: every system is assembled
from raw structure constants and solved by a plain Gauss-Jordan sweep.
"""
from __future__ import annotations


def nullspace(F, rows, ncols):
    M = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        k = next((i for i in range(r, len(M)) if M[i][c] != F.zero), None)
        if k is None:
            continue
        M[r], M[k] = M[k], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(inv, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != F.zero:
                a = M[i][c]
                M[i] = [F.sub(x, F.mul(a, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [F.zero] * ncols
        v[f] = F.one
        for i, p in enumerate(pivots):
            v[p] = F.neg(M[i][f])
        basis.append(v)
    return basis


def left_cointegrals(H):
    """All lambda with h1 lambda(h2) = lambda(h) 1."""
    F, n = H.field, H.n
    rows = []
    for a in range(n):
        for i in range(n):
            row = [F.zero] * n
            for (j, k), c in H.comul[a].items():
                if j == i:
                    row[k] = F.add(row[k], c)
            row[a] = F.sub(row[a], H.unit[i])
            rows.append(row)
    return nullspace(F, rows, n)


def grouplike_from_cointegral(H, lam):
    """g with lambda(h1) h2 = lambda(h) g."""
    F, n = H.field, H.n
    a = next(i for i in range(n) if lam[i] != F.zero)
    g = [F.zero] * n
    for (j, k), c in H.comul[a].items():
        g[k] = F.add(g[k], F.mul(c, lam[j]))
    return [F.div(x, lam[a]) for x in g]


def product(H, u, v):
    F = H.field
    out = [F.zero] * H.n
    for i, a in enumerate(u):
        if a == F.zero:
            continue
        for j, b in enumerate(v):
            if b == F.zero:
                continue
            for k, c in H.mul.get((i, j), {}).items():
                out[k] = F.add(out[k], F.mul(F.mul(a, b), c))
    return out


def left_integrals(H):
    """All Lambda in H with h Lambda = eps(h) Lambda."""
    F, n = H.field, H.n
    rows = []
    for h in range(n):
        for k in range(n):
            row = [F.zero] * n
            for j in range(n):
                row[j] = H.mul.get((h, j), {}).get(k, F.zero)
            row[k] = F.sub(row[k], H.counit[h])
            rows.append(row)
    return nullspace(F, rows, n)


def integral_character(H, Lam):
    """alpha with Lambda h = alpha(h) Lambda."""
    F, n = H.field, H.n
    p = next(i for i in range(n) if Lam[i] != F.zero)
    out = []
    for h in range(n):
        e = [F.one if i == h else F.zero for i in range(n)]
        out.append(F.div(product(H, Lam, e)[p], Lam[p]))
    return out


def antipode_apply(H, v):
    F = H.field
    out = [F.zero] * H.n
    for j, c in enumerate(v):
        if c != F.zero:
            for i in range(H.n):
                out[i] = F.add(out[i], F.mul(H.antipode.rows[i][j], c))
    return out


def antipode_power_columns(H, k):
    cols = []
    for j in range(H.n):
        v = [H.field.one if i == j else H.field.zero for i in range(H.n)]
        for _ in range(k):
            v = antipode_apply(H, v)
        cols.append(v)
    return cols


def radford_columns(H, g, alpha):
    """Columns of h -> g^-1 (alpha^-1(h1) h2 alpha(h3)) g, with
    alpha^-1 = alpha o S and g^-1 = S(g)."""
    F, n = H.field, H.n
    ginv = antipode_apply(H, g)
    alpha_inv = [sum_f(F, (F.mul(alpha[i], H.antipode.rows[i][j]) for i in range(n))) for j in range(n)]
    cols = []
    for h in range(n):
        mid = [F.zero] * n
        for (a, b), c in H.comul[h].items():
            for (b2, b3), c2 in H.comul[b].items():
                w = F.mul(F.mul(c, c2), F.mul(alpha_inv[a], alpha[b3]))
                if w != F.zero:
                    mid[b2] = F.add(mid[b2], w)
        cols.append(product(H, product(H, ginv, mid), g))
    return cols


def sum_f(F, values):
    acc = F.zero
    for v in values:
        acc = F.add(acc, v)
    return acc


def colinear_maps_from_regular(M):
    """dim of right C-colinear maps C -> M, by brute force on the coaction."""
    C = M.coalgebra if M.side == "right" else M.acting
    F, n, m = C.field, C.n, M.dim
    rho = M.coaction()
    # unknown f[b][a] at position b*n + a
    rows = []
    for a in range(n):
        for b2 in range(m):
            for k in range(n):
                row = [F.zero] * (m * n)
                for b in range(m):
                    c = rho[b][b2][k]
                    if c != F.zero:
                        row[b * n + a] = F.add(row[b * n + a], c)
                for (j, k2), c in C.comul[a].items():
                    if k2 == k:
                        row[b2 * n + j] = F.sub(row[b2 * n + j], c)
                rows.append(row)
    return len(nullspace(F, rows, m * n))


def hom_dim(M, N):
    """dim of X with B_k X = X A_k for every basis functional k."""
    F = M.field
    m, n = M.dim, N.dim
    rows = []
    for A, Bk in zip(M.actions, N.actions):
        for i in range(n):
            for j in range(m):
                row = [F.zero] * (n * m)
                for t in range(n):
                    c = Bk.rows[i][t]
                    if c != F.zero:
                        row[t * m + j] = F.add(row[t * m + j], c)
                for t in range(m):
                    c = A.rows[t][j]
                    if c != F.zero:
                        row[i * m + t] = F.sub(row[i * m + t], c)
                rows.append(row)
    return len(nullspace(F, rows, n * m))
