import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from nkwb import builtins as B
from nkwb.coalgebra import quiver_coalgebra
from nkwb.comodule import (Certificate, Comodule, NotIsomorphic, check_comodule, direct_sum, dual_comodule, hom_dim,
                           injective_hull, iso_comodules, one_dimensional, projective_cover, regular_comodule,
                           simple_comodules, socle, top, twist_comodule, vertex_comodule)
from nkwb.exactfield import Q
from nkwb.linalg import Matrix
from strategies import quivers


def _random_invertible(F, n, rng):
    while True:
        M = Matrix(F, [[F.from_int(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        if M.is_invertible():
            return M


def _conjugate(M, P):
    Pi = P.inverse()
    return Comodule(M.coalgebra, [P @ A @ Pi for A in M.actions], M.side, M.name + "'")


@given(quivers(max_vertices=3, max_arrows=3))
@settings(max_examples=20, deadline=None)
def test_hulls_and_covers_of_random_quivers(Qv):
    C = quiver_coalgebra(Qv)
    simples = simple_comodules(C)
    # the quiver coalgebra is pointed: one simple per vertex
    assert len(simples) == len(Qv.vertices) and all(S.dim == 1 for S in simples)
    hulls = [injective_hull(S)[0] for S in simples]
    covers = [projective_cover(S)[0] for S in simples]
    for M in simples + hulls + covers + [regular_comodule(C)]:
        assert check_comodule(M).ok
    # C = sum of the hulls, and dually C* = sum of the covers
    assert sum(E.dim for E in hulls) == C.n
    assert sum(P.dim for P in covers) == C.n
    for S, E, P in zip(simples, hulls, covers):
        assert isinstance(iso_comodules(socle(E)[0], S), Certificate)
        assert isinstance(iso_comodules(top(P)[0], S), Certificate)


@pytest.mark.parametrize("name", ["k2", "star:2", "mat:2", "sweedler", "group:S3", "dualgroup:S3"])
def test_hom_dim_matches_brute_force(name):
    C = B.builtin(name)
    simples = simple_comodules(C)
    fam = simples + [injective_hull(S)[0] for S in simples] + [regular_comodule(C)]
    for M in fam[:6]:
        for N in fam[:6]:
            assert hom_dim(M, N) == O.hom_dim(M, N)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=15, deadline=None)
def test_iso_certificate_under_change_of_basis(seed):
    rng = random.Random(seed)
    C = B.star(2)
    S = simple_comodules(C)[rng.randrange(4)]
    M = injective_hull(S)[0] if rng.random() < 0.5 else projective_cover(S)[0]
    N = _conjugate(M, _random_invertible(Q, M.dim, rng))
    res = iso_comodules(M, N, seed)
    assert isinstance(res, Certificate)
    X = res.matrix
    assert X.is_invertible()
    assert all(Bk @ X == X @ A for A, Bk in zip(M.actions, N.actions))


def test_non_isomorphic_has_witness():
    C = B.k2()
    u, v = simple_comodules(C)
    res = iso_comodules(injective_hull(u)[0], projective_cover(u)[0])
    assert isinstance(res, (NotIsomorphic, Certificate))
    res = iso_comodules(u, v)
    assert isinstance(res, NotIsomorphic) and res.witness


def test_vertex_comodules_are_the_simples_of_k2():
    C = B.k2()
    ku, kv = vertex_comodule(C, "u"), vertex_comodule(C, "v")
    names = [isinstance(iso_comodules(ku, S), Certificate) for S in simple_comodules(C)]
    assert names.count(True) == 1
    assert hom_dim(ku, kv) == 0


def test_k2_hulls_and_covers():
    # u -e-> v: E(k_u) = span(u, e), P(k_u) = k_u, E(k_v) = k_v, P(k_v) = span(v, e)
    C = B.k2()
    ku, kv = vertex_comodule(C, "u"), vertex_comodule(C, "v")
    assert injective_hull(ku)[0].dim == 2 and projective_cover(ku)[0].dim == 1
    assert injective_hull(kv)[0].dim == 1 and projective_cover(kv)[0].dim == 2


def test_direct_sum_and_dual():
    C = B.star(1)
    S = simple_comodules(C)
    M = direct_sum(S[0], injective_hull(S[1])[0])
    assert check_comodule(M).ok
    assert M.dim == S[0].dim + injective_hull(S[1])[0].dim
    D = dual_comodule(M)
    assert D.side == "left" and check_comodule(D).ok
    assert dual_comodule(D).actions == M.actions


def test_one_dimensional_from_grouplike():
    H = B.sweedler()
    k_g = one_dimensional(H, [0, 1, 0, 0], "k_g")
    assert check_comodule(k_g).ok
    with pytest.raises(Exception):
        bad = one_dimensional(H, [0, 0, 1, 0], "k_x")
        assert check_comodule(bad).ok


def test_twist_by_identity():
    C = B.comatrix(2)
    M = regular_comodule(C)
    T = twist_comodule(M, Matrix.identity(Q, 4))
    assert T.actions == M.actions


def test_bad_coaction_is_detected():
    C = B.k2()
    M = regular_comodule(C)
    mats = [A.copy() for A in M.actions]
    mats[0] = Matrix.identity(Q, 3)  # f_u f_v = 0 must act as zero
    assert not check_comodule(Comodule(C, mats)).ok


def test_json_roundtrip():
    C = B.star(3)
    M = injective_hull(simple_comodules(C)[0])[0]
    N = Comodule.from_json(M.to_json(), C)
    assert N.actions == M.actions and N.side == M.side


@pytest.mark.parametrize("name", ["k2", "star:2", "sweedler", "taft:3:7", "dualgroup:S3"])
def test_projective_cover_routes_agree(name):
    C = B.builtin(name)
    for S in simple_comodules(C):
        P1, s1 = projective_cover(S)
        P2, s2 = projective_cover(S, route="dual")
        assert P1.side == P2.side == "right"
        assert isinstance(iso_comodules(P1, P2), Certificate)
        for P, s in ((P1, s1), (P2, s2)):
            assert s.is_colinear() and s.matrix.rank() == S.dim
