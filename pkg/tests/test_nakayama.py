import pytest
from hypothesis import given, settings

from nkwb import builtins as B
from nkwb.coalgebra import quiver_coalgebra
from nkwb.comodule import (Certificate, NotIsomorphic, check_comodule, injective_hull, iso_comodules,
                           projective_cover, regular_comodule, simple_comodules, vertex_comodule)
from nkwb.nakayama import (BalancedForm, InnerWitness, NoneExists, NotCoinner, adjunction_data,
                           check_nakayama_automorphism, classify, coinner_test, frobenius_pairing,
                           nakayama_automorphism, nakayama_left, nakayama_permutation, nakayama_right,
                           twist_by_nakayama)
from strategies import quivers


@given(quivers(max_vertices=3, max_arrows=3))
@settings(max_examples=15, deadline=None)
def test_adjunction_on_random_quivers(Qv):
    C = quiver_coalgebra(Qv)
    for S in simple_comodules(C):
        for M in (S, injective_hull(S)[0], projective_cover(S)[0]):
            tri = adjunction_data(M)
            assert tri.ok, M.name


@given(quivers(max_vertices=3, max_arrows=3))
@settings(max_examples=15, deadline=None)
def test_functors_exchange_injectives_and_projectives(Qv):
    C = quiver_coalgebra(Qv)
    for S in simple_comodules(C):
        E, P = injective_hull(S)[0], projective_cover(S)[0]
        assert isinstance(iso_comodules(nakayama_left(E).module, P), Certificate)
        assert isinstance(iso_comodules(nakayama_right(P).module, E), Certificate)
        assert check_comodule(nakayama_left(S).module).ok
        assert check_comodule(nakayama_right(S).module).ok


def test_left_functor_on_k2():
    # u -> v: k_v is injective and k_u projective, so N^l(k_v) = P(k_v) and N^r(k_u) = E(k_u)
    C = B.k2()
    ku, kv = vertex_comodule(C, "u"), vertex_comodule(C, "v")
    assert nakayama_left(ku).module.dim == 0 and nakayama_right(kv).module.dim == 0
    assert isinstance(iso_comodules(nakayama_left(kv).module, projective_cover(kv)[0]), Certificate)
    assert isinstance(iso_comodules(nakayama_right(ku).module, injective_hull(ku)[0]), Certificate)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_left_functor_on_star_center(N):
    C = B.star(N)
    assert nakayama_left(vertex_comodule(C, "w")).module.dim == N
    assert nakayama_left(regular_comodule(C)).module.dim == C.n


def test_right_comodules_only():
    from nkwb.comodule import dual_comodule

    M = dual_comodule(regular_comodule(B.k2()))
    with pytest.raises(ValueError):
        nakayama_left(M)
    with pytest.raises(ValueError):
        nakayama_right(M)


@pytest.mark.parametrize("name", ["mat:2", "mat:3", "sweedler", "taft:3:13", "group:S3"])
def test_pairing_exists(name):
    C = B.builtin(name)
    beta = frobenius_pairing(C)
    assert isinstance(beta, BalancedForm)
    assert beta.matrix.is_invertible() and beta.is_balanced()
    nu = nakayama_automorphism(beta)
    assert all(check_nakayama_automorphism(nu).values())


@pytest.mark.parametrize("name", ["k2", "star:1", "star:3", "example0:2"])
def test_pairing_does_not_exist(name):
    res = frobenius_pairing(B.builtin(name))
    assert isinstance(res, NoneExists) and res.witness


@pytest.mark.parametrize("name", ["sweedler", "taft:3:13", "mat:2"])
def test_nakayama_functors_are_twists(name):
    # for a co-Frobenius coalgebra, N^l(M) = M^(nu^-1) and N^r(M) = M^(nu)
    C = B.builtin(name)
    nu = nakayama_automorphism(frobenius_pairing(C))
    for S in simple_comodules(C):
        for M in (S, injective_hull(S)[0]):
            assert isinstance(iso_comodules(nakayama_left(M).module, twist_by_nakayama(M, nu, inverse=True)),
                              Certificate)
            assert isinstance(iso_comodules(nakayama_right(M).module, twist_by_nakayama(M, nu)), Certificate)


def test_twist_side_matters_on_taft3():
    C = B.builtin("taft:3:13")
    nu = nakayama_automorphism(frobenius_pairing(C))
    S = simple_comodules(C)[0]
    assert isinstance(iso_comodules(nakayama_left(S).module, twist_by_nakayama(S, nu)), NotIsomorphic)


def test_coinner():
    C = B.comatrix(2)
    assert isinstance(coinner_test(C, nakayama_automorphism(frobenius_pairing(C)).matrix), InnerWitness)
    H = B.sweedler()
    res = coinner_test(H, nakayama_automorphism(frobenius_pairing(H)).matrix)
    assert isinstance(res, NotCoinner) and res.witness


def test_permutation_on_sweedler_swaps_simples():
    perm = nakayama_permutation(B.sweedler())
    assert perm["permutation"] == [1, 0] and perm["inverse"] == [1, 0]


def test_permutation_is_identity_for_symmetric():
    assert nakayama_permutation(B.builtin("group:S3"))["permutation"] == list(range(6))


@pytest.mark.parametrize("name,flags", [
    ("k2", ("yes", "no", "no", "no")),
    ("star:2", ("yes", "no", "no", "no")),
    ("example0:1", ("yes", "no", "no", "no")),
    ("mat:3", ("yes", "yes", "yes", "yes")),
    ("sweedler", ("yes", "yes", "yes", "no")),
])
def test_classification(name, flags):
    rep = classify(B.builtin(name))
    assert tuple(f.label() for f in (rep.semiperfect, rep.qcf, rep.cofrobenius, rep.symmetric)) == flags
    js = rep.to_json()
    assert js["qcf"]["value"] == flags[1]


@given(quivers(max_vertices=3, max_arrows=2))
@settings(max_examples=15, deadline=None)
def test_classification_chain_on_random_quivers(Qv):
    # paths of length <= 1: QcF exactly when every vertex has in- and out-degree
    # equal and at most one (disjoint oriented cycles); then all simples are
    # one-dimensional so QcF = co-Frobenius, and symmetric means every cycle is a loop
    rep = classify(quiver_coalgebra(Qv))
    labels = [f.label() for f in (rep.semiperfect, rep.qcf, rep.cofrobenius, rep.symmetric)]
    indeg = {v: 0 for v in Qv.vertices}
    outdeg = {v: 0 for v in Qv.vertices}
    for _, s, t in Qv.arrows:
        outdeg[s] += 1
        indeg[t] += 1
    qcf = all(indeg[v] == outdeg[v] <= 1 for v in Qv.vertices)
    sym = qcf and all(s == t for _, s, t in Qv.arrows)
    yn = {True: "yes", False: "no"}
    assert labels == ["yes", yn[qcf], yn[qcf], yn[sym]]
