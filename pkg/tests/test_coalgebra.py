import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nkwb import builtins as B
from nkwb.coalgebra import Coalgebra, check_coalgebra, cop, grouplikes, is_coalgebra_map, quiver_coalgebra
from nkwb.exactfield import Q
from nkwb.linalg import Matrix
from strategies import F7, elements, quivers


@given(quivers())
@settings(max_examples=30, deadline=None)
def test_quiver_coalgebra_axioms(Qv):
    C = quiver_coalgebra(Qv)
    assert check_coalgebra(C).ok
    assert check_coalgebra(cop(C)).ok


@given(quivers(max_vertices=3, max_arrows=3), st.data())
@settings(max_examples=30, deadline=None)
def test_dual_algebra_is_associative_and_unital(Qv, data):
    C = quiver_coalgebra(Qv, F7)
    A = C.dual()
    f, g, h = (data.draw(st.lists(elements(F7), min_size=C.n, max_size=C.n)) for _ in range(3))
    assert A.mul(A.mul(f, g), h) == A.mul(f, A.mul(g, h))
    assert A.mul(A.unit, f) == f == A.mul(f, A.unit)
    # hits are actions of C*: f -> (g -> c) = (f * g) -> c
    assert C.left_hit(f) @ C.left_hit(g) == C.left_hit(A.mul(f, g))
    assert C.right_hit(f) @ C.right_hit(g) == C.right_hit(A.mul(g, f))
    assert A.left_mult(f).apply(g) == A.mul(f, g) == A.right_mult(g).apply(f)


@given(quivers())
@settings(max_examples=20, deadline=None)
def test_grouplikes_of_quiver_are_vertices(Qv):
    C = quiver_coalgebra(Qv)
    gs, complete = grouplikes(C)
    assert complete
    nv = len(Qv.vertices)
    expect = sorted(tuple(1 if i == v else 0 for i in range(C.n)) for v in range(nv))
    assert sorted(tuple(g) for g in gs) == expect


@given(quivers(max_vertices=3, max_arrows=3))
@settings(max_examples=20, deadline=None)
def test_json_roundtrip(Qv):
    C = quiver_coalgebra(Qv)
    D = Coalgebra.from_json(C.to_json())
    assert D == C and D.labels == C.labels


def test_generators_generate():
    for name in ("k2", "star:3", "mat:2", "sweedler"):
        A = B.builtin(name).dual()
        assert len(A.generators()) <= A.n


def test_broken_coassociativity_is_detected():
    C = B.k2()
    comul = [dict(d) for d in C.comul]
    comul[2] = {(0, 2): Q.one}  # drop the e (x) v term
    bad = Coalgebra(Q, C.labels, comul, C.counit, "bad")
    rep = check_coalgebra(bad)
    assert not rep.ok
    assert rep.failures()[0].witness


def test_broken_counit_is_detected():
    C = B.k2()
    bad = Coalgebra(Q, C.labels, C.comul, [Q.one, Q.one, Q.one], "bad")
    assert not check_coalgebra(bad).ok


def test_comatrix_structure():
    C = B.comatrix(2)
    assert C.labels == ["e11", "e12", "e21", "e22"]
    assert C.comul[1] == {(0, 1): 1, (1, 3): 1}
    assert C.counit == [1, 0, 0, 1]


def test_transpose_is_anti_automorphism_of_comatrix():
    C = B.comatrix(2)
    # e_ij -> e_ji is a coalgebra map C -> C^cop
    T = Matrix.from_values(Q, [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]])
    assert is_coalgebra_map(C, cop(C), T)[0]
    assert not is_coalgebra_map(C, C, T)[0]


@pytest.mark.parametrize("name", B.BUILTIN_COALGEBRAS + B.BUILTIN_HOPF)
def test_builtin_axioms(name):
    assert check_coalgebra(B.builtin(name)).ok
