from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles as O
from nkwb import builtins as B
from nkwb import hopf as hp
from nkwb.comodule import check_comodule, one_dimensional, simple_comodules
from nkwb.exactfield import PrimeField, Q
from nkwb.linalg import Matrix

SMALL_HOPF = ["sweedler", "taft:2:5", "taft:3:7", "taft:5:11", "group:C4", "dualgroup:C4", "group:S3",
              "dualgroup:S3"]


def _h(name, field=None):
    if name.endswith("C4") and field is None:
        field = PrimeField(5)  # split: 4 | 5 - 1
    return B.builtin(name, field)


# ---------------------------------------------------------------------------
# Sweedler's algebra, worked values (basis 1, g, x, gx)


def test_h4_tables():
    H = B.sweedler()
    one, g, x, gx = ([Fraction(int(i == k)) for i in range(4)] for k in range(4))
    assert H.product(g, g) == one
    assert H.product(x, x) == [0, 0, 0, 0]
    assert H.product(x, g) == [0, 0, 0, -1]  # xg = -gx
    assert H.product(g, x) == gx
    assert H.comul[2] == {(2, 0): 1, (1, 2): 1}  # x (x) 1 + g (x) x
    assert H.antipode.col(2) == [0, 0, 0, -1]  # S(x) = -gx
    assert H.antipode.col(3) == [0, 0, 1, 0]  # S(gx) = x


def test_h4_modular_data():
    H = B.sweedler()
    md = hp.modular_data(H)
    assert hp.cointegral(H).values == [0, 0, 0, 1]
    assert md.g == [0, 1, 0, 0]
    assert md.alpha == [1, -1, 0, 0] == md.alpha_inverse
    assert md.chi.rows == [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]]
    assert H.S_power(2).rows == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
    assert H.S_power(4).is_identity()
    assert not md.unimodular


def test_h4_unique_rform_family_member():
    H = B.sweedler()
    r = hp.h4_rform(H, 1)
    assert r.matrix.rows == [[1, 1, 0, 0], [1, -1, 0, 0], [0, 0, 1, 1], [0, 0, -1, 1]]


# ---------------------------------------------------------------------------
# structural properties on a wider set of Hopf algebras


@pytest.mark.parametrize("name", SMALL_HOPF)
def test_axioms_and_cointegral_oracle(name):
    H = _h(name)
    assert hp.check_hopf(H).ok
    brute = O.left_cointegrals(H)
    assert len(brute) == 1
    F = H.field
    lam = hp.cointegral(H).values
    p = next(i for i, x in enumerate(brute[0]) if x != F.zero)
    assert lam == [F.div(x, brute[0][p]) for x in brute[0]]
    md = hp.modular_data(H)
    assert md.g == O.grouplike_from_cointegral(H, lam)
    assert md.alpha == O.integral_character(H, O.left_integrals(H)[0])


@pytest.mark.parametrize("name", SMALL_HOPF)
def test_radford_s4_against_oracle(name):
    H = _h(name)
    md = hp.modular_data(H)
    assert hp.radford_s4_check(H, md).ok
    assert O.antipode_power_columns(H, 4) == O.radford_columns(H, md.g, md.alpha)


@pytest.mark.parametrize("name", SMALL_HOPF)
def test_nakayama_formula(name):
    assert hp.nakayama_formula_check(_h(name)).ok


@pytest.mark.parametrize("name,order", [("sweedler", 2), ("taft:3:7", 3), ("taft:5:11", 5), ("group:S3", 1)])
def test_order_of_s2(name, order):
    H = _h(name)
    assert hp.matrix_order(H.S_power(2)) == order


def test_unimodular_cases():
    for name in ("group:S3", "dualgroup:S3", "group:C4", "dualgroup:C4"):
        assert hp.modular_data(_h(name)).unimodular, name
    for name in ("sweedler", "taft:3:7"):
        assert not hp.modular_data(_h(name)).unimodular, name


def test_negative_s_powers():
    H = B.builtin("taft:3:7")
    assert (H.S_power(-1) @ H.S_power(1)).is_identity()
    assert H.S_power(-2) == H.S_power(2).inverse()
    assert H.S_inverse() == H.S_power(-1)


def test_broken_antipode_is_detected():
    H = B.sweedler()
    obj = H.to_json()
    obj["antipode"][3][2] = "1"  # S(x) = gx instead of -gx
    bad = hp.HopfAlgebra.from_json(obj)
    rep = hp.check_hopf(bad)
    assert not rep["antipode"].passed


def test_malformed_antipode():
    obj = B.sweedler().to_json()
    obj["antipode"] = obj["antipode"][:3]
    with pytest.raises(ValueError):
        hp.HopfAlgebra.from_json(obj)


def test_json_roundtrip():
    H = B.builtin("taft:3:7")
    K = hp.HopfAlgebra.from_json(H.to_json())
    assert K.mul == H.mul and K.comul == H.comul and K.antipode == H.antipode and K.unit == H.unit


# ---------------------------------------------------------------------------
# tensor products and duals


@pytest.mark.parametrize("name", ["sweedler", "taft:3:7", "dualgroup:S3"])
def test_monoidal_structure(name):
    H = _h(name)
    fam = hp.comodule_family(H, include_regular=False)[:4]
    one = hp.comodule_unit(H)
    for X in fam:
        assert hp.comodule_tensor(one, X).actions == X.actions == hp.comodule_tensor(X, one).actions
        assert check_comodule(hp.left_dual(X)).ok and check_comodule(hp.right_dual(X)).ok
        assert hp.left_dual(hp.right_dual(X)).actions == X.actions
        assert hp.double_dual(X)[0].actions == hp.antipode_twist(X, 2).actions
        for Y in fam:
            XY = hp.comodule_tensor(X, Y)
            assert check_comodule(XY).ok
            for Z in fam[:2]:
                assert hp.comodule_tensor(XY, Z).actions == hp.comodule_tensor(X, hp.comodule_tensor(Y, Z)).actions
            assert hp.check_rigidity(X, Y).ok


def test_tensor_of_grouplikes():
    H = B.builtin("taft:3:7")
    g = [1 if lab == "g" else 0 for lab in H.labels]
    g2 = [1 if lab == "g^2" else 0 for lab in H.labels]
    kg = one_dimensional(H, g)
    assert hp.comodule_tensor(kg, kg).actions == one_dimensional(H, g2).actions


# ---------------------------------------------------------------------------
# Radford isomorphism


@pytest.mark.parametrize("name", ["sweedler", "taft:3:7", "group:S3"])
def test_radford_isomorphism_routes(name):
    H = _h(name)
    for X in hp.comodule_family(H, include_regular=True):
        iso = hp.radford_isomorphism(H, X)
        assert iso.report.ok, (X.name, iso.report.failures())
        assert iso.explicit == iso.via_psi == iso.via_kappa


def test_naka_vs_double_dual_and_hull_cover():
    H = B.builtin("taft:3:7")
    for X in hp.comodule_family(H, include_regular=False):
        assert all(type(v).__name__ == "Certificate" for v in hp.naka_vs_dual_certificates(H, X).values())
    for S in simple_comodules(H):
        assert all(type(v).__name__ == "Certificate" for v in hp.hull_cover_certificates(H, S).values())


def test_psi_maps_on_pairs():
    H = B.sweedler()
    fam = [X for X in hp.comodule_family(H, include_regular=False) if X.dim <= 2]
    for X in fam:
        for Y in fam:
            assert hp.psi_maps(H, X, Y).report.ok
            assert hp.radford_multiplicativity(H, X, Y)


# ---------------------------------------------------------------------------
# Yetter-Drinfeld objects and Hopf modules


@pytest.mark.parametrize("name", SMALL_HOPF)
def test_cointegral_yd(name):
    H = _h(name)
    cy = hp.cointegral_yd(H)
    assert cy.report.ok
    assert hp.yd_check(cy.yd, 1, -1).ok
    assert hp.yd_s4_prediction(H, cy) == H.S_power(4)


def test_yd_parameters_matter():
    H = B.sweedler()
    V = hp.cointegral_yd(H).yd
    assert not hp.yd_check(V, 1, 0).ok
    assert not hp.yd_check(V, 0, -1).ok
    H3 = B.builtin("taft:3:7")
    assert not hp.yd_check(hp.cointegral_yd(H3).yd, 0, 0).ok


def _unit_yd(H):
    F = H.field
    coaction = [Matrix(F, [[F.one if k == 0 else F.zero]]) for k in range(H.n)]
    return hp.YDObject(H, coaction, [Matrix(F, [[c]]) for c in H.counit], "k")


@pytest.mark.parametrize("name", ["sweedler", "taft:3:7"])
def test_free_hopf_module(name):
    H = _h(name)
    V = _unit_yd(H)
    assert hp.yd_check(V, 0, 0).ok
    rep = hp.hopf_module_equivalence(V, 0, 0)
    assert rep.ok, rep.failures()
    M = hp.free_hopf_module(V, 0)
    assert M.dim == H.n
    assert len(hp.coinvariants(M)) == 1


def test_dual_hopf_module():
    H = B.sweedler()
    M = hp.dual_hopf_module(H)
    assert hp.check_hopf_module(M, 1, -1).ok
    assert hp.coinvariants(M) and len(hp.coinvariants(M)) == 1


# ---------------------------------------------------------------------------
# braided, semisimple, spherical


@given(st.fractions(min_value=-10, max_value=10, max_denominator=7))
@settings(max_examples=20, deadline=None)
def test_h4_rform_family(t):
    H = B.sweedler()
    r = hp.h4_rform(H, t)
    assert hp.check_rform(r).ok
    g = hp.modular_data(H).g
    assert hp.rform_ops(r, [hp.comodule_unit(H), one_dimensional(H, g, "k_g")]).report.ok


def test_rform_bar_and_json():
    H = B.sweedler()
    r = hp.h4_rform(H, 2)
    rbar = r.bar()
    F = H.field
    # r(h1, k1) rbar(h2, k2) = eps(h) eps(k)
    for h in range(4):
        for k in range(4):
            acc = F.zero
            for (h1, h2), a in H.comul[h].items():
                for (k1, k2), b in H.comul[k].items():
                    acc = F.add(acc, F.mul(F.mul(a, b), F.mul(r.value(h1, k1), rbar.rows[h2][k2])))
            assert acc == F.mul(H.counit[h], H.counit[k])
    assert hp.RForm.from_json(r.to_json(), H).matrix == r.matrix


def test_trivial_rform():
    D = B.builtin("dualgroup:S3")
    r = hp.trivial_rform(D)
    assert hp.check_rform(r).ok
    G = B.builtin("group:S3")
    with pytest.raises(hp.NotRForm):
        hp.rform_ops(hp.trivial_rform(G))


def test_braiding_is_colinear():
    H = B.sweedler()
    r = hp.h4_rform(H, 1)
    fam = hp.comodule_family(H, include_regular=False)[:3]
    for X in fam:
        for Y in fam:
            c = hp.braiding(r, X, Y)
            XY, YX = hp.comodule_tensor(X, Y), hp.comodule_tensor(Y, X)
            assert c.is_invertible()
            assert all(Bk @ c == c @ A for A, Bk in zip(XY.actions, YX.actions))


def test_semisimple_trace():
    H = B.builtin("dualgroup:S3")
    assert hp.is_cosemisimple(H)
    assert not hp.is_cosemisimple(B.sweedler())
    for S in simple_comodules(H):
        for phi in hp.double_dual_isos(S):
            assert hp.semisimple_trace_check(H, S, phi).ok


def test_semisimple_trace_requires_cosemisimple():
    H = B.sweedler()
    S = simple_comodules(H)[0]
    with pytest.raises(hp.NotSemisimple):
        hp.semisimple_trace_check(H, S, Matrix.identity(Q, 1))


@pytest.mark.parametrize("name", ["group:S3", "dualgroup:S3"])
def test_spherical_counit_pivot(name):
    H = _h(name)
    pivot = hp.Pivot(list(H.counit))
    fam = hp.comodule_family(H, include_regular=False)
    assert hp.sphericity_check(H, pivot, fam).ok


def test_spherical_needs_unimodular():
    H = B.sweedler()
    with pytest.raises(hp.NotUnimodular):
        hp.sphericity_check(H, hp.Pivot(list(H.counit)), hp.comodule_family(H, include_regular=False))


def test_twist_check():
    D = B.builtin("dualgroup:S3")
    rep = hp.twist_check(hp.trivial_rform(D), hp.Pivot(list(D.counit)), hp.comodule_family(D, False))
    assert rep.ok
