import pytest

from nkwb import builtins as B
from nkwb import hopf as hp
from nkwb.exactfield import PrimeField, Q


def test_registry_lists_resolve():
    for name in B.BUILTIN_COALGEBRAS + B.BUILTIN_HOPF:
        assert B.builtin(name).name == name


def test_k2_shape():
    C = B.k2()
    assert C.labels == ["u", "v", "e"]
    assert C.comul[2] == {(0, 2): 1, (2, 1): 1}
    assert C.counit == [1, 1, 0]


def test_star_shape():
    C = B.star(3)
    assert C.labels == ["w", "w'", "v1", "v2", "v3", "e0", "f1", "f2", "f3"]
    assert C.comul[C.labels.index("f2")] == {(3, 7): 1, (7, 0): 1}


def test_example0_shape():
    C = B.example0(2)
    assert C.n == 3 + 3


def test_taft_root_of_unity():
    H = B.builtin("taft:3:13")
    assert H.field == PrimeField(13) and H.n == 9
    x, g = H.labels.index("x"), H.labels.index("g")
    gx = H.labels.index("gx")
    # x g = zeta g x with zeta = 3
    assert H.mul[(x, g)] == {gx: 3}


def test_sweedler_over_other_fields():
    H = B.builtin("sweedler", PrimeField(5))
    assert hp.check_hopf(H).ok
    assert H.field == PrimeField(5)


@pytest.mark.parametrize("name", ["taft:3:7", "taft:2:3", "taft:4:5", "taft:5:11"])
def test_taft_family(name):
    assert hp.check_hopf(B.builtin(name)).ok


@pytest.mark.parametrize("name", ["taft:3:11", "taft:3:12", "taft:1:5", "taft:3", "star:0", "mat:0", "star:x"])
def test_bad_parameters(name):
    with pytest.raises(ValueError):
        B.builtin(name)


@pytest.mark.parametrize("name", ["nope", "k2:3", "sweedler:2", "group"])
def test_unknown(name):
    with pytest.raises(B.UnknownBuiltin):
        B.builtin(name)


def test_group_tables():
    labels, table = B.symmetric_group_table(3)
    assert len(labels) == 6 and B.check_group_table(table) == 0
    labels, table = B.cyclic_group_table(5)
    assert table[3][4] == 2


def test_cayley_file(tmp_path):
    p = tmp_path / "c3.txt"
    p.write_text("3\n0 1 2\n1 2 0\n2 0 1\n")
    H = B.builtin(f"group:{p}")
    assert H.n == 3 and hp.check_hopf(H).ok
    D = B.builtin(f"dualgroup:{p}", PrimeField(7))
    assert hp.check_hopf(D).ok


@pytest.mark.parametrize("text,msg", [
    ("", "empty"),
    ("2\n0 1\n1\n", "expected 4"),
    ("2\n0 1\n1 1\n", "Latin"),
    ("3\n0 2 1\n2 1 0\n1 0 2\n", "identity"),  # x * y = -x - y
    ("2\n0 5\n1 0\n", "range"),
])
def test_bad_cayley_files(tmp_path, text, msg):
    p = tmp_path / "g.txt"
    p.write_text(text)
    with pytest.raises(ValueError, match=msg):
        B.read_cayley(p)


def test_non_associative_table():
    # a Latin square with identity that is not associative (order 5 loop)
    table = [[0, 1, 2, 3, 4],
             [1, 0, 3, 4, 2],
             [2, 4, 0, 1, 3],
             [3, 2, 4, 0, 1],
             [4, 3, 1, 2, 0]]
    with pytest.raises(ValueError, match="associative"):
        B.check_group_table(table)


def test_group_algebra_is_cocommutative_and_dual_commutative():
    G = B.builtin("group:S3")
    assert all(set(d) == {(i, i)} for i, d in enumerate(G.comul))
    D = B.builtin("dualgroup:S3")
    assert D.mul == {(a, a): {a: 1} for a in range(6)}
    assert D.labels[0].startswith("d_")
    assert D.field == Q
