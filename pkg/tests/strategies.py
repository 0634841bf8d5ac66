"""Hypothesis strategies for field elements and small matrices."""
from fractions import Fraction

from hypothesis import strategies as st

from nkwb.exactfield import Extension, PrimeField, Q

F7 = PrimeField(7)
F13 = PrimeField(13)
# Q(i) and F_49 = F_7[t]/(t^2 + 1)
QI = Extension(Q, [1, 0, 1], "i")
F49 = Extension(F7, [1, 0, 1])

FIELDS = [Q, F7, F13, QI, F49]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def elements(F):
    if F is Q:
        return rationals
    if isinstance(F, PrimeField):
        return st.integers(0, F.p - 1)
    return st.tuples(*[elements(F.base)] * F.degree)


def nonzero(F):
    return elements(F).filter(lambda x: x != F.zero)


def rows(F, nrows, ncols):
    return st.lists(st.lists(elements(F), min_size=ncols, max_size=ncols), min_size=nrows, max_size=nrows)


def small_matrix_rows(F, max_dim=5):
    return st.tuples(st.integers(1, max_dim), st.integers(1, max_dim)).flatmap(
        lambda s: rows(F, s[0], s[1]).map(lambda r: (r, s[1])))


def sparse_rationals():
    # mostly zeros and small integers, which exercise rank deficiency
    return st.one_of(st.just(Fraction(0)), st.just(Fraction(0)), st.integers(-3, 3).map(Fraction), rationals)


@st.composite
def quivers(draw, max_vertices=4, max_arrows=4):
    from nkwb.coalgebra import Quiver

    nv = draw(st.integers(1, max_vertices))
    verts = tuple(f"v{i}" for i in range(nv))
    na = draw(st.integers(0, max_arrows))
    arrows = tuple((f"a{k}", verts[draw(st.integers(0, nv - 1))], verts[draw(st.integers(0, nv - 1))])
                   for k in range(na))
    return Quiver(verts, arrows)
