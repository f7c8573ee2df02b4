import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from invsys.linalg import RationalMatrix, nullspace, rank, rref, spans_equal, to_rational
from oracles import bareiss_rank

FOUR_POINT_MATRIX = [[0, 0, 1, -1], [1, 1, 1, -1], [1, 0, 1, -1], [0, 1, 1, -1]]

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    rows = draw(st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r))
    # bias toward rank deficiency
    if r > 1 and draw(st.booleans()):
        rows[-1] = [a + 2 * b for a, b in zip(rows[0], rows[1 % r])]
    return RationalMatrix.from_rows(rows, cols=c)


def test_rational_coercion():
    assert to_rational("3/6") == Fraction(1, 2)
    assert to_rational(-4) == Fraction(-4)
    assert to_rational(" -2/4 ").denominator == 2


def test_rref_identity():
    I = RationalMatrix.identity(2)
    R, piv = rref(I)
    assert R == I and piv == [0, 1]


def test_rref_proportional_rows():
    R, piv = rref(RationalMatrix.from_rows([[1, 2], [2, 4]]))
    assert R.to_lists() == [[1, 2], [0, 0]]
    assert piv == [0]


def test_four_point_matrix_rank_and_kernel():
    A = RationalMatrix.from_rows(FOUR_POINT_MATRIX)
    assert rank(A) == 3
    (v,) = nullspace(A)
    assert v == (0, 0, 1, 1)


def test_nullspace_small_cases():
    assert nullspace(RationalMatrix.identity(3)) == []
    assert nullspace(RationalMatrix.from_rows([[1, 1]])) == [(-1, 1)]


def test_rank_zero_matrix():
    assert rank(RationalMatrix.zeros(3, 3)) == 0


def test_duplicated_row_rank_matches_oracle():
    rng = random.Random(7)
    for _ in range(20):
        rows = [[rng.randint(-9, 9) for _ in range(5)] for _ in range(4)]
        rows.append(list(rows[rng.randrange(4)]))
        A = RationalMatrix.from_rows(rows)
        assert rank(A) == bareiss_rank(rows) <= 4


def test_empty_shapes():
    assert rank(RationalMatrix(0, 4, ())) == 0
    assert len(nullspace(RationalMatrix(0, 3, ()))) == 3


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_nullity(A):
    assert rank(A) + len(nullspace(A)) == A.cols


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rref_idempotent(A):
    R, piv = rref(A)
    assert rref(R) == (R, piv)


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_kernel_vectors_annihilated(A):
    for v in nullspace(A):
        assert all(x == 0 for x in A.apply(v))


@given(matrices())
@settings(max_examples=150, deadline=None)
def test_rank_transpose_and_oracle(A):
    r = rank(A)
    assert r == rank(A.transpose())
    assert r == bareiss_rank(A.to_lists())


def test_spans_equal_ignores_basis_choice():
    U = [[1, 0, 1], [0, 1, 1]]
    V = [[1, 1, 2], [1, -1, 0]]
    assert spans_equal(U, V, 3)
    assert not spans_equal(U, [[1, 0, 0]], 3)
