from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from coxline.exactla import (
    RatMatrix,
    SingularMatrix,
    as_rational,
    dot,
    gram,
    mat_inverse,
    mat_mul,
    norm_sq,
    primitive,
    vec_mat,
)

small_ints = st.integers(-6, 6)


def square(n):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def test_as_rational_accepts_exact_types():
    assert as_rational(3) == Fraction(3)
    assert as_rational(Fraction(2, 6)) == Fraction(1, 3)
    assert as_rational("5/10") == Fraction(1, 2)


def test_as_rational_refuses_floats():
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [3]])


def test_identity_diag_and_transpose():
    eye = RatMatrix.identity(3)
    assert eye.is_diagonal() and eye.is_symmetric()
    d = RatMatrix.diag([0, 4, 4])
    assert d[1, 1] == 4 and d[0, 1] == 0
    m = RatMatrix([[1, 2, 3], [4, 5, 6]])
    assert m.T.shape == (3, 2)
    assert m.T.T == m


def test_matmul_known_product():
    a = RatMatrix([[1, 2], [3, 4]])
    b = RatMatrix([[0, 1], [1, 0]])
    assert a @ b == RatMatrix([[2, 1], [4, 3]])


def test_inverse_of_half_hadamard():
    h = RatMatrix([[1, 1, 1, 1], [1, -1, 1, -1], [1, 1, -1, -1], [1, -1, -1, 1]])
    assert mat_inverse(h) == h.T.scale(Fraction(1, 4))


def test_singular_raises():
    with pytest.raises(SingularMatrix):
        mat_inverse(RatMatrix([[1, 2], [2, 4]]))


@settings(max_examples=60, deadline=None)
@given(square(4))
def test_inverse_matches_sympy(rows):
    ref = sympy.Matrix(rows)
    m = RatMatrix(rows)
    if ref.det() == 0:
        with pytest.raises(SingularMatrix):
            mat_inverse(m)
        return
    inv = mat_inverse(m)
    expected = ref.inv()
    assert all(
        inv[i, j] == Fraction(int(expected[i, j].p), int(expected[i, j].q))
        for i in range(4)
        for j in range(4)
    )
    assert mat_mul(m, inv) == RatMatrix.identity(4)


@settings(max_examples=60, deadline=None)
@given(square(3), square(3), square(3))
def test_matmul_associative(a, b, c):
    a, b, c = RatMatrix(a), RatMatrix(b), RatMatrix(c)
    assert (a @ b) @ c == a @ (b @ c)


@given(st.lists(small_ints, min_size=1, max_size=6).filter(any))
def test_primitive_is_coprime_and_parallel(v):
    p = primitive(v)
    from math import gcd

    g = 0
    for x in p:
        g = gcd(g, x)
    assert g == 1
    # same direction, same sign
    k = next(i for i, x in enumerate(v) if x)
    ratio = Fraction(v[k], p[k])
    assert ratio > 0
    assert all(Fraction(x) == ratio * y for x, y in zip(v, p))


def test_primitive_clears_denominators():
    assert primitive([Fraction(1, 2), Fraction(-1, 3)]) == (3, -2)


def test_primitive_zero_vector():
    with pytest.raises(ValueError):
        primitive([0, 0])


def test_gram_dot_norm():
    d = RatMatrix([[0, -1, 1], [-2, 1, 1]])
    g = gram(d)
    assert g == RatMatrix([[2, 0], [0, 6]])
    assert dot((1, 2), (3, 4)) == 11
    assert norm_sq((1, -2, 2)) == 9


def test_vec_mat():
    m = RatMatrix([[1, 0], [1, 1], [0, 2]])
    assert vec_mat((1, 2, 3), m) == (3, 8)
