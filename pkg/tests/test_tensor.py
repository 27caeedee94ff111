import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from quatminpoly.quaternion import Quaternion, quat_mul
from quatminpoly.tensor import (
    J4,
    R4,
    TensorElement,
    basis_matrix,
    is_tensor_of,
    matrix_to_tensor,
    tensor,
    tensor_conj,
    tensor_mul,
    tensor_to_matrix,
)

coeffs = arrays(np.float64, (4, 4), elements=st.floats(-5, 5, allow_nan=False))
UNITS = [Quaternion(1, 0, 0, 0), Quaternion(0, 1, 0, 0), Quaternion(0, 0, 1, 0), Quaternion(0, 0, 0, 1)]


def direct_map_matrix(p, q):
    """Column n is the image of the n-th basis quaternion under h -> p h conj(q)."""
    cols = [quat_mul(quat_mul(p, e), q.conj()).as_array() for e in UNITS]
    return np.column_stack(cols)


def test_basis_matches_defining_map():
    for x, y in itertools.product(range(4), repeat=2):
        np.testing.assert_array_equal(basis_matrix(x, y), direct_map_matrix(UNITS[x], UNITS[y]))


def test_anchor_matrices():
    np.testing.assert_array_equal(basis_matrix(0, 0), np.eye(4))
    # J4 = [[0, I], [-I, 0]] is right multiplication by -j; R4 is a signed anti-diagonal flip
    z, i2 = np.zeros((2, 2)), np.eye(2)
    np.testing.assert_array_equal(J4, np.block([[z, i2], [-i2, z]]))
    np.testing.assert_array_equal(J4, direct_map_matrix(UNITS[0], UNITS[2]))
    np.testing.assert_array_equal(R4, direct_map_matrix(UNITS[2], UNITS[1]))
    np.testing.assert_array_equal(J4 @ J4, -np.eye(4))
    np.testing.assert_array_equal(np.abs(R4), np.fliplr(np.eye(4)))


def test_basis_index_check():
    with pytest.raises(IndexError):
        basis_matrix(4, 0)


def test_basis_orthogonal_norm_four():
    mats = [basis_matrix(x, y) for x, y in itertools.product(range(4), repeat=2)]
    gram = np.array([[np.trace(a.T @ b) for b in mats] for a in mats])
    np.testing.assert_array_equal(gram, 4 * np.eye(16))


def test_basis_squares_and_commutation():
    mats = [basis_matrix(x, y) for x, y in itertools.product(range(4), repeat=2)]
    for m in mats:
        sq = m @ m
        assert np.array_equal(sq, np.eye(4)) or np.array_equal(sq, -np.eye(4))
    pairs = 0
    for a, b in itertools.combinations(mats, 2):
        pairs += 1
        assert np.array_equal(a @ b, b @ a) or np.array_equal(a @ b, -(b @ a))
    assert pairs == 120


def test_unit_tensors_round_trip():
    for x, y in itertools.product(range(4), repeat=2):
        t = matrix_to_tensor(basis_matrix(x, y))
        assert t == TensorElement.unit(x, y)
    assert matrix_to_tensor(np.eye(4)) == TensorElement.unit(0, 0)
    assert matrix_to_tensor(J4) == TensorElement.unit(0, 2)
    np.testing.assert_array_equal(tensor_to_matrix(TensorElement.unit(0, 2)), J4)


def test_small_products():
    t = tensor(UNITS[1], UNITS[1])
    assert tensor_mul(t, t) == TensorElement.unit(0, 0)
    one = TensorElement.unit(0, 0)
    s = TensorElement(np.arange(16.0))
    assert tensor_mul(one, s).allclose(s)


def test_conj_examples():
    assert tensor_conj(TensorElement.unit(0, 0)) == TensorElement.unit(0, 0)
    assert tensor_conj(TensorElement.unit(1, 0)) == -TensorElement.unit(1, 0)
    np.testing.assert_array_equal(basis_matrix(1, 0).T, -basis_matrix(1, 0))


@given(coeffs)
def test_round_trip(c):
    t = TensorElement(c)
    back = matrix_to_tensor(tensor_to_matrix(t))
    assert np.max(np.abs(back.c - c)) <= 1e-13 * (1 + np.abs(c).max())
    assert is_tensor_of(tensor_to_matrix(t), t)


@given(coeffs, coeffs, st.floats(-3, 3), st.floats(-3, 3))
def test_linearity(a, b, alpha, beta):
    lhs = matrix_to_tensor(alpha * tensor_to_matrix(TensorElement(a)) + beta * tensor_to_matrix(TensorElement(b)))
    np.testing.assert_allclose(lhs.c, alpha * a + beta * b, atol=1e-12 * (1 + np.abs(a).max() + np.abs(b).max()) * 10)


@given(coeffs, coeffs)
def test_mul_is_matrix_product(a, b):
    ta, tb = TensorElement(a), TensorElement(b)
    lhs = tensor_to_matrix(tensor_mul(ta, tb))
    rhs = tensor_to_matrix(ta) @ tensor_to_matrix(tb)
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * (1 + np.abs(rhs).max())


@given(coeffs)
def test_conj_is_transpose(c):
    t = TensorElement(c)
    assert np.max(np.abs(tensor_to_matrix(tensor_conj(t)) - tensor_to_matrix(t).T)) <= 1e-13 * (1 + np.abs(c).max())


def test_product_tensor_is_outer_product(rng):
    p, q = rng.normal(size=4), rng.normal(size=4)
    t = tensor(Quaternion.from_array(p), Quaternion.from_array(q))
    np.testing.assert_allclose(t.c, np.outer(p, q))
    np.testing.assert_allclose(tensor_to_matrix(t), direct_map_matrix(Quaternion.from_array(p), Quaternion.from_array(q)), atol=1e-13)
