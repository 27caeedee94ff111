import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from quatminpoly.quaternion import I, J, K, ONE, PureQuaternion, Quaternion, pure_mul, quat_mul, vector_triple

finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
small_ints = st.integers(-20, 20)
vec3 = arrays(np.float64, 3, elements=finite)
vec4 = arrays(np.float64, 4, elements=finite)


def test_identity_is_neutral():
    q = Quaternion(0.5, -1.0, 2.0, 3.0)
    assert quat_mul(ONE, q) == q
    assert quat_mul(q, ONE) == q


def test_defining_relations():
    assert quat_mul(I, J) == K
    assert quat_mul(J, I) == -K
    assert quat_mul(J, K) == I
    assert quat_mul(K, I) == J
    for u in (I, J, K):
        assert quat_mul(u, u) == Quaternion(-1.0, 0.0, 0.0, 0.0)


def test_hand_expanded_product():
    assert quat_mul(Quaternion(1, 1, 0, 0), Quaternion(1, 0, 1, 0)) == Quaternion(1, 1, 1, 1)


def test_pure_mul_examples():
    assert pure_mul(PureQuaternion(1, 0, 0), PureQuaternion(1, 0, 0)) == Quaternion(-1, 0, 0, 0)
    assert pure_mul(PureQuaternion(1, 0, 0), PureQuaternion(0, 1, 0)) == K
    out = pure_mul(PureQuaternion(1, 2, 0), PureQuaternion(0, 1, 1))
    assert out == Quaternion(-2, 2, -1, 1)


def test_vector_triple_examples():
    np.testing.assert_array_equal(vector_triple([1, 0, 0], [1, 0, 0], [1, 0, 0]), [0, 0, 0])
    np.testing.assert_array_equal(vector_triple([1, 0, 0], [0, 1, 0], [0, 0, 1]), [0, 0, 0])
    np.testing.assert_array_equal(vector_triple([1, 1, 0], [0, 1, 0], [1, 0, 0]), [-1, 1, 0])


def test_conjugate_and_norm():
    q = Quaternion(1.0, -2.0, 3.0, 0.5)
    assert q.conj().conj() == q
    assert q.norm2() == pytest.approx(1 + 4 + 9 + 0.25)
    assert Quaternion().norm2() == 0.0
    with pytest.raises(ZeroDivisionError):
        Quaternion().normalized()


def test_pure_type_has_no_scalar_part():
    p = PureQuaternion(1.0, 2.0, 3.0)
    assert p.to_quaternion().w == 0.0
    with pytest.raises(ValueError):
        PureQuaternion.from_array([1.0, 2.0])


@given(st.tuples(small_ints, small_ints, small_ints), st.tuples(small_ints, small_ints, small_ints))
def test_pure_product_identity_exact_on_integers(p, q):
    out = pure_mul(PureQuaternion(*p), PureQuaternion(*q))
    assert out.w == -float(np.dot(p, q))
    np.testing.assert_array_equal(out.imag.as_array(), np.cross(p, q))


@given(vec3, vec3)
def test_pure_product_identity_floats(p, q):
    out = quat_mul(PureQuaternion(*p).to_quaternion(), PureQuaternion(*q).to_quaternion())
    scale = 1.0 + np.linalg.norm(p) * np.linalg.norm(q)
    assert abs(out.w + np.dot(p, q)) <= 1e-12 * scale
    np.testing.assert_allclose(out.imag.as_array(), np.cross(p, q), atol=1e-12 * scale)


def test_vector_triple_matches_nested_cross(rng):
    for _ in range(1000):
        p, q, r = rng.normal(size=(3, 3))
        ref = np.cross(p, np.cross(q, r))
        got = vector_triple(p, q, r)
        assert np.linalg.norm(got - ref) <= 1e-12 * (1 + np.linalg.norm(p) * np.linalg.norm(q) * np.linalg.norm(r))


@given(vec4, vec4, vec4)
def test_associativity(a, b, c):
    qa, qb, qc = (Quaternion.from_array(t) for t in (a, b, c))
    left = quat_mul(quat_mul(qa, qb), qc).as_array()
    right = quat_mul(qa, quat_mul(qb, qc)).as_array()
    scale = 1.0 + np.linalg.norm(a) * np.linalg.norm(b) * np.linalg.norm(c)
    assert np.max(np.abs(left - right)) <= 1e-12 * scale


@given(vec4, vec4)
def test_norm_is_multiplicative(a, b):
    qa, qb = Quaternion.from_array(a), Quaternion.from_array(b)
    assert quat_mul(qa, qb).norm2() == pytest.approx(qa.norm2() * qb.norm2(), rel=1e-12, abs=1e-12)
