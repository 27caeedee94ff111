import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from quatminpoly.polynomial import (
    Polynomial,
    ScreenKind,
    poly_gcd,
    poly_lcm,
    poly_roots,
    real_roots,
    reverse_poly,
    screen_shortlist,
    squarefree_part,
)
from quatminpoly.closed_form import minpoly_block_diagonal

P = Polynomial


def test_reverse_examples():
    assert reverse_poly(P([1, 0, 1])) == [1, 0, 1]
    assert reverse_poly(P([-2, 1])) == [1, -2]
    assert reverse_poly(P([4, 3, 2, 1])) == [1, 2, 3, 4]


def test_screen_part_one():
    assert screen_shortlist(P([4, 0, 1]), ScreenKind.SIMILAR_TO_MINUS)
    res = screen_shortlist(P([0, 1, 1]), ScreenKind.SIMILAR_TO_MINUS)
    assert not res and "parity" in res.clause
    assert screen_shortlist(P([0, 3, 0, 1]), ScreenKind.SIMILAR_TO_MINUS)


def test_screen_part_two():
    a = 0.7
    assert screen_shortlist(P([-1, a, -a, 1]), ScreenKind.SIMILAR_TO_INVERSE_TRANSPOSE)
    assert screen_shortlist(P([1, a, 2.5, a, 1]), ScreenKind.SIMILAR_TO_INVERSE_TRANSPOSE)
    assert not screen_shortlist(P([2, 0, 1]), ScreenKind.SIMILAR_TO_INVERSE_TRANSPOSE)
    assert not screen_shortlist(P([-1, 0.5, 0.2, 1]), ScreenKind.SIMILAR_TO_INVERSE_TRANSPOSE)


def test_lcm_examples():
    assert minpoly_block_diagonal([P([-1, 1]), P([-1, 1])]).allclose(P([-1, 1]))
    assert minpoly_block_diagonal([P([-1, 0, 1]), P([-1, 1])]).allclose(P([-1, 0, 1]))
    assert poly_lcm(P([1, 0, 1]), P([0, -2, 1])).allclose(P([0, -2, 1, -2, 1]))


def test_gcd_and_squarefree():
    a = P.from_roots([1, 2, 3])
    b = P.from_roots([2, 3, 5])
    assert poly_gcd(a, b).allclose(P.from_roots([2, 3]))
    assert squarefree_part(P.from_roots([1, 1, -2, -2])).allclose(P.from_roots([1, -2]))


def test_arithmetic_and_eval():
    p = P([1, 2, 3])
    assert p(2.0) == 1 + 4 + 12
    assert (p * P([0, 1])).as_list() == [0, 1, 2, 3]
    q, r = P([0, -2, 1, -2, 1]).divmod(P([1, 0, 1]))
    assert q.allclose(P([0, -2, 1])) and r.is_zero()
    assert p.shift(1.0).allclose(P([2, -4, 3]))
    np.testing.assert_allclose(P([-1, 0, 1]).at_matrix(np.diag([1.0, -1.0])), 0.0)


def test_roots_closed_forms():
    np.testing.assert_allclose(np.sort(real_roots(P.from_roots([3, -1]))), [-1, 3], atol=1e-13)
    np.testing.assert_allclose(np.sort(real_roots(P.from_roots([1, 2, 3]))), [1, 2, 3], atol=1e-12)
    np.testing.assert_allclose(np.sort(real_roots(P.from_roots([-2, 0.5, 1, 4]))), [-2, 0.5, 1, 4], atol=1e-11)
    z = poly_roots(P([1, 0, 1]))
    np.testing.assert_allclose(np.sort_complex(z), [-1j, 1j], atol=1e-14)
    with pytest.raises(ValueError):
        real_roots(P([1, 0, 1]))


@given(st.lists(st.floats(-3, 3, allow_nan=False), min_size=1, max_size=4))
def test_roots_annihilate_polynomial(roots):
    # residuals stay tiny even where clustered roots are ill-conditioned
    p = P.from_roots(roots)
    z = poly_roots(p)
    assert len(z) == p.degree
    scale = sum(abs(c) for c in p.as_list())
    for w in z:
        assert abs(p(w)) <= 1e-11 * scale * max(1.0, abs(w)) ** p.degree


@given(st.lists(st.floats(-5, 5, allow_nan=False), min_size=2, max_size=5))
def test_reverse_is_involution(c):
    assert reverse_poly(reverse_poly(c)) == list(c)
