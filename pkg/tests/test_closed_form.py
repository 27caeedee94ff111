import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from generators import BRANCH_GENERATORS, unit
from quatminpoly.closed_form import (
    closed_form_minpoly,
    minpoly_hamiltonian,
    minpoly_perskewsymmetric,
    minpoly_skew_hamiltonian,
    minpoly_skew_symmetric,
    minpoly_so4,
    minpoly_symmetric,
)
from quatminpoly.families import FamilyTag, SkewSymmetricParams, SpecialOrthogonalParams
from quatminpoly.oracle import minimal_polynomial_oracle
from quatminpoly.polynomial import Polynomial, ScreenKind, screen_shortlist

F = FamilyTag
P = Polynomial
vec3 = arrays(np.float64, 3, elements=st.floats(-3, 3, allow_nan=False))


def close(poly, expected, atol=1e-12):
    return poly.allclose(P(expected), atol=atol)


# values below were frozen from the Gram oracle on the built matrices


def test_skew_symmetric_examples():
    poly, rep = minpoly_skew_symmetric([1, 0, 0], [0, 0, 0])
    assert close(poly, [1, 0, 1]) and rep.branch == "quadratic"
    poly, rep = minpoly_skew_symmetric([1, 0, 0], [1, 0, 0])
    assert close(poly, [0, 4, 0, 1]) and rep.branch == "cubic"
    poly, rep = minpoly_skew_symmetric([1, 0, 0], [0, 2, 0])
    assert close(poly, [9, 0, 10, 0, 1]) and rep.branch == "quartic"
    poly, rep = minpoly_skew_symmetric([0, 0, 0], [0, 0, 0])
    assert poly.as_list() == [0, 1] and rep.branch == "zero"


def test_hamiltonian_examples():
    poly, rep = minpoly_hamiltonian(0, [0, 0, 0], [1, 0, 0], [0, 0, 0])
    assert close(poly, [-1, 0, 1]) and rep.branch == "quadratic"
    # collinear special case q = r = 0, b^2 = p.p
    poly, rep = minpoly_hamiltonian(1, [1, 0, 0], [0, 0, 0], [0, 0, 0])
    assert close(poly, [0, 4, 0, 1]) and rep.branch == "cubic-1"
    # r.q = 0 and q.q = r.r with p = 0: k = r.r
    poly, rep = minpoly_hamiltonian(0, [0, 0, 0], [1, 0, 0], [0, 1, 0])
    assert close(poly, [0, -4, 0, 1]) and rep.branch == "cubic-2"
    assert "G" in rep.quantities


def test_perskew_examples():
    poly, rep = minpoly_perskewsymmetric([1, 0, 0], [0, 0, 0], 0, 0)
    assert close(poly, [-1, 0, 1]) and rep.branch.startswith("quadratic")
    poly, rep = minpoly_perskewsymmetric([1, 0, 0], [0, 1, 0], 0, 0)
    assert close(poly, [0, -4, 0, 1]) and rep.branch == "cubic"
    poly, rep = minpoly_perskewsymmetric([0, 0, 0], [0, 0, 0], 1, 1)
    assert close(poly, [0, 4, 0, 1])


def test_skew_hamiltonian_examples():
    assert close(minpoly_skew_hamiltonian(1, [1, 0, 0], 0, 0), [0, -2, 1])
    assert close(minpoly_skew_hamiltonian(0, [0, 0, 0], 1, 0), [1, 0, 1])
    assert minpoly_skew_hamiltonian(3, [0, 0, 0], 0, 0).as_list() == [-3, 1]


def test_symmetric_examples():
    poly, rep = minpoly_symmetric(0, [1, 0, 0], [0, 0, 0], [0, 0, 0])
    assert close(poly, [-1, 0, 1]) and rep.branch == "quadratic-rank-one"
    poly, rep = minpoly_symmetric(0, [1, 0, 0], [0, 1, 0], [0, 0, 1])
    assert close(poly, [-3, -2, 1]) and rep.branch == "quadratic-l"
    poly, _ = minpoly_symmetric(2, [1, 0, 0], [0, 0, 0], [0, 0, 0])
    assert close(poly, [3, -4, 1])
    poly, rep = minpoly_symmetric(5, [0, 0, 0], [0, 0, 0], [0, 0, 0])
    assert poly.as_list() == [-5, 1]


def test_so4_examples():
    poly, rep = minpoly_so4([0, 1, 0, 0], [0, 1, 0, 0])
    assert close(poly, [-1, 0, 1]) and rep.branch == "quadratic-involution"
    c, s = np.cos(np.pi / 3), np.sin(np.pi / 3)
    poly, rep = minpoly_so4([c, s, 0, 0], [c, s, 0, 0])
    assert close(poly, [-1, 0, 0, 1]) and rep.branch == "cubic-equal"
    poly, rep = minpoly_so4([1, 0, 0, 0], [0, 1, 0, 0])
    assert close(poly, [1, 0, 1]) and rep.branch == "quadratic-one-real"
    assert minpoly_so4([1, 0, 0, 0], [1, 0, 0, 0])[0].as_list() == [-1, 1]
    assert minpoly_so4([-1, 0, 0, 0], [1, 0, 0, 0])[0].as_list() == [1, 1]


@pytest.mark.parametrize("key", sorted(BRANCH_GENERATORS, key=lambda k: (k[0].value, k[1])), ids=lambda k: f"{k[0].value}-{k[1]}")
def test_branch_fires_and_matches_oracle(key, rng):
    gen = BRANCH_GENERATORS[key]
    for _ in range(60):
        params = gen(rng)
        m = params.to_matrix()
        poly, rep = closed_form_minpoly(params)
        assert rep.branch == key[1]
        oracle = minimal_polynomial_oracle(m)
        assert poly.degree == oracle.degree
        assert poly.allclose(oracle, atol=1e-7)


@pytest.mark.parametrize("tag", list(F))
def test_annihilation(tag, rng):
    keys = [k for k in BRANCH_GENERATORS if k[0] is tag]
    for n in range(1000):
        params = BRANCH_GENERATORS[keys[n % len(keys)]](rng)
        m = params.to_matrix()
        poly, _ = closed_form_minpoly(params)
        res = np.linalg.norm(poly.at_matrix(m))
        assert res <= 1e-8 * (1 + np.linalg.norm(m) ** poly.degree)


@pytest.mark.parametrize(
    "tag,kind",
    [
        (F.SKEW_SYMMETRIC, ScreenKind.SIMILAR_TO_MINUS),
        (F.HAMILTONIAN, ScreenKind.SIMILAR_TO_MINUS),
        (F.PERSKEWSYMMETRIC, ScreenKind.SIMILAR_TO_MINUS),
        (F.SPECIAL_ORTHOGONAL, ScreenKind.SIMILAR_TO_INVERSE_TRANSPOSE),
    ],
)
def test_parity_screens(tag, kind, rng):
    keys = [k for k in BRANCH_GENERATORS if k[0] is tag]
    for n in range(200):
        poly, _ = closed_form_minpoly(BRANCH_GENERATORS[keys[n % len(keys)]](rng))
        res = screen_shortlist(poly, kind, atol=1e-9)
        assert res, res.clause


def test_branch_flips_across_boundary(rng):
    tol = 1e-9
    for _ in range(50):
        s = unit(rng) * rng.uniform(0.5, 2)
        t = unit(rng) * np.linalg.norm(s)
        assert minpoly_skew_symmetric(s, t, tol)[1].branch == "cubic"
        assert minpoly_skew_symmetric(s, t * (1 + 100 * tol), tol)[1].branch == "quartic"
        # margins record how far each clause is from its threshold
        _, rep = minpoly_skew_symmetric(s, t * (1 + 100 * tol), tol)
        assert any(v < 0 for v in rep.margins.values())


def test_so4_branch_flip(rng):
    tol = 1e-9
    u = np.concatenate([[0.0], unit(rng)])
    v = np.concatenate([[0.0], unit(rng)])
    assert minpoly_so4(u, v, tol)[1].branch == "quadratic-involution"
    eps = 1e-6
    u2 = np.concatenate([[eps], np.sqrt(1 - eps * eps) * u[1:]])
    assert minpoly_so4(u2, v, tol)[1].branch == "quartic"


@given(st.floats(-3, 3), vec3, vec3, vec3)
def test_symmetric_shift_identity(a, p, q, r):
    shifted, _ = minpoly_symmetric(a, p, q, r)
    base, _ = minpoly_symmetric(0.0, p, q, r)
    expected = base.shift(a)
    if base.degree == 1:
        expected = P([-a, 1.0])
    assert np.max(np.abs(np.array(shifted.as_list()) - np.array(expected.as_list()))) <= 1e-10 * (1 + abs(a)) ** 4


@given(arrays(np.float64, 4, elements=st.floats(-1, 1)), arrays(np.float64, 4, elements=st.floats(-1, 1)))
def test_so4_joint_sign(u, v):
    if np.linalg.norm(u) < 0.1 or np.linalg.norm(v) < 0.1:
        return
    u, v = u / np.linalg.norm(u), v / np.linalg.norm(v)
    a, ra = minpoly_so4(u, v)
    b, rb = minpoly_so4(-u, -v)
    assert ra.branch == rb.branch
    assert a.as_list() == b.as_list()


def test_dispatch_rejects_unknown():
    with pytest.raises((TypeError, AttributeError)):
        closed_form_minpoly(object())


def test_params_round_trip_through_dispatch():
    p = SkewSymmetricParams([0, 0, 1], [0, 0, 0])
    poly, _ = closed_form_minpoly(p)
    assert close(poly, [1, 0, 1])
    q = SpecialOrthogonalParams([0, 0, 1, 0], [0, 0, 0, 1])
    assert close(closed_form_minpoly(q)[0], [-1, 0, 1])
