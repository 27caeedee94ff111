"""Clifford algebra and octonion extensions.

* Cl(2,2) elements fixed or negated by reversion, in their H (x) H form.
* Antisymmetric 8x8 matrices as grade {1, 2, 5, 6} elements of Cl(0,6).
* Left and right octonion multiplication as 8x8 matrices.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyViolation, UnsupportedGrade, ZeroProduct
from .polynomial import Polynomial
from .quaternion import Quaternion, as_quaternion, as_vector, quat_mul_arrays
from .tensor import tensor, tensor_to_matrix

# ------------------------------------------------------------------ Cl(2,2)


def _m(p, q) -> np.ndarray:
    return tensor_to_matrix(tensor(p, q))


_ONE = np.array([1.0, 0.0, 0.0, 0.0])
_K = np.array([0.0, 0.0, 0.0, 1.0])


def _pure4(v) -> np.ndarray:
    return np.concatenate([[0.0], as_vector(v)])


def cl22_fixed_by_reversion_matrix(a, p, s) -> np.ndarray:
    """a(1 (x) 1) + p (x) k + 1 (x) s, with s free of k."""
    s = as_vector(s)
    if abs(s[2]) > 1e-12 * max(1.0, float(np.linalg.norm(s))):
        raise ValueError("s must have no k-component")
    return float(a) * np.eye(4) + _m(_pure4(p), _K) + _m(_ONE, _pure4(s))


def cl22_antifixed_by_reversion_matrix(a, p, q) -> np.ndarray:
    """a(1 (x) 1) + k (x) p + q (x) 1, with q orthogonal to k."""
    q = as_vector(q)
    if abs(q[2]) > 1e-12 * max(1.0, float(np.linalg.norm(q))):
        raise ValueError("q must satisfy q.k = 0")
    return float(a) * np.eye(4) + _m(_K, _pure4(p)) + _m(_pure4(q), _ONE)


def _cl22_quadratic(a: float, c: float, nonscalar: bool) -> Polynomial:
    if not nonscalar:
        return Polynomial([-a, 1.0])
    return Polynomial([-(c - a * a), -2.0 * a, 1.0])


def cl22_fixed_by_reversion_minpoly(a, p, s) -> Polynomial:
    """x^2 - 2ax - (p.p - s.s - a^2); x - a for scalar input."""
    p, s = as_vector(p), as_vector(s)
    return _cl22_quadratic(float(a), float(p @ p - s @ s), bool(np.any(p) or np.any(s)))


def cl22_antifixed_by_reversion_minpoly(a, p, q) -> Polynomial:
    """x^2 - 2ax - (p.p - q.q - a^2); x - a for scalar input.

    k (x) p squares to p.p, q (x) 1 squares to -q.q and the two anticommute
    whenever q is orthogonal to k, which fixes the constant term.
    """
    p, q = as_vector(p), as_vector(q)
    return _cl22_quadratic(float(a), float(p @ p - q @ q), bool(np.any(p) or np.any(q)))


def bilinear_adjoint(x, form) -> np.ndarray:
    """Adjoint of x with respect to the bilinear form with matrix ``form``."""
    form = np.asarray(form, dtype=float)
    return np.linalg.solve(form, np.asarray(x, dtype=float).T @ form)


CL22_FIXED_FORM = _m(_ONE, _K)
CL22_ANTIFIXED_FORM = _m(_K, _ONE)


# ------------------------------------------------------------------ Cl(0,6)

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]])
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]])
EPS2 = SIGMA_Z @ SIGMA_X  # [[0, 1], [-1, 0]]
I2 = np.eye(2)

ALLOWED_GRADES = frozenset({1, 2, 5, 6})


def _kron(*ms) -> np.ndarray:
    return functools.reduce(np.kron, ms)


def _clifford_ok(gens) -> bool:
    eye = np.eye(8)
    for i, e in enumerate(gens):
        if not np.array_equal(e @ e, -eye) or not np.array_equal(e.T, -e):
            return False
        for f in gens[i + 1 :]:
            if np.any(e @ f + f @ e):
                return False
    return True


@functools.lru_cache(maxsize=None)
def _generators() -> tuple[np.ndarray, ...]:
    known = {
        1: _kron(SIGMA_Z, EPS2, I2),
        2: _kron(EPS2, I2, I2),
        3: _kron(SIGMA_X, EPS2, SIGMA_X),
        5: _kron(SIGMA_X, I2, -EPS2),
        6: _kron(SIGMA_Z, SIGMA_X, EPS2),
    }
    # the fourth generator is found by search over Pauli triple products
    singles = (I2, SIGMA_X, SIGMA_Z, EPS2)
    found = None
    for a, b, c in itertools.product(singles, repeat=3):
        cand = _kron(a, b, c)
        trial = [known[1], known[2], known[3], cand, known[5], known[6]]
        if _clifford_ok(trial):
            found = trial
            break
    if found is None:
        raise ConsistencyViolation("no Pauli triple product completes the Cl(0,6) generator set")
    for e in found:
        e.setflags(write=False)
    return tuple(found)


def cl06_generators() -> tuple[np.ndarray, ...]:
    """Six antisymmetric 8x8 matrices with e_i^2 = -I that pairwise anticommute."""
    gens = _generators()
    if not _clifford_ok(list(gens)):
        raise ConsistencyViolation("Cl(0,6) generator relations failed")
    return gens


def _blade_key(blade) -> tuple[int, ...]:
    # 13 and "13" both mean e1 e3; indices are single digits
    if isinstance(blade, (str, int, np.integer)):
        idx = tuple(int(ch) for ch in str(blade))
    else:
        idx = tuple(int(t) for t in blade)
    if len(set(idx)) != len(idx) or any(i < 1 or i > 6 for i in idx):
        raise ValueError(f"invalid blade index {blade!r}")
    return tuple(sorted(idx))


@dataclass(frozen=True)
class Multivector06:
    """Sparse element of Cl(0,6): sorted index tuples mapped to coefficients."""

    terms: tuple[tuple[tuple[int, ...], float], ...]

    @classmethod
    def from_dict(cls, coeffs: dict) -> "Multivector06":
        acc: dict[tuple[int, ...], float] = {}
        for blade, value in coeffs.items():
            key = _blade_key(blade)
            acc[key] = acc.get(key, 0.0) + float(value)
        return cls(tuple(sorted(acc.items(), key=lambda kv: (len(kv[0]), kv[0]))))

    def as_dict(self) -> dict[tuple[int, ...], float]:
        return dict(self.terms)

    def grades(self) -> set[int]:
        return {len(k) for k, v in self.terms if v != 0.0}

    def norm2(self) -> float:
        return float(sum(v * v for _, v in self.terms))


def blade_matrix(blade) -> np.ndarray:
    """Ordered product e_{j1} e_{j2} ... for ascending indices."""
    gens = cl06_generators()
    out = np.eye(8)
    for i in _blade_key(blade):
        out = out @ gens[i - 1]
    return out


def _as_multivector(coeffs) -> Multivector06:
    return coeffs if isinstance(coeffs, Multivector06) else Multivector06.from_dict(coeffs)


def cl06_build(coeffs) -> np.ndarray:
    """Matrix of an antisymmetric element; rejects grades other than 1, 2, 5, 6."""
    mv = _as_multivector(coeffs)
    bad = mv.grades() - ALLOWED_GRADES
    if bad:
        raise UnsupportedGrade(f"grades {sorted(bad)} are not antisymmetric in Cl(0,6)")
    out = np.zeros((8, 8))
    for blade, value in mv.terms:
        if value != 0.0:
            out += value * blade_matrix(blade)
    return out


def cl06_quadratic_check(coeffs, tol: float = 1e-10) -> Polynomial | None:
    """x^2 - c when X^2 = cI, x for X = 0, otherwise None."""
    x = cl06_build(coeffs)
    scale = float(np.linalg.norm(x))
    if scale == 0.0:
        return Polynomial.x()
    sq = x @ x
    c = float(np.trace(sq)) / 8.0
    if np.max(np.abs(sq - c * np.eye(8))) > tol * max(1.0, scale) ** 2:
        return None
    return Polynomial([-c, 0.0, 1.0])


def blades_anticommute(a, b) -> bool:
    ma, mb = blade_matrix(a), blade_matrix(b)
    return not np.any(ma @ mb + mb @ ma)


# ---------------------------------------------------------------- octonions

I13 = np.diag([1.0, -1.0, -1.0, -1.0])


def _conj(a: np.ndarray) -> np.ndarray:
    return a * np.array([1.0, -1.0, -1.0, -1.0])


@dataclass(frozen=True)
class Octonion:
    """Cayley-Dickson pair (a1, a2) of quaternions stored as 4-arrays."""

    a1: tuple[float, float, float, float]
    a2: tuple[float, float, float, float]

    @classmethod
    def from_array(cls, v) -> "Octonion":
        v = np.asarray(v, dtype=float).reshape(8)
        return cls(tuple(float(t) for t in v[:4]), tuple(float(t) for t in v[4:]))

    @classmethod
    def from_pair(cls, a1, a2) -> "Octonion":
        a1 = np.asarray(as_quaternion(a1).as_array() if isinstance(a1, Quaternion) else a1, dtype=float)
        a2 = np.asarray(as_quaternion(a2).as_array() if isinstance(a2, Quaternion) else a2, dtype=float)
        return cls.from_array(np.concatenate([a1.reshape(4), a2.reshape(4)]))

    def as_array(self) -> np.ndarray:
        return np.array(self.a1 + self.a2, dtype=float)

    @property
    def real(self) -> float:
        return self.a1[0]

    def norm2(self) -> float:
        v = self.as_array()
        return float(v @ v)

    def conj(self) -> "Octonion":
        return Octonion.from_pair(_conj(np.array(self.a1)), -np.array(self.a2))

    def __mul__(self, other: "Octonion") -> "Octonion":
        return octonion_mul(self, other)


def octonion_mul(a: Octonion, b: Octonion) -> Octonion:
    """(a1, a2)(b1, b2) = (a1 b1 - conj(b2) a2, b2 a1 + a2 conj(b1))."""
    a1, a2 = np.array(a.a1), np.array(a.a2)
    b1, b2 = np.array(b.a1), np.array(b.a2)
    first = quat_mul_arrays(a1, b1) - quat_mul_arrays(_conj(b2), a2)
    second = quat_mul_arrays(b2, a1) + quat_mul_arrays(a2, _conj(b1))
    return Octonion.from_pair(first, second)


def omega(a: Octonion) -> np.ndarray:
    """Left multiplication x -> a x in doubling coordinates."""
    a1, a2 = np.array(a.a1), np.array(a.a2)
    return np.block(
        [
            [_m(a1, _ONE), -_m(_ONE, _conj(a2)) @ I13],
            [_m(a2, _ONE) @ I13, _m(_ONE, _conj(a1))],
        ]
    )


def theta(a: Octonion) -> np.ndarray:
    """Right multiplication x -> x a in doubling coordinates."""
    a1, a2 = np.array(a.a1), np.array(a.a2)
    return np.block(
        [
            [_m(_ONE, _conj(a1)), -_m(_conj(a2), _ONE)],
            [_m(a2, _ONE), _m(_ONE, a1)],
        ]
    )


def _nonzero_product(ab: Octonion, a: Octonion, b: Octonion, tol: float):
    if ab.norm2() <= (tol * max(1.0, a.norm2() * b.norm2())) ** 2 or ab.norm2() == 0.0:
        raise ZeroProduct("the octonion product vanishes")


def omega_product_annihilator(a: Octonion, b: Octonion, tol: float = 1e-12) -> Polynomial:
    """x^2 - 2 Re(ab) x + |a|^2 |b|^2, which annihilates omega(a) omega(b)."""
    ab = octonion_mul(a, b)
    _nonzero_product(ab, a, b, tol)
    return Polynomial([a.norm2() * b.norm2(), -2.0 * ab.real, 1.0])


def theta_product_annihilator(a: Octonion, b: Octonion, tol: float = 1e-12) -> Polynomial:
    """x^2 - 2 Re(ba) x + |ba|^2, which annihilates theta(a) theta(b)."""
    ba = octonion_mul(b, a)
    _nonzero_product(ba, a, b, tol)
    return Polynomial([ba.norm2(), -2.0 * ba.real, 1.0])


def octonion_annihilator(a: Octonion) -> Polynomial:
    """x^2 - 2 Re(a) x + |a|^2, annihilating omega(a) and theta(a)."""
    return Polynomial([a.norm2(), -2.0 * a.real, 1.0])
