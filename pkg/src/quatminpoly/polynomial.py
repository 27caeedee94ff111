"""Real polynomials of small degree.

Coefficients are kept in ascending order: ``Polynomial([c0, c1, c2])`` is
``c0 + c1 x + c2 x^2``.  Degree decisions (trimming, gcd) use a relative
coefficient tolerance; at degree <= 4 this is well conditioned.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

COEFF_TOL = 1e-10


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple[float, ...]

    def __init__(self, coeffs: Iterable[float]):
        c = [float(t) for t in coeffs]
        while len(c) > 1 and c[-1] == 0.0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) if c else (0.0,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0.0, 1.0])

    @classmethod
    def constant(cls, c: float) -> "Polynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[complex]) -> "Polynomial":
        """Monic polynomial with the given roots; imaginary parts must pair up."""
        c = np.array([1.0 + 0j])
        for r in roots:
            c = np.concatenate([[0.0], c]) - r * np.concatenate([c, [0.0]])
        return cls(np.real_if_close(c, tol=1e6).real)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> float:
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1.0

    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ZeroDivisionError("the zero polynomial has no monic form")
        return Polynomial(np.array(self.coeffs) / self.leading)

    def as_list(self) -> list[float]:
        return list(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> float:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0.0

    def __call__(self, x):
        acc = 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def at_matrix(self, m) -> np.ndarray:
        """Horner evaluation at a square matrix."""
        m = np.asarray(m, dtype=float)
        eye = np.eye(m.shape[0])
        acc = np.zeros_like(m)
        for c in reversed(self.coeffs):
            acc = acc @ m + c * eye
        return acc

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return Polynomial([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return Polynomial(np.convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = Polynomial([1.0])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Long division; the remainder is returned untrimmed apart from exact zeros."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        num = list(self.coeffs)
        den = other.coeffs
        dd = len(den) - 1
        if len(num) - 1 < dd:
            return Polynomial([0.0]), Polynomial(num)
        quot = [0.0] * (len(num) - dd)
        for k in range(len(num) - 1 - dd, -1, -1):
            f = num[k + dd] / den[-1]
            quot[k] = f
            for i in range(dd + 1):
                num[k + i] -= f * den[i]
        return Polynomial(quot), Polynomial(num[:dd] or [0.0])

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:] or [0.0])

    def shift(self, a: float) -> "Polynomial":
        """Return ``q(x) = p(x - a)``."""
        out = Polynomial([0.0])
        xa = Polynomial([-a, 1.0])
        for c in reversed(self.coeffs):
            out = out * xa + c
        return out

    def reverse(self) -> "Polynomial":
        return Polynomial(self.coeffs[::-1])

    def trim(self, tol: float = COEFF_TOL) -> "Polynomial":
        """Drop leading coefficients below ``tol`` relative to the largest one."""
        c = list(self.coeffs)
        scale = max(abs(t) for t in c)
        while len(c) > 1 and abs(c[-1]) <= tol * scale:
            c.pop()
        if len(c) == 1 and abs(c[0]) <= tol * scale:
            return Polynomial([0.0])
        return Polynomial(c)

    def allclose(self, other: "Polynomial", atol: float = 1e-7) -> bool:
        other = _coerce(other)
        if self.degree != other.degree:
            return False
        return all(abs(a - b) <= atol for a, b in zip(self.coeffs, other.coeffs))

    def roots(self) -> np.ndarray:
        return poly_roots(self)

    def __str__(self) -> str:
        return format_polynomial(self.coeffs)


def _coerce(p) -> Polynomial:
    return p if isinstance(p, Polynomial) else Polynomial([float(p)])


def format_polynomial(coeffs: Sequence[float], var: str = "x", digits: int = 12) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = float(coeffs[i])
        if c == 0.0 and len(coeffs) > 1:
            continue
        mag = f"{abs(c):.{digits}g}"
        if i == 0:
            body = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == "1" else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def reverse_poly(p) -> list[float]:
    """Coefficient list of the reverse polynomial, ``out[i] = p[n - i]``."""
    coeffs = p.coeffs if isinstance(p, Polynomial) else tuple(p)
    return list(coeffs[::-1])


class ScreenKind(enum.Enum):
    SIMILAR_TO_MINUS = "similar-to-minus"
    SIMILAR_TO_INVERSE_TRANSPOSE = "similar-to-inverse-transpose"


class ScreenResult(NamedTuple):
    passed: bool
    clause: str | None = None

    def __bool__(self) -> bool:
        return self.passed


def screen_shortlist(p: Polynomial, kind: ScreenKind, atol: float = 1e-9) -> ScreenResult:
    """Necessary shape of a minimal polynomial for two symmetry classes.

    ``SIMILAR_TO_MINUS`` (A^T ~ -A): even degree means only even powers, odd
    degree only odd powers.  ``SIMILAR_TO_INVERSE_TRANSPOSE`` (A^T ~ A^-1):
    the constant term is +1 or -1 and the polynomial equals its reverse or
    minus its reverse accordingly.
    """
    kind = ScreenKind(kind)
    c = p.coeffs
    n = p.degree
    scale = max(1.0, max(abs(t) for t in c))
    if kind is ScreenKind.SIMILAR_TO_MINUS:
        bad = [i for i in range(len(c)) if (i - n) % 2 and abs(c[i]) > atol * scale]
        if bad:
            return ScreenResult(False, f"parity: nonzero coefficient of x^{bad[0]} in degree-{n} polynomial")
        return ScreenResult(True)
    c0 = c[0]
    if abs(abs(c0) - 1.0) > atol * scale:
        return ScreenResult(False, f"constant term {c0!r} is not +1 or -1")
    sign = 1.0 if c0 > 0 else -1.0
    rev = reverse_poly(p)
    if any(abs(a - sign * b) > atol * scale for a, b in zip(c, rev)):
        which = "its reverse" if sign > 0 else "minus its reverse"
        return ScreenResult(False, f"constant term {c0:+.0f} but polynomial differs from {which}")
    return ScreenResult(True)


def poly_gcd(a: Polynomial, b: Polynomial, tol: float = COEFF_TOL) -> Polynomial:
    """Monic gcd by the Euclidean algorithm with relative remainder trimming."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    a, b = a.monic(), b.monic()
    if a.degree < b.degree:
        a, b = b, a
    scale = max(max(abs(t) for t in a.coeffs), max(abs(t) for t in b.coeffs))
    while True:
        _, r = a.divmod(b)
        if max(abs(t) for t in r.coeffs) <= tol * scale:
            return b
        r = r.trim(tol)
        if r.degree == 0:
            return Polynomial([1.0])
        a, b = b, r.monic()


def poly_lcm(a: Polynomial, b: Polynomial, tol: float = COEFF_TOL) -> Polynomial:
    g = poly_gcd(a, b, tol)
    q, _ = (a.monic() * b.monic()).divmod(g)
    return q.monic()


def squarefree_part(p: Polynomial, tol: float = COEFF_TOL) -> Polynomial:
    """``p / gcd(p, p')``, i.e. the product of the distinct linear factors."""
    g = poly_gcd(p, p.derivative(), tol)
    if g.degree == 0:
        return p.monic()
    q, _ = p.monic().divmod(g)
    return q.monic()


# ---------------------------------------------------------------- root finding


def _newton_polish(coeffs: Sequence[float], z: complex, steps: int = 3) -> complex:
    p = Polynomial(coeffs)
    dp = p.derivative()
    best, fbest = z, abs(p(z))
    for _ in range(steps):
        d = dp(best)
        if d == 0:
            break
        cand = best - p(best) / d
        fc = abs(p(cand))
        if not fc < fbest:
            break
        best, fbest = cand, fc
    return best


def _quadratic(b: complex, c: complex) -> list[complex]:
    # x^2 + b x + c, cancellation-free form
    disc = cmath.sqrt(b * b - 4 * c)
    s = -0.5 * (b + (disc if (b.conjugate() * disc).real >= 0 else -disc))
    if s == 0:
        return [0j, 0j]
    return [s, c / s]


def _cubic(a2: float, a1: float, a0: float) -> list[complex]:
    # x^3 + a2 x^2 + a1 x + a0 via the depressed cubic t^3 + p t + q
    shift = a2 / 3.0
    p = a1 - a2 * a2 / 3.0
    q = 2.0 * a2**3 / 27.0 - a2 * a1 / 3.0 + a0
    disc = (q / 2.0) ** 2 + (p / 3.0) ** 3
    if p < 0 and disc <= 0:
        # three real roots, trigonometric form
        m = 2.0 * math.sqrt(-p / 3.0)
        arg = 3.0 * q / (p * m) if m else 0.0
        theta = math.acos(max(-1.0, min(1.0, arg))) / 3.0
        ts = [m * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
        return [complex(t - shift) for t in ts]
    sq = cmath.sqrt(disc)
    u3 = -q / 2.0 + (sq if q <= 0 else -sq)
    u = u3 ** (1.0 / 3.0) if u3 != 0 else 0j
    omega = complex(-0.5, math.sqrt(3.0) / 2.0)
    out = []
    for k in range(3):
        uk = u * omega**k
        t = uk - p / (3.0 * uk) if uk != 0 else 0j
        out.append(t - shift)
    return out


def _quartic(a3: float, a2: float, a1: float, a0: float) -> list[complex]:
    # x^4 + a3 x^3 + a2 x^2 + a1 x + a0, Ferrari with the resolvent cubic
    shift = a3 / 4.0
    p = a2 - 3.0 * a3 * a3 / 8.0
    q = a1 - a3 * a2 / 2.0 + a3**3 / 8.0
    r = a0 - a3 * a1 / 4.0 + a3 * a3 * a2 / 16.0 - 3.0 * a3**4 / 256.0
    scale = max(1.0, abs(p), math.sqrt(abs(r)))
    if abs(q) <= 1e-14 * scale**1.5:
        ys = []
        for w in _quadratic(complex(p), complex(r)):
            s = cmath.sqrt(w)
            ys += [s, -s]
    else:
        # 8 m^3 + 8 p m^2 + (2 p^2 - 8 r) m - q^2 = 0 has a positive real root
        cands = _cubic(p, (p * p / 4.0 - r), -q * q / 8.0)
        m = max(c.real for c in cands)
        m = _newton_polish([-q * q / 8.0, p * p / 4.0 - r, p, 1.0], complex(m)).real
        s = math.sqrt(2.0 * m) if m > 0 else 0.0
        if s == 0.0:
            return [complex(z) for z in np.roots([1.0, a3, a2, a1, a0])]
        ys = _quadratic(complex(-s), complex(p / 2.0 + m + q / (2.0 * s)))
        ys += _quadratic(complex(s), complex(p / 2.0 + m - q / (2.0 * s)))
    return [y - shift for y in ys]


def poly_roots(p: Polynomial) -> np.ndarray:
    """All complex roots of a polynomial of degree <= 4, closed form plus Newton polish."""
    p = p.monic()
    c = p.coeffs
    n = p.degree
    if n == 0:
        return np.zeros(0, dtype=complex)
    if n == 1:
        raw = [complex(-c[0])]
    elif n == 2:
        raw = _quadratic(complex(c[1]), complex(c[0]))
    elif n == 3:
        raw = _cubic(c[2], c[1], c[0])
    elif n == 4:
        raw = _quartic(c[3], c[2], c[1], c[0])
    else:
        raise ValueError("closed-form roots only up to degree 4")
    polished = [_newton_polish(c, z) for z in raw]
    return np.array(sorted(polished, key=lambda z: (-z.real, -z.imag)), dtype=complex)


def real_roots(p: Polynomial, imag_tol: float = 1e-8) -> np.ndarray:
    """Roots of a polynomial known to have only real roots, sorted descending."""
    z = poly_roots(p)
    scale = max(1.0, float(np.max(np.abs(z)))) if z.size else 1.0
    if np.any(np.abs(z.imag) > imag_tol * scale):
        raise ValueError(f"polynomial {p} has non-real roots {z}")
    return np.sort(z.real)[::-1]
