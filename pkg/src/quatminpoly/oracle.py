"""Minimal polynomials of arbitrary small square matrices via Gram matrices of powers.

The powers I, X, X^2, ... are linearly dependent for the first time at the
degree of the minimal polynomial, which shows up as a rank drop of their Gram
matrix under the trace inner product.  A kernel vector then holds the
coefficients.  This module knows nothing about quaternions and is the
independent check for every closed form in the package.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RankDecisionAmbiguous
from .polynomial import Polynomial

EPS = np.finfo(float).eps
MAX_DIM = 16


def _square(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.ndim != 2 or x.shape[0] != x.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {x.shape}")
    return x


def gram_matrix(x, i: int) -> np.ndarray:
    """Gram matrix of I, X, ..., X^i under <Y, Z> = trace(Y^T Z)."""
    x = _square(x)
    if i < 0:
        raise ValueError("degree must be nonnegative")
    powers = [np.eye(x.shape[0])]
    for _ in range(i):
        powers.append(powers[-1] @ x)
    flat = np.stack([p.ravel() for p in powers])
    return flat @ flat.T


@dataclass(frozen=True)
class OracleResult:
    polynomial: Polynomial
    residual: float
    # smallest eigenvalue of the normalised Gram matrix at each tested degree
    spectra_min: tuple[float, ...]
    threshold: float


def _normalised_powers(x: np.ndarray, count: int):
    """Unit-Frobenius-norm powers P_k with X^k = scale[k] P_k.

    A zero power ends the sequence early and sets the returned flag.
    """
    n = x.shape[0]
    p = np.eye(n) / np.sqrt(n)
    powers, scales = [p], [np.sqrt(n)]
    for _ in range(count):
        q = x @ powers[-1]
        nq = np.linalg.norm(q)
        if nq == 0.0:
            return powers, scales, True
        powers.append(q / nq)
        scales.append(scales[-1] * nq)
    return powers, scales, False


def minimal_polynomial_details(x, tol: float = 1e-8) -> OracleResult:
    x = _square(x)
    n = x.shape[0]
    if n > MAX_DIM:
        raise ValueError(f"oracle is meant for n <= {MAX_DIM}, got {n}")
    powers, scales, _ = _normalised_powers(x, n)
    threshold = n * EPS * 1e3
    mins = []
    xnorm = np.linalg.norm(x)
    flat = np.stack([p.ravel() for p in powers])
    for r in range(1, n + 1):
        if r >= len(powers):
            # X^r vanished exactly, so x^r annihilates and nothing smaller did
            coeffs = np.zeros(r + 1)
            coeffs[-1] = 1.0
            poly = Polynomial(coeffs)
            return OracleResult(poly, 0.0, tuple(mins), threshold)
        a = flat[: r + 1]
        g = a @ a.T
        w, v = np.linalg.eigh(g)
        thr = threshold * w[-1]
        mins.append(float(w[0]))
        if thr / 10.0 < w[0] < thr * 10.0:
            raise RankDecisionAmbiguous(
                f"smallest Gram eigenvalue {w[0]:.3e} at degree {r} is within a factor 10 of the threshold {thr:.3e}"
            )
        if w[0] >= thr:
            continue
        if r > 1 and w[1] <= thr * 10.0:
            raise RankDecisionAmbiguous(f"kernel of the Gram matrix at degree {r} is not one-dimensional")
        kernel = v[:, 0]
        if abs(kernel[-1]) < np.sqrt(thr):
            raise RankDecisionAmbiguous(f"kernel vector at degree {r} has a vanishing leading entry")
        # polish the direction: least squares against the leading power
        sol, *_ = np.linalg.lstsq(a[:r].T, -a[r], rcond=None)
        kernel = np.append(sol, 1.0)
        coeffs = kernel / np.asarray(scales[: r + 1])
        coeffs = coeffs / coeffs[-1]
        poly = Polynomial(coeffs)
        resid = float(np.linalg.norm(poly.at_matrix(x)))
        if resid > tol * (1.0 + xnorm**r):
            raise RankDecisionAmbiguous(
                f"degree-{r} candidate leaves residual {resid:.3e} above {tol * (1.0 + xnorm**r):.3e}"
            )
        return OracleResult(poly, resid, tuple(mins), threshold)
    raise RankDecisionAmbiguous("no rank drop found up to the matrix dimension")


def minimal_polynomial_oracle(x, tol: float = 1e-8) -> Polynomial:
    """Monic minimal polynomial of a square matrix of size at most 16."""
    return minimal_polynomial_details(x, tol).polynomial


def characteristic_polynomial(x) -> Polynomial:
    """Faddeev-LeVerrier recurrence; exact on small integer matrices."""
    x = _square(x)
    n = x.shape[0]
    coeffs = np.zeros(n + 1)
    coeffs[n] = 1.0
    m = np.zeros_like(x)
    eye = np.eye(n)
    for k in range(1, n + 1):
        m = x @ m + coeffs[n - k + 1] * eye
        coeffs[n - k] = -np.trace(x @ m) / k
    return Polynomial(coeffs)
