"""Jordan structure and Cayley transform of skew-Hamiltonian matrices, and
singular values of 3x3 matrices through traceless symmetric 4x4 matrices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .closed_form import DEFAULT_BRANCH_TOL, minpoly_skew_hamiltonian, minpoly_symmetric
from .errors import ConsistencyViolation, ScalarInput, SpectrumContainsMinusOne
from .families import SkewHamiltonianParams, SymmetricParams
from .polynomial import Polynomial, real_roots
from .quaternion import as_vector


def _skew_ham_args(b, p, c, d):
    return float(b), as_vector(p), float(c), float(d)


# ------------------------------------------------------------- Jordan structure


@dataclass(frozen=True)
class RankCertificate:
    rank: int
    # 1-based indices of the principal 2x2 minor of Y^T Y that certifies rank >= 2
    minor: tuple[int, int]
    minor_value: float
    gram: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class JordanReport:
    # (eigenvalue, algebraic multiplicity); complex pairs appear as complex numbers
    eigenvalues: tuple[tuple[complex, int], ...]
    blocks: tuple[tuple[complex, tuple[int, ...]], ...]
    diagonalizable: bool
    mu_squared: float
    mu: complex
    characteristic_polynomial: Polynomial
    minimal_polynomial: Polynomial
    certificate: RankCertificate | None = None

    def as_dict(self) -> dict:
        def num(z):
            z = complex(z)
            return z.real if z.imag == 0 else [z.real, z.imag]

        out = {
            "eigenvalues": [{"value": num(v), "multiplicity": m} for v, m in self.eigenvalues],
            "blocks": [{"eigenvalue": num(v), "sizes": list(s)} for v, s in self.blocks],
            "diagonalizable": self.diagonalizable,
            "mu_squared": self.mu_squared,
            "characteristic_polynomial": self.characteristic_polynomial.as_list(),
            "minimal_polynomial": self.minimal_polynomial.as_list(),
        }
        if self.certificate is not None:
            out["rank_certificate"] = {
                "rank": self.certificate.rank,
                "minor": list(self.certificate.minor),
                "minor_value": self.certificate.minor_value,
            }
        return out


def skew_hamiltonian_charpoly(b: float, mu_squared: float) -> Polynomial:
    """x^4 - 4b x^3 + (6b^2 - 2mu^2) x^2 + (4b mu^2 - 4b^3) x + b^4 + mu^4 - 2 mu^2 b^2."""
    m2 = mu_squared
    return Polynomial([b**4 + m2 * m2 - 2 * m2 * b * b, 4 * b * m2 - 4 * b**3, 6 * b * b - 2 * m2, -4 * b, 1.0])


def shifted_gram(p, c: float, d: float) -> np.ndarray:
    """Y^T Y for Y = W - bI = p (x) j + 1 (x) (c i + d k), in closed form."""
    p1, p2, p3 = as_vector(p)
    th = p1 * p1 + p2 * p2 + p3 * p3 + c * c + d * d
    return np.array(
        [
            [th - 2 * c * p3 + 2 * d * p1, 2 * c * p2, -2 * c * p1 - 2 * d * p3, 2 * d * p2],
            [2 * c * p2, th + 2 * c * p3 + 2 * d * p1, 2 * d * p2, 2 * d * p3 - 2 * c * p1],
            [-2 * c * p1 - 2 * d * p3, 2 * d * p2, th + 2 * c * p3 - 2 * d * p1, -2 * c * p2],
            [2 * d * p2, 2 * d * p3 - 2 * c * p1, -2 * c * p2, th - 2 * c * p3 - 2 * d * p1],
        ]
    )


def verify_rank_two(b, p, c, d, tol: float = DEFAULT_BRANCH_TOL) -> RankCertificate:
    """Certify rank(W - bI) = 2 when ||p||^2 = c^2 + d^2.

    The certificate is the largest principal 2x2 minor of Y^T Y; a rank below
    two is impossible for non-scalar W, so observing one means a bug here.
    """
    b, p, c, d = _skew_ham_args(b, p, c, d)
    theta2 = float(p @ p) + c * c + d * d
    if theta2 <= tol:
        raise ScalarInput("W is scalar; the rank statement needs a non-scalar matrix")
    mu2 = float(p @ p) - c * c - d * d
    if abs(mu2) > tol * max(1.0, theta2):
        raise ValueError("rank-two certificate applies only when ||p||^2 = c^2 + d^2")
    gram = shifted_gram(p, c, d)
    w = SkewHamiltonianParams(b, p, c, d).to_matrix()
    y = w - b * np.eye(4)
    if not np.allclose(gram, y.T @ y, rtol=0.0, atol=1e-10 * max(1.0, theta2)):
        raise ConsistencyViolation("closed-form Y^T Y disagrees with the product")
    best, best_val = None, 0.0
    for i, j in itertools.combinations(range(4), 2):
        val = gram[i, i] * gram[j, j] - gram[i, j] * gram[j, i]
        if abs(val) > abs(best_val):
            best, best_val = (i + 1, j + 1), float(val)
    if best is None or abs(best_val) <= tol * theta2 * theta2:
        raise ConsistencyViolation("every principal 2x2 minor of Y^T Y vanished for a non-scalar W")
    sv = np.linalg.svd(y, compute_uv=False)
    rank = int(np.sum(sv > 1e-8 * max(1.0, sv[0])))
    if rank != 2:
        raise ConsistencyViolation(f"numerical rank of W - bI is {rank}, expected 2")
    return RankCertificate(rank, best, best_val, gram)


def jordan_skew_hamiltonian(b, p, c, d, tol: float = DEFAULT_BRANCH_TOL) -> JordanReport:
    b, p, c, d = _skew_ham_args(b, p, c, d)
    theta2 = float(p @ p) + c * c + d * d
    if theta2 <= tol * max(1.0, abs(b)) ** 2:
        raise ScalarInput("W is scalar (p, c, d all zero)")
    mu2 = float(p @ p) - c * c - d * d
    charpoly = skew_hamiltonian_charpoly(b, mu2)
    minpoly = minpoly_skew_hamiltonian(b, p, c, d, tol)
    if abs(mu2) <= tol * max(1.0, theta2):
        cert = verify_rank_two(b, p, c, d, tol)
        return JordanReport(
            eigenvalues=((b, 4),),
            blocks=((b, (2, 2)),),
            diagonalizable=False,
            mu_squared=mu2,
            mu=0.0,
            characteristic_polynomial=charpoly,
            minimal_polynomial=minpoly,
            certificate=cert,
        )
    mu = np.sqrt(mu2) if mu2 > 0 else 1j * np.sqrt(-mu2)
    hi, lo = b + mu, b - mu
    if mu2 < 0:
        hi, lo = complex(hi), complex(lo)
    return JordanReport(
        eigenvalues=((hi, 2), (lo, 2)),
        blocks=((hi, (1, 1)), (lo, (1, 1))),
        diagonalizable=True,
        mu_squared=mu2,
        mu=mu,
        characteristic_polynomial=charpoly,
        minimal_polynomial=minpoly,
    )


# ------------------------------------------------------------ Cayley transform


@dataclass(frozen=True)
class CayleyCoefficients:
    """psi(A) = c0 I + c1 A."""

    c0: float
    c1: float

    def apply(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=float)
        return self.c0 * np.eye(a.shape[0]) + self.c1 * a

    def transform_params(self, params: SkewHamiltonianParams) -> SkewHamiltonianParams:
        """Parameters of psi(A); the transform stays inside the family."""
        return SkewHamiltonianParams(
            self.c0 + self.c1 * params.b, self.c1 * params.p.as_array(), self.c1 * params.c, self.c1 * params.d
        )


def cayley_skew_hamiltonian(b, p, c, d, tol: float = 1e-12):
    """Cayley transform (I - A)(I + A)^-1 of a skew-Hamiltonian A.

    Returns the coefficients and the resulting matrix.  Raises
    SpectrumContainsMinusOne when -1 is an eigenvalue, i.e. when
    2b + 1 + kappa = (b + 1)^2 - mu^2 vanishes.
    """
    b, p, c, d = _skew_ham_args(b, p, c, d)
    kappa = b * b - float(p @ p) + c * c + d * d
    denom = 2 * b + 1 + kappa
    scale = max(1.0, abs(2 * b + 1), abs(kappa))
    if abs(denom) <= tol * scale:
        raise SpectrumContainsMinusOne(f"-1 is an eigenvalue (2b + 1 + kappa = {denom:.3e})")
    coeffs = CayleyCoefficients((2 * b + 1 - kappa) / denom, -2.0 / denom)
    a = SkewHamiltonianParams(b, p, c, d).to_matrix()
    return coeffs, coeffs.apply(a)


# -------------------------------------------------------- 3x3 singular values


@dataclass(frozen=True)
class SingularTriple:
    sigma1: float
    sigma2: float
    sigma3: float
    tau: int

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.sigma1, self.sigma2, self.sigma3)


RANK_ONE = "x²−c²"
EQUAL_PAIR_SINGULAR = "x³+cx"
ALL_EQUAL = "x²−2lx−λ²"

SVD_CASES = {
    "zero": "Y = 0",
    RANK_ONE: "sigma2 = sigma3 = 0 != sigma1",
    EQUAL_PAIR_SINGULAR: "sigma1 = sigma2 != 0 = sigma3",
    ALL_EQUAL: "sigma1 = sigma2 = sigma3 != 0",
    "quartic-rank-2": "rank 2 with sigma1 != sigma2",
    "cubic-s1=s2!=s3": "tau != 0, sigma1 = sigma2 != sigma3",
    "cubic-s2=s3!=s1": "tau != 0, sigma2 = sigma3 != sigma1",
    "quartic": "distinct nonzero singular values",
}


def _multiset(roots: np.ndarray) -> np.ndarray:
    """Spread the distinct roots of the minimal polynomial to four eigenvalues using trace zero."""
    n = len(roots)
    if n == 4:
        return roots
    if n == 3:
        total = roots.sum()
        dup = int(np.argmin(np.abs(total + roots)))
        return np.sort(np.append(roots, roots[dup]))[::-1]
    if n == 2:
        r1, r2 = roots
        m1 = int(round(-4.0 * r2 / (r1 - r2)))
        m1 = min(3, max(1, m1))
        return np.array([r1] * m1 + [r2] * (4 - m1))
    return np.zeros(4)


def symmetric_eigenvalues(p, q, r, tol: float = DEFAULT_BRANCH_TOL):
    """Descending eigenvalues of p(x)i + q(x)j + r(x)k from its closed-form minimal polynomial."""
    poly, rep = minpoly_symmetric(0.0, p, q, r, tol)
    if rep.branch == "scalar":
        return np.zeros(4), rep
    return _multiset(real_roots(poly)), rep


def singular_values_3x3(y, tol: float = DEFAULT_BRANCH_TOL):
    """Singular values and determinant sign of a 3x3 matrix, with a case label.

    Uses the eigenvalues of the symmetric 4x4 matrix built from the columns
    of ``y``; those are sigma1 + sigma2 + tau sigma3 and the three sign flips.
    """
    y = np.asarray(y, dtype=float)
    if y.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {y.shape}")
    lam, rep = symmetric_eigenvalues(y[:, 0], y[:, 1], y[:, 2], tol)
    s1 = 0.5 * (lam[0] + lam[1])
    s2 = 0.5 * (lam[0] + lam[2])
    s3_signed = 0.5 * (lam[0] + lam[3])
    scale = max(1.0, float(np.linalg.norm(y)))
    det = float(np.linalg.det(y))
    tau = 0 if abs(det) <= tol * scale**3 else int(np.sign(det))
    triple = SingularTriple(max(s1, 0.0), max(s2, 0.0), abs(s3_signed), tau)
    branch = rep.branch
    if branch == "scalar":
        label = "zero"
    elif branch == "quadratic-rank-one":
        label = RANK_ONE
    elif branch == "quadratic-l":
        label = ALL_EQUAL
    elif branch.startswith("cubic-") and branch != "cubic-unlisted":
        label = EQUAL_PAIR_SINGULAR
    elif branch == "cubic-unlisted":
        label = "cubic-s1=s2!=s3" if abs(s1 - s2) <= abs(s2 - triple.sigma3) else "cubic-s2=s3!=s1"
    else:
        label = "quartic-rank-2" if tau == 0 else "quartic"
    return triple, label


def symmetric_from_columns(y) -> SymmetricParams:
    y = np.asarray(y, dtype=float)
    return SymmetricParams(0.0, y[:, 0], y[:, 1], y[:, 2])
