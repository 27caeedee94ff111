"""Closed-form minimal polynomials for the six structured 4x4 families.

Each function returns the polynomial together with a :class:`BranchReport`
naming the case that fired, the geometric quantities it looked at and, for
every tested clause, a signed margin (nonnegative means the clause held).

Geometric conditions are polynomial in the parameters, so an equality of
degree ``d`` is accepted when its defect is at most ``tol * max(1, s)**d``
where ``s`` is the Euclidean norm of all parameters.

A few coefficients differ from the commonly printed statements of these
results; each is the version that agrees with the Gram oracle:

* perskewsymmetric cubic: ``x^3 - 2 lambda^2 x``;
* perskewsymmetric quartic constant: ``(alpha^2 - beta^2 + r.r - s.s)^2``;
* Hamiltonian cubic with ``b = p = 0``: ``k = r.r`` (equal to ``q.q`` there);
* Hamiltonian cubic with ``b = 0`` and ``p.r = 0``: requires ``p.(q x r) = 0``;
* rotations with one real factor: ``x^2 - 2 u0 v0 x + 1``, which covers
  both signs of the real factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .families import (
    FamilyParams,
    FamilyTag,
    HamiltonianParams,
    PerskewParams,
    SkewHamiltonianParams,
    SkewSymmetricParams,
    SpecialOrthogonalParams,
    SymmetricParams,
)
from .polynomial import Polynomial, poly_lcm, squarefree_part
from .quaternion import as_quaternion, as_vector

DEFAULT_BRANCH_TOL = 1e-9


@dataclass
class BranchReport:
    branch: str
    quantities: dict[str, Any] = field(default_factory=dict)
    margins: dict[str, float] = field(default_factory=dict)

    def as_dict(self) -> dict:
        def plain(v):
            if isinstance(v, np.ndarray):
                return v.tolist()
            if isinstance(v, (np.floating, np.integer)):
                return v.item()
            return v

        return {
            "branch": self.branch,
            "quantities": {k: plain(v) for k, v in self.quantities.items()},
            "margins": {k: float(v) for k, v in self.margins.items()},
        }


class _Clauses:
    """Evaluates and records tolerance-scaled clauses for one branch decision."""

    def __init__(self, report: BranchReport, tol: float, scale: float):
        self.report = report
        self.tol = tol
        self.base = max(1.0, scale)

    def _threshold(self, degree: int) -> float:
        return self.tol * self.base**degree

    def zero(self, name: str, value, degree: int) -> bool:
        mag = float(np.linalg.norm(value))
        margin = self._threshold(degree) - mag
        self.report.margins[f"{name} = 0"] = margin
        return margin >= 0

    def nonzero(self, name: str, value, degree: int) -> bool:
        mag = float(np.linalg.norm(value))
        margin = mag - self._threshold(degree)
        self.report.margins[f"{name} != 0"] = margin
        return margin > 0

    def equal(self, name: str, lhs, rhs, degree: int) -> bool:
        return self.zero(name, np.asarray(lhs) - np.asarray(rhs), degree)


def _poly(*ascending) -> Polynomial:
    return Polynomial(ascending)


def _scale(*parts) -> float:
    flat = np.concatenate([np.atleast_1d(np.asarray(p, dtype=float)) for p in parts])
    return float(np.linalg.norm(flat))


# --------------------------------------------------------------- skew-symmetric


def minpoly_skew_symmetric(s, t, tol: float = DEFAULT_BRANCH_TOL):
    s, t = as_vector(s), as_vector(t)
    ss, tt = float(s @ s), float(t @ t)
    rep = BranchReport("", {"s.s": ss, "t.t": tt})
    cl = _Clauses(rep, tol, _scale(s, t))
    s_zero = cl.zero("s", s, 1)
    t_zero = cl.zero("t", t, 1)
    if s_zero and t_zero:
        rep.branch = "zero"
        return _poly(0.0, 1.0), rep
    if s_zero or t_zero:
        rep.branch = "quadratic"
        lam2 = tt if s_zero else ss
        rep.quantities["lambda^2"] = lam2
        return _poly(lam2, 0.0, 1.0), rep
    lam2 = ss + tt
    rep.quantities["lambda^2"] = lam2
    if cl.equal("|s|^2 - |t|^2", ss, tt, 2):
        rep.branch = "cubic"
        rep.quantities["l"] = ss
        return _poly(0.0, lam2 + 2.0 * ss, 0.0, 1.0), rep
    rep.branch = "quartic"
    # l = |s||t| here; 4 l^2 - lambda^4 = -(|s|^2 - |t|^2)^2
    rep.quantities["l"] = float(np.sqrt(ss * tt))
    return _poly((ss - tt) ** 2, 0.0, 2.0 * lam2, 0.0, 1.0), rep


# ------------------------------------------------------------------ Hamiltonian


def hamiltonian_quartic(b, p, q, r) -> Polynomial:
    """Characteristic polynomial of a Hamiltonian matrix in terms of its parameters."""
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    omega = -b * b - p @ p + q @ q + r @ r
    rxq = np.cross(r, q)
    const = -(
        4 * b * b * (p @ p)
        + 8 * b * (p @ rxq)
        + 4 * (rxq @ rxq)
        - omega**2
        - 4 * (p @ q) ** 2
        - 4 * (p @ r) ** 2
    )
    return _poly(const, 0.0, -2.0 * omega, 0.0, 1.0)


def minpoly_hamiltonian(b, p, q, r, tol: float = DEFAULT_BRANCH_TOL):
    b = float(b)
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    pp, qq, rr = float(p @ p), float(q @ q), float(r @ r)
    pq, pr, qr = float(p @ q), float(p @ r), float(q @ r)
    qxr, rxp, pxq = np.cross(q, r), np.cross(r, p), np.cross(p, q)
    triple = float(p @ qxr)
    omega = -b * b - pp + qq + rr
    gram = np.array([[pp, pq, pr], [pq, qq, qr], [pr, qr, rr]])
    rep = BranchReport("", {"omega": omega, "b": b, "p.(q x r)": triple, "G": gram})
    cl = _Clauses(rep, tol, _scale([b], p, q, r))

    if cl.zero("(b, p, q, r)", np.concatenate([[b], p, q, r]), 1):
        rep.branch = "zero"
        return _poly(0.0, 1.0), rep

    def cubic(k, label):
        rep.branch = label
        rep.quantities["k"] = k
        return _poly(0.0, -(omega + 2.0 * k), 0.0, 1.0), rep

    quad = [
        cl.zero("quadratic: p.r", pr, 2),
        cl.zero("quadratic: p.q", pq, 2),
        cl.zero("quadratic: r x q + b p", -qxr + b * p, 2),
    ]
    if all(quad):
        rep.branch = "quadratic"
        return _poly(-omega, 0.0, 1.0), rep

    if cl.nonzero("b", b, 1):
        k = (triple - b * pp) / b
        y = np.array([[b * b + k, -pq, -pr], [-pq, rr - k, -qr], [-pr, -qr, qq - k]])
        rep.quantities["Y"] = y
        rep.quantities["k"] = k
        # the near-inverse test G Y = b p.(q x r) I, reported for reference
        rep.quantities["GY - b p.(q x r) I"] = gram @ y - b * triple * np.eye(3)
        # the defining vector system, multiplied through by b to stay polynomial
        scaled_k = triple - b * pp
        system = np.stack(
            [
                (b**3 + scaled_k) * p - b * pq * q - b * pr * r - b * b * qxr,
                -b * pq * p + (b * rr - scaled_k) * q - b * qr * r - b * b * rxp,
                -b * pr * p - b * qr * q + (b * qq - scaled_k) * r - b * b * pxq,
            ]
        )
        if cl.zero("cubic-1: b * system", system, 4):
            return cubic(k, "cubic-1")
        rep.branch = "quartic"
        return hamiltonian_quartic(b, p, q, r), rep

    if not cl.nonzero("r x q", qxr, 2):
        rep.branch = "quartic"
        return hamiltonian_quartic(b, p, q, r), rep

    if cl.zero("p", p, 1):
        if cl.zero("cubic-2: r.q", qr, 2) and cl.equal("cubic-2: q.q - r.r", qq, rr, 2):
            return cubic(rr, "cubic-2")
    elif cl.zero("p.(q x r)", triple, 3):
        pq_zero = cl.zero("p.q", pq, 2)
        pr_zero = cl.zero("p.r", pr, 2)
        if pq_zero and not pr_zero:
            if cl.zero("cubic-3: r.q", qr, 2) and cl.equal(
                "cubic-3: (r.r)^2 + (p.r)^2 - (q.q)(r.r)", rr * rr + pr * pr, qq * rr, 4
            ):
                return cubic(rr, "cubic-3")
        elif pr_zero and not pq_zero:
            if cl.zero("cubic-4: q.r", qr, 2) and cl.equal(
                "cubic-4: (q.q)^2 + (p.q)^2 - (q.q)(r.r)", qq * qq + pq * pq, qq * rr, 4
            ):
                return cubic(qq, "cubic-4")
        elif not pq_zero and not pr_zero and cl.nonzero("cubic-5: q.r", qr, 2):
            k = -pq * pr / qr
            rep.quantities["k"] = k
            others = [
                qq + pr * qr / pq,
                rr + pq * qr / pr,
                rr - (pq * pq + qr * qr) / qq,
                qq - (pr * pr + qr * qr) / rr,
            ]
            rep.quantities["cubic-5 candidates"] = np.array(others)
            if cl.zero("cubic-5: candidates - k", np.array(others) - k, 2):
                return cubic(k, "cubic-5")
    rep.branch = "quartic"
    return hamiltonian_quartic(b, p, q, r), rep


# ------------------------------------------------------------ perskewsymmetric


def minpoly_perskewsymmetric(r, s, alpha, beta, tol: float = DEFAULT_BRANCH_TOL):
    r, s = as_vector(r), as_vector(s)
    alpha, beta = float(alpha), float(beta)
    if abs(r[1]) > 0 or abs(s[0]) > 0:
        raise ValueError("r must lie in span{i, k} and s in span{j, k}")
    rr, ss = float(r @ r), float(s @ s)
    lam2 = rr + ss - alpha**2 - beta**2
    gap = alpha**2 - beta**2 + rr - ss
    rep = BranchReport("", {"lambda^2": lam2, "alpha^2 - beta^2 + r.r - s.s": gap})
    cl = _Clauses(rep, tol, _scale(r, s, [alpha, beta]))
    a0 = cl.zero("alpha", alpha, 1)
    b0 = cl.zero("beta", beta, 1)
    r0 = cl.zero("r", r, 1)
    s0 = cl.zero("s", s, 1)
    if a0 and b0 and r0 and s0:
        rep.branch = "zero"
        return _poly(0.0, 1.0), rep
    quadratic = None
    if a0 and not b0 and s0:
        quadratic = "quadratic-i"
    elif b0 and not a0 and r0:
        quadratic = "quadratic-ii"
    elif a0 and b0 and (r0 or s0):
        # r x j = 0 forces r = 0 inside span{i, k}; likewise s x i = 0
        quadratic = "quadratic-iii"
    if quadratic:
        rep.branch = quadratic
        return _poly(-lam2, 0.0, 1.0), rep
    if cl.zero("alpha^2 - beta^2 - s.s + r.r", gap, 2):
        rep.branch = "cubic"
        return _poly(0.0, -2.0 * lam2, 0.0, 1.0), rep
    rep.branch = "quartic"
    return _poly(gap * gap, 0.0, -2.0 * lam2, 0.0, 1.0), rep


# ------------------------------------------------------------ skew-Hamiltonian


def minpoly_skew_hamiltonian(b, p, c, d, tol: float = DEFAULT_BRANCH_TOL) -> Polynomial:
    return minpoly_skew_hamiltonian_report(b, p, c, d, tol)[0]


def minpoly_skew_hamiltonian_report(b, p, c, d, tol: float = DEFAULT_BRANCH_TOL):
    b, c, d = float(b), float(c), float(d)
    p = as_vector(p)
    kappa = b * b - float(p @ p) + c * c + d * d
    rep = BranchReport("", {"kappa": kappa})
    cl = _Clauses(rep, tol, _scale([b, c, d], p))
    if cl.zero("(p, c, d)", np.concatenate([p, [c, d]]), 1):
        rep.branch = "scalar"
        return _poly(-b, 1.0), rep
    rep.branch = "quadratic"
    return _poly(kappa, -2.0 * b, 1.0), rep


# ------------------------------------------------------------------- symmetric


def symmetric_quartic(p, q, r) -> Polynomial:
    """Characteristic polynomial of the traceless symmetric matrix p(x)i + q(x)j + r(x)k."""
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    lam2 = p @ p + q @ q + r @ r
    crosses = sum(float(v @ v) for v in (np.cross(q, r), np.cross(r, p), np.cross(p, q)))
    triple = float(p @ np.cross(q, r))
    return _poly(lam2 * lam2 - 4.0 * crosses, -8.0 * triple, -2.0 * lam2, 0.0, 1.0)


def _symmetric_traceless(p, q, r, cl: _Clauses, rep: BranchReport) -> Polynomial:
    pp, qq, rr = float(p @ p), float(q @ q), float(r @ r)
    lam2 = pp + qq + rr
    rep.quantities["lambda^2"] = lam2
    pxq, qxr, rxp = np.cross(p, q), np.cross(q, r), np.cross(r, p)
    triple = float(p @ qxr)
    rep.quantities["p.(q x r)"] = triple

    if cl.zero("rank one: all cross products", np.concatenate([pxq, qxr, rxp]), 2):
        rep.branch = "quadratic-rank-one"
        return _poly(-lam2, 0.0, 1.0)

    # p x q = l r, q x r = l p, r x p = l q; l is fixed by projecting onto the vectors
    ell = float((pxq @ r + qxr @ p + rxp @ q) / lam2)
    rep.quantities["l"] = ell
    if cl.nonzero("l", ell, 1) and cl.zero(
        "quadratic-l: cross products - l (r, p, q)",
        np.concatenate([pxq - ell * r, qxr - ell * p, rxp - ell * q]),
        2,
    ):
        rep.branch = "quadratic-l"
        return _poly(-lam2, -2.0 * ell, 1.0)

    cubic = _poly(0.0, -2.0 * lam2, 0.0, 1.0)
    if cl.zero("rank two: p.(q x r)", triple, 3):
        vecs = (p, q, r)
        names = "pqr"
        crosses = {}
        for a in range(3):
            b = (a + 1) % 3
            crosses[a] = np.cross(vecs[a], vecs[b])
        nonzero = [cl.nonzero(f"{names[a]} x {names[(a + 1) % 3]}", crosses[a], 2) for a in range(3)]
        count = sum(nonzero)
        if count == 1:
            # the surviving pair (u, w) is orthogonal and of equal length, third vector zero
            a = nonzero.index(True)
            u, w, z = vecs[a], vecs[(a + 1) % 3], vecs[(a + 2) % 3]
            tag = f"{names[a]}{names[(a + 1) % 3]}"
            if (
                cl.zero(f"cubic-A[{tag}]: {names[a]}.{names[(a + 1) % 3]}", u @ w, 2)
                and cl.equal(f"cubic-A[{tag}]: |{names[a]}|^2 - |{names[(a + 1) % 3]}|^2", u @ u, w @ w, 2)
                and cl.zero(f"cubic-A[{tag}]: {names[(a + 2) % 3]}", z, 1)
            ):
                rep.branch = "cubic-A"
                rep.quantities["alpha"] = float(u @ u)
                return cubic
        elif count == 2:
            # the parallel pair (u, w) is orthogonal to the third vector z, |u|^2 + |w|^2 = |z|^2
            a = nonzero.index(False)
            u, w, z = vecs[a], vecs[(a + 1) % 3], vecs[(a + 2) % 3]
            zn = names[(a + 2) % 3]
            if (
                cl.zero(f"cubic-B: {zn}.{names[a]}", z @ u, 2)
                and cl.zero(f"cubic-B: {zn}.{names[(a + 1) % 3]}", z @ w, 2)
                and cl.equal(f"cubic-B: |{names[a]}|^2 + |{names[(a + 1) % 3]}|^2 - |{zn}|^2", u @ u + w @ w, z @ z, 2)
            ):
                rep.branch = "cubic-B"
                rep.quantities["alpha"] = float(z @ z)
                return cubic
        elif count == 3:
            pq, pr, qr = float(p @ q), float(p @ r), float(q @ r)
            if cl.nonzero("cubic-C: p.q", pq, 2) and cl.nonzero("cubic-C: p.r", pr, 2) and cl.nonzero(
                "cubic-C: q.r", qr, 2
            ):
                alphas = np.array([rr - pr * qr / pq, qq - pq * qr / pr, pp - pr * pq / qr])
                rep.quantities["cubic-C alphas"] = alphas
                if cl.zero("cubic-C: alphas equal", alphas - alphas.mean(), 2):
                    rep.branch = "cubic-C"
                    rep.quantities["alpha"] = float(alphas[2])
                    return cubic

    quartic = symmetric_quartic(p, q, r)
    # symmetric matrices are diagonalisable, so the minimal polynomial is the
    # squarefree part of the characteristic one; repeated eigenvalues outside
    # the listed cases land here
    reduced = squarefree_part(quartic)
    if reduced.degree < 4:
        rep.branch = "cubic-unlisted" if reduced.degree == 3 else f"degree-{reduced.degree}-unlisted"
        return reduced
    rep.branch = "quartic"
    return quartic


def minpoly_symmetric(a, p, q, r, tol: float = DEFAULT_BRANCH_TOL):
    a = float(a)
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    rep = BranchReport("", {"a": a})
    cl = _Clauses(rep, tol, _scale([a], p, q, r))
    if cl.zero("(p, q, r)", np.concatenate([p, q, r]), 1):
        rep.branch = "scalar"
        return _poly(-a, 1.0), rep
    m0 = _symmetric_traceless(p, q, r, cl, rep)
    return (m0.shift(a) if a != 0.0 else m0), rep


# ------------------------------------------------------------------------ SO(4)


def minpoly_so4(u, v, tol: float = DEFAULT_BRANCH_TOL):
    u, v = as_quaternion(u).as_array(), as_quaternion(v).as_array()
    u0, v0 = float(u[0]), float(v[0])
    rep = BranchReport("", {"u0": u0, "v0": v0, "|u|": float(np.linalg.norm(u)), "|v|": float(np.linalg.norm(v))})
    cl = _Clauses(rep, tol, 1.0)
    im_u0 = cl.zero("Im(u)", u[1:], 1)
    im_v0 = cl.zero("Im(v)", v[1:], 1)
    if im_u0 and im_v0:
        sign = np.sign(u0 * v0)
        rep.branch = "identity" if sign > 0 else "minus-identity"
        return _poly(-sign, 1.0), rep
    if cl.zero("u0", u0, 1) and cl.zero("v0", v0, 1):
        rep.branch = "quadratic-involution"
        return _poly(-1.0, 0.0, 1.0), rep
    if im_u0 or im_v0:
        a = -2.0 * u0 * v0
        rep.branch = "quadratic-one-real"
        rep.quantities["a"] = a
        return _poly(1.0, a, 1.0), rep
    if cl.equal("u0 - v0", u0, v0, 1):
        a = 4.0 * u0 * v0 - 1.0
        rep.branch = "cubic-equal"
        rep.quantities["a"] = a
        return _poly(-1.0, a, -a, 1.0), rep
    if cl.equal("u0 + v0", u0, -v0, 1):
        a = -(1.0 + 4.0 * u0 * v0)
        rep.branch = "cubic-opposite"
        rep.quantities["a"] = a
        return _poly(1.0, a, a, 1.0), rep
    a = -4.0 * u0 * v0
    bq = 4.0 * u0 * u0 + 4.0 * v0 * v0 - 2.0
    rep.branch = "quartic"
    rep.quantities.update({"a": a, "b": bq})
    return _poly(1.0, a, bq, a, 1.0), rep


# ----------------------------------------------------------------- composites


def minpoly_block_diagonal(polys) -> Polynomial:
    """Minimal polynomial of a block-diagonal matrix from those of its blocks."""
    polys = list(polys)
    if not polys:
        raise ValueError("need at least one block")
    out = polys[0].monic()
    for p in polys[1:]:
        out = poly_lcm(out, p)
    return out


def closed_form_minpoly(params: FamilyParams, tol: float = DEFAULT_BRANCH_TOL):
    """Dispatch on the parameter type; returns ``(Polynomial, BranchReport)``."""
    tag = params.tag
    if tag is FamilyTag.SKEW_SYMMETRIC:
        return minpoly_skew_symmetric(params.s, params.t, tol)
    if tag is FamilyTag.HAMILTONIAN:
        return minpoly_hamiltonian(params.b, params.p, params.q, params.r, tol)
    if tag is FamilyTag.PERSKEWSYMMETRIC:
        return minpoly_perskewsymmetric(params.r, params.s, params.alpha, params.beta, tol)
    if tag is FamilyTag.SYMMETRIC:
        return minpoly_symmetric(params.a, params.p, params.q, params.r, tol)
    if tag is FamilyTag.SKEW_HAMILTONIAN:
        return minpoly_skew_hamiltonian_report(params.b, params.p, params.c, params.d, tol)
    if tag is FamilyTag.SPECIAL_ORTHOGONAL:
        return minpoly_so4(params.u, params.v, tol)
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


__all__ = [
    "BranchReport",
    "closed_form_minpoly",
    "hamiltonian_quartic",
    "minpoly_block_diagonal",
    "minpoly_hamiltonian",
    "minpoly_perskewsymmetric",
    "minpoly_skew_hamiltonian",
    "minpoly_skew_hamiltonian_report",
    "minpoly_skew_symmetric",
    "minpoly_so4",
    "minpoly_symmetric",
    "symmetric_quartic",
    "SkewSymmetricParams",
    "HamiltonianParams",
    "PerskewParams",
    "SymmetricParams",
    "SkewHamiltonianParams",
    "SpecialOrthogonalParams",
]
