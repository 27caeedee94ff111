"""Assemble analysis reports: detection, closed forms, oracle cross-check, applications.

Reports are plain dicts with a fixed key order so that serialising them is
deterministic.  The layout is described by ``report_schema.json``.
"""
from __future__ import annotations

import itertools

import numpy as np

from .applications import cayley_skew_hamiltonian, jordan_skew_hamiltonian, singular_values_3x3, symmetric_from_columns
from .clifford import (
    ALLOWED_GRADES,
    Multivector06,
    Octonion,
    blade_matrix,
    cl06_build,
    cl06_quadratic_check,
    octonion_annihilator,
    octonion_mul,
    omega,
    omega_product_annihilator,
    theta,
    theta_product_annihilator,
)
from .closed_form import DEFAULT_BRANCH_TOL, closed_form_minpoly
from .errors import QuatMinpolyError
from .families import DEFAULT_TOL, FAMILY_ORDER, FamilyTag, defect, detect_families, extract_params
from .oracle import minimal_polynomial_details
from .polynomial import Polynomial

SCHEMA_VERSION = 1
AGREEMENT_TOL = 1e-7


def polynomials_agree(a: Polynomial, b: Polynomial, atol: float = AGREEMENT_TOL) -> tuple[bool, float]:
    """Same degree and coefficients within ``atol`` elementwise."""
    if a.degree != b.degree:
        return False, float("inf")
    diff = max(abs(x - y) for x, y in zip(a.as_list(), b.as_list()))
    return diff <= atol, float(diff)


def plain(v):
    """Convert numpy and library values to JSON-ready builtins."""
    if isinstance(v, dict):
        return {str(k): plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [plain(x) for x in v]
    if isinstance(v, np.ndarray):
        return plain(v.tolist())
    if isinstance(v, (bool, np.bool_)):
        return bool(v)
    if isinstance(v, (np.integer, int)):
        return int(v)
    if isinstance(v, (np.floating, float)):
        return float(v)
    if isinstance(v, (complex, np.complexfloating)):
        return [float(v.real), float(v.imag)]
    if isinstance(v, Polynomial):
        return v.as_list()
    return v


def _oracle_section(m, tol: float) -> tuple[dict, Polynomial | None]:
    try:
        res = minimal_polynomial_details(m, tol=tol)
    except QuatMinpolyError as exc:
        return {"minimal_polynomial": None, "residual": None, "error": str(exc)}, None
    return {"minimal_polynomial": res.polynomial.as_list(), "residual": float(res.residual), "error": None}, res.polynomial


def _verified_entry(family: str, params: dict, poly: Polynomial, branch: str, quantities, margins, oracle) -> dict:
    entry = {
        "family": family,
        "params": plain(params),
        "minimal_polynomial": poly.as_list(),
        "branch": branch,
        "quantities": plain(quantities),
        "margins": plain(margins),
    }
    if oracle is None:
        entry["agreement"] = "unverified"
        entry["max_coefficient_difference"] = None
    else:
        ok, diff = polynomials_agree(poly, oracle)
        entry["agreement"] = "match" if ok else "mismatch"
        entry["max_coefficient_difference"] = diff if np.isfinite(diff) else None
    entry["error"] = None
    return entry


def _error_entry(family: str, exc: Exception) -> dict:
    return {
        "family": family,
        "params": None,
        "minimal_polynomial": None,
        "branch": None,
        "quantities": {},
        "margins": {},
        "agreement": "error",
        "max_coefficient_difference": None,
        "error": f"{type(exc).__name__}: {exc}",
    }


def _overall(entries: list[dict], oracle_poly: Polynomial | None) -> tuple[str, list | None]:
    if not entries:
        return "oracle-only", (oracle_poly.as_list() if oracle_poly is not None else None)
    verdicts = {e["agreement"] for e in entries}
    if verdicts == {"match"}:
        return "match", entries[0]["minimal_polynomial"]
    return "mismatch", (oracle_poly.as_list() if oracle_poly is not None else None)


def _skeleton(mode: str, source: str, dimension: int, tol: float, branch_tol: float) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": mode,
        "input": {"source": source, "dimension": dimension},
        "tolerances": {"membership": tol, "branch": branch_tol, "agreement": AGREEMENT_TOL},
        "families": [],
        "closed_forms": [],
        "oracle": None,
        "minimal_polynomial": None,
        "verdict": None,
    }


def analyze_matrix(
    m,
    source: str = "<memory>",
    family: str = "auto",
    tol: float = DEFAULT_TOL,
    branch_tol: float = DEFAULT_BRANCH_TOL,
    jordan: bool = False,
    cayley: bool = False,
    mode: str = "matrix",
    dimension: int | None = None,
) -> dict:
    """Full report for a 4x4 matrix.

    With ``family`` other than "auto" only that family is analysed and a
    NotInFamily error is raised when the matrix is not a member.
    """
    m = np.asarray(m, dtype=float)
    rep = _skeleton(mode, source, dimension or m.shape[0], tol, branch_tol)
    if family == "auto":
        found = detect_families(m, tol)
        tags = [t for t in FAMILY_ORDER if t in found]
    else:
        tag = FamilyTag(family)
        extract_params(m, tag, tol)  # raises NotInFamily with the defect
        tags = [tag]
    rep["families"] = [t.title for t in tags]
    oracle, oracle_poly = _oracle_section(m, 1e-8)
    rep["oracle"] = oracle
    for tag in tags:
        try:
            params = extract_params(m, tag, tol)
            poly, br = closed_form_minpoly(params, branch_tol)
        except QuatMinpolyError as exc:
            rep["closed_forms"].append(_error_entry(tag.title, exc))
            continue
        rep["closed_forms"].append(
            _verified_entry(tag.title, params.as_dict(), poly, br.branch, br.quantities, br.margins, oracle_poly)
        )
    rep["verdict"], rep["minimal_polynomial"] = _overall(rep["closed_forms"], oracle_poly)
    if jordan or cayley:
        sh = _skew_hamiltonian_params(m, tol)
        if jordan:
            rep["jordan"] = _jordan_section(sh)
        if cayley:
            rep["cayley"] = _cayley_section(sh, m)
    return plain(rep)


def _skew_hamiltonian_params(m, tol):
    try:
        return extract_params(m, FamilyTag.SKEW_HAMILTONIAN, tol)
    except QuatMinpolyError as exc:
        return exc


def _jordan_section(sh) -> dict:
    if isinstance(sh, Exception):
        return {"error": f"{type(sh).__name__}: {sh}"}
    try:
        out = jordan_skew_hamiltonian(sh.b, sh.p, sh.c, sh.d).as_dict()
    except QuatMinpolyError as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}
    out["error"] = None
    return plain(out)


def _cayley_section(sh, m) -> dict:
    if isinstance(sh, Exception):
        return {"error": f"{type(sh).__name__}: {sh}"}
    try:
        coeffs, psi = cayley_skew_hamiltonian(sh.b, sh.p, sh.c, sh.d)
    except QuatMinpolyError as exc:
        return {"error": f"{type(exc).__name__}: {exc}"}
    eye = np.eye(4)
    residual = float(np.max(np.abs((eye + m) @ psi - (eye - m))))
    return {"c0": coeffs.c0, "c1": coeffs.c1, "matrix": plain(psi), "residual": residual, "error": None}


def analyze_svd3(y, source: str = "<memory>", tol: float = DEFAULT_TOL, branch_tol: float = DEFAULT_BRANCH_TOL) -> dict:
    """Singular values of a 3x3 matrix via the traceless symmetric 4x4 built from its columns."""
    y = np.asarray(y, dtype=float)
    x = symmetric_from_columns(y).to_matrix()
    rep = analyze_matrix(x, source, "symmetric", tol, branch_tol, mode="svd3", dimension=3)
    triple, label = singular_values_3x3(y, branch_tol)
    rep["svd"] = {
        "sigma": list(triple.as_tuple()),
        "tau": triple.tau,
        "case": label,
    }
    return plain(rep)


def multivector_from_matrix(x) -> Multivector06:
    """Blade coefficients of an 8x8 matrix; blades are orthogonal with squared norm 8."""
    x = np.asarray(x, dtype=float)
    coeffs = {}
    for grade in sorted(ALLOWED_GRADES):
        for blade in itertools.combinations(range(1, 7), grade):
            c = float(np.sum(blade_matrix(blade) * x)) / 8.0
            if c != 0.0:
                coeffs[blade] = c
    return Multivector06.from_dict(coeffs)


def analyze_clifford06(x, source: str = "<memory>", tol: float = DEFAULT_TOL) -> dict:
    x = np.asarray(x, dtype=float)
    rep = _skeleton("clifford06", source, 8, tol, DEFAULT_BRANCH_TOL)
    scale = max(1.0, float(np.linalg.norm(x)))
    if np.max(np.abs(x + x.T)) > tol * scale:
        raise ValueError("matrix is not antisymmetric")
    mv = multivector_from_matrix(x)
    rebuilt = cl06_build(mv)
    if np.max(np.abs(rebuilt - x)) > tol * scale:
        raise QuatMinpolyError("matrix is not spanned by grade 1, 2, 5, 6 blades")
    oracle, oracle_poly = _oracle_section(x, 1e-8)
    rep["oracle"] = oracle
    coeffs = {"".join(str(i) for i in k): v for k, v in mv.terms}
    quad = cl06_quadratic_check(mv)
    if quad is not None:
        rep["families"] = ["Cl06Quadratic"]
        rep["closed_forms"].append(
            _verified_entry("Cl06Quadratic", coeffs, quad, "scalar-square", {"lambda^2": mv.norm2()}, {}, oracle_poly)
        )
    rep["verdict"], rep["minimal_polynomial"] = _overall(rep["closed_forms"], oracle_poly)
    rep["clifford06"] = {"coefficients": coeffs, "quadratic": quad is not None}
    return plain(rep)


def analyze_octonion(a: Octonion, b: Octonion | None = None, source: str = "<argument>") -> dict:
    """omega(a) or omega(a) omega(b): quadratic annihilator, oracle check and theta counterpart."""
    rep = _skeleton("octonion", source, 8, DEFAULT_TOL, DEFAULT_BRANCH_TOL)
    if b is None:
        mat_l, mat_r = omega(a), theta(a)
        ann_l = ann_r = octonion_annihilator(a)
        prod = a
        params = {"a": a.as_array()}
    else:
        mat_l, mat_r = omega(a) @ omega(b), theta(a) @ theta(b)
        ann_l = omega_product_annihilator(a, b)
        ann_r = theta_product_annihilator(a, b)
        prod = octonion_mul(a, b)
        params = {"a": a.as_array(), "b": b.as_array()}
    oracle, oracle_poly = _oracle_section(mat_l, 1e-8)
    rep["oracle"] = oracle
    # a real product makes the matrix scalar; the annihilator then has a spare linear factor
    imag = prod.as_array()[1:]
    if np.linalg.norm(imag) <= 1e-12 * max(1.0, float(np.linalg.norm(prod.as_array()))):
        poly, branch = Polynomial([-prod.real, 1.0]), "real"
    else:
        poly, branch = ann_l, "quadratic"
    rep["families"] = ["OctonionLeft"]
    rep["closed_forms"].append(_verified_entry("OctonionLeft", params, poly, branch, {}, {}, oracle_poly))
    rep["verdict"], rep["minimal_polynomial"] = _overall(rep["closed_forms"], oracle_poly)
    rep["octonion"] = {
        "left_annihilator": ann_l.as_list(),
        "left_residual": float(np.max(np.abs(ann_l.at_matrix(mat_l)))),
        "right_annihilator": ann_r.as_list(),
        "right_residual": float(np.max(np.abs(ann_r.at_matrix(mat_r)))),
        "oracle_degree": None if oracle_poly is None else oracle_poly.degree,
    }
    return plain(rep)


def membership_defects(m) -> dict:
    return {t.value: float(defect(m, t)) for t in FAMILY_ORDER}
