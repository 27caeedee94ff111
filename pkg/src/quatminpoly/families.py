"""Membership tests for the structured 4x4 families and their H (x) H parameters.

Every linear family is a subspace of H (x) H spanned by a few basis tensors,
so its parameters are just entries of the coefficient array returned by
:func:`matrix_to_tensor`.  Rotations are product tensors ``u (x) v`` and are
recovered from the rank-one coefficient array.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from .errors import NotInFamily, RankDeficientFactorization
from .quaternion import PureQuaternion, Quaternion
from .tensor import J4, R4, TensorElement, matrix_to_tensor, tensor_to_matrix

DEFAULT_TOL = 1e-9


class FamilyTag(enum.Enum):
    SKEW_SYMMETRIC = "skew-symmetric"
    HAMILTONIAN = "hamiltonian"
    PERSKEWSYMMETRIC = "perskew"
    SYMMETRIC = "symmetric"
    SKEW_HAMILTONIAN = "skew-hamiltonian"
    SPECIAL_ORTHOGONAL = "so4"

    @property
    def title(self) -> str:
        return _TITLES[self]


_TITLES = {
    FamilyTag.SKEW_SYMMETRIC: "SkewSymmetric",
    FamilyTag.HAMILTONIAN: "Hamiltonian",
    FamilyTag.PERSKEWSYMMETRIC: "Perskewsymmetric",
    FamilyTag.SYMMETRIC: "Symmetric",
    FamilyTag.SKEW_HAMILTONIAN: "SkewHamiltonian",
    FamilyTag.SPECIAL_ORTHOGONAL: "SpecialOrthogonal",
}

FAMILY_ORDER = tuple(FamilyTag)


def _pure(v) -> PureQuaternion:
    return v if isinstance(v, PureQuaternion) else PureQuaternion.from_array(v)


def _quat(q) -> Quaternion:
    return q if isinstance(q, Quaternion) else Quaternion.from_array(q)


def _vec(c: np.ndarray, rows, cols) -> PureQuaternion:
    return PureQuaternion.from_array(c[rows, cols])


class _Params:
    tag: FamilyTag

    def to_tensor(self) -> TensorElement:
        raise NotImplementedError

    def to_matrix(self) -> np.ndarray:
        return tensor_to_matrix(self.to_tensor())

    def values(self) -> np.ndarray:
        """All parameters flattened, used for tolerance scaling."""
        raise NotImplementedError

    def scale(self) -> float:
        return float(np.linalg.norm(self.values()))

    def as_dict(self) -> dict:
        out = {}
        for name in self.__dataclass_fields__:
            if name == "tag":
                continue
            val = getattr(self, name)
            if isinstance(val, (Quaternion, PureQuaternion)):
                out[name] = [float(t) for t in val]
            else:
                out[name] = float(val)
        return out


@dataclass(frozen=True)
class SkewSymmetricParams(_Params):
    """``s (x) 1 + 1 (x) t``."""

    s: PureQuaternion
    t: PureQuaternion
    tag: FamilyTag = field(default=FamilyTag.SKEW_SYMMETRIC, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "s", _pure(self.s))
        object.__setattr__(self, "t", _pure(self.t))

    def to_tensor(self):
        c = np.zeros((4, 4))
        c[1:, 0] = self.s.as_array()
        c[0, 1:] = self.t.as_array()
        return TensorElement(c)

    def values(self):
        return np.concatenate([self.s.as_array(), self.t.as_array()])


@dataclass(frozen=True)
class HamiltonianParams(_Params):
    """``b (1 (x) j) + p (x) 1 + q (x) i + r (x) k``."""

    b: float
    p: PureQuaternion
    q: PureQuaternion
    r: PureQuaternion
    tag: FamilyTag = field(default=FamilyTag.HAMILTONIAN, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "b", float(self.b))
        for name in "pqr":
            object.__setattr__(self, name, _pure(getattr(self, name)))

    def to_tensor(self):
        c = np.zeros((4, 4))
        c[0, 2] = self.b
        c[1:, 0] = self.p.as_array()
        c[1:, 1] = self.q.as_array()
        c[1:, 3] = self.r.as_array()
        return TensorElement(c)

    def values(self):
        return np.concatenate([[self.b], self.p.as_array(), self.q.as_array(), self.r.as_array()])


@dataclass(frozen=True)
class PerskewParams(_Params):
    """``r (x) i + j (x) s + alpha (1 (x) i) + beta (j (x) 1)``, r in span{i,k}, s in span{j,k}."""

    r: PureQuaternion
    s: PureQuaternion
    alpha: float
    beta: float
    tag: FamilyTag = field(default=FamilyTag.PERSKEWSYMMETRIC, init=False, repr=False, compare=False)

    def __post_init__(self):
        r, s = _pure(self.r), _pure(self.s)
        if r.y != 0.0:
            raise ValueError("r must lie in span{i, k}")
        if s.x != 0.0:
            raise ValueError("s must lie in span{j, k}")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "beta", float(self.beta))

    def to_tensor(self):
        c = np.zeros((4, 4))
        c[1:, 1] = self.r.as_array()
        c[2, 1:] += self.s.as_array()
        c[0, 1] = self.alpha
        c[2, 0] = self.beta
        return TensorElement(c)

    def values(self):
        return np.concatenate([self.r.as_array(), self.s.as_array(), [self.alpha, self.beta]])


@dataclass(frozen=True)
class SymmetricParams(_Params):
    """``a (1 (x) 1) + p (x) i + q (x) j + r (x) k``."""

    a: float
    p: PureQuaternion
    q: PureQuaternion
    r: PureQuaternion
    tag: FamilyTag = field(default=FamilyTag.SYMMETRIC, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "a", float(self.a))
        for name in "pqr":
            object.__setattr__(self, name, _pure(getattr(self, name)))

    def to_tensor(self):
        c = np.zeros((4, 4))
        c[0, 0] = self.a
        c[1:, 1] = self.p.as_array()
        c[1:, 2] = self.q.as_array()
        c[1:, 3] = self.r.as_array()
        return TensorElement(c)

    def values(self):
        return np.concatenate([[self.a], self.p.as_array(), self.q.as_array(), self.r.as_array()])


@dataclass(frozen=True)
class SkewHamiltonianParams(_Params):
    """``b (1 (x) 1) + p (x) j + 1 (x) (c i + d k)``."""

    b: float
    p: PureQuaternion
    c: float
    d: float
    tag: FamilyTag = field(default=FamilyTag.SKEW_HAMILTONIAN, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "b", float(self.b))
        object.__setattr__(self, "p", _pure(self.p))
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "d", float(self.d))

    def to_tensor(self):
        c = np.zeros((4, 4))
        c[0, 0] = self.b
        c[1:, 2] = self.p.as_array()
        c[0, 1] = self.c
        c[0, 3] = self.d
        return TensorElement(c)

    def values(self):
        return np.concatenate([[self.b], self.p.as_array(), [self.c, self.d]])


@dataclass(frozen=True)
class SpecialOrthogonalParams(_Params):
    """``u (x) v`` with unit quaternions; (u, v) and (-u, -v) give the same matrix."""

    u: Quaternion
    v: Quaternion
    tag: FamilyTag = field(default=FamilyTag.SPECIAL_ORTHOGONAL, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "u", _quat(self.u))
        object.__setattr__(self, "v", _quat(self.v))

    def to_tensor(self):
        return TensorElement.product(self.u, self.v)

    def values(self):
        return np.concatenate([self.u.as_array(), self.v.as_array()])


FamilyParams = Union[
    SkewSymmetricParams,
    HamiltonianParams,
    PerskewParams,
    SymmetricParams,
    SkewHamiltonianParams,
    SpecialOrthogonalParams,
]

PARAM_TYPES = {
    FamilyTag.SKEW_SYMMETRIC: SkewSymmetricParams,
    FamilyTag.HAMILTONIAN: HamiltonianParams,
    FamilyTag.PERSKEWSYMMETRIC: PerskewParams,
    FamilyTag.SYMMETRIC: SymmetricParams,
    FamilyTag.SKEW_HAMILTONIAN: SkewHamiltonianParams,
    FamilyTag.SPECIAL_ORTHOGONAL: SpecialOrthogonalParams,
}


# ------------------------------------------------------------------ detection


def _as_mat4(m) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return m


def defect(m, tag: FamilyTag) -> float:
    """Largest entry of the residual of the family's defining relation."""
    m = _as_mat4(m)
    tag = FamilyTag(tag)
    if tag is FamilyTag.SKEW_SYMMETRIC:
        res = m.T + m
    elif tag is FamilyTag.SYMMETRIC:
        res = m.T - m
    elif tag is FamilyTag.HAMILTONIAN:
        res = m.T @ J4 + J4 @ m
    elif tag is FamilyTag.SKEW_HAMILTONIAN:
        res = m.T @ J4 - J4 @ m
    elif tag is FamilyTag.PERSKEWSYMMETRIC:
        res = m.T @ R4 + R4 @ m
    else:
        res = m.T @ m - np.eye(4)
        return max(float(np.max(np.abs(res))), abs(float(np.linalg.det(m)) - 1.0))
    return float(np.max(np.abs(res)))


def in_family(m, tag: FamilyTag, tol: float = DEFAULT_TOL) -> bool:
    m = _as_mat4(m)
    return defect(m, tag) <= tol * (1.0 + np.linalg.norm(m))


def detect_families(m, tol: float = DEFAULT_TOL) -> set[FamilyTag]:
    """Every family whose defining relation holds within ``tol (1 + ||M||_F)``."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    m = _as_mat4(m)
    return {tag for tag in FAMILY_ORDER if in_family(m, tag, tol)}


# ----------------------------------------------------------------- extraction


def so4_factor(m, tol: float = DEFAULT_TOL) -> tuple[Quaternion, Quaternion]:
    """Unit quaternions u, v with M = M_{u (x) v}.

    The coefficient array of a product tensor is the outer product of the
    two component vectors, so u is read off the column and v off the row
    through the largest entry.
    """
    m = _as_mat4(m)
    c = matrix_to_tensor(m).c
    i0, j0 = np.unravel_index(np.argmax(np.abs(c)), c.shape)
    if c[i0, j0] == 0.0:
        raise RankDeficientFactorization("zero matrix has no rotation factorisation")
    u = c[:, j0] / np.linalg.norm(c[:, j0])
    v = c[i0, :] / np.linalg.norm(c[i0, :])
    if c[i0, j0] < 0:
        v = -v
    first = np.flatnonzero(np.abs(u) > 1e-12)[0]
    if u[first] < 0:
        u, v = -u, -v
    rebuilt = tensor_to_matrix(TensorElement(np.outer(u, v)))
    err = np.linalg.norm(rebuilt - m)
    if err > tol * (1.0 + np.linalg.norm(m)):
        raise RankDeficientFactorization(f"coefficient array is not rank one (reconstruction error {err:.3e})")
    return Quaternion.from_array(u), Quaternion.from_array(v)


def _params_from_coefficients(c: np.ndarray, tag: FamilyTag):
    if tag is FamilyTag.SKEW_SYMMETRIC:
        return SkewSymmetricParams(_vec(c, slice(1, 4), 0), _vec(c, 0, slice(1, 4)))
    if tag is FamilyTag.HAMILTONIAN:
        return HamiltonianParams(c[0, 2], _vec(c, slice(1, 4), 0), _vec(c, slice(1, 4), 1), _vec(c, slice(1, 4), 3))
    if tag is FamilyTag.PERSKEWSYMMETRIC:
        r = PureQuaternion(c[1, 1], 0.0, c[3, 1])
        s = PureQuaternion(0.0, c[2, 2], c[2, 3])
        return PerskewParams(r, s, c[0, 1], c[2, 0])
    if tag is FamilyTag.SYMMETRIC:
        return SymmetricParams(c[0, 0], _vec(c, slice(1, 4), 1), _vec(c, slice(1, 4), 2), _vec(c, slice(1, 4), 3))
    if tag is FamilyTag.SKEW_HAMILTONIAN:
        return SkewHamiltonianParams(c[0, 0], _vec(c, slice(1, 4), 2), c[0, 1], c[0, 3])
    raise ValueError(f"{tag} is not a linear family")


def extract_params(m, tag: FamilyTag, tol: float = DEFAULT_TOL) -> FamilyParams:
    """Representation parameters of ``m`` as a member of ``tag``."""
    m = _as_mat4(m)
    tag = FamilyTag(tag)
    if not in_family(m, tag, tol):
        raise NotInFamily(f"matrix is not {tag.title} (defect {defect(m, tag):.3e})")
    if tag is FamilyTag.SPECIAL_ORTHOGONAL:
        u, v = so4_factor(m, tol)
        return SpecialOrthogonalParams(u, v)
    return _params_from_coefficients(matrix_to_tensor(m).c, tag)


def skew_hamiltonian_from_entries(m) -> SkewHamiltonianParams:
    """Closed-form entrywise reading of the skew-Hamiltonian parameters.

    Uses 1-based entry names X11, X14, ... in the comments to match the usual
    matrix notation.  Agrees with the coefficient projection on members.
    """
    x = _as_mat4(m)
    x11, x12, x14 = x[0, 0], x[0, 1], x[0, 3]
    x21, x22, x32 = x[1, 0], x[1, 1], x[2, 1]
    b = 0.5 * (x11 + x22)
    p = PureQuaternion(0.5 * (x32 - x14), 0.5 * (x11 - x22), 0.5 * (x12 + x21))
    c = 0.5 * (x12 - x21)
    d = 0.5 * (x14 + x32)
    return SkewHamiltonianParams(b, p, c, d)


def build_matrix(params: FamilyParams) -> np.ndarray:
    return params.to_matrix()
