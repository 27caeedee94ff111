"""The algebra isomorphism between H (x) H and real 4x4 matrices.

The product tensor ``p (x) q`` is sent to the matrix of ``h -> p h conj(q)``
acting on R^4 = H with ordered basis (1, i, j, k).  An element of H (x) H is
stored as a 4x4 coefficient array ``c`` with ``c[x, y]`` the coefficient of
``e_x (x) e_y``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .quaternion import Quaternion, as_quaternion, quat_mul_arrays

_EYE4 = np.eye(4)
# conj(e_x) = sign[x] * e_x
_CONJ_SIGN = np.array([1.0, -1.0, -1.0, -1.0])


@lru_cache(maxsize=None)
def _structure_constants() -> np.ndarray:
    """gamma[a, b, c] = coefficient of e_c in e_a e_b."""
    g = quat_mul_arrays(_EYE4[:, None, :], _EYE4[None, :, :])
    g.setflags(write=False)
    return g


@lru_cache(maxsize=None)
def _basis_table() -> np.ndarray:
    table = np.empty((4, 4, 4, 4))
    for x in range(4):
        for y in range(4):
            # column h of M is e_x * e_h * conj(e_y)
            left = quat_mul_arrays(_EYE4[x], _EYE4)
            table[x, y] = (quat_mul_arrays(left, _CONJ_SIGN[y] * _EYE4[y])).T
    table += 0.0  # drop negative zeros so the anchors compare bit-for-bit
    table.setflags(write=False)
    return table


def basis_matrix(x: int, y: int) -> np.ndarray:
    """Matrix of ``h -> e_x h conj(e_y)``; indices 0..3 stand for 1, i, j, k."""
    if not (0 <= x < 4 and 0 <= y < 4):
        raise IndexError(f"basis indices out of range: ({x}, {y})")
    return _basis_table()[x, y].copy()


class TensorElement:
    """Element of H (x) H as a 4x4 array of coefficients over ``e_x (x) e_y``."""

    __slots__ = ("c",)

    def __init__(self, c=None):
        self.c = np.zeros((4, 4)) if c is None else np.array(c, dtype=float).reshape(4, 4)

    @classmethod
    def product(cls, p, q) -> "TensorElement":
        """The product tensor ``p (x) q``."""
        return cls(np.outer(as_quaternion(p).as_array(), as_quaternion(q).as_array()))

    @classmethod
    def unit(cls, x: int, y: int) -> "TensorElement":
        c = np.zeros((4, 4))
        c[x, y] = 1.0
        return cls(c)

    def matrix(self) -> np.ndarray:
        return tensor_to_matrix(self)

    def conj(self) -> "TensorElement":
        return tensor_conj(self)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.c + other.c)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return TensorElement(self.c - other.c)

    def __neg__(self) -> "TensorElement":
        return TensorElement(-self.c)

    def __mul__(self, other):
        if isinstance(other, TensorElement):
            return tensor_mul(self, other)
        return TensorElement(float(other) * self.c)

    def __rmul__(self, other):
        return TensorElement(float(other) * self.c)

    def __eq__(self, other):
        return isinstance(other, TensorElement) and np.array_equal(self.c, other.c)

    def allclose(self, other: "TensorElement", atol: float = 1e-12) -> bool:
        return bool(np.allclose(self.c, other.c, rtol=0.0, atol=atol))

    def __repr__(self) -> str:
        names = "1ijk"
        terms = [
            f"{self.c[x, y]:+.6g}({names[x]}x{names[y]})"
            for x in range(4)
            for y in range(4)
            if self.c[x, y] != 0.0
        ]
        return "TensorElement(" + (" ".join(terms) or "0") + ")"


def tensor(p, q) -> TensorElement:
    """Shorthand for ``TensorElement.product(p, q)``."""
    return TensorElement.product(p, q)


def tensor_to_matrix(t: TensorElement) -> np.ndarray:
    c = t.c if isinstance(t, TensorElement) else np.asarray(t, dtype=float)
    return np.einsum("xy,xyab->ab", c, _basis_table())


def matrix_to_tensor(m) -> TensorElement:
    """Inverse of :func:`tensor_to_matrix` by trace projection.

    The sixteen basis matrices are signed permutation matrices, pairwise
    orthogonal under ``<A, B> = tr(A^T B)`` with squared norm 4.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got shape {m.shape}")
    return TensorElement(np.einsum("xyab,ab->xy", _basis_table(), m) / 4.0)


def tensor_mul(a: TensorElement, b: TensorElement) -> TensorElement:
    """Bilinear extension of ``(p (x) q)(r (x) s) = pr (x) qs``."""
    g = _structure_constants()
    return TensorElement(np.einsum("ab,cd,ace,bdf->ef", a.c, b.c, g, g))


def tensor_conj(t: TensorElement) -> TensorElement:
    """``conj(p) (x) conj(q)``, which corresponds to transposing the matrix."""
    return TensorElement(t.c * np.outer(_CONJ_SIGN, _CONJ_SIGN))


def is_tensor_of(m, t: TensorElement, tol: float = 1e-12) -> bool:
    """True when ``m`` is the matrix of ``t`` within ``tol (1 + ||m||_F)``."""
    m = np.asarray(m, dtype=float)
    err = np.linalg.norm(tensor_to_matrix(t) - m)
    return bool(err <= tol * (1.0 + np.linalg.norm(m)))


# the two bilinear-form matrices that define the structured families
J4 = basis_matrix(0, 2)
R4 = basis_matrix(2, 1)
J4.setflags(write=False)
R4.setflags(write=False)

__all__ = [
    "TensorElement",
    "Quaternion",
    "basis_matrix",
    "tensor",
    "tensor_to_matrix",
    "matrix_to_tensor",
    "tensor_mul",
    "tensor_conj",
    "is_tensor_of",
    "J4",
    "R4",
]
