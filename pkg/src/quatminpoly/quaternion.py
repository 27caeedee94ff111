"""Quaternion arithmetic and the R^3 vector identities used throughout.

Quaternions are stored as ``(w, x, y, z)`` over the basis ``1, i, j, k``.
Pure quaternions get their own type so that representation parameters which
must be purely imaginary cannot silently pick up a scalar part.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        w, x, y, z = (float(t) for t in np.asarray(a, dtype=float).reshape(4))
        return cls(w, x, y, z)

    @classmethod
    def from_parts(cls, scalar: float, vector) -> "Quaternion":
        x, y, z = np.asarray(vector, dtype=float).reshape(3)
        return cls(float(scalar), float(x), float(y), float(z))

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z], dtype=float)

    def __array__(self, dtype=None, copy=None):
        return self.as_array() if dtype is None else self.as_array().astype(dtype)

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    @property
    def real(self) -> float:
        return self.w

    @property
    def imag(self) -> "PureQuaternion":
        return PureQuaternion(self.x, self.y, self.z)

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> float:
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def normalized(self) -> "Quaternion":
        n = self.norm()
        if n == 0.0:
            raise ZeroDivisionError("cannot normalize the zero quaternion")
        return self * (1.0 / n)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        other = as_quaternion(other)
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        other = as_quaternion(other)
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, (Quaternion, PureQuaternion)):
            return quat_mul(self, as_quaternion(other))
        s = float(other)
        return Quaternion(s * self.w, s * self.x, s * self.y, s * self.z)

    def __rmul__(self, other):
        if isinstance(other, PureQuaternion):
            return quat_mul(as_quaternion(other), self)
        return self.__mul__(other)


@dataclass(frozen=True)
class PureQuaternion:
    """A quaternion with zero scalar part, interchangeable with a vector in R^3."""

    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, v) -> "PureQuaternion":
        x, y, z = (float(t) for t in np.asarray(v, dtype=float).reshape(3))
        return cls(x, y, z)

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __array__(self, dtype=None, copy=None):
        return self.as_array() if dtype is None else self.as_array().astype(dtype)

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def to_quaternion(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def dot(self, other) -> float:
        return float(np.dot(self.as_array(), np.asarray(other, dtype=float)))

    def cross(self, other) -> "PureQuaternion":
        return PureQuaternion.from_array(np.cross(self.as_array(), np.asarray(other, dtype=float)))

    def norm2(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z

    def norm(self) -> float:
        return float(np.sqrt(self.norm2()))

    def __add__(self, other: "PureQuaternion") -> "PureQuaternion":
        return PureQuaternion(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "PureQuaternion") -> "PureQuaternion":
        return PureQuaternion(self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "PureQuaternion":
        return PureQuaternion(-self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, PureQuaternion):
            return pure_mul(self, other)
        if isinstance(other, Quaternion):
            return quat_mul(self.to_quaternion(), other)
        s = float(other)
        return PureQuaternion(s * self.x, s * self.y, s * self.z)

    def __rmul__(self, other):
        return self.__mul__(other)


ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
BASIS = (ONE, I, J, K)


def as_quaternion(q) -> Quaternion:
    """Coerce a Quaternion, PureQuaternion, scalar or length-3/4 sequence."""
    if isinstance(q, Quaternion):
        return q
    if isinstance(q, PureQuaternion):
        return q.to_quaternion()
    a = np.asarray(q, dtype=float)
    if a.ndim == 0:
        return Quaternion(float(a))
    if a.shape == (3,):
        return Quaternion(0.0, *map(float, a))
    return Quaternion.from_array(a)


def as_vector(v) -> np.ndarray:
    """Coerce a PureQuaternion or 3-sequence to a float array of shape (3,)."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``a * b``."""
    a, b = as_quaternion(a), as_quaternion(b)
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def pure_mul(p: PureQuaternion, q: PureQuaternion) -> Quaternion:
    """Product of two pure quaternions, ``pq = -(p.q) + p x q``."""
    pv, qv = as_vector(p), as_vector(q)
    return Quaternion.from_parts(-float(np.dot(pv, qv)), np.cross(pv, qv))


def vector_triple(p, q, r) -> np.ndarray:
    """``p x (q x r)`` evaluated as ``(p.r) q - (p.q) r``."""
    p, q, r = as_vector(p), as_vector(q), as_vector(r)
    return np.dot(p, r) * q - np.dot(p, q) * r


def quat_mul_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Vectorised Hamilton product on trailing axes of length 4."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack(
        [
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        ],
        axis=-1,
    )
