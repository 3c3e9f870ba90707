"""Builders for pairs of selfadjoint involutions in one-shifted form.

A pair is two block-diagonal involutions: the first is built from 2x2
rotation-reflection blocks r(omega_j), the second from a leading scalar 1
followed by blocks r(theta_j).  The offset of one index makes the sum a
tridiagonal matrix, which is what the finite-section machinery consumes.
"""

import math
from dataclasses import dataclass

import numpy as np

from .tridiag import DenseSymmetricMatrix, TridiagonalSymmetricMatrix


def _check_angle(eta):
    if not (0.0 < eta < math.pi):
        raise ValueError(f"angle {eta!r} not strictly inside (0, pi)")


@dataclass(frozen=True)
class AngleSpec:
    """Angle sequence: a finite head followed by a constant tail value."""

    head: tuple
    tail: float

    def __post_init__(self):
        head = tuple(float(a) for a in self.head)
        for a in head:
            _check_angle(a)
        _check_angle(self.tail)
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "tail", float(self.tail))

    def angle(self, j):
        """The j-th angle, 1-based."""
        if j < 1:
            raise ValueError("angle index is 1-based")
        return self.head[j - 1] if j <= len(self.head) else self.tail

    def sequence(self, count):
        """The first ``count`` angles as an array."""
        out = np.full(count, self.tail)
        k = min(count, len(self.head))
        out[:k] = self.head[:k]
        return out


@dataclass(frozen=True)
class PairFamily:
    """Parametric involution pair: A = diag(r(omega_j)), B = diag(1, r(theta_j))."""

    omega: AngleSpec
    theta: AngleSpec

    @classmethod
    def constant(cls, theta):
        return cls(AngleSpec((), theta), AngleSpec((), theta))

    @classmethod
    def head_omega(cls, omega, theta):
        """A = diag(r(omega), r(theta), ...), B = diag(1, r(theta), ...)."""
        return cls(AngleSpec((omega,), theta), AngleSpec((), theta))

    @classmethod
    def perturbed_heads(cls, theta, omega_head=(1.5, 2.0), theta_head=(2.5,)):
        """Both sequences start with fixed perturbation angles, then theta."""
        return cls(AngleSpec(tuple(omega_head), theta), AngleSpec(tuple(theta_head), theta))

    @classmethod
    def two_constant(cls, omega, theta):
        return cls(AngleSpec((), omega), AngleSpec((), theta))


@dataclass(frozen=True)
class GeneralPair:
    """Two dense selfadjoint involutions of equal order."""

    a: DenseSymmetricMatrix
    b: DenseSymmetricMatrix

    def __post_init__(self):
        if self.a.n != self.b.n:
            raise ValueError("pair members must have equal order")
        for m in (self.a, self.b):
            if not validate_involution(m, 1e-12):
                raise ValueError("pair member is not an involution at 1e-12")


def rotation_block(eta):
    """The 2x2 reflection [[cos, sin], [sin, -cos]]; an involution, det -1."""
    c, s = math.cos(eta), math.sin(eta)
    return np.array([[c, s], [s, -c]])


def validate_involution(m, tol):
    """True iff max-norm of m@m - I is at most tol."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    a = m.entries
    return float(np.max(np.abs(a @ a - np.eye(a.shape[0])))) <= tol


def build_sum_truncation(f, n):
    """Top-left n x n corner of the infinite tridiagonal matrix A + B.

    Entry pattern: (0,0) is 1 + cos(omega_1); for k >= 1 the diagonal holds
    cos(theta_k) - cos(omega_k) at 2k-1 and cos(omega_{k+1}) - cos(theta_k)
    at 2k, with off-diagonal entries alternating sin(omega_k), sin(theta_k).
    """
    if n < 2 or n % 2 != 0:
        raise ValueError("truncation order must be even and >= 2")
    half = n // 2
    om = f.omega.sequence(half)
    th = f.theta.sequence(half)
    diag = np.empty(n)
    diag[0] = 1.0 + math.cos(om[0])
    diag[1::2] = np.cos(th) - np.cos(om)
    diag[2::2] = np.cos(om[1:]) - np.cos(th[: half - 1])
    off = np.empty(n - 1)
    off[0::2] = np.sin(om)
    off[1::2] = np.sin(th[: half - 1])
    return TridiagonalSymmetricMatrix(diag=diag, offdiag=off)


def build_dense_pair(f, m):
    """Exact finite involution pair with m blocks in A (order 2m).

    B keeps the leading scalar 1 and m-1 full blocks; the trailing scalar is
    fixed to -1 so both matrices are involutions of equal order.
    """
    if m < 1:
        raise ValueError("block count must be >= 1")
    order = 2 * m
    a = np.zeros((order, order))
    for k in range(m):
        a[2 * k : 2 * k + 2, 2 * k : 2 * k + 2] = rotation_block(f.omega.angle(k + 1))
    b = np.zeros((order, order))
    b[0, 0] = 1.0
    for k in range(m - 1):
        b[2 * k + 1 : 2 * k + 3, 2 * k + 1 : 2 * k + 3] = rotation_block(f.theta.angle(k + 1))
    b[order - 1, order - 1] = -1.0
    return GeneralPair(a=DenseSymmetricMatrix(a), b=DenseSymmetricMatrix(b))


def paper_example_3x3(x):
    """The 3x3 pair whose sum has spectrum {-2 sqrt(x), 2 sqrt(x), 2}.

    B's lower block is the rotation-reflection with cosine 2x-1, so its
    off-diagonal entry is 2*sqrt(x*(1-x)); this is the involution-consistent
    form (the plain sqrt(x*(1-x)) variant squares to something other than I).
    """
    if not (0.0 < x < 1.0):
        raise ValueError("x must lie in (0, 1)")
    a = np.diag([1.0, 1.0, -1.0])
    off = 2.0 * math.sqrt(x * (1.0 - x))
    b = np.array(
        [
            [1.0, 0.0, 0.0],
            [0.0, 2.0 * x - 1.0, off],
            [0.0, off, 1.0 - 2.0 * x],
        ]
    )
    return GeneralPair(a=DenseSymmetricMatrix(a), b=DenseSymmetricMatrix(b))


def commutator(p):
    """AB - BA; skew-symmetric up to floating rounding."""
    a, b = p.a.entries, p.b.entries
    return a @ b - b @ a
