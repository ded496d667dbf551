"""2x2 matrices over either scalar regime.

A :class:`Matrix2` stores its four entries row-major and works generically
over exact ``GaussianRational`` entries or builtin ``complex`` entries.  The
regime of a matrix is decided by its entries; mixing regimes in arithmetic
raises ``TypeError`` (inherited from the scalar layer).
"""

from __future__ import annotations

import cmath
import math

from .scalars import DEFAULT_TOL, GaussianRational


class SingularMatrix(ArithmeticError):
    """Raised when inverting a matrix whose determinant is (numerically) zero."""


class FullRank(ArithmeticError):
    """Raised by :func:`kernel_2x2` when no null vector exists within tolerance."""


class Matrix2:
    __slots__ = ("a11", "a12", "a21", "a22")

    def __init__(self, a11, a12, a21, a22):
        object.__setattr__(self, "a11", a11)
        object.__setattr__(self, "a12", a12)
        object.__setattr__(self, "a21", a21)
        object.__setattr__(self, "a22", a22)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix2 is immutable")

    @classmethod
    def from_rows(cls, rows) -> "Matrix2":
        (a11, a12), (a21, a22) = rows
        return cls(a11, a12, a21, a22)

    def entries(self):
        return (self.a11, self.a12, self.a21, self.a22)

    def rows(self):
        return ((self.a11, self.a12), (self.a21, self.a22))

    @property
    def is_exact(self) -> bool:
        return isinstance(self.a11, GaussianRational)

    def __mul__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def __add__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.a11 + other.a11,
            self.a12 + other.a12,
            self.a21 + other.a21,
            self.a22 + other.a22,
        )

    def __sub__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return Matrix2(
            self.a11 - other.a11,
            self.a12 - other.a12,
            self.a21 - other.a21,
            self.a22 - other.a22,
        )

    def __neg__(self):
        return Matrix2(-self.a11, -self.a12, -self.a21, -self.a22)

    def __pow__(self, n: int) -> "Matrix2":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = None
        base = self
        k = n
        while k:
            if k & 1:
                result = base if result is None else result * base
            base = base * base
            k >>= 1
        if result is None:
            one = GaussianRational.one() if self.is_exact else complex(1)
            zero = GaussianRational.zero() if self.is_exact else complex(0)
            return Matrix2(one, zero, zero, one)
        return result

    def scale(self, s) -> "Matrix2":
        return Matrix2(self.a11 * s, self.a12 * s, self.a21 * s, self.a22 * s)

    def det(self):
        return self.a11 * self.a22 - self.a12 * self.a21

    def trace(self):
        return self.a11 + self.a22

    def transpose(self) -> "Matrix2":
        return Matrix2(self.a11, self.a21, self.a12, self.a22)

    def conjugate(self) -> "Matrix2":
        return Matrix2(
            self.a11.conjugate(),
            self.a12.conjugate(),
            self.a21.conjugate(),
            self.a22.conjugate(),
        )

    def adjoint(self) -> "Matrix2":
        """Conjugate transpose, valid in both scalar regimes."""
        return Matrix2(
            self.a11.conjugate(),
            self.a21.conjugate(),
            self.a12.conjugate(),
            self.a22.conjugate(),
        )

    def apply(self, v):
        """Matrix-vector product on a 2-component sequence."""
        v0, v1 = v
        return (self.a11 * v0 + self.a12 * v1, self.a21 * v0 + self.a22 * v1)

    def inverse(self, tol: float = DEFAULT_TOL) -> "Matrix2":
        d = self.det()
        if self.is_exact:
            if d.is_zero:
                raise SingularMatrix("exact determinant is zero")
            inv_d = d.inverse()
        else:
            if abs(d) <= tol:
                raise SingularMatrix(f"determinant {d!r} within tolerance of zero")
            inv_d = 1 / d
        return Matrix2(
            self.a22 * inv_d,
            -self.a12 * inv_d,
            -self.a21 * inv_d,
            self.a11 * inv_d,
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def max_diff(self, other: "Matrix2") -> float:
        """Entrywise max-norm distance, for the floating regime."""
        return max(abs(a - b) for a, b in zip(self.entries(), other.entries()))

    def max_abs(self) -> float:
        return max(abs(e) for e in self.entries())

    def approx_eq(self, other: "Matrix2", tol: float = DEFAULT_TOL) -> bool:
        return self.max_diff(other) <= tol

    def to_complex(self) -> "Matrix2":
        """Explicit conversion of an exact matrix into the floating regime."""
        if not self.is_exact:
            return self
        return Matrix2(*(e.to_complex() for e in self.entries()))

    def __repr__(self):
        return f"Matrix2({self.a11!r}, {self.a12!r}, {self.a21!r}, {self.a22!r})"

    def __str__(self):
        return f"[[{self.a11}, {self.a12}], [{self.a21}, {self.a22}]]"


def exact_identity() -> Matrix2:
    one, zero = GaussianRational.one(), GaussianRational.zero()
    return Matrix2(one, zero, zero, one)


def complex_identity() -> Matrix2:
    return Matrix2(1 + 0j, 0j, 0j, 1 + 0j)


def complex_zero() -> Matrix2:
    return Matrix2(0j, 0j, 0j, 0j)


def commutator(x: Matrix2, y: Matrix2) -> Matrix2:
    return x * y - y * x


def anticommutator(x: Matrix2, y: Matrix2) -> Matrix2:
    return x * y + y * x


def eigenvalues(m: Matrix2) -> tuple[complex, complex]:
    """Closed-form eigenvalues of a floating 2x2 matrix, sorted by (re, im)."""
    tr = m.trace()
    disc = cmath.sqrt(tr * tr - 4 * m.det())
    lams = ((tr - disc) / 2, (tr + disc) / 2)
    return tuple(sorted(lams, key=lambda z: (z.real, z.imag)))


def kernel_2x2(m: Matrix2, tol: float = DEFAULT_TOL):
    """A unit-norm vector spanning the null space of a floating 2x2 matrix.

    The returned vector is phase-fixed so its first component of magnitude
    above ``tol`` is real positive, making outputs reproducible.  Raises
    :class:`FullRank` when the residual of the best candidate exceeds
    ``10 * tol``, i.e. when no null direction exists at that tolerance.
    """
    entries = m.entries()
    scale = max(abs(e) for e in entries)
    if scale <= tol:
        return (1 + 0j, 0j)  # zero matrix: pick the conventional basis vector
    rows = m.rows()
    r = max(rows, key=lambda row: max(abs(row[0]), abs(row[1])))
    v0, v1 = -r[1], r[0]
    n = math.sqrt(abs(v0) ** 2 + abs(v1) ** 2)
    v0, v1 = v0 / n, v1 / n
    w0, w1 = m.apply((v0, v1))
    residual = math.sqrt(abs(w0) ** 2 + abs(w1) ** 2)
    if residual > 10 * tol:
        raise FullRank(f"no null vector within tolerance (residual {residual:.3e})")
    lead = v0 if abs(v0) > tol else v1
    phase = lead.conjugate() / abs(lead)
    return (v0 * phase, v1 * phase)
