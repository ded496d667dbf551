"""Scalar arithmetic for the two numeric regimes of the toolkit.

The exact regime uses :class:`GaussianRational` (complex numbers with
arbitrary-precision rational real and imaginary parts) and backs all group
and presentation work, where every identity must hold bit-exactly.  The
floating regime uses the builtin ``complex`` type plus tolerance-based
comparison helpers and backs the pseudo-fermion operators, whose natural
frequency is generically irrational.

The two regimes never mix implicitly: arithmetic between a
``GaussianRational`` and a ``float``/``complex`` raises ``TypeError``.
Conversion is explicit via :meth:`GaussianRational.to_complex`.
"""

from __future__ import annotations

import math
import numbers
from fractions import Fraction

#: Default tolerance for floating-point comparisons.  Every identity checked
#: in the floating regime is exact in infinite precision, so the slack only
#: has to absorb roundoff.
DEFAULT_TOL = 1e-12


class GaussianRational:
    """A complex number with exact rational real and imaginary parts.

    Values are immutable, stored in lowest terms (``Fraction`` reduces on
    construction) and compared structurally.  The nonzero elements form a
    field: ``inverse`` exists iff the value is not zero.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def zero(cls) -> "GaussianRational":
        return cls(0, 0)

    @classmethod
    def one(cls) -> "GaussianRational":
        return cls(1, 0)

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(0, 1)

    @staticmethod
    def _coerce(value):
        if isinstance(value, GaussianRational):
            return value
        # Exact real scalars are welcome; floats and complex are not.
        if isinstance(value, numbers.Rational):
            return GaussianRational(value, 0)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    @property
    def is_zero(self) -> bool:
        return not self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm_sq()
        if not n:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return GaussianRational(self.re / n, -self.im / n)

    def times_i(self) -> "GaussianRational":
        """Multiply by the imaginary unit (cheap: swap and negate)."""
        return GaussianRational(-self.im, self.re)

    def times_minus_i(self) -> "GaussianRational":
        return GaussianRational(self.im, -self.re)

    def to_complex(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def approx_eq(x: complex, y: complex, tol: float = DEFAULT_TOL) -> bool:
    """Tolerance equality for floating scalars: ``|x - y| <= tol``."""
    return abs(x - y) <= tol


def require_finite(z: complex) -> complex:
    """Reject NaN/Inf values; every floating operation must stay finite."""
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite scalar: {z!r}")
    return z
