"""Quaternion arithmetic over exact rational or floating coefficients.

Coefficients are stored as given (``Fraction``, ``gmpy2.mpq``, ``int`` or
``float`` all work); the multiplication is the standard four-term expansion
with i*i = j*j = k*k = -1 and i*j = k, j*k = i, k*i = j.  The Euclidean norm
is multiplicative, which is what keeps the unit quaternions closed under
multiplication.
"""

from __future__ import annotations


class ZeroQuaternion(ArithmeticError):
    """Raised when inverting the zero quaternion."""


class Quaternion:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def one(cls) -> "Quaternion":
        return cls(1, 0, 0, 0)

    @classmethod
    def i(cls) -> "Quaternion":
        return cls(0, 1, 0, 0)

    @classmethod
    def j(cls) -> "Quaternion":
        return cls(0, 0, 1, 0)

    @classmethod
    def k(cls) -> "Quaternion":
        return cls(0, 0, 0, 1)

    def coeffs(self):
        return (self.a, self.b, self.c, self.d)

    def __mul__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.coeffs()
        a2, b2, c2, d2 = other.coeffs()
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.a + other.a, self.b + other.b, self.c + other.c, self.d + other.d
        )

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(
            self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d
        )

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __eq__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coeffs() == other.coeffs()

    def __hash__(self):
        return hash(self.coeffs())

    def __bool__(self):
        return any(self.coeffs())

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm_sq(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    def inverse(self) -> "Quaternion":
        n = self.norm_sq()
        if not n:
            raise ZeroQuaternion("zero quaternion has no inverse")
        return Quaternion(self.a / n, -self.b / n, -self.c / n, -self.d / n)

    def scale(self, s) -> "Quaternion":
        return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s)

    def __repr__(self):
        return f"Quaternion({self.a!r}, {self.b!r}, {self.c!r}, {self.d!r})"

    def __str__(self):
        parts = []
        for coeff, unit in zip(self.coeffs(), ("", "i", "j", "k")):
            if coeff:
                parts.append(f"{coeff}{unit}")
        return " + ".join(parts) if parts else "0"


#: The eight unit quaternions, in a fixed display order.
UNIT_LABELS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def units() -> tuple[Quaternion, ...]:
    one, i, j, k = Quaternion.one(), Quaternion.i(), Quaternion.j(), Quaternion.k()
    return (one, -one, i, -i, j, -j, k, -k)


def unit_label(q: Quaternion) -> str:
    for label, u in zip(UNIT_LABELS, units()):
        if q == u:
            return label
    raise ValueError(f"{q!r} is not a unit quaternion")
