"""Exact scalars: the field Q(sqrt 2) plus a complex layer on top.

Every amplitude in the two-qubit construction lives in Q(sqrt 2) + i*Q(sqrt 2),
so Born probabilities come out as exact rationals and the downstream
feasibility verdicts never hinge on floating-point tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction

_SQRT2 = math.sqrt(2.0)


def _frac(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact here; pass int, str or Fraction")
    return Fraction(x)


class RootTwo:
    """a + b*sqrt(2) with rational a, b."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _frac(a)
        self.b = _frac(b)

    def __repr__(self) -> str:
        return f"RootTwo({self.a!r}, {self.b!r})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt2"
        return f"{self.a}{'+' if self.b > 0 else ''}{self.b}*sqrt2"

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, RootTwo):
            return other
        if isinstance(other, (int, Fraction)):
            return cls(other, 0)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other) -> "RootTwo":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RootTwo(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "RootTwo":
        return RootTwo(-self.a, -self.b)

    def __sub__(self, other) -> "RootTwo":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RootTwo":
        return (-self) + other

    def __mul__(self, other) -> "RootTwo":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a + b s)(c + d s) = ac + 2bd + (ad + bc) s   with s^2 = 2
        return RootTwo(self.a * o.a + 2 * self.b * o.b,
                       self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def inverse(self) -> "RootTwo":
        # 1/(a + b s) = (a - b s)/(a^2 - 2 b^2); denominator vanishes only at 0
        n = self.a * self.a - 2 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return RootTwo(self.a / n, -self.b / n)

    def __truediv__(self, other) -> "RootTwo":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> "RootTwo":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError(f"{self} has an irrational sqrt2 component")
        return self.a

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * _SQRT2

    def to_json(self) -> dict:
        return {"num": str(self.a.numerator), "den": str(self.a.denominator),
                "snum": str(self.b.numerator), "sden": str(self.b.denominator)}

    @classmethod
    def from_json(cls, d: dict) -> "RootTwo":
        return cls(Fraction(int(d["num"]), int(d["den"])),
                   Fraction(int(d["snum"]), int(d["sden"])))


R_ZERO = RootTwo(0)
R_ONE = RootTwo(1)
SQRT2 = RootTwo(0, 1)
INV_SQRT2 = RootTwo(0, Fraction(1, 2))  # 1/sqrt2 = sqrt2/2


class Scalar:
    """Complex number with real and imaginary parts in Q(sqrt 2)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, RootTwo) else RootTwo(re)
        self.im = im if isinstance(im, RootTwo) else RootTwo(im)

    def __repr__(self) -> str:
        return f"Scalar({self.re!r}, {self.im!r})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        return f"({self.re}) + ({self.im})i"

    @classmethod
    def _coerce(cls, other):
        if isinstance(other, Scalar):
            return other
        if isinstance(other, (int, Fraction, RootTwo)):
            return cls(other, 0)
        return None

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __sub__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Scalar":
        return (-self) + other

    def __mul__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def abs_sq(self) -> RootTwo:
        """Squared modulus, an element of Q(sqrt 2)."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "Scalar":
        m = self.abs_sq()
        if not m:
            raise ZeroDivisionError("inverse of complex zero")
        inv = m.inverse()
        return Scalar(self.re * inv, -self.im * inv)

    def __truediv__(self, other) -> "Scalar":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_json(self) -> dict:
        return {"re": self.re.to_json(), "im": self.im.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "Scalar":
        return cls(RootTwo.from_json(d["re"]), RootTwo.from_json(d["im"]))


ZERO = Scalar(0)
ONE = Scalar(1)
