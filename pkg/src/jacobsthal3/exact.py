"""Exact number types: Python ints, normalized fractions, and the field Q(w).

``w`` is the primitive cube root of unity (-1 + i*sqrt(3)) / 2, so every
element of Q(w) is stored as a pair of rationals ``a + b*w`` reduced with
``w**2 = -1 - w``. Nothing in here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
Number = Union[int, Fraction]


def rat_normalize(num: int, den: int) -> Fraction:
    """Reduced fraction ``num/den`` with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {num}/{den}")
    return Fraction(num, den)


def as_int(x: Number) -> int:
    """Return ``x`` as an int, failing loudly if it is not integral."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return x.numerator


@dataclass(frozen=True)
class CycQ:
    """Element ``a + b*w`` of Q(w)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def coerce(x) -> "CycQ":
        return x if isinstance(x, CycQ) else CycQ(Fraction(x))

    def __add__(self, other):
        other = CycQ.coerce(other)
        return CycQ(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self):
        return CycQ(-self.a, -self.b)

    def __sub__(self, other):
        return self + (-CycQ.coerce(other))

    def __rsub__(self, other):
        return CycQ.coerce(other) - self

    def __mul__(self, other):
        return cyc_mul(self, CycQ.coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * CycQ.coerce(other).inverse()

    def __rtruediv__(self, other):
        return CycQ.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        return cyc_pow(self, k)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, CycQ):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b))

    def conj(self) -> "CycQ":
        return cyc_conj(self)

    def norm(self) -> Fraction:
        # (a + bw)(a + b*w^2) = a^2 - ab + b^2
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self) -> "CycQ":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return CycQ(c.a / n, c.b / n)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def to_rational(self) -> Fraction:
        if self.b != 0:
            raise ArithmeticError(f"{self} has a nonzero w-part")
        return self.a

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}*w"

    @classmethod
    def parse(cls, text: str) -> "CycQ":
        """Inverse of ``str``: accepts ``"p/q"`` or ``"p/q+r/s*w"``."""
        text = text.strip()
        if not text.endswith("*w"):
            return cls(Fraction(text))
        body = text[:-2]
        # split at the last sign that is not a leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        a, b = body[:cut], body[cut:]
        return cls(Fraction(a), Fraction(b.lstrip("+")))


def cyc_mul(x: CycQ, y: CycQ) -> CycQ:
    # (a1 + b1 w)(a2 + b2 w) with w^2 = -1 - w
    a1, b1, a2, b2 = x.a, x.b, y.a, y.b
    bb = b1 * b2
    return CycQ(a1 * a2 - bb, a1 * b2 + a2 * b1 - bb)


def cyc_pow(x: CycQ, k: int) -> CycQ:
    if k < 0:
        raise ValueError(f"negative exponent {k}")
    result = ONE
    base = x
    while k:
        if k & 1:
            result = cyc_mul(result, base)
        k >>= 1
        if k:
            base = cyc_mul(base, base)
    return result


def cyc_conj(x: CycQ) -> CycQ:
    # conj(w) = w^2 = -1 - w
    return CycQ(x.a - x.b, -x.b)


ONE = CycQ(Fraction(1))
OMEGA = CycQ(Fraction(0), Fraction(1))
OMEGA1 = OMEGA
OMEGA2 = cyc_conj(OMEGA)
# i*sqrt(3) = w1 - w2 = 1 + 2w
I_SQRT3 = CycQ(Fraction(1), Fraction(2))
