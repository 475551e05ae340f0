"""Rational generating functions and exact series coefficients.

Polynomials are stored constant term first, trailing zeros trimmed; the zero
polynomial is the empty tuple.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .engines import RECURRENCES, SequenceId


def _trim(coeffs) -> tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(int(c) for c in coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    coeffs: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def mul_truncated(self, series, order: int) -> "IntPolynomial":
        """Product with a coefficient list, keeping degrees < ``order``."""
        out = [0] * order
        for i, p in enumerate(self.coeffs[:order]):
            for j in range(min(len(series), order - i)):
                out[i + j] += p * series[j]
        return IntPolynomial(out)


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self):
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator.coeffs), "denominator": list(self.denominator.coeffs)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalGF":
        return cls(IntPolynomial(data["numerator"]), IntPolynomial(data["denominator"]))


def gf_for(seq) -> RationalGF:
    """Generating function sum t(n) x^n for one of the three sequences."""
    rec = RECURRENCES[SequenceId(seq)]
    c1, c2, c3 = rec.coefficients
    a0, a1, a2 = rec.initials
    den = IntPolynomial((1, -c1, -c2, -c3))
    num = IntPolynomial((a0, a1 - c1 * a0, a2 - c1 * a1 - c2 * a0))
    return RationalGF(num, den)


def coefficients(gf: RationalGF, count: int) -> list[int]:
    """First ``count`` coefficients of the power series of ``gf``."""
    if count < 1:
        raise ValueError(f"count must be positive, got {count}")
    den = gf.denominator.coeffs
    d0 = den[0]
    if d0 not in (1, -1):
        raise ValueError(f"denominator constant term {d0} is not a unit")
    out: list[int] = []
    for n in range(count):
        acc = gf.numerator[n]
        for k in range(1, min(len(den), n + 1)):
            acc -= den[k] * out[n - k]
        q, r = divmod(acc, d0)
        if r:
            raise ArithmeticError(f"non-integer coefficient at degree {n}")
        out.append(q)
    return out
