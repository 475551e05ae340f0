"""Term engines for the third-order Jacobsthal family.

All three sequences share t(n+3) = t(n+2) + t(n+1) + 2 t(n), i.e. the
characteristic polynomial x^3 - x^2 - x - 2 = (x - 2)(x^2 + x + 1). They differ
only in their initial values. Four independent engines are provided so that
each can be checked against the others:

* ``iter``   -- O(n) rolling window
* ``closed`` -- 2^n plus a period-3 correction
* ``matpow`` -- companion matrix raised by repeated squaring
* ``binet``  -- exact Binet evaluation inside Q(w)
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .exact import OMEGA1, OMEGA2, CycQ, cyc_conj, cyc_pow
from .periodic import M, V


class SequenceId(str, enum.Enum):
    J3 = "J3"    # third-order Jacobsthal
    JL3 = "JL3"  # third-order Jacobsthal-Lucas
    K3 = "K3"    # modified third-order Jacobsthal


class Engine(str, enum.Enum):
    ITER = "iter"
    CLOSED = "closed"
    MATPOW = "matpow"
    BINET = "binet"


@dataclass(frozen=True)
class Recurrence3:
    coefficients: tuple[int, int, int]
    initials: tuple[int, int, int]

    def step(self, window: tuple[int, int, int]) -> tuple[int, int, int]:
        """Advance ``(t(n), t(n+1), t(n+2))`` by one index."""
        c1, c2, c3 = self.coefficients
        t0, t1, t2 = window
        return t1, t2, c1 * t2 + c2 * t1 + c3 * t0


COEFFICIENTS = (1, 1, 2)

RECURRENCES = {
    SequenceId.J3: Recurrence3(COEFFICIENTS, (0, 1, 1)),
    SequenceId.JL3: Recurrence3(COEFFICIENTS, (2, 1, 5)),
    SequenceId.K3: Recurrence3(COEFFICIENTS, (3, 1, 3)),
}

# acts on the column (t(n+2), t(n+1), t(n))
COMPANION = ((1, 1, 2), (1, 0, 0), (0, 1, 0))


@dataclass(frozen=True)
class BinetCoefficients:
    """t(n) = pow2 * 2^n + c * w1^n + conj(c) * w2^n."""

    pow2: Fraction
    c: CycQ


# (3 + 2 i sqrt 3) is 5 + 4w in Q(w)
BINET = {
    SequenceId.J3: BinetCoefficients(Fraction(2, 7), CycQ(Fraction(-5, 21), Fraction(-4, 21))),
    SequenceId.JL3: BinetCoefficients(Fraction(8, 7), CycQ(Fraction(5, 7), Fraction(4, 7))),
    SequenceId.K3: BinetCoefficients(Fraction(1), CycQ(Fraction(1))),
}


def _seq(seq) -> SequenceId:
    return SequenceId(seq)


def _check_index(n: int) -> None:
    if n < 0:
        raise ValueError(f"negative index {n}; only K3 extends to negative indices (use k_neg)")


def term_iter(seq, n: int) -> int:
    seq = _seq(seq)
    _check_index(n)
    rec = RECURRENCES[seq]
    window = rec.initials
    for _ in range(n):
        window = rec.step(window)
    return window[0]


def term_closed(seq, n: int) -> int:
    seq = _seq(seq)
    _check_index(n)
    if seq is SequenceId.K3:
        return (1 << n) + M(n)
    if seq is SequenceId.J3:
        num = (1 << (n + 1)) - V(n)
    else:
        num = (1 << (n + 3)) + 3 * V(n)
    q, r = divmod(num, 7)
    if r:
        raise ArithmeticError(f"closed form for {seq.value}({n}) is not divisible by 7")
    return q


def _mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def companion_power(n: int):
    """COMPANION ** n by repeated squaring."""
    result = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    base = COMPANION
    while n:
        if n & 1:
            result = _mat_mul(result, base)
        n >>= 1
        if n:
            base = _mat_mul(base, base)
    return result


def term_matpow(seq, n: int) -> int:
    seq = _seq(seq)
    _check_index(n)
    a0, a1, a2 = RECURRENCES[seq].initials
    # bottom row of C^n applied to (t2, t1, t0) gives t(n)
    row = companion_power(n)[2]
    return row[0] * a2 + row[1] * a1 + row[2] * a0


def binet_value(seq, n: int) -> CycQ:
    """Unreduced Binet evaluation in Q(w); integral with zero w-part when correct."""
    seq = _seq(seq)
    _check_index(n)
    co = BINET[seq]
    return CycQ(co.pow2 * (1 << n)) + co.c * cyc_pow(OMEGA1, n) + cyc_conj(co.c) * cyc_pow(OMEGA2, n)


def term_binet_cyc(seq, n: int) -> int:
    value = binet_value(seq, n)
    if value.b != 0 or value.a.denominator != 1:
        raise ArithmeticError(f"Binet evaluation of {SequenceId(seq).value}({n}) gave {value}")
    return value.a.numerator


def k_neg(n: int) -> Fraction:
    """K3 at index -n (n >= 1), i.e. 2^-n + M(n)."""
    if n <= 0:
        raise ValueError(f"k_neg needs n >= 1, got {n}")
    return Fraction(1, 1 << n) + M(-n)


def k_from_j(n: int) -> int:
    """K3(n) rebuilt as J(n) + 2 J(n-1) + 6 J(n-2)."""
    if n < 2:
        raise ValueError(f"k_from_j needs n >= 2, got {n}")
    j2, j1, j0 = (term_iter(SequenceId.J3, k) for k in (n - 2, n - 1, n))
    return j0 + 2 * j1 + 6 * j2


ENGINES = {
    Engine.ITER: term_iter,
    Engine.CLOSED: term_closed,
    Engine.MATPOW: term_matpow,
    Engine.BINET: term_binet_cyc,
}


def term(seq, n: int, engine=Engine.CLOSED):
    """Single term by the chosen engine; negative K3 indices give a Fraction."""
    seq = _seq(seq)
    if n < 0 and seq is SequenceId.K3:
        return k_neg(-n)
    return ENGINES[Engine(engine)](seq, n)


def term_range(seq, start: int, stop: int, engine=Engine.ITER) -> list[int]:
    """Terms ``start..stop`` inclusive."""
    seq = _seq(seq)
    engine = Engine(engine)
    if start > stop:
        raise ValueError(f"empty range {start}..{stop}")
    _check_index(start)
    if engine is not Engine.ITER:
        fn = ENGINES[engine]
        return [fn(seq, n) for n in range(start, stop + 1)]
    rec = RECURRENCES[seq]
    window = rec.initials
    for _ in range(start):
        window = rec.step(window)
    out = []
    for _ in range(start, stop + 1):
        out.append(window[0])
        window = rec.step(window)
    return out
