"""Period-3 auxiliary sequences V, M and U.

All three satisfy x(n+2) = -x(n+1) - x(n) and carry the w-part of the Binet
formulas. Negative indices use the Euclidean residue, so ``M(-n) == M(n)``
and ``U(-n) == -U(n)``.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class TriPeriodic:
    r0: int
    r1: int
    r2: int

    def __call__(self, n: int) -> int:
        # Python's % already returns the non-negative residue
        return (self.r0, self.r1, self.r2)[n % 3]

    @property
    def values(self) -> tuple[int, int, int]:
        return (self.r0, self.r1, self.r2)


V = TriPeriodic(2, -3, 1)
M = TriPeriodic(2, -1, -1)
U = TriPeriodic(0, 1, -1)


def v_at(n: int) -> int:
    return V(n)


def m_at(n: int) -> int:
    return M(n)


def u_at(n: int) -> int:
    return U(n)


def m_from_v(n: int) -> int:
    """M(n) recovered as -(4 V(n+1) - V(n)) / 7."""
    num = -(4 * V(n + 1) - V(n))
    q, r = divmod(num, 7)
    if r:
        raise ArithmeticError(f"4V({n + 1}) - V({n}) = {-num} is not divisible by 7")
    return q
