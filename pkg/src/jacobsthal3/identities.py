"""Catalog of identities for the J3 / JL3 / K3 family, checked exactly.

Each entry pairs a left-hand side built from brute-force recurrence terms
with a right-hand side built from the stated closed expression. Checking an
entry over a range evaluates both sides as exact ints / Fractions (or Q(w)
elements for the Binet entries) and records every mismatch with its index
tuple and both values.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .engines import SequenceId, binet_value, k_neg, term_range
from .exact import CycQ
from .genfun import coefficients, gf_for
from .periodic import M, U, V


class IdentityId(str, enum.Enum):
    E4 = "E4"
    E5 = "E5"
    EC5 = "EC5"
    E6 = "E6"
    E7 = "E7"
    E8 = "E8"
    E9 = "E9"
    E10 = "E10"
    E12 = "E12"
    H2_J = "H2_J"
    H2_JL = "H2_JL"
    MOD1 = "MOD1"
    KDEF = "KDEF"
    PP1 = "PP1"
    PP2 = "PP2"
    PP3 = "PP3"
    PP4 = "PP4"
    PP5 = "PP5"
    CATALAN = "CATALAN"
    CASSINI = "CASSINI"
    DOCAGNE = "DOCAGNE"
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    N1 = "N1"
    N2 = "N2"
    BINET_J = "BINET_J"
    BINET_JL = "BINET_JL"
    BINET_K = "BINET_K"
    GF_K = "GF_K"


def _pow2(e: int):
    """2**e, as a Fraction when e < 0."""
    return 1 << e if e >= 0 else Fraction(1, 1 << -e)


class Terms:
    """Precomputed J3, JL3, K3 terms (iteration engine) plus prefix sums."""

    def __init__(self, size: int):
        self.size = size
        self.J = term_range(SequenceId.J3, 0, size - 1)
        self.j = term_range(SequenceId.JL3, 0, size - 1)
        self.K = term_range(SequenceId.K3, 0, size - 1)
        self.J_prefix = list(itertools.accumulate(self.J, initial=0))
        self.j_prefix = list(itertools.accumulate(self.j, initial=0))
        self.K_prefix = list(itertools.accumulate(self.K, initial=0))
        self._gf_k: Optional[list[int]] = None

    @property
    def gf_k(self) -> list[int]:
        if self._gf_k is None:
            self._gf_k = coefficients(gf_for(SequenceId.K3), self.size)
        return self._gf_k

    def k_sum(self, lo: int, hi: int) -> int:
        return self.K_prefix[hi + 1] - self.K_prefix[lo]


# -- helpers that are part of the public surface ---------------------------

_PIECEWISE = {
    IdentityId.EC5: (1, -2, 1),
    IdentityId.E6: (2, -3, 1),
    IdentityId.E8: (1, -1, 0),
    # offset added to J(n+1) / K(n+1)
    IdentityId.E10: (-1, 0, 0),
    IdentityId.T2: (2, 1, -3),
}


def piecewise_expected(identity, n: int) -> int:
    """Residue-class constant predicted by a piecewise identity at ``n``.

    For E10 and T2 this is the offset added to J(n+1) resp. K(n+1).
    """
    identity = IdentityId(identity)
    if identity not in _PIECEWISE:
        raise ValueError(f"{identity.value} is not a piecewise identity")
    return _PIECEWISE[identity][n % 3]


def rhs_catalan(n: int, s: int) -> Fraction:
    if n < s or s < 0:
        raise ValueError(f"Catalan needs n >= s >= 0, got n={n}, s={s}")
    p = _pow2(n)
    us, us1 = U(s), U(s - 1)
    value = Fraction(
        p * (_pow2(-s) - _pow2(s)) * us * M(n + 1)
        - p * (_pow2(s) * us + 2 + (_pow2(-s) + _pow2(s)) * us1) * M(n)
        - 3 * us * us
    )
    if value.denominator != 1:
        raise ArithmeticError(f"Catalan RHS at n={n}, s={s} is not integral: {value}")
    return value


def rhs_docagne(m: int, n: int) -> int:
    if m < n or n < 0:
        raise ValueError(f"d'Ocagne needs m >= n >= 0, got m={m}, n={n}")
    return (
        (1 << m) * (2 * M(n) - M(n + 1))
        + (1 << n) * (M(m + 1) - 2 * M(m))
        - 3 * U(m - n)
    )


def sum_k(lo: int, hi: int) -> Fraction:
    """Exact sum of K3 over ``lo..hi`` inclusive; negative indices allowed."""
    if lo > hi:
        raise ValueError(f"invalid range {lo}..{hi}")
    total = Fraction(0)
    for n in range(lo, min(hi, -1) + 1):
        total += k_neg(-n)
    if hi >= 0:
        total += sum(term_range(SequenceId.K3, max(lo, 0), hi))
    return total


def _k_terms(hi: int, terms: Optional[Terms]):
    if terms is not None and terms.size > hi:
        return terms.K
    return term_range(SequenceId.K3, 0, hi)


def lhs_pp4(n: int, m: int, terms: Optional[Terms] = None) -> int:
    K = _k_terms(max(n, m) + 2, terms)
    return K[n] * K[m] + K[n + 1] * K[m + 1] + K[n + 2] * K[m + 2]


def rhs_pp4(n: int, m: int) -> int:
    # w1^n w2^m + w1^m w2^n = M(n - m) because w1 w2 = 1
    return (
        21 * (1 << (n + m))
        + (1 << n) * (M(m + 1) + 3 * M(m + 2))
        + (1 << m) * (M(n + 1) + 3 * M(n + 2))
        + 3 * M(n - m)
    )


# -- catalog ---------------------------------------------------------------

@dataclass(frozen=True)
class Identity:
    id: IdentityId
    statement: str
    indices: tuple[str, ...]
    lower: tuple[int, ...]
    lhs: Callable
    rhs: Callable
    # extra relation between indices beyond the lower bounds
    constraint: Optional[Callable[..., bool]] = None
    constraint_text: str = ""

    @property
    def arity(self) -> int:
        return len(self.indices)

    def in_domain(self, idx: tuple[int, ...]) -> bool:
        if any(i < lo for i, lo in zip(idx, self.lower)):
            return False
        return self.constraint is None or self.constraint(*idx)

    def max_term_index(self, n_max: int) -> int:
        # generous bound on the largest term index any side touches
        return 2 * n_max + 4


def _pw(identity):
    return lambda t, n: piecewise_expected(identity, n)


_ENTRIES = [
    Identity(IdentityId.E4, "3J(n) + j(n) = 2^(n+1)", ("n",), (0,),
             lambda t, n: 3 * t.J[n] + t.j[n], lambda t, n: 1 << (n + 1)),
    Identity(IdentityId.E5, "j(n) - 3J(n) = 2 j(n-3)", ("n",), (3,),
             lambda t, n: t.j[n] - 3 * t.J[n], lambda t, n: 2 * t.j[n - 3]),
    Identity(IdentityId.EC5, "J(n+2) - 4J(n) = -2 if n = 1 (mod 3) else 1", ("n",), (0,),
             lambda t, n: t.J[n + 2] - 4 * t.J[n], _pw(IdentityId.EC5)),
    Identity(IdentityId.E6, "j(n) - 4J(n) = 2, -3, 1 for n = 0, 1, 2 (mod 3)", ("n",), (0,),
             lambda t, n: t.j[n] - 4 * t.J[n], _pw(IdentityId.E6)),
    Identity(IdentityId.E7, "j(n+1) + j(n) = 3J(n+2)", ("n",), (0,),
             lambda t, n: t.j[n + 1] + t.j[n], lambda t, n: 3 * t.J[n + 2]),
    Identity(IdentityId.E8, "j(n) - J(n+2) = 1, -1, 0 for n = 0, 1, 2 (mod 3)", ("n",), (0,),
             lambda t, n: t.j[n] - t.J[n + 2], _pw(IdentityId.E8)),
    Identity(IdentityId.E9, "j(n-3)^2 + 3J(n)j(n) = 4^n", ("n",), (3,),
             lambda t, n: t.j[n - 3] ** 2 + 3 * t.J[n] * t.j[n], lambda t, n: 1 << (2 * n)),
    Identity(IdentityId.E10, "sum J(0..n) = J(n+1) - [n = 0 (mod 3)]", ("n",), (0,),
             lambda t, n: t.J_prefix[n + 1],
             lambda t, n: t.J[n + 1] + piecewise_expected(IdentityId.E10, n)),
    Identity(IdentityId.E12, "j(n)^2 - 9J(n)^2 = 2^(n+2) j(n-3)", ("n",), (3,),
             lambda t, n: t.j[n] ** 2 - 9 * t.J[n] ** 2, lambda t, n: (1 << (n + 2)) * t.j[n - 3]),
    Identity(IdentityId.H2_J, "J(n) = (2^(n+1) - V(n)) / 7", ("n",), (0,),
             lambda t, n: t.J[n], lambda t, n: Fraction((1 << (n + 1)) - V(n), 7)),
    Identity(IdentityId.H2_JL, "j(n) = (2^(n+3) + 3V(n)) / 7", ("n",), (0,),
             lambda t, n: t.j[n], lambda t, n: Fraction((1 << (n + 3)) + 3 * V(n), 7)),
    Identity(IdentityId.MOD1, "M(n) = -(4V(n+1) - V(n)) / 7", ("n",), (0,),
             lambda t, n: M(n), lambda t, n: Fraction(-(4 * V(n + 1) - V(n)), 7)),
    Identity(IdentityId.KDEF, "K(n) = J(n) + 2J(n-1) + 6J(n-2)", ("n",), (2,),
             lambda t, n: t.K[n], lambda t, n: t.J[n] + 2 * t.J[n - 1] + 6 * t.J[n - 2]),
    Identity(IdentityId.PP1, "147J(n) = 13K(n) + 48K(n-1) + 20K(n-2)", ("n",), (2,),
             lambda t, n: 147 * t.J[n], lambda t, n: 13 * t.K[n] + 48 * t.K[n - 1] + 20 * t.K[n - 2]),
    Identity(IdentityId.PP2, "6K(n) = 5j(n) + 3j(n-1) - 5j(n-2)", ("n",), (2,),
             lambda t, n: 6 * t.K[n], lambda t, n: 5 * t.j[n] + 3 * t.j[n - 1] - 5 * t.j[n - 2]),
    Identity(IdentityId.PP3, "49j(n) = 43K(n) + 8K(n-1) + 36K(n-2)", ("n",), (2,),
             lambda t, n: 49 * t.j[n], lambda t, n: 43 * t.K[n] + 8 * t.K[n - 1] + 36 * t.K[n - 2]),
    Identity(IdentityId.PP4,
             "K(n)K(m) + K(n+1)K(m+1) + K(n+2)K(m+2) = 21*2^(n+m) + 2^n(M(m+1) + 3M(m+2))"
             " + 2^m(M(n+1) + 3M(n+2)) + 3M(n-m)",
             ("n", "m"), (0, 0),
             lambda t, n, m: lhs_pp4(n, m, t), lambda t, n, m: rhs_pp4(n, m)),
    Identity(IdentityId.PP5, "K(n)^2 + K(n+1)^2 + K(n+2)^2 = 21*4^n + 2^(n+1)(M(n+1) + 3M(n+2)) + 6",
             ("n",), (0,),
             lambda t, n: t.K[n] ** 2 + t.K[n + 1] ** 2 + t.K[n + 2] ** 2,
             lambda t, n: 21 * (1 << (2 * n)) + (1 << (n + 1)) * (M(n + 1) + 3 * M(n + 2)) + 6),
    Identity(IdentityId.CATALAN,
             "K(n+s)K(n-s) - K(n)^2 = 2^n(2^-s - 2^s)U(s)M(n+1)"
             " - 2^n(2^s U(s) + 2 + (2^-s + 2^s)U(s-1))M(n) - 3U(s)^2",
             ("n", "s"), (0, 0),
             lambda t, n, s: t.K[n + s] * t.K[n - s] - t.K[n] ** 2,
             lambda t, n, s: rhs_catalan(n, s),
             constraint=lambda n, s: s <= n, constraint_text="s <= n"),
    Identity(IdentityId.CASSINI, "K(n+1)K(n-1) - K(n)^2 = 2^(n-1)(3M(n+2) - 5M(n)) - 3", ("n",), (1,),
             lambda t, n: t.K[n + 1] * t.K[n - 1] - t.K[n] ** 2,
             lambda t, n: _pow2(n - 1) * (3 * M(n + 2) - 5 * M(n)) - 3),
    Identity(IdentityId.DOCAGNE,
             "K(m+1)K(n) - K(m)K(n+1) = 2^m(2M(n) - M(n+1)) + 2^n(M(m+1) - 2M(m)) - 3U(m-n)",
             ("m", "n"), (0, 0),
             lambda t, m, n: t.K[m + 1] * t.K[n] - t.K[m] * t.K[n + 1],
             lambda t, m, n: rhs_docagne(m, n),
             constraint=lambda m, n: n <= m, constraint_text="n <= m"),
    Identity(IdentityId.T1, "sum K(m..n) = (K(n+2) + 2K(n) + K(m) - K(m+2)) / 3", ("n", "m"), (0, 0),
             lambda t, n, m: t.k_sum(m, n),
             lambda t, n, m: Fraction(t.K[n + 2] + 2 * t.K[n] + t.K[m] - t.K[m + 2], 3),
             constraint=lambda n, m: m <= n, constraint_text="m <= n"),
    Identity(IdentityId.T2, "sum K(0..n) = K(n+1) + (2, 1, -3 for n = 0, 1, 2 (mod 3))", ("n",), (0,),
             lambda t, n: t.k_sum(0, n),
             lambda t, n: t.K[n + 1] + piecewise_expected(IdentityId.T2, n)),
    Identity(IdentityId.T3, "sum j(0..n) = (16K(n+3) - 5K(n+2) + 2K(n+1)) / 49 - 1", ("n",), (0,),
             lambda t, n: t.j_prefix[n + 1],
             lambda t, n: Fraction(16 * t.K[n + 3] - 5 * t.K[n + 2] + 2 * t.K[n + 1], 49) - 1),
    Identity(IdentityId.N1, "K(-n) = K(n) + 2^-n - 2^n", ("n",), (1,),
             lambda t, n: k_neg(n), lambda t, n: t.K[n] + _pow2(-n) - _pow2(n)),
    Identity(IdentityId.N2, "sum K(-s), s = 0..n = (K(n+2) + 2K(n)) / 3 - 2^(n+1) - 2^-n + 3", ("n",), (0,),
             lambda t, n: t.K[0] + sum((k_neg(s) for s in range(1, n + 1)), Fraction(0)),
             lambda t, n: Fraction(t.K[n + 2] + 2 * t.K[n], 3) - _pow2(n + 1) - _pow2(-n) + 3),
    Identity(IdentityId.BINET_J, "J(n) = 2/7 2^n + c w1^n + conj(c) w2^n, c = -(3 + 2i sqrt3)/21",
             ("n",), (0,), lambda t, n: t.J[n], lambda t, n: binet_value(SequenceId.J3, n)),
    Identity(IdentityId.BINET_JL, "j(n) = 8/7 2^n + c w1^n + conj(c) w2^n, c = (3 + 2i sqrt3)/7",
             ("n",), (0,), lambda t, n: t.j[n], lambda t, n: binet_value(SequenceId.JL3, n)),
    Identity(IdentityId.BINET_K, "K(n) = 2^n + w1^n + w2^n", ("n",), (0,),
             lambda t, n: t.K[n], lambda t, n: binet_value(SequenceId.K3, n)),
    Identity(IdentityId.GF_K, "sum K(n) t^n = (3 - 2t - t^2) / (1 - t - t^2 - 2t^3)", ("n",), (0,),
             lambda t, n: t.K[n], lambda t, n: t.gf_k[n]),
]

CATALOG: dict[IdentityId, Identity] = {e.id: e for e in _ENTRIES}
assert list(CATALOG) == list(IdentityId)


# -- reports ---------------------------------------------------------------

def _fmt(x) -> str:
    return str(x)


def _parse(text: str):
    if text.endswith("*w"):
        return CycQ.parse(text)
    value = Fraction(text)
    return value.numerator if value.denominator == 1 else value


@dataclass
class Failure:
    indices: tuple[int, ...]
    lhs: object
    rhs: object

    def to_json(self) -> dict:
        return {"indices": list(self.indices), "lhs": _fmt(self.lhs), "rhs": _fmt(self.rhs)}

    @classmethod
    def from_json(cls, data: dict) -> "Failure":
        return cls(tuple(data["indices"]), _parse(data["lhs"]), _parse(data["rhs"]))


@dataclass
class IdentityCheckReport:
    identity: IdentityId
    domain: dict
    checked: int
    skipped: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def vacuous(self) -> bool:
        return self.checked == 0

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    def to_json(self) -> dict:
        return {
            "identity": self.identity.value,
            "domain": self.domain,
            "checked": self.checked,
            "skipped": self.skipped,
            "vacuous": self.vacuous,
            "failures": [f.to_json() for f in self.failures],
            "status": self.status,
        }

    @classmethod
    def from_json(cls, data: dict) -> "IdentityCheckReport":
        return cls(
            IdentityId(data["identity"]),
            dict(data["domain"]),
            int(data["checked"]),
            int(data["skipped"]),
            [Failure.from_json(f) for f in data["failures"]],
        )


def select_evenly(candidates: list, budget: int) -> list:
    """Deterministic systematic sample of at most ``budget`` items.

    Candidates are in lexicographic index order, so evenly spaced picks give
    every value of the leading index a proportional share. The first and last
    candidate are always kept.
    """
    total = len(candidates)
    if total <= budget:
        return candidates
    if budget == 1:
        return candidates[:1]
    return [candidates[k * (total - 1) // (budget - 1)] for k in range(budget)]


def check(identity, n_max: int, pair_budget: int = 5000, terms: Optional[Terms] = None) -> IdentityCheckReport:
    """Verify one identity for every index in ``[0, n_max]`` inside its domain.

    Two-index identities enumerate the box ``[0, n_max]^2`` and fall back to
    :func:`select_evenly` when more than ``pair_budget`` tuples qualify.
    """
    identity = IdentityId(identity)
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if pair_budget < 1:
        raise ValueError(f"pair_budget must be positive, got {pair_budget}")
    entry = CATALOG[identity]
    if terms is None or terms.size <= entry.max_term_index(n_max):
        terms = Terms(entry.max_term_index(n_max) + 1)

    box = list(itertools.product(range(n_max + 1), repeat=entry.arity))
    in_domain = [idx for idx in box if entry.in_domain(idx)]
    sampled = in_domain
    if entry.arity > 1:
        sampled = select_evenly(in_domain, pair_budget)

    failures = []
    for idx in sampled:
        lhs = entry.lhs(terms, *idx)
        rhs = entry.rhs(terms, *idx)
        if lhs != rhs:
            failures.append(Failure(idx, lhs, rhs))

    domain = {
        "indices": list(entry.indices),
        "lower": list(entry.lower),
        "upper": n_max,
        "constraint": entry.constraint_text,
        "in_domain": len(in_domain),
        "subsampled": len(sampled) < len(in_domain),
    }
    return IdentityCheckReport(identity, domain, len(sampled), len(box) - len(sampled), failures)


def check_all(n_max: int, pair_budget: int = 5000) -> list[IdentityCheckReport]:
    terms = Terms(2 * n_max + 5)
    return [check(i, n_max, pair_budget, terms) for i in IdentityId]
