"""Acceptance criteria, one test per criterion.

Each test records a PASS/FAIL line that pytest prints in an
"acceptance criteria" section at the end of the run. The module also runs
standalone: ``python tests/test_acceptance.py``.
"""
import dataclasses
import json
import random
import time
from contextlib import contextmanager
from fractions import Fraction

from jacobsthal3 import identities
from jacobsthal3.cli import main
from jacobsthal3.engines import (
    SequenceId,
    binet_value,
    k_neg,
    term_binet_cyc,
    term_closed,
    term_iter,
    term_matpow,
    term_range,
)
from jacobsthal3.exact import OMEGA, OMEGA1, OMEGA2, CycQ, cyc_conj, cyc_mul, cyc_pow
from jacobsthal3.genfun import coefficients, gf_for
from jacobsthal3.identities import CATALOG, IdentityId, check_all, rhs_catalan, rhs_pp4
from jacobsthal3.periodic import v_at

from conftest import ACCEPTANCE_LINES, brute_terms


@contextmanager
def criterion(tag, text):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        ACCEPTANCE_LINES.append(f"[{tag}] FAIL {text} ({time.perf_counter() - t0:.2f}s)")
        print(ACCEPTANCE_LINES[-1])
        raise
    ACCEPTANCE_LINES.append(f"[{tag}] PASS {text} ({time.perf_counter() - t0:.2f}s)")
    print(ACCEPTANCE_LINES[-1])


def test_ac1_first_terms():
    with criterion("AC1", "first terms of K3, J3, JL3"):
        t0 = time.perf_counter()
        assert term_range(SequenceId.K3, 0, 6) == [3, 1, 3, 10, 15, 31, 66]
        assert term_range(SequenceId.J3, 0, 2) == [0, 1, 1]
        assert term_range(SequenceId.JL3, 0, 2) == [2, 1, 5]
        assert time.perf_counter() - t0 < 1.0


def test_ac2_engine_agreement():
    with criterion("AC2", "four engines agree on n in [0, 2048]; closed = matpow at n = 10^6"):
        t0 = time.perf_counter()
        for seq in SequenceId:
            expected = brute_terms(seq.value, 2049)
            for n in range(2049):
                value = expected[n]
                assert term_iter(seq, n) == value
                assert term_closed(seq, n) == value
                assert term_matpow(seq, n) == value
                assert term_binet_cyc(seq, n) == value
        assert term_closed(SequenceId.K3, 10**6) == term_matpow(SequenceId.K3, 10**6)
        assert time.perf_counter() - t0 < 60.0


def test_ac3_identity_suite():
    with criterion("AC3", "check_all(300, 5000): no failures, no vacuous entries"):
        t0 = time.perf_counter()
        reports = check_all(300, 5000)
        assert [r.identity for r in reports] == list(IdentityId)
        for r in reports:
            assert r.status == "pass", (r.identity, r.failures[:3])
            assert not r.vacuous, r.identity
        assert time.perf_counter() - t0 < 120.0


def test_ac4_derived_cross_identities():
    with criterion("AC4", "Catalan(s=1) = Cassini on [1, 300]; PP4(m=n) = PP5 on [0, 300]"):
        cassini = CATALOG[IdentityId.CASSINI]
        pp5 = CATALOG[IdentityId.PP5]
        for n in range(1, 301):
            assert rhs_catalan(n, 1) == cassini.rhs(None, n)
        for n in range(0, 301):
            assert rhs_pp4(n, n) == pp5.rhs(None, n)


def test_ac5_generating_function():
    with criterion("AC5", "256 GF coefficients equal recurrence terms; den * series = num"):
        for seq in SequenceId:
            gf = gf_for(seq)
            series = coefficients(gf, 256)
            assert series == brute_terms(seq.value, 256)
            assert gf.denominator.mul_truncated(series, 256) == gf.numerator


def test_ac6_negative_indices():
    with criterion("AC6", "k_neg(n) = K(n) + 2^-n - 2^n with denominator 2^n; N2 on [1, 64]"):
        k = brute_terms("K3", 70)
        for n in range(1, 65):
            value = k_neg(n)
            assert value == k[n] + Fraction(1, 2**n) - 2**n
            assert value.denominator == 2**n
            lhs = k[0] + sum((k_neg(s) for s in range(1, n + 1)), Fraction(0))
            rhs = Fraction(k[n + 2] + 2 * k[n], 3) - 2 ** (n + 1) - Fraction(1, 2**n) + 3
            assert lhs == rhs


def test_ac7_divisibility():
    with criterion("AC7", "7 divides 2^(n+1) - V(n), 2^(n+3) + 3V(n), 4V(n+1) - V(n) on [0, 4096]"):
        for n in range(0, 4097):
            assert (2 ** (n + 1) - v_at(n)) % 7 == 0
            assert (2 ** (n + 3) + 3 * v_at(n)) % 7 == 0
            assert (4 * v_at(n + 1) - v_at(n)) % 7 == 0


def test_ac8_cycq_algebra():
    with criterion("AC8", "w^3 = 1, conj automorphism (1000 samples), AB = 7, Binet w-part 0 on [0, 512]"):
        assert cyc_pow(OMEGA, 3) == 1
        rng = random.Random(20261016)

        def sample():
            return CycQ(Fraction(rng.randint(-999, 999), rng.randint(1, 99)),
                        Fraction(rng.randint(-999, 999), rng.randint(1, 99)))

        for _ in range(1000):
            x, y = sample(), sample()
            assert cyc_conj(cyc_mul(x, y)) == cyc_mul(cyc_conj(x), cyc_conj(y))
            assert cyc_conj(x + y) == cyc_conj(x) + cyc_conj(y)
        assert cyc_mul(CycQ(-3) - 2 * OMEGA2, CycQ(-3) - 2 * OMEGA1) == 7
        for seq in SequenceId:
            for n in range(0, 513):
                assert binet_value(seq, n).b == 0


def _exit_code(argv):
    try:
        return main(argv)
    except SystemExit as exc:
        return exc.code


def test_ac9_cli_exit_codes(monkeypatch, capsys):
    with criterion("AC9", "CLI exit codes 0/1/2 incl. injected failure with JSON witness"):
        assert _exit_code(["verify", "--all", "--n-max", "40"]) == 0
        assert _exit_code(["compute", "--seq", "K3", "--n", "6"]) == 0
        assert _exit_code(["verify", "--id", "NOT_AN_ID"]) == 2
        assert _exit_code(["compute", "--seq", "JL3", "--n", "-2"]) == 2
        capsys.readouterr()

        entry = CATALOG[IdentityId.DOCAGNE]
        broken = dataclasses.replace(entry, rhs=lambda t, m, n: entry.rhs(t, m, n) - (m == 9 and n == 4))
        monkeypatch.setitem(identities.CATALOG, IdentityId.DOCAGNE, broken)
        assert _exit_code(["verify", "--id", "DOCAGNE", "--n-max", "12", "--format", "json"]) == 1
        doc = json.loads(capsys.readouterr().out)
        (report,) = doc["reports"]
        assert report["status"] == "fail"
        (witness,) = report["failures"]
        assert witness["indices"] == [9, 4]
        assert int(witness["lhs"]) - int(witness["rhs"]) == 1


if __name__ == "__main__":
    import sys

    import pytest

    sys.exit(pytest.main([__file__, "-q"]))
