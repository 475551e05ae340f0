import sys

import pytest
import sympy

if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

INITIALS = {"J3": (0, 1, 1), "JL3": (2, 1, 5), "K3": (3, 1, 3)}


def brute_terms(seq, count):
    """Plain-list recurrence, kept independent of the package engines."""
    t = list(INITIALS[seq])
    while len(t) < count:
        t.append(t[-1] + t[-2] + 2 * t[-3])
    return t[:count]


# w = (-1 + i sqrt 3)/2 as a symbolic complex number
SYM_OMEGA = (-1 + sympy.sqrt(3) * sympy.I) / 2


def to_sympy(x):
    return sympy.Rational(x.a.numerator, x.a.denominator) + sympy.Rational(x.b.numerator, x.b.denominator) * SYM_OMEGA


def sympy_equal(a, b):
    return sympy.simplify(sympy.expand(a - b)) == 0


@pytest.fixture(scope="session")
def oracle():
    return {seq: brute_terms(seq, 4200) for seq in INITIALS}


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
