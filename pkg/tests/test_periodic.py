import pytest

from jacobsthal3.exact import I_SQRT3, OMEGA1, OMEGA2, CycQ, cyc_pow
from jacobsthal3.periodic import M, U, V, TriPeriodic, m_at, m_from_v, u_at, v_at


@pytest.mark.parametrize("n, expected", [(0, 2), (4, -3), (-1, 1)])
def test_v_at(n, expected):
    assert v_at(n) == expected


def test_v_negative_matches_backward_recurrence():
    # x(n) = -x(n+1) - x(n+2), run backwards from V(0), V(1)
    back = {0: 2, 1: -3}
    for n in range(-1, -30, -1):
        back[n] = -back[n + 1] - back[n + 2]
        assert v_at(n) == back[n]


@pytest.mark.parametrize("n, expected", [(0, 2), (5, -1), (-3, 2)])
def test_m_at(n, expected):
    assert m_at(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 0), (1, 1), (2, -1)])
def test_u_at(n, expected):
    assert u_at(n) == expected


@pytest.mark.parametrize("n, expected", [(0, 2), (1, -1), (2, -1)])
def test_m_from_v(n, expected):
    assert m_from_v(n) == expected


@pytest.mark.parametrize("seq", [V, M, U])
def test_recurrence_and_period(seq):
    assert sum(seq.values) == 0
    for n in range(-300, 301):
        assert seq(n + 2) == -seq(n + 1) - seq(n)
        assert seq(n) == seq(n + 3)


def test_symmetries():
    for n in range(-300, 301):
        assert m_at(-n) == m_at(n)
        assert u_at(-n) == -u_at(n)


def test_m_from_v_range():
    for n in range(0, 301):
        assert (4 * v_at(n + 1) - v_at(n)) % 7 == 0
        assert m_from_v(n) == m_at(n)


def test_m_from_v_rejects_non_multiple(monkeypatch):
    import jacobsthal3.periodic as periodic
    monkeypatch.setattr(periodic, "V", TriPeriodic(1, 0, -1))
    with pytest.raises(ArithmeticError):
        periodic.m_from_v(0)


def test_cyc_cross_check():
    # V(n) = (A w1^n - B w2^n) / (w1 - w2) with A = -3 - 2 w2, B = -3 - 2 w1
    a = CycQ(-3) - 2 * OMEGA2
    b = CycQ(-3) - 2 * OMEGA1
    assert OMEGA1 - OMEGA2 == I_SQRT3
    for n in range(0, 65):
        w1n, w2n = cyc_pow(OMEGA1, n), cyc_pow(OMEGA2, n)
        assert (a * w1n - b * w2n) / (OMEGA1 - OMEGA2) == v_at(n)
        assert w1n + w2n == m_at(n)
        assert (w1n - w2n) / (OMEGA1 - OMEGA2) == u_at(n)
