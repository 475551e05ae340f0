"""Exact third-order Jacobsthal, Jacobsthal-Lucas and modified Jacobsthal sequences."""
from .engines import (
    Engine,
    SequenceId,
    k_from_j,
    k_neg,
    term,
    term_binet_cyc,
    term_closed,
    term_iter,
    term_matpow,
    term_range,
)
from .exact import CycQ, cyc_conj, cyc_mul, cyc_pow, rat_normalize
from .genfun import IntPolynomial, RationalGF, coefficients, gf_for
from .identities import IdentityCheckReport, IdentityId, check, check_all
from .periodic import m_at, m_from_v, u_at, v_at

__version__ = "0.1.0"
