"""Canonical expansion by backward division: digit tables, cycles, the oracle."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cnskit.cns import (CnsDigits, CnsExhausted, CnsNotRepresentable,
                        NotRepresentableError, StepBudgetError,
                        brute_force_oracle, cns_decode, cns_encode, cns_length,
                        reduce_digits)
from cnskit.negabase import CnsBase, Representation
from cnskit.poly import IntPoly

P = IntPoly((2, 2, 1))
COUNTER = IntPoly((8, 4, 1))
QUARTIC = IntPoly((2, 0, 2, 0, 1))
NONCNS = IntPoly((2, -2, 1))


def digits_of(z, p=P):
    outcome = cns_encode(z, p)
    assert isinstance(outcome, CnsDigits)
    return outcome.representation.digit_string()


def test_digit_table():
    assert digits_of(0) == "0"
    assert digits_of(1) == "1"
    assert digits_of(2) == "1100"
    assert digits_of(3) == "1101"
    assert digits_of(4) == "111010000"
    assert digits_of(-1) == "11101"


def test_counterexample_base_digit_table():
    expected = {8: "1340", 16: "1200", 24: "2540", 32: "2400",
                40: "3740", 48: "3600", 56: "1470140"}
    for value, digits in expected.items():
        assert digits_of(value, COUNTER) == digits


def test_encode_validates_base():
    with pytest.raises(ValueError):
        cns_encode(3, IntPoly((3, 2)))       # not monic
    with pytest.raises(ValueError):
        cns_encode(3, IntPoly((1, 2, 1)))    # |p(0)| = 1
    with pytest.raises(ValueError):
        cns_encode(3, P, max_steps=0)


def test_not_representable_reports_cycle():
    outcome = cns_encode(-1, NONCNS)
    assert isinstance(outcome, CnsNotRepresentable)
    assert outcome.cycle.coeffs == (-1, 1)


def test_budget_exhaustion():
    outcome = cns_encode(10**6, P, max_steps=3)
    assert isinstance(outcome, CnsExhausted)
    assert outcome.max_steps == 3


def test_budget_exactly_sufficient():
    # a value whose expansion needs exactly the allowed number of digits
    need = cns_length(820, P)
    outcome = cns_encode(820, P, max_steps=need)
    assert isinstance(outcome, CnsDigits)
    assert outcome.representation.length == need


def test_cns_length_errors():
    assert cns_length(2, P) == 4
    with pytest.raises(NotRepresentableError):
        cns_length(-1, NONCNS)
    with pytest.raises(StepBudgetError):
        cns_length(10**6, P, max_steps=3)


def test_decode_inverts_encode():
    for z in range(-500, 501):
        outcome = cns_encode(z, P)
        residue = cns_decode(outcome.representation)
        assert residue.is_constant
        assert residue.constant_value() == z


def test_decode_non_constant_residue():
    rep = Representation(CnsBase(P), (1, 1))
    residue = cns_decode(rep)
    assert not residue.is_constant
    assert residue.coeffs == (1, 1)
    with pytest.raises(ValueError):
        residue.constant_value()


def test_reduce_digits_matches_decode():
    # X^2 = -2X - 2 over P, so digits (0, 0, 1) reduce to -2 - 2X
    assert reduce_digits((0, 0, 1), P).coeffs == (-2, -2)
    assert reduce_digits((2,), P).coeffs == (2, 0)
    assert reduce_digits((), P).coeffs == (0, 0)


def test_quadratic_and_generic_paths_agree():
    # the quartic lift exercises the generic state loop on the same values
    for z in range(-300, 301):
        fast = cns_encode(z, P)
        generic = cns_encode(z, QUARTIC)
        assert isinstance(fast, CnsDigits)
        assert isinstance(generic, CnsDigits)


@given(st.integers(-10**12, 10**12))
@settings(max_examples=300)
def test_encode_decode_round_trip(z):
    outcome = cns_encode(z, P)
    assert isinstance(outcome, CnsDigits)
    rep = outcome.representation
    assert cns_decode(rep).constant_value() == z
    assert max(rep.digits) < 2
    if z != 0:
        assert rep.digits[-1] != 0


@given(st.integers(-10**10, 10**10))
@settings(max_examples=200)
def test_counterexample_base_round_trip(z):
    outcome = cns_encode(z, COUNTER)
    assert isinstance(outcome, CnsDigits)
    rep = outcome.representation
    assert cns_decode(rep).constant_value() == z
    assert max(rep.digits) < 8


def test_oracle_agreement_small_window():
    """The exhaustive search and backward division agree on every |z| <= 200.

    The oracle only sees expansions up to its digit budget, so values whose
    expansion is longer must come back as None from it.
    """
    max_len = 12
    for z in range(-200, 201):
        expected = cns_encode(z, P)
        assert isinstance(expected, CnsDigits)
        rep = expected.representation
        found = brute_force_oracle(z, P, max_len)
        if rep.length <= max_len:
            assert found is not None and found.digits == rep.digits
        else:
            assert found is None


def test_oracle_counterexample_base():
    for z in range(0, 64):
        found = brute_force_oracle(z, COUNTER, 7)
        expected = cns_encode(z, COUNTER)
        assert found is not None
        assert found.digits == expected.representation.digits


def test_oracle_rejects_huge_enumeration():
    with pytest.raises(ValueError):
        brute_force_oracle(1, P, 10**9)
