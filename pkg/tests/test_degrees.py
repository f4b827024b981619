import random
from fractions import Fraction

import pytest

from agtaut.degrees import (
    DegreeResult,
    ROUTE_CLOSED,
    ROUTE_ENUMERATION,
    ScaledMatrixShape,
    deg_phi,
    deg_phi_crt,
    deg_phi_special,
    deg_phi_stratified,
    deg_pi,
    isotropic_tuple_count,
    nl_composition,
    oracle_index,
    sl2_order_enumerated,
    sp4_f2_order_enumerated,
    sp_order,
    sp_order_prime,
)


# -- group orders -------------------------------------------------------------


def test_sp_order_prime_values():
    assert sp_order_prime(1, 2) == 6
    assert sp_order_prime(1, 3) == 24
    assert sp_order_prime(1, 5) == 120
    assert sp_order_prime(2, 2) == 720
    assert sp_order_prime(2, 3) == 51840
    with pytest.raises(ValueError):
        sp_order_prime(1, 4)


def test_sp_order_prime_against_enumeration():
    for p in (2, 3, 5):
        assert sp_order_prime(1, p) == sl2_order_enumerated(p)
    assert sp_order_prime(2, 2) == sp4_f2_order_enumerated()


def test_sp_order_values():
    assert sp_order(3, 1) == 1
    assert sp_order(1, 4) == 48
    assert sp_order(1, 6) == 144


def test_sp_order_against_enumeration_all_small_moduli():
    for N in range(1, 17):
        assert sp_order(1, N) == sl2_order_enumerated(N), N


def test_isotropic_tuple_count_values():
    assert isotropic_tuple_count(1, 1, 2) == 3
    assert isotropic_tuple_count(2, 1, 2) == 15
    assert isotropic_tuple_count(2, 2, 2) == 90
    # both printed expressions are compared internally on every call
    for g in range(1, 6):
        for h in range(1, g + 1):
            for p in (2, 3, 5):
                assert isotropic_tuple_count(g, h, p) > 0


# -- closed forms ----------------------------------------------------------------


def test_deg_phi_special_values():
    assert int(deg_phi_special(1, 0, 1, 1)) == 1
    assert int(deg_phi_special(1, 0, 1, 2)) == 6
    assert int(deg_phi_special(2, 1, 1, 2)) == 30
    with pytest.raises(ValueError):
        deg_phi_special(3, 1, 1, 2)  # k + h != g


def test_deg_phi_values():
    assert int(deg_phi(3, (1, 1, 1))) == 1
    assert int(deg_phi(2, (1, 2))) == 30
    assert int(deg_phi(2, (2, 2))) == 720
    # shorter chains are padded with leading 1 entries
    assert deg_phi(3, (2,)).value == deg_phi(3, (1, 1, 2)).value
    assert deg_phi(2, (2,)).route == ROUTE_CLOSED


def test_deg_phi_special_equals_general():
    for g in range(1, 6):
        for d in range(1, 13):
            for h in range(1, g + 1):
                delta = (1,) * (g - h) + (d,) * h
                assert deg_phi_special(g, g - h, h, d).value == deg_phi(g, delta).value


# -- stratified route --------------------------------------------------------------


def test_deg_phi_stratified_values():
    assert int(deg_phi_stratified(1, (2,), 2)) == 6
    assert deg_phi_stratified(2, (1, 4), 2).value == deg_phi(2, (1, 4)).value == 960
    assert int(deg_phi_stratified(2, (2, 2), 2)) == 720
    with pytest.raises(ValueError, match="mixes primes"):
        deg_phi_stratified(2, (1, 6), 2)
    with pytest.raises(ValueError):
        deg_phi_stratified(1, (2,), 4)  # not a prime


def test_deg_phi_crt_matches_closed_form():
    for g, delta in ((1, (6,)), (2, (1, 6)), (2, (2, 6)), (3, (1, 2, 12)), (2, (15, 15))):
        assert deg_phi_crt(g, delta).value == deg_phi(g, delta).value


def test_shape_bookkeeping():
    shape = ScaledMatrixShape(2, 2, (1, 2))
    assert shape.k == 0 and shape.h == 2
    assert shape.a_valuation(1, 2) == 1
    assert shape.b_valuation(1, 2) == 3
    assert shape.e_valuation(1, 2) == 2
    # N(i) over all strata accounts for the full power of p
    assert shape.total_exponent() == (2 * 2 + 1) * 3
    rng = random.Random(99)
    for _ in range(200):
        g = rng.randint(1, 6)
        exps = tuple(sorted(rng.randint(0, 4) for _ in range(g)))
        shape = ScaledMatrixShape(g, 3, exps)
        assert shape.total_exponent() == (2 * g + 1) * sum(exps)
    # first stratum on a (1^k, p^h) shape
    for g in range(1, 7):
        for h in range(1, g + 1):
            shape = ScaledMatrixShape(g, 2, (0,) * (g - h) + (1,) * h)
            assert shape.n_count(1) == 2 * g * h - h * (h - 1) // 2


def test_shape_validation():
    with pytest.raises(ValueError):
        ScaledMatrixShape(2, 2, (2, 1))  # not non-decreasing
    with pytest.raises(ValueError):
        ScaledMatrixShape(2, 2, (1,))  # wrong length


# -- the level-forgetting cover ------------------------------------------------------


def test_deg_pi_values():
    assert int(deg_pi(4, (1, 1, 1, 1))) == 1
    assert int(deg_pi(1, (3,))) == 24
    assert int(deg_pi(2, (2, 2))) == 720
    for p in (2, 3, 5, 7):
        assert int(deg_pi(1, (p,))) == sp_order_prime(1, p)


def test_deg_pi_integrality_over_small_chains():
    for d1 in range(1, 7):
        for d2 in range(d1, 25, d1):
            result = deg_pi(2, (d1, d2))
            assert result.value.denominator == 1 and result.value > 0


def test_deg_pi_is_kernel_symplectic_order():
    # the fiber is the set of symplectic bases of (Z/d1 x Z/d2)^2; for a
    # constant chain (d, d) that group is Sp_4(Z/d)
    for d in (2, 3, 4, 6):
        assert int(deg_pi(2, (d, d))) == sp_order(2, d)


# -- enumeration oracle -----------------------------------------------------------


def test_oracle_index_values():
    for d, expected in ((2, 6), (3, 24), (4, 48)):
        result = oracle_index(d)
        assert int(result) == expected
        assert result.route == ROUTE_ENUMERATION
        assert int(result) == int(deg_phi(1, (d,)))


def test_oracle_index_cap():
    with pytest.raises(ValueError):
        oracle_index(1)
    with pytest.raises(ValueError):
        oracle_index(9)


def test_oracle_cap_env_override(monkeypatch):
    monkeypatch.setenv("AGTAUT_ORACLE_CAP", "3")
    with pytest.raises(ValueError):
        oracle_index(4)
    assert int(oracle_index(3)) == 24
    # the hard limit cannot be exceeded from the environment
    monkeypatch.setenv("AGTAUT_ORACLE_CAP", "99")
    with pytest.raises(ValueError):
        oracle_index(9)
    monkeypatch.setenv("AGTAUT_ORACLE_CAP", "nonsense")
    with pytest.raises(ValueError):
        oracle_index(3)


def test_degree_result_validation():
    with pytest.raises(ValueError):
        DegreeResult(Fraction(1, 2), ROUTE_CLOSED)
    with pytest.raises(ValueError):
        DegreeResult(Fraction(-3), ROUTE_CLOSED)
    assert str(DegreeResult(Fraction(6), ROUTE_CLOSED)) == "6"


# -- composition diagnostic ---------------------------------------------------------


def test_nl_composition_diagnostic():
    # for a single-entry type the composed degrees reproduce the constant
    for g, d in ((3, 2), (4, 3), (5, 6)):
        report = nl_composition(g, (d,))
        assert report["match"] is True
        assert report["constant"] == report["composed"]
    # for u = 2 with distinct entries the pure power factor lands on the
    # other side of the fraction; both values are reported, never reconciled
    report = nl_composition(4, (1, 2))
    assert report["constant"] == 6
    assert report["composed"] == 150
    assert report["match"] is False
    # equal entries dodge the discrepancy
    assert nl_composition(4, (2, 2))["match"] is True
