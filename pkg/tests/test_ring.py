import random
from fractions import Fraction

import pytest

from agtaut.ring import (
    LambdaPolynomial,
    TautClass,
    graded_dimension,
    monomials_of_weight,
    multiply,
    oracle_reduce,
    pairing_matrix,
    reduce,
    relation,
    socle_pair,
    top_degree,
    total_chern,
    total_chern_dual,
)


def mono(g, indices, coeff=1):
    return LambdaPolynomial.monomial(g, indices, coeff)


def taut(g, indices, coeff=1):
    return TautClass.monomial(g, indices, coeff)


# -- relations ---------------------------------------------------------------


def test_relation_examples():
    assert relation(1, 3) == mono(3, (1, 1)) - 2 * mono(3, (2,))
    assert relation(1, 2) == mono(2, (1, 1))
    assert relation(2, 4) == mono(4, (2, 2)) - 2 * mono(4, (1, 3))
    # next cross term flips sign: L3^2 -> 2 L2 L4 - 2 L1 L5 in genus 6
    assert relation(3, 6) == mono(6, (3, 3)) - 2 * mono(6, (2, 4)) + 2 * mono(6, (1, 5))


def test_relation_range_errors():
    with pytest.raises(ValueError):
        relation(0, 3)
    with pytest.raises(ValueError):
        relation(3, 3)


def test_relation_is_chern_product_part():
    # The weight-2k slice of c(E) c(E^v) - 1, with lambda_g terms deleted,
    # is (-1)^k relation(k).
    for g in range(2, 7):
        product = total_chern(g) * total_chern_dual(g) - LambdaPolynomial.one(g)
        for k in range(1, g):
            part = product.homogeneous_part(2 * k)
            trimmed = LambdaPolynomial(
                g, {e: c for e, c in part.terms.items() if e[g - 1] == 0}
            )
            assert trimmed == (-1) ** k * relation(k, g), (g, k)


# -- rewriting ----------------------------------------------------------------


def test_reduce_examples():
    assert reduce(mono(2, (1, 1))) == TautClass.zero(2)
    assert reduce(mono(3, (1, 1))) == taut(3, (2,), 2)
    assert reduce(mono(3, (1, 1, 1))) == taut(3, (1, 2), 2)
    assert reduce(mono(4, (1, 1, 2))) == taut(4, (1, 3), 4)


def test_reduce_kills_lambda_g():
    assert reduce(mono(3, (3,))) == TautClass.zero(3)
    assert reduce(mono(4, (4, 1, 2))) == TautClass.zero(4)


def test_reduce_is_linear():
    p = 3 * mono(4, (1, 1)) - mono(4, (2,), Fraction(1, 2))
    assert reduce(p) == 3 * reduce(mono(4, (1, 1))) - Fraction(1, 2) * reduce(mono(4, (2,)))


def test_reduce_beyond_socle_degree_vanishes():
    for g in range(2, 6):
        top = top_degree(g)
        for w in range(top + 1, top + 4):
            for exps in monomials_of_weight(g, w):
                assert reduce(LambdaPolynomial(g, {exps: Fraction(1)})).is_zero()


# -- ring structure -----------------------------------------------------------


def test_multiply_examples():
    one = TautClass.one(4)
    x = taut(4, (1, 2), Fraction(5, 7))
    assert multiply(one, x) == x
    for g in range(2, 11):
        lam = taut(g, (g - 1,))
        assert multiply(lam, lam).is_zero()
    assert multiply(taut(4, (1,)), taut(4, (1, 2))) == taut(4, (1, 3), 4)


def test_multiply_operator_and_scalars():
    a = taut(3, (1,))
    assert a * a == taut(3, (2,), 2)
    assert 3 * a == taut(3, (1,), 3)
    assert a * Fraction(1, 2) == taut(3, (1,), Fraction(1, 2))


def test_multiply_genus_mismatch():
    with pytest.raises(ValueError):
        multiply(TautClass.one(3), TautClass.one(4))


def test_multiply_commutative_associative_random():
    from agtaut.ring import basis_sets

    rng = random.Random(17)

    def random_class(g):
        sets = [s for w in range(top_degree(g) + 1) for s in basis_sets(g, w)]
        terms = {}
        for _ in range(rng.randint(1, 3)):
            terms[rng.choice(sets)] = Fraction(rng.randint(-5, 5), rng.randint(1, 4))
        return TautClass(g, terms)

    for g in (3, 4, 5, 6):
        for _ in range(8):
            a, b, c = random_class(g), random_class(g), random_class(g)
            assert multiply(a, b) == multiply(b, a)
            assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


def test_lambda_polynomial_rejects_bad_generators():
    with pytest.raises(ValueError):
        LambdaPolynomial.generator(3, 4)
    with pytest.raises(ValueError):
        LambdaPolynomial.generator(3, 0)
    with pytest.raises(ValueError):
        LambdaPolynomial.monomial(3, (5,))


def test_tautclass_validation():
    with pytest.raises(ValueError):
        TautClass(3, {(3,): Fraction(1)})  # index g is not a basis index
    with pytest.raises(ValueError):
        TautClass(3, {(2, 1): Fraction(1)})  # not strictly increasing


# -- graded dimensions and the pairing ----------------------------------------


def test_graded_dimension_examples():
    assert graded_dimension(4, 0) == 1
    assert graded_dimension(4, 3) == 2  # {3}, {1,2}
    for g in range(2, 11):
        assert graded_dimension(g, top_degree(g)) == 1
        assert graded_dimension(g, top_degree(g) + 1) == 0
    assert graded_dimension(5, 5) == 2  # {1,4}, {2,3}
    assert graded_dimension(6, 5) == 3  # {5}, {1,4}, {2,3}


def test_socle_pair_examples():
    for g in range(2, 7):
        assert socle_pair(taut(g, tuple(range(1, g))), TautClass.one(g)) == 1
    assert socle_pair(taut(3, (1,)), taut(3, (2,))) == 1
    assert socle_pair(reduce(mono(3, (1, 1))), taut(3, (1,))) == 2
    # non-complementary degrees pair to zero
    assert socle_pair(taut(4, (1,)), taut(4, (2,))) == 0


def test_pairing_matrix_examples():
    m = pairing_matrix(2, 0)
    assert m.entries == [[Fraction(1)]]
    m = pairing_matrix(4, 3)
    assert len(m.rows) == 2 and m.is_nonsingular()
    m = pairing_matrix(5, 5)
    assert len(m.rows) == 2 and m.is_nonsingular()
    m = pairing_matrix(6, 5)
    assert m.rows == ((1, 4), (2, 3), (5,)) and m.is_nonsingular()
    with pytest.raises(ValueError):
        pairing_matrix(4, 7)


def test_pairing_matrix_json():
    data = pairing_matrix(4, 3).to_json_dict()
    assert data["nonsingular"] is True
    assert data["rows"] == [[1, 2], [3]]
    assert all(isinstance(x, str) for row in data["entries"] for x in row)


# -- oracle --------------------------------------------------------------------


def test_oracle_examples():
    assert oracle_reduce(mono(3, (1, 1))) == taut(3, (2,), 2)
    assert oracle_reduce(mono(4, (2, 3))) == taut(4, (2, 3))
    product = total_chern(4) * total_chern_dual(4)
    part = product.homogeneous_part(4)
    assert oracle_reduce(part).is_zero()


def test_oracle_input_validation():
    with pytest.raises(ValueError):
        oracle_reduce(mono(7, (1,)))  # genus beyond the oracle cap
    with pytest.raises(ValueError):
        oracle_reduce(mono(3, (1,)) + mono(3, (1, 1)))  # inhomogeneous
    with pytest.raises(ValueError):
        oracle_reduce(mono(3, (2, 2)))  # weight beyond the socle degree


def test_oracle_agrees_with_rewriting_small_genus():
    for g in range(2, 5):
        for w in range(0, top_degree(g) + 1):
            for exps in monomials_of_weight(g, w):
                p = LambdaPolynomial(g, {exps: Fraction(1)})
                assert reduce(p) == oracle_reduce(p), (g, exps)


def test_mumford_relation_reduces_to_zero():
    for g in range(2, 9):
        product = total_chern(g) * total_chern_dual(g) - LambdaPolynomial.one(g)
        assert reduce(product).is_zero(), g


# -- serialization and rendering ------------------------------------------------


def test_str_formats():
    assert str(TautClass.zero(3)) == "0"
    assert str(taut(2, (1,), 60)) == "60 * L(1)"
    assert str(taut(4, (1, 3), Fraction(5, 3))) == "5/3 * L(1,3)"
    assert str(TautClass.one(2) + taut(2, (1,), -2)) == "1 + -2 * L(1)"


def test_json_roundtrip():
    x = taut(4, (1, 3), Fraction(5, 3)) + TautClass.one(4)
    data = x.to_json_dict()
    assert data["g"] == 4
    assert {"indices": [1, 3], "coeff": "5/3"} in data["terms"]
    assert TautClass.from_json(x.to_json()) == x
