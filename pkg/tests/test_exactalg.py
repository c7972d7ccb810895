import random
from fractions import Fraction

import pytest

from qsegre.exactalg import (ONE, Q, ZERO, QPolynomial, QRationalFunction,
                             TruncatedSeries, one_minus_q_power, poly_arith,
                             poly_coeff_strings, poly_from_coeff_strings,
                             poly_gcd, q_factorial, q_integer, ratfun_reduce,
                             series_reciprocal)


def poly(*coeffs):
    return QPolynomial(coeffs)


class TestPolynomialArithmetic:
    def test_difference_of_squares(self):
        assert poly(1, 1) * poly(-1, 1) == poly(-1, 0, 1)

    def test_multiplying_by_zero_gives_canonical_zero(self):
        p = poly(3, 0, 2)
        assert (p * ZERO).coeffs == ()
        assert (p * ZERO).is_zero()

    def test_cyclotomic_like_product_is_q_integer_four(self):
        assert poly(1, 1) * poly(1, 0, 1) == q_integer(4)

    def test_trailing_zeros_are_trimmed(self):
        assert QPolynomial([1, 2, 0, 0]).coeffs == (Fraction(1), Fraction(2))
        assert (poly(0, 1) - poly(0, 1)).coeffs == ()

    def test_subtraction_and_negation(self):
        assert poly(2, 5) - poly(1, 5) == ONE
        assert -poly(1, -2) == poly(-1, 2)

    def test_evaluate(self):
        assert poly(1, 2, 1).evaluate(2) == 9
        assert q_factorial(3).evaluate(2) == 21

    def test_divmod_exact_and_with_remainder(self):
        quotient, remainder = divmod(poly(-1, 0, 1), poly(-1, 1))
        assert quotient == poly(1, 1) and remainder.is_zero()
        quotient, remainder = divmod(poly(1, 1, 1), poly(-1, 1))
        assert quotient * poly(-1, 1) + remainder == poly(1, 1, 1)

    def test_division_by_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            divmod(ONE, ZERO)

    def test_exact_div_rejects_inexact(self):
        with pytest.raises(ValueError):
            poly(1, 1, 1).exact_div(poly(-1, 1))

    def test_randomized_ring_axioms(self):
        rng = random.Random(20240813)

        def random_poly():
            degree = rng.randrange(0, 6)
            return QPolynomial([Fraction(rng.randrange(-5, 6),
                                         rng.randrange(1, 4))
                                for _ in range(degree + 1)])

        for _ in range(60):
            a, b, c = random_poly(), random_poly(), random_poly()
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            assert a * b == b * a

    def test_string_forms(self):
        assert str(ZERO) == "0"
        assert str(poly(0, 2, 1)) == "q^2+2*q"
        assert str(poly(-1, 0, 1)) == "q^2-1"

    def test_named_dispatch(self):
        assert poly_arith(poly(1, 1), poly(-1, 1), "mul") == poly(-1, 0, 1)
        assert poly_arith(Q, ONE, "add") == poly(1, 1)
        assert poly_arith(Q, Q, "sub").is_zero()
        with pytest.raises(ValueError):
            poly_arith(Q, Q, "div")


class TestSerialization:
    def test_coeff_strings_match_contract(self):
        assert poly_coeff_strings(poly(0, 2, 1)) == ["0", "2", "1"]

    def test_round_trip_with_fractions(self):
        p = QPolynomial([Fraction(1, 2), 3, Fraction(-7, 5)])
        assert poly_from_coeff_strings(poly_coeff_strings(p)) == p


class TestRationalFunctions:
    def test_common_factor_cancels(self):
        r = ratfun_reduce(poly(-1, 0, 1), poly(-1, 1))
        assert r.num == poly(1, 1) and r.den == ONE

    def test_zero_numerator(self):
        r = ratfun_reduce(ZERO, poly(0, 0, 0, 1))
        assert r.num == ZERO and r.den == ONE

    def test_monic_normalization(self):
        r = ratfun_reduce(poly(0, 2), poly(2, -2))
        assert r.num == poly(0, -1) and r.den == poly(-1, 1)
        # cross-multiplied check against the unreduced pair
        assert r.num * poly(2, -2) == poly(0, 2) * r.den

    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            ratfun_reduce(ONE, ZERO)

    def test_reduce_is_idempotent_and_scale_invariant(self):
        rng = random.Random(77)
        for _ in range(40):
            num = QPolynomial([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 5))])
            den = QPolynomial([rng.randrange(-4, 5) for _ in range(rng.randrange(1, 5))])
            scale = QPolynomial([rng.randrange(-3, 4) for _ in range(rng.randrange(1, 4))])
            if den.is_zero() or scale.is_zero():
                continue
            reduced = ratfun_reduce(num, den)
            again = ratfun_reduce(reduced.num, reduced.den)
            assert again == reduced
            assert ratfun_reduce(num * scale, den * scale) == reduced

    def test_field_operations(self):
        half = QRationalFunction(ONE, poly(1, 1))
        assert half + half == QRationalFunction(poly(2), poly(1, 1))
        assert half * QRationalFunction(poly(1, 1), ONE) == QRationalFunction(ONE)
        assert (half - half).is_zero()
        with pytest.raises(ZeroDivisionError):
            half / QRationalFunction(ZERO)

    def test_evaluate(self):
        r = QRationalFunction(poly(0, 2, 1), (poly(1, 1) * poly(1, 1)))
        assert r.evaluate(2) == Fraction(8, 9)
        with pytest.raises(ZeroDivisionError):
            QRationalFunction(ONE, poly(-1, 1)).evaluate(1)


class TestTruncatedSeries:
    def test_geometric_series(self):
        s = TruncatedSeries(3, [ONE, -ONE, ZERO, ZERO])
        assert series_reciprocal(s) == TruncatedSeries(3, [ONE, ONE, ONE, ONE])

    def test_reciprocal_of_one(self):
        assert series_reciprocal(TruncatedSeries.one(2)) == TruncatedSeries.one(2)

    def test_zero_constant_term_rejected(self):
        with pytest.raises(ValueError):
            series_reciprocal(TruncatedSeries(1, [ZERO, ONE]))

    def test_wrong_length_rejected(self):
        with pytest.raises(ValueError):
            TruncatedSeries(2, [ONE, ONE])

    def test_alternating_factorial_series_coefficient_two(self):
        # reciprocal of 1 - z + z^2/([2]_q!)^2 has (q^2+2q)/(1+q)^2 at z^2
        two_fact = q_factorial(2)
        s = TruncatedSeries(2, [QRationalFunction(ONE),
                               QRationalFunction(-ONE),
                               QRationalFunction(ONE, two_fact * two_fact)])
        inverse = series_reciprocal(s)
        expected = QRationalFunction(poly(0, 2, 1), poly(1, 1) * poly(1, 1))
        assert inverse.coeffs[2] == expected

    def test_reciprocal_times_series_is_one_at_all_orders(self):
        for order in range(6):
            coeffs = [QRationalFunction(ONE if n % 2 == 0 else -ONE,
                                        q_factorial(n) * q_factorial(n))
                      for n in range(order + 1)]
            s = TruncatedSeries(order, coeffs)
            assert s * series_reciprocal(s) == TruncatedSeries.one(order)


class TestHelpers:
    def test_q_integer_and_factorial(self):
        assert q_integer(0).is_zero()
        assert q_integer(3) == poly(1, 1, 1)
        assert q_factorial(0) == ONE
        assert q_factorial(3) == poly(1, 1, 1) * poly(1, 1)

    def test_one_minus_q_power(self):
        assert one_minus_q_power(1) == poly(1, -1)
        assert one_minus_q_power(0).is_zero()

    def test_poly_gcd_is_monic(self):
        g = poly_gcd(poly(-2, 0, 2), poly(2, 2))
        assert g == poly(1, 1)
        assert poly_gcd(ZERO, ZERO).is_zero()
