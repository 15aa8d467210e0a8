"""Tests for exact rationals and rational polynomials."""

import random
from fractions import Fraction
from math import comb, factorial, prod

import pytest

from prymcalc.algebra.exact import (
    RationalPolynomial,
    binomial_polynomial,
    format_polynomial,
    format_rational,
    parse_rational,
    rational_arith,
)
from prymcalc.errors import ComputationError


class TestParseRational:
    """Tests for parse_rational."""

    def test_parses_fraction(self):
        assert parse_rational("115071/2") == Fraction(115071, 2)

    def test_reduces(self):
        assert parse_rational("6/4") == Fraction(3, 2)

    def test_parses_integer_and_sign(self):
        assert parse_rational("-3") == Fraction(-3)
        assert parse_rational("+7") == Fraction(7)

    def test_accepts_typographic_minus(self):
        """The printed minus sign parses like '-'."""
        assert parse_rational("−31020") == Fraction(-31020)

    def test_passes_numbers_through(self):
        assert parse_rational(5) == Fraction(5)
        assert parse_rational(Fraction(1, 3)) == Fraction(1, 3)

    def test_zero_denominator(self):
        with pytest.raises(ComputationError) as exc:
            parse_rational("1/0")
        assert exc.value.code == "E101"

    @pytest.mark.parametrize("text", ["", "1/", "a/b", "1.5", "1/2/3"])
    def test_malformed(self, text):
        with pytest.raises(ComputationError) as exc:
            parse_rational(text)
        assert exc.value.code == "E103"

    def test_rejects_bool(self):
        with pytest.raises(ComputationError) as exc:
            parse_rational(True)
        assert exc.value.code == "E103"


class TestFormatRational:
    """Tests for format_rational."""

    def test_integer_has_no_denominator(self):
        assert format_rational(Fraction(4, 2)) == "2"

    def test_negative_fraction(self):
        assert format_rational(Fraction(-115071, 2)) == "-115071/2"

    def test_parse_inverts_format(self):
        """Formatting then parsing returns the same value."""
        rng = random.Random(15)
        for _ in range(50):
            value = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
            assert parse_rational(format_rational(value)) == value


class TestRationalArith:
    """Tests for rational_arith."""

    def test_operations(self):
        a, b = Fraction(1, 2), Fraction(1, 3)
        assert rational_arith(a, b, "add") == Fraction(5, 6)
        assert rational_arith(a, b, "sub") == Fraction(1, 6)
        assert rational_arith(a, b, "mul") == Fraction(1, 6)
        assert rational_arith(a, b, "div") == Fraction(3, 2)

    def test_division_by_zero(self):
        with pytest.raises(ComputationError) as exc:
            rational_arith(Fraction(1), Fraction(0), "div")
        assert exc.value.code == "E101"

    def test_unknown_op(self):
        with pytest.raises(ComputationError) as exc:
            rational_arith(Fraction(1), Fraction(1), "pow")  # type: ignore[arg-type]
        assert exc.value.code == "E100"


class TestRationalPolynomial:
    """Tests for RationalPolynomial."""

    def test_coefficients_by_increasing_degree(self):
        p = RationalPolynomial.from_coefficients([7, -7, 7])
        assert p.coefficients == (Fraction(7), Fraction(-7), Fraction(7))
        assert p.degree == 2
        assert p.leading_coefficient == 7

    def test_zero_polynomial(self):
        p = RationalPolynomial.from_coefficients([0, 0])
        assert p.coefficients == ()
        assert p.degree == -1
        assert str(p) == "0"

    def test_evaluate(self):
        p = RationalPolynomial.from_coefficients([7, -7, 7])
        assert p.evaluate(4) == 91
        assert p.evaluate("1/2") == Fraction(21, 4)

    def test_arithmetic(self):
        p = RationalPolynomial.from_coefficients([1, 1])
        q = RationalPolynomial.from_coefficients([-1, 1])
        assert (p * q).coefficients == (Fraction(-1), Fraction(0), Fraction(1))
        assert (p + q).coefficients == (Fraction(0), Fraction(2))
        assert (p - q).coefficients == (Fraction(2),)
        assert p.scale("1/2").coefficients == (Fraction(1, 2), Fraction(1, 2))

    def test_format(self):
        p = RationalPolynomial.from_coefficients([7, -7, 7])
        assert format_polynomial(p) == "7*t^2 - 7*t + 7"

    def test_format_unit_and_fractional_coefficients(self):
        p = RationalPolynomial.from_coefficients(["-1/2", 0, -1])
        assert format_polynomial(p) == "-t^2 - 1/2"


class TestBinomialPolynomial:
    """Tests for binomial_polynomial."""

    def test_order_zero_is_one(self):
        assert binomial_polynomial(3, 0).coefficients == (Fraction(1),)

    def test_matches_integer_binomials(self):
        """binom(t + 5, 5) evaluates to the section count of O(t) on P^5."""
        p = binomial_polynomial(5, 5)
        for t in range(0, 8):
            assert p.evaluate(t) == comb(t + 5, 5)

    def test_negative_order(self):
        with pytest.raises(ComputationError) as exc:
            binomial_polynomial(0, -1)
        assert exc.value.code == "E102"


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))


class TestExactProperties:
    """Seeded round-trip and canonical-form properties."""

    def test_add_then_sub(self):
        rng = random.Random(6006)
        for _ in range(200):
            a, b = _random_rational(rng), _random_rational(rng)
            assert rational_arith(rational_arith(a, b, "add"), b, "sub") == a

    def test_mul_then_div(self):
        rng = random.Random(31020)
        for _ in range(200):
            a, b = _random_rational(rng), _random_rational(rng)
            if b == 0:
                continue
            assert rational_arith(rational_arith(a, b, "mul"), b, "div") == a

    def test_canonical_form_is_idempotent(self):
        """Non-reduced input renders in lowest terms, and rendering again changes nothing."""
        rng = random.Random(793)
        for _ in range(200):
            scale = rng.randint(1, 50)
            numerator, denominator = rng.randint(-1000, 1000), rng.randint(1, 1000)
            text = format_rational(parse_rational(f"{numerator * scale}/{denominator * scale}"))
            assert format_rational(parse_rational(text)) == text
            assert parse_rational(text) == Fraction(numerator, denominator)

    def test_polynomial_canonical_form_is_idempotent(self):
        p = RationalPolynomial.from_coefficients(["2/4", "-6/3", 0])
        assert RationalPolynomial(p.poly) == p
        assert str(RationalPolynomial.from_coefficients(p.coefficients)) == str(p)

    def test_binomial_polynomial_matches_falling_factorial(self):
        """binom(t + shift, n) at integer t, including negative arguments."""
        rng = random.Random(2015)
        for _ in range(200):
            shift, n, t = rng.randint(-10, 10), rng.randint(0, 8), rng.randint(-10, 10)
            top = t + shift
            expected = Fraction(prod(top - i for i in range(n)), factorial(n))
            assert binomial_polynomial(shift, n).evaluate(t) == expected
            if top >= 0:
                assert expected == comb(top, n)
