"""Exact rational scalars and rational polynomials in one variable.

``fractions.Fraction`` is the scalar of every computation in the package;
polynomials are ``sympy.Poly`` objects over ``QQ`` wrapped in an immutable
value type with a stable string form.
"""

import re
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import sympy as sp

from prymcalc.errors import ComputationError

ExactRational = Fraction
RationalOp = Literal["add", "sub", "mul", "div"]
RationalLike = Fraction | int | str

# Degree reported for the zero polynomial
ZERO_DEGREE = -1

T = sp.Symbol("t")

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse a rational from its string form ``"p/q"`` (or pass numbers through).

    Accepts the typographic minus sign ``−`` used in printed formulas.

    Args:
        value: ``"p/q"``, ``"p"``, an int or a Fraction

    Returns:
        The reduced Fraction

    Raises:
        ComputationError: E103 for malformed strings, E101 for a zero denominator
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ComputationError("E103", f"booleans are not rationals: {value!r}")
    if isinstance(value, int):
        return Fraction(value)

    match = _RATIONAL_PATTERN.match(value.replace("−", "-"))
    if match is None:
        raise ComputationError("E103", f"cannot parse {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ComputationError("E101", f"in {value!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction | int) -> str:
    """Render a rational as ``"p/q"``, omitting ``q`` when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def rational_arith(a: Fraction, b: Fraction, op: RationalOp) -> Fraction:
    """
    Apply one exact arithmetic operation.

    Args:
        a: Left operand
        b: Right operand
        op: One of add, sub, mul, div

    Returns:
        The exact result in lowest terms

    Raises:
        ComputationError: E101 on division by zero, E100 on an unknown op
    """
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ComputationError("E101", f"{format_rational(a)} / 0")
        return a / b
    raise ComputationError("E100", f"unknown operation {op!r}")


def to_sympy(value: Fraction | int) -> sp.Rational:
    """Convert an exact scalar to a sympy Rational."""
    value = Fraction(value)
    return sp.Rational(value.numerator, value.denominator)


def from_sympy(value: sp.Expr) -> Fraction:
    """Convert a sympy rational number back to a Fraction."""
    rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in ``t`` with exact rational coefficients."""

    poly: sp.Poly

    def __post_init__(self) -> None:
        # Canonical form: a single generator t over QQ
        if self.poly.gens != (T,) or self.poly.get_domain() != sp.QQ:
            object.__setattr__(self, "poly", sp.Poly(self.poly.as_expr(), T, domain=sp.QQ))

    @classmethod
    def from_coefficients(cls, coefficients: Iterable[RationalLike]) -> "RationalPolynomial":
        """Build from coefficients listed by increasing degree."""
        values = [parse_rational(c) for c in coefficients]
        expr = sp.Add(*(to_sympy(c) * T**k for k, c in enumerate(values)))
        return cls(sp.Poly(expr, T, domain=sp.QQ))

    @classmethod
    def constant(cls, value: RationalLike) -> "RationalPolynomial":
        return cls.from_coefficients([value])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        """Coefficients by increasing degree, without trailing zeros."""
        if self.poly.is_zero:
            return ()
        return tuple(from_sympy(c) for c in reversed(self.poly.all_coeffs()))

    @property
    def degree(self) -> int:
        if self.poly.is_zero:
            return ZERO_DEGREE
        return int(self.poly.degree())

    @property
    def leading_coefficient(self) -> Fraction:
        return from_sympy(self.poly.LC())

    def evaluate(self, t: RationalLike) -> Fraction:
        return from_sympy(self.poly.eval(to_sympy(parse_rational(t))))

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return RationalPolynomial(self.poly + other.poly)

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return RationalPolynomial(self.poly - other.poly)

    def __mul__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return RationalPolynomial(self.poly * other.poly)

    def scale(self, factor: RationalLike) -> "RationalPolynomial":
        return RationalPolynomial(self.poly * to_sympy(parse_rational(factor)))

    def __str__(self) -> str:
        return format_polynomial(self)


def format_polynomial(p: RationalPolynomial) -> str:
    """Render as ``7*t^2 - 7*t + 7`` with exact coefficients."""
    pieces: list[str] = []
    for degree in range(len(p.coefficients) - 1, -1, -1):
        coefficient = p.coefficients[degree]
        if coefficient == 0:
            continue
        magnitude = abs(coefficient)
        if degree == 0:
            body = format_rational(magnitude)
        else:
            power = "t" if degree == 1 else f"t^{degree}"
            body = power if magnitude == 1 else f"{format_rational(magnitude)}*{power}"
        if not pieces:
            pieces.append(f"-{body}" if coefficient < 0 else body)
        else:
            pieces.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return " ".join(pieces) if pieces else "0"


def binomial_polynomial(shift: int, n: int) -> RationalPolynomial:
    """
    The polynomial binom(t + shift, n) = (t+shift)(t+shift-1)...(t+shift-n+1)/n!.

    Args:
        shift: Integer shift of the variable
        n: Order, n >= 0

    Returns:
        Degree-n polynomial with exact coefficients

    Raises:
        ComputationError: E102 when n < 0
    """
    if n < 0:
        raise ComputationError("E102", f"n = {n}")
    falling = sp.Mul(*(T + shift - i for i in range(n)))
    return RationalPolynomial(sp.Poly(falling / sp.factorial(n), T, domain=sp.QQ))
