"""Grothendieck-Riemann-Roch in degree one for the universal curve over the linear-series space.

Fiber classes are polynomials in ``cL = c1(L)``, ``cP = c1(P)``,
``cw = c1(ω)`` (degree 1) and ``c2 = c2(Ω)`` (degree 2), truncated above
total degree 2. Fiber integration lowers the degree by one, so only the
degree-2 part contributes to first Chern classes on the base.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import StrEnum
from fractions import Fraction

import sympy as sp

from prymcalc.algebra.exact import RationalLike, from_sympy, parse_rational, to_sympy
from prymcalc.algebra.picard import D0P, D0PP, D0RAM, LAMBDA, FormalVector, format_linear
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)

CL, CP, CW, C2 = sp.symbols("cL cP cw c2")
GENERATORS = (CL, CP, CW, C2)
WEIGHTS = (1, 1, 1, 2)
MAX_DEGREE = 2

# Exponent vectors (cL, cP, cw, c2) of the monomials that survive truncation
MONOMIALS: dict[str, tuple[int, int, int, int]] = {
    "1": (0, 0, 0, 0),
    "cL": (1, 0, 0, 0),
    "cP": (0, 1, 0, 0),
    "cw": (0, 0, 1, 0),
    "cL^2": (2, 0, 0, 0),
    "cL*cP": (1, 1, 0, 0),
    "cL*cw": (1, 0, 1, 0),
    "cP^2": (0, 2, 0, 0),
    "cP*cw": (0, 1, 1, 0),
    "cw^2": (0, 0, 2, 0),
    "c2": (0, 0, 0, 1),
}
_NAMES = {exponents: name for name, exponents in MONOMIALS.items()}

A_CLASS = "a"
B_CLASS = "b"
C_CLASS = "c"
D_CLASS = "d"
BASE_GENERATORS = (LAMBDA, A_CLASS, B_CLASS, C_CLASS, D_CLASS, D0P, D0PP, D0RAM)


def _weight(exponents: tuple[int, ...]) -> int:
    return sum(w * e for w, e in zip(WEIGHTS, exponents, strict=True))


def _truncate(poly: sp.Poly) -> sp.Poly:
    kept = {m: c for m, c in poly.terms() if _weight(m) <= MAX_DEGREE and c != 0}
    if not kept:
        return sp.Poly(0, *GENERATORS, domain=sp.QQ)
    return sp.Poly.from_dict(kept, *GENERATORS, domain=sp.QQ)


@dataclass(frozen=True)
class FiberClassExpr:
    """Truncated polynomial in the fiber generators with exact coefficients."""

    poly: sp.Poly

    def __post_init__(self) -> None:
        poly = self.poly
        if poly.gens != GENERATORS or poly.get_domain() != sp.QQ:
            poly = sp.Poly(poly.as_expr(), *GENERATORS, domain=sp.QQ)
        object.__setattr__(self, "poly", _truncate(poly))

    @classmethod
    def from_terms(cls, terms: Mapping[str, RationalLike]) -> "FiberClassExpr":
        """Build from ``{"cL^2": "1/2", "1": 1, ...}``."""
        expr = sp.Integer(0)
        for name, value in terms.items():
            if name not in MONOMIALS:
                raise ComputationError("E100", f"unknown fiber monomial {name!r}")
            monomial = sp.Mul(*(g**e for g, e in zip(GENERATORS, MONOMIALS[name], strict=True)))
            expr += to_sympy(parse_rational(value)) * monomial
        return cls(sp.Poly(expr, *GENERATORS, domain=sp.QQ))

    @classmethod
    def one(cls) -> "FiberClassExpr":
        return cls.from_terms({"1": 1})

    @property
    def terms(self) -> dict[str, Fraction]:
        return {_NAMES[m]: from_sympy(c) for m, c in self.poly.terms() if c != 0}

    def coefficient(self, name: str) -> Fraction:
        return self.terms.get(name, Fraction(0))

    def degree_part(self, degree: int) -> "FiberClassExpr":
        kept = {m: c for m, c in self.poly.terms() if _weight(m) == degree}
        if not kept:
            return FiberClassExpr(sp.Poly(0, *GENERATORS, domain=sp.QQ))
        return FiberClassExpr(sp.Poly.from_dict(kept, *GENERATORS, domain=sp.QQ))

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms; None for zero or mixed expressions."""
        degrees = {_weight(m) for m, c in self.poly.terms() if c != 0}
        return degrees.pop() if len(degrees) == 1 else None

    def is_zero(self) -> bool:
        return self.poly.is_zero

    def __add__(self, other: "FiberClassExpr") -> "FiberClassExpr":
        return FiberClassExpr(self.poly + other.poly)

    def __sub__(self, other: "FiberClassExpr") -> "FiberClassExpr":
        return FiberClassExpr(self.poly - other.poly)

    def __mul__(self, other: "FiberClassExpr") -> "FiberClassExpr":
        return fiber_mul(self, other)

    def scale(self, factor: RationalLike) -> "FiberClassExpr":
        return FiberClassExpr(self.poly * to_sympy(parse_rational(factor)))

    def __str__(self) -> str:
        order = list(MONOMIALS)
        items = sorted(self.terms.items(), key=lambda item: order.index(item[0]))
        return format_linear(items)


def fiber_mul(x: FiberClassExpr, y: FiberClassExpr) -> FiberClassExpr:
    """Product with everything above degree 2 dropped."""
    return FiberClassExpr(x.poly * y.poly)


def chern_character_line(c1: FiberClassExpr) -> FiberClassExpr:
    """
    Chern character 1 + c1 + c1²/2 of a line bundle, truncated.

    Raises:
        ComputationError: E130 when ``c1`` is not homogeneous of degree 1
    """
    if c1.is_zero():
        return FiberClassExpr.one()
    if c1.homogeneous_degree() != 1:
        raise ComputationError("E130", f"got {c1}")
    return FiberClassExpr.one() + c1 + fiber_mul(c1, c1).scale(Fraction(1, 2))


def todd_factor() -> FiberClassExpr:
    """Todd class of the relative tangent bundle: 1 - cw/2 + (cw² + c2)/12."""
    return FiberClassExpr.from_terms(
        {"1": 1, "cw": Fraction(-1, 2), "cw^2": Fraction(1, 12), "c2": Fraction(1, 12)}
    )


@dataclass(frozen=True, eq=False)
class BaseClassExpr(FormalVector):
    """Formal combination of λ, a, b, c, d and the three δ0-type classes."""

    coefficients: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self._normalize()

    def basis(self) -> tuple[str, ...]:
        return BASE_GENERATORS

    def _rebuild(self, coefficients: Mapping[str, Fraction]) -> "BaseClassExpr":
        return BaseClassExpr(coefficients)

    @classmethod
    def generator(cls, key: str) -> "BaseClassExpr":
        return cls({key: Fraction(1)})


# Degree-2 monomial -> its image under fiber integration
_PUSHFORWARD_RULES: dict[str, dict[str, Fraction]] = {
    "cL^2": {A_CLASS: Fraction(1)},
    "cL*cw": {B_CLASS: Fraction(1)},
    "cP^2": {D0RAM: Fraction(-1, 2)},
    "cP*cw": {},
    # forced by c1 of the pushforward of L ⊗ P
    "cL*cP": {},
}


def fiber_pushforward_deg1(x: FiberClassExpr) -> BaseClassExpr:
    """
    Degree-one part of the fiber integral of ``x``.

    cw² and c2 are only pushable together: α(cw² + c2) maps to 12αλ.

    Raises:
        ComputationError: E131 when cw² and c2 carry different coefficients
    """
    quadratic = x.degree_part(2)
    omega_sq = quadratic.coefficient("cw^2")
    c2 = quadratic.coefficient("c2")
    if omega_sq != c2:
        raise ComputationError(
            "E131", f"cw^2 and c2 must appear as a multiple of cw^2 + c2, got {omega_sq} and {c2}"
        )

    result: dict[str, Fraction] = {}
    if omega_sq:
        result[LAMBDA] = 12 * omega_sq
    for name, value in quadratic.terms.items():
        for key, factor in _PUSHFORWARD_RULES.get(name, {}).items():
            result[key] = result.get(key, Fraction(0)) + factor * value
    return BaseClassExpr(result)


class BundleKind(StrEnum):
    """Pushforward bundles appearing in the degeneracy locus."""

    L_SQUARED = "L_squared"
    L_TWISTED = "L_twisted"
    L_PLAIN = "L_plain"
    TRIVIAL = "trivial"


def c1_pushforward_bundle(kind: BundleKind | str) -> BaseClassExpr:
    """
    First Chern class of the direct image of a line bundle on the universal curve.

    L⊗² has no higher direct image; for L ⊗ P the class d = c1(R¹) is added.
    c1 of the direct image of L itself is the opaque generator c.
    """
    kind = BundleKind(kind)
    todd = todd_factor()
    if kind is BundleKind.L_PLAIN:
        return BaseClassExpr.generator(C_CLASS)
    if kind is BundleKind.TRIVIAL:
        result = fiber_pushforward_deg1(todd)
    elif kind is BundleKind.L_SQUARED:
        c1 = FiberClassExpr.from_terms({"cL": 2})
        result = fiber_pushforward_deg1(fiber_mul(chern_character_line(c1), todd))
    else:
        c1 = FiberClassExpr.from_terms({"cL": 1, "cP": 1})
        gr = fiber_pushforward_deg1(fiber_mul(chern_character_line(c1), todd))
        result = gr + BaseClassExpr.generator(D_CLASS)
    logger.debug("c1 of pushforward %s: %s", kind.value, result)
    return result
