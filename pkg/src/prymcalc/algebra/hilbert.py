"""Hilbert polynomials and section counts from graded free resolutions over P^n.

A resolution is stored with the ideal-sheaf convention

    0 -> F_k -> ... -> F_1 -> F_0 -> I -> 0,   F_i = ⊕ O(twist)

and the quotient O/I is derived from it. Two regimes are kept apart:
Euler characteristics use the polynomial binomial (valid for every t), while
h0 uses the truncated one (zero for negative degrees).
"""

from collections.abc import Iterable
from dataclasses import dataclass
from math import comb
from typing import NamedTuple

from prymcalc.algebra.exact import RationalPolynomial, binomial_polynomial
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)


@dataclass(frozen=True)
class ResolutionTerm:
    """F_index = ⊕ O(twist) over ``twists``."""

    index: int
    twists: tuple[int, ...]


@dataclass(frozen=True)
class GradedFreeResolution:
    """Free resolution of an ideal sheaf on P^ambient_dim."""

    ambient_dim: int
    terms: tuple[ResolutionTerm, ...] = ()
    name: str | None = None

    def __post_init__(self) -> None:
        if self.ambient_dim < 1:
            raise ComputationError("E150", f"ambient dimension {self.ambient_dim}")
        for position, term in enumerate(self.terms):
            if term.index != position:
                raise ComputationError(
                    "E150", f"homological indices must run 0, 1, 2, ...; got {term.index}"
                )
            if not term.twists:
                raise ComputationError("E150", f"term {term.index} has no summands")

    @property
    def length(self) -> int:
        return len(self.terms) - 1


# === line bundles on P^n ===


def line_bundle_cohomology(n: int, m: int, i: int) -> int:
    """h^i(P^n, O(m)); only h0 (m >= 0) and h^n (m <= -n-1) are nonzero."""
    if i == 0 and m >= 0:
        return comb(m + n, n)
    if i == n and m <= -n - 1:
        return comb(-m - 1, n)
    return 0


def _h0(n: int, m: int) -> int:
    return line_bundle_cohomology(n, m, 0)


def _term_cohomology(n: int, twists: Iterable[int], twist: int, i: int) -> int:
    return sum(line_bundle_cohomology(n, twist + tw, i) for tw in twists)


# === polynomials and counts ===


def hilbert_polynomial_of_quotient(res: GradedFreeResolution) -> RationalPolynomial:
    """
    χ(O/I (t)) = binom(t+n, n) - Σ_i (-1)^i Σ_twist binom(t+twist+n, n).
    """
    n = res.ambient_dim
    result = binomial_polynomial(n, n)
    for term in res.terms:
        sign = -1 if term.index % 2 == 0 else 1
        for tw in term.twists:
            result = result + binomial_polynomial(tw + n, n).scale(sign)
    logger.debug("Hilbert polynomial of %s: %s", res.name or "resolution", result)
    return result


def _check_ideal_guard(res: GradedFreeResolution, twist: int) -> None:
    n = res.ambient_dim
    for term in res.terms[1:]:
        value = _term_cohomology(n, term.twists, twist, term.index)
        if value:
            raise ComputationError(
                "E151", f"h^{term.index}(F_{term.index}({twist})) = {value}"
            )


def ideal_section_count(res: GradedFreeResolution, twist: int) -> int:
    """
    h0(I(t)) as the alternating sum of h0 over the twisted resolution terms.

    Valid when H^i(F_i(t)) = 0 for every i >= 1.

    Raises:
        ComputationError: E151 when that vanishing fails
    """
    _check_ideal_guard(res, twist)
    n = res.ambient_dim
    total = 0
    for term in res.terms:
        sign = 1 if term.index % 2 == 0 else -1
        total += sign * sum(_h0(n, twist + tw) for tw in term.twists)
    return total


def quotient_section_count(res: GradedFreeResolution, twist: int) -> int:
    """
    h0(O/I (t)) = h0(O(t)) - h0(I(t)).

    Also needs h1(I(t)) = 0, checked through H1(F_0(t)) and H^{i+1}(F_i(t)).

    Raises:
        ComputationError: E151 when a guard fails
    """
    ideal = ideal_section_count(res, twist)
    n = res.ambient_dim
    for term in res.terms:
        value = _term_cohomology(n, term.twists, twist, term.index + 1)
        if value:
            raise ComputationError(
                "E151", f"h^{term.index + 1}(F_{term.index}({twist})) = {value}"
            )
    return _h0(n, twist) - ideal


@dataclass(frozen=True)
class SurfaceInvariants:
    """Numerical invariants of a surface read off its Hilbert polynomial."""

    degree: int
    chi_O: int
    p_g: int
    q: int
    K_squared: int | None
    hilbert_poly: RationalPolynomial


def surface_invariants(
    res: GradedFreeResolution, canonical_embedding: bool = True
) -> SurfaceInvariants:
    """
    Degree, χ(O_S), p_g, q and K² of the surface cut out by ``res``.

    p_g is read at twist 1 (h0(O_S(1)) = h0(K_S) for a canonical embedding);
    K² equals the degree only under ``canonical_embedding``.

    Raises:
        ComputationError: E152 when the quotient is not two-dimensional
    """
    poly = hilbert_polynomial_of_quotient(res)
    if poly.degree != 2:
        raise ComputationError("E152", f"Hilbert polynomial {poly} has degree {poly.degree}")
    degree = 2 * poly.leading_coefficient
    if degree.denominator != 1:
        raise ComputationError("E152", f"non-integral degree {degree}")
    chi = poly.evaluate(0)
    p_g = quotient_section_count(res, 1)
    q = p_g - (int(chi) - 1)
    return SurfaceInvariants(
        degree=int(degree),
        chi_O=int(chi),
        p_g=p_g,
        q=q,
        K_squared=int(degree) if canonical_embedding else None,
        hilbert_poly=poly,
    )


class CurveInvariants(NamedTuple):
    curve_genus: int
    embedding_degree: int


def adjunction_curve(k_squared: int) -> CurveInvariants:
    """
    Hyperplane section C of a canonically embedded surface.

    ω_C = ω_S⊗²|_C, so 2g - 2 = 2K², and C has degree K².
    """
    if k_squared < 0:
        raise ComputationError("E100", f"K^2 must be >= 0, got {k_squared}")
    return CurveInvariants(k_squared + 1, k_squared)


def bicanonical_count(inv: SurfaceInvariants) -> int:
    """h0(S, ω_S⊗²) = χ(O_S) + K² by Riemann-Roch on a surface of general type."""
    if inv.K_squared is None:
        raise ComputationError("E100", "K^2 unknown without a canonical embedding")
    return inv.chi_O + inv.K_squared
