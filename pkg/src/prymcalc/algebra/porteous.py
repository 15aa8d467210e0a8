"""Degeneracy class of the multiplication map and its pushforward to the Prym moduli space.

On the space of triples [C, η, L] with L a g^4_16 (genus 15), the map

    Sym²H0(L) ⊕ Sym²H0(L ⊗ η) -> H0(L⊗²)

is a morphism of bundles of equal rank 18. Its first degeneracy class is
pushed forward along the degree-N forgetful map σ using a fixed table of
images of the tautological generators.
"""

from collections.abc import Mapping
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from prymcalc.algebra.brill_noether import (
    GENERIC_TWIST_H0,
    BNParams,
    mult_map_dimension_balance,
    series_count,
)
from prymcalc.algebra.exact import RationalLike, format_rational, parse_rational
from prymcalc.algebra.grr import (
    A_CLASS,
    B_CLASS,
    C_CLASS,
    D_CLASS,
    BaseClassExpr,
    BundleKind,
    c1_pushforward_bundle,
)
from prymcalc.algebra.picard import (
    D0P,
    D0PP,
    D0RAM,
    LAMBDA,
    PrymDivisorClass,
    factored_form,
    format_factored,
)
from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)

DEGENERACY_PARAMS = BNParams(15, 4, 16)

# Images of a, b, c: (λ, δ0' = δ0'', δ0ram) coefficients
SIGMA_ROWS: dict[str, tuple[int, int, int]] = {
    A_CLASS: (-146784, 20856, 41712),
    B_CLASS: (4224, 264, 528),
    C_CLASS: (-48279, 6930, 13860),
}

# [D15]^virt = 31020 (3127/470 λ - (δ0' + δ0'') - 3487/1880 δ0ram) - 3 σ*(d)
FACTORED_SCALE = Fraction(31020)
FACTORED_LAMBDA = Fraction(3127, 470)
FACTORED_D0RAM = Fraction(3487, 1880)
EXPECTED_D_MULTIPLE = Fraction(-3)

DEGENERATION_COMPONENTS = (D0PP,)


@dataclass(frozen=True)
class SigmaPushforwardTable:
    """Images under σ of the generators of the base class group."""

    params: BNParams
    degree: int
    rows: Mapping[str, PrymDivisorClass]

    @property
    def genus(self) -> int:
        return self.params.g


@lru_cache(maxsize=1)
def sigma_table() -> SigmaPushforwardTable:
    """
    The table for (g, r, d) = (15, 4, 16).

    λ and the δ0-type classes are pulled back from the base, so σ* multiplies them by N.
    """
    genus = DEGENERACY_PARAMS.g
    n = series_count(DEGENERACY_PARAMS)
    rows: dict[str, PrymDivisorClass] = {
        key: PrymDivisorClass(genus, {LAMBDA: lam, D0P: boundary, D0PP: boundary, D0RAM: ram})
        for key, (lam, boundary, ram) in SIGMA_ROWS.items()
    }
    for key in (LAMBDA, D0P, D0PP, D0RAM):
        rows[key] = PrymDivisorClass.generator(genus, key).scale(n)
    return SigmaPushforwardTable(DEGENERACY_PARAMS, n, MappingProxyType(rows))


@dataclass(frozen=True)
class VirtualDivisorClass:
    """A Prym class plus a multiple of the symbolic term σ*(d)."""

    numeric_part: PrymDivisorClass
    d_multiple: Fraction

    def __add__(self, other: "VirtualDivisorClass") -> "VirtualDivisorClass":
        return VirtualDivisorClass(
            self.numeric_part + other.numeric_part, self.d_multiple + other.d_multiple
        )

    def scale(self, factor: RationalLike) -> "VirtualDivisorClass":
        number = parse_rational(factor)
        return VirtualDivisorClass(self.numeric_part.scale(number), number * self.d_multiple)

    def _d_suffix(self) -> str:
        if self.d_multiple == 0:
            return ""
        sign = "-" if self.d_multiple < 0 else "+"
        return f" {sign} {format_rational(abs(self.d_multiple))}*sigma_*(d)"

    def expanded(self) -> str:
        return f"{self.numeric_part}{self._d_suffix()}"

    def factored(self) -> str:
        return f"{format_factored(self.numeric_part)}{self._d_suffix()}"


def sym2_c1(c1: BaseClassExpr, rank: int) -> BaseClassExpr:
    """
    c1(Sym² E) = (rank + 1) c1(E).

    Raises:
        ComputationError: E100 for a negative rank
    """
    if rank < 0:
        raise ComputationError("E100", f"rank must be >= 0, got {rank}")
    return c1.scale(rank + 1)


def z1_class() -> BaseClassExpr:
    """
    Porteous class c1(χ*L⊗²) - c1(Sym²χ*L) - c1(Sym²χ*(L ⊗ P)).

    Raises:
        ComputationError: E140 when source and target ranks differ
    """
    p = DEGENERACY_PARAMS
    balance = mult_map_dimension_balance(p.g, p.r, p.d, GENERIC_TWIST_H0)
    if not balance.balanced:
        raise ComputationError("E140", f"ranks {balance.lhs} and {balance.rhs}")
    z1 = (
        c1_pushforward_bundle(BundleKind.L_SQUARED)
        - sym2_c1(c1_pushforward_bundle(BundleKind.L_PLAIN), p.r + 1)
        - sym2_c1(c1_pushforward_bundle(BundleKind.L_TWISTED), GENERIC_TWIST_H0)
    )
    logger.debug("Z1 = %s", z1, extra={"genus": p.g})
    return z1


def sigma_pushforward(x: BaseClassExpr, table: SigmaPushforwardTable) -> VirtualDivisorClass:
    """
    Substitute each generator by its table row; the d coefficient stays symbolic.

    Raises:
        ComputationError: E141 for a generator without a row
    """
    numeric = PrymDivisorClass(table.genus)
    d_multiple = Fraction(0)
    for key, value in x.items():
        if key == D_CLASS:
            d_multiple += value
        elif key in table.rows:
            numeric = numeric + table.rows[key].scale(value)
        else:
            raise ComputationError("E141", f"no row for {key!r}")
    return VirtualDivisorClass(numeric, d_multiple)


def factored_virtual_class() -> VirtualDivisorClass:
    """The virtual class rebuilt from its published factored form."""
    numeric = PrymDivisorClass.from_slope_form(
        DEGENERACY_PARAMS.g,
        FACTORED_SCALE * FACTORED_LAMBDA,
        FACTORED_SCALE,
        FACTORED_SCALE,
        FACTORED_SCALE * FACTORED_D0RAM,
    )
    return VirtualDivisorClass(numeric, EXPECTED_D_MULTIPLE)


def virtual_divisor_class() -> VirtualDivisorClass:
    """
    σ*(Z1) computed through the whole pipeline.

    Raises:
        ComputationError: E142 if the pipeline and the factored form disagree
    """
    computed = sigma_pushforward(z1_class(), sigma_table())
    expected = factored_virtual_class()
    if computed != expected:
        raise ComputationError(
            "E142", f"pipeline gives {computed.expanded()}, factored form {expected.expanded()}"
        )
    scale, _ = factored_form(computed.numeric_part)
    if scale != FACTORED_SCALE:
        raise ComputationError("E142", f"factored scale {scale}")
    return computed


def degeneration_correction(
    v: VirtualDivisorClass,
    component: str = D0PP,
    order: int = 3,
    downstairs: bool = False,
) -> VirtualDivisorClass:
    """
    Subtract the boundary along which the multiplication map degenerates to order ``order``.

    By default the correction is made on the space of linear series before
    pushforward, so δ0'' loses order·N; with ``downstairs`` it loses ``order``.

    Raises:
        ComputationError: E143 for an unknown component, E100 for a negative order
    """
    if component not in DEGENERATION_COMPONENTS:
        raise ComputationError("E143", repr(component))
    if order < 0:
        raise ComputationError("E100", f"order must be >= 0, got {order}")
    multiplier = 1 if downstairs else sigma_table().degree
    correction = PrymDivisorClass.generator(v.numeric_part.genus, component).scale(
        order * multiplier
    )
    return VirtualDivisorClass(v.numeric_part - correction, v.d_multiple)
