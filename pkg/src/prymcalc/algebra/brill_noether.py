"""Brill-Noether combinatorics and section-count bookkeeping."""

from dataclasses import dataclass
from math import factorial, prod
from typing import Literal, NamedTuple

from prymcalc.errors import ComputationError
from prymcalc.logging import get_logger

logger = get_logger(__name__)

# h0(C, L ⊗ η) for a general triple [C, η, L] with (g, r, d) = (15, 4, 16)
GENERIC_TWIST_H0 = 2

# h0(ϑ ⊗ η) for the twist chosen in the bijectivity example
THETA_TWIST_H0 = 0
# Twisting by the divisor 2x adds at most this many sections
TWO_POINT_SECTIONS = 2


@dataclass(frozen=True)
class BNParams:
    """Genus, projective dimension and degree of a linear series g^r_d."""

    g: int
    r: int
    d: int

    def __post_init__(self) -> None:
        if self.g < 2 or self.r < 0 or self.d < 0:
            raise ComputationError(
                "E100", f"need g >= 2, r >= 0, d >= 0; got ({self.g}, {self.r}, {self.d})"
            )

    @property
    def k(self) -> int:
        """Gonality of the pencils used in the Petri argument, k = g - d + r + 1."""
        return self.g - self.d + self.r + 1

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.g, self.r, self.d)


def rho(p: BNParams) -> int:
    """Brill-Noether number g - (r+1)(g - d + r)."""
    return p.g - (p.r + 1) * (p.g - p.d + p.r)


def series_count(p: BNParams) -> int:
    """
    Number of g^r_d on a general curve when rho = 0.

    N = g! · (1!·2!···r!) / ((g-d+r)!···(g-d+2r)!)

    Raises:
        ComputationError: E120 when rho != 0, E124 if the quotient is not integral
    """
    if rho(p) != 0:
        raise ComputationError("E120", f"rho{p.as_tuple()} = {rho(p)}")
    h1 = p.g - p.d + p.r
    numerator = factorial(p.g) * prod(factorial(i) for i in range(1, p.r + 1))
    denominator = prod(factorial(h1 + i) for i in range(p.r + 1))
    count, remainder = divmod(numerator, denominator)
    if remainder:
        raise ComputationError("E124", f"{numerator} / {denominator}")
    logger.debug("Linear series count for %s: %d", p.as_tuple(), count, extra={"genus": p.g})
    return count


def serre_dual(p: BNParams) -> BNParams:
    """
    Residual series: a g^r_d corresponds to a g^{r'}_{2g-2-d} with r' = g - d + r - 1.

    Raises:
        ComputationError: E121 when r' < 0 or 2g - 2 - d < 0
    """
    dual_r = p.g - p.d + p.r - 1
    dual_d = 2 * p.g - 2 - p.d
    if dual_r < 0 or dual_d < 0:
        raise ComputationError("E121", f"dual of {p.as_tuple()} is ({p.g}, {dual_r}, {dual_d})")
    return BNParams(p.g, dual_r, dual_d)


def riemann_roch_h0(g: int, d: int, h1: int) -> int:
    """
    h0 = d - g + 1 + h1.

    Raises:
        ComputationError: E100 for h1 < 0, E122 for a negative result
    """
    if h1 < 0:
        raise ComputationError("E100", f"h1 must be >= 0, got {h1}")
    h0 = d - g + 1 + h1
    if h0 < 0:
        raise ComputationError("E122", f"h0 = {h0} for (g, d, h1) = ({g}, {d}, {h1})")
    return h0


class DimensionBalance(NamedTuple):
    """Dimensions of Sym²H0(L) ⊕ Sym²H0(L ⊗ η) and of H0(L⊗²)."""

    lhs: int
    rhs: int

    @property
    def balanced(self) -> bool:
        return self.lhs == self.rhs

    @property
    def excess(self) -> int:
        return self.lhs - self.rhs


def _sym2_dim(n: int) -> int:
    return n * (n + 1) // 2


def mult_map_dimension_balance(g: int, r: int, d: int, h0_twist: int) -> DimensionBalance:
    """
    Compare source and target dimensions of the multiplication map.

    Assumes h1(L⊗²) = 0, so h0(L⊗²) = 2d - g + 1.

    Raises:
        ComputationError: E120 when rho(g, r, d) != 0, E100 for negative h0_twist
    """
    p = BNParams(g, r, d)
    if rho(p) != 0:
        raise ComputationError("E120", f"rho{p.as_tuple()} = {rho(p)}")
    if h0_twist < 0:
        raise ComputationError("E100", f"h0_twist must be >= 0, got {h0_twist}")
    return DimensionBalance(_sym2_dim(r + 1) + _sym2_dim(h0_twist), 2 * d - g + 1)


@dataclass(frozen=True)
class ChainBalance:
    """Dimensions in 0 -> H0(ω⊗A^(-j-1)) -> H0(A)⊗H0(ω⊗A^(-j)) -> H0(ω⊗A^(-j+1))."""

    j: int
    kernel: int
    middle: int
    target: int

    @property
    def balanced(self) -> bool:
        return self.middle - self.kernel == self.target


@dataclass(frozen=True)
class DimChainReport:
    """Section counts h0(D, ω_D ⊗ A^(-j)) on a general k-gonal curve."""

    k: int
    r: int
    g_check: int
    chain: tuple[tuple[int, int], ...]
    balances: tuple[ChainBalance, ...]

    @property
    def surjectivity_balanced(self) -> tuple[bool, ...]:
        return tuple(b.balanced for b in self.balances)

    @property
    def all_balanced(self) -> bool:
        return all(self.surjectivity_balanced)


def petri_chain(k: int, r: int) -> DimChainReport:
    """
    Dimension chain of the base-point-free pencil trick for A^r on a k-gonal curve.

    h0(ω_D ⊗ A^(-j)) = (k-1)(r+1-j) for 0 <= j <= r+1 and g = (k-1)(r+1);
    for each j <= r the middle term minus the kernel equals the target.

    Raises:
        ComputationError: E123 for k < 3, E100 for r < 1
    """
    if k < 3:
        raise ComputationError("E123", f"k = {k}")
    if r < 1:
        raise ComputationError("E100", f"r must be >= 1, got {r}")

    def h0(j: int) -> int:
        return (k - 1) * (r + 1 - j)

    chain = tuple((j, h0(j)) for j in range(r + 2))
    balances = tuple(
        ChainBalance(j=j, kernel=h0(j + 1), middle=2 * h0(j), target=h0(j - 1))
        for j in range(r + 1)
    )
    return DimChainReport(k=k, r=r, g_check=(k - 1) * (r + 1), chain=chain, balances=balances)


class JumpReport(NamedTuple):
    """h0(C, L ⊗ η) on the Wirtinger boundary component versus the general point."""

    boundary_h0: int
    generic_h0: int
    jump: int

    @property
    def has_jump(self) -> bool:
        return self.jump > 0


def delta0pp_jump(r: int) -> JumpReport:
    """
    On a Wirtinger cover ν*η is trivial, so h0(L ⊗ η) = h0(ν*L) - 1 = r.

    A nonpositive jump is reported as such (``has_jump`` is False).
    """
    if r < 1:
        raise ComputationError("E100", f"r must be >= 1, got {r}")
    boundary = (r + 1) - 1
    report = JumpReport(boundary, GENERIC_TWIST_H0, boundary - GENERIC_TWIST_H0)
    if not report.has_jump:
        logger.debug("No jump on the Wirtinger component for r = %d", r)
    return report


# === supplementary bookkeeping ===


class ExcludedLoci(NamedTuple):
    """Brill-Noether numbers of the loci removed before extending over the boundary."""

    rho_more_sections: int
    rho_lower_degree: int

    @property
    def codimension_at_least_two(self) -> bool:
        return self.rho_more_sections <= -2 and self.rho_lower_degree <= -2


def excluded_loci_codimension(p: BNParams) -> ExcludedLoci:
    """
    rho(g, r+1, d) = -(g - d + 2(r+1)) and rho(g, r, d-1) = -(r+1) when rho(g, r, d) = 0.

    Both at most -2 means the curves with W^{r+1}_d or W^r_{d-1} nonempty
    form a locus of codimension >= 2, invisible to divisor classes.
    """
    if rho(p) != 0:
        raise ComputationError("E120", f"rho{p.as_tuple()} = {rho(p)}")
    if p.d < 1:
        raise ComputationError("E100", "degree must be positive")
    return ExcludedLoci(
        rho(BNParams(p.g, p.r + 1, p.d)),
        rho(BNParams(p.g, p.r, p.d - 1)),
    )


IrreducibilityCase = Literal["canonical", "hurwitz", "severi"]


@dataclass(frozen=True)
class IrreducibilityReport:
    """Which case of the irreducibility criterion covers the space of triples [C, η, L]."""

    params: BNParams
    dual_r: int
    case: IrreducibilityCase | None
    via_dual: bool
    component_dimension: int

    @property
    def applies(self) -> bool:
        return self.case is not None


def _case_for(r: int, g: int) -> IrreducibilityCase | None:
    if r == 0 or r == g - 1:
        return "canonical"
    if r == 1:
        return "hurwitz"
    if r == 2:
        return "severi"
    return None


def irreducibility_criterion(p: BNParams) -> IrreducibilityReport:
    """
    Check the hypothesis r <= 2 or r' = g - d + r - 1 <= 2 (with g >= 3, rho = 0).

    The case names the argument that applies: the canonical series,
    irreducibility of Hurwitz spaces (pencils), or of Severi varieties
    (plane models). Components have dimension 3g - 3 + rho.
    """
    if p.g < 3:
        raise ComputationError("E100", f"g must be >= 3, got {p.g}")
    if rho(p) != 0:
        raise ComputationError("E120", f"rho{p.as_tuple()} = {rho(p)}")
    dual_r = p.g - p.d + p.r - 1
    case = _case_for(p.r, p.g)
    via_dual = False
    if case is None:
        case = _case_for(dual_r, p.g)
        via_dual = case is not None
    return IrreducibilityReport(
        params=p,
        dual_r=dual_r,
        case=case,
        via_dual=via_dual,
        component_dimension=3 * p.g - 3 + rho(p),
    )


@dataclass(frozen=True)
class BijectivityBookkeeping:
    """Section counts for L = ϑ(2x) built from a half-canonical ϑ with h0(ϑ) = r + 1."""

    genus: int
    r: int
    sym2_theta: int
    h0_canonical: int
    h0_line: int
    h0_square: int
    complement_dim: int
    twist_upper_bound: int
    twist_lower_bound: int
    sym2_twist: int

    @property
    def quadric_free_possible(self) -> bool:
        """Sym²H0(ϑ) and H0(ω_C) have equal dimension."""
        return self.sym2_theta == self.h0_canonical

    @property
    def twist_h0(self) -> int | None:
        """h0(L ⊗ η) when the two bounds meet."""
        if self.twist_upper_bound == self.twist_lower_bound:
            return self.twist_upper_bound
        return None

    @property
    def bijective_by_count(self) -> bool:
        return self.quadric_free_possible and self.sym2_twist == self.complement_dim


def bijectivity_bookkeeping(genus: int, r: int) -> BijectivityBookkeeping:
    """
    Dimension count behind the bijectivity of the multiplication map for L = ϑ(2x).

    ϑ has degree g - 1 and h0(ϑ) = r + 1; L = ϑ(2x) has degree g + 1 and the
    same sections. η is chosen with h0(ϑ ⊗ η) = 0, so h0(L ⊗ η) <= 2, while
    Riemann-Roch gives h0(L ⊗ η) >= (g + 1) - g + 1 = 2.
    """
    if genus < 3 or r < 1:
        raise ComputationError("E100", f"need g >= 3 and r >= 1, got ({genus}, {r})")
    line_degree = genus + 1
    h0_square = riemann_roch_h0(genus, 2 * line_degree, 0)
    sym2_theta = _sym2_dim(r + 1)
    twist_upper = THETA_TWIST_H0 + TWO_POINT_SECTIONS
    twist_lower = max(line_degree - genus + 1, 0)
    return BijectivityBookkeeping(
        genus=genus,
        r=r,
        sym2_theta=sym2_theta,
        h0_canonical=genus,
        h0_line=r + 1,
        h0_square=h0_square,
        complement_dim=h0_square - genus,
        twist_upper_bound=twist_upper,
        twist_lower_bound=twist_lower,
        sym2_twist=_sym2_dim(twist_upper),
    )
