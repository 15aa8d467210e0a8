"""CLI response schemas."""

from pydantic import BaseModel, Field

from prymcalc.algebra.brill_noether import BijectivityBookkeeping, DimChainReport
from prymcalc.algebra.exact import format_rational
from prymcalc.algebra.picard import SlopeReport
from prymcalc.schemas.classes import Rational

# === Brill-Noether ===


class RhoResponse(BaseModel):
    """Response for ``rho``."""

    g: int
    r: int
    d: int
    rho: int


class CountResponse(BaseModel):
    """Response for ``count``."""

    g: int
    r: int
    d: int
    count: int = Field(..., description="Number of g^r_d on a general curve")


class DualResponse(BaseModel):
    """Response for ``dual``."""

    g: int
    r: int
    d: int
    dual_r: int
    dual_d: int


class ChainRow(BaseModel):
    j: int
    h0: int


class ChainBalanceRow(BaseModel):
    j: int
    kernel: int
    middle: int
    target: int
    balanced: bool


class ChainResponse(BaseModel):
    """Response for ``chain``."""

    k: int
    r: int
    g: int
    chain: list[ChainRow]
    balances: list[ChainBalanceRow]
    all_balanced: bool

    @classmethod
    def from_report(cls, report: DimChainReport) -> "ChainResponse":
        return cls(
            k=report.k,
            r=report.r,
            g=report.g_check,
            chain=[ChainRow(j=j, h0=h0) for j, h0 in report.chain],
            balances=[
                ChainBalanceRow(
                    j=b.j, kernel=b.kernel, middle=b.middle, target=b.target, balanced=b.balanced
                )
                for b in report.balances
            ],
            all_balanced=report.all_balanced,
        )


class BalanceResponse(BaseModel):
    """Response for ``balance``."""

    g: int
    r: int
    d: int
    h0_twist: int
    lhs: int = Field(..., description="dim Sym²H0(L) + dim Sym²H0(L ⊗ η)")
    rhs: int = Field(..., description="h0(L⊗²)")
    balanced: bool


class JumpResponse(BaseModel):
    """Response for ``jump``."""

    r: int
    boundary_h0: int
    generic_h0: int
    jump: int
    has_jump: bool


class BijectivityResponse(BaseModel):
    """Response for ``bijectivity``."""

    genus: int
    r: int
    sym2_theta: int
    h0_canonical: int
    h0_line: int
    h0_square: int
    complement_dim: int
    twist_h0: int | None
    sym2_twist: int
    quadric_free_possible: bool
    bijective_by_count: bool

    @classmethod
    def from_bookkeeping(cls, b: BijectivityBookkeeping) -> "BijectivityResponse":
        return cls(
            genus=b.genus,
            r=b.r,
            sym2_theta=b.sym2_theta,
            h0_canonical=b.h0_canonical,
            h0_line=b.h0_line,
            h0_square=b.h0_square,
            complement_dim=b.complement_dim,
            twist_h0=b.twist_h0,
            sym2_twist=b.sym2_twist,
            quadric_free_possible=b.quadric_free_possible,
            bijective_by_count=b.bijective_by_count,
        )


class CodimensionResponse(BaseModel):
    """Response for ``codimension``."""

    g: int
    r: int
    d: int
    rho_more_sections: int = Field(..., description="rho(g, r+1, d)")
    rho_lower_degree: int = Field(..., description="rho(g, r, d-1)")
    codimension_at_least_two: bool
    irreducibility_case: str | None
    via_dual: bool
    component_dimension: int


# === Picard group ===


class CensusResponse(BaseModel):
    """Response for ``census``."""

    genus: int
    d0p: int
    d0pp: int
    d0ram: int
    distinct_structures: int
    sheet_count: int
    forgetful_degree: int


class SlopeCheckSchema(BaseModel):
    key: str
    boundary_coefficient: Rational
    bound: Rational
    ratio: Rational | None
    status: str


class SlopeReportSchema(BaseModel):
    """Response for ``slopes``."""

    genus: int
    lambda_coefficient: Rational
    checks: list[SlopeCheckSchema]
    all_pass: bool

    @classmethod
    def from_report(cls, report: SlopeReport) -> "SlopeReportSchema":
        return cls(
            genus=report.genus,
            lambda_coefficient=format_rational(report.lambda_coefficient),
            checks=[
                SlopeCheckSchema(
                    key=c.key,
                    boundary_coefficient=format_rational(c.boundary_coefficient),
                    bound=format_rational(c.bound),
                    ratio=None if c.ratio is None else format_rational(c.ratio),
                    status=c.status,
                )
                for c in report.checks
            ],
            all_pass=report.all_pass,
        )


# === surfaces ===


class AdjunctionResponse(BaseModel):
    """Response for ``adjunction``."""

    K_squared: int
    curve_genus: int
    embedding_degree: int
    canonical_degree: int = Field(..., description="2g - 2 of the hyperplane section")
