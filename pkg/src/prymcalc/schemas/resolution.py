"""JSON schemas for graded free resolutions and surface invariants."""

from functools import lru_cache
from importlib import resources

from pydantic import BaseModel, Field, ValidationError

from prymcalc.algebra.exact import RationalPolynomial, format_polynomial
from prymcalc.algebra.hilbert import (
    GradedFreeResolution,
    ResolutionTerm,
    SurfaceInvariants,
    bicanonical_count,
)
from prymcalc.errors import ComputationError
from prymcalc.schemas.classes import schema_error

BUILTIN_PREFIX = "builtin:"
BUILTIN_RESOLUTIONS = {"pfaffian_14_6": "pfaffian_14_6.json"}


class ResolutionTermSchema(BaseModel):
    """One free module ⊕ O(twist)."""

    index: int = Field(..., ge=0, description="Homological index")
    twists: list[int] = Field(..., min_length=1, description="Twists of the summands")


class ResolutionSchema(BaseModel):
    """Resolution of an ideal sheaf on P^ambient."""

    ambient: int = Field(..., ge=1, description="Dimension n of P^n")
    terms: list[ResolutionTermSchema] = Field(default_factory=list)

    def to_resolution(self, name: str | None = None) -> GradedFreeResolution:
        return GradedFreeResolution(
            self.ambient,
            tuple(ResolutionTerm(t.index, tuple(t.twists)) for t in self.terms),
            name,
        )

    @classmethod
    def from_resolution(cls, res: GradedFreeResolution) -> "ResolutionSchema":
        return cls(
            ambient=res.ambient_dim,
            terms=[ResolutionTermSchema(index=t.index, twists=list(t.twists)) for t in res.terms],
        )


class SurfaceReportSchema(BaseModel):
    """Output of ``hilbert``; the surface fields stay null unless the quotient is a surface."""

    name: str | None = None
    hilbert_polynomial: str
    dimension: int = Field(..., description="Degree of the Hilbert polynomial")
    degree: int | None = None
    chi: int | None = None
    p_g: int | None = None
    q: int | None = None
    K_squared: int | None = None
    h0_ideal_2: int = Field(..., description="h0(I(2)), quadrics through the quotient")
    h0_quotient_2: int = Field(..., description="h0(O/I (2))")
    bicanonical: int | None = Field(None, description="χ(O_S) + K², Riemann-Roch for 2K")

    @classmethod
    def build(
        cls,
        poly: RationalPolynomial,
        inv: SurfaceInvariants | None,
        h0_ideal_2: int,
        h0_quotient_2: int,
        name: str | None = None,
    ) -> "SurfaceReportSchema":
        report = cls(
            name=name,
            hilbert_polynomial=format_polynomial(poly),
            dimension=poly.degree,
            h0_ideal_2=h0_ideal_2,
            h0_quotient_2=h0_quotient_2,
        )
        if inv is None:
            return report
        return report.model_copy(
            update={
                "degree": inv.degree,
                "chi": inv.chi_O,
                "p_g": inv.p_g,
                "q": inv.q,
                "K_squared": inv.K_squared,
                "bicanonical": bicanonical_count(inv) if inv.K_squared is not None else None,
            }
        )


def load_resolution(text: str, name: str | None = None) -> GradedFreeResolution:
    """Parse a resolution from JSON.

    Raises:
        ComputationError: E170 for schema violations, E150 for inconsistent indices
    """
    try:
        schema = ResolutionSchema.model_validate_json(text)
    except ValidationError as e:
        raise schema_error(e) from e
    return schema.to_resolution(name)


@lru_cache(maxsize=None)
def load_builtin_resolution(name: str) -> GradedFreeResolution:
    """Load a resolution shipped in ``prymcalc.data``, with or without the ``builtin:`` prefix.

    Raises:
        ComputationError: E150 for an unknown name
    """
    key = name.removeprefix(BUILTIN_PREFIX)
    if key not in BUILTIN_RESOLUTIONS:
        raise ComputationError(
            "E150", f"unknown builtin {name!r}; available: {', '.join(BUILTIN_RESOLUTIONS)}"
        )
    text = (
        resources.files("prymcalc.data").joinpath(BUILTIN_RESOLUTIONS[key]).read_text("utf-8")
    )
    return load_resolution(text, name=key)
