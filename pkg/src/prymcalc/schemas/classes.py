"""JSON schemas for divisor classes and virtual classes."""

from fractions import Fraction
from typing import Annotated

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, ValidationError

from prymcalc.algebra.exact import RationalLike, format_rational, parse_rational
from prymcalc.algebra.picard import D0P, D0PP, D0RAM, LAMBDA, PrymDivisorClass, factored_form
from prymcalc.algebra.porteous import VirtualDivisorClass
from prymcalc.errors import ComputationError


def _canonical_rational(value: RationalLike) -> str:
    if not isinstance(value, str | int | Fraction):
        raise ValueError("rationals must be given as 'p/q' strings or integers")
    return format_rational(parse_rational(value))


# A rational number serialized as "p/q"
Rational = Annotated[str, BeforeValidator(_canonical_rational)]


def to_fraction(value: str) -> Fraction:
    return parse_rational(value)


class PrymClassSchema(BaseModel):
    """Divisor class on the Prym moduli space.

    ``boundary`` uses the keys ``"i"``, ``"g-i"`` and ``"i:g-i"`` with the
    numbers written out, e.g. ``{"1": "-3", "14": "-3", "1:14": "-3"}``.
    """

    model_config = ConfigDict(populate_by_name=True)

    genus: int = Field(..., ge=2, description="Genus g")
    lambda_: Rational = Field("0", alias="lambda", description="Coefficient of λ")
    d0p: Rational = Field("0", description="Coefficient of δ0'")
    d0pp: Rational = Field("0", description="Coefficient of δ0''")
    d0ram: Rational = Field("0", description="Coefficient of δ0ram")
    boundary: dict[str, Rational] = Field(
        default_factory=dict, description="Higher boundary coefficients"
    )

    @classmethod
    def from_class(cls, d: PrymDivisorClass) -> "PrymClassSchema":
        return cls(
            genus=d.genus,
            lambda_=format_rational(d.coefficient(LAMBDA)),
            d0p=format_rational(d.coefficient(D0P)),
            d0pp=format_rational(d.coefficient(D0PP)),
            d0ram=format_rational(d.coefficient(D0RAM)),
            boundary={k[1:]: format_rational(v) for k, v in d.higher_boundary().items()},
        )

    def to_class(self) -> PrymDivisorClass:
        coefficients = {
            LAMBDA: to_fraction(self.lambda_),
            D0P: to_fraction(self.d0p),
            D0PP: to_fraction(self.d0pp),
            D0RAM: to_fraction(self.d0ram),
        }
        for key, value in self.boundary.items():
            coefficients[f"d{key}"] = to_fraction(value)
        return PrymDivisorClass(self.genus, coefficients)


class FactoredClassSchema(BaseModel):
    """A class written as scale · (λ-coefficient λ - (δ0' + δ0'') - ...)."""

    model_config = ConfigDict(populate_by_name=True)

    scale: Rational
    lambda_: Rational = Field(..., alias="lambda")
    d0p: Rational
    d0pp: Rational
    d0ram: Rational

    @classmethod
    def from_class(cls, d: PrymDivisorClass) -> "FactoredClassSchema":
        scale, normalized = factored_form(d)
        return cls(
            scale=format_rational(scale),
            lambda_=format_rational(normalized.coefficient(LAMBDA)),
            d0p=format_rational(normalized.coefficient(D0P)),
            d0pp=format_rational(normalized.coefficient(D0PP)),
            d0ram=format_rational(normalized.coefficient(D0RAM)),
        )


class VirtualClassSchema(BaseModel):
    """Output of ``class-d15``."""

    expanded: PrymClassSchema
    factored: FactoredClassSchema
    d_term: Rational = Field(..., description="Multiple of the symbolic term σ*(d)")
    expanded_text: str
    factored_text: str

    @classmethod
    def from_virtual(cls, v: VirtualDivisorClass) -> "VirtualClassSchema":
        return cls(
            expanded=PrymClassSchema.from_class(v.numeric_part),
            factored=FactoredClassSchema.from_class(v.numeric_part),
            d_term=format_rational(v.d_multiple),
            expanded_text=v.expanded(),
            factored_text=v.factored(),
        )


def load_class(text: str) -> PrymDivisorClass:
    """Parse a divisor class from JSON.

    Raises:
        ComputationError: E170 when the JSON does not match the schema
    """
    try:
        return PrymClassSchema.model_validate_json(text).to_class()
    except ValidationError as e:
        raise schema_error(e) from e


def schema_error(e: ValidationError) -> ComputationError:
    """Translate the first Pydantic error into an E170 computation error."""
    first_error = e.errors()[0]
    loc = ".".join(str(part) for part in first_error.get("loc", ()))
    return ComputationError("E170", f"{loc}: {first_error.get('msg', '')}")
