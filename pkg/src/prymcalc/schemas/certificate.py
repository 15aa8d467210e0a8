"""JSON schema for bigness certificates."""

from fractions import Fraction

from pydantic import BaseModel, Field, ValidationError

from prymcalc.algebra.certificate import BignessCertificate
from prymcalc.algebra.exact import format_rational
from prymcalc.schemas.classes import PrymClassSchema, Rational, schema_error, to_fraction


def _fmt(value: Fraction | None) -> str | None:
    return None if value is None else format_rational(value)


def _frac(value: str | None) -> Fraction | None:
    return None if value is None else to_fraction(value)


class CertificateSchema(BaseModel):
    """A certificate carrying its inputs, so it can be re-checked on its own."""

    beta: Rational | None
    gamma: Rational | None
    epsilon: Rational | None
    residual_lambda: Rational | None
    genus: int = Field(..., ge=2)
    verdict: bool
    reason: str = ""
    target: tuple[Rational, Rational] = ("-2", "-3")
    d1: PrymClassSchema
    d2: PrymClassSchema

    @classmethod
    def from_certificate(cls, cert: BignessCertificate) -> "CertificateSchema":
        return cls(
            beta=_fmt(cert.beta),
            gamma=_fmt(cert.gamma),
            epsilon=_fmt(cert.epsilon),
            residual_lambda=_fmt(cert.residual_lambda),
            genus=cert.genus,
            verdict=cert.verdict,
            reason=cert.reason,
            target=(format_rational(cert.target[0]), format_rational(cert.target[1])),
            d1=PrymClassSchema.from_class(cert.d1),
            d2=PrymClassSchema.from_class(cert.d2),
        )

    def to_certificate(self) -> BignessCertificate:
        return BignessCertificate(
            genus=self.genus,
            d1=self.d1.to_class(),
            d2=self.d2.to_class(),
            target=(to_fraction(self.target[0]), to_fraction(self.target[1])),
            beta=_frac(self.beta),
            gamma=_frac(self.gamma),
            epsilon=_frac(self.epsilon),
            residual_lambda=_frac(self.residual_lambda),
            verdict=self.verdict,
            reason=self.reason,
        )


def load_certificate(text: str) -> BignessCertificate:
    """Parse a stored certificate.

    Raises:
        ComputationError: E170 when the JSON does not match the schema
    """
    try:
        return CertificateSchema.model_validate_json(text).to_certificate()
    except ValidationError as e:
        raise schema_error(e) from e
