"""Pydantic schemas for prymcalc."""

from prymcalc.schemas.certificate import CertificateSchema, load_certificate
from prymcalc.schemas.classes import (
    FactoredClassSchema,
    PrymClassSchema,
    Rational,
    VirtualClassSchema,
    load_class,
    schema_error,
)
from prymcalc.schemas.report import ExpectedTable, ExpectedValue, PaperReport, PaperReportEntry
from prymcalc.schemas.resolution import (
    BUILTIN_PREFIX,
    ResolutionSchema,
    ResolutionTermSchema,
    SurfaceReportSchema,
    load_builtin_resolution,
    load_resolution,
)
from prymcalc.schemas.responses import (
    AdjunctionResponse,
    BalanceResponse,
    BijectivityResponse,
    CensusResponse,
    ChainResponse,
    CodimensionResponse,
    CountResponse,
    DualResponse,
    JumpResponse,
    RhoResponse,
    SlopeReportSchema,
)

__all__ = [
    # Classes
    "Rational",
    "PrymClassSchema",
    "FactoredClassSchema",
    "VirtualClassSchema",
    "load_class",
    "schema_error",
    # Resolutions
    "ResolutionSchema",
    "ResolutionTermSchema",
    "SurfaceReportSchema",
    "load_resolution",
    "load_builtin_resolution",
    "BUILTIN_PREFIX",
    # Certificates
    "CertificateSchema",
    "load_certificate",
    # CLI Responses
    "RhoResponse",
    "CountResponse",
    "DualResponse",
    "ChainResponse",
    "BalanceResponse",
    "JumpResponse",
    "BijectivityResponse",
    "CodimensionResponse",
    "CensusResponse",
    "SlopeReportSchema",
    "AdjunctionResponse",
    # Report
    "ExpectedValue",
    "ExpectedTable",
    "PaperReportEntry",
    "PaperReport",
]
