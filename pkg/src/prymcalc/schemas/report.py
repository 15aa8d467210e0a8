"""Schemas for the expected-value table and the paper report."""

import re

from pydantic import BaseModel, Field, field_validator

# Kebab-case pattern
KEBAB_CASE_PATTERN = re.compile(r"^[a-z0-9]+(-[a-z0-9]+)*$")


class ExpectedValue(BaseModel):
    """One published value together with the statement it comes from."""

    name: str = Field(..., description="Check name in kebab-case")
    value: str = Field(..., description="Expected rendering, compared as a string")
    source: str = Field(..., min_length=10, description="Statement the value reproduces")

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        """Validate that name is in kebab-case format."""
        if not KEBAB_CASE_PATTERN.match(v):
            raise ValueError(f"Invalid name format: '{v}'. Expected kebab-case.")
        return v

    @field_validator("value", mode="before")
    @classmethod
    def stringify(cls, v: object) -> str:
        if isinstance(v, bool):
            return "true" if v else "false"
        return str(v)


class ExpectedTable(BaseModel):
    """The whole annotated table."""

    values: list[ExpectedValue] = Field(..., min_length=1)


class PaperReportEntry(BaseModel):
    name: str
    computed: str
    expected: str
    match: bool
    source: str


class PaperReport(BaseModel):
    """Response for ``paper-report``."""

    entries: list[PaperReportEntry]
    overall: bool
