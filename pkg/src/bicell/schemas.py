# -*- coding: utf-8 -*-
"""Pydantic schemas for reports that leave the engine."""

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, Field, field_validator

from bicell.combinat import RatPoly


class Method(str, Enum):
    """How a polynomial was computed."""

    CLOSED = "closed"
    CHARSUM = "charsum"
    ORACLE = "oracle"


class CheckStatus(str, Enum):
    """Outcome of a single verification."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"


class CoefficientEntry(BaseModel):
    """One nonzero coefficient, as exact decimal strings."""

    deg: int = Field(..., ge=0, description="Degree in x (number of black vertices)")
    num: str = Field(..., description="Numerator as a decimal integer string")
    den: str = Field(..., description="Positive denominator as a decimal integer string")

    @field_validator("num")
    @classmethod
    def validate_numerator(cls, v: str) -> str:
        """Validate that the numerator is an integer string."""
        try:
            int(v)
        except ValueError as e:
            raise ValueError(f"Numerator must be an integer string, got {v!r}") from e
        return v

    @field_validator("den")
    @classmethod
    def validate_denominator(cls, v: str) -> str:
        """Validate that the denominator is a positive integer string."""
        try:
            value = int(v)
        except ValueError as e:
            raise ValueError(f"Denominator must be an integer string, got {v!r}") from e
        if value <= 0:
            raise ValueError("Denominator must be positive")
        return v

    def value(self) -> Fraction:
        return Fraction(int(self.num), int(self.den))


class PolyChecks(BaseModel):
    """Analytic checks on a polynomial."""

    imag_axis: bool = Field(..., description="Every zero has real part 0")
    log_concave: bool = Field(..., description="Nonzero coefficients are log-concave")


class PolyReport(BaseModel):
    """Schema for a computed genus distribution polynomial."""

    n: int = Field(..., ge=1, description="Number of edges")
    p: int = Field(..., ge=1, description="Smaller face length")
    mu: list[int] = Field(..., description="White vertex degrees, non-increasing")
    method: Method = Field(..., description="Computation method")
    connected: bool = Field(False, description="Restricted to connected maps")
    coeffs: list[CoefficientEntry] = Field(
        default_factory=list,
        description="Nonzero coefficients sorted by degree",
    )
    genus: dict[str, str] = Field(
        default_factory=dict,
        description="Genus -> number of labeled maps, as decimal strings",
    )
    checks: PolyChecks | None = Field(None, description="Zeros and log-concavity checks")
    ms: int | None = Field(None, ge=0, description="Wall time in milliseconds")

    @field_validator("coeffs")
    @classmethod
    def validate_sorted(cls, v: list[CoefficientEntry]) -> list[CoefficientEntry]:
        """Validate that coefficient entries are strictly increasing in degree."""
        degrees = [entry.deg for entry in v]
        if degrees != sorted(set(degrees)):
            raise ValueError("Coefficient entries must be sorted by distinct degree")
        return v

    @classmethod
    def coefficients_of(cls, poly: RatPoly) -> list[CoefficientEntry]:
        return [
            CoefficientEntry(deg=deg, num=str(c.numerator), den=str(c.denominator))
            for deg, c in poly.terms()
        ]

    def to_polynomial(self) -> RatPoly:
        """Rebuild the exact polynomial from its serialized coefficients."""
        return RatPoly.from_terms({entry.deg: entry.value() for entry in self.coeffs})

    def genus_counts(self) -> dict[int, int]:
        return {int(g): int(count) for g, count in self.genus.items()}


class CensusRow(BaseModel):
    """One census line per closed-form instance."""

    n: int = Field(..., description="Number of edges")
    p: int = Field(..., description="Smaller face length")
    mu: str = Field(..., description="White vertex degrees, e.g. (3,2)")
    poly: str = Field(..., description="Polynomial in compact form")
    genus_counts: str = Field(..., description="g:count pairs joined by ';'")
    imag_axis: bool = Field(..., description="Every zero has real part 0")
    log_concave: bool = Field(..., description="Nonzero coefficients are log-concave")
    method: Method = Field(Method.CLOSED, description="Computation method")
    ms: int | None = Field(None, description="Wall time in milliseconds, if timed")


class CounterexampleRecord(BaseModel):
    """Everything needed to reproduce a failed check."""

    suite: str = Field(..., description="Verification suite")
    instance: str = Field(..., description="Instance description")
    failing_check: str = Field(..., description="Which sub-check failed")
    polynomial: str | None = Field(None, description="Polynomial under test, if any")
    expected: str | None = Field(None, description="Reference value")
    actual: str | None = Field(None, description="Value that disagreed")


class VerifyRecord(BaseModel):
    """Result of one suite on one instance."""

    suite: str = Field(..., description="Verification suite")
    instance: str = Field(..., description="Instance description")
    status: CheckStatus = Field(..., description="PASS, FAIL or SKIPPED")
    detail: str = Field("", description="Short explanation")
    counterexample: CounterexampleRecord | None = Field(
        None,
        description="Counterexample, present exactly when status is FAIL",
    )
