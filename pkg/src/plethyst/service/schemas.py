"""Request and response models for the HTTP API.

Partitions travel as JSON integer arrays and coefficients as decimal
strings, so nothing is lost to floating point on the wire.
"""

from __future__ import annotations

from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field


class ExpandRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    basis: Literal["schur", "monomial"] = "schur"


class Term(BaseModel):
    partition: list[int]
    coeff: str


class ExpandResponse(BaseModel):
    basis: str
    degree: int
    terms: list[Term]


class FirstTermRequest(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    verify: bool = False
    oracle: bool = False


class ReportModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: list[int] = Field(alias="lambda")
    mu: list[int]
    monomial_coeffs: list[Term]
    schur_coeffs: list[Term]
    predicted_first_term: list[int]
    observed_first_term: list[int]
    first_term_coefficient: str
    checks: dict[str, bool]
    passed: bool


class FirstTermResponse(BaseModel):
    first_term: list[int]
    report: Optional[ReportModel] = None


class VerifyRequest(BaseModel):
    max_product: int
    oracle: bool = False
    jobs: int = 1


class VerifyResponse(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(default=1, alias="schema")
    max_product: int
    oracle: bool
    pair_count: int
    failure_count: int
    all_passed: bool
    failures: list[ReportModel]
