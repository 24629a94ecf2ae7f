"""FastAPI application exposing the plethysm engine.

Long-lived processes amortize the per-degree Kostka matrices and tableau
pools across requests, which is the whole point of running this as a
service rather than recomputing per invocation.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from ..errors import BoundExceededError, PlethystError
from ..partitions import as_partition
from ..plethysm import first_term, monomial_expansion, schur_expansion, verify_first_term
from ..sweep import SweepConfig, run_sweep
from .schemas import (
    ExpandRequest,
    ExpandResponse,
    FirstTermRequest,
    FirstTermResponse,
    ReportModel,
    Term,
    VerifyRequest,
    VerifyResponse,
)


def _terms(coeffs: dict) -> list[Term]:
    return [
        Term(partition=list(part), coeff=str(c))
        for part, c in sorted(coeffs.items(), reverse=True)
    ]


def _report_model(report) -> ReportModel:
    return ReportModel(
        lam=list(report.lam),
        mu=list(report.mu),
        monomial_coeffs=_terms(report.monomial_coeffs),
        schur_coeffs=_terms(report.schur_coeffs),
        predicted_first_term=list(report.predicted_first_term),
        observed_first_term=list(report.observed_first_term),
        first_term_coefficient=str(report.first_term_coefficient),
        checks=dict(report.checks),
        passed=report.passed,
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="plethyst",
        version=__version__,
        description="Exact plethysm of Schur functions with verification oracles.",
    )

    @app.exception_handler(PlethystError)
    async def _domain_error(request: Request, exc: PlethystError) -> JSONResponse:
        code = "bounds" if isinstance(exc, BoundExceededError) else "invalid"
        return JSONResponse(
            status_code=400,
            content={"error": {"code": code, "message": str(exc)}},
        )

    @app.get("/")
    def info() -> dict:
        return {"name": "plethyst", "version": __version__}

    @app.post("/expand", response_model=ExpandResponse)
    def expand(req: ExpandRequest) -> ExpandResponse:
        lam, mu = as_partition(req.lam), as_partition(req.mu)
        if req.basis == "schur":
            sf = schur_expansion(lam, mu)
        else:
            sf = monomial_expansion(lam, mu)
        return ExpandResponse(basis=sf.basis, degree=sf.degree, terms=_terms(sf.coeffs))

    @app.post("/first-term", response_model=FirstTermResponse)
    def first_term_route(req: FirstTermRequest) -> FirstTermResponse:
        lam, mu = as_partition(req.lam), as_partition(req.mu)
        nu0 = first_term(lam, mu)
        report = None
        if req.verify:
            report = _report_model(verify_first_term(lam, mu, use_oracle=req.oracle))
        return FirstTermResponse(first_term=list(nu0), report=report)

    @app.post("/verify", response_model=VerifyResponse)
    def verify_route(req: VerifyRequest) -> VerifyResponse:
        config = SweepConfig(
            max_product=req.max_product,
            oracle=req.oracle,
            parallelism=req.jobs,
        )
        result = run_sweep(config)
        return VerifyResponse(
            max_product=result.max_product,
            oracle=result.oracle,
            pair_count=result.pair_count,
            failure_count=result.failure_count,
            all_passed=result.all_passed,
            failures=[_report_model(r) for r in result.failures],
        )

    return app


app = create_app()
