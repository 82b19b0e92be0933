"""HTTP service exposing cohomology computation, gauging, and verification.

The command-line client in :mod:`bordcat.cli` talks to this app, by default
in-process.  All request and response bodies are pydantic models; exact
amplitudes travel as cyclotomic strings with float approximations.
"""

from __future__ import annotations

import time
from fractions import Fraction

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from .cohomology import cohomology, cohomology_order
from .complexes import SimplicialPair
from .cyclotomic import Amplitude
from .gauging import GaugedTheory, closed_coefficient, gauged_closed_value
from .groups import EnumerationCapExceeded, pontryagin_dual
from .manifolds import SkeletonPair, TriangulatedManifold, library, library_names
from .serialization import (
    amplitude_to_strings,
    group_name,
    manifold_from_file,
    parse_group,
    parse_s,
)
from .theory import trivial_theory
from .verification import SUITES, run_suite

DEFAULT_CAP = 10**6


class ManifoldSpec(BaseModel):
    """Either a library name or an inline manifold file document."""

    name: str | None = None
    file: dict | None = None

    def resolve(self) -> TriangulatedManifold:
        if (self.name is None) == (self.file is None):
            raise HTTPException(422, "give exactly one of name or file")
        try:
            if self.name is not None:
                return library(self.name)
            return manifold_from_file(self.file)
        except HTTPException:
            raise
        except Exception as exc:  # validation problems -> client error
            raise HTTPException(422, f"invalid manifold: {exc}")


class CohomologyRequest(BaseModel):
    manifold: ManifoldSpec
    degree: int = Field(ge=0)
    coeff: str = "Z2"
    pair: str = "absolute"  # absolute | skeleton | dual-skeleton
    q: int = 0
    cap: int = DEFAULT_CAP


class CohomologyResponse(BaseModel):
    group: str
    orders: list[int]
    order: int
    seconds: float


class GaugeRequest(BaseModel):
    theory: str = "trivial"
    manifold: ManifoldSpec
    q: int = 0
    coeff: str = "Z2"
    s: str = "1/2"
    cap: int = DEFAULT_CAP
    seed: int | None = None
    refined: list[int] | None = None  # raw coordinates of the dual background


class GaugeResponse(BaseModel):
    value: dict
    coefficient: str
    backgrounds: int
    seconds: float


class VerifyRequest(BaseModel):
    suite: str
    coeff: str | None = None


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyResponse(BaseModel):
    suite: str
    passed: bool
    checks: list[CheckResult]
    seconds: float


def _coeff(text: str):
    try:
        return parse_group(text)
    except ValueError as exc:
        raise HTTPException(422, str(exc))


app = FastAPI(title="bordcat", version="1.0")


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.get("/library")
def library_listing() -> dict:
    return {"manifolds": library_names(), "suites": sorted(SUITES)}


@app.post("/cohomology", response_model=CohomologyResponse)
def compute_cohomology(req: CohomologyRequest) -> CohomologyResponse:
    t0 = time.time()
    manifold = req.manifold.resolve()
    G = _coeff(req.coeff)
    if req.pair == "absolute":
        pair = SimplicialPair.absolute(manifold.complex)
    elif req.pair in ("skeleton", "dual-skeleton"):
        try:
            sk = SkeletonPair(manifold, req.q)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        if req.pair == "dual-skeleton":
            sk = sk.dual()
        pair = sk.background_pair()
    else:
        raise HTTPException(422, f"unknown pair spec {req.pair!r}")
    group = cohomology(pair, req.degree, G)
    if group.order > req.cap:
        raise HTTPException(409, f"group order {group.order} exceeds cap {req.cap}")
    return CohomologyResponse(
        group=group_name(group.group.invariant_factors),
        orders=list(group.orders),
        order=group.order,
        seconds=time.time() - t0,
    )


@app.post("/gauge", response_model=GaugeResponse)
def compute_gauge(req: GaugeRequest) -> GaugeResponse:
    t0 = time.time()
    manifold = req.manifold.resolve()
    G = _coeff(req.coeff)
    if req.theory != "trivial":
        raise HTTPException(422, f"unknown theory spec {req.theory!r}")
    if not manifold.is_closed:
        raise HTTPException(422, "gauge values need a closed manifold")
    d = manifold.dimension
    if not (0 <= req.q <= d - 2):
        raise HTTPException(422, f"q={req.q} out of range for dimension {d}")
    try:
        s = parse_s(req.s)
    except ValueError as exc:
        raise HTTPException(422, str(exc))
    Z = trivial_theory(req.q, G)
    backgrounds = cohomology_order(
        SimplicialPair.absolute(manifold.complex), req.q + 1, G
    )
    if backgrounds > req.cap:
        raise HTTPException(409, f"{backgrounds} backgrounds exceed cap {req.cap}")
    try:
        if req.refined is None:
            value = gauged_closed_value(Z, manifold, req.q, cap=req.cap)
        else:
            Zg = GaugedTheory(Z, s=s, cap=req.cap, section_seed=req.seed)
            q_star = d - req.q - 2
            dual_group = cohomology(
                SimplicialPair.absolute(manifold.complex),
                q_star + 1,
                pontryagin_dual(G),
            )
            if not req.refined:
                A = dual_group.zero()
            else:
                try:
                    A = dual_group.element(tuple(req.refined))
                except Exception as exc:
                    raise HTTPException(422, f"invalid dual background: {exc}")
            value = Zg.closed_value(manifold, A)
    except EnumerationCapExceeded as exc:
        raise HTTPException(409, str(exc))
    c = closed_coefficient(manifold, req.q, G)
    return GaugeResponse(
        value=amplitude_to_strings(value),
        coefficient=str(c),
        backgrounds=backgrounds,
        seconds=time.time() - t0,
    )


@app.post("/verify", response_model=VerifyResponse)
def run_verification(req: VerifyRequest) -> VerifyResponse:
    t0 = time.time()
    if req.suite not in SUITES:
        raise HTTPException(422, f"unknown suite {req.suite!r}; known: {sorted(SUITES)}")
    G = _coeff(req.coeff) if req.coeff else None
    report = run_suite(req.suite, G)
    checks = [
        CheckResult(name=n, passed=ok, detail=detail)
        for n, ok, detail in report.checks
    ]
    return VerifyResponse(
        suite=req.suite,
        passed=report.passed,
        checks=checks,
        seconds=time.time() - t0,
    )
