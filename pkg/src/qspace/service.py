"""HTTP service exposing the toolkit's operations.

Run with ``qspace serve`` or ``uvicorn qspace.service:app``.  All request and
response bodies are plain JSON; symbolic values travel in their canonical
text form.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import ops

app = FastAPI(title="qspace", description="q-deformed quantum kinematics toolkit")


class ExprRequest(BaseModel):
    space: str
    expr: str


class PolyTerm(BaseModel):
    word: list[str]
    coeff: str


class PolyResponse(BaseModel):
    space: str
    terms: list[PolyTerm]
    text: str


class StarRequest(BaseModel):
    space: str
    f: str
    g: str


class StarTerm(BaseModel):
    degrees: list[int]
    coeff: str


class StarResponse(BaseModel):
    space: str
    terms: list[StarTerm]


class QExpRequest(BaseModel):
    space: str
    degree: int = Field(default=8, ge=0, le=12)
    calculus: str = "unhatted"
    side: str = "left"


class QExpResponse(BaseModel):
    space: str
    calculus: str
    side: str
    degree: int
    terms: list[str]


class GrassmannFormRequest(BaseModel):
    space: str
    variant: str
    primed: bool = False


class FormEntry(BaseModel):
    f: list[str]
    g: list[str]
    coeff: str
    note: str | None = None


class GrassmannFormResponse(BaseModel):
    space: str
    variant: str
    primed: bool
    entries: list[FormEntry]


class IntegrateRequest(BaseModel):
    spec: dict
    csv: str
    q: float = 1.3
    which: int | None = None


class IntegrateResponse(BaseModel):
    re: float
    im: float
    points: int


class VerifyRequest(BaseModel):
    suite: str = "all"
    q: float = 1.3
    seed: int = 0
    window: int = 2


def _wrap(fn, *args):
    try:
        return fn(*args)
    except (KeyError, ValueError) as exc:
        raise HTTPException(status_code=422, detail=str(exc))


@app.get("/health")
def health():
    return {"status": "ok"}


@app.get("/spaces")
def spaces() -> list[str]:
    return ops.list_spaces()


@app.post("/normal-order", response_model=PolyResponse)
def normal_order(req: ExprRequest):
    return _wrap(ops.normal_order_op, req.space, req.expr)


@app.post("/star", response_model=StarResponse)
def star(req: StarRequest):
    return _wrap(ops.star_op, req.space, req.f, req.g)


@app.post("/qexp", response_model=QExpResponse)
def qexp(req: QExpRequest):
    return _wrap(ops.qexp_op, req.space, req.degree, req.calculus, req.side)


@app.post("/grassmann/form", response_model=GrassmannFormResponse)
def grassmann_form(req: GrassmannFormRequest):
    return _wrap(ops.grassmann_form_op, req.space, req.variant, req.primed)


@app.post("/integrate", response_model=IntegrateResponse)
def integrate(req: IntegrateRequest):
    return _wrap(ops.integrate_op, req.spec, req.csv, req.q, req.which)


@app.post("/verify")
def verify(req: VerifyRequest):
    return _wrap(ops.verify_op, req.suite, req.q, req.seed, req.window)
