"""FastAPI service wrapping the computation layer.

Every response carries schema_version; identical requests produce identical
responses (pure computations, no timestamps in data)."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field as PField

from . import __version__
from .errors import TamesymError
from . import service

app = FastAPI(
    title="tamesym",
    version=__version__,
    description=(
        "Exact stable-Morita invariants of tame symmetric algebras: build "
        "quotient path algebras from quiver presentations, compute centres, "
        "Cartan/Smith data, Reynolds/Higman ideals and Kuelshammer quotients, "
        "and compare catalog entries."
    ),
)


class EntrySpec(BaseModel):
    family: str | None = None
    params: str = ""
    char: int = 0
    field_order: int | None = None
    modulus: str | None = None
    presentation_text: str | None = None
    strict: bool = True


class FingerprintModel(BaseModel):
    char: int
    degree: int
    dim: int
    loewy_dims: list[int]
    socle_series_dims: list[int]
    min_generators: int
    frobenius_kernel_dims: list[int]
    frobenius_image_dims: list[int]


class KuelshammerLevel(BaseModel):
    n: int
    fingerprint: FingerprintModel


class InvariantsResponse(BaseModel):
    schema_version: int
    entry: str
    family: str
    params: dict
    char: int
    field_order: int
    rep_type: str
    n_simples: int
    special_biserial: bool
    dim_A: int
    dim_Z: int
    dim_Zpr: int
    dim_Zst: int
    dim_R: int
    cartan: list[list[int]]
    cartan_divisors: list[int]
    cartan_det_abs: int
    stable_grothendieck: str
    fp_Z_mod_R: FingerprintModel
    fp_Zst: FingerprintModel
    loewy_Zst: int
    kuelshammer_fps: list[KuelshammerLevel]


class CompareResponse(BaseModel):
    schema_version: int
    a: str
    b: str
    outcome: str
    invariant: str | None
    value_a: str | None
    value_b: str | None
    known_open: bool
    note: str


class CompareRequest(BaseModel):
    a: EntrySpec
    b: EntrySpec


class TableRequest(BaseModel):
    section: str
    char: int = 0
    defects: str | None = None


class BlocksRequest(BaseModel):
    rep_type: str
    defects: str | None = None


class Section7Request(BaseModel):
    chars: list[int] = PField(default_factory=lambda: [0, 2, 3, 5])
    max_param: int = 4


class ParseCheckRequest(BaseModel):
    text: str


class SelftestRequest(BaseModel):
    quick: bool = False


def _run(fn, *args):
    try:
        return fn(*args)
    except TamesymError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


@app.get("/health")
def health():
    return {"status": "ok", "version": __version__}


@app.get("/families")
def families():
    return service.families_report()


@app.post("/invariants", response_model=InvariantsResponse)
def invariants(spec: EntrySpec):
    return _run(service.invariants_report, spec.model_dump())


@app.post("/compare", response_model=CompareResponse)
def compare(req: CompareRequest):
    return _run(service.compare_report, req.a.model_dump(), req.b.model_dump())


@app.post("/table")
def table(req: TableRequest):
    return _run(service.table_report, req.section, req.char, req.defects)


@app.post("/blocks")
def blocks(req: BlocksRequest):
    return _run(service.blocks_report, req.rep_type, req.defects)


@app.post("/section7")
def section7(req: Section7Request):
    return _run(service.section7_report, tuple(req.chars), req.max_param)


@app.post("/parse-check")
def parse_check(req: ParseCheckRequest):
    return _run(service.parse_check_report, req.text)


@app.post("/selftest")
def selftest(req: SelftestRequest):
    return _run(service.selftest_report, req.quick)
