"""HTTP front end: one POST endpoint per computation, JSON in and out."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..rootsys import InputError, InternalError
from . import handlers, schemas as s

app = FastAPI(
    title="liedirac",
    description=(
        "Exact character-level computations for equal-rank real forms: "
        "Dirac cohomology and index, Kazhdan-Lusztig tables, elliptic "
        "pairings and endoscopic transfer."
    ),
)


@app.exception_handler(InputError)
async def input_error_handler(_: Request, exc: InputError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"error": str(exc)})


@app.exception_handler(InternalError)
async def internal_error_handler(_: Request, exc: InternalError) -> JSONResponse:
    return JSONResponse(status_code=500, content={"error": str(exc)})


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/datum", response_model=s.DatumResponse)
def datum(req: s.DatumRequest) -> s.DatumResponse:
    return handlers.describe_datum(req)


@app.post("/hd/findim", response_model=s.CohomologyResponse)
def hd_findim(req: s.HdFindimRequest) -> s.CohomologyResponse:
    return handlers.hd_findim(req)


@app.post("/hd/aq", response_model=s.HdAqResponse)
def hd_aq(req: s.HdAqRequest) -> s.HdAqResponse:
    return handlers.hd_aq(req)


@app.post("/hd/ds", response_model=s.HdDsResponse)
def hd_ds(req: s.HdDsRequest) -> s.HdDsResponse:
    return handlers.hd_ds(req)


@app.post("/hd/hw", response_model=s.HdHwResponse)
def hd_hw(req: s.HdHwRequest) -> s.HdHwResponse:
    return handlers.hd_hw(req)


@app.post("/index", response_model=s.CharResponse)
def dirac_index(req: s.IndexRequest) -> s.CharResponse:
    return handlers.dirac_index(req)


@app.post("/pairing/ell", response_model=s.PairingResponse)
def pairing_ell(req: s.PairingEllRequest) -> s.PairingResponse:
    return handlers.pairing_ell(req)


@app.post("/pairing/t81", response_model=s.PairingResponse)
def pairing_t81(req: s.PairingT81Request) -> s.PairingResponse:
    return handlers.pairing_t81(req)


@app.post("/kl/table", response_model=s.KlTableResponse)
def kl_table(req: s.KlTableRequest) -> s.KlTableResponse:
    return handlers.kl_table(req)


@app.post("/kl/parabolic", response_model=s.KlTableResponse)
def kl_parabolic(req: s.KlParabolicRequest) -> s.KlTableResponse:
    return handlers.kl_parabolic(req)


@app.post("/transfer/factor", response_model=s.TransferFactorResponse)
def transfer_factor(req: s.TransferFactorRequest) -> s.TransferFactorResponse:
    return handlers.transfer_factor(req)


@app.post("/transfer/findim", response_model=s.TransferFindimResponse)
def transfer_findim(req: s.TransferFindimRequest) -> s.TransferFindimResponse:
    return handlers.transfer_findim(req)


@app.post("/transfer/ds", response_model=s.TransferDsResponse)
def transfer_ds(req: s.TransferDsRequest) -> s.TransferDsResponse:
    return handlers.transfer_ds(req)


@app.post("/verify", response_model=s.VerifyResponse)
def verify_endpoint(req: s.VerifyRequest) -> s.VerifyResponse:
    return handlers.run_verify(req)
