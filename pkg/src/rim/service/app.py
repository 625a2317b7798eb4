"""FastAPI application exposing pattern, contour, connectivity, and sweep."""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..errors import GenerationExhaustedError, RimError
from ..irregularity import generate_pattern
from ..output import contour_ranges
from ..propagation import PathLossParams, RadioParams, isotropic_range_m
from ..rng import RngStream
from ..scenario import asymmetry_report, build_connectivity, doi_sweep, pattern_stream_id
from .models import (
    ConnectivityRequest,
    ConnectivityResponse,
    ContourRequest,
    ContourResponse,
    EdgeModel,
    PatternRequest,
    PatternResponse,
    SummaryModel,
    SweepRequest,
    SweepResponse,
    SweepRowModel,
)

app = FastAPI(
    title="rim",
    description="Directional radio-range irregularity over free-space path loss.",
    version="0.1.0",
)


def _domain_error(exc: RimError) -> HTTPException:
    if isinstance(exc, GenerationExhaustedError):
        return HTTPException(status_code=409, detail=f"{exc} (attempts: {exc.attempts})")
    return HTTPException(status_code=400, detail=str(exc))


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/pattern", response_model=PatternResponse)
def pattern(req: PatternRequest) -> PatternResponse:
    stream = RngStream(req.seed, pattern_stream_id(0))
    try:
        pat = generate_pattern(stream, req.doi, scale_a=req.a, shape_b=req.b)
    except RimError as exc:
        raise _domain_error(exc)
    return PatternResponse(
        seed=req.seed, doi=req.doi, attempts_used=pat.attempts_used, k=pat.k.tolist()
    )


@app.post("/contour", response_model=ContourResponse)
def contour(req: ContourRequest) -> ContourResponse:
    stream = RngStream(req.seed, pattern_stream_id(0))
    try:
        params = PathLossParams(
            frequency_hz=req.pathloss.frequency_hz,
            alpha=req.pathloss.alpha,
            system_loss_db=req.pathloss.system_loss_db,
        )
        radio = RadioParams(
            tx_power_dbm=req.radio.tx_power_dbm,
            rx_sensitivity_dbm=req.radio.rx_sensitivity_dbm,
            tx_gain_db=req.radio.tx_gain_db,
            rx_gain_db=req.radio.rx_gain_db,
        )
        pat = generate_pattern(stream, req.doi, scale_a=req.a, shape_b=req.b)
        sens = req.radio.rx_sensitivity_dbm
        ranges = contour_ranges(pat, radio, sens, params)
        iso = isotropic_range_m(radio, sens, params)
    except RimError as exc:
        raise _domain_error(exc)
    return ContourResponse(
        seed=req.seed,
        doi=req.doi,
        attempts_used=pat.attempts_used,
        isotropic_range_m=iso,
        k=pat.k.tolist(),
        range_m=ranges,
    )


@app.post("/connectivity", response_model=ConnectivityResponse)
def connectivity(req: ConnectivityRequest) -> ConnectivityResponse:
    try:
        scn = req.scenario.to_scenario()
        graph = build_connectivity(scn)
        report = asymmetry_report(graph, scn)
    except RimError as exc:
        raise _domain_error(exc)
    return ConnectivityResponse(
        summary=SummaryModel(
            pairs=report.total_pairs,
            symmetric=report.symmetric_links,
            asymmetric=report.asymmetric_links,
            disconnected=report.disconnected_pairs,
            asym_fraction=report.asymmetry_fraction,
        ),
        edges=[
            EdgeModel(src=e.src, dst=e.dst, prx_dbm=e.received_power_dbm, audible=e.audible)
            for e in graph.edges
        ],
    )


@app.post("/sweep", response_model=SweepResponse)
def sweep(req: SweepRequest) -> SweepResponse:
    try:
        scn = req.scenario.to_scenario()
        rows = doi_sweep(scn, req.doi_values, req.replications)
    except RimError as exc:
        raise _domain_error(exc)
    return SweepResponse(
        rows=[
            SweepRowModel(
                doi=r.doi, mean_asym=r.mean_asymmetry, std=r.std_asymmetry, reps=r.replications
            )
            for r in rows
        ]
    )
