"""Request/response bodies for the HTTP service."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field

from ..schema import PathLossModel, ScenarioModel

_MAX_SEED = (1 << 64) - 1


class PatternRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(default=0, ge=0, le=_MAX_SEED)
    doi: float = Field(default=0.006, ge=0)
    a: float = Field(default=1.5, gt=0)
    b: float = Field(default=1.0, gt=0)


class PatternResponse(BaseModel):
    seed: int
    doi: float
    attempts_used: int
    k: list[float]


class RadioModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    tx_power_dbm: float = 0.0
    rx_sensitivity_dbm: float = -80.0
    tx_gain_db: float = 0.0
    rx_gain_db: float = 0.0


class ContourRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(default=0, ge=0, le=_MAX_SEED)
    doi: float = Field(default=0.006, ge=0)
    a: float = Field(default=1.5, gt=0)
    b: float = Field(default=1.0, gt=0)
    pathloss: PathLossModel
    radio: RadioModel = Field(default_factory=RadioModel)


class ContourResponse(BaseModel):
    seed: int
    doi: float
    attempts_used: int
    isotropic_range_m: float
    k: list[float]
    range_m: list[float]


class ConnectivityRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel


class EdgeModel(BaseModel):
    src: int
    dst: int
    prx_dbm: float
    audible: bool


class SummaryModel(BaseModel):
    pairs: int
    symmetric: int
    asymmetric: int
    disconnected: int
    asym_fraction: float


class ConnectivityResponse(BaseModel):
    summary: SummaryModel
    edges: list[EdgeModel]


class SweepRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")

    scenario: ScenarioModel
    doi_values: list[float] = Field(min_length=1)
    replications: int = Field(default=30, ge=1)


class SweepRowModel(BaseModel):
    doi: float
    mean_asym: float
    std: float
    reps: int


class SweepResponse(BaseModel):
    rows: list[SweepRowModel]
