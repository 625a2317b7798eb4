"""Scenario file schema: strict JSON, documented defaults.

Unknown keys are rejected with an error naming the key; optional keys fall
back to the package defaults (doi 0.006, Weibull a=1.5 b=1, alpha 2, gains 0,
system loss 0).  The same pydantic models back the HTTP request bodies.
"""

from __future__ import annotations

import json
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from .errors import ScenarioFormatError
from .geometry import Position
from .propagation import PathLossParams, RadioParams
from .scenario import Node, Scenario

_MAX_SEED = (1 << 64) - 1


class WeibullModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    a: float = Field(default=1.5, gt=0)
    b: float = Field(default=1.0, gt=0)


class PathLossModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    frequency_hz: float = Field(gt=0)
    alpha: float = Field(default=2.0, ge=1)
    system_loss_db: float = Field(default=0.0, ge=0)


class NodeModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    id: int = Field(ge=0)
    x: float
    y: float
    tx_power_dbm: float
    rx_sensitivity_dbm: float
    tx_gain_db: float = 0.0
    rx_gain_db: float = 0.0


class ScenarioModel(BaseModel):
    model_config = ConfigDict(extra="forbid")

    seed: int = Field(ge=0, le=_MAX_SEED)
    doi: float = Field(default=0.006, ge=0)
    weibull: WeibullModel = Field(default_factory=WeibullModel)
    pathloss: PathLossModel
    nodes: list[NodeModel] = Field(min_length=2)

    def to_scenario(self) -> Scenario:
        """Build the domain object; structural invariants are checked there."""
        return Scenario(
            nodes=tuple(
                Node(
                    id=n.id,
                    position=Position(n.x, n.y),
                    radio=RadioParams(
                        tx_power_dbm=n.tx_power_dbm,
                        rx_sensitivity_dbm=n.rx_sensitivity_dbm,
                        tx_gain_db=n.tx_gain_db,
                        rx_gain_db=n.rx_gain_db,
                    ),
                )
                for n in self.nodes
            ),
            pathloss=PathLossParams(
                frequency_hz=self.pathloss.frequency_hz,
                alpha=self.pathloss.alpha,
                system_loss_db=self.pathloss.system_loss_db,
            ),
            doi=self.doi,
            weibull_a=self.weibull.a,
            weibull_b=self.weibull.b,
            master_seed=self.seed,
        )


def _format_validation_error(exc: ValidationError) -> str:
    lines = []
    for err in exc.errors():
        loc = ".".join(str(part) for part in err["loc"]) or "<root>"
        lines.append(f"{loc}: {err['msg']}")
    return "; ".join(lines)


def parse_scenario_json(text: str) -> Scenario:
    """Parse scenario JSON text into a validated :class:`Scenario`."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    try:
        model = ScenarioModel.model_validate(data)
    except ValidationError as exc:
        raise ScenarioFormatError(f"invalid scenario: {_format_validation_error(exc)}") from exc
    return model.to_scenario()


def load_scenario(path: str | Path) -> Scenario:
    """Read and validate a scenario file."""
    return parse_scenario_json(Path(path).read_text(encoding="utf-8"))
