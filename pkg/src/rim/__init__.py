"""Directional radio-range irregularity over free-space path loss.

Public API re-exports; see the module docstrings for the model details and
README for the CLI and HTTP service.
"""

from .errors import (
    DegenerateGeometryError,
    GenerationExhaustedError,
    InvalidCoefficientError,
    NoRangeError,
    ParameterError,
    RimError,
    ScenarioError,
    ScenarioFormatError,
)
from .geometry import Position, bearing_deg, distance
from .irregularity import (
    DEFAULT_MAX_ATTEMPTS,
    IrregularityPattern,
    generate_pattern,
    k_at,
)
from .propagation import (
    PathLossParams,
    RadioParams,
    adjusted_path_loss_db,
    fspl_db,
    isotropic_range_m,
    link_budget_db,
    range_at_bearing,
    received_power_dbm,
)
from .rng import RngStream, stream_id_for, weibull_from_uniform
from .scenario import (
    AsymmetryReport,
    ConnectivityGraph,
    Edge,
    Node,
    Scenario,
    SweepRow,
    asymmetry_report,
    build_connectivity,
    doi_sweep,
    pattern_stream_id,
)
from .schema import ScenarioModel, load_scenario, parse_scenario_json

__version__ = "0.1.0"

__all__ = [
    "AsymmetryReport",
    "ConnectivityGraph",
    "DEFAULT_MAX_ATTEMPTS",
    "DegenerateGeometryError",
    "Edge",
    "GenerationExhaustedError",
    "InvalidCoefficientError",
    "IrregularityPattern",
    "NoRangeError",
    "Node",
    "ParameterError",
    "PathLossParams",
    "Position",
    "RadioParams",
    "RimError",
    "RngStream",
    "Scenario",
    "ScenarioError",
    "ScenarioFormatError",
    "ScenarioModel",
    "SweepRow",
    "adjusted_path_loss_db",
    "asymmetry_report",
    "bearing_deg",
    "build_connectivity",
    "distance",
    "doi_sweep",
    "fspl_db",
    "generate_pattern",
    "isotropic_range_m",
    "k_at",
    "link_budget_db",
    "load_scenario",
    "parse_scenario_json",
    "pattern_stream_id",
    "range_at_bearing",
    "received_power_dbm",
    "stream_id_for",
    "weibull_from_uniform",
]
