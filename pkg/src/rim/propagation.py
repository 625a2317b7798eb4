"""Path loss, irregularity-adjusted received power, and range contours.

The isotropic baseline is free-space path loss with a configurable exponent

    FSPL(d) = 10 * alpha * log10(d / d0) + L,      d0 = lambda / (4 pi)

clamped below at 0 dB so the model never turns a loss into amplification
(the clamp region d < d0 is outside the model's validity anyway).  The
directional adjustment multiplies the dB figure by the transmitter's
coefficient in the departure direction:

    adjusted(d, theta) = FSPL(d) * K(theta)

which makes the irregularity a relative (percentage) perturbation of path
loss, consistent with its per-degree definition.  Formulating FSPL through
the reference distance d0 also makes FSPL(d0) exactly 0 in floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    DegenerateGeometryError,
    InvalidCoefficientError,
    NoRangeError,
    ParameterError,
)
from .geometry import Position, bearing_deg, distance
from .irregularity import IrregularityPattern, k_at

SPEED_OF_LIGHT_M_S = 299_792_458.0


@dataclass(frozen=True)
class PathLossParams:
    """Carrier frequency, path-loss exponent, and fixed system loss."""

    frequency_hz: float
    alpha: float = 2.0
    system_loss_db: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.frequency_hz) and self.frequency_hz > 0):
            raise ParameterError(f"frequency_hz must be positive, got {self.frequency_hz}")
        if not (math.isfinite(self.alpha) and self.alpha >= 1.0):
            raise ParameterError(f"alpha must be a finite real >= 1, got {self.alpha}")
        if not (math.isfinite(self.system_loss_db) and self.system_loss_db >= 0.0):
            raise ParameterError(f"system_loss_db must be non-negative, got {self.system_loss_db}")

    @property
    def wavelength_m(self) -> float:
        return SPEED_OF_LIGHT_M_S / self.frequency_hz

    @property
    def reference_distance_m(self) -> float:
        """d0 = lambda / (4 pi): the distance where unclamped FSPL crosses 0 dB."""
        return self.wavelength_m / (4.0 * math.pi)


@dataclass(frozen=True)
class RadioParams:
    """Transmit power, antenna gains, and receiver sensitivity."""

    tx_power_dbm: float
    rx_sensitivity_dbm: float
    tx_gain_db: float = 0.0
    rx_gain_db: float = 0.0

    def __post_init__(self):
        for name in ("tx_power_dbm", "rx_sensitivity_dbm", "tx_gain_db", "rx_gain_db"):
            if not math.isfinite(getattr(self, name)):
                raise ParameterError(f"{name} must be finite, got {getattr(self, name)}")


def fspl_db(d: float, params: PathLossParams) -> float:
    """Isotropic path loss at distance ``d`` meters, in dB, clamped at 0."""
    if not (d > 0.0):
        raise DegenerateGeometryError(f"distance must be positive, got {d}")
    raw = 10.0 * params.alpha * math.log10(d / params.reference_distance_m) + params.system_loss_db
    return raw if raw > 0.0 else 0.0


def adjusted_path_loss_db(pl_db: float, k: float) -> float:
    """Scale a dB path-loss figure by an irregularity coefficient."""
    if not (math.isfinite(k) and k > 0.0):
        raise InvalidCoefficientError(f"coefficient must be strictly positive, got {k}")
    if not (math.isfinite(pl_db) and pl_db >= 0.0):
        raise ParameterError(f"path loss must be a non-negative dB figure, got {pl_db}")
    return pl_db * k


def received_power_dbm(
    tx_pos: Position,
    tx_pattern: IrregularityPattern,
    tx_radio: RadioParams,
    rx_pos: Position,
    rx_radio: RadioParams,
    params: PathLossParams,
) -> float:
    """Received power at ``rx_pos`` from a transmitter at ``tx_pos``, in dBm.

    The irregularity applies at the transmitter: K is looked up in the
    transmitter's pattern at the bearing toward the receiver.
    """
    d = distance(tx_pos, rx_pos)
    if d == 0.0:
        raise DegenerateGeometryError("transmitter and receiver positions coincide")
    k = k_at(tx_pattern, bearing_deg(tx_pos, rx_pos))
    loss = adjusted_path_loss_db(fspl_db(d, params), k)
    return tx_radio.tx_power_dbm + tx_radio.tx_gain_db + rx_radio.rx_gain_db - loss


def link_budget_db(radio: RadioParams, peer_sensitivity_dbm: float) -> float:
    """dB headroom a link can lose before dropping below the peer's sensitivity."""
    return radio.tx_power_dbm + radio.tx_gain_db + radio.rx_gain_db - peer_sensitivity_dbm


def _range_from_budget(budget_over_k_db: float, params: PathLossParams) -> float:
    exponent = (budget_over_k_db - params.system_loss_db) / (10.0 * params.alpha)
    return params.reference_distance_m * 10.0 ** exponent


def range_at_bearing(
    pattern: IrregularityPattern,
    radio: RadioParams,
    peer_sensitivity_dbm: float,
    params: PathLossParams,
    theta: float,
) -> float:
    """Distance at which received power hits the peer's sensitivity along ``theta``.

    Closed form: d(theta) = d0 * 10 ** ((B / K(theta) - L) / (10 * alpha))
    with B the link budget.  Raises :class:`NoRangeError` if B <= 0.
    """
    budget = link_budget_db(radio, peer_sensitivity_dbm)
    if budget <= 0.0:
        raise NoRangeError(f"link budget must be positive, got {budget} dB")
    return _range_from_budget(budget / k_at(pattern, theta), params)


def isotropic_range_m(
    radio: RadioParams, peer_sensitivity_dbm: float, params: PathLossParams
) -> float:
    """Range of the unperturbed (K = 1) free-space link."""
    budget = link_budget_db(radio, peer_sensitivity_dbm)
    if budget <= 0.0:
        raise NoRangeError(f"link budget must be positive, got {budget} dB")
    return _range_from_budget(budget, params)
