"""Per-node directional irregularity patterns.

A pattern is the 360-entry coefficient sequence K_0..K_359, one value per
integer degree of departure, generated once per node:

    K_0 = 1
    K_i = K_{i-1} + sign_i * W_i * doi        (1 <= i <= 359)

with W_i ~ Weibull(scale_a, shape_b) and sign_i a fair coin.  A sequence is
accepted only if it closes (|K_0 - K_359| <= doi) and stays strictly
positive; otherwise the whole sequence is discarded and regenerated from
fresh draws.  Rejection keeps the recurrence's distribution intact, unlike
smoothing or end-step correction, at an expected cost of roughly 50 attempts
for the default parameters.

Draw layout (fixed, so any attempt can be replayed by seeking the stream):
attempt j (1-based) consumes stream positions [(j-1)*718, j*718); the first
359 draws are the signs for steps 1..359, the next 359 the Weibull uniforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import GenerationExhaustedError, ParameterError
from .rng import RngStream, sign_from_raw, uniform_from_raw, _check_weibull_params

PATTERN_DEGREES = 360
DRAWS_PER_ATTEMPT = 2 * (PATTERN_DEGREES - 1)  # 359 signs + 359 uniforms
DEFAULT_MAX_ATTEMPTS = 10_000

# Attempts evaluated per vectorized batch; has no effect on results.
_BATCH_ATTEMPTS = 64


@dataclass(frozen=True)
class IrregularityPattern:
    """An accepted coefficient sequence plus its generation metadata."""

    k: np.ndarray
    doi: float
    node_stream_id: int
    attempts_used: int

    def __post_init__(self):
        k = np.asarray(self.k, dtype=np.float64)
        if k.shape != (PATTERN_DEGREES,):
            raise ParameterError(f"pattern needs {PATTERN_DEGREES} coefficients, got shape {k.shape}")
        if k[0] != 1.0:
            raise ParameterError(f"k[0] must be exactly 1, got {k[0]!r}")
        if not np.all(k > 0.0):
            raise ParameterError("all coefficients must be strictly positive")
        k = k.copy()
        k.setflags(write=False)
        object.__setattr__(self, "k", k)


def generate_pattern(
    stream: RngStream,
    doi: float,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
    scale_a: float = 1.5,
    shape_b: float = 1.0,
) -> IrregularityPattern:
    """Generate an accepted pattern by rejection sampling on ``stream``.

    The stream is left positioned just past the accepted attempt's draws.
    Raises :class:`GenerationExhaustedError` once ``max_attempts`` whole
    sequences have been rejected.
    """
    doi = float(doi)
    if not (math.isfinite(doi) and doi >= 0.0):
        raise ParameterError(f"doi must be a non-negative finite real, got {doi}")
    if max_attempts < 1:
        raise ParameterError(f"max_attempts must be at least 1, got {max_attempts}")
    scale_a, shape_b = _check_weibull_params(scale_a, shape_b)

    start = stream.position
    attempted = 0
    while attempted < max_attempts:
        batch = min(_BATCH_ATTEMPTS, max_attempts - attempted)
        raw = stream.raw64(batch * DRAWS_PER_ATTEMPT).reshape(batch, DRAWS_PER_ATTEMPT)
        signs = sign_from_raw(raw[:, : PATTERN_DEGREES - 1])
        u = uniform_from_raw(raw[:, PATTERN_DEGREES - 1 :])
        steps = signs * (scale_a * np.power(-np.log(u), 1.0 / shape_b)) * doi

        # Sequential recurrence: cumsum of [1, step_1, ..., step_359] rounds
        # exactly like K_i = K_{i-1} + step_i evaluated left to right.
        k = np.cumsum(np.hstack([np.ones((batch, 1)), steps]), axis=1)
        accepted = (np.abs(k[:, -1] - 1.0) <= doi) & (np.min(k, axis=1) > 0.0)
        hits = np.nonzero(accepted)[0]
        if hits.size:
            row = int(hits[0])
            attempts_used = attempted + row + 1
            stream.seek(start + attempts_used * DRAWS_PER_ATTEMPT)
            return IrregularityPattern(
                k=k[row],
                doi=doi,
                node_stream_id=stream.stream_id,
                attempts_used=attempts_used,
            )
        attempted += batch

    stream.seek(start + max_attempts * DRAWS_PER_ATTEMPT)
    raise GenerationExhaustedError(
        f"no pattern satisfied closure and positivity within {max_attempts} attempts "
        f"(doi={doi}, stream_id={stream.stream_id})",
        attempts=max_attempts,
    )


def k_at(pattern: IrregularityPattern, theta: float) -> float:
    """Coefficient for departure angle ``theta`` in degrees, 0 <= theta < 360.

    Piecewise constant over unit-degree bins: returns ``k[floor(theta)]``.
    Out-of-range input is a contract violation, not wrapped.
    """
    theta = float(theta)
    if not (0.0 <= theta < 360.0):
        raise ParameterError(f"theta must lie in [0, 360), got {theta}")
    return float(pattern.k[int(math.floor(theta)) % PATTERN_DEGREES])
