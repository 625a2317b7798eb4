"""Deterministic, splittable random number streams.

Every stochastic quantity in this package is drawn from an :class:`RngStream`,
a counter-based generator in the SplitMix64 family.  Outputs are a pure
function of ``(master_seed, stream_id, draw_index)``, which buys three things:

* bit-identical sequences on every platform and every run,
* O(1) seeking, so a sub-sequence (e.g. one rejection-sampling attempt) can
  be replayed without regenerating everything before it,
* cheap derivation of statistically independent streams from one master seed.

Stream derivation rule
----------------------
All arithmetic is modulo 2**64.  ``mix64`` is the SplitMix64 finalizer and
``mix_gamma`` the MurmurHash3-style odd-gamma derivation (both below).

    base  = mix64(master_seed) + mix64(stream_id XOR 0x9E3779B97F4A7C15)
    gamma = mix_gamma(base XOR 0x6A09E667F3BCC909)        # always odd
    raw_n = mix64(base + (n + 1) * gamma)                 # n = 0, 1, 2, ...

``raw_n`` is the n-th 64-bit output.  Derived variates:

    uniform_n = ((raw_n >> 12) + 0.5) * 2**-52            # in (0, 1), never 0 or 1
    sign_n    = +1 if raw_n is odd else -1
    weibull_n = scale_a * (-ln(uniform_n)) ** (1 / shape_b)

Per-purpose stream ids come from :func:`stream_id_for`, e.g. the pattern
stream of node 7 is ``mix64(fnv1a64(b"pattern") + 7)``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterError

_MASK64 = (1 << 64) - 1

# SplitMix64 finalizer constants.
_MIX_MUL_1 = 0xBF58476D1CE4E5B9
_MIX_MUL_2 = 0x94D049BB133111EB
# MurmurHash3 fmix64 constants, used for gamma derivation.
_GAMMA_MUL_1 = 0xFF51AFD7ED558CCD
_GAMMA_MUL_2 = 0xC4CEB9FE1A85EC53

_STREAM_SALT = 0x9E3779B97F4A7C15  # 2**64 / golden ratio
_GAMMA_SALT = 0x6A09E667F3BCC909  # fractional bits of sqrt(2)

_U64 = np.uint64
_INV_2_52 = 2.0 ** -52


def mix64(z: int) -> int:
    """SplitMix64 finalizer: a bijective 64-bit avalanche mix."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX_MUL_1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_MUL_2) & _MASK64
    return z ^ (z >> 31)


def mix_gamma(z: int) -> int:
    """Derive an odd, well-mixed increment for a SplitMix64-style stream."""
    z &= _MASK64
    z = ((z ^ (z >> 33)) * _GAMMA_MUL_1) & _MASK64
    z = ((z ^ (z >> 33)) * _GAMMA_MUL_2) & _MASK64
    z = (z ^ (z >> 33)) | 1
    # Guard against gammas with too-regular bit structure (cf. SplittableRandom).
    if ((z ^ (z >> 1)) & _MASK64).bit_count() < 24:
        z ^= 0xAAAAAAAAAAAAAAAA
    return z & _MASK64


def fnv1a64(data: bytes) -> int:
    """64-bit FNV-1a hash, used to turn purpose tags into stream-id space."""
    h = 0xCBF29CE484222325
    for byte in data:
        h = ((h ^ byte) * 0x100000001B3) & _MASK64
    return h


def stream_id_for(purpose: str, node_id: int) -> int:
    """Documented (purpose, node_id) -> stream_id derivation.

    ``stream_id_for(p, n) = mix64(fnv1a64(p.encode()) + n)``; distinct node
    ids under one purpose always map to distinct stream ids.
    """
    if node_id < 0:
        raise ParameterError(f"node_id must be non-negative, got {node_id}")
    return mix64((fnv1a64(purpose.encode("utf-8")) + node_id) & _MASK64)


def _check_u64(name: str, value: int) -> int:
    if not isinstance(value, (int, np.integer)):
        raise ParameterError(f"{name} must be an integer, got {type(value).__name__}")
    value = int(value)
    if not 0 <= value <= _MASK64:
        raise ParameterError(f"{name} must be a 64-bit unsigned integer, got {value}")
    return value


def _check_weibull_params(scale_a: float, shape_b: float) -> tuple[float, float]:
    scale_a = float(scale_a)
    shape_b = float(shape_b)
    if not (math.isfinite(scale_a) and scale_a > 0):
        raise ParameterError(f"Weibull scale must be a positive finite real, got {scale_a}")
    if not (math.isfinite(shape_b) and shape_b > 0):
        raise ParameterError(f"Weibull shape must be a positive finite real, got {shape_b}")
    return scale_a, shape_b


def weibull_from_uniform(u, scale_a: float, shape_b: float):
    """Inverse-transform a uniform variate in (0, 1) to Weibull(scale, shape).

    Accepts a scalar or an ndarray.  ``x = scale_a * (-ln u) ** (1 / shape_b)``,
    i.e. ``u`` plays the role of the survival probability ``exp(-(x/a)**b)``.
    """
    scale_a, shape_b = _check_weibull_params(scale_a, shape_b)
    if isinstance(u, np.ndarray):
        return scale_a * np.power(-np.log(u), 1.0 / shape_b)
    u = float(u)
    if not 0.0 < u < 1.0:
        raise ParameterError(f"uniform variate must lie strictly in (0, 1), got {u}")
    return scale_a * (-math.log(u)) ** (1.0 / shape_b)


class RngStream:
    """One deterministic draw sequence, identified by (master_seed, stream_id).

    A stream is single-owner: callers must not share one instance across
    threads.  All draws are pure functions of the stream's position, and
    :meth:`seek` repositions in O(1).
    """

    __slots__ = ("master_seed", "stream_id", "_base", "_gamma", "_position")

    def __init__(self, master_seed: int, stream_id: int = 0):
        self.master_seed = _check_u64("master_seed", master_seed)
        self.stream_id = _check_u64("stream_id", stream_id)
        self._base = (mix64(self.master_seed) + mix64(self.stream_id ^ _STREAM_SALT)) & _MASK64
        self._gamma = mix_gamma(self._base ^ _GAMMA_SALT)
        self._position = 0

    @property
    def position(self) -> int:
        """Number of 64-bit draws consumed so far."""
        return self._position

    def seek(self, position: int) -> None:
        """Jump to an absolute draw index (0 = fresh stream)."""
        if position < 0:
            raise ParameterError(f"position must be non-negative, got {position}")
        self._position = position

    def raw64(self, n: int) -> np.ndarray:
        """Consume and return the next ``n`` raw 64-bit outputs."""
        if n < 0:
            raise ParameterError(f"draw count must be non-negative, got {n}")
        counters = np.arange(self._position + 1, self._position + n + 1, dtype=_U64)
        self._position += n
        z = _U64(self._base) + _U64(self._gamma) * counters
        z ^= z >> _U64(30)
        z *= _U64(_MIX_MUL_1)
        z ^= z >> _U64(27)
        z *= _U64(_MIX_MUL_2)
        z ^= z >> _U64(31)
        return z

    def uniforms(self, n: int) -> np.ndarray:
        """Next ``n`` uniform variates, each strictly inside (0, 1)."""
        return uniform_from_raw(self.raw64(n))

    def next_uniform(self) -> float:
        """Next uniform variate in (0, 1); never exactly 0, so log stays finite."""
        return float(self.uniforms(1)[0])

    def signs(self, n: int) -> np.ndarray:
        """Next ``n`` fair signs as a float64 array of +1.0 / -1.0."""
        return sign_from_raw(self.raw64(n))

    def next_sign(self) -> int:
        """Next fair sign: +1 or -1, each with probability 1/2."""
        return int(self.signs(1)[0])

    def weibulls(self, n: int, scale_a: float, shape_b: float) -> np.ndarray:
        """Next ``n`` Weibull(scale_a, shape_b) variates; all strictly positive."""
        scale_a, shape_b = _check_weibull_params(scale_a, shape_b)
        return scale_a * np.power(-np.log(self.uniforms(n)), 1.0 / shape_b)

    def sample_weibull(self, scale_a: float, shape_b: float) -> float:
        """Next Weibull(scale_a, shape_b) variate via inverse-transform sampling."""
        return float(self.weibulls(1, scale_a, shape_b)[0])

    def __repr__(self) -> str:
        return (
            f"RngStream(master_seed={self.master_seed}, stream_id={self.stream_id}, "
            f"position={self._position})"
        )


def uniform_from_raw(raw: np.ndarray) -> np.ndarray:
    """Map raw 64-bit outputs to uniforms in (0, 1).

    Uses the top 52 bits so that ``k + 0.5`` is exact in float64; the result
    can never round to 0.0 or 1.0.
    """
    return ((raw >> _U64(12)).astype(np.float64) + 0.5) * _INV_2_52


def sign_from_raw(raw: np.ndarray) -> np.ndarray:
    """Map raw 64-bit outputs to fair +1.0 / -1.0 via the parity bit."""
    return np.where((raw & _U64(1)).astype(bool), 1.0, -1.0)
