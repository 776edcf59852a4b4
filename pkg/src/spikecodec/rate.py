"""Stochastic rate coding: independent Bernoulli spike trains per timestep.

Each value p in [0, 1] is encoded as T independent Bernoulli(p) draws, the
discrete-time counterpart of a Poisson process whose rate is the value
itself.  Streams are counter-based (Philox keyed by seed and stream index),
so every pixel's train is reproducible in isolation and independent of the
order in which an image is encoded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lif import SpikeTrain, decode_rate

__all__ = [
    "RateCoderConfig",
    "encode_poisson",
    "encode_poisson_image",
    "uniform_field",
    "decode_rate",
]


@dataclass(frozen=True)
class RateCoderConfig:
    seed: int
    t_count: int

    def __post_init__(self):
        if self.t_count < 1:
            raise ValueError(f"t_count must be >= 1, got {self.t_count}")


def _stream(seed: int, stream_index: int) -> np.random.Generator:
    """Independent substream keyed by (seed, stream_index)."""
    key = np.array([np.uint64(seed), np.uint64(stream_index)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def uniform_field(
    cfg: RateCoderConfig,
    n_streams: int,
    t_count: int | None = None,
    stream_offset: int = 0,
) -> np.ndarray:
    """Per-stream uniform draws, shape (n_streams, t_count).

    Row i holds the first draws of stream (cfg.seed, stream_offset + i); a
    train for any T' <= t_count is the prefix of the same row, which is what
    makes timestep sweeps cheap without breaking per-pixel reproducibility.
    """
    t = cfg.t_count if t_count is None else t_count
    u = np.empty((n_streams, t), dtype=np.float64)
    for i in range(n_streams):
        u[i] = _stream(cfg.seed, stream_offset + i).random(t)
    return u


def encode_poisson(p: float, cfg: RateCoderConfig, stream_index: int = 0) -> SpikeTrain:
    """Encode a firing probability into a T-step Bernoulli spike train."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"firing probability must lie in [0, 1], got {p}")
    u = _stream(cfg.seed, stream_index).random(cfg.t_count)
    return SpikeTrain(tuple(int(b) for b in (u < p)))


def encode_poisson_image(
    probabilities: np.ndarray, cfg: RateCoderConfig, stream_offset: int = 0
) -> np.ndarray:
    """Encode a field of probabilities, one substream per pixel.

    Pixel at flat row-major index i uses stream ``stream_offset + i``.
    Returns a uint8 spike tensor of shape (t_count, *probabilities.shape).
    """
    probs = np.asarray(probabilities, dtype=np.float64)
    if probs.size and (probs.min() < 0.0 or probs.max() > 1.0):
        raise ValueError("firing probabilities must lie in [0, 1]")
    flat = probs.reshape(-1)
    u = np.empty((flat.size, cfg.t_count), dtype=np.float64)
    for i in range(flat.size):
        u[i] = _stream(cfg.seed, stream_offset + i).random(cfg.t_count)
    bits = (u < flat[:, None]).astype(np.uint8)
    return bits.T.reshape((cfg.t_count,) + probs.shape)
