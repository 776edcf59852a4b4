"""Discrete-time leaky integrate-and-fire neurons as deterministic quantizers.

A LIF neuron driven by a constant input acts as a non-uniform scalar
quantizer: the input axis is partitioned into intervals, each producing one
of T+1 possible spike patterns over a T-step window.  This module simulates
the neuron exactly, decodes spike trains back to firing rates, and derives
the quantization interval boundaries in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "LifParams",
    "SpikeTrain",
    "MembraneTrace",
    "QuantizerRow",
    "QuantizerTable",
    "step_membrane",
    "encode_lif",
    "encode_lif_array",
    "decode_rate",
    "first_spike_step",
    "quantization_boundary",
    "build_quantizer_table",
]


@dataclass(frozen=True)
class LifParams:
    """Threshold, leak and reset constants of the discrete-time neuron.

    The membrane update is
        V[n] = V[n-1] + (1/tau) * (-(V[n-1] - v_reset) + x[n])
    and a spike is emitted whenever V[n] >= v_th, after which the carried
    membrane state is v_reset (hard reset, no refractory period).
    """

    v_th: float = 1.0
    tau: float = 2.0
    v_reset: float = 0.0

    def __post_init__(self):
        if not self.v_th > 0:
            raise ValueError(f"v_th must be positive, got {self.v_th}")
        if not self.tau > 1:
            # tau = 1 has no memory and tau < 1 flips the sign of the leak
            # factor (1 - 1/tau); the quantizer derivations assume decay.
            raise ValueError(f"tau must be > 1, got {self.tau}")

    @property
    def leak(self) -> float:
        """Per-step retention factor (1 - 1/tau) of the membrane."""
        return 1.0 - 1.0 / self.tau


@dataclass(frozen=True)
class SpikeTrain:
    """Fixed-length binary spike sequence over ``t_count`` timesteps."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("spike train bits must be 0 or 1")

    @property
    def t_count(self) -> int:
        return len(self.bits)

    def spike_count(self) -> int:
        return sum(self.bits)


@dataclass(frozen=True)
class MembraneTrace:
    """Membrane potentials (sampled after each update, before reset) and spikes."""

    potentials: tuple[float, ...]
    spikes: SpikeTrain


def step_membrane(v_prev: float, x: float, p: LifParams) -> tuple[float, bool]:
    """Advance the membrane by one timestep.

    Returns the updated potential (pre-reset) and whether it crossed
    threshold.  When it did, the caller carries ``p.v_reset`` into the next
    step.
    """
    v_new = v_prev + (1.0 / p.tau) * (-(v_prev - p.v_reset) + x)
    return v_new, v_new >= p.v_th


def encode_lif(x: float, t_count: int, p: LifParams = LifParams()) -> MembraneTrace:
    """Encode a constant input into spikes over ``t_count`` timesteps.

    The membrane starts discharged at ``p.v_reset`` and is hard-reset after
    every spike; the recorded potentials are the pre-reset values.
    """
    if t_count < 1:
        raise ValueError(f"t_count must be >= 1, got {t_count}")
    v = p.v_reset
    potentials = []
    bits = []
    for _ in range(t_count):
        v, spiked = step_membrane(v, x, p)
        potentials.append(v)
        bits.append(1 if spiked else 0)
        if spiked:
            v = p.v_reset
    return MembraneTrace(tuple(potentials), SpikeTrain(tuple(bits)))


def encode_lif_array(x: np.ndarray, t_count: int, p: LifParams = LifParams()) -> np.ndarray:
    """Vectorized constant-input encoding of an array of inputs.

    Returns a uint8 spike tensor of shape ``(t_count, *x.shape)``.
    Bit-identical to running :func:`encode_lif` per element.
    """
    x = np.asarray(x, dtype=np.float64)
    v = np.full(x.shape, p.v_reset, dtype=np.float64)
    spikes = np.empty((t_count,) + x.shape, dtype=np.uint8)
    for t in range(t_count):
        v = v + (1.0 / p.tau) * (-(v - p.v_reset) + x)
        fired = v >= p.v_th
        spikes[t] = fired
        v = np.where(fired, p.v_reset, v)
    return spikes


def decode_rate(s: SpikeTrain | Sequence[int] | np.ndarray) -> float:
    """Firing-rate decoding: fraction of timesteps that carry a spike."""
    if isinstance(s, SpikeTrain):
        return s.spike_count() / s.t_count
    arr = np.asarray(s)
    if arr.size == 0:
        raise ValueError("cannot decode an empty spike train")
    return float(arr.sum() / arr.shape[0] if arr.ndim == 1 else arr.mean())


def first_spike_step(x: float, p: LifParams, max_steps: int) -> int | None:
    """0-indexed timestep of the first spike, or None within ``max_steps``."""
    v = p.v_reset
    for n in range(max_steps):
        v, spiked = step_membrane(v, x, p)
        if spiked:
            return n
    return None


def quantization_boundary(k: int, p: LifParams = LifParams()) -> float:
    """Smallest constant input that fires after exactly ``k`` charge steps.

    Charging from the discharged state, the membrane after k steps is
    x * (1 - (1 - 1/tau)^k), so the threshold crossing on step k requires
        x >= v_th / (1 - (1 - 1/tau)^k).
    k = 1 gives the every-step firing bound v_th * tau; k = 2 gives
    v_th / (2/tau - 1/tau^2).
    """
    if k < 1:
        raise ValueError(f"charge duration k must be >= 1, got {k}")
    return p.v_th / (1.0 - p.leak**k)


@dataclass(frozen=True)
class QuantizerRow:
    """One output code: silent steps before the first spike, rate, interval."""

    k: int
    f_r: float
    x_lo: float
    x_hi: float
    pattern: tuple[int, ...]


@dataclass(frozen=True)
class QuantizerTable:
    """The T+1 output codes of a LIF neuron driven by constant inputs.

    Row ``k`` (k = 0..t_count) covers inputs whose first spike happens at
    0-indexed timestep k, i.e. after k silent charge steps; the final row
    (k = t_count) is the code of inputs that never fire inside the window.
    Rows are sorted by k ascending, firing rates are non-increasing, and
    the half-open intervals [x_lo, x_hi) tile the swept input range.
    """

    t_count: int
    params: LifParams
    x_cap: float
    rows: tuple[QuantizerRow, ...] = field(repr=False)

    def boundaries(self) -> tuple[float, ...]:
        """Interval edges x_1 > x_2 > ... > x_T (closed-form)."""
        return tuple(quantization_boundary(k, self.params) for k in range(1, self.t_count + 1))

    def distinct_rates(self) -> tuple[float, ...]:
        return tuple(sorted({row.f_r for row in self.rows}, reverse=True))


def build_quantizer_table(
    t_count: int, p: LifParams = LifParams(), x_cap: float | None = None
) -> QuantizerTable:
    """Enumerate all T+1 output codes with their input intervals.

    ``x_cap`` bounds the swept input axis from above (the saturated code's
    upper edge); it defaults to 1.5 * v_th * tau.  Firing rates and patterns
    come from simulating one representative input per interval, not from the
    closed form, so the table doubles as a simulation/closed-form cross-check.
    """
    if t_count < 1:
        raise ValueError(f"t_count must be >= 1, got {t_count}")
    if x_cap is None:
        x_cap = 1.5 * p.v_th * p.tau
    saturation = quantization_boundary(1, p)
    if x_cap <= saturation:
        raise ValueError(f"x_cap must exceed the saturation bound {saturation}, got {x_cap}")

    edges = [quantization_boundary(k, p) for k in range(1, t_count + 1)]
    rows = []
    for k in range(t_count + 1):
        if k == 0:
            x_lo, x_hi = edges[0], x_cap
        elif k < t_count:
            x_lo, x_hi = edges[k], edges[k - 1]
        else:
            x_lo, x_hi = 0.0, edges[-1]
        representative = 0.5 * (x_lo + x_hi)
        trace = encode_lif(representative, t_count, p)
        rows.append(
            QuantizerRow(
                k=k,
                f_r=decode_rate(trace.spikes),
                x_lo=x_lo,
                x_hi=x_hi,
                pattern=trace.spikes.bits,
            )
        )
    return QuantizerTable(t_count=t_count, params=p, x_cap=x_cap, rows=tuple(rows))
