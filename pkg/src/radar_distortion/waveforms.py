"""Transmitted reference waveforms.

Each waveform is a complex function of one time argument, gated to
[0, pw).  Phase sign conventions: the pulsed sinewave uses exp(+i 2 pi fc t),
every other family uses exp(-i 2 pi ...).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BranchError

CARRIER_HZ = 3.0e8
PULSE_WIDTH_S = 1.0e-4
CHIRP_BANDWIDTH_HZ = 1.5e8
HYPERBOLIC_B = -0.0000111108
DEFAULT_GAUSSIAN_SEED = 13
BARKER13 = (1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, 1.0)


class WaveformFamily(enum.Enum):
    SINE = "sine"
    CHIRP = "chirp"
    HYPERBOLIC = "hyperbolic"
    CODED = "coded"


def chirp_slope(bandwidth: float, pw: float) -> float:
    """Slope such that the instantaneous frequency fc + 2 slope t sweeps `bandwidth` over `pw`."""
    return bandwidth / (2.0 * pw)


@dataclass(frozen=True)
class WaveformSpec:
    family: WaveformFamily
    fc: float = CARRIER_HZ
    pw: float = PULSE_WIDTH_S
    slope: float | None = None
    b: float | None = None
    codes: tuple[float, ...] | None = field(default=None)

    def __post_init__(self):
        if not self.pw > 0:
            raise ValueError("pw must be positive")
        if not self.fc > 0:
            raise ValueError("fc must be positive")
        if self.family is WaveformFamily.CHIRP and self.slope is None:
            raise ValueError("chirp waveform needs a slope")
        if self.family is WaveformFamily.HYPERBOLIC:
            if self.b is None or self.b == 0.0:
                raise ValueError("hyperbolic waveform needs a nonzero b")
            # log(1 + b fc t) must stay real over the pulse
            if 1.0 + self.b * self.fc * self.pw <= 0.0:
                raise BranchError("1 + b fc t reaches zero inside the pulse")
        if self.family is WaveformFamily.CODED:
            if not self.codes:
                raise ValueError("coded waveform needs at least one code value")
            object.__setattr__(self, "codes", tuple(float(v) for v in self.codes))

    @property
    def dtseg(self) -> float:
        """Sub-pulse duration pw / N of a coded waveform."""
        if self.codes is None:
            raise AttributeError("dtseg is defined for coded waveforms only")
        return self.pw / len(self.codes)

    @classmethod
    def sine(cls, fc=CARRIER_HZ, pw=PULSE_WIDTH_S):
        return cls(WaveformFamily.SINE, fc, pw)

    @classmethod
    def chirp(cls, fc=CARRIER_HZ, pw=PULSE_WIDTH_S, slope=None):
        if slope is None:
            slope = chirp_slope(CHIRP_BANDWIDTH_HZ, pw)
        return cls(WaveformFamily.CHIRP, fc, pw, slope=slope)

    @classmethod
    def hyperbolic(cls, fc=CARRIER_HZ, pw=PULSE_WIDTH_S, b=HYPERBOLIC_B):
        return cls(WaveformFamily.HYPERBOLIC, fc, pw, b=b)

    @classmethod
    def coded(cls, codes, fc=CARRIER_HZ, pw=PULSE_WIDTH_S):
        return cls(WaveformFamily.CODED, fc, pw, codes=tuple(codes))


def heaviside(u):
    """Unit step with the convention heaviside(0) = 1, so pulses are [0, pw)."""
    out = (np.asarray(u) >= 0).astype(float)
    return float(out) if out.ndim == 0 else out


def gate(t, pw):
    return heaviside(t) - heaviside(np.asarray(t) - pw)


def eval_reference(spec: WaveformSpec, t):
    """Evaluate the transmitted waveform at time(s) `t`.

    Raises:
        BranchError: hyperbolic waveform with 1 + b fc t <= 0 inside the gate.
    """
    t = np.asarray(t, dtype=float)
    fam = spec.family
    if fam is WaveformFamily.SINE:
        out = np.exp(2j * math.pi * spec.fc * t) * gate(t, spec.pw)
    elif fam is WaveformFamily.CHIRP:
        out = np.exp(-2j * math.pi * (spec.fc * t + spec.slope * t**2)) * gate(t, spec.pw)
    elif fam is WaveformFamily.HYPERBOLIC:
        g = gate(t, spec.pw)
        arg = 1.0 + spec.b * spec.fc * t
        if np.any((g > 0) & (arg <= 0)):
            raise BranchError("1 + b fc t <= 0 inside the pulse")
        arg = np.where(g > 0, arg, 1.0)
        out = np.exp((-2j * math.pi / spec.b) * np.log(arg)) * g
    else:
        dtseg = spec.dtseg
        amp = np.zeros_like(t)
        for i, code in enumerate(spec.codes, start=1):
            amp = amp + code * (heaviside(t - (i - 1) * dtseg) - heaviside(t - i * dtseg))
        out = amp * np.exp(-2j * math.pi * spec.fc * t)
    return complex(out) if out.ndim == 0 else out


def barker13() -> np.ndarray:
    return np.array(BARKER13)


def gaussian_codes(seed: int = DEFAULT_GAUSSIAN_SEED, n: int = 13) -> np.ndarray:
    """Standard-normal sub-pulse amplitudes, reproducible from `seed`.

    Uniforms come from numpy's Philox4x64 counter-based generator and are
    turned into normals with the Box-Muller transform, so the sequence does
    not depend on numpy's default normal sampler.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = np.random.Generator(np.random.Philox(seed))
    m = (n + 1) // 2
    u1 = 1.0 - rng.random(m)  # (0, 1]
    u2 = rng.random(m)
    radius = np.sqrt(-2.0 * np.log(u1))
    pairs = np.column_stack((radius * np.cos(2 * math.pi * u2), radius * np.sin(2 * math.pi * u2)))
    return pairs.ravel()[:n]
