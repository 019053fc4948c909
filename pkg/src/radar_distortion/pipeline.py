"""Generic transmit -> reflect -> receive composition.

The waveform leaves the radar at x' = 0 in F' and travels toward +x'.  In F
it is observed at the fixed reflector position x = c4, re-radiated toward
-x, and finally read back in F' at x' = 0.  Evaluating the chain at a radar
time t' therefore runs it backwards:

1. (t_r, x_r) = inverse(t', 0)           radar event seen from F
2. t_b = t_r - (c4 - x_r) / cp            when the echo left the reflector
3. (t_f, x_f) = forward(t_b, c4)          that event seen from F'
4. tau = t_f - x_f / cp                   transmit time of the wavefront

and the received sample is the transmitted waveform at tau.  Nothing here
knows a closed form; it only composes the transform functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import NoInterceptError
from .transforms import MotionParams, SpacetimeEvent, TransformKind, forward_map, inverse_map
from .waveforms import WaveformSpec, eval_reference


def intercept_range(kind: TransformKind, motion: MotionParams) -> float:
    """Fixed coordinate c4 where the outgoing wavefront meets the target.

    Hsu and Galilean use the constant-acceleration intercept (the smaller
    root of x = x0 + v0 x/c + alpha0 (x/c)^2 / 2), Lorentz the constant
    velocity one c x0 / (c - v0), Reference simply x0.

    Raises:
        NoInterceptError: the target outruns the wavefront.
    """
    c, v0, a0, x0 = motion.c, motion.v0, motion.alpha0, motion.x0
    if kind is TransformKind.REFERENCE:
        return x0
    if v0 >= c:
        raise NoInterceptError("target recedes at or above the propagation speed")
    if kind is TransformKind.LORENTZ:
        return c * x0 / (c - v0)
    if kind in (TransformKind.HSU, TransformKind.GALILEAN):
        radicand = (c - v0) ** 2 - 2.0 * a0 * x0
        if radicand < 0:
            raise NoInterceptError("negative radicand in the intercept range")
        # -c(-c + v0 + sqrt(R)) / a0, rationalized so that a0 -> 0 is harmless
        return 2.0 * c * x0 / ((c - v0) + math.sqrt(radicand))
    raise ValueError(f"{kind.value} transformation has no intercept geometry")


@dataclass(frozen=True)
class PipelineScenario:
    transform: TransformKind
    spec: WaveformSpec
    motion: MotionParams
    cp: float | None = None
    c4: float = field(init=False)

    def __post_init__(self):
        if not self.transform.has_spatial_map:
            raise ValueError("the classical model has no spatial map; use classical_retarded_time")
        if self.cp is None:
            object.__setattr__(self, "cp", self.motion.c)
        object.__setattr__(self, "c4", intercept_range(self.transform, self.motion))


def pipeline_retarded_time(s: PipelineScenario, t_prime):
    """Transmit time whose wavefront reaches the radar at `t_prime` via the reflector."""
    forward = forward_map(s.transform)
    inverse = inverse_map(s.transform)
    t_prime = np.asarray(t_prime, dtype=float)
    radar = inverse(SpacetimeEvent(t_prime, np.zeros_like(t_prime)), s.motion)
    t_bounce = radar.t - (s.c4 - radar.x) / s.cp
    at_target = forward(SpacetimeEvent(t_bounce, np.full_like(t_prime, s.c4)), s.motion)
    tau = np.asarray(at_target.t) - np.asarray(at_target.x) / s.cp
    return float(tau) if tau.ndim == 0 else tau


def received_pipeline(s: PipelineScenario, t_prime):
    """Received complex sample(s) at radar time(s) `t_prime`."""
    return eval_reference(s.spec, pipeline_retarded_time(s, t_prime))
