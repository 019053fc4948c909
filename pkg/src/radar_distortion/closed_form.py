"""Closed-form received waveforms built from precomputed F-constants.

The fast path evaluates, per transform, a reduced formula for the retarded
time tau(t') and then the waveform at tau.  It is checked against the
generic composition in :mod:`radar_distortion.pipeline`.

Two families of formulas live here:

* ``closed_retarded_time``: the reduced formulas used by default.  They
  use the published constant set, with a small number of corrections
  that the pipeline comparison showed to be necessary (see the verify
  report).
* ``printed_retarded_time``: the bracket expressions exactly as typeset,
  kept so that their deviation from the pipeline can be reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BranchError, DegenerateError, DomainError
from .pipeline import intercept_range
from .transforms import MotionParams, TransformKind, classical_retarded_time
from .waveforms import WaveformFamily, WaveformSpec


@dataclass(frozen=True)
class HsuConstants:
    motion: MotionParams
    xintav: float
    F1W: float
    F2W: float
    F3W: float
    F4W: float
    F5W: float
    F6W: float
    F7W: float
    F8W: float
    F9W: float
    F10W: float
    F11W: float
    F19W: float


@dataclass(frozen=True)
class HsuTimeTerms:
    F12W: np.ndarray
    F13W: np.ndarray
    F14W: np.ndarray
    F15W: np.ndarray
    F16W: np.ndarray
    F17W: np.ndarray
    F18W: np.ndarray


@dataclass(frozen=True)
class LorentzConstants:
    motion: MotionParams
    xintxv: float
    F1L: float
    F2L: float
    F3L: float
    F4L: float
    F5L: float
    F6L: float
    F7L: float
    F8L: float
    F9L: float
    # never defined in print; chosen so F10L is the bounce time of the return leg
    F17L: float
    F19L: float

    def F10L(self, t_prime):
        c, v0 = self.motion.c, self.motion.v0
        return t_prime / self.F17L + self.F19L * t_prime - (self.xintxv + 2.0 * v0 * t_prime / self.F17L) / c


def hsu_constants(m: MotionParams) -> HsuConstants:
    if m.alpha0 == 0.0:
        raise DegenerateError("Hsu constants need a nonzero alpha0")
    c, v0, a0 = m.c, m.v0, m.alpha0
    F1, F2, F3 = m.F1, m.F2, m.F3
    x = intercept_range(TransformKind.HSU, m)
    F1W = F2
    F5W = F2**2
    F7W = c * F1W / F3
    F4W = -(F2**2) + F3**2 * x**2 / c**2
    if F4W == 0.0:
        raise DomainError("F4W vanishes")
    return HsuConstants(
        motion=m,
        xintav=x,
        F1W=F1W,
        F2W=-F1W * F1 * x,
        F3W=-F1 * F3 * x**2 / c,
        F4W=F4W,
        F5W=F5W,
        F6W=-F1W * v0 / F3,
        F7W=F7W,
        F8W=F1,
        F9W=c**2 * F5W,
        F10W=F7W - x,
        F11W=a0 * x,
        F19W=math.sqrt((1.0 + F1) * (1.0 - F1)),
    )


def hsu_time_terms(k: HsuConstants, t_prime, variant: str = "printed") -> HsuTimeTerms:
    """The t'-dependent terms F12W..F18W, evaluated as printed.

    ``variant="printed"`` uses F13W and F14W where the typeset F15W has
    them; ``variant="f13w"`` substitutes F13W for F14W.  The printed F14W is
    dimensionally inconsistent and usually exceeds 1 in magnitude, so its
    square roots come out NaN; no error is raised for that.
    """
    if variant not in ("printed", "f13w"):
        raise ValueError("variant must be 'printed' or 'f13w'")
    m = k.motion
    c, a0, F3 = m.c, m.alpha0, m.F3
    tp = np.asarray(t_prime, dtype=float)
    with np.errstate(invalid="ignore"):
        s = np.sqrt(1.0 - (k.F8W + F3 * tp) ** 2)
        F12W = k.F7W - k.F9W / (a0 * s)
        F13W = -k.F8W - (F3 / c) * (k.F6W - c**2 * k.F5W * (k.F8W + F3 * tp) / (a0 * s))
        F14W = -k.F8W - (F3 / c) * (k.F6W - c**2 * k.F9W * (k.F8W + F3 * tp) / (a0 * s))
        g = F14W if variant == "printed" else F13W
        r13 = np.sqrt(1.0 - F13W**2)
        r14 = np.sqrt(1.0 - g**2)
        F15W = (
            k.F10W
            + F12W / r14
            - k.F9W / (a0 * r13)
            + F12W * g / r14
            + k.F6W
            - F13W * k.F19W / (a0 * r13)
        ) / c
        common = -k.F11W * F15W / c - c * F15W * k.F1W + k.F2W + k.F3W
        F16W = F3 / (c * k.F4W) * common
        F17W = common / (c * k.F4W)
        F18W = np.sqrt((1.0 + F16W + k.F8W) * (1.0 - F16W - k.F8W))
    return HsuTimeTerms(F12W, F13W, F14W, F15W, F16W, F17W, F18W)


def lorentz_constants(m: MotionParams) -> LorentzConstants:
    c, v0 = m.c, m.v0
    x = intercept_range(TransformKind.LORENTZ, m)
    F1L = m.F2
    F4L = c**2 - v0**2
    F7L = F1L**2
    F8L = m.F1**2
    return LorentzConstants(
        motion=m,
        xintxv=x,
        F1L=F1L,
        F2L=F1L * v0 * x / F4L,
        F3L=c**2 * F1L * x / F4L,
        F4L=F4L,
        F5L=c**2 * F1L * v0,
        F6L=c**2 * F1L,
        F7L=F7L,
        F8L=F8L,
        F9L=F8L / F7L,
        F17L=F1L,
        F19L=3.0 * m.F1 / F1L,
    )


# -- default fast path -------------------------------------------------------


def _hsu_retarded(k: HsuConstants, tp):
    m = k.motion
    c, a0, F3 = m.c, m.alpha0, m.F3
    t_r = tp / k.F1W
    u_r = k.F8W + F3 * t_r
    if np.any(np.abs(u_r) >= 1.0):
        raise DomainError("return leg leaves the Hsu domain")
    F_r = np.sqrt((1.0 - u_r) * (1.0 + u_r))
    # radar position in F, c^2 F2 (F2 - F) / alpha0 without the cancellation
    x_r = c * k.F1W * t_r * (2.0 * k.F8W + F3 * t_r) / (k.F19W + F_r)
    F17 = t_r - (k.xintav - x_r) / c
    F16 = F3 * F17
    u_b = k.F8W + F16
    if np.any(np.abs(u_b) >= 1.0):
        raise DomainError("bounce event leaves the Hsu domain")
    F18 = np.sqrt((1.0 + u_b) * (1.0 - u_b))
    lead = (1.0 + k.F8W) / k.F19W
    # sqrt((1+u)/(1-u)) - sqrt((1+F1)/(1-F1)) written through artanh differences
    rise = lead * np.expm1(np.arctanh(F16 / (1.0 - u_b * k.F8W)))
    return (k.F9W / (c * a0)) * rise - (1.0 + u_b) / F18 * k.xintav / c


def _lorentz_retarded(k: LorentzConstants, tp):
    c = k.motion.c
    F10L = k.F10L(tp)
    # F2L and F5L enter with the sign of the forward map
    return -k.F2L + k.F6L * F10L / k.F4L - (k.F3L - k.F5L * F10L / k.F4L) / c


def _galilean_retarded(m: MotionParams, tp):
    c, v0, a0 = m.c, m.v0, m.alpha0
    x = intercept_range(TransformKind.GALILEAN, m)
    s = tp - (x - v0 * tp - 0.5 * a0 * tp**2) / c
    return s - (x - v0 * s - 0.5 * a0 * s**2) / c


def closed_retarded_time(kind: TransformKind, m: MotionParams, t_prime):
    tp = np.asarray(t_prime, dtype=float)
    if kind is TransformKind.HSU:
        tau = _hsu_retarded(hsu_constants(m), tp)
    elif kind is TransformKind.LORENTZ:
        tau = _lorentz_retarded(lorentz_constants(m), tp)
    elif kind is TransformKind.GALILEAN:
        tau = _galilean_retarded(m, tp)
    elif kind is TransformKind.REFERENCE:
        # outbound and return legs separately, rounding like the pipeline
        tau = (tp - m.x0 / m.c) - m.x0 / m.c
    else:
        tau = np.asarray(classical_retarded_time(tp, m))
    return float(tau) if np.ndim(tau) == 0 else tau


def _waveform_at(spec: WaveformSpec, tau):
    """Received waveform at retarded time tau, shared by every closed form."""
    tau = np.asarray(tau, dtype=float)
    on = (tau >= 0.0) & (tau < spec.pw)
    fam = spec.family
    if fam is WaveformFamily.SINE:
        return np.where(on, np.exp(2j * math.pi * spec.fc * tau), 0.0)
    if fam is WaveformFamily.CHIRP:
        return np.where(on, np.exp(-2j * math.pi * (spec.fc * tau + spec.slope * tau**2)), 0.0)
    if fam is WaveformFamily.HYPERBOLIC:
        base = 1.0 + spec.b * spec.fc * tau
        if np.any(on & (base <= 0.0)):
            raise BranchError("1 + b fc tau <= 0 inside the echo")
        # (1 + b fc tau)^(-2 i pi / b) on the real-log branch
        base = np.where(on, base, 1.0)
        return np.where(on, np.exp((-2j * math.pi / spec.b) * np.log(base)), 0.0)
    codes = np.asarray(spec.codes)
    idx = np.floor(tau / spec.dtseg).astype(np.int64)
    on &= (idx >= 0) & (idx < codes.size)
    amp = np.where(on, codes[np.clip(idx, 0, codes.size - 1)], 0.0)
    return amp * np.exp(-2j * math.pi * spec.fc * tau)


def received_closed(kind: TransformKind, spec: WaveformSpec, m: MotionParams, t_prime):
    """Received sample(s) at radar time(s) `t_prime` via the closed forms."""
    out = _waveform_at(spec, closed_retarded_time(kind, m, t_prime))
    return complex(out) if np.ndim(out) == 0 else out


# -- as printed --------------------------------------------------------------


def printed_retarded_time(kind: TransformKind, m: MotionParams, t_prime, hsu_variant: str = "printed"):
    """Retarded-time brackets of the pulsed-sinewave expressions, verbatim.

    Bare alpha is read as alpha0 and every xint-like symbol as the intercept
    range of the transform.  Results may be NaN where a printed square root
    has a negative argument.
    """
    tp = np.asarray(t_prime, dtype=float)
    c, v0, a0 = m.c, m.v0, m.alpha0
    if kind is TransformKind.HSU:
        k = hsu_constants(m)
        w = hsu_time_terms(k, tp, hsu_variant)
        with np.errstate(invalid="ignore"):
            bracket = c**2 / a0 - c**2 * k.F19W * w.F18W / a0 - v0**2 / a0 - w.F18W * k.xintav
            return w.F17W - bracket / c
    if kind is TransformKind.LORENTZ:
        k = lorentz_constants(m)
        F10L = k.F10L(tp)
        return k.F2L + k.F6L * F10L / k.F4L - (k.F3L + k.F5L * F10L / k.F4L) / c
    if kind is TransformKind.GALILEAN:
        x = intercept_range(TransformKind.GALILEAN, m)
        s = tp - (a0 * tp**2 + 2 * tp * v0 + x) / c
        return (c * tp - a0 * tp**2 - 2 * tp * v0 - x - v0 * s + 0.5 * a0 * s**2 + x) / c
    if kind is TransformKind.REFERENCE:
        return tp - 2.0 * m.x0 / c
    raise ValueError("no printed bracket for the classical model")


def received_printed(kind: TransformKind, spec: WaveformSpec, m: MotionParams, t_prime, hsu_variant="printed"):
    tau = printed_retarded_time(kind, m, t_prime, hsu_variant)
    with np.errstate(invalid="ignore"):
        tau = np.asarray(tau, dtype=float)
        bad = ~np.isfinite(tau)
        out = _waveform_at(spec, np.where(bad, -1.0, tau))
        return np.where(bad, np.nan, out)
