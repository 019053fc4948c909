"""Closed-form versus pipeline equivalence report."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .closed_form import printed_retarded_time, received_closed, received_printed
from .pipeline import PipelineScenario, pipeline_retarded_time, received_pipeline
from .transforms import MotionParams, TransformKind
from .waveforms import WaveformSpec, barker13, gaussian_codes

VERIFY_TOLERANCE = 1e-6
VERIFY_POINTS = 4096
VERIFY_KINDS = (TransformKind.HSU, TransformKind.LORENTZ, TransformKind.GALILEAN, TransformKind.REFERENCE)


def standard_waveforms(seed: int | None = None) -> dict[str, WaveformSpec]:
    """The five reference waveforms at their default parameters."""
    gauss = gaussian_codes() if seed is None else gaussian_codes(seed)
    return {
        "sine": WaveformSpec.sine(),
        "chirp": WaveformSpec.chirp(),
        "hyperbolic": WaveformSpec.hyperbolic(),
        "barker": WaveformSpec.coded(barker13()),
        "gaussian": WaveformSpec.coded(gauss),
    }


def echo_support(s: PipelineScenario) -> tuple[float, float]:
    """Radar-time interval whose retarded time lies in [0, pw)."""
    # the retarded time is monotone and within a few percent of t' - 2 c4 / cp
    delay = 2.0 * s.c4 / s.cp
    slack = 0.05 * (abs(delay) + s.spec.pw)

    def root(level):
        f = lambda t: pipeline_retarded_time(s, t) - level
        return brentq(f, delay + level - slack, delay + level + slack, xtol=1e-20)

    return root(0.0), root(s.spec.pw)


def support_points(s: PipelineScenario, n: int = VERIFY_POINTS, seed: int = 0) -> np.ndarray:
    """`n` sorted random radar times strictly inside the echo support."""
    lo, hi = echo_support(s)
    # keep well away from the gate edges, where a last-bit difference flips the gate
    margin = 1e-9 * (hi - lo)
    rng = np.random.default_rng(seed)
    return np.sort(rng.uniform(lo + margin, hi - margin, n))


@dataclass(frozen=True)
class VerifyRow:
    transform: str
    waveform: str
    max_deviation: float
    passed: bool


@dataclass(frozen=True)
class PrintedRow:
    transform: str
    variant: str
    max_deviation: float  # nan when the printed expression is not real on the support
    tau_deviation: float  # retarded-time deviation, s
    matches: bool


@dataclass(frozen=True)
class VerifyReport:
    rows: tuple[VerifyRow, ...]
    printed: tuple[PrintedRow, ...]
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def hsu_variant(self) -> str:
        """Which printed Hsu variant (F13W- or F14W-based) reproduces the pipeline, if any."""
        ok = [r.variant for r in self.printed if r.transform == "hsu" and r.matches]
        return ok[0] if ok else "none"

    def format(self) -> str:
        out = [f"oracle equivalence at {self.tolerance:g} absolute, {VERIFY_POINTS} in-support points"]
        for r in self.rows:
            out.append(f"{r.transform:<10} {r.waveform:<11} max_dev = {r.max_deviation:.3e}  {'PASS' if r.passed else 'FAIL'}")
        out.append("")
        out.append("as-printed retarded-time brackets (sine), documented deviations")
        for r in self.printed:
            if math.isnan(r.max_deviation):
                dev = "not real"
            else:
                dev = f"{r.max_deviation:.3e}  tau_dev = {r.tau_deviation:.3e} s"
            out.append(f"{r.transform:<10} {r.variant:<11} max_dev = {dev}  {'matches' if r.matches else 'deviates'}")
        out.append(f"hsu printed variant matching the pipeline: {self.hsu_variant}")
        out.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(out) + "\n"


def _max_dev(a, b) -> float:
    d = np.abs(np.asarray(a) - np.asarray(b))
    return float(np.max(d)) if not np.any(np.isnan(d)) else math.nan


def run_verify(
    motion: MotionParams | None = None,
    waveforms: dict[str, WaveformSpec] | None = None,
    kinds=VERIFY_KINDS,
    n: int = VERIFY_POINTS,
    tolerance: float = VERIFY_TOLERANCE,
) -> VerifyReport:
    motion = MotionParams() if motion is None else motion
    waveforms = standard_waveforms() if waveforms is None else waveforms
    rows, printed = [], []
    for kind in kinds:
        if not kind.has_spatial_map:
            raise ValueError("the classical model is checked by direct substitution, not by verify")
        for name, spec in waveforms.items():
            s = PipelineScenario(kind, spec, motion)
            t = support_points(s, n)
            dev = _max_dev(received_closed(kind, spec, motion, t), received_pipeline(s, t))
            rows.append(VerifyRow(kind.value, name, dev, bool(dev <= tolerance)))
        sine = WaveformSpec.sine()
        s = PipelineScenario(kind, sine, motion)
        t = support_points(s, n)
        truth = received_pipeline(s, t)
        tau_truth = pipeline_retarded_time(s, t)
        variants = ("printed", "f13w") if kind is TransformKind.HSU else ("printed",)
        for variant in variants:
            with np.errstate(invalid="ignore"):
                dev = _max_dev(received_printed(kind, sine, motion, t, variant), truth)
                tau_dev = _max_dev(printed_retarded_time(kind, motion, t, variant), tau_truth)
            printed.append(PrintedRow(kind.value, variant, dev, tau_dev, bool(dev <= tolerance)))
    return VerifyReport(tuple(rows), tuple(printed), tolerance)
