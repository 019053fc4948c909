"""Data series behind the five comparison figures.

Every figure shows the Reference echo and each motion model at zero
acceleration and at the configured acceleration.  Figure 1 (pulsed sine)
is a magnitude spectrum around the carrier.  Figures 2-5 (chirp,
hyperbolic, Barker, Gaussian) are matched-filter magnitudes against the
Reference echo.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .analysis import SignalTrace, matched_filter, sample_received, spectrum
from .config import ScenarioConfig
from .csvio import write_columns
from .transforms import TransformKind

FIGURE_WAVEFORMS = {1: "sine", 2: "chirp", 3: "hyperbolic", 4: "barker", 5: "gaussian"}
MOTION_KINDS = (TransformKind.HSU, TransformKind.LORENTZ, TransformKind.GALILEAN, TransformKind.CLASSICAL)

# The Hsu map is singular at alpha0 = 0; its zero-acceleration curve uses this
# tiny acceleration instead (m/s^2), which is indistinguishable from Lorentz.
ZERO_ACCEL_SURROGATE = 1e-3

SPECTRUM_HALF_SPAN_HZ = 2.0e5


@dataclass(frozen=True)
class FigureData:
    figure_id: int
    axis_name: str
    axis: np.ndarray
    series: dict[str, np.ndarray]

    def write_csv(self, stream) -> None:
        names = list(self.series)
        write_columns(stream, [self.axis_name] + names, [self.axis] + [self.series[k] for k in names])


def effective_alpha0(kind: TransformKind, alpha0: float) -> float:
    if kind is TransformKind.HSU and alpha0 == 0.0:
        return ZERO_ACCEL_SURROGATE
    return alpha0


def simulate(cfg: ScenarioConfig, kind: TransformKind | None = None) -> SignalTrace:
    """Received trace for `cfg` (optionally overriding the transform)."""
    return sample_received(cfg.evaluator(kind), cfg.t_start, cfg.dt, cfg.n_samples)


def figure_config(cfg: ScenarioConfig, figure_id: int) -> ScenarioConfig:
    if figure_id not in FIGURE_WAVEFORMS:
        raise ValueError(f"figure id must be one of {sorted(FIGURE_WAVEFORMS)}")
    return cfg.with_(waveform=FIGURE_WAVEFORMS[figure_id])


def figure_traces(cfg: ScenarioConfig, figure_id: int) -> dict[str, SignalTrace]:
    """Received traces keyed 'reference' and '<kind>_a0_<zero|accel>'."""
    cfg = figure_config(cfg, figure_id)
    traces = {"reference": simulate(cfg, TransformKind.REFERENCE)}
    for kind in MOTION_KINDS:
        for tag, a0 in (("zero", 0.0), ("accel", cfg.alpha0)):
            run = cfg.with_(alpha0=effective_alpha0(kind, a0))
            traces[f"{kind.value}_a0_{tag}"] = simulate(run, kind)
    return traces


def figure_data(cfg: ScenarioConfig, figure_id: int) -> FigureData:
    traces = figure_traces(cfg, figure_id)
    if figure_id == 1:
        fc = cfg.fc
        spectra = {k: spectrum(tr, center=fc) for k, tr in traces.items()}
        f = next(iter(spectra.values())).frequency
        keep = np.abs(f - fc) <= SPECTRUM_HALF_SPAN_HZ
        return FigureData(1, "frequency_hz", f[keep], {k: s.magnitude[keep] for k, s in spectra.items()})
    ref = traces["reference"]
    filtered = {k: matched_filter(tr, ref) for k, tr in traces.items()}
    lags = next(iter(filtered.values())).times
    keep = np.abs(lags) <= cfg.pw
    return FigureData(figure_id, "lag_s", lags[keep], {k: mf.magnitude[keep] for k, mf in filtered.items()})
