"""Sampling, spectra, matched filtering and distortion metrics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.fft import next_fast_len
from scipy.optimize import minimize_scalar
from scipy.signal import correlate

# below this many samples direct correlation is cheaper than FFT
DIRECT_CORRELATION_MAX = 4096


@dataclass(frozen=True)
class SignalTrace:
    """Uniformly sampled complex signal; sample k sits at t_start + k dt."""

    t_start: float
    dt: float
    samples: np.ndarray

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        samples = np.asarray(self.samples, dtype=complex)
        if samples.ndim != 1 or samples.size < 1:
            raise ValueError("samples must be a nonempty 1-D sequence")
        object.__setattr__(self, "samples", samples)

    def __len__(self):
        return self.samples.size

    @property
    def times(self) -> np.ndarray:
        return self.t_start + np.arange(self.samples.size) * self.dt

    @property
    def magnitude(self) -> np.ndarray:
        return np.abs(self.samples)

    def window(self, lo: float, hi: float) -> "SignalTrace":
        """Samples with lo <= time <= hi (at least one sample is kept)."""
        t = self.times
        keep = np.flatnonzero((t >= lo) & (t <= hi))
        if keep.size == 0:
            keep = np.array([int(np.argmin(np.abs(t - 0.5 * (lo + hi))))])
        return SignalTrace(float(t[keep[0]]), self.dt, self.samples[keep[0] : keep[-1] + 1])


@dataclass(frozen=True)
class PeakMetrics:
    peak_index: int
    peak_time: float
    peak_magnitude: float
    width_3db: float
    pslr: float


@dataclass(frozen=True)
class Spectrum:
    """DFT magnitudes on an ascending frequency axis with spacing df."""

    frequency: np.ndarray
    magnitude: np.ndarray
    df: float


def sample_received(evaluator, t_start: float, dt: float, n: int) -> SignalTrace:
    """Evaluate ``evaluator`` (vectorized over radar time) on t_start + k dt, k < n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not dt > 0:
        raise ValueError("dt must be positive")
    t = t_start + np.arange(n) * dt
    return SignalTrace(t_start, dt, np.asarray(evaluator(t), dtype=complex))


def padded_length(n: int) -> int:
    """DFT length used for spectra: four times the next power of two."""
    return 4 * (1 << max(0, math.ceil(math.log2(n))))


def spectrum(trace: SignalTrace, center: float = 0.0) -> Spectrum:
    """Magnitude spectrum of the zero-padded trace.

    The samples are complex (analytic), so frequencies are only known modulo
    the sample rate.  Each bin is placed in [center - fs/2, center + fs/2),
    which lets the band around a carrier above fs/2 be read directly.
    """
    n = len(trace)
    if n < 2:
        raise ValueError("spectrum needs at least two samples")
    N = padded_length(n)
    fs = 1.0 / trace.dt
    df = fs / N
    X = np.abs(np.fft.fft(trace.samples, N))
    k0 = math.ceil((center - 0.5 * fs) / df)
    k = k0 + np.arange(N)
    return Spectrum(k * df, X[k % N], df)


def dtft_magnitude(trace: SignalTrace, f: float) -> float:
    """|sum_k x_k exp(-i 2 pi f k dt)| at one frequency."""
    k = np.arange(len(trace))
    return float(np.abs(np.dot(trace.samples, np.exp(-2j * math.pi * f * trace.dt * k))))


def peak_frequency(trace: SignalTrace, center: float = 0.0) -> float:
    """Frequency of the spectral maximum, refined between DFT bins.

    The padded-DFT maximum is polished by a bounded 1-D search of the
    continuous DTFT magnitude within one bin on either side.
    """
    s = spectrum(trace, center)
    k = int(np.argmax(s.magnitude))
    f0 = float(s.frequency[k])
    res = minimize_scalar(
        lambda f: -dtft_magnitude(trace, f),
        bounds=(f0 - s.df, f0 + s.df),
        method="bounded",
        options={"xatol": 1e-6 * s.df},
    )
    return float(res.x) if -res.fun >= s.magnitude[k] else f0


def _common_length(a: np.ndarray, b: np.ndarray):
    n = max(a.size, b.size)
    return np.pad(a, (0, n - a.size)), np.pad(b, (0, n - b.size))


def matched_filter(received: SignalTrace, reference: SignalTrace) -> SignalTrace:
    """Cross-correlation of `received` with the conjugated `reference`.

    Shorter inputs are zero-padded to a common length.  The lag axis is in
    seconds and is the shift of `received` relative to `reference`, so a
    pure delay d shows up as a peak at lag d.  Values are scaled so that the
    reference autocorrelation peak is 1.
    """
    if not math.isclose(received.dt, reference.dt, rel_tol=1e-12):
        raise ValueError(f"sample intervals differ: {received.dt!r} vs {reference.dt!r}")
    energy = float(np.sum(np.abs(reference.samples) ** 2))
    if energy == 0.0:
        raise ValueError("reference trace is all zeros")
    x, r = _common_length(received.samples, reference.samples)
    method = "fft" if x.size > DIRECT_CORRELATION_MAX else "direct"
    cc = correlate(x, r, mode="full", method=method) / energy
    lag0 = -(x.size - 1) * reference.dt + (received.t_start - reference.t_start)
    return SignalTrace(lag0, reference.dt, cc)


def width_3db(magnitude: np.ndarray, step: float, peak: int | None = None) -> float:
    """Full width where the lobe around `peak` stays above peak / sqrt(2).

    Crossings are located by linear interpolation; the result is at least
    one step.
    """
    mag = np.asarray(magnitude, dtype=float)
    k = int(np.argmax(mag)) if peak is None else peak
    level = mag[k] / math.sqrt(2.0)
    if mag[k] == 0.0:
        return step
    below = np.flatnonzero(mag[:k] < level)
    if below.size:
        i = below[-1]
        left = i + (level - mag[i]) / (mag[i + 1] - mag[i])
    else:
        left = 0.0
    above = np.flatnonzero(mag[k + 1 :] < level)
    if above.size:
        j = k + 1 + above[0]
        right = j - (level - mag[j]) / (mag[j - 1] - mag[j])
    else:
        right = float(mag.size - 1)
    return float(max(step, (right - left) * step))


def _main_lobe(mag: np.ndarray, k: int, half_width: int):
    """Index range [lo, hi] of the main lobe: out to the first minimum each side."""
    lo = k
    while lo > 0 and mag[lo - 1] <= mag[lo]:
        lo -= 1
    hi = k
    while hi < mag.size - 1 and mag[hi + 1] <= mag[hi]:
        hi += 1
    return min(lo, k - half_width), max(hi, k + half_width)


def peak_metrics(trace: SignalTrace) -> PeakMetrics:
    """Peak, -3 dB width and peak-to-max-sidelobe ratio of |trace|.

    The main lobe excluded from the sidelobe search reaches out to the first
    local minimum on each side and at least one -3 dB width from the peak.
    PSLR is inf when nothing is left outside the main lobe or every sidelobe
    is zero.
    """
    mag = trace.magnitude
    k = int(np.argmax(mag))
    peak = float(mag[k])
    width = width_3db(mag, trace.dt, k)
    lo, hi = _main_lobe(mag, k, int(math.ceil(width / trace.dt)))
    side = np.concatenate((mag[: max(lo, 0)], mag[hi + 1 :]))
    side_max = float(side.max()) if side.size else 0.0
    if peak == 0.0:
        pslr = 0.0
    elif side_max == 0.0:
        pslr = math.inf
    else:
        pslr = 20.0 * math.log10(peak / side_max)
    return PeakMetrics(k, trace.t_start + k * trace.dt, peak, width, pslr)


def interpolated_peak(received: SignalTrace, reference: SignalTrace) -> tuple[float, float]:
    """Matched-filter peak between samples: (normalized magnitude, lag in s).

    The sampled correlation can straddle a narrow peak and under-read it.
    Here the cross-spectrum is rotated so that its occupied band is
    contiguous around its centroid, and the band-limited correlation is
    maximized over a continuous lag within one sample of the sampled peak.
    """
    if not math.isclose(received.dt, reference.dt, rel_tol=1e-12):
        raise ValueError(f"sample intervals differ: {received.dt!r} vs {reference.dt!r}")
    energy = float(np.sum(np.abs(reference.samples) ** 2))
    if energy == 0.0:
        raise ValueError("reference trace is all zeros")
    x, r = _common_length(received.samples, reference.samples)
    N = next_fast_len(2 * x.size - 1)
    P = np.fft.fft(x, N) * np.conj(np.fft.fft(r, N))
    cc = np.fft.ifft(P)
    k0 = int(np.argmax(np.abs(cc)))
    j = np.arange(N)
    jc = np.angle(np.sum(np.abs(P) * np.exp(2j * math.pi * j / N))) / (2 * math.pi) * N
    f = ((j - jc + N / 2) % N - N / 2 + jc) / N

    def neg_mag(lag):
        return -abs(np.dot(P, np.exp(2j * math.pi * f * lag))) / N

    res = minimize_scalar(neg_mag, bounds=(k0 - 1.0, k0 + 1.0), method="bounded", options={"xatol": 1e-6})
    lag, value = (res.x, -res.fun) if -res.fun >= abs(cc[k0]) else (float(k0), abs(cc[k0]))
    if lag > N / 2:
        lag -= N
    lag_s = lag * reference.dt + (received.t_start - reference.t_start)
    return float(value / energy), float(lag_s)
