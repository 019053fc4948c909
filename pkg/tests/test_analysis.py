import math

import numpy as np
import pytest

from radar_distortion.analysis import (
    SignalTrace,
    interpolated_peak,
    matched_filter,
    padded_length,
    peak_frequency,
    peak_metrics,
    sample_received,
    spectrum,
    width_3db,
)
from radar_distortion.closed_form import received_closed
from radar_distortion.transforms import MotionParams, TransformKind
from radar_distortion.waveforms import WaveformSpec, barker13

DT = 1.32118e-9
M = MotionParams()


def brute_correlation(x, r):
    n = len(x)
    return np.array([sum(x[i + L] * np.conj(r[i]) for i in range(n) if 0 <= i + L < n) for L in range(-(n - 1), n)])


class TestTrace:
    def test_validation(self):
        with pytest.raises(ValueError):
            SignalTrace(0.0, 0.0, [1])
        with pytest.raises(ValueError):
            SignalTrace(0.0, 1.0, [])

    def test_window(self):
        tr = SignalTrace(0.0, 1.0, np.arange(10))
        w = tr.window(2.0, 4.5)
        assert w.t_start == 2.0 and w.samples.tolist() == [2, 3, 4]
        assert len(tr.window(20.0, 30.0)) == 1


class TestSampling:
    def test_single_sample(self):
        tr = sample_received(lambda t: np.exp(1j * t), 0.5, 1.0, 1)
        assert len(tr) == 1 and tr.samples[0] == np.exp(0.5j)

    def test_grid(self):
        tr = sample_received(lambda t: t + 0j, 1.0, 0.25, 5)
        np.testing.assert_array_equal(tr.samples.real, [1.0, 1.25, 1.5, 1.75, 2.0])
        with pytest.raises(ValueError):
            sample_received(lambda t: t, 0.0, 1.0, 0)

    def test_reference_sine_support(self):
        spec = WaveformSpec.sine()
        tr = sample_received(lambda t: received_closed(TransformKind.REFERENCE, spec, M, t), 0.0, DT, 219507)
        assert abs(np.count_nonzero(tr.samples) - round(1e-4 / DT)) <= 1

    def test_default_sample_count(self):
        assert 219507 * DT == pytest.approx(2.9e-4, rel=1e-4)


class TestSpectrum:
    def test_impulse_is_flat(self):
        x = np.zeros(64, complex)
        x[0] = 1
        np.testing.assert_allclose(spectrum(SignalTrace(0, 1.0, x)).magnitude, 1.0)

    def test_tone_on_bin(self):
        # zero padding interpolates; the unpadded bins (every 4th) hold a single nonzero value
        n = 256
        x = np.exp(2j * math.pi * 12 * np.arange(n) / n)
        s = spectrum(SignalTrace(0, 1.0, x))
        on_grid = s.magnitude[np.isclose((s.frequency * n) % 1, 0) | np.isclose((s.frequency * n) % 1, 1)]
        assert on_grid.size == n
        assert np.count_nonzero(on_grid > 1e-9 * n) == 1
        assert s.frequency[np.argmax(s.magnitude)] == pytest.approx(12 / n)
        assert s.magnitude.max() == pytest.approx(n)

    def test_parseval(self):
        rng = np.random.default_rng(0)
        x = rng.normal(size=1000) + 1j * rng.normal(size=1000)
        s = spectrum(SignalTrace(0, 1.0, x))
        N = padded_length(1000)
        assert np.sum(np.abs(x) ** 2) == pytest.approx(np.sum(s.magnitude**2) / N, rel=1e-9)

    def test_frequency_axis(self):
        tr = SignalTrace(0, 2.0, np.ones(10))
        s = spectrum(tr, center=10.0)
        assert s.df == pytest.approx(1 / (padded_length(10) * 2.0))
        assert s.frequency[0] >= 10.0 - 0.25 and s.frequency[-1] < 10.0 + 0.25
        assert np.all(np.diff(s.frequency) > 0)
        with pytest.raises(ValueError):
            spectrum(SignalTrace(0, 1.0, [1.0]))

    def test_peak_frequency_between_bins(self):
        f = 0.1234567
        x = np.exp(2j * math.pi * f * np.arange(500))
        assert peak_frequency(SignalTrace(0, 1.0, x)) == pytest.approx(f, abs=1e-7)


class TestMatchedFilter:
    def test_self_correlation(self):
        rng = np.random.default_rng(1)
        x = SignalTrace(0.0, 1e-9, rng.normal(size=300) + 1j * rng.normal(size=300))
        mf = matched_filter(x, x)
        m = peak_metrics(mf)
        assert m.peak_magnitude == pytest.approx(1.0, rel=1e-12)
        assert m.peak_time == pytest.approx(0.0, abs=1e-18)
        assert len(mf) == 599

    def test_matches_brute_force(self):
        rng = np.random.default_rng(2)
        x = rng.normal(size=40) + 1j * rng.normal(size=40)
        r = rng.normal(size=40) + 1j * rng.normal(size=40)
        mf = matched_filter(SignalTrace(0, 1.0, x), SignalTrace(0, 1.0, r))
        np.testing.assert_allclose(mf.samples, brute_correlation(x, r) / np.sum(np.abs(r) ** 2), atol=1e-12)

    def test_fft_and_direct_agree(self):
        from scipy.signal import correlate

        rng = np.random.default_rng(3)
        x = rng.normal(size=5000) + 1j * rng.normal(size=5000)
        r = rng.normal(size=5000) + 1j * rng.normal(size=5000)
        a = correlate(x, r, method="fft")
        b = correlate(x, r, method="direct")
        assert np.max(np.abs(a - b)) <= 1e-9 * np.max(np.abs(b))

    def test_pure_delay(self):
        r = np.zeros(200, complex)
        r[10:30] = np.exp(1j * np.arange(20))
        x = np.roll(r, 17)
        m = peak_metrics(matched_filter(SignalTrace(0, 2e-9, x), SignalTrace(0, 2e-9, r)))
        assert m.peak_time == pytest.approx(17 * 2e-9)

    def test_start_offsets_and_padding(self):
        r = SignalTrace(1e-6, 1e-9, [1, 2, 3])
        x = SignalTrace(1e-6 + 5e-9, 1e-9, [1, 2, 3, 0, 0])
        m = peak_metrics(matched_filter(x, r))
        assert m.peak_time == pytest.approx(5e-9)

    def test_dt_mismatch(self):
        with pytest.raises(ValueError, match="sample intervals"):
            matched_filter(SignalTrace(0, 1.0, [1]), SignalTrace(0, 2.0, [1]))
        with pytest.raises(ValueError):
            matched_filter(SignalTrace(0, 1.0, [1]), SignalTrace(0, 1.0, [0]))

    def test_barker_pslr(self):
        b = SignalTrace(0, 1.0, barker13())
        m = peak_metrics(matched_filter(b, b))
        assert m.pslr == pytest.approx(20 * math.log10(13), abs=1e-9)
        assert m.pslr == pytest.approx(22.3, abs=0.05)

    def test_barker_pslr_oversampled(self):
        b = SignalTrace(0, 1.0, np.repeat(barker13(), 8))
        assert peak_metrics(matched_filter(b, b)).pslr == pytest.approx(22.28, abs=0.05)


class TestPeakMetrics:
    def test_single_sample(self):
        m = peak_metrics(SignalTrace(0, 3e-9, [0, 0, 2, 0]))
        assert m.peak_index == 2 and m.width_3db == 3e-9 and m.pslr == math.inf

    def test_triangle(self):
        tri = np.concatenate((np.arange(1, 11), np.arange(9, 0, -1))).astype(float)
        m = peak_metrics(SignalTrace(0, 1.0, tri))
        assert m.peak_index == 9 and m.peak_magnitude == 10.0
        # crossings at 10 / sqrt 2 on both linear flanks
        assert m.width_3db == pytest.approx(2 * (10 - 10 / math.sqrt(2)), rel=1e-12)

    def test_width_floor(self):
        assert width_3db(np.array([0.0, 0.0]), 1.0) == 1.0

    def test_chirp_compression_width(self):
        spec = WaveformSpec.chirp()
        tr = sample_received(lambda t: received_closed(TransformKind.REFERENCE, spec, M, t), 0.0, DT, 219507)
        m = peak_metrics(matched_filter(tr, tr))
        assert 0.5 / 1.5e8 < m.width_3db < 2 / 1.5e8


class TestInterpolatedPeak:
    def test_self_is_one(self):
        rng = np.random.default_rng(4)
        x = SignalTrace(0, 1.0, rng.normal(size=100) + 1j * rng.normal(size=100))
        value, lag = interpolated_peak(x, x)
        assert value == pytest.approx(1.0, rel=1e-9) and lag == pytest.approx(0.0, abs=1e-6)

    def test_subsample_delay(self):
        # band-limited pulse delayed by 0.4 sample: sampled peak under-reads, interpolation recovers it
        n = 512
        f = np.fft.fftfreq(n)
        band = np.where(np.abs(f) < 0.35, 1.0, 0.0)
        r = np.fft.ifft(band)
        x = np.fft.ifft(band * np.exp(-2j * math.pi * f * 0.4))
        value, lag = interpolated_peak(SignalTrace(0, 1.0, np.roll(x, 200)), SignalTrace(0, 1.0, np.roll(r, 200)))
        sampled = peak_metrics(matched_filter(SignalTrace(0, 1.0, np.roll(x, 200)), SignalTrace(0, 1.0, np.roll(r, 200))))
        assert lag == pytest.approx(0.4, abs=1e-3)
        assert value > sampled.peak_magnitude
        assert value == pytest.approx(1.0, abs=2e-3)

    def test_carrier_band(self):
        # a tone-like band far from 0 frequency, delayed by a fraction of a sample
        t = np.arange(2000)
        g = lambda s: np.exp(-(((s - 900) / 60.0) ** 2)) * np.exp(2j * math.pi * 0.45 * s)
        value, lag = interpolated_peak(SignalTrace(0, 1.0, g(t - 0.5)), SignalTrace(0, 1.0, g(t)))
        assert lag == pytest.approx(0.5, abs=1e-3)
        assert value == pytest.approx(1.0, abs=1e-4)
