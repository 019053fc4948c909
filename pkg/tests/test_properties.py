import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from radar_distortion.analysis import SignalTrace, matched_filter, spectrum
from radar_distortion.closed_form import received_closed
from radar_distortion.pipeline import PipelineScenario, received_pipeline
from radar_distortion.transforms import (
    MotionParams,
    SpacetimeEvent,
    TransformKind,
    galilean_forward,
    galilean_inverse,
    hsu_forward,
    hsu_inverse,
    lorentz_forward,
    lorentz_inverse,
)
from radar_distortion.waveforms import WaveformSpec

velocity = st.floats(-1e6, 1e6)
accel = st.floats(1e-3, 1e9)
times = st.floats(0.0, 0.1)
ranges = st.floats(-1e6, 1e6)


@settings(max_examples=200, deadline=None)
@given(velocity, accel, times, ranges)
def test_hsu_round_trip(v0, a0, t, x):
    m = MotionParams(v0=v0, alpha0=a0)
    e = SpacetimeEvent(t, x)
    back = hsu_inverse(hsu_forward(e, m), m)
    scale = abs(x) + m.c * t + 1.0
    assert abs(back.x - x) <= 1e-9 * scale
    assert abs(back.t - t) <= 1e-9 * (t + scale / m.c)


@settings(max_examples=200, deadline=None)
@given(velocity, accel, times, ranges)
def test_lorentz_galilean_round_trip(v0, a0, t, x):
    m = MotionParams(v0=v0, alpha0=a0)
    for fwd, inv in ((lorentz_forward, lorentz_inverse), (galilean_forward, galilean_inverse)):
        back = inv(fwd(SpacetimeEvent(t, x), m), m)
        scale = abs(x) + m.c * t + 1.0
        assert abs(back.x - x) <= 1e-9 * scale
        assert abs(back.t - t) <= 1e-9 * (t + scale / m.c)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.0, 5e4), st.floats(1e3, 1e9), st.integers(0, 2**31))
def test_closed_form_tracks_pipeline(v0, a0, seed):
    m = MotionParams(v0=v0, alpha0=a0)
    rng = np.random.default_rng(seed)
    t = 2 * m.x0 / m.c + rng.uniform(-1e-6, 1.1e-4, 64)
    for kind in (TransformKind.HSU, TransformKind.LORENTZ, TransformKind.GALILEAN):
        spec = WaveformSpec.chirp()
        s = PipelineScenario(kind, spec, m)
        a, b = received_closed(kind, spec, m, t), received_pipeline(s, t)
        # points on opposite sides of a gate edge are the only permitted mismatch
        close = np.abs(a - b) <= 1e-6
        assert np.count_nonzero(~close) <= 1


@settings(max_examples=50, deadline=None)
@given(st.lists(st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False), min_size=2, max_size=300))
def test_parseval_and_mf_bound(values):
    x = np.array(values)
    tr = SignalTrace(0.0, 1.0, x)
    s = spectrum(tr)
    energy = np.sum(np.abs(x) ** 2)
    assert np.isclose(np.sum(s.magnitude**2) / s.magnitude.size, energy, rtol=1e-9, atol=1e-9)
    if energy > 1e-3:
        # Cauchy-Schwarz: normalized autocorrelation never exceeds 1
        assert np.max(matched_filter(tr, tr).magnitude) <= 1 + 1e-9
