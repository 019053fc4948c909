"""Radar echoes from a moving, accelerating point target under several space-time models."""

from .analysis import (
    PeakMetrics,
    SignalTrace,
    Spectrum,
    interpolated_peak,
    matched_filter,
    peak_frequency,
    peak_metrics,
    sample_received,
    spectrum,
)
from .closed_form import (
    HsuConstants,
    HsuTimeTerms,
    LorentzConstants,
    closed_retarded_time,
    hsu_constants,
    hsu_time_terms,
    lorentz_constants,
    received_closed,
)
from .config import ConfigError, ScenarioConfig, parse_config
from .errors import BranchError, DegenerateError, DomainError, NoInterceptError
from .pipeline import PipelineScenario, intercept_range, pipeline_retarded_time, received_pipeline
from .transforms import (
    SPEED_OF_LIGHT,
    MotionParams,
    SpacetimeEvent,
    TransformKind,
    classical_retarded_time,
    forward_map,
    galilean_forward,
    galilean_inverse,
    hsu_domain,
    hsu_forward,
    hsu_inverse,
    inverse_map,
    lorentz_forward,
    lorentz_inverse,
    reference_transform,
)
from .waveforms import WaveformFamily, WaveformSpec, barker13, eval_reference, gaussian_codes
from .verify import run_verify

__version__ = "0.1.0"
