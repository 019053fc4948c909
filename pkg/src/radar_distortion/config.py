"""Scenario configuration: ``key = value`` lines with ``#`` comments."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace

from .closed_form import received_closed
from .transforms import SPEED_OF_LIGHT, MotionParams, TransformKind
from .waveforms import (
    BARKER13,
    CARRIER_HZ,
    CHIRP_BANDWIDTH_HZ,
    DEFAULT_GAUSSIAN_SEED,
    HYPERBOLIC_B,
    PULSE_WIDTH_S,
    WaveformSpec,
    chirp_slope,
    gaussian_codes,
)

WAVEFORM_NAMES = ("sine", "chirp", "hyperbolic", "barker", "gaussian")
SAMPLE_INTERVAL_S = 1.32118e-9
N_SAMPLES = 219507


class ConfigError(ValueError):
    """Bad scenario configuration; carries the offending line and/or key."""

    def __init__(self, message: str, line: int | None = None, key: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if key is not None:
            where.append(f"key {key!r}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.key = key


@dataclass(frozen=True)
class ScenarioConfig:
    transform: str = "hsu"
    waveform: str = "sine"
    fc: float = CARRIER_HZ
    pw: float = PULSE_WIDTH_S
    slope: float | None = None
    b: float = HYPERBOLIC_B
    codes: tuple[float, ...] | None = None
    seed: int = DEFAULT_GAUSSIAN_SEED
    v0: float = 15625.0
    alpha0: float = 2.0e8
    x0: float = 6000.18
    c: float = SPEED_OF_LIGHT
    t_start: float = 0.0
    dt: float = SAMPLE_INTERVAL_S
    n_samples: int = N_SAMPLES
    output_path: str | None = None

    def __post_init__(self):
        try:
            TransformKind.parse(self.transform)
        except ValueError as exc:
            raise ConfigError(str(exc), key="transform") from None
        if self.waveform not in WAVEFORM_NAMES:
            raise ConfigError(f"unknown waveform {self.waveform!r} (expected one of: {', '.join(WAVEFORM_NAMES)})", key="waveform")
        for name in ("fc", "pw", "dt"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise ConfigError("must be a positive finite number", key=name)
        if not math.isfinite(self.t_start):
            raise ConfigError("must be finite", key="t_start")
        if self.n_samples < 1:
            raise ConfigError("must be at least 1", key="n_samples")
        if self.slope is not None and not math.isfinite(self.slope):
            raise ConfigError("must be finite", key="slope")
        # surface MotionParams / WaveformSpec invariants against the key that broke them
        try:
            self.motion()
        except ValueError as exc:
            key = next((k for k in ("v0", "alpha0", "x0", "c") if k in str(exc)), None)
            raise ConfigError(str(exc), key=key) from None
        try:
            self.waveform_spec()
        except ValueError as exc:
            raise ConfigError(str(exc), key="waveform") from None

    @property
    def kind(self) -> TransformKind:
        return TransformKind.parse(self.transform)

    def motion(self) -> MotionParams:
        return MotionParams(v0=self.v0, alpha0=self.alpha0, x0=self.x0, c=self.c)

    def waveform_spec(self) -> WaveformSpec:
        name = self.waveform
        if name == "sine":
            return WaveformSpec.sine(self.fc, self.pw)
        if name == "chirp":
            slope = self.slope if self.slope is not None else chirp_slope(CHIRP_BANDWIDTH_HZ, self.pw)
            return WaveformSpec.chirp(self.fc, self.pw, slope)
        if name == "hyperbolic":
            return WaveformSpec.hyperbolic(self.fc, self.pw, self.b)
        if self.codes is not None:
            codes = self.codes
        elif name == "barker":
            codes = BARKER13
        else:
            codes = tuple(gaussian_codes(self.seed))
        return WaveformSpec.coded(codes, self.fc, self.pw)

    def evaluator(self, kind: TransformKind | None = None):
        """Vectorized t' -> received sample for `kind` (default: the configured transform)."""
        kind = self.kind if kind is None else kind
        spec, motion = self.waveform_spec(), self.motion()
        return lambda t_prime: received_closed(kind, spec, motion, t_prime)

    def with_(self, **changes) -> "ScenarioConfig":
        return replace(self, **changes)


_FLOAT_KEYS = {"fc", "pw", "slope", "b", "v0", "alpha0", "x0", "c", "t_start", "dt"}
_INT_KEYS = {"seed", "n_samples"}
_KEYS = {f.name for f in fields(ScenarioConfig)}


def _convert(key: str, raw: str, line: int):
    try:
        if key in _FLOAT_KEYS:
            return float(raw)
        if key in _INT_KEYS:
            value = float(raw)
            if not value.is_integer():
                raise ValueError
            return int(value)
        if key == "codes":
            codes = tuple(float(v) for v in raw.replace(",", " ").split())
            if not codes:
                raise ValueError
            return codes
        if key in ("transform", "waveform"):
            return raw.lower()
        return raw
    except ValueError:
        raise ConfigError(f"cannot parse value {raw!r}", line=line, key=key) from None


def parse_config(text: str) -> ScenarioConfig:
    """Parse scenario text; omitted keys keep their defaults.

    Raises:
        ConfigError: malformed line, unknown or repeated key, or a value that
            violates a physical invariant.
    """
    values: dict[str, object] = {}
    for number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, raw = line.partition("=")
        key, raw = key.strip(), raw.strip()
        if not sep or not key:
            raise ConfigError("expected 'key = value'", line=number)
        if key not in _KEYS:
            raise ConfigError("unknown key", line=number, key=key)
        if key in values:
            raise ConfigError("repeated key", line=number, key=key)
        if not raw:
            raise ConfigError("missing value", line=number, key=key)
        values[key] = _convert(key, raw, number)
    return ScenarioConfig(**values)


def format_config(cfg: ScenarioConfig) -> str:
    """Render `cfg` in the format read by :func:`parse_config`."""
    lines = []
    for f in fields(cfg):
        value = getattr(cfg, f.name)
        if value is None:
            continue
        if f.name == "codes":
            value = ", ".join(repr(v) for v in value)
        elif isinstance(value, float):
            value = repr(value)
        lines.append(f"{f.name} = {value}")
    return "\n".join(lines) + "\n"
