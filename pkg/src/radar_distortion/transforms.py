"""Space-time maps between the radar frame F' and the target frame F.

All maps work in clock time (seconds) and metres; the evolution variable
w = c t never appears in the public interface.  Every function accepts
scalars or numpy arrays for the event coordinates and broadcasts.

Conventions
-----------
``forward`` maps an event (t, x) in F to (t', x') in F'.
``inverse`` maps (t', x') back to (t, x).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DegenerateError, DomainError

SPEED_OF_LIGHT = 3.0e8


class TransformKind(enum.Enum):
    HSU = "hsu"
    LORENTZ = "lorentz"
    GALILEAN = "galilean"
    REFERENCE = "reference"
    CLASSICAL = "classical"

    @classmethod
    def parse(cls, name: str) -> "TransformKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            choices = ", ".join(k.value for k in cls)
            raise ValueError(f"unknown transform {name!r} (expected one of: {choices})") from None

    @property
    def has_spatial_map(self) -> bool:
        return self is not TransformKind.CLASSICAL


@dataclass(frozen=True)
class MotionParams:
    """Target kinematics and propagation speed.

    Attributes:
        v0: initial velocity, m/s.
        alpha0: constant acceleration, m/s^2.
        x0: initial range to the target, m.
        c: propagation speed, m/s.
    """

    v0: float = 15625.0
    alpha0: float = 2.0e8
    x0: float = 6000.18
    c: float = SPEED_OF_LIGHT

    def __post_init__(self):
        for name in ("v0", "alpha0", "x0", "c"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.c <= 0:
            raise ValueError("c must be positive")
        if abs(self.v0) >= self.c:
            raise ValueError(f"|v0| must be below c (got v0={self.v0!r}, c={self.c!r})")

    @property
    def F1(self) -> float:
        return self.v0 / self.c

    @property
    def F2(self) -> float:
        return math.sqrt((1.0 - self.F1) * (1.0 + self.F1))

    @property
    def F3(self) -> float:
        return self.alpha0 / self.c

    def with_(self, **changes) -> "MotionParams":
        fields = {"v0": self.v0, "alpha0": self.alpha0, "x0": self.x0, "c": self.c}
        fields.update(changes)
        return MotionParams(**fields)


@dataclass(frozen=True)
class SpacetimeEvent:
    """A (t, x) coordinate pair; which frame it lives in is up to the caller."""

    t: float | np.ndarray
    x: float | np.ndarray


def _as_float(value):
    if np.ndim(value) == 0:
        return float(value)
    return value


def _event(t, x) -> SpacetimeEvent:
    return SpacetimeEvent(_as_float(t), _as_float(x))


# -- Hsu ---------------------------------------------------------------------
#
# The textbook form of the Hsu map subtracts terms of size c^2/alpha0 that
# nearly cancel.  With theta0 = asin(F1) and theta = asin(F1 + F3 t) it is
# rewritten exactly as
#
#   x' = (x - c F2 t tan((theta + theta0)/2)) / F
#   t' = (F2 t cos((theta - theta0)/2) / cos((theta + theta0)/2) - u x / c) / F
#
# where u = F1 + F3 t and F = cos(theta).  theta - theta0 is taken from atan2
# of its sine and cosine, both of which are formed without cancellation.


def hsu_domain(e: SpacetimeEvent, m: MotionParams) -> bool | np.ndarray:
    """True where |F1 + F3 t| < 1, i.e. where the Hsu radicand F is real and positive."""
    result = np.abs(m.v0 + m.alpha0 * np.asarray(e.t, dtype=float)) < m.c
    return bool(result) if result.ndim == 0 else result


def _hsu_half_angles(t, m: MotionParams):
    F1, F2, F3 = m.F1, m.F2, m.F3
    t = np.asarray(t, dtype=float)
    u = F1 + F3 * t
    F = np.sqrt((1.0 - u) * (1.0 + u))
    sin_diff = F3 * t * (F2 + F1 * (u + F1) / (F + F2))
    cos_diff = F * F2 + u * F1
    half_diff = 0.5 * np.arctan2(sin_diff, cos_diff)
    half_sum = math.asin(F1) + half_diff
    return u, F, half_diff, half_sum


def _require_hsu(m: MotionParams):
    if m.alpha0 == 0.0:
        raise DegenerateError("Hsu transformation is singular at alpha0 = 0; use the Lorentz transformation")


def hsu_forward(e: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    """Map (t, x) to (t', x') with the Hsu constant-acceleration transformation.

    Raises:
        DegenerateError: alpha0 is zero.
        DomainError: |F1 + F3 t| >= 1 for some t (superluminal regime).
    """
    _require_hsu(m)
    if not np.all(hsu_domain(e, m)):
        raise DomainError("Hsu transform undefined: |F1 + F3 t| >= 1")
    x = np.asarray(e.x, dtype=float)
    t = np.asarray(e.t, dtype=float)
    u, F, half_diff, half_sum = _hsu_half_angles(t, m)
    x_p = (x - m.c * m.F2 * t * np.tan(half_sum)) / F
    t_p = (m.F2 * t * np.cos(half_diff) / np.cos(half_sum) - u * x / m.c) / F
    return _event(t_p, x_p)


def hsu_inverse(e_prime: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    """Map (t', x') back to (t, x); the algebraic inverse of :func:`hsu_forward`.

    Raises:
        DegenerateError: alpha0 is zero.
        DomainError: zero denominator, or the recovered t leaves the Hsu domain.
    """
    _require_hsu(m)
    c, F1, F2, F3 = m.c, m.F1, m.F2, m.F3
    tp = np.asarray(e_prime.t, dtype=float)
    xp = np.asarray(e_prime.x, dtype=float)
    den = F3**2 * xp**2 - c**2 * F2**2
    if np.any(den == 0.0):
        raise DomainError("Hsu inverse undefined: zero denominator")
    t = -(F1 * F3 * xp**2 + c * F3 * tp * xp + c**2 * F2 * tp + c * F1 * F2 * xp) / den
    if not np.all(hsu_domain(SpacetimeEvent(t, 0.0), m)):
        raise DomainError("Hsu inverse undefined: negative radicand")
    _, F, _, half_sum = _hsu_half_angles(t, m)
    x = F * xp + c * F2 * t * np.tan(half_sum)
    return _event(t, x)


# -- Lorentz, Galilean, Reference, Classical ---------------------------------


def lorentz_forward(e: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    """Lorentz boost by v0; the zero-acceleration limit of the Hsu map."""
    F2 = m.F2
    t = np.asarray(e.t, dtype=float)
    x = np.asarray(e.x, dtype=float)
    return _event(t / F2 - m.v0 * x / (m.c**2 * F2), (x - m.v0 * t) / F2)


def lorentz_inverse(e_prime: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    F2 = m.F2
    tp = np.asarray(e_prime.t, dtype=float)
    xp = np.asarray(e_prime.x, dtype=float)
    return _event(tp / F2 + m.v0 * xp / (m.c**2 * F2), (xp + m.v0 * tp) / F2)


def galilean_forward(e: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    t = np.asarray(e.t, dtype=float)
    x = np.asarray(e.x, dtype=float)
    return _event(t, x - m.v0 * t - 0.5 * m.alpha0 * t**2)


def galilean_inverse(e_prime: SpacetimeEvent, m: MotionParams) -> SpacetimeEvent:
    tp = np.asarray(e_prime.t, dtype=float)
    xp = np.asarray(e_prime.x, dtype=float)
    return _event(tp, xp + m.v0 * tp + 0.5 * m.alpha0 * tp**2)


def reference_transform(e: SpacetimeEvent, m: MotionParams | None = None) -> SpacetimeEvent:
    """Identity map; serves as both forward and inverse."""
    return _event(e.t, e.x)


def classical_retarded_time(t, m: MotionParams):
    """Retarded time t (1 - 2 v0/c - alpha0 t / c) - 2 x0 / c of the conventional radar model."""
    t = np.asarray(t, dtype=float)
    tau = t * (1.0 - 2.0 * m.v0 / m.c - m.alpha0 * t / m.c) - 2.0 * m.x0 / m.c
    return _as_float(tau)


def forward_map(kind: TransformKind):
    """Return the forward function for a transform with a spatial map."""
    try:
        return _FORWARD[kind]
    except KeyError:
        raise ValueError(f"{kind.value} transformation has no spatial map") from None


def inverse_map(kind: TransformKind):
    try:
        return _INVERSE[kind]
    except KeyError:
        raise ValueError(f"{kind.value} transformation has no spatial map") from None


_FORWARD = {
    TransformKind.HSU: hsu_forward,
    TransformKind.LORENTZ: lorentz_forward,
    TransformKind.GALILEAN: galilean_forward,
    TransformKind.REFERENCE: reference_transform,
}

_INVERSE = {
    TransformKind.HSU: hsu_inverse,
    TransformKind.LORENTZ: lorentz_inverse,
    TransformKind.GALILEAN: galilean_inverse,
    TransformKind.REFERENCE: reference_transform,
}
