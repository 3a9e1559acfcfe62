"""Threshold-based encoders (Send-on-Delta, Integrate-and-Fire).

Both schemes turn a uniformly sampled signal into a train of +/-1 events.
SOD fires whenever the signal drifts a threshold theta away from a
reference level; IF fires whenever the running integral accumulates theta.
With the event metric scaled by theta (one event = one jump of size theta)
either encoder is a quasi-isometry between the signal space and the event
space, with multiplicative constant 1 and additive constant 4*theta;
`quasi_isometry_check` verifies the two bounds on concrete inputs.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass

import numpy as np

from .events import EventSequence, difference, event_discrepancy
from .norms import DEFAULT_TOL

__all__ = [
    "QuasiIsometryReport",
    "SamplerConfig",
    "Scheme",
    "Signal",
    "cumulative_integral",
    "encode",
    "if_encode",
    "input_distance",
    "integral_discrepancy",
    "output_distance",
    "quasi_isometry_check",
    "range_seminorm",
    "sod_encode",
    "sod_hypercube_image",
]


class Scheme(enum.Enum):
    SOD = "sod"
    IF = "if"


class Signal:
    """Uniformly sampled real signal: start time, spacing, finite samples."""

    __slots__ = ("t0", "dt", "samples")

    def __init__(self, t0, dt, samples):
        t0 = float(t0)
        dt = float(dt)
        if not math.isfinite(t0):
            raise ValueError("t0 must be finite")
        if not (math.isfinite(dt) and dt > 0):
            raise ValueError(f"dt must be positive, got {dt}")
        arr = np.array(samples, dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("samples must be a nonempty 1-d sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("samples must be finite")
        arr.flags.writeable = False
        self.t0 = t0
        self.dt = dt
        self.samples = arr

    def __len__(self):
        return self.samples.size

    def time(self, i):
        return self.t0 + i * self.dt

    @property
    def times(self):
        return self.t0 + self.dt * np.arange(self.samples.size)

    def __sub__(self, other):
        if (
            len(self) != len(other)
            or abs(self.t0 - other.t0) > DEFAULT_TOL
            or abs(self.dt - other.dt) > DEFAULT_TOL
        ):
            raise ValueError("signals live on different sampling grids")
        return Signal(self.t0, self.dt, self.samples - other.samples)

    def __repr__(self):
        return f"Signal(t0={self.t0}, dt={self.dt}, n={len(self)})"


@dataclass(frozen=True)
class SamplerConfig:
    """Encoder selection: scheme, threshold, and the IF residual rule.

    ``if_reset=True`` zeroes the integrator at each event instead of the
    default subtract-theta carry.  Only the carry rule keeps the integral
    tracking error below theta, which the quasi-isometry bound relies on;
    the reset variant exists for comparison.
    """

    scheme: Scheme
    theta: float
    if_reset: bool = False

    def __post_init__(self):
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        theta = float(self.theta)
        if not (math.isfinite(theta) and theta > 0):
            raise ValueError(f"theta must be positive, got {self.theta}")
        object.__setattr__(self, "theta", theta)


def _check_theta(theta):
    if not (math.isfinite(theta) and theta > 0):
        raise ValueError(f"theta must be positive, got {theta}")
    return float(theta)


def sod_encode(signal: Signal, theta) -> EventSequence:
    """Send-on-Delta encoding.

    The reference level starts at the first sample and jumps by theta with
    every event; a sample lying k*theta away triggers k same-signed events
    at that sample's time.  No event is emitted at t0, and adding a
    constant to the whole signal changes nothing.
    """
    theta = _check_theta(theta)
    base = float(signal.samples[0])
    level = 0  # reference = base + level * theta
    times, values = [], []
    for i in range(1, len(signal)):
        x = float(signal.samples[i])
        t = signal.time(i)
        while x - (base + level * theta) >= theta:
            level += 1
            times.append(t)
            values.append(1)
        while x - (base + level * theta) <= -theta:
            level -= 1
            times.append(t)
            values.append(-1)
    return EventSequence(tuple(times), tuple(values))


def if_encode(signal: Signal, theta, reset=False) -> EventSequence:
    """Integrate-and-Fire encoding.

    Accumulates the left rectangle-rule integral sample by sample and emits
    an event at every +/-theta crossing.  The default carry rule subtracts
    theta per event, keeping the residual in (-theta, theta); ``reset``
    zeroes it instead.
    """
    theta = _check_theta(theta)
    u = 0.0
    times, values = [], []
    for i in range(len(signal)):
        u += float(signal.samples[i]) * signal.dt
        t = signal.time(i)
        while u >= theta:
            times.append(t)
            values.append(1)
            u = 0.0 if reset else u - theta
        while u <= -theta:
            times.append(t)
            values.append(-1)
            u = 0.0 if reset else u + theta
    return EventSequence(tuple(times), tuple(values))


def encode(signal: Signal, config: SamplerConfig) -> EventSequence:
    if config.scheme is Scheme.SOD:
        return sod_encode(signal, config.theta)
    return if_encode(signal, config.theta, reset=config.if_reset)


def range_seminorm(signal: Signal):
    """Range of the sample values, ``max - min``; zero on constants."""
    return float(signal.samples.max() - signal.samples.min())


def cumulative_integral(signal: Signal):
    """Left rectangle-rule running integral on the extended grid.

    Returns n+1 values with F[0] = 0 at t0; grid point k sits at
    ``t0 + k*dt`` and covers the first k samples.
    """
    out = np.empty(len(signal) + 1)
    out[0] = 0.0
    np.cumsum(signal.samples * signal.dt, out=out[1:])
    return out


def integral_discrepancy(signal: Signal):
    """Largest absolute integral over any grid window.

    Computed as the range of the cumulative integral (baseline 0
    included), mirroring the prefix-sum identity of the discrete norm.
    """
    cumulative = cumulative_integral(signal)
    return float(cumulative.max() - cumulative.min())


def input_distance(f: Signal, g: Signal, config: SamplerConfig):
    """Signal-space distance matched to the scheme.

    SOD compares signals through the range semi-norm of their difference,
    IF through the integral discrepancy of their difference.
    """
    h = f - g
    if config.scheme is Scheme.SOD:
        return range_seminorm(h)
    return integral_discrepancy(h)


def output_distance(ef: EventSequence, eg: EventSequence, theta):
    """Event-space distance: theta times the discrepancy of the difference.

    Each event stands for a jump of size theta, so the discrepancy count is
    scaled back into signal units.
    """
    return _check_theta(theta) * event_discrepancy(difference(ef, eg))


@dataclass(frozen=True)
class QuasiIsometryReport:
    """Both sides of the relaxed bi-Lipschitz sandwich for one signal pair.

    ``lower_ok``/``upper_ok`` record ``d_input/a - b <= d_output`` and
    ``d_output <= a*d_input + b`` (up to tol); ``margin`` is the smaller of
    the two slacks, negative exactly when a bound fails.
    """

    d_input: float
    d_output: float
    a: float
    b: float
    lower_ok: bool
    upper_ok: bool
    margin: float

    def to_dict(self):
        return {
            "d_input": self.d_input,
            "d_output": self.d_output,
            "a": self.a,
            "b": self.b,
            "lower_ok": self.lower_ok,
            "upper_ok": self.upper_ok,
            "margin": self.margin,
        }


def quasi_isometry_check(f: Signal, g: Signal, config: SamplerConfig, tol=DEFAULT_TOL):
    """Verify the quasi-isometry sandwich with a=1, b=4*theta on (f, g)."""
    d_in = input_distance(f, g, config)
    d_out = output_distance(encode(f, config), encode(g, config), config.theta)
    a = 1.0
    b = 4.0 * config.theta
    lower_slack = d_out - (d_in / a - b)
    upper_slack = (a * d_in + b) - d_out
    return QuasiIsometryReport(
        d_input=d_in,
        d_output=d_out,
        a=a,
        b=b,
        lower_ok=lower_slack >= -tol,
        upper_ok=upper_slack >= -tol,
        margin=min(lower_slack, upper_slack),
    )


def sod_hypercube_image(n: int):
    """SOD(theta=1) image of the 0/1 hypercube vertices in value space.

    Each vertex of {0,1}^n, read as a signal, encodes to at most n-1 unit
    events; the value vectors are zero-padded to length n-1 and collected
    as a set.  Every nonzero image alternates in sign and has discrepancy
    norm exactly 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or not 1 <= n <= 12:
        raise ValueError(f"n must be an integer in [1, 12], got {n!r}")
    images = set()
    for bits in itertools.product((0.0, 1.0), repeat=n):
        encoded = sod_encode(Signal(0.0, 1.0, bits), 1.0)
        images.add(encoded.values + (0,) * (n - 1 - len(encoded)))
    return images
