"""Finitely supported integer event trains and their discrepancy metric.

An event train is a function of time that is zero except at finitely many
instants, where it takes a nonzero integer value; threshold encoders emit
the unit values +1 ("up") and -1 ("down").  The discrepancy norm of a train
only sees the ordered value sequence, which makes an alternating train lie
close to the empty one however many events it contains.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .norms import discrepancy_fast

__all__ = [
    "EventSequence",
    "difference",
    "distance",
    "event_discrepancy",
    "restrict",
]


@dataclass(frozen=True)
class EventSequence:
    """Events ``(t, v)`` with nondecreasing times and nonzero integer values.

    Equal timestamps are permitted and keep their order: the effective sort
    key is ``(t, ordinal)``, the ordinal counting events that share a
    timestamp.  Encoders use ties to record several threshold crossings
    within one sampling step; hand-built trains normally have strictly
    increasing times.  Timestamps may be negative when a signal starts
    before zero.
    """

    times: tuple
    values: tuple

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        values = tuple(self.values)
        if len(times) != len(values):
            raise ValueError("times and values must have equal length")
        prev = None
        for t in times:
            if not math.isfinite(t):
                raise ValueError("event times must be finite")
            if prev is not None and t < prev:
                raise ValueError("event times must be nondecreasing")
            prev = t
        for v in values:
            if int(v) != v or v == 0:
                raise ValueError(f"event values must be nonzero integers, got {v!r}")
        values = tuple(int(v) for v in values)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        if not pairs:
            return cls((), ())
        times, values = zip(*pairs)
        return cls(times, values)

    def __len__(self):
        return len(self.times)

    def __iter__(self):
        return iter(zip(self.times, self.values))

    def keys(self):
        """(time, ordinal) sort keys; the ordinal breaks timestamp ties."""
        out = []
        last, ordinal = None, 0
        for t in self.times:
            ordinal = ordinal + 1 if t == last else 0
            last = t
            out.append((t, ordinal))
        return out

    def to_json_dict(self):
        """Schema ``{"events": [{"t": ..., "v": ...}, ...]}``.

        Events sharing a timestamp are coalesced into one summed event (a
        zero sum is dropped) so that the serialized times are strictly
        increasing.  Encoder ties are same-signed, so coalescing preserves
        the discrepancy norm.
        """
        merged = []
        for t, v in self:
            if merged and merged[-1][0] == t:
                merged[-1][1] += v
            else:
                merged.append([t, v])
        return {"events": [{"t": t, "v": v} for t, v in merged if v != 0]}

    @classmethod
    def from_json_dict(cls, payload):
        if not isinstance(payload, dict) or "events" not in payload:
            raise ValueError('event JSON must be an object with an "events" list')
        events = payload["events"]
        if not isinstance(events, list):
            raise ValueError('"events" must be a list')
        pairs = []
        prev = None
        for i, item in enumerate(events):
            if not isinstance(item, dict) or "t" not in item or "v" not in item:
                raise ValueError(f'event {i} must be an object with "t" and "v"')
            try:
                t, v = float(item["t"]), item["v"]
            except (TypeError, ValueError):
                raise ValueError(f"event {i}: t must be a number") from None
            if prev is not None and t <= prev:
                raise ValueError(f"event {i}: times must be strictly increasing")
            prev = t
            pairs.append((t, v))
        return cls.from_pairs(pairs)


def event_discrepancy(eta: EventSequence):
    """Discrepancy norm of the train.

    Timestamps only order the events; the value is the discrepancy of the
    value sequence itself.
    """
    return discrepancy_fast(eta.values)


def restrict(eta: EventSequence, a, b) -> EventSequence:
    """Sub-train of events with ``a <= t <= b``."""
    if a > b:
        raise ValueError(f"empty restriction window: a={a} > b={b}")
    return EventSequence.from_pairs((t, v) for t, v in eta if a <= t <= b)


def difference(eta1: EventSequence, eta2: EventSequence) -> EventSequence:
    """Pointwise difference on the merged timeline.

    Events are matched by their ``(t, ordinal)`` key; matched values
    subtract and zero results are dropped.
    """
    acc = dict(zip(eta1.keys(), eta1.values))
    for key, v in zip(eta2.keys(), eta2.values):
        acc[key] = acc.get(key, 0) - v
    items = sorted((key, v) for key, v in acc.items() if v != 0)
    return EventSequence(tuple(t for (t, _), _ in items), tuple(v for _, v in items))


def distance(eta1: EventSequence, eta2: EventSequence):
    """Discrepancy metric between two trains: ``||eta1 - eta2||_D``."""
    return event_discrepancy(difference(eta1, eta2))
