"""File formats and the deterministic JSON renderer.

Three tabular inputs are recognized by their CSV header: ``x`` (or
``value``) for a bare sequence, ``t,v`` for an event train with strictly
increasing times, ``t,x`` for a uniformly sampled signal.  Event trains may
alternatively arrive as JSON ``{"events": [{"t": ..., "v": ...}]}``.
Writers round-trip exactly (shortest-repr floats); report JSON uses fixed
12-significant-digit floats so identical inputs give identical bytes.
"""

from __future__ import annotations

import csv
import io as _io
import json
import math

from .events import EventSequence
from .norms import DEFAULT_TOL
from .sampling import Signal

__all__ = [
    "ParseError",
    "load_input",
    "render_json",
    "write_events_csv",
    "write_sequence_csv",
    "write_signal_csv",
]


class ParseError(ValueError):
    """Malformed input file; the message names the file and line."""


def _fmt_float(x):
    if not math.isfinite(x):
        raise ValueError("non-finite number in JSON output")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return format(x, ".12g")


def render_json(obj):
    """Deterministic JSON: insertion-ordered keys, 12-significant-digit floats."""
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        body = ", ".join(f"{json.dumps(str(k))}: {render_json(v)}" for k, v in obj.items())
        return "{" + body + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise TypeError(f"cannot render {type(obj).__name__} as JSON")


def _parse_number(token, path, lineno):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        pass
    try:
        value = float(token)
    except ValueError:
        raise ParseError(f"{path}:{lineno}: not a number: {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(f"{path}:{lineno}: non-finite value: {token!r}")
    return value


def _read_rows(text, path):
    rows = []
    for lineno, row in enumerate(csv.reader(_io.StringIO(text)), start=1):
        if not row or all(not cell.strip() for cell in row):
            continue
        rows.append((lineno, [cell.strip() for cell in row]))
    return rows


def _require_columns(row, n, path, lineno):
    if len(row) != n:
        raise ParseError(f"{path}:{lineno}: expected {n} column(s), got {len(row)}")


def _parse_sequence_rows(rows, path):
    values = []
    for lineno, row in rows:
        _require_columns(row, 1, path, lineno)
        values.append(_parse_number(row[0], path, lineno))
    return values


def _parse_event_rows(rows, path):
    pairs = []
    prev = None
    for lineno, row in rows:
        _require_columns(row, 2, path, lineno)
        t = float(_parse_number(row[0], path, lineno))
        v = _parse_number(row[1], path, lineno)
        if not isinstance(v, int) or v == 0:
            raise ParseError(f"{path}:{lineno}: event value must be a nonzero integer")
        if prev is not None and t <= prev:
            raise ParseError(f"{path}:{lineno}: event times must be strictly increasing")
        prev = t
        pairs.append((t, v))
    return EventSequence.from_pairs(pairs)


def _parse_signal_rows(rows, path):
    times, samples = [], []
    for lineno, row in rows:
        _require_columns(row, 2, path, lineno)
        times.append(float(_parse_number(row[0], path, lineno)))
        samples.append(float(_parse_number(row[1], path, lineno)))
    if not times:
        raise ParseError(f"{path}: signal file has no samples")
    if len(times) == 1:
        raise ParseError(f"{path}: cannot infer dt from a single row; use a value column with --dt")
    dt = times[1] - times[0]
    if dt <= 0:
        raise ParseError(f"{path}:{rows[1][0]}: times must increase")
    for (lineno, _), t_prev, t_next in zip(rows[1:], times, times[1:]):
        if abs((t_next - t_prev) - dt) > DEFAULT_TOL:
            raise ParseError(f"{path}:{lineno}: sample spacing deviates from dt={dt!r}")
    return Signal(times[0], dt, samples)


_HEADERS = {
    ("x",): "sequence",
    ("value",): "sequence",
    ("t", "v"): "events",
    ("t", "x"): "signal",
}


def load_input(path, as_kind=None, t0=0.0, dt=1.0):
    """Parse a data file into ``(kind, object)``.

    ``kind`` is one of ``sequence`` (list of numbers), ``events``
    (`EventSequence`) or ``signal`` (`Signal`).  The format is detected
    from the CSV header or a leading ``{`` (event JSON); ``as_kind``
    overrides the interpretation, which is how a single value column
    becomes a signal on the ``t0``/``dt`` grid.
    """
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    if not text.strip():
        if as_kind in (None, "sequence"):
            return "sequence", []
        if as_kind == "events":
            return "events", EventSequence((), ())
        raise ParseError(f"{path}: empty file cannot be a signal")
    if text.lstrip()[0] == "{":
        try:
            payload = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON: {exc}") from None
        try:
            eta = EventSequence.from_json_dict(payload)
        except ValueError as exc:
            raise ParseError(f"{path}: {exc}") from None
        if as_kind not in (None, "events"):
            raise ParseError(f"{path}: JSON input holds events, not a {as_kind}")
        return "events", eta

    rows = _read_rows(text, path)
    header_line, header = rows[0]
    key = tuple(cell.lower() for cell in header)
    if key not in _HEADERS:
        raise ParseError(f"{path}:{header_line}: unrecognized header {header!r}")
    detected = _HEADERS[key]
    body = rows[1:]

    kind = as_kind or detected
    if kind == "sequence":
        if detected != "sequence":
            raise ParseError(f"{path}: header {header!r} does not hold a bare sequence")
        return "sequence", _parse_sequence_rows(body, path)
    if kind == "events":
        if detected != "events":
            raise ParseError(f"{path}: header {header!r} does not hold events")
        return "events", _parse_event_rows(body, path)
    if kind == "signal":
        if detected == "signal":
            return "signal", _parse_signal_rows(body, path)
        if detected == "sequence":
            values = _parse_sequence_rows(body, path)
            if not values:
                raise ParseError(f"{path}: signal needs at least one sample")
            try:
                return "signal", Signal(t0, dt, values)
            except ValueError as exc:
                raise ParseError(f"{path}: {exc}") from None
        raise ParseError(f"{path}: header {header!r} does not hold a signal")
    raise ParseError(f"unknown input kind {kind!r}")


def write_sequence_csv(values, fh):
    fh.write("x\n")
    for v in values:
        fh.write(f"{v!r}\n" if isinstance(v, float) else f"{v}\n")


def write_events_csv(eta: EventSequence, fh):
    """Two-column ``t,v`` rows; timestamp ties are coalesced as in JSON."""
    fh.write("t,v\n")
    for item in eta.to_json_dict()["events"]:
        fh.write(f"{item['t']!r},{item['v']}\n")


def write_signal_csv(signal: Signal, fh):
    fh.write("t,x\n")
    for i in range(len(signal)):
        fh.write(f"{signal.time(i)!r},{signal.samples[i]!r}\n")
