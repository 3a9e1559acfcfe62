"""Sequence norms built around Weyl's discrepancy measure.

The discrepancy of a finite real sequence is the largest absolute sum over
any contiguous window.  Unlike the p-norms it is sensitive to both the signs
and the ordering of the entries: an alternating sequence has a small
discrepancy no matter how long it is, while a same-sign block accumulates.

Two routes are provided for it: `discrepancy_naive` searches every window
directly (quadratic, the oracle), while `discrepancy_fast` uses the fact
that the discrepancy is the range of the prefix-sum walk (linear).  The
Alexiewicz norm, total variation and p-norms round out the toolbox.

Integer inputs are kept in exact integer arithmetic so that equalities can
be asserted without tolerance; float inputs use the module-wide default
absolute tolerance `DEFAULT_TOL` in downstream comparisons.
"""

from __future__ import annotations

import enum
import math

import numpy as np

__all__ = [
    "DEFAULT_TOL",
    "NormKind",
    "alexiewicz_norm",
    "compute_norm",
    "discrepancy_fast",
    "discrepancy_naive",
    "p_norm",
    "prefix_extremes",
    "total_variation",
]

DEFAULT_TOL = 1e-9


def _as_values(values):
    """Coerce input to a 1-d array, keeping integer dtypes exact."""
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-d sequence, got shape {arr.shape}")
    if arr.dtype == bool:
        arr = arr.astype(np.int64)
    elif not (np.issubdtype(arr.dtype, np.integer) or np.issubdtype(arr.dtype, np.floating)):
        arr = arr.astype(float)
    if np.issubdtype(arr.dtype, np.floating) and arr.size and not np.all(np.isfinite(arr)):
        raise ValueError("sequence entries must be finite")
    return arr


def discrepancy_naive(values):
    """Discrepancy by direct search over all contiguous windows.

    O(n^2); definitionally transparent, so it serves as the oracle against
    which `discrepancy_fast` is verified.  The empty sequence has
    discrepancy 0 (only the empty window exists).
    """
    x = _as_values(values).tolist()
    best = 0
    n = len(x)
    for i in range(n):
        s = 0
        for j in range(i, n):
            s += x[j]
            m = abs(s)
            if m > best:
                best = m
    return best


def prefix_extremes(values):
    """Largest and smallest prefix sum, the empty prefix 0 included.

    Returns ``(hi, lo)`` with ``hi >= 0 >= lo``; their difference is the
    discrepancy (range-of-the-walk identity).
    """
    arr = _as_values(values)
    if arr.size == 0:
        return 0, 0
    c = np.cumsum(arr)
    hi = max(c.max().item(), 0)
    lo = min(c.min().item(), 0)
    return hi, lo


def discrepancy_fast(values):
    """Discrepancy via the prefix-sum range identity, single pass."""
    hi, lo = prefix_extremes(values)
    return hi - lo


def alexiewicz_norm(values):
    """Largest absolute prefix sum.

    Sits within a factor of two of the discrepancy:
    ``discrepancy/2 <= alexiewicz <= discrepancy``.
    """
    arr = _as_values(values)
    if arr.size == 0:
        return 0
    return np.abs(np.cumsum(arr)).max().item()


def total_variation(values):
    """Sum of absolute consecutive differences.

    A semi-norm measuring oscillation; it vanishes exactly on constant
    sequences.  Undefined (raises) on empty input.
    """
    arr = _as_values(values)
    if arr.size == 0:
        raise ValueError("total variation is undefined for an empty sequence")
    return np.abs(np.diff(arr)).sum().item()


def p_norm(values, p):
    """Standard p-norm; ``p = math.inf`` gives the sup norm."""
    if p != math.inf and not p >= 1:
        raise ValueError(f"p-norm requires p >= 1, got {p!r}")
    arr = _as_values(values)
    if arr.size == 0:
        return 0
    if p == math.inf:
        return np.abs(arr).max().item()
    if p == 1:
        return np.abs(arr).sum().item()
    return float(np.sum(np.abs(arr.astype(float)) ** p) ** (1.0 / p))


class NormKind(enum.Enum):
    """Dispatch tags for the norms in this module."""

    DISCREPANCY = "d"
    ALEXIEWICZ = "a"
    TOTAL_VARIATION = "bv"
    P = "p"
    SUP = "sup"


def compute_norm(values, kind, p=None):
    """Evaluate the norm selected by `kind`; `p` is required for ``P``."""
    kind = NormKind(kind)
    if kind is NormKind.DISCREPANCY:
        return discrepancy_fast(values)
    if kind is NormKind.ALEXIEWICZ:
        return alexiewicz_norm(values)
    if kind is NormKind.TOTAL_VARIATION:
        return total_variation(values)
    if kind is NormKind.SUP:
        return p_norm(values, math.inf)
    if p is None:
        raise ValueError("norm kind 'p' needs an exponent")
    return p_norm(values, p)
