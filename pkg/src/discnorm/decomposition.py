"""Jordan-type splits of bounded-discrepancy data into monotone parts.

A sequence of discrepancy r can be written as the difference of two
nondecreasing sequences that stay within r/2 of each other, in direct
analogy with the Jordan decomposition of bounded-variation functions; the
same holds for sampled signals with the cumulative integral in place of
prefix sums.  The range-function view normalizes the cumulative integral to
the band [0, r], exhibiting the discrepancy as the width of that band.

All constructions here reduce to plain cumulative sums because inputs are
finite grids; no limit machinery is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .norms import _as_values
from .sampling import Signal, cumulative_integral

__all__ = [
    "ContinuousJordan",
    "DiscreteJordan",
    "RangeFunction",
    "jordan_continuous",
    "jordan_discrete",
    "range_function",
]


@dataclass(frozen=True)
class DiscreteJordan:
    """Monotone split chi2 - chi1 of a finite sequence, indexed 0..n.

    Differencing reproduces the input exactly:
    ``eta[k] = (chi2[k]-chi2[k-1]) - (chi1[k]-chi1[k-1])`` for k = 1..n,
    and ``sup |chi2 - chi1| <= r/2`` where r is the discrepancy.
    """

    chi1: tuple
    chi2: tuple
    alpha: float
    r: float

    def reconstruct(self):
        """Input sequence recovered from the split."""
        c1 = np.asarray(self.chi1)
        c2 = np.asarray(self.chi2)
        return tuple((np.diff(c2) - np.diff(c1)).tolist())

    def gap(self):
        return float(np.abs(np.asarray(self.chi2) - np.asarray(self.chi1)).max())

    def to_dict(self):
        return {
            "alpha": self.alpha,
            "r": self.r,
            "chi1": list(self.chi1),
            "chi2": list(self.chi2),
        }


def jordan_discrete(values) -> DiscreteJordan:
    """Split a sequence into nondecreasing parts with gap at most r/2.

    chi2 accumulates the positive entries and chi1 the negated negative
    entries, so chi2 - chi1 walks through the prefix sums; shifting chi2 by
    alpha, the midpoint of the prefix-sum range (empty prefix included),
    centers that walk inside [-r/2, r/2].  Index 0 holds the conventional
    starting values chi2[0] = -alpha, chi1[0] = 0.
    """
    arr = _as_values(values)
    zero = np.zeros(1, dtype=arr.dtype)
    pos = np.concatenate([zero, np.cumsum(np.maximum(arr, 0))])
    neg = np.concatenate([zero, np.cumsum(-np.minimum(arr, 0))])
    walk = pos - neg  # prefix sums, leading 0
    hi = walk.max().item()
    lo = walk.min().item()
    alpha = (hi + lo) / 2
    r = hi - lo
    chi2 = tuple((p - alpha) for p in pos.tolist())
    chi1 = tuple(neg.tolist())
    return DiscreteJordan(chi1=chi1, chi2=chi2, alpha=alpha, r=r)


@dataclass(frozen=True)
class ContinuousJordan:
    """Monotone split h2 - h1 of a sampled signal on the extended grid.

    h2 integrates the positive part and h1 the negated negative part, both
    taken from the centering point c_star, so h2 - h1 equals the cumulative
    integral re-anchored at its mid-range value and
    ``sup |h2 - h1| <= r/2`` on the grid.
    """

    t0: float
    dt: float
    h1: tuple
    h2: tuple
    c_star: float
    r: float

    def gap(self):
        return float(np.abs(np.asarray(self.h2) - np.asarray(self.h1)).max())

    def derivative(self):
        """Grid derivative of h2 - h1; reproduces the input samples."""
        d = np.diff(np.asarray(self.h2)) - np.diff(np.asarray(self.h1))
        return d / self.dt

    def to_dict(self):
        return {
            "c_star": self.c_star,
            "r": self.r,
            "h1": list(self.h1),
            "h2": list(self.h2),
            "grid": {"t0": self.t0, "dt": self.dt, "n": len(self.h1)},
        }


def jordan_continuous(signal: Signal) -> ContinuousJordan:
    """Monotone split of a sampled signal.

    Locates a window maximizing the absolute integral (earliest such window
    on ties), then the point c_star inside it where the integral from the
    window start first reaches half the window total, interpolating
    linearly inside the crossing cell.  Integrating the positive and
    negative parts from c_star yields the split.
    """
    if len(signal) < 2:
        raise ValueError("continuous decomposition needs at least 2 samples")
    cumulative = cumulative_integral(signal)
    hi = int(np.argmax(cumulative))
    lo = int(np.argmin(cumulative))
    r = float(cumulative[hi] - cumulative[lo])
    n_grid = len(signal) + 1
    if r == 0.0:
        zeros = (0.0,) * n_grid
        return ContinuousJordan(signal.t0, signal.dt, zeros, zeros, signal.t0, 0.0)

    a_idx, b_idx = min(hi, lo), max(hi, lo)
    target = (cumulative[b_idx] - cumulative[a_idx]) / 2
    cell = a_idx
    frac = 0.0
    for k in range(a_idx, b_idx):
        g0 = cumulative[k] - cumulative[a_idx]
        g1 = cumulative[k + 1] - cumulative[a_idx]
        if (g0 - target) * (g1 - target) <= 0:
            cell = k
            frac = 0.0 if g1 == g0 else float((target - g0) / (g1 - g0))
            break
    c_star = signal.time(cell) + frac * signal.dt

    samples = signal.samples
    zero = np.zeros(1)
    pos = np.concatenate([zero, np.cumsum(np.maximum(samples, 0.0) * signal.dt)])
    neg = np.concatenate([zero, np.cumsum(np.minimum(samples, 0.0) * signal.dt)])
    pos_at_c = pos[cell] + frac * (pos[cell + 1] - pos[cell])
    neg_at_c = neg[cell] + frac * (neg[cell + 1] - neg[cell])
    h2 = pos - pos_at_c
    h1 = neg_at_c - neg
    return ContinuousJordan(
        t0=signal.t0,
        dt=signal.dt,
        h1=tuple(h1.tolist()),
        h2=tuple(h2.tolist()),
        c_star=float(c_star),
        r=r,
    )


@dataclass(frozen=True)
class RangeFunction:
    """Cumulative integral shifted so its grid minimum is 0 and maximum r."""

    t0: float
    dt: float
    g: tuple
    c: float
    r: float

    def to_dict(self):
        return {
            "c": self.c,
            "r": self.r,
            "g": list(self.g),
            "grid": {"t0": self.t0, "dt": self.dt, "n": len(self.g)},
        }


def range_function(signal: Signal) -> RangeFunction:
    """Unique primitive of the signal whose value range is [0, r].

    g is the cumulative integral minus its minimum c; the width of the
    resulting band equals the integral discrepancy by the range identity.
    """
    if len(signal) < 2:
        raise ValueError("range function needs at least 2 samples")
    cumulative = cumulative_integral(signal)
    c = float(cumulative.min())
    g = cumulative - c
    return RangeFunction(
        t0=signal.t0,
        dt=signal.dt,
        g=tuple(g.tolist()),
        c=c,
        r=float(g.max()),
    )
