"""Dual norms of the discrepancy and Alexiewicz norms, and a monotonicity measure.

A pointwise weight function f pairs with an event train through
``L_f(eta) = sum f(t) * eta(t)``.  Like the total variation, this pairing is
studied modulo constant shifts of f, so the dual norms are taken over the
zero-sum trains (on which adding a constant to f changes nothing).  There
the discrepancy unit ball is a polytope cut out by window-sum constraints
whose vertices are alternating-sign unit trains of even length, which
collapses the dual discrepancy norm to a linear-time dynamic program and
sandwiches it between BV/2 and BV.  The Alexiewicz dual is the total
variation itself, attained by loading the local extrema of f.

The ratio of the two, ``mu_mon = dual_d / bv``, measures how monotone the
weights are: exactly 1 for monotone f, down to 1/2 at maximal oscillation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .events import EventSequence
from .norms import DEFAULT_TOL, total_variation

__all__ = [
    "DualNormReport",
    "FunctionalWeights",
    "alexiewicz_dual",
    "apply_functional",
    "boundedness_check",
    "dual_discrepancy_fast",
    "dual_discrepancy_oracle",
    "dual_report",
    "monotonicity_measure",
]

_NEG = float("-inf")


@dataclass(frozen=True)
class FunctionalWeights:
    """Weight function given pointwise: strictly increasing times, finite weights."""

    times: tuple
    weights: tuple

    def __post_init__(self):
        times = tuple(float(t) for t in self.times)
        weights = tuple(float(w) for w in self.weights)
        if len(times) != len(weights):
            raise ValueError("times and weights must have equal length")
        if any(not np.isfinite(t) for t in times) or any(not np.isfinite(w) for w in weights):
            raise ValueError("times and weights must be finite")
        if any(t1 >= t2 for t1, t2 in zip(times, times[1:])):
            raise ValueError("times must be strictly increasing")
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "weights", weights)

    @classmethod
    def from_values(cls, weights, times=None):
        weights = tuple(weights)
        if times is None:
            times = tuple(float(i) for i in range(len(weights)))
        return cls(times, weights)

    def __len__(self):
        return len(self.weights)


def apply_functional(weights: FunctionalWeights, eta: EventSequence):
    """Evaluate ``sum f(t) * v`` over the events; linear in the train.

    Every event time must carry a weight.
    """
    lookup = dict(zip(weights.times, weights.weights))
    total = 0.0
    for t, v in eta:
        if t not in lookup:
            raise ValueError(f"event at t={t} has no weight")
        total += lookup[t] * v
    return total


def dual_discrepancy_fast(weights: FunctionalWeights):
    """Dual discrepancy norm with an attaining unit-norm train, in O(n).

    Maximizes the alternating-sign selection sum over even-length
    subsequences of the weights (the vertices of the unit ball restricted
    to zero-sum trains).  Returns ``(value, witness)`` where the witness is
    a vector over the weight positions in {-1, 0, +1}, alternating in sign,
    with discrepancy norm 1; fewer than two weights give value 0 and the
    zero witness.
    """
    w = [float(v) for v in weights.weights]
    n = len(w)
    if n < 2:
        return 0.0, (0,) * n
    # state = (best value, chain); chain links are (index, coeff, parent).
    # "open" states still owe one entry of the opposite sign; "closed"
    # states hold an even-length selection.
    pos_open = pos_closed = neg_open = neg_closed = (_NEG, None)
    for i, f in enumerate(w):
        npo = pos_open
        if pos_closed[0] + f > npo[0]:
            npo = (pos_closed[0] + f, (i, 1, pos_closed[1]))
        if f > npo[0]:
            npo = (f, (i, 1, None))
        npc = pos_closed
        if pos_open[0] - f > npc[0]:
            npc = (pos_open[0] - f, (i, -1, pos_open[1]))
        nno = neg_open
        if neg_closed[0] - f > nno[0]:
            nno = (neg_closed[0] - f, (i, -1, neg_closed[1]))
        if -f > nno[0]:
            nno = (-f, (i, -1, None))
        nnc = neg_closed
        if neg_open[0] + f > nnc[0]:
            nnc = (neg_open[0] + f, (i, 1, neg_open[1]))
        pos_open, pos_closed, neg_open, neg_closed = npo, npc, nno, nnc
    value, chain = pos_closed if pos_closed[0] >= neg_closed[0] else neg_closed
    witness = [0] * n
    node = chain
    while node is not None:
        idx, coeff, node = node
        witness[idx] = coeff
    return value, tuple(witness)


def dual_discrepancy_oracle(weights: FunctionalWeights, extended=False):
    """Exhaustive dual discrepancy norm over zero-sum integer trains.

    Enumerates every train with values in {-1, 0, 1} (or {-2..2} when
    ``extended``), zero total sum, not identically zero, and maximizes
    ``|L_f(eta)| / ||eta||_D``.  Exponential; it exists to cross-check the
    dynamic program, including whether amplitude-2 trains ever win (they do
    not).
    """
    n = len(weights)
    radix, offset, limit = (5, -2, 8) if extended else (3, -1, 12)
    if n > limit:
        raise ValueError(f"oracle limited to n <= {limit}, got {n}")
    if n < 2:
        return 0.0
    codes = np.arange(radix**n)
    digits = (codes[:, None] // radix ** np.arange(n)) % radix + offset
    keep = (digits.sum(axis=1) == 0) & np.any(digits != 0, axis=1)
    digits = digits[keep]
    if digits.size == 0:
        return 0.0
    pairing = digits @ np.asarray(weights.weights)
    prefix = np.cumsum(digits, axis=1)
    disc = np.maximum(prefix.max(axis=1), 0) - np.minimum(prefix.min(axis=1), 0)
    return float(np.max(np.abs(pairing) / disc))


def alexiewicz_dual(weights: FunctionalWeights):
    """Total variation and a unit-Alexiewicz-norm train attaining it.

    The witness loads the local extrema of the weights: +/-1 at the first
    and the last extremum, +/-2 at interior ones, sign positive at maxima.
    A plateau counts as one extremum at its first index.  Constant weights
    get the zero witness.
    """
    w = list(weights.weights)
    bv = total_variation(w)
    n = len(w)
    runs = []  # (first index, value) of maximal equal-value runs
    for i, v in enumerate(w):
        if not runs or runs[-1][1] != v:
            runs.append((i, v))
    witness = [0] * n
    if len(runs) < 2:
        return bv, tuple(witness)
    extrema = []  # (index, +1 for maximum / -1 for minimum)
    last = len(runs) - 1
    for j, (idx, v) in enumerate(runs):
        if j == 0:
            extrema.append((idx, 1 if v > runs[1][1] else -1))
        elif j == last:
            extrema.append((idx, 1 if v > runs[j - 1][1] else -1))
        elif runs[j - 1][1] < v > runs[j + 1][1]:
            extrema.append((idx, 1))
        elif runs[j - 1][1] > v < runs[j + 1][1]:
            extrema.append((idx, -1))
    for j, (idx, sign) in enumerate(extrema):
        witness[idx] = sign if j in (0, len(extrema) - 1) else 2 * sign
    return bv, tuple(witness)


def monotonicity_measure(weights: FunctionalWeights, tol=DEFAULT_TOL):
    """Ratio dual_d / bv in [1/2, 1]; 1 iff the weights are monotone.

    Fails on constant weights, whose variation vanishes.
    """
    bv = total_variation(weights.weights)
    if bv == 0:
        raise ValueError("monotonicity measure is undefined for constant input")
    mu = dual_discrepancy_fast(weights)[0] / bv
    if not (0.5 - tol <= mu <= 1.0 + tol):
        raise RuntimeError(
            f"monotonicity ratio {mu} escaped [1/2, 1]; dual-norm implementation bug"
        )
    return mu


def boundedness_check(weights: FunctionalWeights, trials=200, rng=None, tol=DEFAULT_TOL):
    """Verify |L(eta)| <= ||f||_BV on sampled unit-discrepancy trains.

    Draws even-length alternating-sign trains (discrepancy norm 1) over the
    weight positions and checks the variation bound on each; returns False
    only if some sample violates it, i.e. on an implementation bug.
    """
    n = len(weights)
    if n < 2:
        return True
    if rng is None or isinstance(rng, int):
        rng = random.Random(rng)
    bound = total_variation(weights.weights)
    for _ in range(trials):
        k = 2 * rng.randint(1, n // 2)
        picks = sorted(rng.sample(range(n), k))
        sign = rng.choice((1, -1))
        eta = EventSequence(
            tuple(weights.times[i] for i in picks),
            tuple(sign * (-1) ** j for j in range(k)),
        )
        if abs(apply_functional(weights, eta)) > bound + tol:
            return False
    return True


@dataclass(frozen=True)
class DualNormReport:
    """Dual norms, variation, monotonicity ratio and the attaining train."""

    dual_d: float
    bv: float
    dual_a: float
    mu_mon: float | None
    witness: tuple

    def to_dict(self):
        return {
            "dual_d": self.dual_d,
            "bv": self.bv,
            "dual_a": self.dual_a,
            "mu_mon": self.mu_mon,
            "witness": list(self.witness),
        }


def dual_report(weights: FunctionalWeights, tol=DEFAULT_TOL) -> DualNormReport:
    """Bundle the dual norms of the weights; mu_mon is None on constants."""
    dual_d, witness = dual_discrepancy_fast(weights)
    dual_a, _ = alexiewicz_dual(weights)
    bv = total_variation(weights.weights)
    mu = monotonicity_measure(weights, tol=tol) if bv > 0 else None
    return DualNormReport(dual_d=dual_d, bv=bv, dual_a=dual_a, mu_mon=mu, witness=witness)
