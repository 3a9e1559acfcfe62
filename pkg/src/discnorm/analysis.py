"""Shift misalignment profiles and the discrepancy-variation inequality.

The misalignment of a sequence at shift k is the discrepancy norm of the
difference between the zero-padded sequence and its k-shifted copy.  For
nonnegative sequences the profile is symmetric in k, monotone on k >= 0 and
Lipschitz with constant ``max - min`` over the padded index set; the same
profile under the Euclidean norm shows none of this structure, which is the
point of computing both.

For ternary sequences, l1 mass, discrepancy and total variation obey the
uncertainty-style inequality ``l1 <= disc * bv``: a sequence cannot
oscillate heavily (small disc, large given bv) and still carry full mass.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .norms import DEFAULT_TOL, NormKind, _as_values, compute_norm

__all__ = [
    "HeisenbergReport",
    "MisalignmentProfile",
    "check_shift_lipschitz",
    "check_shift_monotone",
    "heisenberg_check",
    "misalignment",
    "shifted_difference",
    "sign_changes",
]


def shifted_difference(values, k: int):
    """``x[i+k] - x[i]`` over the zero-padded index range.

    Trimmed to the indices where at least one operand lies in the support;
    everything further out is 0 - 0 and cannot move any window sum.
    """
    arr = _as_values(values)
    m = abs(int(k))
    pad = np.zeros(m, dtype=arr.dtype)
    lead = np.concatenate([arr, pad])
    lag = np.concatenate([pad, arr])
    return lead - lag if k >= 0 else lag - lead


@dataclass(frozen=True)
class MisalignmentProfile:
    """Misalignment values over shifts -k_max..k_max plus the Lipschitz constant."""

    k_values: tuple
    deltas: tuple
    lipschitz_l: float

    def delta(self, k):
        return self.deltas[self.k_values.index(k)]

    def to_dict(self):
        return {
            "k_values": list(self.k_values),
            "deltas": list(self.deltas),
            "lipschitz_l": self.lipschitz_l,
        }


def misalignment(values, k_max: int, kind=NormKind.DISCREPANCY, p=None):
    """Profile ``k -> ||x[.+k] - x||`` for k in [-k_max, k_max].

    The norm defaults to the discrepancy; passing another `NormKind` (for
    instance P with p=2) computes a comparison profile.  The Lipschitz
    constant is taken over the padded index set, so the zeros outside the
    support participate in it.
    """
    if not isinstance(k_max, int) or isinstance(k_max, bool) or k_max < 0:
        raise ValueError(f"k_max must be a nonnegative integer, got {k_max!r}")
    arr = _as_values(values)
    ks = tuple(range(-k_max, k_max + 1))
    deltas = tuple(compute_norm(shifted_difference(arr, k), kind, p) for k in ks)
    if arr.size:
        lipschitz = max(arr.max().item(), 0) - min(arr.min().item(), 0)
    else:
        lipschitz = 0
    return MisalignmentProfile(k_values=ks, deltas=deltas, lipschitz_l=lipschitz)


def check_shift_lipschitz(values, k_max: int, tol=DEFAULT_TOL):
    """True iff the profile satisfies ``delta(k) <= |k| * L`` up to tol."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    profile = misalignment(values, k_max)
    return all(
        d <= abs(k) * profile.lipschitz_l + tol
        for k, d in zip(profile.k_values, profile.deltas)
    )


def check_shift_monotone(values, k_max: int, tol=DEFAULT_TOL):
    """True iff the profile is nondecreasing on 0..k_max (nonnegative input only)."""
    arr = _as_values(values)
    if arr.size and arr.min() < 0:
        raise ValueError("monotone misalignment requires nonnegative entries")
    profile = misalignment(arr, k_max)
    forward = profile.deltas[k_max:]
    return all(a <= b + tol for a, b in zip(forward, forward[1:]))


def sign_changes(values):
    """Number of sign changes among the nonzero entries."""
    arr = _as_values(values)
    nz = arr[arr != 0]
    if nz.size < 2:
        return 0
    return int(np.count_nonzero(np.sign(nz[1:]) != np.sign(nz[:-1])))


@dataclass(frozen=True)
class HeisenbergReport:
    """l1 <= disc * bv evaluated on one ternary sequence.

    All quantities are exact integers; ``slack = disc*bv - l1`` and
    ``sign_changes`` counts the changes among the nonzero entries (the
    zero-cancelled sequence has variation exactly twice that count).
    """

    l1: int
    disc: int
    bv: int
    holds: bool
    slack: int
    sign_changes: int

    def to_dict(self):
        return {
            "l1": self.l1,
            "disc": self.disc,
            "bv": self.bv,
            "holds": self.holds,
            "slack": self.slack,
            "sign_changes": self.sign_changes,
        }


def heisenberg_check(values, tol=DEFAULT_TOL) -> HeisenbergReport:
    """Evaluate ``l1 <= disc * bv`` for a non-constant ternary sequence.

    Entries must lie in {-1, 0, 1}; the variation is taken on the sequence
    as given (zeros included), while the 2*S identity lives on the
    zero-cancelled sequence via `sign_changes`.
    """
    arr = _as_values(values)
    if not np.all(np.isin(arr, (-1, 0, 1))):
        raise ValueError("entries must be -1, 0 or 1")
    arr = arr.astype(np.int64)
    if arr.size == 0:
        raise ValueError("constant input has zero variation")
    bv = int(np.abs(np.diff(arr)).sum())
    if bv == 0:
        raise ValueError("constant input has zero variation")
    l1 = int(np.abs(arr).sum())
    c = np.cumsum(arr)
    disc = int(max(c.max(), 0) - min(c.min(), 0))
    product = disc * bv
    return HeisenbergReport(
        l1=l1,
        disc=disc,
        bv=bv,
        holds=l1 <= product + tol,
        slack=product - l1,
        sign_changes=sign_changes(arr),
    )
