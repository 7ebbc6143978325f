"""Direct problem ``b = x o A`` under several compositions.

``x`` has one entry per row of ``A`` and ``b`` one entry per column:

* :func:`compose_max_t`      b_j = max_i t(x_i, a_ij)
* :func:`compose_s_t`        b_j = S_i t(x_i, a_ij) for an n-ary t-conorm S
* :func:`compose_similarity` b_j = max_i (1 - |x_i - a_ij|), the reference
* :func:`compose_adaptive`   per-column convex mix of max and drastic sum over
  the pairwise minima, weighted so that it reproduces the reference whenever
  each column has at least two nonzero minima.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ShapeError
from .norms import (Family, OperatorSpec, _aggregate, _drastic_sum_reduce,
                    _require, _tnorm, as_unit_array)

__all__ = [
    "FuzzyVector", "FuzzyRelation", "LambdaProfile", "Ranking", "ComparisonReport",
    "compose_max_t", "compose_similarity", "compose_s_t", "lambda_profile",
    "compose_adaptive", "rank_alternatives", "compare_to_oracle",
    "LAMBDA_CLAMP_TOL",
]

LAMBDA_CLAMP_TOL = 1e-12


def _labels(labels, length, what):
    if labels is None:
        return None
    labels = tuple(str(s) for s in labels)
    if len(labels) != length:
        raise ShapeError(f"{what} has {len(labels)} labels for {length} entries")
    return labels


class FuzzyVector:
    """Immutable 1-d array of membership degrees with optional labels."""

    __slots__ = ("values", "labels")

    def __init__(self, values, labels=None):
        arr = as_unit_array(values, "vector entry")
        if arr.ndim != 1 or arr.size == 0:
            raise ShapeError(f"a fuzzy vector must be non-empty and 1-d, got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.values = arr
        self.labels = _labels(labels, arr.size, "vector")

    def __len__(self):
        return self.values.size

    def __getitem__(self, i):
        return float(self.values[i])

    def __iter__(self):
        return (float(v) for v in self.values)

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, FuzzyVector):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.values, other.values)

    __hash__ = None

    def __repr__(self):
        if self.labels:
            body = ", ".join(f"{k}={v:g}" for k, v in zip(self.labels, self.values))
        else:
            body = ", ".join(f"{v:g}" for v in self.values)
        return f"FuzzyVector([{body}])"

    def tolist(self):
        return self.values.tolist()

    def to_dict(self):
        return {"values": self.tolist(), "labels": list(self.labels) if self.labels else None}

    @classmethod
    def from_dict(cls, d):
        return cls(d["values"], d.get("labels"))


class FuzzyRelation:
    """Immutable ``n x m`` matrix over [0, 1] with optional row/column labels."""

    __slots__ = ("values", "row_labels", "col_labels")

    def __init__(self, values, row_labels=None, col_labels=None):
        arr = as_unit_array(values, "relation entry")
        if arr.ndim != 2 or 0 in arr.shape:
            raise ShapeError(f"a fuzzy relation must be a non-empty 2-d matrix, got shape {arr.shape}")
        arr = arr.copy()
        arr.flags.writeable = False
        self.values = arr
        self.row_labels = _labels(row_labels, arr.shape[0], "relation rows")
        self.col_labels = _labels(col_labels, arr.shape[1], "relation columns")

    @property
    def shape(self):
        return self.values.shape

    def __array__(self, dtype=None, copy=None):
        return self.values if dtype is None else self.values.astype(dtype)

    def __eq__(self, other):
        if not isinstance(other, FuzzyRelation):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and np.array_equal(self.values, other.values))

    __hash__ = None

    def __repr__(self):
        return f"FuzzyRelation(shape={self.shape}, col_labels={self.col_labels})"

    def col_index(self, j):
        """Resolve a column given by position or label."""
        if isinstance(j, str):
            if not self.col_labels or j not in self.col_labels:
                raise IndexError(f"no column labelled {j!r}")
            return self.col_labels.index(j)
        m = self.shape[1]
        if not -m <= j < m:
            raise IndexError(f"column {j} out of range for {m} columns")
        return j % m

    def to_dict(self):
        return {"values": self.values.tolist(),
                "row_labels": list(self.row_labels) if self.row_labels else None,
                "col_labels": list(self.col_labels) if self.col_labels else None}

    @classmethod
    def from_dict(cls, d):
        return cls(d["values"], d.get("row_labels"), d.get("col_labels"))


def _operands(x, A):
    x = x if isinstance(x, FuzzyVector) else FuzzyVector(x)
    A = A if isinstance(A, FuzzyRelation) else FuzzyRelation(A)
    if len(x) != A.shape[0]:
        raise ShapeError(f"x has {len(x)} entries but A has {A.shape[0]} rows")
    return x, A


# Raw kernels: x of shape (..., n), A of shape (..., n, m), no validation.
# Leading axes are independent instances; results have shape (..., m).

def _max_t(kind, x, A):
    return np.max(_tnorm(kind, x[..., :, None], A), axis=-2)


def _similarity(x, A):
    return np.max(1.0 - np.abs(x[..., :, None] - A), axis=-2)


def _s_t(t, s, x, A):
    return _aggregate(s, _tnorm(t.kind, x[..., :, None], A), axis=-2)


def _profile_arrays(x, A):
    mins = np.minimum(x[..., :, None], A)
    maxmin = np.max(mins, axis=-2)
    sim = _similarity(x, A)
    sdagg = _drastic_sum_reduce(mins, axis=-2)
    den = sdagg - maxmin
    degenerate = den == 0.0
    raw = np.divide(sim - maxmin, den, out=np.ones_like(den), where=~degenerate)
    lam = np.clip(raw, 0.0, 1.0)
    clamp = np.abs(raw - lam)
    return lam, degenerate, maxmin, sim, sdagg, clamp


def _mix(lam, maxmin, sdagg):
    return (1.0 - lam) * maxmin + lam * sdagg


def compose_max_t(x, A, t: OperatorSpec) -> FuzzyVector:
    """``b_j = max_i t(x_i, a_ij)``."""
    _require(t, Family.TNORM)
    x, A = _operands(x, A)
    return FuzzyVector(_max_t(t.kind, x.values, A.values), A.col_labels)


def compose_similarity(x, A) -> FuzzyVector:
    """``b_j = max_i (1 - |x_i - a_ij|)``: best agreement of x with column j."""
    x, A = _operands(x, A)
    return FuzzyVector(_similarity(x.values, A.values), A.col_labels)


def compose_s_t(x, A, t: OperatorSpec, s: OperatorSpec) -> FuzzyVector:
    """Aggregate the pairwise ``t(x_i, a_ij)`` of each column with the n-ary t-conorm *s*."""
    _require(t, Family.TNORM)
    _require(s, Family.TCONORM)
    x, A = _operands(x, A)
    return FuzzyVector(_s_t(t, s, x.values, A.values), A.col_labels)


@dataclass(frozen=True)
class LambdaProfile:
    """Per-column convex weights and the three aggregates that determine them.

    ``lam[j] = (sim[j] - maxmin[j]) / (sdagg[j] - maxmin[j])`` is the share of
    the drastic sum: ``(1 - lam) * maxmin + lam * sdagg == sim``.  Columns where
    the denominator vanishes are ``degenerate`` and get ``lam = 1`` (there
    ``sdagg == maxmin``, so the mix is max-min).  ``clamp`` is the amount by
    which round-off pushed the raw ratio outside [0, 1].
    """

    lam: tuple
    degenerate: tuple
    maxmin: tuple
    sim: tuple
    sdagg: tuple
    clamp: tuple
    labels: tuple | None = None

    def __len__(self):
        return len(self.lam)

    @property
    def max_weight(self):
        """Per-column weight of ``max``, i.e. the CONVEX parameter that reproduces ``sim``."""
        return tuple(1.0 - v for v in self.lam)

    @property
    def any_degenerate(self):
        return any(self.degenerate)

    def to_dict(self):
        return {"lam": list(self.lam), "degenerate": list(self.degenerate),
                "maxmin": list(self.maxmin), "sim": list(self.sim),
                "sdagg": list(self.sdagg), "clamp": list(self.clamp),
                "labels": list(self.labels) if self.labels else None}

    @classmethod
    def from_dict(cls, d):
        labels = d.get("labels")
        return cls(tuple(float(v) for v in d["lam"]), tuple(bool(v) for v in d["degenerate"]),
                   tuple(float(v) for v in d["maxmin"]), tuple(float(v) for v in d["sim"]),
                   tuple(float(v) for v in d["sdagg"]), tuple(float(v) for v in d["clamp"]),
                   tuple(labels) if labels else None)


def lambda_profile(x, A) -> LambdaProfile:
    x, A = _operands(x, A)
    lam, degenerate, maxmin, sim, sdagg, clamp = _profile_arrays(x.values, A.values)
    if clamp.max() > LAMBDA_CLAMP_TOL:
        j = int(clamp.argmax())
        raise ArithmeticError(f"weight for column {j} left [0, 1] by {clamp[j]:.3g}")
    return LambdaProfile(
        lam=tuple(lam.tolist()), degenerate=tuple(bool(d) for d in degenerate),
        maxmin=tuple(maxmin.tolist()), sim=tuple(sim.tolist()),
        sdagg=tuple(sdagg.tolist()), clamp=tuple(clamp.tolist()), labels=A.col_labels,
    )


def compose_adaptive(x, A, return_profile=False):
    """Mix max and drastic sum over the pairwise minima column by column.

    ``b_j = (1 - lam_j) * max_i min(x_i, a_ij) + lam_j * SD_i min(x_i, a_ij)``
    with ``lam_j`` from :func:`lambda_profile`, i.e. column j is aggregated by
    ``convex(1 - lam_j)``.  When column j has two or more
    nonzero minima this equals :func:`compose_similarity` up to round-off.
    Degenerate columns fall back to max-min; inspect them through the profile
    returned with ``return_profile=True``.
    """
    prof = lambda_profile(x, A)
    lam, maxmin, sdagg = (np.array(v) for v in (prof.lam, prof.maxmin, prof.sdagg))
    b = FuzzyVector(np.clip(_mix(lam, maxmin, sdagg), 0.0, 1.0), prof.labels)
    return (b, prof) if return_profile else b


@dataclass(frozen=True)
class Ranking:
    """Alternatives sorted by descending membership, ties by ascending index."""

    order: tuple
    values: tuple
    labels: tuple | None = None
    tie_groups: tuple = ()

    @property
    def argmax(self) -> int:
        return self.order[0]

    @property
    def ordered_labels(self):
        if self.labels is None:
            return None
        return tuple(self.labels[i] for i in self.order)


def rank_alternatives(b) -> Ranking:
    b = b if isinstance(b, FuzzyVector) else FuzzyVector(b)
    vals = b.values
    order = tuple(sorted(range(len(vals)), key=lambda i: (-vals[i], i)))
    groups = {}
    for i in order:
        groups.setdefault(float(vals[i]), []).append(i)
    ties = tuple(tuple(g) for g in groups.values() if len(g) > 1)
    return Ranking(order=order, values=tuple(vals.tolist()), labels=b.labels, tie_groups=ties)


@dataclass(frozen=True)
class ComparisonReport:
    linf_error: float
    argmax_agrees: bool
    order_agreement: float
    concordant_pairs: int
    total_pairs: int

    def to_dict(self):
        return dict(self.__dict__)

    @classmethod
    def from_dict(cls, d):
        return cls(float(d["linf_error"]), bool(d["argmax_agrees"]), float(d["order_agreement"]),
                   int(d["concordant_pairs"]), int(d["total_pairs"]))


def compare_to_oracle(b, oracle) -> ComparisonReport:
    """Quantify how far *b* is from *oracle* and whether it orders alternatives alike.

    A pair of columns is concordant when both vectors put it in the same strict
    order, or both tie it.  A single-column comparison is vacuously concordant.
    """
    b = b if isinstance(b, FuzzyVector) else FuzzyVector(b)
    oracle = oracle if isinstance(oracle, FuzzyVector) else FuzzyVector(oracle)
    if len(b) != len(oracle):
        raise ShapeError(f"cannot compare vectors of length {len(b)} and {len(oracle)}")
    u, v = b.values, oracle.values
    su = np.sign(u[:, None] - u[None, :])
    sv = np.sign(v[:, None] - v[None, :])
    iu = np.triu_indices(len(u), k=1)
    total = int(iu[0].size)
    concordant = int(np.count_nonzero(su[iu] == sv[iu]))
    return ComparisonReport(
        linf_error=float(np.max(np.abs(u - v))),
        argmax_agrees=rank_alternatives(b).argmax == rank_alternatives(oracle).argmax,
        order_agreement=concordant / total if total else 1.0,
        concordant_pairs=concordant,
        total_pairs=total,
    )
