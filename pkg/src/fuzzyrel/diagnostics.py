"""Condition checks that predict how well a composition matches the similarity reference.

Column-level quantities, for column j and rows i:

* saturated pair: ``max(x_i, a_ij) == 1``
* nonzero min:    ``min(x_i, a_ij) > 0``

All-pairs saturation makes max-min exact.  A column with no saturated pair
cannot be reproduced by max-min.  Two or more nonzero minima per column make
the adaptive composition exact.  ``min > 2*max - 1`` on every row gives a
strict gap for every max-t composition, and an all-zero-min column with some
unsaturated pair gives a strict gap for every S-t composition.  Comparisons
are exact; "nonzero" means strictly greater than 0.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .composition import _operands

__all__ = [
    "Regime", "ColumnDiagnosis", "RegimeReport",
    "check_lemma2_sufficient", "check_lemma2_necessary",
    "check_corollary1", "check_corollary2", "diagnose_columns", "classify_regime",
]


class Regime(enum.Enum):
    EXACT_MAXMIN = "exact-maxmin"
    EXACT_ADAPTIVE = "exact-adaptive"
    GAP_ALL_TNORMS = "gap-all-tnorms"
    GAP_ALL_S_T = "gap-all-s-t"
    MIXED = "mixed"


@dataclass(frozen=True)
class ColumnDiagnosis:
    column_index: int
    nonzero_min_count: int
    has_saturated_row: bool
    all_rows_saturated: bool
    corollary1_holds: bool
    corollary2_holds: bool
    theorem1_holds: bool
    theorem3_holds: bool
    label: str | None = None

    @property
    def regime(self) -> Regime:
        if self.all_rows_saturated:
            return Regime.EXACT_MAXMIN
        if self.theorem1_holds:
            return Regime.EXACT_ADAPTIVE
        if self.corollary1_holds:
            return Regime.GAP_ALL_TNORMS
        if self.corollary2_holds:
            return Regime.GAP_ALL_S_T
        return Regime.MIXED

    def to_dict(self):
        d = dict(self.__dict__)
        d["regime"] = self.regime.value
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: v for k, v in d.items() if k != "regime"})


@dataclass(frozen=True)
class RegimeReport:
    columns: tuple
    regime: Regime

    @property
    def column_regimes(self):
        return tuple(c.regime for c in self.columns)

    def to_dict(self):
        return {"regime": self.regime.value, "columns": [c.to_dict() for c in self.columns]}

    @classmethod
    def from_dict(cls, d):
        return cls(tuple(ColumnDiagnosis.from_dict(c) for c in d["columns"]), Regime(d["regime"]))


def _column_flags(x, A):
    """Boolean witnesses per column on raw arrays (no validation).

    Accepts leading batch axes like the composition kernels.
    """
    mins = np.minimum(x[..., :, None], A)
    maxes = np.maximum(x[..., :, None], A)
    sat = maxes == 1.0
    nonzero = np.count_nonzero(mins > 0.0, axis=-2)
    return {
        "nonzero": nonzero,
        "has_sat": sat.any(axis=-2),
        "all_sat": sat.all(axis=-2),
        "cor1": (mins > 2.0 * maxes - 1.0).all(axis=-2),
        "cor2": (~sat).any(axis=-2) & (nonzero == 0),
    }


def _column(A, j):
    try:
        return A.col_index(j)
    except IndexError as exc:
        raise IndexError(str(exc)) from None


def check_lemma2_sufficient(x, A) -> bool:
    """True when every pair ``(x_i, a_ij)`` is saturated, making max-min exact."""
    x, A = _operands(x, A)
    return bool(_column_flags(x.values, A.values)["all_sat"].all())


def check_lemma2_necessary(x, A) -> tuple:
    """Per column: is there at least one saturated pair?

    A False entry means max-min composition cannot equal the similarity
    reference on that column.
    """
    x, A = _operands(x, A)
    return tuple(bool(v) for v in _column_flags(x.values, A.values)["has_sat"])


def check_corollary1(x, A, j) -> bool:
    """True when ``min(x_i, a_ij) > 2*max(x_i, a_ij) - 1`` for every row of column *j*."""
    x, A = _operands(x, A)
    j = _column(A, j)
    col = A.values[:, j]
    mins, maxes = np.minimum(x.values, col), np.maximum(x.values, col)
    return bool((mins > 2.0 * maxes - 1.0).all())


def check_corollary2(x, A, j) -> bool:
    """True when column *j* has an unsaturated pair and all its minima are zero.

    Condition (a) only needs one row with ``max(x_i, a_ij) < 1``; that alone
    keeps the similarity value of the column above zero.
    """
    x, A = _operands(x, A)
    j = _column(A, j)
    col = A.values[:, j]
    some_unsaturated = bool((np.maximum(x.values, col) < 1.0).any())
    all_zero = bool((np.minimum(x.values, col) == 0.0).all())
    return some_unsaturated and all_zero


def diagnose_columns(x, A) -> tuple:
    x, A = _operands(x, A)
    f = _column_flags(x.values, A.values)
    labels = A.col_labels
    out = []
    for j in range(A.shape[1]):
        k = int(f["nonzero"][j])
        out.append(ColumnDiagnosis(
            column_index=j,
            nonzero_min_count=k,
            has_saturated_row=bool(f["has_sat"][j]),
            all_rows_saturated=bool(f["all_sat"][j]),
            corollary1_holds=bool(f["cor1"][j]),
            corollary2_holds=bool(f["cor2"][j]),
            theorem1_holds=k >= 2,
            theorem3_holds=k <= 1,
            label=labels[j] if labels else None,
        ))
    return tuple(out)


def _global_regime(columns) -> Regime:
    if all(c.all_rows_saturated for c in columns):
        return Regime.EXACT_MAXMIN
    if all(c.theorem1_holds for c in columns):
        return Regime.EXACT_ADAPTIVE
    labels = {c.regime for c in columns}
    return labels.pop() if len(labels) == 1 else Regime.MIXED


def classify_regime(x, A) -> RegimeReport:
    """Label each column and the whole instance.

    Column precedence: EXACT_MAXMIN, EXACT_ADAPTIVE, GAP_ALL_TNORMS,
    GAP_ALL_S_T, MIXED.  Globally, all-pairs saturation wins, then two-plus
    nonzero minima in every column; otherwise the shared column label, or
    MIXED when columns disagree.
    """
    columns = diagnose_columns(x, A)
    return RegimeReport(columns, _global_regime(columns))
