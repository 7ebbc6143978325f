"""Triangular norms and conorms on the unit interval.

Every evaluator accepts scalars or numpy arrays (broadcast elementwise) and
returns a Python float when all arguments are scalars.  Comparisons with 0
and 1 in the drastic operators are exact: inputs are membership degrees
supplied by the user, not accumulated results.
"""
from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .exceptions import OperatorMisuseError, ParseError, RangeError

__all__ = [
    "Family", "Kind", "OperatorSpec", "UnitValue", "as_unit_array",
    "MIN", "PRODUCT", "LUKASIEWICZ", "DRASTIC_PRODUCT", "MAX", "DRASTIC_SUM",
    "TNORMS", "convex", "parse_operator",
    "tnorm_eval", "tconorm_eval", "aggregate_tconorm",
    "Counterexample", "AxiomReport", "check_axioms", "replay_counterexample",
]


class Family(enum.Enum):
    TNORM = "tnorm"
    TCONORM = "tconorm"


class Kind(enum.Enum):
    MIN = "min"
    PRODUCT = "product"
    LUKASIEWICZ = "lukasiewicz"
    DRASTIC_PRODUCT = "drastic-product"
    MAX = "max"
    DRASTIC_SUM = "drastic-sum"
    CONVEX = "convex"

    @property
    def family(self) -> Family:
        if self in (Kind.MIN, Kind.PRODUCT, Kind.LUKASIEWICZ, Kind.DRASTIC_PRODUCT):
            return Family.TNORM
        return Family.TCONORM


class UnitValue(float):
    """A float guaranteed to lie in [0, 1]."""

    def __new__(cls, value):
        v = float(value)
        if math.isnan(v) or not 0.0 <= v <= 1.0:
            raise RangeError(f"membership degree {value!r} is outside [0, 1]")
        return super().__new__(cls, v)


def as_unit_array(values, name="value") -> np.ndarray:
    """Convert *values* to a float array, rejecting NaN and anything outside [0, 1]."""
    arr = np.asarray(values, dtype=float)
    bad = np.isnan(arr) | (arr < 0.0) | (arr > 1.0)
    if bad.any():
        idx = tuple(int(i) for i in np.argwhere(bad)[0])
        where = f" at index {idx}" if idx else ""
        row, column = (idx + (None, None))[:2]
        raise RangeError(f"{name} {arr[idx]!r}{where} is outside [0, 1]", row=row, column=column)
    return arr


@dataclass(frozen=True)
class OperatorSpec:
    """A t-norm or t-conorm; ``lam`` is the weight of ``max`` for CONVEX only."""

    kind: Kind
    lam: float | None = None

    def __post_init__(self):
        if not isinstance(self.kind, Kind):
            object.__setattr__(self, "kind", Kind(self.kind))
        if self.kind is Kind.CONVEX:
            if self.lam is not None:
                lam = float(self.lam)
                if math.isnan(lam) or not 0.0 <= lam <= 1.0:
                    raise RangeError(f"convex weight {self.lam!r} is outside [0, 1]")
                object.__setattr__(self, "lam", lam)
        elif self.lam is not None:
            raise OperatorMisuseError(f"{self.kind.value} takes no weight parameter")

    @property
    def family(self) -> Family:
        return self.kind.family

    @property
    def name(self) -> str:
        if self.kind is Kind.CONVEX:
            return "convex" if self.lam is None else f"convex({self.lam:g})"
        return self.kind.value

    def __str__(self):
        return self.name


MIN = OperatorSpec(Kind.MIN)
PRODUCT = OperatorSpec(Kind.PRODUCT)
LUKASIEWICZ = OperatorSpec(Kind.LUKASIEWICZ)
DRASTIC_PRODUCT = OperatorSpec(Kind.DRASTIC_PRODUCT)
MAX = OperatorSpec(Kind.MAX)
DRASTIC_SUM = OperatorSpec(Kind.DRASTIC_SUM)

TNORMS = (MIN, PRODUCT, LUKASIEWICZ, DRASTIC_PRODUCT)


def convex(lam) -> OperatorSpec:
    return OperatorSpec(Kind.CONVEX, lam)


def parse_operator(name: str, lam=None) -> OperatorSpec:
    """Build a spec from its lowercase name, e.g. ``parse_operator("convex", 0.5)``."""
    try:
        kind = Kind(name.strip().lower())
    except ValueError:
        choices = ", ".join(k.value for k in Kind)
        raise ParseError(f"unknown operator {name!r} (expected one of: {choices})") from None
    return OperatorSpec(kind, lam)


def _require(spec: OperatorSpec, family: Family):
    if not isinstance(spec, OperatorSpec):
        raise OperatorMisuseError(f"expected an OperatorSpec, got {type(spec).__name__}")
    if spec.family is not family:
        raise OperatorMisuseError(f"{spec.name} is a {spec.family.value}, not a {family.value}")
    if spec.kind is Kind.CONVEX and spec.lam is None:
        raise OperatorMisuseError("convex t-conorm requires a weight lam in [0, 1]")


# Kernels below skip validation; callers guarantee float arrays in [0, 1].

def _tnorm(kind: Kind, a, b):
    if kind is Kind.MIN:
        return np.minimum(a, b)
    if kind is Kind.PRODUCT:
        return a * b
    if kind is Kind.LUKASIEWICZ:
        return np.maximum(0.0, a + b - 1.0)
    if kind is Kind.DRASTIC_PRODUCT:
        return np.where(np.maximum(a, b) == 1.0, np.minimum(a, b), 0.0)
    raise OperatorMisuseError(f"{kind.value} is not a t-norm")


def _drastic_sum(a, b):
    return np.where(a == 0.0, b, np.where(b == 0.0, a, 1.0))


def _tconorm(spec: OperatorSpec, a, b):
    kind = spec.kind
    if kind is Kind.MAX:
        return np.maximum(a, b)
    if kind is Kind.DRASTIC_SUM:
        return _drastic_sum(a, b)
    if kind is Kind.CONVEX:
        return spec.lam * np.maximum(a, b) + (1.0 - spec.lam) * _drastic_sum(a, b)
    raise OperatorMisuseError(f"{kind.value} is not a t-conorm")


def _drastic_sum_reduce(values, axis=0):
    nonzero = np.count_nonzero(values > 0.0, axis=axis)
    return np.where(nonzero >= 2, 1.0, np.max(values, axis=axis))


def _aggregate(spec: OperatorSpec, values, axis=0):
    kind = spec.kind
    if kind is Kind.MAX:
        return np.max(values, axis=axis)
    if kind is Kind.DRASTIC_SUM:
        return _drastic_sum_reduce(values, axis)
    if kind is Kind.CONVEX:
        # Direct n-ary form; folding the binary operator is order dependent.
        return (spec.lam * np.max(values, axis=axis)
                + (1.0 - spec.lam) * _drastic_sum_reduce(values, axis))
    raise OperatorMisuseError(f"{kind.value} is not a t-conorm")


def _out(result, *args):
    if all(np.ndim(x) == 0 for x in args):
        return float(result)
    return result


def tnorm_eval(spec: OperatorSpec, a, b):
    """Evaluate the t-norm *spec* at ``(a, b)``.

    >>> tnorm_eval(LUKASIEWICZ, 0.003, 1.0)
    0.003
    """
    _require(spec, Family.TNORM)
    a, b = as_unit_array(a, "a"), as_unit_array(b, "b")
    return _out(_tnorm(spec.kind, a, b), a, b)


def tconorm_eval(spec: OperatorSpec, a, b):
    """Evaluate the t-conorm *spec* at ``(a, b)``.

    CONVEX(lam) is ``lam * max(a, b) + (1 - lam) * drastic_sum(a, b)``.
    """
    _require(spec, Family.TCONORM)
    a, b = as_unit_array(a, "a"), as_unit_array(b, "b")
    return _out(_tconorm(spec, a, b), a, b)


def aggregate_tconorm(spec: OperatorSpec, values, axis=0):
    """Reduce *values* along *axis* with the n-ary extension of a t-conorm.

    The n-ary drastic sum is 0 for all-zero input, the single nonzero value
    when exactly one is nonzero, and 1 otherwise.  CONVEX(lam) mixes the
    n-ary maximum and the n-ary drastic sum directly.
    """
    _require(spec, Family.TCONORM)
    arr = as_unit_array(values, "value")
    if arr.ndim == 0 or arr.shape[axis] == 0:
        raise ValueError("aggregate_tconorm needs at least one value")
    out = _aggregate(spec, arr, axis)
    return float(out) if np.ndim(out) == 0 else out


# --------------------------------------------------------------------------
# Empirical axiom checking


@dataclass(frozen=True)
class Counterexample:
    axiom: str
    args: tuple
    lhs: float
    rhs: float
    gap: float

    def to_dict(self):
        return {"axiom": self.axiom, "args": list(self.args),
                "lhs": self.lhs, "rhs": self.rhs, "gap": self.gap}


@dataclass
class AxiomReport:
    spec: OperatorSpec
    boundary_ok: bool
    commutative_ok: bool
    monotone_ok: bool
    associative_ok: bool
    n_triples: int
    counterexamples: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.boundary_ok and self.commutative_ok and self.monotone_ok and self.associative_ok

    def first(self, axiom):
        return next((c for c in self.counterexamples if c.axiom == axiom), None)

    def find(self, axiom, args):
        args = tuple(float(a) for a in args)
        return next((c for c in self.counterexamples
                     if c.axiom == axiom and c.args == args), None)


def _binary(spec: OperatorSpec):
    if spec.family is Family.TNORM:
        return lambda a, b: _tnorm(spec.kind, a, b)
    return lambda a, b: _tconorm(spec, a, b)


def _evaluate_axiom(f, axiom, identity, a, b, c):
    """Return ``(lhs, rhs, gap)`` arrays; a violation is ``gap > tol``."""
    if axiom == "boundary":
        lhs, rhs = f(a, np.full_like(a, identity)), a
        return lhs, rhs, np.abs(lhs - rhs)
    if axiom == "commutativity":
        lhs, rhs = f(a, b), f(b, a)
        return lhs, rhs, np.abs(lhs - rhs)
    if axiom == "monotone-left":
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        lhs, rhs = f(lo, c), f(hi, c)
        return lhs, rhs, lhs - rhs
    if axiom == "monotone-right":
        lo, hi = np.minimum(a, b), np.maximum(a, b)
        lhs, rhs = f(c, lo), f(c, hi)
        return lhs, rhs, lhs - rhs
    if axiom == "associativity":
        lhs, rhs = f(f(a, b), c), f(a, f(b, c))
        return lhs, rhs, np.abs(lhs - rhs)
    raise ValueError(f"unknown axiom {axiom!r}")


_AXIOMS = ("boundary", "commutativity", "monotone-left", "monotone-right", "associativity")


def _triples(n_samples, seed):
    grid = np.arange(11) / 10.0
    fixed = np.array(list(itertools.product(grid, repeat=3)))
    rng = np.random.default_rng(seed)
    return np.vstack([fixed, rng.random((n_samples, 3))])


def check_axioms(spec: OperatorSpec, n_samples=1000, seed=0, tol=1e-12) -> AxiomReport:
    """Probe the t-norm/t-conorm axioms of *spec* empirically.

    Triples come from the 0.1-step grid on [0, 1]^3 (endpoints included)
    followed by *n_samples* seeded uniform draws.  A violation is recorded
    whenever the two sides differ by more than *tol*; the tolerance absorbs
    round-off in e.g. ``(a*b)*c`` versus ``a*(b*c)``.
    """
    if n_samples < 0:
        raise ValueError("n_samples must be non-negative")
    if spec.kind is Kind.CONVEX and spec.lam is None:
        raise OperatorMisuseError("convex t-conorm requires a weight lam in [0, 1]")
    f = _binary(spec)
    identity = 1.0 if spec.family is Family.TNORM else 0.0
    t = _triples(n_samples, seed)
    a, b, c = t[:, 0], t[:, 1], t[:, 2]
    ok = {}
    found = []
    for axiom in _AXIOMS:
        lhs, rhs, gap = _evaluate_axiom(f, axiom, identity, a, b, c)
        bad = np.flatnonzero(gap > tol)
        ok[axiom] = bad.size == 0
        for k in bad:
            args = (float(a[k]),) if axiom == "boundary" else (
                (float(a[k]), float(b[k])) if axiom == "commutativity"
                else (float(a[k]), float(b[k]), float(c[k])))
            found.append(Counterexample(axiom, args, float(lhs[k]), float(rhs[k]), float(abs(gap[k]))))
    return AxiomReport(
        spec=spec,
        boundary_ok=ok["boundary"],
        commutative_ok=ok["commutativity"],
        monotone_ok=ok["monotone-left"] and ok["monotone-right"],
        associative_ok=ok["associativity"],
        n_triples=len(t),
        counterexamples=found,
    )


def replay_counterexample(spec: OperatorSpec, cx: Counterexample, tol=1e-12) -> bool:
    """Re-evaluate *cx* under *spec*; True when it is still a violation."""
    f = _binary(spec)
    identity = 1.0 if spec.family is Family.TNORM else 0.0
    args = list(cx.args) + [0.0] * (3 - len(cx.args))
    a, b, c = (np.array([v]) for v in args)
    lhs, rhs, gap = _evaluate_axiom(f, cx.axiom, identity, a, b, c)
    return bool(gap[0] > tol) and float(lhs[0]) == cx.lhs and float(rhs[0]) == cx.rhs
