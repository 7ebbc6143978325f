"""Randomized verification of the composition inequalities.

Generators draw every membership degree from the dyadic grid ``k / 2**30``.
On that grid ``1 - v`` and ``|u - v|`` are computed without rounding, so the
exact (epsilon-free) comparisons below test the mathematics rather than the
floating-point unit.  Each trial gets its own 64-bit seed derived from the
suite seed, the property index and the trial number, so any failure can be
regenerated from its seed alone.
"""
from __future__ import annotations

import enum
import functools
import time
from dataclasses import asdict, dataclass, field

import numpy as np

from .composition import (FuzzyRelation, FuzzyVector, _max_t, _mix, _operands, _profile_arrays,
                          _s_t, _similarity)
from .data import TABLE1
from .diagnostics import _column_flags
from .exceptions import GenerationError
from .norms import (DRASTIC_SUM, MAX, MIN, TNORMS, Kind, OperatorSpec, _drastic_sum_reduce,
                    _tnorm, check_axioms, convex)

__all__ = [
    "Profile", "GeneratorProfile", "sample_instance", "ColumnCheck",
    "verify_inequality_chain", "verify_lemma2_equality", "verify_theorem1_bound",
    "verify_theorem2_exact", "verify_theorem3_bound", "verify_corollary1_gap",
    "verify_corollary2_gap", "verify_column_dominance", "st_pairs",
    "SuiteConfig", "PropertyResult", "AxiomResult", "SuiteReport", "run_suite",
    "replay_failure",
]

GRID = 2 ** 30


class Profile(enum.Enum):
    UNIFORM = "uniform"
    SATURATED = "saturated"
    DENSE = "dense"
    SPARSE = "sparse"
    SMALLVALUES = "smallvalues"
    ZERO_MIN = "zero-min"


@dataclass(frozen=True)
class GeneratorProfile:
    kind: Profile
    n: int
    m: int
    seed: int = 0


def _level(u, lo=0, hi=GRID):
    """Map uniforms in [0, 1) to dyadic values ``k / GRID`` with ``lo <= k <= hi``."""
    # floor of a 53-bit uniform: exact integers, bias below 2**-23
    return (np.floor(u * (hi - lo + 1)) + lo) / GRID


def _endpoints(v, hit, val, p):
    return np.where(hit < p, (val < 0.5).astype(float), v)


# Each draw consumes one block of uniforms from the trial's own generator;
# the layout fixes which slice feeds which decision.
_VECTOR_FIELDS = {
    Profile.UNIFORM: ("x", "x_hit", "x_val"),
    Profile.SATURATED: ("x", "x_hit", "x_val", "top"),
    Profile.DENSE: ("x", "x_top"),
    Profile.SMALLVALUES: ("x",),
    Profile.SPARSE: ("x", "x_zero"),
    Profile.ZERO_MIN: ("x", "x_zero"),
}
_MATRIX_FIELDS = {
    Profile.SMALLVALUES: ("A",),
}
_COLUMN_FIELDS = {
    Profile.DENSE: ("r1", "r2", "v1", "v2"),
    Profile.SPARSE: ("pick_col", "pick_row", "v"),
    Profile.ZERO_MIN: ("v",),
}


def _layout(kind, n, m):
    fields = [(f, (n,)) for f in _VECTOR_FIELDS[kind]]
    fields += [(f, (n, m)) for f in _MATRIX_FIELDS.get(kind, ("A", "A_hit", "A_val"))]
    fields += [(f, (m,)) for f in _COLUMN_FIELDS.get(kind, ())]
    return fields


def _block_size(kind, n, m):
    return sum(int(np.prod(shape)) for _, shape in _layout(kind, n, m))


def _fields(kind, n, m, U):
    out, k = {}, 0
    for name, shape in _layout(kind, n, m):
        size = int(np.prod(shape))
        out[name] = U[:, k:k + size].reshape((-1,) + shape)
        k += size
    return out


def _build(kind: Profile, n, m, U):
    """Instances for every row of the uniform block *U*: x (T, n), A (T, n, m)."""
    u = _fields(kind, n, m, U)
    T = U.shape[0]
    if kind is Profile.SMALLVALUES:
        half = GRID // 2 - 1
        return _level(u["x"], hi=half), _level(u["A"], hi=half)

    if kind in (Profile.UNIFORM, Profile.SATURATED):
        x = _endpoints(_level(u["x"]), u["x_hit"], u["x_val"], 0.1)
        A = _endpoints(_level(u["A"]), u["A_hit"], u["A_val"], 0.1)
        if kind is Profile.SATURATED:
            x = np.where(u["top"] < 0.5, 1.0, x)
            A = np.where((x < 1.0)[:, :, None], 1.0, A)
        return x, A

    if kind is Profile.DENSE:
        x = np.where(u["x_top"] < 0.1, 1.0, _level(u["x"], lo=1))
        A = _endpoints(_level(u["A"]), u["A_hit"], u["A_val"], 0.2)
        # two distinct rows per column get nonzero entries
        t, j = np.arange(T)[:, None], np.arange(m)[None, :]
        r1 = np.floor(u["r1"] * n).astype(int)
        r2 = (r1 + 1 + np.floor(u["r2"] * (n - 1)).astype(int)) % n
        A[t, r1, j] = _level(u["v1"], lo=1)
        A[t, r2, j] = _level(u["v2"], lo=1)
        return x, A

    if kind in (Profile.SPARSE, Profile.ZERO_MIN):
        zero_min = kind is Profile.ZERO_MIN
        x = _level(u["x"], lo=1, hi=GRID - 1 if zero_min else GRID)
        x = np.where(u["x_zero"] < 0.5, 0.0, x)
        A = _endpoints(_level(u["A"], hi=GRID - 1), u["A_hit"], u["A_val"], 0.2)
        live = x > 0.0
        A = np.where(live[:, :, None], 0.0, A)
        if not zero_min:
            # at most one nonzero min per column, in a live row
            count = live.sum(axis=1)
            pick = np.floor(u["pick_row"] * count[:, None])
            rank = np.cumsum(live, axis=1) - 1
            chosen = (live[:, :, None] & (rank[:, :, None] == pick[:, None, :])
                      & (u["pick_col"] < 0.7)[:, None, :])
            A = np.where(chosen, _level(u["v"], lo=1)[:, None, :], A)
        else:
            # keep at least one unsaturated pair per column
            full = (np.maximum(x[:, :, None], A) == 1.0).all(axis=1)
            A[:, 0, :] = np.where(full, _level(u["v"], hi=GRID - 1), A[:, 0, :])
        return x, A

    raise GenerationError(f"unknown profile {kind!r}")


def _satisfies(kind: Profile, x, A):
    """Per instance: does it meet the profile's promise?  Shapes (T, n), (T, n, m)."""
    f = _column_flags(x, A)
    if kind is Profile.SATURATED:
        return f["all_sat"].all(axis=-1)
    if kind is Profile.DENSE:
        return (f["nonzero"] >= 2).all(axis=-1)
    if kind is Profile.SPARSE:
        return (f["nonzero"] <= 1).all(axis=-1)
    if kind is Profile.SMALLVALUES:
        return f["cor1"].all(axis=-1)
    if kind is Profile.ZERO_MIN:
        return f["cor2"].all(axis=-1)
    return np.ones(x.shape[0], dtype=bool)


def _check_sizes(kind, n, m):
    if n < 1 or m < 1:
        raise GenerationError(f"need n, m >= 1, got n={n}, m={m}")
    if kind is Profile.DENSE and n < 2:
        raise GenerationError("DENSE needs at least two rows for two nonzero minima per column")


def _uniforms(seeds, size):
    return np.stack([np.random.default_rng(s).random(size) for s in seeds])


def _draw_batch(kind: Profile, n, m, seeds):
    _check_sizes(kind, n, m)
    x, A = _build(kind, n, m, _uniforms(seeds, _block_size(kind, n, m)))
    ok = _satisfies(kind, x, A)
    if not ok.all():
        bad = seeds[int(np.argmin(ok))]
        raise GenerationError(f"{kind.value} instance failed its own condition (seed {bad})")
    return x, A


def _sample_arrays(profile: GeneratorProfile):
    x, A = _draw_batch(Profile(profile.kind), profile.n, profile.m, [profile.seed])
    return x[0], A[0]


def sample_instance(profile: GeneratorProfile):
    """Deterministically draw ``(x, A)`` satisfying the profile's structural condition."""
    x, A = _sample_arrays(profile)
    return FuzzyVector(x), FuzzyRelation(A)


# --------------------------------------------------------------------------
# Verifiers.  Array kernels return (holds, lhs, rhs) per column; the public
# wrappers validate their inputs first.


@dataclass(frozen=True)
class ColumnCheck:
    """Per-column outcome; columns whose precondition fails are not ``checked``."""

    holds: tuple
    checked: tuple

    @property
    def ok(self) -> bool:
        return all(self.holds)

    def __bool__(self):
        return self.ok


def _chain(x, A, kind):
    bt, bmin, sim = _max_t(kind, x, A), _max_t(Kind.MIN, x, A), _similarity(x, A)
    return (bt <= bmin) & (bmin <= sim), bt, sim


def _lemma2_equality(x, A):
    bmin, sim = _max_t(Kind.MIN, x, A), _similarity(x, A)
    return bmin == sim, bmin, sim


def _theorem1(x, A):
    f = _column_flags(x, A)
    bmin, sim = _max_t(Kind.MIN, x, A), _similarity(x, A)
    upper = _s_t(MIN, DRASTIC_SUM, x, A)
    checked = f["nonzero"] >= 2
    holds = ~checked | ((bmin <= sim) & (sim <= upper))
    return holds, checked, sim, upper


def _theorem2(x, A, tol):
    lam, _, maxmin, sim, sdagg, _ = _profile_arrays(x, A)
    b = _mix(lam, maxmin, sdagg)
    checked = _column_flags(x, A)["nonzero"] >= 2
    holds = ~checked | (np.abs(b - sim) <= tol)
    return holds, checked, b, sim


def st_pairs(lambdas=(0.0, 0.5, 1.0)):
    """Every implemented (t-norm, t-conorm) pair, CONVEX at each weight in *lambdas*."""
    conorms = [MAX, DRASTIC_SUM] + [convex(lam) for lam in lambdas]
    return [(t, s) for t in TNORMS for s in conorms]


def verify_inequality_chain(x, A, t: OperatorSpec) -> tuple:
    """Per column: ``max-t <= max-min <= similarity`` (exact comparison)."""
    x, A = _operands(x, A)
    return tuple(bool(v) for v in _chain(x.values, A.values, t.kind)[0])


def verify_lemma2_equality(x, A) -> tuple:
    """Per column: max-min equals the similarity composition exactly."""
    x, A = _operands(x, A)
    return tuple(bool(v) for v in _lemma2_equality(x.values, A.values)[0])


def verify_theorem1_bound(x, A) -> ColumnCheck:
    """Sandwich ``max-min <= similarity <= drastic-sum of minima`` on qualifying columns.

    Columns with fewer than two nonzero minima are skipped (``checked`` False).
    """
    x, A = _operands(x, A)
    holds, checked, _, _ = _theorem1(x.values, A.values)
    return ColumnCheck(tuple(bool(v) for v in holds), tuple(bool(v) for v in checked))


def verify_theorem2_exact(x, A, tol=1e-12) -> ColumnCheck:
    """Adaptive composition within *tol* of the similarity composition on qualifying columns."""
    x, A = _operands(x, A)
    holds, checked, _, _ = _theorem2(x.values, A.values, tol)
    return ColumnCheck(tuple(bool(v) for v in holds), tuple(bool(v) for v in checked))


def _theorem3(x, A, pairs):
    sim = _similarity(x, A)
    checked = _column_flags(x, A)["nonzero"] <= 1
    holds = np.ones(A.shape[1], dtype=bool)
    for t, s in pairs:
        holds &= ~checked | (_s_t(t, s, x, A) <= sim)
    return holds, checked


def verify_theorem3_bound(x, A, pairs=None) -> ColumnCheck:
    """Every S-t composition stays at or below similarity on columns with <= 1 nonzero min."""
    x, A = _operands(x, A)
    holds, checked = _theorem3(x.values, A.values, pairs or st_pairs())
    return ColumnCheck(tuple(bool(v) for v in holds), tuple(bool(v) for v in checked))


def verify_corollary1_gap(x, A) -> ColumnCheck:
    """Strict ``max-t < similarity`` for every t-norm where ``min > 2*max - 1`` row-wise."""
    x, A = _operands(x, A)
    xv, Av = x.values, A.values
    checked = _column_flags(xv, Av)["cor1"]
    sim = _similarity(xv, Av)
    holds = np.ones(Av.shape[1], dtype=bool)
    for t in TNORMS:
        holds &= ~checked | (_max_t(t.kind, xv, Av) < sim)
    return ColumnCheck(tuple(bool(v) for v in holds), tuple(bool(v) for v in checked))


def verify_corollary2_gap(x, A, pairs=None) -> ColumnCheck:
    """Strict ``S-t < similarity`` for every pair on all-zero-min columns with an unsaturated pair."""
    x, A = _operands(x, A)
    xv, Av = x.values, A.values
    checked = _column_flags(xv, Av)["cor2"]
    sim = _similarity(xv, Av)
    holds = np.ones(Av.shape[1], dtype=bool)
    for t, s in pairs or st_pairs():
        holds &= ~checked | (_s_t(t, s, xv, Av) < sim)
    return ColumnCheck(tuple(bool(v) for v in holds), tuple(bool(v) for v in checked))


def verify_column_dominance(x, A, low, high, t: OperatorSpec) -> bool:
    """``b[low] <= b[high]`` under max-t; guaranteed when column *low* is entrywise below *high*."""
    x, A = _operands(x, A)
    b = _max_t(t.kind, x.values, A.values)
    return bool(b[A.col_index(low)] <= b[A.col_index(high)])


# --------------------------------------------------------------------------
# Suite


@dataclass(frozen=True)
class SuiteConfig:
    trials: int = 10_000
    seed: int = 20240917
    max_n: int = 6
    max_m: int = 6
    axiom_samples: int = 1000
    tol: float = 1e-12
    convex_lambdas: tuple = (0.0, 0.5, 1.0)

    def __post_init__(self):
        if self.trials < 0:
            raise ValueError("trials must be non-negative")
        if self.max_n < 2:
            raise ValueError("max_n must be at least 2 (dense instances need two rows)")
        if self.max_m < 1:
            raise ValueError("max_m must be at least 1")
        if self.axiom_samples < 1:
            raise ValueError("axiom_samples must be at least 1")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        object.__setattr__(self, "convex_lambdas", tuple(float(v) for v in self.convex_lambdas))

    @property
    def pairs(self):
        return st_pairs(self.convex_lambdas)

    def to_dict(self):
        d = asdict(self)
        d["convex_lambdas"] = list(self.convex_lambdas)
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(**d)


@dataclass
class PropertyResult:
    name: str
    profile: str
    trials: int
    failures: int = 0
    first_counterexample: dict | None = None
    paper_backed: bool = True
    seconds: float = 0.0

    def to_dict(self, include_timing=False):
        d = asdict(self)
        if not include_timing:
            d.pop("seconds")
        return d


@dataclass
class AxiomResult:
    operator: str
    boundary_ok: bool
    commutative_ok: bool
    monotone_ok: bool
    associative_ok: bool
    violations: int
    first_counterexamples: dict
    informational: tuple = ()

    @property
    def failed(self) -> bool:
        flags = {"boundary": self.boundary_ok, "commutativity": self.commutative_ok,
                 "monotonicity": self.monotone_ok, "associativity": self.associative_ok}
        return any(not ok for name, ok in flags.items() if name not in self.informational)

    def to_dict(self):
        d = asdict(self)
        d["informational"] = list(self.informational)
        return d


@dataclass
class SuiteReport:
    config: SuiteConfig
    properties: list = field(default_factory=list)
    axioms: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (all(p.failures == 0 for p in self.properties if p.paper_backed)
                and not any(a.failed for a in self.axioms))

    def property(self, name) -> PropertyResult:
        for p in self.properties:
            if p.name == name:
                return p
        raise KeyError(name)

    def to_text(self):
        cfg = self.config
        out = [f"suite: trials={cfg.trials} seed={cfg.seed} max_n={cfg.max_n} max_m={cfg.max_m}"]
        for p in self.properties:
            status = "PASS" if p.failures == 0 else ("FAIL" if p.paper_backed else "INFO")
            out.append(f"  {status} {p.name:<20} {p.profile:<12} {p.failures}/{p.trials} failures"
                       f"  {p.seconds:.2f}s")
        for a in self.axioms:
            flags = " ".join(f"{k}={'ok' if v else 'violated'}" for k, v in (
                ("boundary", a.boundary_ok), ("commutativity", a.commutative_ok),
                ("monotonicity", a.monotone_ok), ("associativity", a.associative_ok)))
            status = "FAIL" if a.failed else ("INFO" if a.violations else "PASS")
            out.append(f"  {status} axioms {a.operator:<16} {flags}")
            for axiom, cx in a.first_counterexamples.items():
                out.append(f"       {axiom}: args={cx['args']} lhs={cx['lhs']:.6f} "
                           f"rhs={cx['rhs']:.6f} gap={cx['gap']:.6f}")
        out.append("result: " + ("passed" if self.passed else "FAILED"))
        return "\n".join(out) + "\n"

    def to_dict(self, include_timing=False):
        return {
            "config": self.config.to_dict(),
            "passed": self.passed,
            "properties": [p.to_dict(include_timing) for p in self.properties],
            "axioms": [a.to_dict() for a in self.axioms],
        }


def _trial_seeds(base, prop_index, trials):
    ss = np.random.SeedSequence(entropy=base, spawn_key=(prop_index,))
    return [int(v) for v in ss.generate_state(trials, dtype=np.uint64)]


def _sizes(seed, min_n, max_n, max_m):
    return min_n + seed % (max_n - min_n + 1), 1 + (seed >> 32) % max_m


def _first_bad(holds):
    """Index of the first False entry, row-major for 2-d input, or None."""
    if holds.all():
        return None
    idx = np.argwhere(~holds)[0]
    return tuple(int(i) for i in idx) if idx.size > 1 else int(idx[0])


def _tnorm_stack(x, A):
    """Pairwise tables for every t-norm in ``TNORMS`` order, shape (4, ..., n, m)."""
    xc = x[..., :, None]
    return np.stack([_tnorm(t.kind, xc, A) for t in TNORMS])


@functools.lru_cache(maxsize=None)
def _pair_weights(lambdas):
    pairs = st_pairs(lambdas)
    order = {t.kind: k for k, t in enumerate(TNORMS)}
    ti = np.array([order[t.kind] for t, _ in pairs])
    w_max = np.array([1.0 if s.kind is Kind.MAX else 0.0 if s.kind is Kind.DRASTIC_SUM
                      else s.lam for _, s in pairs])
    w_sd = np.array([0.0 if s.kind is Kind.MAX else 1.0 if s.kind is Kind.DRASTIC_SUM
                     else 1.0 - s.lam for _, s in pairs])
    names = tuple(f"{s.name}/{t.name}" for t, s in pairs)
    return ti, w_max, w_sd, names


def _st_matrix(x, A, lambdas):
    """All S-t compositions at once, shape (pairs, ..., m); rows match ``st_pairs(lambdas)``.

    Each row equals ``_s_t(t, s, x, A)`` bit for bit: MAX is ``1*max + 0*sd``,
    DRASTIC_SUM ``0*max + 1*sd`` and CONVEX the same mix as its n-ary form.
    """
    ti, w_max, w_sd, names = _pair_weights(lambdas)
    tables = _tnorm_stack(x, A)
    mx = np.max(tables, axis=-2)
    sd = _drastic_sum_reduce(tables, axis=-2)
    shape = (-1,) + (1,) * (mx.ndim - 1)
    return w_max.reshape(shape) * mx[ti] + w_sd.reshape(shape) * sd[ti], names


# Extra per-trial randomness, drawn from a generator keyed by seed ^ salt.
_AUX = {
    "max_t_monotone": (0x5DEECE66D, lambda n: n),
    "lemma2b_necessity": (0xB5297A4D, lambda n: 1 + 2 * n),
}


def _aux(name, seeds, n):
    if name not in _AUX:
        return None
    salt, size = _AUX[name]
    return _uniforms([s ^ salt for s in seeds], size(n))


def _upper(x, u):
    # x2 >= x entrywise, still on the dyadic grid
    return x + np.floor((1.0 - x) * u * GRID) / GRID


def _unsaturate(x, A, u):
    """Break every saturated pair of one column per instance, keeping the others saturated.

    Returns the perturbed pair and a (T, m) mask of the chosen column.
    """
    n, m = A.shape[-2:]
    j0 = np.floor(u[:, 0] * m).astype(int)
    top = x == 1.0
    A = np.where(top[:, :, None], 1.0, A)
    x = np.where(top, _level(u[:, 1:1 + n], hi=GRID - 1), x)
    col = np.arange(m)[None, :] == j0[:, None]
    A = np.where(col[:, None, :], _level(u[:, 1 + n:], hi=GRID - 1)[:, :, None], A)
    return x, A, col


# Each check maps a batch x (T, n), A (T, n, m) to arrays of shape (K, T, m):
# holds, lhs, rhs, with K the operators it sweeps (names, or None for one).

_NO_OP = None
_TNORM_NAMES = tuple(t.name for t in TNORMS)


def _c_chain(x, A, aux, cfg):
    bt = np.max(_tnorm_stack(x, A), axis=-2)
    bmin, sim = bt[0], _similarity(x, A)
    first = bt <= bmin
    holds = first & (bmin <= sim)
    return holds, np.where(first, bmin, bt), np.where(first, sim, bmin), _TNORM_NAMES


def _c_monotone(x, A, aux, cfg):
    x2 = _upper(x, aux)
    lo = np.max(_tnorm_stack(x, A), axis=-2)
    hi = np.max(_tnorm_stack(x2, A), axis=-2)
    return lo <= hi, lo, hi, _TNORM_NAMES


def _c_lemma2a(x, A, aux, cfg):
    bmin, sim = _max_t(Kind.MIN, x, A), _similarity(x, A)
    return (bmin == sim)[None], bmin[None], sim[None], ("min",)


def _c_lemma2b(x, A, aux, cfg):
    xp, Ap, col = _unsaturate(x, A, aux)
    bmin, sim = _max_t(Kind.MIN, xp, Ap), _similarity(xp, Ap)
    sat = _column_flags(xp, Ap)["has_sat"]
    holds = ~col | (~sat & (bmin < sim))
    return holds[None], bmin[None], sim[None], ("min",)


def _c_theorem1(x, A, aux, cfg):
    checked = _column_flags(x, A)["nonzero"] >= 2
    bmin, sim = _max_t(Kind.MIN, x, A), _similarity(x, A)
    upper = _s_t(MIN, DRASTIC_SUM, x, A)
    holds = ~checked | ((bmin <= sim) & (sim <= upper))
    return holds[None], sim[None], upper[None], _NO_OP


def _c_theorem2(x, A, aux, cfg):
    lam, _, maxmin, sim, sdagg, _ = _profile_arrays(x, A)
    b = _mix(lam, maxmin, sdagg)
    checked = _column_flags(x, A)["nonzero"] >= 2
    holds = ~checked | (np.abs(b - sim) <= cfg.tol)
    return holds[None], b[None], sim[None], _NO_OP


def _c_theorem3(x, A, aux, cfg):
    sim = _similarity(x, A)
    B, names = _st_matrix(x, A, cfg.convex_lambdas)
    return B <= sim, B, np.broadcast_to(sim, B.shape), names


def _c_corollary1(x, A, aux, cfg):
    sim = _similarity(x, A)
    bt = np.max(_tnorm_stack(x, A), axis=-2)
    return bt < sim, bt, np.broadcast_to(sim, bt.shape), _TNORM_NAMES


def _c_corollary2(x, A, aux, cfg):
    sim = _similarity(x, A)
    B, names = _st_matrix(x, A, cfg.convex_lambdas)
    return B < sim, B, np.broadcast_to(sim, B.shape), names


def _c_dominance(x, A, aux, cfg):
    bt = np.max(_tnorm_stack(x, A), axis=-2)
    lo, hi = bt[..., :1], bt[..., 3:4]
    return lo <= hi, lo, hi, _TNORM_NAMES


# name, generator profile (None: fixed relation), check
PROPERTIES = (
    ("lemma1_chain", Profile.UNIFORM, _c_chain),
    ("max_t_monotone", Profile.UNIFORM, _c_monotone),
    ("lemma2a_equality", Profile.SATURATED, _c_lemma2a),
    ("lemma2b_necessity", Profile.SATURATED, _c_lemma2b),
    ("theorem1_sandwich", Profile.DENSE, _c_theorem1),
    ("theorem2_exact", Profile.DENSE, _c_theorem2),
    ("theorem3_bound", Profile.SPARSE, _c_theorem3),
    ("corollary1_gap", Profile.SMALLVALUES, _c_corollary1),
    ("corollary2_gap", Profile.ZERO_MIN, _c_corollary2),
    ("table1_dominance", None, _c_dominance),
)
_BY_NAME = {name: (i, prof, check) for i, (name, prof, check) in enumerate(PROPERTIES)}


def _batch(name, seeds, n, m, cfg):
    _, prof, _ = _BY_NAME[name]
    if prof is None:
        x = _uniforms(seeds, TABLE1.shape[0])
        return x, np.broadcast_to(TABLE1.values, (len(seeds),) + TABLE1.shape)
    return _draw_batch(prof, n, m, seeds)


def _failure(name, x, A, aux, t, found, cfg):
    """Record for trial *t* of a checked batch."""
    holds, lhs, rhs, ops = found
    k, j = _first_bad(holds[:, t])
    rec = {"x": x[t].tolist(), "A": np.asarray(A[t]).tolist(), "column": j,
           "lhs": float(lhs[k, t, j]), "rhs": float(rhs[k, t, j])}
    if ops is not None:
        rec["operator"] = ops[k]
    if name == "max_t_monotone":
        rec["x_upper"] = _upper(x[t:t + 1], aux[t:t + 1])[0].tolist()
    if name == "theorem2_exact":
        rec["tol"] = cfg.tol
    return rec


def _run_property(name, cfg):
    index, prof, check = _BY_NAME[name]
    result = PropertyResult(name, prof.value if prof else "table1", cfg.trials)
    start = time.perf_counter()
    seeds = _trial_seeds(cfg.seed, index, cfg.trials)
    min_n = 2 if prof is Profile.DENSE else 1
    groups = {}
    for i, seed in enumerate(seeds):
        size = (0, 0) if prof is None else _sizes(seed, min_n, cfg.max_n, cfg.max_m)
        groups.setdefault(size, []).append(i)
    first = None
    for (n, m), members in groups.items():
        batch_seeds = [seeds[i] for i in members]
        x, A = _batch(name, batch_seeds, n, m, cfg)
        aux = _aux(name, batch_seeds, n)
        found = check(x, A, aux, cfg)
        bad = np.flatnonzero(~found[0].all(axis=(0, 2)))
        result.failures += bad.size
        if bad.size and (first is None or members[bad[0]] < first[0]):
            t = int(bad[0])
            first = (members[t], {"property": name, "seed": batch_seeds[t],
                                  **_failure(name, x, A, aux, t, found, cfg)})
    if first is not None:
        result.first_counterexample = first[1]
    result.seconds = time.perf_counter() - start
    return result


def _run_axioms(spec: OperatorSpec, cfg) -> AxiomResult:
    rep = check_axioms(spec, cfg.axiom_samples, seed=cfg.seed, tol=cfg.tol)
    firsts = {}
    for cx in rep.counterexamples:
        firsts.setdefault(cx.axiom, cx.to_dict())
    # the binary convex mix is not associative for 0 < lam < 1
    informational = ("associativity",) if spec.kind is Kind.CONVEX else ()
    return AxiomResult(spec.name, rep.boundary_ok, rep.commutative_ok, rep.monotone_ok,
                       rep.associative_ok, len(rep.counterexamples), firsts, informational)


def run_suite(config: SuiteConfig | None = None) -> SuiteReport:
    """Run every property sweep and the axiom probes.

    ``config.trials == 0`` gives an empty, passing report.
    """
    cfg = config or SuiteConfig()
    report = SuiteReport(cfg)
    if cfg.trials == 0:
        return report
    for name, *_ in PROPERTIES:
        report.properties.append(_run_property(name, cfg))
    operators = list(TNORMS) + [MAX, DRASTIC_SUM] + [convex(v) for v in cfg.convex_lambdas]
    report.axioms = [_run_axioms(spec, cfg) for spec in operators]
    return report


def replay_failure(record: dict, config: SuiteConfig | None = None) -> tuple:
    """Recompute ``(lhs, rhs)`` of a stored counterexample from its serialized instance.

    Returns None when the instance no longer fails under *config*.
    """
    cfg = config or SuiteConfig()
    name = record["property"]
    _, _, check = _BY_NAME[name]
    x = np.array(record["x"], dtype=float)[None]
    A = np.array(record["A"], dtype=float)[None]
    aux = _aux(name, [record["seed"]], x.shape[1])
    found = check(x, A, aux, cfg)
    if found[0].all():
        return None
    rec = _failure(name, x, A, aux, 0, found, cfg)
    return rec["lhs"], rec["rhs"]
