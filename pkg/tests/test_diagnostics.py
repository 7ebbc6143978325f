import pytest
from hypothesis import given

from conftest import instances, loop_columns, loop_max_t, loop_similarity, scan_nonzero_mins
from fuzzyrel import (ColumnDiagnosis, Regime, RegimeReport, ShapeError, check_corollary1,
                      check_corollary2, check_lemma2_necessary, check_lemma2_sufficient,
                      classify_regime, data, diagnose_columns)


def scan_column(x, col):
    mins = [min(a, b) for a, b in zip(x, col)]
    maxes = [max(a, b) for a, b in zip(x, col)]
    return {
        "nonzero": sum(1 for v in mins if v > 0),
        "any_sat": any(v == 1.0 for v in maxes),
        "all_sat": all(v == 1.0 for v in maxes),
        "cor1": all(lo > 2 * hi - 1 for lo, hi in zip(mins, maxes)),
        "cor2": any(v < 1.0 for v in maxes) and all(v == 0.0 for v in mins),
    }


def expected_label(f):
    if f["all_sat"]:
        return Regime.EXACT_MAXMIN
    if f["nonzero"] >= 2:
        return Regime.EXACT_ADAPTIVE
    if f["cor1"]:
        return Regime.GAP_ALL_TNORMS
    if f["cor2"]:
        return Regime.GAP_ALL_S_T
    return Regime.MIXED


class TestTable1:
    def test_xdot_is_exact_adaptive(self, table1, xdot):
        rep = classify_regime(xdot, table1)
        assert rep.regime is Regime.EXACT_ADAPTIVE
        assert [c.nonzero_min_count for c in rep.columns] == [2, 3, 3, 3]

    def test_xdot_corollary1_every_column(self, table1, xdot):
        # values near 0 in both x and the small entries: min > 2 max - 1 fails
        # only where some a_ij exceeds 1/2 (B long, M everywhere)
        got = [check_corollary1(xdot, table1, j) for j in range(4)]
        assert got == [True, True, False, False]

    def test_lemma2_on_table1(self, table1, xdot):
        assert not check_lemma2_sufficient(xdot, table1)
        # only melon has a saturated pair (voluminous = 1)
        assert check_lemma2_necessary(xdot, table1) == (False, False, False, True)

    def test_zero_input(self, table1):
        # with x = 0 every min vanishes and melon keeps two unsaturated rows
        x = [0.0, 0.0, 0.0]
        assert [check_corollary2(x, data.TABLE1, j) for j in "PSBM"] == [True] * 4
        # P and S only hold values below 1/2, so the max-t gap takes precedence
        assert [check_corollary1(x, data.TABLE1, j) for j in "PSBM"] == [True, True, False, False]
        rep = classify_regime(x, data.TABLE1)
        assert rep.column_regimes == (Regime.GAP_ALL_TNORMS, Regime.GAP_ALL_TNORMS,
                                      Regime.GAP_ALL_S_T, Regime.GAP_ALL_S_T)
        assert rep.regime is Regime.MIXED
        sim = loop_similarity(x, table1)
        assert sim[3] == pytest.approx(0.3)

    def test_labels(self, xdot):
        rep = classify_regime(xdot, data.TABLE1)
        assert [c.label for c in rep.columns] == ["P", "S", "B", "M"]

    def test_bad_column(self, table1, xdot):
        with pytest.raises(IndexError):
            check_corollary1(xdot, table1, 7)
        with pytest.raises(IndexError):
            check_corollary2(xdot, data.TABLE1, "Q")


class TestRegimes:
    def test_all_saturated(self):
        rep = classify_regime([1.0, 1.0], [[0.3, 0.0], [0.9, 1.0]])
        assert rep.regime is Regime.EXACT_MAXMIN
        assert check_lemma2_sufficient([1.0, 1.0], [[0.3, 0.0], [0.9, 1.0]])

    def test_small_values_gap(self):
        rep = classify_regime([0.2, 0.1], [[0.3], [0.0]])
        assert rep.columns[0].nonzero_min_count == 1
        assert rep.regime is Regime.GAP_ALL_TNORMS

    def test_mixed(self):
        # column 0 exact-adaptive, column 1 neither gap condition
        rep = classify_regime([0.5, 0.5], [[0.5, 0.0], [0.5, 0.9]])
        assert rep.column_regimes == (Regime.EXACT_ADAPTIVE, Regime.MIXED)
        assert rep.regime is Regime.MIXED

    def test_saturation_beats_density(self):
        rep = classify_regime([1.0, 1.0], [[0.5], [0.5]])
        assert rep.columns[0].theorem1_holds
        assert rep.columns[0].regime is Regime.EXACT_MAXMIN

    def test_shape(self):
        with pytest.raises(ShapeError):
            classify_regime([0.1], [[0.1], [0.2]])


@given(instances())
def test_flags_match_scan(inst):
    x, A = inst
    diags = diagnose_columns(x, A)
    for j, col in enumerate(loop_columns(x, A)):
        f = scan_column(x, col)
        d = diags[j]
        assert d.nonzero_min_count == f["nonzero"] == scan_nonzero_mins(x, A)[j]
        assert d.has_saturated_row == f["any_sat"]
        assert d.all_rows_saturated == f["all_sat"]
        assert d.corollary1_holds == f["cor1"] == check_corollary1(x, A, j)
        assert d.corollary2_holds == f["cor2"] == check_corollary2(x, A, j)
        assert d.theorem1_holds == (f["nonzero"] >= 2)
        assert d.theorem3_holds == (f["nonzero"] <= 1)
        assert d.regime is expected_label(f)


@given(instances())
def test_global_regime(inst):
    x, A = inst
    rep = classify_regime(x, A)
    labels = {expected_label(scan_column(x, col)) for col in loop_columns(x, A)}
    if all(c.all_rows_saturated for c in rep.columns):
        assert rep.regime is Regime.EXACT_MAXMIN
    elif all(c.theorem1_holds for c in rep.columns):
        assert rep.regime is Regime.EXACT_ADAPTIVE
    elif len(labels) == 1:
        assert rep.regime is labels.pop()
    else:
        assert rep.regime is Regime.MIXED


@given(instances())
def test_lemma2_consequences(inst):
    x, A = inst
    maxmin = loop_max_t(x, A, "min")
    sim = loop_similarity(x, A)
    if check_lemma2_sufficient(x, A):
        assert maxmin == sim
    for j, ok in enumerate(check_lemma2_necessary(x, A)):
        if not ok:
            assert maxmin[j] < sim[j]


@given(instances())
def test_roundtrip(inst):
    rep = classify_regime(*inst)
    assert RegimeReport.from_dict(rep.to_dict()) == rep
    for c in rep.columns:
        assert ColumnDiagnosis.from_dict(c.to_dict()) == c
