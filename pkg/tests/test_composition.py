import numpy as np
import pytest
from hypothesis import given

from conftest import (close, instances, loop_drastic_sum, loop_max_t, loop_similarity,
                      loop_similarity_eq3, loop_tnorm, scan_nonzero_mins, unit)
from fuzzyrel import (DRASTIC_PRODUCT, DRASTIC_SUM, LUKASIEWICZ, MAX, MIN, PRODUCT, TNORMS,
                      FuzzyRelation, FuzzyVector, OperatorMisuseError, RangeError, ShapeError,
                      compare_to_oracle, compose_adaptive, compose_max_t, compose_s_t,
                      compose_similarity, convex, lambda_profile, rank_alternatives)
from fuzzyrel import data


class TestContainers:
    def test_vector_is_read_only(self):
        v = FuzzyVector([0.1, 0.2])
        with pytest.raises(ValueError):
            v.values[0] = 0.5

    def test_vector_range(self):
        with pytest.raises(RangeError):
            FuzzyVector([0.1, 1.5])

    def test_relation_range_reports_position(self):
        with pytest.raises(RangeError) as info:
            FuzzyRelation([[0.1, 0.2], [0.3, -0.1]])
        assert (info.value.row, info.value.column) == (1, 1)

    def test_relation_labels(self):
        A = data.TABLE1
        assert A.shape == (3, 4)
        assert A.col_index("M") == 3
        with pytest.raises(IndexError):
            A.col_index("Z")
        with pytest.raises(IndexError):
            A.col_index(4)

    def test_label_length_mismatch(self):
        with pytest.raises(ShapeError):
            FuzzyVector([0.1, 0.2], labels=["a"])

    def test_roundtrip(self):
        A = data.TABLE1
        assert FuzzyRelation.from_dict(A.to_dict()) == A
        v = FuzzyVector([0.5, 0.25], ["a", "b"])
        assert FuzzyVector.from_dict(v.to_dict()) == v

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            compose_max_t([0.1, 0.2], data.TABLE1, MIN)

    def test_operator_family_checked(self):
        with pytest.raises(OperatorMisuseError):
            compose_max_t(data.X_DOT, data.TABLE1, MAX)
        with pytest.raises(OperatorMisuseError):
            compose_s_t(data.X_DOT, data.TABLE1, MIN, PRODUCT)


class TestGoldenTable1:
    # values printed in the worked example, reproduced by the loop reference
    XDOT = {
        "min": [0.003, 0.004, 0.004, 0.004],
        "product": [0.000012, 0.0012, 0.00392, 0.003],
        "lukasiewicz": [0.0, 0.0, 0.0, 0.003],
        "drastic-product": [0.0, 0.0, 0.0, 0.003],
    }
    XDDOT = {
        "min": [0.004, 0.004, 0.004, 0.004],
        "product": [16e-6, 168e-6, 12e-4, 4e-3],
        "lukasiewicz": [0.0, 0.0, 0.0, 0.004],
        "drastic-product": [0.0, 0.0, 0.0, 0.004],
    }

    @pytest.mark.parametrize("t", TNORMS, ids=lambda t: t.name)
    def test_xdot(self, t, table1, xdot):
        got = compose_max_t(xdot, table1, t).tolist()
        assert close(got, self.XDOT[t.name])
        assert close(got, loop_max_t(xdot, table1, t.name))

    @pytest.mark.parametrize("t", TNORMS, ids=lambda t: t.name)
    def test_xddot(self, t, table1, xddot):
        got = compose_max_t(xddot, table1, t).tolist()
        assert close(got, self.XDDOT[t.name])
        assert close(got, loop_max_t(xddot, table1, t.name))

    def test_similarity(self, table1, xdot, xddot):
        assert close(compose_similarity(xdot, table1).tolist(), [0.999, 0.992, 0.902, 0.304])
        got = compose_similarity(xddot, table1).tolist()
        assert close(got, [1.0, 0.991, 0.901, 0.3])
        assert abs(got[2] - data.X_DDOT_PUBLISHED_B) > 0.07

    def test_similarity_labels(self, table1, xdot):
        A = data.TABLE1
        assert compose_similarity(xdot, A).labels == ("P", "S", "B", "M")

    def test_adaptive_xdot(self, table1, xdot):
        b, prof = compose_adaptive(xdot, table1, return_profile=True)
        assert close(b.tolist(), [0.999, 0.992, 0.902, 0.304])
        assert prof.lam[0] == pytest.approx(0.996 / 0.997, abs=1e-12)
        assert not prof.any_degenerate

    def test_adaptive_xddot(self, table1, xddot):
        # every column has two nonzero minima (rows W and V)
        b, prof = compose_adaptive(xddot, table1, return_profile=True)
        assert close(b.tolist(), [1.0, 0.991, 0.901, 0.3])
        assert not prof.any_degenerate

    def test_degenerate_column(self):
        # a single nonzero min: drastic sum equals max, weight defaults to 1
        b, prof = compose_adaptive([0.0, 0.5], [[0.2], [0.25]], return_profile=True)
        assert prof.degenerate == (True,)
        assert prof.lam == (1.0,)
        assert b.tolist() == [0.25]


@given(instances())
def test_max_t_matches_loop(inst):
    x, A = inst
    for t in TNORMS:
        assert compose_max_t(x, A, t).tolist() == loop_max_t(x, A, t.name)


@given(instances())
def test_similarity_matches_both_forms(inst):
    x, A = inst
    got = compose_similarity(x, A).tolist()
    assert got == loop_similarity(x, A)
    # on the dyadic grid the two algebraically equal forms agree exactly
    assert got == loop_similarity_eq3(x, A)


@given(instances())
def test_s_t_matches_loop(inst):
    x, A = inst
    for t in TNORMS:
        got = compose_s_t(x, A, t, DRASTIC_SUM).tolist()
        want = [loop_drastic_sum([loop_tnorm(t.name, xi, a) for xi, a in zip(x, col)])
                for col in zip(*A)]
        assert got == want
        assert compose_s_t(x, A, t, MAX).tolist() == loop_max_t(x, A, t.name)


@given(instances(), unit)
def test_s_t_convex_between_max_and_drastic(inst, lam):
    x, A = inst
    lo = compose_s_t(x, A, MIN, MAX).values
    hi = compose_s_t(x, A, MIN, DRASTIC_SUM).values
    mid = compose_s_t(x, A, MIN, convex(lam)).values
    assert np.all(lo - 1e-15 <= mid) and np.all(mid <= hi + 1e-15)


@given(instances())
def test_adaptive_exact_when_dense(inst):
    x, A = inst
    counts = scan_nonzero_mins(x, A)
    b, prof = compose_adaptive(x, A, return_profile=True)
    sim = loop_similarity(x, A)
    for j, k in enumerate(counts):
        if k >= 2:
            assert abs(b[j] - sim[j]) <= 1e-12
            # with two nonzero minima only maxmin == 1 closes the denominator
            assert prof.degenerate[j] == (prof.maxmin[j] == 1.0)
        else:
            assert prof.degenerate[j]
            assert b[j] == loop_max_t(x, A, "min")[j]


@given(instances())
def test_lambda_in_unit_interval(inst):
    prof = lambda_profile(*inst)
    assert all(0.0 <= v <= 1.0 for v in prof.lam)
    assert all(c <= 1e-12 for c in prof.clamp)
    assert close(prof.max_weight, [1 - v for v in prof.lam], 0)


@given(instances())
def test_adaptive_equals_convex_per_column(inst):
    x, A = inst
    b, prof = compose_adaptive(x, A, return_profile=True)
    for j, w in enumerate(prof.max_weight):
        col = [[row[j]] for row in A]
        want = compose_s_t(x, col, MIN, convex(w))[0]
        assert abs(b[j] - want) <= 1e-12


class TestRanking:
    def test_ties_by_index(self):
        r = rank_alternatives([0.5, 0.9, 0.5, 0.1])
        assert r.order == (1, 0, 2, 3)
        assert r.argmax == 1
        assert r.tie_groups == ((0, 2),)

    def test_labels(self, table1, xdot):
        A = data.TABLE1
        r = rank_alternatives(compose_similarity(xdot, A))
        assert r.ordered_labels == ("P", "S", "B", "M")

    def test_max_t_never_puts_pea_strictly_first(self, table1, xdot):
        for t in TNORMS:
            vals = compose_max_t(xdot, table1, t).values
            assert not all(vals[0] > vals[j] for j in range(1, 4))


class TestCompare:
    def test_identical(self):
        c = compare_to_oracle([0.1, 0.5, 0.3], [0.1, 0.5, 0.3])
        assert c.linf_error == 0.0 and c.argmax_agrees and c.order_agreement == 1.0
        assert c.total_pairs == 3

    def test_reversed(self, table1, xdot):
        sim = compose_similarity(xdot, table1)
        c = compare_to_oracle(compose_max_t(xdot, table1, PRODUCT), sim)
        assert not c.argmax_agrees
        assert c.linf_error == pytest.approx(0.999 - 0.000012, abs=1e-12)
        # product gives [12e-6, 12e-4, 392e-5, 3e-3]; the oracle strictly decreases,
        # so only (B, M) is concordant
        assert c.concordant_pairs == 1
        assert c.order_agreement == pytest.approx(1 / 6)

    def test_ties_are_concordant_only_with_ties(self):
        c = compare_to_oracle([0.2, 0.2], [0.2, 0.2])
        assert c.concordant_pairs == 1
        c = compare_to_oracle([0.2, 0.2], [0.3, 0.2])
        assert c.concordant_pairs == 0

    def test_single_column(self):
        assert compare_to_oracle([0.4], [0.9]).order_agreement == 1.0

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            compare_to_oracle([0.1], [0.1, 0.2])


def test_lukasiewicz_equals_drastic_product_on_xddot(table1, xddot):
    # 0.004 + 1 - 1 is not exactly 0.004 in binary floating point
    assert close(compose_max_t(xddot, table1, LUKASIEWICZ).tolist(),
                 compose_max_t(xddot, table1, DRASTIC_PRODUCT).tolist())



class TestLambdaRules:
    def test_saturated_column_weight_zero(self):
        # sim == maxmin under saturation, so the numerator vanishes
        prof = lambda_profile([1.0, 1.0], [[0.3], [0.5]])
        assert prof.degenerate == (False,) and prof.lam == (0.0,)
        assert compose_adaptive([1.0, 1.0], [[0.3], [0.5]]).tolist() == [0.5]

    def test_all_zero_mins_degenerate(self):
        prof = lambda_profile([0.0, 0.4], [[0.7], [0.0]])
        assert prof.degenerate == (True,) and prof.lam == (1.0,)

    def test_column_p_hand_arithmetic(self, table1, xdot):
        prof = lambda_profile(xdot, table1)
        assert (prof.maxmin[0], prof.sdagg[0]) == (0.003, 1.0)
        assert prof.sim[0] == pytest.approx(0.999, abs=1e-12)
        assert prof.lam[0] == pytest.approx((0.999 - 0.003) / (1 - 0.003), abs=1e-12)
