"""Closed-form rules: coclass from class numbers, the regular prediction,
exceptions table, commutator structure, and mutual consistency."""

import pytest

from coclasslab.errors import (
    InconsistentPattern,
    IrregularNotPossible,
    MissingTree,
    NotExceptional,
    OutsideRegularRange,
)
from coclasslab.invariants import ati, nearly_homocyclic, parse_log
from coclasslab.rules import (
    TreeTag,
    coclass_from_class_numbers,
    commutator_structure,
    exception_ids,
    exceptions_table,
    in_regular_range,
    infer_tree_tag,
    irregularity_from_params,
    predict_ttt,
)


class TestCoclassRule:
    def test_published_rows(self):
        assert coclass_from_class_numbers(3, 3, 3, 3).coclass == 2
        v = coclass_from_class_numbers(1, 1, 1, 1)
        assert v.coclass == 1 and v.abelian
        assert coclass_from_class_numbers(3, 9, 3, 11).coclass == 8

    def test_order_of_arguments_irrelevant(self):
        assert coclass_from_class_numbers(11, 9, 3, 3) == \
            coclass_from_class_numbers(3, 9, 3, 11)

    def test_coclass_one(self):
        v = coclass_from_class_numbers(2, 2, 2, 4)
        assert v.coclass == 1 and not v.abelian

    def test_strict_mode(self):
        with pytest.raises(InconsistentPattern):
            coclass_from_class_numbers(5, 1, 1, 1, strict=True)
        with pytest.raises(InconsistentPattern):
            coclass_from_class_numbers(4, 2, 2, 1, strict=True)
        with pytest.raises(InconsistentPattern):
            coclass_from_class_numbers(5, 4, 4, 3, strict=True)
        # valid patterns survive strict mode
        coclass_from_class_numbers(5, 4, 3, 3, strict=True)
        coclass_from_class_numbers(4, 2, 2, 2, strict=True)

    def test_rejects_nonpositive(self):
        with pytest.raises(InconsistentPattern):
            coclass_from_class_numbers(0, 1, 1, 1)


class TestPredictTtt:
    def test_coclass2_tree_t54(self):
        tau1, tau2 = predict_ttt(5, 2, 0, TreeTag.T54)
        assert tau1 == (ati(3, 2), ati(2, 1), ati(2, 1), ati(2, 1))
        assert tau2 == ati(2, 2, 1)

    def test_coclass1(self):
        tau1, tau2 = predict_ttt(7, 1, 0)
        assert tau1 == (ati(4, 3), ati(1, 1), ati(1, 1), ati(1, 1))
        assert tau2 == ati(3, 3)

    def test_coclass3(self):
        tau1, tau2 = predict_ttt(5, 3, 0)
        assert tau1 == (ati(3, 2), ati(2, 2), ati(1, 1, 1), ati(1, 1, 1))
        assert tau2 == ati(2, 2, 1, 1)

    def test_tree_variants(self):
        t40 = predict_ttt(5, 2, 0, TreeTag.T40)[0]
        t49 = predict_ttt(5, 2, 0, TreeTag.T49)[0]
        assert t40[2:] == (ati(1, 1, 1), ati(1, 1, 1))
        assert sorted(t49[2:]) == sorted((ati(1, 1, 1), ati(2, 1)))

    def test_defect_shifts_polarization(self):
        k0 = predict_ttt(6, 2, 0, TreeTag.T40)[0][0]
        k1 = predict_ttt(6, 2, 1, TreeTag.T40)[0][0]
        assert k0 == nearly_homocyclic(6)
        assert k1 == nearly_homocyclic(5)

    @pytest.mark.parametrize("c,r,k", [
        (3, 1, 0), (2, 1, 0), (1, 1, 0),      # coclass 1 needs c >= 4
        (3, 2, 0), (4, 2, 1),                  # coclass 2 gaps
        (5, 3, 1),                              # irregular c = r + 2, k = 1
        (4, 3, 1),                              # vacuous: c = r + 1 with k = 1
    ])
    def test_outside_regular_range(self, c, r, k):
        assert not in_regular_range(c, r, k)
        with pytest.raises(OutsideRegularRange):
            predict_ttt(c, r, k, TreeTag.T40 if r == 2 else TreeTag.NOT_APPLICABLE)

    def test_missing_tree(self):
        with pytest.raises(MissingTree):
            predict_ttt(5, 2, 0)
        with pytest.raises(MissingTree):
            predict_ttt(5, 3, 0, TreeTag.T54)

    def test_consistency_with_coclass_rule(self):
        # for the whole regular range the predicted class numbers return
        # the coclass, and the co-polarization log-order is r + 1
        checked = 0
        for r in range(1, 9):
            for c in range(r + 1, 13):
                for k in (0, 1):
                    if not in_regular_range(c, r, k):
                        continue
                    trees = [TreeTag.T40, TreeTag.T49, TreeTag.T54] if r == 2 \
                        else [TreeTag.NOT_APPLICABLE]
                    for tree in trees:
                        tau1, tau2 = predict_ttt(c, r, k, tree)
                        es = [t.log_order for t in tau1]
                        assert coclass_from_class_numbers(*es).coclass == r
                        assert sorted(es, reverse=True)[1] == r + 1
                        assert tau2.log_order == c + r - 2
                        checked += 1
        assert checked > 50


class TestExceptionsTable:
    def test_row_27_4(self):
        row = exceptions_table((27, 4))
        assert row.tau1 == (ati(1, 1), ati(2), ati(2), ati(2))
        assert not row.tau1_regular
        assert row.tau2 == ati(1) and row.tau2_regular

    def test_row_243_4(self):
        row = exceptions_table((243, 4))
        assert row.tau1 == (ati(1, 1, 1), ati(1, 1, 1), ati(2, 1), ati(1, 1, 1))
        assert not row.tau1_regular

    def test_row_729_56(self):
        row = exceptions_table((729, 56))
        assert row.tau2 == ati(1, 1, 1, 1)
        assert not row.tau2_regular

    def test_ranges_share_rows(self):
        assert exceptions_table((81, 8)) == exceptions_table((81, 10))

    def test_not_exceptional(self):
        with pytest.raises(NotExceptional):
            exceptions_table((729, 40))

    def test_id_count(self):
        assert len(exception_ids()) == 29

    def test_tau2_log_orders(self):
        for gid in exception_ids():
            row = exceptions_table(gid)
            n = row.c + row.r
            assert row.tau2.log_order == n - 2


class TestCommutatorStructure:
    def test_irregular_homocyclic(self):
        assert commutator_structure(4, 2, irregular=True) == ati(1, 1, 1, 1)

    def test_regular_heterocyclic(self):
        assert commutator_structure(4, 2) == ati(2, 1, 1)

    def test_abelian_degenerate(self):
        assert commutator_structure(1, 1) == parse_log("()")

    def test_irregular_rejected_when_impossible(self):
        with pytest.raises(IrregularNotPossible):
            commutator_structure(5, 3, irregular=True)   # odd class
        with pytest.raises(IrregularNotPossible):
            commutator_structure(6, 2, irregular=True)   # r != c - 2

    def test_branches_distinguishable_where_both_apply(self):
        # "heterocyclic" refers to the factor pair: the class factor always
        # exceeds the coclass factor.  Where the irregular branch exists
        # (even c, r = c - 2) the two branches give different types.
        for c in range(4, 14, 2):
            r = c - 2
            assert commutator_structure(c, r) != \
                commutator_structure(c, r, irregular=True)

    def test_log_order_is_n_minus_2(self):
        for r in range(1, 7):
            for c in range(r + 1, 12):
                assert commutator_structure(c, r).log_order == c + r - 2


class TestIrregularityParams:
    def test_coclass2(self):
        assert irregularity_from_params(2, -1, 0) is True
        assert irregularity_from_params(2, 0, 1) is False
        assert irregularity_from_params(2, 1, -1) is False

    def test_even_coclass(self):
        assert irregularity_from_params(4, -1, 1) is True
        assert irregularity_from_params(4, 0, 0) is False
        assert irregularity_from_params(6, -1, -1) is True

    def test_odd_coclass_regular(self):
        assert irregularity_from_params(3, -1, 0) is False
        assert irregularity_from_params(5, -1, 0) is False

    def test_needs_coclass_at_least_two(self):
        with pytest.raises(IrregularNotPossible):
            irregularity_from_params(1, -1, 0)


class TestTreeInference:
    def test_roots(self):
        assert infer_tree_tag(predict_ttt(4, 2, 0, TreeTag.T40)[0]) == TreeTag.T40
        assert infer_tree_tag(predict_ttt(4, 2, 0, TreeTag.T49)[0]) == TreeTag.T49
        assert infer_tree_tag(predict_ttt(4, 2, 0, TreeTag.T54)[0]) == TreeTag.T54
