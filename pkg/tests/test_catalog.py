"""Catalog integrity: builders, loading, and per-entry validation.

Full Table-row validation of all entries is the acceptance suite's job;
here we check the builders' contracts, the loader, and a few rows that
exercise each builder family.
"""

import pytest

from coclasslab.catalog import (
    PresentationParams,
    all_entries,
    catalog_ids,
    class3_pc_presentation,
    class4_cover_presentation,
    lookup,
    maximal_class_presentation,
    parametrized_presentation,
    verify_entry,
)
from coclasslab.engine import descriptor, realize
from coclasslab.errors import UnknownId, UnsupportedParams
from coclasslab.invariants import ati
from coclasslab.presentations import render_word
from coclasslab.rules import exception_ids


EXPECTED_IDS = {
    (9, 2), (27, 3), (27, 4), (81, 7), (81, 8), (81, 9), (81, 10),
    (243, 3), (243, 4), (243, 5), (243, 6), (243, 7), (243, 8), (243, 9),
    (243, 28), (243, 29), (243, 30),
    (729, 34), (729, 35), (729, 36), (729, 37), (729, 38), (729, 39),
    (729, 40), (729, 44), (729, 45), (729, 46), (729, 47), (729, 48),
    (729, 49), (729, 54), (729, 56), (729, 57),
}


class TestSection5Builder:
    def test_basic_family_member(self):
        p = parametrized_presentation(PresentationParams(3, 2))
        g = realize(p)
        assert g.order == 3 ** 5

    def test_nilpotency_relator_present(self):
        params = PresentationParams(3, 2)
        p = parametrized_presentation(params)
        from coclasslab.presentations import commutator, wpow
        s2 = commutator((2,), (1,))
        s3 = commutator(s2, (1,))
        s4 = commutator(s3, (1,))
        assert s4 in p.relators

    def test_irregular_candidate(self):
        # rho = beta - 1 != 0 gives the homocyclic commutator subgroup
        p = parametrized_presentation(PresentationParams(4, 2, rho=-1, beta=0))
        g = realize(p)
        assert g.order == 3 ** 6
        assert g.abelian_quotient_invariants(g.derived_subgroup) == ati(1, 1, 1, 1)

    def test_out_of_range(self):
        with pytest.raises(UnsupportedParams):
            PresentationParams(3, 1)
        with pytest.raises(UnsupportedParams):
            PresentationParams(2, 2)
        with pytest.raises(UnsupportedParams):
            PresentationParams(3, 2, alpha=2)

    def test_undefined_series_index_needs_zero_exponent(self):
        # at c = 3 the second relation would touch sigma_2 when rho*beta != 0
        with pytest.raises(UnsupportedParams):
            parametrized_presentation(PresentationParams(3, 2, beta=1, rho=1))


class TestMaximalClassBuilder:
    def test_abelian_root(self):
        g = realize(maximal_class_presentation(2))
        assert g.order == 9

    def test_order_matches_m(self):
        for m in (3, 4, 5):
            g = realize(maximal_class_presentation(m))
            assert g.order == 3 ** m
            d = descriptor(g)
            assert (d.c, d.r) == (m - 1, 1)

    def test_defect_parameter(self):
        d = descriptor(realize(maximal_class_presentation(5, a=1)))
        assert d.k == 1

    def test_param_validation(self):
        with pytest.raises(UnsupportedParams):
            maximal_class_presentation(1)
        with pytest.raises(UnsupportedParams):
            maximal_class_presentation(4, a=1)   # defect needs class >= 4
        with pytest.raises(UnsupportedParams):
            maximal_class_presentation(2, z=1)


class TestPcBuilders:
    def test_class3_form(self):
        g = realize(class3_pc_presentation((0, 0), (0, 0), (0, 0)))
        assert g.order == 243
        assert descriptor(g).c == 3

    def test_cover_form(self):
        g = realize(class4_cover_presentation(
            (0, 2), (1, 0), (0, 0), (1, 0, 0, 1), 0, 0))
        assert g.order == 729
        assert descriptor(g).c == 4

    def test_cover_needs_nontrivial_bottom(self):
        with pytest.raises(UnsupportedParams):
            class4_cover_presentation((0, 0), (0, 0), (0, 0), (0, 0, 0, 0), 0, 0)


class TestCatalogFile:
    def test_all_expected_ids_present(self):
        assert set(catalog_ids()) == EXPECTED_IDS

    def test_covers_every_exceptions_table_id(self):
        assert set(exception_ids()) <= set(catalog_ids())

    def test_unknown_id(self):
        with pytest.raises(UnknownId):
            lookup((729, 99))

    def test_lookup_27_3(self):
        entry = lookup((27, 3))
        assert entry.expected.c == 2 and entry.expected.r == 1
        assert entry.expected_tau1 == (ati(1, 1),) * 4

    def test_lookup_81_8(self):
        entry = lookup((81, 8))
        assert entry.expected_tau1[0] == ati(2, 1)
        assert entry.expected_tau1[1:] == (ati(1, 1),) * 3

    def test_lookup_729_44(self):
        entry = lookup((729, 44))
        assert (entry.expected.c, entry.expected.r, entry.expected.k) == (4, 2, 1)
        assert entry.expected_tau2 == ati(2, 1, 1)

    def test_entries_have_provenance(self):
        for entry in all_entries():
            assert entry.source
            assert entry.evidence

    def test_relators_render(self):
        entry = lookup((243, 5))
        text = render_word(entry.presentation.relators[0],
                           entry.presentation.names)
        assert text

    @pytest.mark.parametrize("gid", [(9, 2), (27, 4), (81, 7), (243, 5), (243, 9)])
    def test_verify_entry_passes(self, gid):
        result = verify_entry(lookup(gid))
        assert result.passed, result.failures

    def test_table_flags(self):
        assert lookup((243, 5)).in_table
        assert not lookup((729, 40)).in_table
        assert not lookup((729, 48)).in_table

    def test_expected_values_agree_with_exceptions_table(self):
        # the two data files must never drift apart
        from coclasslab.rules import exceptions_table
        for gid in exception_ids():
            entry = lookup(gid)
            row = exceptions_table(gid)
            assert entry.in_table
            assert (entry.expected.c, entry.expected.r, entry.expected.k) == \
                (row.c, row.r, row.k), gid
            assert entry.expected_tau1 == row.tau1, gid
            assert entry.expected_tau2 == row.tau2, gid
