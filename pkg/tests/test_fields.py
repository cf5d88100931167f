"""Field-record ingestion, classification, minimal tables, fixtures."""

import pytest

from coclasslab.errors import RecordError, UnsupportedFamily
from coclasslab.fields import (
    FAMILIES,
    FieldRecord,
    classify,
    discriminant_from_conductor,
    fixture_path,
    load_fixture,
    load_records,
    minimal_table,
    save_records,
)
from coclasslab.invariants import ati, parse_log


def rec(family, label, *atis, **kw):
    return FieldRecord(family=family, label=label,
                       tau=tuple(parse_log(a) for a in atis), **kw)


class TestClassify:
    def test_real_coclass1(self):
        verdict, copol = classify(rec("real-quadratic", 32009,
                                      "(11)", "(21)", "(11)", "(11)"))
        assert verdict.coclass == 1 and not verdict.abelian
        assert copol == 2

    def test_cubic_coclass2(self):
        verdict, _ = classify(rec("cyclic-cubic", 7657,
                                  "(21)", "(21)", "(21)", "(21)"))
        assert verdict.coclass == 2

    def test_sextic_coclass3(self):
        verdict, copol = classify(rec("pure-sextic", 1626,
                                      "(32)", "(111)", "(22)", "(111)"))
        assert verdict.coclass == 3 and copol == 4

    def test_abelian_row(self):
        verdict, _ = classify(rec("cyclic-cubic", 657, "(1)", "(1)", "(1)", "(1)"))
        assert verdict.abelian and verdict.coclass == 1


class TestRecordValidation:
    def test_needs_four_invariants(self):
        with pytest.raises(RecordError):
            FieldRecord("real-quadratic", 5, (ati(1), ati(1), ati(1)))

    def test_rejects_trivial_extension(self):
        with pytest.raises(RecordError):
            rec("real-quadratic", 5, "(1)", "()", "(1)", "(1)")

    def test_rejects_unknown_family(self):
        with pytest.raises(RecordError):
            rec("sextic", 5, "(1)", "(1)", "(1)", "(1)")


class TestFixtures:
    MINIMA = {
        "imaginary-quadratic": {2: 3896, 4: 27156, 6: 423640, 8: 99888340},
        "real-quadratic": {1: 32009, 2: 214712, 3: 710652, 4: 8127208,
                           5: 180527768},
        "cyclic-cubic": {1: 657, 2: 7657, 3: 41839, 4: 231469},
        "pure-sextic": {1: 30, 2: 418, 3: 1626},
    }

    def test_row_counts(self):
        assert len(load_fixture("imaginary-quadratic")) == 4
        assert len(load_fixture("real-quadratic")) == 5
        assert len(load_fixture("cyclic-cubic")) == 5
        assert len(load_fixture("pure-sextic")) == 4

    @pytest.mark.parametrize("family", FAMILIES)
    def test_minimal_tables(self, family):
        records = load_fixture(family)
        table = minimal_table(records, family)
        assert {cc: r.label for cc, r in table.items()} == self.MINIMA[family]

    def test_imaginary_coclasses_all_even(self):
        # data-level check: the bundled imaginary-quadratic rows show only
        # even coclass values
        for r in load_fixture("imaginary-quadratic"):
            assert classify(r)[0].coclass % 2 == 0

    def test_copolarization_on_nonabelian_rows(self):
        for family in FAMILIES:
            for r in load_fixture(family):
                verdict, copol = classify(r)
                if not verdict.abelian:
                    assert copol == verdict.coclass + 1

    def test_strict_mode_accepts_fixtures(self):
        for family in FAMILIES:
            for r in load_fixture(family):
                classify(r, strict=True)

    def test_minimal_table_single_record(self):
        r = rec("real-quadratic", 214712, "(21)", "(21)", "(21)", "(21)")
        assert minimal_table([r]) == {2: r}

    def test_metadata_round_trip(self):
        rows = load_fixture("cyclic-cubic")
        assert rows[0].nu == 2 and rows[0].m == 2
        assert rows[2].ct == "c.21" and rows[2].kappa == "0231"
        assert "graph" in rows[0].graph_or_species


class TestIO:
    def test_save_load_round_trip(self, tmp_path):
        records = load_fixture("real-quadratic") + load_fixture("pure-sextic")
        path = tmp_path / "out.csv"
        save_records(records, path)
        again = load_records(path, strict=True)
        assert again == records

    def test_fixture_file_loads_from_path(self):
        path = fixture_path("imaginary-quadratic")
        records = load_records(path, strict=True)
        assert len(records) == 4

    def test_empty_file(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra\n")
        assert load_records(path) == []

    def test_headerless_file_rejected(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("just,some,stuff\n")
        with pytest.raises(RecordError):
            load_records(path)

    def test_lenient_skips_malformed_row(self, tmp_path, capsys):
        path = tmp_path / "rows.csv"
        path.write_text(
            "family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra\n"
            "real-quadratic,5,,(11),(21),(11),(11),,,,,\n"
            "real-quadratic,6,,(11),(21),(11),,,,,,\n")
        records = load_records(path)
        assert len(records) == 1
        assert "skipping" in capsys.readouterr().out

    def test_strict_raises_on_malformed_row(self, tmp_path):
        path = tmp_path / "rows.csv"
        path.write_text(
            "family,label,factorization,ati1,ati2,ati3,ati4,ct,kappa,nu,m,extra\n"
            "real-quadratic,6,,(11),(21),(11),,,,,,\n")
        with pytest.raises(RecordError, match="line 2"):
            load_records(path, strict=True)


class TestConductors:
    def test_cyclic_cubic(self):
        assert discriminant_from_conductor("cyclic-cubic", 657) == 431649

    def test_pure_sextic(self):
        assert discriminant_from_conductor("pure-sextic", 30) == -21870000
        assert discriminant_from_conductor("pure-sextic", 1) == -27

    def test_unsupported(self):
        with pytest.raises(UnsupportedFamily):
            discriminant_from_conductor("real-quadratic", 5)
