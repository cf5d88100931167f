"""Group engine against independently constructed models.

The oracles here never touch the coset enumerator: the Heisenberg group is
built from unitriangular matrix arithmetic, the order-27 exponent-9 group
from explicit semidirect-product tuples, and the wreath product from base
vectors with a shift.  The engine must reproduce their censuses exactly.
"""

import itertools

import numpy as np
import pytest

from coclasslab.engine import descriptor, realize
from coclasslab.errors import (
    EnumerationOverflow,
    InvalidPresentation,
    WrongAbelianization,
)
from coclasslab.invariants import ati
from coclasslab.presentations import parse_presentation

PRES = {
    "9,2": "gens x y\nx^3\ny^3\n[y,x]",
    "27,3": "gens x y\nx^3\ny^3\n[y,x]^3\n[[y,x],x]\n[[y,x],y]",
    "27,4": "gens x y\nx^9\ny^3\n[y,x] = x^3",
    "81,7": "gens x y\nx^3\ny^3\n[y,(Xyx)]\n[y,(XXyxx)]",
}


def group(key):
    return realize(parse_presentation(PRES[key]))


# --------------------------------------------------------------------------
# independent models
# --------------------------------------------------------------------------

def element_order_mod(mul, identity, e):
    order, acc = 1, e
    while acc != identity:
        acc = mul(acc, e)
        order += 1
    return order


def sd27_mul(p, q):
    """C9 x| C3 with y^-1 x y = x^4: elements (i mod 9, j mod 3)."""
    (i1, j1), (i2, j2) = p, q
    return ((i1 + i2 * pow(4, j1, 9)) % 9, (j1 + j2) % 3)


def wreath_mul(p, q):
    """(C3 x C3 x C3) x| C3 by index shift."""
    (v1, t1), (v2, t2) = p, q
    shifted = tuple(v2[(i - t1) % 3] for i in range(3))
    return (tuple((a + b) % 3 for a, b in zip(v1, shifted)), (t1 + t2) % 3)


class TestRealization:
    def test_elementary_abelian(self):
        g = group("9,2")
        assert g.order == 9
        assert g.nilpotency_class == 1

    def test_heisenberg_order_and_exponent(self):
        g = group("27,3")
        assert g.order == 27
        # matrix model: all 26 nontrivial unitriangular matrices have order 3
        orders = {}
        for a, b, c in itertools.product(range(3), repeat=3):
            m = ((1, a, c), (0, 1, b), (0, 0, 1))
            def mul(u, v):
                return tuple(tuple(sum(u[i][k] * v[k][j] for k in range(3)) % 3
                                   for j in range(3)) for i in range(3))
            ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
            o = element_order_mod(mul, ident, m) if m != ident else 1
            orders[o] = orders.get(o, 0) + 1
        assert orders == {1: 1, 3: 26}
        engine_orders = {}
        for e in range(g.order):
            o = g.element_order(e)
            engine_orders[o] = engine_orders.get(o, 0) + 1
        assert engine_orders == orders

    def test_sd27_model_census(self):
        g = group("27,4")
        assert g.order == 27
        model = {}
        elems = [(i, j) for i in range(9) for j in range(3)]
        for e in elems:
            o = 1 if e == (0, 0) else element_order_mod(sd27_mul, (0, 0), e)
            model[o] = model.get(o, 0) + 1
        engine_orders = {}
        for e in range(27):
            o = g.element_order(e)
            engine_orders[o] = engine_orders.get(o, 0) + 1
        assert engine_orders == model

    def test_wreath_census_and_centre(self):
        g = group("81,7")
        assert g.order == 81
        model = {}
        elems = [(v, t) for v in itertools.product(range(3), repeat=3)
                 for t in range(3)]
        ident = ((0, 0, 0), 0)
        centre = 0
        for e in elems:
            o = 1 if e == ident else element_order_mod(wreath_mul, ident, e)
            model[o] = model.get(o, 0) + 1
            if all(wreath_mul(e, f) == wreath_mul(f, e) for f in elems):
                centre += 1
        engine_orders = {}
        for e in range(81):
            o = g.element_order(e)
            engine_orders[o] = engine_orders.get(o, 0) + 1
        assert engine_orders == model
        assert g.centre.order == centre == 3

    def test_order_bound_enforced(self):
        with pytest.raises(EnumerationOverflow):
            realize(parse_presentation(PRES["81,7"]), order_bound=27)

    def test_infinite_presentation_overflows(self):
        # Z x Z is infinite: must hit the coset cap, not hang
        with pytest.raises(EnumerationOverflow):
            realize(parse_presentation("gens x y\n[y,x]"), order_bound=81)

    def test_non_three_group_rejected(self):
        with pytest.raises(InvalidPresentation):
            realize(parse_presentation("gens x y\nx^2\ny^2\n[y,x]"))


class TestGroupArithmetic:
    def test_associativity_spot_check(self):
        g = group("27,4")
        rng = np.random.default_rng(7)
        for _ in range(200):
            a, b, c = (int(v) for v in rng.integers(0, g.order, 3))
            assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))

    def test_inverses(self):
        g = group("81,7")
        for e in range(g.order):
            assert g.mul(e, int(g.inv[e])) == 0
            assert g.mul(int(g.inv[e]), e) == 0

    def test_word_of_round_trip(self):
        g = group("27,3")
        for e in range(g.order):
            assert g.eval_word(g.word_of(e)) == e

    def test_element_orders_are_3_powers(self):
        g = group("27,4")
        assert {g.element_order(e) for e in range(g.order)} == {1, 3, 9}


class TestSeries:
    def test_lower_central_orders(self):
        assert [s.order for s in group("9,2").lower_central_series] == [9, 1]
        assert [s.order for s in group("27,3").lower_central_series] == [27, 3, 1]
        assert [s.order for s in group("81,7").lower_central_series] == [81, 9, 3, 1]

    def test_upper_central_series_wreath(self):
        g = group("81,7")
        assert [s.order for s in g.upper_central_series] == [1, 3, 9, 81]

    def test_factor_orders_multiply_to_group_order(self):
        for key in PRES:
            g = group(key)
            lcs = g.lower_central_series
            prod = 1
            for a, b in zip(lcs, lcs[1:]):
                prod *= a.order // b.order
            assert prod == g.order

    def test_coclass_counts_bicyclic_factors(self):
        for key in PRES:
            g = group(key)
            lcs = g.lower_central_series
            d = descriptor(g)
            bicyclic = sum(1 for a, b in zip(lcs, lcs[1:]) if a.order // b.order == 9)
            assert bicyclic == d.r


class TestDescriptor:
    @pytest.mark.parametrize("key,expect", [
        ("9,2", (2, 1, 1, 0)),
        ("27,3", (3, 2, 1, 0)),
        ("27,4", (3, 2, 1, 0)),
        ("81,7", (4, 3, 1, 0)),
    ])
    def test_known_descriptors(self, key, expect):
        d = descriptor(group(key))
        assert (d.n, d.c, d.r, d.k) == expect

    def test_derived_accessors(self):
        d = descriptor(group("81,7"))
        assert d.nilpotency_index == d.c + 1
        assert d.cf_invariant == d.r + 1

    def test_wrong_abelianization(self):
        g = realize(parse_presentation("gens x y\nx^3\ny^3\n[y,x]\nxY"))  # cyclic C3
        with pytest.raises(WrongAbelianization):
            descriptor(g)


class TestMaximalSubgroups:
    def test_four_of_index_three_containing_derived(self):
        for key in PRES:
            g = group(key)
            ms = g.maximal_subgroups
            assert len(ms) == 4
            for h in ms:
                assert h.index == 3
                assert g.derived_subgroup <= h

    def test_elementary_case(self):
        ms = group("9,2").maximal_subgroups
        assert [h.order for h in ms] == [3, 3, 3, 3]

    def test_27_4_quotients(self):
        g = group("27,4")
        aqis = sorted(str(g.abelian_quotient_invariants(h)) for h in g.maximal_subgroups)
        assert aqis == ["(1^2)", "(2)", "(2)", "(2)"]

    def test_81_7_quotients(self):
        g = group("81,7")
        aqis = sorted(str(g.abelian_quotient_invariants(h)) for h in g.maximal_subgroups)
        assert aqis == ["(1^2)", "(1^2)", "(1^2)", "(1^3)"]

    def test_canonical_order_descending(self):
        g = group("81,7")
        los = [g.abelian_quotient_invariants(h).log_order for h in g.maximal_subgroups]
        assert los == sorted(los, reverse=True)


class TestNormalSubgroups:
    def test_elementary_abelian_has_six(self):
        assert len(group("9,2").normal_subgroups) == 6

    def test_heisenberg_has_seven(self):
        # oracle: 1, the centre, four maximals, G (order-3 non-central
        # subgroups are not normal; every order-9 subgroup contains Z)
        assert len(group("27,3").normal_subgroups) == 7

    def test_27_4_has_seven(self):
        assert len(group("27,4").normal_subgroups) == 7

    def test_lattice_closure(self):
        g = group("27,3")
        ns = g.normal_subgroups
        keys = {h.key() for h in ns}
        for a in ns:
            for b in ns:
                meet = np.intersect1d(a.elems, b.elems)
                assert meet.tobytes() in {h.elems.tobytes() for h in ns}
                join = g.subgroup(a.gens + b.gens)
                assert join.key() in keys

    def test_lattice_closure_order_243(self):
        from coclasslab.catalog import lookup
        g = realize(lookup((243, 5)).presentation)
        ns = g.normal_subgroups
        keys = {h.key() for h in ns}
        elem_keys = {h.elems.tobytes() for h in ns}
        for a in ns:
            for b in ns:
                assert np.intersect1d(a.elems, b.elems).tobytes() in elem_keys
                assert g.subgroup(a.gens + b.gens).key() in keys

    def test_all_normal(self):
        for h in group("27,4").normal_subgroups:
            assert h.is_normal()


class TestQuotientCensus:
    def test_aqi_of_whole_group(self):
        assert group("27,3").abelianization == ati(1, 1)
        assert group("27,4").abelianization == ati(1, 1)

    def test_aqi_of_derived(self):
        g = group("81,7")
        assert g.abelian_quotient_invariants(g.derived_subgroup) == ati(1, 1)
