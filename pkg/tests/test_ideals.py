"""Monomial ideal container and algebra: powers, colons, intersections."""

from __future__ import annotations

import pytest

from cnideals import (
    CapExceeded,
    Caps,
    Graph,
    Monomial,
    MonomialIdeal,
    base_graph_ni,
    colon_by_monomial,
    contains,
    edge_ideal,
    ideal_equals,
    ideal_from_vectors,
    intersect,
    minimalize,
    ni_ideal,
    power,
    power_contains,
)
from cnideals.monomials import parse_monomial as pm


def ideal(ring: str, *gens: str) -> MonomialIdeal:
    return MonomialIdeal(ring.split(), [pm(g) for g in gens])


class TestContainer:
    def test_ring_vars_sorted(self):
        j = MonomialIdeal(["2", "10", "1"], [pm("1 2")])
        assert j.ring_vars == ("1", "2", "10")

    def test_generator_order_preserved(self):
        j = ideal("1 2 3", "2 3", "1 2")
        assert [str(g) for g in map(format, j.generators)]  # formattable
        assert j.generators == (pm("2 3"), pm("1 2"))

    def test_foreign_generator_rejected(self):
        with pytest.raises(ValueError, match="outside the ring"):
            ideal("1 2", "1 3")

    def test_empty_ring_rejected(self):
        with pytest.raises(ValueError):
            MonomialIdeal([], [])

    def test_zero_ideal(self):
        j = MonomialIdeal(["1"], [])
        assert j.is_zero()
        assert not contains(j, pm("1^1"))

    def test_vectors_align_with_ring(self):
        j = ideal("1 2 3", "1 3^2")
        assert j.vectors() == ((1, 0, 2),)

    def test_ideal_from_vectors_round_trip(self):
        j = ideal("1 2 3", "1 3^2", "2")
        assert ideal_from_vectors(j.ring_vars, j.vectors()).generators == j.generators


class TestGraphIdeals:
    def test_ni_generators_one_per_vertex(self, p4):
        j = ni_ideal(p4)
        assert len(j.generators) == 4
        assert j.generators[0] == pm("1 2")          # N[1]
        assert j.generators[1] == pm("1 2 3")        # N[2]

    def test_ni_minimalization_drops_dominated_neighborhoods(self, p4):
        j = minimalize(ni_ideal(p4))
        assert set(j.generators) == {pm("1 2"), pm("3 4")}

    def test_ni_base_graph_counts(self):
        j = ni_ideal(base_graph_ni())
        assert len(j.generators) == 12
        assert len(minimalize(j).generators) == 10

    def test_edge_ideal_generators(self, triangle):
        j = edge_ideal(triangle)
        assert set(j.generators) == {pm("1 2"), pm("1 3"), pm("2 3")}

    def test_edge_ideal_of_edgeless_graph_rejected(self):
        with pytest.raises(ValueError, match="zero ideal"):
            edge_ideal(Graph(["1", "2"], []))

    def test_isolated_vertex_still_a_ring_variable(self):
        g = Graph(["1", "2", "3"], [("1", "2")])
        j = edge_ideal(g)
        assert j.ring_vars == ("1", "2", "3")
        assert j.generators == (pm("1 2"),)


class TestMinimalize:
    def test_removes_multiples_and_duplicates(self):
        j = ideal("1 2 3", "1 2", "1^2 2", "1 2 3", "1 2")
        assert minimalize(j).generators == (pm("1 2"),)

    def test_unit_swallows_everything(self):
        j = MonomialIdeal(["1", "2"], [pm("1^1"), Monomial.unit()])
        assert minimalize(j).generators == (Monomial.unit(),)

    def test_canonical_order_is_lex_on_exponent_vectors(self):
        j = ideal("1 2 3", "1 2", "3^2", "2 3")
        assert minimalize(j).generators == (pm("3^2"), pm("2 3"), pm("1 2"))


class TestPower:
    def test_power_one_is_minimalized_self(self):
        j = ideal("1 2 3", "1 2", "1^2 2")
        assert ideal_equals(power(j, 1), j)

    def test_single_generator_power(self):
        j = ideal("1 2", "1 2")
        assert power(j, 3).generators == (pm("1^3 2^3"),)

    def test_power_two_of_two_generators(self):
        j = ideal("1 2 3", "1 2", "2 3")
        assert set(power(j, 2).generators) == {
            pm("1^2 2^2"),
            pm("1 2^2 3"),
            pm("2^2 3^2"),
        }

    def test_invalid_power_rejected(self):
        with pytest.raises(ValueError):
            power(ideal("1", "1^1"), 0)

    def test_product_cap_enforced(self):
        j = ideal("1 2 3 4 5 6", "1 2", "2 3", "3 4", "4 5", "5 6", "1 6")
        with pytest.raises(CapExceeded):
            power(j, 5, caps=Caps(products=10, witness_candidates=1, intersection_products=1))


class TestMembership:
    def test_contains_divisibility(self):
        j = ideal("1 2 3", "1 2")
        assert contains(j, pm("1 2 3"))
        assert not contains(j, pm("1 3"))
        assert not contains(j, pm("1"))

    def test_power_contains_without_expansion_matches_expanded(self):
        j = ideal("1 2 3", "1 2", "2 3", "1 3")
        jt = power(j, 3)
        for m in (pm("1^3 2^3 3^2"), pm("1^2 2^2 3^2"), pm("1 2 3"), pm("1^4 2 3^4")):
            assert power_contains(j, 3, m) == contains(jt, m)

    def test_power_contains_boundary(self):
        # x1^2 x2^2 x3^2 needs three degree-2 factors: in J^3, not in J^4
        j = ideal("1 2 3", "1 2", "2 3", "1 3")
        m = pm("1^2 2^2 3^2")
        assert power_contains(j, 3, m)
        assert not power_contains(j, 4, m)


class TestColonAndIntersection:
    def test_colon_strips_shared_factors(self):
        j = ideal("1 2 3", "1 2", "2 3")
        q = colon_by_monomial(j, pm("2"))
        assert set(q.generators) == {pm("1^1"), pm("3")}

    def test_colon_by_unit_is_identity(self):
        j = ideal("1 2", "1 2")
        assert ideal_equals(colon_by_monomial(j, Monomial.unit()), j)

    def test_colon_membership_duality(self):
        j = ideal("1 2 3", "1^2 2", "2 3^2")
        f = pm("1 3")
        q = colon_by_monomial(j, f)
        for m in (pm("1 2"), pm("2 3"), pm("2"), pm("3^2")):
            assert contains(q, m) == contains(j, m * f)

    def test_intersect_pairwise_lcm(self):
        a = ideal("1 2 3", "1 2")
        b = ideal("1 2 3", "2 3")
        assert intersect(a, b).generators == (pm("1 2 3"),)

    def test_intersect_is_contained_in_both(self):
        a = ideal("1 2 3", "1 2", "3")
        b = ideal("1 2 3", "2 3", "1^2")
        q = intersect(a, b)
        for m in q.generators:
            assert contains(a, m) and contains(b, m)

    def test_intersection_cap_enforced(self):
        a = ideal("1 2", "1^1", "2", "1 2")
        b = ideal("1 2", "1^2", "2^2", "1 2")
        with pytest.raises(CapExceeded):
            intersect(a, b, caps=Caps(products=1, witness_candidates=1, intersection_products=4))


class TestEquality:
    def test_equal_despite_generator_presentation(self):
        a = ideal("1 2 3", "1 2", "1^2 2")
        b = ideal("1 2 3", "1 2")
        assert ideal_equals(a, b)

    def test_different_ideals(self):
        assert not ideal_equals(ideal("1 2", "1"), ideal("1 2", "2"))

    def test_different_rings_rejected(self):
        with pytest.raises(ValueError, match="different rings"):
            ideal_equals(ideal("1 2", "1^1"), ideal("1 2 3", "1^1"))
