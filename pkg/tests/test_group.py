"""Core group machinery against brute-force oracles and sympy."""

import itertools

import pytest
from sympy.combinatorics import Permutation as SymPerm
from sympy.combinatorics import PermutationGroup as SymGroup

from solvlab.cycles import parse_cycles
from solvlab.errors import NotInGroup, NotNormal, OrderExceedsCap
from solvlab.families import CatalogEntry, FamilySpec
from solvlab.group import (
    PermGroup,
    center,
    centralizer,
    class_of_rep,
    conjugacy_class_reps,
    cyclic_subgroup,
    derived_series,
    derived_subgroup,
    enumerate_elements,
    first_element_of_order,
    is_abelian,
    is_maximal,
    is_normal,
    is_soluble,
    is_subgroup_of,
    normalizer_of_cyclic,
    orbit_of_point,
    point_stabilizer,
    quotient_by_normal,
    structure_tag,
)
from solvlab.perm import Permutation


def brute_closure(degree, gens):
    """Multiplicative closure by BFS, independent of the stabilizer chain."""
    idn = Permutation.identity(degree)
    seen = {idn}
    frontier = [idn]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = a * g
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


def to_sympy(G):
    return SymGroup([SymPerm([i - 1 for i in g.images]) for g in G.generators])


class TestOrderAndMembership:
    def test_a5_order_matches_brute_closure(self, a5):
        closure = brute_closure(a5.degree, list(a5.generators))
        assert len(closure) == 60
        assert a5.order() == 60
        assert set(enumerate_elements(a5)) == closure

    def test_membership(self, a5):
        assert parse_cycles("(1,2,3)", 5) in a5
        assert parse_cycles("(1,2)", 5) not in a5

    def test_enumeration_cap(self, a5):
        with pytest.raises(OrderExceedsCap):
            enumerate_elements(a5, cap=59)

    def test_orders_match_sympy(self):
        for family, params in [
            ("dihedral", (7,)),
            ("symmetric", (5,)),
            ("agl1", (7,)),
            ("psl2", (7,)),
        ]:
            G = CatalogEntry.from_spec(FamilySpec(family, params)).group
            assert G.order() == to_sympy(G).order()


class TestSubgroups:
    def test_orbit_stabilizer(self, a5):
        orbit = orbit_of_point(a5, 1)
        stab = point_stabilizer(a5, 1)
        assert len(orbit) * stab.order() == a5.order()
        assert stab.order() == 12

    def test_subgroup_relation(self, a5, s4):
        a4 = point_stabilizer(a5, 5)
        assert is_subgroup_of(a4, a5)
        assert not is_subgroup_of(a5, a4)

    def test_is_normal(self, s4):
        a4 = PermGroup(
            4, [parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)]
        )
        v4 = PermGroup(
            4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
        )
        s3 = PermGroup(4, [parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)", 4)])
        assert is_normal(s4, a4)
        assert is_normal(s4, v4)
        assert not is_normal(s4, s3)

    def test_is_maximal_brute_force(self, s4):
        # A4 is maximal in S4; V4 is not (V4 < A4 < S4)
        a4 = PermGroup(
            4, [parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)(3,4)", 4)]
        )
        v4 = PermGroup(
            4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
        )
        assert is_maximal(s4, a4)
        assert not is_maximal(s4, v4)

    def test_center_of_sl25(self, sl2_5):
        z = center(sl2_5)
        assert z.order() == 2
        assert is_normal(sl2_5, z)

    def test_centralizer_and_normalizer_brute_force(self, a5):
        x = parse_cycles("(1,2,3,4,5)", 5)
        members = list(enumerate_elements(a5))
        cyc = set(x**k for k in range(5))
        brute_cent = [g for g in members if g * x == x * g]
        brute_norm = [
            g for g in members if {c.conjugate_by(g) for c in cyc} == cyc
        ]
        assert set(enumerate_elements(centralizer(a5, x))) == set(brute_cent)
        assert set(enumerate_elements(normalizer_of_cyclic(a5, x))) == set(
            brute_norm
        )
        assert cyclic_subgroup(a5, x).order() == 5


class TestDerivedSeriesAndSolubility:
    def test_s4_derived_series_brute_force(self, s4):
        members = list(enumerate_elements(s4))
        brute = set()
        for a, b in itertools.product(members, repeat=2):
            brute.add(a.inverse() * b.inverse() * a * b)
        d1 = derived_subgroup(s4)
        closure = brute_closure(4, list(brute))
        assert set(enumerate_elements(d1)) == closure
        orders = [H.order() for H in derived_series(s4)]
        assert orders == [24, 12, 4, 1]

    def test_solubility_matches_sympy(self):
        for family, params in [
            ("symmetric", (4,)),
            ("symmetric", (5,)),
            ("alternating", (4,)),
            ("alternating", (5,)),
            ("dihedral", (9,)),
            ("sl2", (5,)),
            ("psl2", (7,)),
            ("agl1", (11,)),
        ]:
            G = CatalogEntry.from_spec(FamilySpec(family, params)).group
            assert is_soluble(G) == to_sympy(G).is_solvable

    def test_is_abelian(self, a5):
        assert not is_abelian(a5)
        c12 = CatalogEntry.from_spec(FamilySpec("cyclic", (12,))).group
        assert is_abelian(c12)


class TestConjugacyClasses:
    def test_classes_partition_group(self, a5):
        reps = conjugacy_class_reps(a5)
        classes = [class_of_rep(a5, r) for r in reps]
        sizes = [len(c) for c in classes]
        assert sum(sizes) == 60
        assert sorted(sizes) == [1, 12, 12, 15, 20]
        seen = set()
        for c in classes:
            members = set(c)
            assert not (members & seen)
            seen |= members

    def test_class_count_matches_sympy(self, s4, psl2_7):
        for G in (s4, psl2_7):
            reps = conjugacy_class_reps(G)
            assert len(reps) == len(to_sympy(G).conjugacy_classes())

    def test_reps_are_deterministic_and_sorted(self, a5):
        reps = conjugacy_class_reps(a5)
        assert reps == conjugacy_class_reps(a5)
        assert [r.order() for r in reps] == sorted(r.order() for r in reps)

    def test_first_element_of_order(self, a5):
        x = first_element_of_order(a5, 5)
        assert x is not None and x.order() == 5
        assert first_element_of_order(a5, 4) is None


class TestQuotient:
    def test_sl25_mod_center(self, sl2_5):
        z = center(sl2_5)
        quotient, proj = quotient_by_normal(sl2_5, z)
        assert quotient.order() == 60
        assert not is_soluble(quotient)
        assert derived_subgroup(quotient).order() == 60
        x = sl2_5.generators[0]
        assert proj.apply(x) in quotient
        with pytest.raises(NotInGroup):
            proj.apply(parse_cycles("(1,2)", sl2_5.degree))

    def test_quotient_requires_normal(self, s4):
        s3 = PermGroup(4, [parse_cycles("(1,2,3)", 4), parse_cycles("(1,2)", 4)])
        with pytest.raises(NotNormal):
            quotient_by_normal(s4, s3)


class TestStructureTag:
    def test_tags(self):
        cases = [
            (FamilySpec("cyclic", (1,)), "1"),
            (FamilySpec("cyclic", (12,)), "C_12"),
            (FamilySpec("dihedral", (5,)), "D_10"),
            (FamilySpec("symmetric", (3,)), "S_3"),
            (FamilySpec("frobenius_pq", (11, 23)), "C_23:C_11"),
            (FamilySpec("alternating", (5,)), "A_5"),
        ]
        for spec, expected in cases:
            G = CatalogEntry.from_spec(spec).group
            assert structure_tag(G) == expected

    def test_klein_four_tag(self, s4):
        v4 = PermGroup(
            4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
        )
        assert structure_tag(v4) == "C_2×C_2"
