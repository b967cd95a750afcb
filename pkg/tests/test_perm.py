import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solvlab.errors import DegreeMismatch, MalformedPermutation
from solvlab.perm import Permutation, compose, element_order, inverse, power


def perm(*images):
    return Permutation(images)


@st.composite
def permutations(draw, max_degree=8):
    n = draw(st.integers(min_value=1, max_value=max_degree))
    images = draw(st.permutations(list(range(1, n + 1))))
    return Permutation(images)


class TestConstruction:
    def test_images_round_trip(self):
        p = perm(2, 3, 1)
        assert p.images == (2, 3, 1)
        assert p.degree == 3

    def test_identity(self):
        e = Permutation.identity(4)
        assert e.is_identity()
        assert e.images == (1, 2, 3, 4)

    def test_rejects_non_bijection(self):
        with pytest.raises(MalformedPermutation):
            perm(1, 1, 3)
        with pytest.raises(MalformedPermutation):
            perm(1, 2, 5)
        with pytest.raises(MalformedPermutation):
            Permutation([])

    def test_point_application_is_one_based(self):
        p = perm(2, 3, 1)
        assert p(1) == 2 and p(2) == 3 and p(3) == 1
        with pytest.raises(DegreeMismatch):
            p(0)
        with pytest.raises(DegreeMismatch):
            p(4)


class TestComposition:
    def test_left_to_right_convention(self):
        # (1 2) then (2 3): 1 -> 2 -> 3, so the product maps 1 to 3
        p = perm(2, 1, 3)
        q = perm(1, 3, 2)
        assert (p * q)(1) == 3
        assert compose(p, q).images == (3, 1, 2)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            perm(2, 1) * perm(2, 1, 3)

    def test_conjugation_matches_definition(self):
        p = perm(2, 1, 3, 4)
        g = perm(2, 3, 4, 1)
        expected = g.inverse() * p * g
        assert p.conjugate_by(g) == expected

    def test_power_and_order(self):
        c = perm(2, 3, 4, 5, 1)
        assert c**5 == Permutation.identity(5)
        assert c**-1 == c.inverse()
        assert power(c, 7) == c * c
        assert element_order(c) == 5
        # (1 2 3)(4 5): lcm(3, 2) = 6
        assert perm(2, 3, 1, 5, 4).order() == 6


class TestProperties:
    @given(permutations())
    def test_inverse_round_trip(self, p):
        assert p * p.inverse() == Permutation.identity(p.degree)
        assert inverse(inverse(p)) == p

    @given(permutations(), permutations(), permutations())
    @settings(max_examples=60)
    def test_associativity(self, a, b, c):
        n = max(a.degree, b.degree, c.degree)

        def pad(p):
            return Permutation(p.images + tuple(range(p.degree + 1, n + 1)))

        a, b, c = pad(a), pad(b), pad(c)
        assert (a * b) * c == a * (b * c)

    @given(permutations())
    def test_order_annihilates(self, p):
        assert (p ** p.order()).is_identity()
        assert math.factorial(p.degree) % p.order() == 0

    @given(permutations(), permutations())
    @settings(max_examples=60)
    def test_conjugation_is_homomorphism(self, p, g):
        n = max(p.degree, g.degree)

        def pad(x):
            return Permutation(x.images + tuple(range(x.degree + 1, n + 1)))

        p, g = pad(p), pad(g)
        assert (p * p).conjugate_by(g) == p.conjugate_by(g) * p.conjugate_by(g)
        assert p.conjugate_by(g).order() == p.order()
