import pytest
from hypothesis import given
from hypothesis import strategies as st

from solvlab.cycles import format_cycles, parse_cycles
from solvlab.errors import CycleSyntaxError, PointOutOfRange, RepeatedPoint
from solvlab.perm import Permutation


class TestParse:
    def test_single_cycle(self):
        p = parse_cycles("(1,2,3)", 5)
        assert p.images == (2, 3, 1, 4, 5)

    def test_disjoint_cycles(self):
        p = parse_cycles("(1,2)(3,4,5)", 5)
        assert p.images == (2, 1, 4, 5, 3)

    def test_identity_form(self):
        assert parse_cycles("()", 3).is_identity()

    def test_empty_input_rejected(self):
        # a blank generator line in a group file is a mistake, not identity
        with pytest.raises(CycleSyntaxError):
            parse_cycles("", 3)
        with pytest.raises(CycleSyntaxError):
            parse_cycles("   ", 3)

    def test_whitespace_tolerated(self):
        p = parse_cycles(" ( 1 , 2 ) ( 4 , 5 ) ", 5)
        assert p.images == (2, 1, 3, 5, 4)

    def test_repeated_point(self):
        with pytest.raises(RepeatedPoint):
            parse_cycles("(1,2)(2,3)", 4)
        with pytest.raises(RepeatedPoint):
            parse_cycles("(1,1)", 3)

    def test_point_out_of_range(self):
        with pytest.raises(PointOutOfRange):
            parse_cycles("(1,7)", 5)
        with pytest.raises(PointOutOfRange):
            parse_cycles("(0,1)", 5)

    def test_syntax_errors(self):
        for text in ["(1,2", "1,2)", "(1 2 3)", "(a,b)", "(1,,2)", ")(", "(1,2)x"]:
            with pytest.raises(CycleSyntaxError):
                parse_cycles(text, 5)


class TestFormat:
    def test_identity_is_unit_cycle(self):
        assert format_cycles(Permutation.identity(4)) == "()"

    def test_fixed_points_omitted(self):
        p = parse_cycles("(2,4)", 5)
        assert format_cycles(p) == "(2,4)"

    def test_cycles_start_at_smallest_moved_point(self):
        p = parse_cycles("(3,1,2)(5,4)", 5)
        assert format_cycles(p) == "(1,2,3)(4,5)"


@given(
    st.integers(min_value=1, max_value=9).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    )
)
def test_round_trip(images):
    p = Permutation(images)
    assert parse_cycles(format_cycles(p), p.degree) == p
