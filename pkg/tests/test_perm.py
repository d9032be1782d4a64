import math
import random

import pytest
from hypothesis import given, strategies as st

from conftest import P, all_perms, perm_pairs, perms
from homconj.perm import (
    Permutation,
    PermutationError,
    aligning_permutation,
    compose,
    conjugate_by,
    cycle_type,
    fixed_points,
    format_cycles,
    inverse,
    order_of,
    parse_cycles,
    power,
)


def evaluate(cycles, x):
    """Image of x under a product of disjoint cycles, by direct lookup."""
    for c in cycles:
        if x in c:
            return c[(c.index(x) + 1) % len(c)]
    return x


class TestParse:
    def test_identity(self):
        assert parse_cycles("()", 5) == Permutation.identity(5)
        assert parse_cycles("", 5) == Permutation.identity(5)

    def test_two_three_cycles(self):
        p = parse_cycles("(1 2 3)(4 5 6)", 12)
        assert [p(i) for i in range(1, 13)] == [2, 3, 1, 5, 6, 4, 7, 8, 9, 10, 11, 12]

    def test_comma_separator(self):
        assert parse_cycles("(1,2,3)(4, 5)", 5) == parse_cycles("(1 2 3)(4  5)", 5)

    @pytest.mark.parametrize("text,degree", [
        ("(1 2)(2 3)", 3),   # repeated across cycles
        ("(1 1)", 3),
        ("(1 4)", 3),        # out of range
        ("(0 1)", 3),
        ("(1 2", 3),
        ("1 2)", 3),
        ("(1 a)", 3),
        ("(1,,2)", 3),
        ("(1 (2))", 3),
        ("()(1 2)", 3),
    ])
    def test_errors(self, text, degree):
        with pytest.raises(PermutationError):
            parse_cycles(text, degree)

    def test_bad_image_list(self):
        with pytest.raises(PermutationError):
            Permutation([1, 1, 2])
        with pytest.raises(PermutationError):
            Permutation([])


class TestFormat:
    def test_identity(self):
        assert format_cycles(Permutation.identity(4)) == "()"

    def test_sorted_by_minimum(self):
        assert format_cycles(Permutation([2, 1, 4, 3])) == "(1 2)(3 4)"

    def test_rotates_to_minimum(self):
        assert format_cycles(parse_cycles("(3 1 2)", 3)) == "(1 2 3)"

    @given(perms())
    def test_round_trip(self, p):
        assert parse_cycles(format_cycles(p), p.degree) == p

    @given(perms())
    def test_bijection(self, p):
        assert sorted(p.images) == list(range(1, p.degree + 1))


class TestCompose:
    def test_identity_right(self):
        p = P("(1 3 2)(4 5)", 6)
        assert compose(p, Permutation.identity(6)) == p

    def test_worked_example(self):
        a = [(1, 2, 3), (4, 5, 6)]
        b = [(1, 4), (2, 5), (3, 6)]
        expected = Permutation([evaluate(a, evaluate(b, x)) for x in range(1, 13)])
        got = compose(P("(1 2 3)(4 5 6)", 12), P("(1 4)(2 5)(3 6)", 12))
        assert got == expected
        assert format_cycles(got) == "(1 5 3 4 2 6)"

    def test_involution(self):
        assert compose(P("(1 2)", 2), P("(1 2)", 2)).is_identity()

    def test_degree_mismatch(self):
        with pytest.raises(PermutationError):
            compose(P("(1 2)", 2), P("(1 2)", 3))

    def test_different_degrees_not_equal(self):
        assert P("(1 2)", 2) != P("(1 2)", 3)

    @given(perm_pairs(count=3))
    def test_associative(self, triple):
        p, q, r = triple
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


class TestInverse:
    def test_examples(self):
        assert inverse(Permutation.identity(3)) == Permutation.identity(3)
        assert inverse(P("(1 2 3)", 3)) == P("(1 3 2)", 3)
        assert format_cycles(inverse(P("(1 5 3 4 2 6)", 12))) == "(1 6 2 4 3 5)"

    @given(perms())
    def test_two_sided(self, p):
        e = Permutation.identity(p.degree)
        assert compose(p, inverse(p)) == e == compose(inverse(p), p)


class TestConjugate:
    def test_examples(self):
        assert conjugate_by(P("(1 2)", 3), Permutation.identity(3)).is_identity()
        assert conjugate_by(P("(1 4)(2 5)(3 6)", 6), P("(1 2 3)", 6)) == P("(4 5 6)", 6)
        assert conjugate_by(P("(2 3)", 3), P("(1 2 3)", 3)) == P("(1 3 2)", 3)

    @given(perm_pairs())
    def test_matches_definition(self, pair):
        g, p = pair
        assert conjugate_by(g, p) == compose(compose(g, p), inverse(g))

    @given(perm_pairs())
    def test_preserves_cycle_type_random(self, pair):
        g, p = pair
        assert cycle_type(conjugate_by(g, p)) == cycle_type(p)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_preserves_cycle_type_exhaustive(self, n):
        group = all_perms(n)
        for g in group:
            for p in group:
                assert cycle_type(conjugate_by(g, p)) == cycle_type(p)


class TestCycleType:
    def test_examples(self):
        assert cycle_type(Permutation.identity(6)) == (1,) * 6
        assert cycle_type(P("(1 5 3 4 2 6)", 12)) == (6,) + (1,) * 6
        assert cycle_type(P("(1 2 3)(4 5 6)(7 8)(9 10)(11 12)", 12)) == (3, 3, 2, 2, 2)

    @given(perms())
    def test_sums_to_degree(self, p):
        assert sum(cycle_type(p)) == p.degree


class TestOrder:
    def test_examples(self):
        assert order_of(Permutation.identity(4)) == 1
        assert order_of(P("(1 2 3)(4 5 6)", 6)) == 3
        assert order_of(P("(1 2 3)(4 5)", 5)) == 6

    @given(perms(max_n=8))
    def test_least_exponent(self, p):
        e, acc = 1, p
        while not acc.is_identity():
            acc = compose(acc, p)
            e += 1
        assert order_of(p) == e

    @given(perms(), st.integers(-20, 20))
    def test_power_matches_repeated_product(self, p, e):
        base = p if e >= 0 else inverse(p)
        acc = Permutation.identity(p.degree)
        for _ in range(abs(e)):
            acc = compose(acc, base)
        assert power(p, e) == acc


class TestFixedPoints:
    def test_examples(self):
        assert fixed_points(Permutation.identity(3)) == {1, 2, 3}
        assert fixed_points(P("(1 2 3 4)(5 6 7 8)", 11)) == {9, 10, 11}
        assert fixed_points(P("(1 2)", 2)) == set()


class TestAlign:
    @given(perm_pairs(), st.integers(0, 2**32))
    def test_aligns(self, pair, seed):
        g, src = pair
        dst = conjugate_by(g, src)
        assert conjugate_by(aligning_permutation(src, dst), src) == dst
        lam = aligning_permutation(src, dst, random.Random(seed))
        assert conjugate_by(lam, src) == dst

    def test_type_mismatch(self):
        with pytest.raises(PermutationError):
            aligning_permutation(P("(1 2)", 3), P("(1 2 3)", 3))

    def test_identity_when_equal(self):
        s = P("(1 2 3 4)(5 6 7 8)", 11)
        assert aligning_permutation(s, s).is_identity()


def test_math_lcm_order_agree_on_all_types_small():
    from homconj.perm import partitions, permutation_of_type
    for n in range(1, 9):
        for lengths in partitions(n):
            p = permutation_of_type(lengths)
            assert cycle_type(p) == lengths
            assert order_of(p) == math.lcm(*lengths)
