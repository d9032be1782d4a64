import itertools
import random

import pytest

from conftest import P, all_perms
from homconj.centralizer import (
    CapExceededError,
    HClass,
    centralizer_order,
    cycles_action,
    enumerate_centralizer,
    h_class_of,
    in_centralizer,
    sigma_decompose,
)
from homconj.perm import (
    Permutation,
    compose,
    conjugate_by,
    cycle_type,
    partitions,
    permutation_of_type,
)


def count_commuting(sigma):
    """Backtracking count of x with x sigma = sigma x, one point at a time."""
    n = sigma.degree
    x = [0] * (n + 1)
    used = [False] * (n + 1)

    def consistent(p):
        # x(sigma(q)) = sigma(x(q)) wherever both sides are assigned
        for q in (p, ) + tuple(i for i in range(1, n + 1) if sigma(i) == p):
            if x[q] and x[sigma(q)] and x[sigma(q)] != sigma(x[q]):
                return False
        return True

    def go(p):
        if p > n:
            return 1
        total = 0
        for v in range(1, n + 1):
            if not used[v]:
                x[p], used[v] = v, True
                if consistent(p):
                    total += go(p + 1)
                x[p], used[v] = 0, False
        return total

    return go(1)


class TestDecompose:
    def test_identity(self):
        dec = sigma_decompose(Permutation.identity(4))
        assert dec.fixed_points == {1, 2, 3, 4}
        assert dec.blocks == ()

    def test_two_four_cycles_with_fixed_points(self):
        dec = sigma_decompose(P("(1 2 3 4)(5 6 7 8)", 11))
        assert dec.fixed_points == {9, 10, 11}
        assert [(b.d, b.cycles) for b in dec.blocks] == [(4, ((1, 2, 3, 4), (5, 6, 7, 8)))]

    def test_mixed_lengths(self):
        dec = sigma_decompose(P("(1 2 3)(4 5)(6 7)", 7))
        assert dec.fixed_points == set()
        assert [(b.d, b.cycles) for b in dec.blocks] == [(2, ((4, 5), (6, 7))), (3, ((1, 2, 3),))]

    @pytest.mark.parametrize("n", range(1, 8))
    def test_partition_and_reassembly(self, n):
        for lengths in partitions(n):
            sigma = permutation_of_type(lengths)
            g = Permutation(random.Random(n).sample(range(1, n + 1), n))
            sigma = conjugate_by(g, sigma)
            dec = sigma_decompose(sigma)
            supports = [b.support for b in dec.blocks] + [dec.fixed_points]
            assert sum(len(s) for s in supports) == n
            assert frozenset().union(*supports) == set(range(1, n + 1))
            assert [b.d for b in dec.blocks] == sorted({b.d for b in dec.blocks})
            assert dec.sigma == sigma


class TestOrder:
    def test_identity(self):
        assert centralizer_order(sigma_decompose(Permutation.identity(4))) == 24

    def test_four_transpositions(self):
        sigma = P("(1 2)(3 4)(5 6)(7 8)", 8)
        assert count_commuting(sigma) == 384
        assert centralizer_order(sigma_decompose(sigma)) == 384

    def test_two_four_cycles(self):
        sigma = P("(1 2 3 4)(5 6 7 8)", 11)
        assert count_commuting(sigma) == 192
        assert centralizer_order(sigma_decompose(sigma)) == 192


class TestEnumerate:
    def test_s3(self):
        assert set(enumerate_centralizer(sigma_decompose(Permutation.identity(3)))) == set(all_perms(3))

    def test_three_cycle(self):
        got = set(enumerate_centralizer(sigma_decompose(P("(1 2 3)", 3))))
        assert got == {Permutation.identity(3), P("(1 2 3)", 3), P("(1 3 2)", 3)}

    def test_two_transpositions(self):
        got = set(enumerate_centralizer(sigma_decompose(P("(1 2)(3 4)", 4))))
        # the dihedral group <(1 2), (3 4), (1 3)(2 4)>, closed up by hand
        gens = [P("(1 2)", 4), P("(3 4)", 4), P("(1 3)(2 4)", 4)]
        closure = {Permutation.identity(4)}
        while True:
            bigger = closure | {compose(g, x) for g in gens for x in closure}
            if bigger == closure:
                break
            closure = bigger
        assert got == closure and len(got) == 8

    @pytest.mark.parametrize("n", range(1, 7))
    def test_equals_filter_of_sn(self, n):
        group = all_perms(n)
        for lengths in partitions(n):
            sigma = permutation_of_type(lengths)
            dec = sigma_decompose(sigma)
            listed = list(enumerate_centralizer(dec))
            assert len(listed) == len(set(listed)) == centralizer_order(dec)
            assert set(listed) == {x for x in group if compose(x, sigma) == compose(sigma, x)}

    def test_cap(self):
        with pytest.raises(CapExceededError):
            list(enumerate_centralizer(sigma_decompose(Permutation.identity(5)), cap=119))

    def test_deterministic_order(self):
        dec = sigma_decompose(P("(1 2)(3 4)(5)", 6))
        assert list(enumerate_centralizer(dec)) == list(enumerate_centralizer(dec))


class TestInCentralizer:
    def test_examples(self):
        sigma = P("(1 2 3 4)(5 6 7 8)", 11)
        assert in_centralizer(sigma, sigma)
        assert in_centralizer(sigma, P("(1 5)(2 6)(3 7)(4 8)", 11))
        assert not in_centralizer(P("(1 2 3)", 3), P("(1 2)", 3))


class TestCyclesAction:
    sigma = P("(1 2)(3 4)(5 6)(7 8)", 8)
    block = sigma_decompose(sigma).blocks[0]

    def test_quotient_example(self):
        assert cycles_action(self.block, P("(1 3 2 4)(5 7 6 8)", 8)).action == P("(1 2)(3 4)", 4)
        assert cycles_action(self.block, P("(1 3 5 7)(2 4 6 8)", 8)).action == P("(1 2 3 4)", 4)

    def test_identity(self):
        assert cycles_action(self.block, Permutation.identity(8)).action.is_identity()

    def test_rejects_cycle_splitting(self):
        with pytest.raises(ValueError):
            cycles_action(self.block, P("(2 3)", 8))

    @pytest.mark.parametrize("d,k", [(2, 1), (2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
    def test_homomorphism(self, d, k):
        sigma = permutation_of_type([d] * k)
        block = sigma_decompose(sigma).blocks[0]
        cent = list(enumerate_centralizer(sigma_decompose(sigma)))
        bar = {x: cycles_action(block, x).action for x in cent}
        for x, y in itertools.product(cent, repeat=2):
            assert bar[compose(x, y)] == compose(bar[x], bar[y])

    @pytest.mark.parametrize("d,k", [(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
    def test_kernel_is_generated_by_cycles(self, d, k):
        sigma = permutation_of_type([d] * k)
        block = sigma_decompose(sigma).blocks[0]
        kernel = {x for x in enumerate_centralizer(sigma_decompose(sigma))
                  if cycles_action(block, x).action.is_identity()}
        generated = set()
        for exps in itertools.product(range(d), repeat=k):
            x = Permutation.identity(sigma.degree)
            for i, e in enumerate(exps):
                x = compose(x, block.tau(i, e))
            generated.add(x)
        assert kernel == generated

    @pytest.mark.parametrize("d,k", [(2, 4), (3, 2), (4, 2)])
    def test_transitive(self, d, k):
        sigma = permutation_of_type([d] * k)
        block = sigma_decompose(sigma).blocks[0]
        reached = {cycles_action(block, x).action(1) for x in enumerate_centralizer(sigma_decompose(sigma))}
        assert reached == set(range(1, k + 1))


class TestHClass:
    def test_centralizing(self):
        sigma = P("(1 2 3)(4 5)", 5)
        assert h_class_of(sigma, P("(1 3 2)", 5)) == HClass(1)

    def test_reflection(self):
        assert h_class_of(P("(1 2 3)", 3), P("(2 3)", 3)) == HClass(2)
        assert h_class_of(P("(1 2 3)", 3), P("(1 2)", 3)) == HClass(2)

    def test_absent(self):
        assert h_class_of(P("(1 2 3)(4 5)", 5), P("(3 4)", 5)) is None

    @pytest.mark.parametrize("d,k", [(3, 2), (4, 2), (5, 1), (6, 1), (2, 3)])
    def test_exponent_coprime(self, d, k):
        from math import gcd
        sigma = permutation_of_type([d] * k)
        for x in all_perms(d * k):
            h = h_class_of(sigma, x)
            if h is not None:
                assert gcd(h.z, d) == 1
                assert conjugate_by(x, sigma) == sigma ** h.z


def test_random_counts_match_product_formula():
    rng = random.Random(2024)
    for _ in range(50):
        n = rng.randint(1, 9)
        sigma = Permutation(rng.sample(range(1, n + 1), n))
        dec = sigma_decompose(sigma)
        assert sum(1 for _ in enumerate_centralizer(dec)) == centralizer_order(dec)
        assert cycle_type(sigma) == tuple(sorted(
            [b.d for b in dec.blocks for _ in range(b.k)] + [1] * len(dec.fixed_points), reverse=True))


@pytest.mark.parametrize("d,k", [(2, 2), (3, 2), (2, 3), (4, 1), (5, 1), (3, 1)])
def test_h_kernel_readings_coincide(d, k):
    """Inside H_sigma, preserving every cycle's point set is the same as
    x tau_i x^-1 = tau_i^{z_i} for per-cycle z_i, and the same as one shared z."""
    sigma = permutation_of_type([d] * k)
    block = sigma_decompose(sigma).blocks[0]
    taus = [block.tau(i) for i in range(k)]
    powers = [[block.tau(i, e) for e in range(d)] for i in range(k)]
    for x in all_perms(d * k):
        h = h_class_of(sigma, x)
        if h is None:
            continue
        setwise = cycles_action(block, x).action.is_identity()
        per_cycle = all(conjugate_by(x, t) in powers[i] for i, t in enumerate(taus))
        shared = any(all(conjugate_by(x, t) == powers[i][z] for i, t in enumerate(taus))
                     for z in range(d))
        assert setwise == per_cycle == shared
