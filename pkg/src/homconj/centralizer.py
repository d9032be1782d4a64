"""Centralizers of a permutation, built from their direct-product form.

A permutation sigma splits into its fixed points and blocks of equal-length
cycles.  Its centralizer is Sym(Fix) times, per block of k cycles of
length d, the wreath product Z_d wr S_k.  This module builds that product
explicitly, maps block elements to the induced permutation of the block's
cycles, and enumerates centralizers for the brute-force oracle.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np

from .perm import Permutation, PermutationError, conjugate_by, compose, order_of

DEFAULT_CAP = 10**7


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured size cap."""


@dataclass(frozen=True)
class SigmaBlock:
    """The k cycles of length d of sigma, listed canonically.

    Each cycle starts at its minimum point; cycles are sorted by minimum.
    """

    degree: int
    d: int
    cycles: tuple[tuple[int, ...], ...]
    position: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pos = {}
        for i, cycle in enumerate(self.cycles):
            if len(cycle) != self.d:
                raise ValueError(f"cycle {cycle} does not have length {self.d}")
            for t, p in enumerate(cycle):
                if p in pos:
                    raise ValueError(f"point {p} in two cycles")
                pos[p] = (i, t)
        object.__setattr__(self, "position", pos)

    @property
    def k(self) -> int:
        return len(self.cycles)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(self.position)

    def tau(self, i: int, e: int = 1) -> Permutation:
        """The i-th cycle (0-based) raised to the power e."""
        cycle = self.cycles[i]
        im = list(range(1, self.degree + 1))
        for t, p in enumerate(cycle):
            im[p - 1] = cycle[(t + e) % self.d]
        return Permutation(im, check=False)

    def product(self) -> Permutation:
        """sigma restricted to this block."""
        return Permutation.from_cycles(self.cycles, self.degree)


@dataclass(frozen=True)
class SigmaDecomposition:
    degree: int
    fixed_points: frozenset[int]
    blocks: tuple[SigmaBlock, ...]

    @property
    def sigma(self) -> Permutation:
        return Permutation.from_cycles(
            [c for b in self.blocks for c in b.cycles], self.degree)

    def block_for(self, d: int) -> SigmaBlock | None:
        for b in self.blocks:
            if b.d == d:
                return b
        return None


@dataclass(frozen=True)
class BlockQuotientImage:
    """How an element permutes the k cycles of a block; point i is cycle i-1."""

    k: int
    action: Permutation


@dataclass(frozen=True)
class HClass:
    """Exponent z with x sigma x^-1 = sigma^z."""

    z: int


def sigma_decompose(sigma: Permutation) -> SigmaDecomposition:
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in sigma.cycles():
        by_len.setdefault(len(c), []).append(c)
    blocks = tuple(SigmaBlock(sigma.degree, d, tuple(by_len[d])) for d in sorted(by_len))
    fixed = frozenset(i for i, img in enumerate(sigma.images, 1) if img == i)
    return SigmaDecomposition(sigma.degree, fixed, blocks)


def centralizer_order(dec: SigmaDecomposition) -> int:
    order = math.factorial(len(dec.fixed_points))
    for b in dec.blocks:
        order *= b.d ** b.k * math.factorial(b.k)
    return order


def _block_elements(block: SigmaBlock) -> list[list[tuple[int, int]]]:
    """All centralizer elements of one block as lists of (point, image) pairs.

    Rotations vary odometer-style inside each block permutation, block
    permutations in lexicographic order.
    """
    d, k, cycles = block.d, block.k, block.cycles
    out = []
    for w in itertools.permutations(range(k)):
        for rot in itertools.product(range(d), repeat=k):
            pairs = []
            for i in range(k):
                src, dst, r = cycles[i], cycles[w[i]], rot[i]
                for t in range(d):
                    pairs.append((src[t], dst[(t + r) % d]))
            out.append(pairs)
    return out


def enumerate_centralizer(dec: SigmaDecomposition, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    """Every element of Cent(sigma) exactly once, in a fixed order."""
    order = centralizer_order(dec)
    if order > cap:
        raise CapExceededError(f"centralizer order {order} exceeds cap {cap}")
    fix = sorted(dec.fixed_points)
    factors = [_block_elements(b) for b in dec.blocks]
    n = dec.degree
    # the fixed-point factor can be huge, so it is walked lazily
    for fix_img in itertools.permutations(fix):
        base = [0] * n
        for x, y in zip(fix, fix_img):
            base[x - 1] = y
        for choice in itertools.product(*factors):
            im = base.copy()
            for pairs in choice:
                for x, y in pairs:
                    im[x - 1] = y
            yield Permutation(im, check=False)


def centralizer_array(dec: SigmaDecomposition, cap: int = DEFAULT_CAP) -> np.ndarray:
    """Cent(sigma) as an (order, n) array of 0-based images."""
    n = dec.degree
    rows = [np.asarray(p.images, dtype=np.int16) - 1 for p in enumerate_centralizer(dec, cap)]
    return np.stack(rows) if rows else np.empty((0, n), dtype=np.int16)


def in_centralizer(sigma: Permutation, x: Permutation) -> bool:
    return conjugate_by(x, sigma) == sigma


def cycles_action(block: SigmaBlock, x: Permutation) -> BlockQuotientImage:
    """The permutation w of the block's cycles with x(cycle i) = cycle w(i).

    Raises ValueError when x does not permute the cycles' point sets.
    """
    if x.degree != block.degree:
        raise PermutationError("degree mismatch")
    pos = block.position
    w = []
    for i, cycle in enumerate(block.cycles):
        target = pos.get(x(cycle[0]))
        if target is None:
            raise ValueError(f"{x} moves point {cycle[0]} off the block")
        j = target[0]
        for p in cycle[1:]:
            q = pos.get(x(p))
            if q is None or q[0] != j:
                raise ValueError(f"{x} does not map cycle {cycle} onto a single cycle")
        w.append(j + 1)
    if len(set(w)) != len(w):
        raise ValueError(f"{x} merges cycles of the block")
    return BlockQuotientImage(block.k, Permutation(w, check=False))


def h_class_of(sigma: Permutation, x: Permutation) -> HClass | None:
    """The least z in [0, order(sigma)) with x sigma x^-1 = sigma^z, if any."""
    if sigma.degree != x.degree:
        raise PermutationError("degree mismatch")
    target = conjugate_by(x, sigma)
    acc = Permutation.identity(sigma.degree)
    for z in range(order_of(sigma)):
        if acc == target:
            return HClass(z)
        acc = compose(acc, sigma)
    return None
