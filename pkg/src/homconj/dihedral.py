"""Conjugacy of homomorphisms from a dihedral group D_2m into S_n.

With phi(r) = psi(r) = sigma the images of s are involutions inverting
sigma.  On a block of k cycles of length d such an involution swaps some
cycles in pairs and reflects the others in place, like the symmetries of a
regular d-gon.  For even d an in-place reflection either fixes two vertices
or none, which the cycle type of the block restriction records.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .abelian import ConjugacyDecision, are_generator_conjugate, normalize
from .centralizer import DEFAULT_CAP, SigmaBlock, SigmaDecomposition, cycles_action, sigma_decompose
from .perm import (
    CycleType,
    Permutation,
    PermutationError,
    compose,
    conjugate_by,
    cycle_type,
    cycle_type_on,
    inverse,
    power,
    restrict,
)


@dataclass(frozen=True)
class DihedralHom:
    """Images of r and s for D_2m = <r, s | r^m = s^2 = 1, s r s = r^-1>."""

    m: int
    r: Permutation
    s: Permutation

    def __post_init__(self):
        if self.r.degree != self.s.degree:
            raise PermutationError("generator images have different degrees")
        if self.m < 1:
            raise ValueError("m must be positive")
        if not power(self.r, self.m).is_identity():
            raise ValueError(f"r-image {self.r} does not satisfy r^{self.m} = 1")
        if not compose(self.s, self.s).is_identity():
            raise ValueError(f"s-image {self.s} is not an involution")
        if conjugate_by(self.s, self.r) != inverse(self.r):
            raise ValueError(f"s-image {self.s} does not invert {self.r}")

    @property
    def degree(self) -> int:
        return self.r.degree

    def generators(self) -> list[Permutation]:
        return [self.r, self.s]


@dataclass(frozen=True)
class BlockReflection:
    d: int
    k: int
    swapped_pairs: int
    inverted_in_place: int
    block_cycle_type: CycleType


@dataclass(frozen=True)
class ReflectionSignature:
    blocks: tuple[BlockReflection, ...]
    fix_part_type: CycleType


def _check_inverting(block: SigmaBlock, s: Permutation) -> None:
    if s.degree != block.degree:
        raise PermutationError("degree mismatch")
    if not s.support() <= block.support:
        raise ValueError(f"{s} moves points outside the block")
    if not compose(s, s).is_identity():
        raise ValueError(f"{s} is not an involution")
    sigma = block.product()
    if conjugate_by(s, sigma) != inverse(sigma):
        raise ValueError(f"{s} does not invert {sigma}")


def block_reflection(block: SigmaBlock, s: Permutation) -> BlockReflection:
    """Reflection data of an inverting involution supported on one block."""
    _check_inverting(block, s)
    bar = cycles_action(block, s).action
    bar_type = cycle_type(bar)
    return BlockReflection(
        d=block.d,
        k=block.k,
        swapped_pairs=bar_type.count(2),
        inverted_in_place=bar_type.count(1),
        block_cycle_type=cycle_type_on(s, block.support),
    )


def reflection_signature(dec: SigmaDecomposition, s: Permutation) -> ReflectionSignature:
    sigma = dec.sigma
    if s.degree != dec.degree:
        raise PermutationError("degree mismatch")
    if not compose(s, s).is_identity():
        raise ValueError(f"{s} is not an involution")
    if conjugate_by(s, sigma) != inverse(sigma):
        raise ValueError(f"{s} does not invert {sigma}")
    blocks = tuple(block_reflection(b, restrict(s, b.support)) for b in dec.blocks)
    return ReflectionSignature(blocks, cycle_type_on(s, dec.fixed_points))


def canonical_reflection_conjugator(block: SigmaBlock, i: int, j: int,
                                    s1: Permutation, s2: Permutation) -> int:
    """The least z with tau_j^z s1 tau_j^-z = s2 (cycle indices are 1-based).

    s1 and s2 must be involutions on cycles i and j that carry tau_i to
    tau_j^-1 (for i == j: reflect cycle i in place).
    """
    points = set(block.cycles[i - 1]) | set(block.cycles[j - 1])
    tau_i, tau_j = block.tau(i - 1), block.tau(j - 1)
    for s in (s1, s2):
        if not s.support() <= points or not compose(s, s).is_identity():
            raise ValueError(f"{s} is not an involution on cycles {i}, {j}")
        if conjugate_by(s, tau_i) != inverse(tau_j):
            raise ValueError(f"{s} does not carry cycle {i} to the inverse of cycle {j}")
    for z in range(block.d):
        if conjugate_by(block.tau(j - 1, z), s1) == s2:
            return z
    raise ValueError(f"{s1} and {s2} are reflections of different families")


def h_conjugate_involutions_block(block: SigmaBlock, pi: Permutation,
                                  pi_prime: Permutation) -> bool:
    """Whether the block centralizer conjugates one inverting involution to the other."""
    r1, r2 = block_reflection(block, pi), block_reflection(block, pi_prime)
    return (r1.block_cycle_type == r2.block_cycle_type
            and r1.inverted_in_place == r2.inverted_in_place)


def are_element_conjugate_dihedral(phi: DihedralHom, psi: DihedralHom) -> bool:
    if phi.degree != psi.degree:
        raise PermutationError("degree mismatch")
    if phi.m != psi.m:
        raise ValueError("homomorphisms have different m")
    rp, rq = Permutation.identity(phi.degree), Permutation.identity(psi.degree)
    for _ in range(phi.m):
        if cycle_type(rp) != cycle_type(rq):
            return False
        if cycle_type(compose(rp, phi.s)) != cycle_type(compose(rq, psi.s)):
            return False
        rp, rq = compose(rp, phi.r), compose(rq, psi.r)
    return True


def are_conjugate_dihedral(phi: DihedralHom, psi: DihedralHom, want_witness: bool = False,
                           rng: random.Random | None = None,
                           cap: int = DEFAULT_CAP) -> ConjugacyDecision:
    if phi.m != psi.m:
        raise ValueError("homomorphisms have different m")
    if not are_generator_conjugate(phi, psi):
        return ConjugacyDecision(False, "generator-types")
    _, (_, s2) = normalize(phi, psi, rng)
    dec = sigma_decompose(phi.r)
    if cycle_type_on(phi.s, dec.fixed_points) != cycle_type_on(s2, dec.fixed_points):
        return ConjugacyDecision(False, "fix-part")
    for block in dec.blocks:
        r1 = block_reflection(block, restrict(phi.s, block.support))
        r2 = block_reflection(block, restrict(s2, block.support))
        if r1.inverted_in_place != r2.inverted_in_place:
            return ConjugacyDecision(False, "bar-type")
        if r1.block_cycle_type != r2.block_cycle_type:
            return ConjugacyDecision(False, "block-type")
    witness = None
    if want_witness:
        from .oracle import find_hom_conjugator, verify_conjugator

        witness = find_hom_conjugator(phi.generators(), psi.generators(), cap=cap)
        if witness is None or not verify_conjugator(witness, phi.generators(), psi.generators()):
            raise RuntimeError(f"criterion says conjugate but the oracle found no conjugator "
                               f"for {phi} and {psi}")
    return ConjugacyDecision(True, "none", witness)


def local_element_conjugacy_dihedral(phi: DihedralHom, psi: DihedralHom) -> list[tuple[str, bool]]:
    """Element-conjugacy of the restrictions to Fix(sigma) and to each block."""
    if not are_generator_conjugate(phi, psi):
        raise ValueError("homomorphisms are not generator-conjugate")
    _, (r2, s2) = normalize(phi, psi)
    dec = sigma_decompose(phi.r)
    parts = [("fix", dec.fixed_points)] + [(f"d={b.d}", b.support) for b in dec.blocks]
    out = []
    for label, points in parts:
        h1 = DihedralHom(phi.m, restrict(phi.r, points), restrict(phi.s, points))
        h2 = DihedralHom(psi.m, restrict(r2, points), restrict(s2, points))
        out.append((label, are_element_conjugate_dihedral(h1, h2)))
    return out
