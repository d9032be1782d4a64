"""Conjugacy of homomorphisms from a two-generator abelian group into S_n.

With phi(a) = psi(a) = sigma, a conjugator must centralize sigma, so the
question splits over the fixed points of sigma and over each block of
equal-length cycles.  Inside a block of k cycles of length d the centralizer
is Z_d wr S_k, and two of its elements are conjugate there exactly when they
share a :class:`CentSignature`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .centralizer import (
    DEFAULT_CAP,
    BlockQuotientImage,
    SigmaBlock,
    SigmaDecomposition,
    cycles_action,
    sigma_decompose,
)
from .perm import (
    CycleType,
    Permutation,
    PermutationError,
    aligning_permutation,
    compose,
    conjugate_by,
    cycle_type,
    order_of,
    power,
    restrict,
)

FAILED_TAGS = ("generator-types", "fix-part", "bar-type", "exponents", "orbit-powers", "none")


class ResidueDisagreement(AssertionError):
    """pi0^m acts as different rotations on the cycles of one bar-orbit."""


@dataclass(frozen=True)
class KDecomposition:
    """pi = mu * pi0 with mu in K = <tau_1..tau_k> and pi0 moving whole cycles.

    ``exponents`` maps the 1-based index of every cycle fixed by ``bar`` to
    the rotation z_i (mod d) that pi performs on it.
    """

    bar: BlockQuotientImage
    exponents: dict[int, int]
    mu: Permutation
    pi0: Permutation


@dataclass(frozen=True)
class CentSignature:
    d: int
    bar_type: CycleType
    fixed_exponents: tuple[int, ...]
    orbits: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class AbelianHom:
    """Images of the two generators a, b of an abelian source group.

    Without ``orders`` the source is taken to be free abelian on a and b.
    """

    a: Permutation
    b: Permutation
    orders: tuple[int, int] | None = None

    def __post_init__(self):
        if self.a.degree != self.b.degree:
            raise PermutationError("generator images have different degrees")
        if compose(self.a, self.b) != compose(self.b, self.a):
            raise ValueError(f"images {self.a} and {self.b} do not commute")
        if self.orders is not None:
            ma, mb = self.orders
            if not power(self.a, ma).is_identity() or not power(self.b, mb).is_identity():
                raise ValueError(f"images do not satisfy a^{ma} = b^{mb} = 1")

    @property
    def degree(self) -> int:
        return self.a.degree

    def generators(self) -> list[Permutation]:
        return [self.a, self.b]


@dataclass(frozen=True)
class ConjugacyDecision:
    verdict: bool
    failed_condition: str = "none"
    witness: Permutation | None = None


def _check_in_block_centralizer(block: SigmaBlock, pi: Permutation) -> None:
    if pi.degree != block.degree:
        raise PermutationError("degree mismatch")
    if not pi.support() <= block.support:
        raise ValueError(f"{pi} moves points outside the block")
    sigma = block.product()
    if compose(pi, sigma) != compose(sigma, pi):
        raise ValueError(f"{pi} does not commute with {sigma}")


def _rotation_on(block: SigmaBlock, p: Permutation, i: int) -> int:
    """The z with p = tau_i^z on cycle i; raises if p is not a rotation there."""
    cycle, d = block.cycles[i], block.d
    j, z = block.position[p(cycle[0])]
    if j != i or any(p(cycle[t]) != cycle[(t + z) % d] for t in range(d)):
        raise ValueError(f"{p} is not a rotation of cycle {cycle}")
    return z


def k_decompose(block: SigmaBlock, pi: Permutation) -> KDecomposition:
    _check_in_block_centralizer(block, pi)
    bar = cycles_action(block, pi)
    exponents = {}
    mu = Permutation.identity(block.degree)
    moved = []
    for i in range(block.k):
        if bar.action(i + 1) == i + 1:
            z = _rotation_on(block, pi, i)
            exponents[i + 1] = z
            mu = compose(mu, block.tau(i, z))
        else:
            moved.extend(block.cycles[i])
    return KDecomposition(bar, exponents, mu, restrict(pi, moved))


def cent_signature(block: SigmaBlock, pi: Permutation) -> CentSignature:
    kd = k_decompose(block, pi)
    orbits = []
    for orbit in kd.bar.action.cycles():
        m = len(orbit)
        pm = power(kd.pi0, m)
        residues = {_rotation_on(block, pm, c - 1) for c in orbit}
        if len(residues) != 1:
            raise ResidueDisagreement(
                f"pi0^{m} rotates the cycles {orbit} by different amounts {sorted(residues)}")
        orbits.append((m, residues.pop()))
    return CentSignature(
        d=block.d,
        bar_type=cycle_type(kd.bar.action),
        fixed_exponents=tuple(sorted(kd.exponents.values())),
        orbits=tuple(sorted(orbits)),
    )


def signature_difference(s1: CentSignature, s2: CentSignature) -> str:
    """First condition on which two signatures differ, or "none"."""
    if s1.bar_type != s2.bar_type:
        return "bar-type"
    if s1.fixed_exponents != s2.fixed_exponents:
        return "exponents"
    if s1.orbits != s2.orbits:
        return "orbit-powers"
    return "none"


def cent_conjugate_block(block: SigmaBlock, pi: Permutation, pi_prime: Permutation) -> bool:
    """Whether pi and pi' are conjugate by an element of the block centralizer."""
    return cent_signature(block, pi) == cent_signature(block, pi_prime)


def are_generator_conjugate(phi, psi) -> bool:
    """Cycle types agree generator by generator (works for any hom record)."""
    gp, gq = phi.generators(), psi.generators()
    if len(gp) != len(gq):
        raise ValueError("homomorphisms have different numbers of generators")
    if phi.degree != psi.degree:
        raise PermutationError("degree mismatch")
    return all(cycle_type(x) == cycle_type(y) for x, y in zip(gp, gq))


def _powers(p: Permutation, count: int) -> list[Permutation]:
    out = [Permutation.identity(p.degree)]
    for _ in range(count - 1):
        out.append(compose(out[-1], p))
    return out


def element_types(a: Permutation, b: Permutation, na: int, nb: int) -> tuple[CycleType, ...]:
    """Cycle types of a^i b^j for i < na, j < nb, in row-major order."""
    pa, pb = _powers(a, na), _powers(b, nb)
    return tuple(cycle_type(compose(x, y)) for x in pa for y in pb)


def are_element_conjugate_abelian(phi: AbelianHom, psi: AbelianHom) -> bool:
    if phi.degree != psi.degree:
        raise PermutationError("degree mismatch")
    na = math.lcm(order_of(phi.a), order_of(psi.a))
    nb = math.lcm(order_of(phi.b), order_of(psi.b))
    return element_types(phi.a, phi.b, na, nb) == element_types(psi.a, psi.b, na, nb)


def element_conjugacy_criterion(dec: SigmaDecomposition, pi: Permutation,
                                pi_prime: Permutation) -> bool:
    """Exponent and orbit-residue test for (sigma, pi) vs (sigma, pi').

    Only meaningful when sigma is a single uniform block without fixed
    points and pi, pi' have the same cycle type.
    """
    if dec.fixed_points or len(dec.blocks) != 1:
        raise ValueError("sigma must be one block of equal-length cycles with no fixed points")
    if cycle_type(pi) != cycle_type(pi_prime):
        raise ValueError("pi and pi' are not generator-conjugate")
    block = dec.blocks[0]
    s1, s2 = cent_signature(block, pi), cent_signature(block, pi_prime)
    return s1.fixed_exponents == s2.fixed_exponents and s1.orbits == s2.orbits


def normalize(phi, psi, rng: random.Random | None = None):
    """Conjugate psi so that its first generator image equals phi's.

    Returns ``(lam, images)`` where ``images`` are psi's generator images
    conjugated by ``lam``.
    """
    gp, gq = phi.generators(), psi.generators()
    lam = aligning_permutation(gq[0], gp[0], rng)
    return lam, [conjugate_by(lam, x) for x in gq]


def are_conjugate_abelian(phi: AbelianHom, psi: AbelianHom, want_witness: bool = False,
                          rng: random.Random | None = None,
                          cap: int = DEFAULT_CAP) -> ConjugacyDecision:
    if not are_generator_conjugate(phi, psi):
        return ConjugacyDecision(False, "generator-types")
    _, (_, b2) = normalize(phi, psi, rng)
    dec = sigma_decompose(phi.a)
    fix = dec.fixed_points
    if cycle_type(restrict(phi.b, fix)) != cycle_type(restrict(b2, fix)):
        return ConjugacyDecision(False, "fix-part")
    for block in dec.blocks:
        s1 = cent_signature(block, restrict(phi.b, block.support))
        s2 = cent_signature(block, restrict(b2, block.support))
        tag = signature_difference(s1, s2)
        if tag != "none":
            return ConjugacyDecision(False, tag)
    witness = None
    if want_witness:
        from .oracle import find_hom_conjugator, verify_conjugator

        witness = find_hom_conjugator(phi.generators(), psi.generators(), cap=cap)
        if witness is None or not verify_conjugator(witness, phi.generators(), psi.generators()):
            raise RuntimeError(f"criterion says conjugate but the oracle found no conjugator "
                               f"for {phi} and {psi}")
    return ConjugacyDecision(True, "none", witness)


def local_element_conjugacy(phi: AbelianHom, psi: AbelianHom) -> list[tuple[str, bool]]:
    """Element-conjugacy of the restrictions to Fix(sigma) and to each block.

    Brute force over a^i b^j on each component, after aligning psi(a) with
    phi(a).  Requires generator-conjugate inputs.
    """
    if not are_generator_conjugate(phi, psi):
        raise ValueError("homomorphisms are not generator-conjugate")
    _, (a2, b2) = normalize(phi, psi)
    dec = sigma_decompose(phi.a)
    parts = [("fix", dec.fixed_points)] + [(f"d={b.d}", b.support) for b in dec.blocks]
    out = []
    for label, points in parts:
        h1 = AbelianHom(restrict(phi.a, points), restrict(phi.b, points))
        h2 = AbelianHom(restrict(a2, points), restrict(b2, points))
        out.append((label, are_element_conjugate_abelian(h1, h2)))
    return out
