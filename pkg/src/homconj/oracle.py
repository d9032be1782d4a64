"""Brute-force ground truth.

Every search here is exhaustive.  A conjugator from phi to psi must carry
phi's first generator image to psi's, so candidates are lam * c with lam
one fixed aligning permutation and c running over the centralizer of phi's
first image.  Candidates are checked in bulk with numpy.
"""
from __future__ import annotations

import itertools
import math
from collections.abc import Iterator, Sequence
from functools import lru_cache

import numpy as np

from .centralizer import (
    DEFAULT_CAP,
    CapExceededError,
    SigmaDecomposition,
    centralizer_order,
    enumerate_centralizer,
    sigma_decompose,
)
from .perm import (
    Permutation,
    PermutationError,
    aligning_permutation,
    compose,
    conjugate_by,
    cycle_type,
    inverse,
)

_CHUNK = 1 << 16


def verify_conjugator(h: Permutation, phi_images: Sequence[Permutation],
                      psi_images: Sequence[Permutation]) -> bool:
    return all(conjugate_by(h, x) == y for x, y in zip(phi_images, psi_images))


def _chunks(dec: SigmaDecomposition, cap: int) -> Iterator[np.ndarray]:
    buf = []
    for c in enumerate_centralizer(dec, cap):
        buf.append(c.images)
        if len(buf) == _CHUNK:
            yield np.asarray(buf, dtype=np.int16) - 1
            buf = []
    if buf:
        yield np.asarray(buf, dtype=np.int16) - 1


@lru_cache(maxsize=64)
def _cached_centralizer(sigma: Permutation) -> np.ndarray:
    arr = np.concatenate(list(_chunks(sigma_decompose(sigma), DEFAULT_CAP)))
    arr.setflags(write=False)
    return arr


def _centralizer_blocks(sigma: Permutation, cap: int) -> Iterator[np.ndarray]:
    dec = sigma_decompose(sigma)
    order = centralizer_order(dec)
    if order > cap:
        raise CapExceededError(f"centralizer order {order} exceeds cap {cap}")
    if order <= 50_000:
        yield _cached_centralizer(sigma)
    else:
        yield from _chunks(dec, cap)


def find_hom_conjugator(phi_images: Sequence[Permutation], psi_images: Sequence[Permutation],
                        cap: int = DEFAULT_CAP) -> Permutation | None:
    """First h (in enumeration order) with h phi(g) h^-1 = psi(g) for every generator."""
    if len(phi_images) != len(psi_images) or not phi_images:
        raise ValueError("need equally many generator images on both sides")
    n = phi_images[0].degree
    if any(p.degree != n for p in list(phi_images) + list(psi_images)):
        raise PermutationError("degree mismatch")
    if cycle_type(phi_images[0]) != cycle_type(psi_images[0]):
        return None
    lam = np.asarray(aligning_permutation(phi_images[0], psi_images[0]).images) - 1
    xs = [np.asarray(p.images) - 1 for p in phi_images[1:]]
    ys = [np.asarray(p.images) - 1 for p in psi_images[1:]]
    for cent in _centralizer_blocks(phi_images[0], cap):
        h = lam[cent]
        ok = np.ones(len(h), dtype=bool)
        for x, y in zip(xs, ys):
            # h x h^-1 = y  <=>  h o x = y o h
            ok &= (h[:, x] == y[h]).all(axis=1)
        hits = np.flatnonzero(ok)
        if hits.size:
            return Permutation((h[hits[0]] + 1).tolist(), check=False)
    return None


def find_hom_conjugator_slow(phi_images: Sequence[Permutation],
                             psi_images: Sequence[Permutation]) -> Permutation | None:
    """Scan all of S_n in lexicographic order. Test-only; n! work."""
    n = phi_images[0].degree
    for img in itertools.permutations(range(1, n + 1)):
        h = Permutation(img, check=False)
        if verify_conjugator(h, phi_images, psi_images):
            return h
    return None


def conjugation_orbit(sigma: Permutation, x: Permutation, cap: int = DEFAULT_CAP) -> set[Permutation]:
    """{rho x rho^-1 : rho in Cent(sigma)} for any x of the same degree."""
    p = np.asarray(x.images) - 1
    out: set[Permutation] = set()
    for cent in _centralizer_blocks(sigma, cap):
        conj = np.empty_like(cent)
        conj[np.arange(len(cent))[:, None], cent] = cent[:, p]
        for row in np.unique(conj, axis=0):
            out.add(Permutation((row + 1).tolist(), check=False))
    return out


def cent_orbit(dec: SigmaDecomposition, pi: Permutation, cap: int = DEFAULT_CAP) -> set[Permutation]:
    """{rho pi rho^-1 : rho in Cent(sigma)} for pi commuting with sigma."""
    sigma = dec.sigma
    if compose(pi, sigma) != compose(sigma, pi):
        raise ValueError(f"{pi} does not commute with {sigma}")
    return conjugation_orbit(sigma, pi, cap)


def enumerate_commuting_elements(sigma: Permutation, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    return enumerate_centralizer(sigma_decompose(sigma), cap)


def _involutions(points: Sequence[int]) -> Iterator[list[tuple[int, int]]]:
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for tail in _involutions(rest):
        yield [(first, first)] + tail
    for i, q in enumerate(rest):
        others = rest[:i] + rest[i + 1:]
        for tail in _involutions(others):
            yield [(first, q), (q, first)] + tail


def involution_count(f: int) -> int:
    a, b = 1, 1
    for i in range(2, f + 1):
        a, b = b, b + (i - 1) * a
    return b if f >= 1 else 1


def enumerate_involutions(degree: int) -> Iterator[Permutation]:
    """All x in S_n with x^2 = 1, identity included."""
    for pairs in _involutions(list(range(1, degree + 1))):
        im = [0] * degree
        for x, y in pairs:
            im[x - 1] = y
        yield Permutation(im, check=False)


def _block_inversions(cycles: Sequence[tuple[int, ...]], d: int) -> Iterator[list[tuple[int, int]]]:
    # each cycle is reflected in place (d ways) or swapped with a later one (d ways)
    if not cycles:
        yield []
        return
    first, rest = cycles[0], cycles[1:]
    for c in range(d):
        refl = [(first[t], first[(c - t) % d]) for t in range(d)]
        for tail in _block_inversions(rest, d):
            yield refl + tail
    for i, other in enumerate(rest):
        others = rest[:i] + rest[i + 1:]
        for c in range(d):
            swap = [(first[t], other[(c - t) % d]) for t in range(d)]
            swap += [(other[u], first[(c - u) % d]) for u in range(d)]
            for tail in _block_inversions(others, d):
                yield swap + tail


def inverting_involution_count(sigma: Permutation) -> int:
    dec = sigma_decompose(sigma)
    total = involution_count(len(dec.fixed_points))
    for b in dec.blocks:
        # partial matchings of k cycles, weighted by d per in-place cycle and per pair
        ways = [1, b.d]
        for k in range(2, b.k + 1):
            ways.append(b.d * ways[k - 1] + (k - 1) * b.d * ways[k - 2])
        total *= ways[b.k]
    return total


def enumerate_inverting_involutions(sigma: Permutation, cap: int = DEFAULT_CAP) -> Iterator[Permutation]:
    """All x with x^2 = 1 and x sigma x^-1 = sigma^-1, each once.

    For sigma = identity these are simply all involutions of S_n.
    """
    count = inverting_involution_count(sigma)
    if count > cap:
        raise CapExceededError(f"{count} inverting involutions exceed cap {cap}")
    dec = sigma_decompose(sigma)
    n = sigma.degree
    sigma_inv = inverse(sigma)
    factors = [list(_involutions(sorted(dec.fixed_points)))]
    factors += [list(_block_inversions(b.cycles, b.d)) for b in dec.blocks]
    for choice in itertools.product(*factors):
        im = [0] * n
        for pairs in choice:
            for x, y in pairs:
                im[x - 1] = y
        x = Permutation(im, check=False)
        if not compose(x, x).is_identity() or conjugate_by(x, sigma) != sigma_inv:
            raise AssertionError(f"constructed {x} does not invert {sigma}")
        yield x


def swap_inversions(d: int) -> list[Permutation]:
    """Involutions of S_2d carrying (1..d) to (d+1..2d)^-1, by scanning all bijections."""
    tau1 = Permutation.from_cycles([range(1, d + 1)], 2 * d)
    tau2_inv = inverse(Permutation.from_cycles([range(d + 1, 2 * d + 1)], 2 * d))
    found = []
    for img in itertools.permutations(range(d + 1, 2 * d + 1)):
        im = list(range(1, 2 * d + 1))
        for x, y in zip(range(1, d + 1), img):
            im[x - 1], im[y - 1] = y, x
        s = Permutation(im, check=False)
        if conjugate_by(s, tau1) == tau2_inv:
            found.append(s)
    return found


def inplace_inversions(d: int) -> list[Permutation]:
    """Involutions of S_d inverting (1..d), filtered from all involutions."""
    tau = Permutation.from_cycles([range(1, d + 1)], d)
    tau_inv = inverse(tau)
    return [s for s in enumerate_involutions(d) if conjugate_by(s, tau) == tau_inv]


def orbits_under_rotation(tau: Permutation, elements: Sequence[Permutation]) -> list[set[Permutation]]:
    """Partition ``elements`` into orbits under conjugation by powers of tau."""
    remaining = set(elements)
    orbits = []
    powers = [Permutation.identity(tau.degree)]
    for _ in range(math.lcm(*cycle_type(tau)) - 1):
        powers.append(compose(powers[-1], tau))
    while remaining:
        x = min(remaining)
        orbit = {conjugate_by(t, x) for t in powers}
        orbits.append(orbit)
        remaining -= orbit
    return orbits
