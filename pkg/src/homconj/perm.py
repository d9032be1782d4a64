"""Exact permutation algebra on the points 1..n.

Permutations carry an explicit degree, so ``(1 2)`` in S_2 and ``(1 2)`` in
S_3 are different values.  Products follow the "right factor first"
convention: ``compose(p, q)`` is the map ``x -> p(q(x))``.
"""
from __future__ import annotations

import math
import random
from collections.abc import Iterable, Sequence

CycleType = tuple[int, ...]


class PermutationError(ValueError):
    """Raised for malformed cycle notation or invalid image lists."""


class Permutation:
    """An immutable bijection of {1..n}, stored as its image list."""

    __slots__ = ("_images", "_hash")

    def __init__(self, images: Iterable[int], *, check: bool = True):
        images = tuple(images)
        if check:
            n = len(images)
            if n < 1:
                raise PermutationError("degree must be at least 1")
            if sorted(images) != list(range(1, n + 1)):
                raise PermutationError(f"{images!r} is not a permutation of 1..{n}")
        self._images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        if degree < 1:
            raise PermutationError("degree must be at least 1")
        return cls(range(1, degree + 1), check=False)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> Permutation:
        """Product of the given disjoint cycles; unlisted points are fixed."""
        if degree < 1:
            raise PermutationError("degree must be at least 1")
        images = list(range(1, degree + 1))
        seen: set[int] = set()
        for cycle in cycles:
            for p in cycle:
                if not 1 <= p <= degree:
                    raise PermutationError(f"point {p} out of range 1..{degree}")
                if p in seen:
                    raise PermutationError(f"point {p} repeated")
                seen.add(p)
            for i, p in enumerate(cycle):
                images[p - 1] = cycle[(i + 1) % len(cycle)]
        return cls(images, check=False)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def degree(self) -> int:
        return len(self._images)

    def __call__(self, point: int) -> int:
        return self._images[point - 1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Permutation) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def __invert__(self) -> Permutation:
        return inverse(self)

    def __pow__(self, e: int) -> Permutation:
        return power(self, e)

    def __repr__(self) -> str:
        return f"Permutation({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self) -> str:
        return format_cycles(self)

    def is_identity(self) -> bool:
        return all(img == i for i, img in enumerate(self._images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its minimum, sorted by minimum."""
        seen = [False] * (self.degree + 1)
        out = []
        for start in range(1, self.degree + 1):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            x = self._images[start - 1]
            while x != start:
                cycle.append(x)
                seen[x] = True
                x = self._images[x - 1]
            if len(cycle) > 1:
                out.append(tuple(cycle))
        return out

    def support(self) -> frozenset[int]:
        return frozenset(i for i, img in enumerate(self._images, 1) if img != i)


def _tokenize(text: str) -> list[list[int]]:
    cycles: list[list[int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch != "(":
            raise PermutationError(f"unexpected {ch!r} at position {i}")
        close = text.find(")", i)
        if close < 0:
            raise PermutationError(f"unclosed cycle starting at position {i}")
        body = text[i + 1:close]
        if "(" in body:
            raise PermutationError(f"nested '(' in cycle at position {i}")
        parts = body.replace(",", " ").split()
        if not parts:
            if text.strip() != "()":
                raise PermutationError("empty cycle '()' only allowed as the whole identity")
        elif body.count(",") and any(not s.strip() for s in body.split(",")):
            raise PermutationError(f"dangling comma in cycle {body!r}")
        for tok in parts:
            if not tok.isdigit():
                raise PermutationError(f"malformed point {tok!r}")
        if parts:
            cycles.append([int(tok) for tok in parts])
        i = close + 1
    return cycles


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse disjoint-cycle notation such as ``"(1 2 3)(4,5)"``.

    ``"()"`` and the empty string denote the identity.
    """
    cycles = _tokenize(text)
    for cycle in cycles:
        if len(set(cycle)) != len(cycle):
            raise PermutationError(f"point repeated within cycle {cycle}")
    return Permutation.from_cycles(cycles, degree)


def format_cycles(p: Permutation) -> str:
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


def _check_degrees(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise PermutationError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """x -> p(q(x))."""
    _check_degrees(p, q)
    pi = p.images
    return Permutation([pi[x - 1] for x in q.images], check=False)


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.degree
    for i, img in enumerate(p.images, 1):
        out[img - 1] = i
    return Permutation(out, check=False)


def power(p: Permutation, e: int) -> Permutation:
    if e < 0:
        p, e = inverse(p), -e
    result = Permutation.identity(p.degree)
    base = p
    while e:
        if e & 1:
            result = compose(result, base)
        base = compose(base, base)
        e >>= 1
    return result


def conjugate_by(g: Permutation, p: Permutation) -> Permutation:
    """g p g^-1: every cycle (a b c ...) of p becomes (g(a) g(b) g(c) ...)."""
    _check_degrees(g, p)
    gi, pi = g.images, p.images
    out = [0] * p.degree
    for a in range(p.degree):
        out[gi[a] - 1] = gi[pi[a] - 1]
    return Permutation(out, check=False)


def cycle_type(p: Permutation) -> CycleType:
    """Cycle lengths in descending order, fixed points included as 1s."""
    seen = [False] * (p.degree + 1)
    lengths = []
    im = p.images
    for start in range(1, p.degree + 1):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = im[x - 1]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def order_of(p: Permutation) -> int:
    return math.lcm(*cycle_type(p))


def fixed_points(p: Permutation) -> frozenset[int]:
    return frozenset(i for i, img in enumerate(p.images, 1) if img == i)


def restrict(p: Permutation, points: Iterable[int]) -> Permutation:
    """Agree with ``p`` on ``points`` and fix everything else.

    ``points`` must be a union of orbits of ``p``.
    """
    points = set(points)
    im = list(range(1, p.degree + 1))
    for x in points:
        y = p(x)
        if y not in points:
            raise PermutationError(f"{format_cycles(p)} does not preserve the given point set")
        im[x - 1] = y
    return Permutation(im, check=False)


def aligning_permutation(src: Permutation, dst: Permutation,
                         rng: random.Random | None = None) -> Permutation:
    """A permutation ``lam`` with ``conjugate_by(lam, src) == dst``.

    Cycles of equal length are matched in canonical order and aligned
    start-to-start.  With ``rng`` the matching, the rotation offsets and the
    fixed-point pairing are drawn at random instead, which yields another
    valid (usually different) alignment.
    """
    _check_degrees(src, dst)
    if cycle_type(src) != cycle_type(dst):
        raise PermutationError("no aligning permutation: cycle types differ")
    by_len_src: dict[int, list[tuple[int, ...]]] = {}
    by_len_dst: dict[int, list[tuple[int, ...]]] = {}
    for c in src.cycles():
        by_len_src.setdefault(len(c), []).append(c)
    for c in dst.cycles():
        by_len_dst.setdefault(len(c), []).append(c)
    fix_src = sorted(fixed_points(src))
    fix_dst = sorted(fixed_points(dst))
    if rng is not None:
        rng.shuffle(fix_dst)
        for cycles in by_len_dst.values():
            rng.shuffle(cycles)
    lam = [0] * src.degree
    for x, y in zip(fix_src, fix_dst):
        lam[x - 1] = y
    for length, cycles in by_len_src.items():
        for cs, cd in zip(cycles, by_len_dst[length]):
            shift = rng.randrange(length) if rng is not None else 0
            for t in range(length):
                lam[cs[t] - 1] = cd[(t + shift) % length]
    return Permutation(lam, check=False)


def partitions(n: int, largest: int | None = None):
    """Integer partitions of n in descending-part order."""
    if largest is None:
        largest = n
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in partitions(n - part, part):
            yield (part,) + rest


def permutation_of_type(lengths: Sequence[int]) -> Permutation:
    """The representative whose cycles are consecutive runs of points.

    Longer cycles come first: ``(3, 2, 1)`` gives ``(1 2 3)(4 5)`` in S_6.
    """
    cycles = []
    start = 1
    for length in sorted(lengths, reverse=True):
        cycles.append(range(start, start + length))
        start += length
    return Permutation.from_cycles(cycles, start - 1)


def cycle_type_on(p: Permutation, points: Iterable[int]) -> CycleType:
    """Cycle type of ``p`` restricted to a union of its orbits."""
    points = set(points)
    seen: set[int] = set()
    lengths = []
    for start in sorted(points):
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            if x not in points:
                raise PermutationError(f"{format_cycles(p)} does not preserve the given point set")
            seen.add(x)
            x = p(x)
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))
