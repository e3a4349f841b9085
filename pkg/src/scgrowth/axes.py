"""Exact geometry of axis lines in the Cayley tree of a free group.

The axis of ``g = c k^m c^-1`` (``k`` primitive, cyclically reduced) is the
line ``c . line(k)`` where ``line(k)`` runs through the prefixes of
``k k k ...`` and of ``K K K ...``. Everything here is exact: a tree has
unique geodesics and unique nearest points on convex sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotLoxodromic
from .words import (
    Word,
    common_prefix_len,
    cyclic_reduce,
    free_reduce,
    inverse,
    mul,
    power_exponent,
    primitive_root,
)


def _periodic(k: Word, n: int) -> Word:
    reps = n // len(k) + 1
    return (k * reps)[:n]


@dataclass(frozen=True)
class Line:
    """The line ``base . line(root)``; ``root`` is primitive and cyclically reduced."""

    base: Word
    root: Word

    @classmethod
    def axis_of(cls, g: Sequence[int]) -> "Line":
        core, conj = cyclic_reduce(free_reduce(g))
        if not core:
            raise NotLoxodromic("the identity has no axis")
        root, _ = primitive_root(core)
        return cls(conj, root)

    @property
    def period(self) -> int:
        return len(self.root)

    def point(self, t: int) -> Word:
        """The point at signed position ``t`` along the line."""
        step = _periodic(self.root, t) if t >= 0 else _periodic(inverse(self.root), -t)
        return mul(self.base, step)

    def _local(self, x: Sequence[int]) -> tuple[Word, int, int]:
        z = mul(inverse(self.base), x)
        fwd = common_prefix_len(z, _periodic(self.root, len(z)))
        bwd = common_prefix_len(z, _periodic(inverse(self.root), len(z)))
        return z, fwd, bwd

    def project(self, x: Sequence[int], thickness: int = 0) -> Word:
        """Nearest point of the ``thickness``-neighbourhood of the line to ``x``."""
        z, fwd, bwd = self._local(x)
        foot = max(fwd, bwd)
        reach = min(len(z), foot + thickness)
        return mul(self.base, z[:reach])

    def position(self, x: Sequence[int]) -> int:
        """Signed position of the foot of ``x`` on the line."""
        _, fwd, bwd = self._local(x)
        return fwd if fwd >= bwd else -bwd

    def distance(self, x: Sequence[int]) -> int:
        z, fwd, bwd = self._local(x)
        return len(z) - max(fwd, bwd)

    def canonical(self) -> tuple[Word, Word]:
        """A key equal for equal lines: shortest base in the coset ``base <root>``."""
        best = None
        n = len(self.base) // len(self.root) + 2
        for j in range(-n, n + 1):
            b = mul(self.base, _periodic(self.root, j * len(self.root)) if j >= 0
                    else _periodic(inverse(self.root), -j * len(self.root)))
            key = (len(b), b)
            if best is None or key < best:
                best = key
        return best[1], self.root

    def same_as(self, other: "Line") -> bool:
        if power_exponent(other.root, self.root) not in (1, -1):
            return False
        return power_exponent(mul(inverse(self.base), other.base), self.root) is not None


def lines_through(q: Sequence[int], root: Word) -> list[Line]:
    """Every translate of ``line(root)`` passing through the vertex ``q``."""
    base_line = Line((), root)
    return [Line(mul(q, inverse(base_line.point(s))), root) for s in range(len(root))]


def overlap_and_gap(l1: Line, l2: Line, window: int | None = None) -> tuple[int, int]:
    """Return ``(overlap, gap)`` for two distinct lines.

    ``overlap`` is the edge length of the shared segment (``-1`` if the lines
    are disjoint) and ``gap`` their distance (``0`` when they meet).
    """
    if window is None:
        window = 4 * (l1.period + l2.period) + len(l1.base) + len(l2.base) + 8
    while True:
        on = [t for t in range(-window, window + 1) if l2.distance(l1.point(t)) == 0]
        if on:
            lo, hi = min(on), max(on)
            if lo > -window and hi < window:
                return hi - lo, 0
        else:
            return -1, min(l2.distance(l1.point(t)) for t in range(-window, window + 1))
        if window > 1 << 16:
            raise ValueError("lines share an unbounded segment")
        window *= 2


def neighbourhood_overlap_diameter(l1: Line, l2: Line, e: int) -> int:
    """diam(N_e(l1) cap N_e(l2)) in the tree; 0 for an empty intersection."""
    overlap, gap = overlap_and_gap(l1, l2)
    if overlap >= 0:
        return overlap + 2 * e
    if gap > 2 * e:
        return 0
    return 2 * e - gap


def translate_constant(line: Line, e: int, rank: int) -> int:
    """sup over translates ``vL != L`` of diam(N_e(L) cap N_e(vL)).

    By periodicity it suffices to scan translates passing within ``2e`` of
    one fundamental domain of ``L``.
    """
    near = ball_words(rank, 2 * e)
    best = 0
    seen = set()
    for s in range(line.period):
        foot = line.point(s)
        for z in near:
            for cand in lines_through(mul(foot, z), line.root):
                if cand.same_as(line):
                    continue
                key = cand.canonical()
                if key in seen:
                    continue
                seen.add(key)
                best = max(best, neighbourhood_overlap_diameter(line, cand, e))
    return best


def ball_words(rank: int, radius: int) -> list[Word]:
    letters = [x for i in range(1, rank + 1) for x in (i, -i)]
    out: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(radius):
        nxt = []
        for w in frontier:
            for x in letters:
                if not w or w[-1] != -x:
                    nxt.append(w + (x,))
        out += nxt
        frontier = nxt
    return out
