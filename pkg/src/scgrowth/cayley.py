"""Finite Cayley balls, the word metric, and growth-rate brackets.

Two word-problem strategies are supported: ``free`` (no relators; free
reduction is a normal form) and ``dehn`` (relators verified C'(1/6); Dehn's
algorithm decides equality). Balls over the standard generators in the free
strategy are lazy: distances come straight from free reduction and the
element list is only materialised when asked for.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import sympy

from .errors import OutOfRange, ResourceCap, UnsupportedWordProblem
from .smallcancel import _c16_gate, dehn_normal, words_equal
from .words import Presentation, Word, exponent_sums, free_reduce, inverse, mul, shortlex_key

FREE = "FreeGroup"
DEHN = "DehnC16"
DEFAULT_CAP = 10**6


class _OutOfRangeValue:
    """Returned by :func:`distance` when the element lies outside the ball."""

    def __repr__(self):
        return "OUT_OF_RANGE"

    def __bool__(self):
        return False


OUT_OF_RANGE = _OutOfRangeValue()


def resolve_strategy(p: Presentation) -> str:
    if not p.relators:
        return FREE
    if _c16_gate(p):
        return DEHN
    raise UnsupportedWordProblem(
        "relators present but C'(1/6) is not verified; no certified word problem solver"
    )


@lru_cache(maxsize=64)
def _abelian_functionals(p: Presentation) -> tuple[tuple[int, ...], ...]:
    """Integer functionals on exponent-sum vectors that vanish on every relator.

    Their values are invariants of the group element (the free part of the
    abelianisation), used as a cheap pre-filter before the word problem.
    """
    if not p.relators:
        return tuple(tuple(int(i == j) for j in range(p.rank)) for i in range(p.rank))
    m = sympy.Matrix([list(exponent_sums(r, p.rank)) for r in p.relators])
    out = []
    for v in m.nullspace():
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in v])
        out.append(tuple(int(x * den) for x in v))
    return tuple(out)


def _invariant(p: Presentation, w: Sequence[int]) -> tuple[int, ...]:
    v = exponent_sums(w, p.rank)
    return tuple(sum(a * b for a, b in zip(f, v)) for f in _abelian_functionals(p))


class _BallBuilder:
    """Incremental BFS over products of ``gens`` with exact deduplication."""

    def __init__(self, p: Presentation, gens: Sequence[Word], strategy: str, cap: int):
        self.p = p
        self.gens = tuple(gens)
        self.strategy = strategy
        self.cap = cap
        self.spheres: list[list[Word]] = [[()]]
        self.level: dict[Word, int] = {(): 0}
        # dehn only: (level, invariant) -> canonical words
        self.buckets: dict[tuple, list[Word]] = {(0, _invariant(p, ())): [()]}
        self.count = 1
        self.oracle_calls = 0

    @property
    def radius(self) -> int:
        return len(self.spheres) - 1

    def _normal(self, w: Sequence[int]) -> Word:
        return free_reduce(w) if self.strategy == FREE else dehn_normal(w, self.p)

    def _find(self, w: Word, inv, levels) -> Word | None:
        if w in self.level and self.level[w] in levels:
            return w
        if self.strategy == FREE:
            return None
        for k in levels:
            for cand in self.buckets.get((k, inv), ()):
                self.oracle_calls += 1
                if words_equal(w, cand, self.p):
                    return cand
        return None

    def extend(self) -> None:
        n = len(self.spheres)
        new: list[Word] = []
        new_index: dict[Word, int] = {}
        for x in self.spheres[n - 1]:
            for u in self.gens:
                c = self._normal(mul(x, u))
                inv = _invariant(self.p, c) if self.strategy == DEHN else None
                if self.strategy == FREE:
                    lvl = self.level.get(c)
                    if lvl is not None:
                        # |d(1,xs) - d(1,x)| <= 1: only spheres n-2, n-1, n can hold it
                        assert lvl >= n - 2, "dedup window violated"
                        continue
                    hit = None
                else:
                    hit = self._find(c, inv, [k for k in (n - 2, n - 1) if k >= 0])
                    if hit is not None:
                        continue
                    hit = self._find(c, inv, [n])
                if hit is not None:
                    if shortlex_key(c) < shortlex_key(hit):
                        self._replace(hit, c, inv, n, new, new_index)
                    continue
                self.level[c] = n
                new_index[c] = len(new)
                new.append(c)
                if self.strategy == DEHN:
                    self.buckets.setdefault((n, inv), []).append(c)
                self.count += 1
                if self.count > self.cap:
                    raise ResourceCap(f"ball exceeds the cap of {self.cap} elements")
        self.spheres.append(new)

    def _replace(self, old, new_word, inv, n, sphere, index):
        i = index.pop(old)
        sphere[i] = new_word
        index[new_word] = i
        del self.level[old]
        self.level[new_word] = n
        bucket = self.buckets[(n, inv)]
        bucket[bucket.index(old)] = new_word

    def grow_to(self, radius: int) -> None:
        while self.radius < radius:
            self.extend()

    def locate(self, w: Sequence[int], radius: int) -> tuple[Word, int] | None:
        """Canonical representative and level of ``w`` if it lies within ``radius``."""
        c = self._normal(w)
        if c in self.level and self.level[c] <= radius:
            return c, self.level[c]
        if self.strategy == FREE:
            if self.radius >= radius:
                return None
            self.grow_to(radius)
            return (c, self.level[c]) if self.level.get(c, radius + 1) <= radius else None
        inv = _invariant(self.p, c)
        for k in range(radius + 1):
            if k > self.radius:
                self.extend()
            hit = self._find(c, inv, [k])
            if hit is not None:
                return hit, k
        return None


class WordMetric:
    """Word length in the standard generators (the metric of the space X)."""

    def __init__(self, p: Presentation, cap: int = DEFAULT_CAP):
        self.p = p
        self.strategy = resolve_strategy(p)
        self.cap = cap
        self._builder = None
        self._cache: dict[Word, int] = {}

    @property
    def builder(self) -> _BallBuilder:
        if self._builder is None:
            self._builder = _BallBuilder(self.p, [(x,) for x in self.p.letters], self.strategy, self.cap)
        return self._builder

    def length(self, w: Sequence[int]) -> int:
        if self.strategy == FREE:
            return len(free_reduce(w))
        c = dehn_normal(w, self.p)
        if c in self._cache:
            return self._cache[c]
        # the Dehn normal form is a spelling, so the geodesic length is at most |c|
        try:
            hit = self.builder.locate(c, len(c))
        except ResourceCap as exc:
            raise OutOfRange(f"length of {self.p.spell(c)!r} needs a ball beyond the cap") from exc
        assert hit is not None
        self._cache[c] = hit[1]
        return hit[1]

    def dist(self, x: Sequence[int], y: Sequence[int]) -> int:
        return self.length(mul(inverse(x), y))

    def normal(self, w: Sequence[int]) -> Word:
        """Canonical representative (exact for free, geodesic-shortlex for Dehn)."""
        if self.strategy == FREE:
            return free_reduce(w)
        c = dehn_normal(w, self.p)
        hit = self.builder.locate(c, self.length(c))
        return hit[0]

    def equal(self, x: Sequence[int], y: Sequence[int]) -> bool:
        return words_equal(x, y, self.p)


@lru_cache(maxsize=32)
def standard_metric(p: Presentation, cap: int = DEFAULT_CAP) -> WordMetric:
    return WordMetric(p, cap)


@dataclass
class GroupBall:
    """The radius-``radius`` ball of the word metric of the symmetric set ``generators``."""

    presentation: Presentation
    generators: tuple[Word, ...]
    radius: int
    strategy: str
    cap: int = DEFAULT_CAP
    _builder: _BallBuilder | None = field(default=None, repr=False)

    @property
    def standard(self) -> bool:
        return set(self.generators) == {(x,) for x in self.presentation.letters}

    @property
    def metric(self) -> WordMetric:
        return standard_metric(self.presentation, self.cap)

    @property
    def builder(self) -> _BallBuilder:
        if self._builder is None:
            if self.standard:
                self._builder = self.metric.builder
            else:
                self._builder = _BallBuilder(self.presentation, self.generators, self.strategy, self.cap)
        return self._builder

    @cached_property
    def spheres(self) -> list[list[Word]]:
        b = self.builder
        b.grow_to(self.radius)
        return [sorted(s, key=shortlex_key) for s in b.spheres[: self.radius + 1]]

    @property
    def elements(self) -> list[Word]:
        return [w for s in self.spheres for w in s]

    @property
    def sphere_sizes(self) -> list[int]:
        return [len(s) for s in self.spheres]

    @property
    def ball_sizes(self) -> list[int]:
        return list(_accumulate(self.sphere_sizes))

    @property
    def distance_index(self) -> dict[Word, int]:
        return {w: k for k, s in enumerate(self.spheres) for w in s}

    def word(self, text) -> Word:
        return self.presentation.word(text)

    def locate(self, w: Sequence[int]) -> tuple[Word, int] | None:
        """Canonical representative and U-distance from 1, or ``None`` outside the ball."""
        if self.standard and self.strategy == FREE:
            c = free_reduce(w)
            return (c, len(c)) if len(c) <= self.radius else None
        return self.builder.locate(w, self.radius)

    def xdist(self, x: Sequence[int], y: Sequence[int]) -> int:
        """Distance in the space X (standard generators), resolved in a scratch ball."""
        return self.metric.dist(x, y)

    def xlen(self, x: Sequence[int]) -> int:
        return self.metric.length(x)


def _accumulate(xs):
    total = 0
    for x in xs:
        total += x
        yield total


def _symmetric_generators(p: Presentation, U: Sequence) -> tuple[Word, ...]:
    gens = []
    for u in U:
        w = free_reduce(p.word(u))
        if w and w not in gens:
            gens.append(w)
    if set(gens) != {free_reduce(inverse(g)) for g in gens}:
        raise ValueError("generating set must be symmetric")
    return tuple(sorted(gens, key=shortlex_key))


def enumerate_ball(p: Presentation, U: Sequence | None, radius: int, cap: int = DEFAULT_CAP) -> GroupBall:
    """Ball of the given radius for the word metric of ``U`` (identity ignored).

    ``U=None`` means the standard generators and their inverses.
    """
    if radius < 0:
        raise ValueError("radius must be non-negative")
    strategy = resolve_strategy(p)
    gens = _symmetric_generators(p, [(x,) for x in p.letters] if U is None else U)
    ball = GroupBall(p, gens, radius, strategy, cap)
    if not (ball.standard and strategy == FREE):
        ball.spheres  # materialise now so cap violations surface here
    return ball


def distance(ball: GroupBall, g: Sequence[int], h: Sequence[int]):
    """U-word distance between ``g`` and ``h``, or ``OUT_OF_RANGE``."""
    hit = ball.locate(mul(inverse(g), h))
    return OUT_OF_RANGE if hit is None else hit[1]


@dataclass(frozen=True)
class FreeCertificate:
    """A subset ``S`` of ``U^c`` whose positive words form a free semigroup."""

    S: tuple[Word, ...]
    c: int
    note: str = ""


@dataclass
class GrowthReport:
    ball_sizes: list[int]
    fekete_upper: list[float]
    upper_bound: float
    lower_bound: float
    psg_ratio: float
    provenance: dict
    subadditive_ok: bool
    generator_count: int

    def to_csv(self) -> str:
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["n", "ball_size", "fekete_upper"])
        for n, f in enumerate(self.fekete_upper, start=1):
            wr.writerow([n, self.ball_sizes[n], repr(f)])
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "ball_sizes": self.ball_sizes,
            "fekete_upper": self.fekete_upper,
            "bracket": [self.lower_bound, self.upper_bound],
            "lower_bound": self.lower_bound,
            "upper_bound": self.upper_bound,
            "psg_ratio": self.psg_ratio,
            "subadditive_ok": self.subadditive_ok,
            "provenance": self.provenance,
        }


def _check_certificate(ball: GroupBall, cert: FreeCertificate, depth: int = 3) -> dict:
    p = ball.presentation
    S = [free_reduce(p.word(s)) for s in cert.S]
    prov = {"S": [p.spell(s) for s in S], "c": cert.c, "note": cert.note}
    in_ball = []
    for s in S:
        d = distance(ball, (), s)
        in_ball.append(d is not OUT_OF_RANGE and d <= cert.c)
    prov["S_in_U^c"] = all(in_ball) if cert.c <= ball.radius else None
    # desk-scale freeness check: positive S-words of length <= depth are pairwise distinct
    metric = ball.metric
    words = [()]
    frontier = [()]
    for _ in range(depth):
        frontier = [mul(w, s) for w in frontier for s in S]
        words += frontier
    normals = set()
    distinct = True
    for w in words:
        key = metric.normal(w)
        if key in normals:
            distinct = False
            break
        normals.add(key)
    prov["positive_words_distinct_up_to"] = depth if distinct else None
    return prov


def growth_rate_bounds(ball: GroupBall, free_cert: FreeCertificate | None = None) -> GrowthReport:
    """Bracket the exponential growth rate of ``U`` (identity adjoined).

    Upper side: the Fekete records ``(1/n) log |B(n)|``. Lower side: ``(1/c) log |S|``
    from a certificate that the positive words over ``S`` form a free semigroup.
    """
    if ball.radius < 2:
        raise ValueError("growth brackets need radius >= 2")
    sizes = ball.ball_sizes
    fek = [math.log(sizes[n]) / n for n in range(1, ball.radius + 1)]
    ok = all(
        sizes[m + n] <= sizes[m] * sizes[n]
        for m in range(ball.radius + 1)
        for n in range(ball.radius + 1 - m)
    )
    lower, prov = 0.0, {"source": "none"}
    if free_cert is not None:
        prov = _check_certificate(ball, free_cert)
        prov["source"] = "certificate"
        if prov["S_in_U^c"] is not False and prov["positive_words_distinct_up_to"]:
            lower = math.log(len(free_cert.S)) / free_cert.c
        else:
            prov["rejected"] = True
    k = len(ball.generators)
    return GrowthReport(
        ball_sizes=sizes,
        fekete_upper=fek,
        upper_bound=min(fek),
        lower_bound=lower,
        psg_ratio=lower / math.log(k) if k > 1 else 0.0,
        provenance=prov,
        subadditive_ok=ok,
        generator_count=k,
    )
