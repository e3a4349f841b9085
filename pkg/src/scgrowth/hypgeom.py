"""Hyperbolic geometry on finite balls: Gromov products, delta, energy, axes.

Points are group elements acting on the Cayley graph X of the standard
generators; ``u`` acts by left multiplication. All distances are exact
integers, so Gromov products are half-integers and kept as ``Fraction``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cayley import FREE, GroupBall, enumerate_ball
from .errors import EmptyGeneratingSet, IdentityElement, NotLoxodromic
from .words import (
    Presentation,
    Word,
    cyclic_reduce,
    free_reduce,
    in_elementary_closure,
    inverse,
    mul,
    power,
    shortlex_key,
)

QUADRUPLE_CAP = 2 * 10**7


def gromov_product(ball: GroupBall, x, y, z) -> Fraction:
    """(x, y)_z = 1/2 (|x - z| + |y - z| - |x - y|)."""
    d = ball.xdist
    return Fraction(d(x, z) + d(y, z) - d(x, y), 2)


def distance_matrix(ball: GroupBall, points: Sequence[Word]) -> np.ndarray:
    n = len(points)
    D = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i + 1, n):
            D[i, j] = D[j, i] = ball.xdist(points[i], points[j])
    return D


def _delta_at(D: np.ndarray, t: int, chunk: int) -> int:
    """Twice the four-point defect with basepoint t: max over x, z of
    max_y min{(x,y)_t, (y,z)_t} - (x,z)_t, all products doubled."""
    G = D[:, t][:, None] + D[t, :][None, :] - D
    best = -(1 << 30)
    n = len(D)
    for s in range(0, n, chunk):
        blk = np.minimum(G[s : s + chunk, :, None], G[None, :, :]).max(axis=1)
        best = max(best, int((blk - G[s : s + chunk]).max()))
    return best


def estimate_delta(
    ball: GroupBall,
    mode: str = "exhaustive",
    samples: int = 100_000,
    seed: int = 0,
    threads: int | None = None,
) -> Fraction:
    """Largest four-point defect over quadruples of ball points, clamped at 0.

    ``exhaustive`` scans every quadruple (a certified value for the ball);
    ``sampled`` draws ``samples`` quadruples from ``seed``; ``auto`` is
    exhaustive up to 2e7 quadruples and sampled beyond.
    """
    points = ball.elements
    n = len(points)
    if n <= 1:
        return Fraction(0)
    if mode == "auto":
        mode = "exhaustive" if n**4 <= QUADRUPLE_CAP else "sampled"
    D = distance_matrix(ball, points)
    if mode == "exhaustive":
        chunk = max(1, 4_000_000 // (n * n))
        with ThreadPoolExecutor(max_workers=threads) as pool:
            best = max(pool.map(lambda t: _delta_at(D, t, chunk), range(n)))
    elif mode == "sampled":
        rng = np.random.default_rng(seed)
        q = rng.integers(0, n, size=(samples, 4))
        x, y, z, t = q.T
        gxy = D[x, t] + D[y, t] - D[x, y]
        gyz = D[y, t] + D[z, t] - D[y, z]
        gxz = D[x, t] + D[z, t] - D[x, z]
        best = int((np.minimum(gxy, gyz) - gxz).max())
    else:
        raise ValueError(f"unknown delta mode {mode!r}")
    return max(Fraction(0), Fraction(best, 2))


def four_point_holds(ball: GroupBall, delta) -> bool:
    """Re-scan every quadruple with plain loops and check the inequality at ``delta``."""
    pts = ball.elements
    D = distance_matrix(ball, pts).tolist()
    two_delta = 2 * Fraction(delta)
    n = len(pts)
    for t in range(n):
        Dt = D[t]
        for x in range(n):
            for y in range(n):
                gxy = Dt[x] + Dt[y] - D[x][y]
                for z in range(n):
                    gyz = Dt[y] + Dt[z] - D[y][z]
                    gxz = Dt[x] + Dt[z] - D[x][z]
                    if gxz < min(gxy, gyz) - two_delta:
                        return False
    return True


@dataclass
class EnergyReport:
    per_point: dict[Word, int]
    min_value: int
    argmin: Word
    skipped: int

    def to_json(self, p: Presentation) -> dict:
        return {
            "min_value": self.min_value,
            "argmin": p.spell(self.argmin) or "1",
            "scanned": len(self.per_point),
            "skipped": self.skipped,
            "per_point": {p.spell(k) or "1": v for k, v in self.per_point.items()},
        }


def energy_at(ball: GroupBall, U: Sequence[Word], x: Sequence[int]) -> int:
    """L(U, x) = max over u of |u x - x|."""
    if not U:
        raise EmptyGeneratingSet("energy needs a nonempty set")
    return max(ball.xdist(x, mul(u, x)) for u in U)


def energy_profile(ball: GroupBall, U: Sequence[Sequence[int]]) -> EnergyReport:
    """L(U, x) over ball points at distance <= radius - max|u|; minimum with shortlex tie-break."""
    U = [free_reduce(u) for u in U]
    if not U:
        raise EmptyGeneratingSet("energy needs a nonempty set")
    reach = ball.radius - max(ball.xlen(u) for u in U)
    per_point: dict[Word, int] = {}
    skipped = 0
    for k, sphere in enumerate(ball.spheres):
        for x in sphere:
            if k > reach:
                skipped += 1
                continue
            per_point[x] = energy_at(ball, U, x)
    if not per_point:
        raise EmptyGeneratingSet("no ball point is far enough from the boundary to scan")
    argmin = min(per_point, key=lambda x: (per_point[x], shortlex_key(x)))
    return EnergyReport(per_point, per_point[argmin], argmin, skipped)


@dataclass
class TranslationReport:
    tlen: int
    tlen_scan: int
    exact: bool
    stable_samples: list[tuple[int, Fraction]]
    stable_bracket: tuple[Fraction, Fraction]
    consistent: bool | None = None  # bracket vs tlen within 16 delta, when delta is given

    def to_json(self) -> dict:
        return {
            "tlen": self.tlen,
            "tlen_scan": self.tlen_scan,
            "exact": self.exact,
            "stable_samples": [[n, str(v)] for n, v in self.stable_samples],
            "stable_bracket": [str(v) for v in self.stable_bracket],
            "consistent": self.consistent,
        }


def translation_lengths(ball: GroupBall, g: Sequence[int], power_cap: int = 8, delta=None) -> TranslationReport:
    """Translation length (min displacement) and stable translation length samples."""
    g = free_reduce(g)
    if ball.xlen(g) == 0:
        raise IdentityElement("translation length of the identity")
    scan = min(ball.xdist(x, mul(g, x)) for x in ball.elements)
    samples = [(n, Fraction(ball.xlen(power(g, n)), n)) for n in range(1, power_cap + 1)]
    upper = min(v for _, v in samples)
    if ball.strategy == FREE:
        core = len(cyclic_reduce(g)[0])
        tlen, exact = core, True
        bracket = (Fraction(core), Fraction(core))
    else:
        tlen, exact = scan, False
        lower = max(Fraction(0), tlen - 16 * Fraction(delta)) if delta is not None else Fraction(0)
        bracket = (lower, upper)
    consistent = None
    if delta is not None:
        consistent = bracket[0] <= tlen <= bracket[1] + 16 * Fraction(delta)
    return TranslationReport(tlen, scan, exact, samples, bracket, consistent)


def stable_translation_length(ball: GroupBall, g: Sequence[int], power_cap: int = 8) -> Fraction:
    """Exact core length for free groups, else the best upper estimate from powers."""
    g = free_reduce(g)
    if ball.strategy == FREE:
        return Fraction(len(cyclic_reduce(g)[0]))
    return min(Fraction(ball.xlen(power(g, n)), n) for n in range(1, power_cap + 1))


def axis_threshold(tlen, delta=0, slack=None):
    """Displacement bound defining the axis: ||g|| + slack, slack defaulting to 8 delta."""
    return tlen + (8 * Fraction(delta) if slack is None else Fraction(slack))


def in_axis(ball: GroupBall, g: Word, x: Sequence[int], threshold) -> bool:
    return ball.xdist(x, mul(g, x)) <= threshold


def _neighbourhood_words(p: Presentation, eps) -> list[Word]:
    r = math.floor(eps)
    if r <= 0:
        return [()]
    return enumerate_ball(Presentation(p.generators), None, r).elements


@dataclass
class FellowTravellingReport:
    value: Fraction
    pairs: list[tuple[Word, Word, int]] = field(default_factory=list)
    skipped: list[tuple[Word, Word]] = field(default_factory=list)
    note: str = "axis sets A_g stand in for invariant cylinders"

    def to_json(self, p: Presentation) -> dict:
        return {
            "value": str(self.value),
            "pairs": [[p.spell(u) or "1", p.spell(v) or "1", d] for u, v, d in self.pairs],
            "skipped": [[p.spell(u) or "1", p.spell(v) or "1"] for u, v in self.skipped],
            "note": self.note,
        }


def translated_axis_neighbourhood(ball, g, u, threshold, nbhd) -> set[Word]:
    """Ball points within the neighbourhood radius of ``u A_g``."""
    ug = mul(u, g, inverse(u))
    out = set()
    for x in ball.elements:
        if any(in_axis(ball, ug, mul(x, z), threshold) for z in nbhd):
            out.add(x)
    return out


def diameter(ball: GroupBall, pts) -> int:
    pts = sorted(pts, key=shortlex_key)
    return max((ball.xdist(a, b) for i, a in enumerate(pts) for b in pts[i + 1 :]), default=0)


def fellow_travelling_delta(
    ball: GroupBall, g: Sequence[int], translates: Sequence[Sequence[int]], eps, delta=0, slack=None
) -> FellowTravellingReport:
    """max diam(u A^{+eps} cap v A^{+eps}) over translate pairs with u not ~_g v, inside the ball."""
    g = free_reduce(g)
    if ball.strategy != FREE or not cyclic_reduce(g)[0]:
        raise NotLoxodromic("fellow travelling needs a nontrivial element of a free group")
    tlen = len(cyclic_reduce(g)[0])
    thr = axis_threshold(tlen, delta, slack)
    nbhd = _neighbourhood_words(ball.presentation, eps)
    translates = [free_reduce(u) for u in translates]
    sets = {u: translated_axis_neighbourhood(ball, g, u, thr, nbhd) for u in translates}
    rep = FellowTravellingReport(Fraction(0))
    for i, u in enumerate(translates):
        for v in translates[i + 1 :]:
            if in_elementary_closure(mul(inverse(u), v), g):
                rep.skipped.append((u, v))
                continue
            d = diameter(ball, sets[u] & sets[v])
            rep.pairs.append((u, v, d))
            rep.value = max(rep.value, Fraction(d))
    return rep


def acylindricity_axis_bound(kappa, N, stable_tlen, delta) -> Fraction:
    """kappa + (N + 2) ||g||_inf + 100 delta."""
    return Fraction(kappa) + (N + 2) * Fraction(stable_tlen) + 100 * Fraction(delta)
