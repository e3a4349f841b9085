"""Reduced subsets, elementary classes U(g) and the ping-pong constructor."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .axes import Line, translate_constant
from .cayley import FREE, GroupBall
from .errors import (
    BBelowThreshold,
    InputOutOfRange,
    NonPositiveTranslation,
    NotLoxodromic,
    PropertyViolation,
    UnsupportedStrategy,
)
from .words import (
    Presentation,
    Word,
    cyclic_reduce,
    free_reduce,
    in_elementary_closure,
    inverse,
    mul,
    power,
)


@dataclass
class ReducedReport:
    alpha: Fraction
    delta: Fraction
    basepoint: Word
    pair_margins: dict[tuple[Word, Word], tuple[Fraction, Fraction]] = field(default_factory=dict)
    verdict: bool = False
    failing_pair: tuple[Word, Word] | None = None
    reason: str = ""

    def to_json(self, p: Presentation) -> dict:
        sp = lambda w: p.spell(w) or "1"  # noqa: E731
        return {
            "alpha": str(self.alpha),
            "delta": str(self.delta),
            "basepoint": sp(self.basepoint),
            "verdict": self.verdict,
            "failing_pair": [sp(u) for u in self.failing_pair] if self.failing_pair else None,
            "reason": self.reason,
            "pair_margins": [
                {"pair": [sp(u), sp(v)], "product": str(g), "threshold": str(t)}
                for (u, v), (g, t) in self.pair_margins.items()
            ],
        }


def symmetric_closure(U: Sequence[Sequence[int]]) -> list[Word]:
    """U followed by the inverses, in that order, duplicates dropped."""
    out: list[Word] = []
    for w in [free_reduce(u) for u in U] + [inverse(free_reduce(u)) for u in U]:
        if w not in out:
            out.append(w)
    return out


def check_reduced(ball: GroupBall, U: Sequence[Sequence[int]], p: Sequence[int], alpha, delta) -> ReducedReport:
    """Is U alpha-reduced at p: U, U^-1 disjoint and all pair products under threshold."""
    alpha, delta = Fraction(alpha), Fraction(delta)
    if alpha < 3 * delta:
        raise InputOutOfRange("alpha must be at least 3 delta")
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    rep = ReducedReport(alpha, delta, p)
    for u in U:
        for v in U:
            if ball.metric.equal(u, inverse(v)):
                rep.failing_pair = (u, v)
                rep.reason = "U meets its inverse set"
                return rep
    V = U + [inverse(u) for u in U]
    disp = {v: ball.xdist(mul(v, p), p) for v in V}
    ok = True
    for i, u in enumerate(V):
        for v in V[i + 1 :]:
            prod = Fraction(ball.xdist(mul(u, p), p) + ball.xdist(mul(v, p), p) - ball.xdist(mul(u, p), mul(v, p)), 2)
            thr = Fraction(min(disp[u], disp[v]), 2) - alpha - 50 * delta
            rep.pair_margins[(u, v)] = (prod, thr)
            if ok and not prod < thr:
                ok = False
                rep.failing_pair = (u, v)
                rep.reason = "Gromov product at or above threshold"
    rep.verdict = ok
    if ok and any(d <= 2 * (alpha + 50 * delta) for d in disp.values()):
        raise PropertyViolation("a reduced set moved the basepoint by at most 2(alpha + 50 delta)")
    return rep


@dataclass
class ElementaryClasses:
    representatives: list[Word]
    classes: list[list[Word]]


def classes_mod_elementary(
    U: Sequence[Sequence[int]], g: Sequence[int], presentation: Presentation | None = None
) -> ElementaryClasses:
    """Split U by u ~ v iff u^-1 v lies in the maximal cyclic subgroup containing g.

    Exact in free groups only.
    """
    if presentation is not None and presentation.relators:
        raise UnsupportedStrategy("elementary closures are only exact in free groups")
    if not cyclic_reduce(free_reduce(g))[0]:
        raise NotLoxodromic("g must be nontrivial")
    classes: list[list[Word]] = []
    for u in (free_reduce(u) for u in U):
        for cls in classes:
            if in_elementary_closure(mul(inverse(cls[0]), u), g):
                cls.append(u)
                break
        else:
            classes.append([u])
    return ElementaryClasses([c[0] for c in classes], classes)


def pingpong_b0(stable_tlen_g, delta_g, energy_LUp, delta, alpha) -> Fraction:
    """(2 / ||g||_inf) (Delta(g) + 5 L(U,p) + 104 delta + alpha)."""
    t = Fraction(stable_tlen_g)
    if t <= 0:
        raise NonPositiveTranslation("stable translation length must be positive")
    vals = [Fraction(v) for v in (delta_g, energy_LUp, delta, alpha)]
    if any(v < 0 for v in vals):
        raise InputOutOfRange("b0 inputs must be nonnegative")
    dg, L, d, a = vals
    return 2 / t * (dg + 5 * L + 104 * d + a)


def axis_fellow_travelling(presentation: Presentation, g: Sequence[int], delta=0) -> int:
    """Delta(g) for a free group: translates of the axis, thickened by 20 delta."""
    line = Line.axis_of(g)
    return translate_constant(line, math.floor(20 * Fraction(delta)), presentation.rank)


def loxodromic_count_a0(N, energy_LU, stable_tlen_g) -> Fraction:
    """2N(8 L(U) / ||g||_inf + 1)."""
    return 2 * Fraction(N) * (Fraction(energy_LU) / Fraction(stable_tlen_g) * 8 + 1)


@dataclass
class PingPongResult:
    S: list[Word]
    report: ReducedReport
    b: int
    b0: Fraction
    classes: ElementaryClasses
    u_lengths: list[int]
    posts: dict[str, bool]

    def to_json(self, p: Presentation) -> dict:
        return {
            "S": [p.spell(s) for s in self.S],
            "b": self.b,
            "b0": str(self.b0),
            "classes": [[p.spell(u) for u in c] for c in self.classes.classes],
            "u_lengths": self.u_lengths,
            "posts": self.posts,
            "report": self.report.to_json(p),
        }


def build_pingpong_set(
    ball: GroupBall,
    U: Sequence[Sequence[int]],
    g: Sequence[int],
    b: int,
    alpha,
    delta,
    p: Sequence[int] = (),
) -> PingPongResult:
    """S = {u g^b u^-1 : u in U(g)}, re-verified alpha-reduced at p rather than trusted.

    ``g`` must belong to ``U``, so each element of S is a U-word of length b + 2.
    """
    g = free_reduce(g)
    if not cyclic_reduce(g)[0]:
        raise NotLoxodromic("g must be loxodromic")
    if ball.strategy != FREE:
        raise UnsupportedStrategy("the ping-pong constructor needs exact elementary closures")
    U = [free_reduce(u) for u in U]
    pres = ball.presentation
    tlen = len(cyclic_reduce(g)[0])
    p = free_reduce(p)
    L = max(ball.xdist(mul(u, p), p) for u in U)
    b0 = pingpong_b0(tlen, axis_fellow_travelling(pres, g, delta), L, delta, alpha)
    if b < b0:
        warnings.warn(f"b = {b} is below b0 = {float(b0):.4f}", BBelowThreshold, stacklevel=2)
    classes = classes_mod_elementary(U, g, pres)
    S = [mul(u, power(g, b), inverse(u)) for u in classes.representatives]
    # u g^b u^-1 spelled over U has length b + 2 when g is a letter of U
    u_lengths = [(b + 2) if g in U and u else b for u in classes.representatives]
    report = check_reduced(ball, S, p, alpha, delta)
    posts = {
        "in_U_power": g in U and all(n <= b + 2 for n in u_lengths),
        "size_matches_classes": len(set(S)) == len(classes.representatives),
        "reduced": report.verdict,
    }
    return PingPongResult(S, report, b, b0, classes, u_lengths, posts)
