"""Moving families of conjugate cyclic subgroups, shortening words and their counts.

Words over ``U`` are encoded like group words: letter ``+(i+1)`` is ``U[i]``
and ``-(i+1)`` its inverse. Everything runs in a free group acting on its
Cayley tree, where axes are exact lines (see ``axes``). Cylinders are
replaced by axis sets thickened by ``floor(4 delta)``, which is what the set
``{x : |hx - x| <= ||h|| + 8 delta}`` is in a tree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .axes import Line, ball_words, lines_through, neighbourhood_overlap_diameter, translate_constant
from .cayley import FREE, GroupBall
from .errors import (
    EmptyFamily,
    NotLoxodromic,
    NotReducedWord,
    PropertyViolation,
    TauBelowGate,
    UnsupportedStrategy,
)
from .words import (
    Presentation,
    Word,
    cyclic_reduce,
    free_reduce,
    in_elementary_closure,
    inverse,
    is_freely_reduced,
    mul,
    shortlex_key,
)

CYLINDER_NOTE = "cylinders approximated by axis sets of the listed subgroups"


@dataclass(frozen=True)
class Member:
    """The pair (u <h> u^-1, u . axis(h))."""

    h: Word
    u: Word
    line: Line


def _member(h: Word, u: Word) -> Member:
    return Member(h, u, Line.axis_of(mul(u, h, inverse(u))))


def _require_free(ball: GroupBall) -> None:
    if ball.strategy != FREE:
        raise UnsupportedStrategy("moving families are exact only in free groups")


@dataclass
class MovingFamily:
    """A family of conjugates of <h>: an explicit list, or every conjugate
    ``u <h> u^-1`` with ``|u| <= orbit_radius`` (enumerated lazily near a point)."""

    presentation: Presentation
    h: Word
    eps: Fraction
    delta: Fraction = Fraction(0)
    members: list[Member] | None = None
    orbit_radius: int | None = None
    note: str = CYLINDER_NOTE

    @property
    def thickness(self) -> int:
        return math.floor(4 * self.delta)

    @property
    def root(self) -> Word:
        return Line.axis_of(self.h).root

    @property
    def T_estimate(self) -> int:
        """Translation length of h: its cyclic core length (exact in a tree)."""
        return len(cyclic_reduce(self.h)[0])

    @property
    def Delta_estimate(self) -> int:
        e = self.thickness + math.floor(self.eps)
        if self.members is not None:
            return max(
                (neighbourhood_overlap_diameter(a.line, b.line, e)
                 for i, a in enumerate(self.members) for b in self.members[i + 1 :]),
                default=0,
            )
        # the full orbit is invariant, so one line against its translates suffices
        return translate_constant(Line.axis_of(self.h), e, self.presentation.rank)

    def _orbit_rep(self, base: Word) -> Word | None:
        """Shortest conjugator for the member whose line is ``base . line(root)``,
        or ``None`` if it exceeds ``orbit_radius``."""
        root = self.root
        _, conj = cyclic_reduce(free_reduce(self.h))
        n = (len(base) + len(conj)) // len(root) + 2
        best = None
        for j in range(-n, n + 1):
            step = root * j if j >= 0 else inverse(root) * (-j)
            u = mul(base, step, inverse(conj))
            if best is None or shortlex_key(u) < shortlex_key(best):
                best = u
        if self.orbit_radius is not None and len(best) > self.orbit_radius:
            return None
        return best

    def members_near(self, p: Sequence[int], radius: int) -> list[Member]:
        """Members whose line passes within ``radius`` of ``p``."""
        p = free_reduce(p)
        if self.members is not None:
            return [m for m in self.members if m.line.distance(p) <= radius]
        out: dict[tuple, Member] = {}
        for z in ball_words(self.presentation.rank, radius):
            for line in lines_through(mul(p, z), self.root):
                key = line.canonical()
                if key in out:
                    continue
                u = self._orbit_rep(line.base)
                if u is not None:
                    out[key] = _member(self.h, u)
        return sorted(out.values(), key=lambda m: shortlex_key(m.u))

    def to_json(self, p: Presentation) -> dict:
        return {
            "h": p.spell(self.h),
            "eps": str(self.eps),
            "members": None if self.members is None else [p.spell(m.u) or "1" for m in self.members],
            "orbit_radius": self.orbit_radius,
            "T_estimate": self.T_estimate,
            "Delta_estimate": self.Delta_estimate,
            "note": self.note,
        }


def build_moving_family(
    ball: GroupBall, h: Sequence[int], conjugators: Sequence[Sequence[int]], eps=0, delta=0
) -> MovingFamily:
    """Explicit family of conjugates, deduplicated: u1 ~ u2 iff u1^-1 u2 normalises <h>."""
    _require_free(ball)
    h = free_reduce(h)
    if not cyclic_reduce(h)[0]:
        raise NotLoxodromic("h must be nontrivial")
    if not conjugators:
        raise EmptyFamily("no conjugators given")
    kept: list[Word] = []
    for u in (free_reduce(u) for u in conjugators):
        if not any(in_elementary_closure(mul(inverse(v), u), h) for v in kept):
            kept.append(u)
    return MovingFamily(ball.presentation, h, Fraction(eps), Fraction(delta), [_member(h, u) for u in kept])


def orbit_family(ball: GroupBall, h: Sequence[int], radius: int, eps=0, delta=0) -> MovingFamily:
    """All conjugates u <h> u^-1 with |u| <= radius."""
    _require_free(ball)
    h = free_reduce(h)
    if not cyclic_reduce(h)[0]:
        raise NotLoxodromic("h must be nontrivial")
    return MovingFamily(ball.presentation, h, Fraction(eps), Fraction(delta), None, radius)


@dataclass
class SCConditionReport:
    sc1: bool
    sc2: bool
    Delta: int
    T: int

    @property
    def verdict(self) -> bool:
        return self.sc1 and self.sc2

    def __bool__(self):
        return self.verdict


def check_sc_condition(fam: MovingFamily, lam, mu, delta) -> SCConditionReport:
    """Delta < lam T (first condition) and T > mu delta (second)."""
    D, T = fam.Delta_estimate, fam.T_estimate
    return SCConditionReport(D < Fraction(lam) * T, T > Fraction(mu) * Fraction(delta), D, T)


def evaluate(w: Sequence[int], U: Sequence[Word]) -> Word:
    return mul(*(U[x - 1] if x > 0 else inverse(U[-x - 1]) for x in w))


def path_points(w: Sequence[int], U: Sequence[Word], p: Word) -> list[Word]:
    """x_0 = p, x_i = u_1 ... u_i p."""
    pts = [p]
    acc: Word = ()
    for x in w:
        acc = mul(acc, U[x - 1] if x > 0 else inverse(U[-x - 1]))
        pts.append(mul(acc, p))
    return pts


@dataclass
class ShorteningVerdict:
    is_shortening: bool
    y0: Word
    yn: Word
    proj_gap: int
    end_margins: tuple[Fraction, Fraction]
    member: int | None = None
    note: str = CYLINDER_NOTE


def _tau_gate(tau, delta, Delta0, L0) -> None:
    if Delta0 is not None and L0 is not None:
        if Fraction(tau) < Fraction(Delta0) + 2 * Fraction(L0) + 223 * Fraction(delta):
            raise TauBelowGate("tau must be at least Delta0 + 2 L0 + 223 delta")


def _verdict(pts: list[Word], first: Word, last: Word, member: Member, tau, p: Word, alpha, thickness: int) -> ShorteningVerdict:
    line = member.line
    y0 = line.project(pts[0], thickness)
    yn = line.project(pts[-1], thickness)
    gap = len(mul(inverse(y0), yn))
    m0 = Fraction(len(mul(inverse(p), first, p)), 2) - alpha - len(mul(inverse(pts[0]), y0))
    mn = Fraction(len(mul(inverse(p), last, p)), 2) - alpha - len(mul(inverse(pts[-1]), yn))
    ok = gap > tau and m0 >= 0 and mn >= 0
    return ShorteningVerdict(ok, y0, yn, gap, (m0, mn))


def _letter(x: int, U: Sequence[Word]) -> Word:
    return U[x - 1] if x > 0 else inverse(U[-x - 1])


def is_shortening_word(
    w: Sequence[int],
    member: Member,
    tau,
    U: Sequence[Sequence[int]],
    p: Sequence[int] = (),
    alpha=1,
    ball: GroupBall | None = None,
    delta=0,
    Delta0=None,
    L0=None,
) -> ShorteningVerdict:
    """Test the projection-gap and end-margin conditions for ``w`` over ``member``."""
    if ball is not None:
        _require_free(ball)
    w = tuple(w)
    if not w or not is_freely_reduced(w):
        raise NotReducedWord("shortening words are nonempty reduced words over U")
    _tau_gate(tau, delta, Delta0, L0)
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    pts = path_points(w, U, p)
    return _verdict(pts, _letter(w[0], U), _letter(w[-1], U), member, Fraction(tau), p,
                    Fraction(alpha), math.floor(4 * Fraction(delta)))


def energy(U: Sequence[Word], p: Word) -> int:
    return max(len(mul(inverse(p), u, p)) for u in U)


def find_minimal_shortenings(
    member: Member,
    tau,
    U: Sequence[Sequence[int]],
    p: Sequence[int] = (),
    alpha=1,
    ball: GroupBall | None = None,
    max_len: int = 4,
    delta=0,
) -> list[tuple[int, ...]]:
    """All minimal shortening words of U-length <= max_len (at most two are possible)."""
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    tau, alpha, delta = Fraction(tau), Fraction(alpha), Fraction(delta)
    thick = math.floor(4 * delta)
    found: list[tuple[int, ...]] = []
    letters = [x for i in range(1, len(U) + 1) for x in (i, -i)]
    stack: list[tuple[tuple[int, ...], list[Word]]] = [((), [p])]
    while stack:
        w, pts = stack.pop()
        for x in reversed(letters):
            if w and w[-1] == -x:
                continue
            w2 = w + (x,)
            pts2 = pts + [mul(pts[-1], inverse(p), _letter(x, U), p)]
            v = _verdict(pts2, _letter(w2[0], U), _letter(x, U), member, tau, p, alpha, thick)
            if v.is_shortening:
                found.append(w2)
            elif len(w2) < max_len:
                stack.append((w2, pts2))
    found.sort(key=shortlex_key)
    if len(found) > 2:
        raise PropertyViolation(f"{len(found)} minimal shortening words over one member")
    L = energy(U, p)
    for w in found:
        if not (tau - 50 * delta) / L <= len(w) <= tau / alpha + 1:
            raise PropertyViolation(f"minimal shortening word of length {len(w)} outside the length window")
    return found


@dataclass
class ShorteningFreeCounts:
    counts: list[int]
    per_length: list[int]
    words: list[tuple[int, ...]] = field(default_factory=list)
    excluded: list[tuple[tuple[int, ...], int, int]] = field(default_factory=list)
    members_scanned: int = 0
    note: str = CYLINDER_NOTE

    def to_csv(self, U_size: int) -> str:
        rows = ["k,count,bound_ok"]
        for k, c in enumerate(self.counts):
            ok = c >= U_size**k and (k == 0 or c >= U_size * self.counts[k - 1])
            rows.append(f"{k},{c},{str(ok).lower()}")
        return "\n".join(rows) + "\n"


def _end_radius(U: Sequence[Word], p: Word, alpha: Fraction) -> int:
    """Members farther than this from p can never satisfy the start margin."""
    return max(0, math.floor(max(Fraction(len(mul(inverse(p), u, p)), 2) for u in U) - alpha))


def enumerate_shortening_free(
    U: Sequence[Sequence[int]],
    fam: MovingFamily | None,
    tau,
    p: Sequence[int] = (),
    alpha=1,
    ball: GroupBall | None = None,
    n: int = 4,
    delta=0,
    keep_words: bool = True,
) -> ShorteningFreeCounts:
    """Counts |F(tau) cap B_U(k)| for k = 0..n relative to the members of ``fam``.

    A word is excluded once some subword, read from ``p``, is shortening over
    some member. Excluded prefixes are not extended.
    """
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    tau, alpha, delta = Fraction(tau), Fraction(alpha), Fraction(delta)
    thick = math.floor(4 * delta)
    members = [] if fam is None else fam.members_near(p, _end_radius(U, p, alpha) + thick)
    per_length = [0] * (n + 1)
    per_length[0] = 1
    out = ShorteningFreeCounts([], per_length, [()] if keep_words else [], [], len(members))
    letters = [x for i in range(1, len(U) + 1) for x in (i, -i)]
    gens = {x: _letter(x, U) for x in letters}

    def flagged(w: tuple[int, ...]) -> tuple[int, int] | None:
        # subwords ending at the last letter, read from p
        for i in range(len(w)):
            sub = w[i:]
            pts = [p]
            for x in sub:
                pts.append(mul(pts[-1], inverse(p), gens[x], p))
            hits = [j for j, m in enumerate(members)
                    if _verdict(pts, gens[sub[0]], gens[sub[-1]], m, tau, p, alpha, thick).is_shortening]
            if len(hits) > 1:
                raise PropertyViolation("a word is shortening over two distinct members")
            if hits:
                return i, hits[0]
        return None

    stack: list[tuple[int, ...]] = [()]
    while stack:
        w = stack.pop()
        if len(w) == n:
            continue
        for x in reversed(letters):
            if w and w[-1] == -x:
                continue
            w2 = w + (x,)
            hit = flagged(w2)
            if hit is not None:
                out.excluded.append((w2, hit[0], hit[1]))
                continue
            per_length[len(w2)] += 1
            if keep_words:
                out.words.append(w2)
            stack.append(w2)
    total = 0
    for c in per_length:
        total += c
        out.counts.append(total)
    out.words.sort(key=shortlex_key)
    out.excluded.sort(key=lambda t: shortlex_key(t[0]))
    return out


@dataclass
class CountingCheck:
    ok: bool
    step_failures: list[int]
    power_failures: list[int]

    def __bool__(self):
        return self.ok


def verify_counting_bound(counts: Sequence[int], U_size: int) -> CountingCheck:
    """c(k+1) >= |U| c(k) for consecutive pairs and c(k) >= |U|^k for every k."""
    steps = [k for k in range(len(counts) - 1) if counts[k + 1] < U_size * counts[k]]
    powers = [k for k, c in enumerate(counts) if c < U_size**k]
    return CountingCheck(not steps and not powers, steps, powers)


def find_shortening_subword(
    w: Sequence[int], fam: MovingFamily, tau, U: Sequence[Sequence[int]], p: Sequence[int] = (), alpha=1, delta=0
) -> tuple[int, int, Member] | None:
    """First subword ``w[i:j]`` that is tau-shortening over a member near p."""
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    tau, alpha = Fraction(tau), Fraction(alpha)
    thick = math.floor(4 * Fraction(delta))
    members = fam.members_near(p, _end_radius(U, p, alpha) + thick)
    w = tuple(w)
    for i in range(len(w)):
        for j in range(i + 1, len(w) + 1):
            sub = w[i:j]
            pts = path_points(sub, U, p)
            for m in members:
                if _verdict(pts, _letter(sub[0], U), _letter(sub[-1], U), m, tau, p, alpha, thick).is_shortening:
                    return i, j, m
    return None


def endpoint_projection_gap(w: Sequence[int], member: Member, U: Sequence[Sequence[int]], p: Sequence[int] = (), delta=0) -> int:
    """|y_0 - y_n| for the projections of p and w p on the member line."""
    U = [free_reduce(u) for u in U]
    p = free_reduce(p)
    thick = math.floor(4 * Fraction(delta))
    y0 = member.line.project(p, thick)
    yn = member.line.project(mul(evaluate(w, U), p), thick)
    return len(mul(inverse(y0), yn))
