"""Pieces, classical C'(lambda) / C''(lambda) checks, Dehn's algorithm."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import NoRelators, NotVerifiedC16
from .words import (
    Presentation,
    Word,
    common_prefix_len,
    cyclic_shifts,
    free_reduce,
    inverse,
    is_freely_reduced,
    mul,
)

C_PRIME = "cprime"
C_DOUBLE_PRIME = "cdoubleprime"
_VARIANT_ALIASES = {
    "cprime": C_PRIME, "c'": C_PRIME, "c′": C_PRIME, "prime": C_PRIME,
    "cdoubleprime": C_DOUBLE_PRIME, "c''": C_DOUBLE_PRIME, "c″": C_DOUBLE_PRIME,
    "doubleprime": C_DOUBLE_PRIME,
}


def normalize_variant(variant: str) -> str:
    try:
        return _VARIANT_ALIASES[variant.lower()]
    except KeyError:
        raise ValueError(f"unknown small cancellation variant {variant!r}") from None


@dataclass(frozen=True)
class SymmetrizedSet:
    elements: tuple[Word, ...]
    origin: dict  # element -> (relator index, shift, inverted)

    def __len__(self):
        return len(self.elements)


def symmetrize(p: Presentation) -> SymmetrizedSet:
    """All cyclic shifts of every relator and its inverse, deduplicated."""
    if not p.relators:
        raise NoRelators("presentation has no relators")
    elements: list[Word] = []
    origin: dict[Word, tuple[int, int, bool]] = {}
    for i, r in enumerate(p.relators):
        for inverted, base in ((False, r), (True, inverse(r))):
            for k, s in enumerate(cyclic_shifts(base)):
                if s not in origin:
                    origin[s] = (i, k, inverted)
                    elements.append(s)
    return SymmetrizedSet(tuple(elements), origin)


@dataclass
class SCReport:
    variant: str | None = None
    lam: Fraction | None = None
    max_piece_len: int = 0
    shortest_relator_len: int = 0
    verdict: bool | None = None
    witness: Word = ()
    per_pair: dict = field(default_factory=dict)
    ratio: Fraction = Fraction(0)

    def to_json(self, p: Presentation) -> dict:
        return {
            "variant": self.variant,
            "lambda": str(self.lam),
            "max_piece_len": self.max_piece_len,
            "shortest_relator_len": self.shortest_relator_len,
            "verdict": "pass" if self.verdict else "fail",
            "witness": p.spell(self.witness),
        }


def _pair_scan(s: SymmetrizedSet):
    """Yield ``(e1, e2, lcp)`` over ordered pairs of distinct elements."""
    els = s.elements
    for a in els:
        for b in els:
            if a is not b and a != b:
                yield a, b, common_prefix_len(a, b)


def compute_pieces(s: SymmetrizedSet) -> SCReport:
    rep = SCReport()
    rep.shortest_relator_len = min(len(e) for e in s.elements)
    best = -1
    for a, b, n in _pair_scan(s):
        key = (s.origin[a][0], s.origin[b][0])
        if n > rep.per_pair.get(key, -1):
            rep.per_pair[key] = n
        if n > best:
            best = n
            rep.witness = a[:n]
    rep.max_piece_len = max(best, 0)
    if best < 0:
        rep.witness = ()
    return rep


def check_small_cancellation(p: Presentation, lam, variant: str = C_PRIME) -> SCReport:
    """Verify C'(lam) (pieces vs each containing relator) or C''(lam) (vs the shortest relator)."""
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise ValueError("lambda must lie in (0, 1]")
    variant = normalize_variant(variant)
    if not p.relators:
        return SCReport(variant, lam, 0, 0, True, (), {}, Fraction(0))
    s = symmetrize(p)
    rep = compute_pieces(s)
    rep.variant, rep.lam = variant, lam
    if variant == C_DOUBLE_PRIME:
        rep.ratio = Fraction(rep.max_piece_len, rep.shortest_relator_len)
        rep.verdict = rep.max_piece_len < lam * rep.shortest_relator_len
    else:
        ratio = Fraction(0)
        ok = True
        for a, b, n in _pair_scan(s):
            m = min(len(a), len(b))
            ratio = max(ratio, Fraction(n, m))
            if not n < lam * m:
                ok = False
        rep.ratio, rep.verdict = ratio, ok
    return rep


@lru_cache(maxsize=64)
def _c16_gate(p: Presentation) -> bool:
    return not p.relators or bool(check_small_cancellation(p, Fraction(1, 6), C_PRIME).verdict)


@lru_cache(maxsize=64)
def _prefix_table(p: Presentation) -> dict[int, tuple[Word, ...]]:
    """Symmetrized elements bucketed by first letter."""
    table: dict[int, list[Word]] = {}
    for e in symmetrize(p).elements:
        table.setdefault(e[0], []).append(e)
    return {k: tuple(v) for k, v in table.items()}


def require_c16(p: Presentation) -> None:
    if not _c16_gate(p):
        raise NotVerifiedC16("presentation does not satisfy C'(1/6); Dehn's algorithm is not certified")


def _longest_relator_piece(w: Word, i: int, table) -> tuple[int, Word | None]:
    best, best_r = 0, None
    for r in table.get(w[i], ()):
        n = common_prefix_len(w[i : i + len(r)], r)
        if 2 * n > len(r) and n > best:
            best, best_r = n, r
    return best, best_r


@dataclass(frozen=True)
class RewriteStep:
    position: int
    length: int
    relator: Word
    replacement: Word
    result: Word


def dehn_reduce(w: Sequence[int], p: Presentation) -> tuple[Word, list[RewriteStep]]:
    """Dehn's algorithm: replace the leftmost-longest more-than-half relator subword, repeat."""
    require_c16(p)
    w = free_reduce(w)
    trace: list[RewriteStep] = []
    if not p.relators:
        return w, trace
    table = _prefix_table(p)
    maxlen = max(len(r) for r in p.relators)
    start = 0
    while True:
        hit = None
        for i in range(start, len(w)):
            n, r = _longest_relator_piece(w, i, table)
            if r is not None:
                hit = (i, n, r)
                break
        if hit is None:
            return w, trace
        i, n, r = hit
        repl = inverse(r[n:])
        w = mul(w[:i], repl, w[i + n :])
        trace.append(RewriteStep(i, n, r, repl, w))
        # the edit disturbs at most |repl| letters left of i; earlier starts stay dead
        start = max(0, i - len(repl) - maxlen)


def dehn_normal(w: Sequence[int], p: Presentation) -> Word:
    return dehn_reduce(w, p)[0]


def words_equal(w1: Sequence[int], w2: Sequence[int], p: Presentation) -> bool:
    if not p.relators:
        return free_reduce(w1) == free_reduce(w2)
    return dehn_reduce(mul(w1, inverse(w2)), p)[0] == ()


@dataclass(frozen=True)
class GreendlingerWitness:
    position: int
    length: int
    relator: Word


def greendlinger_witness(w: Sequence[int], p: Presentation) -> GreendlingerWitness | None:
    """Longest subword of ``w`` exceeding half of a symmetrized relator (leftmost on ties)."""
    require_c16(p)
    w = tuple(w)
    if not is_freely_reduced(w):
        raise ValueError("word must be freely reduced")
    if not p.relators:
        return None
    table = _prefix_table(p)
    best = None
    for i in range(len(w)):
        n, r = _longest_relator_piece(w, i, table)
        if r is not None and (best is None or n > best.length):
            best = GreendlingerWitness(i, n, r)
    return best
