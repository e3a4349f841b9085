"""Words in free groups and presentation parsing.

A word is a tuple of nonzero ints: letter ``+(i+1)`` is generator ``i`` and
``-(i+1)`` its inverse. Strings use lowercase for generators and uppercase
for inverses, so ``"abAB"`` over generators ``a b`` is ``(1, 2, -1, -2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DuplicateGenerator, EmptyGeneratorList, ParseError, UnknownLetter

Word = tuple[int, ...]

EMPTY: Word = ()


def inverse(w: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(w))


def free_reduce(w: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain (single stack pass)."""
    out: list[int] = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def mul(*words: Sequence[int]) -> Word:
    """Freely reduced product of the given words."""
    out: list[int] = []
    for w in words:
        for x in w:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def power(w: Sequence[int], n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return free_reduce(tuple(w) * n)


def is_freely_reduced(w: Sequence[int]) -> bool:
    return all(w[i] != -w[i + 1] for i in range(len(w) - 1))


def is_cyclically_reduced(w: Sequence[int]) -> bool:
    return is_freely_reduced(w) and not (len(w) > 1 and w[0] == -w[-1])


def cyclic_reduce(w: Sequence[int]) -> tuple[Word, Word]:
    """Split a freely reduced word as ``conjugator * core * conjugator^-1``.

    Returns ``(core, conjugator)`` with ``core`` cyclically reduced.
    """
    w = tuple(w)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i : j + 1], w[:i]


def cyclic_shifts(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[k:] + w[:k] for k in range(len(w))] if w else [()]


def primitive_root(w: Sequence[int]) -> tuple[Word, int]:
    """Return ``(root, m)`` with ``w == root**m`` and ``root`` not a proper power.

    ``w`` must be cyclically reduced and nonempty.
    """
    w = tuple(w)
    n = len(w)
    for d in range(1, n + 1):
        if n % d == 0 and w[:d] * (n // d) == w:
            return w[:d], n // d
    raise AssertionError("unreachable")


def power_exponent(x: Sequence[int], root: Sequence[int]) -> int | None:
    """Return ``k`` with ``x == root**k`` (as reduced words), else ``None``.

    ``root`` must be cyclically reduced and nonempty, so its powers are
    already freely reduced.
    """
    x = tuple(x)
    root = tuple(root)
    n = len(root)
    if len(x) % n:
        return None
    k = len(x) // n
    if x == root * k:
        return k
    if x == inverse(root) * k:
        return -k
    return None


def letter_key(x: int) -> int:
    """Order a < A < b < B < ..."""
    return 2 * (abs(x) - 1) + (x < 0)


def shortlex_key(w: Sequence[int]) -> tuple:
    return (len(w), tuple(letter_key(x) for x in w))


def common_prefix_len(u: Sequence[int], v: Sequence[int]) -> int:
    n = min(len(u), len(v))
    i = 0
    while i < n and u[i] == v[i]:
        i += 1
    return i


def exponent_sums(w: Sequence[int], rank: int) -> tuple[int, ...]:
    v = [0] * rank
    for x in w:
        v[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(v)


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if not self.generators:
            raise EmptyGeneratorList("presentation needs at least one generator")
        seen = set()
        for g in self.generators:
            if len(g) != 1 or not ("a" <= g <= "z"):
                raise ParseError(f"generator names must be single lowercase letters, got {g!r}")
            if g in seen:
                raise DuplicateGenerator(f"duplicate generator {g!r}")
            seen.add(g)
        for r in self.relators:
            if not r or not is_cyclically_reduced(r):
                raise ParseError(f"relator {r!r} is empty or not cyclically reduced")
            if any(abs(x) > self.rank for x in r):
                raise ParseError(f"relator {r!r} uses an unknown generator")

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def letters(self) -> tuple[int, ...]:
        """All generators and their inverses, in shortlex letter order."""
        out = []
        for i in range(1, self.rank + 1):
            out += [i, -i]
        return tuple(out)

    def word(self, text: str | Sequence[int]) -> Word:
        """Parse ``text`` (or pass a word through unchanged). Not reduced."""
        if not isinstance(text, str):
            return tuple(text)
        text = text.strip()
        if text in ("", "1", "e"):
            return ()
        out = []
        for ch in text:
            low = ch.lower()
            if low not in self.generators:
                raise UnknownLetter(ch)
            i = self.generators.index(low) + 1
            out.append(i if ch == low else -i)
        return tuple(out)

    def spell(self, w: Sequence[int]) -> str:
        return "".join(
            self.generators[x - 1] if x > 0 else self.generators[-x - 1].upper() for x in w
        )

    def with_relators(self, *relators: str | Sequence[int]) -> "Presentation":
        rels = tuple(self.relators) + tuple(
            cyclic_reduce(free_reduce(self.word(r)))[0] for r in relators
        )
        return Presentation(self.generators, rels)

    def __str__(self):
        gens = " ".join(self.generators)
        rels = " ".join(self.spell(r) for r in self.relators)
        return f"generators: {gens}\nrelators: {rels}".rstrip() + "\n"


def make_presentation(generators: str | Sequence[str], relators: Sequence[str] = ()) -> Presentation:
    """Convenience constructor: ``make_presentation("ab", ["abAB"])``."""
    gens = tuple(generators.split()) if isinstance(generators, str) and " " in generators else tuple(generators)
    if not gens:
        raise EmptyGeneratorList("presentation needs at least one generator")
    seen = set()
    for g in gens:
        if g in seen:
            raise DuplicateGenerator(f"duplicate generator {g!r}")
        seen.add(g)
    return Presentation(gens).with_relators(*relators)


def parse_presentation(text: str) -> Presentation:
    """Parse the two-line ``generators:`` / ``relators:`` file format.

    Relators are freely and cyclically reduced on load.
    """
    lines = [
        ln.strip()
        for ln in text.replace("\r\n", "\n").split("\n")
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if len(lines) != 2 or not lines[0].startswith("generators:") or not lines[1].startswith("relators:"):
        raise ParseError("expected a 'generators:' line followed by a 'relators:' line")
    gens = lines[0][len("generators:") :].split()
    if not gens:
        raise EmptyGeneratorList("empty generator list")
    for g in gens:
        if len(g) != 1 or not ("a" <= g <= "z"):
            raise ParseError(f"generator names must be single lowercase letters, got {g!r}")
    rel_texts = lines[1][len("relators:") :].split()
    pres = make_presentation(gens)
    rels = []
    for r in rel_texts:
        core = cyclic_reduce(free_reduce(pres.word(r)))[0]
        if not core:
            raise ParseError(f"relator {r!r} is freely trivial")
        rels.append(core)
    return Presentation(pres.generators, tuple(rels))


def elementary_closure(g: Sequence[int]) -> tuple[Word, Word]:
    """For ``g != 1`` in a free group, return ``(root, conj)`` with
    ``E(g) = conj <root> conj^-1`` (the maximal cyclic subgroup containing ``g``)."""
    core, conj = cyclic_reduce(free_reduce(g))
    if not core:
        raise ValueError("the identity has no elementary closure")
    root, _ = primitive_root(core)
    return root, conj


def in_elementary_closure(x: Sequence[int], g: Sequence[int]) -> bool:
    root, conj = elementary_closure(g)
    y = free_reduce(tuple(inverse(conj)) + tuple(x) + tuple(conj))
    return power_exponent(y, root) is not None
