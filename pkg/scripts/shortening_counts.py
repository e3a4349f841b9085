"""Shortening-free word counts over a sweep of tau values.

For U = {a^m, b^m} in F(a, b) and the family of conjugates of <a^k>, count
words with no shortening subword and check both counting inequalities.

    python3 scripts/shortening_counts.py --m 10 --k 40 --taus 5,15,25,35 --n 4
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass
from fractions import Fraction

from scgrowth import enumerate_ball, enumerate_shortening_free, make_presentation, orbit_family, verify_counting_bound
from scgrowth.words import power


@dataclass(frozen=True)
class Config:
    m: int = 10
    k: int = 40
    taus: tuple[Fraction, ...] = (Fraction(5), Fraction(15), Fraction(25), Fraction(35))
    n: int = 4
    orbit_radius: int = 25
    alpha: Fraction = Fraction(1)


def run(cfg: Config) -> list[list]:
    p = make_presentation("ab")
    ball = enumerate_ball(p, None, 0)
    U = [power((1,), cfg.m), power((2,), cfg.m)]
    fam = orbit_family(ball, power((1,), cfg.k), cfg.orbit_radius)
    rows = []
    for tau in cfg.taus:
        res = enumerate_shortening_free(U, fam, tau, (), cfg.alpha, ball, cfg.n, keep_words=False)
        rows.append([str(tau), *res.counts, verify_counting_bound(res.counts, len(U)).ok])
    return rows


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m", type=int, default=10)
    ap.add_argument("--k", type=int, default=40)
    ap.add_argument("--taus", default="5,15,25,35")
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--orbit-radius", type=int, default=25)
    a = ap.parse_args(argv)
    cfg = Config(a.m, a.k, tuple(Fraction(t) for t in a.taus.split(",")), a.n, a.orbit_radius)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["tau", *(f"B{j}" for j in range(cfg.n + 1)), "bound_ok"])
    out.writerows(run(cfg))


if __name__ == "__main__":
    main()
