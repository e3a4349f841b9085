"""Cross-check the genus-2 surface ball against a matrix representation.

Builds the radius-r ball twice, once by Dehn's algorithm and once by BFS
over 2x2 matrices of a discrete faithful representation (see
tests/oracles.py), and compares sphere sizes and random word equalities.

    python3 scripts/surface_oracle_check.py --radius 4 --words 300 --seed 1
"""

from __future__ import annotations

import argparse
import pathlib
import random
import sys
import time
from dataclasses import dataclass

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "tests"))

from oracles import FuchsianSurface  # noqa: E402
from scgrowth import enumerate_ball, make_presentation, words_equal  # noqa: E402
from scgrowth.words import free_reduce, inverse, mul  # noqa: E402


@dataclass(frozen=True)
class Config:
    radius: int = 4
    words: int = 300
    max_len: int = 8
    seed: int = 1


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=int, default=4)
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--max-len", type=int, default=8)
    ap.add_argument("--seed", type=int, default=1)
    a = ap.parse_args(argv)
    cfg = Config(a.radius, a.words, a.max_len, a.seed)

    p = make_presentation("abcd", ["abABcdCD"])
    fs = FuchsianSurface()
    t0 = time.perf_counter()
    dehn = enumerate_ball(p, None, cfg.radius).sphere_sizes
    t1 = time.perf_counter()
    mats, _ = fs.ball(cfg.radius)
    t2 = time.perf_counter()
    print(f"dehn   spheres {dehn}  ({t1 - t0:.2f} s)")
    print(f"matrix spheres {mats}  ({t2 - t1:.2f} s)")

    rng = random.Random(cfg.seed)
    letters = [1, -1, 2, -2, 3, -3, 4, -4]
    ws = [free_reduce(rng.choice(letters) for _ in range(rng.randint(0, cfg.max_len))) for _ in range(cfg.words)]
    bad = 0
    for i in range(len(ws)):
        for j in range(i + 1, len(ws)):
            same = fs.moves_i(fs.matrix(mul(ws[i], inverse(ws[j])))) < 1e-30
            bad += same != words_equal(ws[i], ws[j], p)
    print(f"{len(ws) * (len(ws) - 1) // 2} pairs compared, {bad} disagreements")
    return int(bad > 0 or dehn != mats)


if __name__ == "__main__":
    sys.exit(main())
