"""Growth-rate brackets for a presentation over increasing radii.

    python3 scripts/growth_brackets.py presentations/f2.txt --max-radius 8 --cert a,b
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from dataclasses import dataclass

from scgrowth import FreeCertificate, enumerate_ball, growth_rate_bounds, parse_presentation


@dataclass(frozen=True)
class Config:
    presentation: str
    max_radius: int = 8
    cert: tuple[str, ...] = ()
    cert_c: int = 1


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("presentation")
    ap.add_argument("--max-radius", type=int, default=8)
    ap.add_argument("--cert", default="")
    ap.add_argument("--cert-c", type=int, default=1)
    a = ap.parse_args(argv)
    cfg = Config(a.presentation, a.max_radius, tuple(s for s in a.cert.split(",") if s), a.cert_c)

    with open(cfg.presentation, encoding="utf-8") as fh:
        p = parse_presentation(fh.read())
    cert = FreeCertificate(tuple(p.word(s) for s in cfg.cert), cfg.cert_c) if cfg.cert else None
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["radius", "ball_size", "lower", "upper", "width"])
    for r in range(2, cfg.max_radius + 1):
        rep = growth_rate_bounds(enumerate_ball(p, None, r), cert)
        out.writerow([r, rep.ball_sizes[-1], f"{rep.lower_bound:.6f}", f"{rep.upper_bound:.6f}",
                      f"{rep.upper_bound - rep.lower_bound:.6f}"])
    if p.rank == 2 and not p.relators:
        print(f"# free group of rank 2: true rate log 3 = {math.log(3):.6f}", file=sys.stderr)


if __name__ == "__main__":
    main()
