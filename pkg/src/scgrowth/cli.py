"""Command-line front end: ``scgrowth <subcommand> ...``.

Exit status 0 on success, 1 on domain errors (a JSON error object is
printed), 2 on usage errors. Reports go to stdout; progress to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field, fields
from fractions import Fraction
from typing import Sequence

from . import constants as K
from .cayley import FreeCertificate, enumerate_ball, growth_rate_bounds
from .errors import ScgrowthError
from .freesets import build_pingpong_set, check_reduced
from .hypgeom import energy_profile, estimate_delta
from .schemas import SCHEMAS
from .shortening import (
    build_moving_family,
    check_sc_condition,
    enumerate_shortening_free,
    orbit_family,
    verify_counting_bound,
)
from .smallcancel import check_small_cancellation, dehn_reduce
from .words import Presentation, parse_presentation

SUBCOMMANDS = (
    "check-sc", "dehn", "growth", "delta", "energy", "reduced",
    "pingpong", "family", "shortfree", "constants",
)


class UsageError(Exception):
    pass


def rational(text: str) -> Fraction:
    """Parse ``p/q`` or a decimal literal exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def word_list(text: str) -> list[str]:
    return [t for t in text.replace(",", " ").split() if t]


@dataclass
class RunConfig:
    subcommand: str
    presentation: str | None = None
    params: dict = field(default_factory=dict)
    fmt: str = "json"
    output: str | None = None


def _common(sp: argparse.ArgumentParser, presentation: bool = True) -> None:
    if presentation:
        sp.add_argument("presentation", help="presentation file (generators:/relators: lines)")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--output", help="write the report here instead of stdout")
    sp.add_argument("--threads", type=int, default=None)
    sp.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="scgrowth", description="Small cancellation checks, hyperbolic geometry on finite balls and growth estimates.")
    ap.add_argument("--schema", choices=SUBCOMMANDS, help="print the JSON schema of a subcommand and exit")
    sub = ap.add_subparsers(dest="subcommand")

    sp = sub.add_parser("check-sc", help="small cancellation verdict")
    _common(sp)
    sp.add_argument("--lambda", dest="lam", type=rational, default=Fraction(1, 6))
    sp.add_argument("--variant", default="cprime")

    sp = sub.add_parser("dehn", help="Dehn's algorithm on a word")
    _common(sp)
    sp.add_argument("word")

    sp = sub.add_parser("growth", help="ball sizes and growth-rate bracket")
    _common(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--gens", type=word_list, default=None, help="symmetric generating set, e.g. 'a,A,b,B'")
    sp.add_argument("--cert", type=word_list, default=None, help="free-semigroup certificate S")
    sp.add_argument("--cert-c", type=int, default=1, help="S lies in U^c")

    sp = sub.add_parser("delta", help="four-point delta of a ball")
    _common(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--mode", choices=("exhaustive", "sampled", "auto"), default="auto")
    sp.add_argument("--samples", type=int, default=100_000)

    sp = sub.add_parser("energy", help="l-infinity energy profile over a ball")
    _common(sp)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--set", dest="U", type=word_list, required=True)

    sp = sub.add_parser("reduced", help="alpha-reduced check")
    _common(sp)
    sp.add_argument("--set", dest="U", type=word_list, required=True)
    sp.add_argument("--basepoint", default="")
    sp.add_argument("--alpha", type=rational, required=True)
    sp.add_argument("--delta", type=rational, required=True)

    sp = sub.add_parser("pingpong", help="ping-pong set u g^b u^-1")
    _common(sp)
    sp.add_argument("--set", dest="U", type=word_list, required=True)
    sp.add_argument("--g", required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--alpha", type=rational, required=True)
    sp.add_argument("--delta", type=rational, required=True)

    sp = sub.add_parser("family", help="moving family of conjugates and its small cancellation condition")
    _common(sp)
    sp.add_argument("--h", required=True)
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--conjugators", type=word_list)
    grp.add_argument("--conjugator-radius", type=int)
    sp.add_argument("--eps", type=rational, default=Fraction(0))
    sp.add_argument("--delta", type=rational, default=Fraction(0))
    sp.add_argument("--lambda", dest="lam", type=rational, default=Fraction(1, 100))
    sp.add_argument("--mu", type=rational, default=Fraction(10))

    sp = sub.add_parser("shortfree", help="count shortening-free words")
    _common(sp)
    sp.add_argument("--set", dest="U", type=word_list, required=True)
    sp.add_argument("--h", required=True)
    sp.add_argument("--orbit-radius", type=int, required=True)
    sp.add_argument("--tau", type=rational, required=True)
    sp.add_argument("--alpha", type=rational, required=True)
    sp.add_argument("--delta", type=rational, default=Fraction(0))
    sp.add_argument("--basepoint", default="")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--emit-words", action="store_true")

    sp = sub.add_parser("constants", help="evaluate the constants pipeline")
    _common(sp, presentation=False)
    sp.add_argument("--input", action="append", default=[], metavar="KEY=VALUE")
    sp.add_argument("--xi-transfer", type=rational, default=None, help="also report growth_transfer(xi)")
    sp.add_argument("--pingpong-N", type=int, default=None)
    sp.add_argument("--pingpong-L", type=rational, default=Fraction(1))
    sp.add_argument("--pingpong-kappa", type=rational, default=Fraction(1))
    return ap


def _load(path: str) -> Presentation:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_presentation(fh.read())
    except OSError as exc:
        raise ScgrowthError(f"cannot read {path}: {exc.strerror}") from None


def _check_positive(name: str, value, allow_zero: bool = False) -> None:
    if value is None:
        return
    if value < 0 or (value == 0 and not allow_zero):
        raise UsageError(f"argument --{name}: must be {'non-negative' if allow_zero else 'positive'}")


def _validate(args) -> None:
    for name in ("radius", "n", "samples", "b"):
        if hasattr(args, name):
            _check_positive(name, getattr(args, name), allow_zero=name in ("radius", "n"))
    for name in ("alpha", "delta", "tau", "eps", "mu"):
        if hasattr(args, name):
            _check_positive(name, getattr(args, name), allow_zero=True)
    if getattr(args, "threads", None) is not None and args.threads < 1:
        raise UsageError("argument --threads: must be at least 1")
    if getattr(args, "lam", None) is not None and not 0 < args.lam <= 1:
        raise UsageError("argument --lambda: must lie in (0, 1]")


def config_from_args(args) -> RunConfig:
    skip = {"subcommand", "presentation", "format", "output", "schema"}
    params = {k: v for k, v in vars(args).items() if k not in skip}
    return RunConfig(args.subcommand, getattr(args, "presentation", None), params, args.format, args.output)


def _run(args) -> tuple[dict | str, int]:
    cmd = args.subcommand
    if cmd == "constants":
        kw = {}
        for item in args.input:
            if "=" not in item:
                raise UsageError(f"argument --input: expected KEY=VALUE, got {item!r}")
            k, v = item.split("=", 1)
            if k not in {f.name for f in fields(K.ConstantsInputs)}:
                raise UsageError(f"argument --input: unknown key {k!r}")
            kw[k] = int(v) if k in ("N", "U_size") else rational(v)
        out = K.constants_pipeline(**kw).to_json()
        if args.xi_transfer is not None:
            out["growth_transfer"] = K.as_json(K.growth_transfer(args.xi_transfer))
        if args.pingpong_N is not None:
            out["pingpong"] = K.pingpong_constants(args.pingpong_N, args.pingpong_L, args.pingpong_kappa).to_json()
        return out, 0

    p = _load(args.presentation)
    w = p.word
    if cmd == "check-sc":
        return check_small_cancellation(p, args.lam, args.variant).to_json(p), 0
    if cmd == "dehn":
        result, steps = dehn_reduce(w(args.word), p)
        return {
            "input": args.word,
            "normal_form": p.spell(result),
            "trivial": result == (),
            "steps": [
                {"position": s.position, "length": s.length, "relator": p.spell(s.relator),
                 "replacement": p.spell(s.replacement), "result": p.spell(s.result)}
                for s in steps
            ],
        }, 0
    if cmd == "growth":
        if args.radius < 2:
            raise UsageError("argument --radius: growth brackets need radius >= 2")
        ball = enumerate_ball(p, args.gens, args.radius)
        cert = FreeCertificate(tuple(w(s) for s in args.cert), args.cert_c) if args.cert else None
        rep = growth_rate_bounds(ball, cert)
        return (rep.to_csv() if args.format == "csv" else rep.to_json()), 0
    if cmd == "delta":
        ball = enumerate_ball(p, None, args.radius)
        print(f"scanning {len(ball.elements)} points", file=sys.stderr)
        d = estimate_delta(ball, args.mode, args.samples, args.seed, args.threads)
        n = len(ball.elements)
        mode = args.mode if args.mode != "auto" else ("exhaustive" if n**4 <= 2 * 10**7 else "sampled")
        return {"delta": str(d), "mode": mode, "points": n, "radius": args.radius, "seed": args.seed}, 0
    if cmd == "energy":
        ball = enumerate_ball(p, None, args.radius)
        return energy_profile(ball, [w(u) for u in args.U]).to_json(p), 0
    if cmd == "reduced":
        ball = enumerate_ball(p, None, 0)
        return check_reduced(ball, [w(u) for u in args.U], w(args.basepoint), args.alpha, args.delta).to_json(p), 0
    if cmd == "pingpong":
        ball = enumerate_ball(p, None, 0)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            res = build_pingpong_set(ball, [w(u) for u in args.U], w(args.g), args.b, args.alpha, args.delta)
        out = res.to_json(p)
        out["warnings"] = [str(c.message) for c in caught]
        return out, 0
    if cmd == "family":
        ball = enumerate_ball(p, None, 0)
        if args.conjugators is not None:
            fam = build_moving_family(ball, w(args.h), [w(u) for u in args.conjugators], args.eps, args.delta)
        else:
            conj = enumerate_ball(p, None, args.conjugator_radius).elements
            fam = build_moving_family(ball, w(args.h), conj, args.eps, args.delta)
        sc = check_sc_condition(fam, args.lam, args.mu, args.delta)
        out = fam.to_json(p)
        out["sc"] = {"sc1": sc.sc1, "sc2": sc.sc2, "verdict": sc.verdict,
                     "lambda": str(args.lam), "mu": str(args.mu), "delta": str(args.delta)}
        return out, 0
    if cmd == "shortfree":
        ball = enumerate_ball(p, None, 0)
        fam = orbit_family(ball, w(args.h), args.orbit_radius, 0, args.delta)
        U = [w(u) for u in args.U]
        res = enumerate_shortening_free(U, fam, args.tau, w(args.basepoint), args.alpha, ball, args.n,
                                        args.delta, keep_words=args.emit_words)
        if args.format == "csv":
            return res.to_csv(len(U)), 0
        check = verify_counting_bound(res.counts, len(U))
        spell_u = lambda x: args.U[abs(x) - 1] if x > 0 else "(" + args.U[abs(x) - 1] + ")^-1"  # noqa: E731
        out = {
            "counts": res.counts,
            "per_length": res.per_length,
            "bound_ok": check.ok,
            "members_scanned": res.members_scanned,
            "note": res.note,
        }
        if args.emit_words:
            out["words"] = [" ".join(spell_u(x) for x in wd) for wd in res.words]
        return out, 0
    raise UsageError(f"unknown subcommand {cmd!r}")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.schema:
        sys.stdout.write(json.dumps(SCHEMAS[args.schema], indent=2) + "\n")
        return 0
    if not args.subcommand:
        ap.print_usage(sys.stderr)
        print("scgrowth: error: a subcommand is required", file=sys.stderr)
        return 2
    cfg = config_from_args(args)
    try:
        _validate(args)
        report, status = _run(args)
    except UsageError as exc:
        ap.print_usage(sys.stderr)
        print(f"scgrowth {args.subcommand}: error: {exc}", file=sys.stderr)
        return 2
    except (ScgrowthError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        sys.stdout.write(json.dumps(err, indent=2) + "\n")
        return 1
    text = report if isinstance(report, str) else json.dumps(report, indent=2) + "\n"
    _emit(text, cfg.output)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
