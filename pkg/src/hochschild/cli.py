"""Command-line front end: ``hochschild <command> ...`` (or ``python -m hochschild``)."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import checks, dyck, enumeration, invariants
from . import triword as tw
from .poset import FinitePoset

LIMITS = {"tr": (0, 14), "mu": (1, 14), "spine": (1, 14), "F": (1, 8)}


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_range(parser: argparse.ArgumentParser, variant: str, n: int) -> None:
    lo, hi = LIMITS[variant]
    if not lo <= n <= hi:
        parser.error(f"--n must lie in [{lo}, {hi}] for variant {variant}")


def _poset(variant: str, n: int) -> FinitePoset:
    if variant == "tr":
        return tw.hasse(n)
    if variant == "mu":
        return tw.hasse(n).induced(enumeration.generate_mu(n))
    if variant == "spine":
        return invariants.spine(n)
    return dyck.generate_F(n)


def cmd_generate(args, parser) -> int:
    _check_range(parser, args.variant, args.n)
    if args.variant == "tr" and args.n == 0:
        words = [tw.EMPTY]
    else:
        words = list(_poset(args.variant, args.n).elements)
    _emit("".join(w + "\n" for w in words), args.out)
    return 0


def cmd_export(args, parser) -> int:
    _check_range(parser, args.variant, args.n)
    if args.variant == "tr" and args.n == 0:
        parser.error("export needs n >= 1")
    p = _poset(args.variant, args.n)
    text = p.to_dot() if args.format == "dot" else p.to_json() + "\n"
    _emit(text, args.out)
    return 0


def geometry(n: int) -> dict:
    """Cubic realization: each triword is the integer point (u_1, ..., u_n)."""
    p = tw.hasse(n)
    return {"n": n, "vertices": [list(map(int, w)) for w in p.elements],
            "edges": [list(c) for c in p.covers]}


def cmd_geometry(args, parser) -> int:
    if not 1 <= args.n <= 10:
        parser.error("--n must lie in [1, 10]")
    _emit(json.dumps(geometry(args.n), separators=(",", ":")) + "\n", args.out)
    return 0


def cmd_check(args, parser) -> int:
    if args.n_max < 1:
        parser.error("--n-max must be positive")
    outcomes = checks.run(args.suite, args.n_max)
    if args.format == "json":
        text = json.dumps([o.__dict__ for o in outcomes], indent=1) + "\n"
    else:
        text = "".join(o.line() + "\n" for o in outcomes)
    failed = [o for o in outcomes if o.strict and not o.ok]
    text += "" if args.format == "json" else f"{len(outcomes) - len(failed)}/{len(outcomes)} passed\n"
    _emit(text, args.out)
    return 1 if failed else 0


def cmd_convert(args, parser) -> int:
    word = args.word
    source = args.source
    if source is None:
        as_dyck, as_tri = dyck.is_dyck(word), tw.is_triword(word)
        if as_dyck and as_tri:
            parser.error(f"{word!r} is both a Dyck path and a triword; pass --from dyck or --from triword")
        if not (as_dyck or as_tri):
            reason = tw._reason(word) or "unbalanced"
            parser.error(f"{word!r} is neither a Dyck path nor a triword ({reason})")
        source = "dyck" if as_dyck else "triword"
    try:
        result = dyck.rho(word) if source == "dyck" else dyck.rho_inv(word)
    except (dyck.DyckError, tw.TriwordError) as exc:
        parser.error(str(exc))
    _emit(result + "\n", args.out)
    return 0


def cmd_counts(args, parser) -> int:
    rows = enumeration.count_rows(args.n_max, args.k_max)
    text = enumeration.rows_to_csv(rows) if args.format == "csv" else enumeration.rows_to_json(rows) + "\n"
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hochschild", description="Hochschild lattices on triwords.")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="list the elements of a poset")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--variant", choices=sorted(LIMITS), default="tr")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    e = sub.add_parser("export", help="Hasse diagram as DOT or JSON")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--variant", choices=sorted(LIMITS), default="tr")
    e.add_argument("--format", choices=["dot", "json"], default="json")
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)

    geo = sub.add_parser("geometry", help="integer coordinates and edges of the cubic realization")
    geo.add_argument("--n", type=int, required=True)
    geo.add_argument("--out")
    geo.set_defaults(func=cmd_geometry)

    c = sub.add_parser("check", help="run invariant suites")
    c.add_argument("--suite", choices=["all"] + sorted(checks.SUITES), default="all")
    c.add_argument("--n-max", type=int, default=4)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--out")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("convert", help="apply rho (Dyck -> triword) or its inverse")
    v.add_argument("word")
    v.add_argument("--from", dest="source", choices=["dyck", "triword"])
    v.add_argument("--out")
    v.set_defaults(func=cmd_convert)

    k = sub.add_parser("counts", help="z-system count table")
    k.add_argument("--n-max", type=int, default=10)
    k.add_argument("--k-max", type=int, default=3)
    k.add_argument("--format", choices=["csv", "json"], default="csv")
    k.add_argument("--out")
    k.set_defaults(func=cmd_counts)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
