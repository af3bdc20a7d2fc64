"""Command line interface: gen, count, verify, sweep.

Reports are single-line JSON objects on stdout with counts as decimal strings
(they outgrow 53-bit-safe integers quickly); diagnostics go to stderr.

Exit codes: 0 success / all checks passed, 1 a parity check failed,
2 usage or precondition error, 3 a scale cap refused the input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Iterator, Sequence

from . import count as cnt
from .construct import materialize, parse_t_split, random_w_extension
from .count import PermClass
from .errors import HamparityError, ScaleRefusal
from .graph import (
    MixedGraph,
    all_tournaments,
    parse,
    random_mixed,
    random_tournament,
    serialize,
    transitive_tournament,
)
from .perm import oracle_cap
from .theorems import (
    ParityReport,
    verify_berge_dirac,
    verify_berge_stronger,
    verify_dirac_corollary1,
    verify_dirac_corollary2,
    verify_dirac_corollary3,
    verify_dirac_stronger,
    verify_redei,
    verify_redei_stronger,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_SCALE = 3

THEOREMS = (
    "redei",
    "redei-stronger",
    "berge",
    "corollary1",
    "dirac-stronger",
    "corollary2",
    "corollary3",
    "berge-dirac",
)
FAMILIES = (
    "tournaments-exhaustive",
    "tournaments-random",
    "mixed-random",
    "extensions-random",
)


def _parse_weights(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError("weights must be three comma-separated numbers")
    return tuple(float(p) for p in parts)  # type: ignore[return-value]


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    """Pair list syntax: '0-1,2-3'; the empty string is the empty set."""
    text = text.strip()
    if not text:
        return []
    pairs = []
    for chunk in text.split(","):
        a, sep, b = chunk.partition("-")
        if not sep:
            raise ValueError(f"bad pair {chunk!r}, expected 'i-j'")
        pairs.append((int(a), int(b)))
    return pairs


def _read_graph(path: str) -> tuple[MixedGraph, str]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return parse(text), text


def cmd_gen(args: argparse.Namespace) -> int:
    if args.transitive is not None:
        g = transitive_tournament(args.transitive)
    elif args.tournament_random is not None:
        g = random_tournament(args.tournament_random, args.seed)
    else:
        g = random_mixed(args.mixed_random, _parse_weights(args.weights), args.seed)
    sys.stdout.write(serialize(g))
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    g, _ = _read_graph(args.graph)
    if args.hamilton:
        print(json.dumps({"count": str(cnt.hamilton_count(g))}))
    elif args.classes is not None:
        out = {}
        for name in args.classes.split(","):
            cls = PermClass(name.strip())
            out[cls.value] = str(cnt.count_class(g, cls))
        print(json.dumps({"counts": out}))
    else:
        pairs = _parse_pairs(args.na)
        print(json.dumps({"count": str(cnt.count_all_of(g, pairs))}))
    return EXIT_OK


def _run_verifier(
    theorem: str,
    g: MixedGraph,
    engine: str,
    t_size: int | None = None,
    pairs: list[tuple[int, int]] | None = None,
) -> ParityReport:
    if theorem == "redei":
        return verify_redei(g, engine)
    if theorem == "redei-stronger":
        if t_size is None:
            raise ValueError("redei-stronger needs --t-size or a '# T 0..k' comment")
        return verify_redei_stronger(g, range(t_size), range(t_size, g.n), engine)
    if theorem == "berge":
        return verify_berge_stronger(g, engine)
    if theorem == "corollary1":
        return verify_dirac_corollary1(g, engine)
    if theorem == "dirac-stronger":
        return verify_dirac_stronger(g, pairs or [], engine)
    if theorem == "corollary2":
        return verify_dirac_corollary2(g, engine)
    if theorem == "corollary3":
        return verify_dirac_corollary3(g, engine)
    if theorem == "berge-dirac":
        return verify_berge_dirac(g, engine)
    raise ValueError(f"unknown theorem {theorem!r}")


def cmd_verify(args: argparse.Namespace) -> int:
    g, text = _read_graph(args.graph)
    t_size = args.t_size if args.t_size is not None else parse_t_split(text)
    pairs = _parse_pairs(args.pairs) if args.pairs is not None else None
    report = _run_verifier(args.theorem, g, args.engine, t_size, pairs)
    print(report.json_line())
    return EXIT_OK if report.passed else EXIT_FAIL


def _sweep_instances(args: argparse.Namespace) -> Iterator[tuple[MixedGraph, dict]]:
    """Deterministic instance stream for one sweep run."""
    if args.n is not None:
        lo = hi = args.n
    else:
        lo, hi = (int(x) for x in args.n_range.split(":"))
    rng = random.Random(args.seed)
    if args.family == "tournaments-exhaustive":
        for g in all_tournaments(lo):
            yield g, {}
        return
    for _ in range(args.samples):
        n = rng.randint(lo, hi)
        seed = rng.getrandbits(63)
        if args.family == "tournaments-random":
            yield random_tournament(n, seed), {}
        elif args.family == "mixed-random":
            g = random_mixed(n, _parse_weights(args.weights), seed)
            extra = {}
            if "dirac-stronger" in args.theorem_list:
                loose = sorted(g.non_arc_pairs())
                pick = random.Random(rng.getrandbits(63))
                extra["pairs"] = [p for p in loose if pick.random() < 0.5]
            yield g, extra
        else:  # extensions-random
            t_count = rng.randint(2, max(2, n - 1))
            ext = random_w_extension(t_count, n - t_count, seed)
            g, t_fs, _ = materialize(ext)
            yield g, {"t_size": len(t_fs)}


def cmd_sweep(args: argparse.Namespace) -> int:
    args.theorem_list = [t.strip() for t in args.theorems.split(",")]
    for t in args.theorem_list:
        if t not in THEOREMS:
            raise ValueError(f"unknown theorem {t!r}")
        if args.family == "extensions-random" and t != "redei-stronger":
            raise ValueError("extensions-random sweeps support only redei-stronger")
    max_n = args.n if args.n is not None else int(args.n_range.split(":")[1])
    if args.family == "tournaments-exhaustive":
        if args.n is None:
            raise ValueError("tournaments-exhaustive needs --n")
        if args.n > 6:
            raise ScaleRefusal("exhaustive tournament sweeps are capped at n=6")
    if args.engine in ("oracle", "both") and max_n > oracle_cap():
        raise ScaleRefusal(
            f"engine {args.engine!r} needs n <= {oracle_cap()} (the oracle cap)"
        )
    total = failures = 0
    for g, extra in _sweep_instances(args):
        for theorem in args.theorem_list:
            report = _run_verifier(
                theorem, g, args.engine,
                t_size=extra.get("t_size"), pairs=extra.get("pairs"),
            )
            print(report.json_line())
            total += 1
            if not report.passed:
                failures += 1
    summary = {
        "total": total,
        "failures": failures,
        "family": args.family,
        "theorems": args.theorem_list,
        "seed": args.seed,
        "engine": args.engine,
    }
    print(json.dumps(summary))
    return EXIT_OK if failures == 0 else EXIT_FAIL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamparity",
        description="Exact counting and parity verification for Hamiltonian "
        "paths in tournaments and mixed graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a graph file on stdout")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--transitive", type=int, metavar="N")
    kind.add_argument("--tournament-random", type=int, metavar="N")
    kind.add_argument("--mixed-random", type=int, metavar="N")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--weights", default="1,1,1", help="non-edge,undirected,directed")
    gen.set_defaults(func=cmd_gen)

    count = sub.add_parser("count", help="count permutations of a graph file")
    count.add_argument("graph", help="graph file path, or - for stdin")
    what = count.add_mutually_exclusive_group(required=True)
    what.add_argument("--hamilton", action="store_true")
    what.add_argument("--class", dest="classes", metavar="P0,P1,...")
    what.add_argument(
        "--NA", dest="na", metavar="PAIRS",
        help="count backward-free orderings containing all PAIRS ('0-1,2-3'; '' for none)",
    )
    count.set_defaults(func=cmd_count)

    verify = sub.add_parser("verify", help="run one theorem verifier")
    verify.add_argument("graph", help="graph file path, or - for stdin")
    verify.add_argument("--theorem", required=True, choices=THEOREMS)
    verify.add_argument("--engine", default="dp", choices=("oracle", "dp", "both"))
    verify.add_argument("--t-size", type=int, help="first K vertices form T (redei-stronger)")
    verify.add_argument("--pairs", help="required pairs for dirac-stronger, e.g. '0-1,2-3'")
    verify.set_defaults(func=cmd_verify)

    sweep = sub.add_parser("sweep", help="verify a family of generated graphs")
    sweep.add_argument("--family", required=True, choices=FAMILIES)
    size = sweep.add_mutually_exclusive_group(required=True)
    size.add_argument("--n", type=int)
    size.add_argument("--n-range", metavar="LO:HI")
    sweep.add_argument("--samples", type=int, default=100)
    sweep.add_argument("--seed", type=int, default=0)
    sweep.add_argument("--theorems", required=True, help="comma-separated theorem ids")
    sweep.add_argument("--engine", default="dp", choices=("oracle", "dp", "both"))
    sweep.add_argument("--weights", default="1,1,1")
    sweep.set_defaults(func=cmd_sweep)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScaleRefusal as exc:
        print(f"hamparity: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except (HamparityError, ValueError, OSError) as exc:
        print(f"hamparity: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
