"""Command-line front end.

Exit codes: 0 success, 1 a verification check failed (witness printed),
2 and up for input errors (see ``latmin.errors``).
"""

from __future__ import annotations

import argparse
import random
import sys
import time
from dataclasses import asdict
from pathlib import Path

from latmin import io
from latmin.config import caps
from latmin.constructions import ConstructionVariant, SetFunctionTable, build_prop2, build_table
from latmin.errors import LatminError
from latmin.generate import random_dag_poset
from latmin.partition import (
    bis_to_poset,
    count_bis_bruteforce,
    estimate_ideal_count,
    partition_sum_dyadic,
)
from latmin.poset import Poset, antichain, chain, enumerate_ideals
from latmin.verify import (
    check_min_condition,
    is_mnat_concave,
    is_submodular,
    minimizers,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1


def _emit(text: str, out: str | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def cmd_ideals(args: argparse.Namespace) -> int:
    P = io.read_poset(args.poset)
    F = enumerate_ideals(P)
    if args.json:
        report = {"n": P.n, "count": len(F)}
        if args.list:
            report["ideals"] = F.as_lists()
        _emit(io.dumps(report))
        return EXIT_OK
    lines = [f"ideals: {len(F)}"]
    if args.list:
        lines += [" ".join(map(str, m)) if m else "(empty)" for m in F.as_lists()]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _build(P: Poset, variant: str) -> SetFunctionTable:
    if variant == "prop2":
        return build_prop2(P)
    return build_table(P, ConstructionVariant(variant))


def cmd_build(args: argparse.Namespace) -> int:
    P = io.read_poset(args.poset)
    f = _build(P, args.variant)
    if args.out is not None and args.out.endswith(".csv"):
        _emit(io.table_to_csv(f), args.out)
    else:
        _emit(io.dumps(io.table_to_json(f)), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    f = io.read_table(args.table)
    P = io.read_poset(args.poset) if args.poset else None
    checks: dict[str, dict] = {}
    failed = False

    def run(name: str, fn):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        entry = result
        if args.timing:
            entry["seconds"] = round(elapsed, 6)
        checks[name] = entry

    def axiom(check):
        def go():
            nonlocal failed
            w = check(f)
            if w is None:
                return {"status": "pass"}
            failed = True
            return {"status": "fail", "witness": w.to_dict(), "detail": w.describe()}

        return go

    run("submodular", axiom(is_submodular))
    run("mnat-concave", axiom(is_mnat_concave))

    def mins():
        F = minimizers(f)
        return {"status": "info", "count": len(F), "members": F.as_lists()}

    run("minimizers", mins)
    if P is not None:

        def cond():
            nonlocal failed
            ok = check_min_condition(f, P)
            failed |= not ok
            return {"status": "pass" if ok else "fail"}

        run("min-condition", cond)

    if args.json:
        report = {"n": f.n, "checks": checks, "caps": asdict(caps())}
        _emit(io.dumps(report))
    else:
        lines = [f"table: n={f.n}"]
        for name, entry in checks.items():
            if name == "minimizers":
                fam = "; ".join("{" + ",".join(map(str, m)) + "}" for m in entry["members"])
                line = f"minimizers: {entry['count']} [{fam}]"
            else:
                line = f"{name}: {entry['status'].upper()}"
                if "detail" in entry:
                    line += f"  witness {entry['detail']}"
            if "seconds" in entry:
                line += f"  ({entry['seconds']:.6f}s)"
            lines.append(line)
        _emit("\n".join(lines) + "\n")
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    status = EXIT_OK
    if args.via == "bis":
        G = io.bis_graph_from_json(io.load_json(args.input))
        bis = count_bis_bruteforce(G)
        ideals = len(enumerate_ideals(bis_to_poset(G)))
        report = {"via": "bis", "independent_sets": bis, "ideals": ideals}
        text = f"independent sets: {bis}\nideals: {ideals}\n"
        if bis != ideals:
            status = EXIT_CHECK_FAILED
    else:
        P = io.read_poset(args.input)
        if args.via == "ideals":
            count = len(enumerate_ideals(P))
            report = {"via": "ideals", "count": count}
            text = f"ideals: {count}\n"
        else:
            f = build_table(P, ConstructionVariant.F0)
            s = partition_sum_dyadic(f)
            count = estimate_ideal_count(f)
            report = {"via": "partition", "sum": str(s), "count": count}
            text = f"partition sum: {s}\nideals: {count}\n"
    _emit(io.dumps(report) if args.json else text)
    return status


def cmd_gen(args: argparse.Namespace) -> int:
    if args.kind == "chain":
        P = chain(args.n)
    elif args.kind == "antichain":
        P = antichain(args.n)
    else:
        P = random_dag_poset(args.n, args.edge_prob, random.Random(args.seed))
    _emit(io.dumps(io.poset_to_json(P)), args.out)
    return EXIT_OK


def _probability(text: str) -> float:
    p = float(text)
    if not 0.0 <= p <= 1.0:
        raise argparse.ArgumentTypeError(f"edge probability must lie in [0, 1], got {p}")
    return p


def _size(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError(f"n must be nonnegative, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latmin",
        description="Distributive lattices as minimizer sets of M-natural-concave set functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ideals", help="count (and list) the ideals of a poset")
    p.add_argument("poset")
    p.add_argument("--list", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("build", help="tabulate a set function over all subsets")
    p.add_argument("poset")
    p.add_argument("--variant", choices=["f0", "f1", "f2", "prop2"], default="f0")
    p.add_argument("--out", help="table file (.json or .csv); stdout if omitted")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check submodularity, exchange axiom and minimizers")
    p.add_argument("table")
    p.add_argument("poset", nargs="?")
    p.add_argument("--json", action="store_true")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (breaks byte-identical output)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="count ideals directly, via the partition sum, or from a #BIS instance")
    p.add_argument("input", help="poset file, or bipartite graph file with --via bis")
    p.add_argument("--via", choices=["ideals", "partition", "bis"], default="ideals")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("gen", help="write a generated poset file")
    p.add_argument("--kind", choices=["chain", "antichain", "random-dag"], required=True)
    p.add_argument("--n", type=_size, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--edge-prob", type=_probability, default=0.5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen" and args.n > caps().enumerate:
            parser.error(f"--n {args.n} exceeds the enumeration cap {caps().enumerate}")
        return args.func(args)
    except LatminError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:  # e.g. a malformed LATMIN_MAX_N
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
