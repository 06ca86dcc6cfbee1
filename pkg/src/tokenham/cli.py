"""Command-line interface.

    tokenham gen    --family fan --n 6 --k 3 [--format json|text|dot]
    tokenham verify --family complete --n 6 --cycle cycle.json
    tokenham oracle --family complete-bipartite --m 2 --k 2
    tokenham tokens --family fan --n 5 --k 2 [--format json|dot]

Exit codes: 0 ok, 1 verification failure, 2 bad arguments or input,
3 instance above the brute-force cap. Standard output carries only the
requested payload; diagnostics go to standard error.
"""

from __future__ import annotations

import argparse
import sys
from math import comb

from tokenham.fan_cycle import fan_ham_cycle
from tokenham.formats import cycle_to_dot, cycle_to_json, cycle_to_text, parse_cycle
from tokenham.graph_core import (
    Graph,
    make_complete,
    make_complete_bipartite,
    make_cycle,
    make_fan,
    make_path,
    make_wheel,
    read_edge_list,
)
from tokenham.hamiltonicity import DEFAULT_SEARCH_CAP, brute_force_ham_cycle, certify_lift, validate_cycle
from tokenham.token_graph import build_token_graph, enumerate_k_subsets, token_adjacent

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

FAMILIES = ("fan", "wheel", "complete", "complete-bipartite", "path", "cycle", "file")
GEN_FAMILIES = ("fan", "wheel", "complete")


class UsageError(Exception):
    pass


def build_host(args, n_fallback: int | None = None) -> Graph:
    family = args.family
    if family == "file":
        if not args.graph:
            raise UsageError("--family file needs --graph FILE")
        try:
            with open(args.graph) as fh:
                return read_edge_list(fh)
        except OSError as exc:
            raise UsageError(f"cannot read graph file: {exc}") from None
    if family == "complete-bipartite":
        if args.m is None:
            raise UsageError("--family complete-bipartite needs --m")
        return make_complete_bipartite(args.m, args.m2 if args.m2 is not None else args.m)
    n = args.n if args.n is not None else n_fallback
    if n is None:
        raise UsageError(f"--family {family} needs --n")
    makers = {
        "fan": make_fan,
        "wheel": make_wheel,
        "complete": make_complete,
        "path": make_path,
        "cycle": make_cycle,
    }
    return makers[family](n)


def cmd_gen(args) -> int:
    if args.family not in GEN_FAMILIES:
        raise UsageError(f"gen supports families {', '.join(GEN_FAMILIES)}, got {args.family}")
    if args.n is None or args.k is None:
        raise UsageError("gen needs --n and --k")
    host = build_host(args)
    cycle, anchor = fan_ham_cycle(args.n, args.k)
    fan = make_fan(args.n)
    report = validate_cycle(
        lambda a, b: token_adjacent(fan, a, b), comb(args.n, args.k), cycle.verts, anchor
    )
    if report.ok and args.family != "fan":
        report = certify_lift(cycle, host, anchor)
    if not report.ok:
        print(f"internal certification failed: {report.to_json()}", file=sys.stderr)
        return EXIT_FAIL

    fmt = args.format or "json"
    if fmt == "json":
        out = cycle_to_json(args.family, args.n, args.k, cycle.verts, anchor) + "\n"
    elif fmt == "text":
        out = cycle_to_text(cycle.verts)
    else:
        out = cycle_to_dot(cycle.verts, name=f"{args.family.replace('-', '_')}_{args.n}_{args.k}")
    sys.stdout.write(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not args.cycle:
        raise UsageError("verify needs --cycle FILE")
    try:
        with open(args.cycle) as fh:
            verts, meta = parse_cycle(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read cycle file: {exc}") from None
    if not verts:
        raise UsageError("cycle file lists no vertices")
    host = build_host(args, n_fallback=meta.get("n"))
    k = args.k if args.k is not None else meta.get("k", len(verts[0]))
    if not 1 <= k <= host.n - 1:
        raise UsageError(f"need 1 <= k <= n-1, got n={host.n}, k={k}")
    report = validate_cycle(
        lambda a, b: token_adjacent(host, a, b),
        comb(host.n, k),
        verts,
        anchor=meta.get("anchor"),
        vertices=enumerate_k_subsets(host.n, k),
    )
    sys.stdout.write(report.to_json() + "\n")
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_oracle(args) -> int:
    if args.k is None:
        raise UsageError("oracle needs --k")
    host = build_host(args)
    if not 1 <= args.k <= host.n - 1:
        raise UsageError(f"need 1 <= k <= n-1, got n={host.n}, k={args.k}")
    size = comb(host.n, args.k)
    if size > args.cap:
        print(f"token graph has {size} vertices, above the cap {args.cap}", file=sys.stderr)
        return EXIT_CAP
    if size < 3:
        raise UsageError(f"token graph has only {size} vertices; a cycle needs at least 3")
    outcome = brute_force_ham_cycle(build_token_graph(host, args.k), cap=args.cap)
    sys.stdout.write(outcome.to_json() + "\n")
    return EXIT_OK


def cmd_tokens(args) -> int:
    if args.k is None:
        raise UsageError("tokens needs --k")
    host = build_host(args)
    tg = build_token_graph(host, args.k)
    fmt = args.format or "json"
    if fmt == "text":
        raise UsageError("tokens supports --format json or dot")
    sys.stdout.write(tg.to_json() + "\n" if fmt == "json" else tg.to_dot())
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", choices=FAMILIES, default="fan")
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--m", type=int, help="part size for complete-bipartite")
    common.add_argument("--m2", type=int, help="second part size (defaults to --m)")
    common.add_argument("--graph", help="edge-list file for --family file")
    common.add_argument("--format", choices=("json", "text", "dot"))

    p = argparse.ArgumentParser(prog="tokenham", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("gen", parents=[common], help="construct a Hamiltonian cycle")
    v = sub.add_parser("verify", parents=[common], help="validate a cycle file")
    v.add_argument("--cycle", help="cycle file (JSON or text)")
    o = sub.add_parser("oracle", parents=[common], help="exhaustive Hamiltonian-cycle search")
    o.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    sub.add_parser("tokens", parents=[common], help="export the token graph")
    return p


COMMANDS = {"gen": cmd_gen, "verify": cmd_verify, "oracle": cmd_oracle, "tokens": cmd_tokens}


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, ValueError) as exc:
        print(f"tokenham {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
