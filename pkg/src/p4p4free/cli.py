"""Command-line surface: graph files in, results out.

Graph file format (whitespace-separated, 1-based vertex ids):

    p wis <n> <m>      one problem line first
    v <id> <weight>    n vertex lines, nonnegative integer weights
    e <u> <v>          m edge lines; duplicates collapse, self-loops rejected
    # ...              comment lines are ignored

Commands: solve, check, oracle, cover, gen, bench.  Results go to stdout
as text or, with --format json, as one deterministic JSON line (sorted
keys).  Exit codes are part of the contract: 0 success, 2 the graph is
outside the supported class (witness printed), 3 unusable input (bad file,
bad flags), 4 an exponential helper exceeded its size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .errors import (
    ClassViolation,
    GuardError,
    InputError,
    ParseError,
    StructureViolation,
)
from .graph import Graph, bits
from .recognition import is_class_member
from .solver import solve, solve_with_cover
from .testkit import gen_instance, oracle_wis

__all__ = ["parse_graph", "format_graph", "run", "main"]


def _int_field(text: str, lineno: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"expected an integer, got {text!r}", lineno) from None


def parse_graph(text: str) -> Graph:
    """Graph from the file format above.

    Raises:
        ParseError: malformed line, id out of range, negative weight,
            self-loop, missing or duplicated declarations; carries the
            1-based line number where applicable.
    """
    n = -1
    declared_edges = -1
    weights: list[int | None] = []
    edges: set[tuple[int, int]] = set()
    edge_lines = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n >= 0:
                raise ParseError("duplicate problem line", lineno)
            if len(fields) != 4 or fields[1] != "wis":
                raise ParseError(
                    "problem line must read 'p wis <n> <m>'", lineno
                )
            n = _int_field(fields[2], lineno)
            declared_edges = _int_field(fields[3], lineno)
            if n < 0 or declared_edges < 0:
                raise ParseError("counts must be nonnegative", lineno)
            weights = [None] * n
        elif kind == "v":
            if n < 0:
                raise ParseError("vertex line before the problem line", lineno)
            if len(fields) != 3:
                raise ParseError("vertex line must read 'v <id> <weight>'", lineno)
            vid = _int_field(fields[1], lineno)
            w = _int_field(fields[2], lineno)
            if not 1 <= vid <= n:
                raise ParseError(f"vertex id {vid} out of range 1..{n}", lineno)
            if weights[vid - 1] is not None:
                raise ParseError(f"vertex {vid} declared twice", lineno)
            if w < 0:
                raise ParseError("weights must be nonnegative", lineno)
            weights[vid - 1] = w
        elif kind == "e":
            if n < 0:
                raise ParseError("edge line before the problem line", lineno)
            if len(fields) != 3:
                raise ParseError("edge line must read 'e <u> <v>'", lineno)
            u = _int_field(fields[1], lineno)
            v = _int_field(fields[2], lineno)
            for vid in (u, v):
                if not 1 <= vid <= n:
                    raise ParseError(
                        f"vertex id {vid} out of range 1..{n}", lineno
                    )
            if u == v:
                raise ParseError("self-loops are not allowed", lineno)
            edges.add((min(u, v) - 1, max(u, v) - 1))
            edge_lines += 1
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n < 0:
        raise ParseError("missing problem line")
    for vid, w in enumerate(weights, start=1):
        if w is None:
            raise ParseError(f"vertex {vid} has no weight line")
    if edge_lines != declared_edges:
        raise ParseError(
            f"problem line declares {declared_edges} edges, file has {edge_lines}"
        )
    return Graph.from_edges(n, sorted(edges), weights)


def format_graph(g: Graph) -> str:
    """The graph rendered in the file format; parses back to an equal graph."""
    edges = [(u, v) for u in range(g.n) for v in bits(g.adj[u]) if v > u]
    lines = [f"p wis {g.n} {len(edges)}"]
    lines += [f"v {v + 1} {w}" for v, w in enumerate(g.weights)]
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"


def _ids(vertices) -> list[int]:
    return [v + 1 for v in vertices]


def _witness_text(obj) -> str:
    if isinstance(obj, int):
        return str(obj + 1)
    if isinstance(obj, tuple):
        if all(isinstance(x, int) for x in obj):
            return " ".join(str(x + 1) for x in obj)
        return " / ".join(_witness_text(x) for x in obj)
    return str(obj)


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _read_graph(args) -> Graph:
    if args.file == "-":
        return parse_graph(sys.stdin.read())
    try:
        with open(args.file, "r", encoding="utf-8") as handle:
            return parse_graph(handle.read())
    except OSError as err:
        raise ParseError(f"cannot read {args.file}: {err.strerror}") from None


def _result_lines(res) -> list[str]:
    return [
        f"weight {res.weight}",
        "vertices " + " ".join(str(v) for v in _ids(res.chosen)),
    ]


def _result_payload(res) -> dict:
    return {
        "weight": res.weight,
        "vertices": _ids(res.chosen),
        "independent": True,
    }


def _cmd_solve(args) -> int:
    res = solve(_read_graph(args), jobs=args.jobs)
    _emit(args, _result_lines(res), _result_payload(res))
    return 0


def _cmd_oracle(args) -> int:
    res = oracle_wis(_read_graph(args), guard=args.guard_n)
    _emit(args, _result_lines(res), _result_payload(res))
    return 0


def _cmd_check(args) -> int:
    verdict = is_class_member(_read_graph(args))
    if verdict.is_member:
        _emit(args, ["MEMBER"], {"member": True})
    elif verdict.triangle is not None:
        tri = _ids(verdict.triangle)
        _emit(
            args,
            ["NOT_MEMBER", "witness triangle " + " ".join(map(str, tri))],
            {"member": False, "witness": {"kind": "triangle", "vertices": tri}},
        )
    else:
        first, second = verdict.p4_pair
        a, b = _ids(first.vertices), _ids(second.vertices)
        _emit(
            args,
            [
                "NOT_MEMBER",
                "witness p4_pair "
                + " ".join(map(str, a))
                + " / "
                + " ".join(map(str, b)),
            ],
            {
                "member": False,
                "witness": {"kind": "p4_pair", "first": a, "second": b},
            },
        )
    return 0


def _two_colorable(g: Graph, mask: int) -> bool:
    color: dict[int, int] = {}
    for start in bits(mask):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in bits(g.adj[v] & mask):
                if w not in color:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def _cmd_cover(args) -> int:
    g = _read_graph(args)
    res, fam = solve_with_cover(g, jobs=args.jobs)
    members = [sorted(_ids(bits(m))) for m in fam.members]
    bipartite = sum(1 for m in fam.members if _two_colorable(g, m))
    lines = _result_lines(res)
    lines.append(f"members {len(members)}")
    lines += ["member " + " ".join(map(str, m)) for m in members]
    lines.append(f"bipartite {bipartite}/{len(members)}")
    payload = _result_payload(res)
    payload.update(
        size=len(members), members=members, bipartite_members=bipartite
    )
    _emit(args, lines, payload)
    return 0


def _cmd_gen(args) -> int:
    g = gen_instance(
        model=args.model, n=args.n, density=args.density, seed=args.seed
    )
    sys.stdout.write(format_graph(g))
    return 0


def _cmd_bench(args) -> int:
    try:
        sizes = [int(s) for s in args.n.split(",") if s]
    except ValueError:
        raise ParseError(f"--n must be comma-separated integers, got {args.n!r}")
    rows = []
    for n in sizes:
        g = gen_instance(
            model=args.model, n=n, density=args.density, seed=args.seed
        )
        start = time.perf_counter()
        res = solve(g, jobs=args.jobs)
        elapsed = time.perf_counter() - start
        rows.append({"n": n, "time_s": round(elapsed, 4), "weight": res.weight})
    lines = [
        f"n={row['n']} time_s={row['time_s']:.4f} weight={row['weight']}"
        for row in rows
    ]
    _emit(args, lines, {"rows": rows})
    return 0


class _Parser(argparse.ArgumentParser):
    # argparse exits with its own code on usage errors; route them through
    # the parse-error exit code instead
    def error(self, message):
        raise ParseError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default text)",
    )
    parser = _Parser(
        prog="p4p4free",
        description="exact maximum weight independent set on graphs with no "
        "triangle and no two independent induced four-vertex paths",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", parents=[common], help="optimal set of a graph file")
    p_solve.add_argument("file", help="graph file, or - for stdin")
    p_solve.add_argument("--jobs", type=int, default=1)
    p_solve.set_defaults(fn=_cmd_solve)

    p_check = sub.add_parser("check", parents=[common], help="class membership with witness")
    p_check.add_argument("file", help="graph file, or - for stdin")
    p_check.set_defaults(fn=_cmd_check)

    p_oracle = sub.add_parser("oracle", parents=[common], help="guarded brute-force reference")
    p_oracle.add_argument("file", help="graph file, or - for stdin")
    p_oracle.add_argument("--guard-n", type=int, default=30)
    p_oracle.set_defaults(fn=_cmd_oracle)

    p_cover = sub.add_parser("cover", parents=[common], help="bipartite cover family")
    p_cover.add_argument("file", help="graph file, or - for stdin")
    p_cover.add_argument("--jobs", type=int, default=1)
    p_cover.set_defaults(fn=_cmd_cover)

    p_gen = sub.add_parser("gen", parents=[common], help="emit a generated class member")
    p_gen.add_argument("--n", type=int, default=30)
    p_gen.add_argument("--density", type=float, default=0.5)
    p_gen.add_argument("--seed", type=int, default=1)
    p_gen.add_argument("--model", choices=("clustered", "rejection"), default="clustered")
    p_gen.set_defaults(fn=_cmd_gen)

    p_bench = sub.add_parser("bench", parents=[common], help="timing table over generated sizes")
    p_bench.add_argument("--n", default="30,45,60", help="comma-separated sizes")
    p_bench.add_argument("--density", type=float, default=0.5)
    p_bench.add_argument("--seed", type=int, default=1)
    p_bench.add_argument("--model", choices=("clustered", "rejection"), default="clustered")
    p_bench.add_argument("--jobs", type=int, default=1)
    p_bench.set_defaults(fn=_cmd_bench)
    return parser


def run(argv: list[str] | None = None) -> int:
    """Execute one command; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except ParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except InputError as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except GuardError as err:
        print(f"error: {err}", file=sys.stderr)
        return 4
    except ClassViolation as err:
        print(f"class violation: {err}", file=sys.stderr)
        if err.witness is not None:
            kind, *rest = err.witness
            print(f"witness {kind} {_witness_text(tuple(rest))}", file=sys.stderr)
        return 2
    except StructureViolation as err:
        print(f"class violation: {err}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
