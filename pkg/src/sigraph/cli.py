"""Command-line front end: build, query, run algorithms, verify, bench.

Exit codes: 0 ok, 1 internal error, 2 input or type error, 3 query
error, 4 verify mismatch.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from time import perf_counter

from . import algorithms
from .circular import ArcRealization, CircularArcGraph, anchor_arcs, random_arc_realization
from .errors import GraphInputError, QueryRangeError, SerializationError
from .graph import SuccinctIntervalGraph
from .intervals import (
    IntervalRealization,
    normalize,
    parse_realization_text,
    random_proper_realization,
    random_realization,
)
from .variants import (
    MODE_IMPROPER,
    MODE_PROPER,
    KProperGraph,
    ProperIntervalGraph,
    check_proper,
)
from .verify import verify_circular, verify_interval, verify_variants

_INTERVAL_TYPES = ("interval", "proper", "kproper", "kimproper")
_ALL_TYPES = _INTERVAL_TYPES + ("circular",)

_LOADERS = {
    b"SIGR": SuccinctIntervalGraph,
    b"SPGR": ProperIntervalGraph,
    b"SKGR": KProperGraph,
    b"SCAG": CircularArcGraph,
}


@dataclass
class StatsReport:
    kind: str
    n: int
    total_bits: int
    bits_per_vertex: float
    build_seconds: float
    components: dict = field(default_factory=dict)
    baselines: dict = field(default_factory=dict)
    queries: dict = field(default_factory=dict)


def load_structure(path):
    data = Path(path).read_bytes()
    cls = _LOADERS.get(bytes(data[:4]))
    if cls is None:
        raise SerializationError(f"{path}: not a recognized structure file")
    return cls.from_bytes(data)


def _read_realization(path: str, want: str, anchor=None):
    kind, pairs = parse_realization_text(Path(path).read_text())
    if want in _INTERVAL_TYPES:
        if kind != "interval":
            raise GraphInputError(f"{path}: expected an interval realization, got {kind}")
        return normalize(pairs)
    if kind != "circular":
        raise GraphInputError(f"{path}: expected a circular realization, got {kind}")
    return anchor_arcs(pairs, anchor)


def _build_structure(kind: str, real):
    if kind == "interval":
        return SuccinctIntervalGraph.from_realization(real)
    if kind == "proper":
        return ProperIntervalGraph.from_realization(real)
    if kind == "kproper":
        return KProperGraph.from_realization(real, MODE_PROPER)
    if kind == "kimproper":
        return KProperGraph.from_realization(real, MODE_IMPROPER)
    return CircularArcGraph.from_realization(real)


def _emit(args, text: str, payload) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else text)


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    return int(os.environ.get("SIG_SEED", "1"))


# -- commands ------------------------------------------------------------


def cmd_build(args) -> int:
    real = _read_realization(args.input, args.type, getattr(args, "anchor", None))
    if args.type == "circular":
        g = CircularArcGraph.from_realization(real, degree_table=args.degree_table)
    else:
        g = _build_structure(args.type, real)
    blob = g.to_bytes()
    Path(args.output).write_bytes(blob)
    _emit(
        args,
        f"wrote {args.output}: {args.type} structure, n={real.n}, {len(blob)} bytes",
        {"output": args.output, "type": args.type, "n": real.n, "bytes": len(blob)},
    )
    return 0


def cmd_query(args) -> int:
    g = load_structure(args.file)
    need = 2 if args.op in ("adjacent", "spath") else 1
    if len(args.vertex) != need:
        raise GraphInputError(f"{args.op} takes {need} vertex argument(s)")
    if args.op == "degree":
        d = g.degree(args.vertex[0])
        _emit(args, str(d), {"degree": d})
    elif args.op == "adjacent":
        a = g.adjacent(args.vertex[0], args.vertex[1])
        _emit(args, "true" if a else "false", {"adjacent": a})
    elif args.op == "neighborhood":
        hood = g.neighborhood(args.vertex[0])
        _emit(args, " ".join(map(str, hood)), {"neighborhood": hood})
    else:
        path = g.spath(args.vertex[0], args.vertex[1])
        _emit(
            args,
            "none" if path is None else " ".join(map(str, path)),
            {"path": path},
        )
    return 0


def cmd_algo(args) -> int:
    g = load_structure(args.file)
    if isinstance(g, CircularArcGraph):
        raise GraphInputError("algorithms expect a linear interval structure")
    if args.op == "mis":
        out = algorithms.mis(g)
        _emit(args, " ".join(map(str, out)), {"mis": out})
    elif args.op == "mvc":
        out = algorithms.mvc(g)
        _emit(args, " ".join(map(str, out)), {"mvc": out})
    elif args.op == "clique":
        w = algorithms.max_clique(g)
        _emit(
            args,
            f"size {w.size}\n" + " ".join(map(str, w.members)),
            {"size": w.size, "cut": w.cut, "members": list(w.members)},
        )
    elif args.op == "coloring":
        c = algorithms.greedy_coloring(g)
        _emit(
            args,
            f"colors {c.used}\n" + " ".join(map(str, c.colors)),
            {"used": c.used, "colors": list(c.colors)},
        )
    else:
        order = {"dfs": algorithms.dfs_order, "bfs": algorithms.bfs_order,
                 "peo": algorithms.peo}[args.op](g)
        _emit(args, " ".join(map(str, order)), {"order": order})
    return 0


def _random_for(kind: str, n: int, rng: random.Random):
    if kind == "proper":
        return random_proper_realization(n, rng)
    if kind == "circular":
        return random_arc_realization(n, rng, require_reversed=False)
    return random_realization(n, rng)


def _verify_one(kind: str, real) -> list[str]:
    if kind == "circular":
        return verify_circular(real)
    if kind == "interval":
        return verify_interval(real)
    if kind == "proper":
        check_proper(real)  # a non-proper input is a type error, not a mismatch
        return verify_variants(real)
    return verify_variants(real)


def cmd_verify(args) -> int:
    if (args.input is None) == (args.random is None):
        raise GraphInputError("verify needs exactly one of --input or --random")
    failures: list[str] = []
    if args.input is not None:
        real = _read_realization(args.input, args.type, None)
        label = args.input
        failures = [f"{label}: {msg}" for msg in _verify_one(args.type, real)]
        trials = 1
    else:
        rng = random.Random(_seed(args))
        trials = args.trials
        for t in range(trials):
            real = _random_for(args.type, args.random, rng)
            for msg in _verify_one(args.type, real):
                failures.append(f"trial {t + 1}: {msg}")
            if failures:
                break
    if not failures:
        _emit(args, f"PASS {args.type} ({trials} instance(s))",
              {"ok": True, "type": args.type, "trials": trials})
        return 0
    shown = failures[:10]
    lines = [f"FAIL {args.type}"] + shown
    if len(failures) > len(shown):
        lines.append(f"({len(failures) - len(shown)} more)")
    _emit(args, "\n".join(lines),
          {"ok": False, "type": args.type, "mismatches": failures})
    return 4


def _time_queries(label: str, fn, samples, report: dict) -> None:
    if not samples:
        return
    t0 = perf_counter()
    for s in samples:
        fn(*s)
    dt = perf_counter() - t0
    report[label] = {"count": len(samples), "avg_us": round(dt / len(samples) * 1e6, 2)}


def cmd_bench(args) -> int:
    rng = random.Random(_seed(args))
    n = args.n
    real = _random_for(args.type, n, rng)
    t0 = perf_counter()
    g = _build_structure(args.type, real)
    build_s = perf_counter() - t0
    components = g.space_report()
    total = sum(components.values())
    deg_sum = sum(g.degree(v) for v in range(1, n + 1))
    m = deg_sum // 2
    endpoint_width = max(1, (2 * n).bit_length())
    label_width = max(1, (n - 1).bit_length()) if n > 1 else 1
    baselines = {
        "endpoint_array_bits": 2 * n * endpoint_width,
        "adjacency_list_bits": 2 * m * label_width,
        "edges": m,
    }
    q = args.queries
    queries: dict = {}
    verts = [rng.randint(1, n) for _ in range(q)]
    pairs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(q)]
    _time_queries("degree", g.degree, [(v,) for v in verts], queries)
    _time_queries("adjacent", g.adjacent, pairs, queries)
    _time_queries("neighborhood", g.neighborhood,
                  [(v,) for v in verts[: min(q, 20)]], queries)
    _time_queries("spath", g.spath, pairs[: min(q, 20)], queries)
    rep = StatsReport(
        kind=args.type,
        n=n,
        total_bits=total,
        bits_per_vertex=round(total / n, 3),
        build_seconds=round(build_s, 4),
        components=components,
        baselines=baselines,
        queries=queries,
    )
    if args.json:
        print(json.dumps(asdict(rep), sort_keys=True))
        return 0
    lines = [
        f"{rep.kind} structure, n={rep.n}, edges={m}",
        f"build time: {rep.build_seconds}s",
        f"total bits: {rep.total_bits} ({rep.bits_per_vertex} per vertex)",
        "components:",
    ]
    for name, bits in sorted(components.items(), key=lambda kv: -kv[1]):
        lines.append(f"  {name}: {bits}")
    lines.append(
        f"baselines: endpoint array {baselines['endpoint_array_bits']} bits, "
        f"adjacency lists {baselines['adjacency_list_bits']} bits"
    )
    for name, stats in queries.items():
        lines.append(f"{name}: {stats['avg_us']} us over {stats['count']} queries")
    print("\n".join(lines))
    return 0


# -- parser --------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sigraph",
        description="Succinct interval and circular-arc graph structures.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", help="build a structure from a text realization")
    b.add_argument("--type", choices=_ALL_TYPES, default="interval")
    b.add_argument("--input", required=True, help="text realization file")
    b.add_argument("--output", required=True, help="binary structure file")
    b.add_argument("--anchor", type=int, default=None,
                   help="circular only: anchor arc by 1-based input index")
    b.add_argument("--degree-table", action="store_true",
                   help="circular only: store the degree table")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_build)

    q = sub.add_parser("query", help="run a query against a built structure")
    q.add_argument("file")
    q.add_argument("op", choices=("degree", "adjacent", "neighborhood", "spath"))
    q.add_argument("vertex", type=int, nargs="+")
    q.add_argument("--json", action="store_true")
    q.set_defaults(func=cmd_query)

    a = sub.add_parser("algo", help="run a classical algorithm")
    a.add_argument("file")
    a.add_argument("op", choices=("mis", "mvc", "clique", "coloring", "dfs", "bfs", "peo"))
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_algo)

    v = sub.add_parser("verify", help="cross-check against the brute oracle")
    v.add_argument("--type", choices=_ALL_TYPES, default="interval")
    v.add_argument("--input", default=None, help="text realization file")
    v.add_argument("--random", type=int, default=None, metavar="N",
                   help="verify random instances of n vertices")
    v.add_argument("--trials", type=int, default=5)
    v.add_argument("--seed", type=int, default=None)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("bench", help="space accounting and query timings")
    e.add_argument("--type", choices=_ALL_TYPES, default="interval")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--queries", type=int, default=100)
    e.add_argument("--seed", type=int, default=None)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 0
    try:
        return args.func(args)
    except QueryRangeError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except GraphInputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:  # pragma: no cover - safety net
        print(f"internal error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
