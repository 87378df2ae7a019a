"""Cross-checks of the succinct structures against the brute oracle.

Each function returns a list of mismatch descriptions; an empty list
means every check passed. Checks cover all query pairs, so they are
meant for moderate n, not benchmarks.
"""

from __future__ import annotations

from . import algorithms
from .circular import ArcRealization, CircularArcGraph
from .errors import NotProperError
from .graph import SuccinctIntervalGraph
from .intervals import IntervalRealization
from .oracle import OracleGraph, mis_size_dp
from .variants import (
    MODE_IMPROPER,
    MODE_PROPER,
    KProperGraph,
    ProperIntervalGraph,
    check_proper,
)


def _check_paths(g, oracle: OracleGraph, issues: list[str]) -> None:
    n = oracle.n
    for u in range(1, n + 1):
        dists = oracle.dists_from(u)
        for v in range(1, n + 1):
            path = g.spath(u, v)
            want = dists[v]
            if want is None:
                if path is not None:
                    issues.append(f"spath({u},{v}): got {path}, vertices unreachable")
                continue
            if path is None:
                issues.append(f"spath({u},{v}): got none, distance is {want}")
                continue
            if path[0] != u or path[-1] != v:
                issues.append(f"spath({u},{v}): endpoints wrong in {path}")
                continue
            if len(path) - 1 != want:
                issues.append(
                    f"spath({u},{v}): length {len(path) - 1}, oracle distance {want}"
                )
            for a, b in zip(path, path[1:]):
                if not oracle.adjacent(a, b):
                    issues.append(f"spath({u},{v}): hop {a}-{b} not an edge")
                    break


def _check_queries(g, oracle: OracleGraph, issues: list[str]) -> None:
    n = oracle.n
    for v in range(1, n + 1):
        got = g.degree(v)
        want = oracle.degree(v)
        if got != want:
            issues.append(f"degree({v}): got {got}, expected {want}")
        hood = g.neighborhood(v)
        if hood != oracle.neighborhood(v):
            issues.append(
                f"neighborhood({v}): got {hood}, expected {oracle.neighborhood(v)}"
            )
        elif len(hood) != got:
            issues.append(f"degree({v}) = {got} but neighborhood has {len(hood)}")
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if g.adjacent(u, v) != oracle.adjacent(u, v):
                issues.append(
                    f"adjacent({u},{v}): got {g.adjacent(u, v)}, "
                    f"expected {oracle.adjacent(u, v)}"
                )
    _check_paths(g, oracle, issues)


def _check_algorithms(g: SuccinctIntervalGraph, oracle: OracleGraph, issues) -> None:
    real = g.realization()
    n = g.n
    d = algorithms.build_d_sequence(g)
    clique = algorithms.max_clique(g)
    if clique.size != max(d):
        issues.append(f"clique size {clique.size} != peak open count {max(d)}")
    if not oracle.is_clique(clique.members):
        issues.append(f"clique members {clique.members} are not pairwise adjacent")
    ind = algorithms.mis(g)
    if not oracle.is_independent(ind):
        issues.append(f"mis {ind} is not independent")
    if len(ind) != mis_size_dp(real):
        issues.append(f"mis size {len(ind)} != dp size {mis_size_dp(real)}")
    cover = algorithms.mvc(g)
    if not oracle.is_vertex_cover(cover):
        issues.append(f"mvc {cover} misses an edge")
    if sorted(cover + ind) != list(range(1, n + 1)):
        issues.append("mvc is not the complement of mis")
    coloring = algorithms.greedy_coloring(g)
    if coloring.used != clique.size:
        issues.append(f"coloring uses {coloring.used} colors, clique is {clique.size}")
    for u in range(1, n + 1):
        for v in oracle.neighborhood(u):
            if coloring.colors[u - 1] == coloring.colors[v - 1]:
                issues.append(f"coloring gives {u} and {v} the same color")
                break
    if not oracle.valid_dfs(algorithms.dfs_order(g)):
        issues.append("dfs order fails the stack simulation")
    if not oracle.valid_bfs(algorithms.bfs_order(g)):
        issues.append("bfs order fails the queue simulation")
    if not oracle.is_peo(algorithms.peo(g)):
        issues.append("peo order is not a perfect elimination ordering")
    if n <= 18:
        if len(ind) != oracle.mis_size_exhaustive():
            issues.append("mis size differs from exhaustive search")
        if clique.size != oracle.clique_size_exhaustive():
            issues.append("clique size differs from exhaustive search")


def verify_interval(real: IntervalRealization, algorithms_too: bool = True) -> list[str]:
    """Oracle equivalence for the plain interval structure."""
    issues: list[str] = []
    g = SuccinctIntervalGraph.from_realization(real)
    oracle = OracleGraph.from_intervals(real)
    if g.realization() != real:
        issues.append("decoded realization differs from the input")
    back = SuccinctIntervalGraph.from_bytes(g.to_bytes())
    if back.to_bytes() != g.to_bytes():
        issues.append("serialization round trip is not byte-identical")
    _check_queries(g, oracle, issues)
    if algorithms_too:
        _check_algorithms(g, oracle, issues)
    return issues


def verify_variants(real: IntervalRealization) -> list[str]:
    """Depth-annotated structures answer exactly like the plain one."""
    issues: list[str] = []
    g = SuccinctIntervalGraph.from_realization(real)
    oracle = OracleGraph.from_intervals(real)
    n = real.n
    contenders = [
        ("kproper", KProperGraph.from_realization(real, MODE_PROPER)),
        ("kimproper", KProperGraph.from_realization(real, MODE_IMPROPER)),
    ]
    try:
        check_proper(real)
    except NotProperError:
        pass
    else:
        contenders.append(("proper", ProperIntervalGraph.from_realization(real)))
    for name, h in contenders:
        blob = h.to_bytes()
        if type(h).from_bytes(blob).to_bytes() != blob:
            issues.append(f"{name}: serialization round trip is not byte-identical")
        if h.realization() != real:
            issues.append(f"{name}: decoded realization differs from the input")
        for v in range(1, n + 1):
            if h.degree(v) != g.degree(v):
                issues.append(f"{name}: degree({v}) = {h.degree(v)} != {g.degree(v)}")
            if h.neighborhood(v) != g.neighborhood(v):
                issues.append(f"{name}: neighborhood({v}) differs")
        for u in range(1, n + 1):
            for v in range(1, n + 1):
                if h.adjacent(u, v) != g.adjacent(u, v):
                    issues.append(f"{name}: adjacent({u},{v}) differs")
        _check_paths(h, oracle, issues)
    return issues


def verify_circular(real: ArcRealization) -> list[str]:
    """Oracle equivalence for the circular-arc structure."""
    issues: list[str] = []
    g = CircularArcGraph.from_realization(real)
    oracle = OracleGraph.from_arc_positions(real.arcs)
    if g.realization() != real:
        issues.append("decoded realization differs from the input")
    back = CircularArcGraph.from_bytes(g.to_bytes())
    if back.to_bytes() != g.to_bytes():
        issues.append("serialization round trip is not byte-identical")
    rev = sorted(real.reversed_set())
    for i, u in enumerate(rev):
        for v in rev[i + 1 :]:
            if not g.adjacent(u, v):
                issues.append(f"reversed arcs {u} and {v} must intersect")
    _check_queries(g, oracle, issues)
    return issues
