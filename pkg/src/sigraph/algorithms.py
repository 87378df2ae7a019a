"""Combinatorial algorithms running directly on the succinct structures.

Everything here only touches the query hooks (rank over S, r decoding,
range extremes over r), so the same code serves the plain, proper and
k-proper representations.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CliqueWitness:
    """A maximum clique certified by a cut position: all intervals open
    at position cut (l <= cut < r) pairwise intersect there."""

    cut: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def used(self) -> int:
        return max(self.colors) if self.colors else 0


def build_d_sequence(g) -> list[int]:
    """Open-interval count after each endpoint position; peaks give the
    clique number and d_{2n} returns to 0."""
    out = []
    d = 0
    for p in range(1, 2 * g.n + 1):
        d += 1 if g._rank_left(p) - g._rank_left(p - 1) else -1
        out.append(d)
    return out


def dfs_order(g) -> list[int]:
    """Label order 1..n is a valid depth-first discovery order."""
    return list(range(1, g.n + 1))


def bfs_order(g) -> list[int]:
    """Label order 1..n is a valid breadth-first discovery order."""
    return list(range(1, g.n + 1))


def peo(g) -> list[int]:
    """Left-endpoint order is a perfect elimination ordering."""
    return list(range(1, g.n + 1))


def mis(g) -> list[int]:
    """Maximum independent set: repeatedly take the interval with the
    leftmost right endpoint, then skip everything it intersects."""
    out = []
    start = 1
    n = g.n
    while start <= n:
        m = g._argmin_r(start, n)
        out.append(m)
        start = g._rank_left(g._r(m)) + 1
    return out


def mvc(g) -> list[int]:
    """Minimum vertex cover: complement of the independent set."""
    inside = set(mis(g))
    return [v for v in range(1, g.n + 1) if v not in inside]


def max_clique(g) -> CliqueWitness:
    d = build_d_sequence(g)
    cut = max(range(2 * g.n), key=lambda i: (d[i], -i)) + 1
    members = [v for v in range(1, g._rank_left(cut) + 1) if g._r(v) > cut]
    return CliqueWitness(cut, tuple(members))


def greedy_coloring(g) -> Coloring:
    """Scan by label, giving each vertex the smallest color missing from
    its earlier neighbors; uses exactly clique-number colors."""
    colors = [0] * (g.n + 1)
    for v in range(1, g.n + 1):
        taken = {colors[u] for u in g.neighborhood(v) if u < v}
        c = 1
        while c in taken:
            c += 1
        colors[v] = c
    return Coloring(tuple(colors[1:]))
