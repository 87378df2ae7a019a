"""Circular-arc graphs: anchored realizations and the succinct structure.

Arcs live on a circle of 2n endpoint positions. One anchor arc starts the
clockwise traversal at position 1; an arc whose start lies after its end
crosses the anchor point and is called reversed. Every reversed arc
covers the wrap position, so reversed arcs pairwise intersect.

The structure splits arcs into the normal family (an interval system)
and the reversed family. The four-symbol endpoint sequence S' (family x
side) factors into three plain bitvectors carrying the same information:
the parity vector S marking right endpoints, a family vector over left
endpoints in label order, and a family vector over right endpoints in
position order. Every S' rank or select is then one or two plain
bitvector operations. On top sit one point grid per family pairing left
and right endpoint ranks, and the right-endpoint lists with range-max
indexes for reporting and paths.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .bitvector import BitVector
from .errors import GraphInputError, QueryRangeError
from .graph import report_above
from .rmq import RangeMaxIndex
from .serial import Reader, Writer, pack_uints, unpack_uints, width_for
from .wavelet import AlphabetSequence, PointGrid

_MAGIC = b"SCAG"
_VERSION = 1

# endpoint symbols in S'
_NL, _NR, _RL, _RR = 0, 1, 2, 3


@dataclass(frozen=True)
class ArcRealization:
    """n arcs over positions {1..2n}, labeled by clockwise start order;
    the anchor arc starts at position 1. l > r marks a reversed arc."""

    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        n = len(self.arcs)
        if n == 0:
            raise GraphInputError("realization needs at least one arc")
        endpoints = []
        prev_l = 0
        for l, r in self.arcs:
            if l == r:
                raise GraphInputError("arc start and end must differ")
            if l <= prev_l:
                raise GraphInputError("arcs must be listed in increasing start order")
            prev_l = l
            endpoints.append(l)
            endpoints.append(r)
        if sorted(endpoints) != list(range(1, 2 * n + 1)):
            raise GraphInputError(
                f"endpoints must use each value in 1..{2 * n} exactly once"
            )
        if self.arcs[0][0] != 1:
            raise GraphInputError("anchor arc must start at position 1")

    @property
    def n(self) -> int:
        return len(self.arcs)

    def is_reversed(self, v: int) -> bool:
        l, r = self.arcs[v - 1]
        return l > r

    def reversed_set(self) -> set[int]:
        return {v for v in range(1, self.n + 1) if self.is_reversed(v)}


def anchor_arcs(raw, anchor: int | None = None) -> ArcRealization:
    """Place raw (start, end) pairs on {1..2n} and rotate so the anchor
    arc starts the traversal. Defaults to the arc with the smallest
    start; `anchor` picks one by 1-based input index."""
    pairs = list(raw)
    if not pairs:
        raise GraphInputError("realization needs at least one arc")
    n = len(pairs)
    values = []
    for idx, (a, b) in enumerate(pairs):
        if a == b:
            raise GraphInputError(
                f"arc #{idx + 1} covers the full circle (start equals end)"
            )
        values.append(a)
        values.append(b)
    ranked = sorted(values)
    if any(ranked[i] == ranked[i + 1] for i in range(len(ranked) - 1)):
        raise GraphInputError("arc endpoints must be pairwise distinct")
    pos = {val: i + 1 for i, val in enumerate(ranked)}
    if anchor is None:
        anchor = min(range(n), key=lambda i: pairs[i][0]) + 1
    if not 1 <= anchor <= n:
        raise GraphInputError(f"anchor index {anchor} outside [1, {n}]")
    shift = pos[pairs[anchor - 1][0]] - 1
    span = 2 * n

    def rot(p: int) -> int:
        return (p - 1 - shift) % span + 1

    placed = sorted((rot(pos[a]), rot(pos[b])) for a, b in pairs)
    return ArcRealization(tuple(placed))


def random_arc_realization(
    n: int, rng: random.Random, require_reversed: bool = True
) -> ArcRealization:
    """Random pairing of {1..2n} with random orientations; retries a few
    times to include at least one reversed arc when asked (a single arc
    can never be reversed, since the anchor starts at its own start)."""
    if n < 1:
        raise GraphInputError("need n >= 1")
    for _ in range(20):
        pts = list(range(1, 2 * n + 1))
        rng.shuffle(pts)
        raw = []
        for i in range(n):
            a, b = pts[2 * i], pts[2 * i + 1]
            raw.append((a, b) if rng.random() < 0.5 else (b, a))
        real = anchor_arcs(raw)
        if not require_reversed or real.reversed_set() or n == 1:
            return real
    return real


class CircularArcGraph:
    """Succinct circular-arc structure with constant-depth decode paths."""

    __slots__ = (
        "_n",
        "_q",
        "_s",
        "_lk",
        "_rk",
        "_grid_n",
        "_grid_r",
        "_rp",
        "_rpp",
        "_rmax_n",
        "_rmax_r",
        "_degrees",
    )

    def __init__(
        self,
        sp: AlphabetSequence,
        rp: list[int],
        rpp: list[int],
        block_size: int | None = None,
        degree_table: bool = False,
    ):
        if sp.sigma != 4 or len(sp) % 2:
            raise GraphInputError("endpoint sequence must be even over symbols 0..3")
        symbols = sp.to_list()
        n = len(symbols) // 2
        q = symbols.count(_NL)
        if (
            symbols.count(_NR) != q
            or symbols.count(_RL) != n - q
            or symbols.count(_RR) != n - q
        ):
            raise GraphInputError("endpoint kinds must pair up")
        if len(rp) != q or len(rpp) != n - q:
            raise GraphInputError("right-endpoint lists disagree with the sequence")
        self._n = n
        self._q = q
        self._s = BitVector(sym & 1 for sym in symbols)
        self._lk = BitVector(sym >> 1 for sym in symbols if not sym & 1)
        self._rk = BitVector(sym >> 1 for sym in symbols if sym & 1)
        self._rp = rp
        self._rpp = rpp
        self._grid_n = PointGrid(_rank_permutation(rp))
        self._grid_r = PointGrid(_rank_permutation(rpp))
        self._rmax_n = RangeMaxIndex(rp, block_size)
        self._rmax_r = RangeMaxIndex(rpp, block_size)
        self._degrees = (
            [self._degree_by_formula(v) for v in range(1, n + 1)]
            if degree_table
            else None
        )

    @classmethod
    def from_realization(
        cls,
        real: ArcRealization,
        block_size: int | None = None,
        degree_table: bool = False,
    ) -> "CircularArcGraph":
        n = real.n
        symbols = [0] * (2 * n)
        rp = []
        rpp = []
        for l, r in real.arcs:
            if l < r:
                symbols[l - 1] = _NL
                symbols[r - 1] = _NR
                rp.append(r)
            else:
                symbols[l - 1] = _RL
                symbols[r - 1] = _RR
                rpp.append(r)
        sp = AlphabetSequence(symbols, sigma=4)
        return cls(sp, rp, rpp, block_size, degree_table)

    # -- S' operations over the factored vectors -------------------------

    # Left endpoints in position order carry labels 1..n, so a family
    # count over the first p positions reduces to a parity rank followed
    # by a rank in the matching family vector.

    def _rank_nl(self, p: int) -> int:
        return self._lk.rank(0, self._s.rank(0, p))

    def _rank_rl(self, p: int) -> int:
        return self._lk.rank(1, self._s.rank(0, p))

    def _rank_nr(self, p: int) -> int:
        return self._rk.rank(0, self._s.rank(1, p))

    def _rank_rr(self, p: int) -> int:
        return self._rk.rank(1, self._s.rank(1, p))

    def _select_nr(self, y: int) -> int:
        return self._s.select(1, self._rk.select(0, y))

    def _select_rr(self, y: int) -> int:
        return self._s.select(1, self._rk.select(1, y))

    # -- decoding --------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def normal_count(self) -> int:
        return self._q

    @property
    def endpoint_symbols(self) -> AlphabetSequence:
        """The four-symbol endpoint sequence, rebuilt on demand."""
        symbols = []
        lefts = rights = 0
        for bit in self._s.bit_string():
            if bit == "0":
                lefts += 1
                symbols.append(self._lk.access(lefts) << 1)
            else:
                rights += 1
                symbols.append(self._rk.access(rights) << 1 | 1)
        return AlphabetSequence(symbols, sigma=4)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self._n:
            raise QueryRangeError(f"vertex {v} outside [1, {self._n}]")

    def _decode(self, v: int) -> tuple[int, int, bool]:
        l = self._s.select(0, v)
        if self._lk.access(v):
            return l, self._rpp[self._lk.rank(1, v) - 1], True
        return l, self._rp[self._lk.rank(0, v) - 1], False

    def arc_of(self, v: int) -> tuple[int, int]:
        self._check_vertex(v)
        l, r, _ = self._decode(v)
        return l, r

    def is_reversed(self, v: int) -> bool:
        self._check_vertex(v)
        return bool(self._lk.access(v))

    def realization(self) -> ArcRealization:
        return ArcRealization(tuple(self.arc_of(v) for v in range(1, self._n + 1)))

    def _label_of_normal(self, x: int) -> int:
        return self._lk.select(0, x)

    def _label_of_reversed(self, x: int) -> int:
        return self._lk.select(1, x)

    # -- queries ---------------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        if self._degrees is not None:
            return self._degrees[v - 1]
        return self._degree_by_formula(v)

    def _degree_by_formula(self, v: int) -> int:
        l, r, rev = self._decode(v)
        nrev = self._n - self._q
        if not rev:
            normals = self._rank_nl(r) - self._rank_nr(l) - 1
            # reversed arcs miss v only when they start after r and end
            # before l: a rectangle count over the reversed grid
            disjoint = self._grid_r.count(
                self._rank_rl(r) + 1, nrev, 1, self._rank_rr(l)
            )
            return normals + nrev - disjoint
        disjoint = self._grid_n.count(
            self._rank_nl(r) + 1, self._q, 1, self._rank_nr(l)
        )
        return (self._q - disjoint) + nrev - 1

    @staticmethod
    def _adjacent_decoded(a: tuple[int, int, bool], b: tuple[int, int, bool]) -> bool:
        """Intersection test for two distinct decoded arcs."""
        lu, ru, revu = a
        lv, rv, revv = b
        if revu and revv:
            return True
        if not revu and not revv:
            return ru > lv and rv > lu
        if revu:
            lu, ru, lv, rv = lv, rv, lu, ru
        # now (lu, ru) is the normal arc, (lv, rv) the reversed one
        return lu < rv or ru > lv

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return self._adjacent_decoded(self._decode(u), self._decode(v))

    def neighborhood(self, v: int) -> list[int]:
        self._check_vertex(v)
        l, r, rev = self._decode(v)
        nrev = self._n - self._q
        normal_hits: list[int] = []
        reversed_hits: list[int] = []
        if not rev:
            report_above(
                self._rmax_n.query, lambda x: self._rp[x - 1], 1, self._rank_nl(r), l,
                normal_hits,
            )
            normal_hits.remove(self._lk.rank(0, v))
            cross = self._rank_rl(r)
            reversed_hits.extend(range(1, cross + 1))
            report_above(
                self._rmax_r.query, lambda x: self._rpp[x - 1], cross + 1, nrev, l,
                reversed_hits,
            )
        else:
            cross = self._rank_nl(r)
            normal_hits.extend(range(1, cross + 1))
            report_above(
                self._rmax_n.query, lambda x: self._rp[x - 1], cross + 1, self._q, l,
                normal_hits,
            )
            mine = self._lk.rank(1, v)
            reversed_hits.extend(x for x in range(1, nrev + 1) if x != mine)
        out = [self._label_of_normal(x) for x in normal_hits]
        out.extend(self._label_of_reversed(x) for x in reversed_hits)
        out.sort()
        return out

    # -- shortest paths --------------------------------------------------

    def _succ_decoded(self, cur: tuple[int, int, bool]):
        """Clockwise greedy hop from a decoded arc: the neighbor reaching
        farthest past the arc's end; None when nothing advances the
        frontier."""
        l, r, rev = cur
        nrev = self._n - self._q
        wrap = self._rank_rl(r)
        if wrap:
            # a reversed neighbor starting before r carries the walk
            # past the anchor point: farther than anything on this lap
            # (from a reversed arc, r < l keeps the arc itself out)
            return self._label_of_reversed(self._rmax_r.query(1, wrap))
        best_x = None
        best_val = r
        k = self._rank_nl(r)
        if k:
            x = self._rmax_n.query(1, k)
            if self._rp[x - 1] > best_val:
                best_x, best_val = (x, False), self._rp[x - 1]
        if not rev:
            if nrev:
                x = self._rmax_r.query(1, nrev)
                val = self._rpp[x - 1]
                # only the arm ending after l touches this arc pre-wrap
                if val > l and val > best_val:
                    best_x, best_val = (x, True), val
        else:
            mine = self._rank_rl(l)
            for lo, hi in ((1, mine - 1), (mine + 1, nrev)):
                if lo <= hi:
                    x = self._rmax_r.query(lo, hi)
                    if self._rpp[x - 1] > best_val:
                        best_x, best_val = (x, True), self._rpp[x - 1]
        if best_x is None:
            return None
        x, is_rev = best_x
        return self._label_of_reversed(x) if is_rev else self._label_of_normal(x)

    def _succ(self, cur: int):
        return self._succ_decoded(self._decode(cur))

    def spath(self, u: int, v: int):
        """A shortest u-v path by two alternating clockwise walks, one
        from each end; the first to reach the other side wins."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return [u]
        dec_u = self._decode(u)
        dec_v = self._decode(v)
        path_a = [u]
        path_b = [v]
        head_a, head_b = dec_u, dec_v
        dead_a = dead_b = False
        for _ in range(4 * self._n + 8):
            if not dead_a:
                # the adjacency check runs before any hop, so a live
                # head is never the untouched far endpoint
                if self._adjacent_decoded(head_a, dec_v):
                    path_a.append(v)
                    return path_a
                nxt = self._succ_decoded(head_a)
                if nxt is None:
                    dead_a = True
                else:
                    path_a.append(nxt)
                    head_a = self._decode(nxt)
            if not dead_b:
                if self._adjacent_decoded(head_b, dec_u):
                    path_b.append(u)
                    path_b.reverse()
                    return path_b
                nxt = self._succ_decoded(head_b)
                if nxt is None:
                    dead_b = True
                else:
                    path_b.append(nxt)
                    head_b = self._decode(nxt)
            if dead_a and dead_b:
                return None
        return None

    # -- reporting and serialization ------------------------------------

    def space_report(self) -> dict[str, int]:
        s_rep = self._s.space_report()
        lk_rep = self._lk.space_report()
        rk_rep = self._rk.space_report()
        width = width_for(2 * self._n)
        rep = {
            "S": s_rep["raw"],
            "S_directory": s_rep["directory"],
            "left_families": lk_rep["raw"],
            "left_families_directory": lk_rep["directory"],
            "right_families": rk_rep["raw"],
            "right_families_directory": rk_rep["directory"],
            "grid_normal": self._grid_n.space_bits(),
            "grid_reversed": self._grid_r.space_bits(),
            "r_normal": self._q * width,
            "r_reversed": (self._n - self._q) * width,
            "rmax_normal_directory": self._rmax_n.space_bits(),
            "rmax_reversed_directory": self._rmax_r.space_bits(),
        }
        if self._degrees is not None:
            rep["degree_table"] = self._n * width_for(max(self._n - 1, 1))
        return rep

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        w = Writer().magic(_MAGIC, _VERSION)
        w.u64(self._n).u32(self._rmax_n._c).u8(0 if self._degrees is None else 1)
        w.block(self.endpoint_symbols.to_bytes())
        width = width_for(2 * self._n)
        w.block(pack_uints(self._rp, width))
        w.block(pack_uints(self._rpp, width))
        if self._degrees is not None:
            w.block(pack_uints(self._degrees, width_for(max(self._n - 1, 1))))
        return w.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "CircularArcGraph":
        r = Reader(data)
        version = r.magic(_MAGIC)
        if version != _VERSION:
            raise GraphInputError(f"unsupported structure version {version}")
        n = r.u64()
        c = r.u32()
        has_table = r.u8()
        sp = AlphabetSequence.from_bytes(r.block())
        if len(sp) != 2 * n or sp.sigma != 4:
            raise GraphInputError("endpoint sequence disagrees with header")
        width = width_for(2 * n)
        q = sp.count(_NL)
        rp = unpack_uints(r.block(), q, width)
        rpp = unpack_uints(r.block(), n - q, width)
        stored = unpack_uints(r.block(), n, width_for(max(n - 1, 1))) if has_table else None
        r.done()
        g = cls(sp, rp, rpp, c or None, degree_table=False)
        g.realization()  # validates endpoint structure
        if sorted(rp) != [g._select_nr(i) for i in range(1, q + 1)]:
            raise GraphInputError("normal right endpoints disagree with the sequence")
        if sorted(rpp) != [g._select_rr(i) for i in range(1, n - q + 1)]:
            raise GraphInputError("reversed right endpoints disagree with the sequence")
        if stored is not None:
            g._degrees = stored
            if stored != [g._degree_by_formula(v) for v in range(1, n + 1)]:
                raise GraphInputError("degree table disagrees with the structure")
        return g


def _rank_permutation(values: list[int]) -> list[int]:
    order = {val: i + 1 for i, val in enumerate(sorted(values))}
    return [order[v] for v in values]
