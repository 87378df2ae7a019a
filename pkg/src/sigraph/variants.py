"""Restricted interval families: proper (no nesting) and bounded-depth.

A proper family needs only the 2n endpoint bits, since the v-th right
endpoint is the v-th 1 and range extremes over r are the range borders.
The bounded-depth structure annotates every endpoint with its interval's
containment depth, which pairs left and right endpoints within each
depth class and removes the explicit r array.
"""

from __future__ import annotations

from collections import deque

from .bitvector import BitVector
from .errors import GraphInputError, NotProperError, QueryRangeError
from .graph import IntervalQueries
from .intervals import IntervalRealization
from .rmq import RangeMaxIndex, RangeMinIndex
from .serial import Reader, Writer
from .wavelet import AlphabetSequence

_PROPER_MAGIC = b"SPGR"
_KPROPER_MAGIC = b"SKGR"
_VERSION = 1

MODE_PROPER = "proper"
MODE_IMPROPER = "improper"


def _parity_bits(real: IntervalRealization) -> BitVector:
    bits = [1] * (2 * real.n)
    for l, _ in real.intervals:
        bits[l - 1] = 0
    return BitVector(bits)


def check_proper(real: IntervalRealization) -> None:
    """Raise NotProperError naming the outermost offending pair."""
    best_v = 0
    best_r = 0
    for v, (_, r) in enumerate(real.intervals, start=1):
        if r < best_r:
            raise NotProperError(best_v, v)
        best_v, best_r = v, r


class ProperIntervalGraph(IntervalQueries):
    """2n + o(n)-bit structure for non-nesting realizations."""

    __slots__ = ("_n", "_s")

    def __init__(self, s: BitVector):
        n = len(s) // 2
        if len(s) != 2 * n or s.count(0) != n:
            raise GraphInputError("endpoint sequence must balance lefts and rights")
        self._n = n
        self._s = s

    @classmethod
    def from_realization(cls, real: IntervalRealization) -> "ProperIntervalGraph":
        check_proper(real)
        return cls(_parity_bits(real))

    # -- hooks -----------------------------------------------------------

    def _l(self, v: int) -> int:
        return self._s.select(0, v)

    def _r(self, v: int) -> int:
        return self._s.select(1, v)

    def _rank_left(self, p: int) -> int:
        return self._s.rank(0, p)

    def _rank_right(self, p: int) -> int:
        return self._s.rank(1, p)

    def _check_range(self, i: int, j: int) -> None:
        if not 1 <= i <= j <= self._n:
            raise QueryRangeError(f"range [{i}, {j}] invalid for n={self._n}")

    def _argmax_r(self, i: int, j: int) -> int:
        # rights increase with the label, so the extremes sit at the borders
        self._check_range(i, j)
        return j

    def _argmin_r(self, i: int, j: int) -> int:
        self._check_range(i, j)
        return i

    # -- reporting and serialization ------------------------------------

    @property
    def endpoint_bits(self) -> BitVector:
        return self._s

    def space_report(self) -> dict[str, int]:
        rep = self._s.space_report()
        return {"S": rep["raw"], "S_directory": rep["directory"]}

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        w = Writer().magic(_PROPER_MAGIC, _VERSION)
        w.u64(self._n)
        w.block(self._s.to_bytes())
        return w.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "ProperIntervalGraph":
        r = Reader(data)
        version = r.magic(_PROPER_MAGIC)
        if version != _VERSION:
            raise GraphInputError(f"unsupported structure version {version}")
        n = r.u64()
        s = BitVector.from_bytes(r.block())
        r.done()
        if len(s) != 2 * n:
            raise GraphInputError("endpoint sequence length disagrees with header")
        g = cls(s)
        g.realization()  # validates balance and pairing
        return g


class _Fenwick:
    __slots__ = ("_t",)

    def __init__(self, n: int):
        self._t = [0] * (n + 1)

    def add(self, i: int, delta: int) -> None:
        t = self._t
        while i < len(t):
            t[i] += delta
            i += i & -i

    def prefix(self, i: int) -> int:
        t = self._t
        s = 0
        while i > 0:
            s += t[i]
            i -= i & -i
        return s


def containment_depths(real: IntervalRealization, mode: str) -> list[int]:
    """Per-vertex depth: intervals containing v (proper mode) or
    contained in v (improper mode). One Fenwick sweep either way."""
    n = real.n
    kind = {}
    for v, (l, r) in enumerate(real.intervals, start=1):
        kind[l] = (0, v)
        kind[r] = (1, v)
    depths = [0] * (n + 1)
    bit = _Fenwick(2 * n)
    if mode == MODE_PROPER:
        open_count = 0
        for p in range(1, 2 * n + 1):
            side, v = kind[p]
            if side == 0:
                r = real.intervals[v - 1][1]
                depths[v] = open_count - bit.prefix(r)
                bit.add(r, 1)
                open_count += 1
            else:
                bit.add(p, -1)
                open_count -= 1
    elif mode == MODE_IMPROPER:
        closed_count = 0
        for p in range(1, 2 * n + 1):
            side, v = kind[p]
            if side == 1:
                l = real.intervals[v - 1][0]
                depths[v] = closed_count - bit.prefix(l)
                bit.add(l, 1)
                closed_count += 1
    else:
        raise GraphInputError(f"unknown depth mode {mode!r}")
    return depths[1:]


class KProperGraph(IntervalQueries):
    """Depth-annotated structure: 2n log k + O(n) bits for families where
    every interval is contained by (or contains) at most k others."""

    __slots__ = ("_n", "_s", "_t", "_mode", "_k", "_rcache", "_rmax", "_rmin")

    def __init__(
        self,
        t: AlphabetSequence,
        mode: str,
        block_size: int | None = None,
    ):
        if mode not in (MODE_PROPER, MODE_IMPROPER):
            raise GraphInputError(f"unknown depth mode {mode!r}")
        if len(t) % 2 or len(t) == 0:
            raise GraphInputError("endpoint annotation length must be even")
        if t.sigma % 2:
            raise GraphInputError("depth alphabet must pair even/odd symbols")
        symbols = t.to_list()
        self._n = len(t) // 2
        self._t = t
        self._mode = mode
        self._k = t.sigma // 2 - 1
        self._s = BitVector(sym & 1 for sym in symbols)
        self._rcache = self._pair_rights(symbols)
        self._rmax = RangeMaxIndex(self._rcache, block_size)
        self._rmin = RangeMinIndex(self._rcache, block_size)

    def _pair_rights(self, symbols) -> list[int]:
        # within one depth class the i-th left matches the i-th right
        pending = [deque() for _ in range((self._t.sigma // 2) + 1)]
        rights = [0] * self._n
        lefts_seen = 0
        for p, sym in enumerate(symbols, start=1):
            d, side = divmod(sym, 2)
            if side == 0:
                lefts_seen += 1
                pending[d].append(lefts_seen)
            else:
                if not pending[d]:
                    raise GraphInputError(
                        f"unmatched right endpoint at position {p}"
                    )
                v = pending[d].popleft()
                rights[v - 1] = p
        if any(q for q in pending):
            raise GraphInputError("unmatched left endpoints in annotation")
        return rights

    @classmethod
    def from_realization(
        cls,
        real: IntervalRealization,
        mode: str = MODE_PROPER,
        block_size: int | None = None,
    ) -> "KProperGraph":
        depths = containment_depths(real, mode)
        k = max(depths)
        symbols = [0] * (2 * real.n)
        for v, (l, r) in enumerate(real.intervals, start=1):
            symbols[l - 1] = 2 * depths[v - 1]
            symbols[r - 1] = 2 * depths[v - 1] + 1
        t = AlphabetSequence(symbols, sigma=2 * k + 2)
        return cls(t, mode, block_size)

    # -- hooks -----------------------------------------------------------

    def _l(self, v: int) -> int:
        return self._s.select(0, v)

    def _r(self, v: int) -> int:
        # the rights backing the range indexes double as the fast path
        return self._rcache[v - 1]

    def _r_from_annotation(self, v: int) -> int:
        """Right endpoint decoded from T alone: within a depth class,
        lefts and rights pair up first-to-first."""
        lv = self._s.select(0, v)
        t = self._t.access(lv)
        return self._t.select(t + 1, self._t.rank(t, lv))

    def _rank_left(self, p: int) -> int:
        return self._s.rank(0, p)

    def _rank_right(self, p: int) -> int:
        return self._s.rank(1, p)

    def _argmax_r(self, i: int, j: int) -> int:
        return self._rmax.query(i, j)

    def _argmin_r(self, i: int, j: int) -> int:
        return self._rmin.query(i, j)

    # -- depth reporting -------------------------------------------------

    @property
    def k(self) -> int:
        return self._k

    @property
    def mode(self) -> str:
        return self._mode

    def depth_of(self, v: int) -> int:
        self._check_vertex(v)
        return self._t.access(self._s.select(0, v)) // 2

    def depth_classes(self) -> list[list[int]]:
        classes: list[list[int]] = [[] for _ in range(self._k + 1)]
        for v in range(1, self._n + 1):
            classes[self.depth_of(v)].append(v)
        return classes

    @property
    def annotation(self) -> AlphabetSequence:
        return self._t

    # -- reporting and serialization ------------------------------------

    def space_report(self) -> dict[str, int]:
        t_rep = self._t.space_report()
        s_rep = self._s.space_report()
        return {
            "T_bitmaps": t_rep["bitmaps"],
            "T_directories": t_rep["directories"],
            "S": s_rep["raw"],
            "S_directory": s_rep["directory"],
            "rmax_directory": self._rmax.space_bits(),
            "rmin_directory": self._rmin.space_bits(),
        }

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        w = Writer().magic(_KPROPER_MAGIC, _VERSION)
        w.u64(self._n).u8(0 if self._mode == MODE_PROPER else 1)
        w.u32(self._rmax._c)
        w.block(self._t.to_bytes())
        return w.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "KProperGraph":
        r = Reader(data)
        version = r.magic(_KPROPER_MAGIC)
        if version != _VERSION:
            raise GraphInputError(f"unsupported structure version {version}")
        n = r.u64()
        mode = MODE_PROPER if r.u8() == 0 else MODE_IMPROPER
        c = r.u32()
        t = AlphabetSequence.from_bytes(r.block())
        r.done()
        if len(t) != 2 * n:
            raise GraphInputError("annotation length disagrees with header")
        g = cls(t, mode, c or None)
        real = g.realization()  # validates endpoint pairing
        if containment_depths(real, mode) != [g.depth_of(v) for v in range(1, n + 1)]:
            raise GraphInputError("annotation depths disagree with the realization")
        return g
