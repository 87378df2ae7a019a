"""Succinct interval-graph representation and its navigational queries.

Vertices are 1..n in increasing left-endpoint order. The structure keeps
the 2n-bit endpoint-kind sequence S (0 marks a left endpoint), the right
endpoints r_1..r_n, and range-extreme indexes over r. All of degree,
adjacent and succ are constant-time; neighborhood reports in time
proportional to the degree; spath walks the greedy succ chain.
"""

from __future__ import annotations

from .bitvector import BitVector
from .errors import GraphInputError, QueryRangeError
from .intervals import IntervalRealization
from .rmq import RangeMaxIndex, RangeMinIndex
from .serial import Reader, Writer, pack_uints, unpack_uints, width_for

_MAGIC = b"SIGR"
_VERSION = 1


def report_above(pick_max, value_of, lo: int, hi: int, threshold: int, out: list):
    """Append every index in [lo, hi] whose value exceeds threshold.

    Recursion on the range-max index: if the maximum clears the bar,
    report it and split; otherwise the whole range is exhausted. Work is
    proportional to the number of reported indexes.
    """
    stack = [(lo, hi)]
    while stack:
        i, j = stack.pop()
        if i > j:
            continue
        m = pick_max(i, j)
        if value_of(m) > threshold:
            out.append(m)
            stack.append((i, m - 1))
            stack.append((m + 1, j))


class IntervalQueries:
    """Query layer shared by every linear-interval representation.

    Concrete classes provide _l, _r, _rank_left (left endpoints at or
    before a position), _argmax_r and _argmin_r over vertex ranges.
    """

    __slots__ = ()

    _n: int

    @property
    def n(self) -> int:
        return self._n

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self._n:
            raise QueryRangeError(f"vertex {v} outside [1, {self._n}]")

    def interval_of(self, v: int) -> tuple[int, int]:
        self._check_vertex(v)
        return self._l(v), self._r(v)

    def realization(self) -> IntervalRealization:
        return IntervalRealization(
            tuple(self.interval_of(v) for v in range(1, self._n + 1))
        )

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._rank_left(self._r(v)) - self._rank_right(self._l(v)) - 1

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return False
        return self._r(u) > self._l(v) and self._r(v) > self._l(u)

    def neighborhood(self, v: int) -> list[int]:
        self._check_vertex(v)
        lv = self._l(v)
        out: list[int] = []
        report_above(self._argmax_r, self._r, 1, self._rank_left(self._r(v)), lv, out)
        out.remove(v)
        out.sort()
        return out

    def succ(self, u: int):
        """Neighbor with the farthest right endpoint among intervals
        starting before r_u; u itself when nothing reaches farther."""
        self._check_vertex(u)
        k = self._rank_left(self._r(u))
        i = self._argmax_r(1, k)
        return i if self._r(i) > self._l(u) else None

    def spath(self, u: int, v: int):
        """A shortest u-v path, or None when they are disconnected."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return [u]
        swapped = u > v
        if swapped:
            u, v = v, u
        path = [u]
        cur = u
        while not self.adjacent(cur, v):
            nxt = self.succ(cur)
            if nxt is None or nxt == cur:
                return None
            path.append(nxt)
            cur = nxt
        path.append(v)
        if swapped:
            path.reverse()
        return path


class SuccinctIntervalGraph(IntervalQueries):
    """n log n + O(n)-bit interval-graph structure over a realization."""

    __slots__ = ("_n", "_s", "_rlist", "_rmax", "_rmin")

    def __init__(self, s: BitVector, rights, block_size: int | None = None):
        n = len(s) // 2
        if len(s) != 2 * n or len(rights) != n:
            raise GraphInputError("endpoint sequence and right list disagree")
        self._n = n
        self._s = s
        self._rlist = list(rights)
        self._rmax = RangeMaxIndex(self._rlist, block_size)
        self._rmin = RangeMinIndex(self._rlist, block_size)

    @classmethod
    def from_realization(
        cls, real: IntervalRealization, block_size: int | None = None
    ) -> "SuccinctIntervalGraph":
        bits = [1] * (2 * real.n)
        for l, _ in real.intervals:
            bits[l - 1] = 0
        return cls(BitVector(bits), [r for _, r in real.intervals], block_size)

    # -- hooks used by the shared query layer ---------------------------

    def _l(self, v: int) -> int:
        return self._s.select(0, v)

    def _r(self, v: int) -> int:
        return self._rlist[v - 1]

    def _rank_left(self, p: int) -> int:
        return self._s.rank(0, p)

    def _rank_right(self, p: int) -> int:
        return self._s.rank(1, p)

    def _argmax_r(self, i: int, j: int) -> int:
        return self._rmax.query(i, j)

    def _argmin_r(self, i: int, j: int) -> int:
        return self._rmin.query(i, j)

    # -- reporting and serialization ------------------------------------

    @property
    def endpoint_bits(self) -> BitVector:
        return self._s

    def space_report(self) -> dict[str, int]:
        s_rep = self._s.space_report()
        return {
            "S": s_rep["raw"],
            "S_directory": s_rep["directory"],
            "r": self._n * width_for(2 * self._n),
            "rmax_directory": self._rmax.space_bits(),
            "rmin_directory": self._rmin.space_bits(),
        }

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        w = Writer().magic(_MAGIC, _VERSION)
        w.u64(self._n).u32(self._rmax._c)
        w.block(self._s.to_bytes())
        w.block(pack_uints(self._rlist, width_for(2 * self._n)))
        return w.getvalue()

    @classmethod
    def from_bytes(cls, data: bytes) -> "SuccinctIntervalGraph":
        r = Reader(data)
        version = r.magic(_MAGIC)
        if version != _VERSION:
            raise GraphInputError(f"unsupported structure version {version}")
        n = r.u64()
        c = r.u32()
        s = BitVector.from_bytes(r.block())
        rights = unpack_uints(r.block(), n, width_for(2 * n))
        r.done()
        g = cls(s, rights, c or None)
        g.realization()  # full invariant check on untrusted input
        return g
