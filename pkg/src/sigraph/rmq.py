"""Positional range-maximum and range-minimum indexes.

The target sequence is sampled in blocks of c values; a sparse table over
the per-block leaders answers the full-block middle of a query, and the
two partial blocks are scanned directly. The index stores positions only,
never values, so its accounted size is O((n/c) log n) bits on top of the
sequence it indexes. Ties resolve to the leftmost position.

Queries are 1-based inclusive ranges; answers are 1-based positions.
"""

from __future__ import annotations

import struct
from typing import Sequence

from .errors import QueryRangeError, SerializationError

_MAGIC = b"SRMQ"
_VERSION = 1


def default_block_size(n: int) -> int:
    """Power-of-two block size keeping the directory under ~n/4 bits.

    Grows like (log n)^2 so the sparse table's (n/c) log^2 term stays o(n);
    never below 32 so small indexes stay shallow.
    """
    lg = max(1, n.bit_length())
    target = max(32, lg * lg)
    return 1 << (target - 1).bit_length()


class _BlockExtremeIndex:
    _prefer_max = True

    def __init__(self, values: Sequence[int], block_size: int | None = None):
        n = len(values)
        if block_size is None:
            block_size = default_block_size(n)
        if block_size < 1:
            raise ValueError("block size must be positive")
        self._values = values
        self._n = n
        self._c = block_size
        self._leaders = [
            self._scan(b, min(b + block_size, n))
            for b in range(0, n, block_size)
        ]
        self._table = self._build_table(self._leaders)

    def _scan(self, a: int, b: int) -> int:
        # Leftmost extreme position in the 0-based half-open range [a, b).
        seg = self._values[a:b]
        m = max(seg) if self._prefer_max else min(seg)
        return a + seg.index(m)

    def _build_table(self, leaders: list[int]) -> list[list[int]]:
        table = [leaders]
        width = 1
        nblocks = len(leaders)
        while 2 * width <= nblocks:
            prev = table[-1]
            table.append([
                self._pick(prev[b], prev[b + width])
                for b in range(nblocks - 2 * width + 1)
            ])
            width *= 2
        return table

    def _pick(self, p: int, q: int) -> int:
        # p is the leftward candidate; ties keep it.
        vp, vq = self._values[p], self._values[q]
        if self._prefer_max:
            return p if vp >= vq else q
        return p if vp <= vq else q

    def query(self, i: int, j: int) -> int:
        """Leftmost extreme position in [i, j], 1 <= i <= j <= n."""
        if i < 1 or j > self._n or i > j:
            raise QueryRangeError(f"range [{i}, {j}] invalid for n={self._n}")
        a, b = i - 1, j - 1
        c = self._c
        ba, bb = a // c, b // c
        if ba == bb:
            return self._scan(a, b + 1) + 1
        best = self._scan(a, (ba + 1) * c)
        if bb - ba > 1:
            mid = self._table_query(ba + 1, bb - 1)
            best = self._pick(best, mid)
        right = self._scan(bb * c, b + 1)
        return self._pick(best, right) + 1

    def _table_query(self, lo: int, hi: int) -> int:
        k = (hi - lo + 1).bit_length() - 1
        row = self._table[k]
        return self._pick(row[lo], row[hi - (1 << k) + 1])

    # -- reporting and serialization ------------------------------------

    def space_report(self) -> dict[str, int]:
        nblocks = len(self._leaders)
        off_bits = max(1, (self._c - 1).bit_length())
        pos_bits = max(1, (nblocks - 1).bit_length() if nblocks > 1 else 1)
        table_entries = sum(len(row) for row in self._table[1:])
        return {
            "block_leaders": nblocks * off_bits,
            "sparse_table": table_entries * pos_bits,
        }

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        kind = 0 if self._prefer_max else 1
        return struct.pack("<4sBBQL", _MAGIC, _VERSION, kind, self._n, self._c)

    @classmethod
    def from_bytes(cls, data: bytes, values: Sequence[int]):
        if len(data) != struct.calcsize("<4sBBQL") or data[:4] != _MAGIC:
            raise SerializationError("bad range index header")
        _, version, kind, n, c = struct.unpack("<4sBBQL", data)
        if version != _VERSION:
            raise SerializationError(f"unsupported range index version {version}")
        target = RangeMaxIndex if kind == 0 else RangeMinIndex
        if n != len(values):
            raise SerializationError("range index length disagrees with values")
        return target(values, block_size=c)


class RangeMaxIndex(_BlockExtremeIndex):
    """Leftmost position of the maximum over a 1-based inclusive range."""

    _prefer_max = True


class RangeMinIndex(_BlockExtremeIndex):
    """Leftmost position of the minimum over a 1-based inclusive range."""

    _prefer_max = False
