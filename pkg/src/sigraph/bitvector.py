"""Bit vector with constant-time rank and near-constant-time select.

Bits are packed into 64-bit words, little-endian within each word. A
two-level directory (cumulative counts per 4096-bit superblock, plus
12-bit offsets per word inside its superblock) answers rank with one
popcount. Select binary-searches the superblock directory, narrowed by
sampled occurrence hints, then finishes with a byte-table walk inside
one word.

All public positions are 1-based; rank takes a prefix length in [0, N].
"""

from __future__ import annotations

import struct
from bisect import bisect_right

from .errors import QueryRangeError, SerializationError

_SB_WORDS = 64          # words per superblock
_SB_BITS = _SB_WORDS * 64
_SB_OFF_BITS = 12       # bits to store an offset inside a 4096-bit superblock
_SAMPLE = 4096          # one select hint per this many occurrences

# _BYTE_SEL[b] lists the positions (0..7) of the set bits of byte b, LSB first.
_BYTE_SEL = [[k for k in range(8) if b >> k & 1] for b in range(256)]

_MAGIC = b"SBVC"
_VERSION = 1


class BitVector:
    """Static bit sequence supporting access(i), rank(b, i), select(b, j)."""

    __slots__ = (
        "_n", "_words", "_nwords", "_ones",
        "_sb_ones", "_word_ones", "_sel1_sb", "_sel0_sb",
    )

    def __init__(self, bits):
        chars = "".join("1" if b else "0" for b in bits)
        n = len(chars)
        words = [
            int(chars[base:base + 64][::-1], 2) if chars[base:base + 64] else 0
            for base in range(0, n, 64)
        ]
        self._init_from_words(words, n)

    # -- construction ----------------------------------------------------

    def _init_from_words(self, words: list[int], n: int) -> None:
        self._n = n
        self._words = words
        self._nwords = len(words)
        sb_ones: list[int] = []
        word_ones: list[int] = []
        total = 0
        sb_base = 0
        for w_idx, w in enumerate(words):
            if w_idx % _SB_WORDS == 0:
                sb_ones.append(total)
                sb_base = total
            word_ones.append(total - sb_base)
            total += w.bit_count()
        if not sb_ones:
            sb_ones.append(0)
        self._ones = total
        self._sb_ones = sb_ones
        self._word_ones = word_ones
        self._sel1_sb = self._build_samples(sb_ones, total, ones=True)
        self._sel0_sb = self._build_samples(sb_ones, n - total, ones=False)

    def _build_samples(self, sb_ones: list[int], count: int, ones: bool) -> list[int]:
        # Superblock index holding occurrence t*_SAMPLE + 1, for each t.
        samples: list[int] = []
        nsb = len(sb_ones)
        s = 0
        for t in range(0, count, _SAMPLE):
            target = t + 1
            while s + 1 < nsb:
                before_next = sb_ones[s + 1] if ones else (s + 1) * _SB_BITS - sb_ones[s + 1]
                if before_next < target:
                    s += 1
                else:
                    break
            samples.append(s)
        return samples

    @classmethod
    def _from_words(cls, words: list[int], n: int) -> "BitVector":
        bv = cls.__new__(cls)
        bv._init_from_words(words, n)
        return bv

    # -- queries ---------------------------------------------------------

    def __len__(self) -> int:
        return self._n

    def count(self, b: int) -> int:
        """Total number of occurrences of bit b."""
        return self._ones if b else self._n - self._ones

    def access(self, i: int) -> int:
        """Bit at 1-based position i."""
        if not 1 <= i <= self._n:
            raise QueryRangeError(f"access position {i} outside [1, {self._n}]")
        i -= 1
        return self._words[i >> 6] >> (i & 63) & 1

    def rank(self, b: int, i: int) -> int:
        """Occurrences of bit b among the first i positions, 0 <= i <= N."""
        if not 0 <= i <= self._n:
            raise QueryRangeError(f"rank prefix {i} outside [0, {self._n}]")
        ones = self._rank1(i)
        return ones if b else i - ones

    def _rank1(self, i: int) -> int:
        fw, rem = divmod(i, 64)
        if fw >= self._nwords:
            return self._ones
        c = self._sb_ones[fw >> 6] + self._word_ones[fw]
        if rem:
            c += (self._words[fw] & (1 << rem) - 1).bit_count()
        return c

    def select(self, b: int, j: int) -> int:
        """1-based position of the j-th occurrence of bit b, 1 <= j <= count(b)."""
        if b:
            if not 1 <= j <= self._ones:
                raise QueryRangeError(f"select(1, {j}): vector holds {self._ones} ones")
            return self._select1(j)
        zeros = self._n - self._ones
        if not 1 <= j <= zeros:
            raise QueryRangeError(f"select(0, {j}): vector holds {zeros} zeros")
        return self._select0(j)

    def _select1(self, j: int) -> int:
        samples = self._sel1_sb
        t = (j - 1) // _SAMPLE
        lo = samples[t]
        hi = samples[t + 1] if t + 1 < len(samples) else len(self._sb_ones) - 1
        sb_ones = self._sb_ones
        s = bisect_right(sb_ones, j - 1, lo, hi + 1) - 1
        k = j - sb_ones[s]
        w_lo = s * _SB_WORDS
        w_hi = min(w_lo + _SB_WORDS, self._nwords)
        w = bisect_right(self._word_ones, k - 1, w_lo, w_hi) - 1
        k -= self._word_ones[w]
        word = self._words[w]
        base = w * 64
        for byte_i in range(8):
            byte = word >> (byte_i * 8) & 0xFF
            c = byte.bit_count()
            if k <= c:
                return base + byte_i * 8 + _BYTE_SEL[byte][k - 1] + 1
            k -= c
        raise AssertionError("select walked past the target word")

    def _select0(self, j: int) -> int:
        samples = self._sel0_sb
        sb_ones = self._sb_ones
        t = (j - 1) // _SAMPLE
        lo = samples[t]
        hi = samples[t + 1] if t + 1 < len(samples) else len(sb_ones) - 1
        while lo < hi:
            mid = (lo + hi + 1) >> 1
            if mid * _SB_BITS - sb_ones[mid] < j:
                lo = mid
            else:
                hi = mid - 1
        s = lo
        k = j - (s * _SB_BITS - sb_ones[s])
        w_lo = s * _SB_WORDS
        w_hi = min(w_lo + _SB_WORDS, self._nwords)
        word_ones = self._word_ones
        lo_w, hi_w = w_lo, w_hi - 1
        while lo_w < hi_w:
            mid = (lo_w + hi_w + 1) >> 1
            if (mid - w_lo) * 64 - word_ones[mid] < k:
                lo_w = mid
            else:
                hi_w = mid - 1
        w = lo_w
        k -= (w - w_lo) * 64 - word_ones[w]
        valid = self._n - w * 64
        if valid > 64:
            valid = 64
        inv = ~self._words[w] & (1 << valid) - 1
        base = w * 64
        for byte_i in range(8):
            byte = inv >> (byte_i * 8) & 0xFF
            c = byte.bit_count()
            if k <= c:
                return base + byte_i * 8 + _BYTE_SEL[byte][k - 1] + 1
            k -= c
        raise AssertionError("select walked past the target word")

    # -- reporting and serialization ------------------------------------

    def bit_string(self) -> str:
        """The bits as a '0'/'1' string, position 1 first."""
        out = []
        for w_idx in range(self._nwords):
            word = self._words[w_idx]
            width = min(64, self._n - w_idx * 64)
            out.append(format(word, f"0{width}b")[::-1][:width])
        return "".join(out)

    def space_report(self) -> dict[str, int]:
        nsb = len(self._sb_ones)
        sample_bits = max(1, (nsb - 1).bit_length() if nsb > 1 else 1)
        directory = (
            nsb * 64
            + len(self._word_ones) * _SB_OFF_BITS
            + (len(self._sel1_sb) + len(self._sel0_sb)) * sample_bits
        )
        return {"raw": self._nwords * 64, "directory": directory}

    def space_bits(self) -> int:
        return sum(self.space_report().values())

    def to_bytes(self) -> bytes:
        return struct.pack(
            f"<4sBQ{self._nwords}Q", _MAGIC, _VERSION, self._n, *self._words
        )

    @classmethod
    def from_bytes(cls, data: bytes) -> "BitVector":
        if len(data) < 13 or data[:4] != _MAGIC:
            raise SerializationError("bad bit vector header")
        if data[4] != _VERSION:
            raise SerializationError(f"unsupported bit vector version {data[4]}")
        (n,) = struct.unpack_from("<Q", data, 5)
        nwords = (n + 63) // 64
        if len(data) != 13 + 8 * nwords:
            raise SerializationError("bit vector payload length mismatch")
        words = list(struct.unpack_from(f"<{nwords}Q", data, 13))
        if n % 64 and words and words[-1] >> (n % 64):
            raise SerializationError("nonzero padding bits in bit vector")
        return cls._from_words(words, n)

    def __repr__(self) -> str:
        return f"BitVector(n={self._n}, ones={self._ones})"
