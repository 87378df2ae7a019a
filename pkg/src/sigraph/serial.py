"""Little-endian binary encoding helpers.

Every persistent structure writes a 4-byte magic tag, a version byte, and
fixed-width little-endian fields; variable parts are length-prefixed, and
bit-packed integer arrays pad their final byte with zeros. Decoders
validate magic, version, lengths, and padding so a decode-encode cycle is
byte-identical.
"""

from __future__ import annotations

import struct

from .errors import SerializationError


def width_for(max_value: int) -> int:
    """Bits needed to store values in [0, max_value]."""
    return max(1, max_value.bit_length())


def pack_uints(values, width: int) -> bytes:
    """Bit-pack non-negative ints of the given width, LSB first."""
    out = bytearray()
    acc = 0
    nbits = 0
    limit = 1 << width
    for v in values:
        if not 0 <= v < limit:
            raise SerializationError(f"value {v} does not fit in {width} bits")
        acc |= v << nbits
        nbits += width
        while nbits >= 8:
            out.append(acc & 0xFF)
            acc >>= 8
            nbits -= 8
    if nbits:
        out.append(acc)
    return bytes(out)


def unpack_uints(data: bytes, count: int, width: int) -> list[int]:
    expected = (count * width + 7) // 8
    if len(data) != expected:
        raise SerializationError("packed array length mismatch")
    out = []
    acc = 0
    nbits = 0
    pos = 0
    mask = (1 << width) - 1
    for _ in range(count):
        while nbits < width:
            acc |= data[pos] << nbits
            pos += 1
            nbits += 8
        out.append(acc & mask)
        acc >>= width
        nbits -= width
    if acc:
        raise SerializationError("nonzero padding in packed array")
    return out


class Writer:
    def __init__(self):
        self._buf = bytearray()

    def magic(self, tag: bytes, version: int) -> "Writer":
        assert len(tag) == 4
        self._buf += tag
        self._buf.append(version)
        return self

    def u8(self, v: int) -> "Writer":
        self._buf += struct.pack("<B", v)
        return self

    def u32(self, v: int) -> "Writer":
        self._buf += struct.pack("<L", v)
        return self

    def u64(self, v: int) -> "Writer":
        self._buf += struct.pack("<Q", v)
        return self

    def block(self, payload: bytes) -> "Writer":
        self._buf += struct.pack("<Q", len(payload))
        self._buf += payload
        return self

    def getvalue(self) -> bytes:
        return bytes(self._buf)


class Reader:
    def __init__(self, data: bytes):
        self._data = data
        self._pos = 0

    def magic(self, tag: bytes) -> int:
        """Consume and check a magic tag; returns the version byte."""
        got = self._take(4)
        if got != tag:
            raise SerializationError(
                f"expected {tag.decode('ascii')} data, found {got!r}"
            )
        return self.u8()

    def _take(self, k: int) -> bytes:
        if self._pos + k > len(self._data):
            raise SerializationError("truncated data")
        chunk = self._data[self._pos:self._pos + k]
        self._pos += k
        return chunk

    def u8(self) -> int:
        return self._take(1)[0]

    def u32(self) -> int:
        return struct.unpack("<L", self._take(4))[0]

    def u64(self) -> int:
        return struct.unpack("<Q", self._take(8))[0]

    def block(self) -> bytes:
        return self._take(self.u64())

    def done(self) -> None:
        if self._pos != len(self._data):
            raise SerializationError("trailing bytes after payload")
