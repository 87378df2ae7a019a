import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sigraph import QueryRangeError
from sigraph.rmq import RangeMaxIndex, RangeMinIndex, default_block_size

R9 = [6, 5, 9, 8, 12, 18, 15, 17, 16]


def test_golden_max():
    idx = RangeMaxIndex(R9)
    assert idx.query(1, 5) == 5
    assert idx.query(1, 9) == 6
    assert idx.query(2, 4) == 3


def test_golden_min():
    idx = RangeMinIndex(R9)
    assert idx.query(1, 9) == 2
    assert idx.query(5, 9) == 5


def test_invalid_ranges():
    idx = RangeMaxIndex(R9)
    for i, j in ((0, 3), (3, 2), (1, 10), (10, 10)):
        with pytest.raises(QueryRangeError):
            idx.query(i, j)


def test_leftmost_tie_break():
    values = [3, 7, 7, 1, 7, 2]
    assert RangeMaxIndex(values, block_size=2).query(1, 6) == 2
    assert RangeMaxIndex(values, block_size=2).query(3, 6) == 3
    values = [4, 1, 5, 1, 1]
    assert RangeMinIndex(values, block_size=2).query(1, 5) == 2
    assert RangeMinIndex(values, block_size=2).query(3, 5) == 4


@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=200),
    st.integers(1, 8),
)
@settings(max_examples=120, deadline=None)
def test_exhaustive_against_scan(values, block):
    vmax = RangeMaxIndex(values, block_size=block)
    vmin = RangeMinIndex(values, block_size=block)
    n = len(values)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            seg = values[i - 1:j]
            assert vmax.query(i, j) == i + seg.index(max(seg))
            assert vmin.query(i, j) == i + seg.index(min(seg))


def test_large_against_numpy():
    np = pytest.importorskip("numpy")
    rng = random.Random(991)
    n = 1_000_000
    values = [rng.randrange(1 << 20) for _ in range(n)]
    arr = np.asarray(values)
    idx = RangeMaxIndex(values)
    mdx = RangeMinIndex(values)
    for _ in range(10_000):
        span = 1 << rng.randint(0, 19)
        i = rng.randint(1, n - span + 1)
        j = i + span - 1
        assert idx.query(i, j) == i + int(np.argmax(arr[i - 1:j]))
        assert mdx.query(i, j) == i + int(np.argmin(arr[i - 1:j]))
    # directory stays small relative to the sequence it indexes
    assert idx.space_bits() <= n / 4


def test_default_block_size_scales():
    assert default_block_size(0) == 32
    assert default_block_size(20) == 32
    assert default_block_size(200) == 64
    assert default_block_size(100_000) == 512
    assert default_block_size(1_000_000) == 512


def test_serialization_round_trip():
    idx = RangeMaxIndex(R9, block_size=4)
    blob = idx.to_bytes()
    again = RangeMaxIndex.from_bytes(blob, R9)
    assert isinstance(again, RangeMaxIndex)
    assert again.query(1, 9) == idx.query(1, 9)
    assert again.to_bytes() == blob
    mdx = RangeMinIndex(R9)
    assert isinstance(RangeMinIndex.from_bytes(mdx.to_bytes(), R9), RangeMinIndex)
