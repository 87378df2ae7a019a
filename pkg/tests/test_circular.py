"""Circular-arc structure against the worked 7-arc example and a
brute-force oracle on random realizations."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import FIG2_ADJACENCY, FIG2_ARCS
from sigraph.circular import (
    ArcRealization,
    CircularArcGraph,
    anchor_arcs,
    random_arc_realization,
)
from sigraph.errors import GraphInputError, QueryRangeError
from sigraph.oracle import OracleGraph


def fig2_graph(**kw) -> CircularArcGraph:
    return CircularArcGraph.from_realization(ArcRealization(FIG2_ARCS), **kw)


def fig2_oracle() -> OracleGraph:
    return OracleGraph.from_arc_positions(FIG2_ARCS)


# -- build and decode ----------------------------------------------------


def test_endpoint_symbols():
    g = fig2_graph()
    assert g.endpoint_symbols.to_list() == [0, 3, 1, 0, 0, 2, 1, 1, 0, 3, 0, 1, 2, 1]
    assert g.n == 7
    assert g.normal_count == 5


def test_right_lists_and_grids():
    g = fig2_graph()
    assert g._rp == [3, 7, 8, 14, 12]
    assert g._rpp == [2, 10]
    assert [g._grid_n.y(x) for x in range(1, 6)] == [1, 2, 3, 5, 4]
    assert [g._grid_r.y(x) for x in range(1, 3)] == [1, 2]


def test_decode_round_trip():
    g = fig2_graph()
    for v, arc in enumerate(FIG2_ARCS, start=1):
        assert g.arc_of(v) == arc
    assert g.realization() == ArcRealization(FIG2_ARCS)
    assert {v for v in range(1, 8) if g.is_reversed(v)} == {4, 7}


def test_realization_validation():
    with pytest.raises(GraphInputError, match="at least one"):
        ArcRealization(())
    with pytest.raises(GraphInputError, match="start order"):
        ArcRealization(((3, 1), (2, 4)))
    with pytest.raises(GraphInputError, match="exactly once"):
        ArcRealization(((1, 3), (3, 4)))
    with pytest.raises(GraphInputError, match="must differ"):
        ArcRealization(((1, 1),))
    with pytest.raises(GraphInputError, match="start at position 1"):
        ArcRealization(((2, 1),))


def test_anchor_rotation():
    real = anchor_arcs([(10, 30), (25, 70), (50, 5)])
    assert real.arcs == ((1, 3), (2, 5), (4, 6))
    # floats and negatives rank the same way
    again = anchor_arcs([(-1.0, 0.5), (0.2, 3.5), (2.25, -1.5)])
    assert again.arcs == real.arcs


def test_anchor_override_relabels_but_keeps_graph():
    base = anchor_arcs([(10, 30), (25, 70), (50, 5)])
    for anchor in (1, 2, 3):
        real = anchor_arcs([(10, 30), (25, 70), (50, 5)], anchor=anchor)
        assert real.arcs[0][0] == 1
        a = OracleGraph.from_arc_positions(base.arcs)
        b = OracleGraph.from_arc_positions(real.arcs)
        assert sorted(a.degree(v) for v in range(1, 4)) == sorted(
            b.degree(v) for v in range(1, 4)
        )
    with pytest.raises(GraphInputError, match="anchor index"):
        anchor_arcs([(1, 2)], anchor=2)


def test_anchor_rejects_degenerate_input():
    with pytest.raises(GraphInputError, match="full circle"):
        anchor_arcs([(4, 4), (1, 2)])
    with pytest.raises(GraphInputError, match="distinct"):
        anchor_arcs([(1, 5), (5, 9)])
    with pytest.raises(GraphInputError, match="at least one"):
        anchor_arcs([])


def test_anchor_arc_is_never_reversed():
    rng = random.Random(5)
    for _ in range(30):
        real = random_arc_realization(rng.randint(1, 12), rng)
        assert not real.is_reversed(1)


def test_random_realization_includes_reversed_arc():
    rng = random.Random(11)
    for n in (2, 3, 8, 20):
        real = random_arc_realization(n, rng)
        assert real.reversed_set()


# -- queries on the worked example ---------------------------------------


def test_adjacency_matrix():
    g = fig2_graph()
    for u in range(1, 8):
        for v in range(1, 8):
            assert g.adjacent(u, v) == (v in FIG2_ADJACENCY[u]), (u, v)


def test_degrees():
    g = fig2_graph()
    assert g.degree(4) == 6
    assert g.degree(7) == 5
    for v in range(1, 8):
        assert g.degree(v) == len(FIG2_ADJACENCY[v])


def test_neighborhoods():
    g = fig2_graph()
    assert g.neighborhood(6) == [4, 5]
    for v in range(1, 8):
        assert g.neighborhood(v) == sorted(FIG2_ADJACENCY[v])


def test_paths_on_example():
    g = fig2_graph()
    oracle = fig2_oracle()
    path = g.spath(1, 6)
    assert path is not None and len(path) == 3
    assert path[0] == 1 and path[-1] == 6
    _check_path(oracle, path)
    for u in range(1, 8):
        dists = oracle.dists_from(u)
        for v in range(1, 8):
            path = g.spath(u, v)
            assert path is not None
            assert len(path) - 1 == dists[v]
            _check_path(oracle, path)
            assert path[0] == u and path[-1] == v


def test_query_range_errors():
    g = fig2_graph()
    for bad in (0, 8, -3):
        with pytest.raises(QueryRangeError):
            g.degree(bad)
        with pytest.raises(QueryRangeError):
            g.neighborhood(bad)
        with pytest.raises(QueryRangeError):
            g.adjacent(1, bad)
        with pytest.raises(QueryRangeError):
            g.spath(bad, 1)
        with pytest.raises(QueryRangeError):
            g.arc_of(bad)


# -- small special shapes ------------------------------------------------


def test_single_arc():
    real = anchor_arcs([(40, 2)])
    assert real.arcs == ((1, 2),)
    g = CircularArcGraph.from_realization(real)
    assert g.n == 1 and g.normal_count == 1
    assert g.degree(1) == 0
    assert g.neighborhood(1) == []
    assert g.spath(1, 1) == [1]


def test_disconnected_components():
    # the reversed arc misses the gap 4..5, isolating the middle arc
    g = CircularArcGraph.from_realization(ArcRealization(((1, 2), (4, 5), (6, 3))))
    assert g.adjacent(1, 3) and not g.adjacent(1, 2) and not g.adjacent(2, 3)
    assert g.spath(2, 1) is None
    assert g.spath(1, 2) is None
    assert g.spath(3, 2) is None
    assert len(g.spath(1, 3)) == 2


def test_all_disjoint_normals():
    g = CircularArcGraph.from_realization(ArcRealization(((1, 2), (3, 4), (5, 6))))
    for u in range(1, 4):
        for v in range(1, 4):
            assert not g.adjacent(u, v)
            if u != v:
                assert g.spath(u, v) is None
        assert g.degree(u) == 0


def test_reversed_arcs_form_a_clique():
    rng = random.Random(77)
    for _ in range(25):
        real = random_arc_realization(rng.randint(2, 15), rng)
        g = CircularArcGraph.from_realization(real)
        rev = sorted(real.reversed_set())
        for i, u in enumerate(rev):
            for v in rev[i + 1 :]:
                assert g.adjacent(u, v)


# -- oracle equivalence --------------------------------------------------


def _check_path(oracle: OracleGraph, path) -> None:
    for a, b in zip(path, path[1:]):
        assert oracle.adjacent(a, b), path


def _check_against_oracle(real: ArcRealization) -> None:
    g = CircularArcGraph.from_realization(real)
    oracle = OracleGraph.from_arc_positions(real.arcs)
    n = real.n
    for v in range(1, n + 1):
        hood = g.neighborhood(v)
        assert hood == oracle.neighborhood(v), v
        assert g.degree(v) == oracle.degree(v) == len(hood), v
    for u in range(1, n + 1):
        dists = oracle.dists_from(u)
        for v in range(1, n + 1):
            assert g.adjacent(u, v) == oracle.adjacent(u, v), (u, v)
            path = g.spath(u, v)
            if dists[v] is None:
                assert path is None, (u, v)
            else:
                assert path is not None, (u, v)
                assert len(path) - 1 == dists[v], (u, v, path)
                assert path[0] == u and path[-1] == v
                _check_path(oracle, path)


@settings(max_examples=60, deadline=None)
@given(seed=st.integers(0, 10**9), n=st.integers(1, 28))
def test_matches_oracle(seed, n):
    rng = random.Random(seed)
    _check_against_oracle(random_arc_realization(n, rng, require_reversed=False))


def test_matches_oracle_reversed_heavy():
    rng = random.Random(20260821)
    for _ in range(40):
        _check_against_oracle(random_arc_realization(rng.randint(2, 30), rng))


def test_degree_table_agrees_with_formula():
    rng = random.Random(9)
    for _ in range(10):
        real = random_arc_realization(rng.randint(1, 25), rng, require_reversed=False)
        g = CircularArcGraph.from_realization(real, degree_table=True)
        h = CircularArcGraph.from_realization(real)
        for v in range(1, real.n + 1):
            assert g.degree(v) == h.degree(v)


# -- serialization -------------------------------------------------------


def test_round_trip_bytes():
    g = fig2_graph()
    blob = g.to_bytes()
    h = CircularArcGraph.from_bytes(blob)
    assert h.to_bytes() == blob
    assert h.realization() == g.realization()
    for v in range(1, 8):
        assert h.neighborhood(v) == g.neighborhood(v)


def test_round_trip_with_degree_table():
    g = fig2_graph(degree_table=True)
    blob = g.to_bytes()
    h = CircularArcGraph.from_bytes(blob)
    assert h.to_bytes() == blob
    assert h._degrees == g._degrees


def test_reject_corrupt_bytes():
    blob = bytearray(fig2_graph().to_bytes())
    with pytest.raises(GraphInputError):
        CircularArcGraph.from_bytes(bytes(blob[:-3]))
    wrong = bytearray(blob)
    wrong[:4] = b"SXAG"
    with pytest.raises(GraphInputError):
        CircularArcGraph.from_bytes(bytes(wrong))
    flipped = bytearray(blob)
    flipped[-1] ^= 0x04
    with pytest.raises(GraphInputError):
        CircularArcGraph.from_bytes(bytes(flipped))


def test_round_trip_random():
    rng = random.Random(31)
    for _ in range(15):
        real = random_arc_realization(rng.randint(1, 20), rng, require_reversed=False)
        g = CircularArcGraph.from_realization(real)
        h = CircularArcGraph.from_bytes(g.to_bytes())
        assert h.realization() == real


# -- space ---------------------------------------------------------------


def test_space_report_keys_and_budget():
    n = 20000
    rng = random.Random(13)
    real = random_arc_realization(n, rng)
    g = CircularArcGraph.from_realization(real)
    rep = g.space_report()
    assert set(rep) == {
        "S",
        "S_directory",
        "left_families",
        "left_families_directory",
        "right_families",
        "right_families_directory",
        "grid_normal",
        "grid_reversed",
        "r_normal",
        "r_reversed",
        "rmax_normal_directory",
        "rmax_reversed_directory",
    }
    width = max(1, (2 * n - 1).bit_length())
    assert rep["r_normal"] == g.normal_count * width
    assert rep["r_reversed"] == (n - g.normal_count) * width
    budget = 3.5 * n * n.bit_length()
    assert g.space_bits() <= budget
    with_table = CircularArcGraph.from_realization(
        ArcRealization(FIG2_ARCS), degree_table=True
    )
    assert "degree_table" in with_table.space_report()
