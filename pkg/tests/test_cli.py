"""End-to-end CLI coverage: build, query, algo, verify, bench, and the
exit-code contract."""

import json

import pytest

from conftest import FIG1_INTERVALS, FIG2_ARCS
from sigraph import algorithms
from sigraph.circular import ArcRealization, CircularArcGraph
from sigraph.cli import load_structure, main
from sigraph.graph import SuccinctIntervalGraph
from sigraph.intervals import IntervalRealization


def write_interval_text(path, pairs):
    lines = [f"interval {len(pairs)}"]
    lines += [f"{l} {r}" for l, r in pairs]
    path.write_text("\n".join(lines) + "\n")


def write_circular_text(path, pairs):
    lines = [f"circular {len(pairs)}"]
    lines += [f"{a} {b}" for a, b in pairs]
    path.write_text("\n".join(lines) + "\n")


@pytest.fixture
def fig1_file(tmp_path):
    src = tmp_path / "fig1.txt"
    write_interval_text(src, FIG1_INTERVALS)
    out = tmp_path / "fig1.sig"
    assert main(["build", "--input", str(src), "--output", str(out)]) == 0
    return out


@pytest.fixture
def fig2_file(tmp_path):
    src = tmp_path / "fig2.txt"
    write_circular_text(src, FIG2_ARCS)
    out = tmp_path / "fig2.sig"
    assert (
        main(["build", "--type", "circular", "--input", str(src), "--output", str(out)])
        == 0
    )
    return out


# -- build ---------------------------------------------------------------


def test_build_writes_loadable_structure(fig1_file):
    g = load_structure(fig1_file)
    assert isinstance(g, SuccinctIntervalGraph)
    assert g.n == 9
    lib = SuccinctIntervalGraph.from_realization(IntervalRealization(FIG1_INTERVALS))
    assert fig1_file.read_bytes() == lib.to_bytes()


def test_build_normalizes_raw_coordinates(tmp_path, capsys):
    src = tmp_path / "raw.txt"
    src.write_text("interval 2\n0.5 2.0\n1.0 3.0\n")
    out = tmp_path / "raw.sig"
    assert main(["build", "--input", str(src), "--output", str(out), "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["n"] == 2
    g = load_structure(out)
    assert g.realization().intervals == ((1, 3), (2, 4))


def test_build_each_type(tmp_path):
    src = tmp_path / "proper.txt"
    write_interval_text(src, [(1, 3), (2, 5), (4, 6)])
    for kind in ("interval", "proper", "kproper", "kimproper"):
        out = tmp_path / f"{kind}.sig"
        assert (
            main(["build", "--type", kind, "--input", str(src), "--output", str(out)])
            == 0
        )
        assert load_structure(out).n == 3


def test_build_proper_rejects_nested_input(tmp_path, capsys):
    src = tmp_path / "nested.txt"
    write_interval_text(src, [(1, 4), (2, 3)])
    out = tmp_path / "nested.sig"
    code = main(["build", "--type", "proper", "--input", str(src), "--output", str(out)])
    assert code == 2
    assert "not proper" in capsys.readouterr().err


def test_build_circular_anchor_override(tmp_path):
    src = tmp_path / "arcs.txt"
    write_circular_text(src, [(10, 30), (25, 70), (50, 5)])
    out = tmp_path / "arcs.sig"
    assert (
        main(
            ["build", "--type", "circular", "--input", str(src),
             "--output", str(out), "--anchor", "2"]
        )
        == 0
    )
    g = load_structure(out)
    assert g.arc_of(1)[0] == 1


def test_build_missing_file_is_input_error(tmp_path):
    out = tmp_path / "x.sig"
    assert main(["build", "--input", str(tmp_path / "nope.txt"), "--output", str(out)]) == 2


def test_build_type_header_mismatch(tmp_path):
    src = tmp_path / "arcs.txt"
    write_circular_text(src, [(1, 2)])
    assert main(["build", "--input", str(src), "--output", str(tmp_path / "x.sig")]) == 2


# -- query ---------------------------------------------------------------


def test_query_matches_library(fig1_file, capsys):
    g = SuccinctIntervalGraph.from_realization(IntervalRealization(FIG1_INTERVALS))
    assert main(["query", str(fig1_file), "degree", "6"]) == 0
    assert capsys.readouterr().out.strip() == str(g.degree(6)) == "4"
    assert main(["query", str(fig1_file), "adjacent", "4", "7"]) == 0
    assert capsys.readouterr().out.strip() == "false"
    assert main(["query", str(fig1_file), "neighborhood", "6"]) == 0
    assert capsys.readouterr().out.strip() == "5 7 8 9"
    assert main(["query", str(fig1_file), "spath", "1", "9"]) == 0
    assert capsys.readouterr().out.strip() == "1 3 5 6 9"


def test_query_json(fig1_file, capsys):
    assert main(["query", str(fig1_file), "spath", "1", "9", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"path": [1, 3, 5, 6, 9]}
    assert main(["query", str(fig1_file), "adjacent", "1", "2", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"adjacent": True}


def test_query_circular(fig2_file, capsys):
    assert main(["query", str(fig2_file), "degree", "4"]) == 0
    assert capsys.readouterr().out.strip() == "6"
    assert main(["query", str(fig2_file), "neighborhood", "6"]) == 0
    assert capsys.readouterr().out.strip() == "4 5"
    assert main(["query", str(fig2_file), "spath", "1", "6"]) == 0
    assert len(capsys.readouterr().out.split()) == 3


def test_query_disconnected_prints_none(tmp_path, capsys):
    src = tmp_path / "d.txt"
    write_interval_text(src, [(1, 2), (3, 4)])
    out = tmp_path / "d.sig"
    assert main(["build", "--input", str(src), "--output", str(out)]) == 0
    capsys.readouterr()
    assert main(["query", str(out), "spath", "1", "2"]) == 0
    assert capsys.readouterr().out.strip() == "none"


def test_query_out_of_range_is_exit_3(fig1_file, capsys):
    assert main(["query", str(fig1_file), "degree", "10"]) == 3
    assert "error" in capsys.readouterr().err
    assert main(["query", str(fig1_file), "spath", "0", "4"]) == 3
    capsys.readouterr()


def test_query_corrupt_file_is_exit_2(tmp_path, fig1_file, capsys):
    bad = tmp_path / "bad.sig"
    bad.write_bytes(b"QQQQ" + fig1_file.read_bytes()[4:])
    assert main(["query", str(bad), "degree", "1"]) == 2
    truncated = tmp_path / "short.sig"
    truncated.write_bytes(fig1_file.read_bytes()[:-2])
    assert main(["query", str(truncated), "degree", "1"]) == 2
    capsys.readouterr()


def test_query_wrong_arity_is_exit_2(fig1_file, capsys):
    assert main(["query", str(fig1_file), "degree", "1", "2"]) == 2
    assert main(["query", str(fig1_file), "adjacent", "1"]) == 2
    capsys.readouterr()


# -- algo ----------------------------------------------------------------


def test_algo_outputs(fig1_file, capsys):
    assert main(["algo", str(fig1_file), "mis"]) == 0
    assert capsys.readouterr().out.strip() == "2 5 9"
    assert main(["algo", str(fig1_file), "mvc"]) == 0
    assert capsys.readouterr().out.strip() == "1 3 4 6 7 8"
    assert main(["algo", str(fig1_file), "clique"]) == 0
    assert capsys.readouterr().out.strip().splitlines() == ["size 4", "1 2 3 4"]
    assert main(["algo", str(fig1_file), "coloring"]) == 0
    first, second = capsys.readouterr().out.strip().splitlines()
    assert first == "colors 4"
    g = SuccinctIntervalGraph.from_realization(IntervalRealization(FIG1_INTERVALS))
    assert second == " ".join(map(str, algorithms.greedy_coloring(g).colors))
    assert main(["algo", str(fig1_file), "dfs"]) == 0
    assert capsys.readouterr().out.strip() == "1 2 3 4 5 6 7 8 9"


def test_algo_json(fig1_file, capsys):
    assert main(["algo", str(fig1_file), "clique", "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info == {"size": 4, "cut": 4, "members": [1, 2, 3, 4]}


def test_algo_works_on_depth_annotated_structures(tmp_path, capsys):
    src = tmp_path / "f.txt"
    write_interval_text(src, FIG1_INTERVALS)
    for kind in ("kproper", "kimproper"):
        out = tmp_path / f"{kind}.sig"
        assert (
            main(["build", "--type", kind, "--input", str(src), "--output", str(out)])
            == 0
        )
        capsys.readouterr()
        assert main(["algo", str(out), "mis"]) == 0
        assert capsys.readouterr().out.strip() == "2 5 9"


def test_algo_rejects_circular(fig2_file, capsys):
    assert main(["algo", str(fig2_file), "mis"]) == 2
    assert "linear interval" in capsys.readouterr().err


# -- verify --------------------------------------------------------------


def test_verify_input_pass(tmp_path, capsys):
    src = tmp_path / "f.txt"
    write_interval_text(src, FIG1_INTERVALS)
    assert main(["verify", "--input", str(src)]) == 0
    assert capsys.readouterr().out.startswith("PASS")


def test_verify_random_all_types(capsys):
    for kind in ("interval", "proper", "kproper", "kimproper", "circular"):
        code = main(
            ["verify", "--type", kind, "--random", "14", "--trials", "2", "--seed", "7"]
        )
        out = capsys.readouterr().out
        assert code == 0, (kind, out)
        assert out.startswith("PASS")


def test_verify_json(capsys):
    assert main(["verify", "--random", "8", "--trials", "1", "--seed", "3", "--json"]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["ok"] is True


def test_verify_needs_exactly_one_source(capsys):
    assert main(["verify"]) == 2
    assert main(["verify", "--input", "x", "--random", "5"]) == 2
    capsys.readouterr()


def test_verify_mismatch_exits_4(tmp_path, capsys, monkeypatch):
    src = tmp_path / "f.txt"
    write_interval_text(src, FIG1_INTERVALS)
    import sigraph.cli as cli_mod

    monkeypatch.setattr(
        cli_mod, "verify_interval", lambda real, **kw: ["degree(3): got 9, expected 4"]
    )
    assert main(["verify", "--input", str(src)]) == 4
    out = capsys.readouterr().out
    assert out.startswith("FAIL")
    assert "degree(3)" in out


def test_verify_proper_type_rejects_improper_input(tmp_path, capsys):
    src = tmp_path / "nested.txt"
    write_interval_text(src, [(1, 4), (2, 3)])
    assert main(["verify", "--type", "proper", "--input", str(src)]) == 2
    capsys.readouterr()


# -- bench ---------------------------------------------------------------


def test_bench_json_fields(capsys):
    assert main(["bench", "--n", "300", "--queries", "20", "--seed", "5", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["kind"] == "interval"
    assert rep["n"] == 300
    assert rep["total_bits"] == sum(rep["components"].values())
    assert rep["total_bits"] > 0
    assert rep["baselines"]["edges"] > 0
    assert set(rep["queries"]) == {"degree", "adjacent", "neighborhood", "spath"}
    assert rep["build_seconds"] >= 0


def test_bench_text_report(capsys):
    assert main(["bench", "--type", "proper", "--n", "200", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert "proper structure, n=200" in out
    assert "total bits" in out
    assert "baselines" in out


def test_bench_circular(capsys):
    assert main(["bench", "--type", "circular", "--n", "150", "--queries", "10",
                 "--seed", "2", "--json"]) == 0
    rep = json.loads(capsys.readouterr().out)
    assert rep["kind"] == "circular"
    assert rep["total_bits"] == sum(rep["components"].values())


# -- parser-level behavior ----------------------------------------------


def test_unknown_command_is_exit_2(capsys):
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_env_seed_is_honored(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("SIG_SEED", "99")
    assert main(["bench", "--n", "50", "--queries", "5", "--json"]) == 0
    rep_a = json.loads(capsys.readouterr().out)
    monkeypatch.setenv("SIG_SEED", "100")
    assert main(["bench", "--n", "50", "--queries", "5", "--json"]) == 0
    rep_b = json.loads(capsys.readouterr().out)
    assert rep_a["baselines"]["edges"] != rep_b["baselines"]["edges"]
