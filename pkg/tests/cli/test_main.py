import json
import sys

import pytest

from convex_steiner.cli import main as cli
from convex_steiner.cli.formats import parse_document
from convex_steiner.cli.main import relabel_reduction, run
from convex_steiner.config import FIXTURES
from convex_steiner.reductions.vertex_cover import vc_to_caterpillar_stree
from tests.strategies import TRIANGLE

FIG1 = str(FIXTURES / "fig1.cbg")
FIG2 = str(FIXTURES / "fig2.cbg")
DP_TRACE = str(FIXTURES / "dp_trace.cbg")
TRIANGLE_FILE = str(FIXTURES / "triangle.g")


@pytest.fixture
def invoke(capsys):
    def _invoke(*argv):
        status = run(list(argv))
        return status, json.loads(capsys.readouterr().out)

    return _invoke


@pytest.fixture
def write(tmp_path):
    def _write(text, name="instance.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return _write


# Tests for solve
def test_solve_all_x(invoke):
    status, report = invoke("solve", "--graph", FIG1, "--terminals", "all-x")
    assert status == 0
    assert report["command"] == [
        "convex-steiner",
        "solve",
        "--graph",
        FIG1,
        "--terminals",
        "all-x",
    ]
    assert report["result"]["case"] == "all_x"
    assert report["result"]["algorithm"] == "all_x"
    assert report["result"]["steiner_set"] == ["y2", "y3"]
    assert report["result"]["size"] == 2
    assert report["timing"]["seconds"] >= 0
    assert "table" not in report


def test_solve_with_oracle(invoke):
    status, report = invoke("solve", "--graph", FIG1, "--oracle")
    assert status == 0
    assert report["oracle"] == {
        "optimum": 2,
        "witness": ["y1", "y3"],
        "explored": 7,
        "matches_solver": True,
    }


def test_solve_mixed_terminals_from_flags(invoke):
    status, report = invoke("solve", "--graph", FIG1, "--x", "1", "--y", "4")
    assert status == 0
    assert report["result"]["case"] == "mixed"
    assert report["result"]["steiner_set"] == ["x3", "y2"]


def test_solve_subset_y_tsv_table(invoke):
    status, report = invoke("solve", "--graph", DP_TRACE, "--format", "tsv")
    assert status == 0
    assert report["result"]["case"] == "subset_y"
    assert report["table"].startswith("i\tj\ty\tf\tF\tcase\tbranch\tback\n")


def test_solve_subset_y_json_table(invoke):
    _, report = invoke("solve", "--graph", DP_TRACE, "--format", "json")
    assert [row["y"] for row in report["table"]] == [1, 6, 2, 3, 4, 5]


def test_solve_digest_is_stable(invoke):
    _, first = invoke("solve", "--graph", FIG1)
    _, second = invoke("solve", "--graph", FIG1)
    assert first["digest"] == second["digest"]
    assert len(first["digest"]) == 16


# Tests for oracle
def test_oracle_vertex_cover(invoke):
    status, report = invoke("oracle", "--graph", TRIANGLE_FILE, "--problem", "cover")
    assert status == 0
    assert report["problem"] == "cover"
    assert report["oracle"]["optimum"] == 2


def test_oracle_steiner_rejects_general_graph(invoke):
    status, report = invoke("oracle", "--graph", TRIANGLE_FILE)
    assert status == 3
    assert report["error"]["kind"] == "infeasible"


@pytest.mark.parametrize(
    "argv",
    [
        ("--graph", FIG1, "--terminals", "all-x"),
        ("--graph", TRIANGLE_FILE, "--problem", "cover"),
        ("--graph", TRIANGLE_FILE, "--problem", "dominating"),
    ],
)
def test_oracle_honours_zero_max_vertices(invoke, argv):
    status, report = invoke("oracle", *argv, "--max-vertices", "0")
    assert status == 4
    assert report["error"]["kind"] == "oracle_scale"


# Tests for gen
def test_gen_is_deterministic(invoke):
    argv = ("gen", "--m", "6", "--n", "4", "--seed", "3", "--case", "subset_y")
    _, first = invoke(*argv)
    _, second = invoke(*argv)
    assert first["instance"] == second["instance"]
    assert first["digest"] == second["digest"]
    assert first["instance"].startswith("cbg 6 4\n")


def test_gen_writes_output(invoke, tmp_path):
    target = tmp_path / "generated.cbg"
    status, report = invoke(
        "gen", "--seed", "5", "--case", "subset_x", "--output", str(target)
    )
    assert status == 0
    assert target.read_text(encoding="utf-8") == report["instance"]
    assert parse_document(report["instance"]).x_terminals


@pytest.mark.parametrize(("kind", "prefix"), [("ivl", "ivl 4\n"), ("g", "g 4 ")])
def test_gen_other_kinds(invoke, kind, prefix):
    status, report = invoke("gen", "--kind", kind, "--n", "4")
    assert status == 0
    assert report["instance"].startswith(prefix)


# Tests for reduce
def test_reduce_vc_with_solve(invoke, tmp_path):
    target = tmp_path / "reduced.g"
    status, report = invoke(
        "reduce", "vc", "--graph", TRIANGLE_FILE, "--solve", "--output", str(target)
    )
    assert status == 0
    assert report["budget"] == 2
    assert report["caterpillar"] is True
    assert report["terminals"] == [4, 5, 7, 9, 11, 13, 15]
    assert report["labels"]["1"] == "x1"
    assert report["oracle"] == {"min_cover": 2, "min_steiner": 2, "equivalent": True}
    status, validation = invoke("validate", "--graph", str(target))
    assert status == 0
    assert validation["caterpillar"] == {"k": 1, "ok": True}


def test_reduce_vc_rejects_convex_input(invoke):
    status, report = invoke("reduce", "vc", "--graph", FIG1)
    assert status == 3
    assert "expects a g instance" in report["error"]["message"]


def test_reduce_interval(invoke, write):
    path = write("ivl 3\nv 1 1 2\nv 2 2 4\nv 3 4 6\n")
    status, report = invoke(
        "reduce", "interval", "--graph", path, "--terminals", "1", "3", "--oracle"
    )
    assert status == 0
    assert report["result"]["steiner_set"] == [2]
    assert report["oracle"]["matches_solver"] is True


def test_reduce_dominate(invoke):
    status, report = invoke("reduce", "dominate", "--graph", FIG1, "--oracle")
    assert status == 0
    assert report["result"]["size"] == len(report["result"]["dominating_set"])
    assert report["oracle"]["optimum"] <= report["result"]["size"]


# Tests for validate
def test_validate_convex_ok(invoke):
    status, report = invoke("validate", "--graph", FIG2)
    assert status == 0
    assert report["convex"] == {"ok": True, "violations": [], "connected": True}
    assert report["ok"] is True


@pytest.mark.parametrize(
    "text",
    ["cbg 3 2\ny 1 1 1\ny 2 3 3\n", "ivl 2\nv 1 1 2\nv 2 4 5\n"],
)
def test_validate_disconnected_fails(invoke, write, text):
    status, report = invoke("validate", "--graph", write(text))
    assert status == 1
    assert report["ok"] is False


# Tests for paper-traces
def test_paper_traces_without_timing(invoke):
    status, report = invoke("paper-traces")
    assert status == 0
    assert report["result"]["ok"] is True
    assert "timing" not in report


# Tests for exit statuses
def test_missing_file_is_read_error(invoke, tmp_path):
    status, report = invoke("solve", "--graph", str(tmp_path / "missing.cbg"))
    assert status == 2
    assert report["error"]["kind"] == "read"


def test_parse_error_reports_location(invoke, write):
    status, report = invoke("solve", "--graph", write("cbg 3 1\ny 1 3 2\n"))
    assert status == 2
    assert report["error"]["kind"] == "parse"
    assert (report["error"]["line"], report["error"]["column"]) == (2, 5)


@pytest.mark.parametrize(
    "argv",
    [
        ("--x", "1", "3"),
        ("--x", "9"),
    ],
)
def test_infeasible_inputs(invoke, write, argv):
    path = write("cbg 3 2\ny 1 1 1\ny 2 3 3\n")
    status, report = invoke("solve", "--graph", path, *argv)
    assert status == 3
    assert report["error"]["kind"] == "infeasible"


def test_oracle_scale_guard(invoke):
    status, report = invoke(
        "solve", "--graph", FIG1, "--oracle", "--max-candidates", "1"
    )
    assert status == 4
    assert report["error"]["kind"] == "oracle_scale"


def test_internal_assertion(invoke, monkeypatch):
    def _broken(graph, terminals):
        error_msg = "all_x produced an invalid Steiner set"
        raise AssertionError(error_msg)

    monkeypatch.setattr(cli, "solve_general", _broken)
    status, report = invoke("solve", "--graph", FIG1)
    assert status == 5
    assert report["error"] == {
        "kind": "internal",
        "message": "all_x produced an invalid Steiner set",
    }


# Tests for main
def test_main_exits_with_status(monkeypatch, capsys):
    monkeypatch.setattr(sys, "argv", ["convex-steiner", "validate", "--graph", FIG2])
    with pytest.raises(SystemExit) as excinfo:
        cli.main()
    assert excinfo.value.code == 0
    assert json.loads(capsys.readouterr().out)["ok"] is True


# Tests for relabel_reduction
def test_relabel_reduction_numbers_v1_first():
    reduced, structure, ids = relabel_reduction(vc_to_caterpillar_stree(TRIANGLE, 2))
    assert reduced.vertex_count == 15
    assert len(reduced.edges) == 30
    assert list(ids)[:5] == ["x1", "x2", "x3", "z1.1", "y1.1"]
    assert structure.backbone == (4, 6, 8, 10, 12, 14)
    assert structure.pendants[4] == (5,)
