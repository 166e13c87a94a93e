import json

import pytest

from treecursor import bench
from treecursor.bench import BenchReport, Method, run_bench, verify_lists
from treecursor.cli import axis_ids, main
from treecursor.document import parse
from treecursor.errors import ConsistencyError
from treecursor.tree import build_uniform, parse_notation, size
from treegen import rec_paths


@pytest.mark.parametrize("method", list(Method))
def test_depth_zero(method):
    r = run_bench(0, 4, method)
    assert r.node_count == 1
    assert r.method == method.value


@pytest.mark.parametrize("method", list(Method))
def test_depth_eight_count(method):
    r = run_bench(8, 4, method.value)
    assert r.node_count == 87_381 == (4**9 - 1) // 3 == size(build_uniform(8, 4))
    assert r.wall_time >= 0 and r.cell_ops >= 0


def test_branch_one_path():
    assert run_bench(50, 1, Method.LIST_CURSOR).node_count == 51


def test_consistency_error(monkeypatch):
    monkeypatch.setitem(bench._RUNNERS, Method.LIST_DIRECT, lambda t: 3)
    with pytest.raises(ConsistencyError):
        run_bench(2, 4, Method.LIST_DIRECT)


def test_verify_lists():
    verify_lists(5, 3)


def test_search_cursor_cells_grow_linearly():
    reports = [run_bench(d, 4, Method.SEARCH_CURSOR) for d in range(4, 9)]
    ratios = [r.cell_ops / r.node_count for r in reports]
    for a, b in zip(ratios, ratios[1:]):
        assert abs(b / a - 1) <= 0.10


def test_report_fields():
    r = run_bench(1, 2, Method.SEARCH_DIRECT)
    assert set(r.to_dict()) == {"method", "depth", "branch", "node_count", "wall_time", "cell_ops"}
    assert isinstance(r, BenchReport)


def test_cli_bench_json(capsys):
    assert main(["bench", "--depth", "8", "--branch", "4", "--method", "list_cursor", "--json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 1
    report = json.loads(lines[0])
    assert report["method"] == "list_cursor" and report["node_count"] == 87_381


def test_cli_bench_all_methods_with_verify(capsys):
    assert main(["bench", "--depth", "3", "--verify"]) == 0
    out = capsys.readouterr().out
    for m in Method:
        assert m.value in out
    assert "agree" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["bench"],
        ["bench", "--depth", "2", "--method", "nope"],
        ["bench", "--depth", "-1"],
        ["bench", "--depth", "2", "--branch", "0"],
        ["frobnicate"],
        ["query", "--axis", "child", "--id", "0", "x"],
    ],
)
def test_cli_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2


def test_cli_unfont(tmp_path, capsys):
    f = tmp_path / "in.html"
    f.write_text('<p><font size="2"><b>x</b></font></p>')
    assert main(["unfont", str(f)]) == 0
    assert capsys.readouterr().out == "<p><b>x</b></p>\n"


def test_cli_unfont_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("<p><font>a</font>b</p>"))
    assert main(["unfont"]) == 0
    assert capsys.readouterr().out == "<p>ab</p>\n"


def test_cli_parse_error_exit_1(tmp_path, capsys):
    f = tmp_path / "bad.html"
    f.write_text("<p><b>x</p>")
    assert main(["unfont", str(f)]) == 1
    assert "mismatched" in capsys.readouterr().err
    assert main(["roundtrip", str(tmp_path / "missing.html")]) == 1


def test_cli_roundtrip(tmp_path, capsys):
    f = tmp_path / "doc.html"
    f.write_text('<div a="1&amp;">x<br></br><i>y</i></div>\n')
    assert main(["roundtrip", str(f)]) == 0
    assert capsys.readouterr().out.strip() == "equal"


def brute_axis(tree, axis, target):
    """Axis members by comparing root paths of every node pair."""
    paths = rec_paths(tree)
    p = paths[target]
    out = []
    for i, q in enumerate(paths):
        if axis == "ancestor":
            hit = len(q) < len(p) and p[: len(q)] == q
        elif axis == "descendant-or-self":
            hit = q[: len(p)] == p
        elif not p or len(q) != len(p) or q[:-1] != p[:-1]:
            hit = False
        elif axis == "following-sibling":
            hit = q[-1] > p[-1]
        else:
            hit = q[-1] < p[-1]
        if hit:
            out.append(i)
    return out


@pytest.mark.parametrize("axis", ["following-sibling", "preceding-sibling", "ancestor", "descendant-or-self"])
def test_axis_ids_against_brute_force(axis):
    tree = parse_notation("a(b(c,d(e,f),g),h,i(j))")
    for target in range(size(tree)):
        assert axis_ids(tree, axis, target) == brute_axis(tree, axis, target)


def test_cli_query(tmp_path, capsys):
    f = tmp_path / "in.html"
    f.write_text("<r><a/><b>t</b><c/></r>")
    assert main(["query", "--axis", "following-sibling", "--id", "1", str(f)]) == 0
    assert capsys.readouterr().out.split() == ["2", "4"]
    g = tmp_path / "t.txt"
    g.write_text("a(x,b,y)")
    assert main(["query", "--axis", "preceding-sibling", "--id", "2", str(g)]) == 0
    assert capsys.readouterr().out.split() == ["1"]
    assert main(["query", "--axis", "ancestor", "--id", "99", str(g)]) == 1


def test_query_on_document_matches_brute_force():
    tree = parse("<r><a><x/>t</a><b/><c><y/></c></r>")
    for target in range(size(tree)):
        assert axis_ids(tree, "ancestor", target) == brute_axis(tree, "ancestor", target)
