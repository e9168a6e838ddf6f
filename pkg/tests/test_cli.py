"""End-to-end CLI behavior: subcommands, exit codes, determinism, DOT export."""

from __future__ import annotations

import json
import random

import pytest

from conftest import FIG2, load_fig2

from ontoarch import resolve
from ontoarch.cli import export_graph, run


def invoke(capsys, *argv):
    rc = run(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_validate_fig2_directory(capsys):
    rc, out, err = invoke(capsys, "validate", str(FIG2))
    assert rc == 0
    assert out == "0 errors, 0 warnings\n"
    assert err == ""


def test_validate_json_output_is_schema_v1(capsys):
    rc, out, _ = invoke(capsys, "validate", str(FIG2), "--format", "json")
    assert rc == 0
    payload = json.loads(out)
    assert payload["report_version"] == 1
    assert set(payload) == {"diagnostics", "report_version", "summary"}
    assert payload["summary"]["modules_per_level"] == {"CO": 2, "FO": 1, "LDO": 1, "TDO": 1}


def test_validate_is_byte_deterministic(capsys):
    rc1, out1, _ = invoke(capsys, "validate", str(FIG2), "--format", "json")
    rc2, out2, _ = invoke(capsys, "validate", str(FIG2), "--format", "json")
    assert (rc1, out1) == (rc2, out2)


def test_validate_ignores_input_path_order(capsys):
    paths = [str(p) for p in sorted(FIG2.glob("*.onto"))]
    _, expected, _ = invoke(capsys, "validate", "--format", "json", *paths)
    rng = random.Random(3)
    for _ in range(3):
        shuffled = paths[:]
        rng.shuffle(shuffled)
        _, out, _ = invoke(capsys, "validate", "--format", "json", *shuffled)
        assert out == expected


def test_validate_reports_errors_with_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.onto"
    bad.write_text("ontology MyFO at FO { }", encoding="utf-8")
    rc, out, _ = invoke(capsys, "validate", str(bad))
    assert rc == 1
    assert "E201" in out


def test_validate_strict_promotes_warnings(tmp_path, capsys):
    warny = tmp_path / "w.onto"
    warny.write_text("ontology A at CO { term X enriches ThingFO.Thing }", encoding="utf-8")
    rc, out, _ = invoke(capsys, "validate", str(warny))
    assert rc == 0
    assert "W202" in out
    rc_strict, _, _ = invoke(capsys, "validate", "--strict", str(warny))
    assert rc_strict == 1


def test_validate_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    rc, out, _ = invoke(capsys, "validate", str(FIG2), "--format", "json", "--out", str(target))
    assert rc == 0
    assert out == ""
    assert json.loads(target.read_text(encoding="utf-8"))["report_version"] == 1


def test_validate_recurses_nested_directories(tmp_path, capsys):
    nested = tmp_path / "a" / "b"
    nested.mkdir(parents=True)
    (nested / "mod.onto").write_text(
        'ontology A at CO { term X enriches ThingFO.Thing { description "d" } }', encoding="utf-8"
    )
    (tmp_path / "ignored.txt").write_text("not ontology data", encoding="utf-8")
    rc, out, _ = invoke(capsys, "validate", str(tmp_path))
    assert rc == 0
    assert out == "0 errors, 0 warnings\n"


def test_validate_unreadable_path_is_exit_2(capsys):
    rc, _, err = invoke(capsys, "validate", "no/such/path.onto")
    assert rc == 2
    assert "cannot read" in err


def test_missing_subcommand_is_exit_2(capsys):
    assert invoke(capsys)[0] == 2


def test_unknown_flag_is_exit_2(capsys):
    rc, _, err = invoke(capsys, "validate", str(FIG2), "--frobnicate")
    assert rc == 2
    assert "usage" in err


def test_metamodel_counts(capsys):
    rc, out, _ = invoke(capsys, "metamodel", "--counts")
    assert rc == 0
    assert out == "terms=19 properties=10 relationships=12\n"


def test_metamodel_listing(capsys):
    rc, out, _ = invoke(capsys, "metamodel")
    assert rc == 0
    assert "TimeAssertion (child of Assertion)" in out
    assert "ThingCategory.descriptive_statement" in out
    assert "interactsWithOther: Power -> Thing" in out


def test_explain_thing(capsys):
    rc, out, _ = invoke(capsys, "explain", "Thing")
    assert rc == 0
    assert "perceivable or conceivable object, or its individuals" in out


def test_explain_thing_category(capsys):
    rc, out, _ = invoke(capsys, "explain", "ThingCategory")
    assert rc == 0
    assert "does not result in instances" in out


def test_explain_e313(capsys):
    rc, out, _ = invoke(capsys, "explain", "E313")
    assert rc == 0
    assert "The Power of a Thing only interacts with other Things." in out


def test_explain_relationship_and_rule(capsys):
    rc, out, _ = invoke(capsys, "explain", "relatesWith")
    assert rc == 0
    assert out.count("->") >= 3
    rc, out, _ = invoke(capsys, "explain", "R1")
    assert rc == 0
    assert "immediately higher level" in out
    rc, out, _ = invoke(capsys, "explain", "A1")
    assert rc == 0
    assert "enables" in out


def test_explain_unknown_topic_is_exit_2(capsys):
    rc, _, err = invoke(capsys, "explain", "Zorp")
    assert rc == 2
    assert "unknown topic" in err


def test_graph_empty_suite_contains_only_builtin_cluster():
    suite, diags = resolve([], [])
    assert not diags
    dot = export_graph(suite)
    assert dot.count("subgraph") == 1
    assert '"ThingFO" [shape=box];' in dot
    assert '"ThingFO.Thing"' in dot


def test_graph_fig2_clusters_and_node_count(fig2_suite):
    dot = export_graph(fig2_suite)
    for cluster in ("cluster_FO", "cluster_CO", "cluster_TDO", "cluster_LDO", "cluster_IO"):
        assert cluster in dot
    node_lines = [l for l in dot.splitlines() if "[shape=" in l and not l.lstrip().startswith("node ")]
    modules = 1 + len(fig2_suite.modules)
    terms = 19 + sum(len(m.terms) for m in fig2_suite.modules.values())
    blocks = len(fig2_suite.instance_files)
    assert len(node_lines) == modules + terms + blocks
    assert '"SituationCO" -> "ProcessCO" [style=dashed];' in dot
    assert '"ProcessCO.Process" -> "ThingFO.Thing";' in dot


def test_graph_cli_writes_dot(tmp_path, capsys):
    out_file = tmp_path / "suite.dot"
    rc, out, _ = invoke(capsys, "graph", str(FIG2), "--out", str(out_file))
    assert rc == 0
    assert out == ""
    text = out_file.read_text(encoding="utf-8")
    assert text.startswith("digraph ontoarch {")
    assert text.endswith("}\n")


def test_graph_cli_fails_on_unresolved_suite(tmp_path, capsys):
    bad = tmp_path / "bad.onto"
    bad.write_text("ontology A at CO { term X enriches ThingFO.Nope }", encoding="utf-8")
    rc, out, err = invoke(capsys, "graph", str(bad))
    assert rc == 1
    assert out == ""
    assert "E101" in err


def test_graph_is_deterministic(fig2_suite):
    assert export_graph(fig2_suite) == export_graph(fig2_suite)


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_validate_single_file_inputs(fmt, capsys, tmp_path):
    files = load_fig2()
    for name, text in files:
        (tmp_path / name).write_text(text, encoding="utf-8")
    rc, out, _ = invoke(
        capsys, "validate", "--format", fmt, *(str(tmp_path / name) for name, _ in files)
    )
    assert rc == 0
    assert "0" in out or json.loads(out)["summary"]["errors"] == 0
