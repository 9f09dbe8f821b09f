import json

import pytest

from covercones.cli import main
from covercones.textio import format_inequality, parse_input, read_labels
from covercones import InputError, make_halfspace


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write


def run_json(capsys, argv):
    code = main(argv + ["--json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


# --- parsing ---------------------------------------------------------------

def test_parse_bespoke_graph_with_labels():
    doc = parse_input("graph { a-b b-c c-d d-a }")
    assert doc.kind == "graph" and doc.labels == ("a", "b", "c", "d")
    assert doc.graph.edges == ((1, 2), (1, 4), (2, 3), (3, 4))


def test_parse_numeric_vertices_are_indices():
    doc = parse_input("graph { 2-4 1-2 }")
    assert doc.graph.n == 4
    assert doc.graph.edges == ((1, 2), (2, 4))


def test_parse_clutter_and_strictness():
    doc = parse_input("clutter { {a,b,d} {b,c,e} }")
    # names are numbered by first appearance: a, b, d, c, e
    assert doc.labels == ("a", "b", "d", "c", "e")
    assert doc.clutter.edges == ((1, 2, 3), (2, 4, 5))
    with pytest.raises(InputError):
        parse_input("clutter { {a} {a,b} }")
    doc = parse_input("clutter { {a} {a,b} }", strict=False)
    assert doc.clutter.edges == ((1,),)


def test_parse_errors_carry_positions():
    with pytest.raises(InputError) as err:
        parse_input("graph { a-a }")
    assert "line 1" in str(err.value) and "column 9" in str(err.value)
    with pytest.raises(InputError) as err:
        parse_input("graph { a-b\nb- }")
    assert "line 2" in str(err.value)


def test_parse_matrix_and_ideal():
    doc = parse_input("matrix { 1 0 ; 1 1 ; 0 1 }")
    assert doc.rows == ((1, 0), (1, 1), (0, 1))
    doc = parse_input("ideal { [1 1 0] [0 1 1] }")
    assert doc.rows == ((1, 1, 0), (0, 1, 1))


def test_parse_plain_vector_format():
    doc = parse_input("# covers\n1 0 1\n0 1 0\n", expected_kind="ideal")
    assert doc.rows == ((1, 0, 1), (0, 1, 0))
    doc = parse_input("1 2\n2 3\n", expected_kind="graph")
    assert doc.graph.edges == ((1, 2), (2, 3))


def test_labels_file_rejects_duplicates():
    with pytest.raises(InputError):
        read_labels("a b a")


def test_inequality_formatting():
    assert format_inequality(make_halfspace((1, 1, -1))) == "a1 + a2 >= a3"
    assert format_inequality(make_halfspace((1, 0, 0))) == "a1 >= 0"
    assert format_inequality(make_halfspace((1, 1, 1, 1, -3))) == \
        "a1 + a2 + a3 + a4 >= 3*a5"
    assert format_inequality(make_halfspace((-1, 2), 1)) == "2*a2 >= a1 + 1"


# --- commands --------------------------------------------------------------

PENTAGON = "graph { a-b b-c c-d d-e e-a }\n"


def test_check_perfect_pentagon(write, capsys):
    path = write("c5.graph", PENTAGON)
    code, report = run_json(capsys, ["check-perfect", path])
    assert code == 0
    assert report["primary_verdict"] is False
    cone, oracle = report["results"]
    assert cone["method"] == "theorem-path" and oracle["method"] == "oracle"
    assert cone["witness"]["non_clique_facets"] == [[1, 1, 1, 1, 1, -3]]


def test_assert_flag_drives_exit_code(write, capsys):
    path = write("c5.graph", PENTAGON)
    assert main(["check-perfect", path, "--assert", "false"]) == 0
    capsys.readouterr()
    assert main(["check-perfect", path, "--assert", "true"]) == 1
    capsys.readouterr()
    assert main(["check-normal", path, "--assert", "true"]) == 0
    capsys.readouterr()


def test_exit_codes_for_errors(write, capsys):
    bad = write("bad.graph", "graph { a-a }\n")
    assert main(["check-perfect", bad]) == 2
    capsys.readouterr()
    big = write("c4.graph", "graph { a-b b-c c-d d-a }\n")
    assert main(["check-perfect", big, "--cap-n", "3"]) == 3
    capsys.readouterr()
    missing_verdict = write("k2.graph", "graph { a-b }\n")
    assert main(["cliques", missing_verdict, "--assert", "true"]) == 2
    capsys.readouterr()


def test_hilbert_basis_command_monomials(write, capsys):
    path = write("k2.graph", "graph { a-b }\n")
    code, report = run_json(capsys, ["hilbert-basis", path, "--cone", "simis"])
    assert code == 0
    monomials = {entry["monomial"] for entry in report["results"][1]["value"]}
    assert monomials == {"x1", "x2", "x1x2 t"}
    # the cover-side cone of the same graph
    code, report = run_json(capsys, ["hilbert-basis", path, "--cone", "rees"])
    assert code == 0
    monomials = {entry["monomial"] for entry in report["results"][1]["value"]}
    assert monomials == {"x1", "x2", "x1 t", "x2 t"}


def test_symbolic_gens_command(write, capsys):
    path = write("k3.graph", "graph { a-b b-c a-c }\n")
    code, report = run_json(capsys, ["symbolic-gens", path])
    assert code == 0
    gens = report["results"][1]["value"]
    assert len(gens) == 7 and "x1x2x3 t^2" in gens


def test_check_commands_on_matrix_and_clutter(write, capsys):
    m = write("m.matrix", "matrix { 1 0 ; 1 1 ; 0 1 }\n")
    code, report = run_json(capsys, ["check-tdi", m])
    assert code == 0 and report["primary_verdict"] is True
    code, report = run_json(capsys, ["check-balanced", m])
    assert code == 0 and report["primary_verdict"] is True
    c = write("c4.clutter", "clutter { {1,2} {2,3} {3,4} {1,4} }\n")
    code, report = run_json(capsys, ["check-mfmc", c])
    assert code == 0 and report["primary_verdict"] is True
    code, report = run_json(capsys, ["blocker", c])
    assert report["results"][0]["value"] == [["1", "3"], ["2", "4"]]


def test_gorenstein_and_cm2_commands(write, capsys):
    c4 = write("c4.graph", "graph { a-b b-c c-d d-a }\n")
    code, report = run_json(capsys, ["check-gorenstein", c4, "--scan-bound", "3"])
    assert code == 0 and report["primary_verdict"] is True
    assert report["results"][0]["search_bounds"]["scan_bound"] == 3
    code, report = run_json(capsys, ["check-cm2-normal", c4])
    assert code == 0 and report["primary_verdict"] is True


def test_labels_are_used_in_rendering(write, capsys):
    g = write("g.graph", "1 2\n2 3\n")
    labels = write("labels.txt", "left mid right\n")
    code, report = run_json(capsys, ["covers", g, "--labels", labels])
    assert code == 0
    assert report["results"][0]["value"] == [["left", "right"], ["mid"]]


def test_json_reports_are_deterministic(write, capsys):
    path = write("c5.graph", PENTAGON)
    _, first = run_json(capsys, ["check-perfect", path])
    _, second = run_json(capsys, ["check-perfect", path])
    assert first["digest"] == second["digest"]
    first.pop("timing_ms"), second.pop("timing_ms")
    assert first == second
    assert first["schema_version"] == 1
    assert first["config"]["cap_n"] == 9


def test_stdin_input(capsys, monkeypatch):
    import io
    monkeypatch.setattr("sys.stdin", io.StringIO("graph { a-b }\n"))
    code, report = run_json(capsys, ["cliques", "-"])
    assert code == 0
    assert report["results"][0]["value"] == [["a", "b"]]
