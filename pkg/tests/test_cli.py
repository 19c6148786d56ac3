import io
import json
import subprocess
import sys

import pytest

from matcharr.cli import run
from matcharr.graph import complete_graph, cycle_graph, path_graph, star_graph


@pytest.fixture
def graph_file(tmp_path):
    def write(g, name="g.txt"):
        p = tmp_path / name
        p.write_text(g.to_text())
        return str(p)
    return write


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_charpoly_json(graph_file):
    code, out, _ = call("charpoly", "-i", graph_file(path_graph(2)), "--format", "json")
    assert code == 0
    assert json.loads(out) == {"chi": [2, -3, 1]}


def test_charpoly_text_factored(graph_file):
    _, out, _ = call("charpoly", "-i", graph_file(complete_graph(3)))
    assert out.strip() == "(t - 1)(t - 2)(t - 3)"
    _, out, _ = call("charpoly", "-i", graph_file(cycle_graph(4)))
    assert out.strip() == "(t - 1)(t - 4)^3"
    # K4 does not split over the integers, so the expanded form is printed
    _, out, _ = call("charpoly", "-i", graph_file(complete_graph(4)))
    assert out.strip() == "t^6 - 33*t^5 + 447*t^4 - 3141*t^3 + 11804*t^2 - 21366*t + 12288"


def test_regions(graph_file):
    code, out, _ = call("regions", "-i", graph_file(complete_graph(3)))
    assert (code, out.strip()) == (0, "24")
    _, out, _ = call("regions", "-i", graph_file(cycle_graph(4)), "--format", "json")
    assert json.loads(out) == {"regions": 250}


def test_matching(graph_file):
    code, out, _ = call("matching", "-i", graph_file(complete_graph(3)), "--weights", "3,1,1", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"argmax": [[1]]}
    _, out, _ = call("matching", "-i", graph_file(complete_graph(3)), "--weights", "1,1,1", "--format", "json")
    assert json.loads(out) == {"argmax": [[1], [2], [3]]}
    _, out, _ = call("matching", "-i", graph_file(complete_graph(3)), "--weights", "3,1,1")
    assert out.strip() == "{e1}"


def test_arrangement_json(graph_file):
    _, out, _ = call("arrangement", "-i", graph_file(path_graph(2)), "--format", "json")
    assert json.loads(out) == {"dimension": 2, "hyperplanes": [[1, 0], [1, -1], [0, 1]]}
    _, out, _ = call("arrangement", "-i", graph_file(path_graph(2)))
    assert out.splitlines() == ["dimension 2, 3 hyperplanes", "x1 = 0", "x1 - x2 = 0", "x2 = 0"]


def test_arrangement_numbering(graph_file):
    path = graph_file(path_graph(3))
    _, out, _ = call("arrangement", "-i", path, "--numbering", "2,1,3", "--format", "json")
    assert [1, -1, -1] in json.loads(out)["hyperplanes"]
    _, base, _ = call("arrangement", "-i", path, "--format", "json")
    assert [1, -1, 1] in json.loads(base)["hyperplanes"]


def test_probe(graph_file):
    code, out, _ = call("probe", "-i", graph_file(complete_graph(3)), "--samples", "50", "--seed", "7",
                        "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == {"sign_vectors_seen", "constancy_violations", "uniqueness_violations", "samples", "seed"}
    assert rep["constancy_violations"] == rep["uniqueness_violations"] == 0
    assert (rep["samples"], rep["seed"]) == (50, 7)


def test_verify_default_suite():
    code, out, _ = call("verify", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert all(set(r) == {"theorem_id", "instance_description", "pass", "details"} for r in reports)
    assert all(r["pass"] for r in reports)


def test_verify_selected_text():
    code, out, _ = call("verify", "--theorem", "T1_exception", "--theorem", "remark_unions")
    assert code == 0
    assert out.splitlines()[-1] == "2/2 passed"


def test_verify_on_graph(graph_file):
    code, out, _ = call("verify", "-i", graph_file(path_graph(3)), "--samples", "30", "--format", "json")
    assert code == 0
    ids = {r["theorem_id"] for r in json.loads(out)}
    assert {"T1_reconstruction", "T2_regions", "T3_invariance", "T5_tree", "chromatic_graphical"} <= ids


def test_identical_invocations_identical_bytes(graph_file):
    path = graph_file(cycle_graph(4))
    runs = [call("probe", "-i", path, "--samples", "40", "--format", "json") for _ in range(2)]
    assert runs[0] == runs[1]
    runs = [call("charpoly", "-i", path) for _ in range(2)]
    assert runs[0] == runs[1]


@pytest.mark.parametrize("argv", [
    ("charpoly", "-i", "/nonexistent/graph.txt"),
    ("charpoly",),
    ("nonsense",),
    ("charpoly", "--format", "xml"),
])
def test_usage_errors(argv):
    code, out, _ = call(*argv)
    assert code == 2 and out == ""


def test_input_errors(graph_file, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 2\n1 2\n2 2\n")
    code, _, err = call("charpoly", "-i", str(bad))
    assert code == 2 and "line 3" in err
    k3 = graph_file(complete_graph(3))
    assert call("matching", "-i", k3)[0] == 2
    assert call("matching", "-i", k3, "--weights", "1,2")[0] == 2
    assert call("matching", "-i", k3, "--weights", "1,a,2")[0] == 2
    assert call("charpoly", "-i", k3, "--numbering", "1,1,2")[0] == 2
    assert call("charpoly", "-i", k3, "--limits", "bogus=3")[0] == 2


def test_guard_violation(graph_file):
    k4 = graph_file(complete_graph(4))
    code, _, err = call("charpoly", "-i", k4, "--limits", "hyperplanes=20")
    assert code == 2 and "hyperplane" in err


def test_limits_can_raise(graph_file, caplog):
    path = graph_file(star_graph(13))
    assert call("arrangement", "-i", path)[0] == 2
    with caplog.at_level("WARNING"):
        code, out, _ = call("arrangement", "-i", path, "--limits", "edges=13", "--format", "json")
    assert code == 0 and len(json.loads(out)["hyperplanes"]) == 91
    assert "may be slow" in caplog.text


def test_module_entry_point(graph_file):
    proc = subprocess.run(
        [sys.executable, "-m", "matcharr", "regions", "-i", graph_file(path_graph(2))],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "6"
