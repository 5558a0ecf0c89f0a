import io as stdio
import json
import subprocess
import sys

import pytest

from tropcompact import io
from tropcompact.builders import crossing_segments, half_line, positive_orthant_example
from tropcompact.cli import main
from tropcompact.compactify import compactify


@pytest.fixture
def run(monkeypatch, capsys):
    def call(*argv, stdin=""):
        monkeypatch.setattr(sys, "stdin", stdio.StringIO(stdin))
        code = main(list(argv))
        out, err = capsys.readouterr()
        return code, out, err
    return call


def test_build_compactify_fvector_pipeline(run):
    code, built, _ = run("build", "orthant")
    assert code == 0
    code, hasse, _ = run("compactify", stdin=built)
    assert code == 0 and json.loads(hasse)["mode"] == "toric"
    assert run("fvector", stdin=hasse)[1] == "5 5 1\n"
    assert run("fvector", stdin=built)[1] == "2 3 1\n"
    assert run("fvector", "--compactified", stdin=built)[1] == "5 5 1\n"
    assert run("betti", "--field", "q", stdin=hasse)[1] == "1 0 0\n"


def test_k4_coarse_pipeline(run):
    built = run("build", "bergman")[1]
    assert run("fvector", stdin=built)[1] == "1 10 15\n"
    hasse = run("compactify", stdin=built)[1]
    assert run("fvector", stdin=hasse)[1] == "26 40 15\n"
    assert run("betti", "--field", "q", stdin=hasse)[1] == "1 0 0\n"


def test_hypersurface_and_matroid_builds(run, tmp_path):
    assert run("betti", stdin=run("build", "hypersurface")[1])[1] == "1 1\n"
    line = run("build", "hypersurface", "--polynomial", "min(0, x_0, x_1)")[1]
    assert run("fvector", stdin=line)[1] == "1 3\n"
    m = tmp_path / "m.json"
    m.write_text(json.dumps({"ground_size": 3, "graph_edges": [[0, 1], [1, 2], [0, 2]]}))
    assert run("fvector", stdin=run("build", "bergman", "--matroid", str(m))[1])[1] == "1 3\n"


def test_files_and_signs_round_trip(run, tmp_path):
    src, hasse, signs = tmp_path / "pc.json", tmp_path / "h.json", tmp_path / "s.json"
    assert run("build", "half-line", "-o", str(src))[0] == 0
    assert run("compactify", "-i", str(src), "-o", str(hasse))[0] == 0
    assert run("orientations", "-i", str(hasse), "-o", str(signs))[0] == 0
    doc = json.loads(signs.read_text())
    assert io.signs_to_json(io.signs_from_json(doc)) == doc
    assert run("betti", "-i", str(hasse), "--signs", str(signs), "--cohomology")[1] == "1 0\n"


def test_json_round_trips():
    pc = positive_orthant_example()
    assert io.complex_from_json(json.loads(io.dumps(io.complex_to_json(pc)))) == pc
    d = compactify(half_line())
    h = io.hasse_from_json(json.loads(io.dumps(io.hasse_to_json(d))))
    assert (h.faces, h.ranks, h.edges, h.top) == (d.hasse.faces, d.hasse.ranks, d.hasse.edges, d.hasse.top)


def test_output_is_deterministic(run):
    first = run("compactify", stdin=run("build", "shield")[1])[1]
    assert run("compactify", stdin=run("build", "shield")[1])[1] == first


def test_validate_exit_codes(run):
    code, out, _ = run("validate", stdin=run("build", "no-recession-fan")[1])
    assert code == 0 and out == "valid\nrecession fan: no\n"
    crossing = io.dumps(io.complex_to_json(crossing_segments()))
    code, out, _ = run("validate", stdin=crossing)
    assert code == 1 and "ImproperIntersection" in out
    code, _, err = run("validate", stdin="{not json")
    assert code == 2 and json.loads(err)["error"] == "InputError"
    code, _, err = run("validate", stdin='{"points": []}')
    assert code == 2 and json.loads(err)["error"] == "DocumentError"


def test_domain_errors_exit_one(run):
    built = run("build", "no-recession-fan")[1]
    code, _, err = run("compactify", "--mode", "toric", stdin=built)
    assert code == 1 and json.loads(err)["error"] == "NoRecessionFan"
    assert json.loads(run("compactify", stdin=built)[1])["mode"] == "chart"
    code, _, err = run("build", "hypersurface", "--polynomial", "min(0, x_0")
    assert code == 2 and json.loads(err)["error"] == "ParseError"


def test_check_command(run):
    code, out, _ = run("check", "--seed", "3", "--count", "4")
    assert code == 0 and out.endswith("4/4 passed\n")


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "tropcompact", "build", "orthant"],
                         capture_output=True, text=True, check=True).stdout
    assert io.complex_from_json(json.loads(out)) == positive_orthant_example()
