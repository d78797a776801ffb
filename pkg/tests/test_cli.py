import json
import subprocess
import sys
from importlib import resources

import pytest

from colorpoly.cli import main

DATA = resources.files("colorpoly").joinpath("data")


def path(name):
    return str(DATA.joinpath(name))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build_f_vector(capsys):
    assert run(capsys, "build", path("k4.ecg"), "--f-vector") == (0, "f-vector: 4 6 3 1\n", "")


def test_classify_first_line(capsys):
    code, out, _ = run(capsys, "classify", path("k4.ecg"))
    assert code == 0
    assert out.splitlines()[0] == "surface: projective-plane chi=1 orientable=no"
    assert "type: {4,3}" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", path("klein8.ecg"), "--json")
    d = json.loads(out)
    assert d["surface_name"] == "klein-bottle" and d["euler"] == 0


def test_classify_polytope_file(capsys):
    code, out, _ = run(capsys, "classify", path("cube.poly"))
    assert out.startswith("surface: sphere chi=2 orientable=yes")


def test_validate_error(capsys):
    code, out, err = run(capsys, "validate", path("broken.ecg"))
    assert code == 1
    assert err.strip() == "ERROR NotProperlyColored: vertex 2 has colors {a,a,b}"


def test_missing_file(capsys):
    code, _, err = run(capsys, "build", "/nonexistent.ecg")
    assert code == 1 and err.startswith("ERROR ")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["build", path("k4.ecg"), "--no-such-flag"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["cayley", "--group", "sp:3"])
    assert exc.value.code == 2


def test_build_roundtrip(capsys, tmp_path):
    _, text, _ = run(capsys, "build", path("k4.ecg"))
    poly = tmp_path / "k4.poly"
    poly.write_text(text)
    code, again, _ = run(capsys, "validate", "--polytope", str(poly), "--emit")
    assert code == 0 and again == text
    code, report, _ = run(capsys, "validate", "--polytope", str(poly))
    assert "diamond: pass" in report


def test_two_faces(capsys):
    _, out, _ = run(capsys, "build", path("klein8.ecg"), "--two-faces")
    assert sorted(int(line.split()[-1]) for line in out.splitlines()) == [4, 4, 8, 8]


def test_autgroup(capsys):
    _, out, _ = run(capsys, "autgroup", path("cube_torus.ecg"))
    assert "gamma-c: 16" in out and "flag-orbits: 3" in out and "regular: no" in out
    _, out, _ = run(capsys, "autgroup", path("k4.ecg"), "--elements", "--json")
    assert len(json.loads(out)["elements"]) == 24


def test_facets(capsys):
    _, out, _ = run(capsys, "facets", path("cube.ecg"))
    assert len(out.splitlines()) == 6


def test_flaggraph(capsys):
    _, out, _ = run(capsys, "flaggraph", path("triangle.poly"))
    assert len(out.splitlines()) == 6
    _, out, _ = run(capsys, "flaggraph", path("triangle.poly"), "--polytope")
    assert "rank 2" in out


def test_cayley(capsys):
    _, out, _ = run(capsys, "cayley", "--group", "sp:3", "--edges", path("path2.graph"))
    assert len(out.splitlines()) == 6
    _, out, _ = run(capsys, "cayley", "--group", "z2n:3", "--semidirect", "--json")
    d = json.loads(out)
    assert (d["gamma-c"], d["normal"], d["trivial-intersection"]) == (48, True, True)


def test_graphicahedron(capsys):
    _, out, _ = run(capsys, "graphicahedron", path("c3.graph"))
    assert "f-vector: 6 9 3 1" in out and "surface: torus" in out and "group-order: 36" in out


def test_monodromy(capsys, tmp_path):
    target = tmp_path / "m.ecg"
    _, out, _ = run(capsys, "monodromy", path("triangle.poly"), "--emit-cayley", str(target))
    assert "monodromy-order: 6" in out and "regular: yes" in out
    assert len(target.read_text().splitlines()) == 6


def test_dot(capsys):
    _, out, _ = run(capsys, "dot", path("k4.ecg"))
    assert 'color="a", label="a"' in out


def test_threads_flag_does_not_change_output(capsys):
    a = run(capsys, "autgroup", path("klein8.ecg"))
    b = run(capsys, "autgroup", path("klein8.ecg"), "--threads", "4")
    assert a == b


def test_scale_budget(capsys):
    code, _, err = run(capsys, "build", path("cube.ecg"), "--max-faces", "5")
    assert code == 1 and err.startswith("ERROR ScaleExceeded:")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "colorpoly", "build", path("k4.ecg"), "--f-vector"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "f-vector: 4 6 3 1\n"
    res = subprocess.run([sys.executable, "-m", "colorpoly"], capture_output=True, text=True)
    assert res.returncode == 2
