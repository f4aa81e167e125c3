import json
import os
import re
import subprocess
import sys

import pytest

from hrg.cli import main
from hrg.families import torus
from hrg.graph import complete, cycle, from_graph6, to_edge_list_text, to_graph6
from hrg.refinement import analyze_hrg


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def run_proc(args, stdin="", env=None):
    return subprocess.run([sys.executable, "-m", "hrg.cli", *args], input=stdin, capture_output=True,
                          text=True, env={**os.environ, **(env or {})})


class TestAnalyze:
    def test_torus55(self, tmp_path, capsys):
        path = write(tmp_path, "t55.g6", to_graph6(torus(5, 5)))
        code, out, _ = run(["analyze", path, "--bounds"], capsys)
        rep = json.loads(out)
        assert code == 0
        assert list(rep) == ["input", "graph", "hrg", "classification", "bounds", "failures"]
        assert rep["hrg"]["index"] == 6 and rep["graph"]["diameter"] == 4
        assert rep["classification"]["drg_direct"] is False
        assert rep["bounds"]["c_min"] == [1, 1, 2, 2]

    def test_c6(self, tmp_path, capsys):
        path = write(tmp_path, "c6.txt", to_edge_list_text(cycle(6)))
        code, out, _ = run(["analyze", path], capsys)
        rep = json.loads(out)
        assert rep["hrg"]["index"] == 4 and rep["classification"]["drg_by_index"] is True
        assert rep["classification"]["intersection_array"] == {"b": [2, 1, 1], "c": [1, 1, 2]}

    def test_garbage(self, tmp_path, capsys):
        path = tmp_path / "junk"
        path.write_bytes(b"\xff\xfe\x00garbage")
        code, _, err = run(["analyze", str(path)], capsys)
        assert code == 2 and err.startswith("hrg:")

    def test_bad_edge_list_reports_line(self, tmp_path, capsys):
        path = write(tmp_path, "bad.txt", "4\n0 1\n1 9\n")
        code, _, err = run(["analyze", path], capsys)
        assert code == 2 and "line 3" in err

    def test_missing_file(self, capsys):
        code, _, _ = run(["analyze", "/nonexistent/graph"], capsys)
        assert code == 2

    def test_irregular_reports_failure(self, tmp_path, capsys):
        path = write(tmp_path, "p.txt", "3\n0 1\n1 2\n")
        code, out, _ = run(["analyze", path, "--bounds"], capsys)
        rep = json.loads(out)
        assert code == 0 and "hrg" not in rep and rep["failures"]["hrg"] == "not-regular"
        assert "bounds" not in rep

    def test_disconnected_sections(self, tmp_path, capsys):
        path = write(tmp_path, "d.txt", "4\n0 1\n2 3\n")
        _, out, _ = run(["analyze", path, "--bounds", "--spectral"], capsys)
        rep = json.loads(out)
        assert rep["graph"]["diameter"] == "inf"
        assert rep["failures"] == {"classification": "disconnected", "bounds": "disconnected",
                                   "spectral.checks": "disconnected"}

    def test_spectral(self, tmp_path, capsys):
        path = write(tmp_path, "c6.g6", to_graph6(cycle(6)))
        _, out, _ = run(["analyze", path, "--spectral"], capsys)
        spec = json.loads(out)["spectral"]
        assert [e["multiplicity"] for e in spec["eigenvalues"]] == [1, 2, 2, 1]
        assert spec["eigenvalues"][0]["value"] == 2.0
        assert spec["checks"]["intertwine_exact"] is True

    def test_text(self, tmp_path, capsys):
        path = write(tmp_path, "t55.g6", to_graph6(torus(5, 5)))
        _, out, _ = run(["analyze", path, "--format", "text", "--bounds"], capsys)
        assert "index=6" in out and "b_max=[4, 3, 2, 1]" in out

    def test_deterministic(self, tmp_path, capsys):
        path = write(tmp_path, "t.g6", to_graph6(torus(3, 5)))
        outs = [run(["analyze", path, "--bounds", "--spectral"], capsys)[1] for _ in range(2)]
        assert outs[0] == outs[1]

    def test_float_precision(self, tmp_path, capsys):
        path = write(tmp_path, "c5.g6", to_graph6(cycle(5)))
        _, out, _ = run(["analyze", path, "--spectral"], capsys)
        for v in re.findall(r'"value": (-?[0-9.e-]+)', out):
            assert len(v.lstrip("-").replace(".", "").split("e")[0].lstrip("0")) <= 12

    def test_stdin(self):
        proc = run_proc(["analyze", "-"], stdin=to_graph6(cycle(5)) + "\n")
        assert proc.returncode == 0 and json.loads(proc.stdout)["hrg"]["index"] == 3

    def test_hrg_tol_env(self):
        # a huge grouping tolerance merges every eigenvalue of C5 into one cluster
        proc = run_proc(["analyze", "-", "--spectral"], stdin=to_graph6(cycle(5)), env={"HRG_TOL": "1"})
        assert len(json.loads(proc.stdout)["spectral"]["eigenvalues"]) == 1


class TestConstruct:
    def test_torus24_is_cube(self, capsys):
        code, out, _ = run(["construct", "--torus", "2", "4"], capsys)
        g = from_graph6(out.strip())
        assert code == 0 and g.n == 8 and g.valency() == 3

    def test_wl721(self, capsys):
        _, out, _ = run(["construct", "--wl", "7", "2", "1"], capsys)
        g = from_graph6(out.strip())
        assert g.n == 49 and g.valency() == 8

    def test_wl_then_analyze(self, tmp_path, capsys):
        out_path = str(tmp_path / "wl.g6")
        run(["construct", "--wl", "7", "2", "1", "-o", out_path], capsys)
        _, out, _ = run(["analyze", out_path, "--bounds"], capsys)
        rep = json.loads(out)
        assert rep["graph"]["diameter"] == 3 and rep["hrg"]["is_hrg"]
        assert rep["bounds"]["star_holds"] is False

    def test_p_family(self, capsys):
        code, out, _ = run(["construct", "--p-family", "5", "2", "1", "0"], capsys)
        g = from_graph6(out.strip())
        r = analyze_hrg(g)
        assert code == 0 and g.valency() == 5 and r.is_hrg

    def test_p_family_explicit_factors(self, capsys):
        code, out, _ = run(["construct", "--p-family", "7", "0", "1", "1", "--p1", "5", "--p2", "3", "5"], capsys)
        assert code == 0 and from_graph6(out.strip()).n == 150

    def test_p_family_bad_sum(self, capsys):
        code, _, err = run(["construct", "--p-family", "6", "2", "1", "0"], capsys)
        assert code == 1 and "PreconditionError" in err

    def test_complement_of(self, tmp_path, capsys):
        path = write(tmp_path, "c7.g6", to_graph6(cycle(7)))
        _, out, _ = run(["construct", "--complement-of", path, "--out-format", "edgelist"], capsys)
        assert out.splitlines()[0] == "7"

    def test_complement_of_small_diameter(self, tmp_path, capsys):
        path = write(tmp_path, "c5.g6", to_graph6(cycle(5)))
        code, _, err = run(["construct", "--complement-of", path], capsys)
        assert code == 1 and "DiameterTooSmall" in err

    def test_product(self, tmp_path, capsys):
        a = write(tmp_path, "a.g6", to_graph6(torus(2, 3)))
        b = write(tmp_path, "b.g6", to_graph6(cycle(5)))
        c = write(tmp_path, "c.g6", to_graph6(complete(2)))
        _, out, _ = run(["construct", "--product", a, b, c], capsys)
        g = from_graph6(out.strip())
        assert g.n == 60 and g.valency() == 6

    def test_product_needs_two(self, tmp_path, capsys):
        a = write(tmp_path, "a.g6", to_graph6(torus(2, 3)))
        code, _, _ = run(["construct", "--product", a], capsys)
        assert code == 1


class TestDot:
    def test_k2(self, tmp_path, capsys):
        path = write(tmp_path, "k2.g6", to_graph6(complete(2)))
        _, out, _ = run(["export-dot", path], capsys)
        assert out.count(" -- ") == 1 and "  0;" in out and "  1;" in out

    def test_t33_colours(self, tmp_path, capsys):
        path = write(tmp_path, "t33.g6", to_graph6(torus(3, 3)))
        _, out, _ = run(["export-dot", path, "--root", "0"], capsys)
        colours = set(re.findall(r'fillcolor="(#[0-9a-f]+)"', out))
        # T_{3,3} is strongly regular, so each rooted refinement has three cells
        assert len(colours) == analyze_hrg(torus(3, 3)).index == 3

    def test_wl721(self, capsys):
        proc = run_proc(["construct", "--wl", "7", "2", "1"])
        dot = run_proc(["export-dot", "-", "--root", "0"], stdin=proc.stdout)
        assert dot.returncode == 0
        assert len(re.findall(r"^  \d+ \[", dot.stdout, re.M)) == 49
        assert dot.stdout.count(" -- ") == 49 * 8 // 2

    def test_root_out_of_range(self, tmp_path, capsys):
        path = write(tmp_path, "c5.g6", to_graph6(cycle(5)))
        code, _, _ = run(["export-dot", path, "--root", "9"], capsys)
        assert code == 1


def test_requires_subcommand():
    with pytest.raises(SystemExit):
        main([])
