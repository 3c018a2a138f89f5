import subprocess
import sys

import pytest

from clusterwalk import cli, generate, parse_edge_list
from clusterwalk.graph_core import format_edge_list, make_graph


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def parse_report(text):
    rep = {}
    for line in text.splitlines():
        key, _, value = line.partition(": ")
        rep[key] = value
    return rep


@pytest.fixture
def graph_file(tmp_path):
    def make(*spec):
        path = tmp_path / ("_".join(map(str, spec)) + ".txt")
        path.write_text(format_edge_list(generate(*spec)))
        return path
    return make


@pytest.mark.parametrize("spec,header", [
    (("complete", 4), "4 6"),
    (("path", 4), "4 3"),
    (("conjoined_polygons", 2, 4), "7 8"),
])
def test_gen(capsys, tmp_path, spec, header):
    out_path = tmp_path / "g.txt"
    code, out, _ = run(capsys, "gen", *spec, "--out", out_path)
    assert code == 0
    lines = [l for l in out_path.read_text().splitlines() if not l.startswith("#")]
    assert lines[0] == header and len(lines) == 1 + int(header.split()[1])
    g = parse_edge_list(out_path.read_text())
    assert g.adjacency == generate(*spec).adjacency
    assert parse_report(out)["input.n"] == header.split()[0]


def test_gen_to_stdout(capsys):
    code, out, _ = run(capsys, "gen", "cycle", 5)
    assert code == 0 and "5 5\n" in out


def test_gen_bad_params(capsys):
    code, _, err = run(capsys, "gen", "complete", 1)
    assert code == 1 and "complete needs" in err


def test_compute_kemeny_k4(capsys, graph_file):
    code, out, _ = run(capsys, "compute", graph_file("complete", 4), "kemeny")
    rep = parse_report(out)
    assert code == 0
    assert float(rep["result.kemeny"]) == pytest.approx(2.25, rel=1e-12)
    assert float(rep["diagnostic.kemeny.max_start_spread"]) <= 1e-8
    assert rep["input.degrees"] == "3x4"


def test_compute_kirchhoff_and_spectrum(capsys, graph_file):
    _, out, _ = run(capsys, "compute", graph_file("path", 4), "kirchhoff")
    assert float(parse_report(out)["result.kirchhoff"]) == pytest.approx(10, rel=1e-12)
    _, out, _ = run(capsys, "compute", graph_file("cycle", 4), "spectrum")
    vals = [float(x) for x in parse_report(out)["result.spectrum"].split()]
    assert vals == pytest.approx([1, 0, 0, -1], abs=1e-12)


def test_compute_all_with_monte_carlo(capsys, graph_file):
    path = graph_file("path", 4)
    code, out, _ = run(capsys, "--seed", 3, "compute", path, "all", "--trials", 20000)
    rep = parse_report(out)
    assert code == 0
    assert rep["diagnostic.hitting.mc_within_4se"] == "true"
    assert rep["result.hitting.0"].split() == ["0", "1", "4", "9"]
    assert "diagnostic.sandwich" in rep
    # twelve significant digits or more on floats
    assert rep["result.kemeny"].startswith("3.16666666666")
    code2, out2, _ = run(capsys, "--seed", 3, "compute", path, "all", "--trials", 20000)
    assert out2 == out


def test_compute_disconnected(capsys, tmp_path):
    p = tmp_path / "d.txt"
    p.write_text(format_edge_list(make_graph(4, [(0, 1), (2, 3)])))
    code, _, err = run(capsys, "compute", p, "kemeny")
    assert code == 2 and "disconnected" in err


def test_compute_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("3 2\n0 1\n1 q\n")
    code, _, err = run(capsys, "compute", p)
    assert code == 1 and "line 3" in err


def test_usage_error_exit_code(capsys):
    code = None
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute"])
    assert exc.value.code == 1


def test_invariant_violation_exit_code(capsys, graph_file, monkeypatch):
    from clusterwalk import formulas
    monkeypatch.setattr(formulas.Sandwich, "holds", lambda self, rtol=1e-8: False)
    code, out, err = run(capsys, "compute", graph_file("path", 4), "kemeny", "kirchhoff")
    assert code == 4 and "invariant violated" in err and "result.kemeny" in out


def test_numeric_failure_exit_code(capsys, graph_file, monkeypatch):
    from clusterwalk import spectra

    def boom(g):
        raise spectra.NumericKernelError("forced")
    monkeypatch.setattr(spectra, "walk_spectrum", boom)
    code, _, err = run(capsys, "compute", graph_file("path", 4), "spectrum")
    assert code == 3 and "forced" in err


def test_check_hs_full_c5(capsys, graph_file):
    code, out, _ = run(capsys, "check-hs", graph_file("cycle", 5), "--mode", "full")
    rep = parse_report(out)
    assert code == 0 and rep["result.verdict"] == "HighlySymmetric"
    assert rep["diagnostic.extras.extras_ok"] == "true"


@pytest.mark.parametrize("spec,rule", [(("conjoined_polygons", 2, 4), "ii"), (("path", 5), "iv")])
def test_check_hs_screen(capsys, graph_file, spec, rule):
    code, out, _ = run(capsys, "check-hs", graph_file(*spec), "--mode", "screen")
    rep = parse_report(out)
    assert rep["result.verdict"] == "NotHS" and rep["result.screen.rule"] == rule


def test_check_hs_full_witness(capsys, graph_file):
    _, out, _ = run(capsys, "check-hs", graph_file("path", 3))
    rep = parse_report(out)
    assert rep["result.verdict"] == "NotHS" and rep["result.witness"] in ("0 1", "2 1")


@pytest.mark.parametrize("a,b,n,m", [
    (("complete", 2), ("complete", 2), 4, 3),
    (("complete", 3), ("complete", 3), 9, 12),
    (("cycle", 4), ("complete", 2), 8, 8),
])
def test_cluster_command(capsys, graph_file, tmp_path, a, b, n, m):
    out_path = tmp_path / "c.txt"
    code, out, _ = run(capsys, "cluster", graph_file(*a), graph_file(*b), "--root", 0, "--out", out_path)
    assert code == 0
    g = parse_edge_list(out_path.read_text())
    assert (g.n, g.m) == (n, m)
    if n == 4:
        assert g.adjacency == generate("path", 4).adjacency or sorted(g.degrees) == [1, 1, 2, 2]


def test_verify_cluster_k2(capsys, graph_file):
    k2 = graph_file("complete", 2)
    code, out, _ = run(capsys, "verify-cluster", k2, k2)
    rep = parse_report(out)
    assert code == 0
    assert float(rep["result.k_exact"]) == pytest.approx(19 / 6, rel=1e-12)
    assert float(rep["diagnostic.delta.k_cluster_printed"]) <= 1e-8
    assert float(rep["diagnostic.delta.k_self_printed"]) == pytest.approx(0.10526, rel=1e-3)
    for row in ("k_self_printed", "k_self_derived", "r_self", "r_from_k_printed", "r_from_k_derived"):
        assert f"result.{row}" in rep


def test_verify_cluster_k3_and_c4k2(capsys, graph_file):
    k3 = graph_file("complete", 3)
    _, out, _ = run(capsys, "verify-cluster", k3, k3)
    rep = parse_report(out)
    assert float(rep["result.r_cluster"]) == pytest.approx(48) == float(rep["result.r_self"])
    _, out, _ = run(capsys, "verify-cluster", graph_file("cycle", 4), graph_file("complete", 2))
    rep = parse_report(out)
    assert float(rep["result.k_cluster_printed"]) == pytest.approx(8)
    assert float(rep["result.k_exact"]) == pytest.approx(8.75)
    assert "result.k_self_printed" not in rep


def test_verify_cluster_rejects_non_hs(capsys, graph_file):
    code, _, err = run(capsys, "verify-cluster", graph_file("path", 3), graph_file("complete", 2))
    assert code == 2 and "precondition" in err


def test_bounds_command(capsys, graph_file):
    _, out, _ = run(capsys, "bounds", graph_file("complete", 4))
    rep = parse_report(out)
    for key in ("lower_general", "lower_majorization", "lower_diameter"):
        assert float(rep[f"result.{key}"]) == pytest.approx(2.25, abs=1e-9)
        assert rep[f"diagnostic.{key}.tight"] == "true"
    assert rep["diagnostic.upper_eigen.tight"] == "true"
    _, out, _ = run(capsys, "bounds", graph_file("complete_bipartite", 2, 2))
    assert float(parse_report(out)["result.lower_bipartite"]) == 2.5
    _, out, _ = run(capsys, "bounds", graph_file("path", 4))
    rep = parse_report(out)
    assert float(rep["result.lower_bipartite"]) == 2.5
    assert rep["diagnostic.lower_bipartite.tight"] == "false"


def test_tolerance_floor():
    args = cli.build_parser().parse_args(["--tolerance", "1e-20", "bounds", "x"])
    assert args.tolerance == 1e-12


def test_module_entry_point(tmp_path):
    p = tmp_path / "k4.txt"
    p.write_text(format_edge_list(generate("complete", 4)))
    res = subprocess.run([sys.executable, "-m", "clusterwalk", "compute", str(p), "kemeny"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "result.kemeny: 2.25" in res.stdout
