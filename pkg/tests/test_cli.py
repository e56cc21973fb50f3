import json
import subprocess
import sys

import pytest

from totalcolour import jsonio, make_graph, complete_graph, edgeless_graph
from totalcolour.cli import main


@pytest.fixture
def k2_file(tmp_path):
    path = tmp_path / "k2.json"
    jsonio.save_json(path, jsonio.graph_to_obj(complete_graph(2)))
    return str(path)


@pytest.fixture
def k3_file(tmp_path):
    path = tmp_path / "k3.json"
    jsonio.save_json(path, jsonio.graph_to_obj(complete_graph(3)))
    return str(path)


def test_product_k2_k2(k2_file, tmp_path, capsys):
    out = tmp_path / "prod.json"
    assert main(["product", k2_file, k2_file, "-o", str(out)]) == 0
    captured = capsys.readouterr()
    assert "|V|=4 |E|=2 max_degree=1" in captured.out
    g = jsonio.graph_from_obj(jsonio.load_json(out))
    assert g.n == 4 and len(g.edges) == 2


def test_product_with_edgeless_factor(k3_file, tmp_path, capsys):
    e3 = tmp_path / "e3.json"
    jsonio.save_json(e3, jsonio.graph_to_obj(edgeless_graph(3)))
    out = tmp_path / "prod.json"
    assert main(["product", k3_file, str(e3), "-o", str(out)]) == 0
    assert "|V|=9 |E|=0" in capsys.readouterr().out


def test_product_to_stdout(k2_file, capsys):
    assert main(["product", k2_file, k2_file]) == 0
    captured = capsys.readouterr()
    obj = json.loads(captured.out)
    assert obj["n"] == 4
    assert "|V|=4" in captured.err  # stats go to stderr in stdout mode


def test_product_malformed_file_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{oops")
    assert main(["product", str(bad), str(bad)]) == 2


def test_product_empty_factor_exits_3(k2_file, tmp_path):
    empty = tmp_path / "empty.json"
    jsonio.save_json(empty, {"n": 0, "edges": []})
    assert main(["product", k2_file, str(empty)]) == 3


def test_colour_knm_4_3(tmp_path, capsys):
    out = tmp_path / "bundle.json"
    assert main(["colour", "knm", "4", "3", "-o", str(out)]) == 0
    bundle = jsonio.load_json(out)
    assert bundle["report"]["valid"] is True
    assert bundle["report"]["colours_used"] == 7
    assert bundle["meta"]["construction"] == "knm"


def test_colour_knm_open_problem_exits_4(tmp_path, capsys):
    out = tmp_path / "bundle.json"
    assert main(["colour", "knm", "3", "3", "-o", str(out)]) == 4
    assert not out.exists()  # no colouring is emitted
    assert "open problem" in capsys.readouterr().err


def test_colour_knm_bad_params_exit_3():
    assert main(["colour", "knm", "2", "4"]) == 3


def test_colour_crown(tmp_path):
    out = tmp_path / "crown.json"
    assert main(["colour", "crown", "5", "-o", str(out)]) == 0
    bundle = jsonio.load_json(out)
    assert bundle["graph"]["n"] == 10
    assert bundle["report"]["colours_used"] == 5


def test_colour_lift_and_verify_round_trip(k3_file, tmp_path):
    from totalcolour import kn_k2_total_colouring, cycle_graph

    f_path = tmp_path / "f.json"
    jsonio.save_json(f_path, jsonio.colouring_to_obj(kn_k2_total_colouring(3)))
    h_path = tmp_path / "c6.json"
    jsonio.save_json(h_path, jsonio.graph_to_obj(cycle_graph(6)))
    out = tmp_path / "lifted.json"
    assert main(["colour", "lift", k3_file, str(f_path), str(h_path), "-o", str(out)]) == 0
    bundle = jsonio.load_json(out)
    assert bundle["report"]["colours_used"] == 5
    assert main(["verify", str(out)]) == 0


def test_colour_kn_bipartite(tmp_path):
    h_path = tmp_path / "p4.json"
    from totalcolour import path_graph

    jsonio.save_json(h_path, jsonio.graph_to_obj(path_graph(4)))
    out = tmp_path / "bundle.json"
    assert main(["colour", "kn-bipartite", "4", str(h_path), "-o", str(out)]) == 0
    assert jsonio.load_json(out)["report"]["colours_used"] == 7


def test_verify_detects_corruption(tmp_path, capsys):
    out = tmp_path / "bundle.json"
    main(["colour", "crown", "4", "-o", str(out)])
    bundle = jsonio.load_json(out)

    graph_path = tmp_path / "graph.json"
    col_path = tmp_path / "col.json"
    jsonio.save_json(graph_path, bundle["graph"])
    jsonio.save_json(col_path, bundle["colouring"])
    assert main(["verify", str(graph_path), str(col_path)]) == 0

    corrupted = json.loads(json.dumps(bundle["colouring"]))
    corrupted["edge_colours"][0][2] = bundle["colouring"]["vertex_colours"][
        corrupted["edge_colours"][0][0]
    ]
    jsonio.save_json(col_path, corrupted)
    capsys.readouterr()
    assert main(["verify", str(graph_path), str(col_path)]) == 1
    assert "INVALID" in capsys.readouterr().out

    dropped = json.loads(json.dumps(bundle["colouring"]))
    dropped["edge_colours"] = dropped["edge_colours"][1:]
    jsonio.save_json(col_path, dropped)
    assert main(["verify", str(graph_path), str(col_path)]) == 2


def test_chi_exact_exit_0(tmp_path, capsys):
    g, = [jsonio.graph_to_obj(make_graph(4, [(0, 1), (2, 3)]))]
    path = tmp_path / "2k2.json"
    jsonio.save_json(path, g)
    assert main(["chi", str(path), "--seconds", "10"]) == 0
    line = capsys.readouterr().out.strip().splitlines()[-1]
    obj = json.loads(line)
    assert obj["status"] == "exact" and obj["chi_total"] == 3


def test_chi_timeout_exit_5(tmp_path, capsys):
    from totalcolour import direct_product

    prod, _ = direct_product(complete_graph(6), complete_graph(5))
    path = tmp_path / "big.json"
    jsonio.save_json(path, jsonio.graph_to_obj(prod))
    assert main(["chi", str(path), "--seconds", "0.5"]) == 5
    captured = capsys.readouterr()
    assert "warning" in captured.err  # above the element guideline
    obj = json.loads(captured.out.strip().splitlines()[-1])
    assert obj["status"] in ("timed_out", "lower_bound_only")
    assert obj["chi_total"] is None


def test_chi_batch(tmp_path, capsys):
    paths = []
    for name, g in [("c6", make_graph(6, [(i, (i + 1) % 6) for i in range(6)])),
                    ("2k2", make_graph(4, [(0, 1), (2, 3)]))]:
        p = tmp_path / f"{name}.json"
        jsonio.save_json(p, jsonio.graph_to_obj(g))
        paths.append(str(p))
    assert main(["chi", *paths, "--seconds", "10"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) == 2
    assert [json.loads(l)["chi_total"] for l in lines] == [3, 3]


def test_chi_batch_parallel(tmp_path, capsys):
    paths = []
    for i in range(2):
        p = tmp_path / f"g{i}.json"
        jsonio.save_json(p, jsonio.graph_to_obj(make_graph(4, [(0, 1), (2, 3)])))
        paths.append(str(p))
    assert main(["chi", *paths, "--seconds", "10", "--jobs", "2"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert [json.loads(l)["chi_total"] for l in lines] == [3, 3]


def test_colour_dot_format(tmp_path):
    out = tmp_path / "crown.dot"
    assert main(["colour", "crown", "3", "--format", "dot", "-o", str(out)]) == 0
    assert out.read_text().startswith("graph G {")


def test_export_dot(tmp_path):
    bundle_path = tmp_path / "crown3.json"
    main(["colour", "crown", "3", "-o", str(bundle_path)])
    out = tmp_path / "crown3.dot"
    assert main(["export-dot", str(bundle_path), "-o", str(out)]) == 0
    dot = out.read_text()
    assert dot.count(" -- ") == 6
    assert dot.count("fillcolor=") == 6


def test_export_dot_corrupted_bundle_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"graph": 3}')
    assert main(["export-dot", str(bad)]) == 2


def test_seed_env_var_warns(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("TOTAL_COLOUR_SEED", "42")
    out = tmp_path / "bundle.json"
    assert main(["colour", "crown", "3", "-o", str(out)]) == 0
    assert "TOTAL_COLOUR_SEED" in capsys.readouterr().err


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "totalcolour.cli", "colour", "knm", "3", "3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 4
    assert "open problem" in proc.stderr
