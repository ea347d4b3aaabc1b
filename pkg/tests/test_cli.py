from __future__ import annotations

import io
import json
import subprocess
import sys

from pcmgraphs.cli import main


def run(*argv: str, stdin: str = "") -> tuple[int, str]:
    out = io.StringIO()
    code = main(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_info():
    code, out = run("info", "--n", "10", "--k", "3")
    assert code == 0
    assert out.strip() == "edges=15 c=15/45≈0.3333 d_min=2 (catalog: Petersen graph)"


def test_info_json_matches_text():
    _, text = run("info", "--n", "12", "--k", "4")
    code, raw = run("info", "--n", "12", "--k", "4", "--json")
    data = json.loads(raw)
    assert code == 0
    assert f"edges={data['edges']}" in text and f"c={data['c']}" in text
    assert f"d_min={data['d_min']}" in text and data["catalog"] in text


def test_census_store_optima():
    code, out = run("census", "--n", "6", "--k", "3", "--store-optima")
    assert code == 0
    assert out.splitlines()[0] == "6 3 2 2 true 9/15"
    assert len(out.splitlines()) == 3
    code, raw = run("census", "--n", "6", "--k", "3", "--store-optima", "--json")
    data = json.loads(raw)
    assert data["optima"] == out.splitlines()[1:]
    assert (data["d_min"], data["count"], data["c"]) == (2, 2, "9/15")


def test_census_jobs_flag():
    _, one = run("census", "--n", "11", "--k", "4", "--jobs", "1")
    _, two = run("census", "--n", "11", "--k", "4", "--jobs", "2")
    assert one == two == "11 4 2 37 true 22/55\n"


def test_census_infeasible_cell_needs_force():
    code, _ = run("census", "--n", "16", "--k", "5")
    assert code == 2
    code, out = run("census", "--n", "16", "--k", "5", "--force", "--budget", "1000")
    assert code == 0 and "false" in out.split()


def test_convert_g6_to_edges():
    code, out = run("convert", "--from", "g6", "--to", "edges", stdin="D}k\n")
    assert code == 0
    assert out.splitlines() == ["1-2", "1-3", "1-4", "1-5", "2-3", "2-4", "3-5", "4-5"]


def test_convert_round_trips():
    _, edges = run("convert", "--from", "g6", "--to", "edges", stdin="IUYAHCPBG\n")
    _, g6 = run("convert", "--from", "edges", "--to", "g6", stdin=edges)
    assert g6 == "IUYAHCPBG\n"
    _, csv = run("convert", "--from", "mask", "--to", "csv", stdin="n=3\n11x\n111\nx11\n")
    assert csv == "i,j\n1,2\n2,3\n"
    _, sketch = run("convert", "--from", "g6", "--to", "matrix", stdin="D}k\n")
    assert "*" in sketch and "o" in sketch
    _, batch = run("convert", "--from", "g6", "--to", "g6", stdin="D}k\nE{Sw\n")
    assert batch == "D}k\nE{Sw\n"


def test_verify_catalog():
    code, out = run("verify", "--catalog")
    assert code == 0
    assert "26/26 entries pass" in out
    assert "3-16 -> 3-6" in out
    code, raw = run("verify", "--catalog", "--json")
    assert json.loads(raw)["passed"] is True


def test_verify_graph6():
    assert run("verify", "--graph6", "IUYAHCPBG", "--expect-k", "3", "--expect-d", "2")[0] == 0
    code, out = run("verify", "--graph6", "IUYAHCPBG", "--expect-k", "3", "--expect-d", "3")
    assert code == 1 and out.startswith("FAIL")
    code, _ = run("verify", "--expect-k", "3", stdin="IUYAHCPBG\nA_\n")
    assert code == 1
    assert run("verify", "--expect-k", "3", stdin="IUYAHCPBG\nD}k\nE{Sw\n")[0] == 0


def test_recommend():
    code, out = run("recommend", "--n", "10", "--max-d", "2")
    assert code == 0
    assert out.startswith("n=10 k=3 d=2 comparisons=15 c=15/45")
    code, out = run("recommend", "--n", "20", "--max-d", "2", "--max-comparisons", "40")
    assert code == 1 and "k=5: d=2 with 50 comparisons" in out
    code, raw = run("recommend", "--n", "20", "--max-d", "3", "--json")
    data = json.loads(raw)
    assert (data["k"], data["comparisons"], len(data["pairs"])) == (3, 30, 30)
    code, out = run("recommend", "--n", "5", "--format", "g6")
    assert out.splitlines()[-1] == "D}k"


def test_search_is_reproducible():
    a = run("search", "--n", "12", "--k", "4", "--target-d", "2", "--seed", "7", "--attempts", "16")
    b = run("search", "--n", "12", "--k", "4", "--target-d", "2", "--seed", "7", "--attempts", "16")
    assert a == b and a[0] == 0
    assert "seed=7" in a[1].splitlines()[0]
    _, raw = run("search", "--n", "12", "--k", "4", "--target-d", "2", "--seed", "7", "--attempts", "16", "--json")
    data = json.loads(raw)
    assert data["graphs"] == a[1].splitlines()[1:]


def test_catalog_commands(tmp_path):
    code, out = run("catalog", "export", str(tmp_path))
    assert code == 0 and len(list(tmp_path.iterdir())) == 52
    code, out = run("catalog", "list")
    assert code == 0 and "Clebsch graph" in out and len(out.splitlines()) == 26


def test_usage_errors():
    assert run("bogus")[0] == 2
    assert run("info", "--n", "10")[0] == 2
    assert run("info", "--n", "4", "--k", "4")[0] == 2
    assert run("convert", "--from", "g6", "--to", "edges", stdin="D}\n")[0] == 2
    assert run("catalog", "export")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pcmgraphs", "info", "--n", "16", "--k", "5"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert "Clebsch graph" in proc.stdout
