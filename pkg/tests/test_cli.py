import csv
import json

import pytest

from symprice import io
from symprice.cli import main
from symprice.families import cycle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_text(capsys):
    code, out, _ = run(capsys, "construct", "--family", "cycle:3")
    assert code == 0
    assert io.from_text(out) == cycle(3)


def test_construct_json(capsys):
    code, out, _ = run(capsys, "construct", "--family", "backward:4", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["schema"] == "symprice/1"
    assert obj["graph"]["n"] == 4


def test_price_diameter_backward(capsys):
    code, out, _ = run(capsys, "price", "--family", "backward:6",
                       "--invariant", "diameter")
    assert code == 0
    assert "pos_minus    4" in out


def test_price_json_schema(capsys):
    code, out, _ = run(capsys, "price", "--family", "cycle:4",
                       "--invariant", "transmission", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["schema"] == "symprice/1"
    assert obj["price"]["pos_minus"] == {"num": 8, "den": 1}


def test_invariant_from_file(capsys, tmp_path):
    p = tmp_path / "g.txt"
    io.write_graph_file(cycle(5), p)
    code, out, _ = run(capsys, "invariant", "--in", str(p),
                       "--invariant", "transmission")
    assert code == 0
    assert "50" in out


def test_verify_closed_forms_csv(capsys):
    code, out, _ = run(capsys, "verify-closed-forms", "--max-n", "12")
    assert code == 0
    rows = list(csv.DictReader(out.splitlines()))
    assert rows and all(r["match"] == "True" for r in rows)
    assert {r["parity"] for r in rows} == {"even", "odd"}


def test_kstar(capsys):
    code, out, _ = run(capsys, "kstar", "--n", "11", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["candidates"] == [4, 5]
    assert obj["k_star"] == 4


def test_kstar_domain_error(capsys):
    code, _, err = run(capsys, "kstar", "--n", "7")
    assert code == 2
    assert "11" in err


def test_transform_roundtrip(capsys, tmp_path):
    src = tmp_path / "in.txt"
    dst = tmp_path / "out.txt"
    trace = tmp_path / "trace.json"
    io.write_graph_file(cycle(3).symmetric_closure(), src)
    code, out, _ = run(capsys, "transform", "--rule", "critical",
                       "--in", str(src), "--out", str(dst),
                       "--trace", str(trace))
    assert code == 0
    g = io.parse_graph_file(dst)
    assert g.is_strongly_connected()
    t = json.loads(trace.read_text())
    assert t["schema"] == "symprice/1"
    assert t["pos_after"] >= t["pos_before"]


def test_transform_no_bridge(capsys, tmp_path):
    src = tmp_path / "in.txt"
    io.write_graph_file(cycle(4), src)
    code, _, err = run(capsys, "transform", "--rule", "break-c2",
                       "--in", str(src))
    assert code == 2
    assert "2-cycle" in err


def test_search_exhaustive_report(capsys, tmp_path):
    rep = tmp_path / "report.json"
    code, out, _ = run(capsys, "search", "--mode", "exhaustive", "--n", "4",
                       "--objective", "sigma", "--out", str(rep))
    assert code == 0
    obj = json.loads(rep.read_text())
    assert obj["schema"] == "symprice/1"
    assert obj["best_value"] == 8
    assert io.from_text(obj["maximizers"][0]).n == 4


def test_search_heuristic(capsys):
    code, out, _ = run(capsys, "search", "--mode", "heuristic", "--n", "5",
                       "--objective", "sigma", "--budget", "1200", "--seed", "1")
    assert code == 0
    assert "best sigma price at n=5: 20" in out


def test_verify_theorems_exit_codes(capsys):
    code, out, _ = run(capsys, "verify-theorems", "--n", "4")
    assert code == 0 and "[ok]" in out
    code, out, _ = run(capsys, "verify-theorems", "--n", "3")
    assert code == 3 and "FAIL" in out


def test_verify_conjecture(capsys):
    code, out, _ = run(capsys, "verify-conjecture", "--n", "4", "--json")
    obj = json.loads(out)
    assert code == 0
    assert obj["ok"] and obj["best_value"] == 8


def test_usage_errors(capsys):
    assert main(["price", "--bogus"]) == 1
    assert main(["nope"]) == 1
    code, _, _ = run(capsys, "construct", "--family", "wat:3")
    assert code == 1


def test_domain_error_exit(capsys):
    code, _, err = run(capsys, "price", "--family", "path:4",
                       "--invariant", "transmission")
    assert code == 2
    assert "unreachable" in err
