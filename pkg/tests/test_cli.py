"""CLI behavior: outputs, formats, exit codes, determinism."""

import csv
import io
import json

from dompoly.cli import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_PARSE,
    export_limits_csv,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_family_all_methods(capsys):
    code, out, _ = run(capsys, "poly", "--family", "friendship:2",
                       "--method", "all")
    assert code == EXIT_OK
    assert "x + 8x^2 + 10x^3 + 5x^4 + x^5" in out
    assert "verdict: AGREE" in out
    assert "closed:" in out and "brute:" in out


def test_poly_graph6(capsys):
    code, out, _ = run(capsys, "poly", "--graph6", "A_")
    assert code == EXIT_OK
    assert "2x + x^2" in out


def test_poly_book_closed(capsys):
    code, out, _ = run(capsys, "poly", "--family", "book:3")
    assert code == EXIT_OK
    assert "closed:" in out


def test_poly_json_and_csv(capsys):
    code, out, _ = run(capsys, "poly", "--family", "friendship:2",
                       "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload[0]["polynomials"]["closed"]["coefficients"] == "0,1,8,10,5,1"
    code, out, _ = run(capsys, "poly", "--family", "friendship:2",
                       "--format", "csv", "--method", "all")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["input", "method", "degree", "coefficients"]
    assert len(rows) == 5


def test_poly_bad_inputs(capsys):
    code, _, err = run(capsys, "poly", "--graph6", "A" + chr(20))
    assert code == EXIT_PARSE and "error" in err
    code, _, err = run(capsys, "poly", "--family", "nosuch:3")
    assert code == EXIT_PARSE
    code, _, err = run(capsys, "poly", "--family", "friendship:0")
    assert code == EXIT_PARSE


def test_poly_budget_exit(capsys):
    code, _, err = run(capsys, "poly", "--family", "friendship:20",
                       "--method", "brute")
    assert code == EXIT_BUDGET
    assert "budget" in err


def test_poly_closed_unavailable_for_graph(capsys):
    code, _, err = run(capsys, "poly", "--graph6", "A_", "--method", "closed")
    assert code == EXIT_PARSE


def test_poly_graph6_file(tmp_path, capsys):
    path = tmp_path / "two.g6"
    path.write_text("A_\nB?\n")
    code, out, _ = run(capsys, "poly", "--graph6-file", str(path))
    assert code == EXIT_OK
    assert "# A_" in out and "# B?" in out
    assert "x^3" in out  # 3K1 has polynomial x^3


def test_roots_real_only_matches_reference(capsys):
    code, out, _ = run(capsys, "roots", "--family", "friendship:4",
                       "--real-only")
    assert code == EXIT_OK
    assert "-1.683727169" in out
    assert "-0.231617585" in out
    assert "(exact 0)" in out


def test_roots_full_text(capsys):
    code, out, _ = run(capsys, "roots", "--family", "friendship:2")
    assert code == EXIT_OK
    assert "zero multiplicity: 1" in out
    assert "integer roots: 0" in out
    assert "complex roots" in out


def test_roots_json(capsys):
    code, out, _ = run(capsys, "roots", "--family", "friendship:2",
                       "--format", "json", "--precision", "128")
    assert code == EXIT_OK
    payload = json.loads(out)
    entry = payload[0]
    assert entry["precision_bits"] == 128
    assert entry["zero_multiplicity"] == 1
    assert len(entry["complex_roots"]) == 4
    assert entry["integer_roots"] == [0]
    lo = entry["real_roots"][0]["lo"]
    assert "/" in lo  # exact rational endpoint


def test_roots_csv_counts_multiplicity(capsys):
    code, out, _ = run(capsys, "roots", "--family", "friendship:2",
                       "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["re", "im", "residual"]
    assert len(rows) - 1 == 5  # degree 5: zero root + 4 cofactor roots


def test_roots_deterministic(capsys):
    args = ("roots", "--family", "friendship:5", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_precision_env_var(capsys, monkeypatch):
    monkeypatch.setenv("DOMPOLY_PRECISION", "128")
    code, out, _ = run(capsys, "roots", "--family", "friendship:2",
                       "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)[0]["precision_bits"] == 128
    monkeypatch.setenv("DOMPOLY_PRECISION", "banana")
    code, _, err = run(capsys, "roots", "--family", "friendship:2")
    assert code == EXIT_PARSE


def test_output_file(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "poly", "--family", "friendship:2",
                       "--format", "json", "--output", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert json.loads(target.read_text())[0]["verdict"] == "AGREE"


def test_limits_export_csv(tmp_path, capsys):
    code, out, _ = run(capsys, "limits", "--family", "friendship",
                       "--n-max", "4", "--export", "csv",
                       "--output-dir", str(tmp_path), "--precision", "128",
                       "--samples", "101")
    assert code == EXIT_OK
    scatter = (tmp_path / "friendship_scatter.csv").read_text()
    curve = (tmp_path / "friendship_curve.csv").read_text()
    srows = list(csv.reader(io.StringIO(scatter)))
    crows = list(csv.reader(io.StringIO(curve)))
    assert srows[0] == ["re", "im", "residual"]
    assert crows[0] == ["re", "im", "piece"]
    # scatter rows = total degree of members 1..4 = 3+5+7+9
    assert len(srows) - 1 == 24
    assert {row[2] for row in crows[1:]} == {"hyperbola", "isolated"}
    assert "max root modulus" in out


def test_limits_export_deterministic():
    bufs = []
    for _ in range(2):
        scatter, curve = io.StringIO(), io.StringIO()
        export_limits_csv("friendship", 5, scatter, curve, precision=128,
                          samples=101)
        bufs.append((scatter.getvalue(), curve.getvalue()))
    assert bufs[0] == bufs[1]


def test_limits_book_export(tmp_path, capsys):
    code, _, _ = run(capsys, "limits", "--family", "book", "--n-max", "3",
                     "--export", "csv", "--output-dir", str(tmp_path),
                     "--precision", "128", "--samples", "64")
    assert code == EXIT_OK
    crows = list(csv.reader(io.StringIO(
        (tmp_path / "book_curve.csv").read_text())))
    pieces = {row[2] for row in crows[1:]}
    assert {"circle", "hyperbola", "modulus-balance", "isolated"} <= pieces


def test_limits_trace_method(tmp_path, capsys):
    code, _, _ = run(capsys, "limits", "--family", "friendship", "--n-max", "2",
                     "--export", "csv", "--output-dir", str(tmp_path),
                     "--method", "trace", "--grid=-3:1:-2:2",
                     "--resolution", "40", "--precision", "128")
    assert code == EXIT_OK
    crows = list(csv.reader(io.StringIO(
        (tmp_path / "friendship_curve.csv").read_text())))
    assert any(row[2].startswith("equimodular") for row in crows[1:])


def test_limits_json_export(tmp_path, capsys):
    code, _, _ = run(capsys, "limits", "--family", "friendship", "--n-max", "2",
                     "--export", "json", "--output-dir", str(tmp_path),
                     "--precision", "128", "--samples", "33")
    assert code == EXIT_OK
    payload = json.loads((tmp_path / "friendship_limits.json").read_text())
    assert payload["family"] == "friendship"
    assert payload["precision_bits"] == 128
    assert payload["curve"][0]["piece"] == "hyperbola"
    assert len(payload["scatter"]) == 8  # degrees 3 + 5


def test_equiv_bundled_order(capsys):
    code, out, _ = run(capsys, "equiv", "--order", "4", "--format", "json")
    assert code == EXIT_OK
    payload = json.loads(out)
    assert payload["graph_count"] == 11
    assert payload["class_count"] == 10
    assert payload["non_unique_count"] == 2
    code, out, _ = run(capsys, "equiv", "--order", "4", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["order", "graphs", "classes", "non_unique"]
    assert rows[1] == ["4", "11", "10", "2"]


def test_equiv_catalog_file(tmp_path, capsys):
    from dompoly.graphs import FamilySpec, build_family, write_graph6

    lines = [write_graph6(build_family(FamilySpec("friendship", 2))),
             write_graph6(build_family(FamilySpec("book_contracted", 2)))]
    path = tmp_path / "pair.g6"
    path.write_text("\n".join(lines) + "\n")
    code, out, _ = run(capsys, "equiv", "--catalog", str(path))
    assert code == EXIT_OK
    assert "non-unique graphs: 2" in out
    assert "witness" in out


def test_equiv_missing_file(capsys):
    code, _, err = run(capsys, "equiv", "--catalog", "/nonexistent/x.g6")
    assert code == EXIT_PARSE


def test_malformed_grid(capsys):
    code, _, err = run(capsys, "limits", "--family", "friendship",
                       "--n-max", "1", "--method", "trace", "--grid", "bogus")
    assert code == EXIT_PARSE


def test_empty_graph6_file(tmp_path, capsys):
    path = tmp_path / "empty.g6"
    path.write_text("\n")
    code, _, err = run(capsys, "poly", "--graph6-file", str(path))
    assert code == EXIT_PARSE
    assert "no graphs" in err


def test_roots_graph6_file(tmp_path, capsys):
    path = tmp_path / "two.g6"
    path.write_text("A_\nBw\n")  # an edge and a triangle
    code, out, _ = run(capsys, "roots", "--graph6-file", str(path),
                       "--precision", "128")
    assert code == EXIT_OK
    assert out.count("# ") == 2
    assert "integer roots: 0" in out


def test_poly_method_all_requires_enumeration_budget(capsys):
    code, _, err = run(capsys, "poly", "--family", "friendship:50",
                       "--method", "all")
    assert code == EXIT_BUDGET
    assert "closed" in err
