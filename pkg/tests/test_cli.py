import json
from pathlib import Path

import pytest

from fourgeo.cli import main

KN_SCRIPT = str(Path(__file__).resolve().parent.parent / "scripts" / "kn.geo")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_symbolic_prints_closed_forms(capsys):
    code, out, _ = run(capsys, "build", KN_SCRIPT, "--symbolic")
    assert code == 0
    assert "c2    = n^7 + 12*n^5 - 12*n^4 + 6*n^3 + 22" in out
    assert "c1^2  = 3*n^7 + 20*n^5 - 24*n^4 + 6*n^3 + 2" in out
    assert "chi_h = 1/3*n^7 + 8/3*n^5 - 3*n^4 + n^3 + 2" in out
    assert "sigma = 1/3*n^7 - 4/3*n^5 - 2*n^3 - 14" in out


def test_build_defaults_to_symbolic(capsys):
    _, out_default, _ = run(capsys, "build", KN_SCRIPT)
    _, out_symbolic, _ = run(capsys, "build", KN_SCRIPT, "--symbolic")
    assert out_default == out_symbolic


def test_build_numeric(capsys):
    code, out, _ = run(capsys, "build", KN_SCRIPT, "--n", "3")
    assert code == 0
    assert "chi_h = 1163" in out
    assert "sigma = 337" in out


def test_build_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.geo"
    bad.write_text("let Z = blowup(\n")
    code, _, err = run(capsys, "build", str(bad))
    assert code == 2
    assert "line 1" in err


def test_build_constraint_violation_exit_1(capsys, tmp_path):
    script = tmp_path / "clash.geo"
    script.write_text(
        "let A = surface(genus=1, self_int=0)\n"
        "let B = surface(genus=2, self_int=0)\n"
        "report fiber_sum(T4, A, T4, B)\n"
    )
    code, _, err = run(capsys, "build", str(script))
    assert code == 1
    assert "genus mismatch" in err


def test_build_missing_file_exit_2(capsys):
    code, _, err = run(capsys, "build", "no/such/file.geo")
    assert code == 2
    assert err


def test_usage_error_exit_2(capsys):
    with pytest.raises(SystemExit) as exit_info:
        main(["geography", "--n-min", "2"])  # --n-max missing
    assert exit_info.value.code == 2


def test_geography_csv(capsys, tmp_path):
    out_csv = tmp_path / "out.csv"
    code, _, _ = run(capsys, "geography", "--n-min", "2", "--n-max", "6",
                     "--csv", str(out_csv))
    assert code == 0
    lines = out_csv.read_text().split("\n")
    assert lines[0] == "n,e,sigma,c1sq,chi_h,ratio,bmy_gap,side"
    assert lines[-1] == ""  # single trailing LF
    rows = [line.split(",") for line in lines[1:-1]]
    assert len(rows) == 5
    by_n = {int(r[0]): r for r in rows}
    assert by_n[4][4] == "7490"
    for r in rows:
        n, e, sigma, c1sq, chi_h, ratio, gap, side = r
        assert int(c1sq) == 3 * int(sigma) + 2 * int(e)
        assert 4 * int(chi_h) == int(sigma) + int(e)
        assert int(gap) == 9 * int(chi_h) - int(c1sq)
        assert side == "below"
        assert len(ratio.split(".")[1]) == 6


def test_geography_stdout_and_range_validation(capsys):
    code, out, _ = run(capsys, "geography", "--n-min", "2", "--n-max", "3")
    assert code == 0
    assert out.startswith("n,e,sigma,")
    code, _, err = run(capsys, "geography", "--n-min", "1", "--n-max", "3")
    assert code == 2
    code, _, err = run(capsys, "geography", "--n-min", "5", "--n-max", "3")
    assert code == 2


def test_geography_deterministic_bytes(capsys, tmp_path):
    paths = []
    for run_index in (1, 2):
        csv_path = tmp_path / f"run{run_index}.csv"
        svg_path = tmp_path / f"run{run_index}.svg"
        run(capsys, "geography", "--n-min", "2", "--n-max", "5",
            "--csv", str(csv_path), "--svg", str(svg_path))
        paths.append((csv_path.read_bytes(), svg_path.read_bytes()))
    assert paths[0] == paths[1]


def test_geography_svg_structure(capsys, tmp_path):
    svg_path = tmp_path / "plot.svg"
    run(capsys, "geography", "--n-min", "2", "--n-max", "6", "--svg", str(svg_path))
    svg = svg_path.read_text()
    assert svg.startswith("<svg ")
    assert svg.rstrip().endswith("</svg>")
    assert svg.count("<circle ") == 5
    assert "c1^2 = 8*chi_h" in svg and "c1^2 = 9*chi_h" in svg
    assert ">n=4<" in svg


def test_verify_paper_passes_with_warning(capsys):
    code, out, _ = run(capsys, "verify-paper", "--n-max", "10")
    assert code == 0
    assert "[FAIL]" not in out
    assert "warnings:" in out
    assert "227" in out
    assert "337" in out


def test_verify_paper_json(capsys):
    code, out, _ = run(capsys, "verify-paper", "--json", "--n-max", "6")
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list)
    for entry in payload:
        assert set(entry) == {"name", "expected", "got", "pass", "note"}
        assert entry["pass"] is True
    sigma_rows = [e for e in payload if e["name"] == "table n=3: sigma"]
    assert len(sigma_rows) == 1
    assert sigma_rows[0]["got"] == "337"
    assert "227" in sigma_rows[0]["note"]


def test_verify_paper_deterministic(capsys):
    _, first, _ = run(capsys, "verify-paper", "--n-max", "8")
    _, second, _ = run(capsys, "verify-paper", "--n-max", "8")
    assert first == second


def test_exotic_report(capsys):
    code, out, _ = run(capsys, "exotic", "--n", "3", "--count", "4")
    assert code == 0
    assert "symplectic candidates: 4; non-symplectic candidates: 4" in out
    assert "pairwise distinct" in out
    assert "torus(2,3)" in out and "twist(2)" in out


def test_exotic_validation(capsys):
    code, _, err = run(capsys, "exotic", "--n", "1", "--count", "4")
    assert code == 2
    code, _, err = run(capsys, "exotic", "--n", "3", "--count", "0")
    assert code == 2
