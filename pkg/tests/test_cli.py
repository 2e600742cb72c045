import json
import subprocess
import sys

import pytest

from apnlike.cli import EXIT_BUDGET, EXIT_CLAIM, EXIT_OK, EXIT_USAGE, main

EVEN_F = "x^2*y^4 + x*y^4 + x^2*y^2 + x*y^2 + y^2 + x + 1"
EVEN_G = "y^2*x^4 + y*x^4 + y^2*x^2 + y*x^2 + x^2 + y + 1"
ODD_F = "x^2*y^2 + x*y^2 + x^2*y + x*y + y + x + 1"

CASES = {
    "field_n8": (["field", "--n", "8"], EXIT_OK),
    "analyze_n8_d15_bu": (["analyze", "--n", "8", "--d", "15", "--bu"], EXIT_OK),
    "analyze_n10_d219_json": (["analyze", "--n", "10", "--d", "219", "--format", "json"], EXIT_OK),
    "verify_f1_n8_bu": (["verify", "f1", "--n", "8", "--bu"], EXIT_OK),
    "verify_t33_2_n7": (["verify", "t33_2", "--n", "7"], EXIT_OK),
    "scan_n4": (["scan", "--n", "4", "--bu"], EXIT_OK),
    "scan_n4_csv": (["scan", "--n", "4", "--format", "csv"], EXIT_OK),
    "coverage_n8_bu2": (["coverage", "--n", "8", "--claim", "bu=2 & !apn"], EXIT_OK),
    "coverage_n10_closure": (["coverage", "--n", "10", "--claim", "locally_apn & !apn", "--closure",
                              "--expect-unexplained", "219"], EXIT_OK),
    "coverage_n10_f1f2": (["coverage", "--n", "10", "--claim", "locally_apn & !apn",
                           "--families", "f1,f2", "--expect-unexplained", "219"], EXIT_CLAIM),
    "dickson_t1": (["dickson", "--check-t1", "--m", "4", "--j", "3"], EXIT_OK),
    "dickson_field": (["dickson", "--n", "3", "--k", "5", "--coeffs"], EXIT_OK),
    "resultant_odd": (["resultant", "--f", ODD_F, "--g", EVEN_G,
                       "--expect", "x^2*(x+1)^2*(x^3+x+1)*(x^3+x^2+1)"], EXIT_OK),
    "resultant_even_printed_form": (["resultant", "--f", EVEN_F, "--g", EVEN_G,
                                     "--expect", "x^2*(x+1)^2*(x^2+x+1)^3*(x^3+x+1)*(x^3+x^2+1)"],
                                    EXIT_CLAIM),
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_transcripts(name, capsys, golden):
    argv, code = CASES[name]
    assert main(argv) == code
    golden(f"cli_{name}", {"argv": argv, "exit": code, "stdout": capsys.readouterr().out.splitlines()})


@pytest.mark.parametrize("argv,code", [
    (["analyze", "--n", "8", "--d", "0"], EXIT_USAGE),
    (["analyze", "--n", "30", "--d", "3"], EXIT_USAGE),
    (["analyze", "--n", "15", "--d", "3", "--bu"], EXIT_BUDGET),
    (["scan", "--n", "13", "--bu"], EXIT_BUDGET),
    (["scan", "--n", "15"], EXIT_BUDGET),
    (["coverage", "--n", "13", "--claim", "bu=2 & !apn"], EXIT_BUDGET),
    (["coverage", "--n", "8", "--claim", "wibble"], EXIT_USAGE),
    (["coverage", "--n", "8", "--claim", "apn", "--families", "nope"], EXIT_USAGE),
    (["verify", "welch", "--n", "8"], EXIT_USAGE),
    (["verify", "nope", "--n", "8"], EXIT_USAGE),
    (["dickson", "--check-t1", "--m", "4"], EXIT_USAGE),
    (["dickson", "--n", "3", "--k", "5", "--a", "0"], EXIT_USAGE),
    (["resultant", "--f", "x^", "--g", "y"], EXIT_USAGE),
    (["bogus"], EXIT_USAGE),
    ([], EXIT_USAGE),
])
def test_exit_codes(argv, code, capsys):
    assert main(argv) == code


def test_scan_json_roundtrip(tmp_path):
    from apnlike.scan import ScanReport

    out = tmp_path / "scan.json"
    assert main(["scan", "--n", "6", "--bu", "--format", "json", "--out", str(out), "--threads", "2"]) == 0
    text = out.read_text()
    rep = ScanReport.from_dict(json.loads(text))
    assert rep.to_json() + "\n" == text
    assert rep.row(15).bu == 10


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "apnlike", "analyze", "--n", "5", "--d", "3",
                           "--format", "json"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["is_apn"] is True
