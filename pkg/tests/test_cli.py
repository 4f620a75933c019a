from __future__ import annotations

import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from mackit.cli import main
from mackit.coeff import CyclotomicScalar, RationalFunctionQT, q, t
from mackit.errors import NonInvertibleDenominator
from mackit.macdonald import KostkaMatrix
from mackit.partitions import Partition, partitions
from mackit.symfun import SymFunc, s

GOLDEN = Path(__file__).parent / "golden"
R = RationalFunctionQT


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def decode(text: str) -> SymFunc:
    data = json.loads(text)
    return SymFunc.from_json({"basis": data["basis"], "terms": data["terms"]})


# --- expand -----------------------------------------------------------------


def test_expand_Qprime_at_cube_root(capsys, tmp_path):
    code, out, _ = run(capsys, "expand", "Qprime", "[2,2,2]", "--basis", "s", "--at-root", "3", "--cache-dir", str(tmp_path))
    assert code == 0
    assert out == (GOLDEN / "expand_Qprime_222_root3.json").read_text()
    expected = s([6]) - s([5, 1]) + s([4, 1, 1]) + s([3, 3]) - s([3, 2, 1]) + s([2, 2, 2])
    assert decode(out) == expected
    assert json.loads(out)["root_order"] == 3


def test_expand_P_one(capsys):
    code, out, _ = run(capsys, "expand", "P", "[1]", "--basis", "m", "--no-cache")
    data = json.loads(out)
    assert code == 0 and data["basis"] == "m" and len(data["terms"]) == 1
    assert data["terms"][0]["part"] == [1] and R.from_json(data["terms"][0]["coeff"]) == R(1)


def test_expand_Htilde_two_two(capsys, tmp_path):
    code, out, _ = run(capsys, "expand", "Htilde", "[2,2]", "--cache-dir", str(tmp_path))
    assert code == 0
    assert out == (GOLDEN / "expand_Htilde_22.json").read_text()
    expected = {
        (4,): R(1),
        (3, 1): R(q + t + q * t),
        (2, 2): R(q ** 2 + t ** 2),
        (2, 1, 1): R(q * t + q ** 2 * t + q * t ** 2),
        (1, 1, 1, 1): R(q ** 2 * t ** 2),
    }
    assert {tuple(lam): c for lam, c in decode(out).items()} == expected


@pytest.mark.parametrize("fmt", ["json", "csv", "pretty"])
def test_expand_formats_are_deterministic(capsys, tmp_path, fmt):
    args = ("expand", "J", "[2,1]", "--format", fmt, "--cache-dir", str(tmp_path))
    first = run(capsys, *args)
    second = run(capsys, *args)
    assert first == second and first[0] == 0


def test_csv_expansion_rows(capsys):
    _, out, _ = run(capsys, "expand", "Htilde", "[1,1]", "--format", "csv", "--no-cache")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["partition", "coefficient"], ["[2]", "1"], ["[1,1]", "t"]]


# --- errors and exit codes --------------------------------------------------


@pytest.mark.parametrize("text,fragment", [
    ("[2,x]", "entry 1"),
    ("[1,2]", "entry 1"),
    ("[3,0]", "entry 1"),
    ("2,1", "bracketed"),
])
def test_invalid_partition_is_usage_error(capsys, text, fragment):
    code, out, err = run(capsys, "expand", "P", text, "--no-cache")
    assert code == 2 and out == ""
    assert fragment in err


def test_budget_exceeded(capsys):
    code, _, err = run(capsys, "expand", "P", "[13]", "--no-cache")
    assert code == 3 and "budget" in err
    code, _, _ = run(capsys, "kostka", "Ktilde", "9", "--no-cache")
    assert code == 3
    code, _, _ = run(capsys, "expand", "P", "[3]", "--budget", "2", "--no-cache")
    assert code == 3


def test_non_invertible_root_is_usage_error(capsys, monkeypatch):
    # Macdonald coefficients only have denominators involving q, so force the failure
    import mackit.cli as cli

    def boom(f, l):
        raise NonInvertibleDenominator("denominator vanishes", order=l, partition=Partition([2, 1]))

    monkeypatch.setattr(cli, "specialize_at_root", boom)
    code, out, err = run(capsys, "expand", "P", "[2,1]", "--at-root", "3", "--no-cache")
    assert code == 2 and out == "" and "partition [2, 1]" in err


def test_argparse_errors_exit_two():
    with pytest.raises(SystemExit) as info:
        main(["expand", "Nope", "[1]"])
    assert info.value.code == 2


def test_verification_failure_exit_code(capsys, monkeypatch):
    import mackit.cli as cli
    from mackit.roots import verify_congruence

    monkeypatch.setattr(cli, "claims", lambda suite, budget: [("congruence", {"r": 1, "l": 2})])
    monkeypatch.setattr(cli, "run_claim", lambda claim: verify_congruence(1, 2, signed=False))
    code, out, _ = run(capsys, "verify", "congruence", "--format", "pretty")
    assert code == 1
    assert out.startswith("FAIL") and "lhs=" in out and "0/1 claims passed" in out


# --- kostka -----------------------------------------------------------------


def test_kostka_Ktilde_two(capsys, tmp_path):
    code, out, _ = run(capsys, "kostka", "Ktilde", "2", "--cache-dir", str(tmp_path))
    km = KostkaMatrix.from_json(json.loads(out))
    # rows are lambda, columns are mu: H~_(2) = s_2 + q s_11, H~_(11) = s_2 + t s_11
    assert code == 0 and km.matrix() == [[R(1), R(1)], [R(q), R(t)]]
    assert km[Partition([1, 1]), Partition([2])] == R(q)
    _, out, _ = run(capsys, "kostka", "Ktilde", "2", "--format", "csv", "--cache-dir", str(tmp_path))
    assert out == (GOLDEN / "kostka_Ktilde_2.csv").read_text()


def test_kostka_Kprime_one(capsys):
    code, out, _ = run(capsys, "kostka", "Kprime", "1", "--no-cache")
    assert code == 0 and KostkaMatrix.from_json(json.loads(out)).matrix() == [[R(1)]]


def test_kostka_K_two(capsys):
    _, out, _ = run(capsys, "kostka", "K", "2", "--no-cache")
    # J_(2) = S_2 + q S_11 and J_(11) = t S_2 + S_11 in the dual Schur basis S_lam = s_lam[X(1-t)]
    km = KostkaMatrix.from_json(json.loads(out))
    assert km.matrix() == [[R(1), R(t)], [R(q), R(1)]]


def test_kostka_at_cube_root_entry(capsys, tmp_path):
    code, out, _ = run(capsys, "kostka", "Ktilde", "6", "--at-root", "3", "--cache-dir", str(tmp_path))
    km = KostkaMatrix.from_json(json.loads(out))
    assert code == 0 and km.root_order == 3
    assert len(km.rows) == len(km.cols) == len(partitions(6))
    entry = km[Partition([2, 2, 2]), Partition([2, 2, 2])]
    assert entry == CyclotomicScalar(3, 1 + q ** 3)


# --- specialize and character -------------------------------------------------


def test_specialize_one_row(capsys):
    code, out, _ = run(capsys, "specialize", "P", "[2]", "--length", "2", "--no-cache")
    data = json.loads(out)
    # P_(2) = m_2 + (1+q)(1-t)/(1-qt) m_11, and on (1, t) m_2 = 1 + t^2, m_11 = t
    expected = R(1 + t ** 2) + R((1 + q) * (1 - t), 1 - q * t) * t
    assert code == 0 and R.from_json(data["value"]) == expected


def test_specialize_at_root(capsys):
    code, out, _ = run(capsys, "specialize", "Qprime", "[2,2,2]", "--length", "3", "--at-root", "--no-cache")
    data = json.loads(out)
    assert code == 0 and data["root_order"] == 3
    # p_3 o h_2 evaluated on (1, j, j^2) is h_2(1, 1, 1) = 6
    assert R.from_json(data["value"]) == R(6)


def test_character_command(capsys):
    code, out, _ = run(capsys, "character", "6", "2", "--basis", "s", "--format", "csv")
    rows = dict(list(csv.reader(io.StringIO(out)))[1:])
    assert code == 0
    assert rows == {"[5,1]": "1", "[4,2]": "2", "[4,1,1]": "1", "[3,2,1]": "3", "[3,1,1,1]": "2",
                    "[2,2,2]": "1", "[2,2,1,1]": "1", "[2,1,1,1,1]": "1"}
    code, _, _ = run(capsys, "character", "3", "3")
    assert code == 2


# --- verify -----------------------------------------------------------------


def test_verify_plethysm_budget_six(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "plethysm", "--budget", "6", "--cache-dir", str(tmp_path))
    assert code == 0
    assert out == (GOLDEN / "verify_plethysm_6.jsonl").read_text()
    reports = [json.loads(line) for line in out.splitlines()]
    triples = {(r["params"]["r"], r["params"]["l"], r["params"]["d"]) for r in reports if r["claim"] == "rectangular-plethysm"}
    expected = {(r, l, d) for r in range(1, 7) for l in range(1, 7) if r * l <= 6 for d in range(1, l + 1) if l % d == 0}
    assert triples == expected
    assert all(r["status"] == "pass" and r["elapsed_ms"] is None for r in reports)


def test_verify_all_budget_one(capsys):
    code, out, _ = run(capsys, "verify", "all", "--budget", "1", "--no-cache", "--format", "pretty")
    assert code == 0 and out.rstrip().endswith("claims passed")
    assert "FAIL" not in out


def test_verify_kostka_congruence_includes_cube_root_fixture(capsys):
    code, out, _ = run(capsys, "verify", "kostka-congruence", "--budget", "6", "--no-cache")
    reports = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and all(r["status"] == "pass" for r in reports)
    assert {"claim": "kostka-congruence", "params": {"mu": [2, 2, 2], "nu": [2], "l": 3}} in [
        {"claim": r["claim"], "params": r["params"]} for r in reports
    ]


def test_verify_timings_flag(capsys):
    _, out, _ = run(capsys, "verify", "orthogonality", "--budget", "2", "--timings", "--no-cache")
    assert all(isinstance(json.loads(line)["elapsed_ms"], float) for line in out.splitlines())


def test_parallel_verify_matches_serial(capsys, tmp_path):
    serial = run(capsys, "verify", "factorization", "--budget", "5", "--cache-dir", str(tmp_path))
    parallel = run(capsys, "verify", "factorization", "--budget", "5", "--jobs", "3", "--cache-dir", str(tmp_path))
    assert serial == parallel and serial[0] == 0


# --- cache ------------------------------------------------------------------


def test_warm_cache_output_is_byte_identical(capsys, tmp_path):
    cold = run(capsys, "kostka", "Ktilde", "4", "--cache-dir", str(tmp_path))
    stats = json.loads(run(capsys, "cache", "stats", "--cache-dir", str(tmp_path))[1])
    assert stats["total_entries"] > 0 and stats["files"]
    warm = run(capsys, "kostka", "Ktilde", "4", "--cache-dir", str(tmp_path))
    uncached = run(capsys, "kostka", "Ktilde", "4", "--no-cache")
    assert cold == warm == uncached


def test_cache_env_var_and_clear(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MACKIT_CACHE", str(tmp_path))
    run(capsys, "expand", "Qprime", "[2,1]")
    stats = json.loads(run(capsys, "cache", "stats")[1])
    assert stats["directory"] == str(tmp_path) and stats["total_entries"] >= 1
    cleared = json.loads(run(capsys, "cache", "clear")[1])
    assert cleared["removed_files"] == len(stats["files"])
    assert json.loads(run(capsys, "cache", "stats")[1])["total_entries"] == 0


def test_no_cache_writes_nothing(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("MACKIT_CACHE", str(tmp_path))
    run(capsys, "expand", "Qprime", "[2,1]", "--no-cache")
    assert not any(tmp_path.iterdir())


# --- entry points -----------------------------------------------------------


def test_module_entry_point(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "mackit", "expand", "Qprime", "[2,2,2]", "--at-root", "3", "--cache-dir", str(tmp_path)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "expand_Qprime_222_root3.json").read_text()
    proc = subprocess.run([sys.executable, "-m", "mackit", "expand", "P", "[1,2]"], capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and "entry 1" in proc.stderr
