import csv
import io
import json

import pytest

from cyclic_pairs.cli import (CSV_HEADER, EXIT_CAP, EXIT_OK, EXIT_USAGE,
                              EXIT_VERIFY_FAILED, main)


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(argv, capsys):
    code, out, err = run(argv + ["--json"], capsys)
    assert code == EXIT_OK, err
    return json.loads(out)


def test_factor_text(capsys):
    code, out, _ = run(["factor", "--n", "7"], capsys)
    assert code == EXIT_OK
    assert out.splitlines()[0] == "7 2 0 7"
    assert "x^3 + x^2 + 1 ^ 1" in out


def test_factor_json_and_global_flag_before_subcommand(capsys):
    before = run_json(["--q", "8", "factor", "--n", "7"], capsys)
    after = run_json(["factor", "--n", "7", "--q", "8"], capsys)
    assert before == after
    assert before["q"] == 8 and len(before["factors"]) == 7
    assert all(f["poly"].startswith("x + ") or f["poly"] == "x + 1"
               for f in before["factors"])


def test_cosets(capsys):
    code, out, _ = run(["cosets", "--n", "15"], capsys)
    assert code == EXIT_OK
    assert "{1,2,4,8}" in out
    data = run_json(["cosets", "--n", "15"], capsys)
    assert [c["rep"] for c in data["cosets"]] == [0, 1, 3, 5, 7]


def test_cosets_strips_radical_part(capsys):
    code, out, _ = run(["cosets", "--n", "14"], capsys)
    assert code == EXIT_OK
    assert out.startswith("# n = 14 = 2^1 * 7")


def test_code_with_distance_and_dual(capsys):
    code, out, _ = run(["code", "--n", "7", "--g", "x^3+x+1",
                        "--min-distance"], capsys)
    assert code == EXIT_OK and out.strip().startswith("[7,4,3]_2")
    data = run_json(["code", "--n", "7", "--g", "x^3+x+1", "--dual",
                     "--min-distance"], capsys)
    assert (data["k"], data["d"]) == (3, 4)


def test_pair_json_schema(capsys):
    data = run_json(["pair", "--n", "7", "--g1", "x^3+x+1",
                     "--g2", "x^3+x^2+1", "--distances"], capsys)
    assert set(data) == {"n", "q", "codes", "ell", "sum_dim"}
    assert data["n"] == 7 and data["q"] == 2
    assert data["ell"] == 1 and data["sum_dim"] == 7
    assert [c["k"] for c in data["codes"]] == [4, 4]
    assert all(set(c) == {"k", "d", "g"} for c in data["codes"])


def test_exists_feasible_and_not(capsys):
    code, out, _ = run(["exists", "--n", "7", "--ell", "4"], capsys)
    assert code == EXIT_OK and out.startswith("feasible witness=")
    data = run_json(["exists", "--n", "9", "--ell", "4"], capsys)
    assert data["feasible"] is False and data["witness"] is None


def test_construct_L(capsys):
    data = run_json(["construct", "--mode", "L", "--n", "7", "--L", "x+1",
                     "--g1", "x^3+x+1", "--g2", "x^3+x+1"], capsys)
    assert data["exact"] is True and data["ell"] == 1
    assert data["construction"]["mode"] == "L"
    assert data["construction"]["range"] == [1, 4]


def test_construct_repeated(capsys):
    code, out, _ = run(["construct", "--mode", "repeated", "--n-prime", "7",
                        "--nu", "1", "--L", "x+1", "--g1", "x^3+x+1",
                        "--g2", "x^3+x+1", "--s", "2"], capsys)
    assert code == EXIT_OK
    assert "ell=2" in out and "exact" in out


def test_construct_mds(capsys):
    data = run_json(["--q", "8", "construct", "--mode", "mds", "--n", "7",
                     "--k1", "2", "--k2", "3", "--ell", "1",
                     "--distances"], capsys)
    assert data["exact"] is True and data["ell"] == 1
    assert [c["d"] for c in data["codes"]] == [6, 5]
    assert "alpha" in data["construction"]


def test_construct_missing_argument_is_usage_error(capsys):
    code, _, err = run(["construct", "--mode", "L", "--n", "7"], capsys)
    assert code == EXIT_USAGE and "--L" in err


def test_search_text_and_csv(capsys):
    code, out, _ = run(["search", "--n", "7", "--ell", "0",
                        "--min-d1", "3", "--min-d2", "3"], capsys)
    assert code == EXIT_OK and "ell=0" in out
    code, out, _ = run(["search", "--n", "7", "--ell", "0", "--csv"], capsys)
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == CSV_HEADER
    assert all(len(r) == 9 for r in rows[1:]) and len(rows) > 1
    assert all(r[0] == "7" and r[1] == "2" for r in rows[1:])


def test_search_infeasible(capsys):
    code, out, _ = run(["search", "--n", "9", "--ell", "4"], capsys)
    assert code == EXIT_OK and out.startswith("infeasible")


def test_verify_tables_bundled(capsys):
    code, out, _ = run(["verify-tables"], capsys)
    assert code == EXIT_OK
    assert out.count("PASS") == 42 and "FAIL" not in out
    assert "# 42 passed, 0 failed" in out


def test_verify_tables_failure_exit(tmp_path, capsys):
    bad = tmp_path / "rows.txt"
    bad.write_text("7 2 4 4 3 4 1 | x^3+x+1 | x^4+x^2+x+1\n")
    code, out, _ = run(["verify-tables", "--file", str(bad)], capsys)
    assert code == EXIT_VERIFY_FAILED
    assert "FAIL" in out and "dist_c" in out


def test_cap_exit_code(capsys):
    code, _, err = run(["code", "--n", "31", "--g", "x+1", "--min-distance",
                        "--cap", "1024"], capsys)
    assert code == EXIT_CAP and "cap" in err


def test_usage_errors(capsys):
    code, _, err = run(["factor", "--n", "7", "--q", "6"], capsys)
    assert code == EXIT_USAGE and err.startswith("error:")
    code, _, err = run(["code", "--n", "7", "--g", "x^2+1"], capsys)
    assert code == EXIT_USAGE
    code, _, err = run(["code", "--n", "7", "--g", "x^^"], capsys)
    assert code == EXIT_USAGE


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_threads_flag_accepted_everywhere(capsys):
    a = run_json(["--threads", "4", "pair", "--n", "7", "--g1", "x+1",
                  "--g2", "x+1"], capsys)
    b = run_json(["pair", "--n", "7", "--g1", "x+1", "--g2", "x+1",
                  "--threads", "2"], capsys)
    assert a == b
