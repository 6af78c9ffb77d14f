import json

import pytest

from padiclift.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_teich_example(capsys):
    rc, out, err = run(capsys, "teich", "-p", "5", "-N", "2", "-v", "2")
    assert rc == 0
    payload = json.loads(out)
    assert payload["digits"] == [2, 1]
    assert payload["p"] == 5 and payload["N"] == 2
    assert "7" in err


def test_teich_extension_field(capsys):
    rc, out, _ = run(capsys, "teich", "-p", "3", "-n", "2", "-N", "2", "-v", "0,1")
    assert rc == 0
    payload = json.loads(out)
    assert payload["n"] == 2 and len(payload["coeffs"]) == 2


def test_fermat_example(capsys):
    rc, out, _ = run(capsys, "fermat-count", "-q", "5", "-m", "2")
    assert rc == 0
    payload = json.loads(out)
    assert payload["brute"] == 4 and payload["jacobi"] == 4 and payload["match"]


def test_fermat_alias(capsys):
    rc, out, _ = run(capsys, "fermat", "-q", "7", "-m", "3")
    assert rc == 0
    assert json.loads(out)["brute"] == 6


def test_frobenius_and_delta(capsys):
    rc, out, _ = run(capsys, "frobenius", "-p", "3", "-n", "2", "-N", "4",
                     "-x", "5,7")
    assert rc == 0
    first = json.loads(out)
    rc, out, _ = run(capsys, "frobenius", "--elem",
                     "p=3;n=2;N=4;coeffs=[" + "|".join(
                         ",".join(map(str, c)) for c in first["coeffs"]) + "]",
                     "-p", "3", "-n", "2", "-N", "4")
    assert rc == 0
    second = json.loads(out)
    # applying the lift twice returns to the original element
    assert second["coeffs"] == first["input"]["coeffs"]

    rc, out, _ = run(capsys, "delta", "-p", "5", "-N", "3", "-x", "2")
    assert rc == 0
    assert json.loads(out)["coeffs"] == [[4, 3]]  # 19 mod 25


def test_gamma_single_and_sweep(capsys):
    rc, out, _ = run(capsys, "gamma", "-p", "5", "-N", "2", "-x", "6")
    assert rc == 0
    assert json.loads(out)["digits"] == [4, 4]  # 24 mod 25
    rc, out, _ = run(capsys, "gamma", "-p", "5", "-N", "2", "--sweep", "0:10",
                     "--format", "csv")
    assert rc == 0
    lines = out.strip().splitlines()
    assert len(lines) == 11  # header + ten rows


def test_beta_and_jacobi_and_gauss(capsys):
    rc, out, _ = run(capsys, "beta", "-p", "5", "-N", "3", "-a", "1", "-b", "1")
    assert rc == 0
    assert json.loads(out)["digits"] == [1, 0, 0]
    rc, out, _ = run(capsys, "jacobi", "-q", "5", "-N", "3", "-a", "2", "-b", "2")
    assert rc == 0
    assert json.loads(out)["coeffs"] == [[4, 4, 4]]  # -1 mod 125
    rc, out, _ = run(capsys, "gauss", "-p", "5", "-N", "2", "-a", "0")
    assert rc == 0
    assert json.loads(out)["pi_coeffs"][0] == [4, 4]  # -1


def test_gk_check(capsys):
    rc, out, _ = run(capsys, "gk-check", "-p", "5", "-N", "3")
    assert rc == 0
    rows = json.loads(out)
    assert len(rows) == 3 and all(r["passed"] for r in rows)
    rc, out, _ = run(capsys, "gk", "-p", "7", "-N", "3", "-a", "2")
    assert rc == 0
    assert json.loads(out)["passed"]


def test_verify_suite(capsys):
    rc, out, err = run(capsys, "verify", "--suite", "carry", "-p", "7")
    assert rc == 0
    report = json.loads(out)
    assert report["passed"]
    assert all(r["failures"] == 0 for r in report["records"])
    assert "suite carry" in err


def test_verify_determinism(capsys):
    args = ("verify", "--suite", "gamma", "--seed", "9", "--count", "20")
    rc1, out1, _ = run(capsys, *args)
    rc2, out2, _ = run(capsys, *args)
    assert rc1 == rc2 == 0
    assert out1 == out2


def test_usage_error_exit_2(capsys):
    rc, _, err = run(capsys, "teich", "-p", "4", "-N", "2", "-v", "1")
    assert rc == 2
    assert "not prime" in err
    with pytest.raises(SystemExit) as exc:
        main(["teich", "-p", "5", "-v", "1"])  # missing -N
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["no-such-command"])


def test_precision_error_exit_3(capsys):
    rc, _, err = run(capsys, "fermat-count", "-q", "13", "-m", "4", "-N", "2")
    assert rc == 3
    assert "cannot identify integer" in err


def test_fixtures_round_trip(tmp_path, capsys):
    fx = tmp_path / "carry.json"
    args = ("verify", "--suite", "carry", "-p", "3", "--fixtures", str(fx))
    rc, out, err = run(capsys, *args)
    assert rc == 0 and fx.exists()
    assert "fixtures written" in err
    rc, out, err = run(capsys, *args)
    assert rc == 0
    assert "fixtures match" in err
    # tampering must be detected
    data = json.loads(fx.read_text())
    data["records"][0]["checks"] += 1
    fx.write_text(json.dumps(data))
    rc, _, err = run(capsys, *args)
    assert rc == 1
    assert "mismatch" in err


def test_text_format(capsys):
    rc, out, _ = run(capsys, "beta", "-p", "5", "-N", "2", "-a", "2", "-b", "3",
                     "--format", "text")
    assert rc == 0
    assert "op=beta_p" in out


def test_verify_other_formats(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "carry", "-p", "3",
                     "--format", "csv")
    assert rc == 0
    assert out.splitlines()[0].startswith("checks,")
    rc, out, _ = run(capsys, "verify", "--suite", "carry", "-p", "3",
                     "--format", "text")
    assert rc == 0
    assert "passed=True" in out


def test_gamma_accepts_canonical_text(capsys):
    rc, out, _ = run(capsys, "gamma", "-p", "5", "-N", "3", "-x",
                     "p=5;N=3;digits=4,3,0")
    assert rc == 0
    payload = json.loads(out)
    assert payload["x"]["digits"] == [4, 3, 0]


def test_missing_value_flags(capsys):
    rc, _, err = run(capsys, "gamma", "-p", "5", "-N", "3")
    assert rc == 2 and "provide" in err
    rc, _, err = run(capsys, "jacobi", "-N", "3", "-a", "1", "-b", "1")
    assert rc == 2 and "provide" in err
    rc, _, err = run(capsys, "frobenius", "-p", "3", "-n", "2", "-N", "2")
    assert rc == 2 and "provide" in err
