import csv
import io
import math

import numpy as np
import pytest

from lejacircle.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "16", "--s", "0", "--seeds", "1")
    assert code == 0
    assert "FAIL" not in out and "11/11 checks passed" in out


def test_verify_rejects_tiny_n(capsys):
    assert run(capsys, "verify", "--max-n", "3")[0] == 2


def test_sweep_rows_and_bounds(capsys, tmp_path):
    path = tmp_path / "sweep.csv"
    assert run(capsys, "sweep", "--s", "0", "--max-n", "4200", "--out", str(path))[0] == 0
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 4199
    assert list(rows[0]) == ["N", "tau", "s", "energy", "normalized"]
    for r in rows:
        n, v = int(r["N"]), float(r["normalized"])
        assert int(r["tau"]) == bin(n).count("1")
        assert 0.0 <= v < math.log(4 / 3)
        if n & (n - 1) == 0:
            assert v == 0.0


def test_sweep_is_byte_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "sweep", "--s", "0.5", "--max-n", "500", "--out", str(a))
    run(capsys, "sweep", "--s", "0.5", "--max-n", "500", "--out", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_sweep_to_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--s", "2", "--max-n", "4")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[1][:3] == ["2", "1", "2"]
    assert float(rows[2][3]) == pytest.approx(2.5)


def test_sweep_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "sweep", "--s", "0", "--max-n", "8",
                       "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and "cannot write" in err


@pytest.mark.parametrize("argv", [["sweep", "--s", "-1"], ["sweep", "--s", "0", "--max-n", "1"],
                                  ["sweep", "--s", "nan"]])
def test_sweep_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["sweep"])
    assert exc.value.code == 2


@pytest.mark.parametrize("s, kind", [("0", "4/3"), ("0.5", "h_lower"), ("1", "kappa"), ("2", "h_upper")])
def test_constants(capsys, s, kind):
    code, out, _ = run(capsys, "constants", "--s", s, "--p-max", "3", "--t-max", "8")
    assert code == 0 and kind in out and "liminf target" in out


def test_constants_values(capsys):
    _, out, _ = run(capsys, "constants", "--s", "2", "--p-max", "2", "--t-max", "4")
    assert "0.083333333333" in out


@pytest.mark.parametrize("family", ["greedy", "vdc", "random"])
def test_conjecture_families(capsys, tmp_path, family):
    path = tmp_path / "c.csv"
    code, _, err = run(capsys, "conjecture", "--family", family, "--s", "0.5", "--max-n", "64",
                       "--out", str(path))
    assert code == 0 and "running max" in err
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 63
    running = [float(r["running_max"]) for r in rows]
    assert running == sorted(running)


def test_conjecture_greedy_matches_sweep(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    run(capsys, "conjecture", "--family", "greedy", "--s", "1", "--max-n", "100", "--out", str(a))
    run(capsys, "sweep", "--s", "1", "--max-n", "100", "--out", str(b))
    for ra, rb in zip(csv.DictReader(a.open()), csv.DictReader(b.open())):
        assert float(ra["normalized"]) == pytest.approx(float(rb["normalized"]), abs=1e-9)


def test_conjecture_custom_file(capsys, tmp_path):
    f = tmp_path / "pts.txt"
    f.write_text("# angles\n0\n1\n0.5\n\n1.5\n")
    out = tmp_path / "o.csv"
    assert run(capsys, "conjecture", "--family", "custom-file", "--input", str(f), "--s", "0",
               "--max-n", "4", "--out", str(out))[0] == 0
    last = list(csv.DictReader(out.open()))[-1]
    assert float(last["normalized"]) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("content, n", [("0\n1\n", 4), ("0\n1\n0\n", 3), ("0\nabc\n", 2)])
def test_conjecture_custom_file_errors(capsys, tmp_path, content, n):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    code = run(capsys, "conjecture", "--family", "custom-file", "--input", str(f), "--s", "0",
               "--max-n", str(n))[0]
    assert code == 2


def test_conjecture_custom_file_missing(capsys, tmp_path):
    assert run(capsys, "conjecture", "--family", "custom-file", "--s", "0", "--max-n", "4")[0] == 2
    assert run(capsys, "conjecture", "--family", "custom-file", "--s", "0", "--max-n", "4",
               "--input", str(tmp_path / "nope"))[0] == 2


def test_oracle_pass(capsys):
    code, out, _ = run(capsys, "oracle", "-n", "8", "--s", "0", "--grid", "16384")
    assert code == 0 and out.strip().endswith("PASS")


def test_oracle_antipode(capsys):
    code, out, _ = run(capsys, "oracle", "-n", "1", "--s", "2", "--grid", "1024")
    assert code == 0
    row = out.splitlines()[1].split()
    assert float(row[1]) == pytest.approx(1.0, abs=1e-9)


@pytest.mark.parametrize("argv", [["oracle", "-n", "8", "--grid", "32"], ["oracle", "-n", "300"],
                                  ["oracle", "-n", "0"]])
def test_oracle_usage(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_hcurve_default(capsys):
    code, out, _ = run(capsys, "hcurve", "--points", "5", "--s-max", "2")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and len(rows) == 6 and len(rows[0]) == 4
    at1 = next(r for r in rows[1:] if float(r[0]) == 1.0)
    assert all(float(x) == pytest.approx(1.0) for x in at1[1:])
    at2 = rows[-1]
    assert float(at2[3]) == pytest.approx(11 / 9)


def test_hcurve_rejects_non_block_vector(capsys):
    assert run(capsys, "hcurve", "--theta", "1/2,1/2")[0] == 2


@pytest.mark.parametrize("spec", ["abc", "1/0", "2/3,x"])
def test_hcurve_rejects_garbage(capsys, spec):
    assert run(capsys, "hcurve", "--theta", spec)[0] == 2


def test_vdc_family_is_canonical_section():
    from lejacircle.leja import canonical_section
    from lejacircle.sequences import van_der_corput
    assert np.array_equal(van_der_corput(1000), canonical_section(1000).angles())
