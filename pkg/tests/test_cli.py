"""Command-line interface: records, exit codes, determinism, caching."""

import json
import math
import subprocess
import sys

from fermatreg.regulator import f_indec
from fermatreg.specialfn import EvalConfig


def run_cli(*args, env=None):
    return subprocess.run(
        [sys.executable, "-m", "fermatreg", *args],
        capture_output=True,
        text=False,
        env=env,
        timeout=300,
    )


def records(stdout_bytes):
    return [json.loads(line) for line in stdout_bytes.decode().splitlines() if line]


class TestHyp3F2Command:
    def test_basel_record(self):
        p = run_cli("hyp3f2", "--a1", "1", "--a2", "1", "--a3", "1",
                    "--b1", "2", "--b2", "2")
        assert p.returncode == 0
        (rec,) = records(p.stdout)
        assert set(rec) == {"inputs", "value", "err", "provenance", "effort"}
        assert rec["inputs"] == {"a1": "1", "a2": "1", "a3": "1",
                                 "b1": "2", "b2": "2"}
        assert abs(rec["value"] - math.pi ** 2 / 6.0) <= rec["err"] + 1e-10
        assert rec["effort"] > 0

    def test_zero_upper_parameter(self):
        p = run_cli("hyp3f2", "--a1", "1/2", "--a2", "0", "--a3", "5",
                    "--b1", "1/7", "--b2", "3")
        (rec,) = records(p.stdout)
        assert rec["value"] == 1.0
        assert rec["err"] == 0.0

    def test_malformed_rational_exits_2(self):
        p = run_cli("hyp3f2", "--a1", "1/0", "--a2", "1", "--a3", "1",
                    "--b1", "2", "--b2", "2")
        assert p.returncode == 2
        assert b"1/0" in p.stderr

    def test_divergent_exits_2(self):
        p = run_cli("hyp3f2", "--a1", "1", "--a2", "1", "--a3", "1",
                    "--b1", "1", "--b2", "2")
        assert p.returncode == 2

    def test_unreachable_tolerance_exits_1_with_best(self):
        p = run_cli("hyp3f2", "--a1", "3/13", "--a2", "1/13", "--a3", "1",
                    "--b1", "4/13", "--b2", "14/13", "--tol", "1e-30")
        assert p.returncode == 1
        assert b"budget" in p.stderr.lower()
        (rec,) = records(p.stdout)
        assert abs(rec["value"] - 1.766233869657059933008) <= 1e-9


class TestRegCommand:
    def test_holo_diagonal_zero(self):
        p = run_cli("reg", "holo", "--N", "3", "--a", "1", "--b", "1")
        assert p.returncode == 0
        (rec,) = records(p.stdout)
        assert rec["value"] == 0.0

    def test_holo_values(self):
        p = run_cli("reg", "holo", "--N", "5", "--a", "1", "--b", "2")
        (rec,) = records(p.stdout)
        assert abs(rec["value"] - 6.298611257238236) <= 1e-8
        assert rec["provenance"] == "closed-form"

    def test_mixed_with_hodge_flag(self):
        p = run_cli("reg", "mixed", "--N", "13", "--a", "1", "--b", "2",
                    "--c", "1", "--d", "4")
        (rec,) = records(p.stdout)
        assert abs(rec["value"] - 25.4714536425848) <= 1e-8
        assert rec["hodge"] is False
        p = run_cli("reg", "mixed", "--N", "13", "--a", "1", "--b", "4",
                    "--c", "1", "--d", "8")
        (rec,) = records(p.stdout)
        assert abs(rec["value"] - 11.69084392681313) <= 1e-8
        assert rec["hodge"] is True

    def test_invalid_label_exits_2(self):
        p = run_cli("reg", "holo", "--N", "5", "--a", "2", "--b", "4")
        assert p.returncode == 2


class TestFTableCommand:
    def test_csv_shape(self):
        p = run_cli("f-table", "--N", "13", "--format", "csv")
        assert p.returncode == 0
        assert b"\r" not in p.stdout
        lines = p.stdout.decode().splitlines()
        assert lines[0] == "i,N,f,err,hodge"
        rows = [line.split(",") for line in lines[1:]]
        assert [(r[0], r[1]) for r in rows] == [("2", "13"), ("3", "13")]
        assert rows[0][2] == "0.075359"
        assert rows[1][2] == "0.051083"
        assert all(r[4] in ("true", "false") for r in rows)
        assert all(float(r[3]) < 1e-6 for r in rows)

    def test_json_default_range_and_rounding(self):
        p = run_cli("f-table", "--N", "17")
        recs = records(p.stdout)
        assert [r["inputs"]["i"] for r in recs] == [2, 3, 4]
        assert recs[0]["value"] == 0.059197
        assert all(r["hodge"] is False for r in recs)

    def test_full_precision_flag(self):
        p = run_cli("f-table", "--N", "13", "--i", "2", "--full")
        (rec,) = records(p.stdout)
        want = f_indec(2, 13, EvalConfig()).value
        assert rec["value"] == want

    def test_multiple_moduli_sorted(self):
        p = run_cli("f-table", "--N", "17,13")
        recs = records(p.stdout)
        keys = [(r["inputs"]["N"], r["inputs"]["i"]) for r in recs]
        assert keys == [(13, 2), (13, 3), (17, 2), (17, 3), (17, 4)]

    def test_small_modulus_has_one_row(self):
        p = run_cli("f-table", "--N", "11")
        recs = records(p.stdout)
        assert [r["inputs"]["i"] for r in recs] == [2]

    def test_modulus_below_5_exits_2(self):
        p = run_cli("f-table", "--N", "4")
        assert p.returncode == 2

    def test_non_prime_exits_2(self):
        p = run_cli("f-table", "--N", "15")
        assert p.returncode == 2


class TestHodgeCommand:
    def test_single_query(self):
        p = run_cli("hodge", "--N", "13", "--a", "1", "--b", "4",
                    "--c", "1", "--d", "8")
        (rec,) = records(p.stdout)
        assert rec["hodge"] is True

    def test_list(self):
        p = run_cli("hodge", "--N", "5", "--list")
        recs = records(p.stdout)
        assert len(recs) == 12
        assert all(r["hodge"] is True for r in recs)
        # every listed pair must be confirmed by the single-query form
        first = recs[0]["inputs"]
        q = run_cli("hodge", "--N", "5", "--a", str(first["a"]),
                    "--b", str(first["b"]), "--c", str(first["c"]),
                    "--d", str(first["d"]))
        assert records(q.stdout)[0]["hodge"] is True

    def test_non_prime_exits_2(self):
        p = run_cli("hodge", "--N", "9", "--list")
        assert p.returncode == 2


class TestVerifyCommand:
    def test_all_suites_pass(self):
        p = run_cli("verify", "--suite", "special")
        assert p.returncode == 0
        out = p.stdout.decode()
        assert "PASS" in out and "FAIL" not in out

    def test_full_run(self):
        p = run_cli("verify")
        assert p.returncode == 0
        lines = [l for l in p.stdout.decode().splitlines() if l.startswith(("PASS", "FAIL"))]
        assert len(lines) >= 25
        assert all(l.startswith("PASS") for l in lines)


class TestDeterminismAndCache:
    def test_repeated_runs_bit_identical(self):
        a = run_cli("f-table", "--N", "13", "--format", "csv")
        b = run_cli("f-table", "--N", "13", "--format", "csv")
        assert a.stdout == b.stdout

    def test_cache_roundtrip(self, tmp_path):
        cache = tmp_path / "vals.json"
        a = run_cli("f-table", "--N", "13", "--cache", str(cache))
        assert a.returncode == 0
        assert cache.exists()
        payload = json.loads(cache.read_text())
        assert payload["format"] == "fermatreg-cache-v1"
        assert payload["entries"]
        b = run_cli("f-table", "--N", "13", "--cache", str(cache))
        assert b.stdout == a.stdout

    def test_env_defaults_and_flag_override(self):
        import os

        env = dict(os.environ)
        env["FERMATREG_TOL"] = "1e-4"
        loose = run_cli("hyp3f2", "--a1", "1", "--a2", "1", "--a3", "1",
                        "--b1", "2", "--b2", "2", env=env)
        (rec_loose,) = records(loose.stdout)
        assert rec_loose["err"] <= 1e-4
        flag = run_cli("hyp3f2", "--a1", "1", "--a2", "1", "--a3", "1",
                       "--b1", "2", "--b2", "2", "--tol", "1e-8", env=env)
        plain = run_cli("hyp3f2", "--a1", "1", "--a2", "1", "--a3", "1",
                        "--b1", "2", "--b2", "2")
        assert flag.stdout == plain.stdout
