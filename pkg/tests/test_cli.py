"""Command-line interface: arguments, exit codes, report and stream formats."""

import json

from regulus.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_durations(obj):
    if isinstance(obj, dict):
        return {k: strip_durations(v) for k, v in obj.items() if k != "duration_ms"}
    if isinstance(obj, list):
        return [strip_durations(v) for v in obj]
    return obj


class TestExpand:
    def test_nine_regular_counts(self, capsys):
        code, out, _ = run(capsys, "expand", "(q;q)^-1 (q^9;q^9)", "--n", "11")
        assert code == 0
        assert out.split() == "1 1 2 3 5 7 11 15 22 29 41".split()

    def test_empty_product(self, capsys):
        code, out, _ = run(capsys, "expand", "", "--n", "3")
        assert code == 0
        assert out.split() == ["1", "0", "0"]

    def test_parse_error_exits_2_with_offset(self, capsys):
        code, _, err = run(capsys, "expand", "(q^3;q^2)", "--n", "4")
        assert code == 2
        assert "a > b" in err and "offset 0" in err

    def test_json_and_mod(self, capsys):
        code, out, _ = run(capsys, "expand", "(q;q)^-1", "--n", "6",
                           "--mod", "5", "--json")
        assert code == 0
        doc = json.loads(out)
        assert doc["ring"] == "Z/5"
        assert doc["coefficients"] == ["1", "1", "2", "3", "0", "2"]

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "coeffs.txt"
        code, out, _ = run(capsys, "expand", "(q;q)", "--n", "8",
                           "--out", str(path))
        assert code == 0
        assert path.read_text().split() == ["1", "-1", "-1", "0", "0", "1", "0", "1"]


class TestVerify:
    def test_core_suite_small_run(self, capsys, tmp_path):
        report_path = tmp_path / "report.json"
        code, _, err = run(capsys, "verify", "--suite", "paper-core",
                           "--n", "2000", "--out", str(report_path))
        assert code == 0, err
        doc = json.loads(report_path.read_text())
        assert doc["summary"]["failed"] == 0
        assert doc["summary"]["insufficient"] == 0
        assert doc["summary"]["total"] == len(doc["checks"])
        assert all(c["status"] == "pass" for c in doc["checks"])

    def test_conjecture_suite_small_run(self, capsys, tmp_path):
        report_path = tmp_path / "conj.json"
        code, _, _ = run(capsys, "verify", "--suite", "paper-conjectures",
                         "--n", "2000", "--out", str(report_path))
        assert code == 0
        doc = json.loads(report_path.read_text())
        witness = [c for c in doc["checks"] if "128n+13" in c["label"]]
        assert witness and witness[0]["details"]["witness"] == [1, 24]

    def test_low_precision_exits_2(self, capsys):
        code, out, _ = run(capsys, "verify", "--suite", "paper-core", "--n", "50")
        assert code == 2
        doc = json.loads(out)
        assert doc["summary"]["insufficient"] >= 1

    def test_reports_are_deterministic(self, capsys, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1800",
            "--out", str(a))
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1800",
            "--out", str(b))
        da = strip_durations(json.loads(a.read_text()))
        db = strip_durations(json.loads(b.read_text()))
        assert da == db

    def test_cache_on_off_identical(self, capsys, tmp_path):
        cached, plain = tmp_path / "c.json", tmp_path / "p.json"
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1700",
            "--cache-dir", str(tmp_path / "cache"), "--out", str(cached))
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1700",
            "--out", str(plain))
        assert (strip_durations(json.loads(cached.read_text()))
                == strip_durations(json.loads(plain.read_text())))
        assert list((tmp_path / "cache").glob("series-*.json"))

    def test_threads_match_serial(self, capsys, tmp_path):
        serial, threaded = tmp_path / "s.json", tmp_path / "t.json"
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1600",
            "--out", str(serial))
        run(capsys, "verify", "--suite", "paper-conjectures", "--n", "1600",
            "--threads", "4", "--out", str(threaded))
        assert (strip_durations(json.loads(serial.read_text()))
                == strip_durations(json.loads(threaded.read_text())))

    def test_claim_file_failing_theorem_exits_1(self, capsys, tmp_path):
        claims = [{"ell": 9, "A": 4, "B": 1, "M": 3, "label": "false claim"}]
        path = tmp_path / "claims.json"
        path.write_text(json.dumps(claims))
        code, out, _ = run(capsys, "verify", "--claims", str(path), "--n", "500")
        assert code == 1
        doc = json.loads(out)
        assert doc["checks"][0]["status"] == "fail"
        assert doc["checks"][0]["counterexamples"][0] == [0, 1]

    def test_claim_file_failing_conjecture_exits_3(self, capsys, tmp_path):
        claims = [{"ell": 9, "A": 4, "B": 1, "M": 3, "label": "hunch",
                   "tier": "conjecture"}]
        path = tmp_path / "claims.json"
        path.write_text(json.dumps(claims))
        code, _, _ = run(capsys, "verify", "--claims", str(path), "--n", "500")
        assert code == 3

    def test_claim_file_with_exclusion_passes(self, capsys, tmp_path):
        claims = [{"ell": 3, "A": 5, "B": 2, "M": 9, "label": "with exclusion",
                   "exclude": {"mod": 5, "residue": 0}}]
        path = tmp_path / "claims.json"
        path.write_text(json.dumps(claims))
        code, _, _ = run(capsys, "verify", "--claims", str(path), "--n", "2000")
        assert code == 0

    def test_missing_claim_file_exits_2(self, capsys, tmp_path):
        code, _, _ = run(capsys, "verify", "--claims", str(tmp_path / "nope.json"))
        assert code == 2

    def test_cache_env_var_is_honored(self, capsys, tmp_path, monkeypatch):
        cache = tmp_path / "envcache"
        monkeypatch.setenv("REGULUS_CACHE_DIR", str(cache))
        code, _, _ = run(capsys, "expand", "(q;q)^-1 (q^9;q^9)", "--n", "40")
        assert code == 0
        assert list(cache.glob("series-*.json"))

    def test_core_suite_full_range(self, capsys, tmp_path):
        # the default argument bound, end to end
        report_path = tmp_path / "full.json"
        code, _, _ = run(capsys, "verify", "--suite", "all", "--n", "20000",
                         "--out", str(report_path))
        assert code == 0
        doc = json.loads(report_path.read_text())
        assert doc["summary"]["failed"] == 0
        assert doc["summary"]["exit_code"] == 0


class TestScan:
    def test_zero_progressions_stream(self, capsys):
        code, out, _ = run(capsys, "scan", "--ell", "9", "--mod", "3",
                           "--amax", "8", "--n", "4000")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert lines[-1]["type"] == "summary"
        cells = [(d["A"], d["B"]) for d in lines if d["type"] == "zero-progression"]
        assert (4, 3) in cells

    def test_similarity_stream(self, capsys):
        code, out, _ = run(capsys, "scan", "--ell", "3", "--mod", "9",
                           "--amax", "6", "--similar", "--kmax", "6",
                           "--n", "2000")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        sims = [(d["A"], d["B"], d["c"], d["j"], d["k"])
                for d in lines if d["type"] == "similarity"]
        assert (5, 2, 2, 0, 5) in sims

    def test_amax_one_yields_no_hits(self, capsys):
        code, out, _ = run(capsys, "scan", "--ell", "9", "--mod", "3",
                           "--amax", "1", "--n", "500")
        assert code == 0
        lines = [json.loads(line) for line in out.strip().splitlines()]
        assert [d for d in lines if d["type"] == "zero-progression"] == []

    def test_bad_ranges_exit_2(self, capsys):
        code, _, err = run(capsys, "scan", "--ell", "1", "--mod", "3")
        assert code == 2

    def test_too_thin_exit_2(self, capsys):
        code, _, err = run(capsys, "scan", "--ell", "9", "--mod", "3",
                           "--amax", "5", "--n", "30")
        assert code == 2
        assert "evidence" in err.lower() or "indices" in err.lower()

    def test_out_file_jsonl(self, capsys, tmp_path):
        path = tmp_path / "scan.jsonl"
        code, _, _ = run(capsys, "scan", "--ell", "9", "--mod", "3",
                         "--amax", "4", "--n", "3000", "--out", str(path))
        assert code == 0
        lines = [json.loads(line) for line in path.read_text().splitlines()]
        assert lines[-1]["type"] == "summary"


class TestEta:
    def test_admissible_quotient(self, capsys):
        code, out, _ = run(capsys, "eta", "27: 9^1 * 1^63")
        assert code == 0
        doc = json.loads(out)
        assert doc["admissible"] is True
        assert (doc["weight"], doc["level"]) == (32, 27)
        assert doc["lead24"] == 72

    def test_inadmissible_quotient(self, capsys):
        code, out, _ = run(capsys, "eta", "1: 1^1")
        assert code == 0
        doc = json.loads(out)
        assert doc["admissible"] is False

    def test_expansion_listing(self, capsys):
        code, out, _ = run(capsys, "eta", "9: 9^1 * 1^-1", "--n", "6",
                           "--mod", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["series"]["lead24"] == 8
        assert doc["series"]["coefficients"] == ["1", "1", "2", "0", "2", "1"]

    def test_parse_error_exits_2(self, capsys):
        code, _, err = run(capsys, "eta", "27: 5^1")
        assert code == 2
