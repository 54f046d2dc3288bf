"""CLI surface: flag grammar, exit codes, file round-trips, report artifacts."""

import json

from achrom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestConstruct:
    def test_construct_verify_roundtrip(self, tmp_path, capsys):
        out = tmp_path / "m8.txt"
        code, _, _ = run(capsys, "construct", "--q", "8", "-o", str(out))
        assert code == 0
        code, stdout, _ = run(capsys, "verify", str(out))
        assert code == 0
        assert "member: True" in stdout

    def test_roundtrip_all_supported(self, tmp_path, capsys):
        from achrom.families import supported_qs

        for q in supported_qs(24):
            out = tmp_path / f"m{q}.txt"
            assert run(capsys, "construct", "--q", str(q), "-o", str(out))[0] == 0
            assert run(capsys, "verify", str(out))[0] == 0

    def test_stdout_when_no_output(self, capsys):
        code, stdout, _ = run(capsys, "construct", "--q", "4")
        assert code == 0
        assert stdout.startswith("6 4\n")

    def test_family_and_partition(self, tmp_path, capsys):
        out = tmp_path / "m22.txt"
        code, _, _ = run(
            capsys,
            "construct", "--q", "22", "--family", "block_16_40",
            "--partition", "9,3,3,3", "-o", str(out),
        )
        assert code == 0
        assert run(capsys, "verify", str(out))[0] == 0

    def test_out_of_scope_is_usage_error(self, capsys):
        code, _, stderr = run(capsys, "construct", "--q", "7")
        assert code == 2
        assert "out of scope" in stderr

    def test_bad_partition_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "construct", "--q", "22", "--partition", "9,9,9,9")
        assert code == 2

    def test_determinism_byte_identical(self, tmp_path, capsys):
        a, b = tmp_path / "a.txt", tmp_path / "b.txt"
        run(capsys, "construct", "--q", "30", "-o", str(a))
        run(capsys, "construct", "--q", "30", "-o", str(b))
        assert a.read_bytes() == b.read_bytes()


class TestVerify:
    def test_non_member_exits_one(self, tmp_path, capsys):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 2\na b\na b\n", encoding="utf-8")
        code, stdout, _ = run(capsys, "verify", str(bad))
        assert code == 1
        assert "proper: False" in stdout

    def test_json_format(self, tmp_path, capsys):
        f = tmp_path / "m.txt"
        run(capsys, "construct", "--q", "4", "-o", str(f))
        code, stdout, _ = run(capsys, "verify", str(f), "--format", "json")
        assert code == 0
        payload = json.loads(stdout)
        assert payload["member"] is True
        assert payload["good_pair_count"] == 66

    def test_missing_file_is_usage_error(self, capsys):
        code, _, stderr = run(capsys, "verify", "/nonexistent/matrix.txt")
        assert code == 2
        assert "error" in stderr


class TestAnalyze:
    def test_text_report_with_suite(self, tmp_path, capsys):
        f = tmp_path / "m12.txt"
        run(capsys, "construct", "--q", "12", "-o", str(f))
        code, stdout, _ = run(capsys, "analyze", str(f), "--suite")
        assert code == 0
        assert "all hold: True" in stdout

    def test_explicit_suite_s(self, tmp_path, capsys):
        f = tmp_path / "m12.txt"
        run(capsys, "construct", "--q", "12", "-o", str(f))
        code, stdout, _ = run(capsys, "analyze", str(f), "--suite", "s=6")
        assert code == 0
        assert "(s=6)" in stdout

    def test_wrong_suite_s_is_usage_error(self, tmp_path, capsys):
        f = tmp_path / "m12.txt"
        run(capsys, "construct", "--q", "12", "-o", str(f))
        code, _, _ = run(capsys, "analyze", str(f), "--suite", "s=3")
        assert code == 2

    def test_json_schema_keys(self, tmp_path, capsys):
        f = tmp_path / "m16.txt"
        run(capsys, "construct", "--q", "16", "-o", str(f))
        code, stdout, _ = run(capsys, "analyze", str(f), "--format", "json", "--suite")
        assert code == 0
        payload = json.loads(stdout)
        for key in (
            "frequency",
            "excess",
            "line_stats",
            "coverage_queries",
            "x_configurations",
            "aux_graph",
            "lemma_plus_m",
        ):
            assert key in payload
        assert payload["lemma_plus_m"]["all_hold"] is True

    def test_extra_coverage_query(self, tmp_path, capsys):
        f = tmp_path / "m4.txt"
        run(capsys, "construct", "--q", "4", "-o", str(f))
        code, stdout, _ = run(
            capsys, "analyze", str(f), "--format", "json", "--cov", "1"
        )
        payload = json.loads(stdout)
        extra = payload["coverage_queries"][-1]
        assert extra["colours"] == ["1"]
        assert extra["columns"] == [1, 2]

    def test_unknown_cov_token_is_usage_error(self, tmp_path, capsys):
        f = tmp_path / "m4.txt"
        run(capsys, "construct", "--q", "4", "-o", str(f))
        assert run(capsys, "analyze", str(f), "--cov", "nope")[0] == 2

    def test_report_dir_artifacts(self, tmp_path, capsys):
        f = tmp_path / "m16.txt"
        run(capsys, "construct", "--q", "16", "-o", str(f))
        report_dir = tmp_path / "report"
        code, _, _ = run(
            capsys, "analyze", str(f), "--suite", "--report-dir", str(report_dir)
        )
        assert code == 0
        stats = json.loads((report_dir / "stats.json").read_text())
        assert stats["palette_size"] == 36
        csv_lines = (report_dir / "frequency.csv").read_text().strip().splitlines()
        assert csv_lines[0] == "token,frequency,excess"
        assert len(csv_lines) == 37
        for name in ("matrix.png", "profile.png"):
            blob = (report_dir / name).read_bytes()
            assert blob[:8] == b"\x89PNG\r\n\x1a\n"


class TestBound:
    def test_exact_table_value(self, capsys):
        code, stdout, _ = run(capsys, "bound", "--p", "6", "--q", "41")
        assert code == 0
        assert "exact: 85" in stdout

    def test_json(self, capsys):
        code, stdout, _ = run(capsys, "bound", "--p", "6", "--q", "12", "--format", "json")
        payload = json.loads(stdout)
        assert payload["exact"] == 30

    def test_generic_grid_no_exact(self, capsys):
        code, stdout, _ = run(capsys, "bound", "--p", "3", "--q", "5")
        assert code == 0
        assert "exact: unknown" in stdout

    def test_report_dir_artifacts(self, tmp_path, capsys):
        report_dir = tmp_path / "bounds"
        code, _, _ = run(
            capsys, "bound", "--p", "6", "--q", "10", "--report-dir", str(report_dir)
        )
        assert code == 0
        lines = (report_dir / "bounds.csv").read_text().strip().splitlines()
        assert lines[0].startswith("p,q,lower,upper,exact")
        assert len(lines) == 51  # header + q=1..50
        assert (report_dir / "bounds.png").read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


class TestSearch:
    def test_max_two_by_two(self, capsys):
        code, stdout, _ = run(capsys, "search", "--p", "2", "--q", "2", "--max")
        assert code == 0
        assert "achromatic number: 2" in stdout

    def test_existence_sat_exit_zero(self, tmp_path, capsys):
        out = tmp_path / "w.txt"
        code, stdout, _ = run(
            capsys, "search", "--p", "3", "--q", "3", "--n", "5", "-o", str(out)
        )
        assert code == 0
        assert "status: SAT" in stdout
        assert run(capsys, "verify", str(out))[0] == 0

    def test_existence_unsat_exit_one(self, capsys):
        code, stdout, _ = run(capsys, "search", "--p", "3", "--q", "3", "--n", "6")
        assert code == 1
        assert "status: UNSAT" in stdout

    def test_budget_exhaustion_exit_three(self, capsys):
        code, stdout, _ = run(
            capsys, "search", "--p", "6", "--q", "8", "--n", "22", "--budget", "500"
        )
        assert code == 3
        assert "BUDGET_EXHAUSTED" in stdout

    def test_search_determinism(self, capsys):
        _, out1, _ = run(capsys, "search", "--p", "3", "--q", "4", "--n", "6")
        _, out2, _ = run(capsys, "search", "--p", "3", "--q", "4", "--n", "6")
        assert out1 == out2

    def test_jobs_flag(self, capsys):
        code, stdout, _ = run(
            capsys,
            "search", "--p", "3", "--q", "3", "--n", "5",
            "--jobs", "3", "--nondeterministic",
        )
        assert code == 0
        assert "status: SAT" in stdout

    def test_json_output(self, capsys):
        code, stdout, _ = run(
            capsys, "search", "--p", "2", "--q", "3", "--n", "4", "--format", "json"
        )
        payload = json.loads(stdout)
        assert payload["status"] == "SAT"
        assert payload["witness"].startswith("2 3\n")


class TestUsage:
    def test_missing_required_argument(self, capsys):
        assert main(["bound", "--p", "6"]) == 2

    def test_unknown_command(self, capsys):
        assert main(["frobnicate"]) == 2

    def test_n_and_max_exclusive(self, capsys):
        assert main(["search", "--p", "2", "--q", "2", "--n", "2", "--max"]) == 2
