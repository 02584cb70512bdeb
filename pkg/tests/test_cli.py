import csv
import io
import json

import pytest

from padichg.cli import Config, UsageError, main, parse_args, run
from padichg.suites import JobSpec


def test_parse_single_job():
    cfg = parse_args(["--p", "5", "--r", "1", "--precision", "4", "--suite", "euler"])
    assert len(cfg.jobs) == 1
    job = cfg.jobs[0]
    assert (job.p, job.r, job.precision, job.suite) == (5, 1, 4, "euler")


def test_parse_suite_all_battery():
    cfg = parse_args(["--suite", "all"])
    assert len(cfg.jobs) == 64  # eight fields x eight suites
    assert cfg.fmt == "text" and cfg.parallel == 1


def test_parse_bare_invocation_defaults_to_all():
    cfg = parse_args([])
    assert len(cfg.jobs) == 64


def test_parse_rejects_bad_inputs():
    with pytest.raises(UsageError, match="odd prime"):
        parse_args(["--p", "4"])
    with pytest.raises(UsageError):
        parse_args(["--p", "5", "--precision", "0"])
    with pytest.raises(UsageError):
        parse_args(["--p", "251", "--r", "3"])  # q over the bound
    with pytest.raises(SystemExit) as exc:
        parse_args(["--suite", "bogus"])  # argparse choices
    assert exc.value.code == 2


def test_main_usage_error_exit_code(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--p", "4"])
    assert exc.value.code == 2
    assert "odd prime" in capsys.readouterr().err


def test_config_file_roundtrip(tmp_path):
    cfg_file = tmp_path / "battery.cfg"
    cfg_file.write_text(
        """
        # two quick jobs
        format = json
        fail-fast = true
        job = suite=euler p=5 r=1 precision=4
        job = suite=floors p=7 r=1
        """
    )
    cfg = parse_args(["--config", str(cfg_file)])
    assert cfg.fmt == "json" and cfg.fail_fast
    assert [(j.suite, j.p) for j in cfg.jobs] == [("euler", 5), ("floors", 7)]
    # command-line flags override config-file values
    cfg = parse_args(["--config", str(cfg_file), "--format", "csv"])
    assert cfg.fmt == "csv"


def test_config_file_errors(tmp_path):
    empty = tmp_path / "empty.cfg"
    empty.write_text("# nothing here\n")
    with pytest.raises(UsageError, match="no jobs"):
        parse_args(["--config", str(empty)])
    bad = tmp_path / "bad.cfg"
    bad.write_text("job = euler\n")
    with pytest.raises(UsageError):
        parse_args(["--config", str(bad)])
    with pytest.raises(UsageError, match="cannot read"):
        parse_args(["--config", str(tmp_path / "missing.cfg")])


def _one_job_config(**kw):
    return Config(jobs=[JobSpec(5, 1, "euler", precision=4)], **kw)


def test_run_json_schema_roundtrip(tmp_path):
    out = tmp_path / "report.json"
    code = run(_one_job_config(fmt="json", out=str(out)))
    assert code == 0
    payload = json.loads(out.read_text())
    assert len(payload) == 1
    rec = payload[0]
    assert set(rec) == {
        "suite", "p", "r", "N", "q", "cases_total", "cases_passed",
        "skipped", "failures", "elapsed_ms",
    }
    assert rec["suite"] == "euler" and rec["cases_total"] == 4
    assert json.loads(json.dumps(payload)) == payload


def test_run_text_output(capsys):
    assert run(_one_job_config(fmt="text")) == 0
    captured = capsys.readouterr().out
    assert "[euler p=5 r=1 N=4 q=5] ok: 4/4" in captured
    assert "summary:" in captured


def test_run_csv_summary_and_verbose(tmp_path):
    out = tmp_path / "r.csv"
    assert run(_one_job_config(fmt="csv", out=str(out))) == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0][:6] == ["suite", "p", "r", "N", "q", "cases_total"]
    assert len(rows) == 2  # summary row only

    cfg = Config(
        jobs=[JobSpec(5, 1, "euler", precision=4, record_cases=True)],
        fmt="csv",
        out=str(out),
        verbose=True,
    )
    assert run(cfg) == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0][5] == "case"
    assert len(rows) == 1 + 4  # one row per case


def test_run_io_error_exit_code(capsys):
    code = run(_one_job_config(fmt="json", out="/nonexistent-dir/report.json"))
    assert code == 3
    assert "i/o error" in capsys.readouterr().err


def test_run_skipped_jobs_do_not_fail():
    cfg = Config(jobs=[JobSpec(3, 1, "euler")], fmt="json", out="-")
    assert run(cfg) == 0


def test_verification_failure_exit_code(corrupted_gamma, capsys):
    cfg = Config(jobs=[JobSpec(5, 1, "euler", precision=4)], fmt="text")
    code = run(cfg)
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "x=" in out  # failing (suite, x) identified


def test_fail_fast_stops_after_first_failure(corrupted_gamma, capsys):
    cfg = Config(
        jobs=[JobSpec(5, 1, "euler", precision=4), JobSpec(7, 1, "euler", precision=4)],
        fmt="text",
        fail_fast=True,
    )
    assert run(cfg) == 1
    out = capsys.readouterr().out
    assert "p=7" not in out  # second job never ran


def test_parallel_jobs_match_sequential():
    jobs = [JobSpec(5, 1, "euler", precision=4), JobSpec(7, 1, "floors", precision=4)]
    seq = Config(jobs=list(jobs), fmt="json", out="-")
    par = Config(jobs=list(jobs), fmt="json", out="-", parallel=2)
    import contextlib

    buf_seq, buf_par = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(buf_seq):
        assert run(seq) == 0
    with contextlib.redirect_stdout(buf_par):
        assert run(par) == 0
    strip = lambda s: [
        {k: v for k, v in rec.items() if k != "elapsed_ms"}
        for rec in json.loads(s.getvalue())
    ]
    assert strip(buf_seq) == strip(buf_par)
