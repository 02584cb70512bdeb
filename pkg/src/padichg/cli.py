"""Command-line entry point: job configuration, orchestration, reports.

Exit codes: 0 all executed cases passed (skipped suites do not fail),
1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .finitefield import MAX_Q, is_prime
from .suites import DEFAULT_BATTERY, SUITE_NAMES, JobSpec, Report, run_job

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class Config:
    jobs: list[JobSpec] = field(default_factory=list)
    fmt: str = "text"
    out: str | None = None
    parallel: int = 1
    fail_fast: bool = False
    verbose: bool = False


def _expand_group(suite: str, p, r, precision, verbose: bool) -> list[JobSpec]:
    """One flag/config job group -> concrete JobSpecs (battery when p is absent)."""
    if suite not in SUITE_NAMES and suite != "all":
        raise UsageError(f"unknown suite {suite!r}; choose from {', '.join(SUITE_NAMES)} or all")
    suites = SUITE_NAMES if suite == "all" else (suite,)
    if p is not None:
        if not is_prime(p) or p == 2:
            raise UsageError("p must be an odd prime")
        r = r if r is not None else 1
        if r < 1:
            raise UsageError("r must be >= 1")
        if p**r > MAX_Q:
            raise UsageError(f"q = {p}^{r} exceeds the supported bound {MAX_Q}")
        fields = [(p, r)]
    else:
        fields = list(DEFAULT_BATTERY)
    if precision is not None and precision < 1:
        raise UsageError("precision must be >= 1")
    return [
        JobSpec(p=fp, r=fr, suite=s, precision=precision, record_cases=verbose)
        for fp, fr in fields
        for s in suites
    ]


def _parse_config_file(path: str) -> tuple[dict, list[dict]]:
    """Flat key=value lines plus repeated 'job =' lines (see README schema)."""
    settings: dict = {}
    groups: list[dict] = []
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if key == "job":
            entry: dict = {}
            for token in value.split():
                if "=" not in token:
                    raise UsageError(f"{path}:{lineno}: job tokens must be key=value")
                k, _, v = token.partition("=")
                entry[k] = v
            if "suite" not in entry:
                raise UsageError(f"{path}:{lineno}: job line needs suite=...")
            groups.append(entry)
        else:
            settings[key] = value
    return settings, groups


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="padichg",
        description="Exhaustively verify p-adic hypergeometric identities over small finite fields.",
    )
    parser.add_argument("--p", type=int, help="odd prime characteristic")
    parser.add_argument("--r", type=int, help="extension degree (default 1)")
    parser.add_argument("--precision", type=int, help="p-adic precision N (default per suite)")
    parser.add_argument(
        "--suite",
        choices=SUITE_NAMES + ("all",),
        help="verification suite to run (default all)",
    )
    parser.add_argument("--config", help="config file with settings and a jobs list")
    parser.add_argument("--format", choices=FORMATS, help="report format (default text)")
    parser.add_argument("--out", help="output path (default stdout)")
    parser.add_argument("--jobs", type=int, help="parallel job count (default 1)")
    parser.add_argument("--fail-fast", action="store_true", help="stop after the first failing job")
    parser.add_argument("--verbose", action="store_true", help="record one row per case (csv)")
    return parser


def parse_args(argv) -> Config:
    args = _build_parser().parse_args(argv)
    config = Config()

    groups: list[dict] = []
    if args.config:
        settings, groups = _parse_config_file(args.config)
        if "format" in settings:
            if settings["format"] not in FORMATS:
                raise UsageError(f"config format must be one of {FORMATS}")
            config.fmt = settings["format"]
        if "out" in settings:
            config.out = settings["out"]
        if "jobs" in settings:
            config.parallel = int(settings["jobs"])
        if "fail-fast" in settings:
            config.fail_fast = settings["fail-fast"].lower() in ("1", "true", "yes")
        if "verbose" in settings:
            config.verbose = settings["verbose"].lower() in ("1", "true", "yes")

    # command-line flags override config-file values
    if args.format:
        config.fmt = args.format
    if args.out:
        config.out = args.out
    if args.jobs is not None:
        if args.jobs < 1:
            raise UsageError("--jobs must be >= 1")
        config.parallel = args.jobs
    if args.fail_fast:
        config.fail_fast = True
    if args.verbose:
        config.verbose = True

    flag_job_given = any(v is not None for v in (args.p, args.r, args.precision, args.suite))
    if flag_job_given:
        suite = args.suite or "all"
        config.jobs = _expand_group(suite, args.p, args.r, args.precision, config.verbose)
    elif groups:
        for g in groups:
            config.jobs.extend(
                _expand_group(
                    g["suite"],
                    int(g["p"]) if "p" in g else None,
                    int(g["r"]) if "r" in g else None,
                    int(g["precision"]) if "precision" in g else None,
                    config.verbose,
                )
            )
    elif args.config:
        raise UsageError("config file defines no jobs")
    else:
        config.jobs = _expand_group("all", None, None, None, config.verbose)
    return config


def _render_text(reports: list[Report]) -> str:
    lines = []
    failed = passed = skipped = 0
    for rep in reports:
        head = f"[{rep.suite} p={rep.p} r={rep.r} N={rep.precision} q={rep.q}]"
        if rep.skipped:
            skipped += 1
            lines.append(f"{head} SKIPPED (field outside the suite hypothesis)")
            continue
        status = "ok" if rep.passed() else "FAIL"
        if rep.passed():
            passed += 1
        else:
            failed += 1
        lines.append(
            f"{head} {status}: {rep.cases_passed}/{rep.cases_total} cases in {rep.elapsed_ms:.1f} ms"
        )
        for f in rep.failures:
            lines.append(f"    FAIL {f.case}: left={f.left} right={f.right}")
    lines.append(
        f"summary: {len(reports)} jobs, {passed} passed, {failed} failed, {skipped} skipped"
    )
    return "\n".join(lines) + "\n"


def _render_json(reports: list[Report]) -> str:
    return json.dumps([rep.to_dict() for rep in reports], indent=2) + "\n"


def _render_csv(reports: list[Report], verbose: bool) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    if verbose:
        writer.writerow(["suite", "p", "r", "N", "q", "case", "ok", "left", "right"])
        for rep in reports:
            for row in rep.case_rows:
                writer.writerow(
                    [rep.suite, rep.p, rep.r, rep.precision, rep.q,
                     row["case"], row["ok"], row["left"], row["right"]]
                )
    else:
        writer.writerow(
            ["suite", "p", "r", "N", "q", "cases_total", "cases_passed",
             "skipped", "failures", "elapsed_ms"]
        )
        for rep in reports:
            writer.writerow(
                [rep.suite, rep.p, rep.r, rep.precision, rep.q, rep.cases_total,
                 rep.cases_passed, rep.skipped, len(rep.failures), f"{rep.elapsed_ms:.1f}"]
            )
    return buf.getvalue()


def run(config: Config) -> int:
    """Execute all jobs, write one report record per job, return the exit code."""
    reports: list[Report] = []
    if config.fail_fast or config.parallel == 1:
        # fail-fast forces sequential execution so the short-circuit is deterministic
        for job in config.jobs:
            rep = run_job(job)
            reports.append(rep)
            if config.fail_fast and not rep.passed():
                break
    else:
        with ProcessPoolExecutor(max_workers=config.parallel) as pool:
            reports = list(pool.map(run_job, config.jobs))

    if config.fmt == "json":
        payload = _render_json(reports)
    elif config.fmt == "csv":
        payload = _render_csv(reports, config.verbose)
    else:
        payload = _render_text(reports)

    try:
        if config.out and config.out != "-":
            with open(config.out, "w", encoding="utf-8") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3

    return 0 if all(rep.passed() for rep in reports) else 1


def main(argv=None) -> None:
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(2)
    raise SystemExit(run(config))


if __name__ == "__main__":
    main()
