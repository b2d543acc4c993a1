"""Command-line harness: parameter sweeps over the identity checks.

`catb2 verify` runs selected checks over an (i, m) grid and prints one
report line per parameter cell, in an order that depends only on the
configuration (never on timing or the worker count).  `catb2 basis` prints
the two basis polynomials for one m together with the extracted constants.

Exit codes: 0 all checks passed, 1 at least one failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import json
import sys
from dataclasses import dataclass
from typing import IO, Iterator

from . import checks
from .checks import CHECK_NAMES, CheckReport
from .constructions import deformed_poly, saito_constant

Params = tuple[tuple[str, int], ...]
# action is "run" or "skip"; skipped cells fail a check's precondition.
Task = tuple[str, str, Params]


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    i_range: tuple[int, int]
    m_range: tuple[int, int]
    k_extra: int
    checks: tuple[str, ...]
    format: str
    jobs: int

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("i", self.i_range), ("m", self.m_range)):
            if lo < 0 or hi < lo:
                raise UsageError(f"empty or negative --{name} range {lo}..{hi}")
        if self.k_extra < 0:
            raise UsageError("--k-extra must be nonnegative")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")
        if self.format not in ("text", "json"):
            raise UsageError(f"unknown format {self.format!r}")
        unknown = [c for c in self.checks if c not in CHECK_NAMES]
        if unknown:
            raise UsageError(f"unknown checks: {', '.join(unknown)}")
        if not self.checks:
            raise UsageError("no checks selected")


def parse_range(text: str) -> tuple[int, int]:
    """Parse 'LO..HI' (or a single 'N', meaning N..N) into a closed range."""
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise UsageError(f"bad range {text!r}, expected LO..HI") from None


def parse_checks(text: str) -> tuple[str, ...]:
    if text.strip() == "all":
        return CHECK_NAMES
    requested = {part.strip() for part in text.split(",") if part.strip()}
    unknown = requested - set(CHECK_NAMES)
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    return tuple(name for name in CHECK_NAMES if name in requested)


def build_tasks(cfg: SweepConfig) -> list[Task]:
    """The full deterministic task list for a sweep, in report order."""
    i_lo, i_hi = cfg.i_range
    m_lo, m_hi = cfg.m_range
    tasks: list[Task] = []

    def cells() -> Iterator[tuple[int, int]]:
        for i in range(i_lo, i_hi + 1):
            for m in range(m_lo, m_hi + 1):
                yield i, m

    for name in cfg.checks:
        if name == "saito":
            for m in range(m_lo, m_hi + 1):
                tasks.append(("run", name, (("m", m),)))
            continue
        if name == "lemma2":
            # a and b sweep the i and m ranges respectively
            for a, b in cells():
                tasks.append(("run", name, (("a", a), ("b", b))))
            continue
        for i, m in cells():
            if name in ("lemma1", "lemma3", "prop1") and i == 0:
                tasks.append(("skip", name, (("i", i), ("m", m))))
            elif name == "v-recurrence" and m == 0:
                tasks.append(("skip", name, (("i", i), ("m", m))))
            elif name == "lemma1":
                for l in range(m + 2):
                    tasks.append(("run", name, (("i", i), ("m", m), ("l", l))))
            elif name == "lemma3":
                for k in range(m + cfg.k_extra + 1):
                    for l in range(k + 2):
                        tasks.append(
                            ("run", name, (("i", i), ("m", m), ("k", k), ("l", l)))
                        )
            elif name == "prop2":
                for k in range(m + cfg.k_extra + 1):
                    tasks.append(("run", name, (("i", i), ("m", m), ("k", k))))
            else:
                tasks.append(("run", name, (("i", i), ("m", m))))
    return tasks


_RUNNERS = {
    "expansion": lambda p: checks.check_expansion(p["i"], p["m"]),
    "ftilde-forms": lambda p: checks.check_ftilde_forms(p["i"], p["m"]),
    "lemma1": lambda p: checks.check_lemma1(p["i"], p["m"], p["l"]),
    "lemma2": lambda p: checks.check_lemma2(p["a"], p["b"]),
    "lemma3": lambda p: checks.check_lemma3(p["i"], p["m"], p["k"], p["l"]),
    "prop1": lambda p: checks.check_prop1(p["i"], p["m"]),
    "prop2": lambda p: checks.check_prop2(p["i"], p["m"], p["k"]),
    "prop3": lambda p: checks.check_prop3(p["i"], p["m"]),
    "theorem": lambda p: checks.check_theorem(p["i"], p["m"]),
    "v-recurrence": lambda p: checks.check_v_recurrence(p["i"], p["m"]),
    "saito": lambda p: checks.check_saito(p["m"]),
    "membership": lambda p: checks.check_membership(p["i"], p["m"]),
    "parity": lambda p: checks.check_parity(p["i"], p["m"]),
    "degree": lambda p: checks.check_degree(p["i"], p["m"]),
}


def execute_task(task: Task) -> CheckReport | None:
    """Run one task; None signals a skipped cell.  Top level for pickling."""
    action, name, params = task
    if action == "skip":
        return None
    return _RUNNERS[name](dict(params))


def _format_line(task: Task, report: CheckReport | None, fmt: str) -> str:
    _, name, params = task
    result = "SKIP" if report is None else ("PASS" if report.passed else "FAIL")
    if fmt == "text":
        parts = [f"CHECK={name}"]
        parts += [f"{key}={value}" for key, value in params]
        parts.append(f"RESULT={result}")
        if report is not None and report.witness is not None:
            parts.append(f"WITNESS={report.witness}")
        return " ".join(parts)
    record: dict = {"check": name, "params": dict(params), "result": result}
    if report is not None and report.witness is not None:
        record["witness"] = report.witness
    if report is not None and report.data:
        record.update(report.data)
    return json.dumps(record)


def run_verify(cfg: SweepConfig, out: IO[str] | None = None) -> int:
    out = out if out is not None else sys.stdout
    tasks = build_tasks(cfg)
    if cfg.jobs == 1:
        results = map(execute_task, tasks)
    else:
        pool = concurrent.futures.ProcessPoolExecutor(max_workers=cfg.jobs)
        results = pool.map(execute_task, tasks, chunksize=4)

    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    for task, report in zip(tasks, results):
        if report is None:
            counts["SKIP"] += 1
        elif report.passed:
            counts["PASS"] += 1
        else:
            counts["FAIL"] += 1
        print(_format_line(task, report, cfg.format), file=out)
    if cfg.jobs > 1:
        pool.shutdown()
    print(
        f"catb2: {counts['PASS']} passed, {counts['FAIL']} failed, "
        f"{counts['SKIP']} skipped",
        file=sys.stderr,
    )
    return 1 if counts["FAIL"] else 0


def run_basis(m: int, fmt: str, out: IO[str] | None = None) -> int:
    out = out if out is not None else sys.stdout
    if m < 0:
        raise UsageError("--m must be nonnegative")
    fields = {
        "f0": deformed_poly(0, m).to_text(),
        "f1": deformed_poly(1, m).to_text(),
        "C": str(saito_constant(m)),
    }
    for i in (0, 1):
        report = checks.check_prop3(i, m)
        if not report.passed:
            print(f"catb2: constant extraction failed: {report.witness}", file=sys.stderr)
            return 1
        assert report.data is not None
        fields[f"A{i}"] = report.data["A"]
        fields[f"B{i}"] = report.data["B"]
    ordered = {k: fields[k] for k in ("f0", "f1", "C", "A0", "A1", "B0", "B1")}
    if fmt == "json":
        print(json.dumps(ordered), file=out)
    else:
        for key, value in ordered.items():
            print(f"{key}={value}", file=out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="catb2",
        description="Exact verification of the Cat(B2, m) derivation basis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="sweep identity checks over a parameter grid")
    pv.add_argument("--i", default="0..4", metavar="LO..HI", help="i range (default 0..4)")
    pv.add_argument("--m", default="0..4", metavar="LO..HI", help="m range (default 0..4)")
    pv.add_argument(
        "--k-extra",
        dest="k_extra",
        type=int,
        default=2,
        metavar="N",
        help="evaluate prop2/lemma3 for k up to m+N (default 2)",
    )
    pv.add_argument("--checks", default="all", metavar="LIST|all", help="comma-separated check names")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes")

    pb = sub.add_parser("basis", help="print the basis polynomials and constants")
    pb.add_argument("--m", type=int, required=True)
    pb.add_argument("--format", choices=("text", "json"), default="text")

    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            cfg = SweepConfig(
                i_range=parse_range(args.i),
                m_range=parse_range(args.m),
                k_extra=args.k_extra,
                checks=parse_checks(args.checks),
                format=args.format,
                jobs=args.jobs,
            )
            return run_verify(cfg)
        return run_basis(args.m, args.format)
    except UsageError as exc:
        print(f"catb2: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
