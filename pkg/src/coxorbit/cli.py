"""Command-line entry point: ``coxorbit roots LABEL`` and ``coxorbit verify ...``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence, TextIO

from . import catalog, suites
from .certificate import FAIL, Certificate, dumps, encode, summarize
from .rootsystem import get

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json-lines", "csv", "summary")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    types: list[str]
    checks: list[str]
    max_rank: int | None = None
    output: str | None = None
    format: str = "json-lines"
    jobs: int = 1
    seed: int = 0
    deep: bool = False
    options: suites.Options = field(default_factory=suites.Options)


def _split(values: Sequence[str] | None) -> list[str]:
    out = []
    for v in values or []:
        out.extend(x.strip() for x in v.split(",") if x.strip())
    return out


def build_config(ns: argparse.Namespace) -> RunConfig:
    """Validate names before any work is done."""
    types = _split(ns.types)
    if types:
        for t in types:
            try:
                catalog.datum(t)
            except catalog.UnknownTypeError as exc:
                raise UsageError(str(exc)) from None
        types = [catalog.datum(t).label for t in types]
    else:
        types = list(suites.DEFAULT_TYPES) + (list(suites.DEEP_TYPES) if ns.deep else [])
    try:
        checks = suites.expand_checks(_split(ns.checks) or ["all"])
    except KeyError as exc:
        raise UsageError(f"unknown check {exc.args[0]!r}; choose from {', '.join(suites.CHECK_NAMES)}") from None
    if ns.max_rank is not None:
        if ns.max_rank < 1:
            raise UsageError("--max-rank must be positive")
        types = [t for t in types if suites.rank_of(t) <= ns.max_rank]
    if ns.jobs < 1:
        raise UsageError("--jobs must be positive")
    return RunConfig(
        types=types, checks=checks, max_rank=ns.max_rank, output=ns.output, format=ns.format,
        jobs=ns.jobs, seed=ns.seed, deep=ns.deep, options=suites.Options(seed=ns.seed),
    )


def _run_task(args: tuple[str, str, suites.Options]) -> list[Certificate]:
    label, check, opts = args
    return suites.run_suite(label, check, opts)


def run(config: RunConfig, log: TextIO = sys.stderr) -> list[Certificate]:
    """All certificates of a run, in canonical (type, check) order."""
    work = [(lab, chk, config.options) for lab, chk in suites.tasks(config.types, config.checks)]
    t0 = time.perf_counter()
    if config.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            results = list(pool.map(_run_task, work))
    else:
        results = [_run_task(w) for w in work]
    certs = [c for batch in results for c in batch]
    print(f"{len(work)} suites, {len(certs)} certificates in {time.perf_counter() - t0:.1f}s", file=log)
    return certs


def write_report(certs: list[Certificate], fmt: str, out: TextIO) -> None:
    summary = summarize(certs)
    if fmt == "json-lines":
        for c in certs:
            out.write(dumps(c) + "\n")
        for s in summary:
            out.write(json.dumps(s, separators=(",", ":"), sort_keys=True) + "\n")
    elif fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["label", "check", "J", "alpha", "status", "witness"])
        for c in certs:
            doc = c.to_json()
            w.writerow([
                c.label, c.check,
                json.dumps(doc["J"], separators=(",", ":")),
                json.dumps(doc["alpha"], separators=(",", ":")),
                c.status,
                json.dumps(doc["witness"], separators=(",", ":")) if "witness" in doc else "",
            ])
    else:
        for s in summary:
            out.write(json.dumps(s, separators=(",", ":"), sort_keys=True) + "\n")


def cmd_roots(ns: argparse.Namespace) -> int:
    try:
        s = get(ns.label)
    except catalog.UnknownTypeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    doc = s.to_json()
    doc["roots"] = [encode(r) for r in doc["roots"]]
    print(json.dumps(doc, separators=(",", ":")))
    return EXIT_OK


def cmd_verify(ns: argparse.Namespace) -> int:
    try:
        config = build_config(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    certs = run(config)
    if config.output and config.output != "-":
        with open(config.output, "w", encoding="utf-8", newline="") as fh:
            write_report(certs, config.format, fh)
    else:
        buf = io.StringIO()
        write_report(certs, config.format, buf)
        sys.stdout.write(buf.getvalue())
    return EXIT_FAIL if any(c.status == FAIL for c in certs) else EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="coxorbit", description="Parabolic orbit verification for finite Coxeter groups.")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("roots", help="print the root system of a type as JSON")
    r.add_argument("label", help="type label, e.g. A3, H4, I2(5), B3xA2")
    r.set_defaults(func=cmd_roots)

    v = sub.add_parser("verify", help="run verification suites and emit certificates")
    v.add_argument("--types", action="append", help="comma-separated type labels (default: all supported)")
    v.add_argument("--checks", action="append", help="comma-separated check names or 'folding', 'rootstring', 'all'")
    v.add_argument("--max-rank", type=int, default=None, help="skip types of larger rank")
    v.add_argument("--output", default=None, help="output path (default: stdout)")
    v.add_argument("--format", choices=FORMATS, default="json-lines")
    v.add_argument("--jobs", type=int, default=1, help="worker processes")
    v.add_argument("--seed", type=int, default=0, help="seed for sampled checks")
    v.add_argument("--deep", action="store_true", help="include E8 in the default type list")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    ns = make_parser().parse_args(argv)
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
