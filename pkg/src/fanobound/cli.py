"""Command-line runner: ``fanobound [SELECTOR] [--format text|json] ...``."""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Sequence

from . import __version__
from .cases import REGISTRY
from .report import SuiteReport, render_text, to_json

EXIT_USAGE = 64


class UsageError(ValueError):
    """Unknown selector or bad arguments; maps to exit code 64."""


def select(selector: str) -> list[str]:
    """Case ids matched by "all", an exact id, or a dotted prefix."""
    if selector == "all":
        return list(REGISTRY)
    if selector in REGISTRY:
        return [selector]
    prefix = selector.rstrip(".") + "."
    matched = [cid for cid in REGISTRY if cid.startswith(prefix)]
    if not matched:
        valid = "\n  ".join(REGISTRY)
        raise UsageError(f"unknown case selector {selector!r}; valid ids:\n  {valid}")
    return matched


def run(selector: str = "all") -> SuiteReport:
    ids = select(selector)
    start = time.perf_counter()
    cases = [REGISTRY[cid][1]() for cid in ids]
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return SuiteReport(version=__version__, cases=cases, runtime_ms=elapsed)


def emit(report: SuiteReport, fmt: str = "text", destination=None) -> str:
    """Serialize and write to ``destination`` (a path, a stream, or None for stdout)."""
    if fmt == "json":
        text = to_json(report)
    elif fmt == "text":
        text = render_text(report)
    else:
        raise UsageError(f"unknown format {fmt!r}")
    if destination is None:
        sys.stdout.write(text)
    elif hasattr(destination, "write"):
        destination.write(text)
    else:
        Path(destination).write_text(text, encoding="utf-8")
    return text


def list_cases() -> str:
    return "".join(f"{cid}\t{anchor}\n" for cid, (anchor, _) in REGISTRY.items())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fanobound",
                description="Recompute the finite case analysis behind -K^3 <= 72.")
    p.add_argument("selector", nargs="?", default="all",
                   help='"all" (default), a case id, or a dotted id prefix')
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--strict-flags", action="store_true",
                   help="exit 2 when any case is FLAG")
    p.add_argument("--list", action="store_true", help="print case ids and anchors, run nothing")
    p.add_argument("--version", action="version", version=f"fanobound {__version__}")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.list:
            sys.stdout.write(list_cases())
            return 0
        report = run(args.selector)
    except UsageError as exc:
        sys.stderr.write(f"fanobound: {exc}\n")
        return EXIT_USAGE
    try:
        emit(report, args.format, args.out)
    except OSError as exc:
        sys.stderr.write(f"fanobound: cannot write {args.out}: {exc}\n")
        return 1
    return report.exit_code(args.strict_flags)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
