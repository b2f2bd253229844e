"""Case and suite reports, and their text / JSON serializations.

Values are exact: int, Fraction, bool, or (nested) tuples of those.  In JSON
every scalar becomes a string ("12", "-3/2", "true"); tuples become arrays.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

__all__ = [
    "Status", "Item", "CaseReport", "CaseBuilder", "SuiteReport",
    "encode_value", "decode_value", "suite_to_dict", "suite_from_dict",
    "to_json", "from_json", "render_text",
]


class Status(str, enum.Enum):
    PASS = "PASS"
    FLAG = "FLAG"
    FAIL = "FAIL"


def normalize_value(v):
    if isinstance(v, bool):
        return v
    if isinstance(v, int):
        return v
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else v
    if isinstance(v, (tuple, list)):
        return tuple(normalize_value(x) for x in v)
    raise TypeError(f"unsupported report value {v!r} ({type(v).__name__})")


def encode_value(v) -> Any:
    v = normalize_value(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    return [encode_value(x) for x in v]


def decode_value(s) -> Any:
    if isinstance(s, list):
        return tuple(decode_value(x) for x in s)
    if not isinstance(s, str):
        raise ValueError(f"report values are strings or arrays, got {s!r}")
    if s == "true":
        return True
    if s == "false":
        return False
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return int(s)


def format_value(v) -> str:
    v = normalize_value(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, Fraction)):
        return str(v)
    if len(v) == 1:
        return f"({format_value(v[0])},)"
    return "(" + ", ".join(format_value(x) for x in v) + ")"


@dataclass(frozen=True)
class Item:
    label: str
    value: Any

    def __post_init__(self):
        object.__setattr__(self, "value", normalize_value(self.value))


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    anchor: str
    claimed: tuple[Item, ...]
    computed: tuple[Item, ...]
    status: Status
    witnesses: tuple = ()
    assumptions: tuple[str, ...] = ()

    def computed_value(self, label: str):
        for it in self.computed:
            if it.label == label:
                return it.value
        raise KeyError(label)

    def claimed_value(self, label: str):
        for it in self.claimed:
            if it.label == label:
                return it.value
        raise KeyError(label)


class CaseBuilder:
    """Accumulates claimed/computed pairs and derives the case status.

    A mismatch on an ordinary check is a FAIL.  ``flag`` registers a check
    whose claimed value is a known misprint: a mismatch there yields FLAG,
    never FAIL, and the computed value is reported as is.
    """

    def __init__(self, case_id: str, anchor: str):
        self.case_id = case_id
        self.anchor = anchor
        self._claimed: list[Item] = []
        self._computed: list[Item] = []
        self._witnesses: list = []
        self._assumptions: list[str] = []
        self._failed = False
        self._flagged = False

    def _labels(self):
        return {it.label for it in self._claimed} | {it.label for it in self._computed}

    def _pair(self, label, claimed, computed):
        if label in self._labels():
            raise ValueError(f"duplicate label {label!r} in case {self.case_id}")
        self._claimed.append(Item(label, claimed))
        self._computed.append(Item(label, computed))
        return normalize_value(claimed) == normalize_value(computed)

    def check(self, label: str, claimed, computed) -> bool:
        ok = self._pair(label, claimed, computed)
        if not ok:
            self._failed = True
        return ok

    def flag(self, label: str, claimed, computed) -> bool:
        ok = self._pair(label, claimed, computed)
        if not ok:
            self._flagged = True
        return ok

    def record(self, label: str, computed):
        """A computed value with no printed counterpart."""
        if label in self._labels():
            raise ValueError(f"duplicate label {label!r} in case {self.case_id}")
        self._computed.append(Item(label, computed))

    def witness(self, *values):
        self._witnesses.extend(normalize_value(v) for v in values)

    def assume(self, text: str):
        self._assumptions.append(text)

    def build(self) -> CaseReport:
        if self._failed:
            status = Status.FAIL
        elif self._flagged:
            status = Status.FLAG
        else:
            status = Status.PASS
        return CaseReport(
            case_id=self.case_id,
            anchor=self.anchor,
            claimed=tuple(self._claimed),
            computed=tuple(self._computed),
            status=status,
            witnesses=tuple(sorted(self._witnesses)),
            assumptions=tuple(self._assumptions),
        )


@dataclass
class SuiteReport:
    version: str
    cases: list[CaseReport]
    runtime_ms: int = 0
    summary: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.cases = sorted(self.cases, key=lambda c: c.case_id)
        self.summary = {s.value: 0 for s in Status}
        for c in self.cases:
            self.summary[c.status.value] += 1

    def exit_code(self, strict_flags: bool = False) -> int:
        if self.summary["FAIL"]:
            return 1
        if strict_flags and self.summary["FLAG"]:
            return 2
        return 0


def _case_to_dict(c: CaseReport) -> dict:
    return {
        "id": c.case_id,
        "anchor": c.anchor,
        "claimed": [{"label": it.label, "value": encode_value(it.value)} for it in c.claimed],
        "computed": [{"label": it.label, "value": encode_value(it.value)} for it in c.computed],
        "status": c.status.value,
        "witnesses": [encode_value(w) for w in c.witnesses],
        "assumptions": list(c.assumptions),
    }


def _case_from_dict(d: dict) -> CaseReport:
    return CaseReport(
        case_id=d["id"],
        anchor=d["anchor"],
        claimed=tuple(Item(x["label"], decode_value(x["value"])) for x in d["claimed"]),
        computed=tuple(Item(x["label"], decode_value(x["value"])) for x in d["computed"]),
        status=Status(d["status"]),
        witnesses=tuple(decode_value(w) for w in d["witnesses"]),
        assumptions=tuple(d["assumptions"]),
    )


def suite_to_dict(report: SuiteReport) -> dict:
    return {
        "version": report.version,
        "cases": [_case_to_dict(c) for c in report.cases],
        "summary": {k: str(v) for k, v in report.summary.items()},
        "runtime_ms": str(report.runtime_ms),
    }


def suite_from_dict(d: dict) -> SuiteReport:
    rep = SuiteReport(
        version=d["version"],
        cases=[_case_from_dict(c) for c in d["cases"]],
        runtime_ms=int(d.get("runtime_ms", "0")),
    )
    if {k: str(v) for k, v in rep.summary.items()} != d["summary"]:
        raise ValueError("summary does not match the case statuses")
    return rep


def to_json(report: SuiteReport) -> str:
    return json.dumps(suite_to_dict(report), indent=2, ensure_ascii=False) + "\n"


def from_json(text: str) -> SuiteReport:
    return suite_from_dict(json.loads(text))


def _items_text(items) -> str:
    return "; ".join(f"{it.label}={format_value(it.value)}" for it in items)


def render_text(report: SuiteReport) -> str:
    lines = [f"fanobound {report.version}", ""]
    for c in report.cases:
        lines.append(f"[{c.status.value}] {c.case_id}")
        lines.append(f"    anchor:   {c.anchor}")
        lines.append(f"    claimed:  {_items_text(c.claimed) or '-'}")
        extra = [it for it in c.computed if it.label not in {x.label for x in c.claimed}]
        shown = [it for it in c.computed if it not in extra]
        lines.append(f"    computed: {_items_text(shown) or '-'}")
        if extra:
            lines.append(f"    recorded: {_items_text(extra)}")
        if c.witnesses:
            lines.append(f"    witnesses: {', '.join(format_value(w) for w in c.witnesses)}")
        for a in c.assumptions:
            lines.append(f"    assumes:  {a}")
    s = report.summary
    lines.append("")
    counts = f"{s['PASS']} PASS, {s['FLAG']} FLAG, {s['FAIL']} FAIL"
    if s["FAIL"]:
        lines.append(f"FAILED: {counts}")
    elif s["FLAG"]:
        lines.append(f"PASSED WITH FLAGS: {counts} (flags mark printed values that disagree with recomputation)")
    else:
        lines.append(f"PASSED: {counts}")
    lines.append(f"runtime: {report.runtime_ms} ms")
    return "\n".join(lines) + "\n"
