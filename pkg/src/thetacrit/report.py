"""Machine-readable run reports.

A report is a list of JSON records, one per line, each carrying ``schema``
and ``kind``. Kinds:

``command``
    the argv echo, the seed (if any) and the effective configuration.
``check``
    ``name``, ``value``, ``tol``, ``status`` and ``soft``. ``value`` is either
    a number (pass iff ``value <= tol``) or a boolean (pass iff it equals
    ``expected``). Storing the inputs lets :func:`recheck` recompute every
    status after a round trip.
``row``
    one line of an exact table, ``table`` plus free-form fields.
``note``
    human-readable text.
``summary``
    counts and the exit status. Recomputed on load, never trusted.

Floats are written with 15 significant digits, complex numbers as
``{"re": .., "im": ..}`` and exact values as strings.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

SCHEMA = "thetacrit.report/1"
_KIND_ORDER = {"command": 0, "row": 1, "check": 2, "note": 3, "summary": 4}

EXIT_PASS, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


def _round(x: float) -> float | str:
    if math.isnan(x) or math.isinf(x):
        return str(x)
    return float(f"{x:.15g}")


def encode(value: Any) -> Any:
    """Convert a value into its JSON form (15 significant digits for floats)."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _round(value)
    if isinstance(value, complex):
        return {"re": _round(value.real), "im": _round(value.imag)}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if hasattr(value, "item"):  # numpy scalars
        return encode(value.item())
    return str(value)


def _check_status(value, tol, expected) -> str:
    if isinstance(value, bool) or tol is None:
        return "pass" if value == expected else "fail"
    if isinstance(value, str):  # nan / inf
        return "fail"
    return "pass" if value <= tol else "fail"


@dataclass
class RunReport:
    command: list[str]
    seed: Optional[int] = None
    config: dict = field(default_factory=dict)
    records: list[dict] = field(default_factory=list)

    def _add(self, kind: str, **fields) -> dict:
        rec = {"schema": SCHEMA, "kind": kind, **encode(fields)}
        self.records.append(rec)
        return rec

    def check(self, name: str, value, tol: Optional[float] = None, expected=True,
              soft: bool = False, **info) -> bool:
        """Record a check and return whether it passed."""
        if not isinstance(value, bool) and tol is not None:
            value = float(value)
        rec = self._add("check", name=name, value=value, tol=tol, expected=expected, soft=soft,
                        info=info)
        rec["status"] = _check_status(rec["value"], rec["tol"], rec["expected"])
        return rec["status"] == "pass"

    def row(self, table: str, **fields):
        n = sum(1 for r in self.records if r["kind"] == "row" and r["table"] == table)
        self._add("row", table=table, index=n, **fields)

    def note(self, text: str):
        n = sum(1 for r in self.records if r["kind"] == "note")
        self._add("note", index=n, text=text)

    def checks(self) -> list[dict]:
        return [r for r in self.records if r["kind"] == "check"]

    def failures(self, include_soft: bool = False) -> list[dict]:
        return [r for r in self.checks() if r["status"] == "fail" and (include_soft or not r["soft"])]

    @property
    def exit_status(self) -> int:
        return EXIT_MISMATCH if self.failures() else EXIT_PASS

    def to_records(self) -> list[dict]:
        head = {"schema": SCHEMA, "kind": "command", "argv": list(self.command),
                "seed": self.seed, "config": encode(self.config)}
        checks = self.checks()
        summary = {"schema": SCHEMA, "kind": "summary", "checks": len(checks),
                   "failed": len(self.failures()), "soft_failed": len(self.failures(True)) - len(self.failures()),
                   "exit_status": self.exit_status}
        return [head] + canonical_order(self.records) + [summary]

    def to_jsonl(self) -> str:
        return "\n".join(json.dumps(r, sort_keys=True, ensure_ascii=False) for r in self.to_records()) + "\n"

    def summary_lines(self) -> list[str]:
        ordered = canonical_order(self.records)
        out = [r["text"] for r in ordered if r["kind"] == "note"]
        for r in ordered:
            if r["kind"] == "check":
                val = r["value"]
                shown = val if isinstance(val, (bool, str)) else f"{val:.3e}"
                tol = "" if r["tol"] is None else f" (tol {r['tol']:.1e})"
                tag = r["status"].upper() + (" [soft]" if r["soft"] and r["status"] == "fail" else "")
                out.append(f"{tag:<6} {r['name']}: {shown}{tol}")
        fails = self.failures()
        out.append(f"{len(self.checks())} checks, {len(fails)} failed, exit {self.exit_status}")
        return out


def canonical_order(records: Iterable[dict]) -> list[dict]:
    """Sort records so that the emitted order does not depend on evaluation order."""
    def key(r):
        kind = r["kind"]
        if kind == "row":
            return (_KIND_ORDER[kind], r["table"], r["index"], "")
        if kind == "note":
            return (_KIND_ORDER[kind], "", r["index"], "")
        if kind == "check":
            return (_KIND_ORDER[kind], r["name"], 0, json.dumps(r, sort_keys=True))
        return (_KIND_ORDER.get(kind, 9), "", 0, json.dumps(r, sort_keys=True))
    return sorted(records, key=key)


def loads(text: str) -> RunReport:
    """Parse a JSON-lines report. Summary records are dropped and recomputed."""
    rep = None
    body = []
    for line in text.splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec.get("schema") != SCHEMA:
            raise ValueError(f"unknown report schema {rec.get('schema')!r}")
        if rec["kind"] == "command":
            rep = RunReport(rec["argv"], rec.get("seed"), rec.get("config") or {})
        elif rec["kind"] != "summary":
            body.append(rec)
    if rep is None:
        raise ValueError("report has no command record")
    rep.records = body
    return rep


def recheck(rep: RunReport) -> list[tuple[str, str, str]]:
    """Recompute every check status; return ``(name, stored, recomputed)`` for disagreements."""
    out = []
    for r in rep.checks():
        new = _check_status(r["value"], r["tol"], r["expected"])
        if new != r["status"]:
            out.append((r["name"], r["status"], new))
        r["status"] = new
    return out
