"""Machine-readable report documents.

Every rational travels as a canonical string ("p/q" or an integer), never as
a float. ``REPORT_SCHEMA`` is the JSON Schema of an emitted document; a copy
lives in ``docs/report.schema.json``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field

from . import __version__

SCHEMA_VERSION = "1.0"

_RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "narayana report document",
    "type": "object",
    "required": ["schema_version", "tool_version", "command", "records", "summary", "duration_seconds"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "tool_version": {"type": "string"},
        "command": {"type": "array", "items": {"type": "string"}},
        "records": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "ok"],
                "properties": {
                    "kind": {"enum": ["gen", "roots", "interlace", "recur", "logconcave", "suite"]},
                    "ok": {"type": "boolean"},
                    "family": {"type": "string"},
                    "params": {"type": "object", "additionalProperties": {"type": "string"}},
                    "coefficients": {"type": "array", "items": _RATIONAL},
                    "degree": {"type": "integer"},
                    "real_rooted": {"type": ["boolean", "null"]},
                    "positive_roots": {"type": "integer"},
                    "negative_roots": {"type": "integer"},
                    "zero_roots": {"type": "integer"},
                    "intervals": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["lo", "hi", "multiplicity"],
                            "properties": {
                                "lo": _RATIONAL,
                                "hi": _RATIONAL,
                                "multiplicity": {"type": "integer", "minimum": 1},
                            },
                        },
                    },
                    "relation": {"enum": ["StrictlyInterlaces", "Interlaces", "DoesNotInterlace", "NotBothRealRooted"]},
                    "verified": {"type": "boolean"},
                    "ratio": {"anyOf": [_RATIONAL, {"type": "null"}]},
                    "severity": {"enum": ["build", "conjecture-probe"]},
                },
            },
        },
        "summary": {
            "type": "object",
            "required": ["total", "ok", "failed"],
            "properties": {
                "total": {"type": "integer"},
                "ok": {"type": "integer"},
                "failed": {"type": "integer"},
            },
        },
        "duration_seconds": {"type": "number"},
    },
}


@dataclass
class ReportDocument:
    command: list[str]
    records: list[dict]
    duration_seconds: float = 0.0
    tool_version: str = __version__
    schema_version: str = SCHEMA_VERSION
    summary: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.summary:
            ok = sum(1 for r in self.records if r["ok"])
            self.summary = {"total": len(self.records), "ok": ok, "failed": len(self.records) - ok}

    @property
    def ok(self) -> bool:
        return all(r["ok"] for r in self.records)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in ("schema_version", "tool_version", "command", "records", "summary", "duration_seconds")}

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        return cls(
            command=list(d["command"]),
            records=list(d["records"]),
            duration_seconds=d["duration_seconds"],
            tool_version=d["tool_version"],
            schema_version=d["schema_version"],
            summary=dict(d["summary"]),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ReportDocument:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        """Coefficient table: one row per record that carries coefficients."""
        rows = [r for r in self.records if "coefficients" in r]
        width = max((len(r["coefficients"]) for r in rows), default=0)
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "params", "degree"] + [f"c{k}" for k in range(width)])
        for r in rows:
            params = ";".join(f"{k}={v}" for k, v in r.get("params", {}).items())
            w.writerow([r.get("family", ""), params, r["degree"]] + r["coefficients"])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"narayana {self.tool_version}: {' '.join(self.command)}"]
        for r in self.records:
            lines.append(_text_line(r))
        s = self.summary
        lines.append(f"{s['ok']}/{s['total']} ok, {s['failed']} failed, {self.duration_seconds:.2f}s")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "text":
            return self.to_text()
        raise ValueError(f"unknown format {fmt!r}")


def _label(r: dict) -> str:
    params = ", ".join(f"{k}={v}" for k, v in r.get("params", {}).items())
    return f"{r.get('family', r.get('identity', ''))}({params})"


def _text_line(r: dict) -> str:
    mark = "ok  " if r["ok"] else "FAIL"
    kind = r["kind"]
    if kind == "gen":
        return f"{mark} {_label(r)} = [{', '.join(r['coefficients'])}]"
    if kind == "roots":
        return (f"{mark} {_label(r)} deg={r['degree']} real_rooted={r['real_rooted']} "
                f"neg={r.get('negative_roots')} zero={r.get('zero_roots')} pos={r.get('positive_roots')}")
    if kind == "interlace":
        return f"{mark} {r['g']} vs {r['f']}: {r['relation']}" + (f" ({r['witness']})" if r.get("witness") else "")
    if kind == "recur":
        extra = f" residual lead {r['residual_leading_term']}" if r.get("residual_leading_term") else ""
        return f"{mark} {_label(r)} verified={r['verified']}{extra}"
    if kind == "suite":
        return f"{mark} [{r['criterion']:>2}] {r['title']} ({r['severity']}): {r['detail']}"
    details = ", ".join(f"{k}={v}" for k, v in r.items() if k not in ("kind", "ok", "family", "params"))
    return f"{mark} {_label(r)} {details}"
