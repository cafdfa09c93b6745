"""Check results and report serialization.

CSV carries the check rows with the fixed header
``check_id,group,status,lhs,rhs,n,witness``; JSON additionally carries
the growth tables and per-check timings.  Reports round-trip losslessly
(timings are excluded from determinism comparisons).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

FORMAT_VERSION = "1"
CSV_HEADER = ["check_id", "group", "status", "lhs", "rhs", "n", "witness"]

PASS, FAIL, REPORTED = "pass", "fail", "reported"


@dataclass
class CheckResult:
    check_id: str
    group: str
    status: str
    lhs: str = ""
    rhs: str = ""
    n: str = ""
    witness: str = ""
    timing: float = 0.0

    def row(self) -> list[str]:
        return [self.check_id, self.group, self.status,
                self.lhs, self.rhs, self.n, self.witness]

    def to_dict(self) -> dict:
        d = {k: getattr(self, k) for k in CSV_HEADER}
        d["timing"] = self.timing
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "CheckResult":
        return cls(**{k: d.get(k, "") for k in CSV_HEADER},
                   timing=float(d.get("timing", 0.0)))


@dataclass
class GrowthReport:
    results: list[CheckResult] = field(default_factory=list)
    tables: list[dict] = field(default_factory=list)
    format_version: str = FORMAT_VERSION

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == FAIL]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, REPORTED: 0}
        for r in self.results:
            out[r.status] = out.get(r.status, 0) + 1
        return out

    def strip_timings(self) -> "GrowthReport":
        results = [CheckResult(*r.row()) for r in self.results]
        return GrowthReport(results, self.tables, self.format_version)


def emit_report(report: GrowthReport, fmt: str = "csv") -> bytes:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in report.results:
            w.writerow(r.row())
        return buf.getvalue().encode()
    if fmt == "json":
        doc = {
            "format_version": report.format_version,
            "results": [r.to_dict() for r in report.results],
            "tables": report.tables,
        }
        return (json.dumps(doc, indent=1, sort_keys=True) + "\n").encode()
    raise ValueError(f"unknown report format {fmt!r}")


def parse_report(data: bytes, fmt: str = "csv") -> GrowthReport:
    if fmt == "csv":
        rows = list(csv.reader(io.StringIO(data.decode())))
        assert rows and rows[0] == CSV_HEADER, "bad CSV header"
        return GrowthReport([CheckResult(*row) for row in rows[1:]])
    if fmt == "json":
        doc = json.loads(data.decode())
        return GrowthReport(
            [CheckResult.from_dict(d) for d in doc["results"]],
            doc.get("tables", []),
            doc.get("format_version", FORMAT_VERSION),
        )
    raise ValueError(f"unknown report format {fmt!r}")
