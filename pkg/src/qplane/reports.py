"""Structured check reports with deterministic JSON serialization."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

__all__ = ["CheckRecord", "CheckReport", "merge_reports"]

PASS, FAIL, FINDING = "pass", "fail", "finding"


@dataclass
class CheckRecord:
    id: str
    status: str          # pass | fail | finding
    witness: str = ""
    residual: str = ""


@dataclass
class CheckReport:
    suite: str
    checks: list = field(default_factory=list)
    rules: list = field(default_factory=list)   # (lhs, rhs, provenance)
    timing_ms: float = 0.0

    def add(self, id, ok, detail="", finding=False):
        if finding:
            self.checks.append(CheckRecord(id, FINDING, witness=detail))
        elif ok:
            self.checks.append(CheckRecord(id, PASS))
        else:
            self.checks.append(CheckRecord(id, FAIL, residual=detail))

    def extend_results(self, results):
        """Absorb (id, ok, detail) triples."""
        for id, ok, detail in results:
            self.add(id, ok, detail)

    @property
    def ok(self):
        return all(c.status != FAIL for c in self.checks)

    @property
    def counts(self):
        out = {PASS: 0, FAIL: 0, FINDING: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def provenance_counts(self):
        out = {}
        for _, _, prov in self.rules:
            out[prov] = out.get(prov, 0) + 1
        return out

    def to_json(self, deterministic=True):
        # timing is zeroed in serialized reports so identical seeds give
        # byte-identical files; wall time is printed on the console instead
        return {
            "suite": self.suite,
            "checks": [{"id": c.id, "status": c.status,
                        "witness": c.witness, "residual": c.residual}
                       for c in self.checks],
            "rules": [{"lhs": l, "rhs": r, "provenance": p}
                      for (l, r, p) in self.rules],
            "timing_ms": 0 if deterministic else self.timing_ms,
        }

    def render(self, verbose=False):
        lines = []
        c = self.counts
        for rec in self.checks:
            if rec.status == PASS and not verbose:
                continue
            tagged = {PASS: "[PASS]", FAIL: "[FAIL]", FINDING: "[FINDING]"}[rec.status]
            detail = rec.residual or rec.witness
            lines.append(f"  {tagged} {rec.id}" + (f" -- {detail}" if detail else ""))
        lines.append(f"  {self.suite}: {c['pass']} pass, {c['fail']} fail, "
                     f"{c['finding']} finding(s)  [{self.timing_ms:.0f} ms]")
        return "\n".join(lines)


def merge_reports(reports, suite="check-all"):
    out = CheckReport(suite)
    for r in reports:
        out.checks.extend(r.checks)
        out.rules.extend(r.rules)
        out.timing_ms += r.timing_ms
    return out


def write_json(reports, path):
    payload = [r.to_json() for r in reports]
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")
