"""Deterministic JSON and text reports."""

from __future__ import annotations

import json
from typing import Iterable, Sequence

from . import derivations as dv
from .checks import FAIL, Check, grid
from .lts import LieTripleSystem, ValidationReport


def system_header(T: LieTripleSystem) -> dict:
    return {"name": T.name, "field": T.field.to_json(), "dim": T.dim}


def space_entry(T: LieTripleSystem, tag: str) -> dict:
    if tag in ("qder", "gder"):
        J = dv.compute_qder(T) if tag == "qder" else dv.compute_gder(T)
        return {"dim": J.projection.dim, "joint_dim": J.joint.dim,
                "basis": [grid(M) for M in J.projection.maps()]}
    S = dv.compute_space(T, tag)
    return {"dim": S.dim, "basis": [grid(M) for M in S.maps()]}


def spaces_report(T: LieTripleSystem, tags: Iterable[str]) -> dict:
    return {"system": system_header(T),
            "spaces": {tag: space_entry(T, tag) for tag in tags}}


def checks_report(T: LieTripleSystem, checks: Sequence[Check], suite: str, seed: int) -> dict:
    counts: dict[str, int] = {}
    for c in checks:
        counts[c.status] = counts.get(c.status, 0) + 1
    return {"system": system_header(T), "suite": suite, "seed": seed,
            "checks": [c.to_json() for c in checks], "summary": counts}


def validation_report(T: LieTripleSystem, rep: ValidationReport) -> dict:
    return {"system": system_header(T), "passed": rep.passed,
            "violations": [{"identity": v.identity, "indices": list(v.indices),
                            "residual": [T.field.format(x) for x in v.residual]}
                           for v in rep.violations]}


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _grid_text(g: list[list[str]]) -> list[str]:
    if not g:
        return ["    []"]
    width = max(len(x) for row in g for x in row)
    return ["    [" + " ".join(x.rjust(width) for x in row) + "]" for row in g]


def spaces_text(report: dict) -> str:
    sysinfo = report["system"]
    lines = [f"system {sysinfo['name']} over {_field_text(sysinfo['field'])}, dim {sysinfo['dim']}"]
    for tag in sorted(report["spaces"]):
        entry = report["spaces"][tag]
        head = f"{tag}: dim {entry['dim']}"
        if "joint_dim" in entry:
            head += f" (joint {entry['joint_dim']})"
        lines.append(head)
        for k, g in enumerate(entry["basis"]):
            lines.append(f"  basis[{k}]")
            lines.extend(_grid_text(g))
    return "\n".join(lines) + "\n"


def checks_text(report: dict) -> str:
    lines = []
    for c in report["checks"]:
        lines.append(f"{c['status']:<20} {c['id']}: {c['claim']}")
    summary = ", ".join(f"{k}={v}" for k, v in sorted(report["summary"].items()))
    lines.append(summary)
    return "\n".join(lines) + "\n"


def _field_text(f: dict) -> str:
    return "Q" if f["kind"] == "Q" else f"GF({f['p']})"


def has_failure(checks: Sequence[Check]) -> bool:
    return any(c.status == FAIL for c in checks)
