"""Stable output schemas of the command-line tool.

Every number that comes from an instance is printed as a decimal string, never
as a binary float. JSON objects keep a fixed key order so that two runs on the
same input are byte-identical.
"""
from __future__ import annotations

import json
from typing import List, Optional, Sequence

from ..core.chains import decompose_chains
from ..core.scalar import format_scalar
from ..harness import BenchReport, VerifyReport
from ..solver import SolveResult


def dumps(data) -> str:
    return json.dumps(data, ensure_ascii=False, indent=4)


def solve_payload(result: SolveResult, with_chains: bool = False) -> dict:
    inst = result.instance
    payload = {
        "delta": format_scalar(inst.delta, inst.scale),
        "total_cost": str(result.total_cost),
        "positions": result.positions_in_input_order(),
        "displacements": result.displacements_in_input_order(),
    }
    if with_chains:
        payload["chains"] = [c.to_dict() for c in decompose_chains(inst, result.configuration)]
    return payload


def solve_plain(payload: dict) -> str:
    lines = [f"delta {payload['delta']}", f"total_cost {payload['total_cost']}"]
    lines.extend(f"{p} {d}" for p, d in zip(payload["positions"], payload["displacements"]))
    return "\n".join(lines)


def format_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """Right-aligned text columns."""
    widths = [max([len(h)] + [len(r[k]) for r in rows]) for k, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths))]
    lines.extend("  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in rows)
    return "\n".join(lines)


def _seconds(value: Optional[float]) -> str:
    return "-" if value is None else f"{value:.4f}"


def bench_table(report: BenchReport) -> str:
    headers = ["family", "n", "fast_s", "naive_s", "heap_ops", "bound", "shifts", "merges", "ok"]
    rows: List[List[str]] = [
        [row.family, str(row.n), _seconds(row.wall_time_fast), _seconds(row.wall_time_naive),
         str(row.heap_ops), str(int(row.heap_ops_bound)), str(row.shifts), str(row.merges),
         "yes" if row.within_bound else "NO"]
        for row in report.rows
    ]
    return format_table(headers, rows)


def verify_table(report: VerifyReport) -> str:
    summary = format_table(["oracle", "count", "mismatches"],
                           [[report.oracle, str(report.count), str(len(report.failures))]])
    if not report.failures:
        return summary
    detail = format_table(
        ["index", "family", "n", "seed", "reason"],
        [[str(f.index), f.spec.to_dict()["family"], str(f.spec.n), str(f.spec.seed), f.reason[:60]]
         for f in report.failures],
    )
    return summary + "\n\n" + detail
