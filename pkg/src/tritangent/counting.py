"""Tangent counting over the 81 edge quadruples of four triangles.

A line is tangent to a triangle when it meets one of its closed edges; a
common tangent of four triangles therefore solves one of the 81 four-line
transversal problems and additionally hits all four segments.  This module
enumerates those quadruples, classifies general position (two transversals
per quadruple, all distinct), and assembles the tangent count together with
the finite/infinite partition of quadruples.

The 81 solves are independent; records are always assembled in lexicographic
edge-label order so output is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Sequence

from .geometry import (
    PluckerLine,
    Triangle,
    line_hits_edge,
    line_key,
)
from .transversal import TransversalKind, TransversalResult, transversals

EdgeLabels = tuple  # (e1, e2, e3, e4), 1-based edge index per triangle

ALL_QUADRUPLES = tuple(product((1, 2, 3), repeat=4))


class FailureReason(Enum):
    INFINITE = "infinite"
    DOUBLE_ROOT = "double_root"
    SHARED_TRANSVERSAL = "shared_transversal"


@dataclass(frozen=True)
class PositionFailure:
    edge_quadruple: EdgeLabels
    reason: FailureReason
    other_quadruple: EdgeLabels | None = None


@dataclass(frozen=True)
class GeneralPositionVerdict:
    in_T: bool
    failures: tuple = ()


@dataclass(frozen=True)
class TangentLine:
    line: PluckerLine
    quadruple: EdgeLabels
    root_index: int


@dataclass(frozen=True)
class TangentReport:
    n: int
    tangents: tuple
    verdict: GeneralPositionVerdict
    f_count: int
    i_count: int

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "in_T": self.verdict.in_T,
            "f_count": self.f_count,
            "i_count": self.i_count,
            "tangents": [
                {
                    "edges": list(t.quadruple),
                    "root": t.root_index,
                    "line": {
                        "dir": [_scalar_json(c) for c in t.line.dir],
                        "moment": [_scalar_json(c) for c in t.line.moment],
                    },
                }
                for t in self.tangents
            ],
        }


def _scalar_json(c) -> dict:
    from .exact import QuadExt

    return QuadExt.of(c).to_json()


@dataclass(frozen=True)
class QuadrupleRecord:
    labels: EdgeLabels
    result: TransversalResult
    hits: tuple  # per real affine root: True if it meets all four edges


def check_quadruple(triangles: Sequence[Triangle]) -> None:
    if len(triangles) != 4:
        raise ValueError(f"need exactly 4 triangles, got {len(triangles)}")


def solve_quadruples(triangles: Sequence[Triangle]) -> list[QuadrupleRecord]:
    """Solve all 81 edge-line transversal problems and test segment hits."""
    check_quadruple(triangles)
    records = []
    for labels in ALL_QUADRUPLES:
        edges = [triangles[i].edges[labels[i] - 1] for i in range(4)]
        result = transversals(*(e.support for e in edges))
        hits = []
        if result.kind in (TransversalKind.TWO_REAL, TransversalKind.ONE_DOUBLE):
            for line in result.lines:
                hits.append(
                    line.is_affine and all(line_hits_edge(line, e) for e in edges)
                )
        records.append(QuadrupleRecord(labels, result, tuple(hits)))
    return records


def classify_general_position(
    triangles: Sequence[Triangle],
    records: list[QuadrupleRecord] | None = None,
) -> GeneralPositionVerdict:
    """Membership in the general-position set: every quadruple yields two
    distinct (possibly complex) transversals and no two quadruples share a
    real transversal line."""
    if records is None:
        records = solve_quadruples(triangles)
    failures = []
    for rec in records:
        if rec.result.kind is TransversalKind.INFINITE:
            failures.append(PositionFailure(rec.labels, FailureReason.INFINITE))
        elif rec.result.kind is TransversalKind.ONE_DOUBLE:
            failures.append(PositionFailure(rec.labels, FailureReason.DOUBLE_ROOT))
    seen: dict = {}
    for rec in records:
        if rec.result.kind is not TransversalKind.TWO_REAL:
            continue
        for line in rec.result.lines:
            key = line_key(line)
            if key in seen and seen[key] != rec.labels:
                failures.append(
                    PositionFailure(
                        rec.labels,
                        FailureReason.SHARED_TRANSVERSAL,
                        other_quadruple=seen[key],
                    )
                )
            else:
                seen[key] = rec.labels
    return GeneralPositionVerdict(not failures, tuple(failures))


def _assemble_report(
    triangles: Sequence[Triangle], records: list[QuadrupleRecord]
) -> TangentReport:
    verdict = classify_general_position(triangles, records)
    f_count = sum(
        1 for r in records if r.result.kind is not TransversalKind.INFINITE
    )
    tangents = []
    for rec in records:
        for idx, hit in enumerate(rec.hits):
            if hit:
                tangents.append(
                    TangentLine(rec.result.lines[idx], rec.labels, idx)
                )
    if verdict.in_T:
        n = len(tangents)
    else:
        n = len({line_key(t.line) for t in tangents})
    return TangentReport(
        n=n,
        tangents=tuple(tangents),
        verdict=verdict,
        f_count=f_count,
        i_count=81 - f_count,
    )


def count_tangents(
    triangles: Sequence[Triangle], exact_only: bool = False
) -> TangentReport:
    """Count the lines tangent to all four triangles.

    With ``exact_only`` false a certified floating-point filter screens the
    81 solves first and only quadruples it cannot decide are recomputed
    exactly; the result is identical to the pure exact path by construction.
    """
    check_quadruple(triangles)
    if not exact_only:
        from .search import filtered_report

        report = filtered_report(triangles)
        if report is not None:
            return report
    return _assemble_report(triangles, solve_quadruples(triangles))


def partition_FI(triangles: Sequence[Triangle]) -> tuple[int, int]:
    """(finite, infinite) partition sizes of the 81 edge quadruples."""
    records = solve_quadruples(triangles)
    f_count = sum(
        1 for r in records if r.result.kind is not TransversalKind.INFINITE
    )
    return f_count, 81 - f_count
