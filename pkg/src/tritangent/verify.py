"""Built-in verification of the bundled reference configurations.

Checks, in pure exact arithmetic:
  t62     the thin-triangle quadruple has exactly 62 common tangents
  t40     the integer quadruple has exactly 40 common tangents
  lambda  the bundled four lines have exactly the two known transversals

Data can be injected so corruption handling stays testable; the CLI always
uses the compiled-in tables.
"""

from __future__ import annotations

import sys

from .counting import count_tangents
from .data import (
    ruled_four_lines,
    ruled_transversal_pair,
    tangents_62_quadruple,
    tangents_40_quadruple,
)
from .geometry import lines_projectively_equal
from .transversal import TransversalKind, transversals


def _check_count(name, quadruple, expected, out) -> list[str]:
    report = count_tangents(quadruple, exact_only=True)
    failures = []
    if report.n != expected:
        failures.append(f"{name}: expected n={expected}, computed n={report.n}")
    if not report.verdict.in_T:
        failures.append(f"{name}: expected general position, got failures "
                        f"{[f.reason.value for f in report.verdict.failures]}")
    if not failures:
        print(f"{name}: ok (n={report.n}, in_T=true)", file=out)
    return failures


def _check_lambda(lines, expected_pair, out) -> list[str]:
    result = transversals(*lines)
    failures = []
    if result.kind is not TransversalKind.TWO_REAL:
        failures.append(f"lambda: expected two real transversals, got "
                        f"{result.kind.value}")
    else:
        for want in expected_pair:
            if not any(
                lines_projectively_equal(want, got) for got in result.lines
            ):
                failures.append(
                    f"lambda: expected transversal dir={want.dir} "
                    f"moment={want.moment} not among computed "
                    f"{[(l.dir, l.moment) for l in result.lines]}"
                )
    if not failures:
        print("lambda: ok (two transversals match)", file=out)
    return failures


def run_verification(
    which: str = "all",
    quadruple_62=None,
    quadruple_40=None,
    four_lines=None,
    transversal_pair=None,
    out=None,
) -> list[str]:
    """Run the selected checks; returns a list of failure descriptions."""
    out = out if out is not None else sys.stdout
    failures = []
    if which in ("t62", "all"):
        failures += _check_count(
            "t62",
            quadruple_62 if quadruple_62 is not None else tangents_62_quadruple(),
            62,
            out,
        )
    if which in ("t40", "all"):
        failures += _check_count(
            "t40",
            quadruple_40 if quadruple_40 is not None else tangents_40_quadruple(),
            40,
            out,
        )
    if which in ("lambda", "all"):
        failures += _check_lambda(
            four_lines if four_lines is not None else ruled_four_lines(),
            transversal_pair
            if transversal_pair is not None
            else ruled_transversal_pair(),
            out,
        )
    for f in failures:
        print(f"FAIL {f}", file=out)
    return failures
