"""Random-search harness: tangent-count statistics over random triangles.

Samples quadruples of triangles with integer vertices drawn uniformly from
a cube, counts their common tangents through the filtered-exact pipeline,
and accumulates the distribution.  Results are fully determined by
(samples, seed, coord_bound): every sample owns a counter-derived random
stream, so thread count and scheduling cannot change the histogram.

Samples that fail general position are binned as degenerate rather than
resampled, and the rate is reported.
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction as Q

import numpy as np

from . import kernel
from .counting import (
    ALL_QUADRUPLES,
    TangentLine,
    TangentReport,
    GeneralPositionVerdict,
    count_tangents,
)
from .data import BASELINE_DISTRIBUTION, BASELINE_SAMPLES
from .exact import IntervalF
from .geometry import (
    InternalInconsistency,
    Triangle,
    cross,
    is_zero_vec,
    line_hits_edge,
    triangles_to_json,
    v_sub,
)
from .transversal import TransversalKind, transversals


# ---------------------------------------------------------------------------
# filtered evaluation of one quadruple of triangles

def interval_arrays(triangles) -> tuple[np.ndarray, np.ndarray]:
    """Outward-rounded float bounds on all 36 vertex coordinates."""
    lo = np.empty((4, 3, 3), dtype=np.float64)
    hi = np.empty((4, 3, 3), dtype=np.float64)
    for t, tri in enumerate(triangles):
        for k, v in enumerate(tri.vertices):
            for c in range(3):
                iv = IntervalF.from_fraction(v[c])
                lo[t, k, c] = iv.lo
                hi[t, k, c] = iv.hi
    return lo, hi


def kernel_counts(triangles):
    """(status, counts, pairs_uncertain) from the active kernel."""
    lo, hi = interval_arrays(triangles)
    return kernel.process_sample(lo, hi)


def filtered_report(triangles) -> TangentReport | None:
    """Full tangent report via the float filter, or None when any of the 81
    subproblems needs exact resolution.

    A fully certified sample is automatically in general position (exact
    degeneracies can never be certified by intervals), so the verdict is
    clean and only tangent-carrying quadruples are recomputed exactly to
    recover line coordinates.
    """
    status, counts, pairs_uncertain = kernel_counts(triangles)
    if pairs_uncertain or any(s == kernel.STATUS_UNCERTAIN for s in status):
        return None
    n = int(sum(counts))
    tangents = []
    for qi, c in enumerate(counts):
        if not c:
            continue
        labels = ALL_QUADRUPLES[qi]
        edges = [triangles[i].edges[labels[i] - 1] for i in range(4)]
        result = transversals(*(e.support for e in edges))
        if result.kind is not TransversalKind.TWO_REAL:
            raise InternalInconsistency("filter certified a non-real quadruple")
        hits = 0
        for idx, line in enumerate(result.lines):
            if line.is_affine and all(line_hits_edge(line, e) for e in edges):
                tangents.append(TangentLine(line, labels, idx))
                hits += 1
        if hits != c:
            raise InternalInconsistency("filtered count disagrees with exact")
    return TangentReport(
        n=n,
        tangents=tuple(tangents),
        verdict=GeneralPositionVerdict(True, ()),
        f_count=81,
        i_count=0,
    )


def evaluate_sample(triangles) -> tuple[bool, int, bool]:
    """(in_T, n, exact_fallback) for one quadruple."""
    status, counts, pairs_uncertain = kernel_counts(triangles)
    if not pairs_uncertain and all(
        s != kernel.STATUS_UNCERTAIN for s in status
    ):
        return True, int(sum(counts)), False
    report = count_tangents(triangles, exact_only=True)
    return report.verdict.in_T, report.n, True


# ---------------------------------------------------------------------------
# sampling

@dataclass(frozen=True)
class SearchConfig:
    samples: int
    seed: int = 0
    coord_bound: int = 1000
    threads: int = 1
    record_top: int = 4

    def __post_init__(self):
        if self.samples < 1:
            raise ValueError("samples must be positive")
        if self.coord_bound < 1:
            raise ValueError("coord_bound must be positive")
        if self.threads < 1:
            raise ValueError("threads must be positive")


def sample_stream(seed: int, index: int) -> np.random.Generator:
    """Independent per-sample stream, keyed by (seed, sample index)."""
    key = np.array([seed, index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def sample_quadruple(rng, coord_bound: int = 1000) -> list[Triangle]:
    """Four random triangles; collinear vertex draws are rejected and
    redrawn from the same stream."""
    triangles = []
    for index in range(4):
        while True:
            pts = rng.integers(-coord_bound, coord_bound + 1, size=(3, 3))
            verts = [tuple(int(c) for c in row) for row in pts]
            if not is_zero_vec(
                cross(v_sub(verts[1], verts[0]), v_sub(verts[2], verts[0]))
            ):
                break
        triangles.append(
            Triangle(
                *[tuple(Q(c) for c in v) for v in verts], index=index + 1
            )
        )
    return triangles


# ---------------------------------------------------------------------------
# the histogram

@dataclass
class Histogram:
    samples: int
    coord_bound: int
    counts: dict = field(default_factory=dict)
    degenerate: int = 0
    max_seen: int = -1
    top_configs: list = field(default_factory=list)
    exact_fallbacks: int = 0

    def add(self, index: int, in_T: bool, n: int, fallback: bool, record_top: int):
        if fallback:
            self.exact_fallbacks += 1
        if not in_T:
            self.degenerate += 1
            return
        self.counts[n] = self.counts.get(n, 0) + 1
        self.max_seen = max(self.max_seen, n)
        self.top_configs.append((n, index))
        self.top_configs.sort(key=lambda t: (-t[0], t[1]))
        del self.top_configs[record_top:]

    def to_csv(self) -> str:
        lines = ["count,frequency"]
        for n in sorted(self.counts):
            lines.append(f"{n},{self.counts[n]}")
        lines.append(f"degenerate,{self.degenerate}")
        return "\n".join(lines) + "\n"


def run_search(cfg: SearchConfig, progress: bool = False) -> Histogram:
    """Deterministic histogram of tangent counts over random quadruples."""

    def one(index: int):
        rng = sample_stream(cfg.seed, index)
        triangles = sample_quadruple(rng, cfg.coord_bound)
        in_T, n, fallback = evaluate_sample(triangles)
        return in_T, n, fallback

    hist = Histogram(samples=cfg.samples, coord_bound=cfg.coord_bound)
    done = 0

    def consume(index, outcome):
        nonlocal done
        in_T, n, fallback = outcome
        hist.add(index, in_T, n, fallback, cfg.record_top)
        done += 1
        if progress and done % 5000 == 0:
            print(f"  {done}/{cfg.samples} samples", file=sys.stderr)

    if cfg.threads == 1:
        for i in range(cfg.samples):
            consume(i, one(i))
    else:
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            for i, outcome in enumerate(pool.map(one, range(cfg.samples))):
                consume(i, outcome)
    return hist


def top_config_quadruples(cfg: SearchConfig, hist: Histogram) -> list:
    """Re-derive the recorded top configurations from their sample indices."""
    out = []
    for n, index in hist.top_configs:
        rng = sample_stream(cfg.seed, index)
        triangles = sample_quadruple(rng, cfg.coord_bound)
        out.append((n, index, triangles))
    return out


def summarize(hist: Histogram) -> dict:
    """Fractions per tangent count plus baseline comparison columns."""
    if hist.samples < 1:
        raise ValueError("empty histogram")
    all_counts = sorted(hist.counts)
    fractions = {n: hist.counts[n] / hist.samples for n in all_counts}
    summary = {
        "samples": hist.samples,
        "coord_bound": hist.coord_bound,
        "max_seen": hist.max_seen if hist.max_seen >= 0 else None,
        "degenerate": hist.degenerate,
        "degenerate_rate": hist.degenerate / hist.samples,
        "exact_fallbacks": hist.exact_fallbacks,
        "filter_resolution_rate": 1.0 - hist.exact_fallbacks / hist.samples,
        "fractions": fractions,
    }
    if hist.coord_bound == 1000:
        comparison = {}
        keys = sorted(set(all_counts) | set(BASELINE_DISTRIBUTION))
        for n in keys:
            ours = fractions.get(n, 0.0)
            base = BASELINE_DISTRIBUTION.get(n, 0) / BASELINE_SAMPLES
            comparison[n] = {
                "fraction": ours,
                "baseline": base,
                "abs_diff": abs(ours - base),
            }
        summary["baseline_comparison"] = comparison
    return summary


def save_top_configs(cfg: SearchConfig, hist: Histogram, directory) -> list:
    """Persist the recorded best configurations as quadruple JSON files."""
    import os

    os.makedirs(directory, exist_ok=True)
    paths = []
    for n, index, triangles in top_config_quadruples(cfg, hist):
        path = os.path.join(directory, f"top_n{n}_sample{index}.json")
        with open(path, "w") as fh:
            json.dump(triangles_to_json(triangles), fh, indent=1)
        paths.append(path)
    return paths
