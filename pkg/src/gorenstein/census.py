"""Isomorphism-free census of small 2-connected multigraphs.

Enumeration fills in multiplicity matrices cell by cell with degree and
edge-budget pruning, then deduplicates by canonical form.  On top of the
census sit the two verification harnesses: criterion equivalence (the
weight checks against the polyhedral oracle, every dilation in range)
and classification (spade verdict against the decomposition search).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import matroid, polytope
from .constructions import decompose, replay, trace_to_json
from .criteria import (
    WeightAssignment,
    check_heart,
    check_spade,
    is_gorenstein,
    weight_function,
)
from .multigraph import Multigraph


@dataclass(frozen=True)
class CensusBounds:
    max_vertices: int = 6
    max_edges: int = 10
    max_multiplicity: int = 5

    def __post_init__(self):
        if self.max_vertices < 2 or self.max_edges < 1 or self.max_multiplicity < 1:
            raise ValueError("bounds too small")


@dataclass(frozen=True)
class CensusRecord:
    graph: Multigraph  # canonical representative
    delta: int | None
    weights: WeightAssignment | None
    good_flat_count: int
    facet_count: int


def _graphs_on(n: int, bounds: CensusBounds):
    """All 2-connected multiplicity fillings on exactly n vertices."""
    if n == 2:
        for k in range(1, min(bounds.max_edges, bounds.max_multiplicity) + 1):
            yield Multigraph.from_edge_list(2, [(0, 1)] * k)
        return
    cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
    # row-major order: vertex i's degree is final once row i is filled
    row_end = {i: max(k for k, (a, _) in enumerate(cells) if a == i) for i in range(n - 1)}
    counts = [0] * len(cells)
    deg = [0] * n
    out = []

    def rec(idx: int, total: int) -> None:
        if idx == len(cells):
            if deg[n - 1] >= 2 and total >= n:
                pairs = []
                for (i, j), c in zip(cells, counts):
                    pairs.extend([(i, j)] * c)
                g = Multigraph.from_edge_list(n, pairs)
                if g.is_two_connected():
                    out.append(g)
            return
        i, j = cells[idx]
        for c in range(min(bounds.max_multiplicity, bounds.max_edges - total) + 1):
            counts[idx] = c
            deg[i] += c
            deg[j] += c
            # vertex i's degree is final at the end of its row: needs >= 2
            if row_end.get(i) != idx or deg[i] >= 2:
                rec(idx + 1, total + c)
            deg[i] -= c
            deg[j] -= c
        counts[idx] = 0

    rec(0, 0)
    yield from out


def enumerate_census(bounds: CensusBounds) -> list[Multigraph]:
    """Every 2-connected multigraph within bounds, once up to isomorphism.

    Returns canonical representatives, sorted by (vertices, edges,
    canonical form) so downstream reports are deterministic.
    """
    seen = set()
    out = []
    for n in range(2, bounds.max_vertices + 1):
        for g in _graphs_on(n, bounds):
            canon = g.canonicalize()[0]
            key = canon.canonical_form
            if key not in seen:
                seen.add(key)
                out.append(canon)
    out.sort(key=lambda g: (g.n, g.m, g.canonical_form))
    return out


def enumerate_naive(bounds: CensusBounds) -> list[tuple[tuple[int, ...], ...]]:
    """Independent generate-all-and-filter path, for cross-checking.

    Deduplicates by the minimum multiplicity matrix over all explicit
    vertex permutations (no shared code with canonicalize); intended for
    tiny bounds only.  Returns the orbit-minimal matrices, sorted.
    """
    reps = set()
    for n in range(2, bounds.max_vertices + 1):
        cells = [(i, j) for i in range(n) for j in range(i + 1, n)]
        for values in itertools.product(
            range(bounds.max_multiplicity + 1), repeat=len(cells)
        ):
            if sum(values) > bounds.max_edges or sum(values) == 0:
                continue
            pairs = []
            for (i, j), c in zip(cells, values):
                pairs.extend([(i, j)] * c)
            g = Multigraph.from_edge_list(n, pairs)
            if not g.is_two_connected():
                continue
            mat = g.multiplicity_matrix
            best = min(
                tuple(tuple(mat[p[i]][p[j]] for j in range(n)) for i in range(n))
                for p in itertools.permutations(range(n))
            )
            reps.add(best)
    return sorted(reps, key=lambda m: (len(m), sum(map(sum, m)), m))


def census_record(graph: Multigraph) -> CensusRecord:
    verdict = is_gorenstein(graph)
    delta, weights = verdict if verdict is not None else (None, None)
    poly = polytope.build_polytope(graph)
    return CensusRecord(
        graph=graph,
        delta=delta,
        weights=weights,
        good_flat_count=len(matroid.good_flats(graph)),
        facet_count=len(poly.facets),
    )


# -- verification harnesses ------------------------------------------------

def _bounds_json(bounds: CensusBounds) -> dict:
    return {
        "max_vertices": bounds.max_vertices,
        "max_edges": bounds.max_edges,
        "max_multiplicity": bounds.max_multiplicity,
    }


def _canonical_json(graph: Multigraph) -> list[list[int]]:
    return [list(row) for row in graph.canonical_form]


def verify_equivalence(bounds: CensusBounds, include_traces: bool = True) -> dict:
    """Check spade = heart = polyhedral oracle on every census graph.

    Scans every dilation in [2, |E|+1] per graph; any disagreement lands
    in the report's mismatch list (which must be empty).
    """
    graphs = enumerate_census(bounds)
    gorenstein = []
    mismatches = []
    for g in graphs:
        poly = polytope.build_polytope(g)
        found = None
        for delta in range(2, g.m + 2):
            assignment = weight_function(g, delta)
            spade = assignment is not None and check_spade(g, assignment)
            heart = assignment is not None and check_heart(g, assignment)
            oracle = polytope.gorenstein_point_at(poly, delta) is not None
            if not (spade == heart == oracle):
                mismatches.append(
                    {
                        "canonical": _canonical_json(g),
                        "delta": delta,
                        "spade": spade,
                        "heart": heart,
                        "oracle": oracle,
                    }
                )
            if spade and found is None:
                found = delta
        if found is not None:
            entry = {"canonical": _canonical_json(g), "delta": found, "trace": None}
            if include_traces:
                trace = decompose(g, found)
                if trace is not None:
                    entry["trace"] = trace_to_json(trace)
            gorenstein.append(entry)
    return {
        "bounds": _bounds_json(bounds),
        "total": len(graphs),
        "gorenstein": gorenstein,
        "mismatches": mismatches,
    }


def verify_classification(delta: int, bounds: CensusBounds) -> dict:
    """Check spade at the dilation <=> the decomposition search succeeds.

    Every returned trace must replay to the graph's canonical form; any
    one-sided verdict or replay failure is a mismatch.
    """
    if delta < 2:
        raise ValueError("delta must be >= 2")
    graphs = enumerate_census(bounds)
    gorenstein = []
    mismatches = []
    for g in graphs:
        assignment = weight_function(g, delta)
        spade = assignment is not None and check_spade(g, assignment)
        trace = decompose(g, delta)
        if trace is not None and replay(trace).canonical_form != g.canonical_form:
            mismatches.append(
                {"canonical": _canonical_json(g), "delta": delta, "error": "replay"}
            )
            continue
        if spade != (trace is not None):
            mismatches.append(
                {
                    "canonical": _canonical_json(g),
                    "delta": delta,
                    "spade": spade,
                    "trace_found": trace is not None,
                }
            )
            continue
        if spade:
            gorenstein.append(
                {
                    "canonical": _canonical_json(g),
                    "delta": delta,
                    "trace": trace_to_json(trace),
                }
            )
    return {
        "bounds": _bounds_json(bounds),
        "delta": delta,
        "total": len(graphs),
        "gorenstein": gorenstein,
        "mismatches": mismatches,
    }


def format_report(report: dict) -> str:
    """Human-readable summary table of a verification report."""
    lines = []
    b = report["bounds"]
    head = f"census: {report['total']} graphs (<= {b['max_vertices']} vertices, <= {b['max_edges']} edges, multiplicity <= {b['max_multiplicity']})"
    if "delta" in report:
        head += f", delta = {report['delta']}"
    lines.append(head)
    lines.append(f"gorenstein: {len(report['gorenstein'])}")
    for entry in report["gorenstein"]:
        n = len(entry["canonical"])
        m = sum(map(sum, entry["canonical"])) // 2
        lines.append(f"  n={n} m={m} delta={entry['delta']}")
    lines.append(f"mismatches: {len(report['mismatches'])}")
    for entry in report["mismatches"]:
        lines.append(f"  {entry}")
    return "\n".join(lines) + "\n"
