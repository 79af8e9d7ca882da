"""Batch verification campaigns over the removable-structure statements.

A campaign fixes a statement (removable vertex, removable edge pair,
removable tree, or the tightness family), sweeps cells of parameters
(k, and tree shape where relevant), and runs seeded trials per cell:
generate a graph meeting the statement's hypotheses, run the finder, and
re-verify whatever comes back.  A finder miss in a cell where the
statement guarantees success is escalated to a violation candidate only
after the hypotheses and the miss both re-verify from scratch; cells
beyond the proven range are recorded as open-conjecture datapoints and
never treated as failures.

Everything is deterministic in the master seed: trial seeds are derived
per (cell, trial), so re-running a config reproduces every report field
except wall times.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass, field

from .connectivity import (
    EXHAUSTIVE_LIMIT,
    ConnectivityReport,
    connectivity_report,
    edge_connectivity,
    edge_connectivity_bruteforce,
    is_k_edge_connected,
)
from .errors import GenerationError, InternalCheckError
from .generators import GenSpec, complete, generate
from .graph import Graph
from .io import graph_payload, load_graph
from .removal import (
    RemovalCertificate,
    find_removable_edge,
    find_removable_tree,
    find_removable_vertex,
)
from .rng import SplitMix64, derive_seed
from .trees import TreeSpec, enumerate_trees, parse_tree_spec

STATEMENTS = ("mader_vertex", "edge_pair", "tree", "tightness")

OUTCOME_WITNESS = "witness_found"
OUTCOME_NOT_FOUND = "not_found"
OUTCOME_VIOLATION = "theorem_violation_candidate"
OUTCOME_OPEN = "conjecture_open_datapoint"
OUTCOME_GENFAIL = "generation_failed"


@dataclass(frozen=True)
class CampaignConfig:
    """Plain-data description of one campaign, JSON round-trippable.

    For the tree statements, shapes come either from `trees` (textual tree
    specs) or from `m_values` (every tree of each listed order).  The
    generator's degree target defaults to the statement's hypothesis
    threshold (k+1 for vertex removal, k+2 for edge removal, k+m for tree
    removal) and can be overridden with `delta_min`.
    """

    statement: str
    k_values: tuple[int, ...]
    trials: int
    master_seed: int
    n_range: tuple[int, int] = (8, 16)
    m_values: tuple[int, ...] = ()
    trees: tuple[str, ...] = ()
    model: str = "with_hypotheses"
    delta_min: int | None = None
    params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "k_values", tuple(self.k_values))
        object.__setattr__(self, "m_values", tuple(self.m_values))
        object.__setattr__(self, "trees", tuple(self.trees))
        object.__setattr__(self, "n_range", tuple(self.n_range))
        object.__setattr__(self, "params", tuple(sorted(self.params)))
        if self.statement not in STATEMENTS:
            raise ValueError(f"unknown statement {self.statement!r}")
        if not self.k_values:
            raise ValueError("k_values must be nonempty")
        if any(k < 1 for k in self.k_values):
            raise ValueError("k values must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if len(self.n_range) != 2 or self.n_range[0] > self.n_range[1]:
            raise ValueError("n_range must be (low, high) with low <= high")
        if self.statement in ("tree", "tightness") and not (
            self.m_values or self.trees
        ):
            raise ValueError(
                f"statement {self.statement!r} needs m_values or trees"
            )

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "k_values": list(self.k_values),
            "trials": self.trials,
            "master_seed": self.master_seed,
            "n_range": list(self.n_range),
            "m_values": list(self.m_values),
            "trees": list(self.trees),
            "model": self.model,
            "delta_min": self.delta_min,
            "params": dict(self.params),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignConfig":
        return cls(
            statement=data["statement"],
            k_values=tuple(data["k_values"]),
            trials=int(data["trials"]),
            master_seed=int(data["master_seed"]),
            n_range=tuple(data.get("n_range", (8, 16))),
            m_values=tuple(data.get("m_values", ())),
            trees=tuple(data.get("trees", ())),
            model=data.get("model", "with_hypotheses"),
            delta_min=data.get("delta_min"),
            params=tuple(sorted(dict(data.get("params", {})).items())),
        )


@dataclass(frozen=True)
class TrialReport:
    """One trial's full record; everything but wall_time replays exactly."""

    statement: str
    k: int
    m: int | None
    tree: str | None
    cell_index: int
    trial_index: int
    seed: int
    n: int | None
    edge_count: int | None
    min_degree: int | None
    kprime: int | None
    outcome: str
    witness_removed: tuple[int, ...] | None
    witness_residual_kprime: int | None
    witness_residual_trivial: bool
    graph: dict | None
    wall_time: float

    def to_dict(self) -> dict:
        return {
            "statement": self.statement,
            "k": self.k,
            "m": self.m,
            "tree": self.tree,
            "cell_index": self.cell_index,
            "trial_index": self.trial_index,
            "seed": self.seed,
            "n": self.n,
            "edge_count": self.edge_count,
            "min_degree": self.min_degree,
            "kprime": self.kprime,
            "outcome": self.outcome,
            "witness_removed": list(self.witness_removed)
            if self.witness_removed is not None
            else None,
            "witness_residual_kprime": self.witness_residual_kprime,
            "witness_residual_trivial": self.witness_residual_trivial,
            "graph": self.graph,
            "wall_time": self.wall_time,
        }


@dataclass(frozen=True)
class Cell:
    index: int
    k: int
    tree: TreeSpec | None

    @property
    def m(self) -> int | None:
        return self.tree.order if self.tree is not None else None

    def label(self, statement: str) -> str:
        if self.tree is None:
            return f"{statement} k={self.k}"
        return f"{statement} k={self.k} tree={self.tree.spec_string()}"


@dataclass
class CampaignResult:
    config: CampaignConfig
    trials: list[TrialReport]
    summary: dict

    @property
    def has_violation(self) -> bool:
        return any(t.outcome == OUTCOME_VIOLATION for t in self.trials)

    def to_dict(self) -> dict:
        return {
            "config": self.config.to_dict(),
            "trials": [t.to_dict() for t in self.trials],
            "summary": self.summary,
        }


def _cells(config: CampaignConfig) -> list[Cell]:
    shapes: list[TreeSpec | None]
    if config.statement in ("tree", "tightness"):
        if config.trees:
            shapes = [parse_tree_spec(s) for s in config.trees]
        else:
            shapes = [t for m in config.m_values for t in enumerate_trees(m)]
    else:
        shapes = [None]
    out = []
    for k in config.k_values:
        for shape in shapes:
            out.append(Cell(index=len(out), k=k, tree=shape))
    return out


def _delta_target(config: CampaignConfig, cell: Cell) -> int:
    if config.delta_min is not None:
        return config.delta_min
    if config.statement == "mader_vertex":
        return cell.k + 1
    if config.statement == "edge_pair":
        return cell.k + 2
    return cell.k + (cell.m or 0)


def _is_open_cell(statement: str, cell: Cell) -> bool:
    return statement == "tree" and cell.k >= 4 and (cell.m or 0) >= 3


def _recheck_kprime_at_least(g: Graph, k: int) -> bool:
    """Hypothesis recheck routed through the oracle when that is feasible."""
    if 2 <= g.n <= EXHAUSTIVE_LIMIT:
        return edge_connectivity_bruteforce(g) >= k
    return is_k_edge_connected(g, k)


def _run_finder(
    g: Graph, k: int, statement: str, tree: TreeSpec | None
) -> RemovalCertificate | None:
    if statement == "mader_vertex":
        return find_removable_vertex(g, k)
    if statement == "edge_pair":
        return find_removable_edge(g, k)
    return find_removable_tree(g, k, tree)


def run_campaign(config: CampaignConfig) -> CampaignResult:
    """Run every (cell, trial) of the config and summarize outcomes per cell.

    Trials are independent and ordered by (cell index, trial index); the
    report sequence does not depend on execution order.  A miss where the
    statement guarantees a witness becomes a violation candidate only
    after the hypotheses re-verify (oracle connectivity on small graphs)
    and a second finder pass still comes up empty.
    """
    cells = _cells(config)
    trials: list[TrialReport] = []
    for cell in cells:
        for idx in range(config.trials):
            trial_seed = derive_seed(config.master_seed, cell.index, idx)
            trials.append(_run_trial(config, cell, idx, trial_seed))
    return CampaignResult(config, trials, _summarize(config, cells, trials))


def _run_trial(
    config: CampaignConfig, cell: Cell, trial_index: int, seed: int
) -> TrialReport:
    start = time.perf_counter()
    statement = config.statement
    delta = _delta_target(config, cell)

    def report(g, outcome, cert=None, kprime=None):
        return TrialReport(
            statement=statement,
            k=cell.k,
            m=cell.m,
            tree=cell.tree.spec_string() if cell.tree is not None else None,
            cell_index=cell.index,
            trial_index=trial_index,
            seed=seed,
            n=g.n if g is not None else None,
            edge_count=g.edge_count if g is not None else None,
            min_degree=g.min_degree() if g is not None else None,
            kprime=kprime,
            outcome=outcome,
            witness_removed=cert.removed if cert is not None else None,
            witness_residual_kprime=cert.residual_kprime if cert else None,
            witness_residual_trivial=bool(cert and cert.residual_trivial),
            graph=graph_payload(g) if g is not None else None,
            wall_time=time.perf_counter() - start,
        )

    if statement == "tightness":
        g = complete(cell.k + cell.m)
    else:
        rng = SplitMix64(seed)
        lo, hi = config.n_range
        n = lo + rng.randrange(hi - lo + 1)
        n = max(n, delta + 1)
        if statement == "tree":
            n = max(n, cell.m + 1)
        spec = GenSpec(
            model=config.model,
            n=n,
            k=cell.k,
            delta_min=delta,
            seed=derive_seed(seed, 1),
            params=config.params,
        )
        try:
            g = generate(spec)
        except GenerationError:
            return report(None, OUTCOME_GENFAIL)
        # any model is allowed, so the hypotheses are confirmed up front
        if g.min_degree() < delta or not is_k_edge_connected(g, cell.k):
            return report(g, OUTCOME_GENFAIL)

    kprime, _ = edge_connectivity(g)
    cert = _run_finder(g, cell.k, statement, cell.tree)
    if cert is not None:
        if not cert.verified:
            raise InternalCheckError("finder returned an unverified certificate")
        return report(g, OUTCOME_WITNESS, cert=cert, kprime=kprime)

    if statement == "tightness":
        return report(g, OUTCOME_NOT_FOUND, kprime=kprime)
    if _is_open_cell(statement, cell):
        return report(g, OUTCOME_OPEN, kprime=kprime)

    # a theorem cell missed: confirm hypotheses and the miss independently
    if g.min_degree() < delta or not _recheck_kprime_at_least(g, cell.k):
        raise InternalCheckError(
            "hypotheses failed on recheck after passing at generation time"
        )
    if _run_finder(g, cell.k, statement, cell.tree) is not None:
        raise InternalCheckError("finder disagreed with itself on a rerun")
    return report(g, OUTCOME_VIOLATION, kprime=kprime)


def _expected_outcome(config: CampaignConfig, cell: Cell) -> str | None:
    """The outcome a cell must show, or None for observational cells."""
    if config.statement == "tightness":
        return OUTCOME_WITNESS if cell.k == 1 else OUTCOME_NOT_FOUND
    if _is_open_cell(config.statement, cell):
        return None
    return OUTCOME_WITNESS


def _summarize(
    config: CampaignConfig, cells: list[Cell], trials: list[TrialReport]
) -> dict:
    per_cell: dict[str, dict] = {}
    for cell in cells:
        rows = [t for t in trials if t.cell_index == cell.index]
        counts = {
            OUTCOME_WITNESS: 0,
            OUTCOME_NOT_FOUND: 0,
            OUTCOME_VIOLATION: 0,
            OUTCOME_OPEN: 0,
            OUTCOME_GENFAIL: 0,
        }
        for t in rows:
            counts[t.outcome] += 1
        expected = _expected_outcome(config, cell)
        entry = {
            "trials": len(rows),
            "witness_found": counts[OUTCOME_WITNESS],
            "not_found": counts[OUTCOME_NOT_FOUND],
            "violations": counts[OUTCOME_VIOLATION],
            "open_datapoints": counts[OUTCOME_OPEN],
            "generation_failed": counts[OUTCOME_GENFAIL],
            "expected": expected,
        }
        if expected is not None:
            entry["all_expected"] = counts[expected] == len(rows)
        if config.statement == "tightness" and cell.k == 1:
            entry["convention_sensitive"] = True
        per_cell[cell.label(config.statement)] = entry
    return {"per_cell": per_cell}


def write_report(result: CampaignResult, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(result.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


@dataclass(frozen=True)
class TightnessReport:
    """Outcome of checking the complete-graph boundary family for one (k, m).

    For k >= 2 every tree's removal from the complete graph on k+m vertices
    must fail (the residual complete graph on k vertices has connectivity
    k-1).  For k = 1 the residual is the one-vertex graph, which counts as
    1-edge-connected by convention, so removals succeed; that case is
    flagged `convention_sensitive` instead of being folded into a failure.
    """

    k: int
    m: int
    residual_order: int
    expected_residual_kprime: int | None
    convention_sensitive: bool
    rows: tuple[tuple[str, str], ...]
    passed: bool

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "residual_order": self.residual_order,
            "expected_residual_kprime": self.expected_residual_kprime,
            "convention_sensitive": self.convention_sensitive,
            "rows": [list(r) for r in self.rows],
            "passed": self.passed,
        }


def verify_tightness(k: int, m: int) -> TightnessReport:
    """Check every tree of order m against the complete graph on k+m vertices."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be at least 1")
    g = complete(k + m)
    convention = k == 1
    rows = []
    ok = True
    for tree in enumerate_trees(m):
        cert = find_removable_tree(g, k, tree)
        if cert is None:
            rows.append((tree.spec_string(), OUTCOME_NOT_FOUND))
            if convention:
                ok = False
        else:
            rows.append((tree.spec_string(), OUTCOME_WITNESS))
            if not convention:
                ok = False
            elif not cert.residual_trivial:
                ok = False
    if not convention:
        # the residual is the complete graph on k vertices; pin its value
        residual_kprime, _ = edge_connectivity(complete(k))
        if residual_kprime != k - 1:
            ok = False
        expected = k - 1
    else:
        expected = None
    return TightnessReport(
        k=k,
        m=m,
        residual_order=k,
        expected_residual_kprime=expected,
        convention_sensitive=convention,
        rows=tuple(rows),
        passed=ok,
    )


def analyze(path: str | os.PathLike, fmt: str | None = None) -> ConnectivityReport:
    """Connectivity report for a graph file (edge list or graph6)."""
    return connectivity_report(load_graph(path, fmt))


@dataclass(frozen=True)
class CounterexampleReport:
    """Result of a seeded search for a tree-removal counterexample.

    The search runs at the conjectured degree threshold (minimum degree
    k+m); `candidates` holds full reproduction records for any graph/tree
    pair where removal verifiably failed, and `min_delta_success` tracks
    the smallest minimum degree among graphs where every tree shape was
    removable.
    """

    k: int
    m: int
    budget: int
    seed: int
    graphs_tested: int
    trees_per_graph: int
    generation_failures: int
    candidates: tuple[dict, ...]
    min_delta_success: int | None

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "m": self.m,
            "budget": self.budget,
            "seed": self.seed,
            "graphs_tested": self.graphs_tested,
            "trees_per_graph": self.trees_per_graph,
            "generation_failures": self.generation_failures,
            "candidates": list(self.candidates),
            "min_delta_success": self.min_delta_success,
        }


def counterexample_search(
    k: int,
    m: int,
    budget: int,
    seed: int,
    n_range: tuple[int, int] | None = None,
) -> CounterexampleReport:
    """Try to break tree removability at the conjectured threshold.

    Generates `budget` graphs with connectivity >= k and minimum degree
    >= k+m, and tries every tree of order m on each.  A miss is reported
    as a candidate only after the hypotheses re-verify and a second
    exhaustive pass still finds nothing.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    delta = k + m
    if n_range is None:
        n_range = (delta + 1, delta + 8)
    if n_range[0] <= delta:
        raise ValueError(f"n_range must start above delta={delta}")
    trees = enumerate_trees(m)
    candidates: list[dict] = []
    genfail = 0
    tested = 0
    min_delta_success: int | None = None
    for i in range(budget):
        trial_seed = derive_seed(seed, i)
        rng = SplitMix64(trial_seed)
        n = n_range[0] + rng.randrange(n_range[1] - n_range[0] + 1)
        try:
            g = generate(
                GenSpec(
                    model="with_hypotheses",
                    n=n,
                    k=k,
                    delta_min=delta,
                    seed=derive_seed(trial_seed, 1),
                )
            )
        except GenerationError:
            genfail += 1
            continue
        tested += 1
        all_removable = True
        for tree in trees:
            cert = find_removable_tree(g, k, tree)
            if cert is not None:
                continue
            all_removable = False
            if g.min_degree() < delta or not _recheck_kprime_at_least(g, k):
                raise InternalCheckError(
                    "hypotheses failed on recheck during counterexample search"
                )
            if find_removable_tree(g, k, tree) is not None:
                raise InternalCheckError("finder disagreed with itself on a rerun")
            candidates.append(
                {
                    "graph": graph_payload(g),
                    "seed": trial_seed,
                    "n": g.n,
                    "k": k,
                    "m": m,
                    "tree": tree.spec_string(),
                    "min_degree": g.min_degree(),
                }
            )
        if all_removable:
            d = g.min_degree()
            if min_delta_success is None or d < min_delta_success:
                min_delta_success = d
    return CounterexampleReport(
        k=k,
        m=m,
        budget=budget,
        seed=seed,
        graphs_tested=tested,
        trees_per_graph=len(trees),
        generation_failures=genfail,
        candidates=tuple(candidates),
        min_delta_success=min_delta_success,
    )
