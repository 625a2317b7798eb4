"""Multi-node scenarios: directed connectivity, asymmetry stats, DOI sweeps."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Mapping, Sequence

import numpy as np

from .errors import GenerationExhaustedError, ParameterError, ScenarioError
from .geometry import Position
from .irregularity import (
    DEFAULT_MAX_ATTEMPTS,
    IrregularityPattern,
    generate_pattern,
)
from .propagation import PathLossParams, RadioParams, received_power_dbm
from .rng import RngStream, stream_id_for

_MASK64 = (1 << 64) - 1

PATTERN_PURPOSE = "pattern"


def pattern_stream_id(node_id: int) -> int:
    """Stream id feeding a node's irregularity pattern."""
    return stream_id_for(PATTERN_PURPOSE, node_id)


@dataclass(frozen=True)
class Node:
    id: int
    position: Position
    radio: RadioParams

    def __post_init__(self):
        if not isinstance(self.id, int) or self.id < 0:
            raise ScenarioError(f"node id must be a non-negative integer, got {self.id!r}")


@dataclass(frozen=True)
class Scenario:
    """A node set plus everything needed to evaluate it deterministically."""

    nodes: tuple[Node, ...]
    pathloss: PathLossParams
    doi: float = 0.006
    weibull_a: float = 1.5
    weibull_b: float = 1.0
    master_seed: int = 0

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(self.nodes))
        if len(self.nodes) < 2:
            raise ScenarioError(f"scenario needs at least 2 nodes, got {len(self.nodes)}")
        ids = [n.id for n in self.nodes]
        if len(set(ids)) != len(ids):
            raise ScenarioError("node ids must be unique")
        coords = [(n.position.x, n.position.y) for n in self.nodes]
        if len(set(coords)) != len(coords):
            raise ScenarioError("node positions must be pairwise distinct")
        if not (math.isfinite(self.doi) and self.doi >= 0.0):
            raise ScenarioError(f"doi must be a non-negative finite real, got {self.doi}")
        if not (self.weibull_a > 0 and self.weibull_b > 0):
            raise ScenarioError("Weibull scale and shape must be positive")
        if not 0 <= self.master_seed <= _MASK64:
            raise ScenarioError(f"master_seed must be a 64-bit unsigned integer, got {self.master_seed}")


@dataclass(frozen=True)
class Edge:
    """One directed audibility record."""

    src: int
    dst: int
    received_power_dbm: float
    audible: bool


@dataclass(frozen=True)
class ConnectivityGraph:
    """Every ordered pair's received power, plus the per-node patterns."""

    edges: tuple[Edge, ...]
    patterns: Mapping[int, IrregularityPattern]
    _by_pair: Mapping[tuple[int, int], Edge] = field(repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_by_pair", {(e.src, e.dst): e for e in self.edges})

    def edge(self, src: int, dst: int) -> Edge:
        return self._by_pair[(src, dst)]


@dataclass(frozen=True)
class AsymmetryReport:
    """Unordered-pair link statistics for one connectivity graph."""

    total_pairs: int
    symmetric_links: int
    asymmetric_links: int
    disconnected_pairs: int
    asymmetry_fraction: float


@dataclass(frozen=True)
class SweepRow:
    doi: float
    mean_asymmetry: float
    std_asymmetry: float
    replications: int


def build_connectivity(
    scenario: Scenario, max_attempts: int = DEFAULT_MAX_ATTEMPTS
) -> ConnectivityGraph:
    """Generate per-node patterns and evaluate every ordered node pair.

    Pure function of the scenario: patterns come from streams keyed by
    (master_seed, pattern_stream_id(node_id)), and edges are emitted in
    sorted (src, dst) order.
    """
    nodes = sorted(scenario.nodes, key=lambda n: n.id)
    patterns: dict[int, IrregularityPattern] = {}
    for node in nodes:
        stream = RngStream(scenario.master_seed, pattern_stream_id(node.id))
        try:
            patterns[node.id] = generate_pattern(
                stream,
                scenario.doi,
                max_attempts=max_attempts,
                scale_a=scenario.weibull_a,
                shape_b=scenario.weibull_b,
            )
        except GenerationExhaustedError as exc:
            raise GenerationExhaustedError(
                f"pattern generation exhausted for node {node.id}: {exc}",
                attempts=exc.attempts,
            ) from exc

    edges = []
    for src in nodes:
        for dst in nodes:
            if dst.id == src.id:
                continue
            prx = received_power_dbm(
                src.position,
                patterns[src.id],
                src.radio,
                dst.position,
                dst.radio,
                scenario.pathloss,
            )
            # Ties at exact equality count as audible.
            edges.append(Edge(src.id, dst.id, prx, prx >= dst.radio.rx_sensitivity_dbm))
    return ConnectivityGraph(edges=tuple(edges), patterns=patterns)


def asymmetry_report(graph: ConnectivityGraph, scenario: Scenario) -> AsymmetryReport:
    """Classify every unordered pair as symmetric, asymmetric, or disconnected.

    The asymmetry fraction is taken over pairs connected in at least one
    direction; with no connected pairs it is defined as 0.
    """
    ids = sorted(n.id for n in scenario.nodes)
    n = len(ids)
    if len(graph.edges) != n * (n - 1):
        raise ScenarioError(
            f"graph has {len(graph.edges)} edges but the scenario implies {n * (n - 1)}"
        )
    symmetric = asymmetric = disconnected = 0
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            fwd = graph.edge(a, b).audible
            rev = graph.edge(b, a).audible
            if fwd and rev:
                symmetric += 1
            elif fwd or rev:
                asymmetric += 1
            else:
                disconnected += 1
    connected = symmetric + asymmetric
    return AsymmetryReport(
        total_pairs=n * (n - 1) // 2,
        symmetric_links=symmetric,
        asymmetric_links=asymmetric,
        disconnected_pairs=disconnected,
        asymmetry_fraction=asymmetric / connected if connected else 0.0,
    )


def doi_sweep(
    base: Scenario,
    doi_values: Sequence[float],
    replications: int,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> list[SweepRow]:
    """Mean/std asymmetry fraction per DOI value over seeded replications.

    Replication r uses master_seed + r (mod 2**64); node placements stay
    fixed so only the patterns are re-randomized.  The std column is the
    population standard deviation over replications.
    """
    if not doi_values:
        raise ParameterError("doi_values must be non-empty")
    if replications < 1:
        raise ParameterError(f"replications must be at least 1, got {replications}")
    rows = []
    for doi in doi_values:
        fractions = np.empty(replications)
        for rep in range(replications):
            scn = replace(base, doi=doi, master_seed=(base.master_seed + rep) & _MASK64)
            try:
                graph = build_connectivity(scn, max_attempts=max_attempts)
            except GenerationExhaustedError as exc:
                raise GenerationExhaustedError(
                    f"doi={doi} replication={rep}: {exc}", attempts=exc.attempts
                ) from exc
            fractions[rep] = asymmetry_report(graph, scn).asymmetry_fraction
        rows.append(
            SweepRow(
                doi=float(doi),
                mean_asymmetry=float(np.mean(fractions)),
                std_asymmetry=float(np.std(fractions)),
                replications=replications,
            )
        )
    return rows
