import math

import numpy as np
import pytest

from rim.errors import GenerationExhaustedError, ParameterError, ScenarioError
from rim.geometry import Position
from rim.propagation import PathLossParams, RadioParams, fspl_db, received_power_dbm
from rim.scenario import (
    Node,
    Scenario,
    asymmetry_report,
    build_connectivity,
    doi_sweep,
    pattern_stream_id,
)

PARAMS_24 = PathLossParams(frequency_hz=2.4e9)


def radio(sens=-80.0, tx=0.0):
    return RadioParams(tx_power_dbm=tx, rx_sensitivity_dbm=sens)


def two_node_scenario(d=50.0, sens_a=-80.0, sens_b=-80.0, doi=0.0, seed=42):
    return Scenario(
        nodes=(
            Node(0, Position(0, 0), radio(sens_a)),
            Node(1, Position(d, 0), radio(sens_b)),
        ),
        pathloss=PARAMS_24,
        doi=doi,
        master_seed=seed,
    )


def random_scenario(n=12, doi=0.006, seed=5, sens=-80.0, box=300.0):
    rng = np.random.default_rng(99)
    pts = rng.uniform(0, box, (n, 2))
    nodes = tuple(Node(i, Position(*pts[i]), radio(sens)) for i in range(n))
    return Scenario(nodes=nodes, pathloss=PARAMS_24, doi=doi, master_seed=seed)


class TestScenarioValidation:
    def test_requires_two_nodes(self):
        with pytest.raises(ScenarioError):
            Scenario(nodes=(Node(0, Position(0, 0), radio()),), pathloss=PARAMS_24)

    def test_rejects_duplicate_ids(self):
        with pytest.raises(ScenarioError):
            Scenario(
                nodes=(Node(0, Position(0, 0), radio()), Node(0, Position(1, 1), radio())),
                pathloss=PARAMS_24,
            )

    def test_rejects_duplicate_positions(self):
        with pytest.raises(ScenarioError):
            Scenario(
                nodes=(Node(0, Position(0, 0), radio()), Node(1, Position(0, 0), radio())),
                pathloss=PARAMS_24,
            )

    def test_rejects_negative_doi(self):
        with pytest.raises(ScenarioError):
            two_node_scenario(doi=-0.1)

    def test_rejects_oversized_seed(self):
        with pytest.raises(ScenarioError):
            two_node_scenario(seed=1 << 64)


class TestBuildConnectivity:
    def test_zero_doi_in_range_is_fully_symmetric(self):
        scn = two_node_scenario(d=50.0)
        report = asymmetry_report(build_connectivity(scn), scn)
        assert report.symmetric_links == 1
        assert report.asymmetric_links == 0
        assert report.disconnected_pairs == 0
        assert report.asymmetry_fraction == 0.0

    def test_zero_doi_beyond_range_is_disconnected(self):
        scn = two_node_scenario(d=200.0)  # FSPL ~86 dB > 80 dB budget
        report = asymmetry_report(build_connectivity(scn), scn)
        assert report.disconnected_pairs == 1
        assert report.symmetric_links == 0
        assert report.asymmetry_fraction == 0.0

    def test_heterogeneous_sensitivity_makes_asymmetric_link(self):
        scn = two_node_scenario(d=50.0, sens_a=-90.0, sens_b=-60.0)
        report = asymmetry_report(build_connectivity(scn), scn)
        assert report.asymmetric_links == 1
        assert report.asymmetry_fraction == 1.0

    def test_zero_doi_powers_match_plain_budget_bitwise(self):
        scn = two_node_scenario(d=73.25)
        graph = build_connectivity(scn)
        expected = 0.0 + 0.0 + 0.0 - fspl_db(73.25, PARAMS_24)
        assert graph.edge(0, 1).received_power_dbm == expected
        assert graph.edge(1, 0).received_power_dbm == expected

    def test_tie_at_sensitivity_counts_audible(self):
        probe = build_connectivity(two_node_scenario(d=50.0))
        prx = probe.edge(0, 1).received_power_dbm
        scn = two_node_scenario(d=50.0, sens_b=prx)
        graph = build_connectivity(scn)
        assert graph.edge(0, 1).received_power_dbm == prx
        assert graph.edge(0, 1).audible

    def test_one_edge_record_per_ordered_pair(self):
        scn = random_scenario(n=8)
        graph = build_connectivity(scn)
        pairs = {(e.src, e.dst) for e in graph.edges}
        assert len(graph.edges) == 8 * 7
        assert len(pairs) == 8 * 7
        assert all(src != dst for src, dst in pairs)

    def test_deterministic(self):
        scn = random_scenario()
        g1 = build_connectivity(scn)
        g2 = build_connectivity(scn)
        assert g1.edges == g2.edges
        for nid in g1.patterns:
            assert np.array_equal(g1.patterns[nid].k, g2.patterns[nid].k)

    def test_edges_match_independent_recomputation(self):
        # Internal consistency oracle: sampled edges must equal the scalar
        # received-power operation applied to the graph's own patterns.
        scn = random_scenario(n=12)
        graph = build_connectivity(scn)
        by_id = {n.id: n for n in scn.nodes}
        rng = np.random.default_rng(123)
        for edge in rng.choice(len(graph.edges), size=100, replace=True):
            e = graph.edges[int(edge)]
            src, dst = by_id[e.src], by_id[e.dst]
            expected = received_power_dbm(
                src.position, graph.patterns[e.src], src.radio,
                dst.position, dst.radio, scn.pathloss,
            )
            assert e.received_power_dbm == expected

    def test_generation_failure_names_node(self):
        scn = two_node_scenario(doi=1000.0, seed=0)
        with pytest.raises(GenerationExhaustedError, match=r"node \d+"):
            build_connectivity(scn)

    def test_pattern_streams_keyed_by_node_id(self):
        # Same master seed, distinct nodes -> distinct patterns.
        scn = random_scenario(n=4)
        graph = build_connectivity(scn)
        ks = [graph.patterns[n.id].k for n in scn.nodes]
        assert not np.array_equal(ks[0], ks[1])
        assert pattern_stream_id(0) != pattern_stream_id(1)


class TestAsymmetryReport:
    def test_partition_law(self):
        for n in (5, 9, 14):
            scn = random_scenario(n=n)
            report = asymmetry_report(build_connectivity(scn), scn)
            total = report.symmetric_links + report.asymmetric_links + report.disconnected_pairs
            assert total == report.total_pairs == n * (n - 1) // 2

    def test_fraction_zero_when_nothing_connected(self):
        scn = two_node_scenario(d=5000.0)
        report = asymmetry_report(build_connectivity(scn), scn)
        assert report.asymmetry_fraction == 0.0

    def test_mismatched_graph_rejected(self):
        scn_a = random_scenario(n=5)
        scn_b = random_scenario(n=6)
        graph = build_connectivity(scn_a)
        with pytest.raises(ScenarioError):
            asymmetry_report(graph, scn_b)


class TestDoiSweep:
    def test_zero_doi_row_is_exactly_zero(self):
        rows = doi_sweep(random_scenario(), [0.0], replications=5)
        assert len(rows) == 1
        assert rows[0].mean_asymmetry == 0.0
        assert rows[0].std_asymmetry == 0.0
        assert rows[0].replications == 5

    def test_deterministic(self):
        scn = random_scenario()
        a = doi_sweep(scn, [0.0, 0.006], replications=3)
        b = doi_sweep(scn, [0.0, 0.006], replications=3)
        assert a == b

    def test_single_replication_defined(self):
        rows = doi_sweep(random_scenario(), [0.006], replications=1)
        assert rows[0].std_asymmetry == 0.0

    def test_error_annotated_with_doi_and_replication(self):
        scn = two_node_scenario(seed=0)
        with pytest.raises(GenerationExhaustedError, match=r"doi=1000\.0 replication=0"):
            doi_sweep(scn, [1000.0], replications=2)

    def test_master_seed_wraps_at_64_bits(self):
        scn = random_scenario(n=4, seed=(1 << 64) - 2)
        rows = doi_sweep(scn, [0.0], replications=4)
        assert rows[0].mean_asymmetry == 0.0

    def test_rejects_empty_doi_list(self):
        with pytest.raises(ParameterError):
            doi_sweep(random_scenario(), [], replications=2)

    def test_rejects_zero_replications(self):
        with pytest.raises(ParameterError):
            doi_sweep(random_scenario(), [0.0], replications=0)
