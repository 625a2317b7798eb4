import json

import pytest

from rim.errors import ScenarioError, ScenarioFormatError
from rim.schema import load_scenario, parse_scenario_json

MINIMAL = {
    "seed": 1,
    "pathloss": {"frequency_hz": 2.4e9},
    "nodes": [
        {"id": 0, "x": 0.0, "y": 0.0, "tx_power_dbm": 0.0, "rx_sensitivity_dbm": -80.0},
        {"id": 1, "x": 10.0, "y": 0.0, "tx_power_dbm": 0.0, "rx_sensitivity_dbm": -80.0},
    ],
}


def doc(**overrides):
    merged = json.loads(json.dumps(MINIMAL))
    merged.update(overrides)
    return json.dumps(merged)


class TestDefaults:
    def test_optional_keys_get_documented_defaults(self):
        scn = parse_scenario_json(doc())
        assert scn.doi == 0.006
        assert scn.weibull_a == 1.5
        assert scn.weibull_b == 1.0
        assert scn.pathloss.alpha == 2.0
        assert scn.pathloss.system_loss_db == 0.0
        assert scn.nodes[0].radio.tx_gain_db == 0.0
        assert scn.nodes[0].radio.rx_gain_db == 0.0

    def test_explicit_values_override_defaults(self):
        scn = parse_scenario_json(doc(doi=0.01, weibull={"a": 2.0, "b": 3.0}))
        assert scn.doi == 0.01
        assert scn.weibull_a == 2.0
        assert scn.weibull_b == 3.0

    def test_domain_objects_round_trip(self):
        scn = parse_scenario_json(doc(seed=99))
        assert scn.master_seed == 99
        assert scn.nodes[1].position.x == 10.0
        assert scn.nodes[1].radio.rx_sensitivity_dbm == -80.0


class TestStrictness:
    def test_unknown_top_level_key_named(self):
        with pytest.raises(ScenarioFormatError, match="bogus"):
            parse_scenario_json(doc(bogus=1))

    def test_unknown_node_key_named(self):
        body = json.loads(doc())
        body["nodes"][0]["powre_dbm"] = 3
        with pytest.raises(ScenarioFormatError, match="powre_dbm"):
            parse_scenario_json(json.dumps(body))

    def test_unknown_nested_key_named(self):
        body = json.loads(doc())
        body["pathloss"]["frequancy"] = 1
        with pytest.raises(ScenarioFormatError, match="frequancy"):
            parse_scenario_json(json.dumps(body))

    def test_missing_required_field_named(self):
        body = json.loads(doc())
        del body["pathloss"]["frequency_hz"]
        with pytest.raises(ScenarioFormatError, match="frequency_hz"):
            parse_scenario_json(json.dumps(body))

    def test_fewer_than_two_nodes_rejected(self):
        body = json.loads(doc())
        body["nodes"] = body["nodes"][:1]
        with pytest.raises(ScenarioFormatError, match="nodes"):
            parse_scenario_json(json.dumps(body))

    def test_negative_doi_rejected(self):
        with pytest.raises(ScenarioFormatError, match="doi"):
            parse_scenario_json(doc(doi=-0.5))

    def test_malformed_json_reports_line_and_column(self):
        with pytest.raises(ScenarioFormatError, match=r"line \d+ column \d+"):
            parse_scenario_json('{"seed": 1,\n  "doi": }')

    def test_duplicate_node_ids_rejected_by_domain(self):
        body = json.loads(doc())
        body["nodes"][1]["id"] = 0
        with pytest.raises(ScenarioError, match="unique"):
            parse_scenario_json(json.dumps(body))


class TestLoadScenario:
    def test_loads_shipped_examples(self, repo_root):
        for name in ("two_node", "fifty_node", "infeasible_doi"):
            scn = load_scenario(repo_root / "scenarios" / f"{name}.json")
            assert len(scn.nodes) >= 2

    def test_fifty_node_has_expected_shape(self, repo_root):
        scn = load_scenario(repo_root / "scenarios" / "fifty_node.json")
        assert len(scn.nodes) == 50
        assert scn.master_seed == 7
        assert scn.doi == 0.006
        assert all(0.0 <= n.position.x <= 500.0 for n in scn.nodes)
        assert all(0.0 <= n.position.y <= 500.0 for n in scn.nodes)
