import copy
import json
from fractions import Fraction as F
from pathlib import Path

import pytest

from uset.errors import ScenarioError
from uset.scenario import (
    emit_scenario,
    load_scenario,
    load_scenario_text,
    parse_scenario,
    rank,
    render_value,
    run_scenario,
    validate_scenario,
)

SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"
FILES = sorted(SCENARIOS.glob("*.json"))


def _raw(name):
    return json.loads((SCENARIOS / name).read_text())


def _error(raw):
    with pytest.raises(ScenarioError) as info:
        parse_scenario(raw)
    return info.value


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_shipped_scenarios_load_and_validate(path):
    doc = load_scenario(path)
    assert validate_scenario(doc) == []


@pytest.mark.parametrize("path", FILES, ids=lambda p: p.stem)
def test_load_after_emit_is_identity(path):
    doc = load_scenario(path)
    again = load_scenario_text(emit_scenario(doc))
    assert again == doc
    assert emit_scenario(again) == emit_scenario(doc)


def test_reflexive_contradiction_is_located():
    raw = _raw("rental.json")
    raw["contradiction"].append(["large", "large", 0.2])
    err = _error(raw)
    assert err.location == "$.contradiction[large,large]"
    assert "reflexivity" in str(err)


def test_missing_degree_is_located():
    raw = _raw("rental.json")
    del raw["degrees"]["A2"]["large"]
    assert _error(raw).location == "$.appurtenance[A2,large]"


def test_all_bundle_problems_are_reported_together():
    raw = _raw("rental.json")
    raw["contradiction"].append(["large", "large", 0.2])
    raw["contradiction"].append(["large", "low_rent", 0.4])
    del raw["degrees"]["A3"]["near_station"]
    locations = {loc for loc, _ in _error(raw).diagnostics}
    assert {"$.contradiction[large,large]", "$.appurtenance[A3,near_station]"} <= locations
    assert any("symmetry" in msg for _, msg in _error(raw).diagnostics)


@pytest.mark.parametrize("mutate,where", [
    (lambda r: r.__setitem__("kind", "blob"), "$.kind"),
    (lambda r: r["degrees"]["A1"]["low_rent"].__setitem__(0, "x"), "$.degrees.A1.low_rent[0]"),
    (lambda r: r["degrees"]["A1"]["low_rent"].__setitem__(2, 1.5), "$.degrees.A1.low_rent"),
])
def test_malformed_fields_are_located(mutate, where):
    raw = _raw("rental.json")
    mutate(raw)
    assert _error(raw).location == where


def test_invalid_json_reports_line_and_column():
    with pytest.raises(ScenarioError) as info:
        load_scenario_text('{"kind": "rough",\n  oops}')
    assert info.value.location.startswith("line 2")


def test_linguistic_survey_is_exactly_one_fifth():
    (_, deg), = run_scenario(load_scenario(SCENARIOS / "satisfaction_linguistic.json")).rows
    assert deg.components == (F(1, 5),)


def test_rough_target_gives_exact_accuracy_and_coverage():
    rows = dict(run_scenario(load_scenario(SCENARIOS / "flagged_email_rough.json"), "rough").rows)
    assert rows["lower"] == {"e1", "e2", "e6", "e7"}
    assert rows["boundary"] == {"e3", "e4", "e5"}
    assert rows["accuracy"] == F(4, 7) and rows["coverage"] == F(2, 5)


def test_rough_target_override():
    doc = load_scenario(SCENARIOS / "flagged_email_rough.json")
    rows = dict(run_scenario(doc, "rough", target=["e1", "e2"]).rows)
    assert rows["lower"] == rows["upper"] == {"e1", "e2"}


def test_trapezoidal_inclusion_score_is_exact():
    rows = dict(run_scenario(load_scenario(SCENARIOS / "patient_inclusion_trapezoidal.json")).rows)
    assert rows["P1"] == F(187, 300)


def test_rental_aggregate_matches_hand_weights():
    rows = dict(run_scenario(load_scenario(SCENARIOS / "rental.json"), dominant="low_rent").rows)
    assert rows["A1"].components == pytest.approx(((.85 + .63 + .12) / 2, (.05 + .035 + .06) / 2,
                                                  (.1 + .07 + .18) / 2))


@pytest.mark.parametrize("name,order,scores", [
    ("hospital_triage_refined.json", ["p_A", "p_B"], [.787, .613]),
    ("supplier_ranking_refined.json", ["s_A", "s_B"], [.814, .770]),
])
def test_expert_rankings(name, order, scores):
    ranked = rank(load_scenario(SCENARIOS / name))
    assert [x for x, _ in ranked] == order
    assert [s for _, s in ranked] == pytest.approx(scores, abs=1e-3)


def test_rank_ties_keep_input_order():
    raw = _raw("rental.json")
    raw["elements"] = ["A3", "A2", "A1"]
    raw["degrees"]["A2"] = copy.deepcopy(raw["degrees"]["A3"])
    ranked = rank(parse_scenario(raw), "low_rent")
    names = [x for x, _ in ranked]
    assert names.index("A3") < names.index("A2")
    raw["elements"] = ["A2", "A3", "A1"]
    names = [x for x, _ in rank(parse_scenario(raw), "low_rent")]
    assert names.index("A2") < names.index("A3")


@pytest.mark.parametrize("name,command,kwargs,needle", [
    ("rental.json", "rough", {"target": ["A1"]}, "not defined"),
    ("rental.json", "aggregate", {"dominant": "nope"}, "unknown value"),
    ("rental.json", "aggregate", {}, "needs a dominant"),
    ("flagged_email_rough.json", "rank", {}, "one score"),
])
def test_kind_and_argument_mismatches(name, command, kwargs, needle):
    with pytest.raises(ScenarioError, match=needle):
        run_scenario(load_scenario(SCENARIOS / name), command, **kwargs)


def test_render_value_shapes():
    assert render_value(F(1, 5), 3) == "0.200 (1/5)"
    assert render_value(frozenset({"b", "a"}), 3) == "{a, b}"
    assert render_value(0.5, 2) == "0.50"
