from fractions import Fraction as F

import pytest

from uset.core import make_bundle
from uset.corpus import table
from uset.degree import DegreeVector
from uset.errors import DomainError, UnknownIdentifier
from uset.temporal import (
    BlendSpec,
    ScenarioSpace,
    TimeIndexedBundle,
    aggregate_profile,
    blend,
    complement,
    expectation,
    quantile,
    snapshot,
)

from oracles import weighted_rows

USAGE = ("low", "medium", "high")
PAIRS = {("low", "medium"): .3, ("low", "high"): .9, ("medium", "high"): .5}


def engagement():
    rows = {"t1": {"high": (.45, .30, .25), "medium": (.35, .25, .40), "low": (.10, .20, .70)},
            "t2": {"high": (.80, .10, .10), "medium": (.15, .15, .70), "low": (.05, .10, .85)}}
    return TimeIndexedBundle(("t1", "t2"), {t: make_bundle(("Premium",), USAGE, {"Premium": r}, PAIRS)
                                            for t, r in rows.items()}), rows


def test_snapshots_aggregate_independently():
    from uset.core import aggregate_dominant
    tb, rows = engagement()
    for t in tb.instants:
        got = aggregate_dominant(snapshot(tb, t), "Premium", "high").components
        expect = weighted_rows([rows[t]["low"], rows[t]["medium"], rows[t]["high"]], [.1, .5, 1])
        assert got == pytest.approx(expect, abs=1e-12)


def test_snapshot_errors():
    tb, _ = engagement()
    with pytest.raises(UnknownIdentifier):
        snapshot(tb, "t9")
    with pytest.raises(DomainError):
        TimeIndexedBundle(("t1", "t3"), tb.bundles)
    broken = make_bundle(("Premium",), USAGE, {"Premium": {"low": .1}}, PAIRS)
    with pytest.raises(DomainError):
        snapshot(TimeIndexedBundle(("t",), {"t": broken}), "t")


def test_blend_min_max_and_alternatives():
    assert blend(.2, .1, .95) == pytest.approx(.05 * .1 + .95 * .2)
    assert blend(.5, .4, 0, BlendSpec("product", "probabilistic_sum")) == pytest.approx(.2)
    v = blend(DegreeVector((.2, .2, .6)), DegreeVector((.1, .2, .7)), .95)
    assert v.components == pytest.approx((.195, .2, .695))
    with pytest.raises(DomainError):
        BlendSpec("drastic")
    with pytest.raises(DomainError):
        blend(.2, .3, 1.5)


def demand_space():
    outcomes = ("w1", "w2", "w3")
    high = (.30, .50, .65)
    degrees = {w: {("S1", "a3", "high"): h} for w, h in zip(outcomes, high)}
    return ScenarioSpace(outcomes, (F(1, 3),) * 3, degrees, table(USAGE, PAIRS))


def test_expectation_and_quantile():
    s = demand_space()
    assert expectation(s, "S1", [("a3", "high")]) == pytest.approx(.483333, abs=1e-6)
    assert quantile(s, "S1", [("a3", "high")], F(1, 2)) == .5
    assert quantile(s, "S1", [("a3", "high")], 1) == .65
    assert quantile(s, "S1", [("a3", "high")], 0) == 0
    assert complement(.3) == pytest.approx(.7)


def test_profile_errors():
    s = demand_space()
    with pytest.raises(UnknownIdentifier):
        aggregate_profile(s, "S1", [("a3", "low")], "w1")
    with pytest.raises(UnknownIdentifier):
        aggregate_profile(s, "S1", [("a3", "high")], "w9")


def test_probabilities_must_sum_to_one():
    with pytest.raises(DomainError):
        ScenarioSpace(("w",), (.5,), {"w": {}}, table(USAGE, PAIRS))
