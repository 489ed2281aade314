import pytest

from uset.classic import FiniteUniverse
from uset.corpus import table
from uset.errors import DomainError, ShapeError, UnknownIdentifier
from uset.rough_soft import (
    ExpertContext,
    PlithogenicRelation,
    PSHSSContext,
    SoftApproxSpace,
    expert_degree,
    first_projection,
    fused_relation,
    plithogenic_lower,
    plithogenic_upper,
    pshss_fuzzy,
    pshss_intuitionistic,
    pshss_score,
    pshss_weight,
    soft_rough_lower,
    soft_rough_upper,
)

U3 = FiniteUniverse(("p1", "p2", "p3"))
PDF = {("p1", "p2"): .80, ("p1", "p3"): .30, ("p2", "p1"): .70, ("p2", "p3"): .40, ("p3", "p1"): .50, ("p3", "p2"): .60}
PCF = {("p1", "p2"): .20, ("p1", "p3"): .60, ("p2", "p1"): .30, ("p2", "p3"): .40, ("p3", "p1"): .50, ("p3", "p2"): .40}


def diagnoses():
    return PlithogenicRelation(U3, PDF, PCF)


def test_fused_relation_discounts_by_contradiction():
    assert fused_relation(diagnoses(), "p1", "p2") == pytest.approx(.8 * .8)
    assert fused_relation(diagnoses(), "p2", "p2") == 1


def test_diagnosis_approximations():
    lo, up = plithogenic_lower(diagnoses(), {"p2"}), plithogenic_upper(diagnoses(), {"p2"})
    assert (lo["p1"], up["p1"], lo["p3"], up["p3"]) == pytest.approx((.51, .51, .76, .36), abs=1e-4)


def test_missing_pairs_read_as_zero_and_projection_combiner():
    rel = PlithogenicRelation(U3, {("p1", "p2"): .4}, combiner=first_projection)
    assert fused_relation(rel, "p1", "p2") == .4 and fused_relation(rel, "p2", "p1") == 0


def test_relation_validates_entries():
    with pytest.raises(UnknownIdentifier):
        PlithogenicRelation(U3, {("p1", "q"): .4})
    with pytest.raises(DomainError):
        PlithogenicRelation(U3, {("p1", "p2"): 1.4})


def supplier_space():
    u = FiniteUniverse(("S1", "S2"))
    relations = {
        "e1": PlithogenicRelation(u, {("S1", "S2"): .80, ("S2", "S1"): .75}, {("S1", "S2"): .20, ("S2", "S1"): .25}),
        "e2": PlithogenicRelation(u, {("S1", "S2"): .60, ("S2", "S1"): .70}, {("S1", "S2"): .30, ("S2", "S1"): .20}),
    }
    membership = {("S1", "e1"): .70, ("S1", "e2"): .60, ("S2", "e1"): .90, ("S2", "e2"): .80}
    return SoftApproxSpace(u, ("e1", "e2"), membership, relations)


def test_soft_rough_supplier_values():
    lo, up = soft_rough_lower(supplier_space(), {"S2"}), soft_rough_upper(supplier_space(), {"S2"})
    assert (lo[("S1", "e1")], up[("S1", "e1")], lo[("S1", "e2")], up[("S1", "e2")]) == pytest.approx(
        (.39375, .39375, .252, .348), abs=1e-4)
    assert (lo[("S2", "e1")], up[("S2", "e1")], lo[("S2", "e2")], up[("S2", "e2")]) == pytest.approx(
        (.90, .576, .80, .352), abs=1e-4)


def test_soft_space_requires_full_membership():
    s = supplier_space()
    with pytest.raises(DomainError):
        SoftApproxSpace(s.universe, s.parameters, {("S1", "e1"): .7}, s.relations)


def energy_experts():
    labels = table(("low", "green", "neutral", "1"), {("low", "1"): .1, ("green", "1"): .1, ("neutral", "1"): .3})
    return ExpertContext(
        FiniteUniverse(("u1", "u2", "u3")),
        {("e1", "x1", "1"): "low", ("e2", "x1", "1"): "neutral", ("e2", "x2", "1"): "green"},
        {"e1": {("u1", "low"): .9, ("u2", "low"): .6, ("u3", "low"): .2},
         "e2": {("u1", "green"): .7, ("u2", "green"): .4, ("u3", "green"): .1,
                ("u1", "neutral"): .5, ("u2", "neutral"): .7, ("u3", "neutral"): .6}},
        labels)


def test_expert_degrees():
    ctx = energy_experts()
    assert expert_degree(ctx, ("e1", "x1", "1"), "u1") == pytest.approx(.81)
    assert expert_degree(ctx, ("e2", "x1", "1"), "u2") == pytest.approx(.49)
    with pytest.raises(UnknownIdentifier):
        expert_degree(ctx, ("e1", "x2", "1"), "u1")


def trial_context():
    return PSHSSContext(
        (table(("Mild", "Moderate", "Severe"), {("Mild", "Severe"): .9, ("Moderate", "Severe"): .3}),
         table(("LowBP", "HighBP"), {("LowBP", "HighBP"): .8}),
         table(("LowRisk", "HighRisk"), {("LowRisk", "HighRisk"): .9})),
        ({"Severe"}, {"HighBP"}, {"HighRisk"}))


def test_pshss_subset_weight_and_score():
    w = pshss_weight(trial_context(), ({"Moderate", "Severe"}, {"HighBP"}, {"HighRisk"}))
    assert w == pytest.approx(.7)
    d = pshss_score((.85, .10, .08), w, 0)
    assert d.score == pytest.approx(.439) and d.selected
    assert not pshss_score((.1, .5, .1), w, 0).selected


def test_pshss_rejects_overlapping_domains_and_bad_configs():
    t = table(("a", "b"), {})
    with pytest.raises(DomainError):
        PSHSSContext((t, t), ("a", "a"))
    with pytest.raises(ShapeError):
        pshss_weight(trial_context(), ("Severe",))
    with pytest.raises(UnknownIdentifier):
        pshss_weight(trial_context(), ("Critical", "HighBP", "HighRisk"))


def test_pshss_fuzzy_and_intuitionistic_rules():
    d = pshss_fuzzy((.86, .70, .75, .68), (1, .8, .7, .6), .75)
    assert d.score == pytest.approx(2.353 / 3.1) and d.selected
    i = pshss_intuitionistic([(.85, .10), (.62, .25), (.70, .20), (.60, .22)], (1, .6, .7, .5), .50)
    assert (i.membership, i.nonmembership, i.margin) == pytest.approx((.71857, .17857, .54), abs=1e-4)
    assert i.selected
