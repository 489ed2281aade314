"""Invariants over randomly generated bundles."""
import copy
import json
import math
import random
from fractions import Fraction as F
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from uset.constrained import constrained_aggregate
from uset.core import ContradictionTable, aggregate_dominant, compatibility_weights, make_bundle
from uset.degree import ConstraintSpec, validate_constraint
from uset.scenario import parse_scenario, rank

SCENARIOS = Path(__file__).resolve().parents[1] / "scenarios"

units = st.integers(0, 20).map(lambda k: F(k, 20))


@st.composite
def symmetric_tables(draw, min_values=2, max_values=5):
    n = draw(st.integers(min_values, max_values))
    values = tuple(f"v{i}" for i in range(n))
    channels = draw(st.integers(1, 3))
    cells = [(values[i], values[j]) for i in range(n) for j in range(i + 1, n)]
    flat = draw(st.lists(units, min_size=len(cells) * channels, max_size=len(cells) * channels))
    pairs = {cell: tuple(flat[k * channels:(k + 1) * channels]) for k, cell in enumerate(cells)}
    return ContradictionTable.from_pairs(values, pairs, channels)


@st.composite
def bundles(draw, arity=3, spec=None, elements=3):
    table = draw(symmetric_tables())
    comps = lambda: draw(_degree(arity, spec))
    xs = [f"x{i}" for i in range(elements)]
    degrees = {x: {a: comps() for a in table.values} for x in xs}
    fusion = draw(st.sampled_from(["mean", "max"]))
    return make_bundle(xs, table.values, degrees, table, fusion=fusion, constraint=spec,
                       channels=table.channels)


@st.composite
def _degree(draw, arity, spec):
    xs = tuple(draw(st.lists(units, min_size=arity, max_size=arity)))
    if spec is not None and spec.kind == "band":
        return tuple(spec.lo + (spec.hi - spec.lo) * v for v in xs)
    # halving keeps the direction and eventually lands inside any constraint containing 0
    while spec is not None and not validate_constraint(xs, spec).ok:
        xs = tuple(v / 2 for v in xs)
    return xs


# -- contradiction axioms ---------------------------------------------------------

@given(symmetric_tables())
def test_symmetric_zero_diagonal_tables_validate(table):
    assert table.violations() == []
    for a in table.values:
        assert table.get(a, a) == (0,) * table.channels
        for b in table.values:
            assert table.get(a, b) == table.get(b, a)


@given(symmetric_tables(), st.data())
def test_reflexivity_break_is_reported_at_its_cell(table, data):
    a = data.draw(st.sampled_from(table.values))
    bump = data.draw(st.integers(1, 20).map(lambda k: F(k, 20)))
    entries = dict(table.entries)
    entries[(a, a)] = (bump,) * table.channels
    broken = ContradictionTable(table.values, table.channels, entries)
    found = broken.violations()
    assert any(v.location == f"contradiction[{a},{a}]" and "reflexivity" in v.message for v in found)


@given(symmetric_tables(), st.data())
def test_symmetry_break_is_reported(table, data):
    a, b = data.draw(st.permutations(table.values))[:2]
    entries = dict(table.entries)
    old = entries[(a, b)]
    entries[(a, b)] = tuple((c + F(1, 2)) % 1 for c in old)
    broken = ContradictionTable(table.values, table.channels, entries)
    assert any("symmetry" in v.message for v in broken.violations())


@given(symmetric_tables(), st.data())
def test_out_of_range_entry_is_reported(table, data):
    a, b = data.draw(st.permutations(table.values))[:2]
    entries = dict(table.entries)
    entries[(a, b)] = entries[(b, a)] = (F(3, 2),) * table.channels
    broken = ContradictionTable(table.values, table.channels, entries)
    assert any("outside [0, 1]" in v.message for v in broken.violations())


# -- weights and aggregation ---------------------------------------------------------

@given(bundles(), st.data())
def test_dominant_weight_is_one_and_bounds_all_others(b, data):
    d = data.draw(st.sampled_from(b.values))
    w = compatibility_weights(b, d)
    assert w[d] == 1
    assert all(0 <= v <= 1 for v in w.values())


@given(bundles(), st.data())
def test_aggregate_stays_in_the_componentwise_hull(b, data):
    d = data.draw(st.sampled_from(b.values))
    for x in b.universe:
        out = aggregate_dominant(b, x, d)
        for j in range(b.appurtenance.arity):
            col = [b.appurtenance.get(x, a)[j] for a in b.values]
            assert min(col) <= out[j] <= max(col)


@given(bundles(), st.data())
def test_hull_attains_the_value_when_all_degrees_agree(b, data):
    d = data.draw(st.sampled_from(b.values))
    x = b.universe.elements[0]
    same = {x: {a: b.appurtenance.get(x, d) for a in b.values}}
    flat = make_bundle([x], b.values, same, b.contradiction, fusion=b.fusion)
    assert aggregate_dominant(flat, x, d) == b.appurtenance.get(x, d)


CONSTRAINTS = {
    "ifs": (ConstraintSpec.ifs(), 2),
    "neutrosophic": (ConstraintSpec.neutrosophic(), 3),
    "picture": (ConstraintSpec.picture(2), 3),
    "picture_t3": (ConstraintSpec.picture(3), 4),
    "spherical": (ConstraintSpec.spherical(1), 3),
    "t_spherical": (ConstraintSpec.t_spherical(3, 1), 3),
    "q_rung": (ConstraintSpec.q_rung(3, 2), 2),
    "diophantine": (ConstraintSpec.diophantine(F(2), (F(1, 2), F(3, 4), F(1, 2))), 3),
    "band": (ConstraintSpec.band(F(1, 4), F(3, 4)), 3),
}


def random_constrained_bundle(rng: random.Random, spec: ConstraintSpec, arity: int, exact: bool = False):
    """Seeded twin of the ``bundles`` strategy for bulk runs; floats unless ``exact``."""
    n = rng.randint(2, 5)
    channels = rng.randint(1, 3)
    values = tuple(f"v{i}" for i in range(n))
    unit = (lambda: F(rng.randint(0, 20), 20)) if exact else (lambda: rng.randint(0, 20) / 20)
    pairs = {(values[i], values[j]): tuple(unit() for _ in range(channels))
             for i in range(n) for j in range(i + 1, n)}

    def degree():
        xs = tuple(unit() for _ in range(arity))
        if spec.kind == "band":
            return tuple(spec.lo + (spec.hi - spec.lo) * v for v in xs)
        while not validate_constraint(xs, spec).ok:
            xs = tuple(v / 2 for v in xs)
        return xs

    table = ContradictionTable.from_pairs(values, pairs, channels)
    return make_bundle(["x0"], values, {"x0": {a: degree() for a in values}}, table,
                       fusion=rng.choice(["mean", "max"]), constraint=spec), rng.choice(values)


def constraint_failures(kind: str, instances: int = 1000, seed: int = 0) -> int:
    spec, arity = CONSTRAINTS[kind]
    rng = random.Random(f"{seed}:{kind}")
    bad = 0
    for _ in range(instances):
        b, d = random_constrained_bundle(rng, spec, arity)
        bad += not constrained_aggregate(b, "x0", d).report.ok
    return bad


@pytest.mark.parametrize("kind", list(CONSTRAINTS))
def test_constraint_survives_aggregation_on_a_thousand_seeded_bundles(kind):
    assert constraint_failures(kind) == 0


@pytest.mark.parametrize("kind", list(CONSTRAINTS))
def test_constraint_survives_aggregation(kind):
    spec, arity = CONSTRAINTS[kind]

    @given(bundles(arity=arity, spec=spec, elements=1), st.data())
    def check(b, data):
        d = data.draw(st.sampled_from(b.values))
        res = constrained_aggregate(b, "x0", d)
        assert res.report.ok, (res.degree, res.report)

    check()


# -- ranking -----------------------------------------------------------------------

def _order(b, d):
    scores = [(x, aggregate_dominant(b, x, d)[0]) for x in b.universe]
    return [x for x, _ in sorted(scores, key=lambda t: -t[1])]


@given(bundles(elements=4), st.integers(1, 100).map(lambda k: F(k, 100)), st.data())
def test_argmax_order_survives_uniform_rescaling(b, c, data):
    d = data.draw(st.sampled_from(b.values))
    scaled = {x: {a: tuple(c * v for v in b.appurtenance.get(x, a)) for a in b.values} for x in b.universe}
    b2 = make_bundle(b.universe.elements, b.values, scaled, b.contradiction, fusion=b.fusion)
    assert _order(b2, d) == _order(b, d)


@given(st.integers(1, 6), st.sampled_from(["low_rent", "near_station", "large"]))
def test_scenario_rank_survives_power_of_two_rescaling(k, dominant):
    raw = json.loads((SCENARIOS / "rental.json").read_text())
    base = [x for x, _ in rank(parse_scenario(raw), dominant)]
    scaled = copy.deepcopy(raw)
    scaled.pop("constraint")
    for row in scaled["degrees"].values():
        for a, vec in row.items():
            row[a] = [math.ldexp(v, -k) for v in vec]
    assert [x for x, _ in rank(parse_scenario(scaled), dominant)] == base
