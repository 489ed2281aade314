"""Regression corpus of worked examples with errata-aware status reporting.

Every case recomputes its example from the library kernels and compares the
result with the printed figures.  A check whose printed figure disagrees but
whose computed value reproduces the example's own formula chain is an erratum,
not a failure.
"""
from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Callable, Iterable, Sequence

from .classic import (
    FiniteUniverse,
    GradedSet,
    HypersoftFamily,
    RoughContext,
    SoftFamily,
    hesitation,
    hypersoft_query,
    rough_approximate,
    soft_query,
    superhypersoft_query,
)
from .constrained import (
    DiophantineEntry,
    constrained_aggregate,
    diophantine_check,
    spherical_validate,
    t_spherical_validate,
)
from .core import (
    ContradictionTable,
    IntervalContradictionTable,
    aggregate_dominant,
    classify_band,
    make_bundle,
    validate_bundle,
)
from .degree import (
    ComplexDegree,
    ConstraintSpec,
    DegreeVector,
    DualDegree,
    IntervalDegree,
    TrapezoidalNumber,
    TriangularNumber,
    shaped_membership,
)
from .errors import DomainError
from .hierarchy import (
    AttributeForest,
    AttributeTree,
    LevelSpec,
    MPolarBundle,
    PoleSystem,
    ThresholdRule,
    TreeLeaf,
    TreeNode,
    forest_aggregate,
    staged_aggregate,
    superhyper_aggregate,
    tree_aggregate,
)
from .rough_soft import (
    ExpertContext,
    PlithogenicRelation,
    PSHSSContext,
    SoftApproxSpace,
    expert_degree,
    plithogenic_lower,
    plithogenic_upper,
    pshss_fuzzy,
    pshss_intuitionistic,
    pshss_score,
    pshss_weight,
    soft_rough_lower,
    soft_rough_upper,
)
from .temporal import ScenarioSpace, TimeIndexedBundle, aggregate_profile, expectation, quantile, snapshot
from .variants import (
    CubicDegree,
    RefinedSignature,
    TermSet,
    TrapTripleDegree,
    cubic_aggregate,
    hesitant_reduce,
    linguistic_aggregate,
    nonstandard_aggregate,
    picture_construct,
    refined_aggregate,
    refined_scalarize,
    subset_reduce,
    subset_valued_validate,
    trapezoidal_inclusion,
    triangular_aggregate,
)

PRINT_TOL = 1e-3
PHASE_TOL = 0.05
TIGHT_TOL = 1e-4
SELF_TOL = 1e-9
# a frozen formula value is quoted to at least six decimals
FORMULA_TOL = 1e-6
# keeps a deviation of exactly one tolerance step inside the band under binary64 noise
EDGE_SLACK = 1e-12

STATUSES = ("pass", "erratum", "fail")
CSV_HEADER = ("case", "computed", "printed", "delta", "status")
DEFAULT_PRECISION = 6

F = Fraction


@dataclass(frozen=True, slots=True)
class Check:
    """One compared quantity; ``tolerance`` None means exact comparison."""

    name: str
    computed: object
    reference: object
    tolerance: float | None = PRINT_TOL
    source: str = "printed"
    formula: object = None


def near(name: str, computed, printed, tol: float = PRINT_TOL, formula=None) -> Check:
    return Check(name, computed, printed, tol, "printed", formula)


def exact(name: str, computed, printed, formula=None) -> Check:
    return Check(name, computed, printed, None, "printed", formula)


def at_printed_precision(name: str, computed, printed: str, formula=None) -> Check:
    """Compare against a print at half a unit of its last quoted digit."""
    decimals = len(printed.partition(".")[2])
    return Check(name, computed, float(printed), 0.5 * 10 ** -decimals, "printed", formula)


def derived(name: str, computed, reference, tol: float | None = SELF_TOL) -> Check:
    return Check(name, computed, reference, tol, "derived")


def near_all(prefix: str, labels: Sequence[str], computed: Iterable, printed: Sequence, tol: float = PRINT_TOL):
    return [near(f"{prefix}.{lab}", c, p, tol) for lab, c, p in zip(labels, computed, printed)]


def derived_all(prefix: str, labels: Sequence[str], computed: Iterable, reference: Sequence, tol: float = SELF_TOL):
    return [derived(f"{prefix}.{lab}", c, r, tol) for lab, c, r in zip(labels, computed, reference)]


TFI = ("T", "I", "F")


@dataclass(frozen=True, slots=True)
class CorpusCase:
    case: str
    label: str
    run: Callable[[], list[Check]]


CORPUS: list[CorpusCase] = []


def case(case_id: str, label: str):
    def register(fn: Callable[[], list[Check]]) -> Callable[[], list[Check]]:
        CORPUS.append(CorpusCase(case_id, label, fn))
        return fn
    return register


def ladder(names: Sequence[str]) -> ContradictionTable:
    """Index-distance contradiction |i - j| / (n - 1) over ordered names."""
    names = tuple(names)
    n = len(names) - 1
    return ContradictionTable.from_function(names, lambda a, b: F(abs(names.index(a) - names.index(b)), n))


def table(values: Sequence[str], pairs: dict, channels: int = 1) -> ContradictionTable:
    return ContradictionTable.from_pairs(tuple(values), pairs, channels)


# -- classical sets --------------------------------------------------------------

@case("2.1.2", "triangular membership for comfortable temperature")
def _ex_2_1_2():
    tri = (F(16), F(22), F(28))
    return [
        exact("mu(18)", shaped_membership(F(18), tri), F(1, 3)),
        exact("mu(22)", shaped_membership(F(22), tri), F(1)),
        exact("mu(27)", shaped_membership(F(27), tri), F(1, 6)),
    ]


@case("2.1.3", "trapezoidal membership for affordable rent")
def _ex_2_1_3():
    trap = (F(200), F(400), F(1200), F(1600))
    return [
        exact("mu(300)", shaped_membership(F(300), trap), F(1, 2)),
        exact("mu(900)", shaped_membership(F(900), trap), F(1)),
        exact("mu(1400)", shaped_membership(F(1400), trap), F(1, 2)),
    ]


def _ifs(names, mus, nus) -> GradedSet:
    return GradedSet(FiniteUniverse(names), "ifs",
                     {x: DegreeVector((m, n)) for x, m, n in zip(names, mus, nus)})


@case("2.2.2", "intuitionistic product suitability")
def _ex_2_2_2():
    names = ("p1", "p2", "p3", "p4")
    g = _ifs(names, (.85, .60, .30, .10), (.05, .20, .40, .70))
    sums = [sum(g.grade(x)) for x in names]
    return near_all("sum", names, sums, (.90, .80, .70, .80)) + [
        near("hesitation.p1", hesitation(g.grade("p1")), .10)]


@case("2.2.3", "intuitionistic service reliability")
def _ex_2_2_3():
    names = ("A", "B", "C")
    g = _ifs(names, (.70, .40, .20), (.10, .30, .60))
    sums = [sum(g.grade(x)) for x in names]
    return near_all("sum", names, sums, (.80, .70, .80)) + [
        near("hesitation.A", hesitation(g.grade("A")), .20)]


def influenza_degree(temperature: float, antigen: float, contact: float) -> tuple[float, float, float]:
    t = min(1.0, 0.5 * antigen + 0.3 * max(0.0, (temperature - 37) / 2) + 0.2 * contact)
    f = min(1.0, 0.6 * (1 - antigen) + 0.4 * max(0.0, (37 - temperature) / 2))
    i = (1 - abs(2 * antigen - 1)) * (1 - min(1.0, abs(temperature - 37) / 1.5))
    return t, i, f


@case("2.3.2", "neutrosophic influenza screening")
def _ex_2_3_2():
    return near_all("influenza", TFI, influenza_degree(38.2, 0.7, 0.6), (.65, .12, .18))


def arrival_degree(reliability: float, mean_delay: float, slack: float, uncertainty: float):
    g = slack / (slack + mean_delay)
    t = min(1.0, 0.6 * reliability + 0.4 * g)
    f = min(1.0, 0.6 * (1 - reliability) + 0.4 * (1 - g))
    return t, uncertainty, f


@case("2.3.3", "neutrosophic on-time arrival estimate")
def _ex_2_3_3():
    return near_all("arrival", TFI, arrival_degree(0.85, 1.8, 2.0, 0.25), (.7205, .25, .2795))


def _rough(elements, blocks, target):
    ctx = RoughContext(FiniteUniverse(elements), tuple(frozenset(b) for b in blocks))
    return rough_approximate(ctx, target)


@case("2.4.2", "Pawlak approximation of flagged e-mails")
def _ex_2_4_2():
    es = tuple(f"e{i}" for i in range(1, 11))
    r = _rough(es, (("e1", "e2"), ("e3", "e4", "e5"), ("e6", "e7"), ("e8", "e9", "e10")),
               {"e1", "e2", "e3", "e6", "e7"})
    return [
        exact("lower", r.lower, frozenset({"e1", "e2", "e6", "e7"})),
        exact("upper", r.upper, frozenset(es[:7])),
        exact("accuracy", r.accuracy, F(4, 7)),
        exact("coverage", r.coverage, F(2, 5)),
    ]


@case("2.4.3", "Pawlak approximation of at-risk patients")
def _ex_2_4_3():
    ps = tuple(f"p{i}" for i in range(1, 13))
    r = _rough(ps, (ps[0:3], ps[3:5], ps[5:8], ps[8:12]), {"p1", "p2", "p3", "p4", "p9"})
    return [exact("accuracy", r.accuracy, F(1, 3)), exact("coverage", r.coverage, F(1, 4))]


APARTMENTS = SoftFamily(FiniteUniverse(("A1", "A2", "A3", "A4")), {
    "near_station": frozenset({"A1", "A3", "A4"}),
    "pet_friendly": frozenset({"A2", "A3"}),
    "under_120000": frozenset({"A1", "A2"}),
    "twoLDK_or_more": frozenset({"A1", "A4"}),
    "built_after_2015": frozenset({"A3", "A4"}),
})

LAPTOPS = SoftFamily(FiniteUniverse(("L1", "L2", "L3", "L4")), {
    "lightweight": frozenset({"L1", "L3"}),
    "long_battery": frozenset({"L1", "L2", "L4"}),
    "budget": frozenset({"L2", "L3"}),
    "ram16GB": frozenset({"L1", "L4"}),
    "screen14in": frozenset({"L1", "L3", "L4"}),
})

LAPTOP_PROFILES = HypersoftFamily(
    FiniteUniverse(tuple(f"L{i}" for i in range(1, 7))),
    (("i5", "i7"), (8, 16), (256, 512)),
    {"L1": ("i5", 8, 256), "L2": ("i5", 16, 512), "L3": ("i7", 8, 512),
     "L4": ("i7", 16, 256), "L5": ("i7", 16, 512), "L6": ("i5", 8, 512)},
)

TRAVEL_PROFILES = HypersoftFamily(
    FiniteUniverse(("p1", "p2", "p3", "p4", "p5")),
    (("Spring", "Summer", "Autumn", "Winter"), ("Low", "Mid", "High"), ("Solo", "Family", "Business")),
    {"p1": ("Summer", "High", "Family"), "p2": ("Winter", "Mid", "Family"), "p3": ("Autumn", "Mid", "Solo"),
     "p4": ("Autumn", "High", "Business"), "p5": ("Spring", "Low", "Solo")},
)


@case("2.5.2", "soft set apartment filter")
def _ex_2_5_2():
    return [exact("near_station&pet_friendly", soft_query(APARTMENTS, ["near_station", "pet_friendly"]),
                  frozenset({"A3"}))]


@case("2.5.3", "soft set laptop filter")
def _ex_2_5_3():
    return [
        exact("budget&screen14in", soft_query(LAPTOPS, ["budget", "screen14in"]), frozenset({"L3"})),
        exact("budget&screen14in&long_battery",
              soft_query(LAPTOPS, ["budget", "screen14in", "long_battery"]), frozenset()),
    ]


@case("2.5.5", "hypersoft laptop profiles")
def _ex_2_5_5():
    return [
        exact("(i7,16,512)", hypersoft_query(LAPTOP_PROFILES, ("i7", 16, 512)), frozenset({"L5"})),
        exact("(i5,8,512)", hypersoft_query(LAPTOP_PROFILES, ("i5", 8, 512)), frozenset({"L6"})),
        exact("(i5,16,256)", hypersoft_query(LAPTOP_PROFILES, ("i5", 16, 256)), frozenset()),
    ]


@case("2.5.7", "superhypersoft travel packages")
def _ex_2_5_7():
    q = lambda *subsets: superhypersoft_query(TRAVEL_PROFILES, subsets)  # noqa: E731
    return [
        exact("summer-autumn/high/family-business",
              q({"Summer", "Autumn"}, {"High"}, {"Family", "Business"}), frozenset({"p1", "p4"})),
        exact("winter/mid/family", q({"Winter"}, {"Mid"}, {"Family"}), frozenset({"p2"})),
        exact("spring-autumn/low-mid/solo",
              q({"Spring", "Autumn"}, {"Low", "Mid"}, {"Solo"}), frozenset({"p3", "p5"})),
    ]


# -- plithogenic bundles ------------------------------------------------------------

def _bundle_case(elements, values, rows, pairs, dominant, reference):
    degrees = {x: dict(zip(values, r)) for x, r in zip(elements, rows)}
    b = make_bundle(elements, values, degrees, pairs, constraint=ConstraintSpec.neutrosophic())
    out = [derived("violations", len(validate_bundle(b)), 0, None)]
    for x, ref in zip(elements, reference):
        out += derived_all(f"{x}@{dominant}", TFI, aggregate_dominant(b, x, dominant), ref)
    return out


@case("3.1.2", "rental suitability bundle")
def _ex_3_1_2():
    values = ("low_rent", "near_station", "large")
    rows = [
        [(.85, .05, .10), (.90, .05, .10), (.40, .20, .60)],
        [(.60, .15, .35), (.50, .20, .50), (.75, .10, .25)],
        [(.45, .25, .55), (.80, .10, .20), (.55, .15, .45)],
    ]
    pairs = {("low_rent", "near_station"): .30, ("low_rent", "large"): .70, ("near_station", "large"): .50}
    ref = [(0.7704545454545454, 0.08409090909090908, 0.2136363636363636),
           (0.5886363636363635, 0.16136363636363635, 0.39545454545454545),
           (0.6318181818181818, 0.1590909090909091, 0.3681818181818181)]
    return _bundle_case(("A1", "A2", "A3"), values, rows, pairs, "near_station", ref)


@case("3.1.3", "diet plan adherence bundle")
def _ex_3_1_3():
    values = ("keto", "low_fat", "vegan")
    rows = [
        [(.70, .10, .30), (.40, .20, .60), (.30, .20, .70)],
        [(.20, .20, .80), (.65, .15, .35), (.55, .15, .45)],
        [(.50, .25, .50), (.45, .20, .55), (.75, .10, .25)],
    ]
    pairs = {("keto", "low_fat"): .60, ("keto", "vegan"): .90, ("low_fat", "vegan"): .20}
    ref = [(0.5933333333333334, 0.13333333333333333, 0.4066666666666667),
           (0.3433333333333333, 0.18333333333333335, 0.6566666666666667),
           (0.5033333333333334, 0.22666666666666668, 0.49666666666666665)]
    return _bundle_case(("p1", "p2", "p3"), values, rows, pairs, "keto", ref)


@case("3.1.4", "car powertrain bundle")
def _ex_3_1_4():
    values = ("electric", "hybrid", "gasoline")
    rows = [
        [(.90, .05, .10), (.70, .10, .30), (.10, .20, .90)],
        [(.40, .20, .60), (.80, .10, .20), (.35, .20, .65)],
        [(.20, .15, .80), (.50, .20, .50), (.85, .05, .15)],
    ]
    pairs = {("electric", "hybrid"): .30, ("electric", "gasoline"): 1.0, ("hybrid", "gasoline"): .60}
    ref = [(0.27142857142857146, 0.17142857142857146, 0.7285714285714286),
           (0.47857142857142865, 0.17142857142857146, 0.5214285714285715),
           (0.7500000000000001, 0.09285714285714286, 0.25)]
    return _bundle_case(("C1", "C2", "C3"), values, rows, pairs, "gasoline", ref)


# -- m-polar -----------------------------------------------------------------------

THREE_POLES = ("pro", "neutral", "contra")
THREE_POLE_TABLE = {("pro", "neutral"): .2, ("pro", "contra"): 1.0, ("neutral", "contra"): .2}


def _mpolar(elements, values, value_pairs, poles, pole_pairs, rows) -> MPolarBundle:
    entries = {}
    for x, row in zip(elements, rows):
        for a, per_pole in zip(values, row):
            entries[(x, a)] = tuple(DegreeVector((d,)) for d in per_pole)
    return MPolarBundle(elements, table(values, value_pairs), PoleSystem(poles, table(poles, pole_pairs)), entries)


@case("3.2.3", "tri-polar candidate assessment")
def _ex_3_2_3():
    values = ("junior", "mid", "senior")
    b = _mpolar(("c1", "c2", "c3"), values,
                {("junior", "mid"): .3, ("junior", "senior"): .8, ("mid", "senior"): .4},
                THREE_POLES, THREE_POLE_TABLE,
                [[(.6, .3, .1), (.7, .2, .1), (.4, .2, .4)],
                 [(.3, .2, .5), (.5, .3, .2), (.8, .1, .1)],
                 [(.2, .3, .5), (.4, .3, .3), (.6, .2, .2)]])
    from .hierarchy import mpolar_aggregate
    return [
        near("c1.mid", mpolar_aggregate(b, "c1", "mid", "senior", "pro")[0], .478),
        near("c1.senior", mpolar_aggregate(b, "c1", "senior", "senior", "pro")[0], .311),
    ]


@case("3.2.4", "four-pole vendor assessment")
def _ex_3_2_4():
    from .hierarchy import mpolar_aggregate
    values = ("low_cost", "fast", "high_rel")
    poles = ("benefit", "neutral", "risk", "compliance")
    pole_pairs = {("benefit", "neutral"): .2, ("benefit", "risk"): .9, ("benefit", "compliance"): .1,
                  ("neutral", "risk"): .2, ("neutral", "compliance"): .2, ("risk", "compliance"): .8}
    b = _mpolar(("v1",), values,
                {("low_cost", "fast"): .5, ("low_cost", "high_rel"): .6, ("fast", "high_rel"): .2},
                poles, pole_pairs,
                [[(.65, .15, .30, .40), (.70, .10, .20, .50), (.60, .20, .10, .90)]])
    return [
        near("v1.fast", mpolar_aggregate(b, "v1", "fast", "high_rel", "benefit")[0], .4464),
        near("v1.high_rel", mpolar_aggregate(b, "v1", "high_rel", "high_rel", "benefit")[0], .5643),
    ]


@case("3.2.5", "tri-polar plant configuration")
def _ex_3_2_5():
    from .hierarchy import mpolar_aggregate
    values = ("safety", "throughput", "cost")
    b = _mpolar(("A", "B"), values,
                {("safety", "throughput"): .5, ("safety", "cost"): .3, ("throughput", "cost"): .4},
                THREE_POLES, THREE_POLE_TABLE,
                [[(.85, .10, .05), (.60, .20, .20), (.55, .25, .20)],
                 [(.70, .20, .10), (.80, .10, .10), (.40, .30, .30)]])
    return [
        near("B.throughput", mpolar_aggregate(b, "B", "throughput", "safety", "pro")[0], .489),
        near("A.safety", mpolar_aggregate(b, "A", "safety", "safety", "pro")[0], .517),
    ]


# -- complex -----------------------------------------------------------------------

def _complex_bundle(values, pairs, components):
    degrees = {"x": {a: tuple(ComplexDegree.from_degrees(m, d) for m, d in comp)
                     for a, comp in zip(values, zip(*components))}}
    return make_bundle(("x",), values, degrees, table(values, pairs, 2), kind="complex", channels=2)


def _polar_checks(prefix, degree: ComplexDegree, modulus, phase, phase_formula=None):
    return [near(f"{prefix}.modulus", degree.modulus, modulus),
            near(f"{prefix}.phase_deg", degree.degrees, phase, PHASE_TOL, phase_formula)]


@case("3.3.2", "complex tariff signal under peak dominance")
def _ex_3_3_2():
    values = ("offpeak", "shoulder", "peak")
    b = _complex_bundle(values, {("offpeak", "peak"): (.8, .5), ("shoulder", "peak"): (.4, .2)},
                        [((.60, 0), (.80, 30), (.40, 60)), ((.50, 90), (.70, 60), (.30, 90))])
    c1, c2 = aggregate_dominant(b, "x", "peak")
    z1, z2 = c1.to_rect(), c2.to_rect()
    return (
        _polar_checks("comp1", c1, .5329, 34.99)
        + _polar_checks("comp2", c2, .4547, 74.83, phase_formula=74.761364)
        + [
            near("comp1.re", z1.real, .2373, formula=0.436573),
            near("comp1.im", z1.imag, .4778, formula=0.305566),
            near("comp2.re", z2.real, .1195),
            near("comp2.im", z2.imag, .4384),
        ]
    )


@case("3.3.3", "complex imaging evidence under MRI dominance")
def _ex_3_3_3():
    values = ("CT", "US", "MRI")
    b = _complex_bundle(values, {("CT", "MRI"): (.9, .2), ("US", "MRI"): (0, .6)},
                        [((.65, 10), (.50, 70), (.85, 20))])
    (c,) = aggregate_dominant(b, "x", "MRI")
    return _polar_checks("comp1", c, .6420, 29.06)


@case("3.3.4", "complex product tier signal")
def _ex_3_3_4():
    values = ("budget", "balanced", "premium")
    b = _complex_bundle(values, {("budget", "balanced"): (.4, .6), ("premium", "balanced"): (.5, .2)},
                        [((.55, 15), (.75, 25), (.70, 35)), ((.60, 80), (.65, 50), (.55, 40))])
    c1, c2 = aggregate_dominant(b, "x", "balanced")
    return _polar_checks("comp1", c1, .6834, 26.22) + _polar_checks("comp2", c2, .5883, 53.99)


# -- superhyper nesting ------------------------------------------------------------------

def _vecs(*triples):
    return [DegreeVector(t) for t in triples]


@case("3.4.2", "superhyper air quality")
def _ex_3_4_2():
    values = ("low", "moderate", "high")
    payloads = {"low": _vecs((.3, .5, .4), (.4, .4, .5)),
                "moderate": _vecs((.5, .3, .4), (.6, .3, .3)),
                "high": _vecs((.8, .1, .1), (.7, .2, .2))}
    t = table(values, {("low", "high"): .7, ("moderate", "high"): .3, ("low", "moderate"): .4})
    return near_all("agg", TFI, superhyper_aggregate(payloads, t, "high"), (.620, .2475, .265))


@case("3.4.3", "superhyper traffic flow")
def _ex_3_4_3():
    values = ("free", "moderate", "heavy")
    payloads = {"free": [[.9, .8], [.85, .75]], "moderate": [[.7, .6], [.75, .55]],
                "heavy": [[.5, .3], [.45, .35]]}
    t = table(values, {("free", "heavy"): .8, ("moderate", "heavy"): .5, ("free", "moderate"): .4})
    return [near("agg", superhyper_aggregate(payloads, t, "heavy")[0], .5235)]


@case("3.4.4", "superhyper treatment regimens")
def _ex_3_4_4():
    values = ("single", "dual", "multi")
    payloads = {
        "single": [_vecs((.7, .2, .3), (.6, .3, .3)), _vecs((.75, .2, .25))],
        "dual": [_vecs((.8, .15, .15), (.78, .15, .12)), _vecs((.75, .18, .18))],
        "multi": [_vecs((.72, .2, .18), (.7, .22, .18)), _vecs((.68, .25, .2))],
    }
    t = table(values, {("single", "dual"): .4, ("multi", "dual"): .3, ("single", "multi"): .7})
    return near_all("agg", TFI, superhyper_aggregate(payloads, t, "dual"), (.7298, .2004, .1980))


# -- linguistic --------------------------------------------------------------------------

TERMS6 = TermSet(tuple(f"s{i}" for i in range(6)))
LADDER6 = {"s0": .2, "s1": .4, "s2": .6, "s3": .8, "s4": 1, "s5": .8}


@case("3.5.2", "linguistic satisfaction profile")
def _ex_3_5_2():
    mu = dict(zip(TERMS6.labels, (F("0.02"), F("0.08"), F("0.20"), F("0.40"), F("0.22"), F("0.08"))))
    out = linguistic_aggregate(mu, TERMS6, "s4")[0]
    return [exact("agg", out, F(1, 5))]


@case("3.5.3", "hesitant linguistic assessments")
def _ex_3_5_3():
    payloads = {("s3", "s4"): .60, ("s2", "s3"): .25, ("s4", "s5"): .35}
    return [near("agg", linguistic_aggregate(payloads, TERMS6, ("s4",))[0], .4136)]


@case("3.5.4", "linguistic neutrosophic profile")
def _ex_3_5_4():
    cols = zip((.05, .10, .30, .55, .70, .60), (.10, .15, .20, .20, .15, .15), (.80, .70, .50, .30, .20, .25))
    payloads = dict(zip(TERMS6.labels, cols))
    return near_all("agg", TFI, linguistic_aggregate(payloads, TERMS6, "s4"), (.4868, .1658, .3632))


# -- constrained ------------------------------------------------------------------------

def _constrained(values, columns, dominant, spec):
    degrees = {"x": {a: comps for a, comps in zip(values, zip(*columns))}}
    b = make_bundle(("x",), values, degrees, ladder(values), constraint=spec)
    return constrained_aggregate(b, "x", dominant)


@case("3.6.3", "q-rung orthopair credit scoring")
def _ex_3_6_3():
    values = ("s0", "s1", "s2", "s3")
    r = _constrained(values, [(.05, .35, .70, .88), (.98, .90, .80, .38)], "s3", ConstraintSpec.q_rung(3, 2))
    return near_all("agg", ("mu", "nu"), r.degree, (.7317, .6067)) + [
        derived("cube_sum_ok", r.report.ok, True, None)]


@case("3.6.4", "q-rung neutrosophic triage")
def _ex_3_6_4():
    values = ("a0", "a1", "a2")
    r = _constrained(values, [(.20, .55, .85), (.20, .25, .10), (.90, .55, .35)], "a2",
                     ConstraintSpec.q_rung(2, 3))
    return near_all("agg", TFI, r.degree, (.75, .15, .4167)) + [
        derived("square_sum", r.report.measured, 0.7586111111111111, 1e-9)]


@case("3.6.5", "q-rung orthopair bidding")
def _ex_3_6_5():
    values = ("b0", "b1", "b2")
    r = _constrained(values, [(.20, .65, .90), (.98, .60, .30)], "b2", ConstraintSpec.q_rung(4, 2))
    return near_all("agg", ("mu", "nu"), r.degree, (.8167, .4000)) + [
        near("fourth_power_sum", r.report.measured, .4705)]


# -- staged pipelines ----------------------------------------------------------------------

LMH = ("L", "M", "H")


def _nested(rows: dict, cols: Sequence[str]) -> dict:
    return {a: dict(zip(cols, r)) for a, r in rows.items()}


def _two_level(rows: dict, cols, outer=LMH, outer_dom="H", inner_dom=None, inner_table=None):
    inner = inner_table or ladder(cols)
    pipeline = [LevelSpec(ladder(outer), outer_dom), LevelSpec(inner, inner_dom or cols[-1])]
    return staged_aggregate(pipeline, _nested(rows, cols))


@case("3.7.2", "type-2 treatment intensity")
def _ex_3_7_2():
    rows = {"L": [(.35, .25, .60), (.55, .20, .45), (.70, .15, .35)],
            "M": [(.45, .25, .55), (.65, .18, .40), (.82, .12, .28)],
            "H": [(.52, .20, .48), (.78, .14, .26), (.90, .10, .18)]}
    return near_all("agg", TFI, _two_level(rows, ("r0", "r1", "r2")), (.8278, .1222, .2444))


MODES = ("road", "air", "sea")
WEATHER = ("clear", "rain", "storm")
SCOPES = ("local", "regional", "global")
# the delivery-mode weights are (1/2, 1, 0) against air, so sea is fully contradictory
MODE_TABLE = ContradictionTable.from_pairs(MODES, {("road", "air"): F(1, 2), ("air", "sea"): 1, ("road", "sea"): F(1, 2)})


@case("3.7.3", "type-3 logistics reliability")
def _ex_3_7_3():
    weather = LevelSpec(ladder(WEATHER), "clear")
    bottom = {"road": (.80, .60, .25), "air": (.90, .75, .30), "sea": (.85, .55, .20)}
    level1 = {m: staged_aggregate([weather], dict(zip(WEATHER, row)))[0] for m, row in bottom.items()}
    mid = {"local": (.7333, .85, .75), "regional": (.70, .88, .72), "global": (.76, .92, .78)}
    pipeline = [LevelSpec(ladder(SCOPES), "global"), LevelSpec(MODE_TABLE, "air")]
    per_scope = {s: staged_aggregate(pipeline[1:], dict(zip(MODES, row)))[0] for s, row in mid.items()}
    top = staged_aggregate(pipeline, _nested(mid, MODES))[0]
    return (
        near_all("level1", MODES, [level1[m] for m in MODES], (.7333, .85, .75))
        + near_all("level2", SCOPES, [per_scope[s] for s in SCOPES], (.8111, .82, .8667))
        + [near("level3", top, .8511)]
    )


@case("3.7.4", "type-2 intuitionistic course design")
def _ex_3_7_4():
    rows = {"L": [(.30, .60), (.55, .35), (.70, .20)],
            "B": [(.40, .55), (.65, .30), (.80, .15)],
            "I": [(.45, .50), (.72, .22), (.90, .08)]}
    out = _two_level(rows, ("r0", "r1", "r2"), outer=("L", "B", "I"), outer_dom="I")
    return near_all("agg", ("mu", "nu"), out, (.8100, .1511))


@case("3.8.4", "multi-fuzzy energy retrofit")
def _ex_3_8_4():
    rows = {"E": [(.85, .60), (.75, .55), (.65, .50)],
            "N": [(.70, .75), (.60, .80), (.50, .85)],
            "T": [(.55, .88), (.45, .92), (.35, .95)]}
    out = _two_level(rows, ("q0", "q1", "q2"), outer=("E", "N", "T"), outer_dom="T")
    return near_all("agg", ("comp1", "comp2"), out, (.4333, .9044))


@case("3.8.5", "multi-fuzzy hospital staffing")
def _ex_3_8_5():
    rows = {"I": [(.95, .20), (.85, .35), (.70, .50)],
            "M": [(.90, .50), (.82, .70), (.75, .85)],
            "B": [(.80, .60), (.72, .80), (.65, .95)]}
    out = _two_level(rows, ("q0", "q1", "q2"), outer=("I", "M", "B"), outer_dom="B")
    return near_all("agg", ("comp1", "comp2"), out, (.7066, .8667))


@case("3.8.6", "multi-neutrosophic transit frequency")
def _ex_3_8_6():
    cols = ("OP", "PK", "LN")
    reliability = {"L": [(.70, .20, .30), (.55, .25, .45), (.65, .22, .35)],
                   "M": [(.78, .18, .25), (.68, .20, .35), (.72, .18, .28)],
                   "H": [(.82, .15, .22), (.80, .14, .20), (.78, .16, .22)]}
    crowding = {"L": [(.80, .15, .20), (.40, .30, .60), (.75, .18, .25)],
                "M": [(.75, .18, .25), (.55, .25, .45), (.70, .20, .30)],
                "H": [(.70, .22, .30), (.50, .28, .50), (.65, .24, .35)]}
    rel = _two_level(reliability, cols, inner_dom="PK")
    crowd = _two_level(crowding, cols, inner_dom="PK")
    return (near_all("reliability", TFI, rel, (.7717, .1617, .2425))
            + near_all("low_crowding", TFI, crowd, (.6042, .2433, .3958)))


# -- interval-valued ---------------------------------------------------------------------

def _interval_bundle(values, pairs, rows):
    icf = IntervalContradictionTable.from_pairs(values, {k: IntervalDegree(*v) for k, v in pairs.items()})
    degrees = {"x": {a: tuple(IntervalDegree(*iv) for iv in r) for a, r in zip(values, rows)}}
    return make_bundle(("x",), values, degrees, kind="interval", interval_contradiction=icf)


def _bounds(prefix, result, printed):
    return [near(f"{prefix}.lower", result.lower, printed[0]), near(f"{prefix}.upper", result.upper, printed[1])]


@case("3.9.2", "interval-valued fuzzy scheduling")
def _ex_3_9_2():
    values = ("E", "S", "X")
    b = _interval_bundle(values, {("E", "S"): (.2, .3), ("X", "S"): (.3, .5), ("E", "X"): (.6, .8)},
                         [[(.5, .7)], [(.6, .85)], [(.4, .65)]])
    (mu,) = aggregate_dominant(b, "x", "S")
    return _bounds("mu", mu, (.4600, .8477))


@case("3.9.3", "interval-valued intuitionistic learning mode")
def _ex_3_9_3():
    values = ("I", "F", "P")
    b = _interval_bundle(values, {("I", "P"): (.5, .7), ("F", "P"): (.2, .3)},
                         [[(.55, .75), (.10, .25)], [(.65, .80), (.10, .20)], [(.50, .65), (.20, .35)]])
    mu, nu = aggregate_dominant(b, "x", "P")
    return _bounds("mu", mu, (.4870, .8325)) + _bounds("nu", nu, (.1304, .3175))


@case("3.9.4", "interval-valued neutrosophic supplier channel")
def _ex_3_9_4():
    values = ("C", "B", "A")
    b = _interval_bundle(values, {("C", "B"): (.1, .2), ("A", "B"): (.3, .5)},
                         [[(.6, .8), (.1, .25), (.1, .2)],
                          [(.7, .9), (.05, .15), (.05, .1)],
                          [(.4, .6), (.2, .3), (.25, .4)]])
    t, i, f = aggregate_dominant(b, "x", "B")
    return (_bounds("T", t, (.5308, .8869)) + _bounds("I", i, (.0885, .2543))
            + _bounds("F", f, (.0981, .2435)))


# -- offsets and cubic ---------------------------------------------------------------------

OFFSET_BAND = (-0.5, 1.5)


def _offset_bundle(values, pairs, columns):
    degrees = {"x": {a: comps for a, comps in zip(values, zip(*columns))}}
    return make_bundle(("x",), values, degrees, pairs, band=OFFSET_BAND)


@case("3.10.2", "offset fuzzy demand forecast")
def _ex_3_10_2():
    values = ("L", "M", "H")
    b = _offset_bundle(values, {("L", "H"): .85, ("M", "H"): .30, ("L", "M"): .50}, [(-.10, .80, 1.40)])
    return [near("agg", aggregate_dominant(b, "x", "H")[0], 1.0514),
            derived("band", classify_band(b), "offset", None)]


@case("3.10.3", "offset intuitionistic triage")
def _ex_3_10_3():
    values = ("Immediate", "Urgent", "Routine")
    b = _offset_bundle(values, {("Immediate", "Urgent"): .20, ("Routine", "Urgent"): .60},
                       [(-.10, 1.10, .20), (1.05, 0, .95)])
    return near_all("agg", ("mu", "nu"), aggregate_dominant(b, "x", "Urgent"), (.50, .5545))


@case("3.10.4", "offset neutrosophic energy mix")
def _ex_3_10_4():
    values = ("Coal", "Gas", "Solar")
    b = _offset_bundle(values, {("Coal", "Solar"): .85, ("Gas", "Solar"): .40},
                       [(-.20, .80, 1.30), (.10, .20, -.05), (1.15, .20, 0)])
    return near_all("agg", TFI, aggregate_dominant(b, "x", "Solar"), (1.00, .0486, .1671))


def _cubic(intervals, point) -> CubicDegree:
    return CubicDegree(tuple(IntervalDegree(*iv) for iv in intervals), DegreeVector(point))


def _cubic_checks(result: CubicDegree, labels, intervals, point, tol=PRINT_TOL):
    out = []
    for lab, iv, ref in zip(labels, result.intervals, intervals):
        out += [near(f"{lab}.lower", iv.lower, ref[0], tol), near(f"{lab}.upper", iv.upper, ref[1], tol)]
    return out + near_all("point", labels, result.point, point, tol)


@case("3.11.2", "cubic fuzzy subscription tier")
def _ex_3_11_2():
    values = ("Basic", "Standard", "Premium")
    t = table(values, {("Basic", "Premium"): .8, ("Standard", "Premium"): .3, ("Basic", "Standard"): .4})
    payloads = {"Basic": _cubic([(.30, .55)], (.5,)), "Standard": _cubic([(.60, .80)], (.7,)),
                "Premium": _cubic([(.85, .95)], (.9,))}
    return _cubic_checks(cubic_aggregate(payloads, t, "Premium"), ("mu",), [(.7000, .8526)], (.7842,))


@case("3.11.3", "cubic intuitionistic grant review")
def _ex_3_11_3():
    values = ("Grades", "Research", "Community")
    t = table(values, {("Grades", "Research"): .25, ("Community", "Research"): .40})
    payloads = {"Grades": _cubic([(.65, .80), (.10, .20)], (.72, .18)),
                "Research": _cubic([(.75, .92), (.03, .10)], (.85, .08)),
                "Community": _cubic([(.50, .70), (.10, .20)], (.60, .18))}
    r = cubic_aggregate(payloads, t, "Research")
    return _cubic_checks(r, ("mu", "nu"), [(.6543, .8255), (.0702, .1574)], (.7447, .1372)) + [
        derived("intuitionistic_ok", r.intuitionistic_ok(), True, None)]


@case("3.11.4", "cubic neutrosophic route planning")
def _ex_3_11_4():
    values = ("Safety", "Cost", "Demand")
    t = table(values, {("Safety", "Demand"): .3, ("Cost", "Demand"): .6})
    payloads = {"Demand": _cubic([(.80, .95), (.03, .10), (.02, .07)], (.90, .06, .04)),
                "Safety": _cubic([(.70, .88), (.05, .12), (.07, .15)], (.80, .09, .11)),
                "Cost": _cubic([(.40, .60), (.10, .20), (.30, .45)], (.50, .15, .35))}
    return _cubic_checks(cubic_aggregate(payloads, t, "Demand"), TFI,
                         [(.6905, .8600), (.0500, .1257), (.0900, .1690)], (.7905, .0871, .1224))


# -- superhypersoft selection ---------------------------------------------------------------------

@case("3.12.2", "PSHSS clinical trial eligibility")
def _ex_3_12_2():
    ctx = PSHSSContext(
        (table(("Mild", "Moderate", "Severe"), {("Mild", "Severe"): .9, ("Moderate", "Severe"): .3}),
         table(("LowBP", "HighBP"), {("LowBP", "HighBP"): .8}),
         table(("LowRisk", "HighRisk"), {("LowRisk", "HighRisk"): .9})),
        ({"Severe"}, {"HighBP"}, {"HighRisk"}),
    )
    w = pshss_weight(ctx, ({"Moderate", "Severe"}, {"HighBP"}, {"HighRisk"}))
    d = pshss_score((.85, .10, .08), w, 0)
    return [near("weight", w, .70), near("score", d.score, .339, formula=0.439),
            derived("selected", d.selected, True, None)]


@case("3.12.3", "PSHSS seasonal product line")
def _ex_3_12_3():
    ctx = PSHSSContext(
        (table(("Spring", "Summer", "Autumn", "Winter"), {("Summer", "Autumn"): .2}),
         table(("Low", "Mid", "High"), {("Mid", "High"): .3}),
         table(("Classic", "Sport", "Tech"), {("Tech", "Sport"): .4})),
        ("Autumn", "High", "Sport"),
    )
    configs = [("Autumn", "High", "Sport"), ("Summer", "High", "Sport"),
               ("Autumn", "Mid", "Sport"), ("Autumn", "High", "Tech")]
    weights = [pshss_weight(ctx, c) for c in configs]
    d = pshss_fuzzy((.86, .70, .75, .68), weights, .75)
    return (near_all("weight", ("t1", "t2", "t3", "t4"), weights, (1, .8, .7, .6))
            + [at_printed_precision("membership", d.score, "0.7584", formula=0.759032),
               derived("selected", d.selected, True, None)])


@case("3.12.4", "PSHSS intuitionistic timetable slot")
def _ex_3_12_4():
    ctx = PSHSSContext(
        (table(("Morning", "Afternoon"), {("Morning", "Afternoon"): .4}),
         table(("Lecture", "Lab"), {("Lecture", "Lab"): .5}),
         table(("Mon", "Tue"), {("Mon", "Tue"): .3})),
        ("Morning", "Lecture", "Tue"),
    )
    configs = [("Morning", "Lecture", "Tue"), ("Afternoon", "Lecture", "Tue"),
               ("Morning", "Lecture", "Mon"), ("Morning", "Lab", "Tue")]
    weights = [pshss_weight(ctx, c) for c in configs]
    d = pshss_intuitionistic([(.85, .10), (.62, .25), (.70, .20), (.60, .22)], weights, .50)
    return [near("mu", d.membership, .7186), near("nu", d.nonmembership, .1786),
            near("margin", d.margin, .5400), derived("selected", d.selected, True, None)]


# -- hesitant -------------------------------------------------------------------------------------

@case("3.13.3", "hesitant plithogenic severity triage")
def _ex_3_13_3():
    pdf = {("x1", "mild"): [(.75, .15, .10), (.68, .22, .10)], ("x1", "moderate"): [(.40, .30, .30)],
           ("x1", "severe"): [(.10, .20, .70)], ("x2", "mild"): [(.20, .25, .55)],
           ("x2", "moderate"): [(.55, .20, .25), (.48, .32, .20)], ("x2", "severe"): [(.35, .25, .40)]}
    t = table(("mild", "moderate", "severe"),
              {("mild", "moderate"): .4, ("moderate", "severe"): .6, ("mild", "severe"): .9})
    return [derived("subset_violations", len(subset_valued_validate(pdf)), 0, None),
            derived("contradiction_violations", len(t.violations()), 0, None)] + derived_all(
        "x1.mild.mean", TFI, subset_reduce(pdf[("x1", "mild")]), (0.715, 0.185, 0.10))


@case("3.13.4", "hesitant fuzzy sales outlook")
def _ex_3_13_4():
    pdf = {("s1", "high"): [.82, .88, .91], ("s1", "med"): [.10, .15], ("s1", "low"): [.02],
           ("s2", "high"): [.40, .55], ("s2", "med"): [.45, .50, .60], ("s2", "low"): [.15, .25],
           ("s3", "high"): [.05], ("s3", "med"): [.25, .30], ("s3", "low"): [.70, .80]}
    return [derived("subset_violations", len(subset_valued_validate(pdf)), 0, None),
            derived("s1.high.pessimistic", hesitant_reduce(pdf[("s1", "high")], "pessimistic")[0], .82),
            derived("s1.high.optimistic", hesitant_reduce(pdf[("s1", "high")], "optimistic")[0], .91)]


# -- spherical ----------------------------------------------------------------------------------

@case("3.14.3", "spherical neutrosophic sensor readings")
def _ex_3_14_3():
    from .reductions import SQRT3
    triples = ((.9, .2, .1), (.6, .6, .4), (.3, .8, .9))
    reps = [spherical_validate(t, SQRT3) for t in triples]
    return (near_all("square_sum", ("r1", "r2", "r3"), [r.measured for r in reps], (.86, .88, 1.54))
            + [derived("all_within", all(r.ok for r in reps), True, None)])


def _spherical_case(values, pairs, triples, sums):
    t = table(values, pairs)
    reps = [spherical_validate(tr) for tr in triples]
    return (near_all("square_sum", values, [r.measured for r in reps], sums)
            + [derived("all_within", all(r.ok for r in reps), True, None),
               derived("contradiction_violations", len(t.violations()), 0, None)])


@case("3.14.6", "spherical plithogenic air quality")
def _ex_3_14_6():
    return _spherical_case(("low", "medium", "high"),
                           {("low", "medium"): .5, ("medium", "high"): .6, ("low", "high"): 1},
                           ((.10, .20, .95), (.50, .30, .40), (.75, .40, .10)), (.9525, .50, .7325))


@case("3.14.7", "spherical plithogenic symptom severity")
def _ex_3_14_7():
    return _spherical_case(("mild", "moderate", "severe"),
                           {("mild", "moderate"): .3, ("moderate", "severe"): .4, ("mild", "severe"): 1},
                           ((.25, .40, .80), (.60, .35, .30), (.75, .30, .15)), (.8625, .5725, .675))


@case("3.15.2", "T-spherical plithogenic cube sums")
def _ex_3_15_2():
    triples = {"x1.v1": (.8, .3, .2), "x1.v2": (.5, .5, .2), "x2.v1": (.4, .7, .2), "x2.v2": (.6, .2, .6)}
    reps = {k: t_spherical_validate(v, 3) for k, v in triples.items()}
    return (near_all("cube_sum", list(reps), [r.measured for r in reps.values()], (.547, .258, .415, .440))
            + [derived("all_within", all(r.ok for r in reps.values()), True, None)])


# -- plithogenic rough, soft rough and expert --------------------------------------------------------

def _relation(elements, pdf_rows, pcf_rows) -> PlithogenicRelation:
    pdf, pcf = {}, {}
    for x, prow, crow in zip(elements, pdf_rows, pcf_rows):
        for y, p, c in zip(elements, prow, crow):
            if x != y:
                pdf[(x, y)] = p
                pcf[(x, y)] = c
    return PlithogenicRelation(FiniteUniverse(elements), pdf, pcf)


@case("3.16.5", "plithogenic rough approximation of diagnoses")
def _ex_3_16_5():
    rel = _relation(("p1", "p2", "p3"),
                    [(None, .80, .30), (.70, None, .40), (.50, .60, None)],
                    [(None, .20, .60), (.30, None, .40), (.50, .40, None)])
    lo, up = plithogenic_lower(rel, {"p2"}), plithogenic_upper(rel, {"p2"})
    return [near("lower.p1", lo["p1"], .51, TIGHT_TOL), near("upper.p1", up["p1"], .51, TIGHT_TOL),
            near("lower.p3", lo["p3"], .76, TIGHT_TOL), near("upper.p3", up["p3"], .36, TIGHT_TOL)]


@case("3.16.6", "plithogenic rough approximation of suppliers")
def _ex_3_16_6():
    rel = _relation(("a", "b", "c"),
                    [(None, .65, .30), (.55, None, .35), (.25, .50, None)],
                    [(None, .25, .50), (.40, None, .35), (.30, .45, None)])
    lo, up = plithogenic_lower(rel, {"b"}), plithogenic_upper(rel, {"b"})
    return [near("lower.a", lo["a"], .67, TIGHT_TOL), near("upper.a", up["a"], .4875, TIGHT_TOL),
            near("lower.c", lo["c"], .7725, TIGHT_TOL), near("upper.c", up["c"], .275, TIGHT_TOL)]


@case("3.16.7", "plithogenic rough approximation of buildings")
def _ex_3_16_7():
    rel = _relation(("B1", "B2", "B3", "B4"),
                    [(None, .55, .70, .40), (.60, None, .45, .35), (.50, .40, None, .80), (.45, .30, .75, None)],
                    [(None, .30, .20, .40), (.35, None, .25, .30), (.25, .35, None, .15), (.40, .30, .10, None)])
    target = {"B3", "B4"}
    lo, up = plithogenic_lower(rel, target), plithogenic_upper(rel, target)
    return [near("lower.B1", lo["B1"], .625, TIGHT_TOL), near("upper.B1", up["B1"], .56, TIGHT_TOL),
            near("lower.B2", lo["B2"], .74, TIGHT_TOL),
            # only a lower bound is printed for this one
            derived("upper.B2>=0.3375", up["B2"] >= .3375, True, None),
            derived("upper.B2", up["B2"], .39)]


@case("3.17.4", "plithogenic soft rough supplier screening")
def _ex_3_17_4():
    u = FiniteUniverse(("S1", "S2"))
    relations = {
        "e1": PlithogenicRelation(u, {("S1", "S2"): .80, ("S2", "S1"): .75}, {("S1", "S2"): .20, ("S2", "S1"): .25}),
        "e2": PlithogenicRelation(u, {("S1", "S2"): .60, ("S2", "S1"): .70}, {("S1", "S2"): .30, ("S2", "S1"): .20}),
    }
    membership = {("S1", "e1"): .70, ("S1", "e2"): .60, ("S2", "e1"): .90, ("S2", "e2"): .80}
    space = SoftApproxSpace(u, ("e1", "e2"), membership, relations)
    lo, up = soft_rough_lower(space, {"S2"}), soft_rough_upper(space, {"S2"})
    got = [lo[("S1", "e1")], up[("S1", "e1")], lo[("S1", "e2")], up[("S1", "e2")],
           lo[("S2", "e1")], up[("S2", "e1")], lo[("S2", "e2")], up[("S2", "e2")]]
    names = ("S1.e1.lower", "S1.e1.upper", "S1.e2.lower", "S1.e2.upper",
             "S2.e1.lower", "S2.e1.upper", "S2.e2.lower", "S2.e2.upper")
    printed = (.39375, .39375, .252, .348, .90, .576, .80, .352)
    return near_all("soft_rough", names, got, printed, TIGHT_TOL)


@case("3.18.3", "linear Diophantine smartphone battery")
def _ex_3_18_3():
    entry = DiophantineEntry(DegreeVector((F("0.90"), F("0.05"), F("0.10"))), (F(1), F(1, 2), F(1, 2)), F(2))
    rep = diophantine_check(entry)
    return [exact("weighted_sum", rep.weighted_sum, F("0.975")), exact("residual", rep.residual, F("1.025")),
            derived("ok", rep.ok, True, None)]


# -- trees and forests -------------------------------------------------------------------------------

def _tree(groups: dict, labels: ContradictionTable, dominant, steps, fallback) -> AttributeTree:
    root = TreeNode("root", tuple(
        TreeNode(g, tuple(TreeLeaf(n, lab, d) for n, lab, d in leaves)) for g, leaves in groups.items()))
    return AttributeTree(root, labels, dominant, ThresholdRule(steps, fallback))


HML = table(("High", "Med", "Low"), {("Med", "High"): .3, ("Low", "High"): .8})


@case("3.19.2", "attribute tree hiring evaluation")
def _ex_3_19_2():
    tree = _tree({"Technical": [("Coding", "High", .82), ("DataModeling", "Med", .68)],
                  "Experience": [("Projects", "High", .75), ("Domain", "Med", .55)],
                  "Soft": [("Communication", "Med", .62), ("Teamwork", "High", .78)]},
                 HML, "High", (("High", .70), ("Med", .50)), "Low")
    degree, _ = tree_aggregate(tree)
    return [at_printed_precision("root", degree, "0.72068", formula=0.719935)]


@case("3.19.3", "attribute tree respiratory severity")
def _ex_3_19_3():
    labels = table(("Severe", "Moderate", "Mild"), {("Severe", "Moderate"): .35, ("Severe", "Mild"): .85})
    tree = _tree({"Oxygenation": [("SpO2", "Severe", .88), ("RespRate", "Moderate", .65)],
                  "Imaging": [("CXR", "Moderate", .70), ("CT", "Mild", .40)],
                  "Labs": [("CRP", "Moderate", .60), ("WBC", "Severe", .75)]},
                 labels, "Severe", (("Severe", .70), ("Moderate", .50)), "Mild")
    return [near("root", tree_aggregate(tree)[0], .7204)]


@case("3.19.4", "attribute tree supplier qualification")
def _ex_3_19_4():
    labels = table(("Preferred", "Acceptable", "Risky"), {("Acceptable", "Preferred"): .4, ("Risky", "Preferred"): .85})
    tree = _tree({"Cost": [("UnitPrice", "Acceptable", .62), ("TotalCost", "Preferred", .78)],
                  "Quality": [("DefectRate", "Preferred", .83), ("Certifications", "Acceptable", .58)],
                  "Delivery": [("OnTime", "Acceptable", .65), ("LeadTime", "Risky", .35)]},
                 labels, "Preferred", (("Preferred", .70), ("Acceptable", .50)), "Risky")
    return [near("root", tree_aggregate(tree)[0], .69625)]


def _forest(trees: dict, labels: ContradictionTable, dominant, steps, fallback) -> AttributeForest:
    rule = ThresholdRule(steps, fallback)
    built = tuple(
        AttributeTree(TreeNode(name, tuple(TreeLeaf(f"{name}{i}", lab, d) for i, (lab, d) in enumerate(leaves))),
                      labels, dominant, rule)
        for name, leaves in trees.items())
    return AttributeForest(built, dominant)


@case("3.20.2", "attribute forest urban resilience")
def _ex_3_20_2():
    forest = _forest({"Env": [("High", .80), ("Med", .65), ("High", .75)],
                      "Infra": [("Med", .68), ("High", .77), ("Med", .60)],
                      "Socio": [("Med", .70), ("High", .74), ("Low", .45)]},
                     HML, "High", (("High", .70), ("Med", .50)), "Low")
    return [near("forest", forest_aggregate(forest), .71451)]


@case("3.20.3", "attribute forest hospital readiness")
def _ex_3_20_3():
    labels = table(("High", "Moderate", "Low"), {("Moderate", "High"): .35, ("Low", "High"): .85})
    forest = _forest({"CH": [("High", .82), ("Moderate", .66)],
                      "CS": [("Moderate", .55), ("Low", .40), ("Moderate", .60)],
                      "SD": [("Low", .35), ("Moderate", .58), ("Moderate", .62)]},
                     labels, "High", (("High", .70), ("Moderate", .50)), "Low")
    return [near("forest", forest_aggregate(forest), .64847)]


@case("3.20.4", "attribute forest investment screening")
def _ex_3_20_4():
    labels = table(("Attractive", "Acceptable", "Undesirable"),
                   {("Acceptable", "Attractive"): .4, ("Undesirable", "Attractive"): .85})
    forest = _forest({"Risk": [("Acceptable", .68), ("Acceptable", .70), ("Attractive", .74)],
                      "Return": [("Attractive", .80), ("Acceptable", .66), ("Attractive", .75)],
                      "Liquidity": [("Acceptable", .64), ("Undesirable", .40), ("Acceptable", .67)]},
                     labels, "Attractive", (("Attractive", .70), ("Acceptable", .50)), "Undesirable")
    return [near("forest", forest_aggregate(forest), .70738)]


@case("3.21.3", "plithogenic soft expert energy ratings")
def _ex_3_21_3():
    labels = table(("low", "green", "neutral", "1"),
                   {("low", "1"): .1, ("green", "1"): .1, ("neutral", "1"): .3})
    ctx = ExpertContext(
        FiniteUniverse(("u1", "u2", "u3")),
        {("e1", "x1", "1"): "low", ("e2", "x1", "1"): "neutral", ("e2", "x2", "1"): "green"},
        {"e1": {("u1", "low"): .9, ("u2", "low"): .6, ("u3", "low"): .2},
         "e2": {("u1", "green"): .7, ("u2", "green"): .4, ("u3", "green"): .1,
                ("u1", "neutral"): .5, ("u2", "neutral"): .7, ("u3", "neutral"): .6}},
        labels,
    )
    return [near("(e1,x1,1)@u1", expert_degree(ctx, ("e1", "x1", "1"), "u1"), .81, TIGHT_TOL),
            near("(e2,x1,1)@u2", expert_degree(ctx, ("e2", "x1", "1"), "u2"), .49, TIGHT_TOL)]


@case("3.21.4", "plithogenic soft expert course ratings")
def _ex_3_21_4():
    labels = table(("moderate", "high", "1"), {("moderate", "1"): .2, ("high", "1"): .1})
    ctx = ExpertContext(
        FiniteUniverse(("c1", "c2", "c3")),
        {("e1", "x1", "1"): "moderate", ("e2", "x1", "1"): "high", ("e2", "x2", "1"): "high"},
        {"e1": {("c1", "moderate"): .8, ("c2", "moderate"): .5, ("c3", "moderate"): .3},
         "e2": {("c1", "high"): .6, ("c2", "high"): .9, ("c3", "high"): .4}},
        labels,
    )
    return [near("(e2,x1,1)@c2", expert_degree(ctx, ("e2", "x1", "1"), "c2"), .81, TIGHT_TOL),
            near("(e1,x1,1)@c3", expert_degree(ctx, ("e1", "x1", "1"), "c3"), .24, TIGHT_TOL)]


# -- dynamic and probabilistic ---------------------------------------------------------------

LMH_USAGE = ("low", "medium", "high")


@case("3.22.2", "dynamic subscription engagement")
def _ex_3_22_2():
    pairs = {("low", "medium"): .3, ("low", "high"): .9, ("medium", "high"): .5}
    rows = {"t1": {"high": (.45, .30, .25), "medium": (.35, .25, .40), "low": (.10, .20, .70)},
            "t2": {"high": (.80, .10, .10), "medium": (.15, .15, .70), "low": (.05, .10, .85)}}
    tb = TimeIndexedBundle(("t1", "t2"), {t: make_bundle(("Premium",), LMH_USAGE, {"Premium": r}, pairs)
                                          for t, r in rows.items()})
    ref = {"t1": (0.396875, 0.278125, 0.325), "t2": (0.55, 0.115625, 0.334375)}
    out = []
    for t in tb.instants:
        out += derived_all(f"{t}.Premium@high", TFI, aggregate_dominant(snapshot(tb, t), "Premium", "high"), ref[t])
    return out


@case("3.22.3", "dynamic district flood risk")
def _ex_3_22_3():
    values = ("low", "moderate", "high")
    rows = {"d1": [(.80, .10, .10), (.15, .20, .65), (.05, .10, .85)],
            "d2": [(.40, .20, .40), (.40, .25, .35), (.20, .20, .60)],
            "d3": [(.10, .10, .80), (.30, .20, .50), (.60, .15, .25)]}
    # no table is given for d2; it takes the midpoint of d1 and d3
    pcf = {"d1": (.2, .8, .4), "d2": (.25, .85, .5), "d3": (.3, .9, .6)}
    bundles = {}
    for t, r in rows.items():
        lm, lh, mh = pcf[t]
        pairs = {("low", "moderate"): lm, ("low", "high"): lh, ("moderate", "high"): mh}
        bundles[t] = make_bundle(("A",), values, {"A": dict(zip(values, r))}, pairs)
    tb = TimeIndexedBundle(("d1", "d2", "d3"), bundles)
    ref = {"d1": (0.16666666666666669, 0.13333333333333333, 0.7000000000000001),
           "d2": (0.2787878787878788, 0.21515151515151515, 0.5060606060606061),
           "d3": (0.48666666666666664, 0.16, 0.35333333333333333)}
    out = []
    for t in tb.instants:
        out += derived_all(f"{t}.A@high", TFI, aggregate_dominant(snapshot(tb, t), "A", "high"), ref[t])
    return out


@case("3.23.5", "probabilistic supplier demand scenarios")
def _ex_3_23_5():
    outcomes = ("w1", "w2", "w3")
    s1 = {"low": (.20, .10, .05), "medium": (.50, .40, .30), "high": (.30, .50, .65)}
    s2 = {"low": (.80, .75, .70), "medium": (.15, .20, .25), "high": (.05, .05, .05)}
    degrees = {w: {} for w in outcomes}
    for (x, attr, rows) in (("S1", "a3", s1), ("S2", "a1", s2)):
        for value, per_outcome in rows.items():
            for w, d in zip(outcomes, per_outcome):
                degrees[w][(x, attr, value)] = d
    space = ScenarioSpace(outcomes, (F(1, 3),) * 3, degrees,
                          table(LMH_USAGE, {("low", "high"): .9, ("low", "medium"): .4, ("medium", "high"): .5}))
    return [derived("S1.high.expectation", expectation(space, "S1", [("a3", "high")]), 0.48333333333333334),
            derived("S1.high.median", quantile(space, "S1", [("a3", "high")], F(1, 2)), .50),
            derived("S2.low.expectation", expectation(space, "S2", [("a1", "low")]), .75)]


@case("3.23.6", "probabilistic disease risk")
def _ex_3_23_6():
    outcomes = ("w1", "w2", "w3")
    bmi = {"normal": [(.30, .20, .50), (.20, .20, .60), (.10, .15, .75)],
           "overweight": [(.50, .20, .30), (.55, .20, .25), (.45, .20, .35)],
           "obese": [(.20, .20, .60), (.25, .25, .50), (.45, .20, .35)]}
    glucose = {"normal": [(.70, .10, .20), (.55, .15, .30), (.40, .15, .45)],
               "impaired": [(.20, .15, .65), (.30, .20, .50), (.35, .20, .45)],
               "high": [(.10, .20, .70), (.15, .20, .65), (.25, .20, .55)]}
    degrees = {w: {} for w in outcomes}
    for attr, rows in (("bmi", bmi), ("glucose", glucose)):
        for value, per_outcome in rows.items():
            for w, d in zip(outcomes, per_outcome):
                degrees[w][("x", attr, f"{attr}:{value}")] = DegreeVector(d)
    labels = [f"bmi:{v}" for v in bmi] + [f"glucose:{v}" for v in glucose] + ["activity:high"]
    pcf = table(labels, {("bmi:normal", "glucose:normal"): .1, ("bmi:obese", "glucose:high"): .95,
                         ("bmi:obese", "activity:high"): .6})
    space = ScenarioSpace(outcomes, (F(1, 3),) * 3, degrees, pcf)
    profile = [("bmi", "bmi:obese"), ("glucose", "glucose:high")]
    return (derived_all("w1.profile", TFI, aggregate_profile(space, "x", profile, "w1"), (.195, .2, .695))
            + derived_all("expected.profile", TFI, expectation(space, "x", profile),
                          (0.29333333333333333, 0.21583333333333332, 0.6258333333333334)))


# -- triangular, trapezoidal, nonstandard, refined, subset, picture ---------------------------------

def _tfn(*pts) -> TriangularNumber:
    return TriangularNumber(*pts)


@case("3.24.3", "triangular fuzzy lesson difficulty")
def _ex_3_24_3():
    t = table(LMH_USAGE, {("low", "high"): .9, ("low", "medium"): .4, ("medium", "high"): .5})
    data = {"L1": [(0, .1, .3), (.2, .5, .8), (.4, .7, 1)],
            "L2": [(0, 0, .2), (.3, .6, .9), (.5, .8, 1)],
            "L3": [(0, 0, .1), (.2, .4, .7), (.6, .9, 1)]}
    ref = {"L1": (0.3125, 0.6, 0.89375), "L2": (0.40625, 0.6875, 0.91875), "L3": (0.4375, 0.6875, 0.85)}
    out = []
    for x, rows in data.items():
        (tri,) = triangular_aggregate({v: (_tfn(*r),) for v, r in zip(LMH_USAGE, rows)}, t, "high")
        out += derived_all(f"{x}@high", ("lower", "peak", "upper"), tri.breakpoints, ref[x])
    return out


@case("3.24.4", "triangular neutrosophic project quality")
def _ex_3_24_4():
    grades = ("poor", "acceptable", "good", "excellent")
    t = ladder(grades)
    p1 = {"good": (_tfn(.5, .7, .9), _tfn(.1, .2, .4), _tfn(0, .1, .3)),
          "excellent": (_tfn(.2, .4, .7), _tfn(.2, .3, .5), _tfn(.1, .2, .5))}
    agg = triangular_aggregate(p1, t, "excellent")
    ref = ((0.32, 0.52, 0.78), (0.16, 0.26, 0.46), (0.06, 0.16, 0.42))
    out = [exact(f"pCF({g},excellent)", t.get(g, "excellent")[0], r)
           for g, r in zip(grades[:3], (F(1), F(2, 3), F(1, 3)))]
    for lab, tri, r in zip(TFI, agg, ref):
        out += derived_all(f"P1.{lab}", ("lower", "peak", "upper"), tri.breakpoints, r)
    return out


def _trap(*pts) -> TrapezoidalNumber:
    return TrapezoidalNumber(*(F(str(p)) for p in pts))


@case("3.25.3", "trapezoidal neutrosophic supplier inclusion")
def _ex_3_25_3():
    t = table(LMH_USAGE, {("low", "medium"): F("0.2"), ("low", "high"): F("0.7"), ("medium", "high"): F("0.3")})
    s_a = TrapTripleDegree(_trap(.6, .7, .9, 1), _trap(.1, .2, .2, .3), _trap(0, 0, .1, .2))
    g = trapezoidal_inclusion(s_a, t, "high", F(1, 2))
    return [exact("lambda", g.contradiction_level, F(11, 30), formula=F(1, 3)),
            exact("inclusion.S_A", g.value, F(179, 240), formula=F(89, 120))]


@case("3.25.4", "trapezoidal neutrosophic patient inclusion")
def _ex_3_25_4():
    t = table(("low", "moderate", "high"),
              {("low", "moderate"): F("0.5"), ("low", "high"): F("0.9"), ("moderate", "high"): F("0.4")})
    p1 = TrapTripleDegree(_trap(.5, .6, .8, .9), _trap(.1, .2, .2, .3), _trap(.1, .2, .3, .4))
    return [exact("inclusion.P1", trapezoidal_inclusion(p1, t, "low", F(1, 2)).value, F(187, 300))]


@case("3.26.4", "nonstandard energy source blend")
def _ex_3_26_4():
    emissions = DualDegree(F("0.94"), F(1))
    cost = DualDegree(F("0.68"), F(-1))
    out = nonstandard_aggregate([emissions, cost], [F("0.30")])
    return [exact("wind.standard", out.standard, F("0.758")), exact("wind.infinitesimal", out.infinitesimal, F("-0.4"))]


REFINED = RefinedSignature(2, 1, 1)
PHI_WEIGHTS = (.5, .2, .3)


def _refined_scores(elements: dict, values, pairs, dominant):
    t = table(values, pairs)
    return {x: refined_scalarize(refined_aggregate({a: DegreeVector(d) for a, d in zip(values, rows)},
                                                   t, dominant, REFINED), REFINED, PHI_WEIGHTS)
            for x, rows in elements.items()}


TRIAGE_PAIRS = {("Img", "Lab"): .2, ("Img", "Sym"): .3, ("Lab", "Sym"): .1}


@case("3.27.3", "refined neutrosophic hospital triage")
def _ex_3_27_3():
    scores = _refined_scores(
        {"p_A": [(.80, .75, .10, .05), (.60, .55, .20, .10), (.70, .65, .15, .12)],
         "p_B": [(.45, .40, .25, .30), (.50, .48, .22, .28), (.60, .50, .25, .20)]},
        ("Img", "Lab", "Sym"), TRIAGE_PAIRS, "Img")
    return [near("p_A", scores["p_A"], .787), near("p_B", scores["p_B"], .613)]


@case("3.27.4", "refined neutrosophic supplier ranking")
def _ex_3_27_4():
    values = ("ESG", "Qual", "Deliv")
    pairs = {("ESG", "Qual"): .2, ("ESG", "Deliv"): .3, ("Qual", "Deliv"): .1}
    rows = {"s_A": [(.85, .80, .10, .05), (.75, .70, .12, .08), (.60, .55, .15, .12)],
            "s_B": [(.60, .55, .20, .20), (.80, .78, .10, .10), (.75, .70, .12, .12)]}
    scores = _refined_scores(rows, values, pairs, "ESG")
    s_b = refined_aggregate({a: DegreeVector(d) for a, d in zip(values, rows["s_B"])},
                            table(values, pairs), "ESG", REFINED)
    return [near("s_A", scores["s_A"], .814), near("s_B", scores["s_B"], .770), near("s_B.T1", s_b[0], .706)]


@case("3.28.4", "subset-valued drug side-effect risk")
def _ex_3_28_4():
    pdf = {("DrugA", "Trial"): [(.10, .30), (.15, .35)], ("DrugA", "Post"): [(.20, .40), (.25, .50)],
           ("DrugB", "Trial"): [(.05, .20), (.08, .25)], ("DrugB", "Post"): [(.12, .28), (.18, .35)]}
    t = table(("Trial", "Post"), {("Trial", "Post"): .4})
    return ([derived("subset_violations", len(subset_valued_validate(pdf)), 0, None),
             derived("contradiction_violations", len(t.violations()), 0, None)]
            + derived_all("DrugA.Trial.mean", ("severe", "mild"), subset_reduce(pdf[("DrugA", "Trial")]), (.125, .325))
            + derived_all("DrugA.Post.mean", ("severe", "mild"), subset_reduce(pdf[("DrugA", "Post")]), (.225, .45)))


def _picture_case(entries: dict, values, contradiction, dominant, reference):
    out = []
    for (x, a), (pos, neg, neu) in entries.items():
        pic = picture_construct((pos, neg), neu)
        out.append(derived(f"{x}.{a}.bounded", sum(pic.components) <= 1, True, None))
    degrees = {}
    for (x, a), comps in entries.items():
        degrees.setdefault(x, {})[a] = comps
    b = make_bundle(tuple(degrees), values, degrees, {tuple(values): contradiction},
                    constraint=ConstraintSpec.picture(2))
    out.append(derived("violations", len(validate_bundle(b)), 0, None))
    for x, ref in reference.items():
        out += derived_all(f"{x}@{dominant}", ("pos", "neg", "neutral"), aggregate_dominant(b, x, dominant), ref)
    return out


@case("3.29.5", "picture plithogenic policy opinion")
def _ex_3_29_5():
    entries = {("p1", "support"): (.7, .1, .1), ("p1", "oppose"): (.2, .6, .1),
               ("p2", "support"): (.6, .2, .1), ("p2", "oppose"): (.1, .5, .2)}
    ref = {"p1": (0.6545454545454544, 0.14545454545454545, 0.1),
           "p2": (0.5545454545454545, 0.22727272727272727, 0.10909090909090909)}
    return _picture_case(entries, ("support", "oppose"), .9, "support", ref)


@case("3.29.6", "picture plithogenic phone reviews")
def _ex_3_29_6():
    entries = {("x1", "battery"): (.8, .1, .05), ("x1", "camera"): (.4, .3, .2),
               ("x2", "battery"): (.5, .3, .1), ("x2", "camera"): (.7, .1, .1),
               ("x3", "battery"): (.3, .5, .1), ("x3", "camera"): (.4, .4, .1)}
    ref = {"x1": (0.6352941176470589, 0.18235294117647058, 0.11176470588235295),
           "x2": (0.5823529411764706, 0.21764705882352942, 0.1),
           "x3": (0.3411764705882353, 0.45882352941176474, 0.1)}
    return _picture_case(entries, ("battery", "camera"), .3, "battery", ref)


# -- evaluation and reporting ---------------------------------------------------------------------

def deviation(computed, reference) -> Real:
    if isinstance(computed, (frozenset, set)) or isinstance(reference, (frozenset, set)):
        return len(frozenset(computed) ^ frozenset(reference))
    if isinstance(computed, (str, bool)) or isinstance(reference, (str, bool)):
        return 0 if computed == reference else 1
    if isinstance(computed, Fraction) and isinstance(reference, Fraction):
        return abs(computed - reference)
    return abs(float(computed) - float(reference))


def within(check: Check) -> bool:
    if check.tolerance is None:
        return check.computed == check.reference
    return deviation(check.computed, check.reference) <= check.tolerance + EDGE_SLACK


def matches_formula(check: Check) -> bool:
    if check.formula is None:
        return False
    if check.tolerance is None:
        return check.computed == check.formula
    return deviation(check.computed, check.formula) <= FORMULA_TOL


def classify(checks: Sequence[Check]) -> str:
    off = [c for c in checks if not within(c)]
    if not off:
        return "pass"
    if all(matches_formula(c) for c in off):
        return "erratum"
    return "fail"


@dataclass(frozen=True, slots=True)
class ReproRecord:
    case: str
    label: str
    names: tuple[str, ...]
    computed: tuple
    printed: tuple
    delta: float
    status: str
    formula: tuple = ()
    sources: tuple[str, ...] = ()


@dataclass(frozen=True, slots=True)
class ReproReport:
    records: tuple[ReproRecord, ...] = field(default_factory=tuple)

    def count(self, status: str) -> int:
        return sum(1 for r in self.records if r.status == status)

    @property
    def failed(self) -> bool:
        return self.count("fail") > 0


def run_case(c: CorpusCase) -> ReproRecord:
    try:
        checks = c.run()
    except Exception as exc:  # a crashing case is a failure row, never an abort
        return ReproRecord(c.case, c.label, ("error",), (f"{type(exc).__name__}: {exc}",), ("",), float("inf"), "fail")
    delta = max((float(deviation(k.computed, k.reference)) for k in checks), default=0.0)
    return ReproRecord(
        case=c.case,
        label=c.label,
        names=tuple(k.name for k in checks),
        computed=tuple(k.computed for k in checks),
        printed=tuple(k.reference for k in checks),
        delta=delta,
        status=classify(checks),
        formula=tuple(k.formula for k in checks),
        sources=tuple(k.source for k in checks),
    )


def case_matches(case_id: str, selector: str | None) -> bool:
    if not selector:
        return True
    selector = selector.strip().rstrip(".")
    return case_id == selector or case_id.startswith(selector + ".")


def reproduce_all(selector: str | None = None, workers: int = 1) -> ReproReport:
    """Recompute every selected case; record order follows the corpus regardless of ``workers``."""
    chosen = [c for c in CORPUS if case_matches(c.case, selector)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = tuple(pool.map(run_case, chosen))
    else:
        records = tuple(run_case(c) for c in chosen)
    return ReproReport(records)


# -- serialization ----------------------------------------------------------------------------

def resolve_precision(precision: int | None = None) -> int:
    if precision is not None:
        return precision
    env = os.environ.get("USET_PRECISION")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(f"USET_PRECISION must be an integer, got {env!r}") from None
    return DEFAULT_PRECISION


def format_value(v, precision: int) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, (frozenset, set)):
        return "{" + ",".join(sorted(map(str, v))) + "}"
    if isinstance(v, Real):
        f = float(v)
        return "inf" if f == float("inf") else f"{f:.{precision}f}"
    return str(v)


def _encode(v, precision: int):
    if v is None or isinstance(v, (bool, str)):
        return v
    if isinstance(v, Fraction):
        return {"fraction": str(v)}
    if isinstance(v, (frozenset, set)):
        return {"set": sorted(map(str, v))}
    if isinstance(v, Real):
        f = float(v)
        return None if f == float("inf") else round(f, precision)
    return str(v)


def _decode(v):
    if isinstance(v, dict):
        if "fraction" in v:
            return Fraction(v["fraction"])
        if "set" in v:
            return frozenset(v["set"])
    return v


def emit_report(report: ReproReport, fmt: str = "csv", precision: int | None = None) -> str:
    p = resolve_precision(precision)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in report.records:
            w.writerow([
                r.case,
                ";".join(format_value(v, p) for v in r.computed),
                ";".join(format_value(v, p) for v in r.printed),
                format_value(r.delta, p),
                r.status,
            ])
        return buf.getvalue()
    if fmt == "json":
        rows = []
        for r in report.records:
            rows.append({
                "case": r.case,
                "label": r.label,
                "checks": [
                    {"name": n, "computed": _encode(c, p), "printed": _encode(ref, p),
                     "formula": _encode(fo, p), "source": s}
                    for n, c, ref, fo, s in zip(r.names, r.computed, r.printed,
                                                 r.formula or (None,) * len(r.names),
                                                 r.sources or ("printed",) * len(r.names))
                ],
                "delta": _encode(r.delta, p),
                "status": r.status,
            })
        summary = {s: report.count(s) for s in STATUSES}
        return json.dumps({"records": rows, "summary": summary}, indent=2) + "\n"
    raise DomainError(f"unknown report format {fmt!r}; expected csv or json")


def load_report(text: str) -> ReproReport:
    """Parse the json form of ``emit_report`` back into a report."""
    doc = json.loads(text)
    records = []
    for row in doc.get("records", []):
        checks = row["checks"]
        delta = row["delta"]
        records.append(ReproRecord(
            case=row["case"],
            label=row.get("label", ""),
            names=tuple(c["name"] for c in checks),
            computed=tuple(_decode(c["computed"]) for c in checks),
            printed=tuple(_decode(c["printed"]) for c in checks),
            delta=float("inf") if delta is None else delta,
            status=row["status"],
            formula=tuple(_decode(c.get("formula")) for c in checks),
            sources=tuple(c.get("source", "printed") for c in checks),
        ))
    return ReproReport(tuple(records))


DOCUMENTED_ERRATA = ("3.3.2", "3.12.2", "3.12.3", "3.19.2", "3.25.3")
