"""Generalization maps between classical models and their plithogenic counterparts,
each paired with its inverse on the embedded subclass and a seeded sampler."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from numbers import Real
from typing import Callable, Hashable, Mapping

from .classic import FiniteUniverse, GradedSet, GRADE_ARITY
from .constrained import t_spherical_validate
from .core import (
    AppurtenanceTable,
    AttributeSystem,
    ContradictionTable,
    PlithogenicBundle,
    aggregate_dominant,
    validate_bundle,
)
from .degree import ConstraintSpec, DegreeVector, require_constraint, validate_constraint
from .errors import ConstraintViolation, DomainError
from .rough_soft import (
    PlithogenicRelation,
    SoftApproxSpace,
    first_projection,
    plithogenic_lower,
    plithogenic_upper,
    second_projection,
    soft_rough_lower,
    soft_rough_upper,
)
from .variants import PictureDegree

ANCHOR = "a0"
SQRT3 = math.sqrt(3)


def _singleton_bundle(universe: FiniteUniverse, degrees: Mapping, arity: int,
                      constraint: ConstraintSpec | None = None) -> PlithogenicBundle:
    values = (ANCHOR,)
    entries = {(x, ANCHOR): degrees[x] for x in universe}
    return PlithogenicBundle(
        AttributeSystem("v", values),
        AppurtenanceTable(universe, values, entries, "vector", arity),
        ContradictionTable.zero(values),
        constraint=constraint,
    )


def _require_singleton(b: PlithogenicBundle) -> Hashable:
    if len(b.values) != 1:
        raise DomainError("projection needs a single attribute value")
    a = b.values[0]
    if any(c != 0 for c in b.contradiction.get(a, a)):
        raise DomainError("projection needs zero contradiction")
    return a


# -- classical ---------------------------------------------------------------

def embed_classical(graded: GradedSet) -> PlithogenicBundle:
    return _singleton_bundle(graded.universe, graded.table, GRADE_ARITY[graded.grade_kind])


def project_classical(b: PlithogenicBundle, grade_kind: str) -> GradedSet:
    a = _require_singleton(b)
    return GradedSet(b.universe, grade_kind, {x: b.appurtenance.get(x, a) for x in b.universe})


# -- hesitant ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class HesitantPlithogenicSet:
    universe: FiniteUniverse
    values: tuple[Hashable, ...]
    contradiction: ContradictionTable
    entries: Mapping[tuple[Hashable, Hashable], frozenset]  # each image: frozenset of component tuples

    def __post_init__(self) -> None:
        for key, image in self.entries.items():
            if not image:
                raise DomainError(f"empty hesitation image at {key}")


def _hesitant_to_hps(h: Mapping[Hashable, frozenset], wrap: Callable) -> HesitantPlithogenicSet:
    universe = FiniteUniverse(tuple(h))
    entries = {}
    for x, image in h.items():
        if not image:
            raise DomainError(f"empty hesitation image for {x!r}")
        entries[(x, ANCHOR)] = frozenset(wrap(v) for v in image)
    return HesitantPlithogenicSet(universe, (ANCHOR,), ContradictionTable.zero((ANCHOR,)), entries)


def _hps_to_hesitant(s: HesitantPlithogenicSet, unwrap: Callable) -> dict[Hashable, frozenset]:
    if len(s.values) != 1 or any(c != 0 for c in s.contradiction.get(s.values[0], s.values[0])):
        raise DomainError("only single-valued, contradiction-free sets project back")
    a = s.values[0]
    return {x: frozenset(unwrap(v) for v in s.entries[(x, a)]) for x in s.universe}


def hfs_to_hps(h: Mapping[Hashable, frozenset]) -> HesitantPlithogenicSet:
    for x, image in h.items():
        if any(not 0 <= v <= 1 for v in image):
            raise DomainError(f"hesitant grade outside [0, 1] for {x!r}")
    return _hesitant_to_hps(h, lambda v: (v,))


def hps_to_hfs(s: HesitantPlithogenicSet) -> dict[Hashable, frozenset]:
    return _hps_to_hesitant(s, lambda v: v[0])


def hns_to_hps(h: Mapping[Hashable, frozenset]) -> HesitantPlithogenicSet:
    for x, image in h.items():
        for triple in image:
            require_constraint(triple, ConstraintSpec.neutrosophic(), str(x))
    return _hesitant_to_hps(h, tuple)


def hps_to_hns(s: HesitantPlithogenicSet) -> dict[Hashable, frozenset]:
    return _hps_to_hesitant(s, tuple)


# -- spherical ---------------------------------------------------------------

def _spherical_embed(triples: Mapping[Hashable, tuple], radius: Real) -> PlithogenicBundle:
    spec = ConstraintSpec.spherical(radius)
    for x, t in triples.items():
        require_constraint(t, spec, str(x))
    universe = FiniteUniverse(tuple(triples))
    return _singleton_bundle(universe, {x: DegreeVector(tuple(t)) for x, t in triples.items()}, 3, spec)


def _spherical_project(b: PlithogenicBundle, radius: Real) -> dict[Hashable, tuple]:
    a = _require_singleton(b)
    spec = ConstraintSpec.spherical(radius)
    out = {}
    for x in b.universe:
        deg = b.appurtenance.get(x, a)
        require_constraint(deg, spec, str(x))
        out[x] = deg.components
    return out


def sfs_to_sps(triples: Mapping[Hashable, tuple]) -> PlithogenicBundle:
    return _spherical_embed(triples, 1)


def sps_to_sfs(b: PlithogenicBundle) -> dict[Hashable, tuple]:
    return _spherical_project(b, 1)


def sns_to_sps(triples: Mapping[Hashable, tuple]) -> PlithogenicBundle:
    return _spherical_embed(triples, SQRT3)


def sps_to_sns(b: PlithogenicBundle) -> dict[Hashable, tuple]:
    return _spherical_project(b, SQRT3)


def spherical_to_tspherical(b: PlithogenicBundle) -> PlithogenicBundle:
    """Same data, constraint restated with exponent 2."""
    if b.constraint is None or b.constraint.kind != "spherical":
        raise DomainError("source bundle must carry a spherical constraint")
    spec = ConstraintSpec.t_spherical(2, b.constraint.radius)
    return PlithogenicBundle(b.attribute, b.appurtenance, b.contradiction, b.fusion, spec)


# -- soft rough --------------------------------------------------------------

ROUGH_PARAMETER = "e0"


def rough_as_softrough(rel: PlithogenicRelation) -> SoftApproxSpace:
    """One parameter, unit soft membership, combiner keeps the rough side."""
    membership = {(x, ROUGH_PARAMETER): 1 for x in rel.universe}
    return SoftApproxSpace(rel.universe, (ROUGH_PARAMETER,), membership,
                           {ROUGH_PARAMETER: rel}, second_projection)


def soft_as_softrough(universe: FiniteUniverse, membership: Mapping, relations: Mapping) -> SoftApproxSpace:
    """Combiner keeps the soft side, so every approximation returns the soft membership."""
    params = tuple(relations)
    return SoftApproxSpace(universe, params, dict(membership), dict(relations), first_projection)


# -- picture -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PicturePlithogenicSet:
    universe: FiniteUniverse
    values: tuple[Hashable, ...]
    entries: Mapping[tuple[Hashable, Hashable], PictureDegree]
    contradiction: ContradictionTable


def picture_fuzzy_embed(source: Mapping[Hashable, tuple]) -> PicturePlithogenicSet:
    """(positive, neutral, negative) triples become main (positive, negative) plus neutral."""
    entries = {}
    for x, (pos, neu, neg) in source.items():
        entries[(x, ANCHOR)] = PictureDegree((pos, neg), neu, bounded_sum=True)
    return PicturePlithogenicSet(FiniteUniverse(tuple(source)), (ANCHOR,), entries,
                                 ContradictionTable.zero((ANCHOR,), channels=0))


def picture_fuzzy_project(s: PicturePlithogenicSet) -> dict[Hashable, tuple]:
    out = {}
    for x in s.universe:
        d = s.entries[(x, s.values[0])]
        if len(d.main) != 2 or not d.bounded_sum:
            raise DomainError(f"{x!r} is not a picture fuzzy entry")
        out[x] = (d.main[0], d.neutral, d.main[1])
    return out


def picture_neutrosophic_embed(source: Mapping[Hashable, tuple]) -> PicturePlithogenicSet:
    entries = {}
    for x, triple in source.items():
        require_constraint(triple, ConstraintSpec.neutrosophic(), str(x))
        entries[(x, ANCHOR)] = PictureDegree(tuple(triple), 0, bounded_sum=False)
    return PicturePlithogenicSet(FiniteUniverse(tuple(source)), (ANCHOR,), entries,
                                 ContradictionTable.zero((ANCHOR,), channels=0))


def picture_neutrosophic_project(s: PicturePlithogenicSet) -> dict[Hashable, tuple]:
    out = {}
    for x in s.universe:
        d = s.entries[(x, s.values[0])]
        if len(d.main) != 3 or d.neutral != 0:
            raise DomainError(f"{x!r} is not in the neutrosophic subclass")
        out[x] = d.main
    return out


def picture_embed(b: PlithogenicBundle) -> PicturePlithogenicSet:
    """Append a zero neutral coordinate to every vector payload."""
    entries = {key: PictureDegree(tuple(p.components), 0, bounded_sum=False)
               for key, p in b.appurtenance.entries.items()}
    return PicturePlithogenicSet(b.universe, b.values, entries, b.contradiction)


def picture_project(s: PicturePlithogenicSet) -> PlithogenicBundle:
    """Inverse of ``picture_embed``; defined only when every neutral coordinate is zero."""
    entries = {}
    arity = None
    for key, d in s.entries.items():
        if d.neutral != 0:
            raise DomainError(f"neutral coordinate at {key} is nonzero; no plithogenic preimage")
        entries[key] = DegreeVector(d.main)
        arity = len(d.main)
    return PlithogenicBundle(
        AttributeSystem("v", s.values),
        AppurtenanceTable(s.universe, s.values, entries, "vector", arity or 1),
        s.contradiction,
    )


# -- seeded samplers and the round-trip registry -------------------------------

def _expect(ok: bool, what: str) -> None:
    # explicit raise so the checks survive python -O
    if not ok:
        raise AssertionError(what)


def _unit(rng: random.Random) -> float:
    # mix in exact endpoints so boundary handling is exercised
    r = rng.random()
    if r < 0.03:
        return 0.0
    if r < 0.06:
        return 1.0
    return rng.random()


def _elements(rng: random.Random, prefix: str = "x") -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(rng.randint(1, 6)))


def _sample_constrained(rng: random.Random, n: int, spec: ConstraintSpec | None) -> tuple:
    while True:
        t = tuple(_unit(rng) for _ in range(n))
        if spec is None or validate_constraint(t, spec).ok:
            return t


def _check_classical(rng: random.Random) -> None:
    kind = rng.choice(("fuzzy", "ifs", "neutrosophic"))
    spec = {"ifs": ConstraintSpec.ifs(), "neutrosophic": ConstraintSpec.neutrosophic()}.get(kind)
    xs = _elements(rng)
    table = {x: DegreeVector(_sample_constrained(rng, GRADE_ARITY[kind], spec)) for x in xs}
    g = GradedSet(FiniteUniverse(xs), kind, table)
    b = embed_classical(g)
    _expect(not validate_bundle(b), 'not validate_bundle(b)')
    _expect(project_classical(b, kind) == g, 'project_classical(b, kind) == g')
    for x in xs:
        _expect(aggregate_dominant(b, x, ANCHOR) == g.grade(x), 'aggregate_dominant(b, x, ANCHOR) == g.grade(x)')


def _check_hesitant(rng: random.Random) -> None:
    xs = _elements(rng)
    hfs = {x: frozenset(_unit(rng) for _ in range(rng.randint(1, 4))) for x in xs}
    _expect(hps_to_hfs(hfs_to_hps(hfs)) == hfs, 'hps_to_hfs(hfs_to_hps(hfs)) == hfs')
    hns = {x: frozenset(_sample_constrained(rng, 3, None) for _ in range(rng.randint(1, 4))) for x in xs}
    hps = hns_to_hps(hns)
    _expect(hps_to_hns(hps) == hns, 'hps_to_hns(hps) == hns')
    _expect(hns_to_hps(hps_to_hns(hps)) == hps, 'hns_to_hps(hps_to_hns(hps)) == hps')


def _check_spherical(rng: random.Random) -> None:
    xs = _elements(rng)
    for radius, fwd, back in ((1, sfs_to_sps, sps_to_sfs), (SQRT3, sns_to_sps, sps_to_sns)):
        spec = ConstraintSpec.spherical(radius)
        src = {x: _sample_constrained(rng, 3, spec) for x in xs}
        b = fwd(src)
        _expect(back(b) == src, 'back(b) == src')
        _expect(fwd(back(b)) == b, 'fwd(back(b)) == b')


def _check_spherical_to_t(rng: random.Random) -> None:
    xs = _elements(rng)
    spec = ConstraintSpec.spherical(1)
    b = sfs_to_sps({x: _sample_constrained(rng, 3, spec) for x in xs})
    t = spherical_to_tspherical(b)
    _expect(t.appurtenance == b.appurtenance, 't.appurtenance == b.appurtenance')
    for x in xs:
        _expect(t_spherical_validate(t.appurtenance.get(x, ANCHOR), 2, 1).ok, 't_spherical_validate(t.appurtenance.get(x, ANCHOR), 2, 1).ok')


def _random_relation(rng: random.Random, universe: FiniteUniverse) -> PlithogenicRelation:
    pdf, pcf = {}, {}
    for x in universe:
        for y in universe:
            if x != y:
                pdf[(x, y)] = _unit(rng)
                pcf[(x, y)] = _unit(rng)
    return PlithogenicRelation(universe, pdf, pcf)


def _check_soft_rough(rng: random.Random) -> None:
    universe = FiniteUniverse(_elements(rng, "u"))
    rel = _random_relation(rng, universe)
    target = frozenset(x for x in universe if rng.random() < 0.5)
    space = rough_as_softrough(rel)
    lo, up = plithogenic_lower(rel, target), plithogenic_upper(rel, target)
    slo, sup = soft_rough_lower(space, target), soft_rough_upper(space, target)
    for x in universe:
        _expect(slo[(x, ROUGH_PARAMETER)] == lo[x], 'slo[(x, ROUGH_PARAMETER)] == lo[x]')
        _expect(sup[(x, ROUGH_PARAMETER)] == up[x], 'sup[(x, ROUGH_PARAMETER)] == up[x]')
    params = tuple(f"e{i}" for i in range(rng.randint(1, 3)))
    membership = {(x, e): _unit(rng) for x in universe for e in params}
    relations = {e: _random_relation(rng, universe) for e in params}
    soft = soft_as_softrough(universe, membership, relations)
    for approx in (soft_rough_lower(soft, target), soft_rough_upper(soft, target)):
        _expect(approx == membership, 'approx == membership')


def _check_picture(rng: random.Random) -> None:
    xs = _elements(rng)
    pf = {}
    for x in xs:
        pos, neu, neg = _sample_constrained(rng, 3, ConstraintSpec.picture(2))
        pf[x] = (pos, neu, neg)
    _expect(picture_fuzzy_project(picture_fuzzy_embed(pf)) == pf, 'picture_fuzzy_project(picture_fuzzy_embed(pf)) == pf')
    pn = {x: _sample_constrained(rng, 3, None) for x in xs}
    _expect(picture_neutrosophic_project(picture_neutrosophic_embed(pn)) == pn, 'picture_neutrosophic_project(picture_neutrosophic_embed(pn)) == pn')
    arity = rng.randint(1, 4)
    values = tuple(f"a{i}" for i in range(rng.randint(1, 3)))
    entries = {(x, a): DegreeVector(_sample_constrained(rng, arity, None)) for x in xs for a in values}
    b = PlithogenicBundle(
        AttributeSystem("v", values),
        AppurtenanceTable(FiniteUniverse(xs), values, entries, "vector", arity),
        ContradictionTable.from_function(values, lambda a, b: _unit(rng)),
    )
    back = picture_project(picture_embed(b))
    _expect(back.appurtenance == b.appurtenance, 'back.appurtenance == b.appurtenance')
    _expect(back.values == b.values, 'back.values == b.values')


@dataclass(frozen=True, slots=True)
class ReductionCase:
    name: str
    check: Callable[[random.Random], None]
    description: str = ""


REDUCTION_CASES: tuple[ReductionCase, ...] = (
    ReductionCase("classical", _check_classical, "fuzzy/intuitionistic/neutrosophic grades as singleton bundles"),
    ReductionCase("hesitant", _check_hesitant, "hesitant fuzzy and hesitant neutrosophic sets"),
    ReductionCase("spherical", _check_spherical, "spherical fuzzy (radius 1) and spherical neutrosophic (radius sqrt 3)"),
    ReductionCase("spherical_to_tspherical", _check_spherical_to_t, "spherical data restated at exponent 2"),
    ReductionCase("soft_rough", _check_soft_rough, "rough and soft sets as projections of soft rough"),
    ReductionCase("picture", _check_picture, "picture fuzzy, picture neutrosophic and plithogenic embeddings"),
)


@dataclass(frozen=True, slots=True)
class ReductionOutcome:
    name: str
    instances: int
    failures: int
    first_failure: str = ""


def check_reductions(seed: int = 0, cases: int = 1000) -> list[ReductionOutcome]:
    """Run every round-trip case on ``cases`` seeded instances."""
    out = []
    for case in REDUCTION_CASES:
        rng = random.Random(f"{seed}:{case.name}")
        failures, first = 0, ""
        for i in range(cases):
            try:
                case.check(rng)
            except (AssertionError, DomainError, ConstraintViolation) as exc:
                failures += 1
                if not first:
                    first = f"instance {i}: {type(exc).__name__} {exc}"
        out.append(ReductionOutcome(case.name, cases, failures, first))
    return out
