"""Plithogenic rough approximations, soft rough combination, soft expert degrees, and
superhypersoft (PSHSS) selection rules."""
from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .classic import FiniteUniverse
from .core import ContradictionTable, fuse
from .degree import weighted_average
from .errors import DomainError, ShapeError, UnknownIdentifier
from .variants import lift_contradiction

Element = Hashable
Combiner = Callable[[Real, Real], Real]


def discount(a: Real, b: Real) -> Real:
    """Default combiner a * (1 - b): grows with a, shrinks with b."""
    return a * (1 - b)


def first_projection(a: Real, b: Real) -> Real:
    return a


def second_projection(a: Real, b: Real) -> Real:
    return b


def _scalar(v) -> Real:
    return fuse(v) if isinstance(v, (tuple, list)) else v


@dataclass(frozen=True, slots=True)
class PlithogenicRelation:
    """Pairwise appurtenance and contradiction over a universe; missing pairs read as 0."""

    universe: FiniteUniverse
    appurtenance: Mapping[tuple[Element, Element], Real]
    contradiction: Mapping[tuple[Element, Element], Real] = field(default_factory=dict)
    combiner: Combiner = discount

    def __post_init__(self) -> None:
        for name, table in (("appurtenance", self.appurtenance), ("contradiction", self.contradiction)):
            for (x, y), v in table.items():
                if x not in self.universe or y not in self.universe:
                    raise UnknownIdentifier(f"{name}[{x},{y}] refers to an unknown element")
                if not 0 <= _scalar(v) <= 1:
                    raise DomainError(f"{name}[{x},{y}] = {v} outside [0, 1]")


def fused_relation(rel: PlithogenicRelation, x: Element, y: Element) -> Real:
    for e in (x, y):
        if e not in rel.universe:
            raise UnknownIdentifier(f"unknown element {e!r}")
    if x == y:
        return 1
    return rel.combiner(_scalar(rel.appurtenance.get((x, y), 0)),
                        _scalar(rel.contradiction.get((x, y), 0)))


def plithogenic_lower(rel: PlithogenicRelation, target: Iterable[Element]) -> dict[Element, Real]:
    target = rel.universe.require(target)
    out = {}
    for x in rel.universe:
        vals = [max(1 - fused_relation(rel, x, y), 1 - fused_relation(rel, y, x)) for y in target]
        out[x] = min(vals) if vals else 1
    return out


def plithogenic_upper(rel: PlithogenicRelation, target: Iterable[Element]) -> dict[Element, Real]:
    # the target enters only through its validation; the max ranges over the whole universe
    rel.universe.require(target)
    return {
        x: max(min(fused_relation(rel, x, y), 1 - fused_relation(rel, y, x)) for y in rel.universe)
        for x in rel.universe
    }


# -- soft rough ----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class SoftApproxSpace:
    universe: FiniteUniverse
    parameters: tuple[Hashable, ...]
    membership: Mapping[tuple[Element, Hashable], Real]
    relations: Mapping[Hashable, PlithogenicRelation]
    combiner: Combiner = discount

    def __post_init__(self) -> None:
        object.__setattr__(self, "parameters", tuple(self.parameters))
        for e in self.parameters:
            if e not in self.relations:
                raise DomainError(f"parameter {e!r} has no relation")
            for x in self.universe:
                if (x, e) not in self.membership:
                    raise DomainError(f"missing soft membership for ({x}, {e})")


def _soft_rough(space: SoftApproxSpace, target, approx) -> dict[tuple[Element, Hashable], Real]:
    out = {}
    for e in space.parameters:
        base = approx(space.relations[e], target)
        for x in space.universe:
            out[(x, e)] = space.combiner(space.membership[(x, e)], base[x])
    return out


def soft_rough_lower(space: SoftApproxSpace, target: Iterable[Element]) -> dict[tuple[Element, Hashable], Real]:
    return _soft_rough(space, frozenset(target), plithogenic_lower)


def soft_rough_upper(space: SoftApproxSpace, target: Iterable[Element]) -> dict[tuple[Element, Hashable], Real]:
    return _soft_rough(space, frozenset(target), plithogenic_upper)


# -- soft expert ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ExpertContext:
    universe: FiniteUniverse
    assignments: Mapping[tuple[Hashable, Hashable, Hashable], Hashable]  # (parameter, expert, opinion) -> value
    appurtenance: Mapping[Hashable, Mapping[tuple[Element, Hashable], Real]]  # parameter -> (u, value) -> degree
    labels: ContradictionTable
    combiner: Combiner = discount

    def __post_init__(self) -> None:
        for (e, _, o), v in self.assignments.items():
            if e not in self.appurtenance:
                raise UnknownIdentifier(f"parameter {e!r} has no appurtenance table")
            for lab in (v, o):
                if lab not in self.labels.values:
                    raise UnknownIdentifier(f"label {lab!r} missing from the contradiction table")


def expert_degree(ctx: ExpertContext, triple: tuple[Hashable, Hashable, Hashable], u: Element) -> Real:
    if triple not in ctx.assignments:
        raise UnknownIdentifier(f"triple {triple!r} is not activated")
    if u not in ctx.universe:
        raise UnknownIdentifier(f"unknown element {u!r}")
    e, _, opinion = triple
    value = ctx.assignments[triple]
    try:
        base = ctx.appurtenance[e][(u, value)]
    except KeyError:
        raise UnknownIdentifier(f"no degree for ({u}, {value}) under {e!r}") from None
    return ctx.combiner(base, fuse(ctx.labels.get(value, opinion)))


# -- PSHSS ---------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PSHSSContext:
    """Attribute value sets with per-attribute contradictions and a dominant configuration."""

    contradictions: tuple[ContradictionTable, ...]
    dominant: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "contradictions", tuple(self.contradictions))
        object.__setattr__(self, "dominant", tuple(self.dominant))
        if len(self.dominant) != len(self.contradictions):
            raise ShapeError("dominant configuration must pick one entry per attribute")
        seen: set = set()
        for i, t in enumerate(self.contradictions):
            if seen & set(t.values):
                raise DomainError(f"attribute #{i} shares values with an earlier attribute")
            seen |= set(t.values)


def _as_subset(v) -> frozenset:
    if isinstance(v, (set, frozenset, list, tuple)):
        return frozenset(v)
    return frozenset([v])


def subset_lift(left, right, table: ContradictionTable) -> Real:
    for v in _as_subset(left) | _as_subset(right):
        if v not in table.values:
            raise UnknownIdentifier(f"value {v!r} not in this attribute")
    return lift_contradiction(_as_subset(left), _as_subset(right), table)


def pshss_weight(ctx: PSHSSContext, config: Sequence) -> Real:
    if len(config) != len(ctx.contradictions):
        raise ShapeError("configuration length differs from the attribute count")
    w = 1
    for part, anchor, table in zip(config, ctx.dominant, ctx.contradictions):
        w = w * (1 - subset_lift(part, anchor, table))
    return w


@dataclass(frozen=True, slots=True)
class PSHSSDecision:
    score: Real
    selected: bool


@dataclass(frozen=True, slots=True)
class IntuitionisticDecision:
    membership: Real
    nonmembership: Real
    margin: Real
    selected: bool


def pshss_score(payload: Sequence[Real], weight: Real, threshold: Real = 0) -> PSHSSDecision:
    """Neutrosophic rule: weight * (T - F) - I, selected when strictly above the threshold."""
    if len(payload) != 3:
        raise ShapeError("the score rule needs a (T, I, F) payload")
    t, i, f = payload
    score = weight * (t - f) - i
    return PSHSSDecision(score, score > threshold)


def pshss_fuzzy(memberships: Sequence[Real], weights: Sequence[Real], threshold: Real) -> PSHSSDecision:
    mu = min(weighted_average(list(memberships), list(weights)), 1)
    return PSHSSDecision(mu, mu >= threshold)


def pshss_intuitionistic(
    pairs: Sequence[Sequence[Real]], weights: Sequence[Real], threshold: Real
) -> IntuitionisticDecision:
    mu = weighted_average([p[0] for p in pairs], list(weights))
    nu = weighted_average([p[1] for p in pairs], list(weights))
    margin = mu - nu
    return IntuitionisticDecision(mu, nu, margin, margin >= threshold)
