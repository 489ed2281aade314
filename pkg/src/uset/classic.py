"""Finite fuzzy, intuitionistic and neutrosophic sets, Pawlak rough sets, soft-set queries."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Hashable, Iterable, Mapping, Sequence

from .degree import ConstraintSpec, DegreeVector, validate_constraint
from .errors import ConstraintViolation, DomainError, ShapeError, UnknownIdentifier

Element = Hashable

GRADE_ARITY = {"fuzzy": 1, "ifs": 2, "neutrosophic": 3}


@dataclass(frozen=True, slots=True)
class FiniteUniverse:
    elements: tuple[Element, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise DomainError("universe must be nonempty")
        if len(set(self.elements)) != len(self.elements):
            raise DomainError("universe contains duplicate elements")

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def require(self, xs: Iterable[Element]) -> frozenset:
        xs = frozenset(xs)
        foreign = [x for x in xs if x not in self.elements]
        if foreign:
            raise UnknownIdentifier(f"elements outside the universe: {sorted(map(str, foreign))}")
        return xs


@dataclass(frozen=True, slots=True)
class GradedSet:
    universe: FiniteUniverse
    grade_kind: str
    table: Mapping[Element, DegreeVector]

    def __post_init__(self) -> None:
        if self.grade_kind not in GRADE_ARITY:
            raise DomainError(f"unknown grade kind {self.grade_kind!r}")
        arity = GRADE_ARITY[self.grade_kind]
        missing = [x for x in self.universe if x not in self.table]
        if missing:
            raise DomainError(f"ungraded elements: {missing}")
        self.universe.require(self.table)
        spec = {"ifs": ConstraintSpec.ifs(), "neutrosophic": ConstraintSpec.neutrosophic()}.get(self.grade_kind)
        for x, deg in self.table.items():
            if deg.arity != arity:
                raise ShapeError(f"{x}: expected arity {arity}, got {deg.arity}")
            if spec is not None and not validate_constraint(deg, spec).ok:
                raise ConstraintViolation(f"{x}: {self.grade_kind} constraint violated")

    def grade(self, x: Element) -> DegreeVector:
        try:
            return self.table[x]
        except KeyError:
            raise UnknownIdentifier(f"unknown element {x!r}") from None


def hesitation(pair: Sequence[Real]) -> Real:
    """Hesitation margin 1 - mu - nu of an intuitionistic pair."""
    mu, nu = pair
    if not (0 <= mu <= 1 and 0 <= nu <= 1) or mu + nu > 1:
        raise ConstraintViolation(f"({mu}, {nu}) is not an intuitionistic pair")
    return 1 - mu - nu


# -- Pawlak rough sets ---------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RoughContext:
    universe: FiniteUniverse
    blocks: tuple[frozenset, ...]

    def __post_init__(self) -> None:
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        seen: set = set()
        for i, b in enumerate(blocks):
            if not b:
                raise DomainError(f"block #{i} is empty")
            if seen & b:
                raise DomainError(f"block #{i} overlaps an earlier block")
            seen |= b
        if seen != set(self.universe.elements):
            raise DomainError("blocks do not cover the universe exactly")

    def block_of(self, x: Element) -> frozenset:
        for b in self.blocks:
            if x in b:
                return b
        raise UnknownIdentifier(f"unknown element {x!r}")


@dataclass(frozen=True, slots=True)
class RoughResult:
    lower: frozenset
    upper: frozenset
    boundary: frozenset
    positive: frozenset
    negative: frozenset
    accuracy: Fraction
    coverage: Fraction


def rough_approximate(ctx: RoughContext, target: Iterable[Element]) -> RoughResult:
    target = ctx.universe.require(target)
    lower: set = set()
    upper: set = set()
    for b in ctx.blocks:
        if b <= target:
            lower |= b
        if b & target:
            upper |= b
    lower_f, upper_f = frozenset(lower), frozenset(upper)
    # an empty upper approximation only arises for the empty target, which is exact
    accuracy = Fraction(len(lower_f), len(upper_f)) if upper_f else Fraction(1)
    return RoughResult(
        lower=lower_f,
        upper=upper_f,
        boundary=upper_f - lower_f,
        positive=lower_f,
        negative=frozenset(ctx.universe.elements) - upper_f,
        accuracy=accuracy,
        coverage=Fraction(len(lower_f), len(ctx.universe)),
    )


# -- soft families -------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class SoftFamily:
    universe: FiniteUniverse
    approximation: Mapping[Hashable, frozenset]

    def __post_init__(self) -> None:
        fixed = {p: self.universe.require(s) for p, s in self.approximation.items()}
        object.__setattr__(self, "approximation", fixed)

    @property
    def parameters(self) -> tuple:
        return tuple(self.approximation)


def soft_query(family: SoftFamily, params: Iterable[Hashable]) -> frozenset:
    """Elements satisfying every listed parameter; no parameters means the whole universe."""
    result = frozenset(family.universe.elements)
    for p in params:
        if p not in family.approximation:
            raise UnknownIdentifier(f"unknown parameter {p!r}")
        result &= family.approximation[p]
    return result


@dataclass(frozen=True, slots=True)
class HypersoftFamily:
    universe: FiniteUniverse
    domains: tuple[tuple[Hashable, ...], ...]
    profiles: Mapping[Element, tuple]

    def __post_init__(self) -> None:
        domains = tuple(tuple(d) for d in self.domains)
        object.__setattr__(self, "domains", domains)
        for i, d in enumerate(domains):
            if not d:
                raise DomainError(f"attribute #{i} has no values")
            for j in range(i):
                if set(d) & set(domains[j]):
                    raise DomainError(f"attribute domains #{j} and #{i} overlap")
        missing = [x for x in self.universe if x not in self.profiles]
        if missing:
            raise DomainError(f"elements without a profile: {missing}")
        self.universe.require(self.profiles)
        for x, prof in self.profiles.items():
            if len(prof) != len(domains):
                raise ShapeError(f"{x}: profile has {len(prof)} coordinates, expected {len(domains)}")
            for i, v in enumerate(prof):
                if v not in domains[i]:
                    raise UnknownIdentifier(f"{x}: value {v!r} not in attribute #{i}")

    def image(self, choice: Sequence[Hashable]) -> frozenset:
        return hypersoft_query(self, choice)


# the superhypersoft family shares the hypersoft storage; only the query differs
SuperHypersoftFamily = HypersoftFamily


def hypersoft_query(family: HypersoftFamily, choice: Sequence[Hashable]) -> frozenset:
    choice = tuple(choice)
    if len(choice) != len(family.domains):
        raise ShapeError(f"query has {len(choice)} coordinates, expected {len(family.domains)}")
    for i, v in enumerate(choice):
        if v not in family.domains[i]:
            raise UnknownIdentifier(f"value {v!r} not in attribute #{i}")
    return frozenset(x for x in family.universe if tuple(family.profiles[x]) == choice)


def superhypersoft_query(family: HypersoftFamily, subsets: Sequence[Iterable[Hashable]]) -> frozenset:
    subsets = tuple(frozenset(s) for s in subsets)
    if len(subsets) != len(family.domains):
        raise ShapeError(f"query has {len(subsets)} coordinates, expected {len(family.domains)}")
    for i, s in enumerate(subsets):
        foreign = s - set(family.domains[i])
        if foreign:
            raise UnknownIdentifier(f"values {sorted(map(str, foreign))} not in attribute #{i}")
    return frozenset(
        x for x in family.universe
        if all(v in s for v, s in zip(family.profiles[x], subsets))
    )
