"""Time-indexed bundles and probabilistic plithogenic degrees over finite sample spaces."""
from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Callable, Hashable, Mapping, Sequence

from .core import ContradictionTable, PlithogenicBundle, fuse, validate_bundle
from .degree import DegreeVector
from .errors import DomainError, ShapeError, UnknownIdentifier

PROBABILITY_SLACK = 1e-9


@dataclass(frozen=True, slots=True)
class TimeIndexedBundle:
    instants: tuple[Hashable, ...]
    bundles: Mapping[Hashable, PlithogenicBundle]

    def __post_init__(self) -> None:
        object.__setattr__(self, "instants", tuple(self.instants))
        if not self.instants:
            raise DomainError("time domain must be nonempty")
        for t in self.instants:
            if t not in self.bundles:
                raise DomainError(f"no tables recorded at instant {t!r}")


def snapshot(tb: TimeIndexedBundle, instant: Hashable) -> PlithogenicBundle:
    if instant not in tb.bundles:
        raise UnknownIdentifier(f"unknown instant {instant!r}")
    b = tb.bundles[instant]
    problems = validate_bundle(b)
    if problems:
        raise DomainError(f"snapshot at {instant!r} is invalid: {problems[0]}")
    return b


# -- blending ------------------------------------------------------------------

TNORMS: dict[str, Callable[[Real, Real], Real]] = {
    "min": min,
    "product": lambda u, v: u * v,
    "lukasiewicz": lambda u, v: max(0 * u, u + v - 1),
}
TCONORMS: dict[str, Callable[[Real, Real], Real]] = {
    "max": max,
    "probabilistic_sum": lambda u, v: u + v - u * v,
    "lukasiewicz": lambda u, v: min(1 + 0 * u, u + v),
}


@dataclass(frozen=True, slots=True)
class BlendSpec:
    tnorm: str = "min"
    tconorm: str = "max"

    def __post_init__(self) -> None:
        if self.tnorm not in TNORMS:
            raise DomainError(f"unknown t-norm {self.tnorm!r}")
        if self.tconorm not in TCONORMS:
            raise DomainError(f"unknown t-conorm {self.tconorm!r}")


Payload = Real | DegreeVector


def blend(u: Payload, v: Payload, c: Real, spec: BlendSpec = BlendSpec()) -> Payload:
    """(1 - c) T(u, v) + c S(u, v), componentwise for vectors."""
    if not 0 <= c <= 1:
        raise DomainError(f"blend coefficient {c} outside [0, 1]")
    t, s = TNORMS[spec.tnorm], TCONORMS[spec.tconorm]
    if isinstance(u, DegreeVector) or isinstance(v, DegreeVector):
        if not (isinstance(u, DegreeVector) and isinstance(v, DegreeVector)) or u.arity != v.arity:
            raise ShapeError("blend needs two payloads of the same shape")
        return DegreeVector(tuple((1 - c) * t(a, b) + c * s(a, b) for a, b in zip(u, v)), u.band)
    return (1 - c) * t(u, v) + c * s(u, v)


# -- probabilistic ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ScenarioSpace:
    """Finite outcomes with probabilities and per-outcome degrees keyed by (element, attribute, value)."""

    outcomes: tuple[Hashable, ...]
    probabilities: tuple[Real, ...]
    degrees: Mapping[Hashable, Mapping[tuple[Hashable, Hashable, Hashable], Payload]]
    contradiction: ContradictionTable
    blend_spec: BlendSpec = field(default_factory=BlendSpec)
    fusion: str = "mean"

    def __post_init__(self) -> None:
        object.__setattr__(self, "outcomes", tuple(self.outcomes))
        object.__setattr__(self, "probabilities", tuple(self.probabilities))
        if len(self.outcomes) != len(self.probabilities) or not self.outcomes:
            raise ShapeError("each outcome needs exactly one probability")
        if any(p < 0 for p in self.probabilities):
            raise DomainError("probabilities must be nonnegative")
        if abs(float(sum(self.probabilities)) - 1) > PROBABILITY_SLACK:
            raise DomainError(f"probabilities sum to {sum(self.probabilities)}, not 1")
        for w in self.outcomes:
            if w not in self.degrees:
                raise DomainError(f"no degree table for outcome {w!r}")


def aggregate_profile(
    space: ScenarioSpace,
    x: Hashable,
    selection: Sequence[tuple[Hashable, Hashable]],
    outcome: Hashable,
) -> Payload:
    """Blend the selected (attribute, value) degrees left to right, anchored at the first value."""
    if not selection:
        raise ShapeError("selection must name at least one (attribute, value) pair")
    if outcome not in space.degrees:
        raise UnknownIdentifier(f"unknown outcome {outcome!r}")
    table = space.degrees[outcome]

    def degree(attr, value):
        try:
            return table[(x, attr, value)]
        except KeyError:
            raise UnknownIdentifier(f"no degree for ({x}, {attr}, {value}) at {outcome!r}") from None

    anchor = selection[0][1]
    acc = degree(*selection[0])
    for attr, value in selection[1:]:
        c = fuse(space.contradiction.get(anchor, value), space.fusion)
        acc = blend(acc, degree(attr, value), c, space.blend_spec)
    return acc


def _components(v: Payload) -> tuple[Real, ...]:
    return v.components if isinstance(v, DegreeVector) else (v,)


def expectation(space: ScenarioSpace, x: Hashable, selection: Sequence[tuple[Hashable, Hashable]]) -> Payload:
    vals = [aggregate_profile(space, x, selection, w) for w in space.outcomes]
    comps = [sum(p * _components(v)[j] for p, v in zip(space.probabilities, vals))
             for j in range(len(_components(vals[0])))]
    return DegreeVector(tuple(comps), vals[0].band) if isinstance(vals[0], DegreeVector) else comps[0]


def quantile(space: ScenarioSpace, x: Hashable, selection: Sequence[tuple[Hashable, Hashable]], p: Real) -> Payload:
    """Smallest t with P(value <= t) >= p, per component."""
    if not 0 <= p <= 1:
        raise DomainError(f"quantile level {p} outside [0, 1]")
    vals = [aggregate_profile(space, x, selection, w) for w in space.outcomes]
    arity = len(_components(vals[0]))
    out = []
    for j in range(arity):
        pairs = sorted(((_components(v)[j], prob) for v, prob in zip(vals, space.probabilities)),
                       key=lambda t: t[0])
        if p == 0:
            # the infimum over [0, 1] is attained at 0 whenever no mass is required
            out.append(0)
            continue
        cum, chosen = 0, pairs[-1][0]
        for value, prob in pairs:
            cum += prob
            if cum >= p - PROBABILITY_SLACK:
                chosen = value
                break
        out.append(chosen)
    return DegreeVector(tuple(out), vals[0].band) if isinstance(vals[0], DegreeVector) else out[0]


def complement(u: Real) -> Real:
    return 1 - u
