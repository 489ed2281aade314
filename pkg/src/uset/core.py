"""The plithogenic bundle, contradiction axioms, fusion, and dominant-value aggregation."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from typing import Hashable, Iterable, Mapping, Sequence

from .classic import FiniteUniverse
from .degree import (
    UNIT_BAND,
    Band,
    ComplexDegree,
    ConstraintSpec,
    DegreeVector,
    DualDegree,
    IntervalDegree,
    IntervalResult,
    complex_weighted_mean,
    interval_weighted_mean,
    validate_constraint,
    weighted_average,
    weighted_mean,
)
from .errors import DomainError, ShapeError, UnknownIdentifier

Value = Hashable
PAYLOAD_KINDS = ("vector", "interval", "complex", "dual")
FUSION_RULES = ("mean", "max")


@dataclass(frozen=True, slots=True)
class AttributeSystem:
    name: str
    values: tuple[Value, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise DomainError(f"attribute {self.name!r} has no values")
        if len(set(self.values)) != len(self.values):
            raise DomainError(f"attribute {self.name!r} has duplicate values")

    def require(self, a: Value) -> Value:
        if a not in self.values:
            raise UnknownIdentifier(f"{a!r} is not a value of {self.name!r}")
        return a


@dataclass(frozen=True, slots=True)
class Violation:
    location: str
    message: str

    def __str__(self) -> str:
        return f"{self.location}: {self.message}"


@dataclass(frozen=True, slots=True)
class ContradictionTable:
    """t-channel contradiction degrees between attribute values.

    Entries are stored as given; missing off-diagonal pairs fall back to the
    mirrored entry and then to zero, the diagonal to zero.
    """

    values: tuple[Value, ...]
    channels: int = 1
    entries: Mapping[tuple[Value, Value], tuple[Real, ...]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.channels < 0:
            raise DomainError("channel count must be nonnegative")
        fixed = {}
        for (a, b), v in self.entries.items():
            fixed[(a, b)] = tuple(v) if isinstance(v, (tuple, list)) else (v,)
        object.__setattr__(self, "entries", fixed)

    @classmethod
    def from_pairs(
        cls,
        values: Sequence[Value],
        pairs: Mapping[tuple[Value, Value], Real | Sequence[Real]],
        channels: int = 1,
    ) -> "ContradictionTable":
        """Symmetric table from unordered pairs."""
        entries = {}
        for (a, b), v in pairs.items():
            v = tuple(v) if isinstance(v, (tuple, list)) else (v,)
            entries[(a, b)] = v
            entries[(b, a)] = v
        return cls(tuple(values), channels, entries)

    @classmethod
    def zero(cls, values: Sequence[Value], channels: int = 1) -> "ContradictionTable":
        return cls(tuple(values), channels, {})

    @classmethod
    def from_function(cls, values: Sequence[Value], fn, channels: int = 1) -> "ContradictionTable":
        values = tuple(values)
        return cls(values, channels, {(a, b): fn(a, b) for a in values for b in values if a != b})

    def get(self, a: Value, b: Value) -> tuple[Real, ...]:
        if a not in self.values:
            raise UnknownIdentifier(f"unknown value {a!r}")
        if b not in self.values:
            raise UnknownIdentifier(f"unknown value {b!r}")
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        if a != b and (b, a) in self.entries:
            return self.entries[(b, a)]
        return (0,) * self.channels

    def violations(self, where: str = "contradiction") -> list[Violation]:
        out = []
        for (a, b), v in self.entries.items():
            loc = f"{where}[{a},{b}]"
            if a not in self.values or b not in self.values:
                out.append(Violation(loc, "refers to an unknown value"))
                continue
            if len(v) != self.channels:
                out.append(Violation(loc, f"has {len(v)} channels, expected {self.channels}"))
            if any(not 0 <= c <= 1 for c in v):
                out.append(Violation(loc, f"component outside [0, 1]: {v}"))
            if a == b and any(c != 0 for c in v):
                out.append(Violation(loc, f"reflexivity violated at {a}: {v}"))
            if a != b and (b, a) in self.entries and self.entries[(b, a)] != v:
                # report each asymmetric pair once
                if str(a) <= str(b):
                    out.append(Violation(loc, f"symmetry violated: {v} vs {self.entries[(b, a)]}"))
        return out


@dataclass(frozen=True, slots=True)
class IntervalContradictionTable:
    """Single-channel contradiction with interval degrees."""

    values: tuple[Value, ...]
    entries: Mapping[tuple[Value, Value], IntervalDegree] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))

    @classmethod
    def from_pairs(cls, values: Sequence[Value], pairs: Mapping[tuple[Value, Value], IntervalDegree]):
        entries = {}
        for (a, b), v in pairs.items():
            entries[(a, b)] = v
            entries[(b, a)] = v
        return cls(tuple(values), entries)

    def get(self, a: Value, b: Value) -> IntervalDegree:
        for v in (a, b):
            if v not in self.values:
                raise UnknownIdentifier(f"unknown value {v!r}")
        if (a, b) in self.entries:
            return self.entries[(a, b)]
        if a != b and (b, a) in self.entries:
            return self.entries[(b, a)]
        return IntervalDegree(0, 0)

    def violations(self, where: str = "interval_contradiction") -> list[Violation]:
        out = []
        for (a, b), v in self.entries.items():
            loc = f"{where}[{a},{b}]"
            if a not in self.values or b not in self.values:
                out.append(Violation(loc, "refers to an unknown value"))
            elif a == b and (v.lower, v.upper) != (0, 0):
                out.append(Violation(loc, f"reflexivity violated at {a}"))
            elif (b, a) in self.entries and self.entries[(b, a)] != v and str(a) <= str(b):
                out.append(Violation(loc, "symmetry violated"))
        return out


def _payload_kind_ok(kind: str, payload: object) -> bool:
    if kind == "vector":
        return isinstance(payload, DegreeVector)
    cls = {"interval": IntervalDegree, "complex": ComplexDegree, "dual": DualDegree}[kind]
    return isinstance(payload, tuple) and all(isinstance(p, cls) for p in payload)


def payload_arity(payload: object) -> int:
    return payload.arity if isinstance(payload, DegreeVector) else len(payload)


@dataclass(frozen=True, slots=True)
class AppurtenanceTable:
    universe: FiniteUniverse
    values: tuple[Value, ...]
    entries: Mapping[tuple[Hashable, Value], object]
    kind: str = "vector"
    arity: int = 1
    band: Band = UNIT_BAND

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        object.__setattr__(self, "band", tuple(self.band))
        if self.kind not in PAYLOAD_KINDS:
            raise DomainError(f"unknown payload kind {self.kind!r}")
        if self.arity < 1:
            raise DomainError("payload arity must be at least 1")

    def get(self, x: Hashable, a: Value) -> object:
        try:
            return self.entries[(x, a)]
        except KeyError:
            raise UnknownIdentifier(f"no degree recorded for ({x}, {a})") from None

    def violations(self, where: str = "appurtenance") -> list[Violation]:
        out = []
        lo, hi = self.band
        for x in self.universe:
            for a in self.values:
                if (x, a) not in self.entries:
                    out.append(Violation(f"{where}[{x},{a}]", "missing entry"))
        for (x, a), p in self.entries.items():
            loc = f"{where}[{x},{a}]"
            if x not in self.universe or a not in self.values:
                out.append(Violation(loc, "refers to an unknown element or value"))
                continue
            if not _payload_kind_ok(self.kind, p):
                out.append(Violation(loc, f"payload is not of kind {self.kind}"))
                continue
            if payload_arity(p) != self.arity:
                out.append(Violation(loc, f"arity {payload_arity(p)}, expected {self.arity}"))
            if self.kind == "vector" and any(not lo <= c <= hi for c in p.components):
                out.append(Violation(loc, f"component outside band [{lo}, {hi}]"))
            if self.kind == "dual" and any(not lo <= d.standard <= hi for d in p):
                out.append(Violation(loc, f"standard part outside band [{lo}, {hi}]"))
        return out


@dataclass(frozen=True, slots=True)
class PlithogenicBundle:
    attribute: AttributeSystem
    appurtenance: AppurtenanceTable
    contradiction: ContradictionTable
    fusion: str = "mean"
    constraint: ConstraintSpec | None = None
    interval_contradiction: IntervalContradictionTable | None = None

    def __post_init__(self) -> None:
        if self.fusion not in FUSION_RULES:
            raise DomainError(f"unknown fusion rule {self.fusion!r}")

    @property
    def universe(self) -> FiniteUniverse:
        return self.appurtenance.universe

    @property
    def values(self) -> tuple[Value, ...]:
        return self.attribute.values


def validate_bundle(b: PlithogenicBundle) -> list[Violation]:
    """Every broken invariant, each with a location; empty when the bundle is sound."""
    out: list[Violation] = []
    if tuple(b.contradiction.values) != b.attribute.values:
        out.append(Violation("contradiction", "value set differs from the attribute's"))
    if tuple(b.appurtenance.values) != b.attribute.values:
        out.append(Violation("appurtenance", "value set differs from the attribute's"))
    out.extend(b.contradiction.violations())
    if b.interval_contradiction is not None:
        out.extend(b.interval_contradiction.violations())
    out.extend(b.appurtenance.violations())
    if b.constraint is not None and b.appurtenance.kind == "vector":
        for (x, a), p in b.appurtenance.entries.items():
            if isinstance(p, DegreeVector) and p.arity == b.appurtenance.arity:
                try:
                    rep = validate_constraint(p, b.constraint)
                except ShapeError as exc:
                    out.append(Violation(f"constraint[{x},{a}]", str(exc)))
                    continue
                if not rep.ok:
                    out.append(Violation(f"constraint[{x},{a}]",
                                         f"{b.constraint.kind} violated: {rep.detail}"))
    return out


def fuse(contradiction: Sequence[Real], rule: str = "mean") -> Real:
    """Collapse t contradiction channels to one degree."""
    cs = tuple(contradiction)
    for c in cs:
        if not 0 <= c <= 1:
            raise DomainError(f"contradiction component {c} outside [0, 1]")
    if not cs:
        return 0
    if len(cs) == 1:
        return cs[0]
    if rule == "mean":
        if all(isinstance(c, int) for c in cs):
            # int / int would leak a float into otherwise exact arithmetic
            return Fraction(sum(cs), len(cs))
        return sum(cs) / len(cs)
    if rule == "max":
        return max(cs)
    raise DomainError(f"unknown fusion rule {rule!r}")


def compatibility_weights(b: PlithogenicBundle, dominant: Value) -> dict[Value, Real]:
    b.attribute.require(dominant)
    return {a: 1 - fuse(b.contradiction.get(a, dominant), b.fusion) for a in b.values}


def interval_compatibility_weights(b: PlithogenicBundle, dominant: Value) -> dict[Value, IntervalDegree]:
    """Interval weights [1 - upper, 1 - lower]; degenerate when no interval table is attached."""
    b.attribute.require(dominant)
    if b.interval_contradiction is None:
        return {a: IntervalDegree(w, w) for a, w in compatibility_weights(b, dominant).items()}
    out = {}
    for a in b.values:
        c = b.interval_contradiction.get(a, dominant)
        out[a] = IntervalDegree(1 - c.upper, 1 - c.lower)
    return out


def aggregate_dominant(
    b: PlithogenicBundle,
    x: Hashable,
    dominant: Value,
    over: Iterable[Value] | None = None,
):
    """Contradiction-weighted mean of x's degrees, dispatched on the payload kind.

    ``over`` restricts the mean to a chosen sub-multiset of values.
    """
    if x not in b.universe:
        raise UnknownIdentifier(f"unknown element {x!r}")
    chosen = tuple(b.values if over is None else over)
    for a in chosen:
        b.attribute.require(a)
    kind = b.appurtenance.kind
    payloads = [b.appurtenance.get(x, a) for a in chosen]
    if kind == "interval":
        iw = interval_compatibility_weights(b, dominant)
        ws = [iw[a] for a in chosen]
        return tuple(
            interval_weighted_mean([p[j] for p in payloads], ws)
            for j in range(b.appurtenance.arity)
        )
    w = compatibility_weights(b, dominant)
    ws = [w[a] for a in chosen]
    if kind == "vector":
        return weighted_mean(payloads, ws)
    if kind == "complex":
        return tuple(
            complex_weighted_mean([p[j] for p in payloads], ws)
            for j in range(b.appurtenance.arity)
        )
    # dual: componentwise on standard and infinitesimal parts
    return tuple(
        DualDegree(
            weighted_average([p[j].standard for p in payloads], ws),
            weighted_average([p[j].infinitesimal for p in payloads], ws),
        )
        for j in range(b.appurtenance.arity)
    )


def classify_band(b: PlithogenicBundle) -> str:
    """standard, overset, underset or offset, from where the stored degrees fall."""
    comps: list[Real] = []
    for p in b.appurtenance.entries.values():
        if isinstance(p, DegreeVector):
            comps.extend(p.components)
        elif isinstance(p, tuple):
            for q in p:
                if isinstance(q, DualDegree):
                    comps.append(q.standard)
                elif isinstance(q, IntervalDegree):
                    comps.extend((q.lower, q.upper))
                elif isinstance(q, IntervalResult):
                    comps.extend((q.lower, q.upper))
    over = any(c > 1 for c in comps)
    under = any(c < 0 for c in comps)
    if over and under:
        return "offset"
    if over:
        return "overset"
    if under:
        return "underset"
    return "standard"


def make_bundle(
    elements: Sequence[Hashable],
    values: Sequence[Value],
    degrees: Mapping[Hashable, Mapping[Value, object]],
    contradiction: ContradictionTable | Mapping[tuple[Value, Value], object] | None = None,
    *,
    attribute: str = "v",
    kind: str = "vector",
    band: Band = UNIT_BAND,
    channels: int = 1,
    fusion: str = "mean",
    constraint: ConstraintSpec | None = None,
    interval_contradiction: IntervalContradictionTable | None = None,
) -> PlithogenicBundle:
    """Convenience builder from nested element -> value -> payload mappings.

    Plain numbers and sequences become DegreeVectors in ``band``.
    """
    universe = FiniteUniverse(tuple(elements))
    values = tuple(values)
    entries = {}
    arity = None
    for x, row in degrees.items():
        for a, p in row.items():
            if kind == "vector" and not isinstance(p, DegreeVector):
                comps = tuple(p) if isinstance(p, (tuple, list)) else (p,)
                p = DegreeVector(comps, band)
            elif kind != "vector":
                p = tuple(p) if isinstance(p, (tuple, list)) else (p,)
            entries[(x, a)] = p
            arity = arity or payload_arity(p)
    if isinstance(contradiction, ContradictionTable):
        table = contradiction
    else:
        table = ContradictionTable.from_pairs(values, contradiction or {}, channels)
    app = AppurtenanceTable(universe, values, entries, kind, arity or 1, band)
    return PlithogenicBundle(AttributeSystem(attribute, values), app, table, fusion,
                             constraint, interval_contradiction)
