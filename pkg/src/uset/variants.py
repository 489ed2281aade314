"""Value-domain variants: linguistic terms, hesitant and subset payloads, cubic, refined,
picture, triangular and trapezoidal degrees, and nonstandard (dual-number) aggregation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Callable, Collection, Hashable, Iterable, Mapping, Sequence

from .core import ContradictionTable, Value, Violation, fuse
from .degree import (
    DegreeVector,
    DualDegree,
    IntervalDegree,
    TrapezoidalNumber,
    TriangularNumber,
    defuzzify,
    dual_blend,
    weighted_average,
    weighted_mean,
)
from .errors import ConstraintViolation, DomainError, ShapeError, UnknownIdentifier


def _weights(contradiction: ContradictionTable, dominant: Value, fusion: str = "mean") -> dict[Value, Real]:
    if dominant not in contradiction.values:
        raise UnknownIdentifier(f"unknown dominant value {dominant!r}")
    return {a: 1 - fuse(contradiction.get(a, dominant), fusion) for a in contradiction.values}


# -- linguistic terms --------------------------------------------------------

@dataclass(frozen=True, slots=True)
class TermSet:
    labels: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.labels) < 2:
            raise DomainError("a term set needs at least two labels")
        if len(set(self.labels)) != len(self.labels):
            raise DomainError("term labels must be distinct")

    @property
    def granularity(self) -> int:
        return len(self.labels) - 1

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownIdentifier(f"unknown term {label!r}") from None

    def distance_table(self) -> ContradictionTable:
        return ContradictionTable.from_function(self.labels, lambda a, b: term_distance(a, b, self))


def term_distance(a: str, b: str, terms: TermSet) -> Real:
    return Fraction(abs(terms.index(a) - terms.index(b)), terms.granularity)


def lift_contradiction(
    left: Collection[Hashable],
    right: Collection[Hashable],
    base: Callable[[Hashable, Hashable], Real] | ContradictionTable,
) -> Real:
    """Symmetric max-min lift of an element-level contradiction to subsets."""
    if isinstance(base, ContradictionTable):
        table = base
        base = lambda a, b: fuse(table.get(a, b))  # noqa: E731
    left, right = list(left), list(right)
    if not left and not right:
        return 0
    if not left or not right:
        return 1
    forward = max(min(base(a, b) for b in right) for a in left)
    backward = max(min(base(a, b) for a in left) for b in right)
    return max(forward, backward)


def linguistic_aggregate(
    payloads: Mapping[Hashable, object],
    terms: TermSet,
    dominant: Hashable,
) -> DegreeVector:
    """Contradiction-weighted mean over term values or hesitant term subsets.

    Keys are single labels or collections of labels; the dominant has the same form.
    """
    def as_set(v) -> frozenset:
        return frozenset([v]) if isinstance(v, str) else frozenset(v)

    anchor = as_set(dominant)
    dist = lambda a, b: term_distance(a, b, terms)  # noqa: E731
    keys = list(payloads)
    weights = [1 - lift_contradiction(as_set(k), anchor, dist) for k in keys]
    vecs = [p if isinstance(p, DegreeVector) else DegreeVector(tuple(p) if isinstance(p, (tuple, list)) else (p,))
            for p in (payloads[k] for k in keys)]
    return weighted_mean(vecs, weights)


# -- hesitant and subset-valued payloads --------------------------------------

REDUCE_STRATEGIES = ("mean", "optimistic", "pessimistic")


@dataclass(frozen=True, slots=True)
class HesitationSet:
    members: tuple[DegreeVector, ...]

    def __post_init__(self) -> None:
        members = tuple(m if isinstance(m, DegreeVector) else DegreeVector(tuple(m) if isinstance(m, (tuple, list)) else (m,))
                        for m in self.members)
        object.__setattr__(self, "members", members)
        if not members:
            raise DomainError("a hesitation set must be nonempty")
        if len({m.arity for m in members}) != 1:
            raise ShapeError("hesitation set members must share one arity")


def hesitant_reduce(h: HesitationSet | Iterable, strategy: str = "mean") -> DegreeVector:
    if not isinstance(h, HesitationSet):
        h = HesitationSet(tuple(h))
    ms = h.members
    arity = ms[0].arity
    if strategy == "mean":
        return weighted_mean(list(ms), [1] * len(ms))
    if strategy == "optimistic":
        pick = max
    elif strategy == "pessimistic":
        pick = min
    else:
        raise DomainError(f"unknown reduction strategy {strategy!r}")
    return DegreeVector(tuple(pick(m[j] for m in ms) for j in range(arity)), ms[0].band)


def subset_valued_validate(pdf: Mapping[tuple[Hashable, Hashable], Collection]) -> list[Violation]:
    out = []
    for (x, a), image in pdf.items():
        loc = f"subset_pdf[{x},{a}]"
        items = list(image)
        if not items:
            out.append(Violation(loc, "image is empty"))
            continue
        try:
            HesitationSet(tuple(items))
        except (DomainError, ShapeError) as exc:
            out.append(Violation(loc, str(exc)))
    return out


def subset_reduce(entry: Iterable, strategy: str = "mean") -> DegreeVector:
    return hesitant_reduce(entry, strategy)


# -- cubic -------------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class CubicDegree:
    intervals: tuple[IntervalDegree, ...]
    point: DegreeVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if len(self.intervals) != self.point.arity:
            raise ShapeError("interval part and point part must share one arity")

    def intuitionistic_ok(self) -> bool:
        """Upper bounds and point parts of a (membership, non-membership) cubic pair each sum to <= 1."""
        if len(self.intervals) != 2:
            raise ShapeError("intuitionistic check needs exactly two components")
        return (self.intervals[0].upper + self.intervals[1].upper <= 1
                and self.point[0] + self.point[1] <= 1)


def cubic_aggregate(
    payloads: Mapping[Value, CubicDegree],
    contradiction: ContradictionTable,
    dominant: Value,
    fusion: str = "mean",
) -> CubicDegree:
    w = _weights(contradiction, dominant, fusion)
    keys = [a for a in contradiction.values if a in payloads]
    ws = [w[a] for a in keys]
    arity = payloads[keys[0]].point.arity
    intervals = tuple(
        IntervalDegree(
            weighted_average([payloads[a].intervals[j].lower for a in keys], ws),
            weighted_average([payloads[a].intervals[j].upper for a in keys], ws),
        )
        for j in range(arity)
    )
    point = weighted_mean([payloads[a].point for a in keys], ws)
    return CubicDegree(intervals, point)


# -- refined -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class RefinedSignature:
    truth: int
    indeterminacy: int
    falsity: int

    def __post_init__(self) -> None:
        if min(self.truth, self.indeterminacy, self.falsity) < 0:
            raise DomainError("refinement counts must be nonnegative")
        if self.size < 1:
            raise DomainError("refinement signature must have at least one slot")

    @property
    def size(self) -> int:
        return self.truth + self.indeterminacy + self.falsity

    def blocks(self, deg: Sequence[Real]) -> tuple[tuple, tuple, tuple]:
        t, i = self.truth, self.indeterminacy
        deg = tuple(deg)
        return deg[:t], deg[t:t + i], deg[t + i:]


def refined_aggregate(
    payloads: Mapping[Value, DegreeVector],
    contradiction: ContradictionTable,
    dominant: Value,
    sig: RefinedSignature,
    fusion: str = "mean",
) -> DegreeVector:
    w = _weights(contradiction, dominant, fusion)
    keys = [a for a in contradiction.values if a in payloads]
    for a in keys:
        if payloads[a].arity != sig.size:
            raise ShapeError(f"{a}: arity {payloads[a].arity} does not match signature size {sig.size}")
    return weighted_mean([payloads[a] for a in keys], [w[a] for a in keys])


def refined_scalarize(deg: DegreeVector | Sequence[Real], sig: RefinedSignature, weights: Sequence[Real]) -> Real:
    """Truth-block mean rewarded, indeterminacy and falsity block means penalised."""
    comps = deg.components if isinstance(deg, DegreeVector) else tuple(deg)
    if len(comps) != sig.size:
        raise ShapeError(f"degree has {len(comps)} components, signature expects {sig.size}")
    w_t, w_i, w_f = weights
    if min(weights) < 0 or abs(w_t + w_i + w_f - 1) > 1e-12:
        raise DomainError(f"scalarization weights must be nonnegative and sum to 1: {tuple(weights)}")
    t, i, f = sig.blocks(comps)
    mean = lambda xs: sum(xs) / len(xs) if xs else 0  # noqa: E731
    score = 0
    if t:
        score += w_t * mean(t)
    if i:
        score += w_i * (1 - mean(i))
    if f:
        score += w_f * (1 - mean(f))
    return score


# -- triangular and trapezoidal ----------------------------------------------

def triangular_aggregate(
    payloads: Mapping[Value, Sequence[TriangularNumber]],
    contradiction: ContradictionTable,
    anchor: Value,
    fusion: str = "mean",
) -> tuple[TriangularNumber, ...]:
    """Breakpoint-wise contradiction-weighted mean, one triangle per signature slot."""
    w = _weights(contradiction, anchor, fusion)
    keys = [a for a in contradiction.values if a in payloads]
    ws = [w[a] for a in keys]
    slots = len(payloads[keys[0]])
    out = []
    for j in range(slots):
        pts = [weighted_average([payloads[a][j].breakpoints[k] for a in keys], ws) for k in range(3)]
        out.append(TriangularNumber(*pts))
    return tuple(out)


@dataclass(frozen=True, slots=True)
class TrapTripleDegree:
    truth: TrapezoidalNumber
    indeterminacy: TrapezoidalNumber
    falsity: TrapezoidalNumber


@dataclass(frozen=True, slots=True)
class InclusionGrade:
    value: Real
    raw: Real
    contradiction_level: Real


def contradiction_level(contradiction: ContradictionTable, anchor: Value, fusion: str = "mean") -> Real:
    """Mean fused contradiction of ``anchor`` against every value, itself included."""
    if anchor not in contradiction.values:
        raise UnknownIdentifier(f"unknown value {anchor!r}")
    vals = contradiction.values
    return sum(fuse(contradiction.get(anchor, b), fusion) for b in vals) / len(vals)


def trapezoidal_inclusion(
    entry: TrapTripleDegree,
    contradiction: ContradictionTable,
    anchor: Value,
    beta: Real,
    fusion: str = "mean",
) -> InclusionGrade:
    if not 0 <= beta <= 1:
        raise DomainError(f"indeterminacy penalty {beta} outside [0, 1]")
    lam = contradiction_level(contradiction, anchor, fusion)
    s_t = defuzzify(entry.truth)
    s_i = defuzzify(entry.indeterminacy)
    s_f = defuzzify(entry.falsity)
    raw = (1 - lam) * s_t + lam * (1 - s_f) - beta * s_i
    return InclusionGrade(min(max(raw, 0 * raw), 1 + 0 * raw), raw, lam)


# -- nonstandard -------------------------------------------------------------

def nonstandard_aggregate(
    values: Sequence[DualDegree],
    contradictions: Sequence[Real],
    tnorm=min,
    tconorm=max,
) -> DualDegree:
    """Left fold of the blended min/max; ``contradictions[j]`` pairs the first value with value j+1."""
    if not values:
        raise ShapeError("need at least one value")
    if len(contradictions) != len(values) - 1:
        raise ShapeError(f"{len(values)} values need {len(values) - 1} contradiction degrees")
    acc = values[0]
    for v, c in zip(values[1:], contradictions):
        acc = dual_blend(acc, v, c, tnorm, tconorm)
    return acc


# -- picture -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PictureDegree:
    main: tuple[Real, ...]
    neutral: Real
    bounded_sum: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "main", tuple(self.main))
        if not self.main:
            raise ShapeError("picture degree needs at least one main component")
        if any(not 0 <= c <= 1 for c in self.main + (self.neutral,)):
            raise DomainError("picture components must lie in [0, 1]")
        if self.bounded_sum and sum(self.main) + self.neutral > 1:
            raise ConstraintViolation(
                f"picture sum {sum(self.main) + self.neutral} exceeds 1")

    @property
    def components(self) -> tuple[Real, ...]:
        return self.main + (self.neutral,)


def picture_construct(main: Sequence[Real], neutral: Real, bounded_sum: bool | None = None) -> PictureDegree:
    """Build a picture degree; two-component mains get the sum bound unless told otherwise."""
    main = tuple(main)
    if bounded_sum is None:
        bounded_sum = len(main) == 2
    return PictureDegree(main, neutral, bounded_sum)
