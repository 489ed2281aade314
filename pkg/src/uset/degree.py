"""Degree algebras, the weighted-mean kernel, membership shapes and constraint checks.

Arithmetic is written against ``numbers.Real`` so that callers passing
``fractions.Fraction`` inputs get exact rational results, while plain floats
stay in binary64.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from numbers import Real
from typing import Callable, Iterable, Sequence

from .errors import ConstraintViolation, DomainError, ShapeError

Band = tuple[Real, Real]
UNIT_BAND: Band = (0, 1)

# float comparisons against irrational bounds such as (sqrt 3)^2
FLOAT_SLACK = 1e-12


def _check_weights(weights: Sequence[Real]) -> None:
    for i, w in enumerate(weights):
        if w < 0:
            raise DomainError(f"weight #{i} is negative: {w}")


def weighted_average(values: Sequence[Real], weights: Sequence[Real]) -> Real:
    """Scalar weighted mean with the 0/0 := 0 convention."""
    if len(values) != len(weights):
        raise ShapeError(f"{len(values)} values but {len(weights)} weights")
    _check_weights(weights)
    total = sum(weights)
    if total == 0:
        return 0 * total
    return sum(w * x for w, x in zip(weights, values)) / total


@dataclass(frozen=True, slots=True)
class DegreeVector:
    components: tuple[Real, ...]
    band: Band = UNIT_BAND

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        object.__setattr__(self, "band", tuple(self.band))
        lo, hi = self.band
        if lo > hi:
            raise DomainError(f"band lower bound {lo} exceeds upper bound {hi}")
        if not self.components:
            raise ShapeError("a degree vector needs at least one component")
        for i, c in enumerate(self.components):
            if not isinstance(c, Real) or (isinstance(c, float) and math.isnan(c)):
                raise DomainError(f"component #{i} is not a real number: {c!r}")
            if not lo <= c <= hi:
                raise DomainError(f"component #{i} = {c} outside band [{lo}, {hi}]")

    @classmethod
    def of(cls, *components: Real, band: Band = UNIT_BAND) -> "DegreeVector":
        return cls(tuple(components), band)

    @property
    def arity(self) -> int:
        return len(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Real:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def with_band(self, band: Band) -> "DegreeVector":
        return DegreeVector(self.components, band)


def weighted_mean(values: Sequence[DegreeVector], weights: Sequence[Real]) -> DegreeVector:
    """Componentwise weighted mean; all-zero weights give the zero vector."""
    if len(values) != len(weights):
        raise ShapeError(f"{len(values)} values but {len(weights)} weights")
    if not values:
        raise ShapeError("cannot average an empty sequence")
    _check_weights(weights)
    arity = values[0].arity
    for i, v in enumerate(values):
        if v.arity != arity:
            raise ShapeError(f"value #{i} has arity {v.arity}, expected {arity}")
    lo = min(v.band[0] for v in values)
    hi = max(v.band[1] for v in values)
    total = sum(weights)
    if total == 0:
        zero = 0 * total
        return DegreeVector((zero,) * arity, (min(lo, 0), max(hi, 0)))
    comps = tuple(
        sum(w * v.components[j] for w, v in zip(weights, values)) / total
        for j in range(arity)
    )
    return DegreeVector(comps, (lo, hi))


# -- intervals ---------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class IntervalDegree:
    lower: Real
    upper: Real

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.upper <= 1:
            raise DomainError(f"invalid interval degree [{self.lower}, {self.upper}]")

    @property
    def width(self) -> Real:
        return self.upper - self.lower


@dataclass(frozen=True, slots=True)
class IntervalResult:
    """Interval mean output; may leave [0, 1] and is then flagged rather than clipped."""

    lower: Real
    upper: Real

    @property
    def exceeds_unit(self) -> bool:
        return self.lower < 0 or self.upper > 1

    def as_degree(self) -> IntervalDegree:
        if self.exceeds_unit:
            raise DomainError(f"interval [{self.lower}, {self.upper}] leaves [0, 1]")
        return IntervalDegree(self.lower, self.upper)


def interval_weighted_mean(
    values: Sequence[IntervalDegree], weights: Sequence[IntervalDegree]
) -> IntervalResult:
    """Interval-arithmetic weighted mean with non-negative bounds."""
    if len(values) != len(weights):
        raise ShapeError(f"{len(values)} values but {len(weights)} weights")
    if not values:
        raise ShapeError("cannot average an empty sequence")
    w_lo = sum(w.lower for w in weights)
    w_hi = sum(w.upper for w in weights)
    if w_lo <= 0:
        raise DomainError("total lower weight must be positive for an interval mean")
    n_lo = sum(w.lower * x.lower for w, x in zip(weights, values))
    n_hi = sum(w.upper * x.upper for w, x in zip(weights, values))
    return IntervalResult(n_lo / w_hi, n_hi / w_lo)


# -- complex -----------------------------------------------------------------

TWO_PI = 2 * math.pi


@dataclass(frozen=True, slots=True)
class ComplexDegree:
    modulus: float
    argument: float  # radians, normalised to [0, 2pi)

    def __post_init__(self) -> None:
        if not 0 <= self.modulus <= 1:
            raise DomainError(f"modulus {self.modulus} outside [0, 1]")
        arg = math.fmod(float(self.argument), TWO_PI)
        if arg < 0:
            arg += TWO_PI
        if arg >= TWO_PI:
            arg = 0.0
        object.__setattr__(self, "argument", arg)

    @classmethod
    def from_degrees(cls, modulus: float, degrees: float) -> "ComplexDegree":
        return cls(modulus, math.radians(degrees))

    @classmethod
    def from_rect(cls, z: complex) -> "ComplexDegree":
        r = abs(z)
        if r == 0:
            return cls(0.0, 0.0)
        # rounding can push a convex combination of unit-disk points a hair past 1
        if 1 < r <= 1 + FLOAT_SLACK:
            r = 1.0
        return cls(r, cmath.phase(z))

    @property
    def degrees(self) -> float:
        return math.degrees(self.argument)

    def to_rect(self) -> complex:
        return cmath.rect(self.modulus, self.argument)


def complex_weighted_mean(
    values: Sequence[ComplexDegree], weights: Sequence[Real]
) -> ComplexDegree:
    """Average in rectangular form, convert back to amplitude and phase."""
    if len(values) != len(weights):
        raise ShapeError(f"{len(values)} values but {len(weights)} weights")
    _check_weights(weights)
    total = float(sum(weights))
    if total == 0:
        return ComplexDegree(0.0, 0.0)
    z = sum(float(w) * v.to_rect() for w, v in zip(weights, values)) / total
    return ComplexDegree.from_rect(z)


# -- dual numbers ------------------------------------------------------------

@dataclass(frozen=True, slots=True, order=True)
class DualDegree:
    """a + b*eps with lexicographic order on (standard, infinitesimal)."""

    standard: Real
    infinitesimal: Real = 0

    def __add__(self, other: "DualDegree") -> "DualDegree":
        return DualDegree(self.standard + other.standard, self.infinitesimal + other.infinitesimal)

    def scale(self, k: Real) -> "DualDegree":
        return DualDegree(k * self.standard, k * self.infinitesimal)


def standard_part(a: DualDegree) -> Real:
    return a.standard


def dual_blend(
    a: DualDegree,
    b: DualDegree,
    c: Real,
    tnorm: Callable[[DualDegree, DualDegree], DualDegree] = min,
    tconorm: Callable[[DualDegree, DualDegree], DualDegree] = max,
) -> DualDegree:
    """(1 - c) * T(a, b) + c * S(a, b), arithmetic on both parts."""
    if not 0 <= c <= 1:
        raise DomainError(f"blend coefficient {c} outside [0, 1]")
    return tnorm(a, b).scale(1 - c) + tconorm(a, b).scale(c)


# -- fuzzy numbers -----------------------------------------------------------

@dataclass(frozen=True, slots=True)
class TriangularNumber:
    lower: Real
    peak: Real
    upper: Real

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.peak <= self.upper <= 1:
            raise DomainError(f"unordered triangular number {self.breakpoints}")

    @property
    def breakpoints(self) -> tuple[Real, Real, Real]:
        return (self.lower, self.peak, self.upper)


@dataclass(frozen=True, slots=True)
class TrapezoidalNumber:
    lower: Real
    core_lower: Real
    core_upper: Real
    upper: Real

    def __post_init__(self) -> None:
        if not 0 <= self.lower <= self.core_lower <= self.core_upper <= self.upper <= 1:
            raise DomainError(f"unordered trapezoidal number {self.breakpoints}")

    @property
    def breakpoints(self) -> tuple[Real, Real, Real, Real]:
        return (self.lower, self.core_lower, self.core_upper, self.upper)


def shaped_membership(x: Real, breakpoints: Sequence[Real]) -> Real:
    """Piecewise-linear membership for a triangle (a, m, b) or trapezoid (a, b, c, d)."""
    pts = tuple(breakpoints)
    if len(pts) == 3:
        a, b, c, d = pts[0], pts[1], pts[1], pts[2]
    elif len(pts) == 4:
        a, b, c, d = pts
    else:
        raise ShapeError(f"expected 3 or 4 breakpoints, got {len(pts)}")
    if not a <= b <= c <= d:
        raise DomainError(f"breakpoints must be ordered: {pts}")
    if b <= x <= c:
        return 1 + 0 * x
    if x < a or x > d:
        return 0 * x
    if x < b:
        return (x - a) / (b - a)
    return (d - x) / (d - c)


def defuzzify(value: TriangularNumber | TrapezoidalNumber) -> Real:
    """Centroid of a triangle, arithmetic mean of a trapezoid's breakpoints."""
    pts = value.breakpoints
    return sum(pts) / len(pts)


# -- constraints -------------------------------------------------------------

CONSTRAINT_KINDS = (
    "none", "ifs", "neutrosophic", "picture", "spherical",
    "t_spherical", "q_rung", "diophantine", "band",
)


@dataclass(frozen=True, slots=True)
class ConstraintSpec:
    kind: str = "none"
    exponent: Real | None = None   # t for picture / t_spherical, q for q_rung
    radius: Real | None = None     # lambda for (t-)spherical
    arity: int | None = None       # n for q_rung
    capacity: Real | None = None   # C for diophantine
    coefficients: tuple[Real, ...] = field(default_factory=tuple)
    lo: Real | None = None
    hi: Real | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        k = self.kind
        if k not in CONSTRAINT_KINDS:
            raise DomainError(f"unknown constraint kind {k!r}")
        if k in ("spherical", "t_spherical") and not (self.radius is not None and self.radius > 0):
            raise DomainError("spherical constraints need a positive radius")
        if k == "t_spherical" and not (self.exponent is not None and self.exponent >= 1):
            raise DomainError("t-spherical exponent must be at least 1")
        if k == "picture" and not (self.exponent is not None and self.exponent >= 1):
            raise DomainError("picture constraint needs t >= 1 main components")
        if k == "q_rung":
            if self.exponent is None or self.exponent < 1:
                raise DomainError("q-rung exponent must be at least 1")
            if self.arity is None or self.arity < 2:
                raise DomainError("q-rung arity must be at least 2")
        if k == "diophantine":
            if self.capacity is None or self.capacity <= 0:
                raise DomainError("diophantine capacity must be positive")
            if not self.coefficients:
                raise DomainError("diophantine constraint needs reference coefficients")
        if k == "band" and not (self.lo is not None and self.hi is not None and self.lo < self.hi):
            raise DomainError("band constraint needs lo < hi")

    @classmethod
    def none(cls) -> "ConstraintSpec":
        return cls("none")

    @classmethod
    def ifs(cls) -> "ConstraintSpec":
        return cls("ifs")

    @classmethod
    def neutrosophic(cls) -> "ConstraintSpec":
        return cls("neutrosophic")

    @classmethod
    def picture(cls, t: int = 2) -> "ConstraintSpec":
        return cls("picture", exponent=t)

    @classmethod
    def spherical(cls, radius: Real = 1) -> "ConstraintSpec":
        return cls("spherical", radius=radius)

    @classmethod
    def t_spherical(cls, t: Real, radius: Real = 1) -> "ConstraintSpec":
        return cls("t_spherical", exponent=t, radius=radius)

    @classmethod
    def q_rung(cls, q: Real, n: int = 2) -> "ConstraintSpec":
        return cls("q_rung", exponent=q, arity=n)

    @classmethod
    def diophantine(cls, capacity: Real, coefficients: Iterable[Real]) -> "ConstraintSpec":
        return cls("diophantine", capacity=capacity, coefficients=tuple(coefficients))

    @classmethod
    def band(cls, lo: Real, hi: Real) -> "ConstraintSpec":
        return cls("band", lo=lo, hi=hi)

    def expected_arity(self) -> int | None:
        k = self.kind
        if k == "ifs":
            return 2
        if k in ("neutrosophic", "spherical", "t_spherical"):
            return 3
        if k == "picture":
            return int(self.exponent) + 1
        if k == "q_rung":
            return self.arity
        if k == "diophantine":
            return len(self.coefficients)
        return None


@dataclass(frozen=True, slots=True)
class ConstraintReport:
    ok: bool
    measured: Real
    bound: Real
    detail: str = ""


def _leq(a: Real, b: Real) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return a <= b + FLOAT_SLACK * max(1.0, abs(float(b)))
    return a <= b


def validate_constraint(deg: DegreeVector | Sequence[Real], spec: ConstraintSpec) -> ConstraintReport:
    """Evaluate the inequality attached to ``spec`` on one degree."""
    xs = tuple(deg.components if isinstance(deg, DegreeVector) else deg)
    need = spec.expected_arity()
    if need is not None and len(xs) != need:
        raise ShapeError(f"{spec.kind} constraint expects {need} components, got {len(xs)}")
    k = spec.kind
    if k == "none":
        return ConstraintReport(True, 0, math.inf)
    if k == "band":
        worst = max(xs, key=lambda v: max(spec.lo - v, v - spec.hi))
        ok = all(_leq(spec.lo, v) and _leq(v, spec.hi) for v in xs)
        return ConstraintReport(ok, worst, spec.hi if worst > spec.lo else spec.lo,
                                "" if ok else f"component {worst} outside [{spec.lo}, {spec.hi}]")
    in_unit = all(0 <= v <= 1 for v in xs)
    if k == "ifs":
        measured, bound = xs[0] + xs[1], 1
    elif k == "neutrosophic":
        measured, bound = sum(xs), 3
    elif k == "picture":
        if spec.exponent == 2:
            measured, bound = sum(xs), 1
        else:
            measured, bound = max(xs), 1
    elif k == "spherical":
        measured, bound = sum(v * v for v in xs), spec.radius ** 2
    elif k == "t_spherical":
        measured, bound = sum(v ** spec.exponent for v in xs), spec.radius ** spec.exponent
    elif k == "q_rung":
        measured, bound = sum(v ** spec.exponent for v in xs), spec.arity - 1
    else:  # diophantine
        alpha = spec.coefficients
        measured = sum(a * v for a, v in zip(alpha, xs))
        alpha_sum = sum(alpha)
        ok = (in_unit and all(0 <= a <= 1 for a in alpha) and 0 <= measured
              and _leq(measured, spec.capacity) and 0 <= alpha_sum and _leq(alpha_sum, spec.capacity))
        return ConstraintReport(ok, measured, spec.capacity,
                                "" if ok else f"weighted sum {measured}, coefficient sum {alpha_sum}")
    ok = in_unit and _leq(measured, bound)
    detail = "" if ok else (f"{measured} > {bound}" if in_unit else "component outside [0, 1]")
    return ConstraintReport(ok, measured, bound, detail)


def require_constraint(deg: DegreeVector | Sequence[Real], spec: ConstraintSpec, where: str = "") -> ConstraintReport:
    report = validate_constraint(deg, spec)
    if not report.ok:
        prefix = f"{where}: " if where else ""
        raise ConstraintViolation(f"{prefix}{spec.kind} constraint violated ({report.detail})")
    return report
