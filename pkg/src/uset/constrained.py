"""Aggregation under q-rung, spherical, t-spherical and linear Diophantine constraints."""
from __future__ import annotations

from dataclasses import dataclass
from numbers import Real
from typing import Hashable, Sequence

from .core import PlithogenicBundle, Value, aggregate_dominant
from .degree import (
    ConstraintReport,
    ConstraintSpec,
    DegreeVector,
    require_constraint,
    validate_constraint,
)
from .errors import DomainError, ShapeError


@dataclass(frozen=True, slots=True)
class ConstrainedResult:
    degree: DegreeVector
    report: ConstraintReport


def constrained_aggregate(
    b: PlithogenicBundle, x: Hashable, dominant: Value, spec: ConstraintSpec | None = None
) -> ConstrainedResult:
    """Check the inputs, aggregate, then check the output against the same constraint."""
    spec = spec or b.constraint
    if spec is None:
        raise DomainError("no constraint attached to the bundle or given explicitly")
    if b.appurtenance.kind != "vector":
        raise DomainError("constrained aggregation needs vector payloads")
    for a in b.values:
        require_constraint(b.appurtenance.get(x, a), spec, f"({x}, {a})")
    out = aggregate_dominant(b, x, dominant)
    return ConstrainedResult(out, validate_constraint(out, spec))


@dataclass(frozen=True, slots=True)
class DiophantineEntry:
    degree: DegreeVector
    coefficients: tuple[Real, ...]
    capacity: Real

    def __post_init__(self) -> None:
        object.__setattr__(self, "coefficients", tuple(self.coefficients))
        if len(self.coefficients) != self.degree.arity:
            raise ShapeError(
                f"{len(self.coefficients)} coefficients for a degree of arity {self.degree.arity}")
        if self.capacity <= 0:
            raise DomainError("capacity must be positive")


@dataclass(frozen=True, slots=True)
class DiophantineReport:
    ok: bool
    weighted_sum: Real
    coefficient_sum: Real
    residual: Real


def diophantine_check(entry: DiophantineEntry) -> DiophantineReport:
    spec = ConstraintSpec.diophantine(entry.capacity, entry.coefficients)
    rep = validate_constraint(entry.degree, spec)
    return DiophantineReport(
        ok=rep.ok,
        weighted_sum=rep.measured,
        coefficient_sum=sum(entry.coefficients),
        residual=entry.capacity - rep.measured,
    )


def spherical_validate(triple: DegreeVector | Sequence[Real], radius: Real = 1) -> ConstraintReport:
    return validate_constraint(triple, ConstraintSpec.spherical(radius))


def t_spherical_validate(triple: DegreeVector | Sequence[Real], t: Real, radius: Real = 1) -> ConstraintReport:
    return validate_constraint(triple, ConstraintSpec.t_spherical(t, radius))
