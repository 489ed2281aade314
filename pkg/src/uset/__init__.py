"""Uncertain-set toolkit: contradiction-weighted aggregation over fuzzy, neutrosophic,
rough, soft and plithogenic models, with a regression corpus and a command-line driver."""
from .core import (
    AttributeSystem,
    ContradictionTable,
    PlithogenicBundle,
    aggregate_dominant,
    compatibility_weights,
    make_bundle,
    validate_bundle,
)
from .degree import ConstraintSpec, DegreeVector, validate_constraint, weighted_mean
from .errors import (
    ConstraintViolation,
    DomainError,
    ScenarioError,
    ShapeError,
    UnknownIdentifier,
    UsetError,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeSystem",
    "ConstraintSpec",
    "ConstraintViolation",
    "ContradictionTable",
    "DegreeVector",
    "DomainError",
    "PlithogenicBundle",
    "ScenarioError",
    "ShapeError",
    "UnknownIdentifier",
    "UsetError",
    "aggregate_dominant",
    "compatibility_weights",
    "make_bundle",
    "validate_bundle",
    "validate_constraint",
    "weighted_mean",
]
