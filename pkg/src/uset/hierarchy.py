"""Multi-level aggregation: m-polar weights, staged pipelines, nested reductions, trees and forests."""
from __future__ import annotations

from dataclasses import dataclass, field
from numbers import Real
from typing import Hashable, Mapping, Sequence, Union

from .core import ContradictionTable, Value, fuse
from .degree import DegreeVector, weighted_average, weighted_mean
from .errors import DomainError, ShapeError, UnknownIdentifier


# -- m-polar -----------------------------------------------------------------

@dataclass(frozen=True, slots=True)
class PoleSystem:
    poles: tuple[Hashable, ...]
    contradiction: ContradictionTable

    def __post_init__(self) -> None:
        object.__setattr__(self, "poles", tuple(self.poles))
        if not self.poles:
            raise DomainError("a pole system needs at least one pole")
        if tuple(self.contradiction.values) != self.poles:
            raise DomainError("pole contradiction table must range over the poles")


@dataclass(frozen=True, slots=True)
class MPolarBundle:
    """Degrees per (element, value), one DegreeVector per pole."""

    elements: tuple[Hashable, ...]
    value_contradiction: ContradictionTable
    poles: PoleSystem
    entries: Mapping[tuple[Hashable, Value], tuple[DegreeVector, ...]]
    fusion: str = "mean"

    def __post_init__(self) -> None:
        object.__setattr__(self, "elements", tuple(self.elements))
        m = len(self.poles.poles)
        arity = None
        for key, row in self.entries.items():
            if len(row) != m:
                raise ShapeError(f"{key}: {len(row)} pole payloads, expected {m}")
            for p in row:
                arity = arity or p.arity
                if p.arity != arity:
                    raise ShapeError(f"{key}: mixed payload arities")
        for x in self.elements:
            for a in self.value_contradiction.values:
                if (x, a) not in self.entries:
                    raise DomainError(f"missing m-polar entry for ({x}, {a})")


def mpolar_weights(b: MPolarBundle, value: Value, dominant_value: Value, dominant_pole: Hashable) -> tuple[Real, ...]:
    """Per-pole weight: value compatibility times pole compatibility."""
    if dominant_pole not in b.poles.poles:
        raise UnknownIdentifier(f"unknown pole {dominant_pole!r}")
    value_w = 1 - fuse(b.value_contradiction.get(value, dominant_value), b.fusion)
    return tuple(
        value_w * (1 - fuse(b.poles.contradiction.get(pole, dominant_pole), b.fusion))
        for pole in b.poles.poles
    )


def mpolar_aggregate(
    b: MPolarBundle, x: Hashable, value: Value, dominant_value: Value, dominant_pole: Hashable
) -> DegreeVector:
    """Weighted mean over the poles of x's degree at ``value``."""
    if (x, value) not in b.entries:
        raise UnknownIdentifier(f"no m-polar entry for ({x}, {value})")
    weights = mpolar_weights(b, value, dominant_value, dominant_pole)
    return weighted_mean(list(b.entries[(x, value)]), list(weights))


# -- staged pipelines --------------------------------------------------------

@dataclass(frozen=True, slots=True)
class LevelSpec:
    contradiction: ContradictionTable
    dominant: Value
    fusion: str = "mean"

    def __post_init__(self) -> None:
        if self.dominant not in self.contradiction.values:
            raise UnknownIdentifier(f"dominant {self.dominant!r} is not a value of this level")

    @property
    def values(self) -> tuple[Value, ...]:
        return self.contradiction.values

    def weights(self) -> dict[Value, Real]:
        return {a: 1 - fuse(self.contradiction.get(a, self.dominant), self.fusion) for a in self.values}


def _as_vector(p: object) -> DegreeVector:
    if isinstance(p, DegreeVector):
        return p
    if isinstance(p, (tuple, list)):
        return DegreeVector(tuple(p))
    return DegreeVector((p,))


def staged_aggregate(pipeline: Sequence[LevelSpec], leaves: Mapping) -> DegreeVector:
    """Fold a nested value table bottom-up; ``pipeline[0]`` keys the outermost mapping."""
    if not pipeline:
        raise ShapeError("pipeline must have at least one level")

    def fold(depth: int, node: object, path: tuple) -> DegreeVector:
        if depth == len(pipeline):
            if isinstance(node, Mapping):
                raise ShapeError(f"table deeper than the pipeline at {path}")
            return _as_vector(node)
        if not isinstance(node, Mapping):
            raise ShapeError(f"table shallower than the pipeline at {path}")
        level = pipeline[depth]
        w = level.weights()
        children, weights = [], []
        for a in level.values:
            if a not in node:
                raise DomainError(f"missing value {a!r} at {path}")
            children.append(fold(depth + 1, node[a], path + (a,)))
            weights.append(w[a])
        return weighted_mean(children, weights)

    return fold(0, leaves, ())


# -- nested (superhyper) degrees --------------------------------------------

NestedDegreeSet = Union[DegreeVector, Sequence["NestedDegreeSet"]]


def nested_reduce(nested: NestedDegreeSet, _depth: int = 0) -> DegreeVector:
    """Replace every collection by the plain mean of its reduced children."""
    if isinstance(nested, DegreeVector):
        return nested
    if isinstance(nested, Real):
        return DegreeVector((nested,))
    items = list(nested)
    if not items:
        raise DomainError(f"empty collection at nesting depth {_depth}")
    reduced = [nested_reduce(c, _depth + 1) for c in items]
    return weighted_mean(reduced, [1] * len(reduced))


def superhyper_aggregate(
    payloads: Mapping[Value, NestedDegreeSet],
    contradiction: ContradictionTable,
    dominant: Value,
    fusion: str = "mean",
) -> DegreeVector:
    level = LevelSpec(contradiction, dominant, fusion)
    w = level.weights()
    vals = [a for a in contradiction.values if a in payloads]
    if len(vals) != len(payloads):
        raise UnknownIdentifier("payloads mention values outside the contradiction table")
    return weighted_mean([nested_reduce(payloads[a]) for a in vals], [w[a] for a in vals])


# -- trees and forests -------------------------------------------------------

@dataclass(frozen=True, slots=True)
class ThresholdRule:
    """Label assignment: the first (label, floor) with degree >= floor wins, else ``fallback``."""

    steps: tuple[tuple[Hashable, Real], ...]
    fallback: Hashable

    def __post_init__(self) -> None:
        steps = tuple((lab, floor) for lab, floor in self.steps)
        object.__setattr__(self, "steps", steps)
        floors = [f for _, f in steps]
        if floors != sorted(floors, reverse=True):
            raise DomainError("threshold floors must be listed in decreasing order")
        if any(not 0 <= f <= 1 for f in floors):
            raise DomainError("threshold floors must lie in [0, 1]")

    def label(self, degree: Real) -> Hashable:
        for lab, floor in self.steps:
            if degree >= floor:
                return lab
        return self.fallback

    @property
    def labels(self) -> tuple[Hashable, ...]:
        return tuple(lab for lab, _ in self.steps) + (self.fallback,)


@dataclass(frozen=True, slots=True)
class TreeLeaf:
    name: str
    label: Hashable
    degree: Real


@dataclass(frozen=True, slots=True)
class TreeNode:
    name: str
    children: tuple[Union["TreeNode", TreeLeaf], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "children", tuple(self.children))
        if not self.children:
            raise DomainError(f"internal node {self.name!r} has no children")


@dataclass(frozen=True, slots=True)
class AttributeTree:
    root: TreeNode | TreeLeaf
    labels: ContradictionTable
    dominant: Hashable
    thresholds: ThresholdRule
    fusion: str = "mean"

    def __post_init__(self) -> None:
        if self.dominant not in self.labels.values:
            raise UnknownIdentifier(f"dominant label {self.dominant!r} unknown")
        for lab in self.thresholds.labels:
            if lab not in self.labels.values:
                raise UnknownIdentifier(f"threshold label {lab!r} unknown")

    def weight(self, label: Hashable) -> Real:
        if label not in self.labels.values:
            raise UnknownIdentifier(f"label {label!r} unknown")
        return 1 - fuse(self.labels.get(label, self.dominant), self.fusion)


@dataclass(frozen=True, slots=True)
class NodeResult:
    name: str
    degree: Real
    label: Hashable
    weight: Real
    children: tuple["NodeResult", ...] = field(default_factory=tuple)


def evaluate_tree(tree: AttributeTree) -> NodeResult:
    """Full per-node trace of the bottom-up aggregation."""

    def walk(node) -> NodeResult:
        if isinstance(node, TreeLeaf):
            return NodeResult(node.name, node.degree, node.label, tree.weight(node.label))
        kids = tuple(walk(c) for c in node.children)
        ws = [k.weight for k in kids]
        degree = weighted_average([k.degree for k in kids], ws)
        # zero total weight: weighted_average already yields 0, which maps to the lowest label
        label = tree.thresholds.label(degree)
        return NodeResult(node.name, degree, label, tree.weight(label), kids)

    return walk(tree.root)


def tree_aggregate(tree: AttributeTree) -> tuple[Real, Hashable]:
    root = evaluate_tree(tree)
    if isinstance(tree.root, TreeLeaf):
        return root.degree, tree.thresholds.label(root.degree)
    return root.degree, root.label


@dataclass(frozen=True, slots=True)
class AttributeForest:
    trees: tuple[AttributeTree, ...]
    dominant: Hashable

    def __post_init__(self) -> None:
        object.__setattr__(self, "trees", tuple(self.trees))
        if not self.trees:
            raise DomainError("a forest needs at least one tree")
        labels = self.trees[0].labels.values
        for t in self.trees:
            if t.labels.values != labels:
                raise DomainError("trees of a forest must share one label system")
        if self.dominant not in labels:
            raise UnknownIdentifier(f"dominant label {self.dominant!r} unknown")


def forest_aggregate(forest: AttributeForest) -> Real:
    degrees, weights = [], []
    for t in forest.trees:
        degree, label = tree_aggregate(t)
        degrees.append(degree)
        weights.append(1 - fuse(t.labels.get(label, forest.dominant), t.fusion))
    return weighted_average(degrees, weights)
