"""JSON scenario documents: loading with located diagnostics, kind dispatch, ranking and re-emission."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Real
from pathlib import Path
from typing import Any, Callable, Hashable, Mapping, Sequence

from .classic import FiniteUniverse, RoughContext, rough_approximate
from .core import (
    PAYLOAD_KINDS,
    ContradictionTable,
    IntervalContradictionTable,
    PlithogenicBundle,
    aggregate_dominant,
    classify_band,
    compatibility_weights,
    interval_compatibility_weights,
    make_bundle,
    validate_bundle,
)
from .degree import (
    UNIT_BAND,
    ComplexDegree,
    ConstraintSpec,
    DegreeVector,
    DualDegree,
    IntervalDegree,
    IntervalResult,
    TrapezoidalNumber,
    standard_part,
)
from .errors import ScenarioError, UsetError
from .hierarchy import (
    AttributeForest,
    AttributeTree,
    MPolarBundle,
    NodeResult,
    PoleSystem,
    ThresholdRule,
    TreeLeaf,
    TreeNode,
    evaluate_tree,
    forest_aggregate,
    mpolar_aggregate,
    mpolar_weights,
)
from .rough_soft import PlithogenicRelation, plithogenic_lower, plithogenic_upper
from .variants import (
    CubicDegree,
    RefinedSignature,
    TermSet,
    TrapTripleDegree,
    cubic_aggregate,
    linguistic_aggregate,
    nonstandard_aggregate,
    refined_aggregate,
    refined_scalarize,
    trapezoidal_inclusion,
)

KINDS = (
    "plithogenic", "linguistic", "mpolar", "cubic", "refined", "trapezoidal",
    "rough", "plithogenic_rough", "tree", "forest", "nonstandard",
)
RANKABLE = ("plithogenic", "linguistic", "mpolar", "cubic", "refined", "trapezoidal")
# kinds whose document fixes the dominant value itself
SELF_ANCHORED = ("tree", "forest", "nonstandard")


@dataclass(frozen=True)
class ScenarioDocument:
    kind: str
    raw: Mapping[str, Any]
    model: Any
    elements: tuple[Hashable, ...] = ()
    dominant: Hashable | None = None
    params: Mapping[str, Any] = field(default_factory=dict)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ScenarioDocument) and self.raw == other.raw

    __hash__ = None  # type: ignore[assignment]


@dataclass(frozen=True)
class ScenarioResult:
    kind: str
    command: str
    rows: tuple[tuple[str, Any], ...]
    details: tuple[tuple[str, Any], ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return dict(self.rows)


# -- field readers -------------------------------------------------------------

class _Reader:
    """Typed field access that reports the JSON path of the first bad field."""

    def __init__(self, exact: bool) -> None:
        self.exact = exact

    def number(self, v: Any, loc: str) -> Real:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ScenarioError(f"expected a number, got {v!r}", loc)
        if self.exact and isinstance(v, float):
            return Fraction(str(v))
        return v

    def numbers(self, v: Any, loc: str, length: int | None = None) -> tuple[Real, ...]:
        if isinstance(v, (int, float)) and not isinstance(v, bool):
            v = [v]
        if not isinstance(v, list) or not v:
            raise ScenarioError("expected a number or a nonempty list of numbers", loc)
        if length is not None and len(v) != length:
            raise ScenarioError(f"expected {length} numbers, got {len(v)}", loc)
        return tuple(self.number(c, f"{loc}[{i}]") for i, c in enumerate(v))

    def interval(self, v: Any, loc: str) -> IntervalDegree:
        lo, hi = self.numbers(v, loc, 2)
        try:
            return IntervalDegree(lo, hi)
        except UsetError as exc:
            raise ScenarioError(str(exc), loc) from None


def _get(obj: Mapping, key: str, loc: str, kind: type | tuple = object, default: Any = ...) -> Any:
    if key not in obj:
        if default is ...:
            raise ScenarioError(f"missing required field {key!r}", loc)
        return default
    v = obj[key]
    if kind is not object and not isinstance(v, kind):
        names = kind.__name__ if isinstance(kind, type) else "/".join(k.__name__ for k in kind)
        raise ScenarioError(f"expected {names}, got {type(v).__name__}", f"{loc}.{key}")
    return v


def _names(obj: Mapping, key: str, loc: str) -> tuple[str, ...]:
    v = _get(obj, key, loc, list)
    where = f"{loc}.{key}"
    if not v:
        raise ScenarioError("must not be empty", where)
    for i, n in enumerate(v):
        if not isinstance(n, str):
            raise ScenarioError(f"expected a string identifier, got {n!r}", f"{where}[{i}]")
    if len(set(v)) != len(v):
        raise ScenarioError("identifiers must be distinct", where)
    return tuple(v)


def _require_known(name: Any, known: Sequence, loc: str, what: str) -> None:
    if name not in known:
        raise ScenarioError(f"unknown {what} {name!r}", loc)


def _table(rd: _Reader, obj: Mapping, key: str, loc: str, values: tuple, channels: int = 1) -> ContradictionTable:
    """Triples [a, b, c] stored as given; unlisted pairs fall back to their mirror, then zero."""
    rows = _get(obj, key, loc, list, [])
    entries = {}
    for i, row in enumerate(rows):
        where = f"{loc}.{key}[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise ScenarioError("expected [value, value, degree]", where)
        a, b, c = row
        _require_known(a, values, f"{where}[0]", "value")
        _require_known(b, values, f"{where}[1]", "value")
        entries[(a, b)] = rd.numbers(c, f"{where}[2]")
    return ContradictionTable(values, channels, entries)


def _violations_to_error(problems: list, prefix: str = "$") -> None:
    if problems:
        diags = tuple((f"{prefix}.{p.location}", p.message) for p in problems)
        raise ScenarioError(problems[0].message, diags[0][0], diags)


def _wrap(fn: Callable[[], Any], loc: str) -> Any:
    try:
        return fn()
    except ScenarioError:
        raise
    except (UsetError, ValueError, TypeError) as exc:
        raise ScenarioError(str(exc), loc) from None


# -- kind builders -------------------------------------------------------------

def _constraint(rd: _Reader, spec: Any, loc: str) -> ConstraintSpec | None:
    if spec is None:
        return None
    if not isinstance(spec, Mapping):
        raise ScenarioError("expected an object with a 'kind' field", loc)
    kind = _get(spec, "kind", loc, str)
    num = lambda k, d=...: rd.number(_get(spec, k, loc, default=d), f"{loc}.{k}")  # noqa: E731
    builders: dict[str, Callable[[], ConstraintSpec]] = {
        "none": ConstraintSpec.none,
        "ifs": ConstraintSpec.ifs,
        "neutrosophic": ConstraintSpec.neutrosophic,
        "picture": lambda: ConstraintSpec.picture(int(num("t", 2))),
        "spherical": lambda: ConstraintSpec.spherical(num("radius", 1)),
        "t_spherical": lambda: ConstraintSpec.t_spherical(num("t"), num("radius", 1)),
        "q_rung": lambda: ConstraintSpec.q_rung(num("q"), int(num("n", 2))),
        "diophantine": lambda: ConstraintSpec.diophantine(
            num("capacity"), rd.numbers(_get(spec, "coefficients", loc), f"{loc}.coefficients")),
        "band": lambda: ConstraintSpec.band(num("lo"), num("hi")),
    }
    if kind not in builders:
        raise ScenarioError(f"unknown constraint kind {kind!r}", f"{loc}.kind")
    return _wrap(builders[kind], loc)


def _payload(rd: _Reader, kind: str, v: Any, loc: str, band) -> Any:
    if kind == "vector":
        comps = rd.numbers(v, loc)
        return _wrap(lambda: DegreeVector(comps, band), loc)
    items = v if isinstance(v, list) else [v]
    out = []
    for j, item in enumerate(items):
        where = f"{loc}[{j}]"
        if kind == "interval":
            out.append(rd.interval(item, where))
        elif kind == "complex":
            if not isinstance(item, Mapping):
                raise ScenarioError("expected {mod, arg_deg}", where)
            mod = rd.number(_get(item, "mod", where), f"{where}.mod")
            arg = rd.number(_get(item, "arg_deg", where), f"{where}.arg_deg")
            out.append(_wrap(lambda: ComplexDegree.from_degrees(mod, arg), where))
        else:
            if not isinstance(item, Mapping):
                raise ScenarioError("expected {std, eps}", where)
            std = rd.number(_get(item, "std", where), f"{where}.std")
            eps = rd.number(_get(item, "eps", where, default=0), f"{where}.eps")
            out.append(DualDegree(std, eps))
    return tuple(out)


def _element_rows(obj: Mapping, loc: str, elements: tuple) -> Mapping[str, Any]:
    degrees = _get(obj, "degrees", loc, dict)
    for x in degrees:
        _require_known(x, elements, f"{loc}.degrees.{x}", "element")
    return degrees


def _build_plithogenic(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    values = _names(doc, "values", "$")
    elements = _names(doc, "elements", "$")
    kind = _get(doc, "degree_kind", "$", str, "vector")
    if kind not in PAYLOAD_KINDS:
        raise ScenarioError(f"unknown degree kind {kind!r}", "$.degree_kind")
    band = tuple(rd.numbers(_get(doc, "band", "$", default=list(UNIT_BAND)), "$.band", 2))
    channels = int(rd.number(_get(doc, "channels", "$", default=1), "$.channels"))
    fusion = _get(doc, "fusion", "$", str, "mean")
    table = _table(rd, doc, "contradiction", "$", values, channels)
    itable = None
    if "interval_contradiction" in doc:
        rows = _get(doc, "interval_contradiction", "$", list)
        pairs = {}
        for i, row in enumerate(rows):
            where = f"$.interval_contradiction[{i}]"
            if not isinstance(row, list) or len(row) != 3:
                raise ScenarioError("expected [value, value, [lower, upper]]", where)
            _require_known(row[0], values, f"{where}[0]", "value")
            _require_known(row[1], values, f"{where}[1]", "value")
            pairs[(row[0], row[1])] = rd.interval(row[2], f"{where}[2]")
        itable = IntervalContradictionTable.from_pairs(values, pairs)
    constraint = _constraint(rd, doc.get("constraint"), "$.constraint")
    degrees = {}
    for x, row in _element_rows(doc, "$", elements).items():
        if not isinstance(row, Mapping):
            raise ScenarioError("expected an object keyed by value", f"$.degrees.{x}")
        for a, v in row.items():
            _require_known(a, values, f"$.degrees.{x}.{a}", "value")
            degrees.setdefault(x, {})[a] = _payload(rd, kind, v, f"$.degrees.{x}.{a}", band)
    bundle = _wrap(lambda: make_bundle(
        elements, values, degrees, table, attribute=_get(doc, "attribute", "$", str, "v"), kind=kind,
        band=band, channels=channels, fusion=fusion, constraint=constraint, interval_contradiction=itable), "$")
    _violations_to_error(validate_bundle(bundle))
    return bundle, {"elements": elements}


def _build_linguistic(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    terms = _wrap(lambda: TermSet(_names(doc, "terms", "$")), "$.terms")
    elements = _names(doc, "elements", "$")
    payloads: dict[str, dict] = {}
    for x, row in _element_rows(doc, "$", elements).items():
        base = f"$.degrees.{x}"
        if isinstance(row, Mapping):
            items = [([k], v, f"{base}.{k}") for k, v in row.items()]
        elif isinstance(row, list):
            items = []
            for i, entry in enumerate(row):
                where = f"{base}[{i}]"
                if not isinstance(entry, Mapping):
                    raise ScenarioError("expected {terms, degree}", where)
                items.append((_get(entry, "terms", where, list), _get(entry, "degree", where), f"{where}.degree"))
        else:
            raise ScenarioError("expected an object keyed by term or a list of {terms, degree}", base)
        out = {}
        for labels, v, where in items:
            for lab in labels:
                _require_known(lab, terms.labels, where, "term")
            key = labels[0] if len(labels) == 1 else frozenset(labels)
            comps = rd.numbers(v, where)
            out[key] = comps if len(comps) > 1 else comps[0]
        payloads[x] = out
    for x in elements:
        if x not in payloads:
            raise ScenarioError("missing entry", f"$.degrees.{x}")
    return (terms, payloads), {"elements": elements}


def _build_mpolar(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    values = _names(doc, "values", "$")
    poles = _names(doc, "poles", "$")
    elements = _names(doc, "elements", "$")
    vt = _table(rd, doc, "contradiction", "$", values)
    pt = _table(rd, doc, "pole_contradiction", "$", poles)
    _violations_to_error(vt.violations("contradiction") + pt.violations("pole_contradiction"))
    entries = {}
    for x, row in _element_rows(doc, "$", elements).items():
        for a, per_pole in row.items():
            where = f"$.degrees.{x}.{a}"
            _require_known(a, values, where, "value")
            if not isinstance(per_pole, list) or len(per_pole) != len(poles):
                raise ScenarioError(f"expected one degree per pole ({len(poles)})", where)
            entries[(x, a)] = tuple(
                _wrap(lambda v=v, i=i: DegreeVector(rd.numbers(v, f"{where}[{i}]")), f"{where}[{i}]")
                for i, v in enumerate(per_pole))
    for x in elements:
        for a in values:
            if (x, a) not in entries:
                raise ScenarioError("missing entry", f"$.degrees.{x}.{a}")
    fusion = _get(doc, "fusion", "$", str, "mean")
    bundle = _wrap(lambda: MPolarBundle(elements, vt, PoleSystem(poles, pt), entries, fusion), "$")
    pole = _get(doc, "dominant_pole", "$", str, poles[0])
    _require_known(pole, poles, "$.dominant_pole", "pole")
    return bundle, {"elements": elements, "dominant_pole": pole}


def _valued_rows(rd: _Reader, doc: Mapping, parse: Callable[[Any, str], Any]) -> tuple:
    values = _names(doc, "values", "$")
    elements = _names(doc, "elements", "$")
    table = _table(rd, doc, "contradiction", "$", values)
    _violations_to_error(table.violations())
    payloads: dict = {}
    for x, row in _element_rows(doc, "$", elements).items():
        if not isinstance(row, Mapping):
            raise ScenarioError("expected an object keyed by value", f"$.degrees.{x}")
        for a, v in row.items():
            _require_known(a, values, f"$.degrees.{x}.{a}", "value")
            payloads.setdefault(x, {})[a] = parse(v, f"$.degrees.{x}.{a}")
    for x in elements:
        if x not in payloads:
            raise ScenarioError("missing entry", f"$.degrees.{x}")
    return values, elements, table, payloads


def _build_cubic(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    def parse(v, loc):
        if not isinstance(v, Mapping):
            raise ScenarioError("expected {intervals, point}", loc)
        ivs = _get(v, "intervals", loc, list)
        intervals = tuple(rd.interval(iv, f"{loc}.intervals[{i}]") for i, iv in enumerate(ivs))
        point = rd.numbers(_get(v, "point", loc), f"{loc}.point")
        return _wrap(lambda: CubicDegree(intervals, DegreeVector(point)), loc)

    values, elements, table, payloads = _valued_rows(rd, doc, parse)
    return (table, payloads), {"elements": elements}


def _build_refined(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    sig_raw = rd.numbers(_get(doc, "signature", "$"), "$.signature", 3)
    sig = _wrap(lambda: RefinedSignature(*(int(s) for s in sig_raw)), "$.signature")
    weights = rd.numbers(_get(doc, "score_weights", "$", default=[1, 0, 0]), "$.score_weights", 3)
    values, elements, table, payloads = _valued_rows(
        rd, doc, lambda v, loc: _wrap(lambda: DegreeVector(rd.numbers(v, loc, sig.size)), loc))
    return (table, payloads, sig), {"elements": elements, "score_weights": weights}


def _build_trapezoidal(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    values = _names(doc, "values", "$")
    elements = _names(doc, "elements", "$")
    table = _table(rd, doc, "contradiction", "$", values)
    _violations_to_error(table.violations())
    beta = rd.number(_get(doc, "beta", "$", default=0.5), "$.beta")
    entries = {}
    for x, row in _element_rows(doc, "$", elements).items():
        loc = f"$.degrees.{x}"
        if not isinstance(row, Mapping):
            raise ScenarioError("expected {T, I, F}", loc)
        parts = []
        for comp in ("T", "I", "F"):
            pts = rd.numbers(_get(row, comp, loc), f"{loc}.{comp}", 4)
            parts.append(_wrap(lambda pts=pts: TrapezoidalNumber(*pts), f"{loc}.{comp}"))
        entries[x] = TrapTripleDegree(*parts)
    for x in elements:
        if x not in entries:
            raise ScenarioError("missing entry", f"$.degrees.{x}")
    return (table, entries), {"elements": elements, "beta": beta}


def _build_rough(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    universe = _names(doc, "universe", "$")
    blocks_raw = _get(doc, "blocks", "$", list)
    blocks = []
    for i, blk in enumerate(blocks_raw):
        where = f"$.blocks[{i}]"
        if not isinstance(blk, list) or not blk:
            raise ScenarioError("expected a nonempty list of elements", where)
        for j, e in enumerate(blk):
            _require_known(e, universe, f"{where}[{j}]", "element")
        blocks.append(frozenset(blk))
    ctx = _wrap(lambda: RoughContext(FiniteUniverse(universe), tuple(blocks)), "$.blocks")
    return ctx, {"elements": universe}


def _pair_rows(rd: _Reader, doc: Mapping, key: str, universe: tuple) -> dict:
    out = {}
    for i, row in enumerate(_get(doc, key, "$", list, [])):
        where = f"$.{key}[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise ScenarioError("expected [element, element, degree]", where)
        _require_known(row[0], universe, f"{where}[0]", "element")
        _require_known(row[1], universe, f"{where}[1]", "element")
        out[(row[0], row[1])] = rd.number(row[2], f"{where}[2]")
    return out


def _build_plithogenic_rough(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    universe = _names(doc, "universe", "$")
    app = _pair_rows(rd, doc, "appurtenance", universe)
    con = _pair_rows(rd, doc, "contradiction", universe)
    rel = _wrap(lambda: PlithogenicRelation(FiniteUniverse(universe), app, con), "$")
    return rel, {"elements": universe}


def _tree_parts(rd: _Reader, doc: Mapping):
    labels = _names(doc, "labels", "$")
    table = _table(rd, doc, "contradiction", "$", labels)
    _violations_to_error(table.violations())
    steps = []
    for i, row in enumerate(_get(doc, "thresholds", "$", list)):
        where = f"$.thresholds[{i}]"
        if not isinstance(row, list) or len(row) != 2:
            raise ScenarioError("expected [label, floor]", where)
        _require_known(row[0], labels, f"{where}[0]", "label")
        steps.append((row[0], rd.number(row[1], f"{where}[1]")))
    fallback = _get(doc, "fallback", "$", str)
    _require_known(fallback, labels, "$.fallback", "label")
    rule = _wrap(lambda: ThresholdRule(tuple(steps), fallback), "$.thresholds")
    dominant = _get(doc, "dominant", "$", str)
    _require_known(dominant, labels, "$.dominant", "label")
    return labels, table, rule, dominant, _get(doc, "fusion", "$", str, "mean")


def _node(rd: _Reader, v: Any, loc: str, labels: tuple):
    if not isinstance(v, Mapping):
        raise ScenarioError("expected a node object", loc)
    name = _get(v, "name", loc, str)
    if "children" in v:
        kids = _get(v, "children", loc, list)
        if not kids:
            raise ScenarioError("an inner node needs children", f"{loc}.children")
        return _wrap(lambda: TreeNode(name, tuple(
            _node(rd, c, f"{loc}.children[{i}]", labels) for i, c in enumerate(kids))), loc)
    label = _get(v, "label", loc, str)
    _require_known(label, labels, f"{loc}.label", "label")
    degree = rd.number(_get(v, "degree", loc), f"{loc}.degree")
    if not 0 <= degree <= 1:
        raise ScenarioError(f"degree {degree} outside [0, 1]", f"{loc}.degree")
    return TreeLeaf(name, label, degree)


def _build_tree(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    labels, table, rule, dominant, fusion = _tree_parts(rd, doc)
    root = _node(rd, _get(doc, "root", "$"), "$.root", labels)
    tree = _wrap(lambda: AttributeTree(root, table, dominant, rule, fusion), "$")
    return tree, {"dominant": dominant}


def _build_forest(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    labels, table, rule, dominant, fusion = _tree_parts(rd, doc)
    roots = _get(doc, "trees", "$", list)
    if not roots:
        raise ScenarioError("a forest needs at least one tree", "$.trees")
    trees = tuple(AttributeTree(_node(rd, r, f"$.trees[{i}]", labels), table, dominant, rule, fusion)
                  for i, r in enumerate(roots))
    forest = _wrap(lambda: AttributeForest(trees, dominant), "$")
    return forest, {"dominant": dominant}


def _build_nonstandard(rd: _Reader, doc: Mapping) -> tuple[Any, dict]:
    raw = _get(doc, "values", "$", list)
    if not raw:
        raise ScenarioError("must not be empty", "$.values")
    values = _payload(rd, "dual", raw, "$.values", UNIT_BAND)
    cs = _get(doc, "contradictions", "$", list, [])
    contradictions = tuple(rd.number(c, f"$.contradictions[{i}]") for i, c in enumerate(cs))
    for i, c in enumerate(contradictions):
        if not 0 <= c <= 1:
            raise ScenarioError(f"contradiction {c} outside [0, 1]", f"$.contradictions[{i}]")
    if len(contradictions) != len(values) - 1:
        raise ScenarioError(f"{len(values)} values need {len(values) - 1} contradiction degrees",
                            "$.contradictions")
    return (values, contradictions), {}


BUILDERS: dict[str, Callable[[_Reader, Mapping], tuple[Any, dict]]] = {
    "plithogenic": _build_plithogenic,
    "linguistic": _build_linguistic,
    "mpolar": _build_mpolar,
    "cubic": _build_cubic,
    "refined": _build_refined,
    "trapezoidal": _build_trapezoidal,
    "rough": _build_rough,
    "plithogenic_rough": _build_plithogenic_rough,
    "tree": _build_tree,
    "forest": _build_forest,
    "nonstandard": _build_nonstandard,
}


def parse_scenario(doc: Any) -> ScenarioDocument:
    if not isinstance(doc, Mapping):
        raise ScenarioError("a scenario must be a JSON object", "$")
    kind = _get(doc, "kind", "$", str)
    if kind not in BUILDERS:
        raise ScenarioError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}", "$.kind")
    rd = _Reader(bool(_get(doc, "exact", "$", bool, False)))
    model, params = BUILDERS[kind](rd, doc)
    elements = params.pop("elements", ())
    dominant = params.pop("dominant", None)
    if dominant is None and "dominant" in doc:
        dominant = doc["dominant"]
    return ScenarioDocument(kind, doc, model, tuple(elements), dominant, params)


def load_scenario_text(text: str) -> ScenarioDocument:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} column {exc.colno}") from None
    return parse_scenario(doc)


def load_scenario(path: str | Path) -> ScenarioDocument:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read file: {exc.strerror}", str(path)) from None
    return load_scenario_text(text)


def emit_scenario(doc: ScenarioDocument) -> str:
    return json.dumps(doc.raw, indent=2, ensure_ascii=False) + "\n"


# -- running -------------------------------------------------------------------

def _resolve_dominant(doc: ScenarioDocument, dominant: Hashable | None) -> Hashable:
    d = dominant if dominant is not None else doc.dominant
    if d is None:
        raise ScenarioError("this command needs a dominant value (--dominant or a 'dominant' field)")
    return d


def _weights_detail(weights: Mapping) -> tuple[tuple[str, Any], ...]:
    return tuple((f"weight[{a}]", w) for a, w in weights.items())


def _tree_trace(r: NodeResult, prefix: str = "") -> list[tuple[str, Any]]:
    path = f"{prefix}/{r.name}" if prefix else r.name
    rows = [(f"{path} [{r.label}] w={float(r.weight):.4f}", r.degree)]
    for k in r.children:
        rows.extend(_tree_trace(k, path))
    return rows


def _aggregate(doc: ScenarioDocument, dominant: Hashable | None) -> ScenarioResult:
    kind, m = doc.kind, doc.model
    if kind == "plithogenic":
        d = _resolve_dominant(doc, dominant)
        _require_known(d, m.values, "--dominant", "value")
        rows = tuple((x, aggregate_dominant(m, x, d)) for x in doc.elements)
        w = (interval_compatibility_weights(m, d) if m.appurtenance.kind == "interval"
             else compatibility_weights(m, d))
        return ScenarioResult(kind, "aggregate", rows, _weights_detail(w) + (("band", classify_band(m)),))
    if kind == "linguistic":
        terms, payloads = m
        d = _resolve_dominant(doc, dominant)
        d = d if isinstance(d, str) and "," not in d else frozenset(_split(d))
        for lab in ([d] if isinstance(d, str) else d):
            _require_known(lab, terms.labels, "--dominant", "term")
        rows = tuple((x, linguistic_aggregate(payloads[x], terms, d)) for x in doc.elements)
        return ScenarioResult(kind, "aggregate", rows)
    if kind == "mpolar":
        d = _resolve_dominant(doc, dominant)
        _require_known(d, m.value_contradiction.values, "--dominant", "value")
        pole = doc.params["dominant_pole"]
        rows = tuple((f"{x}.{a}", mpolar_aggregate(m, x, a, d, pole)[0])
                     for x in doc.elements for a in m.value_contradiction.values)
        details = tuple((f"pole_weights[{a}]", mpolar_weights(m, a, d, pole)) for a in m.value_contradiction.values)
        return ScenarioResult(kind, "aggregate", rows, details)
    if kind == "cubic":
        table, payloads = m
        d = _resolve_dominant(doc, dominant)
        _require_known(d, table.values, "--dominant", "value")
        return ScenarioResult(kind, "aggregate", tuple((x, cubic_aggregate(payloads[x], table, d)) for x in doc.elements))
    if kind == "refined":
        table, payloads, sig = m
        d = _resolve_dominant(doc, dominant)
        _require_known(d, table.values, "--dominant", "value")
        rows, details = [], []
        for x in doc.elements:
            deg = refined_aggregate(payloads[x], table, d, sig)
            rows.append((x, deg))
            details.append((f"score[{x}]", refined_scalarize(deg, sig, doc.params["score_weights"])))
        return ScenarioResult(kind, "aggregate", tuple(rows), tuple(details))
    if kind == "trapezoidal":
        table, entries = m
        d = _resolve_dominant(doc, dominant)
        _require_known(d, table.values, "--dominant", "value")
        grades = [(x, trapezoidal_inclusion(entries[x], table, d, doc.params["beta"])) for x in doc.elements]
        details = (("contradiction_level", grades[0][1].contradiction_level),) if grades else ()
        return ScenarioResult(kind, "aggregate", tuple((x, g.value) for x, g in grades), details)
    if kind == "tree":
        trace = evaluate_tree(m)
        return ScenarioResult(kind, "aggregate", (("root", trace.degree), ("label", trace.label)),
                              tuple(_tree_trace(trace)))
    if kind == "forest":
        details = []
        for t in m.trees:
            details.extend(_tree_trace(evaluate_tree(t)))
        return ScenarioResult(kind, "aggregate", (("forest", forest_aggregate(m)),), tuple(details))
    if kind == "nonstandard":
        values, cs = m
        out = nonstandard_aggregate(values, cs)
        return ScenarioResult(kind, "aggregate", (("aggregate", out), ("standard_part", standard_part(out))))
    raise ScenarioError(f"aggregate is not defined for kind {kind!r}")


def _split(s: Any) -> list:
    if isinstance(s, str):
        return [p.strip() for p in s.split(",") if p.strip()]
    return list(s)


def _rough(doc: ScenarioDocument, target: Any) -> ScenarioResult:
    if target is None:
        target = doc.raw.get("target")
    if target is None:
        raise ScenarioError("this command needs a target set (--target or a 'target' field)")
    chosen = _split(target)
    for e in chosen:
        _require_known(e, doc.elements, "--target", "element")
    if doc.kind == "rough":
        r = rough_approximate(doc.model, chosen)
        rows = (("lower", r.lower), ("upper", r.upper), ("boundary", r.boundary),
                ("accuracy", r.accuracy), ("coverage", r.coverage))
        return ScenarioResult(doc.kind, "rough", rows)
    if doc.kind == "plithogenic_rough":
        lo, up = plithogenic_lower(doc.model, chosen), plithogenic_upper(doc.model, chosen)
        rows = tuple(row for x in doc.elements for row in ((f"lower[{x}]", lo[x]), (f"upper[{x}]", up[x])))
        return ScenarioResult(doc.kind, "rough", rows)
    raise ScenarioError(f"rough is not defined for kind {doc.kind!r}")


def run_scenario(
    doc: ScenarioDocument, command: str = "aggregate", *, dominant: Hashable | None = None, target: Any = None
) -> ScenarioResult:
    if command == "aggregate":
        if doc.kind in ("rough", "plithogenic_rough"):
            raise ScenarioError(f"kind {doc.kind!r} is run with the rough command")
        return _aggregate(doc, dominant)
    if command == "rough":
        return _rough(doc, target)
    if command == "rank":
        return ScenarioResult(doc.kind, "rank", tuple(rank(doc, dominant)))
    raise ScenarioError(f"unknown command {command!r}")


def _score(v: Any) -> Real:
    """Scalar used for ranking: the leading component of whatever the kind aggregates to."""
    if isinstance(v, DegreeVector):
        return v.components[0]
    if isinstance(v, CubicDegree):
        return v.point.components[0]
    if isinstance(v, tuple):
        return _score(v[0])
    if isinstance(v, ComplexDegree):
        return v.modulus
    if isinstance(v, IntervalResult):
        return (v.lower + v.upper) / 2
    if isinstance(v, DualDegree):
        return v.standard
    return v


def rank(doc: ScenarioDocument, dominant: Hashable | None = None) -> list[tuple[Hashable, Real]]:
    """Elements by descending score; ties keep input order."""
    if doc.kind not in RANKABLE:
        raise ScenarioError(f"kind {doc.kind!r} does not reduce to one score per element")
    if doc.kind == "refined":
        table, payloads, sig = doc.model
        d = _resolve_dominant(doc, dominant)
        _require_known(d, table.values, "--dominant", "value")
        scores = [(x, refined_scalarize(refined_aggregate(payloads[x], table, d, sig), sig,
                                        doc.params["score_weights"])) for x in doc.elements]
    elif doc.kind == "mpolar":
        d = _resolve_dominant(doc, dominant)
        _require_known(d, doc.model.value_contradiction.values, "--dominant", "value")
        scores = [(x, mpolar_aggregate(doc.model, x, d, d, doc.params["dominant_pole"])[0]) for x in doc.elements]
    else:
        scores = [(x, _score(v)) for x, v in _aggregate(doc, dominant).rows]
    return sorted(scores, key=lambda t: -t[1])


def validate_scenario(doc: ScenarioDocument) -> list[tuple[str, str]]:
    """Post-load invariant check; empty for any document that loaded."""
    if isinstance(doc.model, PlithogenicBundle):
        return [(f"$.{v.location}", v.message) for v in validate_bundle(doc.model)]
    return []


# -- rendering -----------------------------------------------------------------

def format_number(v: Real, precision: int) -> str:
    return f"{float(v):.{precision}f}"


def render_value(v: Any, precision: int) -> str:
    if isinstance(v, bool) or isinstance(v, str):
        return str(v)
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{format_number(v, precision)} ({v})"
    if isinstance(v, Real):
        return format_number(v, precision)
    if isinstance(v, DegreeVector):
        return "(" + ", ".join(format_number(c, precision) for c in v.components) + ")"
    if isinstance(v, (IntervalResult, IntervalDegree)):
        return f"[{format_number(v.lower, precision)}, {format_number(v.upper, precision)}]"
    if isinstance(v, ComplexDegree):
        return f"{format_number(v.modulus, precision)} @ {format_number(v.degrees, precision)} deg"
    if isinstance(v, DualDegree):
        sign = "-" if v.infinitesimal < 0 else "+"
        return f"{format_number(v.standard, precision)} {sign} {format_number(abs(v.infinitesimal), precision)}e"
    if isinstance(v, CubicDegree):
        return "<" + ", ".join(render_value(iv, precision) for iv in v.intervals) + "; " + \
            render_value(v.point, precision) + ">"
    if isinstance(v, (set, frozenset)):
        return "{" + ", ".join(sorted(map(str, v))) + "}"
    if isinstance(v, tuple):
        return "(" + ", ".join(render_value(p, precision) for p in v) + ")"
    return str(v)


def render_result(result: ScenarioResult, precision: int, verbose: bool = False) -> str:
    lines = [f"{label}\t{render_value(v, precision)}" for label, v in result.rows]
    if verbose:
        lines += [f"# {label}\t{render_value(v, precision)}" for label, v in result.details]
    return "\n".join(lines) + "\n"
