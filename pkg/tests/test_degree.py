import math
from fractions import Fraction as F

import pytest

from uset.degree import (
    ComplexDegree,
    ConstraintSpec,
    DegreeVector,
    DualDegree,
    IntervalDegree,
    TrapezoidalNumber,
    TriangularNumber,
    complex_weighted_mean,
    defuzzify,
    dual_blend,
    interval_weighted_mean,
    require_constraint,
    shaped_membership,
    standard_part,
    validate_constraint,
    weighted_average,
    weighted_mean,
)
from uset.errors import ConstraintViolation, DomainError, ShapeError

from oracles import complex_mean, weighted_rows


def test_weighted_average_matches_hand_formula():
    assert weighted_average([.2, .8], [1, 3]) == pytest.approx((.2 + 2.4) / 4, abs=1e-12)


def test_weighted_average_all_zero_weights_is_zero():
    assert weighted_average([.4, .9], [0, 0]) == 0


def test_weighted_average_rejects_negative_and_mismatched_weights():
    with pytest.raises(DomainError):
        weighted_average([.1, .2], [1, -1])
    with pytest.raises(ShapeError):
        weighted_average([.1, .2], [1])


def test_weighted_mean_rental_row_against_oracle():
    rows = [(.85, .05, .10), (.90, .05, .10), (.40, .20, .60)]
    got = weighted_mean([DegreeVector(r) for r in rows], [.7, 1, .5])
    assert got.components == pytest.approx(weighted_rows(rows, [.7, 1, .5]), abs=1e-12)


def test_weighted_mean_is_exact_on_fractions():
    got = weighted_mean([DegreeVector((F(1, 3),)), DegreeVector((F(1, 2),))], [F(1), F(1, 2)])
    assert got.components == (F(7, 18),)


def test_degree_vector_rejects_out_of_band_and_nan():
    with pytest.raises(DomainError):
        DegreeVector((1.2,))
    with pytest.raises(DomainError):
        DegreeVector((math.nan,))
    assert DegreeVector((1.2,), (-0.5, 1.5)).components == (1.2,)


def test_weighted_mean_rejects_mixed_arity():
    with pytest.raises(ShapeError):
        weighted_mean([DegreeVector((.1, .2)), DegreeVector((.3,))], [1, 1])


def test_interval_mean_scheduling_bounds():
    vals = [IntervalDegree(.5, .7), IntervalDegree(.6, .85), IntervalDegree(.4, .65)]
    ws = [IntervalDegree(.7, .8), IntervalDegree(1, 1), IntervalDegree(.5, .7)]
    r = interval_weighted_mean(vals, ws)
    lo = (.7 * .5 + 1 * .6 + .5 * .4) / (.8 + 1 + .7)
    hi = (.8 * .7 + 1 * .85 + .7 * .65) / (.7 + 1 + .5)
    assert (r.lower, r.upper) == pytest.approx((lo, hi), abs=1e-12)
    assert not r.exceeds_unit


def test_interval_rejects_inverted_bounds():
    with pytest.raises(DomainError):
        IntervalDegree(.6, .5)


def test_complex_mean_matches_rectangular_oracle():
    pairs = [(.65, 10), (.5, 70), (.85, 20)]
    got = complex_weighted_mean([ComplexDegree.from_degrees(*p) for p in pairs], [.45, .7, 1])
    _, mod, phase = complex_mean(pairs, [.45, .7, 1])
    assert got.modulus == pytest.approx(mod, abs=1e-12)
    assert got.degrees == pytest.approx(phase, abs=1e-9)


def test_complex_argument_is_normalised():
    assert ComplexDegree(0.5, -math.pi / 2).degrees == pytest.approx(270)
    with pytest.raises(DomainError):
        ComplexDegree(1.1, 0)


def test_dual_blend_keeps_infinitesimal_part_exact():
    out = dual_blend(DualDegree(F("0.94"), 1), DualDegree(F("0.68"), -1), F("0.3"))
    assert out == DualDegree(F("0.758"), F("-0.4"))
    assert standard_part(out) == F("0.758")


def test_dual_order_is_lexicographic():
    assert DualDegree(.5, -1) < DualDegree(.5, 0) < DualDegree(.6, -5)


@pytest.mark.parametrize("x,expected", [(F(18), F(1, 3)), (F(22), F(1)), (F(27), F(1, 6)), (F(10), F(0))])
def test_triangular_membership(x, expected):
    assert shaped_membership(x, (F(16), F(22), F(28))) == expected


def test_trapezoid_membership_plateau_and_flanks():
    pts = (200, 400, 1200, 1600)
    assert [shaped_membership(x, pts) for x in (300, 900, 1400, 1700)] == [.5, 1, .5, 0]


def test_membership_rejects_unordered_breakpoints():
    with pytest.raises(DomainError):
        shaped_membership(1, (3, 2, 4))
    with pytest.raises(ShapeError):
        shaped_membership(1, (1, 2))


def test_defuzzify_means_breakpoints():
    assert defuzzify(TriangularNumber(F(1, 10), F(2, 10), F(6, 10))) == F(3, 10)
    assert defuzzify(TrapezoidalNumber(F(1, 2), F(3, 5), F(4, 5), F(9, 10))) == F(7, 10)


@pytest.mark.parametrize("spec,deg,ok", [
    (ConstraintSpec.ifs(), (.6, .4), True),
    (ConstraintSpec.ifs(), (.6, .5), False),
    (ConstraintSpec.neutrosophic(), (1, 1, 1), True),
    (ConstraintSpec.picture(2), (.5, .3, .3), False),
    (ConstraintSpec.spherical(), (.9, .2, .1), True),
    (ConstraintSpec.spherical(math.sqrt(3)), (.3, .8, .9), True),
    (ConstraintSpec.spherical(), (.3, .8, .9), False),
    (ConstraintSpec.t_spherical(3), (.8, .3, .2), True),
    (ConstraintSpec.q_rung(3, 2), (.9, .6), True),
    (ConstraintSpec.q_rung(2, 2), (.9, .6), False),
    (ConstraintSpec.band(-.5, 1.5), (1.4, -.1), True),
])
def test_constraint_kinds(spec, deg, ok):
    assert validate_constraint(deg, spec).ok is ok


def test_diophantine_battery_is_exact():
    spec = ConstraintSpec.diophantine(F(2), (F(1), F(1, 2), F(1, 2)))
    rep = validate_constraint((F("0.90"), F("0.05"), F("0.10")), spec)
    assert rep.ok and rep.measured == F("0.975")


def test_constraint_arity_and_parameter_checks():
    with pytest.raises(ShapeError):
        validate_constraint((.1, .2), ConstraintSpec.neutrosophic())
    with pytest.raises(DomainError):
        ConstraintSpec.q_rung(0)
    with pytest.raises(DomainError):
        ConstraintSpec("mystery")


def test_require_constraint_raises_with_location():
    with pytest.raises(ConstraintViolation, match="cell"):
        require_constraint((.7, .6), ConstraintSpec.ifs(), "cell")
