from fractions import Fraction as F

import pytest

from uset.classic import FiniteUniverse, GradedSet
from uset.degree import DegreeVector
from uset.errors import ConstraintViolation, DomainError
from uset.reductions import (
    REDUCTION_CASES,
    check_reductions,
    embed_classical,
    hfs_to_hps,
    hns_to_hps,
    hps_to_hfs,
    hps_to_hns,
    picture_fuzzy_embed,
    picture_fuzzy_project,
    picture_neutrosophic_embed,
    picture_neutrosophic_project,
    project_classical,
    sfs_to_sps,
    sns_to_sps,
    sps_to_sfs,
    sps_to_sns,
    spherical_to_tspherical,
)


@pytest.mark.parametrize("seed", [0, 20261017])
def test_every_reduction_round_trips_on_a_thousand_seeded_instances(seed):
    outcomes = check_reductions(seed, 1000)
    assert [o.name for o in outcomes] == [c.name for c in REDUCTION_CASES]
    assert len(outcomes) == 6
    for o in outcomes:
        assert o.instances == 1000
        assert o.failures == 0, o.first_failure


def test_same_seed_same_outcome():
    assert check_reductions(5, 50) == check_reductions(5, 50)


def test_classical_round_trip_is_exact_with_fractions():
    u = FiniteUniverse(("a", "b"))
    g = GradedSet(u, "ifs", {"a": DegreeVector((F(1, 3), F(1, 2))), "b": DegreeVector((F(0), F(1)))})
    assert project_classical(embed_classical(g), "ifs") == g


def test_hesitant_round_trips():
    h = {"a": frozenset({F(1, 5), F(1, 2)}), "b": frozenset({F(1)})}
    assert hps_to_hfs(hfs_to_hps(h)) == h
    n = {"a": frozenset({(F(1, 2), F(1, 4), F(1, 3))})}
    assert hps_to_hns(hns_to_hps(n)) == n
    with pytest.raises(DomainError):
        hfs_to_hps({"a": frozenset({F(3, 2)})})


def test_spherical_round_trips_and_radius_guard():
    t = {"a": (F(1, 2), F(1, 2), F(1, 2))}
    assert sps_to_sfs(sfs_to_sps(t)) == t
    big = {"a": (.9, .9, .9)}
    with pytest.raises(ConstraintViolation):
        sfs_to_sps(big)
    assert sps_to_sns(sns_to_sps(big)) == big
    restated = spherical_to_tspherical(sfs_to_sps(t))
    assert restated.constraint.kind == "t_spherical" and restated.constraint.exponent == 2
    assert restated.appurtenance == sfs_to_sps(t).appurtenance


def test_picture_round_trips():
    src = {"a": (F(1, 2), F(1, 5), F(1, 5))}
    assert picture_fuzzy_project(picture_fuzzy_embed(src)) == src
    neu = {"a": (F(9, 10), F(1, 2), F(4, 5))}
    assert picture_neutrosophic_project(picture_neutrosophic_embed(neu)) == neu
    with pytest.raises(DomainError):
        picture_neutrosophic_project(picture_fuzzy_embed(src))
