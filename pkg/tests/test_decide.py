import random

import pytest

from saturable.decide import decide_saturable, sticky_screen
from saturable.errors import CandidateNotBetween, UnsupportedHilbertFunction, WrongCharacteristic
from saturable.ideal import Ideal, ideal, saturate
from saturable.oracles import dense_contains
from saturable.replication import (
    FIVE_NOT_SATURABLE,
    FIVE_SATURABLE,
    FOUR_NOT_SATURABLE,
    FOUR_SATURABLE,
    change_ideal,
    five_collinear,
    four_collinear,
    line_and_point,
    partial_ideal,
    random_gl,
    three_points_ideal,
)
from saturable.ring import GradedRing


def _square_in(I):
    """(I^sat)^2_2 in I by the dense oracle."""
    Isat = saturate(I)
    lin = Isat.degree_piece(1)
    return all(dense_contains(I.generators, p * q, I.ring) for p in lin for q in lin)


def test_three_points():
    assert decide_saturable(three_points_ideal()).outcome == "Saturable"


def test_four_points_fixtures_by_oracle():
    assert _square_in(four_collinear(FOUR_SATURABLE))
    assert not _square_in(four_collinear(FOUR_NOT_SATURABLE))


def test_four_points():
    assert decide_saturable(four_collinear(FOUR_SATURABLE)).outcome == "Saturable"
    v = decide_saturable(four_collinear(FOUR_NOT_SATURABLE))
    assert v.outcome == "NotSaturable"
    assert any(c.get("holds") is False for c in v.certificates if isinstance(c, dict))


def test_four_points_after_coordinate_change():
    rng = random.Random(11)
    I = four_collinear(FOUR_NOT_SATURABLE)
    for _ in range(3):
        assert decide_saturable(change_ideal(I, random_gl(rng, 4))).outcome == "NotSaturable"


def test_five_points_on_a_line():
    assert decide_saturable(five_collinear(*FIVE_SATURABLE)).outcome == "Saturable"
    assert decide_saturable(five_collinear(*FIVE_NOT_SATURABLE)).outcome == "NotSaturable"


def test_line_and_point():
    assert decide_saturable(line_and_point("x0*x3")).outcome == "Saturable"
    assert decide_saturable(line_and_point("x0*x1")).outcome == "NotSaturable"


def test_saturated_input(S):
    # three coordinate points: H = (1,3,3,...) and already saturated
    assert decide_saturable(ideal(S, "a0*a1, a0*a2, a1*a2")).outcome == "Saturated"


def test_unsupported(S):
    with pytest.raises(UnsupportedHilbertFunction):
        decide_saturable(partial_ideal())


def test_characteristic():
    R = GradedRing(["a0", "a1", "a2"], characteristic=5)
    I = Ideal(R, [R.parse(g) for g in ("a0*a1", "a1^2", "a1*a2", "a0^2*a2 - a0*a2^2")])
    with pytest.raises(WrongCharacteristic):
        decide_saturable(I)


def test_sticky_screen():
    I = four_collinear(FOUR_NOT_SATURABLE)
    rep = sticky_screen(I, [saturate(I)])
    assert rep["outcome"] == "Obstructed" and rep["route"] == "obfib_vanishes"
    with pytest.raises(CandidateNotBetween):
        sticky_screen(I, [I])
    rep = sticky_screen(partial_ideal(), [saturate(partial_ideal())])
    assert rep["outcome"] == "Inconclusive"
    assert rep["entries"][0]["hom_cokernel"] == 1
