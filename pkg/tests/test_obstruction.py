import pytest

from saturable.errors import HypothesesNotMet
from saturable.ideal import ideal, saturate
from saturable.obstruction import (
    hom0,
    hom0_table,
    obfib_dimension,
    obfib_table,
    restriction_cokernel,
    underived_hom,
    verdict,
)
from saturable.replication import (
    BB_HOM,
    BB_OBFIB,
    FOUR_NOT_SATURABLE,
    FOUR_SATURABLE,
    THREE_POINTS_SAT,
    bb_ideal,
    four_collinear,
    partial_ideal,
    three_points_ideal,
)
from saturable.ring import GradedRing


def test_hom_principal():
    R = GradedRing(["a0", "a1"])
    K = ideal(R, "a0")
    rep = hom0(K, K)
    assert rep.dimension == 1


def test_hom_images_respect_relations(S):
    K = ideal(S, "a0, a1")
    rep = hom0(K, K)
    # Hom((a0,a1), S/(a0,a1))_0 = Hom(k(-1)^2 / ..., ...) has dimension 2 * dim S_1/(a0,a1)_1 = 2
    assert rep.dimension == 2


def test_three_points_obfib(S):
    rep = obfib_dimension(three_points_ideal())
    assert rep.dimension == 1 and rep.method == "gorenstein_formula" and rep.jump_degree == 1


def test_three_points_underived_agrees():
    I = three_points_ideal()
    assert underived_hom(I) == obfib_dimension(I).dimension


def test_saturated_has_no_obstruction(S):
    rep = obfib_dimension(ideal(S, THREE_POINTS_SAT))
    assert rep.dimension == 0 and rep.method == "saturated"


def test_four_points_obfib_vanishes_iff_containment_fails():
    bad = four_collinear(FOUR_NOT_SATURABLE)
    good = four_collinear(FOUR_SATURABLE)
    assert obfib_dimension(bad).dimension == 0
    assert obfib_dimension(good).dimension > 0


def test_partial_cokernel_and_hypotheses():
    I = partial_ideal()
    Isat = saturate(I)
    assert restriction_cokernel(Isat, I, Isat) == 1
    with pytest.raises(HypothesesNotMet):
        obfib_dimension(I)
    assert obfib_dimension(I, method="underived_hom").dimension >= 1


def test_bb_tables():
    I = bb_ideal()
    assert obfib_table(I) == BB_OBFIB
    assert hom0_table(I, I) == BB_HOM


def test_verdicts(S):
    assert verdict(ideal(S, THREE_POINTS_SAT)).outcome == "Saturated"
    v = verdict(three_points_ideal())
    assert v.outcome == "Inconclusive" and v.obfib.dimension == 1
    v = verdict(four_collinear(FOUR_NOT_SATURABLE))
    assert v.outcome == "EntirelyNonsaturable"
    assert v.certificates
