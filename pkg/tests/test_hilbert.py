import pytest

from saturable.errors import NotStabilized, NotTransverse
from saturable.hilbert import (
    artinian_reduction,
    classify_quotient,
    hilbert_function,
    jump_degree,
    macaulay_admissible,
    macaulay_bound,
)
from saturable.ideal import Ideal, ideal
from saturable.oracles import dense_hilbert
from saturable.replication import BB, PARTIAL_SAT, THREE_POINTS_SAT, bb_ideal, partial_ideal, plane
from saturable.ring import GradedRing


def test_zero_ideal(S):
    H = hilbert_function(Ideal(S, []), 4)
    assert H.as_list(4) == [1, 3, 6, 10, 15]
    assert H.dimension == 3


def test_partial_example(S):
    I = partial_ideal()
    H = hilbert_function(I, 6)
    assert H.as_list(6) == [1, 3, 6, 9, 9, 9, 9]
    assert H.eventual_value == 9
    Hs = hilbert_function(ideal(S, PARTIAL_SAT), 8)
    assert Hs.as_list(8) == [1, 3, 5, 7, 8, 9, 9, 9, 9]
    assert Hs.stabilization_degree == 5


def test_values_beyond_bound_use_eventual_value(S):
    H = hilbert_function(ideal(S, THREE_POINTS_SAT), 3)
    assert H[50] == 3


def test_series_matches_dense(S):
    I = ideal(S, BB)
    assert hilbert_function(I, 9).as_list(9) == dense_hilbert(I.generators, 9, S)


def test_bb_square_at_nine(S):
    assert hilbert_function(ideal(S, BB) ** 2, 9)[9] == 17


def test_multigraded_values():
    I = bb_ideal()
    H = hilbert_function(I, 4, multigraded=True)
    assert H.multigraded
    assert H[(0, 0)] == 1


def test_str_marks_eventual_constancy(S):
    assert str(hilbert_function(ideal(S, THREE_POINTS_SAT), 3)) == "(1,2,3,3,…)"


@pytest.mark.parametrize(
    "H,ok,bad",
    [([1, 3, 3, 3, 3], True, None), ([1, 2, 4], False, 1), ([1, 3, 6, 10], True, None), ([2, 3], False, 0)],
)
def test_macaulay(H, ok, bad):
    assert macaulay_admissible(H) == (ok, bad)


def test_macaulay_bound_by_hand():
    # 2 = C(2,1) so 2^<1> = C(3,2) = 3; 4 = C(3,2) + C(1,1) so 4^<2> = C(4,3) + C(2,2) = 5
    assert macaulay_bound(2, 1) == 3
    assert macaulay_bound(4, 2) == 5


def test_jump_degree():
    assert jump_degree([1, 2, 3, 3, 3]) == 1
    assert jump_degree([1, 2, 3, 4, 5, 5, 5]) == 3
    # a = d - 2 for d points on a line, so a single point jumps at -1 (H(-1) = 0 != H(0))
    assert jump_degree([1, 1, 1]) == -1


def test_jump_degree_needs_stable_prefix():
    with pytest.raises(NotStabilized):
        jump_degree([1, 2, 3])


def test_jump_degree_from_hilbert_function(S):
    H = hilbert_function(ideal(S, THREE_POINTS_SAT), 5)
    assert jump_degree(H) == 1


def test_artinian_reduction(S):
    red = artinian_reduction(ideal(S, THREE_POINTS_SAT), S.parse("a0 + a2"))
    assert red.hilbert.as_list(2) == [1, 1, 1]
    assert red.length == 3
    R = GradedRing(["u", "v"])
    red = artinian_reduction(ideal(R, "u"), R.parse("v"))
    assert red.length == 1


def test_artinian_reduction_rejects_zero_divisor(S):
    with pytest.raises(NotTransverse):
        artinian_reduction(ideal(S, THREE_POINTS_SAT), S.parse("a1"))


def test_classify(S):
    c = classify_quotient(ideal(S, THREE_POINTS_SAT))
    assert (c.dimension, c.degree, c.complete_intersection, c.gorenstein) == (1, 3, True, True)
    c = classify_quotient(ideal(S, PARTIAL_SAT))
    assert not c.complete_intersection and c.minimal_generator_count == 3 and c.codimension == 2
    assert sum(c.socle.values()) == 2 and not c.gorenstein
    c = classify_quotient(ideal(S, "a0, a1"))
    assert (c.dimension, c.degree, c.complete_intersection, c.gorenstein) == (1, 1, True, True)
