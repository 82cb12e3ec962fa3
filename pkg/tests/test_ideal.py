import pytest

from saturable.errors import NoTransverseElement
from saturable.ideal import (
    Ideal,
    colon,
    colon_power_limit,
    combine,
    ideal,
    irrelevant_ideal,
    minimal_generators,
    saturate,
    transverse_element,
)
from saturable.oracles import dense_contains
from saturable.replication import (
    PARTIAL_DEFORMED,
    PARTIAL_DEFORMED_SAT,
    PARTIAL_SAT,
    THREE_POINTS_SAT,
    partial_ideal,
    three_points_ideal,
)
from saturable.ring import GradedRing


def _same_by_oracle(I, J):
    return all(dense_contains(J.generators, g, I.ring) for g in I.generators) and all(
        dense_contains(I.generators, g, I.ring) for g in J.generators
    )


def test_intersections(S):
    assert combine(ideal(S, "a0"), ideal(S, "a1"), "intersection") == ideal(S, "a0*a1")
    K = ideal(S, "a0, a1") & ideal(S, "a0, a2")
    assert K == ideal(S, "a0, a1*a2")
    assert _same_by_oracle(K, ideal(S, "a0, a1*a2"))


def test_power_contains_products(S):
    I = ideal(S, THREE_POINTS_SAT)
    sq = I**2
    c = S.parse("a0^2*a2 - a0*a2^2")
    for p in (S.parse("a1^2"), S.parse("a1") * c, c * c):
        assert sq.contains(p)


def test_sum_product(S):
    assert ideal(S, "a0") + ideal(S, "a1") == ideal(S, "a0, a1")
    assert ideal(S, "a0") * ideal(S, "a1, a2") == ideal(S, "a0*a1, a0*a2")


def test_colon(S):
    assert colon(ideal(S, "a0*a1"), ideal(S, "a0")) == ideal(S, "a1")
    assert colon(ideal(S, "a0^2, a0*a1"), ideal(S, "a0")) == ideal(S, "a0, a1")


def test_colon_power_limit_partial(S):
    I = partial_ideal()
    assert colon_power_limit(I, irrelevant_ideal(S)) == ideal(S, PARTIAL_SAT)


@pytest.mark.parametrize("method", ["auto", "colon", "irrelevant"])
def test_saturate_intro(S, method):
    assert saturate(three_points_ideal(), method) == ideal(S, THREE_POINTS_SAT)


def test_saturate_idempotent(S):
    J = ideal(S, THREE_POINTS_SAT)
    assert saturate(J) == J
    assert J.is_saturated()


def test_saturate_deformed(S):
    assert saturate(ideal(S, PARTIAL_DEFORMED)) == ideal(S, PARTIAL_DEFORMED_SAT)


def test_saturate_bigraded_uses_product_irrelevant():
    from saturable.replication import bb_ideal

    I = bb_ideal()
    Isat = saturate(I)
    assert I.issubset(Isat)


def test_minimal_generators(S):
    assert minimal_generators(ideal(S, "a0, a0^2")) == [S.parse("a0")]
    gens = minimal_generators(saturate(partial_ideal()))
    assert sorted(g.degree() for g in gens) == [2, 4, 6]
    gens = minimal_generators(ideal(S, "a0^2, a0*a1, a1^2"))
    assert [g.degree() for g in gens] == [2, 2, 2]


def test_transverse(S):
    J = ideal(S, THREE_POINTS_SAT)
    ell = transverse_element(J)
    assert colon(J, Ideal(S, [ell])) == J
    ell = S.parse("a0 + a2")
    assert colon(J, Ideal(S, [ell])) == J
    K = ideal(S, "a0^2")
    ell = transverse_element(K)
    assert colon(K, Ideal(S, [ell])) == K


def test_no_transverse_for_artinian(S):
    with pytest.raises(NoTransverseElement):
        transverse_element(ideal(S, "a0, a1, a2"))


def test_membership_matches_oracle(S):
    I = three_points_ideal()
    for text in ("a1^3", "a0^3*a2 - a0^2*a2^2", "a0^3", "a0*a2^2"):
        p = S.parse(text)
        assert I.contains(p) == dense_contains(I.generators, p, S)


def test_two_variable_ring():
    R = GradedRing(["u", "v"])
    I = ideal(R, "u^2, u*v")
    assert saturate(I) == ideal(R, "u")
