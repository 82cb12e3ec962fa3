import random

import pytest

from saturable.groebner import eliminate, groebner, lift, normal_form, syzygies
from saturable.ideal import Ideal, ideal
from saturable.oracles import dense_contains, dense_syzygy_gap
from saturable.replication import THREE_POINTS_LIMIT, random_ideal
from saturable.ring import Order


def _sum(vec, gens, S):
    return sum((v * g for v, g in zip(vec, gens)), S.zero())


def test_already_reduced(S):
    G = groebner([S.parse("a0+a1"), S.parse("a1^2")])
    assert list(G) == [S.parse("a0+a1"), S.parse("a1^2")]


def test_intro_generators_are_a_basis(S):
    gens = ideal(S, THREE_POINTS_LIMIT).generators
    G = groebner(gens)
    assert {g.monic() for g in G} == {g.monic() for g in gens}


def test_unit_ideal():
    from saturable.ring import GradedRing

    R = GradedRing(["a0"])
    G = groebner([R.parse("a0"), R.parse("a0 + 1")])
    assert G.is_unit


def test_normal_form(S):
    G = groebner([S.parse("a0^2")])
    assert normal_form(S.parse("a0^2*a2"), G).is_zero()
    assert normal_form(S.parse("a1"), groebner([S.parse("a0")])) == S.parse("a1")


def test_normal_form_idempotent(S):
    G = groebner(ideal(S, "a0^2 - a1*a2, a1^3").generators)
    p = S.parse("a0^5 + a1^4*a2 - a0*a2^3")
    r = normal_form(p, G)
    assert normal_form(r, G) == r
    assert G.contains(p - r)


def test_generators_reduce_to_zero_random(S):
    rng = random.Random(1)
    for _ in range(100):
        I = random_ideal(rng, S, 4)
        G = I.gb()
        assert all(normal_form(g, G).is_zero() for g in I.generators)


def test_lex_basis(S):
    G = groebner([S.parse("a0 - a1^2"), S.parse("a1 - a2^3")], Order("lex"))
    lms = {g.lm(Order("lex")) for g in G}
    assert (1, 0, 0) in lms and (0, 1, 0) in lms


def test_eliminate(S):
    T = S.with_parameters(("t",))
    I = Ideal(T, [T.parse("t*a0 - a1"), T.parse("t^2")])
    E = eliminate(I, ["t"])
    assert E == Ideal(E.ring, [E.ring.parse("a1^2")])
    # a1^2 = -(t a0 + a1)(t a0 - a1) + a0^2 t^2
    assert T.parse("a1^2") == -(T.parse("t*a0 + a1") * T.parse("t*a0 - a1")) + T.parse("a0^2*t^2")


def test_eliminate_trivial(S):
    assert eliminate(ideal(S, "a0"), ["a1"]) == ideal(S, "a0")
    T = S.with_parameters(("t",))
    assert eliminate(Ideal(T, [T.parse("t - a0")], check=False), ["t"]).is_zero()


def test_koszul(S, a):
    syz = syzygies([a[0], a[1]], S)
    assert len(syz) == 1
    u, v = syz[0]
    assert u * a[0] + v * a[1] == S.zero()
    assert (u, v) in ((a[1], -a[0]), (-a[1], a[0]))
    gens = [a[0] ** 2, a[0] * a[1], a[1] ** 2]
    syz = syzygies(gens, S)
    assert len(syz) == 2
    assert all(_sum(v, gens, S).is_zero() for v in syz)


def test_syzygies_complete_random_monomial(S):
    rng = random.Random(3)
    for _ in range(10):
        gens = []
        while len(gens) < 4:
            d = rng.randint(1, 4)
            m = S.monomial(rng.choice(S.monomials(d)))
            if m not in gens:
                gens.append(m)
        syz = syzygies(gens, S)
        assert all(_sum(v, gens, S).is_zero() for v in syz)
        for e in range(1, 9):
            rel, span = dense_syzygy_gap(gens, syz, e, S)
            assert rel == span


def test_lift(S):
    gens = ideal(S, THREE_POINTS_LIMIT).generators
    p = S.parse("a0^2*a1 + a1^2*a2")
    coeffs = lift(p, gens)
    assert _sum(coeffs, gens, S) == p
