from fractions import Fraction

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from saturable.apolarity import DualPolynomial, contract, dual_ring, perp_degree, perp_dual, subspace_of
from saturable.ideal import Ideal, saturate
from saturable.replication import plane

S = plane()
D = dual_ring(S)
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def forms(draw, degree=None, ring=S):
    d = draw(st.integers(0, 3)) if degree is None else degree
    monos = ring.monomials(d)
    chosen = draw(st.lists(st.sampled_from(monos), min_size=1, max_size=4, unique=True))
    return ring.from_dict({m: ring.field(draw(coeff)) for m in chosen})


@st.composite
def polys(draw):
    parts = draw(st.lists(forms(), min_size=1, max_size=3))
    return sum(parts, S.zero())


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + q - q == p


@given(polys())
def test_print_parse(p):
    assert S.parse(str(p)) == p


@given(forms(), forms())
def test_degree_additive(p, q):
    if p and q:
        assert (p * q).multidegree() == (p.degree() + q.degree(),)


@given(st.fractions(max_denominator=50), st.fractions(max_denominator=50))
def test_exact_rationals(u, v):
    F = S.field
    assert F(u) + F(v) == F(u + v)
    assert F(u) * F(v) == F(u * v)


@settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(forms(degree=2), min_size=1, max_size=3), forms())
def test_normal_form(gens, p):
    gens = [g for g in gens if g]
    if not gens:
        return
    I = Ideal(S, gens)
    r = I.normal_form(p)
    assert I.normal_form(r) == r
    assert I.contains(p - r)


@settings(max_examples=20, deadline=None)
@given(st.lists(forms(degree=2), min_size=1, max_size=3))
def test_saturation_idempotent_and_larger(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    I = Ideal(S, gens)
    J = saturate(I)
    assert I.issubset(J)
    assert saturate(J) == J


@settings(max_examples=30, deadline=None)
@given(st.lists(forms(degree=2, ring=D), min_size=1, max_size=3))
def test_perp_is_an_involution(ws):
    W = [DualPolynomial(w) for w in ws if w]
    if not W:
        return
    V = perp_dual(W, 2, S)
    assert subspace_of(perp_degree(V, 2, S), 2, D) == subspace_of(W, 2, D)


@settings(max_examples=40, deadline=None)
@given(forms(degree=1), forms(degree=1), forms(degree=4, ring=D))
def test_contraction_is_a_module_action(s, t, f):
    F = DualPolynomial(f)
    assert contract(s * t, F) == contract(s, contract(t, F))
    assert contract(s + t, F) == contract(s, F) + contract(t, F)
