import random

import pytest
import sympy

from saturable.apolarity import (
    CONTRACTION,
    DIFFERENTIATION,
    DualPolynomial,
    annihilator,
    apolar_hilbert,
    contract,
    ideal_from_dual,
    linear_dual,
    perp_degree,
    perp_dual,
    point_ideal_piece,
    power,
    subspace_of,
)
from saturable.errors import NotClosedUnderContraction
from saturable.ideal import ideal
from saturable.replication import random_ternary


def dp(D, text, semantics=CONTRACTION):
    return DualPolynomial(D.parse(text), semantics)


def test_contraction_rule(S, D, a):
    assert contract(a[0], dp(D, "x0*x1")).poly == D.parse("x1")
    assert not contract(a[0], dp(D, "x1^2"))
    assert contract(a[0] ** 2, dp(D, "x0^2*x2")).poly == D.parse("x2")


def test_differentiation_rule(S, D, a):
    assert contract(a[0] ** 2, dp(D, "x0^3", DIFFERENTIATION)).poly == D.parse("6*x0")


def test_semantics_conversion_is_consistent(S, D, a):
    F = dp(D, "x0^3*x1 + 2*x1^2*x2^2")
    G = F.to_differentiation()
    sigma = S.parse("a0^2 - a1*a2")
    assert contract(sigma, G).to_contraction() == contract(sigma, F)


def test_annihilator_of_power(S, D):
    assert annihilator(dp(D, "x0^4"), S) == ideal(S, "a1, a2, a0^5")


def test_square_route_hypothesis(S, D, a):
    assert not contract(a[0] ** 2, dp(D, "x1^6"))


def _sympy_catalecticant_ranks(F):
    xs = sympy.symbols("x0:3")
    f = sympy.sympify(str(F.to_differentiation().poly).replace("^", "**"))
    d = F.degree()
    ranks = []
    for e in range(d + 1):
        derivs = []
        for m in sympy.polys.monomials.itermonomials(xs, e):
            if sympy.Poly(m, *xs).total_degree() != e:
                continue
            g = f
            for v, k in zip(xs, sympy.Poly(m, *xs).monoms()[0]):
                g = sympy.diff(g, v, k)
            derivs.append(sympy.Poly(g, *xs) if g != 0 else sympy.Poly(0, *xs))
        monos = sorted({mm for p in derivs for mm in p.monoms()})
        M = sympy.Matrix([[p.coeff_monomial(mm) for mm in monos] for p in derivs]) if monos else sympy.zeros(1, 1)
        ranks.append(M.rank())
    return ranks


def test_generic_quartic_hilbert(S, D):
    rng = random.Random(5)
    F = random_ternary(rng, D, 4, density=1.0)
    H = apolar_hilbert(F, S)
    assert H == _sympy_catalecticant_ranks(F)
    assert H == [1, 3, 6, 3, 1]


def test_apolar_hilbert_symmetric(S, D):
    rng = random.Random(6)
    for d in range(3, 7):
        H = apolar_hilbert(random_ternary(rng, D, d), S)
        assert H == H[::-1]


def test_perp_of_linear_span(S, D, a):
    W = perp_degree([a[0], a[1]], 1, S)
    assert [w.poly for w in W] == [D.parse("x2")]


def test_perp_perp(S):
    rng = random.Random(2)
    for e in range(1, 4):
        monos = S.monomials(e)
        V = [S.from_dict({m: rng.randint(-2, 2) for m in rng.sample(monos, 2)}) for _ in range(3)]
        V = [v for v in V if v]
        back = perp_dual(perp_degree(V, e, S), e, S)
        assert subspace_of(back, e, S) == subspace_of(V, e, S)


@pytest.mark.parametrize("semantics", [CONTRACTION, DIFFERENTIATION])
def test_points_perp_is_span_of_powers(S, semantics):
    pts = [linear_dual(c, S, semantics) for c in ([1, 0, 0], [1, 1, 1], [0, 0, 1], [1, 2, 3])]
    for e in range(1, 4):
        piece = point_ideal_piece(pts, e, S)
        W = perp_degree(piece, e, S, semantics)
        assert subspace_of(W, e, S) == subspace_of([power(L, e) for L in pts], e, S)


def test_ideal_from_point_pieces(S, D):
    pieces = {e: [dp(D, f"x0^{e}")] for e in range(1, 4)}
    assert ideal_from_dual(pieces, S) == ideal(S, "a1, a2")


def test_cubic_only_family_hilbert():
    from saturable.replication import five_collinear, FIVE_SATURABLE
    from saturable.hilbert import hilbert_function

    I = five_collinear(*FIVE_SATURABLE)
    assert hilbert_function(I, 4).as_list(4) == [1, 5, 5, 5, 5]


def test_not_closed(S, D):
    pieces = {2: [dp(D, "x0^2")], 3: [dp(D, "x1^3")]}
    with pytest.raises(NotClosedUnderContraction):
        ideal_from_dual(pieces, S)
