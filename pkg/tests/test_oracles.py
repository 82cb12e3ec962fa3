"""The fast paths against sympy and the dense per-degree oracles on random ideals."""

import random

import sympy

from saturable.groebner import syzygies
from saturable.hilbert import hilbert_function
from saturable.oracles import dense_contains, dense_hilbert, dense_syzygy_gap, perp_perp_equal
from saturable.replication import random_ideal

A = sympy.symbols("a0:3")


def to_sympy(p):
    return sympy.sympify(str(p).replace("^", "**"), locals={str(v): v for v in A})


def ideals(n, seed):
    from saturable.replication import plane

    rng = random.Random(seed)
    S = plane()
    return S, rng, [random_ideal(rng, S, 4) for _ in range(n)]


def test_membership_against_sympy():
    S, rng, Is = ideals(25, 101)
    for I in Is:
        G = sympy.groebner([to_sympy(g) for g in I.generators], *A, order="grevlex")
        for _ in range(4):
            d = rng.randint(1, 8)
            if rng.random() < 0.5:
                g = rng.choice(I.generators)
                if d < g.degree():
                    continue
                p = g.mul_term(rng.choice(S.monomials(d - g.degree())), S.field(rng.randint(1, 9)))
                p = p + rng.choice(I.generators) * S.field(2) if rng.random() < 0.3 else p
            else:
                p = random_ideal(rng, S, d, 1).generators[0]
            want = G.contains(to_sympy(p))
            assert I.contains(p) == want
            assert dense_contains(I.generators, p, S) == want


def _sympy_hilbert(I, bound):
    """dim (S/I)_e from sympy matrix ranks of monomial multiples."""
    out = []
    for e in range(bound + 1):
        monos = sorted(sympy.itermonomials(A, e, e), key=sympy.default_sort_key)
        rows = []
        for g in I.generators:
            k = e - g.degree()
            if k < 0:
                continue
            for m in sympy.itermonomials(A, k, k):
                poly = sympy.Poly(sympy.expand(to_sympy(g) * m), *A)
                rows.append([poly.coeff_monomial(mm) for mm in monos])
        r = sympy.Matrix(rows).rank() if rows else 0
        out.append(len(monos) - r)
    return out


def test_hilbert_against_sympy_ranks():
    S, _, Is = ideals(6, 102)
    for I in Is:
        assert hilbert_function(I, 7).as_list(7) == _sympy_hilbert(I, 7)


def test_hilbert_series_against_dense():
    S, _, Is = ideals(40, 103)
    for I in Is:
        assert hilbert_function(I, 10).as_list(10) == dense_hilbert(I.generators, 10, S)


def test_syzygies_complete():
    S, _, Is = ideals(30, 104)
    for I in Is:
        gens = list(I.generators)
        syz = syzygies(gens, S)
        for v in syz:
            assert sum((a * g for a, g in zip(v, gens)), S.zero()).is_zero()
        top = max(g.degree() for g in gens)
        for e in range(top, top + 3):
            rel, span = dense_syzygy_gap(gens, syz, e, S)
            assert rel == span


def test_perp_perp():
    _, _, Is = ideals(30, 105)
    for I in Is:
        assert all(perp_perp_equal(I, e) for e in range(1, 6))
