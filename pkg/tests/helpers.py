"""Groebner-free re-validation of rank certificates, shared by the rank3 and acceptance tests."""

import random
from math import factorial

import sympy

from saturable.linalg import rank
from saturable.oracles import dense_piece

X = sympy.symbols("x0:3")


def ordinary(F):
    """A divided-power form as an ordinary sympy polynomial: x^[a] = x^a / a!."""
    out = 0
    for e, c in F.poly.terms.items():
        mono = 1
        for v, k in zip(X, e[:3]):
            mono *= v**k / factorial(k)
        out += sympy.Rational(int(c.numerator), int(c.denominator)) * mono
    return sympy.expand(out)


def apply_operator(sigma, f):
    """sigma(d/dx0, d/dx1, d/dx2) applied to f."""
    out = 0
    for e, c in sigma.terms.items():
        g = f
        for v, k in zip(X, e[:3]):
            if k:
                g = sympy.diff(g, v, k)
        out += sympy.Rational(int(c.numerator), int(c.denominator)) * g
    return sympy.expand(out)


def kills(gens, F):
    f = ordinary(F)
    return all(apply_operator(g, f) == 0 for g in gens)


def _vecs(polys, monos):
    index = {m: i for i, m in enumerate(monos)}
    return [{index[m]: c for m, c in p.terms.items()} for p in polys]


def hilbert_tail(gens, ring, top):
    H = []
    for e in range(top + 1):
        V, _ = dense_piece(gens, e, ring)
        H.append(ring.dim(e) - V.dim)
    return H


def saturated_by_linear_form(gens, ring, top, seed=0):
    """Gamma : ell = Gamma in degrees < top for a random linear ell (never wrongly True)."""
    rng = random.Random(seed)
    ell = sum((g * rng.randint(1, 97) for g in ring.gens()), ring.zero())
    for e in range(top):
        V1, monos1 = dense_piece(gens, e + 1, ring)
        V0, _ = dense_piece(gens, e, ring)
        ellS = [ell.mul_term(m, ring.field.one) for m in ring.monomials(e)]
        both = rank(list(V1.basis) + _vecs(ellS, monos1))
        inter = V1.dim + len(ellS) - both
        if inter != V0.dim:
            return False
    return True


def revalidate(cert, top=None):
    """(ok, degree) for a RankCertificate, recomputed without its own checks."""
    gens = list(cert.ideal.generators)
    ring = cert.ideal.ring
    d = cert.F.degree()
    top = top or 2 * d + 6
    H = hilbert_tail(gens, ring, top)
    stable = H[-1] == H[-2] == H[-3]
    ok = kills(gens, cert.F) and stable and H[-1] <= cert.r and saturated_by_linear_form(gens, ring, top)
    return ok, H[-1]
