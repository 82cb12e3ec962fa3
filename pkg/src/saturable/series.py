"""Hilbert series numerators of monomial ideals, as integer polynomials in t.

Integer polynomials are dicts ``{exponent: int}``.  For weights w (one per
variable) the series of S/M is numerator(t) / prod(1 - t^w_i).
"""

from functools import lru_cache


def padd(p, q, sign=1):
    out = dict(p)
    for k, v in q.items():
        s = out.get(k, 0) + sign * v
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pshift(p, k):
    return {e + k: v for e, v in p.items()}


def pmul(p, q):
    out = {}
    for a, x in p.items():
        for b, y in q.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return {k: v for k, v in out.items() if v}


def pdiv_one_minus(p, w=1):
    """Divide by (1 - t^w) exactly; returns None when the division leaves a remainder."""
    if not p:
        return {}
    p = dict(p)
    q = {}
    # long division from the lowest degree: p = (1 - t^w) q
    lo = min(p)
    hi = max(p)
    for e in range(lo, hi + 1):
        c = p.get(e, 0)
        if not c:
            continue
        q[e] = c
        p[e] = 0
        p[e + w] = p.get(e + w, 0) + c
    if any(p.values()):
        return None
    return q


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def minimalize(monos):
    monos = sorted(set(monos), key=lambda m: (sum(m), m))
    out = []
    for m in monos:
        if not any(_divides(o, m) for o in out):
            out.append(m)
    return out


@lru_cache(maxsize=100000)
def _numerator(gens, weights):
    if not gens:
        return ((0, 1),)
    # base case: pairwise disjoint supports gives a product of binomials
    used = {}
    disjoint = True
    for g in gens:
        for i, x in enumerate(g):
            if x:
                if i in used:
                    disjoint = False
                    break
                used[i] = True
        if not disjoint:
            break
    if disjoint:
        out = {0: 1}
        for g in gens:
            out = pmul(out, {0: 1, _deg(g, weights): -1})
        return tuple(sorted(out.items()))
    # pivot on the variable occurring in most generators, by its smallest positive exponent
    n = len(gens[0])
    best, bestcount = None, -1
    for i in range(n):
        cnt = sum(1 for g in gens if g[i])
        if cnt > bestcount:
            best, bestcount = i, cnt
    i = best
    k = min(g[i] for g in gens if g[i])
    piv = tuple(k if j == i else 0 for j in range(n))
    plus = minimalize(list(gens) + [piv])
    colon = minimalize([tuple(max(0, a - b) for a, b in zip(g, piv)) for g in gens])
    # N(I) = N(I + p) + t^deg(p) N(I : p)
    a = dict(_numerator(tuple(plus), weights))
    if any(not any(g) for g in colon):
        b = {}
    else:
        b = dict(_numerator(tuple(colon), weights))
    out = padd(a, pshift(b, _deg(piv, weights)))
    return tuple(sorted(out.items()))


def _deg(m, weights):
    return sum(a * b for a, b in zip(m, weights))


def numerator(monomials, weights):
    """Numerator of the Hilbert series of S / (monomials) for an N-grading with these weights."""
    monos = minimalize(tuple(m) for m in monomials)
    if any(not any(m) for m in monos):
        return {}
    return dict(_numerator(tuple(monos), tuple(weights)))


def reduce_standard(num, n):
    """Write num/(1-t)^n as Q/(1-t)^dim with Q(1) != 0; returns (Q, dim)."""
    q = dict(num)
    dim = n
    while dim > 0 and q and sum(q.values()) == 0:
        q = pdiv_one_minus(q)
        dim -= 1
    return q, dim


def series_coefficients(num, weights, bound):
    """First bound+1 coefficients of num / prod(1 - t^w)."""
    coeffs = [0] * (bound + 1)
    for e, v in num.items():
        if e <= bound:
            coeffs[e] += v
    for w in weights:
        for e in range(w, bound + 1):
            coeffs[e] += coeffs[e - w]
    return coeffs
