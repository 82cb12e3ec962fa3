"""Dense per-degree linear algebra: slow, Groebner-free reference answers.

I_e is spanned by monomial multiples of the generators; everything here is a
rank or kernel computation on those spans.  Used to cross-check the fast paths.
"""

from .apolarity import perp_degree, perp_dual
from .linalg import Subspace, kernel, rank


def _vec(p, index):
    return {index[m]: c for m, c in p.terms.items()}


def dense_piece(gens, degree, ring):
    """Subspace I_degree of k^{monomials(degree)}, with the monomial list (N-graded rings)."""
    if isinstance(degree, tuple):
        (degree,) = degree
    monos = ring.monomials(degree)
    index = {m: i for i, m in enumerate(monos)}
    rows = []
    for g in gens:
        shift = degree - g.degree()
        if shift < 0:
            continue
        for m in ring.monomials(shift):
            rows.append(_vec(g.mul_term(m, ring.field.one), index))
    return Subspace(rows), monos


def dense_contains(gens, p, ring):
    """Membership of a homogeneous p (or of each homogeneous component)."""
    comps = {}
    for e, c in p.terms.items():
        comps.setdefault(ring.degree_of(e), {})[e] = c
    for deg, terms in comps.items():
        V, monos = dense_piece(gens, deg, ring)
        index = {m: i for i, m in enumerate(monos)}
        if {index[m]: c for m, c in terms.items()} not in V:
            return False
    return True


def dense_hilbert(gens, bound, ring):
    return [ring.dim(e) - dense_piece(gens, e, ring)[0].dim for e in range(bound + 1)]


def dense_syzygy_gap(gens, syz, degree, ring):
    """(dim of degree-e relations, dim spanned by monomial multiples of ``syz``) in degree e."""
    degs = [g.degree() for g in gens]
    blocks = []
    for i, dg in enumerate(degs):
        blocks.append(ring.monomials(degree - dg) if degree >= dg else [])
    cols = [(i, m) for i, b in enumerate(blocks) for m in b]
    col_index = {c: j for j, c in enumerate(cols)}
    target = ring.monomials(degree)
    tindex = {m: i for i, m in enumerate(target)}
    rows = {}
    for j, (i, m) in enumerate(cols):
        for e, c in gens[i].mul_term(m, ring.field.one).terms.items():
            rows.setdefault(tindex[e], {})[j] = c
    rel_dim = len(kernel(list(rows.values()), range(len(cols)), one=ring.field.one))
    vecs = []
    for v in syz:
        vdeg = None
        for i, a in enumerate(v):
            if a:
                vdeg = a.degree() + degs[i]
                break
        if vdeg is None or vdeg > degree:
            continue
        for m in ring.monomials(degree - vdeg):
            row = {}
            for i, a in enumerate(v):
                for e, c in a.mul_term(m, ring.field.one).terms.items():
                    row[col_index[(i, e)]] = c
            vecs.append(row)
    return rel_dim, rank(vecs)


def perp_perp_equal(I, degree):
    """Whether ((I_e)^perp)^perp = I_e."""
    ring = I.ring
    piece = I.degree_piece(degree)
    back = perp_dual(perp_degree(piece, degree, ring), degree, ring)
    monos = ring.monomials(degree)
    index = {m: i for i, m in enumerate(monos)}
    return Subspace([_vec(p, index) for p in piece]) == Subspace([_vec(p, index) for p in back])
