"""Macaulay inverse systems: the contraction (or differentiation) action of S on
the dual ring, catalecticants, apolar ideals, perps and ideals built from duals."""

from math import factorial, prod

from .errors import NotClosedUnderContraction
from .ideal import Ideal, minimal_generators
from .linalg import Subspace, kernel, rank
from .ring import GradedRing, Polynomial

CONTRACTION = "contraction"
DIFFERENTIATION = "differentiation"


def dual_ring(ring, parameters=None):
    """k[x0..xn] matching a standard graded ring S = k[a0..an]."""
    params = ring.parameters if parameters is None else parameters
    return GradedRing([f"x{i}" for i in range(ring.ngens)], None, ring.characteristic, parameters=params)


def _mfact(e):
    return prod(factorial(x) for x in e)


class DualPolynomial:
    """An element of the inverse system, with the semantics of the S-action attached."""

    __slots__ = ("poly", "semantics")

    def __init__(self, poly, semantics=CONTRACTION):
        if semantics not in (CONTRACTION, DIFFERENTIATION):
            raise ValueError(f"unknown semantics {semantics!r}")
        if semantics == DIFFERENTIATION and poly.ring.characteristic:
            raise ValueError("differentiation semantics needs characteristic zero")
        self.poly = poly
        self.semantics = semantics

    @classmethod
    def parse(cls, text, ring, semantics=CONTRACTION):
        """Parse a dual form over the dual ring of ``ring`` (or over ``ring`` itself if it is one)."""
        R = ring if ring.variables[0].startswith("x") else dual_ring(ring)
        return cls(R.parse(text), semantics)

    @property
    def ring(self):
        return self.poly.ring

    @property
    def terms(self):
        return self.poly.terms

    def degree(self):
        return self.poly.degree()

    def __bool__(self):
        return bool(self.poly)

    def _wrap(self, p):
        return DualPolynomial(p, self.semantics)

    def _check(self, other):
        if other.semantics != self.semantics:
            raise ValueError("mixing contraction and differentiation semantics")
        return other.poly

    def __add__(self, other):
        return self._wrap(self.poly + self._check(other))

    def __sub__(self, other):
        return self._wrap(self.poly - self._check(other))

    def __neg__(self):
        return self._wrap(-self.poly)

    def __mul__(self, c):
        if isinstance(c, DualPolynomial):
            raise TypeError("the inverse system is a module; dual elements are not multiplied")
        return self._wrap(self.poly * c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, DualPolynomial):
            return NotImplemented
        return self.semantics == other.semantics and self.poly == other.poly

    def __hash__(self):
        return hash((self.poly, self.semantics))

    def to_contraction(self):
        """The image under x^a -> a! x^a (differentiation to contraction)."""
        if self.semantics == CONTRACTION:
            return self
        p = self.poly
        F = p.ring.field
        return DualPolynomial(Polynomial(p.ring, {e: c * F(_mfact(e)) for e, c in p.terms.items()}), CONTRACTION)

    def to_differentiation(self):
        if self.semantics == DIFFERENTIATION:
            return self
        p = self.poly
        F = p.ring.field
        return DualPolynomial(
            Polynomial(p.ring, {e: c / F(_mfact(e)) for e, c in p.terms.items()}), DIFFERENTIATION
        )

    def with_semantics(self, semantics):
        return self.to_contraction() if semantics == CONTRACTION else self.to_differentiation()

    def __str__(self):
        return str(self.poly)

    def __repr__(self):
        return f"DualPolynomial({self.poly}, {self.semantics})"


def contract(sigma, F):
    """sigma acting on F: alpha_i divides by x_i (contraction) or differentiates (differentiation).

    Parameters of a family ring (degree-zero variables) ride along untouched.
    """
    ring = F.ring
    n = ring.ngens
    out = {}
    field = ring.field
    for a, s in sigma.terms.items():
        a = a[:n]
        for b, c in F.poly.terms.items():
            bg = b[:n]
            if all(x <= y for x, y in zip(a, bg)):
                e = tuple(y - x for x, y in zip(a, bg)) + b[n:]
                v = s * c
                if F.semantics == DIFFERENTIATION:
                    v = v * field(_mfact(bg) // _mfact(e[:n]))
                w = out.get(e)
                out[e] = v if w is None else w + v
    return DualPolynomial(Polynomial(ring, {e: v for e, v in out.items() if v}), F.semantics)


def power(L, e):
    """The e-th power of a linear dual form, as the element whose perp is the point ideal.

    Under differentiation this is L^e; under contraction it is the divided power
    sum_a p^a x^a, which pairs with sigma to give sigma evaluated at the point.
    """
    if L.semantics == DIFFERENTIATION:
        return DualPolynomial(L.poly**e, DIFFERENTIATION)
    p = L.poly
    ring = p.ring
    n = ring.ngens
    coeffs = [p.coefficient(tuple(1 if j == i else 0 for j in range(ring.nvars))) for i in range(n)]
    out = {}
    for m in ring.monomials(e):
        v = ring.field.one
        for c, k in zip(coeffs, m):
            if k:
                v = v * c**k
        if v:
            out[m] = v
    return DualPolynomial(Polynomial(ring, out), CONTRACTION)


# -- catalecticants -------------------------------------------------------------------
class Catalecticant:
    """Matrix of S_e -> S*_{d-e}, sigma -> sigma . F, over monomial bases (sparse rows)."""

    def __init__(self, F, e, ring):
        d = F.degree()
        self.F = F
        self.e = e
        self.d = d
        self.source = ring.monomials(e)
        self.target = F.ring.monomials(d - e) if d - e >= 0 else []
        tindex = {m: i for i, m in enumerate(self.target)}
        rows = {}
        for j, a in enumerate(self.source):
            img = contract(ring.monomial(a), F)
            for b, c in img.terms.items():
                rows.setdefault(tindex[b], {})[j] = c
        self.rows = [rows[i] for i in sorted(rows)]

    @property
    def rank(self):
        return rank(self.rows)

    def kernel(self, ring):
        ker = kernel(self.rows, range(len(self.source)), one=ring.field.one)
        return [Polynomial(ring, {self.source[c]: v for c, v in vec.items()}) for vec in ker]


def catalecticant(F, e, ring):
    return Catalecticant(F, e, ring)


def apolar_hilbert(F, ring):
    """H_{S/Ann(F)}(e) for e = 0..d, from catalecticant ranks."""
    d = F.degree()
    return [Catalecticant(F, e, ring).rank for e in range(d + 1)]


def annihilator_piece(F, e, ring):
    """Basis of Ann(F)_e (all of S_e once e exceeds deg F)."""
    if e > F.degree():
        return [ring.monomial(m) for m in ring.monomials(e)]
    return Catalecticant(F, e, ring).kernel(ring)


def annihilator(F, ring, up_to=None):
    """Ann(F) generated by its pieces in degrees 1..up_to (default deg F + 1, which is all of it)."""
    d = F.degree()
    up_to = d + 1 if up_to is None else up_to
    gens = []
    for e in range(1, up_to + 1):
        gens.extend(annihilator_piece(F, e, ring))
    I = Ideal(ring, gens)
    return Ideal(ring, minimal_generators(I))


# -- perps --------------------------------------------------------------------------
def _pair_weight(e, semantics):
    return _mfact(e) if semantics == DIFFERENTIATION else 1


def perp_degree(V, e, ring, semantics=CONTRACTION):
    """Annihilator in S*_e of a spanning set V of a subspace of S_e."""
    D = dual_ring(ring, ())
    monos = ring.monomials(e)
    index = {m: i for i, m in enumerate(monos)}
    F = ring.field
    rows = []
    for s in V:
        rows.append({index[m]: c * F(_pair_weight(m, semantics)) for m, c in s.terms.items()})
    ker = kernel(rows, range(len(monos)), one=F.one)
    return [DualPolynomial(Polynomial(D, {monos[c]: v for c, v in vec.items()}), semantics) for vec in ker]


def perp_dual(W, e, ring):
    """Annihilator in S_e of a spanning set W of a subspace of S*_e (semantics read off W)."""
    monos = ring.monomials(e)
    index = {m: i for i, m in enumerate(monos)}
    F = ring.field
    n = ring.ngens
    rows = []
    for w in W:
        sem = w.semantics
        rows.append({index[m[:n] + (0,) * (ring.nvars - n)]: c * F(_pair_weight(m[:n], sem)) for m, c in w.terms.items()})
    ker = kernel(rows, range(len(monos)), one=F.one)
    return [Polynomial(ring, {monos[c]: v for c, v in vec.items()}) for vec in ker]


def subspace_of(polys, e, ring):
    """Canonical echelon form of a span of degree-e (dual or primal) polynomials."""
    monos = ring.monomials(e)
    index = {m: i for i, m in enumerate(monos)}
    vecs = []
    for p in polys:
        p = p.poly if isinstance(p, DualPolynomial) else p
        vecs.append({index[m]: c for m, c in p.terms.items()})
    return Subspace(vecs)


# -- ideals from inverse systems ------------------------------------------------------------
def close_pieces(pieces, ring, semantics=CONTRACTION):
    """Fill missing degrees below the top with the span of all contractions from above."""
    top = max(pieces)
    out = {e: list(v) for e, v in pieces.items()}
    for e in range(top - 1, -1, -1):
        if e in out:
            continue
        above = out.get(e + 1, [])
        out[e] = [contract(ring.gen(i), w) for w in above for i in range(ring.ngens)]
        out[e] = [w for w in out[e] if w]
    return out


def check_closed(pieces, ring):
    """Raise NotClosedUnderContraction unless S_1 . W_e lies in W_{e-1} for every e."""
    for e in sorted(pieces):
        if e == 0 or not pieces[e]:
            continue
        monos = ring.monomials(e - 1)
        index = {m: i for i, m in enumerate(monos)}
        below = subspace_of(pieces.get(e - 1, []), e - 1, ring)
        for w in pieces[e]:
            for i in range(ring.ngens):
                img = contract(ring.gen(i), w)
                vec = {index[m]: c for m, c in img.terms.items()}
                if vec not in below:
                    raise NotClosedUnderContraction(
                        f"a{i} applied to {w} leaves the degree {e - 1} piece"
                    )


def ideal_from_dual(pieces, ring, top=None, semantics=None):
    """The ideal generated by the perps (W_e)^perp, e = 1..top, of a closed inverse system.

    ``pieces`` maps degrees to spanning sets of DualPolynomial.  Missing degrees
    below the largest given one are filled with the contractions from above.
    """
    pieces = {e: list(v) for e, v in pieces.items()}
    if semantics is None:
        sems = {w.semantics for v in pieces.values() for w in v}
        semantics = sems.pop() if len(sems) == 1 else CONTRACTION
    pieces = {e: [w.with_semantics(semantics) for w in v] for e, v in pieces.items()}
    top = max(pieces) if top is None else top
    pieces = close_pieces(pieces, ring, semantics)
    check_closed(pieces, ring)
    gens = []
    for e in range(1, top + 1):
        gens.extend(perp_dual(pieces.get(e, []), e, ring) if pieces.get(e) else [
            ring.monomial(m) for m in ring.monomials(e)
        ])
    I = Ideal(ring, gens)
    return Ideal(ring, minimal_generators(I))


def point_ideal_piece(points, e, ring):
    """I(points)_e as the perp of the powers L_j^e (L_j dual linear forms)."""
    return perp_dual([power(L, e) for L in points], e, ring)


def point_ideal(points, ring, bound):
    """The ideal generated by I(points)_e, e <= bound."""
    gens = []
    for e in range(1, bound + 1):
        gens.extend(point_ideal_piece(points, e, ring))
    return Ideal(ring, minimal_generators(Ideal(ring, gens)))


def linear_dual(coords, ring, semantics=CONTRACTION):
    """The dual linear form sum_i coords[i] x_i."""
    D = dual_ring(ring, ())
    p = D.zero()
    for i, c in enumerate(coords):
        if c:
            p = p + D.gen(i) * c
    return DualPolynomial(p, semantics)
