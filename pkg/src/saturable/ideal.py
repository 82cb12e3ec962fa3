"""Homogeneous ideals and the operations on them: sums, products, intersections,
colons, saturation, minimal generators and transverse elements."""

import itertools
import random
import threading

from . import series
from .errors import NoTransverseElement
from .groebner import _keyfn, _reduce, eliminate, groebner
from .linalg import Echelon, kernel
from .ring import GREVLEX, Order, Polynomial

SEARCH_BUDGET = 10_000
SEED = 20240


class Ideal:
    """An ideal given by generators, with Groebner bases cached per order."""

    def __init__(self, ring, generators=(), check=True):
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if not isinstance(g, Polynomial):
                g = ring.constant(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g:
                gens.append(g)
        if check:
            for g in gens:
                if not g.is_homogeneous():
                    raise ValueError(f"generator {g} is not homogeneous")
        self.ring = ring
        self.generators = tuple(gens)
        self._gb = {}
        self._lock = threading.Lock()
        self.meta = {}

    # -- Groebner data ---------------------------------------------------
    def gb(self, order=None, track=False):
        order = order or self.ring.order
        k = (order, track)
        with self._lock:
            hit = self._gb.get(k) or (self._gb.get((order, True)) if not track else None)
            if hit is not None:
                return hit
        g = groebner(self.generators, order, track=track, ring=self.ring)
        with self._lock:
            return self._gb.setdefault(k, g)

    def normal_form(self, p):
        return self.gb().normal_form(p)

    def contains(self, p):
        if isinstance(p, str):
            p = self.ring.parse(p)
        if not p:
            return True
        return self.gb().contains(p)

    __contains__ = contains

    def issubset(self, other):
        return all(other.contains(g) for g in self.generators)

    __le__ = issubset

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.issubset(other) and other.issubset(self)

    def __hash__(self):
        return hash(self.ring)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return bool(self.generators) and self.gb().is_unit

    def leading_monomials(self, order=None):
        return list(self.gb(order).leading_monomials)

    # -- arithmetic ------------------------------------------------------
    def __add__(self, other):
        return combine(self, other, "sum")

    def __mul__(self, other):
        return combine(self, other, "product")

    def __pow__(self, k):
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(k):
            out = out * self
        return out

    def intersection(self, other):
        return combine(self, other, "intersection")

    def __and__(self, other):
        return self.intersection(other)

    # -- graded pieces ---------------------------------------------------
    def degree_piece(self, degree):
        """Basis of I_degree: m - NF(m) for every non-standard monomial m of that degree."""
        gb = self.gb()
        out = []
        for m in self.ring.monomials(degree):
            if not gb.standard_monomial(m):
                mono = self.ring.monomial(m)
                out.append(mono - gb.normal_form(mono))
        return out

    def piece_dim(self, degree):
        gb = self.gb()
        return sum(1 for m in self.ring.monomials(degree) if not gb.standard_monomial(m))

    def quotient_dim(self, degree):
        gb = self.gb()
        return sum(1 for m in self.ring.monomials(degree) if gb.standard_monomial(m))

    def standard_monomials(self, degree):
        gb = self.gb()
        return [m for m in self.ring.monomials(degree) if gb.standard_monomial(m)]

    def truncate(self, top):
        """The ideal generated by the generators of (coarse) degree at most ``top``."""
        return Ideal(self.ring, [g for g in self.generators if coarse_degree(g) <= top])

    def weights(self):
        return coarse_weights(self.ring)

    def series_numerator(self):
        """Numerator of the Hilbert series of S/I in the coarse N-grading."""
        gb = self.gb()
        if gb.is_unit:
            return {}
        n = self.ring.ngens
        return series.numerator([m[:n] for m in gb.leading_monomials], self.weights())

    def is_saturated(self):
        return self == saturate(self)

    def __str__(self):
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def ideal(ring, text):
    """Parse a comma separated generator list."""
    parts = [p for p in text.split(",") if p.strip()]
    return Ideal(ring, [ring.parse(p) for p in parts])


def coarse_weights(ring):
    """An N-grading coarsening the ring's grading: the first row with all entries
    positive (the total degree for the usual gradings), else the column sums."""
    for row in ring.grading:
        if all(row[i] > 0 for i in range(ring.ngens)):
            return tuple(row[: ring.ngens])
    return tuple(sum(row[i] for row in ring.grading) for i in range(ring.ngens))


def coarse_degree(p):
    w = coarse_weights(p.ring)
    e = next(iter(p.terms))
    return sum(a * b for a, b in zip(w, e))


def to_vector(p, index):
    """Coordinates of p in the monomial basis ``index`` (monomial -> column)."""
    return {index[e]: c for e, c in p.terms.items()}


def from_vector(ring, v, monos):
    return Polynomial(ring, {monos[c]: a for c, a in v.items() if a})


# -- combinations ------------------------------------------------------------
def _aux_ring(ring, extra="tAux"):
    name = extra
    while name in ring.names:
        name += "_"
    return ring.with_parameters(ring.parameters + (name,)), name


def intersect(I, J):
    """I cap J via elimination of t from t*I + (1-t)*J (t of degree zero)."""
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    R, t = _aux_ring(ring)
    T = R.gen(t)
    idx = list(range(ring.nvars))
    gens = [T * g.to_ring(R, idx) for g in I.generators]
    gens += [(R.one() - T) * g.to_ring(R, idx) for g in J.generators]
    E = eliminate(gens, [t], ring=R)
    back = list(range(ring.nvars)) + [0]
    return Ideal(ring, [g.to_ring(ring, back) for g in E.generators], check=False)


def combine(I, J, op):
    if I.ring != J.ring:
        raise ValueError("ideals from different rings")
    if op == "sum":
        return Ideal(I.ring, I.generators + J.generators)
    if op == "product":
        return Ideal(I.ring, [f * g for f in I.generators for g in J.generators])
    if op == "intersection":
        return intersect(I, J)
    raise ValueError(f"unknown operation {op!r}")


def divide_exact(p, g):
    """p / g for a polynomial p known to be divisible by g."""
    key = _keyfn(p.ring.order)
    lead = max(g.terms, key=key)
    c = g.terms[lead]
    gm = {e: v / c for e, v in g.terms.items()}
    quot = {}
    r = _reduce(p.terms, [gm], [lead], key, quotients=quot)
    if r:
        raise ValueError(f"{g} does not divide {p}")
    q = quot.get(0, {})
    return Polynomial(p.ring, {e: v / c for e, v in q.items()})


def colon_element(I, g):
    """I : (g)."""
    if I.contains(g):
        return Ideal(I.ring, [I.ring.one()])
    K = intersect(I, Ideal(I.ring, [g], check=False))
    return Ideal(I.ring, [divide_exact(f, g) for f in K.generators], check=False)


def colon(I, J):
    """I : J as the intersection of I : g over generators g of J."""
    if isinstance(J, Polynomial):
        return colon_element(I, J)
    out = None
    for g in J.generators:
        K = colon_element(I, g)
        out = K if out is None else intersect(out, K)
    if out is None:
        return Ideal(I.ring, [I.ring.one()])
    return out


def colon_power_limit(I, J):
    """I : J^infinity by iterated colon; ``result.meta['stabilized_at']`` is the k with I:J^k = I:J^(k+1)."""
    K = I
    k = 0
    while True:
        L = colon(K, J)
        if L.issubset(K):
            out = Ideal(I.ring, K.generators, check=False)
            out.meta["stabilized_at"] = k
            return out
        K = L
        k += 1


# -- saturation --------------------------------------------------------------
def irrelevant_generators(ring):
    """Minimal monomials whose multidegree is positive in every coordinate (all squarefree)."""
    n = ring.ngens
    chosen = []
    for size in range(1, n + 1):
        for subset in itertools.combinations(range(n), size):
            if any(set(c) <= set(subset) for c in chosen):
                continue
            deg = [sum(row[i] for i in subset) for row in ring.grading]
            if all(d > 0 for d in deg):
                chosen.append(subset)
    out = []
    for subset in chosen:
        e = [0] * ring.nvars
        for i in subset:
            e[i] = 1
        out.append(ring.monomial(e))
    return out


def irrelevant_ideal(ring):
    return Ideal(ring, irrelevant_generators(ring))


def _total_homogeneous(I):
    n = I.ring.ngens
    return all(len({sum(e[:n]) for e in g.terms}) == 1 for g in I.generators)


def saturate_variable(I, i):
    """I : x_i^infinity using grevlex with x_i last (divide basis elements by x_i powers)."""
    ring = I.ring
    if not _total_homogeneous(I):
        return colon_power_limit(I, Ideal(ring, [ring.gen(i)]))
    pr = [j for j in range(ring.nvars) if j != i] + [i]
    gb = I.gb(Order("grevlex", priority=pr))
    out = []
    for g in gb.elements:
        k = min(e[i] for e in g.terms)
        if k:
            g = Polynomial(ring, {e[:i] + (e[i] - k,) + e[i + 1:]: c for e, c in g.terms.items()})
        out.append(g)
    return Ideal(ring, out, check=False)


def saturate_monomial(I, m):
    """I : m^infinity for a monomial m, one variable at a time."""
    (e,) = m.terms
    K = I
    for i, k in enumerate(e):
        if k:
            K = saturate_variable(K, i)
    return K


def saturate_linear(I, ell):
    """I : ell^infinity for a linear form ell, by moving ell to a coordinate."""
    ring = I.ring
    coeffs = {}
    for e, c in ell.terms.items():
        (i,) = [j for j, x in enumerate(e) if x]
        coeffs[i] = c
    i = max(coeffs)
    ci = coeffs[i]
    # phi: a_i -> (a_i - sum_{j != i} c_j a_j) / c_i, so that phi(ell) = a_i
    img = ring.gen(i)
    for j, c in coeffs.items():
        if j != i:
            img = img - ring.gen(j) * c
    img = img * (1 / ci)
    moved = Ideal(ring, [g.substitute({i: img}) for g in I.generators], check=False)
    K = saturate_variable(moved, i)
    return Ideal(ring, [g.substitute({i: ell}) for g in K.generators], check=False)


def finite_colength(I, K):
    """True when K/I has finite length (I subset K assumed), read off the Hilbert series."""
    ring = I.ring
    diff = series.padd(I.series_numerator(), K.series_numerator(), -1)
    for w in coarse_weights(ring):
        diff = series.pdiv_one_minus(diff, w)
        if diff is None:
            return False
    return True


def _candidate_linear_forms(ring, limit):
    n = ring.ngens
    cands = [ring.gen(n - 1), sum(ring.gens()[1:], ring.gen(0))]
    for v in _spiral(n):
        if len(cands) >= limit:
            break
        cands.append(_linear(ring, v))
    return cands


def saturate(I, method="auto"):
    """I^sat = I : S_+^infinity for the ring's irrelevant ideal.

    ``method='auto'`` first tries I : ell^infinity for a few linear forms ell and
    accepts the result when its colength over I is finite (then it equals
    I^sat); otherwise, and always for ``method='irrelevant'``, it intersects
    I : f^infinity over the generators f of the irrelevant ideal.
    """
    ring = I.ring
    cached = I.meta.get(("sat", method))
    if cached is not None:
        return cached
    if I.is_zero() or I.is_unit():
        out = I
    else:
        out = None
        if method == "auto" and ring.rank == 1 and not ring.parameters and _total_homogeneous(I):
            for ell in _candidate_linear_forms(ring, 12):
                K = saturate_linear(I, ell)
                if finite_colength(I, K):
                    out = K
                    break
        if out is None:
            if method == "colon":
                parts = [colon_power_limit(I, Ideal(ring, [f])) for f in irrelevant_generators(ring)]
            else:
                parts = [saturate_monomial(I, f) for f in irrelevant_generators(ring)]
            out = parts[0]
            for P in parts[1:]:
                out = intersect(out, P)
    out = Ideal(ring, _reduced_generators(out), check=False)
    I.meta[("sat", method)] = out
    return out


def _reduced_generators(I):
    """Minimal generators when cheap, else the reduced basis (keeps printed output tidy)."""
    if I.is_zero():
        return []
    if I.is_unit():
        return [I.ring.one()]
    return minimal_generators(Ideal(I.ring, list(I.gb().elements), check=False))


def saturation_degree(I, Isat=None):
    """Smallest e0 with I_e = (I^sat)_e for all e >= e0 (coarse grading, rank-one rings)."""
    Isat = Isat or saturate(I)
    diff = series.padd(Isat.series_numerator(), I.series_numerator(), -1)
    for w in coarse_weights(I.ring):
        diff = series.pdiv_one_minus(diff, w)
        if diff is None:
            return None
    return 1 + max(diff, default=-1)


# -- minimal generators ------------------------------------------------------
def minimal_generators(I):
    """A minimal generating set chosen among the given generators, degree by degree."""
    ring = I.ring
    gens = sorted(I.generators, key=lambda g: (coarse_degree(g), g.multidegree()))
    kept = []
    groups = itertools.groupby(gens, key=lambda g: coarse_degree(g))
    for _, grp in groups:
        grp = list(grp)
        lower = groebner(kept, ring=ring) if kept else None
        by_md = {}
        for g in grp:
            by_md.setdefault(g.multidegree(), []).append(g)
        for md, gs in by_md.items():
            E = Echelon()
            monos = {}
            for g in gs:
                r = lower.normal_form(g) if lower is not None else g
                vec = {}
                for e, c in r.terms.items():
                    vec[monos.setdefault(e, len(monos))] = c
                if E.add(vec):
                    kept.append(g)
    return kept


# -- transverse elements -------------------------------------------------------
def _spiral_values():
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def _spiral(n, max_height=None):
    """Nonzero integer vectors of length n ordered by height, support size, then spiral position;
    the first nonzero entry is positive (forms are taken up to scaling)."""
    h = 1
    while max_height is None or h <= max_height:
        vals = [0]
        for k in range(1, h + 1):
            vals += [k, -k]
        rank = {v: i for i, v in enumerate(vals)}
        batch = []
        for v in itertools.product(vals, repeat=n):
            if max(abs(x) for x in v) != h:
                continue
            first = next(x for x in v if x)
            if first < 0:
                continue
            batch.append(v)
        batch.sort(key=lambda v: (sum(1 for x in v if x), [rank[x] for x in v]))
        yield from batch
        h += 1


def _linear(ring, v):
    return ring.from_dict(
        {tuple(1 if j == i else 0 for j in range(ring.nvars)): c for i, c in enumerate(v) if c}
    )


def _form(monos, ring, v):
    return ring.from_dict({m: c for m, c in zip(monos, v) if c})


def is_nonzerodivisor(Isat, ell):
    """ell is a nonzerodivisor mod Isat iff the series of S/(Isat + ell) is (1 - t^deg ell) times that of S/Isat."""
    ring = Isat.ring
    w = coarse_weights(ring)
    num = Isat.series_numerator()
    J = Ideal(ring, Isat.generators + (ell,), check=False)
    d = coarse_degree(ell)
    expect = series.padd(num, series.pshift(num, d), -1)
    return J.series_numerator() == expect


def _quotient_dimension(I):
    """Krull dimension of S/I in the coarse grading."""
    num = I.series_numerator()
    if not num:
        return -1
    w = coarse_weights(I.ring)
    q, dim = num, len(w)
    # divide by (1 - t) as often as possible; weights > 1 contribute (1 - t) factors too
    while dim > 0:
        r = series.pdiv_one_minus(q, 1)
        if r is None:
            break
        q = r
        dim -= 1
    return dim


def transverse_element(Isat, degree=None, budget=SEARCH_BUDGET, seed=SEED):
    """A homogeneous ell of the given degree with (Isat : ell) = Isat.

    Candidates follow a fixed spiral over small integer coefficients, then
    pseudorandom coefficients from a seeded generator.  ``degree`` defaults to
    linear forms for N-gradings and to the degrees of the irrelevant-ideal
    generators otherwise.  The degree used is stored on the result's ring-free
    report via ``transverse_element.last_degree``.
    """
    ring = Isat.ring
    if Isat.is_unit() or (ring.rank == 1 and _quotient_dimension(Isat) <= 0):
        raise NoTransverseElement("the quotient is zero-dimensional; no transverse element exists")
    if degree is None:
        degrees = sorted({f.multidegree() for f in irrelevant_generators(ring)}, key=lambda d: (sum(d), d))
    else:
        degrees = [ring.normalize_degree(degree)]
    tried = 0
    for deg in degrees:
        monos = ring.monomials(deg)
        n = len(monos)
        spiral_cap = 2 if n <= 6 else 1
        for v in _spiral(n, spiral_cap):
            if tried >= budget:
                break
            tried += 1
            ell = _form(monos, ring, v)
            if is_nonzerodivisor(Isat, ell):
                return ell
        rng = random.Random(seed)
        while tried < budget:
            tried += 1
            v = [rng.randint(-100, 100) for _ in range(n)]
            if not any(v):
                continue
            ell = _form(monos, ring, v)
            if is_nonzerodivisor(Isat, ell):
                return ell
            if tried % 50 == 0 and len(degrees) > 1:
                break
    raise NoTransverseElement(f"no transverse element found after {tried} candidates")


# -- degree pieces of colons ------------------------------------------------------
def colon_degree_piece(I, J, degree):
    """Basis of (I : J)_degree by linear algebra: f with f*g in I for every generator g of J."""
    ring = I.ring
    monos = ring.monomials(degree)
    gb = I.gb()
    rows = {}
    cols = {}
    constraints = []
    # one constraint row per (generator, monomial of the product) coordinate
    images = []
    for m in monos:
        mono = ring.monomial(m)
        img = {}
        for gi, g in enumerate(J.generators):
            r = gb.normal_form(mono * g)
            for e, c in r.terms.items():
                img[cols.setdefault((gi, e), len(cols))] = c
        images.append(img)
    # transpose: rows indexed by constraint column, entries by monomial index
    for j, img in enumerate(images):
        for c, v in img.items():
            rows.setdefault(c, {})[j] = v
    constraints = list(rows.values())
    ker = kernel(constraints, range(len(monos)), one=ring.field.one)
    return [from_vector(ring, v, monos) for v in ker]


def span_contains(I, polys):
    """All polys lie in I (membership by normal forms)."""
    return all(I.contains(p) for p in polys)


def product_piece(A, B):
    """Products a*b for spanning sets A, B (a spanning set of the product space)."""
    return [a * b for a in A for b in B]


__all__ = [
    "Ideal",
    "ideal",
    "combine",
    "intersect",
    "colon",
    "colon_element",
    "colon_power_limit",
    "saturate",
    "saturation_degree",
    "minimal_generators",
    "transverse_element",
    "irrelevant_ideal",
    "irrelevant_generators",
    "is_nonzerodivisor",
    "colon_degree_piece",
    "GREVLEX",
]
