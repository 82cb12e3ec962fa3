"""Hilbert functions and series, Macaulay's growth bound, Artinian reductions,
and the Gorenstein / complete-intersection predicates."""

from math import comb

from . import series
from .errors import NotStabilized, NotTransverse
from .ideal import (
    Ideal,
    coarse_weights,
    is_nonzerodivisor,
    minimal_generators,
    transverse_element,
)
from .linalg import kernel


class HilbertFunction:
    """Values of H_{S/I} plus, for N-gradings, the certified eventual behaviour.

    ``values`` maps a degree (an int for the coarse N-grading, a tuple for a
    multidegree box) to dim (S/I)_degree.  For the N-grading ``numerator`` is the
    series numerator over prod(1 - t^w_i); ``dimension`` is the Krull dimension
    of S/I, and when it is at most one ``eventual_value`` and
    ``stabilization_degree`` are exact.
    """

    def __init__(self, values, bound, numerator=None, weights=None, multigraded=False):
        self.values = values
        self.bound = bound
        self.numerator = numerator
        self.weights = weights
        self.multigraded = multigraded
        self.dimension = None
        self.eventual_value = None
        self.stabilization_degree = None
        if numerator is not None and not multigraded:
            self._certify()

    def _certify(self):
        num = self.numerator
        if not num:
            self.dimension = -1
            self.eventual_value = 0
            self.stabilization_degree = 0
            return
        q, dim = series.reduce_standard(num, len(self.weights))
        self.dimension = dim
        if dim == 0:
            # the series is a polynomial of degree at most deg(numerator)
            coeffs = series.series_coefficients(num, self.weights, max(num))
            self.eventual_value = 0
            self.stabilization_degree = 1 + max((i for i, c in enumerate(coeffs) if c), default=-1)
        elif dim == 1 and all(w == 1 for w in self.weights):
            # H(e) = sum_{i <= e} q_i, constant Q(1) from deg Q on
            d = sum(q.values())
            self.eventual_value = d
            acc, stab = 0, 0
            for e in range(0, max(q) + 1):
                acc += q.get(e, 0)
                if acc != d:
                    stab = e + 1
            self.stabilization_degree = stab

    @property
    def certified(self):
        return self.eventual_value is not None

    def __getitem__(self, e):
        if e in self.values:
            return self.values[e]
        if self.multigraded:
            raise KeyError(e)
        if e < 0:
            return 0
        if self.numerator is not None:
            return series.series_coefficients(self.numerator, self.weights, e)[e]
        raise KeyError(e)

    def as_list(self, upto=None):
        upto = self.bound if upto is None else upto
        return [self[e] for e in range(upto + 1)]

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return self.as_list(len(other) - 1) == list(other)
        return NotImplemented

    def __str__(self):
        if self.multigraded:
            return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(self.values.items())) + "}"
        if self.certified and self.dimension == 1:
            upto = max(self.stabilization_degree, 0) + 1
            return "(" + ",".join(str(self[e]) for e in range(upto + 1)) + ",…)"
        if self.certified and self.dimension <= 0:
            upto = self.stabilization_degree - 1
            return "(" + ",".join(str(self[e]) for e in range(max(upto, 0) + 1)) + ")"
        return "(" + ",".join(str(self[e]) for e in range(self.bound + 1)) + ",…)"

    __repr__ = __str__


def hilbert_function(I, bound=10, multigraded=False):
    """H_{S/I} in every degree up to ``bound``.

    For rings graded by N^r with r > 1, ``multigraded=True`` tabulates the box
    of multidegrees with every coordinate at most ``bound``; otherwise values
    are taken in the coarse N-grading (the total degree when available).
    """
    ring = I.ring
    gb = I.gb()
    n = ring.ngens
    if multigraded and ring.rank > 1:
        import itertools

        values = {}
        for deg in itertools.product(range(bound + 1), repeat=ring.rank):
            values[deg] = sum(1 for m in ring.monomials(deg) if gb.standard_monomial(m))
        return HilbertFunction(values, bound, multigraded=True)
    w = coarse_weights(ring)
    num = {} if gb.is_unit else series.numerator([m[:n] for m in gb.leading_monomials], w)
    coeffs = series.series_coefficients(num, w, bound)
    values = {e: coeffs[e] for e in range(bound + 1)}
    return HilbertFunction(values, bound, num, w)


def count_standard(I, degree):
    """dim (S/I)_degree by counting standard monomials (degree may be a multidegree)."""
    return I.quotient_dim(degree)


def hilbert_series(I):
    """(numerator, weights): the series of S/I is numerator / prod(1 - t^w)."""
    return I.series_numerator(), coarse_weights(I.ring)


# -- Macaulay's bound ---------------------------------------------------------
def macaulay_representation(h, e):
    """Write h = C(k_e, e) + C(k_{e-1}, e-1) + ... with k_e > k_{e-1} > ... >= j >= 1."""
    rep = []
    i = e
    while h > 0 and i > 0:
        k = i
        while comb(k + 1, i) <= h:
            k += 1
        rep.append((k, i))
        h -= comb(k, i)
        i -= 1
    return rep


def macaulay_bound(h, e):
    """h^<e>: the largest possible H(e+1) given H(e) = h."""
    return sum(comb(k + 1, i + 1) for k, i in macaulay_representation(h, e))


def macaulay_admissible(H):
    """(ok, first_violation): whether a prefix H satisfies H(0) = 1 and Macaulay's growth bound.

    ``first_violation`` is the degree e with H(e+1) > H(e)^<e>, or 0 when H(0) != 1.
    """
    H = list(H.as_list() if isinstance(H, HilbertFunction) else H)
    if not H or H[0] != 1:
        return False, 0
    for e in range(1, len(H) - 1):
        if H[e + 1] > macaulay_bound(H[e], e):
            return False, e
    return True, None


# -- jump degree --------------------------------------------------------------
def jump_degree(H):
    """Largest a with H(a) != H(a+1), reading H(-1) = 0; eventual constancy is required.

    A plain sequence is taken as a prefix whose last two entries must agree.
    """
    if isinstance(H, HilbertFunction):
        if not H.certified or H.dimension != 1:
            raise NotStabilized("jump degree needs a certified, eventually constant Hilbert function")
        if H.bound < H.stabilization_degree:
            raise NotStabilized(
                f"bound {H.bound} is below the stabilization degree {H.stabilization_degree}"
            )
        vals = H.as_list(H.stabilization_degree + 1)
    else:
        vals = list(H)
        if len(vals) < 2 or vals[-1] != vals[-2]:
            raise NotStabilized("the prefix does not show the eventual value")
    vals = [0] + vals
    a = -1
    for i in range(len(vals) - 1):
        if vals[i] != vals[i + 1]:
            a = i - 1
    return a


# -- Artinian reduction and classification ----------------------------------------
class ArtinianReduction:
    def __init__(self, ideal, hilbert, ell):
        self.ideal = ideal
        self.hilbert = hilbert
        self.ell = ell

    @property
    def length(self):
        return sum(self.hilbert.values.values())

    def __repr__(self):
        return f"ArtinianReduction({self.hilbert}, length {self.length})"


def artinian_reduction(Isat, ell):
    """S/(Isat + ell) for a transverse ell, with its (finite) Hilbert function."""
    if not is_nonzerodivisor(Isat, ell):
        raise NotTransverse(f"{ell} is a zero divisor modulo the ideal")
    J = Ideal(Isat.ring, Isat.generators + (ell,), check=False)
    H = hilbert_function(J, 0)
    if H.dimension is not None and H.dimension > 0:
        raise NotTransverse("the reduction is not Artinian; the quotient has dimension above one")
    top = H.stabilization_degree - 1 if H.stabilization_degree else 0
    H = hilbert_function(J, max(top, 0))
    return ArtinianReduction(J, H, ell)


def socle_dimensions(J):
    """Degreewise dimensions of the socle of an Artinian S/J."""
    ring = J.ring
    gb = J.gb()
    H = hilbert_function(J, 0)
    top = H.stabilization_degree
    out = {}
    for e in range(top):
        basis = J.standard_monomials(e)
        if not basis:
            continue
        cols = {}
        rows = {}
        for j, m in enumerate(basis):
            for i in range(ring.ngens):
                x = ring.monomial(tuple(1 if k == i else 0 for k in range(ring.nvars)))
                r = gb.normal_form(ring.monomial(m) * x)
                for mono, c in r.terms.items():
                    rows.setdefault(cols.setdefault((i, mono), len(cols)), {})[j] = c
        ker = kernel(list(rows.values()), range(len(basis)), one=ring.field.one)
        if ker:
            out[e] = len(ker)
    return out


class QuotientClass:
    def __init__(self, dimension, degree, gorenstein, complete_intersection, socle, codim, ngens, ell):
        self.dimension = dimension
        self.degree = degree
        self.gorenstein = gorenstein
        self.complete_intersection = complete_intersection
        self.socle = socle
        self.codimension = codim
        self.minimal_generator_count = ngens
        self.transverse = ell

    def as_dict(self):
        return {
            "dimension": self.dimension,
            "degree": self.degree,
            "gorenstein": self.gorenstein,
            "complete_intersection": self.complete_intersection,
            "socle": self.socle,
            "codimension": self.codimension,
            "minimal_generators": self.minimal_generator_count,
            "transverse_element": str(self.transverse) if self.transverse is not None else None,
        }

    def __repr__(self):
        return f"QuotientClass({self.as_dict()})"


def classify_quotient(Isat, ell=None):
    """Dimension, Gorenstein and complete-intersection flags of S/Isat.

    Gorenstein is decided for one-dimensional quotients by the socle of an
    Artinian reduction; complete intersection compares the minimal generator
    count with the codimension.
    """
    ring = Isat.ring
    H = hilbert_function(Isat, 0)
    dim = H.dimension
    codim = ring.ngens - dim
    ngens = len(minimal_generators(Isat))
    ci = ngens == codim
    gorenstein = None
    socle = None
    if dim == 1:
        ell = ell or transverse_element(Isat)
        red = artinian_reduction(Isat, ell)
        socle = socle_dimensions(red.ideal)
        gorenstein = sum(socle.values()) == 1
    elif dim == 0:
        socle = socle_dimensions(Isat)
        gorenstein = sum(socle.values()) == 1
    if ci and gorenstein is None:
        gorenstein = True
    return QuotientClass(dim, H.eventual_value, gorenstein, ci, socle, codim, ngens, ell)
