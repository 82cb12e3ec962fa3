"""Fiber obstruction groups and degree-zero Hom spaces.

ObFib(I, I^sat) = Ext^1(I^sat/I, S/I^sat)_0 is never computed from a resolution.
Three underived descriptions are used instead:

* ``gorenstein_formula``: for a one-dimensional Gorenstein S/I^sat it is dual
  to (I^sat / (I + (I^sat)^2))_a, a the jump degree of H_{S/I^sat};
* ``line_and_points_formula``: given J with S/J^sat a degree d subscheme of a
  line and H_{S/I^sat} a shift of H_{S/J^sat}, it is dual to
  (I^sat / (I + I^sat J^sat))_{d-2};
* ``underived_hom``: Hom(I^sat/I, C(I))_0 where C(I) is the cokernel of
  S/I^sat -> (S/I)_ell for a transverse ell.  This works in any grading and
  is the route used for N^2-graded examples.
"""

from .errors import HypothesesNotMet, NoTransverseElement, NotStabilized
from .groebner import groebner, syzygies
from .hilbert import classify_quotient, hilbert_function, jump_degree
from .ideal import (
    Ideal,
    coarse_weights,
    colon,
    irrelevant_ideal,
    minimal_generators,
    saturate,
    transverse_element,
    _linear,
    _spiral,
)
from .linalg import Echelon, kernel, rank

# -- small helpers -----------------------------------------------------------------


def _zero_degree(ring):
    return (0,) * ring.rank


def _add_deg(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _coarse(ring, deg):
    """Coarse degree of a multidegree (first grading row when it is all positive)."""
    w = coarse_weights(ring)
    if w == tuple(ring.grading[0][: ring.ngens]):
        return deg[0]
    # fall back to the column-sum grading: sum of the rows
    return sum(deg)


def _monomials(ring, deg):
    if any(x < 0 for x in deg):
        return []
    return ring.monomials(deg)


def _deg(ring, p):
    d = p.multidegree()
    if d == "inhomogeneous":
        raise ValueError(f"{p} is not homogeneous")
    return d


def _relation_degree(ring, vec, degs):
    for s, d in zip(vec, degs):
        if s:
            return _add_deg(_deg(ring, s), d)
    return None


def _normalize(ring, degree):
    if degree is None:
        return _zero_degree(ring)
    if isinstance(degree, int):
        if ring.rank != 1:
            raise ValueError("an integer degree needs an N-graded ring")
        return (degree,)
    return tuple(degree)


# -- Hom(K, S/J)_D -------------------------------------------------------------------
class Hom0Report:
    """Hom_S(K, S/J) in one degree D, with a basis of generator-image tuples."""

    def __init__(self, K, J, degree, generators, columns, basis_vectors, degs):
        self.K = K
        self.J = J
        self.degree = degree
        self.generators = generators
        self.columns = columns
        self.basis_vectors = basis_vectors
        self._degs = degs

    @property
    def dimension(self):
        return len(self.basis_vectors)

    def images(self, vec):
        """The tuple (phi(g_1), ..., phi(g_m)) for a coordinate vector."""
        ring = self.K.ring
        out = [dict() for _ in self.generators]
        for c, v in vec.items():
            i, m = self.columns[c]
            out[i][m] = v
        return tuple(ring.from_dict(d) for d in out)

    @property
    def basis(self):
        return [self.images(v) for v in self.basis_vectors]

    def coordinates(self, images):
        """Coordinate vector of a tuple of images (already reduced modulo J)."""
        index = {col: k for k, col in enumerate(self.columns)}
        vec = {}
        for i, p in enumerate(images):
            for m, c in p.terms.items():
                vec[index[(i, m)]] = c
        return vec

    def as_dict(self):
        return {
            "degree": list(self.degree),
            "dimension": self.dimension,
            "generators": [str(g) for g in self.generators],
            "basis": [[str(p) for p in b] for b in self.basis],
        }

    def __repr__(self):
        return f"Hom0Report(degree {self.degree}, dimension {self.dimension})"


def hom0(K, J, degree=None):
    """Hom_S(K, S/J)_degree.

    Unknowns are the images of the minimal generators g_i of K in
    (S/J)_{deg g_i + degree}, written in standard monomials of J; every
    syzygy of the g_i, reduced modulo J, gives linear constraints.
    """
    ring = K.ring
    D = _normalize(ring, degree)
    gens = minimal_generators(K)
    if not gens:
        return Hom0Report(K, J, D, [], [], [], [])
    degs = [_deg(ring, g) for g in gens]
    gbJ = J.gb()
    columns = []
    for i, d in enumerate(degs):
        for m in _monomials(ring, _add_deg(d, D)):
            if gbJ.standard_monomial(m):
                columns.append((i, m))
    if not columns:
        return Hom0Report(K, J, D, gens, [], [], degs)
    rows = {}
    for r, vec in enumerate(syzygies(gens, ring)):
        for c, (i, m) in enumerate(columns):
            s = vec[i]
            if not s:
                continue
            img = gbJ.normal_form(s * ring.monomial(m))
            for e, v in img.terms.items():
                rows.setdefault((r, e), {})[c] = v
    ker = kernel(list(rows.values()), range(len(columns)), one=ring.field.one)
    return Hom0Report(K, J, D, gens, columns, ker, degs)


def hom0_table(K, J, second=None):
    """Dimensions of Hom_S(K, S/J) in degrees (0, k) of an N^2-graded ring.

    ``second`` is the range of k; by default every k at which some generator
    image can be nonzero.
    """
    ring = K.ring
    if ring.rank != 2:
        raise ValueError("the (0, k) table needs an N^2 grading")
    if second is None:
        gens = minimal_generators(K)
        top = max((_deg(ring, g)[0] for g in gens), default=0)
        second = range(-top, top + 1)
    out = {}
    for k in second:
        dim = hom0(K, J, (0, k)).dimension
        if dim:
            out[k] = dim
    return out


def induced_map_rank(J, K, target, degree=None):
    """(rank, dim Hom(K, S/T)_D) for the restriction Hom(J, S/T)_D -> Hom(K, S/T)_D, K inside J."""
    ring = K.ring
    HJ = hom0(J, target, degree)
    HK = hom0(K, target, degree)
    if not HK.generators:
        return 0, 0
    gbJ = groebner(HJ.generators, track=True, ring=ring) if HJ.generators else None
    gbT = target.gb()
    lifts = []
    for f in HK.generators:
        c = gbJ.lift(f) if gbJ is not None else None
        if c is None:
            raise ValueError("K is not contained in J")
        lifts.append(c)
    images = []
    for phi in HJ.basis:
        out = []
        for c in lifts:
            acc = ring.zero()
            for ci, p in zip(c, phi):
                if ci and p:
                    acc = acc + ci * p
            out.append(gbT.normal_form(acc))
        images.append(HK.coordinates(out))
    return rank(images), HK.dimension


def restriction_cokernel(J, K, target, degree=None):
    """dim coker(Hom(J, S/T)_D -> Hom(K, S/T)_D) for K inside J."""
    r, dim = induced_map_rank(J, K, target, degree)
    return dim - r


# -- ObFib through C(I) ----------------------------------------------------------------
def underived_hom(I, degree=None, Isat=None, ell=None):
    """dim Hom_S(I^sat/I, C(I))_degree, which equals ObFib(I, I^sat) in that degree.

    C(I)_u is modelled as (S/I^sat)_{u + K deg ell} / ell^K (S/I^sat)_u with K
    large enough that multiplication by ell is bijective from there on.
    """
    ring = I.ring
    D = _normalize(ring, degree)
    Isat = Isat if Isat is not None else saturate(I)
    if Isat.issubset(I):
        return 0
    if ell is None:
        try:
            ell = transverse_element(Isat)
        except NoTransverseElement as exc:
            raise HypothesesNotMet(str(exc)) from exc
    delta = _deg(ring, ell)
    if _coarse(ring, delta) != 1:
        raise HypothesesNotMet("the transverse element must have coarse degree one")
    H = hilbert_function(Isat, 0)
    if not H.certified or H.dimension != 1:
        raise HypothesesNotMet("S/I^sat must be one-dimensional")
    s = H.stabilization_degree
    gens = minimal_generators(Isat)
    degs = [_deg(ring, g) for g in gens]
    gb_track = groebner(gens, track=True, ring=ring)
    relations = list(syzygies(gens, ring))
    for f in I.generators:
        relations.append(gb_track.lift(f))
    rel_degs = [_relation_degree(ring, r, degs) for r in relations]
    used = [_add_deg(d, D) for d in degs] + [_add_deg(d, D) for d in rel_degs if d is not None]
    K = max(0, s - min(_coarse(ring, u) for u in used)) + 1
    gb = Isat.gb()
    shift = tuple(K * x for x in delta)
    ellK = ell**K

    def basis(u):
        return [m for m in _monomials(ring, _add_deg(u, shift)) if gb.standard_monomial(m)]

    def W(u):
        E = Echelon()
        for m in _monomials(ring, u):
            if gb.standard_monomial(m):
                v = gb.normal_form(ellK * ring.monomial(m))
                if v:
                    E.add(dict(v.terms))
        return E

    columns = []
    wdim = 0
    for i, d in enumerate(degs):
        u = _add_deg(d, D)
        columns.extend((i, m) for m in basis(u))
        wdim += len(W(u).rows())
    if not columns:
        return 0
    constraint_rows = {}
    for r, (vec, rd) in enumerate(zip(relations, rel_degs)):
        if rd is None:
            continue
        E = W(_add_deg(rd, D))
        for c, (i, m) in enumerate(columns):
            s_i = vec[i]
            if not s_i:
                continue
            img = gb.normal_form(s_i * ring.monomial(m))
            if not img:
                continue
            red = E.reduce(dict(img.terms))
            for e, v in red.items():
                constraint_rows.setdefault((r, e), {})[c] = v
    ker = kernel(list(constraint_rows.values()), range(len(columns)), one=ring.field.one)
    return len(ker) - wdim


def obfib_table(I, second=None, Isat=None):
    """ObFib(I, I^sat) in degrees (0, k) of an N^2-graded ring, nonzero entries only."""
    ring = I.ring
    if ring.rank != 2:
        raise ValueError("the (0, k) table needs an N^2 grading")
    Isat = Isat if Isat is not None else saturate(I)
    ell = transverse_element(Isat)
    if second is None:
        top = max((_deg(ring, g)[0] for g in Isat.generators + I.generators), default=0)
        second = range(-top - 1, top + 2)
    out = {}
    for k in second:
        v = underived_hom(I, (0, k), Isat=Isat, ell=ell)
        if v:
            out[k] = v
    return out


# -- the two formulas ---------------------------------------------------------------------
def gorenstein_formula(I, Isat, a):
    """dim (I^sat / (I + (I^sat)^2))_a."""
    if a < 0:
        return 0
    return Isat.piece_dim(a) - (I + Isat * Isat).piece_dim(a)


def line_and_points_formula(I, Isat, Jsat, d):
    """dim (I^sat / (I + I^sat J^sat))_{d-2}."""
    e = d - 2
    if e < 0:
        return 0
    return Isat.piece_dim(e) - (I + Isat * Jsat).piece_dim(e)


def _values(H, upto):
    return [H[e] for e in range(upto + 1)]


def line_pattern(Isat, Jsat):
    """d when S/J^sat is a degree-d subscheme of a line and H_{S/I^sat} - H_{S/J^sat} is constant from degree 1 on."""
    HJ = hilbert_function(Jsat, 0)
    HI = hilbert_function(Isat, 0)
    if not (HJ.certified and HI.certified and HJ.dimension == 1 and HI.dimension == 1):
        return None
    d = HJ.eventual_value
    top = max(HJ.stabilization_degree, HI.stabilization_degree) + 1
    if _values(HJ, top) != [min(e + 1, d) for e in range(top + 1)]:
        return None
    shift = {HI[e] - HJ[e] for e in range(1, top + 1)}
    if len(shift) != 1 or shift.pop() < 0:
        return None
    return d


def line_candidates(I, Isat, budget=200):
    """J candidates for the line-and-points route: I : S_+^k for k = 1, 2, 3, then I^sat : w for linear w."""
    ring = I.ring
    m = irrelevant_ideal(ring)
    power = m
    for k in range(1, 4):
        yield f"I : S_+^{k}", colon(I, power)
        power = power * m
    for n, v in enumerate(_spiral(ring.ngens, 2)):
        if n >= budget:
            break
        w = _linear(ring, v)
        yield f"I^sat : ({w})", colon(Isat, w)


def find_line_ideal(I, Isat, J=None, budget=200):
    """(J^sat, d, label) for the first J that matches the line-and-points pattern, or None."""
    if J is not None:
        Jsat = saturate(J)
        d = line_pattern(Isat, Jsat)
        return (Jsat, d, "user supplied") if d is not None and I.issubset(J) else None
    for label, cand in line_candidates(I, Isat, budget):
        if not I.issubset(cand):
            continue
        Jsat = saturate(cand)
        if Jsat == Isat:
            continue
        d = line_pattern(Isat, Jsat)
        if d is not None:
            return Jsat, d, label
    return None


# -- reports ----------------------------------------------------------------------------
class ObFibReport:
    def __init__(self, I, J, dimension, method, jump=None, details=None):
        self.I = I
        self.J = J
        self.dimension = dimension
        self.method = method
        self.jump_degree = jump
        self.details = details or {}

    @property
    def vanishing(self):
        return self.dimension == 0

    def as_dict(self):
        out = {
            "obfib_dim": self.dimension,
            "method": self.method,
            "jump_degree": self.jump_degree,
            "vanishing": self.vanishing,
            "J": str(self.J),
        }
        out.update(self.details)
        return out

    def __repr__(self):
        return f"ObFibReport(dim {self.dimension}, {self.method}, a={self.jump_degree})"


def obfib_dimension(I, J=None, method="auto", Isat=None):
    """dim ObFib(I, I^sat) by one of the underived formulas.

    ``method`` is ``auto`` (Gorenstein formula, then line and points), one of
    ``gorenstein_formula`` / ``line_and_points_formula`` / ``underived_hom``.
    ``J`` is an optional ideal for the line-and-points route.  Rings graded by
    N^r with r > 1 always use ``underived_hom`` in degree zero.
    """
    ring = I.ring
    Isat = Isat if Isat is not None else saturate(I)
    if Isat.issubset(I):
        return ObFibReport(I, Isat, 0, "saturated")
    if method == "underived_hom" or ring.rank > 1:
        return ObFibReport(I, Isat, underived_hom(I, None, Isat), "underived_hom")
    if not ring.is_standard:
        raise HypothesesNotMet("the formulas need the standard grading; use method='underived_hom'")
    H = hilbert_function(Isat, 0)
    if not H.certified or H.dimension != 1:
        raise HypothesesNotMet("S/I^sat must be one-dimensional")
    H = hilbert_function(Isat, H.stabilization_degree + 1)
    reasons = []
    if method in ("auto", "gorenstein_formula"):
        cls = classify_quotient(Isat)
        if cls.gorenstein:
            try:
                a = jump_degree(H)
            except NotStabilized as exc:  # pragma: no cover - bound chosen above
                raise HypothesesNotMet(str(exc)) from exc
            dim = gorenstein_formula(I, Isat, a)
            return ObFibReport(I, Isat, dim, "gorenstein_formula", a)
        reasons.append("S/I^sat is not Gorenstein")
        if method == "gorenstein_formula":
            raise HypothesesNotMet("; ".join(reasons))
    if method in ("auto", "line_and_points_formula"):
        found = find_line_ideal(I, Isat, J)
        if found is not None:
            Jsat, d, label = found
            dim = line_and_points_formula(I, Isat, Jsat, d)
            return ObFibReport(
                I, Isat, dim, "line_and_points_formula", d - 2, {"line_ideal": str(Jsat), "J_source": label}
            )
        reasons.append("no J with the line-and-points Hilbert function pattern")
    raise HypothesesNotMet("; ".join(reasons) or f"unknown method {method!r}")


# -- verdicts ----------------------------------------------------------------------------
class Verdict:
    """Outcome plus the evidence behind it."""

    def __init__(self, outcome, route=None, certificates=None, assumptions=None, obfib=None, reasons=None):
        self.outcome = outcome
        self.route = route
        self.certificates = certificates or []
        self.assumptions = assumptions or []
        self.obfib = obfib
        self.reasons = reasons or []

    def as_dict(self):
        return {
            "verdict": self.outcome,
            "route": self.route,
            "obfib_dim": self.obfib.dimension if self.obfib else None,
            "jump_degree": self.obfib.jump_degree if self.obfib else None,
            "assumptions": list(self.assumptions),
            "certificates": list(self.certificates),
            "reasons": list(self.reasons),
        }

    def __str__(self):
        return self.outcome

    def __repr__(self):
        return f"Verdict({self.outcome}, route={self.route})"


def recognized_smooth(Isat):
    """Name of the class that makes [I^sat] unobstructed, or None."""
    ring = Isat.ring
    if not ring.is_standard:
        return None
    cls = classify_quotient(Isat)
    if cls.dimension != 1:
        return None
    if ring.ngens <= 3:
        return "at most three variables"
    if cls.complete_intersection:
        return "complete intersection"
    if ring.ngens == 4 and cls.gorenstein:
        return "four variables and Gorenstein"
    return None


def verdict(I, assert_smooth_Jsat=False):
    """Saturated, EntirelyNonsaturable (ObFib = 0), Nonsaturable (Hom surjective, I^sat smooth) or Inconclusive."""
    Isat = saturate(I)
    if Isat.issubset(I):
        return Verdict("Saturated", "saturated", [{"saturation_equals_input": True}])
    reasons = []
    report = None
    try:
        report = obfib_dimension(I, Isat=Isat)
    except HypothesesNotMet as exc:
        reasons.append(f"ObFib formulas do not apply: {exc}")
    if report is not None:
        if report.vanishing:
            return Verdict(
                "EntirelyNonsaturable",
                "obfib_vanishes",
                [report.as_dict()],
                obfib=report,
            )
        reasons.append(f"ObFib has dimension {report.dimension}")
    coker = restriction_cokernel(Isat, I, Isat)
    cert = {"hom_restriction_cokernel": coker}
    if coker == 0:
        smooth = recognized_smooth(Isat)
        if smooth or assert_smooth_Jsat:
            assumption = f"[I^sat] smooth: recognized ({smooth})" if smooth else "[I^sat] smooth: asserted by caller"
            return Verdict(
                "Nonsaturable",
                "hom_surjective_smooth",
                [cert] + ([report.as_dict()] if report else []),
                [assumption],
                obfib=report,
            )
        reasons.append("Hom map is onto but smoothness of [I^sat] is neither recognized nor asserted")
    else:
        reasons.append(f"Hom map has cokernel of dimension {coker}")
    return Verdict("Inconclusive", None, [cert] + ([report.as_dict()] if report else []), obfib=report, reasons=reasons)
