"""Cactus-rank certificates for ternary forms from apolar ideals.

Forms live in the divided power ring k[x0, x1, x2] (contraction semantics by
default) and are acted on by S = k[a0, a1, a2].  A certificate is a saturated
one-dimensional ideal inside Ann(F); its degree bounds the cactus rank.
"""

from functools import lru_cache
from itertools import permutations

from .apolarity import CONTRACTION, Catalecticant, DualPolynomial, annihilator, apolar_hilbert, contract
from .errors import InternalError, LinearSolveFailed, ShapeMismatch, SquareDoesNotAnnihilate
from .hilbert import hilbert_function
from .ideal import Ideal, saturate
from .linalg import express, kernel
from .ring import GradedRing, Polynomial


@lru_cache(maxsize=None)
def _primal(n, characteristic):
    return GradedRing([f"a{i}" for i in range(n)], None, characteristic)


def primal_ring(F):
    return _primal(F.ring.ngens, F.ring.characteristic)


def _as_dual(F):
    if isinstance(F, DualPolynomial):
        return F.with_semantics(CONTRACTION)
    return DualPolynomial(F, CONTRACTION)


def _half(d):
    return (d + 2) // 2  # ceil((d+1)/2)


def _mono(S, e):
    return S.monomial(tuple(e))


# -- certificates --------------------------------------------------------------------------
class RankCertificate:
    """An ideal Gamma with its four checks, each recomputed here from scratch."""

    def __init__(self, F, ideal, r, route, notes=None):
        self.F = F
        self.ideal = ideal
        self.r = r
        self.route = route
        self.notes = notes or {}
        self.checks, self.degree = validate(F, ideal, r)

    @property
    def valid(self):
        return all(self.checks.values())

    def as_dict(self):
        return {
            "form": str(self.F),
            "ideal": [str(g) for g in self.ideal.generators],
            "r": self.r,
            "degree": self.degree,
            "route": self.route,
            "checks": dict(self.checks),
            "valid": self.valid,
            **({"notes": self.notes} if self.notes else {}),
        }

    def __repr__(self):
        return f"RankCertificate(r={self.r}, degree={self.degree}, route={self.route}, valid={self.valid})"


def annihilates(sigma, F):
    return not contract(sigma, F)


def validate(F, ideal, r):
    """(checks, degree) for the claim cactus rank(F) <= r witnessed by ``ideal``."""
    H = hilbert_function(ideal, 0)
    one_dim = H.certified and H.dimension == 1
    degree = H.eventual_value if one_dim else None
    checks = {
        "saturated": saturate(ideal).issubset(ideal),
        "one_dimensional": bool(one_dim),
        "degree_at_most_r": degree is not None and degree <= r,
        "annihilates": all(annihilates(g, F) for g in ideal.generators),
    }
    return checks, degree


def _certify(F, gens, r, route, notes=None):
    S = primal_ring(F)
    cert = RankCertificate(F, Ideal(S, gens), r, route, notes)
    if not cert.valid:
        raise InternalError(f"{route} produced an ideal failing {[k for k, v in cert.checks.items() if not v]}")
    return cert


# -- apolar ideals ------------------------------------------------------------------------
def apolar_ideal(F):
    """Ann(F) after checking that H_{S/Ann(F)} is symmetric."""
    F = _as_dual(F)
    S = primal_ring(F)
    H = apolar_hilbert(F, S)
    if H != H[::-1]:
        raise InternalError(f"apolar Hilbert function {H} is not symmetric")
    return annihilator(F, S), H


def is_unimodal(H):
    i = 0
    while i + 1 < len(H) and H[i] <= H[i + 1]:
        i += 1
    return all(H[j] >= H[j + 1] for j in range(i, len(H) - 1))


def middle_generator(F, ell):
    """The first echelon basis vector of Ann(F)_e outside (ell), e = ceil((d+1)/2)."""
    F = _as_dual(F)
    S = primal_ring(F)
    d = F.degree()
    if not F or d <= 0:
        raise ValueError("middle_generator needs a nonzero form of positive degree")
    e = _half(d)
    line = Ideal(S, [ell])
    for sigma in Catalecticant(F, e, S).kernel(S):
        if not line.contains(sigma):
            return sigma
    raise InternalError(f"Ann(F)_{e} lies in ({ell}); the characteristic must divide something up to {d}")


def cactus_via_square(F, ell):
    """The complete intersection (ell^2, sigma) of degree 2e."""
    F = _as_dual(F)
    sq = ell * ell
    if not annihilates(sq, F):
        raise SquareDoesNotAnnihilate(f"({ell})^2 applied to F gives {contract(sq, F)}")
    sigma = middle_generator(F, ell)
    return _certify(F, [sq, sigma], 2 * _half(F.degree()), "square")


# -- linear algebra on contractions -----------------------------------------------------------
def _images(basis, act):
    index = {}
    rows = []
    for b in basis:
        img = act(b)
        rows.append({index.setdefault(m, len(index)): c for m, c in img.terms.items()})
    return rows, index


def _kernel_combo(S, basis, act):
    """A nonzero sum c_i basis_i killed by ``act`` (a linear map to dual forms), or None."""
    rows, index = _images(basis, act)
    cons = {}
    for i, r in enumerate(rows):
        for m, c in r.items():
            cons.setdefault(m, {})[i] = c
    ker = kernel(list(cons.values()), range(len(basis)), one=S.field.one)
    if not ker:
        return None
    return sum((basis[i] * c for i, c in ker[0].items()), S.zero())


def _solve_combo(S, basis, act, target):
    """sum c_i basis_i with act(sum) = target, or None."""
    rows, index = _images(basis, act)
    for m in target.terms:
        index.setdefault(m, len(index))
    tvec = {index[m]: c for m, c in target.terms.items()}
    coeffs = express(rows, tvec)
    if coeffs is None:
        return None
    return sum((basis[i] * c for i, c in coeffs.items()), S.zero())


def _binary_monomials(S, i, j, e):
    out = []
    for a in range(e + 1):
        ex = [0] * S.ngens
        ex[i] += a
        ex[j] += e - a
        out.append(_mono(S, ex))
    return out


def binary_certificate_gens(G, i, j):
    """(alpha_m, g) for a binary form G in x_i, x_j: g is a lowest degree binary annihilator."""
    S = primal_ring(G)
    m = ({0, 1, 2} - {i, j}).pop()
    d = G.degree()
    for s in range(1, d + 2):
        g = _kernel_combo(S, _binary_monomials(S, i, j, s), lambda b: contract(b, G))
        if g is not None:
            return [S.gen(m), g], s
    raise InternalError("a binary form always has an annihilator in degree d+1")  # pragma: no cover


def _binary_ideal(G, i, j):
    gens, _ = binary_certificate_gens(G, i, j)
    return Ideal(primal_ring(G), gens)


# -- shapes -----------------------------------------------------------------------------
def _split(F, classify):
    parts = {}
    for e, c in F.terms.items():
        key = classify(e)
        if key is None:
            raise ShapeMismatch(f"monomial {F.ring.monomial(e)} does not fit the shape")
        parts.setdefault(key, {})[e] = c
    R = F.ring
    return {k: DualPolynomial(Polynomial(R, v), CONTRACTION) for k, v in parts.items()}


def _zero(F):
    return DualPolynomial(F.ring.zero(), CONTRACTION)


def _check_ternary(F):
    if F.ring.ngens != 3:
        raise ShapeMismatch("ternary forms only")
    if not F or not F.poly.is_homogeneous():
        raise ShapeMismatch("F must be a nonzero form")


def _permute_form(F, perm):
    """Relabel x_i -> x_perm[i]."""
    R = F.ring
    terms = {}
    for e, c in F.terms.items():
        f = [0] * R.nvars
        for i, k in enumerate(e[: R.ngens]):
            f[perm[i]] += k
        terms[tuple(f) + e[R.ngens:]] = c
    return DualPolynomial(Polynomial(R, terms), CONTRACTION)


def _permute_poly(p, perm):
    R = p.ring
    return Polynomial(R, {tuple(e[perm[i]] for i in range(R.ngens)): c for e, c in p.terms.items()})


def special_case_3(F):
    """F = a x0 x1 x2^(d-2) + G(x0, x2) + H(x1, x2): an ideal of degree at most d+3 in Ann(F)."""
    F = _as_dual(F)
    _check_ternary(F)
    d = F.degree()

    def shape(e):
        if e[1] == 0:
            return "G"
        if e[0] == 0:
            return "H"
        if e[:3] == (1, 1, d - 2):
            return "a"
        return None

    parts = _split(F, shape)
    G, H = parts.get("G", _zero(F)), parts.get("H", _zero(F))
    a = parts["a"].poly.coefficient((1, 1, d - 2) + (0,) * (F.ring.nvars - 3)) if "a" in parts else None
    S = primal_ring(F)
    if a is None:
        return _sum_of_binaries(F, [(G, 0, 2), (H, 1, 2)], "special case 3, a = 0")
    if d < 4:
        raise ShapeMismatch("the mixed term x0 x1 x2^(d-2) needs d >= 4")
    scaled = DualPolynomial(F.poly * (S.field.one / a), CONTRACTION)
    gens, r, branch = _case3_gens(scaled)
    return _certify(F, gens, r, "special case 3", {"branch": branch})


def _case3_parts(F):
    d = F.degree()
    G = {e: c for e, c in F.terms.items() if e[1] == 0}
    H = {e: c for e, c in F.terms.items() if e[0] == 0 and e[1] > 0}
    R = F.ring
    return DualPolynomial(Polynomial(R, G), CONTRACTION), DualPolynomial(Polynomial(R, H), CONTRACTION), d


def _case3_gens(F):
    """Generators for F = x0 x1 x2^(d-2) + G + H (a normalized to 1)."""
    S = primal_ring(F)
    G, H, d = _case3_parts(F)
    a0, a1, a2 = S.gens()
    base = [a0**2 * a1, a0 * a1**2]
    if d % 2:
        k = (d - 1) // 2
        theta = _kernel_combo(S, _binary_monomials(S, 0, 2, k), lambda b: contract(a0**2 * b, G))
        eta = _kernel_combo(S, _binary_monomials(S, 1, 2, k), lambda b: contract(a1**2 * b, H))
        if theta is None or eta is None:
            raise LinearSolveFailed("no theta_k or eta_k; the dimension count failed")
        return base + [a0**2 * theta, a1**2 * eta], d + 3, "odd"
    k = d // 2
    theta = _kernel_combo(S, _binary_monomials(S, 0, 2, k - 1), lambda b: contract(a0**2 * b, G))
    eta = _kernel_combo(S, _binary_monomials(S, 1, 2, k - 1), lambda b: contract(a1**2 * b, H))
    if theta is not None and eta is not None:
        return base + [a0**2 * theta, a1**2 * eta], d + 2, "even (1)"
    if theta is not None:
        # the G side is the one with a nonzero kernel: swap x0 and x1 so it becomes injective
        swap = (1, 0, 2)
        gens, r, branch = _case3_even_two(_permute_form(F, swap), k)
        return [_permute_poly(g, swap) for g in gens], r, branch + ", x0 <-> x1"
    return _case3_even_two(F, k)


def _case3_even_two(F, k):
    S = primal_ring(F)
    G, H, _ = _case3_parts(F)
    a0, a1, a2 = S.gens()
    mixed = a0 * a1 * a2 ** (k - 1)
    target = F.ring.monomial((0, 0, k - 1) + (0,) * (F.ring.nvars - 3))
    theta = _solve_combo(S, _binary_monomials(S, 0, 2, k - 1), lambda b: contract(a0**2 * b, G), target)
    if theta is None:
        raise LinearSolveFailed("theta -> (a0^2 theta) . G is not onto")
    eta_basis = _binary_monomials(S, 1, 2, k - 1)
    eta = _solve_combo(S, eta_basis, lambda b: contract(a1**2 * b, H), target)
    c = 1
    if eta is None or _kernel_combo(S, eta_basis, lambda b: contract(a1**2 * b, H)) is not None:
        c = 0
        eta = _kernel_combo(S, eta_basis, lambda b: contract(a1**2 * b, H))
        if eta is None:  # pragma: no cover - not bijective means a kernel exists
            raise LinearSolveFailed("no eta")
    base = [a0**2 * a1, a0 * a1**2]
    top = a2 ** (k - 1)
    t1 = _multiple_of(theta, top)
    t2 = _multiple_of(eta, top)
    if c == 1 and t1 is not None and t2 is not None:
        return base + [a0**2 * top * t1 - a1**2 * top * t2], 2 * k + 3, "even (2), residual"
    gens = base + [a0**2 * theta - mixed, a1**2 * eta - mixed * c]
    return gens, 2 * k + 2, f"even (2), c = {c}"


def _multiple_of(p, m):
    """c with p = c m, or None."""
    if len(p.terms) != 1:
        return None
    (e, c), = p.terms.items()
    return c if m.coefficient(e) else None


def _sum_of_binaries(F, parts, route):
    """Intersection of the binary certificates of the nonzero parts; each costs at most e."""
    r = 0
    ideal = None
    for P, i, j in parts:
        if not P:
            continue
        J = _binary_ideal(P, i, j)
        r += _half(P.degree())
        ideal = J if ideal is None else ideal.intersection(J)
    gens = list(ideal.generators)
    return _certify(F, gens, r, route)


def special_case_4(F):
    """F = a x0 x2^(d-1) + G(x0, x1) + H(x1, x2): an ideal of degree at most 2e+1 <= d+3."""
    F = _as_dual(F)
    _check_ternary(F)
    d = F.degree()
    e = _half(d)

    def shape(m):
        if m[0] == 0:
            return "H"
        if m[2] == 0:
            return "G"
        if m[:3] == (1, 0, d - 1):
            return "a"
        return None

    parts = _split(F, shape)
    G, H = parts.get("G", _zero(F)), parts.get("H", _zero(F))
    S = primal_ring(F)
    if "a" not in parts:
        return _sum_of_binaries(F, [(G, 0, 1), (H, 1, 2)], "special case 4, a = 0")
    a = parts["a"].poly.coefficient((1, 0, d - 1) + (0,) * (F.ring.nvars - 3))
    a0, a1, a2 = S.gens()
    P = parts["a"] + H
    basis = _binary_monomials(S, 1, 2, e - 1)
    target = F.ring.monomial((0, 0, d - e) + (0,) * (F.ring.nvars - 3)) * a
    theta = _solve_combo(S, basis, lambda b: contract(a1 * b, H), target)
    c = 1
    if theta is None:
        c = 0
        theta = _kernel_combo(S, basis, lambda b: contract(a1 * b, H))
        if theta is None:
            raise LinearSolveFailed("theta -> (a1 theta) . H is neither onto the target nor singular")
    piece = Ideal(S, [a0**2, a0 * a1, a1 * theta - a0 * a2 ** (e - 1) * c])
    ideal = piece if not G else piece.intersection(_binary_ideal(G, 0, 1))
    assert all(annihilates(g, P) for g in piece.generators)
    r = e + 1 + (e if G else 0)
    return _certify(F, list(ideal.generators), r, "special case 4", {"c": c})


# -- coordinate changes --------------------------------------------------------------------
def change_coordinates(F, M):
    """F(M x), computed through the differentiation model (characteristic 0 or > d)."""
    F = _as_dual(F)
    p = F.to_differentiation().poly.linear_change(M)
    return DualPolynomial(p, "differentiation").to_contraction()


def _transpose(M):
    return [list(r) for r in zip(*M)]


def pull_back(gens, M):
    """Generators killing F(M x) become generators killing F: sigma(alpha) -> sigma(M^T alpha)."""
    T = _transpose(M)
    return [g.linear_change(T) for g in gens]


def candidate_changes(extra=(), search=True):
    """Identity, caller matrices, then (with ``search``) permutations and shears x_i -> x_i + c x_j."""
    out = [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]
    out.extend([list(map(list, M)) for M in extra])
    if not search:
        return out
    for p in permutations(range(3)):
        P = [[1 if j == p[i] else 0 for j in range(3)] for i in range(3)]
        if P not in out:
            out.append(P)
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            for c in (1, -1, 2):
                M = [[1 if a == b else 0 for b in range(3)] for a in range(3)]
                M[i][j] = c
                out.append(M)
    return out


PATTERNS = {
    1: ((2, 1, 0), (2, 0, 1)),
    2: ((3, 0, 0), (2, 1, 0)),
    3: ((2, 1, 0), (1, 2, 0)),
    4: ((2, 0, 1), (1, 1, 1)),
}


def pattern_holds(F, which):
    S = primal_ring(F)
    return all(annihilates(_mono(S, e), F) for e in PATTERNS[which])


def _initial_ideal_route(F, which):
    S = primal_ring(F)
    a0 = S.gen(0)
    eta = middle_generator(F, a0)
    gens = [_mono(S, e) for e in PATTERNS[which]] + [eta]
    return _certify(F, gens, 2 * _half(F.degree()) + 1, f"pattern ({which})")


def _try_coordinates(F):
    """(route, certificate) in the current coordinates, or None."""
    S = primal_ring(F)
    for i in range(3):
        if annihilates(S.gen(i) ** 2, F):
            return "square", cactus_via_square(F, S.gen(i))
    for which in (1, 2):
        if pattern_holds(F, which):
            return f"pattern ({which})", _initial_ideal_route(F, which)
    if pattern_holds(F, 3):
        return "pattern (3)", special_case_3(F)
    if pattern_holds(F, 4):
        return "pattern (4)", special_case_4(F)
    return None


def exclude_wild(F, assumed_br, changes=(), search=True):
    """Search coordinate changes for a containment pattern and build a cactus-rank certificate.

    Border rank is never computed: ``assumed_br`` is the caller's claim, and
    the conclusion cactus = smoothable = border rank only follows under it
    together with the existence of a limit ideal that no tool here certifies.
    """
    F = _as_dual(F)
    _check_ternary(F)
    d = F.degree()
    report = {
        "form": str(F),
        "degree": d,
        "assumed_border_rank": assumed_br,
        "assumptions": [
            f"border rank <= {assumed_br} (supplied, not computed)",
            "the reduction to the four containment patterns rests on a non-constructive existence step",
        ],
    }
    if assumed_br > d + 3:
        report.update(status="NotApplicable", reason=f"assumed border rank exceeds d + 3 = {d + 3}")
        return report
    tried = 0
    for M in candidate_changes(changes, search):
        tried += 1
        Fm = change_coordinates(F, M)
        try:
            found = _try_coordinates(Fm)
        except (ShapeMismatch, LinearSolveFailed):
            found = None
        if found is None:
            continue
        route, cert = found
        gens = pull_back(list(cert.ideal.generators), M)
        back = RankCertificate(F, Ideal(primal_ring(F), gens), cert.r, cert.route, cert.notes)
        report.update(
            status="Certified",
            pattern=route,
            change=[[str(x) for x in row] for row in M],
            certificate=back.as_dict(),
            cactus_rank_bound=back.r,
            conclusion=(
                f"cactus rank <= {back.r} <= d + 3; if the border rank is at most {assumed_br} "
                "then F is not wild"
            ),
        )
        if not back.valid:
            raise InternalError("a certificate stopped validating after the change of coordinates")
        return report
    report.update(status="NotApplicableInTheseCoordinates", changes_tried=tried)
    return report
