"""Degreewise flat limits of one-parameter families over k[t] (t of degree zero).

A family in degree e is a list of polynomials in a ring whose last parameter
is t; each is read as a vector over k[t] in the monomial basis of S_e.
"""

from .errors import DependentLimits, MembershipFails, PointsCollideIdentically
from .ideal import Ideal, minimal_generators
from .linalg import Echelon, Subspace, kernel, rank
from .ring import Polynomial

# -- univariate polynomials over the field: coefficient lists, low degree first ------


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def uadd(p, q, s=1):
    n = max(len(p), len(q))
    out = []
    for i in range(n):
        a = p[i] if i < len(p) else 0
        b = q[i] if i < len(q) else 0
        out.append(a + b if s == 1 else a - b if s == -1 else a + s * b)
    return _trim(out)


def umul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] = out[i + j] + a * b
    return _trim(out)


def uscale(p, c):
    return _trim([a * c for a in p]) if c else []


def udivmod(p, q):
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    p = list(p)
    dq = len(q) - 1
    lc = q[-1]
    quot = [0] * max(len(p) - dq, 0)
    while len(p) - 1 >= dq and p:
        k = len(p) - 1 - dq
        c = p[-1] / lc
        quot[k] = c
        for j, b in enumerate(q):
            p[k + j] = p[k + j] - c * b
        p.pop()
        _trim(p)
    return _trim(quot), p


def uval(p):
    """t-adic valuation (None for zero)."""
    for i, a in enumerate(p):
        if a:
            return i
    return None


def ueval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def ugcd(p, q):
    while q:
        p, q = q, udivmod(p, q)[1]
    if p:
        p = uscale(p, 1 / p[-1])
    return p


def uformat(p, name="t"):
    parts = []
    for i, a in enumerate(p):
        if not a:
            continue
        a = str(a)
        if i == 0:
            parts.append(a)
        elif i == 1:
            parts.append(f"{a}*{name}" if a != "1" else name)
        else:
            parts.append(f"{a}*{name}^{i}" if a != "1" else f"{name}^{i}")
    return " + ".join(parts) if parts else "0"


# -- families as matrices over k[t] ---------------------------------------------------
def _param_index(ring, name=None):
    if not ring.parameters:
        raise ValueError("family ring has no parameter")
    return ring.index(name or ring.parameters[-1])


def to_rows(elements, degree=None):
    """(rows, monomials): each element as {column: coefficient list in t}."""
    elements = list(elements)
    ring = elements[0].ring
    n = ring.ngens
    ti = _param_index(ring)
    monos = {}
    rows = []
    for f in elements:
        row = {}
        for e, c in f.terms.items():
            key = e[:n]
            col = monos.setdefault(key, len(monos))
            poly = row.setdefault(col, [])
            k = e[ti]
            while len(poly) <= k:
                poly.append(0)
            poly[k] = poly[k] + c
        rows.append({c: _trim(p) for c, p in row.items() if _trim(p)})
    if degree is not None:
        for m in ring.monomials(degree):
            monos.setdefault(m[:n], len(monos))
    inv = [None] * len(monos)
    for m, i in monos.items():
        inv[i] = m
    return rows, inv


def _order_columns(rows, monos, ring):
    """Renumber columns so that larger monomials (grevlex) come first."""
    from .ring import GREVLEX

    order = sorted(range(len(monos)), key=lambda i: GREVLEX.key(monos[i]), reverse=True)
    new = {old: k for k, old in enumerate(order)}
    rows = [{new[c]: p for c, p in r.items()} for r in rows]
    return rows, [monos[i] for i in order]


def hermite(rows):
    """Row echelon form over k[t] by Euclidean elimination; returns independent rows (pivots first)."""
    work = [dict(r) for r in rows if r]
    out = []
    while work:
        col = min(min(r) for r in work)
        with_col = [r for r in work if col in r]
        rest = [r for r in work if col not in r]
        while len(with_col) > 1:
            with_col.sort(key=lambda r: len(r[col]))
            piv = with_col[0]
            nxt = [piv]
            for r in with_col[1:]:
                q, _ = udivmod(r[col], piv[col])
                r2 = dict(r)
                for c, p in piv.items():
                    v = uadd(r2.get(c, []), umul(q, p), -1)
                    if v:
                        r2[c] = v
                    else:
                        r2.pop(c, None)
                if col in r2:
                    nxt.append(r2)
                elif r2:
                    rest.append(r2)
            with_col = nxt
        piv = with_col[0]
        out.append(piv)
        work = rest
    return out


def _at_zero(row):
    return {c: p[0] for c, p in row.items() if p and p[0]}


def _at(row, x):
    out = {}
    for c, p in row.items():
        v = ueval(p, x)
        if v:
            out[c] = v
    return out


def saturate_rows(rows):
    """t-saturate a basis of a free k[t]-module: afterwards the rows stay independent at t = 0."""
    rows = [dict(r) for r in rows]
    steps = 0
    while True:
        at0 = [_at_zero(r) for r in rows]
        E = Echelon()
        relation = None
        width = 1 + max((max(r) for r in rows if r), default=0)
        one = None
        for r in rows:
            for p in r.values():
                one = p[-1] / p[-1]
                break
            if one is not None:
                break
        for i, v in enumerate(at0):
            aug = dict(v)
            aug[width + i] = one
            red = E.reduce(aug)
            if min(red) >= width:
                relation = {c - width: a for c, a in red.items()}
                break
            E.add(aug)
        if relation is None:
            return rows, steps
        i0 = max(relation)
        acc = {}
        for i, a in relation.items():
            for c, p in rows[i].items():
                v = uadd(acc.get(c, []), uscale(p, a))
                if v:
                    acc[c] = v
                else:
                    acc.pop(c, None)
        # every entry vanishes at t = 0: divide by t
        new = {}
        for c, p in acc.items():
            if p[0]:
                raise AssertionError("saturation step produced a row not divisible by t")
            new[c] = p[1:]
        rows[i0] = {c: _trim(p) for c, p in new.items() if _trim(p)}
        steps += 1


class LimitResult:
    """Limit of a family of subspaces of S_e."""

    def __init__(self, ring, degree, basis, generic_rank, certificate, monomials):
        self.ring = ring
        self.degree = degree
        self.basis = basis
        self.generic_rank = generic_rank
        self.certificate = certificate
        self.monomials = monomials

    @property
    def dim(self):
        return len(self.basis)

    def subspace(self):
        return _span(self.basis)

    def __repr__(self):
        return f"LimitResult(degree {self.degree}, dim {self.dim}, generic rank {self.generic_rank})"


def _span(polys):
    """Canonical span of polynomials in one ring, columns = exponent tuples sorted descending."""
    if not polys:
        return Subspace([])
    from .ring import GREVLEX

    monos = sorted({e for p in polys for e in p.terms}, key=GREVLEX.key, reverse=True)
    idx = {m: i for i, m in enumerate(monos)}
    return Subspace([{idx[e]: c for e, c in p.terms.items()} for p in polys])


def same_span(A, B):
    """Spans of two lists of polynomials (same ring) agree."""
    allp = list(A) + list(B)
    if not allp:
        return True
    from .ring import GREVLEX

    monos = sorted({e for p in allp for e in p.terms}, key=GREVLEX.key, reverse=True)
    idx = {m: i for i, m in enumerate(monos)}
    SA = Subspace([{idx[e]: c for e, c in p.terms.items()} for p in A])
    SB = Subspace([{idx[e]: c for e, c in p.terms.items()} for p in B])
    return SA == SB


def _base_ring(ring):
    return ring.with_parameters(ring.parameters[:-1])


def _interp_det(rows, cols, field):
    """det of the square k[t]-matrix rows x cols, by evaluation at integer points and interpolation."""
    n = len(rows)
    bound = sum(max((len(r.get(c, [])) for c in cols), default=1) for r in rows)
    xs = list(range(1, bound + 2))
    vals = []
    for x in xs:
        M = [[ueval(r.get(c, []), field(x)) for c in cols] for r in rows]
        vals.append(_det(M, field))
    # Lagrange interpolation
    poly = []
    for i, (xi, yi) in enumerate(zip(xs, vals)):
        if not yi:
            continue
        basis = [field(1)]
        denom = field(1)
        for j, xj in enumerate(xs):
            if j != i:
                basis = umul(basis, [field(-xj), field(1)])
                denom = denom * (xi - xj)
        poly = uadd(poly, uscale(basis, yi / denom))
    return poly


def _det(M, field):
    M = [list(r) for r in M]
    n = len(M)
    det = field(1)
    for i in range(n):
        p = next((r for r in range(i, n) if M[r][i]), None)
        if p is None:
            return field(0)
        if p != i:
            M[i], M[p] = M[p], M[i]
            det = -det
        det = det * M[i][i]
        inv = 1 / M[i][i]
        for r in range(i + 1, n):
            if M[r][i]:
                f = M[r][i] * inv
                for c in range(i, n):
                    M[r][c] = M[r][c] - f * M[i][c]
    return det


def _nonzero_minor(rows, field):
    """A nonzero maximal minor (as a t-polynomial) of independent rows, with the columns used."""
    r = len(rows)
    if r == 0:
        return [field(1)], []
    # choose columns independent at a sample point where the rank is full
    for x in range(0, 50):
        at = [_at(row, field(x)) for row in rows]
        if rank(at) == r:
            basis, pivots = _rref_cols(at)
            cols = pivots
            return _interp_det(rows, cols, field), cols
    raise AssertionError("no evaluation point of full rank found")


def _rref_cols(rows):
    from .linalg import rref

    return rref(rows)


def limit_subspace(elements, degree=None):
    """The t -> 0 limit of the family of spans of ``elements`` (homogeneous of one S-degree).

    Returns a LimitResult whose basis lives in the ring without the parameter.
    ``certificate`` is a nonzero f(t) such that the span has the generic rank at
    every lambda with f(lambda) != 0.
    """
    elements = [f for f in elements]
    if not elements:
        raise ValueError("empty family")
    ring = elements[0].ring
    base = _base_ring(ring)
    field = ring.field
    if all(not f for f in elements):
        return LimitResult(base, degree, [], 0, [field(1)], [])
    rows, monos = to_rows([f for f in elements if f])
    rows, monos = _order_columns(rows, monos, ring)
    H = hermite(rows)
    generic = len(H)
    minor, _ = _nonzero_minor(H, field)
    sat, _ = saturate_rows(H)
    n = ring.ngens
    pad = (0,) * (base.nvars - n)
    basis = []
    for r in sat:
        v = _at_zero(r)
        basis.append(Polynomial(base, {monos[c] + pad: a for c, a in v.items()}))
    # present the limit in reduced echelon form for a canonical answer
    basis = _echelon_polys(basis, base)
    return LimitResult(base, degree, basis, generic, minor, monos)


def _echelon_polys(polys, ring):
    from .ring import GREVLEX

    monos = sorted({e for p in polys for e in p.terms}, key=GREVLEX.key, reverse=True)
    idx = {m: i for i, m in enumerate(monos)}
    S = Subspace([{idx[e]: c for e, c in p.terms.items()} for p in polys])
    return [Polynomial(ring, {monos[c]: a for c, a in v.items()}) for v in S.basis]


def module_membership(H, vec):
    """Is vec (dict column -> t-polynomial) in the k[t]-span of Hermite rows H?"""
    v = {c: list(p) for c, p in vec.items() if p}
    pivots = sorted(((min(r), r) for r in H), key=lambda x: x[0])
    for col, row in pivots:
        # columns before this pivot must already be cleared
        if any(c < col for c in v):
            return False
        if col not in v:
            continue
        q, rem = udivmod(v[col], row[col])
        if rem:
            return False
        for c, p in row.items():
            w = uadd(v.get(c, []), umul(q, p), -1)
            if w:
                v[c] = w
            else:
                v.pop(c, None)
    return not v


class LimitFormsReport:
    def __init__(self, certified, limit, certificate, degree, exponents):
        self.certified = certified
        self.limit = limit
        self.certificate = certificate
        self.degree = degree
        self.exponents = exponents

    def as_dict(self):
        return {
            "certified": self.certified,
            "degree": self.degree,
            "exponents": list(self.exponents),
            "limit": [str(p) for p in self.limit],
            "general_lambda_certificate": uformat(self.certificate),
        }

    def __repr__(self):
        return f"LimitFormsReport(certified={self.certified}, dim={len(self.limit)})"


def verify_limit_forms(F, G, d):
    """Check t^d_i G_i in the k[t]-span of F and independence of the G_i at t = 0.

    On success the F_i are independent at general lambda (whenever the reported
    f(lambda) != 0) and the limit of their span is the span of the G_i at t = 0.
    """
    F, G, d = list(F), list(G), list(d)
    if not (len(F) == len(G) == len(d)):
        raise ValueError("F, G and the exponents must have the same length")
    ring = F[0].ring
    base = _base_ring(ring)
    field = ring.field
    degs = {p.multidegree() for p in F + G if p}
    if len(degs) > 1:
        raise ValueError("all family elements must share one S-degree")
    allrows, monos = to_rows(F + G)
    rows, monos = _order_columns(allrows, monos, ring)
    Frows, Grows = rows[: len(F)], rows[len(F):]
    H = hermite(Frows)
    for i, (g, k) in enumerate(zip(Grows, d)):
        shifted = {c: [0] * k + list(p) for c, p in g.items()}
        if not module_membership(H, shifted):
            raise MembershipFails(i)
    at0 = [_at_zero(g) for g in Grows]
    if rank(at0) < len(Grows):
        raise DependentLimits("the limit forms are linearly dependent at t = 0")
    minor, _ = _nonzero_minor(Grows, field)
    certificate = umul([field(0), field(1)], minor)
    n = ring.ngens
    pad = (0,) * (base.nvars - n)
    limit = [Polynomial(base, {monos[c] + pad: a for c, a in v.items()}) for v in at0]
    return LimitFormsReport(True, limit, certificate, degs.pop() if degs else None, d)


# -- limits of ideals ----------------------------------------------------------------------
class LimitIdeal:
    def __init__(self, ideal, pieces, generic_dims, complete_signal, bound):
        self.ideal = ideal
        self.pieces = pieces
        self.generic_dims = generic_dims
        self.complete_signal = complete_signal
        self.bound = bound

    def hilbert(self):
        ring = self.ideal.ring
        return [ring.dim(e) - len(self.pieces.get(e, [])) for e in range(self.bound + 1)]

    def __repr__(self):
        return f"LimitIdeal({self.ideal})"


def _assemble(pieces, ring, bound, generic_dims):
    gens = []
    for e in range(1, bound + 1):
        gens.extend(pieces.get(e, []))
    I = Ideal(ring, gens)
    mg = minimal_generators(I)
    complete = all(g.degree() <= bound - 1 for g in mg)
    return LimitIdeal(Ideal(ring, mg), pieces, generic_dims, complete, bound)


def limit_ideal_from_family(family, bound):
    """``family`` maps a degree e to generators of the degree-e piece of I_t over k[t]."""
    ring = None
    pieces, dims = {}, {}
    for e in range(1, bound + 1):
        elems = family.get(e)
        if not elems:
            continue
        L = limit_subspace(elems, e)
        ring = L.ring
        pieces[e] = L.basis
        dims[e] = L.generic_rank
    if ring is None:
        raise ValueError("empty family")
    return _assemble(pieces, ring, bound, dims)


def _power_rows(points, e, ring):
    """Rows over k[t] of the e-th divided powers of the points (evaluation functionals on S_e)."""
    field = ring.field
    monos = ring.monomials(e)
    rows = []
    for pt in points:
        row = {}
        for j, m in enumerate(monos):
            v = [field(1)]
            for coord, k in zip(pt, m):
                for _ in range(k):
                    v = umul(v, coord)
            if v:
                row[j] = v
        rows.append(row)
    return rows, monos


def _as_upoly(x, field):
    if isinstance(x, (list, tuple)):
        return _trim([field(a) for a in x])
    if isinstance(x, Polynomial):
        ti = _param_index(x.ring)
        out = []
        for e, c in x.terms.items():
            k = e[ti]
            while len(out) <= k:
                out.append(field(0))
            out[k] = out[k] + c
        return _trim(out)
    return _trim([field(x)])


def point_family_piece(points, e, ring, route="dual"):
    """Limit at t = 0 of I(Gamma_t)_e, for points with coordinates in k[t].

    ``route='dual'`` takes the limit of the span of the powers and then its perp
    (perp is a homeomorphism of Grassmannians); ``route='kernel'`` computes
    I(Gamma_t)_e over k(t) as a kernel, clears denominators, and takes the limit.
    Returns (basis of the limit piece, generic dimension of I_e).
    """
    field = ring.field
    rows, monos = _power_rows(points, e, ring)
    if route == "dual":
        H = hermite(rows)
        sat, _ = saturate_rows(H)
        W = [_at_zero(r) for r in sat]
        ker = kernel(W, range(len(monos)), one=field.one)
        basis = [Polynomial(ring, {monos[c]: a for c, a in v.items()}) for v in ker]
        return _echelon_polys(basis, ring), len(monos) - len(H)
    K = _kernel_over_kt(rows, len(monos), field)
    if not K:
        return [], 0
    H = hermite(K)
    sat, _ = saturate_rows(H)
    basis = [Polynomial(ring, {monos[c]: a for c, a in _at_zero(r).items()}) for r in sat]
    return _echelon_polys(basis, ring), len(H)


def _kernel_over_kt(rows, ncols, field):
    """Kernel of a k[t]-matrix (rows as constraints) with polynomial entries, via fractions."""
    H = hermite(rows)
    pivots = [min(r) for r in H]
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        # x as fractions num/den over k[t]
        x = {f: ([field(1)], [field(1)])}
        for r, p in reversed(list(zip(H, pivots))):
            num, den = [], [field(1)]
            for c, a in r.items():
                if c == p or c not in x:
                    continue
                n2, d2 = x[c]
                # num/den + a*n2/d2
                num = uadd(umul(num, d2), umul(umul(a, n2), den))
                den = umul(den, d2)
                g = ugcd(num, den) if num else [field(1)]
                if num:
                    num = udivmod(num, g)[0]
                    den = udivmod(den, g)[0]
            if num:
                # x_p = -num / (den * r[p])
                dd = umul(den, r[p])
                g = ugcd(num, dd)
                x[p] = (uscale(udivmod(num, g)[0], field(-1)), udivmod(dd, g)[0])
        # clear denominators
        L = [field(1)]
        for n_, d_ in x.values():
            g = ugcd(L, d_)
            L = udivmod(umul(L, d_), g)[0]
        vec = {}
        for c, (n_, d_) in x.items():
            v = umul(n_, udivmod(L, d_)[0])
            if v:
                vec[c] = v
        out.append(vec)
    return out


def limit_ideal_of_points(points, ring, bound, route="dual"):
    """Degreewise limit of the ideals of points with coordinates in k[t].

    ``points`` are coordinate sequences whose entries are field elements,
    coefficient lists in t (low degree first), or parameter-ring polynomials.
    """
    field = ring.field
    pts = [[_as_upoly(x, field) for x in p] for p in points]
    _check_distinct(pts, field)
    pieces, dims = {}, {}
    for e in range(1, bound + 1):
        basis, gdim = point_family_piece(pts, e, ring, route)
        pieces[e] = basis
        dims[e] = gdim
    return _assemble(pieces, ring, bound, dims)


def _check_distinct(pts, field):
    """Raise when two points agree projectively for every t (all 2x2 minors vanish identically)."""
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            p, q = pts[i], pts[j]
            same = True
            for a in range(len(p)):
                for b in range(a + 1, len(p)):
                    if uadd(umul(p[a], q[b]), umul(p[b], q[a]), -1):
                        same = False
                        break
                if not same:
                    break
            if same:
                raise PointsCollideIdentically(f"points {i} and {j} coincide for all t")


def limit_ideal(family, bound, ring=None, route="dual"):
    """Limit ideal of a degree-indexed family (dict) or of a parametric point set (list)."""
    if isinstance(family, dict):
        return limit_ideal_from_family(family, bound)
    if ring is None:
        raise ValueError("a point family needs the target ring")
    return limit_ideal_of_points(family, ring, bound, route)
