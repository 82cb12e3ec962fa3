"""Worked examples as fixtures, and a runner that re-derives every headline number.

Each ``check_*`` returns ``(passed, detail)``; ``replicate`` runs them all,
optionally in worker processes.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor

from .apolarity import DIFFERENTIATION, DualPolynomial, dual_ring, ideal_from_dual, linear_dual, power
from .decide import decide_saturable
from .field import QQ
from .groebner import syzygies
from .hilbert import hilbert_function
from .ideal import Ideal, ideal, saturate
from .limits import limit_ideal, limit_subspace, same_span, verify_limit_forms
from .obstruction import hom0_table, obfib_dimension, obfib_table, restriction_cokernel
from .oracles import dense_contains, dense_hilbert, dense_syzygy_gap, perp_perp_equal
from .rank3 import (
    apolar_ideal,
    cactus_via_square,
    is_unimodal,
    middle_generator,
    special_case_3,
    special_case_4,
    validate,
)
from .ring import GradedRing

# -- rings -----------------------------------------------------------------------------
def plane():
    return GradedRing(["a0", "a1", "a2"])


def bb_ring():
    return GradedRing(["a0", "a1", "a2"], grading=[[1, 1, 1], [0, 1, 0]])


# -- three points in the plane ------------------------------------------------------------
THREE_POINTS = [[1, 0, 0], [1, [0, 1], 1], [0, 0, 1]]  # [1:t:1] written with t = [0, 1]
THREE_POINTS_LIMIT = "a0*a1, a1^2, a1*a2, a0^2*a2 - a0*a2^2"
THREE_POINTS_SAT = "a1, a0^2*a2 - a0*a2^2"


def three_points_ideal():
    return ideal(plane(), THREE_POINTS_LIMIT)


# -- partially saturable ideal ------------------------------------------------------------
PARTIAL = "a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6"
PARTIAL_SAT = "a0^2, a0*a1^3, a1^6"
PARTIAL_DEFORMED = "a0*a1^2 + a0^2*a2, a0*a1^3, a0^2*a1^2, a0^3*a1, a0^5, a1^6"
PARTIAL_DEFORMED_SAT = "a0*a1^2 + a0^2*a2, a0^2*a1, a0^3, a1^6"


def partial_ideal():
    return ideal(plane(), PARTIAL)


# -- the torus-graded example ----------------------------------------------------------------
BB = "a0^3, a0*a1^2, a0^2*a2, a0*a1*a2, a0*a2^4, a2^6"
BB_OBFIB = {-1: 1}
BB_HOM = {6: 1, 5: 1, 4: 1, 3: 1, 2: 1, 1: 4, 0: 3, -1: 2}


def bb_ideal(ring=None):
    return ideal(ring or bb_ring(), BB)


# -- inverse-system builders -----------------------------------------------------------------
def _dp(D, text):
    return DualPolynomial(D.parse(text), DIFFERENTIATION)


def _binary(D, i, j, e):
    return [_dp(D, f"x{i}^{e - k}*x{j}^{k}") for k in range(e + 1)]


def four_collinear(q):
    """Four points on the line x2 = x3 = 0 of P^3, plus the quadric q in the degree-2 inverse system."""
    S = GradedRing(["a0", "a1", "a2", "a3"])
    D = dual_ring(S)
    pts = [linear_dual([1, j, 0, 0], S, DIFFERENTIATION) for j in range(4)]
    pieces = {
        1: [_dp(D, f"x{i}") for i in range(4)],
        2: _binary(D, 0, 1, 2) + [_dp(D, q)],
        3: _binary(D, 0, 1, 3),
        4: [power(L, 4) for L in pts],
    }
    return ideal_from_dual(pieces, S)


FOUR_SATURABLE = "x2*x0"
FOUR_NOT_SATURABLE = "x2^2"


def five_collinear(c, q1, q2):
    """Five points on a line in P^4; c and its two partials ride along in degrees 3 and 2."""
    S = GradedRing([f"a{i}" for i in range(5)])
    D = dual_ring(S)
    pts = [linear_dual([0, 0, 0, 1, j], S, DIFFERENTIATION) for j in range(5)]
    pieces = {
        1: [_dp(D, f"x{i}") for i in range(5)],
        2: _binary(D, 3, 4, 2) + [_dp(D, q1), _dp(D, q2)],
        3: _binary(D, 3, 4, 3) + [_dp(D, c)],
        4: _binary(D, 3, 4, 4),
        5: [power(L, 5) for L in pts],
    }
    return ideal_from_dual(pieces, S)


FIVE_SATURABLE = ("x0*x3^2 + x1*x3*x4 + x2*x4^2", "2*x0*x3 + x1*x4", "x1*x3 + 2*x2*x4")
FIVE_NOT_SATURABLE = ("x0^2*x3", "x0*x3", "x0^2")


def line_and_point(q):
    """Four points on a line of P^4 and one point off it, with q added in degree 2."""
    S = GradedRing([f"a{i}" for i in range(5)])
    D = dual_ring(S)
    pts = [linear_dual([0, 0, 0, 1, j], S, DIFFERENTIATION) for j in range(4)]
    pts.append(linear_dual([0, 0, 1, 0, 0], S, DIFFERENTIATION))
    pieces = {1: [_dp(D, f"x{i}") for i in range(5)], 2: [power(L, 2) for L in pts] + [_dp(D, q)]}
    for e in (3, 4, 5):
        pieces[e] = [power(L, e) for L in pts]
    return ideal_from_dual(pieces, S)


# -- five points degenerating onto a line -------------------------------------------------
def five_points_family():
    """Five points p_i(t) degenerating to points mu_i on a line, with the limit forms G and exponents.

    Returns a dict with the dual ring D (parameter t), the points p, and for
    each e in 1, 2, 3 the pair (G, exponents) whose t-adic scaling recovers
    the limit of span(p_i^e).
    """
    D = GradedRing([f"x{i}" for i in range(5)], parameters=("t",))
    x = D.gens()
    t = D["t"]
    mu = [x[4] - x[3], x[4] + x[3], x[4] - 2 * x[3], x[4] + 2 * x[3], x[4]]
    w = [-4, -4, 1, 1, 6]  # sum w_i mu_i^3 = 0
    c1 = [QQ(0), QQ(0), QQ(1) / 8, QQ(1) / 8, QQ(-1) / 24]
    c2 = [0, 1, 0, 0, 0]
    c3 = [1, 0, 0, 1, 0]
    c4 = [0, 0, 1, 0, 1]
    p = [mu[i] + t * c1[i] * x[0] + t**2 * (c2[i] * x[0] + c3[i] * x[1] + c4[i] * x[2]) for i in range(5)]
    ti = D.index("t")

    def div_t(f):
        assert all(e[ti] >= 1 for e in f.terms)
        return D.from_dict({e[:ti] + (e[ti] - 1,): c for e, c in f.terms.items()})

    half = QQ(1) / 2
    H = div_t(sum((w[i] * p[i] ** 3 for i in range(5)), D.zero())) * (QQ(1) / 3)
    dH4 = H.derivative(4)
    forms = {
        3: ([p[0] ** 3, p[1] ** 3, p[2] ** 3, p[4] ** 3, H], [0, 0, 0, 0, 1]),
        2: ([p[0] ** 2, p[1] ** 2, p[4] ** 2, H.derivative(3), div_t(dH4) * half], [0, 0, 0, 1, 2]),
        1: (
            [p[0], p[4], div_t(dH4.derivative(4)) * half, div_t(dH4.derivative(3)) * half, div_t(dH4.derivative(0)) * half],
            [0, 0, 2, 2, 2],
        ),
    }
    return {"ring": D, "mu": mu, "points": p, "forms": forms}


def point_coordinates(p, D):
    """Coordinates of a linear form over k[t] as coefficient lists, low degree first."""
    ti = D.index("t")
    out = [[] for _ in range(D.ngens)]
    for e, c in p.terms.items():
        k = next(j for j in range(D.ngens) if e[j])
        L = out[k]
        while len(L) <= e[ti]:
            L.append(QQ(0))
        L[e[ti]] += c
    return out


# -- random inputs ----------------------------------------------------------------------
def random_ideal(rng, ring, max_degree=4, ngens=None):
    ngens = ngens or rng.randint(1, 4)
    gens = []
    for _ in range(ngens):
        d = rng.randint(1, max_degree)
        monos = ring.monomials(d)
        picks = rng.sample(monos, min(len(monos), rng.randint(1, 4)))
        g = ring.from_dict({m: ring.field(rng.choice([-3, -2, -1, 1, 2, 3])) for m in picks})
        gens.append(g)
    return Ideal(ring, gens)


def random_ternary(rng, D, d, keep=lambda m: True, density=0.6):
    while True:
        terms = {m: D.field(rng.randint(-5, 5)) for m in D.monomials(d) if keep(m) and rng.random() < density}
        terms = {m: c for m, c in terms.items() if c}
        if terms:
            return DualPolynomial(D.from_dict(terms))


def random_gl(rng, n):
    from .linalg import rank

    while True:
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if rank([{j: QQ(v) for j, v in enumerate(row) if v} for row in M]) == n:
            return M


def change_ideal(I, M):
    return Ideal(I.ring, [g.linear_change(M) for g in I.generators])


# -- checks -------------------------------------------------------------------------------------
def check_three_points():
    S = plane()
    t0 = time.perf_counter()
    L = limit_ideal(THREE_POINTS, 4, S)
    dt = time.perf_counter() - t0
    want = ideal(S, THREE_POINTS_LIMIT)
    same = all(same_span(L.ideal.degree_piece(e), want.degree_piece(e)) for e in range(1, 5))
    sat = saturate(L.ideal) == ideal(S, THREE_POINTS_SAT)
    return same and sat and dt < 1, f"limit {L.ideal}, saturation ok {sat}, {dt:.2f}s"


def check_partial():
    S = plane()
    t0 = time.perf_counter()
    I = partial_ideal()
    Isat = saturate(I)
    h = hilbert_function(I, 5).as_list(5)
    hs = hilbert_function(Isat, 7).as_list(7)
    coker = restriction_cokernel(Isat, I, Isat)
    h1 = hilbert_function(saturate(ideal(S, PARTIAL_DEFORMED)), 7).as_list(7)
    dt = time.perf_counter() - t0
    ok = (
        h == [1, 3, 6, 9, 9, 9]
        and hs == [1, 3, 5, 7, 8, 9, 9, 9]
        and Isat == ideal(S, PARTIAL_SAT)
        and coker == 1
        and h1 == [1, 3, 6, 7, 8, 9, 9, 9]
        and dt < 10
    )
    return ok, f"H {h}, H_sat {hs}, cokernel {coker}, H of the deformed saturation {h1}, {dt:.2f}s"


def check_bb():
    t0 = time.perf_counter()
    I = bb_ideal()
    ob = obfib_table(I)
    hom = hom0_table(I, I)
    sq = hilbert_function(ideal(plane(), BB) ** 2, 9)[9]
    dt = time.perf_counter() - t0
    ok = ob == BB_OBFIB and hom == BB_HOM and sq == 17 and dt < 30
    return ok, f"ObFib {ob}, Hom {hom}, H_(S/I^2)(9) = {sq}, {dt:.2f}s"


def check_three_points_verdict():
    I = three_points_ideal()
    ob = obfib_dimension(I)
    v = decide_saturable(I)
    return ob.dimension == 1 and v.outcome == "Saturable", f"ObFib {ob.dimension} ({ob.method}), {v.outcome}"


def check_four_points(changes=20, seed=4):
    rng = random.Random(seed)
    out = []
    ok = True
    for q, want in ((FOUR_SATURABLE, "Saturable"), (FOUR_NOT_SATURABLE, "NotSaturable")):
        I = four_collinear(q)
        got = decide_saturable(I).outcome
        moved = [decide_saturable(change_ideal(I, random_gl(rng, 4))).outcome for _ in range(changes)]
        ok = ok and got == want and all(m == want for m in moved)
        out.append(f"{q}: {got}, {sum(m == want for m in moved)}/{changes} after changes")
    return ok, "; ".join(out)


def check_five_points():
    fam = five_points_family()
    D = fam["ring"]
    x = D.gens()
    mu = fam["mu"]
    c1 = [QQ(0), QQ(0), QQ(1) / 8, QQ(1) / 8, QQ(-2) / 8]
    s1 = sum((c1[i] * mu[i] ** 2 for i in range(5)), D.zero())
    s2 = sum((mu[i].derivative(4).coefficient((0,) * D.nvars) * c1[i] ** 2 for i in range(5)), QQ(0))
    ident = s1 == x[3] ** 2 and s2 == QQ(6) / 64
    certified = []
    for e, (G, d) in sorted(fam["forms"].items()):
        F = [q**e for q in fam["points"]]
        rep = verify_limit_forms(F, G, d)
        certified.append(rep.certified and same_span(rep.limit, limit_subspace(F).basis))
    S = GradedRing([f"a{i}" for i in range(5)])
    L = limit_ideal([point_coordinates(q, D) for q in fam["points"]], 4, S)
    H = L.hilbert()
    ok = ident and all(certified) and H == [1, 5, 5, 5, 5]
    return ok, f"identities {ident} (6/64 = {s2}), limit forms certified {certified}, H {H}"


def check_wild(count=200, seed=7):
    from .apolarity import dual_ring as _dual

    rng = random.Random(seed)
    S = plane()
    D = _dual(S)
    a = S.gens()
    t0 = time.perf_counter()
    bad = []
    n_certs = 0
    for n in range(count):
        d = 3 + n % 6
        F = random_ternary(rng, D, d)
        _, H = apolar_ideal(F)
        if H != H[::-1] or not is_unimodal(H):
            bad.append(f"H {H}")
        ell = sum((g * rng.randint(-3, 3) for g in a), S.zero()) or a[0]
        middle_generator(F, ell)
        certs = [(cactus_via_square(random_ternary(rng, D, d, lambda m: m[0] <= 1), a[0]), 2 * ((d + 2) // 2))]
        if d >= 4:
            certs.append((special_case_3(random_ternary(rng, D, d, lambda m: m[1] == 0 or m[0] == 0 or m == (1, 1, d - 2))), d + 3))
        certs.append((special_case_4(random_ternary(rng, D, d, lambda m: m[0] == 0 or m[2] == 0 or m == (1, 0, d - 1))), d + 3))
        for cert, cap in certs:
            n_certs += 1
            checks, _ = validate(cert.F, cert.ideal, cert.r)
            if not all(checks.values()) or cert.r > cap:
                bad.append(f"{cert.route} on {cert.F}")
    dt = time.perf_counter() - t0
    return not bad and dt < 300, f"{count} forms, {n_certs} certificates, {len(bad)} failures, {dt:.1f}s"


def check_oracles(count=100, seed=8):
    rng = random.Random(seed)
    S = plane()
    mism = 0
    for _ in range(count):
        I = random_ideal(rng, S, 4)
        # membership, degrees <= 8
        for _ in range(3):
            d = rng.randint(1, 8)
            if rng.random() < 0.5:
                g = rng.choice(I.generators)
                k = d - g.degree()
                if k < 0:
                    continue
                p = g.mul_term(rng.choice(S.monomials(k)), S.field(rng.randint(1, 5)))
            else:
                p = random_ideal(rng, S, d, 1).generators[0]
            if I.contains(p) != dense_contains(I.generators, p, S):
                mism += 1
        if hilbert_function(I, 10).as_list(10) != dense_hilbert(I.generators, 10, S):
            mism += 1
        syz = syzygies(list(I.generators), S)
        top = max(g.degree() for g in I.generators)
        for e in range(top, top + 3):
            rel, span = dense_syzygy_gap(list(I.generators), syz, e, S)
            if rel != span:
                mism += 1
        for e in range(1, 6):
            if not perp_perp_equal(I, e):
                mism += 1
    return mism == 0, f"{count} random ideals, {mism} mismatches"


CHECKS = {
    "1 three points limit": check_three_points,
    "2 partially saturable example": check_partial,
    "3 torus-graded example": check_bb,
    "4 three points verdict": check_three_points_verdict,
    "5 four collinear points": check_four_points,
    "6 five points on a line": check_five_points,
    "7 ternary form certificates": check_wild,
    "8 oracle suites": check_oracles,
}


def _run(name):
    t0 = time.perf_counter()
    try:
        ok, detail = CHECKS[name]()
    except Exception as exc:  # a crash is a failed check, reported with its type
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return name, ok, detail, time.perf_counter() - t0


def replicate(jobs=1, names=None):
    """[(name, passed, detail, seconds)] in a fixed order; ``names`` may be prefixes such as '3'."""
    if names:
        picked = [n for n in CHECKS if any(n == q or n.startswith(q + " ") for q in names)]
        unknown = [q for q in names if not any(n == q or n.startswith(q + " ") for n in CHECKS)]
        if unknown:
            raise ValueError(f"no check named {unknown[0]!r}")
        names = picked
    else:
        names = list(CHECKS)
    if jobs <= 1:
        return [_run(n) for n in names]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_run, names))
