import pytest
import sympy

from saturable.errors import DependentLimits, MembershipFails, PointsCollideIdentically
from saturable.ideal import ideal, saturate
from saturable.limits import limit_ideal, limit_subspace, same_span, verify_limit_forms
from saturable.replication import THREE_POINTS, THREE_POINTS_LIMIT, THREE_POINTS_SAT


@pytest.fixture
def T(S):
    return S.with_parameters(("t",))


def test_single_element(T, S):
    L = limit_subspace([T.parse("a0 + t*a1")])
    assert L.generic_rank == 1 and L.basis == [L.ring.parse("a0")]


def test_t_saturation(T):
    L = limit_subspace([T.parse("t*a0")])
    assert L.generic_rank == 1 and L.basis == [L.ring.parse("a0")]


def test_two_lines_collide(T):
    # spans of a0 + t a1 and a0 - t a1 are all of <a0, a1> for t != 0
    L = limit_subspace([T.parse("a0 + t*a1"), T.parse("a0 - t*a1")])
    assert L.dim == 2 and same_span(L.basis, [L.ring.parse("a0"), L.ring.parse("a1")])


def _quadrics_through(points_t):
    """Degree-2 forms vanishing on the points, over Q(t), computed by sympy."""
    a0, a1, a2, t = sympy.symbols("a0 a1 a2 t")
    monos = [a0**2, a0 * a1, a0 * a2, a1**2, a1 * a2, a2**2]
    M = sympy.Matrix([[m.subs({a0: p[0], a1: p[1], a2: p[2]}) for m in monos] for p in points_t])
    return [sum(c * m for c, m in zip(v, monos)) for v in M.nullspace()], t


def test_intro_degree_two_against_sympy(S, T):
    t = sympy.Symbol("t")
    quads, _ = _quadrics_through([(1, 0, 0), (1, t, 1), (0, 0, 1)])
    fam = []
    for q in quads:
        q = sympy.factor(sympy.together(q))
        num, _ = sympy.fraction(q)
        fam.append(T.parse(str(sympy.expand(num)).replace("**", "^")))
    L = limit_subspace(fam)
    assert L.generic_rank == 3
    assert same_span(L.basis, [L.ring.parse(m) for m in ("a0*a1", "a1^2", "a1*a2")])


def test_intro_limit_ideal(S):
    L = limit_ideal(THREE_POINTS, 4, S)
    want = ideal(S, THREE_POINTS_LIMIT)
    for e in range(1, 5):
        assert same_span(L.ideal.degree_piece(e), want.degree_piece(e))
    assert saturate(L.ideal) == ideal(S, THREE_POINTS_SAT)
    assert L.hilbert() == [1, 3, 3, 3, 3]


def test_both_routes_agree(S):
    A = limit_ideal(THREE_POINTS, 4, S, route="dual")
    B = limit_ideal(THREE_POINTS, 4, S, route="kernel")
    assert A.ideal == B.ideal


def test_constant_family_is_the_point_ideal(S):
    pts = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]
    L = limit_ideal(pts, 3, S)
    assert all(L.ideal.contains(g) for g in ideal(S, "a0*a1 - a0*a2, a0*a2 - a1*a2").generators)
    assert L.hilbert() == [1, 3, 4, 4]


def test_colliding_points(S):
    with pytest.raises(PointsCollideIdentically):
        limit_ideal([[1, 0, 0], [2, 0, 0]], 2, S)


def test_verify_limit_forms_trivial(T):
    F = [T.parse("a0"), T.parse("a1")]
    rep = verify_limit_forms(F, F, [0, 0])
    assert rep.certified and same_span(rep.limit, [rep.limit[0].ring.parse(v) for v in ("a0", "a1")])


def test_verify_limit_forms_scaled(T):
    # (a0 + t a1) - a0 = t a1, so a1 is a limit form with exponent 1
    F = [T.parse("a0"), T.parse("a0 + t*a1")]
    G = [T.parse("a0"), T.parse("a1")]
    assert verify_limit_forms(F, G, [0, 1]).certified
    with pytest.raises(MembershipFails):
        verify_limit_forms(F, G, [0, 0])


def test_dependent_limits(T):
    F = [T.parse("a0"), T.parse("a0 + t*a1")]
    G = [T.parse("a0 + t*a1"), T.parse("a0")]
    with pytest.raises(DependentLimits):
        verify_limit_forms(F, G, [0, 0])
