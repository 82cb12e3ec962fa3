import random
from fractions import Fraction

import pytest
from helpers import kills, revalidate

from saturable.apolarity import CONTRACTION, DualPolynomial
from saturable.errors import ShapeMismatch, SquareDoesNotAnnihilate
from saturable.rank3 import (
    PATTERNS,
    annihilates,
    apolar_ideal,
    cactus_via_square,
    candidate_changes,
    change_coordinates,
    exclude_wild,
    is_unimodal,
    middle_generator,
    pattern_holds,
    pull_back,
    special_case_3,
    special_case_4,
)
from saturable.replication import random_gl, random_ternary


def dp(D, text):
    return DualPolynomial(D.parse(text), CONTRACTION)


def test_apolar_ideal_symmetric(D):
    _, H = apolar_ideal(dp(D, "x0^6 + x1^6 + x2^6"))
    assert H == [1, 3, 3, 3, 3, 3, 1]
    assert is_unimodal(H)
    assert not is_unimodal([1, 3, 1, 3, 1])


def test_middle_generator_fermat(S, D, a):
    F = dp(D, "x0^6 + x1^6 + x2^6")
    sigma = middle_generator(F, a[0])
    assert sigma.degree() == 4
    assert kills([sigma], F)
    assert not all(e[0] >= 1 for e in sigma.terms)


def test_middle_generator_power(S, D, a):
    sigma = middle_generator(dp(D, "x1^6"), a[1])
    assert kills([sigma], dp(D, "x1^6"))
    assert not all(e[1] >= 1 for e in sigma.terms)


def test_middle_generator_random_quintic(S, D, a):
    rng = random.Random(3)
    F = random_ternary(rng, D, 5, density=1.0)
    sigma = middle_generator(F, a[0])
    assert kills([sigma], F) and any(e[0] == 0 for e in sigma.terms)


def test_square_route(S, D, a):
    cert = cactus_via_square(dp(D, "x1^5 + x1^2*x2^3"), a[0])
    assert cert.valid and cert.r == 6
    ok, deg = revalidate(cert)
    assert ok and deg <= 6


def test_square_does_not_annihilate(S, D, a):
    with pytest.raises(SquareDoesNotAnnihilate):
        cactus_via_square(dp(D, "x0^2*x2"), a[0])


def test_square_route_binary_always(S, D, a):
    rng = random.Random(4)
    for d in range(3, 8):
        F = random_ternary(rng, D, d, lambda m: m[0] == 0)
        cert = cactus_via_square(F, a[0])
        assert revalidate(cert)[0] and cert.r <= 2 * ((d + 2) // 2)


def test_special_case_3_sextic(D):
    cert = special_case_3(dp(D, "x0*x1*x2^4 + x0^6 + x1^6"))
    assert cert.r <= 9
    assert revalidate(cert)[0]


def test_special_case_3_without_mixed_term(D):
    cert = special_case_3(dp(D, "x0^3"))
    assert cert.r <= 2 and revalidate(cert)[0]
    cert = special_case_3(dp(D, "x0^5 + x1^2*x2^3"))
    assert cert.r <= 8 and revalidate(cert)[0]


def test_special_case_3_shape(D):
    with pytest.raises(ShapeMismatch):
        special_case_3(dp(D, "x0*x1*x2 + x0^3"))
    with pytest.raises(ShapeMismatch):
        special_case_3(dp(D, "x0^2*x1^2*x2^2"))


def test_special_case_3_residual_branch(D):
    cert = special_case_3(dp(D, "x0*x1*x2^2 + x0^2*x2^2 + x0^4 + x1^2*x2^2 + x1^4"))
    assert cert.r <= 7 and revalidate(cert)[0]


def test_special_case_4(S, D, a):
    F = dp(D, "x0*x2^5 + x1^6")
    cert = special_case_4(F)
    assert cert.r <= 9 and revalidate(cert)[0]


def test_special_case_4_binary_only(D):
    cert = special_case_4(dp(D, "x1^3*x2^3 + x2^6"))
    assert cert.r <= 4 and revalidate(cert)[0]


def test_special_case_4_theta_solve(S, D, a):
    F = dp(D, "x0*x2^4 + x1^2*x2^3 + x2^5")
    cert = special_case_4(F)
    assert revalidate(cert)[0]
    assert any(annihilates(g, F) and g.degree() == 3 for g in cert.ideal.generators)


def test_random_certificates_revalidate(D):
    rng = random.Random(21)
    for n in range(12):
        d = 4 + n % 4
        F3 = random_ternary(rng, D, d, lambda m: m[1] == 0 or m[0] == 0 or m == (1, 1, d - 2))
        F4 = random_ternary(rng, D, d, lambda m: m[0] == 0 or m[2] == 0 or m == (1, 0, d - 1))
        for cert in (special_case_3(F3), special_case_4(F4)):
            ok, _ = revalidate(cert)
            assert ok and cert.r <= d + 3


def test_change_and_pull_back(S, D):
    rng = random.Random(2)
    F = random_ternary(rng, D, 5, lambda m: m[0] == 0)
    M = random_gl(rng, 3)
    G = change_coordinates(F, M)
    cert = cactus_via_square(F, S.gen(0))
    back = pull_back(list(cert.ideal.generators), [[S.field(Fraction(str(v))) for v in row] for row in _inverse(M)])
    assert kills(back, G)


def _inverse(M):
    import sympy

    return sympy.Matrix(M).inv().tolist()


def test_patterns(S, D):
    F = dp(D, "x0*x1*x2^4 + x0^6 + x1^6")
    assert pattern_holds(F, 3)
    assert set(PATTERNS) == {1, 2, 3, 4}


def test_exclude_wild_square_first(D):
    rep = exclude_wild(dp(D, "x1^5 + x1^2*x2^3"), 6)
    assert rep["status"] == "Certified" and rep["pattern"] == "square"
    assert rep["cactus_rank_bound"] <= 5 + 2


def test_exclude_wild_pattern_one(D):
    rep = exclude_wild(dp(D, "x0*x1*x2^4 + x0^6 + x1^6"), 9)
    assert rep["status"] == "Certified"
    assert rep["certificate"]["valid"]
    assert rep["cactus_rank_bound"] <= 9


def test_exclude_wild_generic_septic(S, D):
    rng = random.Random(17)
    F = random_ternary(rng, D, 7, density=1.0)
    assert not any(pattern_holds(F, k) for k in PATTERNS)
    rep = exclude_wild(F, 10, search=False)
    assert rep["status"] == "NotApplicableInTheseCoordinates"
    assert rep["changes_tried"] == 1


def test_exclude_wild_rank_too_big(D):
    assert exclude_wild(dp(D, "x0^4"), 8)["status"] == "NotApplicable"
    assert len(candidate_changes()) > len(candidate_changes(search=False))
