from fractions import Fraction

import pytest

from saturable.errors import DivisionInInput, ParseError, UnknownVariable
from saturable.field import field_for
from saturable.replication import bb_ring
from saturable.ring import GradedRing, Order, compare


def test_parse_monomial(S):
    p = S.parse("a0^2*a2")
    assert list(p.terms) == [(2, 0, 1)]


def test_parse_distributes(S, a):
    assert S.parse("a0*a2*(a0 - a2)") == a[0] ** 2 * a[2] - a[0] * a[2] ** 2
    assert S.parse("a0*a2*(a0-a2)") == S.parse("a0^2*a2 - a0*a2^2")


def test_rational_literals(S, a):
    p = S.parse("3/4*a0 - 1/4*a0")
    assert p == a[0] * S.field(Fraction(1, 2))


@pytest.mark.parametrize("text,err", [("a0 + b7", UnknownVariable), ("a0 / a1", DivisionInInput), ("a0 +", ParseError), ("(a0", ParseError)])
def test_parse_errors(S, text, err):
    with pytest.raises(err):
        S.parse(text)


def test_multidegree(S):
    assert S.parse("a0^2*a2").multidegree() == (3,)
    assert S.parse("a0 + a0^2").multidegree() == "inhomogeneous"


def test_bigraded_multidegree():
    B = bb_ring()
    assert B.parse("a0*a1").multidegree() == (2, 1)
    assert B.parse("a0*a2").multidegree() == (2, 0)


def test_orders():
    assert compare((2, 0, 1), (1, 0, 2)) > 0
    assert compare((1, 0, 0), (0, 5, 0), Order("lex")) > 0
    assert compare((0, 1, 1), (1, 0, 1)) < 0
    # grevlex refines degree
    assert compare((0, 0, 2), (1, 0, 0)) > 0


def test_product_degree_is_additive(S):
    p, q = S.parse("a0*a1 + a2^2"), S.parse("a1^3 - a0*a1*a2")
    assert (p * q).multidegree() == (5,)


def test_prime_field_arithmetic():
    R = GradedRing(["u", "v"], characteristic=7)
    p = R.parse("3*u + 5*u")
    assert p == R.parse("u")
    assert field_for(7).characteristic == 7


def test_exponent_overflow_is_checked(S):
    with pytest.raises((OverflowError, ValueError)):
        S.parse("a0^100000000000000000000")


def test_print_roundtrip(S):
    p = S.parse("-a0^3 + 2/3*a0*a1*a2 - a2^3 + 5")
    assert S.parse(str(p)) == p
