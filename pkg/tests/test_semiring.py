import pickle
from fractions import Fraction
from functools import reduce
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from expanse.errors import (DivisionByZero, EmptyInput, MalformedWeight, MixedDomains,
                            NotDivisible, NotStarrable)
from expanse.semiring import B, Q, Z, get_domain

DOMAIN_VALUES = [
    (B, st.booleans()),
    (Z, st.integers(-10**6, 10**6)),
    (Q, st.fractions(max_denominator=50)),
]


def test_zero_differs_from_one():
    for d in (B, Z, Q):
        assert d.zero != d.one
        assert not d.has_zero_divisors


def test_star_examples():
    assert Q.star(Fraction(1, 2)) == 2
    assert Z.star(0) == 1
    assert B.star(True) is True and B.star(False) is True
    with pytest.raises(NotStarrable):
        Q.star(Fraction(1))
    with pytest.raises(NotStarrable):
        Q.star(Fraction(-1))
    with pytest.raises(NotStarrable):
        Z.star(1)


def test_left_div_examples():
    assert Z.left_div(2, 6) == 3
    assert Q.left_div(Fraction(1, 2), Fraction(1, 3)) == Fraction(2, 3)
    with pytest.raises(NotDivisible):
        Z.left_div(2, 3)
    with pytest.raises(DivisionByZero):
        Z.left_div(0, 3)
    with pytest.raises(DivisionByZero):
        Q.left_div(Fraction(0), Fraction(1))


def test_norm_examples():
    assert Z.norm([2, 4]) == 2
    assert Z.norm([-2, 4]) == 2
    assert Q.norm([Fraction(1, 3), Fraction(2, 3)]) == Fraction(1, 3)
    assert B.norm([True]) is True
    for d in (B, Z, Q):
        with pytest.raises(EmptyInput):
            d.norm([])


def test_mixed_domains_rejected():
    with pytest.raises(MixedDomains):
        Z.add(1, Fraction(1))
    with pytest.raises(MixedDomains):
        Q.mul(Fraction(1), 2)
    with pytest.raises(MixedDomains):
        B.add(True, 1)
    with pytest.raises(MixedDomains):
        Z.add(True, 1)


def test_rationals_stay_reduced():
    k = Q.add(Fraction(1, 6), Fraction(1, 3))
    assert (k.numerator, k.denominator) == (1, 2)
    k = Q.mul(Fraction(-2, 4), Fraction(3))
    assert k.denominator > 0 and gcd(k.numerator, k.denominator) == 1


def test_parse_and_format():
    assert Q.parse("1/6") == Fraction(1, 6)
    assert Q.parse("-3") == Fraction(-3)
    assert Q.format(Fraction(2, 3)) == "2/3"
    assert Z.parse("-12") == -12
    assert B.parse("1") is True and B.format(False) == "0"
    for d, bad in [(Q, "1/0"), (Q, "1.5"), (Z, "1/2"), (Z, "+3"), (B, "2")]:
        with pytest.raises(MalformedWeight):
            d.parse(bad)


def test_lookup_and_pickle():
    assert get_domain("Q") is Q and get_domain("z") is Z
    with pytest.raises(ValueError):
        get_domain("r")
    assert pickle.loads(pickle.dumps(Q)) is Q


def test_complement_of_weights():
    assert Q.compl(Q.zero) == 1 and Q.compl(Fraction(5)) == 0
    assert Z.compl(0) == 1 and Z.compl(-3) == 0
    assert B.compl(False) is True


@pytest.mark.parametrize("dom,values", DOMAIN_VALUES, ids=["B", "Z", "Q"])
def test_semiring_axioms(dom, values):
    @given(values, values, values)
    def check(x, y, z):
        assert dom.add(x, dom.zero) == x
        assert dom.mul(x, dom.one) == x == dom.mul(dom.one, x)
        assert dom.mul(x, dom.zero) == dom.zero == dom.mul(dom.zero, x)
        assert dom.add(x, y) == dom.add(y, x)
        assert dom.add(dom.add(x, y), z) == dom.add(x, dom.add(y, z))
        assert dom.mul(dom.mul(x, y), z) == dom.mul(x, dom.mul(y, z))
        assert dom.mul(x, dom.add(y, z)) == dom.add(dom.mul(x, y), dom.mul(x, z))
        assert dom.mul(dom.add(x, y), z) == dom.add(dom.mul(x, z), dom.mul(y, z))
    check()


@given(st.fractions(min_value=-1, max_value=1, max_denominator=100))
def test_star_fixpoint_q(k):
    assume(abs(k) < 1)
    s = Q.star(k)
    assert s == Q.add(Q.one, Q.mul(k, s))


@given(st.booleans())
def test_star_fixpoint_b(k):
    s = B.star(k)
    assert s == B.add(B.one, B.mul(k, s))


@given(st.integers(-1000, 1000).filter(bool), st.integers(-1000, 1000))
def test_integer_left_div(k, m):
    h = k * m
    assert Z.mul(k, Z.left_div(k, h)) == h


@given(st.lists(st.integers(-500, 500).filter(bool), min_size=1, max_size=6))
def test_integer_norm_makes_coprime(coeffs):
    n = Z.norm(coeffs)
    assert n > 0
    reduced = [Z.left_div(n, c) for c in coeffs]
    assert reduce(gcd, reduced, 0) == 1


@given(st.lists(st.fractions(max_denominator=20).filter(bool), min_size=1, max_size=6))
def test_rational_norm_divides(coeffs):
    n = Q.norm(coeffs)
    reduced = [Q.left_div(n, c) for c in coeffs]
    assert reduced[0] == 1
    assert [Q.mul(n, r) for r in reduced] == coeffs
