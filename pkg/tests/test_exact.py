from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from acimpedance.errors import PoleError
from acimpedance.exact import (LAM, Polynomial, RationalFunction, evaluate, format_rational, poly_gcd,
                               ratfunc, rsum, sign_of_quadratic_form, squarefree_decomposition,
                               to_rational)

small = st.integers(min_value=-6, max_value=6)
coeff_lists = st.lists(small, min_size=1, max_size=4)
fractions_ = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def polys(draw, max_size=4):
    return Polynomial(draw(st.lists(fractions_, min_size=0, max_size=max_size)))


@st.composite
def ratfuncs(draw):
    num = draw(coeff_lists)
    den = draw(coeff_lists.filter(any))
    return ratfunc(num, den)


nonzero_ratfuncs = ratfuncs().filter(bool)


# -- literals ----------------------------------------------------------------

def test_decimal_and_fraction_literals_agree():
    assert to_rational("0.5") == to_rational("1/2") == Fraction(1, 2)
    assert to_rational(0.1) == Fraction(1, 10)
    assert to_rational("-3") == -3


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1e", float("inf"), float("nan")])
def test_bad_literals_rejected(bad):
    with pytest.raises(ValueError):
        to_rational(bad)


def test_format_rational():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-4, 2)) == "-2"


# -- polynomials ---------------------------------------------------------------

def test_zero_polynomial_has_negative_degree():
    assert Polynomial().degree == -1
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([5]).degree == 0


def test_polynomial_str():
    assert str(Polynomial([1, -2, 0, 3])) == "3*lam^3 - 2*lam + 1"
    assert str(Polynomial([0, Fraction(1, 2)])) == "1/2*lam"


@given(polys(), polys().filter(bool))
def test_division_algorithm(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@given(polys(), polys(), polys())
def test_polynomial_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == Polynomial()


@given(polys(), polys())
def test_gcd_divides_both(a, b):
    assume(a or b)
    g = poly_gcd(a, b)
    assert g.leading == 1
    assert (a % g).is_zero() and (b % g).is_zero()


def test_gcd_of_zero_and_zero():
    with pytest.raises(ValueError):
        poly_gcd(Polynomial(), Polynomial())


def test_gcd_known():
    a = Polynomial([-1, 0, 1])      # (lam - 1)(lam + 1)
    b = Polynomial([1, 2, 1])       # (lam + 1)^2
    assert poly_gcd(a, b) == Polynomial([1, 1])


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.integers(1, 3))
def test_squarefree_reassembles(roots, power):
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([-r, 1]) ** power
    parts = squarefree_decomposition(p)
    prod = Polynomial([1])
    for f, k in parts:
        assert f.leading == 1
        prod = prod * f ** k
    assert prod == p.monic()
    assert all(k % power == 0 for _, k in parts)


# -- rational functions --------------------------------------------------------

def test_canonical_form():
    f = RationalFunction([0, 2, 2], [0, 4])
    assert f.integer_form() == ([1, 1], [2])
    g = ratfunc([Fraction(1, 2)], [Fraction(-3, 4), Fraction(1, 4)])
    assert g.integer_form() == ([2], [-3, 1])
    assert RationalFunction.zero().integer_form() == ([0], [1])


def test_str_forms():
    assert str(ratfunc([1, 0, 1], [1, 1, 1])) == "(lam^2 + 1)/(lam^2 + lam + 1)"
    assert str(ratfunc([1], [2])) == "1/2"
    assert str(ratfunc([-1], [0, 1])) == "-1/lam"


def test_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        RationalFunction([1], [0])
    with pytest.raises(ZeroDivisionError):
        RationalFunction.one() / RationalFunction.zero()


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == RationalFunction.zero()
    if a:
        assert a * a.inverse() == RationalFunction.one()
        assert (b / a) * a == b


@given(ratfuncs(), ratfuncs())
def test_equal_values_have_equal_representations(a, b):
    s = a + b
    assert hash(s) == hash(b + a)
    assert s.integer_form() == (b + a).integer_form()


@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_order_is_total_and_compatible(a, b, c):
    assert sum([a < b, a == b, a > b]) == 1
    if a <= b:
        assert a + c <= b + c
    if a >= 0 and b >= 0:
        assert a * b >= 0
        assert a + b >= 0


def test_order_is_non_archimedean():
    for n in (1, 10, 10 ** 9):
        assert LAM > n
        assert LAM.inverse() < Fraction(1, n)
        assert LAM.inverse() > 0


def test_sign_from_leading_coefficients():
    assert ratfunc([5, -1], [1]).sign() == -1       # 5 - lam < 0
    assert ratfunc([1], [-1, 1]).sign() == 1        # 1/(lam - 1) > 0
    assert ratfunc([1, -1, 1], [0, 1]).is_positive()


@given(ratfuncs(), ratfuncs(), st.integers(-20, 20), st.integers(1, 7))
def test_evaluation_is_a_homomorphism(a, b, p, q):
    x = Fraction(p, q)
    try:
        va, vb = a(x), b(x)
        vs, vp = (a + b)(x), (a * b)(x)
    except PoleError:
        return
    assert vs == va + vb
    assert vp == va * vb


@given(ratfuncs(), st.complex_numbers(max_magnitude=5, allow_nan=False, allow_infinity=False))
def test_complex_evaluation_matches_exact(f, z):
    try:
        val = f(z)
    except PoleError:
        return
    assert abs(val * complex(f.den(z)) - complex(f.num(z))) <= 1e-9 * (1 + abs(f.num(z)))


def test_pole_raises():
    f = ratfunc([1], [1, 0, 1])          # 1/(lam^2 + 1)
    with pytest.raises(PoleError) as info:
        evaluate(f, 1j)
    assert info.value.point == 1j
    with pytest.raises(PoleError):
        f.__class__.lam().inverse()(0)


@given(st.lists(ratfuncs(), max_size=6))
def test_rsum_matches_pairwise_sum(terms):
    total = RationalFunction.zero()
    for t in terms:
        total = total + t
    assert rsum(terms) == total


@given(st.lists(st.tuples(ratfuncs(), ratfuncs(), nonzero_ratfuncs), max_size=5),
       st.lists(ratfuncs(), max_size=3))
def test_quadratic_form_sign_matches_reduced_sum(triples, extras):
    total = RationalFunction.zero()
    for a, b, w in triples:
        total = total + (a - b) * (a - b) * w
    for e in extras:
        total = total + e
    assert sign_of_quadratic_form(list(triples) + list(extras)) == total.sign()


def test_power():
    f = ratfunc([1, 1], [0, 1])
    assert f ** 2 == f * f
    assert f ** -1 == f.inverse()
    assert f ** 0 == RationalFunction.one()
