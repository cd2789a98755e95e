from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from awlab.scalar import (
    ONE,
    ZERO,
    QContext,
    Scalar,
    alpha_n,
    format_rational,
    gamma_factorial,
    gamma_n,
    parse_rational,
)
from conftest import lattice_t, nonzero_scalars, rationals, scalars

H = QContext(Fraction(1, 2))


@pytest.mark.parametrize(
    "text, re, im",
    [
        ("3/4", Fraction(3, 4), 0),
        ("6i", 0, 6),
        ("-2i", 0, -2),
        ("i", 0, 1),
        ("-i", 0, -1),
        ("1/2+3/5i", Fraction(1, 2), Fraction(3, 5)),
        ("1/2-i", Fraction(1, 2), -1),
        ("-7", -7, 0),
    ],
)
def test_parse(text, re, im):
    s = Scalar.parse(text)
    assert s.re == re and s.im == im


@pytest.mark.parametrize("bad", ["", "1/0", "abc", "1/2+", "2j"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        Scalar.parse(bad)


def test_str_forms():
    assert str(Scalar(0, 6)) == "6i"
    assert str(Scalar(Fraction(1, 2), Fraction(-3, 5))) == "1/2-3/5i"
    assert str(ZERO) == "0"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-6, 8)) == "-3/4"


@given(scalars)
def test_str_round_trip(s):
    assert Scalar.parse(str(s)) == s


@given(scalars)
def test_json_round_trip(s):
    j = s.to_json()
    assert set(j) == {"re", "im"}
    assert Scalar.from_json(j) == s
    assert parse_rational(j["re"]) == s.re


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@given(nonzero_scalars)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert ONE / a == a.inverse()


def test_zero_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


@given(scalars, st.integers(min_value=-4, max_value=6))
def test_integer_powers(a, k):
    if a.is_zero() and k < 0:
        return
    expect = ONE
    for _ in range(abs(k)):
        expect = expect * a
    if k < 0:
        expect = expect.inverse()
    assert a ** k == expect


@given(scalars)
def test_hash_consistent_with_int(a):
    if a.is_real() and a.re.denominator == 1:
        assert hash(a) == hash(int(a.re)) or a != int(a.re)
    assert hash(a) == hash(Scalar(a.re, a.im))


def test_mixed_arithmetic():
    assert Scalar(1, 1) * 2 == Scalar(2, 2)
    assert 1 - Scalar(0, 1) == Scalar(1, -1)
    assert Scalar(0, 1) * Scalar(0, 1) == Scalar(-1)
    assert Scalar(1, 1) / Scalar(1, -1) == Scalar(0, 1)
    assert Scalar(3) == 3 and Scalar(Fraction(1, 2)) == Fraction(1, 2)


@pytest.mark.parametrize("t", [Fraction(0), Fraction(1), Fraction(-1, 2), Fraction(3, 2)])
def test_qcontext_rejects(t):
    with pytest.raises(ValueError):
        QContext(t)


def test_qcontext_basics():
    assert H.q == Fraction(1, 4)
    assert H.alpha == Scalar(Fraction(5, 4))
    assert H.q_pow(-1) == Scalar(4)
    assert H.t_pow(3) == Scalar(Fraction(1, 8))
    assert QContext.parse("2/3").t == Fraction(2, 3)


# examples for the lattice sequences
def test_alpha_examples():
    assert alpha_n(H, 0) == ONE
    assert alpha_n(QContext(Fraction(2, 3)), 0) == ONE
    assert alpha_n(H, 1) == Scalar(Fraction(5, 4))
    assert alpha_n(H, 2) == Scalar(Fraction(17, 8))


def test_gamma_examples():
    assert gamma_n(H, 0) == ZERO
    assert gamma_n(H, 1) == ONE
    assert gamma_n(H, 2) == Scalar(Fraction(5, 2))
    assert gamma_n(H, -1) == Scalar(-1)
    assert alpha_n(H, -1) == H.alpha


def test_gamma_factorial_examples():
    assert gamma_factorial(H, 0) == ONE
    assert gamma_factorial(H, 1) == ONE
    assert gamma_factorial(H, 2) == Scalar(Fraction(5, 2))
    assert gamma_factorial(H, 3) == gamma_n(H, 3) * Scalar(Fraction(5, 2))


@given(lattice_t, st.integers(min_value=0, max_value=15))
def test_lattice_recurrences(t, n):
    ctx = QContext(t)
    a = ctx.alpha
    # alpha_{n+1} = 2 alpha alpha_n - alpha_{n-1}; gamma likewise
    assert alpha_n(ctx, n + 1) == 2 * a * alpha_n(ctx, n) - alpha_n(ctx, n - 1)
    assert gamma_n(ctx, n + 1) == 2 * a * gamma_n(ctx, n) - gamma_n(ctx, n - 1)
    # gamma_{n+1} = alpha gamma_n + alpha_n
    assert gamma_n(ctx, n + 1) == a * gamma_n(ctx, n) + alpha_n(ctx, n)
    # gamma_{2n} = 2 alpha_n gamma_n
    assert gamma_n(ctx, 2 * n) == 2 * alpha_n(ctx, n) * gamma_n(ctx, n)


@given(rationals)
def test_rational_text_round_trip(r):
    assert parse_rational(format_rational(r)) == r
