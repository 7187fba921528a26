from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skewinc.errors import DivisionByZero, MixedFields, ValidationError
from skewinc.fields import GF, QQ, PrimeField, field_from_spec, is_prime

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q.numerator) < 10**6)
primes = st.sampled_from([2, 3, 5, 7, 11, 101, 2147483647])


def test_small_examples():
    assert QQ(Fraction(1, 2)) + QQ(Fraction(1, 3)) == QQ(Fraction(5, 6))
    assert GF(5)(2).inv() == GF(5)(3)
    with pytest.raises(DivisionByZero):
        QQ(0).inv()
    with pytest.raises(ZeroDivisionError):
        QQ(1) / QQ(0)
    with pytest.raises(MixedFields):
        GF(5)(1) + GF(7)(1)


def test_parsing():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    assert GF(7).parse("-1") == 6
    assert QQ.format(Fraction(-4, 2)) == "-2"
    with pytest.raises(ValidationError):
        QQ.parse("1/0")
    with pytest.raises(TypeError):
        QQ.coerce(0.5)
    assert field_from_spec("F5") == GF(5)
    assert field_from_spec("Q") is QQ
    for bad in ("F4", "F1", "R", "F", "F-3"):
        with pytest.raises(ValidationError):
            field_from_spec(bad)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    with pytest.raises(ValidationError):
        PrimeField(9)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    x, y, z = QQ(a), QQ(b), QQ(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + QQ(0) == x and x * QQ(1) == x
    assert x - x == QQ(0)
    if x:
        assert x * x.inv() == QQ(1)


@given(primes, st.integers(), st.integers(), st.integers())
def test_prime_field_axioms(p, a, b, c):
    F = GF(p)
    x, y, z = F(a), F(b), F(c)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert -x + x == F(0)
    if x:
        assert x * x.inv() == F(1)
        assert (x / y if y else x) * (y if y else F(1)) == x


@given(primes, st.integers(1, 10**9))
def test_fermat(p, a):
    F = GF(p)
    x = F(a)
    if x:
        assert F(pow(a, p - 1, p)) == F(1)


def test_elements_enumeration():
    assert list(GF(3).elements()) == [0, 1, 2]
