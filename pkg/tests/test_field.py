from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quasidouble.field import GF, QQ, Field, FieldError

rationals = st.fractions(max_denominator=10 ** 4)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    f = QQ
    assert f.add(a, b) == f.add(b, a)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if not f.is_zero(a):
        assert f.mul(a, f.inv(a)) == f.one


@given(st.integers(), st.integers())
def test_gf7_arithmetic(a, b):
    f = GF(7)
    x, y = f.of_int(a), f.of_int(b)
    assert f.add(x, y) == (a + b) % 7
    assert f.mul(x, y) == (a * b) % 7
    if x:
        assert f.mul(x, f.inv(x)) == 1


@given(rationals)
def test_scalar_string_round_trip(a):
    assert QQ.parse(QQ.to_str(a)) == a


def test_gf_round_trip():
    f = GF(11)
    for v in range(11):
        assert f.parse(f.to_str(v)) == v
    with pytest.raises(FieldError):
        f.parse("11")


def test_field_spec_round_trip():
    for f in (QQ, GF(5)):
        assert Field.from_spec(f.spec()) == f


def test_bad_fields_rejected():
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        Field("R")


def test_exactness():
    f = QQ
    third = f.div(f.one, f.of_int(3))
    assert f.mul(third, f.of_int(3)) == f.one
    assert third == Fraction(1, 3)
