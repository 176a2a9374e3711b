import pytest
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from tamesym.errors import InvalidField, InvalidPrime
from tamesym.fields import Field, default_modulus, is_prime


def test_rationals_basics():
    Q = Field.rationals()
    assert Q.char == 0 and Q.degree == 1
    a = Q.from_fraction(3, 6)
    assert a == Fraction(1, 2)
    assert Q.mul(a, Q.from_int(4)) == Fraction(2)
    assert Q.inv(Fraction(2, 3)) == Fraction(3, 2)


def test_prime_field():
    F5 = Field.finite(5)
    assert F5.add(3, 4) == 2
    assert F5.inv(2) == 3
    assert F5.from_int(-1) == 4
    assert sorted(F5.elements()) == [0, 1, 2, 3, 4]


def test_nonprime_rejected():
    with pytest.raises(InvalidPrime):
        Field.finite(6)


def test_default_modulus_f4():
    assert default_modulus(2, 2) == (1, 1, 1)  # x^2 + x + 1


def test_reducible_modulus_rejected():
    with pytest.raises(InvalidField):
        Field.finite(2, 2, (1, 0, 1))  # x^2 + 1 = (x+1)^2 over F_2


def test_f4_arithmetic():
    F4 = Field.finite(2, 2)
    g = F4.generator()
    # g^2 = g + 1 under x^2 + x + 1
    assert F4.mul(g, g) == F4.add(g, F4.one)
    # multiplicative order 3
    assert F4.pow(g, 3) == F4.one
    assert F4.inv(g) == F4.pow(g, 2)


def test_f8_f9_inverses_all():
    for p, m in ((2, 3), (3, 2), (5, 2)):
        F = Field.finite(p, m)
        for x in F.elements():
            if F.is_zero(x):
                continue
            assert F.mul(x, F.inv(x)) == F.one


def test_parse_scalar():
    F4 = Field.finite(2, 2)
    g = F4.generator()
    assert F4.parse_scalar("g") == g
    assert F4.parse_scalar("g+1") == F4.add(g, F4.one)
    assert F4.parse_scalar("g^2") == F4.mul(g, g)
    Q = Field.rationals()
    assert Q.parse_scalar("-3/2") == Fraction(-3, 2)
    assert Q.parse_scalar("2") == Fraction(2)
    F5 = Field.finite(5)
    assert F5.parse_scalar("1/2") == F5.div(F5.one, F5.from_int(2))


def test_format_scalar_roundtrip():
    F9 = Field.finite(3, 2)
    for x in F9.elements():
        assert F9.parse_scalar(F9.format_scalar(x)) == x


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([(2, 2), (2, 3), (3, 2)]), st.data())
def test_field_axioms(pm, data):
    F = Field.finite(*pm)
    elems = list(F.elements())
    a = data.draw(st.sampled_from(elems))
    b = data.draw(st.sampled_from(elems))
    c = data.draw(st.sampled_from(elems))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(a, F.neg(a)) == F.zero
    assert F.mul(a, F.one) == a


def test_is_prime():
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
