from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from divlin import scalar
from divlin.errors import DomainMismatchError, ParseError
from divlin.scalar import GF, HQ, QQ, I, J, K, Quaternion, parse_domain
from strategies import DOMAINS, nonzero_scalars, scalars


def test_quaternion_units():
    one = HQ.one()
    assert I * I == J * J == K * K == -one
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K and K * J == -I and I * K == -J
    assert I * J * K == -one


def test_ij_not_ji():
    assert scalar.mul(I, J) != scalar.mul(J, I)


def test_inverse_of_j():
    assert scalar.inv(J) == -J


def test_gf_arithmetic():
    F = GF(7)
    assert F(3) * F(5) == F(1)
    assert F(3).inverse() == F(5)
    assert F(-1) == F(6)
    assert F(Fraction(1, 2)) == F(4)


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(1)


def test_mixed_domains_rejected():
    with pytest.raises(DomainMismatchError):
        scalar.add(GF(2)(1), GF(3)(1))
    with pytest.raises(DomainMismatchError):
        scalar.mul(GF(2)(1), Fraction(1))
    with pytest.raises(DomainMismatchError):
        GF(3)(GF(2)(1))
    with pytest.raises(TypeError):
        GF(2)(1) + GF(3)(1)


def test_zero_inverse():
    for dom in (GF(5), QQ, HQ):
        with pytest.raises(ZeroDivisionError):
            dom.inv(dom.zero())


@pytest.mark.parametrize("text, expected", [
    ("1/2+3i-1j+0k", Quaternion(Fraction(1, 2), 3, -1, 0)),
    ("i", I),
    ("-k", -K),
    ("2-3/4j", Quaternion(2, 0, Fraction(-3, 4))),
    ("1+i+i", Quaternion(1, 2)),
    ("0", HQ.zero()),
])
def test_quaternion_parse(text, expected):
    assert HQ.parse(text) == expected


@pytest.mark.parametrize("text", ["", "1i2", "+", "1/0", "i j", "2x", "1+-i", "--1"])
def test_quaternion_parse_errors(text):
    with pytest.raises(ParseError):
        HQ.parse(text)


def test_canonical_formats():
    assert HQ.format(Quaternion(Fraction(1, 2), 3, -1, 0)) == "1/2+3i-1j+0k"
    assert HQ.format(HQ.zero()) == "0+0i+0j+0k"
    assert QQ.format(Fraction(-6, 4)) == "-3/2"
    assert QQ.format(Fraction(5)) == "5"
    assert GF(5).format(GF(5)(-1)) == "4"


def test_rational_parse():
    assert QQ.parse("-3/6") == Fraction(-1, 2)
    for bad in ("1.5", "1/-2", "", "a", "1/0"):
        with pytest.raises(ParseError):
            QQ.parse(bad)


def test_parse_domain():
    assert parse_domain("gf 5") == GF(5)
    assert parse_domain("rat") == QQ
    assert parse_domain("quat") == HQ
    for bad in ("gf 4", "gf", "gf x", "real", "rat 2"):
        with pytest.raises(ParseError):
            parse_domain(bad)


def test_large_prime_without_table():
    p = 2_147_483_647
    F = GF(p)
    x = F(123456789)
    assert x * x.inverse() == F(1)


@pytest.mark.parametrize("dom", DOMAINS, ids=repr)
@given(data=st.data())
def test_ring_axioms(dom, data):
    a, b, c = (data.draw(scalars(dom)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a + dom.zero() == a and a * dom.one() == a == dom.one() * a
    assert a - a == dom.zero()
    if dom.is_commutative:
        assert a * b == b * a


@pytest.mark.parametrize("dom", DOMAINS, ids=repr)
@given(data=st.data())
def test_two_sided_inverse(dom, data):
    a = data.draw(nonzero_scalars(dom))
    inv = dom.inv(a)
    assert a * inv == dom.one() == inv * a


@pytest.mark.parametrize("dom", DOMAINS, ids=repr)
@given(data=st.data())
def test_format_parse_round_trip(dom, data):
    a = data.draw(scalars(dom))
    text = dom.format(a)
    assert dom.parse(text) == a
    assert dom.format(dom.parse(text)) == text


@given(scalars(HQ), scalars(HQ))
def test_quaternion_norm_multiplicative(a, b):
    assert (a * b).norm() == a.norm() * b.norm()
    assert (a * b).conjugate() == b.conjugate() * a.conjugate()
