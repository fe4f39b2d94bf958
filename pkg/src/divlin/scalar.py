"""Exact division-ring arithmetic.

Three concrete domains are provided:

``PrimeField(p)``
    residues modulo a prime, elements are :class:`GFElement`.
``Rationals``
    elements are plain :class:`fractions.Fraction` values.
``RationalQuaternions``
    the noncommutative ring H(Q), elements are :class:`Quaternion`.

Elements support the usual arithmetic operators. The module-level
functions (:func:`add`, :func:`mul`, :func:`inv`, ...) additionally check
that both operands belong to the same domain.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainMismatchError, ParseError

_RATIONAL_RE = re.compile(r"-?\d+(?:/\d+)?\Z")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def _format_fraction(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _parse_fraction(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"invalid rational literal {text!r}")
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


# ---------------------------------------------------------------------------
# Elements


class GFElement:
    """A residue class modulo the prime ``p``, stored in ``range(p)``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _check(self, other):
        if type(other) is not GFElement:
            return False
        if other.p != self.p:
            raise DomainMismatchError(f"GF({self.p}) and GF({other.p}) elements cannot be combined")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return GFElement(self.value + other.value, self.p)

    def __sub__(self, other):
        if not self._check(other):
            return NotImplemented
        return GFElement(self.value - other.value, self.p)

    def __mul__(self, other):
        if not self._check(other):
            return NotImplemented
        return GFElement(self.value * other.value, self.p)

    def __neg__(self):
        return GFElement(-self.value, self.p)

    def inverse(self) -> GFElement:
        if not self.value:
            raise ZeroDivisionError(f"zero has no inverse in GF({self.p})")
        return GFElement(pow(self.value, -1, self.p), self.p)

    def __bool__(self):
        return self.value != 0

    def __eq__(self, other):
        if type(other) is not GFElement:
            return NotImplemented
        return self.value == other.value and self.p == other.p

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"GF({self.p})({self.value})"

    def __str__(self):
        return str(self.value)


class Quaternion:
    """A rational quaternion ``a + b i + c j + d k``.

    Stored as four integer numerators over one positive common denominator,
    with the gcd of all five integers equal to 1, so the representation is
    canonical and equality is a tuple comparison.
    """

    __slots__ = ("_n", "_den")

    def __init__(self, a=0, b=0, c=0, d=0):
        qs = [Fraction(x) for x in (a, b, c, d)]
        den = math.lcm(*(q.denominator for q in qs))
        self._set(tuple(q.numerator * (den // q.denominator) for q in qs), den)

    def _set(self, nums, den):
        g = math.gcd(*nums, den)
        if g != 1:
            nums = tuple(x // g for x in nums)
            den //= g
        self._n = nums
        self._den = den

    @classmethod
    def _make(cls, nums, den):
        q = object.__new__(cls)
        q._set(nums, den)
        return q

    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(Fraction(x, self._den) for x in self._n)

    def height(self) -> int:
        """Largest absolute numerator or denominator over the four components."""
        return max(max(abs(q.numerator), q.denominator) for q in self.components())

    def __add__(self, other):
        if type(other) is not Quaternion:
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Quaternion._make(tuple(x + y for x, y in zip(self._n, other._n)), d1)
        return Quaternion._make(tuple(x * d2 + y * d1 for x, y in zip(self._n, other._n)), d1 * d2)

    def __sub__(self, other):
        if type(other) is not Quaternion:
            return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return Quaternion._make(tuple(x - y for x, y in zip(self._n, other._n)), d1)
        return Quaternion._make(tuple(x * d2 - y * d1 for x, y in zip(self._n, other._n)), d1 * d2)

    def __mul__(self, other):
        if type(other) is not Quaternion:
            return NotImplemented
        a1, b1, c1, d1 = self._n
        a2, b2, c2, d2 = other._n
        return Quaternion._make(
            (
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            ),
            self._den * other._den,
        )

    def __neg__(self):
        return Quaternion._make(tuple(-x for x in self._n), self._den)

    def conjugate(self) -> Quaternion:
        a, b, c, d = self._n
        return Quaternion._make((a, -b, -c, -d), self._den)

    def norm(self) -> Fraction:
        return Fraction(sum(x * x for x in self._n), self._den * self._den)

    def inverse(self) -> Quaternion:
        a, b, c, d = self._n
        n2 = a * a + b * b + c * c + d * d
        if not n2:
            raise ZeroDivisionError("zero quaternion has no inverse")
        den = self._den
        return Quaternion._make((a * den, -b * den, -c * den, -d * den), n2)

    def __bool__(self):
        return any(self._n)

    def __eq__(self, other):
        if type(other) is not Quaternion:
            return NotImplemented
        return self._n == other._n and self._den == other._den

    def __hash__(self):
        return hash((self._n, self._den))

    def __str__(self):
        parts = []
        for coeff, unit in zip(self.components(), ("", "i", "j", "k")):
            text = _format_fraction(coeff) + unit
            if parts and not text.startswith("-"):
                text = "+" + text
            parts.append(text)
        return "".join(parts)

    def __repr__(self):
        return f"Quaternion('{self}')"


# ---------------------------------------------------------------------------
# Domains


class ScalarDomain:
    """A division ring with exact arithmetic.

    Calling a domain coerces a Python value into it, e.g. ``QQ(2)`` or
    ``PrimeField(5)(7)``.
    """

    is_commutative = True
    is_finite = False

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def inv(self, a):
        raise NotImplementedError

    def contains(self, a) -> bool:
        raise NotImplementedError

    def parse(self, text: str):
        raise NotImplementedError

    def format(self, a) -> str:
        return str(a)

    def random(self, rng, height: int = 3):
        raise NotImplementedError

    def header(self) -> str:
        """The token sequence used after ``scalar`` in matrix files."""
        raise NotImplementedError


@dataclass(frozen=True)
class PrimeField(ScalarDomain):
    p: int

    is_finite = True

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"GF(p) requires a prime modulus, got {self.p!r}")
        if self.p <= 1 << 16:
            object.__setattr__(self, "_table", tuple(GFElement(v, self.p) for v in range(self.p)))

    def __call__(self, value):
        if type(value) is GFElement:
            if value.p != self.p:
                raise DomainMismatchError(f"GF({value.p}) element is not in GF({self.p})")
            return value
        if isinstance(value, Fraction):
            return self(value.numerator) * self(value.denominator).inverse()
        return self.element(int(value))

    def element(self, value: int) -> GFElement:
        table = self.__dict__.get("_table")
        if table is not None:
            return table[value % self.p]
        return GFElement(value, self.p)

    def inv(self, a):
        return a.inverse()

    def contains(self, a) -> bool:
        return type(a) is GFElement and a.p == self.p

    def parse(self, text: str):
        if not re.fullmatch(r"-?\d+", text):
            raise ParseError(f"invalid GF({self.p}) literal {text!r}")
        return self.element(int(text))

    def random(self, rng, height: int = 3):
        return self.element(rng.randrange(self.p))

    def elements(self):
        return [self.element(v) for v in range(self.p)]

    def header(self) -> str:
        return f"gf {self.p}"

    def __repr__(self):
        return f"GF({self.p})"


@dataclass(frozen=True)
class Rationals(ScalarDomain):
    def __call__(self, value):
        if type(value) is Fraction:
            return value
        if isinstance(value, (GFElement, Quaternion, float)):
            raise DomainMismatchError(f"{value!r} is not an exact rational")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("zero has no inverse in Q")
        return 1 / a

    def contains(self, a) -> bool:
        return type(a) is Fraction

    def parse(self, text: str):
        return _parse_fraction(text)

    def format(self, a) -> str:
        return _format_fraction(a)

    def random(self, rng, height: int = 3):
        return Fraction(rng.randint(-height, height), rng.randint(1, height))

    def header(self) -> str:
        return "rat"

    def __repr__(self):
        return "QQ"


_QUAT_TERM = re.compile(r"([+-]?)(\d+(?:/\d+)?)?([ijk]?)")


@dataclass(frozen=True)
class RationalQuaternions(ScalarDomain):
    is_commutative = False

    def __call__(self, value):
        if type(value) is Quaternion:
            return value
        if isinstance(value, (GFElement, float)):
            raise DomainMismatchError(f"{value!r} is not a rational quaternion")
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (tuple, list)):
            return Quaternion(*value)
        return Quaternion(value)

    def inv(self, a):
        return a.inverse()

    def contains(self, a) -> bool:
        return type(a) is Quaternion

    def parse(self, text: str):
        if not text:
            raise ParseError("empty quaternion literal")
        coeffs = [Fraction(0)] * 4
        pos = 0
        while pos < len(text):
            m = _QUAT_TERM.match(text, pos)
            sign, number, unit = m.groups()
            if not number and not unit:
                raise ParseError(f"invalid quaternion literal {text!r} at offset {pos}")
            if pos > 0 and not sign:
                raise ParseError(f"missing sign before term at offset {pos} in {text!r}")
            value = _parse_fraction(number) if number else Fraction(1)
            if sign == "-":
                value = -value
            coeffs[" ijk".index(unit or " ")] += value
            pos = m.end()
        return Quaternion(*coeffs)

    def random(self, rng, height: int = 3):
        return Quaternion(*(Fraction(rng.randint(-height, height), rng.randint(1, height)) for _ in range(4)))

    def header(self) -> str:
        return "quat"

    def __repr__(self):
        return "HQ"


GF = PrimeField
QQ = Rationals()
HQ = RationalQuaternions()

I = Quaternion(0, 1, 0, 0)  # noqa: E741
J = Quaternion(0, 0, 1, 0)
K = Quaternion(0, 0, 0, 1)


def domain_of(a) -> ScalarDomain:
    if type(a) is GFElement:
        return PrimeField(a.p)
    if type(a) is Fraction:
        return QQ
    if type(a) is Quaternion:
        return HQ
    raise DomainMismatchError(f"{a!r} is not an element of a supported scalar domain")


def _same(a, b) -> ScalarDomain:
    da, db = domain_of(a), domain_of(b)
    if da != db:
        raise DomainMismatchError(f"operands belong to {da!r} and {db!r}")
    return da


def add(a, b):
    _same(a, b)
    return a + b


def sub(a, b):
    _same(a, b)
    return a - b


def mul(a, b):
    _same(a, b)
    return a * b


def neg(a):
    domain_of(a)
    return -a


def inv(a):
    return domain_of(a).inv(a)


def is_zero(a) -> bool:
    domain_of(a)
    return not a


def eq(a, b) -> bool:
    return _same(a, b) is not None and a == b


def parse_domain(text: str) -> ScalarDomain:
    """Parse the tokens following ``scalar`` in a matrix header."""
    tokens = text.split()
    if not tokens:
        raise ParseError("missing scalar domain")
    kind = tokens[0]
    if kind == "gf":
        if len(tokens) != 2 or not tokens[1].isdigit():
            raise ParseError("expected 'gf <prime>'")
        p = int(tokens[1])
        if not _is_prime(p):
            raise ParseError(f"modulus {p} is not prime")
        return PrimeField(p)
    if kind == "rat" and len(tokens) == 1:
        return QQ
    if kind == "quat" and len(tokens) == 1:
        return HQ
    raise ParseError(f"unknown scalar domain {text!r}")
