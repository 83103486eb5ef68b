"""Exact scalars: integers, rationals and the golden ring Z[tau].

Crystallographic root systems use plain ``int`` (or ``Fraction`` after a
rescaling).  Types H3, H4 and I2(5) use :class:`GoldenInt`, the element
``a + b*tau`` with ``tau**2 == tau + 1``.  Its fraction field is modelled by
:class:`GoldenRational`.  The helpers at the bottom let the rest of the package
treat all of these uniformly.
"""
from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from math import gcd
from typing import Union


def _sign_p_plus_q_sqrt5(p: int, q: int) -> int:
    """Sign of ``p + q*sqrt(5)`` for integers p, q."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger magnitude wins; p^2 == 5 q^2 is impossible
    return sp if p * p > 5 * q * q else sq


@total_ordering
class GoldenInt:
    """The element ``a + b*tau`` of Z[tau].  Treat instances as immutable.

    Ordering follows the real embedding tau = (1 + sqrt 5)/2.  Equality and
    hashing agree with ``int`` when ``b == 0``.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self.a = a
        self.b = b

    @classmethod
    def coerce(cls, x: Union[int, "GoldenInt"]) -> "GoldenInt":
        if isinstance(x, GoldenInt):
            return x
        if isinstance(x, int):
            return cls(int(x), 0)
        if isinstance(x, Fraction) and x.denominator == 1:
            return cls(x.numerator, 0)
        raise TypeError(f"cannot coerce {x!r} to GoldenInt")

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}t"
        return f"{self.a}{self.b:+d}t"

    def __reduce__(self):
        return (GoldenInt, (self.a, self.b))

    def __eq__(self, other) -> bool:
        if isinstance(other, GoldenInt):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, Fraction):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.a) if self.b == 0 else hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = GoldenInt(other, 0)
        if not isinstance(other, GoldenInt):
            return NotImplemented
        return golden_sign(self - other) < 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other):
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GoldenInt":
        return GoldenInt(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return GoldenInt(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return GoldenInt(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GoldenInt):
            return golden_mul(self, other)
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "GoldenInt":
        """Galois conjugate: tau -> 1 - tau."""
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """Field norm ``x * conj(x) = a^2 + ab - b^2``."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def exact_div(self, other) -> "GoldenInt":
        """Quotient in Z[tau]; raises ``ArithmeticError`` if it does not exist."""
        other = GoldenInt.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[tau]")
        num = self * other.conjugate()
        if num.a % n or num.b % n:
            raise ArithmeticError(f"{self} is not divisible by {other} in Z[tau]")
        return GoldenInt(num.a // n, num.b // n)

    def __float__(self) -> float:
        return self.a + self.b * TAU_FLOAT


TAU_FLOAT = (1 + 5 ** 0.5) / 2
TAU = GoldenInt(0, 1)


def golden_mul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    """(a + b t)(c + d t) = (ac + bd) + (ad + bc + bd) t."""
    a, b, c, d = x.a, x.b, y.a, y.b
    bd = b * d
    return GoldenInt(a * c + bd, a * d + b * c + bd)


def golden_sign(x: GoldenInt) -> int:
    """Exact sign of ``a + b*tau`` under tau = (1 + sqrt 5)/2."""
    # 2(a + b tau) = (2a + b) + b sqrt5
    return _sign_p_plus_q_sqrt5(2 * x.a + x.b, x.b)


def theta(x) -> int:
    """The Z-linear projection a + b tau -> a."""
    if isinstance(x, GoldenInt):
        return x.a
    if isinstance(x, int):
        return x
    raise TypeError(f"theta is defined on Z[tau], got {x!r}")


class GoldenRational:
    """Element ``num / den`` of Q(tau) with num in Z[tau], den a positive int.

    Stored in lowest terms: gcd(num.a, num.b, den) == 1, so equality is
    structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den: int = 1) -> None:
        num = GoldenInt.coerce(num)
        if not isinstance(den, int):
            raise TypeError("denominator must be an int")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            num, den = -num, -den
        g = gcd(gcd(num.a, num.b), den)
        if g > 1:
            num = GoldenInt(num.a // g, num.b // g)
            den //= g
        self.num = num
        self.den = den

    @classmethod
    def coerce(cls, x) -> "GoldenRational":
        if isinstance(x, GoldenRational):
            return x
        if isinstance(x, Fraction):
            return cls(GoldenInt(x.numerator, 0), x.denominator)
        return cls(x, 1)

    def __repr__(self) -> str:
        return f"GoldenRational({self.num!r}, {self.den})"

    def __eq__(self, other) -> bool:
        try:
            other = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.den == 1:
            return hash(self.num)
        return hash((self.num.a, self.num.b, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other):
        try:
            o = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return GoldenRational(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return GoldenRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GoldenRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "GoldenRational":
        n = self.num.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(tau)")
        # 1/(x/d) = d * conj(x) / N(x)
        return GoldenRational(self.num.conjugate() * self.den, n)

    def __truediv__(self, other):
        try:
            o = GoldenRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GoldenRational.coerce(other) * self.inverse()

    def sign(self) -> int:
        return golden_sign(self.num)


Scalar = Union[int, Fraction, GoldenInt]


def sign(x) -> int:
    """Exact sign of any supported scalar."""
    if isinstance(x, GoldenInt):
        return golden_sign(x)
    if isinstance(x, GoldenRational):
        return x.sign()
    return (x > 0) - (x < 0)


def to_field(x):
    """Lift a ring scalar into its fraction field."""
    if isinstance(x, (GoldenInt, GoldenRational)):
        return GoldenRational.coerce(x)
    return Fraction(x)


def from_field(x):
    """Drop a field element back to the ring when its denominator is 1."""
    if isinstance(x, GoldenRational):
        return x.num if x.den == 1 else x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    return x


def exact_div(x, y):
    """``x / y`` where the quotient is known to lie in the coefficient ring."""
    if isinstance(x, GoldenInt) or isinstance(y, GoldenInt):
        return GoldenInt.coerce(x).exact_div(y)
    if isinstance(x, int) and isinstance(y, int):
        q, r = divmod(x, y)
        if r:
            raise ArithmeticError(f"{x} is not divisible by {y}")
        return q
    return from_field(Fraction(x) / Fraction(y))


def is_integral(x) -> bool:
    """True for scalars lying in Z."""
    if isinstance(x, GoldenInt):
        return x.b == 0
    if isinstance(x, Fraction):
        return x.denominator == 1
    if isinstance(x, GoldenRational):
        return x.den == 1 and x.num.b == 0
    return isinstance(x, int)


def sort_key(x) -> tuple:
    """Canonical order key: golden scalars ordered by (a, b)."""
    if isinstance(x, GoldenInt):
        return (x.a, x.b)
    return (x, 0)


def to_json(x):
    """Serialise a scalar: ints as ints, golden as [a, b], rationals as "p/q"."""
    if isinstance(x, GoldenInt):
        return [x.a, x.b]
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return x
    raise TypeError(f"cannot serialise scalar {x!r}")


def from_json(x):
    if isinstance(x, list):
        return GoldenInt(int(x[0]), int(x[1]))
    if isinstance(x, str):
        return from_field(Fraction(x))
    return int(x)
