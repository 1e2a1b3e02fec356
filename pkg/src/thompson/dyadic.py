"""Exact arithmetic over the dyadic rationals Z[1/2].

A :class:`Dyadic` is stored as ``num / 2**exp`` with ``exp >= 0`` and the
canonical form: ``exp == 0`` or ``num`` odd.  Equal values therefore have
identical ``(num, exp)`` pairs, which keeps equality and hashing trivial.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

__all__ = ["Dyadic", "DyadicLike", "as_dyadic", "mul_pow2", "compare", "LT", "EQ", "GT"]

LT, EQ, GT = -1, 0, 1

_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*2\^(\d+))?\s*$")


def _trailing_zeros(n: int) -> int:
    return (n & -n).bit_length() - 1


class Dyadic:
    __slots__ = ("num", "exp")

    num: int
    exp: int

    def __init__(self, num: int = 0, exp: int = 0):
        if not isinstance(num, int) or not isinstance(exp, int):
            raise TypeError("Dyadic needs integer numerator and exponent")
        if exp < 0:
            num <<= -exp
            exp = 0
        elif num == 0:
            exp = 0
        elif exp:
            tz = min(_trailing_zeros(num), exp)
            num >>= tz
            exp -= tz
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "exp", exp)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def from_fraction(cls, q: Fraction) -> "Dyadic":
        d = q.denominator
        if d & (d - 1):
            raise ValueError(f"{q} is not a dyadic rational")
        return cls(q.numerator, d.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Parse ``<int>`` or ``<int>/2^<uint>``."""
        m = _TEXT.match(text)
        if m is None:
            raise ValueError(f"malformed dyadic: {text!r}")
        return cls(int(m.group(1)), int(m.group(2) or 0))

    def format(self) -> str:
        if self.exp == 0:
            return str(self.num)
        return f"{self.num}/2^{self.exp}"

    __str__ = format

    def __repr__(self):
        return f"Dyadic({self.format()!r})"

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.exp)

    def __float__(self):
        return self.num / (1 << self.exp)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if self.exp >= other.exp:
            return Dyadic(self.num + (other.num << (self.exp - other.exp)), self.exp)
        return Dyadic((self.num << (other.exp - self.exp)) + other.num, other.exp)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.num, self.exp)

    def __pos__(self):
        return self

    def __abs__(self):
        return self if self.num >= 0 else -self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic(self.num * other.num, self.exp + other.exp)

    __rmul__ = __mul__

    def mul_pow2(self, e: int) -> "Dyadic":
        return Dyadic(self.num, self.exp - e)

    def floor(self) -> int:
        return self.num >> self.exp

    def ceil(self) -> int:
        return -((-self.num) >> self.exp)

    def log2_ratio(self, other: "Dyadic"):
        """Return ``e`` with ``self == other * 2**e``, or None if no such integer exists."""
        if self.num == 0 or other.num == 0 or (self.num > 0) != (other.num > 0):
            return None
        za, zb = _trailing_zeros(self.num), _trailing_zeros(other.num)
        if self.num >> za != other.num >> zb:
            return None
        return (za - self.exp) - (zb - other.exp)

    def is_integer(self) -> bool:
        return self.exp == 0

    # -- order ------------------------------------------------------------

    def _cmp(self, other: "Dyadic") -> int:
        if self.exp >= other.exp:
            a, b = self.num, other.num << (self.exp - other.exp)
        else:
            a, b = self.num << (other.exp - self.exp), other.num
        return (a > b) - (a < b)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.exp == other.exp

    def __hash__(self):
        return hash((self.num, self.exp))

    def __lt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) < 0

    def __le__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) <= 0

    def __gt__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) > 0

    def __ge__(self, other):
        other = _coerce(other)
        return other if other is NotImplemented else self._cmp(other) >= 0

    def __bool__(self):
        return self.num != 0

    def __reduce__(self):
        return (Dyadic, (self.num, self.exp))


DyadicLike = Union[Dyadic, int, str, Fraction]


def _coerce(x):
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Dyadic(x)
    return NotImplemented


def as_dyadic(x: DyadicLike) -> Dyadic:
    if isinstance(x, Dyadic):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a dyadic")
    if isinstance(x, int):
        return Dyadic(x)
    if isinstance(x, str):
        return Dyadic.parse(x)
    if isinstance(x, Fraction):
        return Dyadic.from_fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Dyadic")


def mul_pow2(a: DyadicLike, e: int) -> Dyadic:
    return as_dyadic(a).mul_pow2(e)


def compare(a: DyadicLike, b: DyadicLike) -> int:
    """Three-way comparison returning LT, EQ or GT."""
    return as_dyadic(a)._cmp(as_dyadic(b))


def pow2(e: int) -> Dyadic:
    return Dyadic(1, -e)
