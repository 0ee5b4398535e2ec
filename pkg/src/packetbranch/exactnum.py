"""Exact half-integer arithmetic.

Every parameter in the package lives in ``(1/2)Z``.  A :class:`HalfInt` stores
twice its value as an integer, so equality and ordering are plain integer
operations.  Values are confined to the signed 64-bit range; anything outside
raises :class:`OverflowError` instead of silently growing.
"""
from __future__ import annotations

import enum
import math
import re
from fractions import Fraction
from typing import Union

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_TEXT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class Ordering(enum.Enum):
    LT = -1
    EQ = 0
    GT = 1


def _check_int64(value: int, what: str) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"{what} {value} exceeds the 64-bit range")
    return value


class HalfInt:
    """An element ``twice_value / 2`` of the half-integers."""

    __slots__ = ("twice_value",)

    def __init__(self, twice_value: int):
        if isinstance(twice_value, bool) or not isinstance(twice_value, int):
            raise TypeError(f"twice_value must be int, got {type(twice_value).__name__}")
        object.__setattr__(self, "twice_value", _check_int64(twice_value, "twice_value"))

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def of(cls, value: Union["HalfInt", int, Fraction]) -> "HalfInt":
        """Coerce an int, a HalfInt or a Fraction with denominator 1 or 2."""
        if isinstance(value, HalfInt):
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        if isinstance(value, int):
            return cls(2 * value)
        if isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            return cls(value.numerator * (2 // value.denominator))
        raise TypeError(f"cannot convert {type(value).__name__} to HalfInt")

    @classmethod
    def parse(cls, text: str) -> "HalfInt":
        """Parse ``"a"`` or ``"a/2"``; decimals are rejected."""
        m = _TEXT_RE.match(text)
        if m is None:
            raise ValueError(f"not a half-integer: {text!r} (use 'a' or 'a/2')")
        num = int(m.group(1))
        den = m.group(2)
        if den is None:
            return cls(2 * num)
        if int(den) == 1:
            return cls(2 * num)
        if int(den) != 2:
            raise ValueError(f"not a half-integer: {text!r} (denominator must be 2)")
        return cls(num)

    @property
    def is_integral(self) -> bool:
        return self.twice_value % 2 == 0

    def to_fraction(self) -> Fraction:
        return Fraction(self.twice_value, 2)

    def floor(self) -> int:
        return self.twice_value // 2

    def ceil(self) -> int:
        return -((-self.twice_value) // 2)

    def __int__(self) -> int:
        if not self.is_integral:
            raise ValueError(f"{self} is not an integer")
        return self.twice_value // 2

    def __str__(self) -> str:
        if self.is_integral:
            return str(self.twice_value // 2)
        return f"{self.twice_value}/2"

    def __repr__(self) -> str:
        return f"HalfInt({self})"

    def __hash__(self) -> int:
        return hash(self.to_fraction())

    def _other(self, other) -> int | None:
        if isinstance(other, HalfInt):
            return other.twice_value
        if isinstance(other, int) and not isinstance(other, bool):
            return 2 * other
        return None

    def __add__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return HalfInt(_check_int64(self.twice_value + t, "sum"))

    __radd__ = __add__

    def __sub__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return HalfInt(_check_int64(self.twice_value - t, "difference"))

    def __rsub__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return HalfInt(_check_int64(t - self.twice_value, "difference"))

    def __neg__(self) -> "HalfInt":
        return HalfInt(_check_int64(-self.twice_value, "negation"))

    def __abs__(self) -> "HalfInt":
        return self if self.twice_value >= 0 else -self

    def __eq__(self, other):
        t = self._other(other)
        if t is None:
            return NotImplemented
        return self.twice_value == t

    def __lt__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice_value < t

    def __le__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice_value <= t

    def __gt__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice_value > t

    def __ge__(self, other):
        t = self._other(other)
        return NotImplemented if t is None else self.twice_value >= t


def half(n: int) -> HalfInt:
    """``n / 2`` as a HalfInt."""
    return HalfInt(n)


def compare(a: HalfInt, b: HalfInt) -> Ordering:
    a, b = HalfInt.of(a), HalfInt.of(b)
    if a.twice_value < b.twice_value:
        return Ordering.LT
    if a.twice_value > b.twice_value:
        return Ordering.GT
    return Ordering.EQ


def binomial(n: int, k: int) -> int:
    """``C(n, k)``, zero when ``k`` is outside ``[0, n]``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return _check_int64(math.comb(n, k), f"C({n},{k}) =")
