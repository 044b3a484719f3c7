"""Exact scalars and factorial conventions.

Every quantity in the package is a :class:`fractions.Fraction`; nothing is
ever converted to a float.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

_MEMO_BOUND = 512
_table: list[int] = [1]


def set_memo_bound(bound: int) -> None:
    """Change how many factorials are cached (values past the bound are computed on demand)."""
    global _MEMO_BOUND
    if bound < 0:
        raise ValueError("memo bound must be non-negative")
    _MEMO_BOUND = bound
    del _table[bound + 1 :]
    if not _table:
        _table.append(1)


def _int_factorial(k: int) -> int:
    if k > _MEMO_BOUND:
        return math.factorial(k)
    while len(_table) <= k:
        _table.append(_table[-1] * len(_table))
    return _table[k]


def factorial(k: int) -> Fraction:
    if k < 0:
        raise ValueError(f"factorial of negative integer {k}")
    return Fraction(_int_factorial(k))


def inv_factorial(k: int) -> Fraction:
    """Return ``1/k!``, with the convention ``1/k! = 0`` for ``k < 0``."""
    if k < 0:
        return Fraction(0)
    return Fraction(1, _int_factorial(k))


def binomial(n: int, k: int) -> Fraction:
    """C(n, k), zero outside ``0 <= k <= n``."""
    if k < 0 or k > n:
        return Fraction(0)
    return Fraction(math.comb(n, k))


def as_int(value: Fraction) -> int:
    """Return ``value`` as an int, raising if it is not integral."""
    if value.denominator != 1:
        raise ArithmeticError(f"expected an integer, got {value}")
    return value.numerator


def fmt(value: Fraction) -> str:
    """Serialize as ``"p/q"``, dropping the denominator when it is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
