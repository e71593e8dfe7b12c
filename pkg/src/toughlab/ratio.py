"""Exact nonnegative rationals with an infinity sentinel.

Finite values are plain :class:`fractions.Fraction` objects. Toughness of a
complete graph is :data:`INFINITY`, which compares greater than every finite
value and never touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from typing import Union


@total_ordering
class _Infinity:
    _instance: "_Infinity | None" = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __str__(self) -> str:
        return "inf"

    def __eq__(self, other: object) -> bool:
        return other is self

    def __hash__(self) -> int:
        return hash("toughlab.INFINITY")

    def __lt__(self, other: object) -> bool:
        if other is self or isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __gt__(self, other: object) -> bool:
        if other is self:
            return False
        if isinstance(other, (int, Fraction)):
            return True
        return NotImplemented

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

Ratio = Union[Fraction, _Infinity]


def ratio(num: int, den: int = 1) -> Fraction:
    """Build a finite ratio in lowest terms; rejects negatives and zero denominators."""
    if den <= 0:
        raise ValueError(f"denominator must be positive, got {den}")
    if num < 0:
        raise ValueError(f"ratio must be nonnegative, got {num}/{den}")
    return Fraction(num, den)


def is_finite(value: Ratio) -> bool:
    return value is not INFINITY


def format_ratio(value: Ratio) -> str:
    """Serialize as ``"p/q"`` in lowest terms (always with a denominator) or ``"inf"``."""
    if value is INFINITY:
        return "inf"
    return f"{value.numerator}/{value.denominator}"


def parse_ratio(text: str) -> Ratio:
    """Inverse of :func:`format_ratio`. Also accepts bare integers like ``"3"``."""
    text = text.strip()
    if text.lower() in ("inf", "infinity"):
        return INFINITY
    num, sep, den = text.partition("/")
    try:
        return ratio(int(num), int(den) if sep else 1)
    except ValueError as exc:
        raise ValueError(f"not a ratio: {text!r}") from exc


def ceil_ratio(value: Fraction) -> int:
    # integer ceiling without going through float
    return -((-value.numerator) // value.denominator)


def less_than(size: int, components: int, value: Ratio) -> bool:
    """True iff ``size / components < value``, i.e. ``size < value * components``.

    Used for certificates: the cut of ``size`` vertices leaving ``components``
    pieces proves toughness is strictly below ``value``.
    """
    if value is INFINITY:
        return components > 0
    return size * value.denominator < value.numerator * components

