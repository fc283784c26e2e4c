"""Exact rational scalars and their ``p/q`` text form.

The scalar domain everywhere in this package is ``int | Fraction``:
stdlib :class:`fractions.Fraction` already guarantees the invariants we
need (always reduced, positive denominator, zero is 0/1), and plain
``int`` is kept as the fast path for the very common denominator-1 case.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

Scalar = int | Fraction


def as_exact(value: int | Fraction) -> Scalar:
    """Normalize a rational: integers stay ``int``, Fractions with
    denominator 1 collapse to ``int``."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return int(value)
        return value
    if isinstance(value, int):
        return value
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Scalar:
    """Parse ``p`` or ``p/q`` (optionally signed) into an exact rational."""
    try:
        return as_exact(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid rational literal {text!r}") from exc


def format_rational(value: Scalar) -> str:
    """Render an exact rational as ``p`` or ``p/q`` (``/1`` omitted)."""
    if isinstance(value, Fraction) and value.denominator != 1:
        return f"{value.numerator}/{value.denominator}"
    return str(int(value))


def parse_sequence(text: str) -> list[Scalar]:
    """Parse a comma-separated rational list such as ``1,2,5/3``."""
    items = [part for part in text.split(",")]
    if not items or not text.strip():
        raise InputError("empty sequence literal")
    return [parse_rational(part) for part in items]
