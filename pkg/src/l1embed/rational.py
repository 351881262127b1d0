"""Exact rational scalars: parsing and canonical serialization.

Distances are :class:`fractions.Fraction` everywhere. Text form is ``"p/q"`` in
lowest terms with a positive denominator, so ``Fraction(0)`` is ``"0/1"``.
"""
from fractions import Fraction
from numbers import Integral, Rational

__all__ = ["Fraction", "as_rational", "format_rational", "common_denominator"]


def as_rational(value):
    """Convert ``value`` to an exact :class:`Fraction`.

    Accepts integers (including numpy integer scalars), ``Fraction``, strings
    ``"p"`` / ``"p/q"``, and floats holding an integral value. Other floats are
    rejected: a binary float is not an exact input.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Integral):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational literal: {value!r}") from exc
    if isinstance(value, float) or hasattr(value, "is_integer"):
        if float(value).is_integer():
            return Fraction(int(value))
        raise TypeError(
            f"non-integral float {value!r} is not exact; pass a Fraction or a 'p/q' string"
        )
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def format_rational(value):
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


def common_denominator(values):
    """Least common multiple of the denominators of ``values`` (1 if empty)."""
    from math import lcm

    den = 1
    for v in values:
        den = lcm(den, v.denominator)
    return den
