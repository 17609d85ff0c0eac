"""Exact scalars: rationals with arbitrary-precision integer parts.

The ground field is the rationals throughout; ``fractions.Fraction``
already keeps values in lowest terms with a positive denominator, so it
is used directly as the scalar type.  No floating point enters any
algebraic module (floats appear only in the Monte Carlo sampler).
"""

from fractions import Fraction

Scalar = Fraction

ZERO = Scalar(0)
ONE = Scalar(1)


def scalar(value) -> Scalar:
    """Coerce an int, Fraction or ``"p/q"`` string to a Scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, int):
        return Scalar(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot build an exact scalar from {value!r}")


def parse_scalar(text: str) -> Scalar:
    """Parse ``"3/4"`` or ``"-2"`` into a Scalar."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Scalar(int(num), int(den))
    return Scalar(int(text))


def format_scalar(value: Scalar) -> str:
    """Format a Scalar as ``"3/4"`` or ``"-2"`` (denominator 1 omitted)."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
