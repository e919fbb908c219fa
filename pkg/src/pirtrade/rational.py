"""Exact rational plumbing: parsing, decimal rendering, grids.

`fractions.Fraction` is the rational type throughout the package: it is
arbitrary precision, always stored in lowest terms with a positive
denominator, and its arithmetic and comparisons are exact.
"""

from fractions import Fraction

Rat = Fraction


def rat(value, den=None) -> Fraction:
    """Build an exact rational from ints, strings like "31/125", or Fractions.

    Floats are rejected: binary floats would silently contaminate exact
    pipelines with rounding error.
    """
    if den is not None:
        return Fraction(value, den)
    if isinstance(value, float):
        raise TypeError("refusing to build an exact rational from a float")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_exact(x: Fraction) -> str:
    """Render as "p/q" (or "p" for integers)."""
    return str(Fraction(x))


def format_decimal(x: Fraction, digits: int = 6) -> str:
    """Fixed-point decimal string, rounded half-to-even at `digits` places.

    Implemented with integer arithmetic only; the rounding is the single
    place where exact values are coarsened, and only for display.
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    x = Fraction(x)
    scale = 10**digits
    q, r = divmod(x.numerator * scale, x.denominator)
    double_r = 2 * r
    if double_r > x.denominator or (double_r == x.denominator and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    whole, frac = divmod(abs(q), scale)
    return f"{sign}{whole}.{frac:0{digits}d}"


def exact_grid(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    """`n` evenly spaced exact rationals covering [lo, hi] inclusive."""
    if n < 2:
        raise ValueError("grid needs at least 2 points")
    lo, hi = Fraction(lo), Fraction(hi)
    if lo > hi:
        raise ValueError("empty grid interval")
    step = Fraction(hi - lo, n - 1)
    return [lo + i * step for i in range(n)]
