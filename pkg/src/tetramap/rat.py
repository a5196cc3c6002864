"""Exact rational scalars.

All arithmetic in this package is exact.  Rationals are gmpy2.mpq when
available (much faster), with fractions.Fraction as a pure-Python fallback.
Both are canonical (reduced, positive denominator) and hashable, so they can
be used directly as dict keys for sparse polynomials and series.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ
    from gmpy2 import mpz as ZZ

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover
    QQ = Fraction
    ZZ = int
    HAVE_GMPY2 = False

Q0 = QQ(0)
Q1 = QQ(1)


def is_rational(x):
    return isinstance(x, (int, type(Q0), Fraction))


def as_rational(x):
    """Coerce ints, Fractions and rational strings like '3/4' to QQ."""
    if isinstance(x, type(Q0)):
        return x
    if isinstance(x, (int, Fraction, str)):
        return QQ(x)
    raise TypeError(f"not a rational value: {x!r}")


def igcd(a, b):
    a, b = abs(int(a)), abs(int(b))
    while b:
        a, b = b, a % b
    return a


def rational_sqrt(x):
    """Exact square root of a rational, or None if x is not a square."""
    x = as_rational(x)
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn = _isqrt(num)
    rd = _isqrt(den)
    if rn * rn == num and rd * rd == den:
        return QQ(rn, rd)
    return None


def _isqrt(n):
    if n < 0:
        raise ValueError("negative")
    import math

    return math.isqrt(n)


def bit_size(x):
    """Bit size of a rational: numerator bits + denominator bits."""
    x = as_rational(x)
    return int(x.numerator).bit_length() + int(x.denominator).bit_length()
