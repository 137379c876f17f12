"""Field descriptors.

A descriptor knows how to coerce Python values into its elements and
provides ``zero`` and ``one``.  Elements themselves are ordinary Python
objects with overloaded arithmetic (``Fraction``, ``RatFunc``, ``LElem``).
"""

from fractions import Fraction


class RationalField:
    """The field Q, backed by ``fractions.Fraction``."""

    name = "QQ"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, (int, str)):
            return Fraction(x)
        raise TypeError(f"cannot convert {x!r} to a rational")

    __call__ = convert

    def to_json(self, x):
        return str(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


def is_rational_square(q):
    """Return the rational square root of ``q`` or None."""
    from math import isqrt

    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_nth_root(q, n):
    """Exact n-th root of a rational, or None."""
    q = Fraction(q)
    if n == 1:
        return q
    sign = 1
    if q < 0:
        if n % 2 == 0:
            return None
        sign, q = -1, -q

    def iroot(m):
        if m < 2:
            return m
        r = int(round(m ** (1.0 / n))) if m.bit_length() < 1000 else _newton_iroot(m, n)
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == m:
                return c
        c = _newton_iroot(m, n)
        return c if c**n == m else None

    a, b = iroot(q.numerator), iroot(q.denominator)
    if a is None or b is None:
        return None
    return sign * Fraction(a, b)


def _newton_iroot(m, n):
    x = 1 << ((m.bit_length() + n - 1) // n)
    while True:
        y = ((n - 1) * x + m // x ** (n - 1)) // n
        if y >= x:
            return x
        x = y
