"""Normalized rational functions k(t)."""

from fractions import Fraction

from .fields import QQ
from .poly import Poly, poly_gcd, poly_lcm


class RatFuncField:
    """Descriptor for k(t)."""

    characteristic = 0

    def __init__(self, base=QQ, var="t"):
        self.base = base
        self.var = var
        self.zero = RatFunc._raw(Poly((), base), Poly((1,), base), self)
        self.one = RatFunc._raw(Poly((1,), base), Poly((1,), base), self)

    @property
    def name(self):
        return f"{self.base.name}({self.var})"

    def convert(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc._raw(x, Poly((1,), self.base), self)
        c = self.base.convert(x)
        return RatFunc._raw(Poly((c,), self.base), Poly((1,), self.base), self)

    __call__ = convert

    def gen(self):
        return self.convert(Poly.x(self.base))

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other.base == self.base

    def __hash__(self):
        return hash(("RatFuncField", self.base))

    def __repr__(self):
        return self.name


def ratfunc_normalize(n, d, field=None):
    """Reduced representative n/d with monic denominator."""
    field = field or KT
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n:
        return field.zero
    g = poly_gcd(n, d)
    if g.degree > 0:
        n, d = n.exact_div(g), d.exact_div(g)
    c = d.lc
    if c != 1:
        inv = 1 / c
        n, d = n * inv, d * inv
    return RatFunc._raw(n, d, field)


class RatFunc:
    """Element of k(t): numerator/denominator, coprime, denominator monic."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den=None, field=None):
        field = field or KT
        num = num if isinstance(num, Poly) else Poly((num,), field.base)
        den = Poly((1,), field.base) if den is None else (
            den if isinstance(den, Poly) else Poly((den,), field.base))
        r = ratfunc_normalize(num, den, field)
        self.num, self.den, self.field = r.num, r.den, field

    @classmethod
    def _raw(cls, num, den, field):
        r = object.__new__(cls)
        r.num, r.den, r.field = num, den, field
        return r

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Fraction, Poly)):
            return self.field.convert(other)
        return NotImplemented

    def __bool__(self):
        return bool(self.num)

    def is_polynomial(self):
        return self.den.degree == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            return self
        if not self.num:
            return other
        if self.den == other.den:
            if self.den.degree == 0:
                return RatFunc._raw(self.num + other.num, self.den, self.field)
            return ratfunc_normalize(self.num + other.num, self.den, self.field)
        return ratfunc_normalize(self.num * other.den + other.num * self.den,
                                 self.den * other.den, self.field)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero
            return RatFunc._raw(self.num * other, self.den, self.field)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return self.field.zero
        if self.den.degree == 0 and other.den.degree == 0:
            return RatFunc._raw(self.num * other.num, self.den, self.field)
        # cross-cancel before multiplying
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n = self.num.exact_div(g1) * other.num.exact_div(g2)
        d = self.den.exact_div(g2) * other.den.exact_div(g1)
        c = d.lc
        if c != 1:
            n, d = n * (1 / c), d * (1 / c)
        return RatFunc._raw(n, d, self.field)

    __rmul__ = __mul__

    def inverse(self):
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        c = self.num.lc
        return RatFunc._raw(self.den * (1 / c), self.num * (1 / c), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc._raw(self.num**e, self.den**e, self.field)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, Poly)):
            return self == self.field.convert(other)
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0:
            return hash(self.num)
        return hash((self.num, self.den))

    def __call__(self, value):
        return self.num(value) / self.den(value)

    def valuation(self):
        """t-adic valuation (None for zero)."""
        if not self.num:
            return None
        return self.num.valuation() - self.den.valuation()

    def format(self, var=None):
        var = var or self.field.var
        n = self.num.format(var)
        if self.den.degree == 0:
            return n
        return f"({n})/({self.den.format(var)})"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"RatFunc({self.format()})"


KT = RatFuncField()


def common_denominator(values):
    """Monic lcm of the denominators of a sequence of rational functions."""
    values = list(values)
    d = Poly((1,), values[0].field.base) if values else Poly((1,))
    for v in values:
        d = poly_lcm(d, v.den)
    return d
