"""Truncated Laurent series with absolute precision.

A ``TruncSeries`` stands for  sum_{i} c_i t^(valuation + i) + O(t^order).
Terms of degree >= order are unknown.  A series all of whose known terms
vanish is stored with ``valuation == order`` and no coefficients.
"""

from fractions import Fraction

from .fields import QQ
from .poly import Poly


class SeriesPrecisionError(ArithmeticError):
    pass


class TruncSeries:
    __slots__ = ("valuation", "coeffs", "order", "field")

    def __init__(self, coeffs, order, valuation=0, field=QQ):
        cs = [field.convert(c) for c in coeffs]
        self._init(cs, order, valuation, field)

    def _init(self, cs, order, valuation, field):
        cs = cs[: max(order - valuation, 0)]
        k = 0
        while k < len(cs) and not cs[k]:
            k += 1
        cs = cs[k:]
        valuation += k
        while cs and not cs[-1]:
            cs.pop()
        if not cs:
            valuation = order
        self.coeffs = tuple(cs)
        self.valuation = valuation
        self.order = order
        self.field = field

    @classmethod
    def _raw(cls, cs, order, valuation, field):
        s = object.__new__(cls)
        s._init(list(cs), order, valuation, field)
        return s

    @classmethod
    def from_poly(cls, p, order):
        return cls._raw(p.coeffs, order, 0, p.field)

    @classmethod
    def constant(cls, c, order, field=QQ):
        return cls._raw([field.convert(c)], order, 0, field)

    # -- inspection

    def is_zero(self):
        """True when the series is indistinguishable from 0 at its order."""
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def coefficient(self, k):
        if k >= self.order:
            raise SeriesPrecisionError(f"coefficient of t^{k} is beyond O(t^{self.order})")
        i = k - self.valuation
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def eval_at_zero(self):
        if self.coeffs and self.valuation < 0:
            raise ValueError("series has a pole at t = 0")
        if self.order <= 0:
            raise SeriesPrecisionError("constant term unknown")
        return self.coefficient(0)

    def shift(self, k):
        """Multiply by t^k."""
        return TruncSeries._raw(self.coeffs, self.order + k, self.valuation + k, self.field)

    def truncate(self, order):
        return TruncSeries._raw(self.coeffs, min(order, self.order), self.valuation, self.field)

    def to_poly(self):
        """Known terms as a polynomial (requires valuation >= 0)."""
        if self.coeffs and self.valuation < 0:
            raise ValueError("negative valuation")
        if not self.coeffs:
            return Poly((), self.field)
        return Poly._raw((self.field.zero,) * self.valuation + self.coeffs, self.field)

    # -- arithmetic

    def _scalar(self, c):
        try:
            return self.field.convert(c)
        except TypeError:
            return None

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            other = TruncSeries._raw([c], 1 << 62, 0, self.field)
        order = min(self.order, other.order)
        lo = min(self.valuation, other.valuation)
        cs = [self.field.zero] * max(order - lo, 0)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                k = s.valuation + i - lo
                if k < len(cs):
                    cs[k] = cs[k] + c
        return TruncSeries._raw(cs, order, lo, self.field)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries._raw([-c for c in self.coeffs], self.order, self.valuation, self.field)

    def __sub__(self, other):
        if not isinstance(other, TruncSeries):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            return self + (-c)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            return TruncSeries._raw([a * c for a in self.coeffs], self.order, self.valuation, self.field)
        order = min(self.order + other.valuation, other.order + self.valuation)
        val = self.valuation + other.valuation
        n = max(order - val, 0)
        zero = self.field.zero
        cs = [zero] * n
        for i, a in enumerate(self.coeffs[:n]):
            if not a:
                continue
            for j, b in enumerate(other.coeffs[: n - i]):
                if b:
                    cs[i + j] = cs[i + j] + a * b
        return TruncSeries._raw(cs, order, val, self.field)

    __rmul__ = __mul__

    def inverse(self):
        """Inverse; for a = t^v*u known to O(t^N) the result is known to O(t^(N-2v))."""
        if not self.coeffs:
            raise SeriesPrecisionError("cannot invert a series indistinguishable from 0")
        v = self.valuation
        r = self.order - v
        u = self.coeffs
        inv0 = self.field.one / u[0]
        b = [inv0]
        for k in range(1, r):
            acc = self.field.zero
            for j in range(1, min(k, len(u) - 1) + 1):
                acc = acc + u[j] * b[k - j]
            b.append(-acc * inv0)
        return TruncSeries._raw(b, -v + r, -v, self.field)

    def __truediv__(self, other):
        if not isinstance(other, TruncSeries):
            c = self._scalar(other)
            if c is None:
                return NotImplemented
            return self * (self.field.one / c)
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncSeries._raw([self.field.one], 1 << 62, 0, self.field)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (self.order, self.valuation, self.coeffs) == (other.order, other.valuation, other.coeffs)

    def __hash__(self):
        return hash((self.order, self.valuation, self.coeffs))

    def format(self, var="t"):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            k = self.valuation + i
            mono = "1" if k == 0 else (var if k == 1 else f"{var}^{k}")
            neg = isinstance(c, Fraction) and c < 0
            body = str(abs(c)) if isinstance(c, Fraction) else str(c)
            piece = mono if body == "1" and k else (body if k == 0 else f"{body}*{mono}")
            if terms:
                terms.append(("- " if neg else "+ ") + piece)
            else:
                terms.append(("-" if neg else "") + piece)
        terms.append(("+ " if terms else "") + f"O({var}^{self.order})")
        return " ".join(terms)

    def __repr__(self):
        return f"TruncSeries({self.format()})"


def series_arith(a, b, op):
    """Dispatch for add / mul / invert-first."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op in ("invert", "invert-first"):
        return a.inverse()
    raise ValueError(f"unknown series operation {op!r}")
