"""Dense univariate polynomials over an exact field.

Coefficients are stored low degree first; the zero polynomial is the empty
list.  The coefficient domain is described by a field descriptor (``QQ``,
``RatFuncField``, ``ExtensionField``) or by ``PolyRing`` when the
coefficients are themselves polynomials, as for P(t, x) in k[t][x].
"""

from fractions import Fraction
from itertools import product
from math import gcd

from .fields import QQ, rational_nth_root


class Poly:
    """Polynomial with coefficients in ``field``.

    Invariant: ``coeffs[-1]`` is nonzero unless ``coeffs`` is empty.
    """

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs=(), field=QQ):
        cs = [field.convert(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    @classmethod
    def _raw(cls, coeffs, field):
        # coeffs already converted; strips trailing zeros
        cs = list(coeffs)
        while cs and not cs[-1]:
            cs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(cs)
        p.field = field
        return p

    @classmethod
    def x(cls, field=QQ):
        return cls._raw((field.zero, field.one), field)

    @classmethod
    def constant(cls, c, field=QQ):
        return cls._raw((field.convert(c),), field)

    @classmethod
    def monomial(cls, c, deg, field=QQ):
        return cls._raw((field.zero,) * deg + (field.convert(c),), field)

    # -- basic properties

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def valuation(self):
        """Lowest degree with a nonzero coefficient (None for zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field != self.field:
                raise TypeError("polynomials over different fields")
            return other
        try:
            c = self.field.convert(other)
        except TypeError:
            return NotImplemented
        return Poly._raw((c,), self.field)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = cs[i] + c
        return Poly._raw(cs, self.field)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs], self.field)

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
        if not isinstance(other, Poly):
            try:
                c = self.field.convert(other)
            except TypeError:
                return NotImplemented
            if not c:
                return Poly._raw((), self.field)
            return Poly._raw([a * c for a in self.coeffs], self.field)
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw((), self.field)
        zero = self.field.zero
        cs = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    cs[i + j] = cs[i + j] + ai * bj
        return Poly._raw(cs, self.field)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative exponent")
        result = Poly._raw((self.field.one,), self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        inv = self.field.one / other.lc
        r = list(self.coeffs)
        db = other.degree
        q = [self.field.zero] * max(len(r) - db, 0)
        for k in range(len(r) - 1 - db, -1, -1):
            c = r[k + db] * inv
            q[k] = c
            if c:
                for j, bj in enumerate(other.coeffs):
                    r[k + j] = r[k + j] - c * bj
        return Poly._raw(q, self.field), Poly._raw(r[:db], self.field)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("division is not exact")
        return q

    def monic(self):
        if not self.coeffs:
            return self
        return self * (self.field.one / self.lc)

    # -- comparison

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        try:
            c = self.field.convert(other)
        except TypeError:
            return NotImplemented
        return self.coeffs == ((c,) if c else ())

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    # -- evaluation and calculus

    def __call__(self, value):
        if not self.coeffs:
            return self.field.zero
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * value + c
        return acc

    def derivative(self):
        return Poly._raw([c * i for i, c in enumerate(self.coeffs)][1:], self.field)

    def compose(self, g):
        """self(g) for a polynomial g over the same field."""
        acc = Poly._raw((), self.field)
        for c in reversed(self.coeffs):
            acc = acc * g + Poly._raw((c,), self.field)
        return acc

    def map_coeffs(self, fn, field):
        return Poly([fn(c) for c in self.coeffs], field)

    def shift_degree(self, k):
        """Multiply by x^k (k >= 0) or drop the lowest -k terms."""
        if k >= 0:
            return Poly._raw((self.field.zero,) * k + self.coeffs, self.field)
        return Poly._raw(self.coeffs[-k:], self.field)

    def truncate(self, n):
        return Poly._raw(self.coeffs[:n], self.field)

    # -- printing

    def format(self, var="t"):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            neg, body = _split_sign(c)
            if i == 0:
                mono = body
            else:
                xpow = var if i == 1 else f"{var}^{i}"
                mono = xpow if body == "1" else f"{body}*{xpow}"
            if not parts:
                parts.append(f"-{mono}" if neg else mono)
            else:
                parts.append(f" - {mono}" if neg else f" + {mono}")
        return "".join(parts)

    def __str__(self):
        return self.format("x")

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


def _split_sign(c):
    if isinstance(c, Fraction):
        return (c < 0, str(abs(c)))
    s = c.format() if hasattr(c, "format") else str(c)
    if hasattr(c, "format"):
        s = f"({s})" if any(op in s for op in " +-*") else s
    return (False, s)


class PolyRing:
    """Descriptor for k[t] used as a coefficient ring (not a field)."""

    def __init__(self, base=QQ, var="t"):
        self.base = base
        self.var = var
        self.zero = Poly((), base)
        self.one = Poly((1,), base)

    def convert(self, x):
        if isinstance(x, Poly):
            if x.field != self.base:
                raise TypeError("coefficient field mismatch")
            return x
        return Poly((self.base.convert(x),), self.base)

    __call__ = convert

    def __eq__(self, other):
        return isinstance(other, PolyRing) and other.base == self.base

    def __hash__(self):
        return hash(("PolyRing", self.base))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"


# -- gcd and friends


def poly_gcd(a, b):
    """Monic greatest common divisor; zero only if both inputs are zero."""
    if a.field == QQ and a.coeffs and b.coeffs:
        if a.degree == 0 or b.degree == 0:
            return Poly._raw((Fraction(1),), QQ)
        g = _primitive_prs_gcd(_primitive(a.coeffs), _primitive(b.coeffs))
        lc = g[-1]
        return Poly._raw([Fraction(c, lc) for c in g], QQ)
    while b:
        a, b = b, a % b
    return a.monic()


def _primitive(coeffs):
    """Integer primitive part of a rational coefficient list."""
    den = 1
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints]


def _content_free(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            return a
    return [c // g for c in a]


def _primitive_prs_gcd(a, b):
    # integer lists, low degree first, nonzero leading terms
    if len(a) < len(b):
        a, b = b, a
    while True:
        # pseudo-remainder of a by b
        r = list(a)
        lb, db = b[-1], len(b) - 1
        while len(r) - 1 >= db and r:
            lr = r[-1]
            shift = len(r) - 1 - db
            r = [c * lb for c in r]
            for j, bj in enumerate(b):
                r[shift + j] -= lr * bj
            while r and not r[-1]:
                r.pop()
        if not r:
            return _content_free(b)
        if len(r) == 1:
            return [1]
        a, b = b, _content_free(r)


def poly_xgcd(a, b):
    """Return (g, s, u) with s*a + u*b = g, g monic."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = Poly((field.one,), field), Poly((), field)
    u0, u1 = Poly((), field), Poly((field.one,), field)
    while r1:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        u0, u1 = u1, u0 - q * u1
    if not r0:
        return r0, s0, u0
    inv = field.one / r0.lc
    return r0 * inv, s0 * inv, u0 * inv


def poly_lcm(a, b):
    if not a or not b:
        return Poly((), a.field)
    return (a * b).exact_div(poly_gcd(a, b)).monic()


def resultant(a, b):
    """Resultant of two polynomials over a field (Euclidean algorithm)."""
    field = a.field
    if not a or not b:
        return field.zero
    res = field.one
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return res * b.lc**da
        r = a % b
        if not r:
            return field.zero
        if (da * db) % 2:
            res = -res
        res = res * b.lc ** (da - r.degree)
        a, b = b, r


def discriminant(f):
    """disc(f) = (-1)^(n(n-1)/2) / lc * Res(f, f')."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant of a constant")
    d = resultant(f, f.derivative()) / f.lc
    return -d if (n * (n - 1) // 2) % 2 else d


def is_squarefree(f):
    return poly_gcd(f, f.derivative()).degree == 0


# -- roots over Q


def _int_divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def integer_coefficients(f):
    """Scale a polynomial over Q to a primitive integer polynomial."""
    from math import gcd, lcm

    den = 1
    for c in f.coeffs:
        den = lcm(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def rational_roots(f):
    """Distinct rational roots of a nonzero polynomial over Q, sorted."""
    if f.field != QQ:
        raise TypeError("rational_roots needs a polynomial over QQ")
    if not f:
        raise ValueError("zero polynomial has every root")
    roots = set()
    v = f.valuation()
    if v:
        roots.add(Fraction(0))
        f = f.shift_degree(-v)
    if f.degree < 1:
        return sorted(roots)
    ints = integer_coefficients(f)
    for p, q in product(_int_divisors(ints[0]), _int_divisors(ints[-1])):
        for cand in (Fraction(p, q), Fraction(-p, q)):
            if cand not in roots and f(cand) == 0:
                roots.add(cand)
    return sorted(roots)


# -- exact n-th roots


def series_nth_root(g, n, terms):
    """First ``terms`` coefficients of g^(1/n) for a series g with g[0] = 1.

    ``g`` is a list of ring elements supporting +, * and multiplication by
    Fractions; ``g[0]`` must be the ring's one.  Characteristic 0 only.
    """
    one = g[0]
    f = [one]
    alpha = Fraction(1, n)
    for k in range(1, terms):
        acc = None
        for j in range(1, min(k, len(g) - 1) + 1):
            if not g[j]:
                continue
            w = (alpha * j - (k - j)) / k
            if not w:
                continue
            term = g[j] * f[k - j] * w
            acc = term if acc is None else acc + term
        f.append(acc if acc is not None else one * 0)
    return f


def series_power_equals(f, n, g):
    """Check that (sum f_i u^i)^n equals sum g_i u^i exactly."""
    zero = f[0] * 0
    cur = list(f)
    for _ in range(n - 1):
        nxt = [zero] * (len(cur) + len(f) - 1)
        for i, a in enumerate(cur):
            if not a:
                continue
            for j, b in enumerate(f):
                if b:
                    nxt[i + j] = nxt[i + j] + a * b
        cur = nxt
    while len(cur) > 1 and not cur[-1]:
        cur.pop()
    gg = list(g)
    while len(gg) > 1 and not gg[-1]:
        gg.pop()
    if len(cur) != len(gg):
        return False
    return all(a == b for a, b in zip(cur, gg))


def poly_nth_root(f, n):
    """Exact n-th root of a polynomial over Q, or None if f is not an n-th power."""
    if not f:
        return f
    if f.degree % n:
        return None
    c = rational_nth_root(f.lc, n)
    if c is None:
        return None
    m = f.degree // n
    rev = [x / f.lc for x in reversed(f.coeffs)]
    root = series_nth_root(rev, n, m + 1)
    if not series_power_equals(root, n, rev):
        return None
    return Poly(list(reversed(root)), f.field) * c


def poly_sqrt(f):
    return poly_nth_root(f, 2)
