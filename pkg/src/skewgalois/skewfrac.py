"""H[t] and H(t) with a central indeterminate.

H(t) is realized as H (x)_k k(t): an element is its coordinate vector over
k(t) in the basis e_1..e_d of H.  Skew polynomials are lists of
coefficients in H; the p*q^-1 form is a view computed on demand.
"""

from dataclasses import dataclass

from .errors import NotInvertible
from .poly import Poly
from .ratfunc import KT, common_denominator


class SkewPoly:
    """Polynomial in a central variable t with coefficients in H."""

    __slots__ = ("H", "coeffs")

    def __init__(self, H, coeffs):
        cs = [tuple(H.field.convert(c) for c in _vec(v)) for v in coeffs]
        while cs and not any(cs[-1]):
            cs.pop()
        self.H = H
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, H, a):
        return cls(H, [a])

    @classmethod
    def central(cls, H, p):
        """Image of p in k[t] (coefficients times the unit of H)."""
        return cls(H, [tuple(c * u for u in H.unit) for c in p.coeffs])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def _zero(self):
        return (self.H.field.zero,) * self.H.dim

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        z = self._zero()
        a = self.coeffs + (z,) * (n - len(self.coeffs))
        b = other.coeffs + (z,) * (n - len(other.coeffs))
        return SkewPoly(self.H, [tuple(x + y for x, y in zip(u, v)) for u, v in zip(a, b)])

    def __neg__(self):
        return SkewPoly(self.H, [tuple(-x for x in u) for u in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return SkewPoly(self.H, [])
        out = [self._zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                ab = self.H.mul_coords(a, b)
                out[i + j] = tuple(x + y for x, y in zip(out[i + j], ab))
        return SkewPoly(self.H, out)

    def shift(self, k):
        return SkewPoly(self.H, [self._zero()] * k + list(self.coeffs))

    def __eq__(self, other):
        return isinstance(other, SkewPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SkewPoly({[list(map(str, c)) for c in self.coeffs]})"


def _vec(v):
    return v.coords if hasattr(v, "coords") else v


def skewpoly_arith(f, g, op):
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def right_divide(f, g):
    """(q, r) with f = q*g + r and deg r < deg g."""
    if not g:
        raise ZeroDivisionError("division by the zero skew polynomial")
    H = f.H
    try:
        inv = H.inverse(g.lc).coords
    except NotInvertible as exc:
        raise NotInvertible("leading coefficient of the divisor is not invertible") from exc
    q = SkewPoly(H, [])
    r = f
    while r and r.degree >= g.degree:
        d = r.degree - g.degree
        c = H.mul_coords(r.lc, inv)
        term = SkewPoly(H, [c]).shift(d)
        q = q + term
        r = r - term * g
    return q, r


class SkewRationalField:
    """H(t) = H (x)_k k(t) in canonical coordinates."""

    def __init__(self, H):
        self.H = H
        self.Ht = H.over(KT)
        self.dim = H.dim

    def element(self, coords):
        return SkewRatElem(self, tuple(KT.convert(c) for c in coords))

    def one(self):
        return SkewRatElem(self, self.Ht.unit)

    def zero(self):
        return SkewRatElem(self, (KT.zero,) * self.dim)

    def t(self):
        return SkewRatElem(self, tuple(KT.gen() * u for u in self.Ht.unit))

    def basis(self, i):
        return SkewRatElem(self, self.Ht.basis(i).coords)

    def scalar(self, c):
        c = KT.convert(c)
        return SkewRatElem(self, tuple(c * u for u in self.Ht.unit))

    def image(self, p):
        """psi: H[t] -> H(t)."""
        coords = []
        for i in range(self.dim):
            coords.append(KT.convert(Poly([c[i] for c in p.coeffs], self.H.field)))
        return SkewRatElem(self, tuple(coords))


class SkewRatElem:
    __slots__ = ("parent", "coords")

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = tuple(coords)

    def _lift(self, other):
        if isinstance(other, SkewRatElem):
            return other
        return self.parent.scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        return SkewRatElem(self.parent, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return SkewRatElem(self.parent, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        return SkewRatElem(self.parent, self.parent.Ht.mul_coords(self.coords, other.coords))

    def __rmul__(self, other):
        return self._lift(other) * self

    def __pow__(self, e):
        base = invert(self) if e < 0 else self
        result = self.parent.one()
        for _ in range(abs(e)):
            result = result * base
        return result

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, SkewRatElem):
            return self.coords == other.coords
        return self == self._lift(other)

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return f"SkewRatElem({[c.format() for c in self.coords]})"


def invert(x):
    """Inverse in H(t) by solving the k(t)-linear system of L_x."""
    if not x:
        raise ZeroDivisionError("inverse of zero in H(t)")
    y = x.parent.Ht.inverse(x.coords)
    return SkewRatElem(x.parent, y.coords)


@dataclass(frozen=True)
class FractionPair:
    p: SkewPoly
    q: SkewPoly

    def __post_init__(self):
        if not self.q:
            raise ZeroDivisionError("zero denominator")


def pair_conversion(x):
    """x = p * q^-1 with q the monic common denominator in k[t] (central)."""
    H = x.parent.H
    D = common_denominator(x.coords)
    polys = [(c * D).num for c in x.coords]
    deg = max((p.degree for p in polys), default=-1)
    coeffs = [tuple(p[m] for p in polys) for m in range(deg + 1)]
    return FractionPair(SkewPoly(H, coeffs), SkewPoly.central(H, D))


def from_pair(parent, p, q=None):
    if isinstance(p, FractionPair):
        p, q = p.p, p.q
    if not q:
        raise ZeroDivisionError("zero denominator")
    return parent.image(p) * invert(parent.image(q))
