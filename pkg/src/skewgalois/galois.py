"""Finite Galois extensions L/k(t) given by a presentation.

L = k(t)[y]/(m(y)) with m monic, coefficients in k[t].  Automorphisms are
given by the image of y as a polynomial of degree < deg m.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from .errors import Inconclusive, NotInvertible
from .fields import QQ
from .poly import Poly, PolyRing, discriminant, poly_gcd, poly_sqrt, poly_xgcd, rational_roots
from .ratfunc import KT, RatFunc
from .series import TruncSeries

KT_RING = PolyRing(QQ, "t")
DEFAULT_ORDER = 16


class HenselError(ValueError):
    """The starting value is not a simple root of P(0, x)."""


# -- the field L


class ExtensionField:
    """L = k(t)[y]/(m) as a field descriptor."""

    characteristic = 0

    def __init__(self, min_poly):
        if min_poly.field != KT:
            raise TypeError("minimal polynomial must have k(t) coefficients")
        if not min_poly.is_monic():
            raise ValueError("minimal polynomial must be monic")
        self.min_poly = min_poly
        self.degree = min_poly.degree
        self.zero = LElem(self, Poly((), KT))
        self.one = LElem(self, Poly((1,), KT))

    def convert(self, x):
        if isinstance(x, LElem):
            return x
        if isinstance(x, Poly) and x.field == KT:
            return LElem(self, x % self.min_poly)
        return LElem(self, Poly((KT.convert(x),), KT))

    __call__ = convert

    def gen(self):
        return self.convert(Poly.x(KT))

    def from_coords(self, coords):
        return LElem(self, Poly(coords, KT))

    def to_json(self, x):
        return [c.format() for c in x.coords()]

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and other.min_poly == self.min_poly

    def __hash__(self):
        return hash(("L", self.min_poly))

    def __repr__(self):
        return f"QQ(t)[y]/({self.min_poly.format('y')})"


class LElem:
    __slots__ = ("field", "poly")

    def __init__(self, field, poly):
        self.field = field
        self.poly = poly

    def _coerce(self, other):
        if isinstance(other, LElem):
            return other
        if isinstance(other, (int, Fraction, RatFunc)):
            return self.field.convert(other)
        return NotImplemented

    def coords(self):
        return tuple(self.poly[s] for s in range(self.field.degree))

    def __bool__(self):
        return bool(self.poly)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LElem(self.field, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return LElem(self.field, -self.poly)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return LElem(self.field, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RatFunc)):
            return LElem(self.field, self.poly * KT.convert(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.poly.degree <= 0 or other.poly.degree <= 0:
            return LElem(self.field, self.poly * other.poly)
        return LElem(self.field, (self.poly * other.poly) % self.field.min_poly)

    __rmul__ = __mul__

    def inverse(self):
        if not self.poly:
            raise ZeroDivisionError("inverse of zero in L")
        g, s, _ = poly_xgcd(self.poly, self.field.min_poly)
        if g.degree != 0:
            raise NotInvertible("element shares a factor with the minimal polynomial")
        return LElem(self.field, s % self.field.min_poly)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e):
        base = self.inverse() if e < 0 else self
        result = self.field.one
        for _ in range(abs(e)):
            result = result * base
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def format(self):
        return self.poly.format("y")

    def __repr__(self):
        return f"LElem({self.format()})"


# -- presentations


@dataclass(frozen=True)
class AutomorphismSpec:
    image: Poly  # image of y, over k(t), degree < g

    def apply(self, L, a):
        """sigma(a) for a in L (a given as an LElem)."""
        return L.convert(a.poly(L.convert(self.image)))


@dataclass
class ExtensionPresentation:
    min_poly: Poly
    automorphisms: list
    name: str = ""
    field: ExtensionField = dc_field(init=False, repr=False)

    def __post_init__(self):
        self.automorphisms = [a if isinstance(a, AutomorphismSpec) else AutomorphismSpec(a)
                              for a in self.automorphisms]
        self.field = ExtensionField(self.min_poly)

    @property
    def degree(self):
        return self.min_poly.degree

    def compose(self, s, t):
        """Image of y under s o t, reduced mod m."""
        L = self.field
        return L.convert(t.image(L.convert(s.image))).poly

    def identity_index(self):
        y = self.field.gen().poly
        for n, a in enumerate(self.automorphisms):
            if (a.image % self.min_poly) == y:
                return n
        return None

    def index_of(self, image):
        image = image % self.min_poly
        for n, a in enumerate(self.automorphisms):
            if (a.image % self.min_poly) == image:
                return n
        return None

    def composition_table(self):
        """table[a][b] = index of automorphisms[a] o automorphisms[b]."""
        n = len(self.automorphisms)
        return [[self.index_of(self.compose(self.automorphisms[a], self.automorphisms[b]))
                 for b in range(n)] for a in range(n)]


def kt_poly(rows):
    """Polynomial in y over k(t) from rows of t-coefficients (low degree first)."""
    return Poly([KT.convert(Poly(r, QQ)) for r in rows], KT)


@dataclass(frozen=True)
class GaloisCheck:
    ok: bool
    failure: str = ""
    witness: object = None

    def __bool__(self):
        return self.ok


def verify_galois_presentation(E):
    m = E.min_poly
    g = m.degree
    L = E.field
    if g < 1:
        return GaloisCheck(False, "degree", g)
    if not all(c.is_polynomial() for c in m.coeffs):
        return GaloisCheck(False, "coefficients", "minimal polynomial not in k[t][y]")
    common = poly_gcd(m, m.derivative())
    if common.degree > 0:
        return GaloisCheck(False, "separability", common.format("y"))
    if g > 1:
        try:
            irreducible = is_irreducible_over_kt(m)
        except Inconclusive as exc:
            return GaloisCheck(False, "irreducibility", str(exc))
        if not irreducible:
            return GaloisCheck(False, "irreducibility", "minimal polynomial has a factor")
    for n, a in enumerate(E.automorphisms):
        if a.image.degree >= g:
            return GaloisCheck(False, "image degree", n)
        if m(L.convert(a.image)):
            return GaloisCheck(False, "root", n)
    if len(E.automorphisms) != g:
        return GaloisCheck(False, "cardinality", (len(E.automorphisms), g))
    if E.identity_index() is None:
        return GaloisCheck(False, "identity", None)
    images = [a.image % m for a in E.automorphisms]
    for a in range(len(images)):
        for b in range(a):
            if images[a] == images[b]:
                return GaloisCheck(False, "distinct", (b, a))
    table = E.composition_table()
    for a, row in enumerate(table):
        for b, c in enumerate(row):
            if c is None:
                return GaloisCheck(False, "closure", (a, b))
    return GaloisCheck(True, "", table)


# -- bivariate P(t, x) in k[t][x]


def bivariate(rows):
    """P(t, x) from rows[k] = t-coefficients of x^k."""
    return Poly([Poly(r, QQ) for r in rows], KT_RING)


def specialize(P, t0):
    """P(t0, x) over Q."""
    t0 = Fraction(t0)
    return Poly([c(t0) for c in P.coeffs], QQ)


def shift_t(P, t0):
    """P(s + t0, x) as a polynomial in (s, x)."""
    s = Poly([Fraction(t0), 1], QQ)
    return Poly([c.compose(s) for c in P.coeffs], KT_RING)


def to_kt(P):
    return Poly([KT.convert(c) for c in P.coeffs], KT)


def from_kt(m):
    if not all(c.is_polynomial() for c in m.coeffs):
        raise ValueError("coefficients are not polynomials in t")
    return Poly([c.num for c in m.coeffs], KT_RING)


def interpolation_construct(P0, P1):
    """P(t, x) = (1 - t) P0(x) + t P1(x)."""
    if P0.degree != P1.degree:
        raise ValueError("P0 and P1 must have the same degree")
    if not (P0.is_monic() and P1.is_monic()):
        raise ValueError("P0 and P1 must be monic")
    one_minus_t = Poly([1, -1], QQ)
    t = Poly([0, 1], QQ)
    return Poly([one_minus_t * P0[k] + t * P1[k] for k in range(P0.degree + 1)], KT_RING)


def eval_series(P, r, order):
    """P(t, r(t)) with r a TruncSeries; coefficients of P known exactly."""
    acc = TruncSeries.from_poly(P.lc, order)
    for c in reversed(P.coeffs[:-1]):
        acc = acc * r + TruncSeries.from_poly(c, order)
    return acc


def eval_exact(P, r):
    """P(t, r(t)) for a polynomial r in k[t]."""
    acc = P.lc
    for c in reversed(P.coeffs[:-1]):
        acc = acc * r + c
    return acc


@dataclass(frozen=True)
class SeriesRoot:
    poly: Poly
    series: TruncSeries
    order: int

    def residual_valuation(self):
        """Exact t-adic valuation of P(t, r) with r the truncated polynomial."""
        res = eval_exact(self.poly, self.series.to_poly())
        v = res.valuation()
        return float("inf") if v is None else v

    def coefficients(self):
        return [self.series.coefficient(k) for k in range(self.order)]


def hensel_lift(P, r0, order=DEFAULT_ORDER):
    """Lift a simple root r0 of P(0, x) to a root of P(t, x) in k[[t]] mod t^order."""
    r0 = Fraction(r0)
    P0 = specialize(P, 0)
    if P0(r0) != 0:
        raise HenselError(f"{r0} is not a root of P(0, x)")
    dP = P.derivative()
    if specialize(dP, 0)(r0) == 0:
        raise HenselError(f"{r0} is not a simple root: dP/dx(0, {r0}) = 0")
    r = Poly([r0], QQ)
    prec = 1
    while prec < order:
        prec = min(2 * prec, order)
        s = TruncSeries.from_poly(r, prec)
        step = eval_series(P, s, prec) / eval_series(dP, s, prec)
        r = (s - step).to_poly()
    return SeriesRoot(P, TruncSeries.from_poly(r, order), order)


def lift_all_roots(P, order=DEFAULT_ORDER):
    """Hensel-lift every rational root of P(0, x)."""
    return [hensel_lift(P, r0, order) for r0 in rational_roots(specialize(P, 0))]


def roots_in_kt(P):
    """All roots of a monic P(t, x) in k(t); they lie in k[t].

    Roots of degree d satisfy d <= deg(a_{n-k})/k.  Each root is determined
    by its value at a point t0 where P(t0, x) is separable; it is recovered
    by Hensel lifting at t0 and checked exactly.
    """
    n = P.degree
    if not P.is_monic():
        raise ValueError("P must be monic in x")
    bound = max([P[n - k].degree // k for k in range(1, n + 1) if P[n - k]] + [0])
    disc = discriminant(to_kt(P))
    if not disc:
        raise ValueError("P is not separable")
    t0 = _good_point(disc.num)
    Ps = shift_t(P, t0)
    back = Poly([-Fraction(t0), 1], QQ)
    roots = []
    for r0 in rational_roots(specialize(Ps, 0)):
        lifted = hensel_lift(Ps, r0, bound + 1).series.to_poly()
        cand = lifted.compose(back)
        if not eval_exact(P, cand):
            roots.append(cand)
    return roots


def _good_point(d):
    k = 0
    while True:
        for t0 in ((k, -k) if k else (0,)):
            if d(Fraction(t0)) != 0:
                return t0
        k += 1


def is_irreducible_over_kt(m):
    """Irreducibility of a monic m in k[t][y] over k(t).

    Degrees 2 and 3: no root in k[t].  Higher degrees: a specialization
    t0 with m(t0, y) irreducible over Q of the same degree certifies it.
    """
    from .structalg import is_irreducible

    P = from_kt(m)
    if m.degree <= 3:
        return not roots_in_kt(P)
    for k in range(12):
        for t0 in ((k, -k) if k else (0,)):
            try:
                if is_irreducible(specialize(P, t0)):
                    return True
            except Inconclusive:
                continue
    raise Inconclusive("no specialization certifies irreducibility")


def discriminant_kt(P):
    d = discriminant(to_kt(P))
    return d.num


@dataclass(frozen=True)
class S3Certificate:
    holds: bool
    discriminant: Poly
    root: Poly = None
    disc_sqrt: Poly = None

    def __bool__(self):
        return self.holds


def certify_s3(P):
    """Galois group S3 over k(t): no root in k(t) and discriminant not a square."""
    if P.degree != 3 or not P.is_monic():
        raise ValueError("certify_s3 needs a monic cubic in x")
    disc = discriminant_kt(P)
    roots = roots_in_kt(P)
    if roots:
        return S3Certificate(False, disc, root=roots[0])
    sq = poly_sqrt(disc)
    if sq is not None:
        return S3Certificate(False, disc, disc_sqrt=sq)
    return S3Certificate(True, disc)


# -- catalogue


def quadratic_fixture():
    """y^2 - (1 + t) with automorphisms y -> y, y -> -y."""
    m = kt_poly([[-1, -1], [], [1]])
    return ExtensionPresentation(m, [kt_poly([[], [1]]), kt_poly([[], [-1]])], "quadratic")


def cyclic_cubic_fixture():
    """Shanks' simplest cubic with parameter t - 3/2.

    m = y^3 - a y^2 - (a + 3) y - 1 with a = t - 3/2 is cyclic over k(t)
    with y -> -1/(1 + y); at t = 0 it splits over Q with roots 1, -2, -1/2.
    """
    a = [Fraction(-3, 2), 1]
    m = kt_poly([[-1], [-Fraction(3, 2), -1], [Fraction(3, 2), -1], [1]])
    assert m[2] == -KT.convert(Poly(a, QQ))
    L = ExtensionField(m)
    y = L.gen()
    s1 = -(1 + y).inverse()
    s2 = -(1 + s1).inverse()
    return ExtensionPresentation(m, [y.poly, s1.poly, s2.poly], "cyclic-cubic")


def trivial_fixture():
    """L = k(t), presented as k(t)[y]/(y)."""
    return ExtensionPresentation(kt_poly([[], [1]]), [Poly((), KT)], "trivial")


def embedding_roots(E, order=DEFAULT_ORDER):
    """Roots of m in k((t)) from the rational roots of m(0, y).

    Returns one SeriesRoot per embedding L -> k((t)); raises when m(0, y)
    does not split into distinct rational linear factors.
    """
    P = from_kt(E.min_poly)
    roots0 = rational_roots(specialize(P, 0)) if E.degree > 0 else []
    if len(roots0) != E.degree:
        raise HenselError("m(0, y) does not split over k")
    return [hensel_lift(P, r0, order) for r0 in roots0]


def format_bivariate(P, var="x"):
    """P(t, x) as text, e.g. x^3 - x - t."""
    parts = []
    for k in range(P.degree, -1, -1):
        c = P[k]
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        body = c.format("t")
        if not mono:
            term = body
        elif body == "1":
            term = mono
        elif body == "-1":
            term = f"-{mono}"
        elif len(c.coeffs) - sum(1 for a in c.coeffs if not a) == 1:
            term = f"{body}*{mono}"
        else:
            term = f"({body})*{mono}"
        if parts and term.startswith("-"):
            parts.append(f" - {term[1:]}")
        elif parts:
            parts.append(f" + {term}")
        else:
            parts.append(term)
    return "".join(parts) or "0"
