"""Reduced norms, norm forms and the trivial-zero criterion.

The reduced norm is obtained from the regular representation: the
characteristic polynomial of L_x over k[x_1..x_d] is the n-th power of the
reduced characteristic polynomial, so its exact n-th root yields Nrd as
(-1)^n times the constant term.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt

from .errors import Inconclusive
from .fields import QQ, is_rational_square
from .poly import series_nth_root, series_power_equals
from .ratfunc import KT, common_denominator
from .series import SeriesPrecisionError, TruncSeries
from .structalg import StructureAlgebra


class NormFormError(ValueError):
    """The n-th root extraction failed: the input is not central simple of degree n."""


class MPoly:
    """Sparse polynomial in a fixed number of variables over a field."""

    __slots__ = ("terms", "nvars", "field")

    def __init__(self, terms, nvars, field=QQ):
        self.terms = {e: c for e, c in terms.items() if c}
        self.nvars = nvars
        self.field = field

    @classmethod
    def var(cls, i, nvars, field=QQ):
        e = tuple(1 if k == i else 0 for k in range(nvars))
        return cls({e: field.one}, nvars, field)

    @classmethod
    def const(cls, c, nvars, field=QQ):
        return cls({(0,) * nvars: field.convert(c)}, nvars, field)

    def __bool__(self):
        return bool(self.terms)

    def _coerce(self, other):
        if isinstance(other, MPoly):
            return other
        return MPoly.const(other, self.nvars, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return MPoly(out, self.nvars, self.field)

    __radd__ = __add__

    def __neg__(self):
        return MPoly({e: -c for e, c in self.terms.items()}, self.nvars, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            c = self.field.convert(other)
            return MPoly({e: a * c for e, a in self.terms.items()}, self.nvars, self.field)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                out[e] = out[e] + p if e in out else p
        return MPoly(out, self.nvars, self.field)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            other = self._coerce(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degrees(self):
        return {sum(e) for e in self.terms}


def berkowitz(M, one):
    """Coefficients [1, c_1, ..., c_n] of det(lambda*I - M), division free."""
    n = len(M)
    zero = one * 0
    if n == 0:
        return [one]
    C = [one, -M[0][0]]
    for r in range(1, n):
        a = M[r][r]
        R = [M[r][k] for k in range(r)]
        S = [M[k][r] for k in range(r)]
        # w_m = R A^m S, A the leading r x r block
        w = []
        v = S
        for _ in range(r):
            w.append(_dot(R, v, zero))
            v = [_dot([M[i][k] for k in range(r)], v, zero) for i in range(r)]
        new = [zero] * (r + 2)
        for j in range(r + 1):
            new[j] = new[j] + C[j]
            new[j + 1] = new[j + 1] - a * C[j]
        for k in range(r):
            acc = zero
            for i in range(k + 1):
                if C[i] and w[k - i]:
                    acc = acc + C[i] * w[k - i]
            new[k + 2] = new[k + 2] - acc
        C = new
    return C


def _dot(u, v, zero):
    acc = zero
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


class NormForm:
    """Homogeneous form stored as a map exponent-vector -> coefficient."""

    def __init__(self, coeffs, nvars, degree, field=QQ):
        self.coeffs = {tuple(e): field.convert(c) for e, c in coeffs.items() if c}
        self.nvars = nvars
        self.degree = degree
        self.field = field
        for e in self.coeffs:
            if len(e) != nvars or sum(e) != degree:
                raise ValueError(f"term {e} is not of degree {degree} in {nvars} variables")

    def __call__(self, values):
        values = list(values)
        if len(values) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        acc = None
        for e, c in self.coeffs.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (v**k)
            acc = term if acc is None else acc + term
        return acc if acc is not None else self.field.zero

    evaluate = __call__

    def __eq__(self, other):
        if not isinstance(other, NormForm):
            return NotImplemented
        return (self.nvars, self.degree, self.coeffs) == (other.nvars, other.degree, other.coeffs)

    def map_coeffs(self, fn, field):
        return NormForm({e: fn(c) for e, c in self.coeffs.items()}, self.nvars, self.degree, field)

    def sorted_terms(self):
        return sorted(self.coeffs.items(), reverse=True)

    def diagonal_coefficients(self):
        """(a_1..a_d) if the form is sum a_i x_i^2, else None."""
        if self.degree != 2:
            return None
        diag = [self.field.zero] * self.nvars
        for e, c in self.coeffs.items():
            if max(e) != 2:
                return None
            diag[e.index(2)] = c
        return diag

    def cleared(self):
        """(scalar, integer coefficient map) with form = scalar * integer form."""
        from math import gcd, lcm

        if self.field != QQ:
            raise TypeError("clearing denominators needs rational coefficients")
        den = 1
        for c in self.coeffs.values():
            den = lcm(den, c.denominator)
        ints = {e: int(c * den) for e, c in self.coeffs.items()}
        g = 0
        for c in ints.values():
            g = gcd(g, c)
        g = g or 1
        return Fraction(g, den), {e: c // g for e, c in ints.items()}

    def to_json(self):
        fmt = self.field.to_json if hasattr(self.field, "to_json") else str
        return [[list(e), fmt(c)] for e, c in self.sorted_terms()]

    def format(self, names=None):
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k)
            parts.append(f"{c}*{mono}" if c != 1 else mono)
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"NormForm({self.format()})"


@dataclass(frozen=True)
class QuaternionSymbol:
    a: object
    b: object

    def __post_init__(self):
        if not self.a or not self.b:
            raise ValueError("quaternion symbol entries must be nonzero")


def quaternion_algebra(a, b=None, field=QQ):
    """(a, b)_k on the basis 1, i, j, ij with i^2 = a, j^2 = b, ji = -ij."""
    if isinstance(a, QuaternionSymbol):
        a, b = a.a, a.b
    a, b = field.convert(a), field.convert(b)
    QuaternionSymbol(a, b)
    z, o = field.zero, field.one

    def v(c0=z, c1=z, c2=z, c3=z):
        return [c0, c1, c2, c3]

    table = [
        [v(o), v(z, o), v(z, z, o), v(z, z, z, o)],
        [v(z, o), v(a), v(z, z, z, o), v(z, z, a)],
        [v(z, z, o), v(z, z, z, -o), v(b), v(z, -b)],
        [v(z, z, z, o), v(z, z, -a), v(z, b), v(-a * b)],
    ]
    return StructureAlgebra(table, field, None, ["1", "i", "j", "k"])


def hamilton(field=QQ):
    return quaternion_algebra(-1, -1, field)


def norm_form(A):
    """F_A(x_1..x_d) = Nrd(x_1 e_1 + ... + x_d e_d)."""
    d = A.dim
    n = isqrt(d)
    if n * n != d:
        raise NormFormError(f"dimension {d} is not a perfect square")
    field = A.field
    xs = [MPoly.var(i, d, field) for i in range(d)]
    zero = MPoly({}, d, field)
    L = [[zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            for h, c in A._sparse[i][j]:
                L[h][j] = L[h][j] + xs[i] * c
    one = MPoly.const(1, d, field)
    charpoly = berkowitz(L, one)
    root = series_nth_root(charpoly, n, n + 1)
    if not series_power_equals(root, n, charpoly):
        raise NormFormError("characteristic polynomial is not an n-th power")
    nrd = root[n] if n % 2 == 0 else -root[n]
    if nrd.degrees() - {n}:
        raise NormFormError("reduced norm is not homogeneous of degree n")
    F = NormForm(nrd.terms, d, n, field)
    if F(A.unit) != field.one:
        raise NormFormError("Nrd(1) != 1")
    return F


# -- trivial zeros


@dataclass(frozen=True)
class TrivialZeroVerdict:
    only_trivial: bool
    witness: tuple = None
    method: str = ""

    def __bool__(self):
        return self.only_trivial


def has_only_trivial_zero(F, radius=4, budget=50000):
    """Decide whether F has only the trivial zero over Q.

    A True verdict is given only for definite diagonal quadratic forms.
    Any zero found by search is a certificate for False.  Everything else
    raises Inconclusive.
    """
    if F.field != QQ:
        raise Inconclusive("trivial-zero decision is only implemented over QQ")
    d = F.nvars
    diag = F.diagonal_coefficients()
    if diag is not None:
        if all(c > 0 for c in diag) or all(c < 0 for c in diag):
            return TrivialZeroVerdict(True, None, "definite")
        for i, c in enumerate(diag):
            if c == 0:
                return TrivialZeroVerdict(False, _unit_vector(i, d), "zero coefficient")
        for i in range(d):
            for j in range(i + 1, d):
                r = is_rational_square(-diag[j] / diag[i])
                if r is not None:
                    w = [Fraction(0)] * d
                    w[i], w[j] = Fraction(r.numerator), Fraction(r.denominator)
                    return TrivialZeroVerdict(False, tuple(w), "binary subform")
        if d <= 2:
            return TrivialZeroVerdict(True, None, "anisotropic binary form")
    for i in range(d):
        if F(_unit_vector(i, d)) == 0:
            return TrivialZeroVerdict(False, _unit_vector(i, d), "basis vector")
    count = 0
    for r in range(1, radius + 1):
        for v in product(range(-r, r + 1), repeat=d):
            if max(abs(x) for x in v) != r:
                continue
            count += 1
            if count > budget:
                raise Inconclusive("search budget exhausted")
            if F([Fraction(x) for x in v]) == 0:
                return TrivialZeroVerdict(False, tuple(Fraction(x) for x in v), "search")
    raise Inconclusive(f"no zero found within radius {radius}; form is outside the decidable class")


def _unit_vector(i, d):
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(d))


def is_division_algebra(A, radius=4):
    """Corollary-2 style criterion: A is a division algebra iff F_A has only the trivial zero."""
    return has_only_trivial_zero(norm_form(A), radius=radius)


# -- zero reduction


def reduce_zero_ratfunc(F, z):
    """Turn a nonzero k(t)-zero of F into a nonzero k-zero.

    Clears denominators, divides by the smallest power of t, sets t = 0.
    """
    z = [KT.convert(c) for c in z]
    if not any(z):
        raise ValueError("zero vector is not a nontrivial zero")
    if F(z) != 0:
        raise ValueError("input is not a zero of the form")
    D = common_denominator(z)
    polys = [(c * D).num for c in z]
    v = min(p.valuation() for p in polys if p)
    out = tuple(p.shift_degree(-v)[0] for p in polys)
    if F(out) != 0:
        raise ArithmeticError("reduction did not produce a zero")
    return out


def reduce_zero_series(F, z):
    """Same reduction for a zero over truncated Laurent series."""
    z = list(z)
    if all(s.is_zero() for s in z):
        raise ValueError("zero vector is not a nontrivial zero")
    value = F(z)
    if not value.is_zero():
        raise ValueError("input is not a zero of the form to the working precision")
    v = min(s.valuation for s in z if not s.is_zero())
    shifted = [s.shift(-v) for s in z]
    if value.order - F.degree * v < 1 or min(s.order for s in shifted) < 1:
        raise SeriesPrecisionError("precision exhausted after the valuation shift")
    out = tuple(s.eval_at_zero() for s in shifted)
    if not any(out):
        raise SeriesPrecisionError("all constant terms vanish after the shift")
    if F(out) != 0:
        raise ArithmeticError("reduction did not produce a zero")
    return out


def series_vector(polys, order):
    """Convenience: polynomials -> TruncSeries at a common order."""
    return [TruncSeries.from_poly(p, order) for p in polys]
