"""Independent reference computations built on sympy and hand formulas.

Nothing here calls into the library's algorithms; values are converted at
the boundary only.
"""

from fractions import Fraction
from itertools import product

import sympy

t, x = sympy.symbols("t x")


def sym(p, var=t):
    """Library Poly over Q -> sympy expression."""
    return sum(sympy.Rational(c.numerator, c.denominator) * var**k for k, c in enumerate(p.coeffs))


def sym_bivariate(P):
    return sum(sym(c) * x**k for k, c in enumerate(P.coeffs))


def frac(r):
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


def discriminant(P):
    """disc_x(P) via sympy (Sylvester resultant), as a sympy polynomial in t."""
    return sympy.expand(sympy.discriminant(sym_bivariate(P), x))


def order_by_order_root(expr, r0, N):
    """Coefficients c_0..c_{N-1} of a root of expr(t, x) with c_0 = r0.

    Each coefficient is solved from the t^k coefficient of the substituted
    ansatz, a linear equation in the unknown.
    """
    coeffs = [sympy.Rational(r0)]
    c = sympy.Symbol("c")
    for k in range(1, N):
        ansatz = sum(a * t**m for m, a in enumerate(coeffs)) + c * t**k
        value = sympy.expand(expr.subs(x, ansatz))
        eq = value.coeff(t, k)
        sol = sympy.solve(eq, c)
        coeffs.append(sol[0])
    return [frac(a) for a in coeffs]


def binomial_sqrt_series(N):
    """Coefficients of sqrt(1 + t) = sum binom(1/2, k) t^k."""
    out = []
    b = Fraction(1)
    for k in range(N):
        out.append(b)
        b = b * (Fraction(1, 2) - k) / (k + 1)
    return out


def quaternion_norm(a, b):
    """x1^2 - a x2^2 - b x3^2 + ab x4^2 as an exponent map."""
    a, b = Fraction(a), Fraction(b)
    return {(2, 0, 0, 0): Fraction(1), (0, 2, 0, 0): -a, (0, 0, 2, 0): -b, (0, 0, 0, 2): a * b}


def regular_determinant(A):
    """det of left multiplication by a generic element, expanded in sympy."""
    xs = sympy.symbols(f"x1:{A.dim + 1}")
    M = sympy.zeros(A.dim, A.dim)
    for i, j in product(range(A.dim), repeat=2):
        for h, c in enumerate(A.table[i][j]):
            if c:
                M[h, j] += xs[i] * sympy.Rational(c.numerator, c.denominator)
    return sympy.expand(M.det(method="berkowitz")), xs


def form_expr(F, xs):
    return sum(sympy.Rational(c.numerator, c.denominator) *
               sympy.Mul(*[v**k for v, k in zip(xs, e)]) for e, c in F.coeffs.items())


def matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
