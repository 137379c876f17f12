"""Finite-dimensional algebras given by structure constants.

``table[i][j]`` is the coordinate vector of e_i * e_j.  Indices are
0-based in code; witnesses reported to users are 1-based.
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import Inconclusive, NotInvertible
from .fields import QQ, is_rational_square
from .linalg import Echelon, Subspace, nullspace, solve
from .poly import Poly, integer_coefficients, is_squarefree, rational_roots


class StructureAlgebra:
    """Associative unital algebra with basis e_1..e_d over ``field``.

    ``unit`` is the coordinate vector of the identity; it defaults to e_1,
    the convention for central simple algebras.
    """

    def __init__(self, table, field=QQ, unit=None, names=None):
        d = len(table)
        conv = field.convert
        self.field = field
        self.dim = d
        self.table = tuple(tuple(tuple(conv(c) for c in table[i][j]) for j in range(d))
                           for i in range(d))
        if unit is None:
            unit = [field.one] + [field.zero] * (d - 1)
        self.unit = tuple(conv(c) for c in unit)
        self.names = tuple(names) if names else tuple(f"e{i + 1}" for i in range(d))
        # sparse form: (i, j) -> [(h, coeff)]
        self._sparse = [[[(h, c) for h, c in enumerate(self.table[i][j]) if c]
                         for j in range(d)] for i in range(d)]

    def __repr__(self):
        return f"StructureAlgebra(dim={self.dim}, field={self.field!r})"

    def __eq__(self, other):
        return (isinstance(other, StructureAlgebra) and self.field == other.field
                and self.table == other.table and self.unit == other.unit)

    def __hash__(self):
        return hash((self.dim, self.table))

    # -- elements

    def element(self, coords):
        coords = tuple(self.field.convert(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(coords)}")
        return AlgElem(self, coords)

    def basis(self, i):
        """e_i with a 0-based index."""
        v = [self.field.zero] * self.dim
        v[i] = self.field.one
        return AlgElem(self, tuple(v))

    def gens(self):
        return [self.basis(i) for i in range(self.dim)]

    @property
    def one(self):
        return AlgElem(self, self.unit)

    @property
    def zero(self):
        return AlgElem(self, (self.field.zero,) * self.dim)

    def unit_index(self):
        """Index of the unit if it is a basis vector, else None."""
        nz = [i for i, c in enumerate(self.unit) if c]
        if len(nz) == 1 and self.unit[nz[0]] == self.field.one:
            return nz[0]
        return None

    # -- arithmetic on coordinate tuples

    def mul_coords(self, x, y):
        out = [self.field.zero] * self.dim
        sp = self._sparse
        for i, a in enumerate(x):
            if not a:
                continue
            row = sp[i]
            for j, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for h, c in row[j]:
                    out[h] = out[h] + ab * c
        return tuple(out)

    def multiply(self, x, y):
        return AlgElem(self, self.mul_coords(_coords(x), _coords(y)))

    def left_matrix(self, x):
        """Matrix of y -> x*y (rows indexed by output coordinate)."""
        x = _coords(x)
        cols = [self.mul_coords(x, self.basis(j).coords) for j in range(self.dim)]
        return [tuple(col[h] for col in cols) for h in range(self.dim)]

    def right_matrix(self, x):
        """Matrix of y -> y*x."""
        x = _coords(x)
        cols = [self.mul_coords(self.basis(j).coords, x) for j in range(self.dim)]
        return [tuple(col[h] for col in cols) for h in range(self.dim)]

    def inverse(self, x):
        """Two-sided inverse; raises NotInvertible for zero divisors."""
        x = _coords(x)
        if not any(x):
            raise NotInvertible("zero has no inverse")
        y = solve(self.left_matrix(x), self.unit, self.field)
        if y is None or self.mul_coords(y, x) != self.unit:
            raise NotInvertible("element is a zero divisor")
        return AlgElem(self, y)

    def power(self, x, e):
        x = _coords(x)
        if e < 0:
            return self.power(self.inverse(x), -e)
        result = self.unit
        for _ in range(e):
            result = self.mul_coords(result, x)
        return AlgElem(self, result)

    def minimal_polynomial(self, x):
        """Monic minimal polynomial of x over the base field."""
        x = _coords(x)
        powers = [self.unit]
        ech = Echelon(self.dim, self.field)
        ech.add(self.unit)
        while True:
            nxt = self.mul_coords(powers[-1], x)
            if not ech.add(nxt):
                powers.append(nxt)
                k = len(powers)
                rows = [tuple(p[h] for p in powers) for h in range(self.dim)]
                rel = nullspace(rows, k, self.field)[0]
                lead = rel[-1]
                return Poly([c / lead for c in rel], self.field)
            powers.append(nxt)

    def over(self, field, convert=None):
        """Extension of scalars: same table read in a larger field."""
        convert = convert or field.convert
        table = [[[convert(c) for c in self.table[i][j]] for j in range(self.dim)]
                 for i in range(self.dim)]
        return StructureAlgebra(table, field, [convert(c) for c in self.unit], self.names)


class AlgElem:
    """Element of a StructureAlgebra; arithmetic via the structure constants."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        self.algebra = algebra
        self.coords = tuple(coords)

    def _lift(self, other):
        if isinstance(other, AlgElem):
            return other
        c = self.algebra.field.convert(other)
        return AlgElem(self.algebra, tuple(c * u for u in self.algebra.unit))

    def __add__(self, other):
        other = self._lift(other)
        return AlgElem(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return AlgElem(self.algebra, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, AlgElem):
            return self.algebra.multiply(self, other)
        c = self.algebra.field.convert(other)
        return AlgElem(self.algebra, tuple(a * c for a in self.coords))

    def __rmul__(self, other):
        if isinstance(other, AlgElem):
            return other.algebra.multiply(other, self)
        return self.__mul__(other)

    def __pow__(self, e):
        return self.algebra.power(self, e)

    def inverse(self):
        return self.algebra.inverse(self)

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgElem):
            return self.coords == other.coords
        try:
            return self == self._lift(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __repr__(self):
        terms = [f"{c}*{n}" for c, n in zip(self.coords, self.algebra.names) if c]
        return " + ".join(terms) if terms else "0"


def _coords(x):
    return x.coords if isinstance(x, AlgElem) else tuple(x)


# -- verification


@dataclass(frozen=True)
class StructureCheck:
    ok: bool
    kind: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.ok


def verify_structure(A):
    """Check unity and associativity; report the first violated index tuple (1-based)."""
    u = A.unit_index()
    tag = u + 1 if u is not None else 0
    for j in range(A.dim):
        e = A.basis(j).coords
        if A.mul_coords(A.unit, e) != e or A.mul_coords(e, A.unit) != e:
            return StructureCheck(False, "unity", (tag, j + 1))
    for i in range(A.dim):
        for j in range(A.dim):
            eij = A.table[i][j]
            for h in range(A.dim):
                left = A.mul_coords(eij, A.basis(h).coords)
                right = A.mul_coords(A.basis(i).coords, A.table[j][h])
                if left != right:
                    return StructureCheck(False, "associativity", (i + 1, j + 1, h + 1))
    return StructureCheck(True)


# -- commutant, center, radical


def commutant(A, S):
    """{x in A : xs = sx for all s in S}; S is a Subspace or a list of vectors."""
    spanning = S.basis if isinstance(S, Subspace) else [_coords(s) for s in S]
    ech = Echelon(A.dim, A.field)
    for s in spanning:
        R, L = A.right_matrix(s), A.left_matrix(s)
        for rrow, lrow in zip(R, L):
            ech.add(tuple(a - b for a, b in zip(rrow, lrow)))
            if ech.full():
                return Subspace.zero(A.dim, A.field)
    return Subspace(_kernel_from_echelon(ech), A.dim, A.field)


def _kernel_from_echelon(ech):
    field = ech.field
    basis = []
    for f in range(ech.ncols):
        if f in ech.rows:
            continue
        x = [field.zero] * ech.ncols
        x[f] = field.one
        for p, row in ech.rows.items():
            if row[f]:
                x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def center(A):
    return commutant(A, Subspace.full(A.dim, A.field))


def subalgebra(A, elements):
    """Subspace spanned by the given elements (not closed under products)."""
    return Subspace([_coords(e) for e in elements], A.dim, A.field)


def trace_form(A):
    """Gram matrix T[i][j] = tr(L_{e_i e_j})."""
    tr = [sum((A.table[h][m][m] for m in range(A.dim)), A.field.zero) for h in range(A.dim)]
    return [tuple(sum((A.table[i][j][h] * tr[h] for h in range(A.dim) if A.table[i][j][h]),
                      A.field.zero) for j in range(A.dim)) for i in range(A.dim)]


def radical(A):
    """Jacobson radical via Dickson's trace criterion (characteristic 0)."""
    if getattr(A.field, "characteristic", 0) != 0:
        raise ValueError("trace criterion needs characteristic 0")
    return Subspace(nullspace(trace_form(A), A.dim, A.field), A.dim, A.field)


# -- simplicity


def _candidate_combinations(k, max_height, trials, seed):
    seen = set()
    for h in range(1, max_height + 1):
        for c in product(range(-h, h + 1), repeat=k):
            if max(abs(x) for x in c) == h and c not in seen:
                seen.add(c)
                yield c
    rng = random.Random(seed)
    for _ in range(trials):
        yield tuple(rng.randint(-50, 50) for _ in range(k))


def primitive_element(A, Z, max_height=3, trials=64, seed=0):
    """Element z of the commutative subalgebra Z with deg minpoly(z) = dim Z."""
    for c in _candidate_combinations(Z.dim, max_height, trials, seed):
        z = [A.field.zero] * A.dim
        for a, b in zip(c, Z.basis):
            if a:
                z = [x + a * y for x, y in zip(z, b)]
        if not any(z):
            continue
        mu = A.minimal_polynomial(z)
        if mu.degree == Z.dim:
            return AlgElem(A, tuple(z)), mu
    raise Inconclusive("no primitive element found for the center")


def is_simple(A, seed=0):
    """Simple iff radical = 0 and the center is a field (characteristic 0)."""
    if radical(A).dim:
        return False
    Z = center(A)
    if Z.dim == 1:
        return True
    _, mu = primitive_element(A, Z, seed=seed)
    return is_irreducible(mu)


# -- irreducibility over Q


def is_irreducible(f):
    """Irreducibility over Q for the small degrees met at desk scale.

    Degrees <= 3: rational roots.  Degree 4: rational roots plus the
    resolvent-cubic test for quadratic factors.  Higher degrees: a prime
    p with f irreducible mod p certifies irreducibility; otherwise
    Inconclusive.
    """
    if f.field != QQ:
        raise Inconclusive("irreducibility is only decided over QQ")
    n = f.degree
    if n <= 0:
        raise ValueError("constants are not irreducible")
    if n == 1:
        return True
    if rational_roots(f):
        return False
    if n <= 3:
        return True
    if n == 4:
        return not _quartic_has_quadratic_factor(f.monic())
    return _irreducible_by_reduction(f)


def _quartic_has_quadratic_factor(f):
    a, b, c, d = f[3], f[2], f[1], f[0]
    # depress: x = y - a/4
    p = b - Fraction(3, 8) * a * a
    q = c - a * b / 2 + a**3 / 8
    r = d - a * c / 4 + a * a * b / 16 - Fraction(3, 256) * a**4
    if q == 0 and is_rational_square(p * p - 4 * r) is not None:
        return True
    resolvent = Poly([-q * q, p * p - 4 * r, 2 * p, 1])
    for z in rational_roots(resolvent):
        if z != 0 and is_rational_square(z) is not None:
            return True
    return False


_SMALL_PRIMES = [p for p in range(3, 200) if all(p % q for q in range(2, int(p**0.5) + 1))]


def _irreducible_by_reduction(f):
    ints = integer_coefficients(f)
    if not is_squarefree(f):
        return False
    for p in _SMALL_PRIMES:
        if ints[-1] % p == 0:
            continue
        fp = _gfp_norm([c % p for c in ints], p)
        if _gfp_degree(_gfp_gcd(fp, _gfp_deriv(fp, p), p)) > 0:
            continue
        if _gfp_irreducible(fp, p):
            return True
    raise Inconclusive("no prime certifies irreducibility")


def _gfp_norm(a, p):
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _gfp_degree(a):
    return len(a) - 1


def _gfp_deriv(a, p):
    return _gfp_norm([i * c for i, c in enumerate(a)][1:], p)


def _gfp_mod(a, b, p):
    a = list(a)
    inv = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _gfp_norm(a, p)
    return a


def _gfp_gcd(a, b, p):
    while b:
        a, b = b, _gfp_mod(a, b, p)
    return a


def _gfp_mulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return _gfp_mod(_gfp_norm(out, p), f, p)


def _gfp_frobenius_power(f, k, p):
    """x^(p^k) mod f."""
    x = _gfp_mod([0, 1], f, p)
    for _ in range(k):
        result, base, e = [1], x, p
        while e:
            if e & 1:
                result = _gfp_mulmod(result, base, f, p)
            base = _gfp_mulmod(base, base, f, p)
            e >>= 1
        x = result
    return x


def _gfp_irreducible(f, p):
    # Rabin's test
    n = _gfp_degree(f)
    xs = _gfp_mod([0, 1], f, p)
    if _gfp_frobenius_power(f, n, p) != xs:
        return False
    for q in {q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))}:
        h = _gfp_frobenius_power(f, n // q, p)
        diff = _gfp_norm([(a - b) for a, b in zip(h + [0] * (len(xs) - len(h)),
                                                  xs + [0] * (len(h) - len(xs)))], p)
        if _gfp_degree(_gfp_gcd(f, diff, p)) > 0:
            return False
    return True


# -- catalogue constructors


def matrix_algebra(n, field=QQ):
    """M_n in the matrix-unit basis E_11, E_12, ..., E_nn (row-major)."""
    d = n * n
    table = [[[field.zero] * d for _ in range(d)] for _ in range(d)]
    for a, b, c, e in product(range(n), repeat=4):
        if b == c:
            table[a * n + b][c * n + e][a * n + e] = field.one
    unit = [field.one if i % (n + 1) == 0 else field.zero for i in range(d)]
    names = [f"E{a + 1}{b + 1}" for a in range(n) for b in range(n)]
    return StructureAlgebra(table, field, unit, names)


def matrix_unit(n, i, j, a=1, field=QQ):
    """Gamma_{i,j}(a): the matrix with a at (i, j) (1-based) and zeros elsewhere."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"matrix unit index ({i}, {j}) out of range for M_{n}")
    M = matrix_algebra(n, field)
    v = [field.zero] * (n * n)
    v[(i - 1) * n + (j - 1)] = field.convert(a)
    return AlgElem(M, tuple(v))


def diagonal_algebra(m, field=QQ):
    """k^m with componentwise product (k x k for m = 2)."""
    table = [[[field.one if (i == j == h) else field.zero for h in range(m)]
              for j in range(m)] for i in range(m)]
    return StructureAlgebra(table, field, [field.one] * m, [f"u{i + 1}" for i in range(m)])


def upper_triangular(field=QQ):
    """Upper-triangular 2x2 matrices, basis E11, E12, E22."""
    M = matrix_algebra(2, field)
    keep = [0, 1, 3]
    table = [[[M.table[a][b][c] for c in keep] for b in keep] for a in keep]
    return StructureAlgebra(table, field, [1, 0, 1], ["E11", "E12", "E22"])


def simple_extension_algebra(f):
    """k[x]/(f) in the basis 1, x, ..., x^(n-1) for monic f."""
    field = f.field
    n = f.degree
    f = f.monic()
    powers = []
    for w in range(2 * n - 1):
        r = Poly.monomial(1, w, field) % f
        powers.append([r[s] for s in range(n)])
    table = [[powers[i + j] for j in range(n)] for i in range(n)]
    names = ["1"] + [f"x^{s}" if s > 1 else "x" for s in range(1, n)]
    return StructureAlgebra(table, field, None, names)


def tensor(A, B):
    """A (x) B in the basis e_i (x) f_j, index i*dim(B) + j."""
    if A.field != B.field:
        raise ValueError("tensor factors must share the base field")
    dA, dB = A.dim, B.dim
    d = dA * dB
    zero = A.field.zero
    table = [[None] * d for _ in range(d)]
    for i, j, k, l in product(range(dA), range(dB), range(dA), range(dB)):
        out = [zero] * d
        for h, a in A._sparse[i][k]:
            for m, b in B._sparse[j][l]:
                out[h * dB + m] = a * b
        table[i * dB + j][k * dB + l] = out
    unit = [a * b for a in A.unit for b in B.unit]
    names = [f"{x}(x){y}" for x in A.names for y in B.names]
    return StructureAlgebra(table, A.field, unit, names)


def is_commutative(A):
    return all(A.table[i][j] == A.table[j][i] for i in range(A.dim) for j in range(i))
