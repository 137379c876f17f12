"""Exact linear algebra over a field descriptor.

Vectors are tuples of field elements; matrices are lists of row tuples.
"""


class Echelon:
    """Incrementally maintained reduced row echelon form.

    Rows are added one at a time; the stored rows always form an RREF
    basis of the span of everything added so far.
    """

    def __init__(self, ncols, field):
        self.ncols = ncols
        self.field = field
        self.rows = {}  # pivot column -> row (list), pivot entry = 1

    @property
    def rank(self):
        return len(self.rows)

    def full(self):
        return len(self.rows) == self.ncols

    def reduce(self, v):
        """Reduce v against the stored pivots; returns a list."""
        v = list(v)
        for c, row in self.rows.items():
            a = v[c]
            if a:
                for k in range(self.ncols):
                    if row[k]:
                        v[k] = v[k] - a * row[k]
        return v

    def add(self, v):
        """Add a row; return True if it increased the rank."""
        v = self.reduce(v)
        piv = next((k for k, a in enumerate(v) if a), None)
        if piv is None:
            return False
        inv = self.field.one / v[piv]
        v = [a * inv if a else a for a in v]
        for c, row in self.rows.items():
            a = row[piv]
            if a:
                self.rows[c] = [x - a * y if y else x for x, y in zip(row, v)]
        self.rows[piv] = v
        return True

    def basis(self):
        """RREF rows sorted by pivot column."""
        return [tuple(self.rows[c]) for c in sorted(self.rows)]

    def contains(self, v):
        return not any(self.reduce(v))


def rref(rows, ncols, field, stop_when_full=False):
    ech = Echelon(ncols, field)
    for r in rows:
        ech.add(r)
        if stop_when_full and ech.full():
            break
    return ech


def rank(rows, ncols, field):
    return rref(rows, ncols, field).rank


def nullspace(rows, ncols, field):
    """Basis of {x : M x = 0} for M given by its rows."""
    ech = rref(rows, ncols, field, stop_when_full=True)
    pivots = sorted(ech.rows)
    free = [c for c in range(ncols) if c not in ech.rows]
    basis = []
    for f in free:
        x = [field.zero] * ncols
        x[f] = field.one
        for p in pivots:
            a = ech.rows[p][f]
            if a:
                x[p] = -a
        basis.append(tuple(x))
    return basis


def solve(rows, rhs, field):
    """One solution x of M x = rhs, or None when inconsistent."""
    ncols = len(rows[0]) if rows else 0
    aug = [tuple(r) + (b,) for r, b in zip(rows, rhs)]
    ech = rref(aug, ncols + 1, field)
    if ncols in ech.rows:
        return None
    x = [field.zero] * ncols
    for p, row in ech.rows.items():
        x[p] = row[ncols]
    return tuple(x)


def mat_vec(m, v, field):
    out = []
    for row in m:
        acc = field.zero
        for a, b in zip(row, v):
            if a and b:
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def mat_mul(a, b, field):
    cols = list(zip(*b))
    return [tuple(_dot(r, c, field) for c in cols) for r in a]


def _dot(r, c, field):
    acc = field.zero
    for x, y in zip(r, c):
        if x and y:
            acc = acc + x * y
    return acc


def identity(n, field):
    return [tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)]


def transpose(m):
    return [tuple(r) for r in zip(*m)]


class Subspace:
    """A subspace of field^dim, stored by its RREF basis (canonical)."""

    def __init__(self, vectors, dim, field):
        self.dim_ambient = dim
        self.field = field
        ech = rref(vectors, dim, field)
        self.basis = tuple(ech.basis())
        self._ech = ech

    @classmethod
    def full(cls, dim, field):
        return cls(identity(dim, field), dim, field)

    @classmethod
    def zero(cls, dim, field):
        return cls([], dim, field)

    @classmethod
    def coordinate(cls, indices, dim, field):
        """Span of the standard basis vectors with the given indices."""
        vecs = []
        for i in indices:
            v = [field.zero] * dim
            v[i] = field.one
            vecs.append(tuple(v))
        return cls(vecs, dim, field)

    @property
    def dim(self):
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def contains(self, v):
        return self._ech.contains(v)

    def __contains__(self, v):
        return self.contains(v)

    def issubspace(self, other):
        return rank(self.basis + other.basis, self.dim_ambient, self.field) == other.dim

    def __le__(self, other):
        return self.issubspace(other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.dim_ambient == other.dim_ambient and self.dim == other.dim
                and self.issubspace(other))

    def __hash__(self):
        return hash((self.dim_ambient, self.basis))

    def intersection(self, other):
        """Vectors sum a_k u_k = sum b_k v_k, read off the kernel of [U | -V]."""
        n1 = len(self.basis)
        if not n1 or not other.basis:
            return Subspace.zero(self.dim_ambient, self.field)
        cols = list(self.basis) + [tuple(-a for a in v) for v in other.basis]
        rows = transpose(cols)
        kern = nullspace(rows, len(cols), self.field)
        vecs = []
        for k in kern:
            v = [self.field.zero] * self.dim_ambient
            for c, b in zip(k[:n1], self.basis):
                if c:
                    v = [x + c * y for x, y in zip(v, b)]
            vecs.append(tuple(v))
        return Subspace(vecs, self.dim_ambient, self.field)

    def tensor(self, other):
        """Span of c (x) d in the lexicographic basis e_i (x) f_j."""
        vecs = []
        for c in self.basis:
            for d in other.basis:
                vecs.append(tuple(a * b for a in c for b in d))
        return Subspace(vecs, self.dim_ambient * other.dim_ambient, self.field)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.dim_ambient})"
