"""Exact dense linear algebra over the scalar fields.

Matrices are immutable row-major grids of field elements.  Subspaces are
kept in canonical form: the reduced row echelon basis of their row span, so
two Subspace objects are equal (and hash alike) exactly when they describe
the same subspace.  Everything is plain Gaussian elimination; inputs are
desk-scale and exactness beats asymptotics here.
"""

from __future__ import annotations

import itertools

from .field import PrimeField


class DimensionMismatch(Exception):
    """Operands have incompatible shapes."""


class NonSquare(Exception):
    """A square matrix was required."""


class TooLarge(Exception):
    """An enumeration would exceed the configured cap."""


DEFAULT_SUBSPACE_CAP = 10 ** 6


def _rref(field, rows, ncols):
    """Reduced row echelon form of a list of row tuples.

    Returns (rows, pivots) where rows is a list of lists with the zero rows
    removed and pivots the increasing list of pivot columns.
    """
    work = [list(r) for r in rows]
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, nrows):
            if work[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        inv = field.one / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c]:
                t = work[i][c]
                work[i] = [x - t * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return work[:r], pivots


class Matrix:
    """Immutable matrix over a fixed field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field, entries, cols=None):
        entries = tuple(tuple(field(x) for x in row) for row in entries)
        if entries:
            ncols = len(entries[0])
            if any(len(row) != ncols for row in entries):
                raise DimensionMismatch("ragged rows")
            if cols is not None and cols != ncols:
                raise DimensionMismatch("declared %d columns, rows have %d" % (cols, ncols))
        else:
            ncols = 0 if cols is None else cols
        self.field = field
        self.rows = len(entries)
        self.cols = ncols
        self.entries = entries

    @classmethod
    def identity(cls, field, n):
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field, rows, cols):
        zero = field.zero
        return cls(field, [[zero] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def diagonal(cls, field, values):
        values = [field(v) for v in values]
        zero = field.zero
        n = len(values)
        return cls(field, [[values[i] if i == j else zero for j in range(n)] for i in range(n)])

    def __getitem__(self, key):
        i, j = key
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def col(self, j):
        return tuple(row[j] for row in self.entries)

    def transpose(self):
        if self.rows == 0:
            return Matrix(self.field, [[] for _ in range(self.cols)] if self.cols else [], cols=0)
        if self.cols == 0:
            return Matrix(self.field, [], cols=self.rows)
        return Matrix(self.field, list(zip(*self.entries)))

    def __add__(self, other):
        self._same_shape(other)
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return Matrix(self.field, [[a - b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def scale(self, c):
        c = self.field(c)
        return Matrix(self.field, [[c * a for a in row] for row in self.entries])

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch("%dx%d @ %dx%d" % (self.rows, self.cols, other.rows, other.cols))
        if self.cols == 0:
            return Matrix.zeros(self.field, self.rows, other.cols)
        cols = other.transpose().entries
        return Matrix(self.field, [[_dot(r, c) for c in cols] for r in self.entries],
                      cols=other.cols)

    def apply(self, v):
        """Matrix times column vector, as a tuple."""
        v = tuple(self.field(x) for x in v)
        if len(v) != self.cols:
            raise DimensionMismatch("vector of length %d against %d columns" % (len(v), self.cols))
        return tuple(_dot(row, v) for row in self.entries)

    def _same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatch("%dx%d vs %dx%d" % (self.rows, self.cols, other.rows, other.cols))

    def is_zero(self):
        return all(not x for row in self.entries for x in row)

    def is_symmetric(self):
        if self.rows != self.cols:
            return False
        return all(self.entries[i][j] == self.entries[j][i]
                   for i in range(self.rows) for j in range(i + 1, self.cols))

    def rref(self):
        rows, pivots = _rref(self.field, self.entries, self.cols)
        return Matrix(self.field, rows, cols=self.cols), tuple(pivots)

    def rank(self):
        return len(_rref(self.field, self.entries, self.cols)[1])

    def det(self):
        if self.rows != self.cols:
            raise NonSquare("determinant of a %dx%d matrix" % (self.rows, self.cols))
        n = self.rows
        if n == 0:
            return self.field.one
        work = [list(r) for r in self.entries]
        det = self.field.one
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if work[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return self.field.zero
            if pivot_row != c:
                work[c], work[pivot_row] = work[pivot_row], work[c]
                det = -det
            det = det * work[c][c]
            inv = self.field.one / work[c][c]
            for i in range(c + 1, n):
                if work[i][c]:
                    t = work[i][c] * inv
                    work[i] = [x - t * y for x, y in zip(work[i], work[c])]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise NonSquare("inverse of a %dx%d matrix" % (self.rows, self.cols))
        n = self.rows
        aug = [list(row) + [self.field.one if i == j else self.field.zero for j in range(n)]
               for i, row in enumerate(self.entries)]
        reduced, pivots = _rref(self.field, aug, 2 * n)
        if list(pivots[:n]) != list(range(n)) or len(pivots) != n:
            raise ZeroDivisionError("matrix is singular")
        return Matrix(self.field, [row[n:] for row in reduced])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, self.entries))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return "Matrix(%r, %dx%d)" % (self.field, self.rows, self.cols)
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return "Matrix(%r, [%s])" % (self.field, body)


def _dot(u, v):
    it = zip(u, v)
    try:
        a, b = next(it)
    except StopIteration:
        raise DimensionMismatch("dot product of empty vectors needs a field zero") from None
    acc = a * b
    for a, b in it:
        acc = acc + a * b
    return acc


def dot(u, v):
    """Plain coordinate dot product of two equal-length vectors."""
    if len(u) != len(v):
        raise DimensionMismatch("dot of lengths %d and %d" % (len(u), len(v)))
    return _dot(u, v)


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v):
    return tuple(c * a for a in v)


def is_zero_vector(v):
    return all(not x for x in v)


def solve(A, b):
    """A particular solution x of A x = b, or None when none exists."""
    b = tuple(A.field(x) for x in b)
    if len(b) != A.rows:
        raise DimensionMismatch("rhs of length %d against %d rows" % (len(b), A.rows))
    aug = [list(row) + [b[i]] for i, row in enumerate(A.entries)]
    reduced, pivots = _rref(A.field, aug, A.cols + 1)
    if A.cols in pivots:
        return None
    x = [A.field.zero] * A.cols
    for i, c in enumerate(pivots):
        x[c] = reduced[i][A.cols]
    return tuple(x)


def kernel(A):
    """The null space of A as a Subspace of the column-index space."""
    reduced, pivots = _rref(A.field, A.entries, A.cols)
    pivot_set = set(pivots)
    free = [c for c in range(A.cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [A.field.zero] * A.cols
        v[fc] = A.field.one
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(v)
    return Subspace(A.field, A.cols, basis)


def image(A):
    """The column space of A as a Subspace."""
    return Subspace(A.field, A.rows, list(zip(*A.entries)) if A.cols else [])


def rank(A):
    return A.rank()


def det(A):
    return A.det()


class Subspace:
    """A linear subspace, canonically represented by its RREF row basis."""

    __slots__ = ("field", "ambient_dim", "basis")

    def __init__(self, field, ambient_dim, vectors=()):
        vectors = [tuple(field(x) for x in v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatch("vector of length %d in ambient dimension %d"
                                        % (len(v), ambient_dim))
        rows, _ = _rref(field, vectors, ambient_dim)
        self.field = field
        self.ambient_dim = ambient_dim
        self.basis = tuple(tuple(r) for r in rows)

    @classmethod
    def zero(cls, field, ambient_dim):
        return cls(field, ambient_dim)

    @classmethod
    def full(cls, field, ambient_dim):
        return cls(field, ambient_dim, Matrix.identity(field, ambient_dim).entries)

    @property
    def dim(self):
        return len(self.basis)

    def basis_matrix(self):
        if not self.basis:
            return Matrix.zeros(self.field, 0, self.ambient_dim)
        return Matrix(self.field, self.basis)

    def contains(self, v):
        return self.coordinates_of(v) is not None

    def coordinates_of(self, v):
        """Coefficients of v in the canonical basis, or None if v is outside."""
        v = tuple(self.field(x) for x in v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector of length %d in ambient dimension %d"
                                    % (len(v), self.ambient_dim))
        if not self.basis:
            return () if is_zero_vector(v) else None
        # the basis is RREF, so coefficients can be read off the pivot entries
        coords = []
        residue = list(v)
        for row in self.basis:
            pivot = next(i for i, x in enumerate(row) if x)
            c = residue[pivot]
            coords.append(c)
            if c:
                residue = [a - c * b for a, b in zip(residue, row)]
        if not all(not x for x in residue):
            return None
        return tuple(coords)

    def is_contained_in(self, other):
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field == other.field and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return "Subspace(dim %d of %d over %r)" % (self.dim, self.ambient_dim, self.field)


def subspace_sum(U, W):
    _check_same_ambient(U, W)
    return Subspace(U.field, U.ambient_dim, list(U.basis) + list(W.basis))


def subspace_intersection(U, W):
    _check_same_ambient(U, W)
    if U.dim == 0 or W.dim == 0:
        return Subspace.zero(U.field, U.ambient_dim)
    # solve a^T U.basis = b^T W.basis: kernel of the matrix with columns
    # u_1..u_k, -w_1..-w_l, then read the a-part back through U's basis
    cols = [list(v) for v in U.basis] + [[-x for x in w] for w in W.basis]
    M = Matrix(U.field, list(zip(*cols)))
    vectors = []
    for coeffs in kernel(M).basis:
        a = coeffs[:U.dim]
        vec = [U.field.zero] * U.ambient_dim
        for c, u in zip(a, U.basis):
            if c:
                vec = [x + c * y for x, y in zip(vec, u)]
        vectors.append(vec)
    return Subspace(U.field, U.ambient_dim, vectors)


def contains(U, v):
    return U.contains(v)


def _check_same_ambient(U, W):
    if U.field != W.field or U.ambient_dim != W.ambient_dim:
        raise DimensionMismatch("subspaces of different ambient spaces")


def gaussian_binomial(n, k, q):
    """Number of k-dimensional subspaces of an n-dimensional space over F_q."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (k - i) - 1
    assert num % den == 0
    return num // den


def count_subspaces(n, q):
    return sum(gaussian_binomial(n, k, q) for k in range(n + 1))


def enumerate_subspaces(of_space, cap=DEFAULT_SUBSPACE_CAP):
    """Yield every subspace of of_space exactly once, over a prime field.

    Iterates RREF patterns (pivot-column sets times free-entry assignments)
    in the coordinate space of of_space, so the output is duplicate-free by
    construction, ordered by dimension, then pivot columns, then entries.
    """
    field = of_space.field
    if not isinstance(field, PrimeField):
        raise TypeError("subspace enumeration needs a finite field, got %r" % field)
    d = of_space.dim
    total = count_subspaces(d, field.p)
    if total > cap:
        raise TooLarge("%d subspaces exceeds the cap of %d" % (total, cap))
    scalars = list(field.elements())
    amb = of_space.ambient_dim
    for k in range(d + 1):
        for pivots in itertools.combinations(range(d), k):
            pivot_set = set(pivots)
            free_positions = [(i, c) for i in range(k) for c in range(pivots[i] + 1, d)
                              if c not in pivot_set]
            for assignment in itertools.product(scalars, repeat=len(free_positions)):
                rows = [[field.zero] * d for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = field.one
                for (i, c), val in zip(free_positions, assignment):
                    rows[i][c] = val
                ambient_rows = []
                for row in rows:
                    vec = [field.zero] * amb
                    for c, coeff in enumerate(row):
                        if coeff:
                            vec = [x + coeff * y for x, y in zip(vec, of_space.basis[c])]
                    ambient_rows.append(vec)
                yield Subspace(field, amb, ambient_rows)
