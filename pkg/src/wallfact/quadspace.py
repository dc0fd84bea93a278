"""Non-degenerate quadratic spaces and their isometries.

A space stores the symmetric matrix S with Q(v) = v^T S v; the polar form is
beta(u, v) = Q(u+v) - Q(u) - Q(v), whose matrix is B = 2S.  This is the one
internal convention (valid because characteristic 2 is excluded); arbitrary
square input matrices are symmetrized at construction, which preserves Q.

Isometries are invertible matrices F with F^T S F = S, in column convention
f(v) = F v.  Reflections, orthogonal complements, total-singularity tests,
and (over the rationals) inertia counts and definiteness all live here.
"""

from __future__ import annotations

import enum
from typing import NamedTuple

from .field import UnorderedField
from .linalg import Matrix, Subspace, kernel


class DegenerateForm(Exception):
    """The polar form has a nontrivial radical; the space is not allowed."""


class SingularVector(Exception):
    """A reflection was requested through a vector with Q(v) = 0."""


class NotIsometry(Exception):
    """The given matrix does not preserve the quadratic form."""


class Definiteness(enum.Enum):
    POSITIVE_DEFINITE = "positive_definite"
    POSITIVE_SEMIDEFINITE = "positive_semidefinite"
    NEGATIVE_DEFINITE = "negative_definite"
    NEGATIVE_SEMIDEFINITE = "negative_semidefinite"
    INDEFINITE = "indefinite"


class Signature(NamedTuple):
    positives: int
    negatives: int


class Inertia(NamedTuple):
    positives: int
    negatives: int
    zeros: int


class QuadraticSpace:
    """The ambient pair (V, Q), with Q given by a symmetric matrix."""

    __slots__ = ("field", "dim", "gram", "polar_matrix")

    def __init__(self, field, form):
        M = form if isinstance(form, Matrix) else Matrix(field, form)
        if M.rows != M.cols:
            raise DegenerateForm("form matrix must be square")
        half = field.one / field(2)
        S = (M + M.transpose()).scale(half)
        if not S.det():
            raise DegenerateForm("the polar form is degenerate")
        self.field = field
        self.dim = M.rows
        self.gram = S
        self.polar_matrix = S.scale(2)

    def vector(self, v):
        v = tuple(self.field(x) for x in v)
        if len(v) != self.dim:
            raise DegenerateForm("vector of length %d in dimension %d" % (len(v), self.dim))
        return v

    def standard_basis(self, i):
        return tuple(self.field.one if j == i else self.field.zero for j in range(self.dim))

    def q_value(self, v):
        v = self.vector(v)
        Sv = self.gram.apply(v)
        acc = self.field.zero
        for a, b in zip(v, Sv):
            acc = acc + a * b
        return acc

    def polar(self, u, v):
        u = self.vector(u)
        Bv = self.polar_matrix.apply(self.vector(v))
        acc = self.field.zero
        for a, b in zip(u, Bv):
            acc = acc + a * b
        return acc

    def gram_on(self, rows):
        """Matrix of Q-values on a list of vectors: G[i][j] = u_i^T S u_j."""
        if isinstance(rows, Subspace):
            rows = rows.basis
        C = Matrix(self.field, rows, cols=self.dim)
        return C @ self.gram @ C.transpose()

    def polar_gram_on(self, rows):
        """Matrix of the polar form on a list of vectors (twice gram_on)."""
        return self.gram_on(rows).scale(2)

    def orthogonal_complement(self, W):
        if W.dim == 0:
            return Subspace.full(self.field, self.dim)
        return kernel(W.basis_matrix() @ self.polar_matrix)

    def is_totally_singular(self, W):
        """Whether Q vanishes identically on W (char != 2: beta|_W = 0)."""
        return self.gram_on(W).is_zero()

    def inertia(self, W=None):
        """Counts (positives, negatives, zeros) of a diagonalization of Q|_W."""
        if not self.field.is_ordered:
            raise UnorderedField("inertia needs an ordered field")
        rows = W.basis if isinstance(W, Subspace) else (
            Matrix.identity(self.field, self.dim).entries if W is None else W)
        G = self.gram_on(rows)
        diag, _ = lagrange_diagonalize(G)
        pos = sum(1 for d in diag if d > 0)
        neg = sum(1 for d in diag if d < 0)
        return Inertia(pos, neg, len(diag) - pos - neg)

    def signature(self, W=None):
        pos, neg, _ = self.inertia(W)
        return Signature(pos, neg)

    def definiteness(self, W=None):
        pos, neg, zeros = self.inertia(W)
        n = pos + neg + zeros
        if neg == 0 and zeros == 0 and n > 0:
            return Definiteness.POSITIVE_DEFINITE
        if pos == 0 and zeros == 0 and n > 0:
            return Definiteness.NEGATIVE_DEFINITE
        if neg == 0:
            return Definiteness.POSITIVE_SEMIDEFINITE
        if pos == 0:
            return Definiteness.NEGATIVE_SEMIDEFINITE
        return Definiteness.INDEFINITE

    def reflection(self, v):
        """The reflection u -> u - (beta(u, v)/Q(v)) v through a non-singular v."""
        v = self.vector(v)
        q = self.q_value(v)
        if not q:
            raise SingularVector("cannot reflect through a vector with Q(v) = 0")
        Bv = self.polar_matrix.apply(v)
        n = self.dim
        rows = []
        for i in range(n):
            coeff = v[i] / q
            rows.append([
                (self.field.one if i == j else self.field.zero) - coeff * Bv[j]
                for j in range(n)
            ])
        return Isometry(self, Matrix(self.field, rows), _checked=True)

    def identity_isometry(self):
        return Isometry.identity(self)

    def __eq__(self, other):
        if not isinstance(other, QuadraticSpace):
            return NotImplemented
        return self.field == other.field and self.gram == other.gram

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        return "QuadraticSpace(dim %d over %r)" % (self.dim, self.field)


def diagonal_space(field, values):
    """Space with form diag(values)."""
    return QuadraticSpace(field, Matrix.diagonal(field, values))


def lagrange_diagonalize(G):
    """Symmetric congruence diagonalization by Lagrange's method.

    Returns (diag, C) with C invertible rows c_i such that c_i G c_j^T is
    diag[i] when i == j and zero otherwise.  Works over any field here
    (char != 2); used for inertia counts over the rationals.
    """
    field = G.field
    k = G.rows
    A = [list(row) for row in G.entries]
    C = [[field.one if i == j else field.zero for j in range(k)] for i in range(k)]

    def add_row_col(dst, src, factor):
        # basis op b_dst += factor * b_src, reflected on both sides of A
        C[dst] = [x + factor * y for x, y in zip(C[dst], C[src])]
        A[dst] = [x + factor * y for x, y in zip(A[dst], A[src])]
        for r in range(k):
            A[r][dst] = A[r][dst] + factor * A[r][src]

    def swap(i, j):
        C[i], C[j] = C[j], C[i]
        A[i], A[j] = A[j], A[i]
        for r in range(k):
            A[r][i], A[r][j] = A[r][j], A[r][i]

    for i in range(k):
        if not A[i][i]:
            pivot = next((j for j in range(i + 1, k) if A[j][j]), None)
            if pivot is not None:
                swap(i, pivot)
            else:
                off = next((j for j in range(i + 1, k) if A[i][j]), None)
                if off is None:
                    continue
                add_row_col(i, off, field.one)  # new diagonal entry is 2*A[i][off]
        for j in range(i + 1, k):
            if A[j][i]:
                add_row_col(j, i, -(A[j][i] / A[i][i]))
    diag = [A[i][i] for i in range(k)]
    return diag, Matrix(field, C, cols=k)


class Isometry:
    """An invertible linear map preserving Q, as a matrix acting on columns."""

    __slots__ = ("space", "matrix")

    def __init__(self, space, matrix, _checked=False):
        M = matrix if isinstance(matrix, Matrix) else Matrix(space.field, matrix)
        if M.rows != space.dim or M.cols != space.dim:
            raise NotIsometry("matrix shape %dx%d in dimension %d" % (M.rows, M.cols, space.dim))
        if not _checked and M.transpose() @ space.gram @ M != space.gram:
            raise NotIsometry("matrix does not preserve the quadratic form")
        self.space = space
        self.matrix = M

    @classmethod
    def identity(cls, space):
        return cls(space, Matrix.identity(space.field, space.dim), _checked=True)

    def apply(self, v):
        return self.matrix.apply(self.space.vector(v))

    def __matmul__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        if other.space != self.space:
            raise NotIsometry("isometries of different spaces")
        # products and inverses of isometries are isometries exactly
        return Isometry(self.space, self.matrix @ other.matrix, _checked=True)

    def inverse(self):
        return Isometry(self.space, self.matrix.inverse(), _checked=True)

    def det(self):
        return self.matrix.det()

    def is_identity(self):
        return self.matrix == Matrix.identity(self.space.field, self.space.dim)

    def is_involution(self):
        return (self.matrix @ self.matrix) == Matrix.identity(self.space.field, self.space.dim)

    def key(self):
        """Hashable entry grid, for use as a dict key in group enumeration."""
        return self.matrix.entries

    def __eq__(self, other):
        if not isinstance(other, Isometry):
            return NotImplemented
        return self.space == other.space and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.space, self.matrix))

    def __repr__(self):
        return "Isometry(%r)" % (self.matrix,)
