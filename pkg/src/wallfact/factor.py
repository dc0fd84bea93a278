"""Reflection length and minimal reflection factorizations.

The length of f is dim Mov(f) when Mov(f) carries a non-singular vector and
dim Mov(f) + 2 when Mov(f) is totally singular.  Minimal factorizations come
from a triangular basis of the Wall form: chi(e_i, e_i) != 0 with zeros
above the diagonal peels f into reflections r_{e_1} ... r_{e_m} one split at
a time.  In the totally singular case one auxiliary reflection is prepended
first.
"""

from __future__ import annotations

from .linalg import Matrix, kernel, vec_add, vec_scale
from .quadspace import Isometry, SingularVector
from .wall import isometry_from_wall, moved_space, wall_form


class AlternatingForm(Exception):
    """chi(u, u) = 0 everywhere; no triangular basis exists."""


class DegenerateRestriction(Exception):
    """The Wall form restricts degenerately to the requested subspace."""


class Factorization:
    """An ordered list of reflecting vectors whose product is a known isometry."""

    __slots__ = ("space", "vectors")

    def __init__(self, space, vectors, target=None):
        vectors = tuple(space.vector(v) for v in vectors)
        for v in vectors:
            if not space.q_value(v):
                raise SingularVector("factorization vector with Q(v) = 0")
        self.space = space
        self.vectors = vectors
        if target is not None and self.product() != target:
            raise ValueError("reflection product does not reproduce the target isometry")

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def product(self) -> Isometry:
        out = Isometry.identity(self.space)
        for v in self.vectors:
            out = out @ self.space.reflection(v)
        return out

    def is_positive(self):
        """All reflecting vectors have Q(v) > 0 (ordered fields)."""
        return all(self.space.field.is_positive(self.space.q_value(v)) for v in self.vectors)

    def __repr__(self):
        return "Factorization(%d reflections in %r)" % (len(self.vectors), self.space)


# ---------------------------------------------------------------------------
# triangular bases of bilinear forms, in coordinates

def bilinear_value(X, u, v):
    """u X v^T for coordinate row vectors."""
    acc = X.field.zero
    for i, a in enumerate(u):
        if a:
            for j, b in enumerate(v):
                if b:
                    acc = acc + a * X[i, j] * b
    return acc


def right_complement_rows(X, u):
    """RREF basis rows of {y : u X y^T = 0} in coordinates."""
    row = tuple(bilinear_value(X, u, _unit(X.field, X.rows, j)) for j in range(X.rows))
    return kernel(Matrix(X.field, [row], cols=X.rows)).basis


def restrict_bilinear(X, rows):
    """Matrix of the form on the given coordinate rows."""
    return Matrix(X.field, [[bilinear_value(X, r, s) for s in rows] for r in rows],
                  cols=len(rows))


def _unit(field, n, i):
    return tuple(field.one if j == i else field.zero for j in range(n))


def nonalternating_witness(X):
    """A coordinate vector u with X(u, u) != 0, or None if X is alternating.

    Scanning the diagonal and then pairwise basis sums is exhaustive: the
    squared value of any vector expands over exactly those quantities.
    """
    field = X.field
    m = X.rows
    for i in range(m):
        if X[i, i]:
            return _unit(field, m, i)
    for i in range(m):
        for j in range(i + 1, m):
            if X[i, j] + X[j, i]:
                return vec_add(_unit(field, m, i), _unit(field, m, j))
    return None


def _scalar_candidates(field):
    if field.is_ordered:
        return (field.one, -field.one, field(2))
    return tuple(field.nonzero_elements())


def triangular_basis(chi):
    """Coordinate rows e_1..e_m with chi(e_i,e_i) != 0 and chi(e_i,e_j) = 0 for i<j.

    Requires chi non-degenerate and not alternating.  The first vector is a
    non-alternating witness; if the form turns alternating on its right
    complement, the witness is repaired by adding a suitable multiple of a
    complement vector, after which the complement cannot stay alternating.
    """
    m = chi.rows
    if m == 0:
        return []
    if not chi.det():
        raise ValueError("triangular basis of a degenerate form")
    u = nonalternating_witness(chi)
    if u is None:
        raise AlternatingForm("chi(u, u) = 0 for every u")
    return _triangular_rec(chi, u)


def _triangular_rec(X, u):
    k = X.rows
    if k == 1:
        return [u]
    R = XR = wit = None
    for _attempt in range(2):
        R = right_complement_rows(X, u)
        XR = restrict_bilinear(X, R)
        wit = nonalternating_witness(XR)
        if wit is not None:
            break
        # the complement is non-degenerate alternating: pick v there, make
        # u + a v non-alternating while keeping its square nonzero
        v = next((r for r in R if bilinear_value(X, r, u)), R[0])
        uu = bilinear_value(X, u, u)
        vu = bilinear_value(X, v, u)
        a = next(c for c in _scalar_candidates(X.field) if uu + c * vu)
        u = vec_add(u, vec_scale(a, v))
    else:
        raise AssertionError("triangular repair did not terminate")
    rest = _triangular_rec(XR, wit)
    out = [u]
    for local in rest:
        vec = [X.field.zero] * k
        for coeff, row in zip(local, R):
            if coeff:
                vec = [x + coeff * y for x, y in zip(vec, row)]
        out.append(tuple(vec))
    return out


# ---------------------------------------------------------------------------
# splits, lengths, factorizations

def split(f, U1, side="right"):
    """Split f = f1 f2 (side="right") or f = f2 f1 (side="left").

    U1 must lie in Mov(f) and carry a non-degenerate restriction of the Wall
    form; U2 is the chi-complement of U1 on the chosen side.  Mov(f) is then
    the direct sum of U1 and U2.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    wd = wall_form(f)
    chi1 = wd.restrict(U1)
    if not chi1.det():
        raise DegenerateRestriction("the Wall form degenerates on U1")
    U2 = wd.right_complement(U1) if side == "right" else wd.left_complement(U1)
    chi2 = wd.restrict(U2)
    f1 = isometry_from_wall(f.space, U1, chi1)
    f2 = isometry_from_wall(f.space, U2, chi2)
    recombined = f1 @ f2 if side == "right" else f2 @ f1
    assert recombined == f, "split certificate failure"
    return f1, f2


def reflection_length(f) -> int:
    """Minimal number of reflections multiplying to f."""
    if f.is_identity():
        return 0
    mov = moved_space(f)
    if f.space.is_totally_singular(mov):
        return mov.dim + 2
    return mov.dim


def is_minimal(f) -> bool:
    """Whether the reflection length of f equals dim Mov(f)."""
    return f.is_identity() or not f.space.is_totally_singular(moved_space(f))


def nonsingular_vector(space):
    """Some v with Q(v) != 0; scans the standard basis, then pairwise sums."""
    for i in range(space.dim):
        e = space.standard_basis(i)
        if space.q_value(e):
            return e
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            v = vec_add(space.standard_basis(i), space.standard_basis(j))
            if space.q_value(v):
                return v
    raise AssertionError("Q vanishes on all basis vectors and sums; the form would be degenerate")


def minimal_factorization(f) -> Factorization:
    """A reflection factorization of f of minimal length.

    Identity gives the empty factorization.  When Mov(f) is not totally
    singular, a triangular basis of the Wall form yields a direct
    factorization of length dim Mov(f).  Otherwise one non-singular ambient
    vector is prepended and the minimal factorization of r_v f (whose moved
    space gains the non-singular direction v) is appended.
    """
    space = f.space
    if f.is_identity():
        return Factorization(space, (), target=f)
    wd = wall_form(f)
    if not space.is_totally_singular(wd.subspace):
        vectors = []
        for coords in triangular_basis(wd.chi):
            vec = [space.field.zero] * space.dim
            for coeff, row in zip(coords, wd.basis.entries):
                if coeff:
                    vec = [x + coeff * y for x, y in zip(vec, row)]
            vectors.append(tuple(vec))
        return Factorization(space, vectors, target=f)
    v = nonsingular_vector(space)
    g = space.reflection(v) @ f
    inner = minimal_factorization(g)
    return Factorization(space, (v,) + inner.vectors, target=f)
