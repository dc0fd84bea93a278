"""Moved/fixed spaces, the Wall form, and the parametrization of isometries.

Every isometry f is pinned down by the pair (Mov(f), chi_f):  Mov(f) is the
image of id - f, and chi_f is the non-degenerate bilinear form on Mov(f)
with chi_f(w - f(w), v) = beta(w, v).  Going back, a pair (W, chi) with chi
non-degenerate and chi(u, u) = Q(u) on W determines a unique isometry; the
construction inverts one m x m matrix and is implemented in closed form as
F = I - U^T X^-T U B for a row basis U of W.

The spinor norm is the square class of det(chi_f) in any basis of Mov(f).
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Subspace, image, kernel, solve
from .quadspace import Isometry

# re-exported: the isometry wrapper lives with the quadratic space
__all__ = [
    "Isometry", "WallData", "DegenerateChi", "ChiQMismatch",
    "fixed_space", "moved_space", "wall_form", "isometry_from_wall",
    "chi_right_complement", "chi_left_complement", "spinor_norm",
    "check_wall_properties", "WallPropertyReport",
    "enumerate_isometries_with_moved_space",
]


class DegenerateChi(Exception):
    """The candidate Wall form has determinant zero."""


class ChiQMismatch(Exception):
    """The candidate Wall form does not restrict Q correctly on its space."""


def _displacement(f):
    return Matrix.identity(f.space.field, f.space.dim) - f.matrix


def fixed_space(f) -> Subspace:
    """Fix(f) = ker(id - f)."""
    return kernel(_displacement(f))


def moved_space(f) -> Subspace:
    """Mov(f) = im(id - f)."""
    return image(_displacement(f))


class WallData:
    """A basis of Mov(f) together with the matrix of chi_f in that basis.

    The basis is the canonical RREF basis of the moved space, which makes
    WallData equality meaningful: equal isometries give equal WallData.
    """

    __slots__ = ("space", "basis", "chi")

    def __init__(self, space, basis, chi):
        self.space = space
        self.basis = basis if isinstance(basis, Matrix) else Matrix(space.field, basis, cols=space.dim)
        self.chi = chi if isinstance(chi, Matrix) else Matrix(space.field, chi, cols=self.basis.rows)

    @property
    def dim(self):
        return self.basis.rows

    @property
    def subspace(self):
        return Subspace(self.space.field, self.space.dim, self.basis.entries)

    def coordinates_of(self, v):
        coords = self.subspace.coordinates_of(v)
        if coords is None:
            raise ValueError("vector is not in the moved space")
        return coords

    def value(self, u, v):
        """chi(u, v) for ambient vectors u, v inside the moved space."""
        cu = self.coordinates_of(u)
        cv = self.coordinates_of(v)
        acc = self.space.field.zero
        for i, a in enumerate(cu):
            if a:
                for j, b in enumerate(cv):
                    if b:
                        acc = acc + a * self.chi[i, j] * b
        return acc

    def _coord_rows(self, U):
        return Matrix(self.space.field, [self.coordinates_of(v) for v in U.basis],
                      cols=self.dim)

    def restrict(self, U):
        """Matrix of chi on the canonical basis of a subspace U of Mov(f)."""
        C = self._coord_rows(U)
        return C @ self.chi @ C.transpose()

    def _coords_to_ambient(self, coord_subspace):
        rows = []
        for c in coord_subspace.basis:
            vec = [self.space.field.zero] * self.space.dim
            for i, coeff in enumerate(c):
                if coeff:
                    vec = [x + coeff * y for x, y in zip(vec, self.basis.entries[i])]
            rows.append(vec)
        return Subspace(self.space.field, self.space.dim, rows)

    def right_complement(self, U):
        """{v in Mov : chi(u, v) = 0 for all u in U}."""
        C = self._coord_rows(U)
        return self._coords_to_ambient(kernel(C @ self.chi))

    def left_complement(self, U):
        """{v in Mov : chi(v, u) = 0 for all u in U}."""
        C = self._coord_rows(U)
        return self._coords_to_ambient(kernel(C @ self.chi.transpose()))

    def is_symmetric(self):
        return self.chi.is_symmetric()

    def is_alternating(self):
        X = self.chi
        m = X.rows
        return all(not X[i, i] for i in range(m)) and all(
            X[i, j] == -X[j, i] for i in range(m) for j in range(i + 1, m))

    def det(self):
        return self.chi.det()

    def __eq__(self, other):
        if not isinstance(other, WallData):
            return NotImplemented
        return (self.space == other.space and self.basis == other.basis
                and self.chi == other.chi)

    def __hash__(self):
        return hash((self.space, self.basis, self.chi))

    def __repr__(self):
        return "WallData(dim %d in %r)" % (self.dim, self.space)


def wall_form(f) -> WallData:
    """The Wall form of f on the canonical basis of Mov(f).

    For each basis vector u_i, some w_i with u_i = w_i - f(w_i) is found by
    solving the displacement system; then chi[i][j] = beta(w_i, u_j).  The
    result does not depend on the choice of w_i.
    """
    space = f.space
    D = _displacement(f)
    mov = image(D)
    witnesses = []
    for u in mov.basis:
        w = solve(D, u)
        assert w is not None, "moved-space vector outside the displacement image"
        witnesses.append(w)
    chi = [[space.polar(w, u) for u in mov.basis] for w in witnesses]
    return WallData(space, mov.basis_matrix(),
                    Matrix(space.field, chi, cols=mov.dim))


def isometry_from_wall(space, basis, chi) -> Isometry:
    """The unique isometry f with Mov(f) = span(basis) and Wall form chi.

    basis may be a Subspace (its canonical basis is used) or an explicit
    row matrix / list of rows; chi is the matrix of the form in that basis.
    Preconditions: det(chi) != 0, chi[i][i] = Q(u_i), and chi + chi^T equals
    the polar Gram matrix of the basis (together these say chi(u,u) = Q(u)
    on the whole span, char != 2).
    """
    if isinstance(basis, Subspace):
        U = basis.basis_matrix()
    elif isinstance(basis, Matrix):
        U = basis
    else:
        U = Matrix(space.field, basis, cols=space.dim)
    X = chi if isinstance(chi, Matrix) else Matrix(space.field, chi, cols=U.rows)
    m = U.rows
    if m == 0:
        return Isometry.identity(space)
    if U.rank() != m:
        raise ValueError("basis rows are linearly dependent")
    if X.rows != m or X.cols != m:
        raise ChiQMismatch("chi must be %dx%d" % (m, m))
    if not X.det():
        raise DegenerateChi("the candidate Wall form is degenerate")
    for i in range(m):
        if X[i, i] != space.q_value(U.row(i)):
            raise ChiQMismatch("diagonal entry %d does not match Q" % i)
    if X + X.transpose() != space.polar_gram_on(U.entries):
        raise ChiQMismatch("chi + chi^T does not match the polar form")
    F = Matrix.identity(space.field, space.dim) - (
        U.transpose() @ X.transpose().inverse() @ U @ space.polar_matrix)
    return Isometry(space, F)


def chi_right_complement(wd, U) -> Subspace:
    return wd.right_complement(U)


def chi_left_complement(wd, U) -> Subspace:
    return wd.left_complement(U)


def spinor_norm(f):
    """Square class of det(chi_f); the class of 1 for the identity."""
    wd = wall_form(f)
    if wd.dim == 0:
        return f.space.field.square_class(f.space.field.one)
    return f.space.field.square_class(wd.det())


@dataclass
class WallPropertyReport:
    """Outcome of the structural identities of the Wall form."""

    results: dict

    @property
    def ok(self):
        return all(self.results.values())

    def failing(self):
        return [name for name, good in self.results.items() if not good]


def check_wall_properties(f, g) -> WallPropertyReport:
    """Check the five structural identities of chi_f (g drives conjugation):

    (i)   chi(u,v) + chi(v,u) = beta(u,v) on Mov(f);
    (ii)  chi(f(u), v) = -chi(v, u);
    (iii) Mov(f^-1) = Mov(f) and chi_{f^-1}(u,v) = chi_f(v,u);
    (iv)  Mov(g f g^-1) = g(Mov(f)) and chi_{gfg^-1}(g(u), g(v)) = chi_f(u,v);
    (v)   chi_f symmetric iff f is an involution.
    """
    space = f.space
    wd = wall_form(f)
    basis = wd.basis.entries
    m = wd.dim
    results = {}

    results["symmetrization_is_polar"] = (
        wd.chi + wd.chi.transpose() == space.polar_gram_on(basis))

    ok = True
    for i in range(m):
        fu = f.apply(basis[i])
        for j in range(m):
            if wd.value(fu, basis[j]) != -wd.chi[j, i]:
                ok = False
    results["twist_identity"] = ok

    wi = wall_form(f.inverse())
    results["inverse_transposes"] = (
        wi.subspace == wd.subspace and wi.chi == wd.chi.transpose())

    h = g @ f @ g.inverse()
    wh = wall_form(h)
    ok = wh.subspace == Subspace(space.field, space.dim,
                                 [g.apply(u) for u in basis])
    if ok:
        for i in range(m):
            gu = g.apply(basis[i])
            for j in range(m):
                if wh.value(gu, g.apply(basis[j])) != wd.chi[i, j]:
                    ok = False
    results["conjugation_transports"] = ok

    results["symmetric_iff_involution"] = (wd.is_symmetric() == f.is_involution())
    return WallPropertyReport(results)


def enumerate_isometries_with_moved_space(space, U):
    """All isometries f with Mov(f) exactly U, over a prime field.

    chi is pinned on the diagonal (by Q) and on symmetrized entries (by the
    polar form), so only the strictly-upper entries range over the field;
    non-degenerate choices biject with the isometries.
    """
    import itertools

    field = space.field
    k = U.dim
    if k == 0:
        yield Isometry.identity(space)
        return
    rows = U.basis
    qdiag = [space.q_value(u) for u in rows]
    bgram = space.polar_gram_on(rows)
    positions = [(i, j) for i in range(k) for j in range(i + 1, k)]
    for assignment in itertools.product(list(field.elements()), repeat=len(positions)):
        X = [[field.zero] * k for _ in range(k)]
        for i in range(k):
            X[i][i] = qdiag[i]
        for (i, j), t in zip(positions, assignment):
            X[i][j] = t
            X[j][i] = bgram[i, j] - t
        M = Matrix(field, X, cols=k)
        if not M.det():
            continue
        yield isometry_from_wall(space, U, M)
