"""Factorizations into positive reflections over the rationals.

A reflection is positive when its vector has Q(v) > 0; an isometry is
positive when its spinor norm is a positive square class.  Positive
isometries factor into positive reflections, with length dim Mov(f) exactly
when Mov(f) is positive definite or f is a non-involution whose moved space
contains a positive vector; otherwise two extra reflections are needed.

The constructive core: a triangular basis of chi consisting of positive
vectors, built by induction.  The three-dimensional step finds an
orthogonal pair of positive vectors in a non-symmetric form; the inductive
step perturbs that pair into every coordinate direction (keeping positivity
and orthogonality) until the right complement of a probe carries a
non-symmetric restriction.  All comparisons are exact rational arithmetic;
square density of the rationals enters only through the integer square
search of rational_square_in_interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .factor import (Factorization, bilinear_value, nonalternating_witness,
                     restrict_bilinear, right_complement_rows, triangular_basis,
                     _triangular_rec, _unit)
from .field import rational_square_in_interval
from .linalg import Matrix, Subspace, solve, subspace_intersection, vec_add, vec_scale
from .quadspace import lagrange_diagonalize
from .wall import fixed_space, moved_space, spinor_norm, wall_form


class NegativeSpinor(Exception):
    """The isometry is not positive, so no positive factorization exists."""


class NoPositiveVector(Exception):
    """chi(u, u) <= 0 everywhere on the space in question."""


class SymmetricChi(Exception):
    """The construction needs a non-symmetric form."""


class NegativeDeterminant(Exception):
    """A positive triangular basis forces det(chi) > 0."""


@dataclass
class PositivityReport:
    """How an isometry sits relative to the positive-reflection machinery."""

    spinor_positive: bool
    mov_definiteness: object
    is_involution: bool
    positive_length: int | None


def is_positive_isometry(f) -> bool:
    """Whether the spinor norm of f is a positive square class."""
    return spinor_norm(f).is_positive()


def positivity_report(f) -> PositivityReport:
    mov = moved_space(f)
    positive = is_positive_isometry(f)
    return PositivityReport(
        spinor_positive=positive,
        mov_definiteness=f.space.definiteness(mov),
        is_involution=f.is_involution(),
        positive_length=positive_reflection_length(f) if positive else None,
    )


# ---------------------------------------------------------------------------
# finding vectors of positive square, exactly

def positive_vector_for(X):
    """Coordinates of some u with X(u, u) > 0, or None when none exists.

    Scans the standard basis and pairwise sums and differences first; if
    those fail, diagonalizes the symmetrized form, which decides existence
    exactly.
    """
    field = X.field
    m = X.rows
    for i in range(m):
        if X[i, i] > 0:
            return _unit(field, m, i)
    for i in range(m):
        for j in range(i + 1, m):
            cross = X[i, j] + X[j, i]
            if X[i, i] + X[j, j] + cross > 0:
                return vec_add(_unit(field, m, i), _unit(field, m, j))
            if X[i, i] + X[j, j] - cross > 0:
                return tuple(a - b for a, b in zip(_unit(field, m, i), _unit(field, m, j)))
    half = field.one / field(2)
    sym = (X + X.transpose()).scale(half)
    diag, C = lagrange_diagonalize(sym)
    for d, row in zip(diag, C.entries):
        if d > 0:
            return tuple(row)
    return None


def left_complement_rows(X, u):
    """RREF basis rows of {y : y X u^T = 0} in coordinates."""
    return right_complement_rows(X.transpose(), u)


def _combine(coords, rows, field, length):
    vec = [field.zero] * length
    for c, row in zip(coords, rows):
        if c:
            vec = [x + c * y for x, y in zip(vec, row)]
    return tuple(vec)


def basis_with_one_positive_vector(X):
    """Triangular basis whose first vector has positive square.

    Works like the plain triangular basis, except the starting vector is a
    positive witness and the repair scalar is chosen as chi(v, u), which
    adds the square chi(v, u)^2 to the already positive chi(u, u).
    """
    field = X.field
    if not field.is_ordered:
        raise TypeError("positive bases need an ordered field")
    m = X.rows
    if m == 0:
        return []
    if not X.det():
        raise ValueError("basis search on a degenerate form")
    u = positive_vector_for(X)
    if u is None:
        raise NoPositiveVector("chi(u, u) <= 0 on the whole space")
    if m == 1:
        return [u]
    R = XR = wit = None
    for _attempt in range(2):
        R = right_complement_rows(X, u)
        XR = restrict_bilinear(X, R)
        wit = nonalternating_witness(XR)
        if wit is not None:
            break
        v = next((r for r in R if bilinear_value(X, r, u)), R[0])
        vu = bilinear_value(X, v, u)
        a = vu if vu else field.one
        u = vec_add(u, vec_scale(a, v))
    else:
        raise AssertionError("triangular repair did not terminate")
    rest = _triangular_rec(XR, wit)
    out = [u]
    for local in rest:
        out.append(_combine(local, R, field, m))
    return out


# ---------------------------------------------------------------------------
# the three-dimensional orthogonal positive pair

@dataclass
class PositivePair:
    v1: tuple
    v2: tuple
    case: str


def _check_pair(X, v1, v2):
    assert bilinear_value(X, v1, v1) > 0, "first vector not positive"
    assert bilinear_value(X, v2, v2) > 0, "second vector not positive"
    assert not bilinear_value(X, v1, v2), "pair not right-orthogonal"


def orthogonal_positive_pair_3d(X) -> PositivePair:
    """Two positive vectors v1, v2 with chi(v1, v2) = 0 in a 3x3 form.

    Requires a non-degenerate, non-symmetric form with at least one positive
    vector.  The construction distinguishes the shape of the form on the
    right complement of the first positive basis vector: a null second
    vector leads to the two explicit combinations of the zero-sum and
    nonzero-sum subcases; a negative one leads to a rational q found either
    directly or by a square search in an explicit interval.
    """
    field = X.field
    if X.rows != 3:
        raise ValueError("the pair construction is three-dimensional")
    if X.is_symmetric():
        raise SymmetricChi("the pair construction needs a non-symmetric form")
    if not X.det():
        raise ValueError("pair construction on a degenerate form")
    basis = basis_with_one_positive_vector(X)
    e1 = basis[0]

    right = right_complement_rows(X, e1)
    left = left_complement_rows(X, e1)
    both = subspace_intersection(Subspace(field, 3, right), Subspace(field, 3, left))
    assert both.dim >= 1
    e2 = both.basis[0]
    d2 = bilinear_value(X, e2, e2)
    if d2 > 0:
        pair = PositivePair(e1, e2, "immediate")
        _check_pair(X, pair.v1, pair.v2)
        return pair

    if not d2:
        # second vector is null; find a non-null direction in the right complement
        wit = nonalternating_witness(restrict_bilinear(X, right))
        assert wit is not None, "complement of the first vector turned alternating"
        e3 = _combine(wit, right, field, 3)
        t3 = bilinear_value(X, e3, e3)
        if t3 > 0:
            pair = PositivePair(e1, e3, "immediate")
            _check_pair(X, pair.v1, pair.v2)
            return pair
        gamma = bilinear_value(X, e1, e1)
        delta = -t3
        a = bilinear_value(X, e3, e1)
        b = bilinear_value(X, e3, e2)
        c = bilinear_value(X, e2, e3)
        assert b and c, "degenerate middle block"
        if not a:
            # chi(e3, e1) = 0 puts e3 in both complements; restart the
            # negative-second-vector route with it
            return _case_negative(X, e1, e3)
        if b + c:
            v1 = e1
            v2 = vec_add(vec_scale(2 * delta, e2), vec_scale(b + c, e3))
            pair = PositivePair(v1, v2, "case1-nonzero-sum")
        else:
            v1 = vec_add(vec_scale(a * b, e1), vec_scale(gamma * delta, e2))
            v2 = vec_add(vec_scale(delta, e1), vec_scale(a, e3))
            pair = PositivePair(v1, v2, "case1-zero-sum")
        _check_pair(X, pair.v1, pair.v2)
        return pair

    return _case_negative(X, e1, e2)


def _case_negative(X, e1, e2):
    """The route where the two-sided complement vector has negative square."""
    field = X.field
    gamma = bilinear_value(X, e1, e1)
    delta = -bilinear_value(X, e2, e2)
    assert delta > 0
    rows = [
        tuple(bilinear_value(X, e1, _unit(field, 3, j)) for j in range(3)),
        tuple(bilinear_value(X, e2, _unit(field, 3, j)) for j in range(3)),
    ]
    from .linalg import kernel

    plane_comp = kernel(Matrix(field, rows, cols=3))
    assert plane_comp.dim == 1
    e3 = plane_comp.basis[0]
    t = bilinear_value(X, e3, e3)
    assert t, "degenerate form: null vector right-orthogonal to everything"
    if t > 0:
        pair = PositivePair(e1, e3, "immediate")
        _check_pair(X, pair.v1, pair.v2)
        return pair
    eps = -t
    a = bilinear_value(X, e3, e1)
    b = bilinear_value(X, e3, e2)
    assert a or b, "diagonal form is symmetric"
    if b * b >= 4 * delta * eps:
        q0 = delta / gamma + 1
        case = "case2-large-b"
    else:
        hi = (1 + a * a / (4 * gamma * eps)) / (1 - b * b / (4 * delta * eps)) * (delta / gamma)
        q0 = rational_square_in_interval(delta / gamma, hi)
        case = "case2-square-search"
    q = q0 if a * b >= 0 else -q0
    v1 = vec_add(vec_scale(q, e1), e2)
    v2 = vec_add(vec_add(e1, vec_scale(gamma / delta * q, e2)),
                 vec_scale((a + gamma / delta * b * q) / (2 * eps), e3))
    pair = PositivePair(v1, v2, case)
    _check_pair(X, pair.v1, pair.v2)
    return pair


# ---------------------------------------------------------------------------
# perturbation lemmas

def perturb_orthogonal_pair(X, v1, v2, u):
    """A vector w with chi(v1 + a u, v2 + a w) = 0 for every scalar a.

    The three coefficient identities hold exactly: chi(v1, v2) = 0 is given,
    w is solved from chi(u, v2) + chi(v1, w) = 0 and chi(u, w) = 0.  When u
    is a multiple of v1, w = 0 works.
    """
    field = X.field
    m = X.rows
    assert not bilinear_value(X, v1, v2), "input pair is not orthogonal"
    if Matrix(field, [v1, u], cols=m).rank() <= 1:
        return tuple(field.zero for _ in range(m))
    rows = [
        tuple(bilinear_value(X, v1, _unit(field, m, j)) for j in range(m)),
        tuple(bilinear_value(X, u, _unit(field, m, j)) for j in range(m)),
    ]
    rhs = (-bilinear_value(X, u, v2), field.zero)
    w = solve(Matrix(field, rows, cols=m), rhs)
    assert w is not None, "perturbation system is always solvable for independent v1, u"
    return w


def perturb_positive_vector(X, v, u):
    """A threshold d > 0 with chi(v + a u, v + a u) > 0 whenever |a| < d.

    Uses d = min(1, chi(v, v) / (3 M)) with M the largest magnitude among
    chi(u, v), chi(v, u), chi(u, u) and 1: each of the three non-leading
    terms of the expansion stays below chi(v, v)/3 in absolute value.
    """
    cv = bilinear_value(X, v, v)
    assert cv > 0, "the vector to perturb must be positive"
    M = max(abs(bilinear_value(X, u, v)), abs(bilinear_value(X, v, u)),
            abs(bilinear_value(X, u, u)), Fraction(1))
    return min(Fraction(1), Fraction(cv) / (3 * M))


# ---------------------------------------------------------------------------
# the full positive triangular basis

def positive_basis(X):
    """Triangular basis with chi(e_i, e_i) > 0 throughout.

    Requires chi non-degenerate with det(chi) > 0, not symmetric, and at
    least one positive vector.
    """
    field = X.field
    if not field.is_ordered:
        raise TypeError("positive bases need an ordered field")
    m = X.rows
    if m == 0:
        return []
    if positive_vector_for(X) is None:
        raise NoPositiveVector("chi(u, u) <= 0 on the whole space")
    d = X.det()
    if not d:
        raise ValueError("positive basis of a degenerate form")
    if d < 0:
        raise NegativeDeterminant("det(chi) < 0 rules out a positive triangular basis")
    # dimension 1 is the trivial base of the induction and always symmetric;
    # from dimension 2 on, symmetric forms belong to the plain triangular
    # route (they only work out when positive definite)
    if m >= 2 and X.is_symmetric():
        raise SymmetricChi("a symmetric form has no positive triangular basis "
                           "unless it is positive definite")
    return _positive_basis_rec(X)


def _positive_basis_rec(X):
    field = X.field
    m = X.rows
    if m == 1:
        assert X[0, 0] > 0
        return [_unit(field, 1, 0)]
    if m == 2:
        rows = basis_with_one_positive_vector(X)
        assert bilinear_value(X, rows[1], rows[1]) > 0, "det > 0 forces the second square positive"
        return rows
    basis = basis_with_one_positive_vector(X)
    T = restrict_bilinear(X, basis)
    pick = None
    for r in range(1, m):
        for c in range(r):
            if T[r, c]:
                pick = (r, c)
                break
        if pick:
            break
    assert pick is not None, "triangular and symmetric would be diagonal"
    r, c = pick
    if c == 0:
        i, j = (1, r) if r >= 2 else (1, 2)
    else:
        i, j = c, r
    sub_rows = [basis[0], basis[i], basis[j]]
    X3 = restrict_bilinear(X, sub_rows)
    pair = orthogonal_positive_pair_3d(X3)
    v1 = _combine(pair.v1, sub_rows, field, m)
    v2 = _combine(pair.v2, sub_rows, field, m)

    units = [_unit(field, m, k) for k in range(m)]
    partners = [perturb_orthogonal_pair(X, v1, v2, e) for e in units]
    deltas = [perturb_positive_vector(X, v1, e) for e in units]
    deltas += [perturb_positive_vector(X, v2, w) for w in partners]
    a = min(deltas) / 2
    probes = [(v1, v2)]
    probes += [(vec_add(v1, vec_scale(a, e)), vec_add(v2, vec_scale(a, w)))
               for e, w in zip(units, partners)]
    for u, partner in probes:
        R = right_complement_rows(X, u)
        XR = restrict_bilinear(X, R)
        if XR.is_symmetric():
            continue
        assert bilinear_value(X, u, u) > 0
        assert bilinear_value(X, partner, partner) > 0
        assert not bilinear_value(X, u, partner)
        assert XR.det() > 0, "sign of the complement determinant must stay positive"
        rest = _positive_basis_rec(XR)
        out = [u]
        for local in rest:
            out.append(_combine(local, R, field, m))
        return out
    raise AssertionError("every probe had a symmetric complement; "
                         "impossible for a non-symmetric form in dimension >= 3")


# ---------------------------------------------------------------------------
# positive reflection length and factorization

def positive_reflection_length(f) -> int:
    """Minimal number of positive reflections multiplying to f."""
    if not is_positive_isometry(f):
        raise NegativeSpinor("the isometry has negative spinor norm")
    if f.is_identity():
        return 0
    space = f.space
    amb_pos, _, _ = space.inertia()
    if amb_pos == 0:
        raise ValueError("a negative definite space has no positive reflections")
    mov = moved_space(f)
    pos, neg, zero = space.inertia(mov)
    if neg == 0 and zero == 0:
        return mov.dim
    if not f.is_involution() and pos > 0:
        return mov.dim
    return mov.dim + 2


def _mov_vector(wd, coords):
    return _combine(coords, wd.basis.entries, wd.space.field, wd.space.dim)


def _positive_vector_outside_fix(f):
    """A vector with Q(v) > 0 not fixed by f; exists whenever f != id."""
    space = f.space
    fix = fixed_space(f)
    candidates = []
    for i in range(space.dim):
        candidates.append(space.standard_basis(i))
    for i in range(space.dim):
        for j in range(i + 1, space.dim):
            ei, ej = space.standard_basis(i), space.standard_basis(j)
            candidates.append(vec_add(ei, ej))
            candidates.append(tuple(a - b for a, b in zip(ei, ej)))
    for v in candidates:
        if space.field.is_positive(space.q_value(v)) and not fix.contains(v):
            return v
    diag, C = lagrange_diagonalize(space.gram)
    v0 = next(tuple(row) for d, row in zip(diag, C.entries) if d > 0)
    if not fix.contains(v0):
        return v0
    u = next(space.standard_basis(i) for i in range(space.dim)
             if not fix.contains(space.standard_basis(i)))
    a = perturb_positive_vector(space.gram, v0, u) / 2
    v = vec_add(v0, vec_scale(a, u))
    assert space.field.is_positive(space.q_value(v)) and not fix.contains(v)
    return v


def positive_factorization(f) -> Factorization:
    """A shortest factorization of f into positive reflections.

    Four routes: a positive definite moved space takes any triangular basis
    of the Wall form (its diagonal is Q, hence positive); a non-involution
    with a positive vector in its moved space takes a positive triangular
    basis; a negative semi-definite moved space first prepends one positive
    reflection through a vector outside Fix(f), which makes the Wall form of
    the product non-symmetric; an involution with indefinite moved space
    peels positive directions until the moved space is negative definite.
    """
    if not is_positive_isometry(f):
        raise NegativeSpinor("the isometry has negative spinor norm")
    space = f.space
    if f.is_identity():
        return Factorization(space, (), target=f)
    amb_pos, _, _ = space.inertia()
    if amb_pos == 0:
        raise ValueError("a negative definite space has no positive reflections")
    wd = wall_form(f)
    pos, neg, zero = space.inertia(wd.subspace)

    if neg == 0 and zero == 0:
        coords = triangular_basis(wd.chi)
        vectors = [_mov_vector(wd, crd) for crd in coords]
        fact = Factorization(space, vectors, target=f)
    elif not f.is_involution() and pos > 0:
        coords = positive_basis(wd.chi)
        vectors = [_mov_vector(wd, crd) for crd in coords]
        fact = Factorization(space, vectors, target=f)
    elif pos == 0:
        v = _positive_vector_outside_fix(f)
        g = space.reflection(v) @ f
        wg = wall_form(g)
        assert not wg.is_symmetric(), "a non-fixed direction forces non-symmetry"
        coords = positive_basis(wg.chi)
        vectors = [v] + [_mov_vector(wg, crd) for crd in coords]
        fact = Factorization(space, vectors, target=f)
    else:
        u = _mov_vector(wd, positive_vector_for(wd.chi))
        g = space.reflection(u) @ f
        inner = positive_factorization(g)
        fact = Factorization(space, (u,) + inner.vectors, target=f)
    assert fact.is_positive()
    assert len(fact) == positive_reflection_length(f)
    return fact


def positive_less_equal(g, f) -> bool:
    """The positive-reflection order: l+(g) + l+(g^-1 f) = l+(f)."""
    if g.space != f.space:
        raise ValueError("isometries of different spaces")
    if not is_positive_isometry(g) or not is_positive_isometry(f):
        raise NegativeSpinor("the positive order compares positive isometries")
    return (positive_reflection_length(g)
            + positive_reflection_length(g.inverse() @ f)
            == positive_reflection_length(f))
