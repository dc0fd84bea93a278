import random

import pytest

from wallfact import (ChiQMismatch, DegenerateChi, Matrix, PrimeField, QQ,
                      Subspace, check_wall_properties, chi_left_complement,
                      chi_right_complement, diagonal_space, fixed_space,
                      isometry_from_wall, moved_space, spinor_norm, wall_form)
from wallfact.wall import enumerate_isometries_with_moved_space
from tests.conftest import random_isometry, random_nonsingular_vector


@pytest.fixture(scope="module")
def embedded_example():
    """The 3x3 Wall matrix [[1,0,0],[0,0,1],[0,-1,0]] realized over F_3.

    The moved space needs a unit vector plus a two-dimensional radical of
    the restricted polar form, which takes five ambient dimensions:
    diag(1,1,1,-1,-1) with basis (e1, e2+e4, e3+e5).
    """
    F3 = PrimeField(3)
    space = diagonal_space(F3, [1, 1, 1, -1, -1])
    basis = [(1, 0, 0, 0, 0), (0, 1, 0, 1, 0), (0, 0, 1, 0, 1)]
    chi = [[1, 0, 0], [0, 0, 1], [0, -1, 0]]
    f = isometry_from_wall(space, Matrix(F3, basis), chi)
    return space, basis, chi, f


class TestFixMov:
    def test_identity(self):
        space = diagonal_space(QQ, [1, 1])
        f = space.identity_isometry()
        assert fixed_space(f) == Subspace.full(QQ, 2)
        assert moved_space(f) == Subspace.zero(QQ, 2)

    def test_reflection(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        v = random_nonsingular_vector(space, rng)
        r = space.reflection(v)
        assert moved_space(r) == Subspace(QQ, 3, [v])
        assert fixed_space(r) == space.orthogonal_complement(Subspace(QQ, 3, [v]))

    def test_f3_rotation_moves_everything(self, f3):
        space = diagonal_space(f3, [1, 1])
        from wallfact import Isometry
        f = Isometry(space, [[0, -1], [1, 0]])
        # det(I - F) = 2 != 0 mod 3, computed directly
        D = Matrix.identity(f3, 2) - f.matrix
        assert D.det() == 2
        assert moved_space(f) == Subspace.full(f3, 2)

    def test_fix_is_orthogonal_of_mov(self, rng):
        space = diagonal_space(QQ, [1, 2, -1, 1])
        for _ in range(15):
            f = random_isometry(space, rng)
            assert fixed_space(f) == space.orthogonal_complement(moved_space(f))


class TestWallForm:
    def test_reflection_chi(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        v = random_nonsingular_vector(space, rng)
        wd = wall_form(space.reflection(v))
        assert wd.dim == 1
        u = wd.basis.row(0)
        assert wd.chi[0, 0] == space.q_value(u)

    def test_identity_chi_is_empty(self):
        space = diagonal_space(QQ, [1, 1])
        wd = wall_form(space.identity_isometry())
        assert wd.dim == 0 and wd.chi.rows == 0

    def test_involution_chi_symmetric_and_half_polar(self):
        space = diagonal_space(QQ, [1, 1, -1, -1])
        f = space.reflection((0, 0, 1, 0)) @ space.reflection((0, 0, 0, 1))
        assert f.is_involution()
        wd = wall_form(f)
        assert wd.is_symmetric()
        assert wd.chi.scale(2) == space.polar_gram_on(wd.basis.entries)

    def test_diagonal_is_q_and_symmetrization_is_polar(self, rng):
        space = diagonal_space(QQ, [1, 2, -3])
        for _ in range(15):
            f = random_isometry(space, rng)
            wd = wall_form(f)
            for i in range(wd.dim):
                assert wd.chi[i, i] == space.q_value(wd.basis.row(i))
            assert wd.chi + wd.chi.transpose() == space.polar_gram_on(wd.basis.entries)
            assert wd.det()  # non-degenerate

    def test_well_defined_under_witness_choice(self, rng):
        # chi(u, v) = beta(w, v) must not depend on which w solves u = w - f(w)
        space = diagonal_space(QQ, [1, 1, -1])
        for _ in range(10):
            f = random_isometry(space, rng)
            wd = wall_form(f)
            D = Matrix.identity(QQ, 3) - f.matrix
            from wallfact import kernel, solve
            fix = kernel(D)
            for i, u in enumerate(wd.basis.entries):
                w = solve(D, u)
                for extra in fix.basis:
                    w2 = tuple(a + b for a, b in zip(w, extra))
                    for j, v in enumerate(wd.basis.entries):
                        assert space.polar(w2, v) == wd.chi[i, j]


class TestIsometryFromWall:
    def test_empty_gives_identity(self):
        space = diagonal_space(QQ, [1, 1])
        f = isometry_from_wall(space, Subspace.zero(QQ, 2), Matrix.zeros(QQ, 0, 0))
        assert f.is_identity()

    def test_line_gives_reflection(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        for _ in range(10):
            v = random_nonsingular_vector(space, rng)
            f = isometry_from_wall(space, Matrix(QQ, [v]), [[space.q_value(v)]])
            assert f == space.reflection(v)

    def test_round_trip_random_rational(self, rng):
        space = diagonal_space(QQ, [1, 1, -1, 2])
        for _ in range(20):
            f = random_isometry(space, rng)
            wd = wall_form(f)
            assert isometry_from_wall(space, wd.subspace, wd.chi) == f

    def test_round_trip_full_group_f3(self, census_f3_d2):
        for f in census_f3_d2.elements:
            wd = wall_form(f)
            assert isometry_from_wall(f.space, wd.subspace, wd.chi) == f

    def test_degenerate_chi_rejected(self):
        space = diagonal_space(QQ, [1, 1])
        with pytest.raises(DegenerateChi):
            isometry_from_wall(space, Matrix(QQ, [(1, 0)]), [[0]])

    def test_chi_q_mismatch_rejected(self):
        space = diagonal_space(QQ, [1, 1])
        with pytest.raises(ChiQMismatch):
            isometry_from_wall(space, Matrix(QQ, [(1, 0)]), [[5]])
        # symmetrization failure on a 2x2 candidate
        with pytest.raises(ChiQMismatch):
            isometry_from_wall(space, Matrix.identity(QQ, 2), [[1, 3], [1, 1]])

    def test_example_matrix_realized(self, embedded_example):
        space, basis, chi, f = embedded_example
        wd = wall_form(f)
        assert wd.subspace == Subspace(space.field, 5, basis)
        for i, u in enumerate(basis):
            for j, v in enumerate(basis):
                assert wd.value(u, v) == space.field(chi[i][j])


class TestComplements:
    def test_trivial_cases(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        f = random_isometry(space, rng)
        wd = wall_form(f)
        zero = Subspace.zero(QQ, 3)
        assert chi_right_complement(wd, zero) == wd.subspace
        assert chi_right_complement(wd, wd.subspace).dim == 0
        assert chi_left_complement(wd, zero) == wd.subspace

    def test_example_right_complement(self, embedded_example):
        space, basis, chi, f = embedded_example
        wd = wall_form(f)
        U1 = Subspace(space.field, 5, [basis[0]])
        assert chi_right_complement(wd, U1) == Subspace(space.field, 5, basis[1:])

    def test_dimensions_and_double_complement(self, rng):
        space = diagonal_space(QQ, [1, 1, -1, 2])
        for _ in range(10):
            f = random_isometry(space, rng, reflections=3)
            wd = wall_form(f)
            for U in _some_subspaces(wd, rng):
                right = chi_right_complement(wd, U)
                assert U.dim + right.dim == wd.dim
                assert chi_left_complement(wd, right) == U

    def test_left_right_exchange_via_f(self, rng):
        # the left complement is the f-image of the right complement
        space = diagonal_space(QQ, [1, 1, -1])
        for _ in range(10):
            f = random_isometry(space, rng)
            wd = wall_form(f)
            for U in _some_subspaces(wd, rng):
                right = chi_right_complement(wd, U)
                mapped = Subspace(QQ, 3, [f.apply(v) for v in right.basis])
                assert chi_left_complement(wd, U) == mapped


def _some_subspaces(wd, rng):
    out = []
    if wd.dim == 0:
        return out
    for _ in range(3):
        k = rng.randint(0, wd.dim)
        rows = []
        for _ in range(k):
            coords = [rng.randint(-2, 2) for _ in range(wd.dim)]
            vec = [wd.space.field.zero] * wd.space.dim
            for c, b in zip(coords, wd.basis.entries):
                vec = [x + wd.space.field(c) * y for x, y in zip(vec, b)]
            rows.append(tuple(vec))
        U = Subspace(wd.space.field, wd.space.dim, rows)
        if wd.restrict(U).det():
            out.append(U)
    return out


class TestSpinorNorm:
    def test_identity_is_one(self):
        space = diagonal_space(QQ, [1, 1])
        assert spinor_norm(space.identity_isometry()).is_one()

    def test_reflection_class_is_q_value(self):
        space = diagonal_space(QQ, [1, 2])
        r = space.reflection((1, 1))          # Q = 3
        assert spinor_norm(r) == QQ.square_class(3)
        space2 = diagonal_space(QQ, [-3, 1])
        assert spinor_norm(space2.reflection((1, 0))) == QQ.square_class(-3)

    def test_two_reflections_multiply(self):
        space = diagonal_space(QQ, [1, 2])
        f = space.reflection((0, 1)) @ space.reflection((1, 1))   # Q = 2 and 3
        # independent route: the determinant of the full Wall form
        wd = wall_form(f)
        assert QQ.square_class(wd.det()) == QQ.square_class(6)
        assert spinor_norm(f) == QQ.square_class(6)

    def test_homomorphism_on_random_products(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        for _ in range(20):
            f = random_isometry(space, rng)
            g = random_isometry(space, rng)
            assert spinor_norm(f @ g) == spinor_norm(f) * spinor_norm(g)

    def test_basis_independence(self, rng):
        # det of chi in any basis of Mov(f) lands in the same square class
        space = diagonal_space(QQ, [1, 1, -1])
        f = random_isometry(space, rng, reflections=3)
        wd = wall_form(f)
        if wd.dim:
            T = Matrix(QQ, [[rng.randint(-3, 3) or 1 if i == j else rng.randint(-2, 2)
                             for j in range(wd.dim)] for i in range(wd.dim)])
            if T.det():
                other = T @ wd.chi @ T.transpose()
                assert QQ.square_class(other.det()) == spinor_norm(f)


class TestWallProperties:
    def test_random_rational(self, rng):
        space = diagonal_space(QQ, [1, 1, -1])
        for _ in range(10):
            f = random_isometry(space, rng)
            g = random_isometry(space, rng)
            report = check_wall_properties(f, g)
            assert report.ok, report.failing()

    def test_random_f3(self, rng, census_f3_d3):
        elements = census_f3_d3.elements
        for _ in range(15):
            f = rng.choice(elements)
            g = rng.choice(elements)
            report = check_wall_properties(f, g)
            assert report.ok, report.failing()


class TestMovedSpaceEnumeration:
    def test_counts_on_lines(self, f3):
        space = diagonal_space(f3, [1, 1])
        # a non-singular line supports exactly one isometry (its reflection)
        line = Subspace(f3, 2, [(1, 0)])
        got = list(enumerate_isometries_with_moved_space(space, line))
        assert got == [space.reflection((1, 0))]

    def test_plane_count_matches_census(self, f3, census_f3_d2):
        space = census_f3_d2.space
        full = Subspace.full(f3, 2)
        got = list(enumerate_isometries_with_moved_space(space, full))
        with_full_mov = [f for f in census_f3_d2.elements
                         if moved_space(f) == full]
        assert len(got) == len(with_full_mov) == 3
        assert {f.key() for f in got} == {f.key() for f in with_full_mov}
