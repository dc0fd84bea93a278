import pytest

from wallfact import (Matrix, PrimeField, QQ, Subspace, admissible_subspaces,
                      diagonal_space, interval, interval_is_graded_check,
                      is_minimal, isometry_from_wall, less_equal,
                      moved_space, reflection_length, wall_form)
from wallfact.oracle import brute_force_interval
from wallfact.order import codimension_one_overspaces


@pytest.fixture(scope="module")
def example_3x3():
    """f with Wall matrix [[1,0,0],[0,0,1],[0,-1,0]] over F_3, plus its split-off
    reflection f1 through the first basis vector."""
    F3 = PrimeField(3)
    space = diagonal_space(F3, [1, 1, 1, -1, -1])
    basis = [(1, 0, 0, 0, 0), (0, 1, 0, 1, 0), (0, 0, 1, 0, 1)]
    f = isometry_from_wall(space, Matrix(F3, basis),
                           [[1, 0, 0], [0, 0, 1], [0, -1, 0]])
    f1 = isometry_from_wall(space, Matrix(F3, basis[:1]), [[1]])
    return space, basis, f, f1


@pytest.fixture(scope="module")
def example_4x4():
    """f with Wall matrix [[1,0,0,0],[0,0,1,0],[0,-1,0,0],[0,0,0,1]] over F_3."""
    F3 = PrimeField(3)
    space = diagonal_space(F3, [1, 1, 1, 1, -1, -1])
    basis = [(1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 1, 0),
             (0, 0, 0, 1, 0, 1), (0, 1, 0, 0, 0, 0)]
    chi = [[1, 0, 0, 0], [0, 0, 1, 0], [0, -1, 0, 0], [0, 0, 0, 1]]
    f = isometry_from_wall(space, Matrix(F3, basis), chi)
    g = isometry_from_wall(space, Matrix(F3, basis[:1]), [[1]])
    gp = isometry_from_wall(space, Matrix(F3, basis[:3]),
                            [[1, 0, 0], [0, 0, 1], [0, -1, 0]])
    return space, f, g, gp


@pytest.fixture(scope="module")
def nonminimal_f3(census_f3_d4):
    space = census_f3_d4.space
    U = Subspace(space.field, 4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    f = isometry_from_wall(space, U, [[0, 1], [-1, 0]])
    return space, f


class TestLessEqual:
    def test_identity_below_everything(self, census_f3_d3, rng):
        identity = census_f3_d3.identity()
        for f in rng.sample(list(census_f3_d3.elements), 15):
            assert less_equal(identity, f)
            assert less_equal(f, f)

    def test_example_f1_not_below_f(self, example_3x3):
        space, basis, f, f1 = example_3x3
        assert moved_space(f1).is_contained_in(moved_space(f))
        assert not less_equal(f1, f)

    def test_reflections_below_nonminimal(self, nonminimal_f3):
        from wallfact.oracle import reflection_generators
        space, f = nonminimal_f3
        for _, r in reflection_generators(space):
            assert less_equal(r, f)
            rf = r @ f
            assert less_equal(rf, f)
            assert reflection_length(rf) == reflection_length(f) - 1

    def test_agrees_with_census_lengths(self, census_f3_d3, rng):
        census = census_f3_d3
        for _ in range(30):
            g = rng.choice(census.elements)
            f = rng.choice(census.elements)
            by_bfs = (census.length_of(g)
                      + census.length_of(g.inverse() @ f) == census.length_of(f))
            assert less_equal(g, f) == by_bfs


class TestAdmissibleSubspaces:
    def test_reflection_has_two(self, f3):
        space = diagonal_space(f3, [1, 1])
        r = space.reflection((1, 0))
        subs = admissible_subspaces(r)
        assert sorted(U.dim for U in subs) == [0, 1]

    def test_example_excludes_unit_line_by_complement_condition(self, example_3x3):
        space, basis, f, f1 = example_3x3
        line = Subspace(space.field, 5, [basis[0]])
        subs = admissible_subspaces(f)
        assert line not in subs
        # conditions (i) and (iii) hold for the line; only (ii) fails
        wd = wall_form(f)
        assert not space.is_totally_singular(line)
        assert wd.restrict(line).det()
        assert space.is_totally_singular(wd.right_complement(line))

    def test_anisotropic_space_admits_everything(self, f3):
        # diag(1,1) over F_3 has no singular vectors
        space = diagonal_space(f3, [1, 1])
        from wallfact import Isometry
        f = Isometry(space, [[-1, 0], [0, -1]])
        subs = admissible_subspaces(f)
        from wallfact.linalg import count_subspaces
        assert len(subs) == count_subspaces(2, 3)

    def test_bijection_against_census(self, census_f3_d3, rng):
        census = census_f3_d3
        space = census.space
        for f in rng.sample(list(census.elements), 10):
            if not is_minimal(f):
                continue
            wd = wall_form(f)
            image_keys = {isometry_from_wall(space, U, wd.restrict(U)).key()
                          for U in admissible_subspaces(f)}
            defn_keys = {g.key() for g in brute_force_interval(census, f)}
            assert image_keys == defn_keys


class TestMovMonotonicity:
    def test_order_implies_inclusion(self, census_f3_d3, rng):
        census = census_f3_d3
        for _ in range(40):
            g = rng.choice(census.elements)
            f = rng.choice(census.elements)
            if less_equal(g, f):
                assert moved_space(g).is_contained_in(moved_space(f))

    def test_inclusion_does_not_imply_order(self, example_4x4):
        space, f, g, gp = example_4x4
        assert less_equal(g, f) and less_equal(gp, f)
        assert moved_space(g).is_contained_in(moved_space(gp))
        assert not less_equal(g, gp)

    def test_anisotropic_inclusion_is_order(self, census_f3_d2, rng):
        census = census_f3_d2
        # no singular vectors: within any interval [id, f], inclusion of
        # moved spaces is exactly the order, so the interval map is a poset
        # isomorphism onto all subspaces of Mov(f)
        for f in census.elements:
            members = brute_force_interval(census, f)
            for g in members:
                for h in members:
                    incl = moved_space(g).is_contained_in(moved_space(h))
                    assert less_equal(g, h) == incl

    def test_chi_restricts_below_minimal(self, census_f3_d3, rng):
        census = census_f3_d3
        for _ in range(25):
            f = rng.choice(census.elements)
            g = rng.choice(census.elements)
            if not is_minimal(f) or not less_equal(g, f):
                continue
            wf, wg = wall_form(f), wall_form(g)
            assert wg.chi == wf.restrict(moved_space(g))


class TestNonMinimalStructure:
    def test_every_proper_predecessor_is_minimal(self, nonminimal_f3, census_f3_d4, rng):
        space, f = nonminimal_f3
        census = census_f3_d4
        below = [g for g in brute_force_interval(census, f) if g != f]
        assert below, "the open interval is non-empty"
        for g in below:
            assert is_minimal(g)

    def test_nonminimal_is_maximal(self, nonminimal_f3, census_f3_d4):
        space, f = nonminimal_f3
        for h in census_f3_d4.elements:
            if h != f and less_equal(f, h):
                pytest.fail("non-minimal isometry below %r" % (h,))

    def test_overspace_family(self, nonminimal_f3):
        space, f = nonminimal_f3
        mov = moved_space(f)
        family = codimension_one_overspaces(f)
        assert family
        for W in family:
            assert mov.is_contained_in(W)
            assert W.dim == mov.dim + 1
            assert not space.is_totally_singular(W)


class TestInterval:
    def test_identity_interval(self, f3):
        space = diagonal_space(f3, [1, 1])
        poset = interval(space.identity_isometry())
        assert len(poset) == 1

    def test_reflection_interval_is_chain(self, f3):
        space = diagonal_space(f3, [1, 1])
        poset = interval(space.reflection((1, 0)))
        assert len(poset) == 2
        assert poset.covers == ((0, 1),)

    def test_rotation_interval_is_diamond(self, census_f3_d2):
        space = census_f3_d2.space
        from wallfact import Isometry
        f = Isometry(space, [[0, -1], [1, 0]])
        poset = interval(f)
        assert len(poset) == 6           # id, four reflections, f
        assert [poset.rank.count(k) for k in range(3)] == [1, 4, 1]
        report = interval_is_graded_check(poset)
        assert report.ok, report.failing()

    def test_minimal_interval_matches_census(self, census_f3_d3, rng):
        census = census_f3_d3
        for f in rng.sample(list(census.elements), 6):
            if not is_minimal(f):
                continue
            poset = interval(f)
            expected = {g.key() for g in brute_force_interval(census, f)}
            assert {g.key() for g in poset.elements} == expected

    def test_nonminimal_interval_matches_census(self, nonminimal_f3, census_f3_d4):
        space, f = nonminimal_f3
        poset = interval(f)
        expected = {g.key() for g in brute_force_interval(census_f3_d4, f)}
        assert {g.key() for g in poset.elements} == expected
        assert poset.blocks
        report = interval_is_graded_check(poset)
        assert report.ok, report.failing()

    def test_nonminimal_blocks_partition_open_interval(self, nonminimal_f3):
        space, f = nonminimal_f3
        poset = interval(f)
        covered = set()
        for _, members in poset.blocks:
            for i in members:
                assert i not in covered
                covered.add(i)
        boundary = {0, len(poset) - 1}
        assert covered | boundary == set(range(len(poset)))

    def test_rationals_rejected(self):
        space = diagonal_space(QQ, [1, 1])
        with pytest.raises(TypeError):
            interval(space.identity_isometry())


class TestExports:
    def test_dot_and_json(self, f3):
        space = diagonal_space(f3, [1, 1])
        poset = interval(space.reflection((1, 0)))
        dot = poset.to_dot()
        assert dot.startswith("digraph") and "->" in dot
        data = poset.to_json_dict()
        assert data["covers"] == [[0, 1]]
        assert len(data["elements"]) == 2
