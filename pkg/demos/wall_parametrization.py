"""Walk through the Wall parametrization of an orthogonal group.

Every isometry f of a non-degenerate quadratic space is pinned down by the
pair (Mov(f), chi_f): its moved space and a non-degenerate bilinear form on
it whose quadratic diagonal matches Q.  This script builds a rational space,
plays with reflections, and round-trips an isometry through its Wall data.
"""

from wallfact import (QQ, chi_right_complement, diagonal_space, fixed_space,
                      isometry_from_wall, moved_space, spinor_norm, wall_form)


def show(label, value):
    print("%-28s %s" % (label + ":", value))


def main():
    # a rational space of signature (2, 1)
    space = diagonal_space(QQ, [1, 1, -1])
    show("space", space)
    show("Q((3, 4, 0))", space.q_value((3, 4, 0)))
    show("Q((1, 0, 1))", space.q_value((1, 0, 1)))

    # reflections: scale-invariant involutions of determinant -1
    r = space.reflection((1, 2, 0))
    show("reflection r through (1,2,0)", r.matrix)
    show("r applied to its vector", r.apply((1, 2, 0)))
    show("det r", r.det())

    # compose two reflections and take the isometry apart again
    f = r @ space.reflection((0, 1, 2))
    show("f = product of two", f.matrix)
    show("Fix(f)", fixed_space(f))
    show("Mov(f)", moved_space(f))

    wd = wall_form(f)
    show("Wall form basis", wd.basis)
    show("Wall form matrix", wd.chi)
    print()
    print("chi determines f: rebuilding the isometry from (Mov, chi) ...")
    rebuilt = isometry_from_wall(space, wd.subspace, wd.chi)
    show("rebuilt == f", rebuilt == f)

    # the one-sided complements drive every factorization
    line = moved_space(r)
    show("right complement of Mov(r)", chi_right_complement(wd, line))

    # the spinor norm reads off the determinant of chi, up to squares
    show("spinor norm of f", spinor_norm(f).rep)
    show("spinor of r", spinor_norm(r).rep)
    show("Q((1,2,0)) (same class)", space.q_value((1, 2, 0)))


if __name__ == "__main__":
    main()
