"""Interval posets below an isometry, in both shapes they come in.

Below a minimal isometry, the interval is in order-preserving bijection with
the admissible subspaces of the moved space.  Below a non-minimal one, the
open interval falls apart into disjoint self-dual blocks, one per
codimension-one overspace of Mov(f) that is not totally singular.
"""

from wallfact import (Isometry, PrimeField, Subspace, admissible_subspaces,
                      diagonal_space, interval, interval_is_graded_check,
                      isometry_from_wall)


def main():
    F3 = PrimeField(3)

    # an anisotropic plane: every subspace of Mov(f) is admissible
    plane = diagonal_space(F3, [1, 1])
    rotation = Isometry(plane, [[0, -1], [1, 0]])
    poset = interval(rotation)
    print("interval below a rotation of the anisotropic F_3 plane:")
    print("  elements:", len(poset), " ranks:", poset.rank)
    print("  admissible subspace dims:",
          [U.dim for U in admissible_subspaces(rotation)])
    print()
    print(poset.to_dot())

    # a non-minimal isometry: totally singular moved plane in the split form
    space = diagonal_space(F3, [1, 1, -1, -1])
    U = Subspace(F3, 4, [(1, 0, 1, 0), (0, 1, 0, 1)])
    f = isometry_from_wall(space, U, [[0, 1], [-1, 0]])
    poset = interval(f)
    print("\ninterval below a non-minimal isometry (split form, F_3):")
    print("  elements:", len(poset))
    print("  blocks:", [(W.dim, len(members)) for W, members in poset.blocks])
    report = interval_is_graded_check(poset)
    print("  structural checks:", "all pass" if report.ok else report.failing())


if __name__ == "__main__":
    main()
