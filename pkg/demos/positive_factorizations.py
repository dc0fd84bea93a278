"""Factoring isometries into reflections through positive vectors.

Over an ordered field where squares are dense in the positive cone, an
isometry is a product of positive reflections exactly when its spinor norm
is positive.  The minimal count is dim Mov(f) when the moved space is
positive definite, or when f is not an involution and the moved space holds
at least one positive vector; in every other positive case two extra
reflections are unavoidable.
"""

from fractions import Fraction

from wallfact import (Isometry, QQ, Subspace, diagonal_space,
                      is_positive_isometry, isometry_from_wall, moved_space,
                      positive_factorization, positive_reflection_length,
                      reflection_length, spinor_norm)


def report(space, name, f):
    print(name)
    print("  spinor norm:", spinor_norm(f).rep,
          "(positive)" if is_positive_isometry(f) else "(negative)")
    print("  dim Mov =", moved_space(f).dim,
          " plain length =", reflection_length(f),
          " positive length =", positive_reflection_length(f))
    fact = positive_factorization(f)
    for v in fact.vectors:
        print("    reflect through", tuple(str(x) for x in v),
              " Q =", space.q_value(v))
    print("  product reconstructs f:", fact.product() == f)
    print()


def main():
    # a rational boost: not an involution, moved plane indefinite
    minkowski = diagonal_space(QQ, [1, -1])
    boost = Isometry(minkowski, [[Fraction(5, 3), Fraction(4, 3)],
                                 [Fraction(4, 3), Fraction(5, 3)]])
    report(minkowski, "boost on the rational Minkowski plane", boost)

    # the stepping stone: an involution whose moved plane is negative
    # definite is positive, yet needs dim Mov + 2 positive reflections
    space = diagonal_space(QQ, [1, 1, -1, -1])
    W = Subspace(QQ, 4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    involution = isometry_from_wall(space, W, [[Fraction(-1), 0],
                                               [0, Fraction(-1)]])
    report(space, "involution with negative definite moved plane", involution)

    # any product of positive reflections stays at the minimum
    f = space.reflection((1, 0, 0, 0)) @ space.reflection((1, 1, 1, 0)) \
        @ space.reflection((0, 1, 0, 0))
    report(space, "product of three positive reflections", f)


if __name__ == "__main__":
    main()
