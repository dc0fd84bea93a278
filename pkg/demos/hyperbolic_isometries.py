"""Isometries of hyperbolic space through the hyperboloid model.

Over the rational Lorentz space of signature (n, 1), the positive isometries
are the ones fixing the upper hyperboloid sheet.  Every one of them factors
into exactly dim Mov(f) positive reflections, and the interval below f in
the positive order is the poset of subspaces of Mov(f) on which the Wall
form has positive determinant.  Elliptic and parabolic intervals simplify
further; for hyperbolic ones, whether the isomorphism type depends only on
dim Mov(f) is open, so this script ends with a small sampling harness
instead of a claim.
"""

import random

from wallfact import (QQ, Subspace, classify, hyperbolic_positive_factorization,
                      interval_subspace_test, lorentz_space, moved_space,
                      parabolic_interval_description)
from wallfact.hyperbolic import (elliptic_example, hyperbolic_example,
                                 parabolic_example)


def describe(space, f, name):
    kind = classify(f)
    fact = hyperbolic_positive_factorization(f)
    print("%s: %s, dim Mov = %d, positive length = %d"
          % (name, kind.value, moved_space(f).dim, len(fact)))


def interval_profile(space, f, rng, samples=200):
    """Fingerprint of the subspace poset below f: admissible counts per dim."""
    mov = moved_space(f)
    counts = {}
    seen = set()
    for _ in range(samples):
        k = rng.randint(0, mov.dim)
        rows = []
        for _ in range(k):
            cs = [rng.randint(-2, 2) for _ in range(mov.dim)]
            vec = [QQ.zero] * space.dim
            for c, b in zip(cs, mov.basis):
                vec = [x + QQ(c) * y for x, y in zip(vec, b)]
            rows.append(tuple(vec))
        U = Subspace(QQ, space.dim, rows)
        if U in seen:
            continue
        seen.add(U)
        key = (U.dim, interval_subspace_test(f, U))
        counts[key] = counts.get(key, 0) + 1
    return counts


def main():
    L = lorentz_space(3)
    describe(L, elliptic_example(L), "rotation about a point ")
    describe(L, hyperbolic_example(L), "boost along a geodesic")
    describe(L, parabolic_example(L), "parabolic around a cusp")

    print("\nparabolic interval description:")
    desc = parabolic_interval_description(parabolic_example(L))
    print("  fixed point at infinity:", tuple(str(x) for x in desc.fixed_line))
    print("  excluded: subspaces sandwiched between that line and",
          desc.hyperplane)

    print("\nopen question harness: hyperbolic intervals with equal dim Mov")
    rng = random.Random(1)
    boosts = [hyperbolic_example(L, "5/3", "4/3"),
              hyperbolic_example(L, "13/5", "12/5"),
              hyperbolic_example(L, "25/7", "24/7")]
    for i, f in enumerate(boosts):
        profile = interval_profile(L, f, rng)
        print("  boost %d: admissible-sample profile %s"
              % (i + 1, sorted(profile.items())))
    print("  (sampled fingerprints only; no claim about isomorphism types)")


if __name__ == "__main__":
    main()
