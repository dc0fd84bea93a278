"""Reflection lengths across a whole finite orthogonal group.

The minimal number of reflections multiplying to f is dim Mov(f), except
when Mov(f) is totally singular, where two more are needed.  The split form
x1^2 + x2^2 - x3^2 - x4^2 over F_3 has totally singular planes, so both
branches of the formula show up.  A breadth-first search over the reflection
generators supplies the ground truth.
"""

from collections import Counter

from wallfact import (PrimeField, diagonal_space, enumerate_group,
                      minimal_factorization, moved_space, reflection_length)


def main():
    space = diagonal_space(PrimeField(3), [1, 1, -1, -1])
    census = enumerate_group(space)
    print("group order:", len(census))
    print("reflections:", len(census.reflections))

    by_length = Counter(census.length_of(f) for f in census.elements)
    print("\nword lengths from BFS:")
    for length in sorted(by_length):
        print("  length %d: %5d elements" % (length, by_length[length]))

    mismatches = 0
    exceptional = []
    for f in census.elements:
        structural = reflection_length(f)
        if structural != census.length_of(f):
            mismatches += 1
        mov = moved_space(f)
        if not f.is_identity() and space.is_totally_singular(mov):
            exceptional.append(f)
    print("\nformula vs BFS mismatches:", mismatches)
    print("elements with totally singular moved space:", len(exceptional))

    f = exceptional[0]
    print("\none such element:")
    print(f.matrix)
    print("dim Mov(f) =", moved_space(f).dim, " but length =", reflection_length(f))
    fact = minimal_factorization(f)
    print("its minimal factorization uses", len(fact), "reflections:")
    for v in fact.vectors:
        print("  reflect through", tuple(int(str(x)) for x in v))
    print("product reconstructs f:", fact.product() == f)


if __name__ == "__main__":
    main()
