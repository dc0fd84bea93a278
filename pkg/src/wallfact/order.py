"""The reflection-length partial order on the orthogonal group.

g <= f means the lengths add up: l(f) = l(g) + l(g^-1 f).  For a minimal f
the interval [id, f] is in order-preserving bijection with the admissible
subspaces of Mov(f); for a non-minimal f the open interval splits into
disjoint blocks indexed by the not-totally-singular overspaces of Mov(f) of
one dimension more.  Intervals are materialized over finite fields only;
over the rationals the module exposes just the comparison predicate.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .factor import is_minimal, reflection_length
from .field import PrimeField
from .linalg import Subspace, TooLarge, enumerate_subspaces, subspace_sum
from .quadspace import Isometry
from .wall import (enumerate_isometries_with_moved_space, isometry_from_wall,
                   moved_space, wall_form)

ADMISSIBLE_DIM_LIMIT = 6


def less_equal(g, f) -> bool:
    """Whether g precedes f: l(g) + l(g^-1 f) = l(f)."""
    if g.space != f.space:
        raise ValueError("isometries of different spaces")
    return reflection_length(g) + reflection_length(g.inverse() @ f) == reflection_length(f)


def admissible_subspaces(f, cap=None):
    """Subspaces U of Mov(f) corresponding to the interval below a minimal f.

    U qualifies when (i) U is zero or not totally singular, (ii) the right
    chi-complement of U is zero or not totally singular, and (iii) the Wall
    form of f restricts non-degenerately to U.
    """
    space = f.space
    if not isinstance(space.field, PrimeField):
        raise TypeError("admissible subspaces are enumerated over finite fields only")
    if not is_minimal(f):
        raise ValueError("admissible subspaces are defined for minimal isometries")
    wd = wall_form(f)
    if wd.dim > ADMISSIBLE_DIM_LIMIT:
        raise TooLarge("moved space of dimension %d exceeds the limit %d"
                       % (wd.dim, ADMISSIBLE_DIM_LIMIT))
    out = []
    kwargs = {} if cap is None else {"cap": cap}
    for U in enumerate_subspaces(wd.subspace, **kwargs):
        if U.dim and space.is_totally_singular(U):
            continue
        comp = wd.right_complement(U)
        if comp.dim and space.is_totally_singular(comp):
            continue
        if U.dim and not wd.restrict(U).det():
            continue
        out.append(U)
    return out


@dataclass
class IntervalPoset:
    """A materialized interval [id, f] with its order relation.

    elements[0] is the identity and elements[-1] is f.  rank is the
    reflection length.  blocks is the non-minimal partition of the open
    interval (None when f is minimal): a list of (overspace, element index
    list) pairs with no order relations across blocks.
    """

    isometry: Isometry
    elements: tuple
    leq: tuple          # leq[i][j] is True when elements[i] <= elements[j]
    rank: tuple
    blocks: list | None = None
    covers: tuple = dataclass_field(default=())

    def __post_init__(self):
        if not self.covers:
            self.covers = tuple(
                (i, j)
                for i in range(len(self.elements))
                for j in range(len(self.elements))
                if self.leq[i][j] and self.rank[j] == self.rank[i] + 1)

    def __len__(self):
        return len(self.elements)

    def index_of(self, g):
        for i, h in enumerate(self.elements):
            if h == g:
                return i
        return None

    def to_json_dict(self):
        return {
            "elements": [[[_scalar_str(x) for x in row] for row in g.matrix.entries]
                         for g in self.elements],
            "ranks": list(self.rank),
            "covers": [list(c) for c in self.covers],
        }

    def to_dot(self):
        lines = ["digraph interval {", "  rankdir=BT;"]
        for i, g in enumerate(self.elements):
            label = "id" if g.is_identity() else "g%d (rank %d)" % (i, self.rank[i])
            lines.append('  n%d [label="%s"];' % (i, label))
        for i, j in self.covers:
            lines.append("  n%d -> n%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines)


def _scalar_str(x):
    return str(x)


def _sort_key(g):
    return tuple(tuple(str(x) for x in row) for row in g.matrix.entries)


def _build_poset(f, elements, blocks=None):
    elements = sorted(elements, key=lambda g: (reflection_length(g), _sort_key(g)))
    ranks = tuple(reflection_length(g) for g in elements)
    leq_rows = tuple(tuple(less_equal(g, h) for h in elements) for g in elements)
    if blocks is not None:
        index = {g.key(): i for i, g in enumerate(elements)}
        blocks = [(W, sorted(index[g.key()] for g in members)) for W, members in blocks]
    return IntervalPoset(f, tuple(elements), leq_rows, ranks, blocks)


def codimension_one_overspaces(f):
    """Not-totally-singular W with Mov(f) inside W of codimension one."""
    space = f.space
    mov = moved_space(f)
    seen = set()
    out = []
    # enumerate lines of V/Mov(f) by scanning all ambient vectors
    for vec in _all_vectors(space):
        if mov.contains(vec):
            continue
        W = subspace_sum(mov, Subspace(space.field, space.dim, [vec]))
        if W in seen:
            continue
        seen.add(W)
        if not space.is_totally_singular(W):
            out.append(W)
    return out


def _all_vectors(space):
    import itertools

    scalars = list(space.field.elements())
    for combo in itertools.product(scalars, repeat=space.dim):
        if any(combo):
            yield combo


def interval(f, cap=None) -> IntervalPoset:
    """The interval [id, f], materialized over a finite field.

    Minimal f: the elements are the images of the admissible subspaces under
    the Wall parametrization.  Non-minimal f: {id, f} plus, for each
    codimension-one overspace W of Mov(f) that is not totally singular, the
    isometries with moved space inside W that sit strictly between id and f.
    """
    space = f.space
    if not isinstance(space.field, PrimeField):
        raise TypeError("intervals are materialized over finite fields only")
    if f.is_identity():
        return _build_poset(f, [f])
    wd = wall_form(f)
    if is_minimal(f):
        elements = [isometry_from_wall(space, U, wd.restrict(U))
                    for U in admissible_subspaces(f, cap=cap)]
        return _build_poset(f, elements)
    identity = Isometry.identity(space)
    mov = moved_space(f)
    blocks = []
    elements = {identity.key(): identity, f.key(): f}
    kwargs = {} if cap is None else {"cap": cap}
    for W in codimension_one_overspaces(f):
        members = []
        for U in enumerate_subspaces(W, **kwargs):
            if U.is_contained_in(mov):
                # strict predecessors of a non-minimal f never keep their
                # moved space inside Mov(f)
                continue
            for g in enumerate_isometries_with_moved_space(space, U):
                if g == f or g.is_identity():
                    continue
                if less_equal(g, f):
                    members.append(g)
                    elements[g.key()] = g
        if members:
            blocks.append((W, members))
    return _build_poset(f, list(elements.values()), blocks)


@dataclass
class GradedReport:
    """Outcome of the structural checks on a materialized interval."""

    checks: dict

    @property
    def ok(self):
        return all(self.checks.values())

    def failing(self):
        return [name for name, good in self.checks.items() if not good]


def interval_is_graded_check(poset) -> GradedReport:
    """Rank and duality checks.

    Minimal intervals: rank equals dim Mov on every element.  Non-minimal
    intervals: additionally g -> g^-1 f is an order-reversing bijection of
    each block onto itself, and no order relations cross blocks.
    """
    f = poset.isometry
    checks = {}
    n = len(poset.elements)

    checks["identity_rank_zero"] = poset.rank[0] == 0 and poset.elements[0].is_identity()
    checks["covers_increase_rank"] = all(poset.rank[j] == poset.rank[i] + 1
                                         for i, j in poset.covers)
    if poset.blocks is None:
        checks["rank_is_moved_dimension"] = all(
            poset.rank[i] == moved_space(g).dim for i, g in enumerate(poset.elements))
    else:
        index = {g.key(): i for i, g in enumerate(poset.elements)}
        block_of = {}
        for b, (_, members) in enumerate(poset.blocks):
            for i in members:
                block_of[i] = b
        ok = True
        for i in range(n):
            for j in range(n):
                if i == j or not poset.leq[i][j]:
                    continue
                bi, bj = block_of.get(i), block_of.get(j)
                if bi is not None and bj is not None and bi != bj:
                    ok = False
        checks["no_cross_block_relations"] = ok

        dual_ok = True
        for _, members in poset.blocks:
            member_set = set(members)
            image = {}
            for i in members:
                h = poset.elements[i].inverse() @ f
                k = index.get(h.key())
                if k is None or k not in member_set:
                    dual_ok = False
                    break
                image[i] = k
            else:
                if set(image.values()) != member_set:
                    dual_ok = False
                for i in members:
                    for j in members:
                        if poset.leq[i][j] != poset.leq[image[j]][image[i]]:
                            dual_ok = False
        checks["blocks_self_dual"] = dual_ok
    return GradedReport(checks)
