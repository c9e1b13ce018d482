"""
Finite permutation groups stored by full element enumeration.

Elements are kept in lexicographic order of their image sequences, so coset
representatives and every table built from a group are reproducible.
"""

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..config.yaml_loader import Budgets, get_budgets
from ..utils.errors import SizeLimitError, ValidationError
from ..utils.logger import get_logger
from .permutation import DisjointSet, Permutation, SetPartition

log = get_logger(__name__)


class PermutationGroup:
    """An enumerated finite permutation group."""

    def __init__(self, degree: int, elements: Iterable[Permutation],
                 generators: Optional[Sequence[Permutation]] = None):
        self.degree = degree
        self.elements: Tuple[Permutation, ...] = tuple(sorted(set(elements)))
        self._index: Dict[Permutation, int] = {g: i for i, g in enumerate(self.elements)}
        self.generators: Tuple[Permutation, ...] = (
            tuple(generators) if generators is not None else _greedy_generators(self.elements)
        )

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self._index

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, PermutationGroup) and self.degree == other.degree
                and self.elements == other.elements)

    def __hash__(self) -> int:
        return hash((self.degree, self.elements))

    def index(self, perm: Permutation) -> int:
        return self._index[perm]

    def is_subgroup_of(self, other: "PermutationGroup") -> bool:
        return self.degree == other.degree and all(g in other for g in self.elements)

    def is_symmetric(self) -> bool:
        """True if this is the full symmetric group of its degree."""
        return self.order == factorial(self.degree)

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators) or "()"
        return f"PermutationGroup(degree={self.degree}, order={self.order}, gens=[{gens}])"


def _greedy_generators(elements: Sequence[Permutation]) -> Tuple[Permutation, ...]:
    """Pick elements in order, keeping those outside the closure of the previous picks."""
    gens: List[Permutation] = []
    reached: set = set()
    for g in elements:
        if g.is_identity() or g in reached:
            continue
        gens.append(g)
        reached = set(_closure(g.degree, gens, cap=len(elements)))
    return tuple(gens)


def _closure(degree: int, generators: Sequence[Permutation], cap: int) -> List[Permutation]:
    identity = Permutation.identity(degree)
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for gen in generators:
            nxt = gen * current
            if nxt not in seen:
                seen.add(nxt)
                if len(seen) > cap:
                    raise SizeLimitError("group_order_cap", cap, hint="enumerate smaller groups")
                queue.append(nxt)
    return list(seen)


def generate_group(degree: int, generators: Sequence[Permutation],
                   budgets: Optional[Budgets] = None) -> PermutationGroup:
    """
    Enumerate the group generated by some permutations.

    Args:
        degree: Number of points
        generators: Generating permutations, each of the given degree
        budgets: Limits; ``group_order_cap`` bounds the closure

    Returns:
        The closure of the generators

    Raises:
        ValidationError: If a generator has the wrong degree
        SizeLimitError: If the closure exceeds ``group_order_cap``
    """
    budgets = budgets or get_budgets()
    gens = []
    for g in generators:
        if not isinstance(g, Permutation):
            g = Permutation(tuple(g))
        if g.degree != degree:
            raise ValidationError(f"generator {g} has degree {g.degree}, expected {degree}")
        gens.append(g)
    elements = _closure(degree, gens, budgets.group_order_cap)
    group = PermutationGroup(degree, elements, tuple(gens))
    log.debug(f"generated group of degree {degree} and order {group.order}")
    return group


def symmetric_group(degree: int, budgets: Optional[Budgets] = None) -> PermutationGroup:
    gens = []
    if degree >= 2:
        gens.append(Permutation.from_cycles([(1, 2)], degree))
    if degree >= 3:
        gens.append(Permutation.from_cycles([tuple(range(1, degree + 1))], degree))
    return generate_group(degree, gens, budgets)


def cyclic_group(degree: int, budgets: Optional[Budgets] = None) -> PermutationGroup:
    gens = [Permutation.from_cycles([tuple(range(1, degree + 1))], degree)] if degree >= 2 else []
    return generate_group(degree, gens, budgets)


def dihedral_group(degree: int, budgets: Optional[Budgets] = None) -> PermutationGroup:
    """Symmetries of the regular ``degree``-gon acting on its vertices."""
    gens = []
    if degree >= 2:
        gens.append(Permutation.from_cycles([tuple(range(1, degree + 1))], degree))
        gens.append(Permutation(tuple(degree - 1 - i for i in range(degree))))
    return generate_group(degree, gens, budgets)


def alternating_group(degree: int, budgets: Optional[Budgets] = None) -> PermutationGroup:
    gens = [Permutation.from_cycles([(1, 2, k)], degree) for k in range(3, degree + 1)]
    return generate_group(degree, gens, budgets)


def trivial_group(degree: int) -> PermutationGroup:
    return PermutationGroup(degree, [Permutation.identity(degree)], ())


def subgroup(group: PermutationGroup, elements: Iterable[Permutation]) -> PermutationGroup:
    """Wrap a subset already known to be a subgroup."""
    return PermutationGroup(group.degree, elements)


def orbits(group: PermutationGroup) -> SetPartition:
    """The orbits of the group on its points."""
    finder = DisjointSet(group.degree)
    for gen in group.generators:
        for point in range(group.degree):
            finder.union(point, gen(point))
    return finder.partition()


def block_stabilizer(group: PermutationGroup, partition: SetPartition) -> PermutationGroup:
    """Elements mapping every point into its own block."""
    if partition.degree != group.degree:
        raise ValidationError(f"partition of {partition.degree} points for a group of degree {group.degree}")
    block_of = partition.block_of
    kept = [g for g in group.elements
            if all(block_of[g(m)] == block_of[m] for m in range(group.degree))]
    return subgroup(group, kept)


def _require_subgroup(group: PermutationGroup, sub: PermutationGroup) -> None:
    if not sub.is_subgroup_of(group):
        raise ValidationError(f"subgroup of order {sub.order} is not contained in the group")


def normalizer(group: PermutationGroup, sub: PermutationGroup) -> PermutationGroup:
    """``{g : g sub g^-1 = sub}``."""
    _require_subgroup(group, sub)
    kept = [g for g in group.elements if _normalizes(g, sub)]
    return subgroup(group, kept)


def _normalizes(g: Permutation, sub: PermutationGroup) -> bool:
    g_inv = g.inverse()
    return all(g * h * g_inv in sub for h in sub.generators)


def conjugate_subgroup(group: PermutationGroup, sub: PermutationGroup,
                       g: Permutation) -> PermutationGroup:
    """``g^-1 sub g``."""
    _require_subgroup(group, sub)
    g_inv = g.inverse()
    return subgroup(group, (g_inv * h * g for h in sub.elements))


def cosets(group: PermutationGroup, sub: PermutationGroup, side: str = "left") -> List[Permutation]:
    """
    Lexicographically least representative of each coset.

    Args:
        group: Ambient group
        sub: Subgroup
        side: ``"left"`` for ``g sub`` or ``"right"`` for ``sub g``

    Returns:
        Representatives in increasing order; there are ``|group| / |sub|`` of them
    """
    _require_subgroup(group, sub)
    if side not in ("left", "right"):
        raise ValidationError(f"side must be 'left' or 'right', got {side!r}")
    covered: set = set()
    reps = []
    for g in group.elements:
        if g in covered:
            continue
        reps.append(g)
        if side == "left":
            covered.update(g * h for h in sub.elements)
        else:
            covered.update(h * g for h in sub.elements)
    return reps


@dataclass
class GroupTable:
    """
    Multiplication table of an abstract finite group.

    ``labels[i]`` is the permutation representing element ``i``; for quotients
    it is the least element of the coset. ``lookup`` maps every permutation of
    the underlying group to its table index.
    """
    order: int
    table: Tuple[Tuple[int, ...], ...]
    labels: Tuple[Permutation, ...]
    lookup: Dict[Permutation, int] = field(default_factory=dict, repr=False)

    @cached_property
    def identity_index(self) -> int:
        for i, row in enumerate(self.table):
            if all(row[j] == j for j in range(self.order)):
                return i
        raise ValidationError("table has no identity")

    def multiply(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        e = self.identity_index
        return next(j for j in range(self.order) if self.table[i][j] == e)

    def element_order(self, i: int) -> int:
        e = self.identity_index
        k, current = 1, i
        while current != e:
            current = self.table[current][i]
            k += 1
        return k

    def is_group(self) -> bool:
        """Exhaustive check of the group axioms."""
        n = self.order
        rng = range(n)
        if any(sorted(row) != list(rng) for row in self.table):
            return False
        try:
            e = self.identity_index
        except ValidationError:
            return False
        if any(self.table[j][e] != j for j in rng):
            return False
        t = self.table
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in rng for b in rng for c in rng)

    def conjugacy_classes(self) -> List[List[int]]:
        """Classes of indices in order of first appearance."""
        inverses = [self.inverse(i) for i in range(self.order)]
        assigned = [False] * self.order
        classes = []
        for i in range(self.order):
            if assigned[i]:
                continue
            members = sorted({self.table[self.table[g][i]][inverses[g]] for g in range(self.order)})
            for m in members:
                assigned[m] = True
            classes.append(members)
        return classes

    def generators(self) -> List[int]:
        """Greedy generating set of indices."""
        gens: List[int] = []
        reached = {self.identity_index}
        for i in range(self.order):
            if i in reached:
                continue
            gens.append(i)
            reached = self._closure(gens)
        return gens

    def _closure(self, gens: Sequence[int]) -> set:
        seen = {self.identity_index}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[g][x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen


def quotient_table(normal: PermutationGroup, sub: PermutationGroup) -> GroupTable:
    """
    Table of ``normal / sub`` on least coset representatives.

    Raises:
        ValidationError: If ``sub`` is not a normal subgroup of ``normal``
    """
    _require_subgroup(normal, sub)
    if not all(_normalizes(g, sub) for g in normal.generators):
        raise ValidationError(f"subgroup of order {sub.order} is not normal")
    reps = cosets(normal, sub, "left")
    lookup: Dict[Permutation, int] = {}
    for i, r in enumerate(reps):
        for h in sub.elements:
            lookup[r * h] = i
    table = tuple(tuple(lookup[a * b] for b in reps) for a in reps)
    return GroupTable(len(reps), table, tuple(reps), lookup)


def group_table(group: PermutationGroup) -> GroupTable:
    return quotient_table(group, trivial_group(group.degree))


def conjugacy_classes(group: PermutationGroup) -> List[List[int]]:
    """Conjugacy classes as lists of element indices, in order of first appearance."""
    assigned = [False] * group.order
    inverses = [g.inverse() for g in group.elements]
    classes = []
    for i, x in enumerate(group.elements):
        if assigned[i]:
            continue
        members = sorted({group.index(g * x * g_inv) for g, g_inv in zip(group.elements, inverses)})
        for m in members:
            assigned[m] = True
        classes.append(members)
    return classes


def tables_isomorphic(a: GroupTable, b: GroupTable) -> bool:
    """Search for an isomorphism by assigning images to a generating set of ``a``."""
    if a.order != b.order:
        return False
    if sorted(a.element_order(i) for i in range(a.order)) != sorted(b.element_order(i) for i in range(b.order)):
        return False
    gens = a.generators()
    words = _words_over(a, gens)
    b_orders = [b.element_order(j) for j in range(b.order)]

    def attempt(images: List[int]) -> bool:
        if len(images) < len(gens):
            want = a.element_order(gens[len(images)])
            return any(attempt(images + [j]) for j in range(b.order) if b_orders[j] == want)
        mapping = {a.identity_index: b.identity_index}
        for element, (gen_pos, previous) in words:
            mapping[element] = b.table[images[gen_pos]][mapping[previous]]
        if len(set(mapping.values())) != a.order:
            return False
        return all(mapping[a.table[x][y]] == b.table[mapping[x]][mapping[y]]
                   for x in range(a.order) for y in range(a.order))

    return attempt([])


def _words_over(table: GroupTable, gens: Sequence[int]) -> List[Tuple[int, Tuple[int, int]]]:
    """BFS spanning tree: each element as ``gen * previous``."""
    e = table.identity_index
    seen = {e}
    order = []
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for pos, g in enumerate(gens):
            y = table.table[g][x]
            if y not in seen:
                seen.add(y)
                order.append((y, (pos, x)))
                queue.append(y)
    return order
