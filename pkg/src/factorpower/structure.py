"""
Idempotents, Green's relations and D-classes of FP+(G, M).

Idempotents correspond to orbit-maximal subgroups ``H`` (``H`` equals the
stabilizer of its own orbits). The D-class of the idempotent of ``H`` collects
the idempotents of all conjugates of ``H``; its maximal subgroups are
isomorphic to ``N_G(H) / H``.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import FrozenSet, List, Optional, Tuple, Union

from ..config.yaml_loader import Budgets
from ..permgroup.action import GroupAction
from ..permgroup.group import (GroupTable, PermutationGroup, block_stabilizer, conjugate_subgroup,
                               cosets, normalizer, orbits, quotient_table)
from ..permgroup.permutation import Permutation, SetPartition, set_partitions
from ..symfunc.partitions import IntegerPartition
from ..utils.errors import ValidationError
from ..utils.logger import get_logger
from .element import FpElement, _check_degree, canonical_from_subset

log = get_logger(__name__)

GREEN_RELATIONS = ("L", "R", "H", "D")


class TraceZero(Enum):
    """The adjoined zero of a D-class trace."""
    ZERO = 0

    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class IdempotentInfo:
    partition: SetPartition
    subgroup: PermutationGroup = field(compare=False)
    element: FpElement = field(compare=False)

    @property
    def shape(self) -> IntegerPartition:
        return IntegerPartition(self.partition.shape())


def _idempotent_of(group: PermutationGroup, sub: PermutationGroup) -> IdempotentInfo:
    return IdempotentInfo(orbits(sub), sub, canonical_from_subset(group, sub.elements))


def idempotents(group: PermutationGroup) -> List[IdempotentInfo]:
    """
    Idempotents from a sweep over set partitions of the points.

    A partition is kept when the orbits of its block stabilizer are exactly its
    blocks. The result is ordered by block shape (larger shapes first in
    reverse lexicographic order), then by partition.
    """
    found = []
    for rho in set_partitions(group.degree):
        stab = block_stabilizer(group, rho)
        if orbits(stab) == rho:
            found.append(IdempotentInfo(rho, stab, canonical_from_subset(group, stab.elements)))
    found.sort(key=lambda e: e.partition)
    found.sort(key=lambda e: e.partition.shape(), reverse=True)
    log.info(f"{len(found)} idempotents for a group of order {group.order}")
    return found


def green_related(group: PermutationGroup, a: FpElement, b: FpElement, relation: str) -> bool:
    """
    Green's relations through group translations.

    ``L``: ``a = s*b``; ``R``: ``a = b*s``; ``H``: both; ``D``: ``a = s*b*t``,
    for unit classes ``s``, ``t``.

    Raises:
        ValidationError: For an unknown relation name
    """
    _check_degree(group, a, b)
    relation = relation.upper()
    if relation not in GREEN_RELATIONS:
        raise ValidationError(f"unknown Green relation {relation!r}; expected one of {GREEN_RELATIONS}")
    if relation == "L":
        return any(b.left_translate(s) == a for s in group.elements)
    if relation == "R":
        return any(b.right_translate(s) == a for s in group.elements)
    if relation == "H":
        return green_related(group, a, b, "L") and green_related(group, a, b, "R")
    for s in group.elements:
        left = b.left_translate(s)
        if any(left.right_translate(t) == a for t in group.elements):
            return True
    return False


@dataclass
class DClassInfo:
    """
    A regular D-class, given by its idempotents ``e_1..e_k`` (idempotents of
    the conjugates ``g_i^-1 H g_i``) and the maximal subgroup ``N_G(H)/H``.
    """
    group: PermutationGroup
    idempotents: List[IdempotentInfo]
    conjugators: List[Permutation]
    normalizer: PermutationGroup
    maximal_subgroup: GroupTable
    shape: IntegerPartition

    @property
    def k(self) -> int:
        return len(self.idempotents)

    @property
    def apex(self) -> IdempotentInfo:
        return self.idempotents[0]

    @property
    def label(self) -> str:
        return str(self.shape) if self.group.is_symmetric() else str(self.apex.partition)

    @cached_property
    def members(self) -> FrozenSet[FpElement]:
        """All ``s * e_1 * t`` for units ``s``, ``t``."""
        e = self.apex.element
        found = set()
        for s in self.group.elements:
            left = e.left_translate(s)
            for t in self.group.elements:
                found.add(left.right_translate(t))
        return frozenset(found)

    def lclass(self, element: FpElement) -> FrozenSet[FpElement]:
        return frozenset(element.left_translate(s) for s in self.group.elements)

    def rclass(self, element: FpElement) -> FrozenSet[FpElement]:
        return frozenset(element.right_translate(s) for s in self.group.elements)

    def hclass(self, element: FpElement) -> FrozenSet[FpElement]:
        return self.lclass(element) & self.rclass(element)

    def __contains__(self, element: FpElement) -> bool:
        return element in self.members


def dclass_of(group: PermutationGroup, idempotent: IdempotentInfo) -> DClassInfo:
    """
    D-class of an idempotent.

    Conjugators are the least representatives of the right cosets ``N g`` of
    the normalizer, so the first one is the identity.
    """
    sub = idempotent.subgroup
    norm = normalizer(group, sub)
    conjugators = cosets(group, norm, "right")
    members = [_idempotent_of(group, conjugate_subgroup(group, sub, g)) for g in conjugators]
    table = quotient_table(norm, sub)
    shape = IntegerPartition(idempotent.partition.shape())
    log.debug(f"D-class at {idempotent.partition}: k={len(members)}, |N/H|={table.order}")
    return DClassInfo(group, members, conjugators, norm, table, shape)


def dclasses(group: PermutationGroup) -> List[DClassInfo]:
    """All regular D-classes, in the order of their first idempotent."""
    seen = set()
    result = []
    for e in idempotents(group):
        if e.partition in seen:
            continue
        d = dclass_of(group, e)
        seen.update(i.partition for i in d.idempotents)
        result.append(d)
    log.info(f"{len(result)} D-classes for a group of order {group.order}")
    return result


TraceValue = Union[FpElement, TraceZero]


def trace_product(dclass: DClassInfo, a: FpElement, b: FpElement) -> TraceValue:
    """
    Product in the trace of a D-class.

    Raises:
        ValidationError: If ``a`` or ``b`` lies outside the D-class
    """
    for x in (a, b):
        if x not in dclass:
            raise ValidationError(f"{x} is not in the D-class {dclass.label}")
    product = a * b
    return product if product in dclass else TraceZero.ZERO


def is_inverse_trace(dclass: DClassInfo) -> bool:
    """Idempotents multiply to zero pairwise and every element has exactly one inverse."""
    ids = [e.element for e in dclass.idempotents]
    for i, e in enumerate(ids):
        if trace_product(dclass, e, e) != e:
            return False
        for j, f in enumerate(ids):
            if i != j and trace_product(dclass, e, f) is not TraceZero.ZERO:
                return False
    members = sorted(dclass.members)
    for a in members:
        inverses = 0
        for b in members:
            ab = trace_product(dclass, a, b)
            ba = trace_product(dclass, b, a)
            if ab is TraceZero.ZERO or ba is TraceZero.ZERO:
                continue
            if trace_product(dclass, ab, a) == a and trace_product(dclass, ba, b) == b:
                inverses += 1
        if inverses != 1:
            return False
    return True


def units_and_kernel(group_or_action: Union[PermutationGroup, GroupAction],
                     budgets: Optional[Budgets] = None) -> Tuple[GroupTable, PermutationGroup]:
    """
    Group of units ``G/K`` and the kernel ``K`` of the action on the points.
    """
    action = (group_or_action if isinstance(group_or_action, GroupAction)
              else GroupAction.natural(group_or_action))
    kernel = action.kernel(budgets)
    units = quotient_table(action.source, kernel)
    log.info(f"kernel of order {kernel.order}; group of units of order {units.order}")
    return units, kernel


def faithful_group(group_or_action: Union[PermutationGroup, GroupAction],
                   budgets: Optional[Budgets] = None) -> PermutationGroup:
    """The group acting faithfully on the points, used for every FP+ computation."""
    if isinstance(group_or_action, PermutationGroup):
        return group_or_action
    return group_or_action.action_image(budgets)
