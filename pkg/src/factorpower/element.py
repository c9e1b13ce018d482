"""
Elements of the factorpower FP+(G, M).

A class of subsets ``A`` of ``G`` is determined by its column array
``(A_1, ..., A_n)`` with ``A_m = {s(m) : s in A}``. Columns are stored as
integer bit sets; bit ``x`` of column ``m`` is set when ``x`` lies in ``A_m``.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..permgroup.group import PermutationGroup
from ..permgroup.permutation import Permutation
from ..utils.errors import ValidationError


@dataclass(frozen=True, order=True)
class FpElement:
    degree: int
    columns: Tuple[int, ...]

    def __post_init__(self):
        if len(self.columns) != self.degree:
            raise ValidationError(f"{len(self.columns)} columns for degree {self.degree}")
        full = (1 << self.degree) - 1
        for col in self.columns:
            if col == 0 or col & ~full:
                raise ValidationError(f"column bit set {col:b} is empty or out of range")

    @classmethod
    def from_sets(cls, columns: Sequence[Iterable[int]]) -> "FpElement":
        """Build from 0-based point sets, one per column."""
        masks = []
        for col in columns:
            mask = 0
            for x in col:
                mask |= 1 << x
            masks.append(mask)
        return cls(len(masks), tuple(masks))

    @classmethod
    def from_key(cls, degree: int, key: int) -> "FpElement":
        mask = (1 << degree) - 1
        return cls(degree, tuple((key >> (degree * m)) & mask for m in range(degree)))

    @property
    def key(self) -> int:
        """All columns packed into one integer, column ``m`` at bit offset ``n*m``."""
        key = 0
        for m, col in enumerate(self.columns):
            key |= col << (self.degree * m)
        return key

    def column(self, m: int) -> Tuple[int, ...]:
        col = self.columns[m]
        return tuple(x for x in range(self.degree) if col >> x & 1)

    def __mul__(self, other: "FpElement") -> "FpElement":
        if other.degree != self.degree:
            raise ValidationError(f"degree mismatch: {self.degree} vs {other.degree}")
        mine = self.columns
        out = []
        for col in other.columns:
            acc = 0
            x = 0
            while col:
                if col & 1:
                    acc |= mine[x]
                col >>= 1
                x += 1
            out.append(acc)
        return FpElement(self.degree, tuple(out))

    def left_translate(self, perm: Permutation) -> "FpElement":
        """The product ``class({perm}) * self``: every column is moved by ``perm``."""
        return FpElement(self.degree, tuple(_map_bits(perm, col) for col in self.columns))

    def right_translate(self, perm: Permutation) -> "FpElement":
        """The product ``self * class({perm})``: column ``m`` becomes column ``perm(m)``."""
        return FpElement(self.degree, tuple(self.columns[perm(m)] for m in range(self.degree)))

    def is_unit_shaped(self) -> bool:
        return all(col & (col - 1) == 0 for col in self.columns)

    def relation_rows(self) -> List[List[int]]:
        """Row ``m`` is the characteristic vector of ``A_m``."""
        return [[col >> x & 1 for x in range(self.degree)] for col in self.columns]

    def __str__(self) -> str:
        return "".join("{" + ",".join(str(x + 1) for x in self.column(m)) + "}" for m in range(self.degree))


def _map_bits(perm: Permutation, col: int) -> int:
    out = 0
    x = 0
    images = perm.images
    while col:
        if col & 1:
            out |= 1 << images[x]
        col >>= 1
        x += 1
    return out


def _check_degree(group: PermutationGroup, *elements: FpElement) -> None:
    for e in elements:
        if e.degree != group.degree:
            raise ValidationError(f"element of degree {e.degree} over a group of degree {group.degree}")


def canonical_from_subset(group: PermutationGroup, subset: Iterable[Permutation]) -> FpElement:
    """
    Column array of the class of a non-empty subset.

    Raises:
        ValidationError: If the subset is empty or leaves the group
    """
    n = group.degree
    columns = [0] * n
    empty = True
    for s in subset:
        if s not in group:
            raise ValidationError(f"{s} is not an element of the group")
        empty = False
        for m in range(n):
            columns[m] |= 1 << s(m)
    if empty:
        raise ValidationError("the empty subset is the zero class, which is not in FP+")
    return FpElement(n, tuple(columns))


def saturate(group: PermutationGroup, element: FpElement) -> List[Permutation]:
    """Largest subset of the class: ``{s : s(m) in A_m for all m}``."""
    _check_degree(group, element)
    cols = element.columns
    n = group.degree
    return [s for s in group.elements if all(cols[m] >> s(m) & 1 for m in range(n))]


def multiply(group: PermutationGroup, a: FpElement, b: FpElement) -> FpElement:
    """Column ``m`` of ``a*b`` is the union of ``A_x`` over ``x`` in ``B_m``."""
    _check_degree(group, a, b)
    return a * b


def star(group: PermutationGroup, a: FpElement) -> FpElement:
    """Class of the inverses of the saturated subset."""
    return canonical_from_subset(group, (s.inverse() for s in saturate(group, a)))


def unit_class(group: PermutationGroup, g: Permutation) -> FpElement:
    return canonical_from_subset(group, [g])


def identity_class(group: PermutationGroup) -> FpElement:
    return unit_class(group, group.identity)
