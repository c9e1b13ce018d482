"""
The factorizable part F*_n of the dual symmetric inverse monoid.

An element is a pair ``(rho, sigma)`` standing for ``rho * sigma`` where
``rho`` is an equivalence relation and ``sigma`` a permutation; ``sigma`` only
matters up to the left coset ``S_rho * sigma`` of the Young subgroup of
``rho`` and is stored as the least element of that coset.
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..config.yaml_loader import Budgets, get_budgets
from ..permgroup.group import GroupTable
from ..permgroup.permutation import Permutation, SetPartition, set_partitions
from ..symfunc.partitions import IntegerPartition, partitions
from ..utils.errors import InconsistencyError, SizeLimitError, ValidationError
from ..utils.logger import get_logger

log = get_logger(__name__)


def canonical_coset_rep(rho: SetPartition, sigma: Permutation) -> Permutation:
    """
    Least element of ``S_rho * sigma``.

    The positions ``sigma^-1(B)`` of each block ``B`` receive the points of
    ``B`` in increasing order.
    """
    if rho.degree != sigma.degree:
        raise ValidationError(f"partition of {rho.degree} points with a permutation of degree {sigma.degree}")
    images = [0] * sigma.degree
    positions: Dict[int, List[int]] = {}
    for i, x in enumerate(sigma.images):
        positions.setdefault(rho.block_of[x], []).append(i)
    for block_id, block in enumerate(rho.blocks()):
        for i, x in zip(positions.get(block_id, []), block):
            images[i] = x
    return Permutation(tuple(images))


@dataclass(frozen=True, order=True)
class FStarElement:
    rho: SetPartition
    sigma: Permutation

    def __post_init__(self):
        object.__setattr__(self, 'sigma', canonical_coset_rep(self.rho, self.sigma))

    @classmethod
    def identity(cls, n: int) -> "FStarElement":
        return cls(SetPartition.discrete(n), Permutation.identity(n))

    @classmethod
    def idempotent(cls, rho: SetPartition) -> "FStarElement":
        return cls(rho, Permutation.identity(rho.degree))

    @property
    def degree(self) -> int:
        return self.rho.degree

    def __mul__(self, other: "FStarElement") -> "FStarElement":
        return fstar_multiply(self, other)

    def __str__(self) -> str:
        return f"{self.rho} | {self.sigma.one_line()}"


def fstar_from_text(text: str) -> FStarElement:
    """
    Parse ``"{1,2}{3} | 132"``.

    Raises:
        ValidationError: If either half is malformed
    """
    rho_text, sep, perm_text = text.partition("|")
    if not sep:
        raise ValidationError(f"expected 'blocks | one-line permutation', got {text!r}")
    rho = SetPartition.parse(rho_text)
    perm_text = perm_text.strip()
    tokens = perm_text.split(",") if "," in perm_text else list(perm_text)
    try:
        sigma = Permutation.from_one_line([int(t) for t in tokens])
    except ValueError as e:
        raise ValidationError(f"cannot parse permutation {perm_text!r}") from e
    return FStarElement(rho, sigma)


def fstar_multiply(a: FStarElement, b: FStarElement) -> FStarElement:
    """``(rho1 s1)(rho2 s2) = join(rho1, s1 rho2 s1^-1) * s1 s2``."""
    if a.degree != b.degree:
        raise ValidationError(f"degree mismatch: {a.degree} vs {b.degree}")
    rho = a.rho.join(b.rho.apply(a.sigma))
    return FStarElement(rho, a.sigma * b.sigma)


def fstar_inverse(a: FStarElement) -> FStarElement:
    inv = a.sigma.inverse()
    return FStarElement(a.rho.apply(inv), inv)


def fstar_units(elements: Sequence[FStarElement]) -> List[FStarElement]:
    """Elements with ``a a^-1`` equal to the identity."""
    if not elements:
        return []
    one = FStarElement.identity(elements[0].degree)
    return [a for a in elements if a * fstar_inverse(a) == one]


def young_subgroup_order(rho: SetPartition) -> int:
    return prod(factorial(len(b)) for b in rho.blocks())


def _coset_reps(rho: SetPartition) -> Iterator[Permutation]:
    """Canonical representatives: disjoint position sets, one per block."""
    n = rho.degree
    blocks = rho.blocks()
    images = [0] * n

    def place(index: int, free: Tuple[int, ...]) -> Iterator[Permutation]:
        if index == len(blocks):
            yield Permutation(tuple(images))
            return
        block = blocks[index]
        for chosen in combinations(free, len(block)):
            for i, x in zip(chosen, block):
                images[i] = x
            rest = tuple(p for p in free if p not in chosen)
            yield from place(index + 1, rest)

    yield from place(0, tuple(range(n)))


def fstar_enumerate(n: int, budgets: Optional[Budgets] = None) -> List[FStarElement]:
    """
    All elements of F*_n, sorted.

    Raises:
        SizeLimitError: If ``n`` exceeds ``fstar_max_n``
    """
    budgets = budgets or get_budgets()
    if n > budgets.fstar_max_n:
        raise SizeLimitError("fstar_max_n", budgets.fstar_max_n, n, hint="use the formula path of fstar_structure")
    elements = []
    for rho in set_partitions(n):
        elements.extend(FStarElement(rho, sigma) for sigma in _coset_reps(rho))
    elements.sort()
    log.info(f"|F*_{n}| = {len(elements)}")
    return elements


def fstar_count(n: int) -> int:
    """``sum over rho of n!/|S_rho|``, grouped by shape."""
    return sum(idempotent_count(lam) * factorial(n) // prod(factorial(p) for p in lam.parts)
               for lam in partitions(n))


def idempotent_count(lam: IntegerPartition) -> int:
    """``n_lambda = n! / prod(k_i! (i!)^k_i)``: set partitions of shape ``lam``."""
    k = lam.multiplicities()
    return factorial(lam.size) // prod(factorial(ki) * factorial(i) ** ki for i, ki in enumerate(k, start=1))


def hclass_group_order(lam: IntegerPartition) -> int:
    return prod(factorial(ki) for ki in lam.multiplicities())


def fstar_idempotents(n: int, budgets: Optional[Budgets] = None) -> List[FStarElement]:
    """Idempotents found by squaring every element."""
    return [e for e in fstar_enumerate(n, budgets) if e * e == e]


def fstar_hclass(e: FStarElement, elements: Sequence[FStarElement]) -> List[FStarElement]:
    """Elements ``a`` with ``a a^-1 = e = a^-1 a``."""
    return [a for a in elements if a * fstar_inverse(a) == e and fstar_inverse(a) * a == e]


@dataclass
class DualDClass:
    shape: IntegerPartition
    count_idempotents: int
    group_order: int

    @property
    def dimension(self) -> int:
        return self.count_idempotents ** 2 * self.group_order


def fstar_structure(n: int, brute_force: bool = False,
                    budgets: Optional[Budgets] = None) -> List[DualDClass]:
    """
    D-classes of F*_n by shape, from the closed formulas.

    With ``brute_force`` the formulas are checked against an enumeration:
    idempotents are exactly the pairs ``(rho, id)``, their number per shape is
    ``n_lambda`` and every H-class has ``prod k_i!`` elements.

    Raises:
        InconsistencyError: If the enumeration disagrees with the formulas
    """
    classes = [DualDClass(lam, idempotent_count(lam), hclass_group_order(lam)) for lam in partitions(n)]
    if not brute_force:
        return classes

    elements = fstar_enumerate(n, budgets)
    found = [e for e in elements if e * e == e]
    if any(not e.sigma.is_identity() for e in found):
        raise InconsistencyError("an idempotent of F* has a non-trivial permutation part")
    by_shape = Counter(IntegerPartition(e.rho.shape()) for e in found)
    for d in classes:
        if by_shape.get(d.shape, 0) != d.count_idempotents:
            raise InconsistencyError(
                f"shape {d.shape}: {by_shape.get(d.shape, 0)} idempotents, expected {d.count_idempotents}")
    for e in found:
        expected = hclass_group_order(IntegerPartition(e.rho.shape()))
        size = len(fstar_hclass(e, elements))
        if size != expected:
            raise InconsistencyError(f"H-class of {e} has {size} elements, expected {expected}")
    if len(elements) != sum(d.dimension for d in classes):
        raise InconsistencyError(f"|F*_{n}| = {len(elements)} but the D-class dimensions sum differently")
    log.info(f"F*_{n} structure verified by enumeration")
    return classes


@dataclass
class DimensionIdentity:
    n: int
    terms: List[int]
    element_count: int

    @property
    def holds(self) -> bool:
        return sum(self.terms) == self.element_count

    def __str__(self) -> str:
        return f"{'+'.join(str(t) for t in self.terms)} = {sum(self.terms)} = |F*_{self.n}|" + (
            "" if self.holds else f" (enumerated {self.element_count})")


def dimension_identity(n: int, brute_force: bool = True,
                       budgets: Optional[Budgets] = None) -> DimensionIdentity:
    """Both sides of ``sum n_lambda^2 |G_lambda| = |F*_n|``."""
    classes = fstar_structure(n, brute_force=False)
    count = len(fstar_enumerate(n, budgets)) if brute_force else fstar_count(n)
    return DimensionIdentity(n, [d.dimension for d in classes], count)


def hclass_table(e: FStarElement, elements: Sequence[FStarElement]) -> GroupTable:
    """Multiplication table of the H-class of an idempotent."""
    members = sorted(fstar_hclass(e, elements))
    index = {a: i for i, a in enumerate(members)}
    table = tuple(tuple(index[a * b] for b in members) for a in members)
    return GroupTable(len(members), table, tuple(a.sigma for a in members))
