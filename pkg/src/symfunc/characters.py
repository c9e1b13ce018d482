"""
Exact characters of symmetric groups and of products of symmetric groups.

Irreducible values come from the Murnaghan-Nakayama rule on beta-sets. The
multiplicity of a Specht module in a module induced from a block-permuting
subgroup is computed by an explicit Frobenius sum over that subgroup.
"""

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import pandas as pd
from sympy import Rational

from ..config.yaml_loader import Budgets, get_budgets
from ..permgroup.permutation import Permutation, SetPartition
from ..utils.errors import InconsistencyError, SizeLimitError, ValidationError
from ..utils.logger import get_logger
from .partitions import (IntegerPartition, MultiPartition, class_size, partitions,
                         set_partition_shape)

log = get_logger(__name__)


def _check_sizes(a: IntegerPartition, b: IntegerPartition) -> None:
    if a.size != b.size:
        raise ValidationError(f"partitions {a} and {b} have different sizes")


@lru_cache(maxsize=None)
def _mn(shape: Tuple[int, ...], cycle: Tuple[int, ...]) -> int:
    if not cycle:
        return 1
    r, rest = cycle[0], cycle[1:]
    length = len(shape)
    beads = [shape[i] + length - 1 - i for i in range(length)]
    occupied = set(beads)
    total = 0
    for b in beads:
        target = b - r
        if target < 0 or target in occupied:
            continue
        crossed = sum(1 for c in beads if target < c < b)
        moved = sorted((target if c == b else c for c in beads), reverse=True)
        smaller = tuple(p for p in (moved[i] - (length - 1 - i) for i in range(length)) if p)
        total += (-1) ** crossed * _mn(smaller, rest)
    return total


def mn_character(shape: IntegerPartition, cycle_type: IntegerPartition) -> int:
    """
    Value of the irreducible character of ``shape`` on permutations of ``cycle_type``.

    Raises:
        ValidationError: If the partitions have different sizes
    """
    _check_sizes(shape, cycle_type)
    return _mn(shape.parts, cycle_type.parts)


@lru_cache(maxsize=None)
def _kostka(shape: Tuple[int, ...], content: Tuple[int, ...]) -> int:
    if not content:
        return 1 if not shape else 0
    last, rest = content[-1], content[:-1]
    total = 0
    # remove a horizontal strip of size ``last``: row i shrinks to between shape[i+1] and shape[i]
    lengths = len(shape)

    def strip(i: int, remaining: int, acc: Tuple[int, ...]) -> None:
        nonlocal total
        if i == lengths:
            if remaining == 0:
                total += _kostka(tuple(p for p in acc if p), rest)
            return
        lower = shape[i + 1] if i + 1 < lengths else 0
        for new_len in range(shape[i], lower - 1, -1):
            taken = shape[i] - new_len
            if taken > remaining:
                break
            strip(i + 1, remaining - taken, acc + (new_len,))

    strip(0, last, ())
    return total


def kostka(lam: IntegerPartition, mu: IntegerPartition) -> int:
    """Number of semistandard tableaux of shape ``lam`` and content ``mu``."""
    _check_sizes(lam, mu)
    return _kostka(lam.parts, mu.parts)


def specht_dim(shape: IntegerPartition) -> int:
    """Hook-length formula."""
    hooks = prod(h for row in shape.hook_lengths() for h in row)
    return factorial(shape.size) // hooks


def permutation_character(mu: IntegerPartition, nu: IntegerPartition) -> int:
    """Number of tabloids of shape ``mu`` fixed by a permutation of cycle type ``nu``."""
    _check_sizes(mu, nu)
    cycles = nu.parts

    @lru_cache(maxsize=None)
    def fill(index: int, capacities: Tuple[int, ...]) -> int:
        if index == len(cycles):
            return 1 if not any(capacities) else 0
        c = cycles[index]
        ways = 0
        for row, cap in enumerate(capacities):
            if cap >= c:
                ways += fill(index + 1, capacities[:row] + (cap - c,) + capacities[row + 1:])
        return ways

    return fill(0, mu.parts)


@dataclass
class ClassFunction:
    """
    A class function on ``S_{k_1} x ... x S_{k_r}``.

    Keys are tuples of cycle types, one per factor; values are exact rationals.
    """
    factors: Tuple[int, ...]
    values: Dict[Tuple[IntegerPartition, ...], Rational] = field(default_factory=dict)

    @staticmethod
    def classes(factors: Sequence[int]) -> List[Tuple[IntegerPartition, ...]]:
        return [tuple(c) for c in product(*(partitions(k) for k in factors))]

    @classmethod
    def irreducible(cls, shapes: Sequence[IntegerPartition]) -> "ClassFunction":
        """Outer tensor product of Specht characters."""
        factors = tuple(s.size for s in shapes)
        values = {key: Rational(prod(mn_character(s, c) for s, c in zip(shapes, key)))
                  for key in cls.classes(factors)}
        return cls(factors, values)

    @classmethod
    def of_permutation_module(cls, mu: IntegerPartition) -> "ClassFunction":
        return cls((mu.size,), {key: Rational(permutation_character(mu, key[0]))
                                for key in cls.classes((mu.size,))})

    def class_size(self, key: Tuple[IntegerPartition, ...]) -> int:
        return prod(class_size(c) for c in key)

    @property
    def group_order(self) -> int:
        return prod(factorial(k) for k in self.factors)

    def inner(self, other: "ClassFunction") -> Rational:
        """Inner product; characters of symmetric groups are real, so no conjugation."""
        if other.factors != self.factors:
            raise ValidationError("class functions live on different groups")
        total = sum((self.class_size(k) * v * other.values[k] for k, v in self.values.items()), Rational(0))
        return total / self.group_order

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.factors, {k: v + other.values[k] for k, v in self.values.items()})

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.factors, {k: v * other.values[k] for k, v in self.values.items()})

    def degree(self) -> Rational:
        key = tuple(IntegerPartition((1,) * k) if k else IntegerPartition(()) for k in self.factors)
        return self.values[key]


def cycle_representative(nu: IntegerPartition) -> Permutation:
    """A permutation of cycle type ``nu`` whose cycles run over consecutive points."""
    images: List[int] = []
    start = 0
    for c in nu.parts:
        images.extend(start + (i + 1) % c for i in range(c))
        start += c
    return Permutation(tuple(images))


def uniform_set_partitions(k: int, m: int) -> Iterator[SetPartition]:
    """All set partitions of ``k*m`` points into ``k`` blocks of size ``m``."""
    n = k * m

    def place(free: Tuple[int, ...], blocks: List[Tuple[int, ...]]) -> Iterator[SetPartition]:
        if not free:
            yield SetPartition.from_blocks(blocks, n)
            return
        first, rest = free[0], free[1:]
        for others in combinations(rest, m - 1):
            left = tuple(p for p in rest if p not in others)
            yield from place(left, blocks + [(first,) + others])

    yield from place(tuple(range(n)), [])


def set_partition_character(k: int, m: int) -> ClassFunction:
    """
    Permutation character of ``S_{k*m}`` on set partitions into ``k`` blocks of size ``m``.

    Its inner product with ``chi^lam`` is the multiplicity of ``lam`` in the
    trivial module induced from the block-permuting subgroup.
    """
    if k < 1 or m < 1:
        raise ValidationError(f"need positive block count and size, got k={k}, m={m}")
    n = k * m
    orbit = list(uniform_set_partitions(k, m))
    values = {}
    for key in ClassFunction.classes((n,)):
        g = cycle_representative(key[0])
        values[key] = Rational(sum(1 for rho in orbit if rho.apply(g) == rho))
    return ClassFunction((n,), values)


def character_table(n: int) -> pd.DataFrame:
    """Irreducible characters of ``S_n``: rows are shapes, columns cycle types."""
    shapes = partitions(n)
    data = [[mn_character(lam, nu) for nu in shapes] for lam in shapes]
    return pd.DataFrame(data, index=[str(s) for s in shapes], columns=[str(s) for s in shapes])


def _fast_cycle_type(images: Sequence[int]) -> Tuple[int, ...]:
    seen = [False] * len(images)
    lengths = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        p = start
        while not seen[p]:
            seen[p] = True
            p = images[p]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


@lru_cache(maxsize=None)
def _wreath_counts(block_size: int, blocks: int) -> Tuple[Tuple[Tuple[int, ...], Tuple[int, ...], int], ...]:
    """
    Element census of ``S_block_size wr S_blocks`` acting on ``blocks * block_size`` points.

    Returns ``(cycle type, cycle type of the block permutation, count)`` triples.
    """
    counts: Counter = Counter()
    inner = list(permutations(range(block_size)))
    for top in permutations(range(blocks)):
        top_type = _fast_cycle_type(top)
        for bottoms in product(inner, repeat=blocks):
            images = [0] * (blocks * block_size)
            for b, beta in enumerate(bottoms):
                base, target = b * block_size, top[b] * block_size
                for p, q in enumerate(beta):
                    images[base + p] = target + q
            counts[(_fast_cycle_type(images), top_type)] += 1
    return tuple((ct, tt, c) for (ct, tt), c in sorted(counts.items()))


def block_permuting_order(k: Sequence[int]) -> int:
    """Order of the subgroup permuting blocks of equal size, ``prod (i!)^k_i k_i!``."""
    return prod(factorial(i) ** ki * factorial(ki) for i, ki in enumerate(k, start=1))


@lru_cache(maxsize=None)
def _induced_census(k: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...], int], ...]:
    """Combined census over all wreath factors: (cycle type, per-factor top types, count)."""
    combined: Dict[Tuple[Tuple[int, ...], Tuple[Tuple[int, ...], ...]], int] = {((), ()): 1}
    for i, ki in enumerate(k, start=1):
        if ki == 0:
            continue
        factor = _wreath_counts(i, ki)
        merged: Counter = Counter()
        for (ct, tops), count in combined.items():
            for fct, ftop, fcount in factor:
                key = (tuple(sorted(ct + fct, reverse=True)), tops + (ftop,))
                merged[key] += count * fcount
        combined = dict(merged)
    return tuple((ct, tops, c) for (ct, tops), c in sorted(combined.items()))


def _check_wreath_budget(k: Sequence[int], budgets: Budgets) -> int:
    order = block_permuting_order(k)
    if order > budgets.wreath_budget:
        raise SizeLimitError("wreath_budget", budgets.wreath_budget, order,
                             hint="use a coarser block structure or raise the budget")
    return order


def induced_multiplicity(lam: IntegerPartition, rho: SetPartition, l: MultiPartition,
                         budgets: Optional[Budgets] = None) -> int:
    """
    Multiplicity of the Specht module of ``lam`` in the module induced from the
    block-permuting subgroup ``N`` of ``rho``, inflated from ``S^l``.

    Args:
        lam: Shape of the Specht module, a partition of the number of points
        rho: Set partition whose block sizes give ``k``
        l: Multipartition with ``l_i`` a partition of ``k_i``
        budgets: Limits; ``wreath_budget`` bounds ``|N|``

    Returns:
        Exact non-negative multiplicity

    Raises:
        ValidationError: If the shapes are inconsistent
        SizeLimitError: If ``|N|`` exceeds the budget
    """
    budgets = budgets or get_budgets()
    if lam.size != rho.degree:
        raise ValidationError(f"shape {lam} does not partition {rho.degree} points")
    k = set_partition_shape(rho).multiplicities()
    if not l.matches(k):
        raise ValidationError(f"label {l} does not match block counts {k}")
    order = _check_wreath_budget(k, budgets)
    sizes = [i for i, ki in enumerate(k, start=1) if ki]
    total = 0
    for ct, tops, count in _induced_census(tuple(k)):
        chi = _mn(lam.parts, ct)
        if chi == 0:
            continue
        label_value = prod(_mn(l.components[i - 1].parts, top) for i, top in zip(sizes, tops))
        total += count * chi * label_value
    if total % order:
        raise InconsistencyError(f"non-integral multiplicity {total}/{order}")
    return total // order


@dataclass
class FoulkesRow:
    shape: IntegerPartition
    mult_km: int
    mult_mk: int

    @property
    def ok(self) -> bool:
        return self.mult_km <= self.mult_mk


@dataclass
class FoulkesReport:
    k: int
    m: int
    rows: List[FoulkesRow]

    @property
    def verdict(self) -> bool:
        return all(r.ok for r in self.rows)

    def support(self, which: str = "km") -> List[IntegerPartition]:
        attr = "mult_km" if which == "km" else "mult_mk"
        return [r.shape for r in self.rows if getattr(r, attr)]


def _uniform_partition(blocks: int, size: int) -> SetPartition:
    return SetPartition(tuple(p // size for p in range(blocks * size)))


def foulkes_check(k: int, m: int, budgets: Optional[Budgets] = None) -> FoulkesReport:
    """
    Compare Specht multiplicities of the trivial modules induced from ``k``
    blocks of size ``m`` and from ``m`` blocks of size ``k``.

    Raises:
        ValidationError: Unless ``0 < k < m``
        SizeLimitError: If ``k*m`` exceeds ``foulkes_max_n`` or a wreath product is too large
    """
    budgets = budgets or get_budgets()
    if not 0 < k < m:
        raise ValidationError(f"need 0 < k < m, got k={k}, m={m}")
    n = k * m
    if n > budgets.foulkes_max_n:
        raise SizeLimitError("foulkes_max_n", budgets.foulkes_max_n, n)
    rho_km = _uniform_partition(k, m)
    rho_mk = _uniform_partition(m, k)
    l_km = MultiPartition.trivial(set_partition_shape(rho_km).multiplicities())
    l_mk = MultiPartition.trivial(set_partition_shape(rho_mk).multiplicities())
    rows = [FoulkesRow(lam,
                       induced_multiplicity(lam, rho_km, l_km, budgets),
                       induced_multiplicity(lam, rho_mk, l_mk, budgets))
            for lam in partitions(n)]
    report = FoulkesReport(k, m, rows)
    log.info(f"Foulkes comparison k={k}, m={m}: {'OK' if report.verdict else 'FAIL'}")
    return report
