"""
Integer partitions, multipartitions and class sizes.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterator, List, Sequence, Tuple

from ..permgroup.permutation import SetPartition
from ..utils.errors import ValidationError


@dataclass(frozen=True, order=True)
class IntegerPartition:
    """Weakly decreasing positive parts; the empty partition has size 0."""
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValidationError(f"{list(parts)} is not a partition")
        object.__setattr__(self, 'parts', parts)

    @classmethod
    def of(cls, *parts: int) -> "IntegerPartition":
        return cls(tuple(parts))

    @classmethod
    def sorted_from(cls, sizes: Sequence[int]) -> "IntegerPartition":
        return cls(tuple(sorted((s for s in sizes if s), reverse=True)))

    @classmethod
    def parse(cls, text: str) -> "IntegerPartition":
        """Parse ``"4,2,1"``; ``""`` and ``"0"`` give the empty partition."""
        stripped = text.strip()
        if stripped in ("", "0", "()"):
            return cls(())
        try:
            return cls(tuple(int(t) for t in stripped.split(",")))
        except ValueError as e:
            raise ValidationError(f"cannot parse partition {text!r}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def conjugate(self) -> "IntegerPartition":
        if not self.parts:
            return self
        return IntegerPartition(tuple(sum(1 for p in self.parts if p > j) for j in range(self.parts[0])))

    def hook_lengths(self) -> List[List[int]]:
        cols = self.conjugate().parts
        return [[(row - j - 1) + (cols[j] - i - 1) + 1 for j in range(row)]
                for i, row in enumerate(self.parts)]

    def multiplicities(self) -> Tuple[int, ...]:
        """``(k_1, ..., k_n)`` where ``k_i`` counts parts equal to ``i``."""
        counts = Counter(self.parts)
        return tuple(counts.get(i, 0) for i in range(1, self.size + 1))

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    result = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            result.append((first,) + rest)
    return tuple(result)


def partitions(n: int) -> List[IntegerPartition]:
    """All partitions of ``n`` in reverse lexicographic order, ``(n)`` first."""
    if n < 0:
        raise ValidationError("cannot partition a negative number")
    return [IntegerPartition(p) for p in _partitions(n, n)]


def class_size(cycle_type: IntegerPartition) -> int:
    """Number of permutations of the given cycle type."""
    n = cycle_type.size
    counts = Counter(cycle_type.parts)
    return factorial(n) // prod(length ** k * factorial(k) for length, k in counts.items())


def centralizer_order(cycle_type: IntegerPartition) -> int:
    counts = Counter(cycle_type.parts)
    return prod(length ** k * factorial(k) for length, k in counts.items())


def set_partition_shape(rho: SetPartition) -> IntegerPartition:
    return IntegerPartition(rho.shape())


def block_shape_multiplicities(mu: IntegerPartition) -> Tuple[int, ...]:
    return mu.multiplicities()


def consecutive_partition(shape: IntegerPartition) -> SetPartition:
    """The set partition of ``1..n`` into runs of consecutive points of the given sizes."""
    blocks = []
    start = 0
    for size in shape.parts:
        blocks.append(range(start, start + size))
        start += size
    return SetPartition.from_blocks(blocks, start)


@dataclass(frozen=True, order=True)
class MultiPartition:
    """
    A tuple ``(l_1, ..., l_n)`` with ``l_i`` a partition of ``k_i``, the number
    of blocks of size ``i``. Printed as ``"1:2,1;2:1"``, listing only sizes
    with ``k_i > 0``.
    """
    components: Tuple[IntegerPartition, ...]

    @classmethod
    def trivial(cls, k: Sequence[int]) -> "MultiPartition":
        return cls(tuple(IntegerPartition((ki,)) if ki else IntegerPartition(()) for ki in k))

    @classmethod
    def parse(cls, text: str, degree: int) -> "MultiPartition":
        """
        Parse ``"1:2,1;2:1"`` for a set of ``degree`` points.

        Raises:
            ValidationError: If a size is repeated or out of range
        """
        components = [IntegerPartition(())] * degree
        seen = set()
        for chunk in (c for c in text.split(";") if c.strip()):
            size_text, sep, shape_text = chunk.partition(":")
            if not sep:
                raise ValidationError(f"cannot parse multipartition component {chunk!r}")
            try:
                size = int(size_text)
            except ValueError as e:
                raise ValidationError(f"bad block size in {chunk!r}") from e
            if not 1 <= size <= degree or size in seen:
                raise ValidationError(f"block size {size} invalid or repeated")
            seen.add(size)
            components[size - 1] = IntegerPartition.parse(shape_text)
        return cls(tuple(components))

    @property
    def k(self) -> Tuple[int, ...]:
        return tuple(c.size for c in self.components)

    def matches(self, k: Sequence[int]) -> bool:
        return tuple(self.k) == tuple(k)

    def __str__(self) -> str:
        return ";".join(f"{i}:{c}" for i, c in enumerate(self.components, start=1) if c.size)


def multipartitions(k: Sequence[int]) -> Iterator[MultiPartition]:
    """All ``l`` with ``l_i`` a partition of ``k_i``, in product order of :func:`partitions`."""
    for combo in product(*(partitions(ki) for ki in k)):
        yield MultiPartition(tuple(combo))
