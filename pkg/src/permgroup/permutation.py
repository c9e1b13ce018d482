"""
Permutations and set partitions of a finite point set.

Points are stored 0-based internally and printed 1-based. Composition follows
the functional convention ``(s * t)(i) = s(t(i))``.
"""

import re
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from ..utils.errors import ValidationError

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


@dataclass(frozen=True, order=True)
class Permutation:
    """A bijection of ``{0, ..., n-1}`` given by its image sequence."""
    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(len(images))):
            raise ValidationError(f"images {list(images)} are not a bijection of 0..{len(images) - 1}")
        object.__setattr__(self, 'images', images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_one_line(cls, images: Sequence[int]) -> "Permutation":
        """Build from a 1-based one-line image list, e.g. ``[2, 1, 3]``."""
        return cls(tuple(i - 1 for i in images))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """
        Build from 1-based cycles.

        Args:
            cycles: Cycles such as ``[(1, 2), (3, 4)]``
            degree: Number of points

        Returns:
            The product of the (disjoint) cycles

        Raises:
            ValidationError: If a point is out of range or repeated
        """
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            points = [p - 1 for p in cycle]
            for p in points:
                if not 0 <= p < degree:
                    raise ValidationError(f"point {p + 1} outside 1..{degree}")
                if p in seen:
                    raise ValidationError(f"point {p + 1} repeated in cycle notation")
                seen.add(p)
            for a, b in zip(points, points[1:] + points[:1]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int) -> "Permutation":
        """Parse cycle notation like ``"(1 2)(3,4)"``; ``"()"`` is the identity."""
        stripped = text.strip()
        if not stripped:
            raise ValidationError("empty permutation text")
        cycles = _CYCLE_PATTERN.findall(stripped)
        if _CYCLE_PATTERN.sub("", stripped).strip():
            raise ValidationError(f"cannot parse permutation {text!r}")
        parsed = []
        for body in cycles:
            tokens = [t for t in re.split(r"[\s,]+", body.strip()) if t]
            try:
                parsed.append([int(t) for t in tokens])
            except ValueError as e:
                raise ValidationError(f"non-integer point in {text!r}") from e
        return cls.from_cycles(parsed, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.degree != self.degree:
            raise ValidationError(f"degree mismatch: {self.degree} vs {other.degree}")
        mine = self.images
        return Permutation(tuple(mine[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed: bool = False) -> List[Tuple[int, ...]]:
        """Disjoint cycles (0-based), each starting at its smallest point."""
        seen = [False] * self.degree
        result = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cycle = [start]
            seen[start] = True
            nxt = self.images[start]
            while nxt != start:
                cycle.append(nxt)
                seen[nxt] = True
                nxt = self.images[nxt]
            if len(cycle) > 1 or include_fixed:
                result.append(tuple(cycle))
        return result

    def cycle_type(self) -> Tuple[int, ...]:
        """Cycle lengths in weakly decreasing order, fixed points included."""
        return tuple(sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True))

    def order(self) -> int:
        result = 1
        for length in self.cycle_type():
            result = result * length // gcd(result, length)
        return result

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def one_line(self) -> str:
        """1-based one-line notation; digits are comma separated above 9 points."""
        sep = "" if self.degree <= 9 else ","
        return sep.join(str(i + 1) for i in self.images)

    def __str__(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p + 1) for p in c) + ")" for c in cycles)

    def __repr__(self) -> str:
        return f"Permutation({self})"


@dataclass(frozen=True, order=True)
class SetPartition:
    """
    An equivalence relation on ``{0, ..., n-1}``.

    ``block_of[i]`` is the block id of point ``i``; ids are numbered 0, 1, ...
    in order of the smallest element of each block, which makes the encoding
    unique.
    """
    block_of: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'block_of', _normalize(self.block_of))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], degree: int) -> "SetPartition":
        """Build from 0-based blocks that must cover every point exactly once."""
        block_of = [-1] * degree
        for index, block in enumerate(blocks):
            for p in block:
                if not 0 <= p < degree or block_of[p] != -1:
                    raise ValidationError(f"blocks do not partition {degree} points")
                block_of[p] = index
        if -1 in block_of:
            raise ValidationError(f"blocks do not cover all {degree} points")
        return cls(tuple(block_of))

    @classmethod
    def discrete(cls, degree: int) -> "SetPartition":
        return cls(tuple(range(degree)))

    @classmethod
    def full(cls, degree: int) -> "SetPartition":
        return cls((0,) * degree)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse ``"{1,2}{3}"`` (1-based points)."""
        bodies = re.findall(r"\{([^{}]*)\}", text)
        if not bodies or re.sub(r"\{[^{}]*\}", "", text).strip():
            raise ValidationError(f"cannot parse set partition {text!r}")
        try:
            blocks = [[int(t) - 1 for t in re.split(r"[\s,]+", b.strip()) if t] for b in bodies]
        except ValueError as e:
            raise ValidationError(f"non-integer point in {text!r}") from e
        degree = sum(len(b) for b in blocks)
        return cls.from_blocks(blocks, degree)

    @property
    def degree(self) -> int:
        return len(self.block_of)

    @property
    def num_blocks(self) -> int:
        return max(self.block_of) + 1 if self.block_of else 0

    def blocks(self) -> Tuple[Tuple[int, ...], ...]:
        grouped: List[List[int]] = [[] for _ in range(self.num_blocks)]
        for point, block in enumerate(self.block_of):
            grouped[block].append(point)
        return tuple(tuple(b) for b in grouped)

    def shape(self) -> Tuple[int, ...]:
        """Block sizes in weakly decreasing order."""
        return tuple(sorted((len(b) for b in self.blocks()), reverse=True))

    def apply(self, perm: Permutation) -> "SetPartition":
        """The partition ``{perm(B)}`` obtained by moving every block."""
        moved = [0] * self.degree
        for point, block in enumerate(self.block_of):
            moved[perm(point)] = block
        return SetPartition(tuple(moved))

    def join(self, other: "SetPartition") -> "SetPartition":
        """Finest partition coarser than both."""
        if other.degree != self.degree:
            raise ValidationError("cannot join partitions of different degrees")
        finder = DisjointSet(self.degree)
        for relation in (self, other):
            first: Dict[int, int] = {}
            for point, block in enumerate(relation.block_of):
                if block in first:
                    finder.union(first[block], point)
                else:
                    first[block] = point
        return finder.partition()

    def refines(self, other: "SetPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        return self.join(other) == other

    def __str__(self) -> str:
        return "".join("{" + ",".join(str(p + 1) for p in b) + "}" for b in self.blocks())


class DisjointSet:
    """Union-find with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        return True

    def partition(self) -> SetPartition:
        return SetPartition(tuple(self.find(i) for i in range(len(self.parent))))


def _normalize(labels: Sequence[int]) -> Tuple[int, ...]:
    renumber: Dict[int, int] = {}
    out = []
    for label in labels:
        if label not in renumber:
            renumber[label] = len(renumber)
        out.append(renumber[label])
    return tuple(out)


def set_partitions(degree: int) -> Iterator[SetPartition]:
    """All set partitions of ``degree`` points, as restricted growth strings."""
    if degree == 0:
        yield SetPartition(())
        return
    word = [0] * degree
    maxima = [0] * degree

    def extend(position: int) -> Iterator[SetPartition]:
        if position == degree:
            yield SetPartition(tuple(word))
            return
        for label in range(maxima[position - 1] + 2):
            word[position] = label
            maxima[position] = max(maxima[position - 1], label)
            yield from extend(position + 1)

    yield from extend(1)
