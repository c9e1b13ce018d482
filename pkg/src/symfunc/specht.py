"""
Young's natural representation: integer matrices on standard polytabloids.
"""

from functools import lru_cache
from itertools import permutations, product
from typing import Dict, List, Optional, Tuple

import numpy as np
from sympy import Matrix

from ..config.yaml_loader import Budgets, get_budgets
from ..permgroup.permutation import Permutation
from ..utils.errors import SizeLimitError, ValidationError
from ..utils.logger import get_logger
from .partitions import IntegerPartition

log = get_logger(__name__)

Tableau = Tuple[Tuple[int, ...], ...]
Tabloid = Tuple[int, ...]


def standard_tableaux(shape: IntegerPartition) -> List[Tableau]:
    """Standard tableaux with entries ``0..n-1``, ordered by their column word."""
    n = shape.size
    rows: List[List[int]] = [[] for _ in shape.parts]
    found: List[Tableau] = []

    def place(value: int) -> None:
        if value == n:
            found.append(tuple(tuple(r) for r in rows))
            return
        for i, row in enumerate(rows):
            if len(row) < shape.parts[i] and (i == 0 or len(rows[i - 1]) > len(row)):
                row.append(value)
                place(value + 1)
                row.pop()

    place(0)
    return found


def _row_word(tableau: Tableau, n: int) -> Tabloid:
    """Row index of each value: the tabloid of the tableau."""
    word = [0] * n
    for i, row in enumerate(tableau):
        for v in row:
            word[v] = i
    return tuple(word)


def _column_group(tableau: Tableau) -> List[Tuple[Dict[int, int], int]]:
    """Signed permutations of values preserving every column, as value maps."""
    columns = [tuple(row[j] for row in tableau if len(row) > j) for j in range(len(tableau[0]))] if tableau else []
    per_column = []
    for col in columns:
        options = []
        for perm in _signed_permutations(len(col)):
            images, sign = perm
            options.append(({col[i]: col[images[i]] for i in range(len(col))}, sign))
        per_column.append(options)
    group = []
    for choice in product(*per_column):
        mapping: Dict[int, int] = {}
        sign = 1
        for part, s in choice:
            mapping.update(part)
            sign *= s
        group.append((mapping, sign))
    return group


@lru_cache(maxsize=None)
def _signed_permutations(size: int) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    out = []
    for images in permutations(range(size)):
        out.append((images, Permutation(images).sign()))
    return tuple(out)


def _polytabloid(tableau: Tableau, n: int, columns) -> Dict[Tabloid, int]:
    """Expansion of the polytabloid of ``tableau`` in tabloids."""
    rows = _row_word(tableau, n)
    expansion: Dict[Tabloid, int] = {}
    for mapping, sign in columns:
        word = [0] * n
        for v in range(n):
            word[mapping.get(v, v)] = rows[v]
        key = tuple(word)
        expansion[key] = expansion.get(key, 0) + sign
    return expansion


class SpechtRepresentation:
    """
    Integer matrices of the Specht module of ``shape``.

    Column ``t`` of the matrix of ``g`` holds the coordinates of ``g`` applied to
    the standard polytabloid ``e_t``.
    """

    def __init__(self, shape: IntegerPartition, budgets: Optional[Budgets] = None):
        budgets = budgets or get_budgets()
        if shape.size > budgets.specht_max_n:
            raise SizeLimitError("specht_max_n", budgets.specht_max_n, shape.size,
                                 hint="use characters from mn_character instead")
        self.shape = shape
        self.degree = shape.size
        self.basis = standard_tableaux(shape)
        self.dimension = len(self.basis)
        self._standard_rows = [_row_word(t, self.degree) for t in self.basis]
        self._position = {w: i for i, w in enumerate(self._standard_rows)}
        self._transition_inverse = self._build_transition_inverse()
        self._cache: Dict[Permutation, np.ndarray] = {}
        self.generators = {j: self._adjacent(j) for j in range(self.degree - 1)}
        log.debug(f"Specht module {shape}: dimension {self.dimension}")

    def _build_transition_inverse(self) -> np.ndarray:
        if self.degree == 0:
            return np.eye(1, dtype=np.int64)
        size = self.dimension
        transition = [[0] * size for _ in range(size)]
        for col, tableau in enumerate(self.basis):
            for tabloid, coeff in self._expand(tableau).items():
                row = self._position.get(tabloid)
                if row is not None:
                    transition[row][col] = coeff
        inverse = Matrix(transition).inv()
        if any(not x.is_integer for x in inverse):
            raise ValidationError(f"transition matrix of {self.shape} is not unimodular")
        return np.array(inverse.tolist(), dtype=np.int64)

    def _expand(self, tableau: Tableau) -> Dict[Tabloid, int]:
        columns = _column_group(tableau)
        return _polytabloid(tableau, self.degree, columns)

    def _adjacent(self, j: int) -> np.ndarray:
        """Matrix of the transposition of ``j`` and ``j+1`` (0-based)."""
        swap = {j: j + 1, j + 1: j}
        images = np.zeros((self.dimension, self.dimension), dtype=np.int64)
        for col, tableau in enumerate(self.basis):
            moved = tuple(tuple(swap.get(v, v) for v in row) for row in tableau)
            vector = np.zeros(self.dimension, dtype=np.int64)
            for tabloid, coeff in self._expand(moved).items():
                row = self._position.get(tabloid)
                if row is not None:
                    vector[row] += coeff
            images[:, col] = self._transition_inverse @ vector
        return images

    def matrix(self, perm: Permutation) -> np.ndarray:
        """
        Matrix of an arbitrary permutation as a product of adjacent transpositions.

        Raises:
            ValidationError: If the permutation has the wrong degree
        """
        if perm.degree != self.degree:
            raise ValidationError(f"permutation of degree {perm.degree} for a Specht module of degree {self.degree}")
        if self.degree <= 1:
            return np.eye(1, dtype=np.int64)
        cached = self._cache.get(perm)
        if cached is not None:
            return cached
        images = list(perm.images)
        word = []
        # peel descents from the right: perm = perm' * s_j
        while True:
            descent = next((j for j in range(self.degree - 1) if images[j] > images[j + 1]), None)
            if descent is None:
                break
            images[descent], images[descent + 1] = images[descent + 1], images[descent]
            word.append(descent)
        result = np.eye(self.dimension, dtype=np.int64)
        for j in reversed(word):
            result = result @ self.generators[j]
        self._cache[perm] = result
        return result

    def character(self, perm: Permutation) -> int:
        return int(np.trace(self.matrix(perm)))


def specht_matrices(shape: IntegerPartition, budgets: Optional[Budgets] = None) -> SpechtRepresentation:
    """Cached Young natural representation of ``shape`` under the given or active budgets."""
    return _cached_specht(shape, budgets or get_budgets())


@lru_cache(maxsize=64)
def _cached_specht(shape: IntegerPartition, budgets: Budgets) -> SpechtRepresentation:
    return SpechtRepresentation(shape, budgets)
