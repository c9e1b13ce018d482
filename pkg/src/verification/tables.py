"""
Cayley tables of small finite semigroups for exhaustive law checks.
"""

from typing import Hashable, List, Optional, Sequence, Tuple

import numpy as np


def cayley_table(elements: Sequence[Hashable]) -> np.ndarray:
    """
    Index table of a product closed on ``elements``.

    Args:
        elements: Distinct elements supporting ``*``

    Returns:
        Integer array with ``table[i, j]`` the index of ``elements[i] * elements[j]``
    """
    index = {a: i for i, a in enumerate(elements)}
    return np.array([[index[a * b] for b in elements] for a in elements], dtype=np.int64)


def nonassociative_triple(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """First index triple with ``(ab)c != a(bc)``, or ``None``."""
    size = table.shape[0]
    left = table[table]
    right = table[np.arange(size)[:, None, None], table[None, :, :]]
    bad = np.argwhere(left != right)
    if len(bad):
        a, b, c = bad[0]
        return int(a), int(b), int(c)
    return None


def idempotent_indices(table: np.ndarray) -> List[int]:
    return [int(i) for i in np.flatnonzero(np.diagonal(table) == np.arange(table.shape[0]))]


def inverse_partners(table: np.ndarray, a: int) -> List[int]:
    """All ``b`` with ``aba = a`` and ``bab = b``."""
    size = table.shape[0]
    every = np.arange(size)
    aba = table[table[a], a]
    bab = table[table[:, a], every]
    return [int(b) for b in np.flatnonzero((aba == a) & (bab == every))]
