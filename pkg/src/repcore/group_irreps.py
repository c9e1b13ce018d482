"""
Numerical irreducible representations of an abstract finite group.

A random Hermitian element of the right regular algebra commutes with the
left regular representation; its eigenspaces are irreducible left
submodules. One eigenspace is kept per distinct character.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from ..permgroup.group import GroupTable
from ..utils.errors import NumericalError
from ..utils.logger import get_logger

log = get_logger(__name__)

_ROUND = 6


@dataclass
class GroupIrrep:
    """Unitary matrices indexed by table element, with the character."""
    index: int
    dimension: int
    matrices: List[np.ndarray]
    character: Tuple[complex, ...]

    def matrix(self, element: int) -> np.ndarray:
        return self.matrices[element]


def _left_regular(table: GroupTable) -> List[np.ndarray]:
    n = table.order
    mats = []
    for g in range(n):
        m = np.zeros((n, n))
        for h in range(n):
            m[table.multiply(g, h), h] = 1.0
        mats.append(m)
    return mats


def _right_regular(table: GroupTable) -> List[np.ndarray]:
    n = table.order
    mats = []
    for g in range(n):
        g_inv = table.inverse(g)
        m = np.zeros((n, n))
        for h in range(n):
            m[table.multiply(h, g_inv), h] = 1.0
        mats.append(m)
    return mats


def _character_key(character: Tuple[complex, ...], dimension: int) -> tuple:
    return (dimension,) + tuple((-round(z.real, _ROUND), -round(z.imag, _ROUND)) for z in character)


def group_irreps(table: GroupTable, seed: int = 0, tolerance: float = 1e-6) -> List[GroupIrrep]:
    """
    Irreducible unitary representations of a group table.

    Ordered by dimension, then by character (the trivial representation first).

    Raises:
        NumericalError: If the eigenspaces do not account for the group order
    """
    n = table.order
    rng = np.random.default_rng(seed)
    left = _left_regular(table)
    right = _right_regular(table)
    coeffs = rng.normal(size=n) + 1j * rng.normal(size=n)
    element = sum(c * r for c, r in zip(coeffs, right))
    hermitian = element + element.conj().T
    values, vectors = np.linalg.eigh(hermitian)

    groups: List[List[int]] = []
    for i, v in enumerate(values):
        if groups and abs(v - values[groups[-1][-1]]) <= tolerance * max(1.0, abs(v)):
            groups[-1].append(i)
        else:
            groups.append([i])

    found: Dict[tuple, GroupIrrep] = {}
    total = 0
    for members in groups:
        basis = vectors[:, members]
        mats = [basis.conj().T @ left[g] @ basis for g in range(n)]
        character = tuple(complex(np.trace(m)) for m in mats)
        dim = len(members)
        total += dim
        key = _character_key(character, dim)
        if key not in found:
            found[key] = GroupIrrep(-1, dim, mats, character)
    if total != n or sum(irrep.dimension ** 2 for irrep in found.values()) != n:
        raise NumericalError("eigenspace splitting failed to produce the irreducibles",
                             residual=abs(n - sum(i.dimension ** 2 for i in found.values())))
    ordered = [found[k] for k in sorted(found)]
    for i, irrep in enumerate(ordered):
        irrep.index = i
    log.debug(f"group of order {n}: irreducible dimensions {[i.dimension for i in ordered]}")
    return ordered
