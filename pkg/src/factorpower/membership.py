"""
Membership of a binary relation in FP+(G, M).
"""

from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from ..permgroup.group import PermutationGroup
from ..utils.errors import ValidationError
from ..utils.logger import get_logger
from .element import FpElement, canonical_from_subset, saturate

log = get_logger(__name__)


def _has_perfect_matching(allowed: np.ndarray) -> bool:
    if allowed.shape[0] == 0:
        return True
    matching = maximum_bipartite_matching(csr_matrix(allowed.astype(np.int8)), perm_type='column')
    return bool(np.all(matching >= 0))


def _every_cell_extends(allowed: np.ndarray) -> bool:
    """Each true cell lies on a perfect matching inside the relation."""
    n = allowed.shape[0]
    for m in range(n):
        for x in range(n):
            if not allowed[m, x]:
                continue
            rest = np.delete(np.delete(allowed, m, axis=0), x, axis=1)
            if not _has_perfect_matching(rest):
                return False
    return True


def is_member(group: PermutationGroup, relation: Sequence[Sequence[bool]]) -> bool:
    """
    Decide whether a relation is the column array of some class.

    Row ``m`` of ``relation`` is the characteristic vector of ``A_m``. When the
    group is the full symmetric group, a matching criterion replaces the
    saturation test.

    Raises:
        ValidationError: If the relation is not ``degree x degree``
    """
    allowed = np.asarray(relation, dtype=bool)
    n = group.degree
    if allowed.shape != (n, n):
        raise ValidationError(f"relation of shape {allowed.shape} for a group of degree {n}")
    if not allowed.any(axis=1).all():
        return False
    if group.is_symmetric():
        return _every_cell_extends(allowed)
    log.debug("group is not symmetric; using the saturation test")
    element = FpElement.from_sets([np.flatnonzero(row).tolist() for row in allowed])
    members = saturate(group, element)
    return bool(members) and canonical_from_subset(group, members) == element
