"""
Element domains on which representations and intertwiners are evaluated.
"""

from dataclasses import dataclass
from typing import List, Optional

import numpy as np

from ..config.yaml_loader import Budgets, get_budgets
from ..factorpower.element import FpElement, canonical_from_subset, unit_class
from ..factorpower.enumeration import enumerate_fp
from ..factorpower.structure import idempotents
from ..permgroup.group import PermutationGroup
from ..utils.logger import get_logger

log = get_logger(__name__)


@dataclass
class SemigroupDomain:
    elements: List[FpElement]
    complete: bool


def semigroup_domain(group: PermutationGroup, budgets: Optional[Budgets] = None) -> SemigroupDomain:
    """
    The whole of FP+ for small groups; otherwise units, idempotents and all
    products of two of them.
    """
    budgets = budgets or get_budgets()
    if group.order <= budgets.exact_domain_limit:
        return SemigroupDomain(enumerate_fp(group, budgets), True)
    base = [unit_class(group, g) for g in group.elements]
    base += [e.element for e in idempotents(group)]
    reached = set(base)
    reached.update(a * b for a in base for b in base)
    log.info(f"reduced domain of {len(reached)} elements for a group of order {group.order}")
    return SemigroupDomain(sorted(reached), False)


def random_elements(group: PermutationGroup, count: int, seed: int = 0) -> List[FpElement]:
    """Classes of uniformly random non-empty subsets."""
    rng = np.random.default_rng(seed)
    found = []
    for _ in range(count):
        chosen = rng.random(group.order) < 0.5
        if not chosen.any():
            chosen[rng.integers(group.order)] = True
        found.append(canonical_from_subset(group, [g for g, c in zip(group.elements, chosen) if c]))
    return found
