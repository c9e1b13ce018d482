"""
Enumeration of every element of FP+(G, M).

The class of ``A | B`` has columns ``A_m | B_m``, so all classes of non-empty
subsets are reached by repeatedly adding single elements to known classes.
Each layer of this closure corresponds to subsets one element larger, which
gives the same set as sweeping all ``2^|G| - 1`` subsets.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from ..config.yaml_loader import Budgets, get_budgets
from ..permgroup.group import PermutationGroup
from ..utils.errors import InconsistencyError, SizeLimitError
from ..utils.logger import get_logger
from .element import FpElement, _check_degree, identity_class, star, unit_class

log = get_logger(__name__)


def _expand_chunk(args: Tuple[List[int], Tuple[int, ...]]) -> Set[int]:
    chunk, singles = args
    return {key | s for key in chunk for s in singles}


def _chunks(items: List[int], count: int) -> Iterable[List[int]]:
    size = max(1, -(-len(items) // count))
    for start in range(0, len(items), size):
        yield items[start:start + size]


def enumerate_fp(group: PermutationGroup, budgets: Optional[Budgets] = None,
                 workers: int = 1, progress: bool = False) -> List[FpElement]:
    """
    All elements of FP+(G, M), sorted by column array.

    Args:
        group: The acting group
        budgets: Limits; ``enumerate_cap`` bounds ``|G|`` and
            ``closure_check_limit`` bounds the re-check of closure
        workers: Processes used to expand each layer
        progress: Show a progress bar per layer

    Returns:
        Sorted list of distinct elements

    Raises:
        SizeLimitError: If ``|G|`` exceeds ``enumerate_cap``
        InconsistencyError: If the result is not closed under product and star
    """
    budgets = budgets or get_budgets()
    if group.order > budgets.enumerate_cap:
        raise SizeLimitError("enumerate_cap", budgets.enumerate_cap, group.order,
                             hint="use the idempotent and character paths instead")

    singles = tuple(sorted({unit_class(group, g).key for g in group.elements}))
    known: Set[int] = set(singles)
    frontier = list(singles)
    layers = tqdm(total=group.order, desc="subset sizes", disable=not progress)
    layers.update(1)
    executor = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        while frontier:
            if executor is not None:
                parts = executor.map(_expand_chunk, [(c, singles) for c in _chunks(frontier, workers)])
                reached = set().union(*parts)
            else:
                reached = _expand_chunk((frontier, singles))
            frontier = sorted(reached - known)
            known.update(frontier)
            layers.update(1)
    finally:
        layers.close()
        if executor is not None:
            executor.shutdown()

    elements = sorted(FpElement.from_key(group.degree, key) for key in known)
    log.info(f"FP+ of a group of order {group.order}: {len(elements)} elements")
    if len(elements) <= budgets.closure_check_limit:
        _verify_closure(group, elements)
    return elements


def _verify_closure(group: PermutationGroup, elements: List[FpElement]) -> None:
    members = set(elements)
    for a in elements:
        if star(group, a) not in members:
            raise InconsistencyError(f"star of {a} left the enumeration")
        for b in elements:
            if a * b not in members:
                raise InconsistencyError(f"product {a} * {b} left the enumeration")


def idempotent_census(group: PermutationGroup, elements: Iterable[FpElement]) -> List[FpElement]:
    """Elements with ``e * e = e``, found by direct squaring."""
    found = []
    for e in elements:
        _check_degree(group, e)
        if e * e == e:
            found.append(e)
    return found


def unit_census(group: PermutationGroup, elements: Sequence[FpElement]) -> List[FpElement]:
    """Elements with a two-sided inverse inside ``elements``."""
    one = identity_class(group)
    return [a for a in elements if any(a * b == one and b * a == one for b in elements)]
