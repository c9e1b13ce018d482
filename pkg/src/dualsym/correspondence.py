"""
Shape-by-shape comparison of the regular D-classes of FP+(S_n) and F*_n.
"""

from dataclasses import dataclass
from math import prod
from typing import Dict, List, Optional

from ..config.yaml_loader import Budgets, get_budgets
from ..factorpower.structure import dclasses
from ..permgroup.group import symmetric_group, tables_isomorphic
from ..symfunc.characters import specht_dim
from ..symfunc.partitions import IntegerPartition, multipartitions
from ..utils.errors import SizeLimitError
from ..utils.logger import get_logger
from .fstar import FStarElement, fstar_enumerate, hclass_table

log = get_logger(__name__)


@dataclass
class CorrespondenceRow:
    shape: IntegerPartition
    fp_idempotents: int
    fstar_idempotents: int
    fp_group_order: int
    fstar_group_order: int
    groups_isomorphic: bool
    simple_dims: List[int]

    @property
    def ok(self) -> bool:
        return (self.fp_idempotents == self.fstar_idempotents
                and self.fp_group_order == self.fstar_group_order
                and self.groups_isomorphic)


@dataclass
class CorrespondenceReport:
    n: int
    rows: List[CorrespondenceRow]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)


def simple_dimensions(shape: IntegerPartition, idempotent_count: int) -> List[int]:
    """``n_lambda * dim X`` for every simple ``X`` of ``prod S_k_i``, sorted."""
    k = shape.multiplicities()
    return sorted(idempotent_count * prod(specht_dim(c) for c in l.components)
                  for l in multipartitions(k))


def correspondence_check(n: int, budgets: Optional[Budgets] = None) -> CorrespondenceReport:
    """
    Match D-classes of FP+(S_n) and F*_n by shape.

    Raises:
        SizeLimitError: If ``n`` exceeds ``correspondence_max_n``
    """
    budgets = budgets or get_budgets()
    if n > budgets.correspondence_max_n:
        raise SizeLimitError("correspondence_max_n", budgets.correspondence_max_n, n)
    group = symmetric_group(n, budgets)
    fp_side = {d.shape: d for d in dclasses(group)}

    elements = fstar_enumerate(n, budgets)
    idems: Dict[IntegerPartition, List[FStarElement]] = {}
    for e in elements:
        if e * e == e:
            idems.setdefault(IntegerPartition(e.rho.shape()), []).append(e)

    rows = []
    for shape in sorted(set(fp_side) | set(idems), reverse=True):
        d = fp_side.get(shape)
        fstar_ids = idems.get(shape, [])
        fstar_table = hclass_table(fstar_ids[0], elements) if fstar_ids else None
        iso = d is not None and fstar_table is not None and tables_isomorphic(d.maximal_subgroup, fstar_table)
        rows.append(CorrespondenceRow(
            shape=shape,
            fp_idempotents=d.k if d else 0,
            fstar_idempotents=len(fstar_ids),
            fp_group_order=d.maximal_subgroup.order if d else 0,
            fstar_group_order=fstar_table.order if fstar_table else 0,
            groups_isomorphic=iso,
            simple_dims=simple_dimensions(shape, d.k) if d else [],
        ))
    report = CorrespondenceReport(n, rows)
    log.info(f"correspondence for n={n}: {'OK' if report.ok else 'FAIL'}")
    return report
