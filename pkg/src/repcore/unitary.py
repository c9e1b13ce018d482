"""
Invariant Hermitian forms and the duality check for simple modules.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config.yaml_loader import Budgets, get_budgets
from ..factorpower.element import star, unit_class
from ..factorpower.structure import DClassInfo, idempotents
from ..utils.errors import InconsistencyError, NumericalError, ValidationError
from ..utils.logger import get_logger
from .matrix_rep import EXACT, MatrixRep, dual

log = get_logger(__name__)


@dataclass
class HermitianForm:
    gram: np.ndarray
    residual: float
    min_eigenvalue: float

    def pair(self, v: np.ndarray, w: np.ndarray) -> complex:
        return complex(np.conj(v) @ self.gram @ w)


def _apex(rep: MatrixRep, dclass: Optional[DClassInfo]) -> DClassInfo:
    chosen = dclass if dclass is not None else rep.apex
    if chosen is None:
        raise ValidationError(f"representation {rep.label!r} carries no apex D-class")
    return chosen


def unitarize(rep: MatrixRep, dclass: Optional[DClassInfo] = None,
              budgets: Optional[Budgets] = None) -> HermitianForm:
    """
    Positive definite form for which ``star`` is the adjoint.

    The carrier splits as the sum of the images ``V_i`` of the apex
    idempotents. A form on ``V_1`` averaged over ``N_G(H)/H`` is transported
    to each ``V_i`` by the unit of ``g_i``; distinct ``V_i`` are orthogonal.

    Raises:
        InconsistencyError: If the images of the idempotents do not fill the carrier
        NumericalError: If the form is not positive definite or not invariant
    """
    budgets = budgets or get_budgets()
    d = _apex(rep, dclass)
    group = d.group
    tau = budgets.tolerance
    floating = rep.as_float()
    projections = [floating.matrix(e.element) for e in d.idempotents]
    ranks = [int(np.linalg.matrix_rank(p, tol=budgets.rank_tolerance)) for p in projections]
    if sum(ranks) != rep.dimension:
        raise InconsistencyError(f"idempotent images have ranks {ranks}, carrier dimension {rep.dimension}")

    average = np.zeros((rep.dimension, rep.dimension), dtype=complex)
    for g in d.maximal_subgroup.labels:
        m = floating.matrix(unit_class(group, g))
        average += m.conj().T @ m
    gram = np.zeros_like(average)
    for g, p in zip(d.conjugators, projections):
        moved = floating.matrix(unit_class(group, g)) @ p
        gram += moved.conj().T @ average @ moved
    gram = (gram + gram.conj().T) / 2
    gram /= np.trace(gram).real / rep.dimension

    min_eigenvalue = float(np.linalg.eigvalsh(gram).min())
    if min_eigenvalue <= tau:
        raise NumericalError(f"form on {rep.label} is not positive definite", residual=abs(min_eigenvalue))
    residual = 0.0
    for s in rep.domain:
        diff = floating.matrix(s).conj().T @ gram - gram @ floating.matrix(star(group, s))
        residual = max(residual, float(np.max(np.abs(diff), initial=0.0)))
    if residual > tau:
        raise NumericalError(f"form on {rep.label} is not invariant", residual=residual)
    log.debug(f"unitarized {rep.label}: residual {residual:.2e}, min eigenvalue {min_eigenvalue:.3f}")
    return HermitianForm(gram, residual, min_eigenvalue)


def dual_check(rep: MatrixRep, dclass: Optional[DClassInfo] = None,
               budgets: Optional[Budgets] = None) -> bool:
    """
    Compare a simple module with its dual ``s -> rep(star(s))^T``.

    The same idempotents must act by zero on both, and the traces must agree on
    the maximal subgroup at the apex.
    """
    budgets = budgets or get_budgets()
    d = _apex(rep, dclass)
    group = d.group
    other = dual(rep)
    exact = rep.mode == EXACT

    def is_zero(m: np.ndarray) -> bool:
        return bool(np.all(m == 0)) if exact else float(np.max(np.abs(m), initial=0.0)) <= budgets.tolerance

    for e in idempotents(group):
        if star(group, e.element) != e.element:
            log.warning(f"idempotent at {e.partition} is not fixed by the involution")
            return False
        if is_zero(rep.matrix(e.element)) != is_zero(other.matrix(e.element)):
            return False

    eps = d.apex.element
    for g in d.normalizer.elements:
        x = eps.left_translate(g)
        a, b = rep.trace(x), other.trace(x)
        if (a != b) if exact else abs(complex(a) - complex(b)) > budgets.rank_tolerance:
            log.info(f"{rep.label}: traces differ at the unit of {g}")
            return False
    return True
