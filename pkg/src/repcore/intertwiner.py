"""
Multiplicities of simple modules through intertwiner spaces.

``Hom(V, L)`` is the solution space of ``T V(s) = L(s) T`` over the domain.
With ``vec`` taken row-major the equations for one element read
``(I (x) V(s)^T - L(s) (x) I) vec(T) = 0``. The solution space is kept as a
basis and cut down batch by batch until it vanishes or the domain runs out.
"""

from dataclasses import dataclass
from typing import Hashable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix, eye, zeros
from sympy.matrices.expressions.kronecker import kronecker_product

from ..config.yaml_loader import Budgets, get_budgets
from ..utils.errors import InconsistencyError, ValidationError
from ..utils.logger import get_logger
from .domain import random_elements
from .matrix_rep import EXACT, FLOAT, MatrixRep
from .simple_modules import SimpleModuleBuilder, SimpleModuleDescriptor

log = get_logger(__name__)

_FLOAT_BATCH = 16
_EXACT_BATCH = 4

Basis = Union[np.ndarray, Matrix]


def _batches(items: Sequence[Hashable], size: int):
    for start in range(0, len(items), size):
        yield items[start:start + size]


def _float_solutions(simple: MatrixRep, module: MatrixRep, elements: Sequence[Hashable],
                     basis: Optional[np.ndarray], tolerance: float) -> np.ndarray:
    a, b = simple.dimension, module.dimension
    left, right = simple.as_float(), module.as_float()
    id_a, id_b = np.eye(a), np.eye(b)
    current = np.eye(a * b, dtype=complex) if basis is None else basis
    for batch in _batches(list(elements), _FLOAT_BATCH):
        if current.shape[1] == 0:
            break
        rows = np.vstack([(np.kron(id_a, right.matrix(s).T) - np.kron(left.matrix(s), id_b)) @ current
                          for s in batch])
        _, singular, vh = np.linalg.svd(rows, full_matrices=False)
        cutoff = tolerance * max(1.0, singular[0] if singular.size else 0.0)
        rank = int(np.sum(singular > cutoff))
        current = current @ vh[rank:].conj().T
    return current


def _exact_solutions(simple: MatrixRep, module: MatrixRep, elements: Sequence[Hashable],
                     basis: Optional[Matrix]) -> Matrix:
    a, b = simple.dimension, module.dimension
    current = eye(a * b) if basis is None else basis
    for batch in _batches(list(elements), _EXACT_BATCH):
        if current.shape[1] == 0:
            break
        blocks = []
        for s in batch:
            v = Matrix(module.matrix(s).tolist())
            l = Matrix(simple.matrix(s).tolist())
            equations = Matrix(kronecker_product(eye(a), v.T)) - Matrix(kronecker_product(l, eye(b)))
            blocks.append(equations * current)
        null = Matrix.vstack(*blocks).nullspace()
        current = current * Matrix.hstack(*null) if null else zeros(a * b, 0)
    return current


def _solve(simple: MatrixRep, module: MatrixRep, elements: Sequence[Hashable], exact: bool,
           basis: Optional[Basis], budgets: Budgets) -> Basis:
    if exact:
        return _exact_solutions(simple, module, elements, basis)
    return _float_solutions(simple, module, elements, basis, budgets.rank_tolerance)


def multiplicity(simple: MatrixRep, module: MatrixRep, exact: Optional[bool] = None,
                 budgets: Optional[Budgets] = None, seed: int = 0) -> int:
    """
    Dimension of the space of intertwiners from ``module`` to ``simple``.

    For semisimple ``module`` this is the multiplicity of ``simple`` in it.
    When the domain is not the whole semigroup, random elements are added
    and the smaller solution space is kept.

    Args:
        simple: Simple representation
        module: Semisimple representation over the same domain
        exact: Rational arithmetic; defaults to exact when both inputs are exact
        budgets: Limits; ``random_check_count`` and ``rank_tolerance`` are used
        seed: Seed for the random elements

    Raises:
        ValidationError: If the domains differ
    """
    budgets = budgets or get_budgets()
    if not simple.same_domain(module):
        raise ValidationError(f"representations {simple.label!r} and {module.label!r} have different domains")
    if exact is None:
        exact = simple.mode == EXACT and module.mode == EXACT
    basis = _solve(simple, module, module.domain, exact, None, budgets)
    found = basis.shape[1]
    if not module.complete and module.group is not None and found:
        extra = random_elements(module.group, budgets.random_check_count, seed)
        refined = _solve(simple, module, extra, exact, basis, budgets).shape[1]
        if refined != found:
            log.warning(f"reduced domain left {found - refined} spurious intertwiners for {simple.label}")
            found = refined
    return found


@dataclass
class Decomposition:
    entries: List[Tuple[SimpleModuleDescriptor, int]]
    dimension: int

    @property
    def accounted(self) -> int:
        return sum(m * d.dimension for d, m in self.entries)

    def nonzero(self) -> List[Tuple[SimpleModuleDescriptor, int]]:
        return [(d, m) for d, m in self.entries if m]


def decompose(module: MatrixRep, builder: Optional[SimpleModuleBuilder] = None, exact: bool = False,
              budgets: Optional[Budgets] = None, seed: int = 0) -> Decomposition:
    """
    Multiplicity of every simple module in a semisimple representation.

    Raises:
        ValidationError: If the representation has no acting group
        InconsistencyError: If the multiplicities do not account for the dimension
    """
    budgets = budgets or get_budgets()
    if builder is None:
        if module.group is None:
            raise ValidationError("decompose needs a representation of a factorpower")
        builder = SimpleModuleBuilder(module.group, budgets, seed)
    mode = EXACT if exact else FLOAT
    entries = []
    for desc in builder.descriptors():
        simple = builder.build_simple(desc, mode, elements=module.domain, verify=False)
        simple.complete = module.complete
        entries.append((desc, multiplicity(simple, module, exact, budgets, seed)))
    result = Decomposition(entries, module.dimension)
    if result.accounted != module.dimension:
        raise InconsistencyError(
            f"multiplicities account for dimension {result.accounted}, representation has {module.dimension}")
    log.info(f"decomposed {module.label}: {[(str(d), m) for d, m in result.nonzero()]}")
    return result
