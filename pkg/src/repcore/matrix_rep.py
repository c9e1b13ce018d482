"""
Matrix representations over an explicit element domain.

Exact representations hold numpy object arrays of Python ints or sympy
Rationals; floating ones hold complex128 arrays.
"""

import json
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Sequence

import numpy as np
from sympy import Rational

from ..factorpower.element import star
from ..permgroup.group import PermutationGroup
from ..utils.errors import ValidationError

EXACT = "exact"
FLOAT = "float"


@dataclass
class MatrixRep:
    """
    A map from domain elements to square matrices.

    Matrices are produced by ``factory`` on demand and cached; ``domain`` lists
    the elements on which the representation is declared. ``complete`` marks a
    domain that is the whole semigroup.
    """
    dimension: int
    domain: List[Hashable]
    factory: Callable[[Hashable], np.ndarray]
    mode: str = EXACT
    label: str = ""
    group: Optional[PermutationGroup] = None
    complete: bool = True
    apex: Any = None
    descriptor: Any = None
    _cache: Dict[Hashable, np.ndarray] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if self.mode not in (EXACT, FLOAT):
            raise ValidationError(f"unknown arithmetic mode {self.mode!r}")

    def matrix(self, element: Hashable) -> np.ndarray:
        cached = self._cache.get(element)
        if cached is None:
            cached = self.factory(element)
            if self.mode == FLOAT:
                cached = np.asarray(cached, dtype=complex)
            self._cache[element] = cached
        return cached

    def __call__(self, element: Hashable) -> np.ndarray:
        return self.matrix(element)

    def trace(self, element: Hashable) -> Any:
        m = self.matrix(element)
        return sum(m[i, i] for i in range(self.dimension)) if self.mode == EXACT else complex(np.trace(m))

    def as_float(self) -> "MatrixRep":
        if self.mode == FLOAT:
            return self
        base = self
        return MatrixRep(self.dimension, self.domain, lambda s: _to_complex(base.matrix(s)),
                         FLOAT, self.label, self.group, self.complete, self.apex, self.descriptor)

    def same_domain(self, other: "MatrixRep") -> bool:
        return set(self.domain) == set(other.domain)

    def is_multiplicative(self, pairs: Sequence[tuple], product: Callable[[Any, Any], Any],
                          tolerance: float = 1e-9) -> bool:
        """Check ``rep(a*b) == rep(a) rep(b)`` on the given pairs."""
        for a, b in pairs:
            lhs = self.matrix(product(a, b))
            rhs = self.matrix(a).dot(self.matrix(b))
            if not _close(lhs, rhs, self.mode, tolerance):
                return False
        return True


def _to_complex(m: np.ndarray) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in m.tolist()], dtype=complex).reshape(m.shape)


def _close(a: np.ndarray, b: np.ndarray, mode: str, tolerance: float) -> bool:
    if mode == EXACT:
        return bool(np.all(a == b))
    return bool(np.max(np.abs(a - b), initial=0.0) <= tolerance)


def _combined_mode(a: MatrixRep, b: MatrixRep) -> str:
    return EXACT if a.mode == EXACT and b.mode == EXACT else FLOAT


def _check_domains(a: MatrixRep, b: MatrixRep) -> None:
    if not a.same_domain(b):
        raise ValidationError(f"representations {a.label!r} and {b.label!r} have different domains")


def tensor(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    """Inner tensor product: ``s -> kron(a(s), b(s))``."""
    _check_domains(a, b)
    mode = _combined_mode(a, b)
    left, right = (a, b) if mode == EXACT else (a.as_float(), b.as_float())
    return MatrixRep(a.dimension * b.dimension, list(a.domain),
                     lambda s: np.kron(left.matrix(s), right.matrix(s)),
                     mode, f"({a.label})x({b.label})", a.group, a.complete and b.complete)


def direct_sum(a: MatrixRep, b: MatrixRep) -> MatrixRep:
    _check_domains(a, b)
    mode = _combined_mode(a, b)
    left, right = (a, b) if mode == EXACT else (a.as_float(), b.as_float())
    dtype = object if mode == EXACT else complex

    def block(s):
        out = np.zeros((a.dimension + b.dimension,) * 2, dtype=dtype)
        out[:a.dimension, :a.dimension] = left.matrix(s)
        out[a.dimension:, a.dimension:] = right.matrix(s)
        return out

    return MatrixRep(a.dimension + b.dimension, list(a.domain), block, mode,
                     f"({a.label})+({b.label})", a.group, a.complete and b.complete)


def dual(rep: MatrixRep) -> MatrixRep:
    """The representation ``s -> rep(star(s))^T`` of a factorpower."""
    if rep.group is None:
        raise ValidationError("dual needs the acting group to evaluate the involution")
    group = rep.group
    return MatrixRep(rep.dimension, list(rep.domain),
                     lambda s: rep.matrix(star(group, s)).T.copy(),
                     rep.mode, f"dual({rep.label})", group, rep.complete, rep.apex)


def _entry_to_json(x: Any, mode: str) -> Any:
    if mode == FLOAT:
        z = complex(x)
        return [z.real, z.imag]
    r = Rational(x)
    return f"{r.p}/{r.q}"


def rep_to_json(rep: MatrixRep, elements: Optional[Sequence[Hashable]] = None) -> str:
    """Element key to dense matrix; exact entries as ``"p/q"``, floating ones as ``[re, im]``."""
    chosen = list(elements) if elements is not None else list(rep.domain)
    payload = {
        "schema": 1,
        "label": rep.label,
        "mode": rep.mode,
        "dimension": rep.dimension,
        "matrices": {str(s): [[_entry_to_json(x, rep.mode) for x in row] for row in rep.matrix(s).tolist()]
                     for s in chosen},
    }
    return json.dumps(payload, sort_keys=True, indent=2)
