"""
The bimodule V_H and the simple modules L(H, X) = V_H (x) X.

V_H is spanned by the L-class of the idempotent of ``H``: the classes of
``t H`` for ``t`` over the left cosets ``G/H``. As a right module over
``N_G(H)/H`` it is free with basis ``x_i`` (the class of ``g_i^-1 H``), so
``L(H, X)`` has blocks indexed by pairs of conjugators and every block of the
matrix of ``s`` is either zero or a matrix of ``X``.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Rational

from ..config.yaml_loader import Budgets, get_budgets
from ..dualsym.fstar import fstar_count
from ..factorpower.element import FpElement, unit_class
from ..factorpower.structure import DClassInfo, dclasses
from ..permgroup.group import PermutationGroup, cosets
from ..permgroup.permutation import Permutation, SetPartition
from ..symfunc.characters import specht_dim
from ..symfunc.partitions import IntegerPartition, MultiPartition, multipartitions
from ..symfunc.specht import specht_matrices
from ..utils.errors import InconsistencyError, SizeLimitError, ValidationError
from ..utils.logger import get_logger
from .domain import SemigroupDomain, semigroup_domain
from .group_irreps import GroupIrrep, group_irreps
from .matrix_rep import EXACT, FLOAT, MatrixRep

Label = Union[MultiPartition, int]


@dataclass(eq=False)
class SimpleModuleDescriptor:
    """An apex D-class together with a simple module ``X`` of its maximal subgroup."""
    dclass: DClassInfo
    label: Label
    dim_x: int
    dclass_label: str

    @property
    def dimension(self) -> int:
        return self.dclass.k * self.dim_x

    @property
    def text(self) -> str:
        return f"{self.dclass_label}@{self.label}"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SimpleModuleDescriptor) and other.text == self.text

    def __hash__(self) -> int:
        return hash(self.text)

    def __str__(self) -> str:
        return self.text


@dataclass
class _LClass:
    """Basis of V_H and the position of every L-class element as ``x_i * q``."""
    basis: List[FpElement]
    index: Dict[FpElement, int]
    coords: Dict[FpElement, Tuple[int, int]]
    generators: List[FpElement]


@dataclass
class JacobsonAccounting:
    """Both sides of the dimension count of the semisimple quotient."""
    structure_side: int
    simple_side: int
    fstar_side: Optional[int] = None

    @property
    def holds(self) -> bool:
        return self.structure_side == self.simple_side and self.fstar_side in (None, self.simple_side)


class SimpleModuleBuilder:
    """Builds V_H, the simple modules L(H, X) and their descriptors for one group."""

    def __init__(self, group: PermutationGroup, budgets: Optional[Budgets] = None, seed: int = 0):
        """
        Initialize builder.

        Args:
            group: Group acting faithfully on its points
            budgets: Limits; the process-wide budgets when omitted
            seed: Seed for numerical irreducibles and sampled checks
        """
        self.group = group
        self.budgets = budgets or get_budgets()
        self.seed = seed
        self.symmetric = group.is_symmetric()
        self.logger = get_logger(self.__class__.__name__)
        self._lclasses: Dict[int, _LClass] = {}
        self._irreps: Dict[int, List[GroupIrrep]] = {}

    @cached_property
    def dclasses(self) -> List[DClassInfo]:
        return dclasses(self.group)

    @cached_property
    def domain(self) -> SemigroupDomain:
        return semigroup_domain(self.group, self.budgets)

    def dclass_label(self, dclass: DClassInfo) -> str:
        same_shape = [d for d in self.dclasses if d.shape == dclass.shape]
        return str(dclass.shape) if len(same_shape) == 1 else str(dclass.apex.partition)

    def find_dclass(self, text: str) -> DClassInfo:
        """
        Locate a D-class by shape (``"2,1"``) or by one of its partitions (``"{1,2}{3}"``).

        Raises:
            ValidationError: If nothing or more than one class matches
        """
        text = text.strip()
        if text.startswith("{"):
            rho = SetPartition.parse(text)
            for d in self.dclasses:
                if any(e.partition == rho for e in d.idempotents):
                    return d
            raise ValidationError(f"{text} is not the orbit partition of an idempotent")
        shape = IntegerPartition.parse(text)
        matches = [d for d in self.dclasses if d.shape == shape]
        if len(matches) != 1:
            raise ValidationError(f"shape {text} matches {len(matches)} D-classes; name a partition instead")
        return matches[0]

    def irreps(self, dclass: DClassInfo) -> List[GroupIrrep]:
        key = id(dclass)
        if key not in self._irreps:
            self.logger.debug("computing numerical irreducibles of a maximal subgroup")
            self._irreps[key] = group_irreps(dclass.maximal_subgroup, seed=self.seed)
        return self._irreps[key]

    def descriptors(self, dclass: Optional[DClassInfo] = None) -> List[SimpleModuleDescriptor]:
        """Every simple module, D-class by D-class."""
        chosen = [dclass] if dclass is not None else self.dclasses
        found = []
        for d in chosen:
            label = self.dclass_label(d)
            if self.symmetric:
                for l in multipartitions(d.shape.multiplicities()):
                    found.append(SimpleModuleDescriptor(d, l, prod(specht_dim(c) for c in l.components), label))
            else:
                for irrep in self.irreps(d):
                    found.append(SimpleModuleDescriptor(d, irrep.index, irrep.dimension, label))
        return found

    def resolve(self, text: str) -> SimpleModuleDescriptor:
        """
        Parse ``"<shape or partition>@<label>"``.

        Raises:
            ValidationError: If the D-class or the label is unknown
        """
        dtext, sep, ltext = text.partition("@")
        if not sep:
            raise ValidationError(f"expected '<shape>@<label>', got {text!r}")
        d = self.find_dclass(dtext)
        ltext = ltext.strip()
        for desc in self.descriptors(d):
            if self.symmetric:
                wanted = (MultiPartition.trivial(d.shape.multiplicities()) if ltext == "trivial"
                          else MultiPartition.parse(ltext, self.group.degree))
                if desc.label == wanted:
                    return desc
            elif str(desc.label) == ltext.strip():
                return desc
        raise ValidationError(f"unknown label {ltext!r} for D-class {dtext}")

    def _lclass(self, dclass: DClassInfo) -> _LClass:
        key = id(dclass)
        cached = self._lclasses.get(key)
        if cached is not None:
            return cached
        group = self.group
        sub = dclass.apex.subgroup
        eps = dclass.apex.element
        basis = [eps.left_translate(t) for t in cosets(group, sub, "left")]
        taus = [g.inverse() for g in dclass.conjugators]
        tau_invs = list(dclass.conjugators)
        lookup = dclass.maximal_subgroup.lookup
        coords: Dict[FpElement, Tuple[int, int]] = {}
        for sigma in group.elements:
            element = eps.left_translate(sigma)
            if element in coords:
                continue
            for i, tau_inv in enumerate(tau_invs):
                q = lookup.get(tau_inv * sigma)
                if q is not None:
                    coords[element] = (i, q)
                    break
        data = _LClass(basis, {x: i for i, x in enumerate(basis)}, coords,
                       [eps.left_translate(t) for t in taus])
        self._lclasses[key] = data
        return data

    def _domain_for(self, elements: Optional[Sequence[FpElement]]) -> Tuple[List[FpElement], bool]:
        if elements is not None:
            return list(elements), False
        if self.group.order > self.budgets.enumerate_cap:
            raise SizeLimitError("enumerate_cap", self.budgets.enumerate_cap, self.group.order,
                                 hint="pass an explicit element list")
        return self.domain.elements, self.domain.complete

    def vbimodule(self, dclass: DClassInfo,
                  elements: Optional[Sequence[FpElement]] = None) -> Tuple[MatrixRep, MatrixRep]:
        """
        Left action of FP+ on V_H and the commuting right action of ``N_G(H)/H``.

        The right action is returned as a left representation of the quotient
        through ``x -> x * g^-1``.
        """
        data = self._lclass(dclass)
        domain, complete = self._domain_for(elements)
        size = len(data.basis)

        def left(s: FpElement) -> np.ndarray:
            out = np.zeros((size, size), dtype=object)
            for col, x in enumerate(data.basis):
                row = data.index.get(s * x)
                if row is not None:
                    out[row, col] = 1
            return out

        table = dclass.maximal_subgroup

        def right(q: int) -> np.ndarray:
            g_inv = table.labels[q].inverse()
            out = np.zeros((size, size), dtype=object)
            for col, x in enumerate(data.basis):
                out[data.index[x.right_translate(g_inv)], col] = 1
            return out

        name = self.dclass_label(dclass)
        left_rep = MatrixRep(size, domain, left, EXACT, f"V[{name}]", self.group, complete)
        right_rep = MatrixRep(size, list(range(table.order)), right, EXACT, f"V[{name}] right")
        return left_rep, right_rep

    def _x_matrix_symmetric(self, dclass: DClassInfo, label: MultiPartition, q: int) -> np.ndarray:
        g = dclass.maximal_subgroup.labels[q]
        rho = dclass.apex.partition
        blocks = rho.blocks()
        result = np.ones((1, 1), dtype=np.int64)
        for size, component in enumerate(label.components, start=1):
            if component.size == 0:
                continue
            same = [b for b in blocks if len(b) == size]
            position = {rho.block_of[b[0]]: i for i, b in enumerate(same)}
            induced = Permutation(tuple(position[rho.block_of[g(b[0])]] for b in same))
            result = np.kron(result, specht_matrices(component, self.budgets).matrix(induced))
        return result.astype(object)

    def x_matrix(self, desc: SimpleModuleDescriptor, q: int, mode: str = EXACT) -> np.ndarray:
        """Matrix of the quotient element ``q`` on ``X``."""
        if self.symmetric:
            m = self._x_matrix_symmetric(desc.dclass, desc.label, q)
            return m if mode == EXACT else m.astype(complex)
        return self.irreps(desc.dclass)[desc.label].matrix(q)

    def build_simple(self, desc: SimpleModuleDescriptor, mode: str = EXACT,
                     elements: Optional[Sequence[FpElement]] = None, verify: bool = True) -> MatrixRep:
        """
        Matrices of L(H, X) on the basis ``x_i (x) e_a``.

        Raises:
            ValidationError: If the label does not belong to the D-class
            InconsistencyError: If sampled products are not preserved
        """
        if desc not in self.descriptors(desc.dclass):
            raise ValidationError(f"label {desc.label} is out of range for D-class {desc.dclass_label}")
        if not self.symmetric and mode == EXACT:
            self.logger.warning("no exact irreducibles for this maximal subgroup; using floating arithmetic")
            mode = FLOAT
        data = self._lclass(desc.dclass)
        domain, complete = self._domain_for(elements)
        dx = desc.dim_x
        k = desc.dclass.k
        x_cache: Dict[int, np.ndarray] = {}

        def x_of(q: int) -> np.ndarray:
            if q not in x_cache:
                x_cache[q] = self.x_matrix(desc, q, mode)
            return x_cache[q]

        def factory(s: FpElement) -> np.ndarray:
            out = np.zeros((k * dx, k * dx), dtype=object if mode == EXACT else complex)
            for j, x in enumerate(data.generators):
                hit = data.coords.get(s * x)
                if hit is None:
                    continue
                i, q = hit
                out[i * dx:(i + 1) * dx, j * dx:(j + 1) * dx] = x_of(q)
            return out

        rep = MatrixRep(k * dx, domain, factory, mode, desc.text, self.group, complete,
                        apex=desc.dclass, descriptor=desc)
        if verify:
            self._verify_multiplicative(rep, domain)
        self.logger.debug(f"built L({desc.text}) of dimension {rep.dimension}")
        return rep

    def _verify_multiplicative(self, rep: MatrixRep, domain: Sequence[FpElement], samples: int = 64) -> None:
        rng = np.random.default_rng(self.seed)
        count = len(domain)
        if count * count <= samples:
            pairs = list(product(domain, domain))
        else:
            pairs = [(domain[rng.integers(count)], domain[rng.integers(count)]) for _ in range(samples)]
        if not rep.is_multiplicative(pairs, lambda a, b: a * b, self.budgets.tolerance):
            raise InconsistencyError(f"L({rep.label}) does not preserve products")

    def restriction_check(self, desc: SimpleModuleDescriptor) -> bool:
        """
        Compare the character of L(H, X) on units with the character induced
        from ``N_G(H)`` of the inflation of ``X``.
        """
        mode = EXACT if self.symmetric else FLOAT
        rep = self.build_simple(desc, mode, elements=[], verify=False)
        d = desc.dclass
        norm = d.normalizer
        lookup = d.maximal_subgroup.lookup
        chi_x = [np.trace(self.x_matrix(desc, q, mode)) for q in range(d.maximal_subgroup.order)]
        inverses = {t: t.inverse() for t in self.group.elements}
        for g in self.group.elements:
            total = 0
            for t, t_inv in inverses.items():
                c = t_inv * g * t
                if c in norm:
                    total += chi_x[lookup[c]]
            induced = Rational(int(total), norm.order) if mode == EXACT else total / norm.order
            actual = rep.trace(unit_class(self.group, g))
            if mode == EXACT:
                if Rational(int(actual)) != induced:
                    return False
            elif abs(complex(actual) - complex(induced)) > self.budgets.rank_tolerance:
                return False
        return True

    def jacobson_accounting(self) -> JacobsonAccounting:
        structure_side = sum(d.k ** 2 * d.maximal_subgroup.order for d in self.dclasses)
        simple_side = sum(desc.dimension ** 2 for desc in self.descriptors())
        fstar_side = fstar_count(self.group.degree) if self.symmetric else None
        return JacobsonAccounting(structure_side, simple_side, fstar_side)


def vbimodule(group: PermutationGroup, dclass: DClassInfo,
              elements: Optional[Sequence[FpElement]] = None,
              budgets: Optional[Budgets] = None) -> Tuple[MatrixRep, MatrixRep]:
    return SimpleModuleBuilder(group, budgets).vbimodule(dclass, elements)


def simple_descriptors(group: PermutationGroup, budgets: Optional[Budgets] = None) -> List[SimpleModuleDescriptor]:
    return SimpleModuleBuilder(group, budgets).descriptors()


def build_simple(group: PermutationGroup, desc: SimpleModuleDescriptor, mode: str = EXACT,
                 budgets: Optional[Budgets] = None) -> MatrixRep:
    return SimpleModuleBuilder(group, budgets).build_simple(desc, mode)


def restriction_check(group: PermutationGroup, desc: SimpleModuleDescriptor,
                      budgets: Optional[Budgets] = None) -> bool:
    return SimpleModuleBuilder(group, budgets).restriction_check(desc)


def jacobson_accounting(group: PermutationGroup, budgets: Optional[Budgets] = None) -> JacobsonAccounting:
    return SimpleModuleBuilder(group, budgets).jacobson_accounting()
