"""
Desk-scale checks of the structural identities of factorpowers.

Every check returns a :class:`CheckResult`; a check that hits a configured
budget is reported as skipped instead of failed.
"""

from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, product
from math import factorial, prod
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from loguru import logger
from tqdm import tqdm

from ..config.yaml_loader import Budgets, get_budgets
from ..dualsym.correspondence import correspondence_check
from ..dualsym.fstar import (canonical_coset_rep, dimension_identity, fstar_enumerate, fstar_inverse,
                             fstar_structure, fstar_units)
from ..factorpower.element import FpElement, star
from ..factorpower.enumeration import enumerate_fp, idempotent_census
from ..factorpower.membership import is_member
from ..factorpower.relation_io import element_to_relation
from ..factorpower.structure import (dclasses, green_related, idempotents, is_inverse_trace,
                                     units_and_kernel)
from ..permgroup.action import GroupAction
from ..permgroup.group import (PermutationGroup, block_stabilizer, cosets, cyclic_group, dihedral_group,
                               group_table, symmetric_group)
from ..permgroup.permutation import Permutation, set_partitions
from ..repcore.intertwiner import decompose, multiplicity
from ..repcore.matrix_rep import EXACT, tensor
from ..repcore.simple_modules import SimpleModuleBuilder
from ..repcore.unitary import dual_check, unitarize
from ..symfunc.characters import (ClassFunction, character_table, foulkes_check, induced_multiplicity,
                                  kostka, mn_character, permutation_character, set_partition_character,
                                  specht_dim)
from ..symfunc.partitions import (IntegerPartition, class_size, consecutive_partition,
                                  multipartitions, partitions)
from ..symfunc.specht import specht_matrices
from ..utils.errors import FplabError, SizeLimitError, ValidationError
from .tables import cayley_table, idempotent_indices, inverse_partners, nonassociative_triple

PASS = "pass"
FAIL = "fail"
SKIP = "skip"

BELL = {1: 1, 2: 2, 3: 5, 4: 15}


@dataclass
class CheckResult:
    """Outcome of one invariant check."""
    name: str
    status: str
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != FAIL


@dataclass
class SuiteReport:
    """All check outcomes of one suite run."""
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    def summary(self) -> str:
        c = self.counts()
        return f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIP]} skipped"


class InvariantSuite:
    """Runs the invariant checks on small symmetric, cyclic and dihedral groups."""

    def __init__(self, budgets: Optional[Budgets] = None, seed: int = 0, thorough: bool = False):
        """
        Initialize invariant suite.

        Args:
            budgets: Limits; the process-wide budgets when omitted
            seed: Seed for sampled checks
            thorough: Extend the Kostka cross-check to n <= 8 and add the Foulkes case (3,4)
        """
        self.budgets = budgets or get_budgets()
        self.seed = seed
        self.thorough = thorough
        self.logger = logger.bind(name=self.__class__.__name__)
        self._groups: Dict[int, PermutationGroup] = {}
        self._builders: Dict[int, SimpleModuleBuilder] = {}
        self._elements: Dict[int, List[FpElement]] = {}

    def checks(self) -> List[Tuple[str, Callable[[], Tuple[bool, str]]]]:
        return [
            ("group_axioms", self.check_group_axioms),
            ("partition_join", self.check_partition_join),
            ("character_orthogonality", self.check_character_orthogonality),
            ("specht_characters", self.check_specht_characters),
            ("kostka_crosscheck", self.check_kostka_crosscheck),
            ("foulkes", self.check_foulkes),
            ("product_and_star", self.check_product_and_star),
            ("membership", self.check_membership),
            ("idempotent_census", self.check_idempotent_census),
            ("green_relations", self.check_green_relations),
            ("inverse_traces", self.check_inverse_traces),
            ("units_and_kernel", self.check_units_and_kernel),
            ("dimension_identity", self.check_dimension_identity),
            ("fstar_structure", self.check_fstar_structure),
            ("fstar_associativity", self.check_fstar_associativity),
            ("fstar_inverse", self.check_fstar_inverse),
            ("coset_representatives", self.check_coset_representatives),
            ("correspondence", self.check_correspondence),
            ("simple_dimensions", self.check_simple_dimensions),
            ("restriction", self.check_restriction),
            ("unitarizability", self.check_unitarizability),
            ("duality", self.check_duality),
            ("tensor_reducibility", self.check_tensor_reducibility),
        ]

    def run(self, only: Optional[List[str]] = None, progress: bool = False) -> SuiteReport:
        """
        Run the checks, optionally restricted to the given names.

        Args:
            only: Names of checks to run; all when omitted
            progress: Show a progress bar

        Raises:
            ValidationError: If a requested check does not exist
        """
        known = [name for name, _ in self.checks()]
        unknown = sorted(set(only or []) - set(known))
        if unknown:
            raise ValidationError(f"unknown checks {unknown}; known: {known}")
        selected = [(name, fn) for name, fn in self.checks() if only is None or name in only]
        if progress:
            selected = tqdm(selected, desc="verify", unit="check")
        report = SuiteReport()
        for name, fn in selected:
            report.results.append(self._run_one(name, fn))
        self.logger.info(f"invariant suite: {report.summary()}")
        return report

    def _run_one(self, name: str, fn: Callable[[], Tuple[bool, str]]) -> CheckResult:
        try:
            ok, detail = fn()
        except SizeLimitError as e:
            self.logger.warning(f"{name} skipped: {str(e)}")
            return CheckResult(name, SKIP, str(e))
        except FplabError as e:
            self.logger.error(f"{name} raised: {str(e)}")
            return CheckResult(name, FAIL, str(e))
        self.logger.debug(f"{name}: {'ok' if ok else 'FAILED'} {detail}")
        return CheckResult(name, PASS if ok else FAIL, detail)

    # shared fixtures

    def symmetric(self, n: int) -> PermutationGroup:
        if n not in self._groups:
            self._groups[n] = symmetric_group(n, self.budgets)
        return self._groups[n]

    def builder(self, n: int) -> SimpleModuleBuilder:
        if n not in self._builders:
            self._builders[n] = SimpleModuleBuilder(self.symmetric(n), self.budgets, self.seed)
        return self._builders[n]

    def elements(self, n: int) -> List[FpElement]:
        if n not in self._elements:
            self._elements[n] = enumerate_fp(self.symmetric(n), self.budgets)
        return self._elements[n]

    # permutation groups and combinatorics

    def check_group_axioms(self) -> Tuple[bool, str]:
        groups = [self.symmetric(3), self.symmetric(4), cyclic_group(5, self.budgets), dihedral_group(4, self.budgets)]
        for g in groups:
            if not group_table(g).is_group():
                return False, f"table of group of order {g.order} is not a group"
            sub = cyclic_group(g.degree, self.budgets)
            if sub.is_subgroup_of(g):
                for side in ("left", "right"):
                    if len(cosets(g, sub, side)) * sub.order != g.order:
                        return False, f"{side} cosets of C_{g.degree} do not tile a group of order {g.order}"
        return True, f"{len(groups)} groups"

    def check_partition_join(self) -> Tuple[bool, str]:
        parts = list(set_partitions(4))
        for a, b in product(parts, parts):
            j = a.join(b)
            if not (a.refines(j) and b.refines(j)):
                return False, f"{j} is not above {a} and {b}"
            if any(a.refines(c) and b.refines(c) and not j.refines(c) for c in parts):
                return False, f"{j} is not the least upper bound of {a} and {b}"
        return True, f"{len(parts) ** 2} pairs"

    def check_character_orthogonality(self) -> Tuple[bool, str]:
        for n in range(1, 6):
            shapes = partitions(n)
            table = character_table(n).to_numpy(dtype=object)
            sizes = [class_size(nu) for nu in shapes]
            order = sum(sizes)
            for i, j in product(range(len(shapes)), repeat=2):
                inner = sum(int(table[i, c]) * int(table[j, c]) * sizes[c] for c in range(len(shapes)))
                if inner != (order if i == j else 0):
                    return False, f"rows {shapes[i]} and {shapes[j]} of S_{n}"
        return True, "n <= 5"

    def check_specht_characters(self) -> Tuple[bool, str]:
        for n in range(1, 5):
            group = self.symmetric(n)
            for lam in partitions(n):
                rep = specht_matrices(lam, self.budgets)
                for g in group.elements:
                    if rep.character(g) != mn_character(lam, IntegerPartition.sorted_from(g.cycle_type())):
                        return False, f"shape {lam} at {g}"
        return True, "n <= 4"

    def check_kostka_crosscheck(self) -> Tuple[bool, str]:
        top = min(self.budgets.specht_max_n, 6 if not self.thorough else 8)
        checked = 0
        for n in range(1, top + 1):
            for mu in partitions(n):
                rho = consecutive_partition(mu)
                labels = list(multipartitions(mu.multiplicities()))
                for lam in partitions(n):
                    total = sum(prod(specht_dim(c) for c in l.components)
                                * induced_multiplicity(lam, rho, l, self.budgets) for l in labels)
                    if total != kostka(lam, mu):
                        return False, f"lambda={lam}, mu={mu}: {total} != {kostka(lam, mu)}"
                    checked += 1
        for n in range(1, 7):
            shapes = partitions(n)
            for mu, nu in product(shapes, shapes):
                total = sum(kostka(lam, mu) * mn_character(lam, nu) for lam in shapes)
                if total != permutation_character(mu, nu):
                    return False, f"permutation character of {mu} at {nu}: {total}"
        return True, f"{checked} pairs, n <= {top}; permutation characters n <= 6"

    def check_foulkes(self) -> Tuple[bool, str]:
        report = foulkes_check(2, 3, self.budgets)
        support = [str(s) for s in report.support("km")]
        if not report.verdict or support != ["6", "4,2"]:
            return False, f"(2,3) support {support}"
        chi_km = set_partition_character(2, 3)
        chi_mk = set_partition_character(3, 2)
        for row in report.rows:
            irreducible = ClassFunction.irreducible([row.shape])
            if (irreducible.inner(chi_km), irreducible.inner(chi_mk)) != (row.mult_km, row.mult_mk):
                return False, f"(2,3) at {row.shape} disagrees with the permutation characters"
        cases = [(2, 4)] + ([(3, 4)] if self.thorough else [])
        for k, m in cases:
            if not foulkes_check(k, m, self.budgets).verdict:
                return False, f"({k},{m}) violates the inequality"
        return True, f"(2,3) {' '.join(f'({k},{m})' for k, m in cases)}"

    # factorpower structure

    def check_product_and_star(self) -> Tuple[bool, str]:
        for n in (2, 3):
            group = self.symmetric(n)
            elements = self.elements(n)
            table = cayley_table(elements)
            triple = nonassociative_triple(table)
            if triple is not None:
                return False, f"S_{n}: associativity at {', '.join(str(elements[i]) for i in triple)}"
            index = {a: i for i, a in enumerate(elements)}
            stars = np.array([index[star(group, a)] for a in elements])
            if not np.array_equal(stars[stars], np.arange(len(elements))):
                return False, f"S_{n}: star is not an involution"
            if not np.array_equal(stars[table], table[stars[None, :], stars[:, None]]):
                return False, f"S_{n}: star is not an anti-homomorphism"
        group = self.symmetric(4)
        elements = self.elements(4)
        rng = np.random.default_rng(self.seed)
        picks = rng.integers(len(elements), size=(self.budgets.random_check_count, 3))
        for i, j, k in picks:
            a, b, c = elements[i], elements[j], elements[k]
            if (a * b) * c != a * (b * c):
                return False, f"S_4: associativity at {a}, {b}, {c}"
            if star(group, a * b) != star(group, b) * star(group, a):
                return False, f"S_4: star is not an anti-homomorphism at {a}, {b}"
        return True, f"exhaustive on S_2, S_3; {len(picks)} sampled triples on S_4"

    def check_membership(self) -> Tuple[bool, str]:
        checked = 0
        for group in (self.symmetric(3), cyclic_group(3, self.budgets)):
            members = {tuple(map(tuple, element_to_relation(e))) for e in enumerate_fp(group, self.budgets)}
            n = group.degree
            for bits in product((False, True), repeat=n * n):
                relation = tuple(tuple(bits[r * n:(r + 1) * n]) for r in range(n))
                if is_member(group, relation) != (relation in members):
                    return False, f"relation {relation} for a group of order {group.order}"
                checked += 1
        return True, f"{checked} relations"

    def check_idempotent_census(self) -> Tuple[bool, str]:
        for n, expected in BELL.items():
            found = idempotents(self.symmetric(n))
            if len(found) != expected:
                return False, f"S_{n}: {len(found)} idempotents, expected {expected}"
        for n in (2, 3, 4):
            census = set(idempotent_census(self.symmetric(n), self.elements(n)))
            if census != {e.element for e in idempotents(self.symmetric(n))}:
                return False, f"S_{n}: brute-force census differs"
        return True, "n <= 4, census over the full enumeration"

    def check_green_relations(self) -> Tuple[bool, str]:
        group = self.symmetric(3)
        elements = self.elements(3)
        left = {a: frozenset([a] + [u * a for u in elements]) for a in elements}
        right = {a: frozenset([a] + [a * u for u in elements]) for a in elements}
        two_sided = {a: frozenset(x * a * y for x in elements for y in elements) | left[a] | right[a]
                     for a in elements}
        for a, b in product(elements, elements):
            if (left[a] == left[b]) != green_related(group, a, b, "L"):
                return False, f"L at {a}, {b}"
            if (right[a] == right[b]) != green_related(group, a, b, "R"):
                return False, f"R at {a}, {b}"
            if (two_sided[a] == two_sided[b]) != green_related(group, a, b, "D"):
                return False, f"D and J differ at {a}, {b}"
        return True, f"{len(elements) ** 2} pairs"

    def check_inverse_traces(self) -> Tuple[bool, str]:
        count = 0
        for n in (3, 4):
            for d in dclasses(self.symmetric(n)):
                if not is_inverse_trace(d):
                    return False, f"S_{n}, D-class {d.label}"
                ids = [e.element for e in d.idempotents]
                if any(a * b != b * a for a, b in combinations(ids, 2)):
                    return False, f"S_{n}: idempotents of {d.label} do not commute"
                count += 1
        return True, f"{count} D-classes"

    def check_units_and_kernel(self) -> Tuple[bool, str]:
        s3 = [Permutation.parse("(1 2)", 3), Permutation.parse("(1 2 3)", 3)]
        trivial = GroupAction.from_generators(3, s3, [Permutation.identity(1)] * 2, self.budgets)
        units, kernel = units_and_kernel(trivial, self.budgets)
        if kernel.order != 6 or units.order != 1:
            return False, f"trivial action: kernel {kernel.order}, units {units.order}"
        c4 = GroupAction.from_generators(4, [Permutation.parse("(1 2 3 4)", 4)],
                                         [Permutation.parse("(1 2)", 2)], self.budgets)
        units, kernel = units_and_kernel(c4, self.budgets)
        if kernel.order != 2 or units.order != 2:
            return False, f"C_4 on two points: kernel {kernel.order}, units {units.order}"
        return True, "two non-faithful actions"

    # the dual symmetric side

    def check_dimension_identity(self) -> Tuple[bool, str]:
        expected = {2: 3, 3: 16}
        top = min(5, self.budgets.fstar_max_n)
        for n in range(2, top + 1):
            identity = dimension_identity(n, brute_force=True, budgets=self.budgets)
            if not identity.holds or expected.get(n, identity.element_count) != identity.element_count:
                return False, str(identity)
        return True, f"n <= {top}"

    def check_fstar_structure(self) -> Tuple[bool, str]:
        for n in range(1, min(4, self.budgets.fstar_max_n) + 1):
            fstar_structure(n, brute_force=True, budgets=self.budgets)
        return True, "n <= 4"

    def check_fstar_associativity(self) -> Tuple[bool, str]:
        top = min(4, self.budgets.fstar_max_n)
        for n in range(1, top + 1):
            elements = fstar_enumerate(n, self.budgets)
            triple = nonassociative_triple(cayley_table(elements))
            if triple is not None:
                return False, f"n={n}: {' ; '.join(str(elements[i]) for i in triple)}"
        if self.budgets.fstar_max_n < 5:
            return True, f"exhaustive n <= {top}"
        elements = fstar_enumerate(5, self.budgets)
        rng = np.random.default_rng(self.seed)
        picks = rng.integers(len(elements), size=(self.budgets.random_check_count, 3))
        for i, j, k in picks:
            a, b, c = elements[i], elements[j], elements[k]
            if (a * b) * c != a * (b * c):
                return False, f"n=5: {a} ; {b} ; {c}"
        return True, f"exhaustive n <= {top}; {len(picks)} random triples at n=5"

    def check_fstar_inverse(self) -> Tuple[bool, str]:
        top = min(4, self.budgets.fstar_max_n)
        for n in range(1, top + 1):
            elements = fstar_enumerate(n, self.budgets)
            table = cayley_table(elements)
            ids = idempotent_indices(table)
            if any(table[i, j] != table[j, i] for i, j in combinations(ids, 2)):
                return False, f"n={n}: idempotents do not commute"
            for a, element in enumerate(elements):
                partners = inverse_partners(table, a)
                if [elements[b] for b in partners] != [fstar_inverse(element)]:
                    return False, f"n={n}: {element} has inverses {[str(elements[b]) for b in partners]}"
            units = fstar_units(elements)
            if len(units) != factorial(n) or any(a * b not in units for a in units for b in units):
                return False, f"n={n}: {len(units)} units"
        return True, f"n <= {top}"

    def check_coset_representatives(self) -> Tuple[bool, str]:
        checked = 0
        for n in range(1, 5):
            group = self.symmetric(n)
            for rho in set_partitions(n):
                young = block_stabilizer(group, rho)
                for sigma in group.elements:
                    if canonical_coset_rep(rho, sigma) != min(g * sigma for g in young.elements):
                        return False, f"{rho} with {sigma}"
                    checked += 1
        return True, f"{checked} cosets, n <= 4"

    def check_correspondence(self) -> Tuple[bool, str]:
        top = min(4, self.budgets.correspondence_max_n)
        for n in range(1, top + 1):
            report = correspondence_check(n, self.budgets)
            if not report.ok:
                bad = [str(r.shape) for r in report.rows if not r.ok]
                return False, f"n={n}: shapes {', '.join(bad)}"
        return True, f"n <= {top}"

    # modules

    def check_simple_dimensions(self) -> Tuple[bool, str]:
        dims = sorted(desc.dimension for desc in self.builder(3).descriptors())
        if dims != [1, 1, 1, 2, 3]:
            return False, f"S_3 simple dimensions {dims}"
        for n in range(1, 5):
            b = self.builder(n)
            accounting = b.jacobson_accounting()
            if not accounting.holds:
                return False, (f"S_{n}: {accounting.structure_side} vs {accounting.simple_side}"
                               f" vs {accounting.fstar_side}")
            if any(desc.dimension != desc.dclass.k * desc.dim_x for desc in b.descriptors()):
                return False, f"S_{n}: dimension is not k * dim X"
        return True, "n <= 4"

    def check_restriction(self) -> Tuple[bool, str]:
        degrees = (2, 3, 4)
        for n in degrees:
            b = self.builder(n)
            for desc in b.descriptors():
                if not b.restriction_check(desc):
                    return False, f"S_{n}: {desc}"
        return True, f"n in {degrees}"

    def check_unitarizability(self) -> Tuple[bool, str]:
        b = self.builder(3)
        worst = 0.0
        for desc in b.descriptors():
            form = unitarize(b.build_simple(desc, EXACT), budgets=self.budgets)
            worst = max(worst, form.residual)
        return True, f"max residual {worst:.1e}"

    def check_duality(self) -> Tuple[bool, str]:
        degrees = (2, 3, 4)
        for n in degrees:
            b = self.builder(n)
            for desc in b.descriptors():
                if not dual_check(b.build_simple(desc, EXACT, verify=False), budgets=self.budgets):
                    return False, f"S_{n}: {desc}"
        return True, f"n in {degrees}"

    def check_tensor_reducibility(self) -> Tuple[bool, str]:
        pairs = 0
        for n in (2, 3):
            b = self.builder(n)
            simples = {desc: b.build_simple(desc, EXACT) for desc in b.descriptors()}
            for desc, rep in simples.items():
                if multiplicity(rep, rep, budgets=self.budgets, seed=self.seed) != 1:
                    return False, f"S_{n}: End({desc}) is not one-dimensional"
            for (d1, r1), (d2, r2) in combinations_with_replacement(simples.items(), 2):
                result = decompose(tensor(r1, r2), b, budgets=self.budgets, seed=self.seed)
                if result.accounted != r1.dimension * r2.dimension:
                    return False, f"S_{n}: {d1} x {d2}"
                pairs += 1
        return True, f"{pairs} pairs"
