"""
Command handlers: each turns a JobConfig into report rows and notes.
"""

from dataclasses import dataclass, field
from math import prod
from typing import Any, Callable, Dict, List, Optional

from ..config.yaml_loader import Budgets
from ..dualsym.correspondence import correspondence_check
from ..dualsym.fstar import dimension_identity, fstar_structure
from ..factorpower.enumeration import enumerate_fp
from ..factorpower.relation_io import element_to_relation, format_relation_text
from ..factorpower.structure import idempotents
from ..permgroup.dsl import parse_group
from ..permgroup.group import PermutationGroup
from ..permgroup.permutation import SetPartition
from ..repcore.intertwiner import decompose
from ..repcore.matrix_rep import EXACT, FLOAT, tensor
from ..repcore.simple_modules import SimpleModuleBuilder
from ..repcore.unitary import unitarize
from ..symfunc.characters import foulkes_check, induced_multiplicity, kostka, specht_dim
from ..symfunc.partitions import (IntegerPartition, MultiPartition, consecutive_partition,
                                  multipartitions, partitions, set_partition_shape)
from ..utils.errors import ValidationError
from ..verification.invariant_suite import InvariantSuite
from .job import JobConfig


@dataclass
class CommandReport:
    """Rows and trailing notes of one command; ``status`` is the exit code."""
    rows: List[Dict[str, Any]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    columns: Optional[List[str]] = None
    status: int = 0


def parse_rho(text: str) -> SetPartition:
    """A set partition ``"{1,2}{3}"`` or a block shape ``"2,1"`` (consecutive blocks)."""
    text = text.strip()
    if text.startswith("{"):
        return SetPartition.parse(text)
    return consecutive_partition(IntegerPartition.parse(text))


def parse_label(text: str, rho: SetPartition) -> MultiPartition:
    k = set_partition_shape(rho).multiplicities()
    if text.strip() == "trivial":
        return MultiPartition.trivial(k)
    label = MultiPartition.parse(text, rho.degree)
    if not label.matches(k):
        raise ValidationError(f"label {text} does not fit the block shape {set_partition_shape(rho)}")
    return label


def _group(config: JobConfig, budgets: Budgets) -> PermutationGroup:
    return parse_group(config.group, budgets)


def run_enumerate(config: JobConfig, budgets: Budgets) -> CommandReport:
    group = _group(config, budgets)
    elements = enumerate_fp(group, budgets, workers=config.workers, progress=config.progress)
    note = f"|FP+(G)| = {len(elements)} for |G| = {group.order} on {group.degree} points"
    if not config.dump:
        return CommandReport([{"group": config.group, "degree": group.degree, "order": group.order,
                               "elements": len(elements)}], [note])
    rows = [{"index": i, "element": str(e), "relation": format_relation_text(element_to_relation(e))}
            for i, e in enumerate(elements)]
    return CommandReport(rows, [note], ["index", "element", "relation"])


def run_idempotents(config: JobConfig, budgets: Budgets) -> CommandReport:
    found = idempotents(_group(config, budgets))
    rows = [{"partition": str(e.partition), "subgroup_order": e.subgroup.order, "shape": str(e.shape)}
            for e in found]
    return CommandReport(rows, [f"{len(found)} idempotents"], ["partition", "subgroup_order", "shape"])


def run_dclasses(config: JobConfig, budgets: Budgets) -> CommandReport:
    builder = SimpleModuleBuilder(_group(config, budgets), budgets, config.seed)
    rows = []
    for d in builder.dclasses:
        dims = [desc.dimension for desc in builder.descriptors(d)]
        rows.append({"dclass": builder.dclass_label(d), "shape": str(d.shape), "k": d.k,
                     "quotient_order": d.maximal_subgroup.order,
                     "simple_dims": ",".join(str(x) for x in dims)})
    return CommandReport(rows, [f"{len(rows)} regular D-classes"],
                         ["dclass", "shape", "k", "quotient_order", "simple_dims"])


def run_simples(config: JobConfig, budgets: Budgets) -> CommandReport:
    builder = SimpleModuleBuilder(_group(config, budgets), budgets, config.seed)
    rows = [{"descriptor": desc.text, "dclass": desc.dclass_label, "label": str(desc.label),
             "dim_x": desc.dim_x, "dimension": desc.dimension} for desc in builder.descriptors()]
    accounting = builder.jacobson_accounting()
    note = f"sum of squared dimensions {accounting.simple_side}, sum of k^2 |N/H| {accounting.structure_side}"
    if accounting.fstar_side is not None:
        note += f", |F*_n| {accounting.fstar_side}"
    return CommandReport(rows, [note], ["descriptor", "dclass", "label", "dim_x", "dimension"],
                         status=0 if accounting.holds else 1)


def run_multiplicity(config: JobConfig, budgets: Budgets) -> CommandReport:
    lam = IntegerPartition.parse(config.lam)
    rho = parse_rho(config.rho)
    label = parse_label(config.label, rho)
    value = induced_multiplicity(lam, rho, label, budgets)
    return CommandReport([{"lambda": str(lam), "rho": str(rho), "l": str(label), "multiplicity": value}])


def run_mult_table(config: JobConfig, budgets: Budgets) -> CommandReport:
    rho = parse_rho(config.rho)
    mu = set_partition_shape(rho)
    labels = list(multipartitions(mu.multiplicities()))
    rows = []
    mismatched = []
    for lam in partitions(rho.degree):
        total = 0
        for label in labels:
            value = induced_multiplicity(lam, rho, label, budgets)
            total += prod(specht_dim(c) for c in label.components) * value
            rows.append({"lambda": str(lam), "l": str(label), "multiplicity": value})
        if total != kostka(lam, mu):
            mismatched.append(str(lam))
    notes = [f"rho = {rho}, block shape {mu}, {len(labels)} labels"]
    notes.append("weighted row sums equal Kostka numbers" if not mismatched
                 else f"Kostka mismatch at {'; '.join(mismatched)}")
    return CommandReport(rows, notes, ["lambda", "l", "multiplicity"], status=1 if mismatched else 0)


def run_foulkes(config: JobConfig, budgets: Budgets) -> CommandReport:
    report = foulkes_check(config.k, config.m, budgets)
    rows = [{"lambda": str(r.shape), "mult_km": r.mult_km, "mult_mk": r.mult_mk, "ok": r.ok}
            for r in report.rows]
    notes = [f"k={report.k} m={report.m}", f"verdict: {'OK' if report.verdict else 'FAIL'}"]
    return CommandReport(rows, notes, ["lambda", "mult_km", "mult_mk", "ok"],
                         status=0 if report.verdict else 1)


def run_fstar(config: JobConfig, budgets: Budgets) -> CommandReport:
    classes = fstar_structure(config.n, brute_force=config.brute_force, budgets=budgets)
    identity = dimension_identity(config.n, brute_force=config.brute_force, budgets=budgets)
    rows = [{"shape": str(d.shape), "idempotents": d.count_idempotents, "group_order": d.group_order,
             "dimension": d.dimension} for d in classes]
    return CommandReport(rows, [str(identity)], ["shape", "idempotents", "group_order", "dimension"],
                         status=0 if identity.holds else 1)


def run_correspond(config: JobConfig, budgets: Budgets) -> CommandReport:
    report = correspondence_check(config.n, budgets)
    rows = [{"shape": str(r.shape), "fp_idempotents": r.fp_idempotents,
             "fstar_idempotents": r.fstar_idempotents, "fp_group_order": r.fp_group_order,
             "fstar_group_order": r.fstar_group_order, "isomorphic": r.groups_isomorphic,
             "simple_dims": ",".join(str(x) for x in r.simple_dims)} for r in report.rows]
    return CommandReport(rows, [f"correspondence: {'OK' if report.ok else 'FAIL'}"],
                         status=0 if report.ok else 1)


def run_unitarize(config: JobConfig, budgets: Budgets) -> CommandReport:
    builder = SimpleModuleBuilder(_group(config, budgets), budgets, config.seed)
    desc = builder.resolve(f"{config.shape}@{config.label}")
    rep = builder.build_simple(desc, EXACT if builder.symmetric else FLOAT)
    form = unitarize(rep, budgets=budgets)
    rows = [{"descriptor": desc.text, "dimension": rep.dimension, "domain": len(rep.domain),
             "residual": f"{form.residual:.3e}", "min_eigenvalue": f"{form.min_eigenvalue:.6f}"}]
    return CommandReport(rows, ["form is positive definite and invariant"])


def run_tensor(config: JobConfig, budgets: Budgets) -> CommandReport:
    builder = SimpleModuleBuilder(_group(config, budgets), budgets, config.seed)
    left, right = builder.resolve(config.left), builder.resolve(config.right)
    mode = EXACT if config.exact else FLOAT
    module = tensor(builder.build_simple(left, mode), builder.build_simple(right, mode))
    result = decompose(module, builder, exact=config.exact, budgets=budgets, seed=config.seed)
    rows = [{"descriptor": desc.text, "dimension": desc.dimension, "multiplicity": m}
            for desc, m in result.nonzero()]
    note = f"sum m*dim = {result.accounted} = {left.dimension}*{right.dimension}"
    return CommandReport(rows, [note], ["descriptor", "dimension", "multiplicity"])


def run_verify(config: JobConfig, budgets: Budgets) -> CommandReport:
    suite = InvariantSuite(budgets, config.seed, thorough=config.thorough)
    report = suite.run(only=config.checks, progress=config.progress)
    rows = [{"check": r.name, "status": r.status, "detail": r.detail} for r in report.results]
    return CommandReport(rows, [report.summary()], ["check", "status", "detail"],
                         status=0 if report.passed else 1)


HANDLERS: Dict[str, Callable[[JobConfig, Budgets], CommandReport]] = {
    "enumerate": run_enumerate,
    "idempotents": run_idempotents,
    "dclasses": run_dclasses,
    "simples": run_simples,
    "multiplicity": run_multiplicity,
    "mult-table": run_mult_table,
    "foulkes": run_foulkes,
    "fstar": run_fstar,
    "correspond": run_correspond,
    "unitarize": run_unitarize,
    "tensor": run_tensor,
    "verify": run_verify,
}
