"""Desk-scale invariant checks run by ``fplab verify``."""

from .invariant_suite import CheckResult, InvariantSuite, SuiteReport
from .tables import cayley_table, idempotent_indices, inverse_partners, nonassociative_triple
