"""Matrix representations of factorpowers: V_H, L(H, X), intertwiners, forms."""

from .domain import SemigroupDomain, random_elements, semigroup_domain
from .group_irreps import GroupIrrep, group_irreps
from .intertwiner import Decomposition, decompose, multiplicity
from .matrix_rep import EXACT, FLOAT, MatrixRep, direct_sum, dual, rep_to_json, tensor
from .simple_modules import (JacobsonAccounting, SimpleModuleBuilder, SimpleModuleDescriptor,
                             build_simple, jacobson_accounting, restriction_check,
                             simple_descriptors, vbimodule)
from .unitary import HermitianForm, dual_check, unitarize
