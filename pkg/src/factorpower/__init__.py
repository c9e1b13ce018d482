"""The factorpower semigroup FP+(G, M): elements, enumeration and structure."""

from .element import (FpElement, canonical_from_subset, identity_class, multiply, saturate,
                      star, unit_class)
from .enumeration import enumerate_fp, idempotent_census, unit_census
from .membership import is_member
from .relation_io import (element_from_relation, element_to_relation, format_relation_text,
                          parse_relation_text, relation_from_json, relation_to_json)
from .structure import (DClassInfo, IdempotentInfo, TraceZero, dclass_of, dclasses,
                        faithful_group, green_related, idempotents, is_inverse_trace,
                        trace_product, units_and_kernel)
