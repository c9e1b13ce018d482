"""The factorizable dual symmetric inverse monoid F*_n."""

from .correspondence import (CorrespondenceReport, CorrespondenceRow, correspondence_check,
                             simple_dimensions)
from .fstar import (DimensionIdentity, DualDClass, FStarElement, canonical_coset_rep,
                    dimension_identity, fstar_count, fstar_enumerate, fstar_from_text,
                    fstar_hclass, fstar_idempotents, fstar_inverse, fstar_multiply,
                    fstar_structure, fstar_units, hclass_table, idempotent_count,
                    young_subgroup_order)
