"""Exact symmetric-group combinatorics: partitions, characters, Specht matrices."""

from .characters import (ClassFunction, FoulkesReport, FoulkesRow, block_permuting_order,
                         character_table, foulkes_check, induced_multiplicity, kostka,
                         cycle_representative, mn_character, permutation_character,
                         set_partition_character, specht_dim, uniform_set_partitions)
from .partitions import (IntegerPartition, MultiPartition, block_shape_multiplicities,
                         centralizer_order, class_size, consecutive_partition, multipartitions, partitions,
                         set_partition_shape)
from .specht import SpechtRepresentation, specht_matrices, standard_tableaux
