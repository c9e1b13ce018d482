"""
fplab - Core Package

Factorpower semigroups of finite permutation groups: structure, simple
modules and the identities relating them to symmetric-group combinatorics.
"""

__version__ = "0.1.0"
