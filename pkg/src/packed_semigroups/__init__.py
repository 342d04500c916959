"""Numerical semigroups with fixed multiplicity and embedding dimension.

Every such semigroup lies in the class of exactly one packed semigroup
(minimal generators inside [m, 2m-1]); each class is a tree whose nodes can
be enumerated under a Frobenius or genus bound, with Apéry sets read off a
residue table shared by the whole class.
"""

from .core import (
    NATURALS,
    AperyTable,
    NumericalSemigroup,
    WilfCheck,
    apery_sieve,
    canonicalize,
    frobenius,
    genus,
    is_member,
    minimal_generators,
    wilf_check,
)
from .diophantine import (
    HomogeneousEquation,
    MinimalSolutionSet,
    ResidueClassTable,
    apery_from_table,
    invariants_from_apery,
    minimal_congruence_solutions,
    minimal_homogeneous_solutions,
    residue_class_table,
)
from .errors import SemigroupError
from .kernels import BACKEND
from .packed import PackedFamily, enumerate_packed, is_packed, pack, reduction_chain
from .tree import (
    EnumerationResult,
    TreeNode,
    children,
    enumerate_class_frobenius,
    enumerate_class_genus,
    enumerate_family_frobenius,
    enumerate_family_genus,
    family_extremes,
    levels,
)
from .wilf import WilfReport, scan

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "NATURALS",
    "AperyTable",
    "EnumerationResult",
    "HomogeneousEquation",
    "MinimalSolutionSet",
    "NumericalSemigroup",
    "PackedFamily",
    "ResidueClassTable",
    "SemigroupError",
    "TreeNode",
    "WilfCheck",
    "WilfReport",
    "apery_from_table",
    "apery_sieve",
    "canonicalize",
    "children",
    "enumerate_class_frobenius",
    "enumerate_class_genus",
    "enumerate_family_frobenius",
    "enumerate_family_genus",
    "enumerate_packed",
    "family_extremes",
    "frobenius",
    "genus",
    "invariants_from_apery",
    "is_member",
    "is_packed",
    "levels",
    "minimal_congruence_solutions",
    "minimal_generators",
    "minimal_homogeneous_solutions",
    "pack",
    "reduction_chain",
    "residue_class_table",
    "scan",
    "wilf_check",
]
