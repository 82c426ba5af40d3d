"""Exact computations with finite-dimensional cocommutative Hopf algebras."""

from __future__ import annotations

from .errors import *  # noqa: F401,F403
from .linalg import FieldSpec, Matrix, Subspace, kernel_space, image_space, rref_basis, subspace_ops, quotient_split
from .hopf import (AxiomReport, HopfAlgebra, HopfMorphism, HopfSubalgebra, LeftIdealCoideal,
                   check_hopf_axioms, check_morphism, dual_fd, quotient_algebra, tensor_product)
from .groups import FiniteGroupTable, catalog_group, CATALOG
from .actions import ModuleAction, check_action_axioms
from .constructors import (group_algebra, truncated_primitive, hopf_from_group_hom, smash_product,
                           group_action, subgroup_subalgebra, find_group_like_iso)
from .categorical import (hkernel, cokernel, image_factorization, pullback, equalizer, h_inverse,
                          newman_phi, newman_psi, is_normal, Extension, check_split_short_five)
from .commutator import commute_check, huq_commutator, abelianization
from .xmod import (CrossedModule, check_crossed_module, ReflexiveGraph, GroupoidStructure,
                   split_epi_to_action, crossed_to_cat1, cat1_to_crossed, is_cat1, check_groupoid,
                   solve_multiplication, equivalence_verdicts, crossed_roundtrip, graph_roundtrip)

__version__ = "0.1.0"
