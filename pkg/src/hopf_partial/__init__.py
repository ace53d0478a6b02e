"""Exact-arithmetic partial representations of finite-dimensional Hopf algebras.

The package computes with partial modules over a Hopf algebra given by
structure constants: axiom checking, global cores and shadows, restriction
of projected global modules, standard dilations, globalization of partial
module algebras, partial/global smash products and their Morita context.
All arithmetic is exact rational.
"""

from .linalg import Mat, Subspace, ShapeError, kron, kernel_basis, span_closure, quotient_map
from .reports import Check, ValidationError, ValidationReport
from .hopf import (HopfAlgebraData, builtin, cop, dual_group_algebra,
                   group_algebra, sweedler_h4, validate_hopf)
from .partial import (ModuleMorphism, PartialModule, base_subalgebra,
                      check_partial_rep, classify_dual_c2, classify_sweedler,
                      direct_sum, global_core, global_shadow, hom_space,
                      image_algebra, is_global, is_pure, regular_module,
                      tensor_over_base, tensor_with_global, trivial_module,
                      w_n_module)
from .projection import (ProjectedModule, adjoint_op, check_c_condition,
                         check_equivalence_lemma, minimalize, restrict,
                         tilde_op)
from .dilation import (Dilation, check_dilation, dilate_morphism,
                       dilation_preserves_sums, global_iff_phi_iso,
                       standard_dilation, universal_morphism)
from .actions import (GlobalModuleAlgebra, PartialModuleAlgebra, SmashAlgebra,
                      check_partial_action, global_smash, globalize,
                      induced_partial_algebra, morita_context, partial_smash,
                      zeta_xi)

__version__ = "0.1.0"
