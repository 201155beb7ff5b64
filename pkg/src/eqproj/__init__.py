"""Torus-equivariant cohomology of ordinary and weighted projective space.

Classes are tuples of polynomials indexed by the fixed points x_0..x_n.
"""

from .canonical import (
    kawasaki_constant,
    schubert_class,
    verify_canonical_axioms,
    weighted_canonical_class,
)
from .errors import (
    DimensionError,
    InvalidDivisorError,
    InvalidWeightError,
    InvariantViolation,
    NotRepresentableError,
)
from .gkm import GkmGraph, LocalizedClass, class_arith, edge_weight, is_gkm_member
from .polyring import (
    LinearForm,
    Polynomial,
    divided_difference,
    exact_div_linear,
    from_alpha_basis,
    is_nonneg_in_alpha,
    poly_arith,
    scale_vars,
    swap_vars,
    to_alpha_basis,
)
from .structconst import (
    StructureTable,
    positivity_certificate,
    struct_const_closed,
    struct_consts_oracle,
    verify_expansion,
    weighted_struct_const,
)

__version__ = "0.1.0"
