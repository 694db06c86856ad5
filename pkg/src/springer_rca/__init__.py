"""Exact spherical rational Cherednik algebra action on curve Hilbert schemes.

The package computes, entirely over the rationals, the monopole-operator
action on the torus-equivariant homology of Hilbert schemes of points on the
plane curve germs x^n = t^k (coprime n, k), and machine-checks the algebra
relations and module structure at finite graded truncation.
"""

__version__ = "0.1.0"

from .core import (
    GradedBasis,
    Params,
    StabilizerCocharacter,
    build_graded_basis,
    degree,
    enumerate_fixed_points,
    is_admissible,
    phi_weights,
    stabilizer_cocharacter,
)
from .errors import (
    DimensionError,
    SearchBudgetError,
    SpringerRcaError,
    TruncationError,
    UnderTruncationError,
    UnsupportedParametersError,
)
from .operators import (
    DressPolynomial,
    GradedOperator,
    MinusculeCoweight,
    abelian_monopole_coeff,
    bracket_pow,
    commutator,
    excess_factor,
    identity_operator,
    minuscule_monopole,
    operator_e,
    operator_f,
    operator_h,
    operator_x,
    operator_y,
)
from .qseries import (
    QPolynomial,
    betti_2k,
    compactified_jacobian_dim,
    euler_series,
    qbinomial,
)
from .semigroup import (
    NumericalSemigroup,
    SemigroupIdeal,
    compare_with_fixed_points,
    count_ideals,
)
from .verify import (
    GradedKernelSummary,
    VerificationReport,
    applicable_suites,
    check_weyl_relation,
    finite_part_character,
    kernel_y,
    lowest_weight_decomposition,
    run_suite,
    singular_vectors,
    verify_stabilizer,
)
