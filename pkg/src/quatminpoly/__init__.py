"""Closed-form minimal polynomials of structured 4x4 real matrices.

Every 4x4 real matrix is a sum of terms p (x) q acting as x -> p x conj(q) on
quaternions.  For the classical structured families the coefficients of that
representation give the minimal polynomial directly; a Gram-matrix oracle
checks every closed form numerically.
"""
from .applications import (
    CayleyCoefficients,
    JordanReport,
    RankCertificate,
    SingularTriple,
    cayley_skew_hamiltonian,
    jordan_skew_hamiltonian,
    singular_values_3x3,
    verify_rank_two,
)
from .clifford import (
    Multivector06,
    Octonion,
    cl06_build,
    cl06_generators,
    cl06_quadratic_check,
    cl22_antifixed_by_reversion_matrix,
    cl22_antifixed_by_reversion_minpoly,
    cl22_fixed_by_reversion_matrix,
    cl22_fixed_by_reversion_minpoly,
    octonion_mul,
    omega,
    omega_product_annihilator,
    theta,
    theta_product_annihilator,
)
from .closed_form import BranchReport, closed_form_minpoly
from .errors import (
    ConsistencyViolation,
    NotInFamily,
    QuatMinpolyError,
    RankDecisionAmbiguous,
    RankDeficientFactorization,
    ScalarInput,
    SpectrumContainsMinusOne,
    UnsupportedGrade,
    ZeroProduct,
)
from .families import (
    FamilyTag,
    HamiltonianParams,
    PerskewParams,
    SkewHamiltonianParams,
    SkewSymmetricParams,
    SpecialOrthogonalParams,
    SymmetricParams,
    build_matrix,
    detect_families,
    extract_params,
    in_family,
)
from .oracle import characteristic_polynomial, minimal_polynomial_oracle
from .polynomial import Polynomial, poly_gcd, poly_lcm, screen_shortlist
from .quaternion import PureQuaternion, Quaternion, quat_mul
from .tensor import J4, R4, TensorElement, matrix_to_tensor, tensor, tensor_conj, tensor_mul, tensor_to_matrix

__version__ = "0.1.0"
