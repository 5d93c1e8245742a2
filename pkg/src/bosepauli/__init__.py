"""Oscillator realizations of the Pauli pseudospin operators on truncated
Fock spaces, with exact identity certification, cat-state resolutions of
identity, and Grassmann-eigenvalue eigenvectors of the lowering operator.

Everything is a pure function over immutable inputs (frozen dataclasses and
fresh numpy arrays), safe to share across threads.
"""

from ._version import __version__
from .coherent import (
    RESOLUTION_VARIANTS,
    QuadratureGrid,
    coherent_ket,
    deformed_annihilator,
    even_ket,
    ladder_commutator_residual,
    nonlinear_coherent_ket,
    nonlinear_eigen_residual,
    odd_ket,
    phase_relation_residual,
    quadrature_grid,
    resolution_residual,
)
from .fock import (
    FockSpace,
    annihilator,
    anticommutator,
    apply,
    commutator,
    creator,
    dagger,
    diagonal_from_function,
    fock_ket,
    inner,
    max_abs_norm,
    number_operator,
)
from .grassmann import (
    THETA,
    GrassmannKet,
    GrassmannScalar,
    apply_operator,
    eigen_check,
    grassmann_ket,
    grassmann_scale,
    max_abs_amplitude,
    sigma_minus_eigenket,
)
from .pauli import (
    BosonizationParams,
    IdentityCheck,
    PauliSet,
    algebra_residuals,
    closed_form_sigma_minus,
    f_coefficient,
    parity_projectors,
    pauli_set,
    sigma_minus,
    sigma_three,
    two_level_restriction,
    verify_functional_equation,
)
from .report import (
    CheckRecord,
    VerificationReport,
    algebra_suite,
    grassmann_suite,
    quadrature_suite,
)

__all__ = [
    "__version__",
    "FockSpace",
    "annihilator",
    "creator",
    "number_operator",
    "diagonal_from_function",
    "dagger",
    "commutator",
    "anticommutator",
    "max_abs_norm",
    "apply",
    "inner",
    "fock_ket",
    "BosonizationParams",
    "PauliSet",
    "IdentityCheck",
    "f_coefficient",
    "verify_functional_equation",
    "sigma_minus",
    "closed_form_sigma_minus",
    "sigma_three",
    "parity_projectors",
    "pauli_set",
    "two_level_restriction",
    "algebra_residuals",
    "coherent_ket",
    "even_ket",
    "odd_ket",
    "phase_relation_residual",
    "QuadratureGrid",
    "quadrature_grid",
    "RESOLUTION_VARIANTS",
    "resolution_residual",
    "nonlinear_coherent_ket",
    "deformed_annihilator",
    "nonlinear_eigen_residual",
    "ladder_commutator_residual",
    "GrassmannScalar",
    "GrassmannKet",
    "THETA",
    "grassmann_ket",
    "apply_operator",
    "grassmann_scale",
    "max_abs_amplitude",
    "sigma_minus_eigenket",
    "eigen_check",
    "CheckRecord",
    "VerificationReport",
    "algebra_suite",
    "quadrature_suite",
    "grassmann_suite",
]
