//! Exact computation of the operator K-theory groups K_0 and K_1 of the
//! crossed product of the d-torus by an integer dilation matrix, together
//! with the machinery behind it: fraction-free integer linear algebra, Smith
//! normal form, exact eigenvalue-modulus certification, compound and
//! adjugate-compound matrices on exterior powers, and a symbolic model of
//! the underlying transfer-operator bimodule on Laurent polynomials.
//!
//! All K-theory paths are float-free; floating point appears only in
//! explicitly advisory cross-checks (`DilationCertificate::
//! float_eigenvalue_crosscheck`, `norm_decay`, and the numeric part of
//! `check_orthonormal`).

pub mod bimodule;
pub mod compound;
pub mod dilation;
pub mod error;
pub mod ktheory;
pub mod laurent;
pub mod matrix;
pub mod serde_util;
pub mod smith;
pub mod subsets;

pub use bimodule::{
    alpha, build_filterbank, check_orthonormal, inner, kernel_representatives, module_action,
    omega, reconstruct, transfer, FilterBank, OmegaMatrix, OrthonormalReport,
};
pub use compound::{
    adjugate_compound_b, adjugate_compound_b_unchecked, b1_closed_form, bd1_closed_form,
    compound_c, laplace_identity_diag, laplace_identity_offdiag, minor, GradedFamily,
};
pub use dilation::{
    block_transpose_permutation, certify_dilation, norm_decay, spectral_norm,
    DilationCertificate, NormDecay,
};
pub use error::{Error, Result};
pub use ktheory::{
    cokernel, identity_class, injectivity_report, kgroups, one_minus_b, AbelianGroup, CaseTag,
    GradeSummand, IdentityClass, KTheoryResult, Parity,
};
pub use laurent::LaurentPolynomial;
pub use matrix::{IntegerMatrix, RationalMatrix};
pub use smith::{smith_normal_form, SmithDecomposition};
pub use subsets::{binomial, enumerate_subsets, tau_sign, SubsetIndex};
