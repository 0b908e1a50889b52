//! Self-contained dense complex linear-algebra kernel: Hermitian
//! eigendecomposition (cyclic complex Jacobi), SVD via the Gram matrix,
//! Moore-Penrose pseudoinverse, PSD square root and tests, spectral norm.
//!
//! Everything here is a pure function of immutable inputs and safe to call
//! concurrently. Desk scale only; no blocked kernels or sparse formats.

mod config;
mod decomp;
mod eigen;
mod matrix;

pub use config::ToleranceConfig;
pub use decomp::{is_psd, operator_norm, pinv, psd_sqrt, svd, Svd};
pub use eigen::{hermitian_eigen, hermitian_eigenvalues, HermitianEigen};
pub use matrix::ComplexMatrix;

pub(crate) use decomp::{rebuild, spectral_norm};
pub(crate) use eigen::{eigvals_symmetrized, lambda_max, lambda_min};
