use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Numerical policy shared by every operation.
///
/// All decisions that the underlying mathematics leaves exact (rank, PSD
/// membership, convergence) are made against these declared cutoffs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct ToleranceConfig {
    /// Per-dimension base for the singular-value rank cutoff: values below
    /// `rank_rel_tol * dim * sigma_max` are treated as zero.
    pub rank_rel_tol: f64,
    /// Relative floor for positive-semidefiniteness tests and for clamping
    /// small negative eigenvalues of nominally PSD inputs.
    pub psd_tol: f64,
    /// Relative convergence tolerance for iterative radius estimates.
    pub conv_tol: f64,
    /// Relative tolerance for Hermitian-ness checks and eigen residuals.
    pub eig_tol: f64,
    /// Number of angles scanned when maximising over the unit circle.
    pub theta_grid: usize,
    /// Number of shift values scanned by the paranormality criterion.
    pub lambda_grid: usize,
    /// Squaring budget for the spectral-radius iteration.
    pub max_squarings: usize,
    /// Default doubling depth for joint-radius estimation.
    pub jsr_depth: usize,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rel_tol: 1e-12,
            psd_tol: 1e-10,
            conv_tol: 1e-10,
            eig_tol: 1e-13,
            theta_grid: 720,
            lambda_grid: 512,
            max_squarings: 50,
            jsr_depth: 20,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            (self.rank_rel_tol, "rank_rel_tol must be positive and finite"),
            (self.psd_tol, "psd_tol must be positive and finite"),
            (self.conv_tol, "conv_tol must be positive and finite"),
            (self.eig_tol, "eig_tol must be positive and finite"),
        ];
        for (value, msg) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::InvalidConfig(msg));
            }
        }
        let counted = [
            (self.theta_grid, "theta_grid must be at least 2"),
            (self.lambda_grid, "lambda_grid must be at least 2"),
            (self.max_squarings, "max_squarings must be at least 2"),
            (self.jsr_depth, "jsr_depth must be at least 2"),
        ];
        for (value, msg) in counted {
            if value < 2 {
                return Err(Error::InvalidConfig(msg));
            }
        }
        Ok(())
    }

    /// Effective relative rank cutoff for a problem of the given dimension.
    pub fn rank_cutoff(&self, dim: usize) -> f64 {
        self.rank_rel_tol * dim as f64
    }
}
