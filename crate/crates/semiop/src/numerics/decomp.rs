use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::eigen::{eigvals_symmetrized, hermitian_eigen, lambda_max};
use crate::numerics::{ComplexMatrix, ToleranceConfig};

/// Left singular vectors are formed as M v / sigma only where sigma is
/// meaningfully above roundoff; below this the basis is completed instead.
const LEFT_VECTOR_REL_FLOOR: f64 = 1e-13;

/// Thin singular value decomposition `M = U diag(sigma) V*`.
///
/// Computed from the eigendecomposition of M*M, which is accurate for
/// singular values down to roughly sqrt(eps) * sigma_max; that covers every
/// rank decision made at the configured cutoffs.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub v: ComplexMatrix,
}

pub fn svd(m: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<Svd> {
    let rows = m.rows();
    let cols = m.cols();
    let k = rows.min(cols);

    let gram = &m.adjoint() * m;
    let eig = hermitian_eigen(&gram, cfg)?;

    // Descending singular values; gram eigenvalues arrive ascending.
    let mut sigma = Vec::with_capacity(k);
    let mut v = ComplexMatrix::zeros(cols, k);
    for idx in 0..k {
        let src = cols - 1 - idx;
        sigma.push(eig.eigenvalues[src].max(0.0).sqrt());
        for i in 0..cols {
            v[(i, idx)] = eig.eigenvectors[(i, src)];
        }
    }

    let sigma_max = sigma.first().copied().unwrap_or(0.0);
    let floor = LEFT_VECTOR_REL_FLOOR * sigma_max;
    let mut u = ComplexMatrix::zeros(rows, k);
    let mut formed = vec![false; k];
    for j in 0..k {
        if sigma[j] > floor && sigma[j] > 0.0 {
            let col = m.matvec(&v.column(j))?;
            for i in 0..rows {
                u[(i, j)] = col[i] / sigma[j];
            }
            formed[j] = true;
        }
    }
    complete_columns(&mut u, &formed);

    Ok(Svd { u, singular_values: sigma, v })
}

/// Fill unformed columns with an orthonormal completion against all columns
/// already in place, drawing candidates from the standard basis (twice-run
/// Gram-Schmidt).
fn complete_columns(u: &mut ComplexMatrix, formed: &[bool]) {
    let rows = u.rows();
    let k = u.cols();
    let mut set = formed.to_vec();
    let mut next_candidate = 0usize;
    for j in 0..k {
        if set[j] {
            continue;
        }
        while next_candidate < rows {
            let mut col = vec![Complex64::new(0.0, 0.0); rows];
            col[next_candidate] = Complex64::new(1.0, 0.0);
            next_candidate += 1;
            for _ in 0..2 {
                for other in 0..k {
                    if !set[other] {
                        continue;
                    }
                    let mut dot = Complex64::new(0.0, 0.0);
                    for i in 0..rows {
                        dot += u[(i, other)].conj() * col[i];
                    }
                    for i in 0..rows {
                        col[i] -= dot * u[(i, other)];
                    }
                }
            }
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm > 0.5 {
                for i in 0..rows {
                    u[(i, j)] = col[i] / norm;
                }
                set[j] = true;
                break;
            }
        }
    }
}

/// Moore-Penrose pseudoinverse. Singular values at or below
/// `rank_cutoff(max(m, n)) * sigma_max` are treated as zero.
pub fn pinv(m: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<ComplexMatrix> {
    let decomposition = svd(m, cfg)?;
    let sigma_max = decomposition.singular_values.first().copied().unwrap_or(0.0);
    let cutoff = cfg.rank_cutoff(m.rows().max(m.cols())) * sigma_max;

    let mut out = ComplexMatrix::zeros(m.cols(), m.rows());
    for (j, &s) in decomposition.singular_values.iter().enumerate() {
        if s <= cutoff || s == 0.0 {
            continue;
        }
        let inv = 1.0 / s;
        for i in 0..m.cols() {
            let vi = decomposition.v[(i, j)] * inv;
            for l in 0..m.rows() {
                out[(i, l)] += vi * decomposition.u[(l, j)].conj();
            }
        }
    }
    Ok(out)
}

/// PSD square root via the spectral decomposition. Eigenvalues within
/// `-psd_tol * lambda_max` of zero are clamped; anything lower is rejected.
pub fn psd_sqrt(a: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<ComplexMatrix> {
    let eig = hermitian_eigen(a, cfg)?;
    let lam_max = eig.eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let floor = -cfg.psd_tol * lam_max;
    let min = eig.eigenvalues[0];
    if min < floor {
        return Err(Error::NotPositive { min_eigenvalue: min });
    }
    let roots: Vec<f64> = eig.eigenvalues.iter().map(|&l| l.max(0.0).sqrt()).collect();
    Ok(rebuild(&eig.eigenvectors, &roots))
}

/// `V diag(d) V*` for a unitary V and real d.
pub(crate) fn rebuild(v: &ComplexMatrix, d: &[f64]) -> ComplexMatrix {
    let n = v.rows();
    let mut scaled = v.clone();
    for j in 0..n {
        for i in 0..n {
            scaled[(i, j)] = scaled[(i, j)] * d[j];
        }
    }
    &scaled * &v.adjoint()
}

/// PSD test: Hermitian within `eig_tol` and `lambda_min >= -psd_tol * max(1, lambda_max)`.
/// The minimum eigenvalue of the symmetrized part is returned either way.
pub fn is_psd(h: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<(bool, f64)> {
    h.require_square()?;
    let vals = eigvals_symmetrized(h)?;
    let min = vals[0];
    let max = *vals.last().expect("nonempty");
    let scale = h.frobenius_norm().max(1.0);
    let hermitian = h.hermitian_residual() <= cfg.eig_tol * scale;
    let psd = hermitian && min >= -cfg.psd_tol * max.max(1.0);
    Ok((psd, min))
}

/// Spectral norm sigma_max(M).
pub fn operator_norm(m: &ComplexMatrix, _cfg: &ToleranceConfig) -> f64 {
    spectral_norm(m)
}

pub(crate) fn spectral_norm(m: &ComplexMatrix) -> f64 {
    if m.is_zero() {
        return 0.0;
    }
    let gram = &m.adjoint() * m;
    lambda_max(&gram).expect("gram matrix is square").max(0.0).sqrt()
}
