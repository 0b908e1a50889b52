use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, ToleranceConfig};

/// Stop when the off-diagonal Frobenius mass falls below this multiple of
/// the input's Frobenius norm.
const OFF_DIAGONAL_REL_TOL: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

/// Eigendecomposition of a Hermitian matrix: `H = V diag(λ) V*` with real
/// eigenvalues sorted ascending and unitary `V`.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: ComplexMatrix,
}

/// Cyclic Jacobi with complex rotations on the symmetrized input.
///
/// The input must be Hermitian within `cfg.eig_tol` relative to its
/// Frobenius norm; (H + H*)/2 is what actually gets iterated.
pub fn hermitian_eigen(h: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<HermitianEigen> {
    check_hermitian(h, cfg)?;
    let (values, vectors) = jacobi(h, true)?;
    Ok(HermitianEigen { eigenvalues: values, eigenvectors: vectors.expect("vectors requested") })
}

/// Eigenvalues only, ascending. Shares the pre-condition of [`hermitian_eigen`].
pub fn hermitian_eigenvalues(h: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<Vec<f64>> {
    check_hermitian(h, cfg)?;
    Ok(jacobi(h, false)?.0)
}

fn check_hermitian(h: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<()> {
    h.require_square()?;
    let scale = h.frobenius_norm().max(1.0);
    let residual = h.hermitian_residual();
    if residual > cfg.eig_tol * scale {
        return Err(Error::NotHermitian { residual: residual / scale });
    }
    Ok(())
}

/// Ascending eigenvalues of a matrix that is Hermitian by construction;
/// skips the residual check, for hot scan loops.
pub(crate) fn eigvals_symmetrized(h: &ComplexMatrix) -> Result<Vec<f64>> {
    Ok(jacobi(h, false)?.0)
}

pub(crate) fn lambda_max(h: &ComplexMatrix) -> Result<f64> {
    let vals = eigvals_symmetrized(h)?;
    Ok(*vals.last().expect("nonempty by matrix invariant"))
}

pub(crate) fn lambda_min(h: &ComplexMatrix) -> Result<f64> {
    let vals = eigvals_symmetrized(h)?;
    Ok(vals[0])
}

fn jacobi(input: &ComplexMatrix, want_vectors: bool) -> Result<(Vec<f64>, Option<ComplexMatrix>)> {
    let n = input.require_square()?;
    let mut h = input.hermitian_part()?;
    let scale = h.frobenius_norm();
    let mut v = want_vectors.then(|| ComplexMatrix::identity(n));

    if n == 1 {
        let value = h[(0, 0)].re;
        return Ok((vec![value], v));
    }

    let threshold = OFF_DIAGONAL_REL_TOL * scale;
    let mut converged = scale == 0.0;
    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&h) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut h, v.as_mut(), p, q);
            }
        }
    }
    if !converged && off_diagonal_norm(&h) > threshold {
        return Err(Error::ConvergenceFailure {
            what: "Jacobi eigensolver",
            residual: off_diagonal_norm(&h) / scale.max(1.0),
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| h[(a, a)].re.partial_cmp(&h[(b, b)].re).expect("finite diagonals"));
    let values: Vec<f64> = order.iter().map(|&i| h[(i, i)].re).collect();
    let vectors = v.map(|v| {
        let mut sorted = ComplexMatrix::zeros(n, n);
        for (new_col, &old_col) in order.iter().enumerate() {
            for i in 0..n {
                sorted[(i, new_col)] = v[(i, old_col)];
            }
        }
        sorted
    });
    Ok((values, vectors))
}

/// One two-sided rotation zeroing the (p, q) entry. The complex pivot is
/// reduced to the real case by the phase factor e^{iφ} = H[p][q] / |H[p][q]|.
fn rotate(h: &mut ComplexMatrix, v: Option<&mut ComplexMatrix>, p: usize, q: usize) {
    let beta = h[(p, q)];
    let b = beta.norm();
    if b == 0.0 {
        return;
    }
    let phase = beta / b;
    let alpha = h[(p, p)].re;
    let delta = h[(q, q)].re;
    let tau = (delta - alpha) / (2.0 * b);
    let t = if tau >= 0.0 {
        1.0 / (tau + (1.0 + tau * tau).sqrt())
    } else {
        -1.0 / (-tau + (1.0 + tau * tau).sqrt())
    };
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;

    let n = h.rows();
    let jp = phase * c; // J[p][p]
    let jq = phase * s; // J[p][q]

    // H <- H J  (columns p, q)
    for i in 0..n {
        let hp = h[(i, p)];
        let hq = h[(i, q)];
        h[(i, p)] = hp * jp - hq * s;
        h[(i, q)] = hp * jq + hq * c;
    }
    // H <- J* H  (rows p, q)
    for j in 0..n {
        let hp = h[(p, j)];
        let hq = h[(q, j)];
        h[(p, j)] = hp * jp.conj() - hq * s;
        h[(q, j)] = hp * jq.conj() + hq * c;
    }
    h[(p, q)] = Complex64::new(0.0, 0.0);
    h[(q, p)] = Complex64::new(0.0, 0.0);
    h[(p, p)] = Complex64::new(h[(p, p)].re, 0.0);
    h[(q, q)] = Complex64::new(h[(q, q)].re, 0.0);

    if let Some(v) = v {
        for i in 0..n {
            let vp = v[(i, p)];
            let vq = v[(i, q)];
            v[(i, p)] = vp * jp - vq * s;
            v[(i, q)] = vp * jq + vq * c;
        }
    }
}

fn off_diagonal_norm(h: &ComplexMatrix) -> f64 {
    let n = h.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += h[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> ToleranceConfig {
        ToleranceConfig::default()
    }

    pub(crate) fn eigen_residual(h: &ComplexMatrix, eig: &HermitianEigen) -> f64 {
        let n = h.rows();
        let v = &eig.eigenvectors;
        let hv = &h.hermitian_part().unwrap() * v;
        let mut vl = v.clone();
        for j in 0..n {
            for i in 0..n {
                vl[(i, j)] = vl[(i, j)] * eig.eigenvalues[j];
            }
        }
        (&hv - &vl).frobenius_norm()
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let eig = hermitian_eigen(&ComplexMatrix::identity(3), &cfg()).unwrap();
        assert_eq!(eig.eigenvalues, vec![1.0, 1.0, 1.0]);
        let vtv = &eig.eigenvectors.adjoint() * &eig.eigenvectors;
        assert!(vtv.max_abs_diff(&ComplexMatrix::identity(3)) < 1e-14);
    }

    #[test]
    fn rank_one_all_ones_matrix() {
        // closed-form roots of lambda^2 - 2 lambda
        let h = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        let eig = hermitian_eigen(&h, &cfg()).unwrap();
        assert!((eig.eigenvalues[0] - 0.0).abs() < 1e-14);
        assert!((eig.eigenvalues[1] - 2.0).abs() < 1e-14);
        assert!(eigen_residual(&h, &eig) < 1e-13);
    }

    #[test]
    fn block_three_dim_example() {
        // block closed form: spectrum {0, 1, 4}
        let h = ComplexMatrix::from_real_rows(&[&[2.0, 0.0, 2.0], &[0.0, 1.0, 0.0], &[2.0, 0.0, 2.0]])
            .unwrap();
        let eig = hermitian_eigen(&h, &cfg()).unwrap();
        let expect = [0.0, 1.0, 4.0];
        for (got, want) in eig.eigenvalues.iter().zip(expect) {
            assert!((got - want).abs() < 1e-13, "got {got}, want {want}");
        }
    }

    #[test]
    fn complex_hermitian_with_phase() {
        let h = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 2.0),
                Complex64::new(0.0, -2.0),
                Complex64::new(-1.0, 0.0),
            ],
        )
        .unwrap();
        // eigenvalues of [[1, 2i], [-2i, -1]] are ±sqrt(5)
        let eig = hermitian_eigen(&h, &cfg()).unwrap();
        assert!((eig.eigenvalues[0] + 5f64.sqrt()).abs() < 1e-13);
        assert!((eig.eigenvalues[1] - 5f64.sqrt()).abs() < 1e-13);
        assert!(eigen_residual(&h, &eig) < 1e-13);
    }

    #[test]
    fn rejects_non_square_and_non_hermitian() {
        let rect = ComplexMatrix::zeros(2, 3);
        assert!(matches!(hermitian_eigen(&rect, &cfg()), Err(Error::NonSquare { .. })));

        let skew = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        assert!(matches!(hermitian_eigen(&skew, &cfg()), Err(Error::NotHermitian { .. })));
    }
}
