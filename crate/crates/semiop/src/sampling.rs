//! Seeded random generation shared by the ensemble, demo, and oracle code.
//!
//! Stream semantics: every consumer seeds a ChaCha8 generator with a
//! caller-supplied 64-bit seed, and independent substreams are obtained
//! through `set_stream`, so reports are bitwise reproducible regardless of
//! evaluation order. Rejected draws consume their stream positions.

use num_complex::Complex64;
use rand::Rng;

use crate::numerics::ComplexMatrix;

/// Standard normal via Box-Muller on uniform draws.
pub(crate) fn standard_normal<R: Rng>(rng: &mut R) -> f64 {
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen::<f64>();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

/// Complex standard normal, unit variance.
pub(crate) fn complex_normal<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::new(standard_normal(rng), standard_normal(rng)) * std::f64::consts::FRAC_1_SQRT_2
}

pub(crate) fn gaussian_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| complex_normal(rng)).collect()
}

pub(crate) fn gaussian_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> ComplexMatrix {
    ComplexMatrix::from_parts(rows, cols, gaussian_vector(rng, rows * cols))
}

/// Unit vector drawn uniformly from the complex sphere.
pub(crate) fn unit_vector<R: Rng>(rng: &mut R, n: usize) -> Vec<Complex64> {
    loop {
        let v = gaussian_vector(rng, n);
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-6 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Haar-like random unitary from Gram-Schmidt on a Gaussian matrix.
pub(crate) fn random_unitary<R: Rng>(rng: &mut R, n: usize) -> ComplexMatrix {
    loop {
        let g = gaussian_matrix(rng, n, n);
        if let Some(q) = gram_schmidt(&g) {
            return q;
        }
    }
}

fn gram_schmidt(m: &ComplexMatrix) -> Option<ComplexMatrix> {
    let n = m.rows();
    let mut q = m.clone();
    for j in 0..n {
        for _ in 0..2 {
            for k in 0..j {
                let mut dot = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    dot += q[(i, k)].conj() * q[(i, j)];
                }
                for i in 0..n {
                    let adjusted = q[(i, j)] - dot * q[(i, k)];
                    q[(i, j)] = adjusted;
                }
            }
        }
        let norm = (0..n).map(|i| q[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return None;
        }
        for i in 0..n {
            q[(i, j)] = q[(i, j)] / norm;
        }
    }
    Some(q)
}
