//! Independent cross-checks used by the test suites. Nothing here sits on a
//! production path: each function re-derives a quantity by a different
//! algorithm so the main implementations can be validated against it.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::numerics::{lambda_max, spectral_norm, ComplexMatrix};
use crate::sampling::unit_vector;

/// Spectral radius as the maximum modulus root of the characteristic
/// polynomial: coefficients by the Faddeev-LeVerrier recursion, roots by
/// Durand-Kerner iteration. Intended for small matrices only.
pub fn spectral_radius_charpoly(m: &ComplexMatrix) -> f64 {
    let n = m.rows();
    assert!(m.is_square(), "characteristic polynomial needs a square matrix");
    let scale = spectral_norm(m);
    if scale == 0.0 {
        return 0.0;
    }
    let s = m.scale(1.0 / scale);

    // det(zI - S) = z^n + c[0] z^{n-1} + ... + c[n-1]
    let mut coeffs = Vec::with_capacity(n);
    let mut mk = s.clone();
    for k in 1..=n {
        let trace: Complex64 = (0..n).map(|i| mk[(i, i)]).sum();
        let ck = -trace / k as f64;
        coeffs.push(ck);
        if k < n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[(i, i)] += ck;
            }
            mk = &s * &shifted;
        }
    }

    let roots = durand_kerner(&coeffs);
    roots.iter().map(|z| z.norm()).fold(0.0, f64::max) * scale
}

/// Roots of the monic polynomial z^n + c[0] z^{n-1} + ... + c[n-1].
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for &c in coeffs {
            acc = acc * z + c;
        }
        acc
    };

    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    roots
}

/// Classical numerical radius by brute force over a dense uniform angle
/// grid, evaluated in parallel. The production path must agree with this
/// to the grid's quadratic accuracy near smooth maxima.
pub fn numerical_radius_grid(m: &ComplexMatrix, points: usize) -> f64 {
    assert!(m.is_square());
    if m.is_zero() {
        return 0.0;
    }
    let half = m.scale(0.5);
    let real_part = &half + &half.adjoint();
    let imag_part = (&half - &half.adjoint()).scale_complex(Complex64::new(0.0, 1.0));
    let step = 2.0 * std::f64::consts::PI / points as f64;
    (0..points)
        .into_par_iter()
        .map(|k| {
            let theta = step * k as f64;
            let h = &real_part.scale(theta.cos()) + &imag_part.scale(theta.sin());
            lambda_max(&h).expect("square by construction")
        })
        .reduce(|| f64::NEG_INFINITY, f64::max)
}

/// Worst paranormality slack min_{|y|=1} (‖S²y‖² − ‖Sy‖⁴) by projected
/// gradient descent on the unit sphere with seeded random restarts.
/// Independent of the shift-family criterion used by the classifier.
pub fn paranormal_sphere_slack(s_r: &ComplexMatrix, restarts: usize, iters: usize, seed: u64) -> f64 {
    let n = s_r.rows();
    assert!(s_r.is_square());
    let b = &s_r.adjoint() * s_r;
    let s2 = s_r * s_r;
    let c = &s2.adjoint() * &s2;

    let scale = spectral_norm(s_r).max(1e-30);
    let step0 = 0.25 / (scale.powi(4).max(scale * scale)).max(1e-30);

    let objective = |y: &[Complex64]| -> f64 {
        let by = b.matvec(y).expect("dim");
        let cy = c.matvec(y).expect("dim");
        let quad_b: f64 = y.iter().zip(&by).map(|(yi, bi)| (yi.conj() * bi).re).sum();
        let quad_c: f64 = y.iter().zip(&cy).map(|(yi, ci)| (yi.conj() * ci).re).sum();
        quad_c - quad_b * quad_b
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = f64::INFINITY;
    for _ in 0..restarts.max(1) {
        let mut y = unit_vector(&mut rng, n);
        let mut value = objective(&y);
        let mut step = step0;
        for _ in 0..iters {
            let by = b.matvec(&y).expect("dim");
            let cy = c.matvec(&y).expect("dim");
            let quad_b: f64 = y.iter().zip(&by).map(|(yi, bi)| (yi.conj() * bi).re).sum();
            // gradient of y*Cy - (y*By)^2 with respect to conj(y)
            let grad: Vec<Complex64> =
                cy.iter().zip(&by).map(|(ci, bi)| ci - bi * (2.0 * quad_b)).collect();
            let inner: f64 = y.iter().zip(&grad).map(|(yi, gi)| (yi.conj() * gi).re).sum();
            let tangent: Vec<Complex64> =
                grad.iter().zip(&y).map(|(gi, yi)| gi - yi * inner).collect();
            let tangent_norm = tangent.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if tangent_norm < 1e-15 {
                break;
            }
            // backtracking descent step, renormalized to the sphere
            let mut advanced = false;
            for _ in 0..30 {
                let candidate: Vec<Complex64> =
                    y.iter().zip(&tangent).map(|(yi, ti)| yi - ti * step).collect();
                let norm = candidate.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-12 {
                    step *= 0.5;
                    continue;
                }
                let candidate: Vec<Complex64> =
                    candidate.into_iter().map(|z| z / norm).collect();
                let candidate_value = objective(&candidate);
                if candidate_value < value {
                    y = candidate;
                    value = candidate_value;
                    step *= 1.5;
                    advanced = true;
                    break;
                }
                step *= 0.5;
            }
            if !advanced {
                break;
            }
        }
        best = best.min(value);
    }
    best
}

/// Maximal-radius cross-check: maximize |⟨Sy, y⟩| over near-norming unit
/// vectors (‖Sy‖ within `window` of ‖S‖) by penalized projected ascent from
/// seeded restarts. Validates the singular-cluster compression route.
pub fn max_radius_norming_search(
    s_r: &ComplexMatrix,
    window: f64,
    restarts: usize,
    iters: usize,
    seed: u64,
) -> f64 {
    let n = s_r.rows();
    assert!(s_r.is_square());
    let sigma = spectral_norm(s_r);
    if sigma == 0.0 {
        return 0.0;
    }
    let gram = &s_r.adjoint() * s_r;
    let floor = (sigma * (1.0 - window)).powi(2);
    let penalty = 1e6 * sigma * sigma;

    let score = |y: &[Complex64]| -> (f64, f64) {
        let sy_sq: f64 = {
            let gy = gram.matvec(y).expect("dim");
            y.iter().zip(&gy).map(|(yi, gi)| (yi.conj() * gi).re).sum()
        };
        let sy = s_r.matvec(y).expect("dim");
        let form: Complex64 = sy.iter().zip(y).map(|(si, yi)| si * yi.conj()).sum();
        let deficit = (floor - sy_sq).max(0.0);
        (form.norm() - penalty * deficit, form.norm())
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = 0.0f64;
    let step0 = 0.1 / sigma.max(1.0);
    for _ in 0..restarts.max(1) {
        let mut y = unit_vector(&mut rng, n);
        let (mut value, _) = score(&y);
        let mut step = step0;
        for _ in 0..iters {
            // numeric gradient is robust here given the kink in the penalty
            let gradient = numeric_gradient(&score, &y);
            let inner: f64 = y.iter().zip(&gradient).map(|(yi, gi)| (yi.conj() * gi).re).sum();
            let tangent: Vec<Complex64> =
                gradient.iter().zip(&y).map(|(gi, yi)| gi - yi * inner).collect();
            let mut advanced = false;
            for _ in 0..25 {
                let candidate: Vec<Complex64> =
                    y.iter().zip(&tangent).map(|(yi, ti)| yi + ti * step).collect();
                let norm = candidate.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
                if norm < 1e-12 {
                    step *= 0.5;
                    continue;
                }
                let candidate: Vec<Complex64> = candidate.into_iter().map(|z| z / norm).collect();
                let (candidate_value, _) = score(&candidate);
                if candidate_value > value {
                    y = candidate;
                    value = candidate_value;
                    step *= 1.3;
                    advanced = true;
                    break;
                }
                step *= 0.5;
            }
            if !advanced {
                break;
            }
        }
        let (final_value, form) = score(&y);
        if final_value > 0.0 || (final_value - form).abs() < 1e-12 {
            best = best.max(form);
        }
    }
    best
}

fn numeric_gradient(
    score: &dyn Fn(&[Complex64]) -> (f64, f64),
    y: &[Complex64],
) -> Vec<Complex64> {
    let h = 1e-7;
    let base = score(y).0;
    let mut grad = vec![Complex64::new(0.0, 0.0); y.len()];
    let mut probe = y.to_vec();
    for i in 0..y.len() {
        probe[i] = y[i] + Complex64::new(h, 0.0);
        let re = (score(&probe).0 - base) / h;
        probe[i] = y[i] + Complex64::new(0.0, h);
        let im = (score(&probe).0 - base) / h;
        probe[i] = y[i];
        grad[i] = Complex64::new(re, im);
    }
    grad
}
