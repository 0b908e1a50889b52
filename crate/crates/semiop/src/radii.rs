//! Radius and seminorm quantities: the A-operator seminorm, the A-numerical
//! radius (finite exactly on the A-bounded class), the A-spectral radius via
//! the Gelfand limit, the norm-plus-squared-norm refinement bound, the
//! A-joint spectral radius of tuples, and the A-maximal numerical radius.
//!
//! Everything is computed on the reduced compression `S_r` of the operator
//! to the range of A: the seminorm is its spectral norm, the A-numerical
//! radius its classical numerical radius, the A-spectral radius its spectral
//! radius. Powers of a member reduce to powers of `S_r`, which every
//! iteration below exploits.

use std::f64::consts::PI;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::numerics::{lambda_max, spectral_norm, svd, ComplexMatrix, ToleranceConfig};
use crate::semispace::SemiHilbertContext;

/// Relative width of the top singular cluster used by the maximal-radius
/// compression. Degenerate clusters widen the subspace, which is the
/// conservative direction.
pub const SIGMA_CLUSTER_REL_TOL: f64 = 1e-8;

/// A real radius value or the infinite marker. The marker is a value, not
/// an error: it is the correct answer for operators that do not leave N(A)
/// invariant. It is never a float infinity inside comparisons; machine
/// output encodes it as a null value with an `infinite` flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MaybeInfinite {
    Finite(f64),
    Infinite,
}

impl MaybeInfinite {
    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::Infinite)
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            Self::Finite(x) => Some(*x),
            Self::Infinite => None,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct MaybeInfiniteRepr {
    value: Option<f64>,
    infinite: bool,
}

impl Serialize for MaybeInfinite {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = match self {
            Self::Finite(x) => MaybeInfiniteRepr { value: Some(*x), infinite: false },
            Self::Infinite => MaybeInfiniteRepr { value: None, infinite: true },
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MaybeInfinite {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MaybeInfiniteRepr::deserialize(deserializer)?;
        match (repr.value, repr.infinite) {
            (Some(x), false) => Ok(Self::Finite(x)),
            (None, true) => Ok(Self::Infinite),
            _ => Err(D::Error::custom("radius must be either a value or infinite")),
        }
    }
}

/// A-operator seminorm ‖T‖_A = sigma_max(S_r), defined on members.
pub fn a_operator_seminorm(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<f64> {
    ctx.require_member(t)?;
    Ok(spectral_norm(&ctx.reduce_unchecked(t).s_r))
}

/// The seminorm of T restricted to the closure of R(A), finite for every
/// matrix. For members this equals ‖T‖_A; for non-members it is the value
/// of the sup taken over the range only, which is what the wider bounded
/// class carries.
pub fn range_restricted_seminorm(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<f64> {
    ctx.require_dim(t)?;
    Ok(spectral_norm(&ctx.reduce_unchecked(t).s_r))
}

/// Classical numerical radius max_theta lambda_max((e^{i theta} M + e^{-i theta} M*)/2).
///
/// Scans `theta_grid` angles, then refines by golden section every grid
/// cell whose Lipschitz envelope (|f'| <= ||M||) could still beat the best
/// value found, so the result is certified to an absolute accuracy of
/// `conv_tol * max(1, ||M||)`.
pub fn classical_numerical_radius(m: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<f64> {
    m.require_square()?;
    if m.is_zero() {
        return Ok(0.0);
    }
    let half = m.scale(0.5);
    let real_part = &half + &half.adjoint();
    let imag_part = (&half - &half.adjoint()).scale_complex(num_complex::Complex64::new(0.0, 1.0));
    let lipschitz = spectral_norm(m);

    let eval = |theta: f64| -> f64 {
        let h = &real_part.scale(theta.cos()) + &imag_part.scale(theta.sin());
        lambda_max(&h).expect("square by construction")
    };

    let grid = cfg.theta_grid;
    let step = 2.0 * PI / grid as f64;
    let values: Vec<f64> = (0..grid).map(|k| eval(step * k as f64)).collect();
    let mut best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);

    let target = 0.5 * cfg.conv_tol * lipschitz.max(1.0);
    let width_target = (2.0 * target / lipschitz).min(step * 0.5).max(1e-13);

    // Cells ranked by how high the maximum inside them could possibly be.
    let mut cells: Vec<(f64, usize)> = (0..grid)
        .map(|k| {
            let upper = values[k].max(values[(k + 1) % grid]) + lipschitz * step * 0.5;
            (upper, k)
        })
        .collect();
    cells.sort_by(|a, b| b.0.partial_cmp(&a.0).expect("finite"));

    for (potential, k) in cells {
        if potential <= best + target {
            break;
        }
        let a = step * k as f64;
        let refined = golden_section_max(&eval, a, a + step, width_target);
        best = best.max(refined);
    }
    Ok(best)
}

fn golden_section_max(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, width: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = f1.max(f2);
    while b - a > width {
        if f1 < f2 {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        }
        best = best.max(f1.max(f2));
    }
    best
}

/// A-numerical radius: the infinite marker when T does not leave N(A)
/// invariant (the A-numerical range is then the whole plane), otherwise the
/// classical numerical radius of the reduced compression.
pub fn a_numerical_radius(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<MaybeInfinite> {
    let (member, _) = ctx.is_a_bounded(t)?;
    if !member {
        return Ok(MaybeInfinite::Infinite);
    }
    let reduced = ctx.reduce_unchecked(t);
    Ok(MaybeInfinite::Finite(classical_numerical_radius(&reduced.s_r, ctx.config())?))
}

/// Sequence of Gelfand estimates ‖Tⁿ‖_A^{1/n}.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GelfandTrace {
    /// (n, ‖Tⁿ‖_A^{1/n}) for n = 1..n_max.
    pub estimates: Vec<(usize, f64)>,
    /// Last-step delta within `conv_tol`.
    pub converged: bool,
    /// The estimate at n_max.
    pub final_value: f64,
}

/// Estimates ‖Tⁿ‖_A^{1/n} for n = 1..n_max with per-power rescaling, so
/// arbitrarily long runs neither overflow nor underflow.
pub fn gelfand_sequence(
    ctx: &SemiHilbertContext,
    t: &ComplexMatrix,
    n_max: usize,
) -> Result<GelfandTrace> {
    if n_max == 0 {
        return Err(Error::InvalidConfig("gelfand sequence needs n_max >= 1"));
    }
    ctx.require_member(t)?;
    let s_r = ctx.reduce_unchecked(t).s_r;

    let mut estimates = Vec::with_capacity(n_max);
    let mut q = s_r.clone();
    let mut log_scale = 0.0f64; // q holds S^n / exp(log_scale)
    for n in 1..=n_max {
        if n > 1 {
            q = &q * &s_r;
        }
        let sigma = spectral_norm(&q);
        if sigma == 0.0 {
            for m in n..=n_max {
                estimates.push((m, 0.0));
            }
            break;
        }
        let log_norm = log_scale + sigma.ln();
        estimates.push((n, (log_norm / n as f64).exp()));
        q = q.scale(1.0 / sigma);
        log_scale = log_norm;
    }

    let final_value = estimates.last().expect("n_max >= 1").1;
    let converged = match estimates.len() {
        0 | 1 => true,
        len => {
            let prev = estimates[len - 2].1;
            (final_value - prev).abs() <= ctx.config().conv_tol * final_value.max(1.0)
        }
    };
    Ok(GelfandTrace { estimates, converged, final_value })
}

/// Shared squaring iteration: estimates ‖S^n‖^{1/n} at n = 1, 2, 4, ...
/// up to `max_doublings`, with logarithmic rescaling. Stops early when the
/// log-estimate moves by less than `conv_tol`.
fn squaring_estimates(
    s_r: &ComplexMatrix,
    conv_tol: f64,
    max_doublings: usize,
) -> (Vec<(u64, f64)>, f64) {
    let sigma0 = spectral_norm(s_r);
    if sigma0 == 0.0 {
        return (vec![(1, 0.0)], 0.0);
    }
    let mut estimates = Vec::new();
    let mut c = s_r.scale(1.0 / sigma0);
    let mut log_norm = sigma0.ln(); // log ‖S^n‖ at the current n
    let mut n: u64 = 1;
    let mut g = log_norm;
    estimates.push((1, g.exp()));
    for _ in 0..max_doublings {
        let c2 = &c * &c;
        let sigma = spectral_norm(&c2);
        if sigma == 0.0 {
            n *= 2;
            estimates.push((n, 0.0));
            return (estimates, 0.0);
        }
        log_norm = 2.0 * log_norm + sigma.ln();
        n *= 2;
        c = c2.scale(1.0 / sigma);
        let g_next = log_norm / n as f64;
        estimates.push((n, g_next.exp()));
        let done = (g_next - g).abs() <= conv_tol * g_next.abs().max(1.0);
        g = g_next;
        if done {
            break;
        }
    }
    (estimates, g.exp())
}

/// A-spectral radius r_A(T) = lim ‖Tⁿ‖_A^{1/n}, by rescaled repeated
/// squaring of the reduced compression.
pub fn a_spectral_radius(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<f64> {
    ctx.require_member(t)?;
    let s_r = ctx.reduce_unchecked(t).s_r;
    let (_, value) = squaring_estimates(&s_r, ctx.config().conv_tol, ctx.config().max_squarings);
    Ok(value)
}

/// Upper bound ω_A(T) ≤ (‖T‖_A + ‖T²‖_A^{1/2}) / 2, which always refines
/// the plain seminorm bound since ‖T²‖_A ≤ ‖T‖_A².
pub fn kittaneh_bound(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<f64> {
    ctx.require_member(t)?;
    let s_r = ctx.reduce_unchecked(t).s_r;
    let norm = spectral_norm(&s_r);
    let norm_sq = spectral_norm(&(&s_r * &s_r));
    Ok(0.5 * (norm + norm_sq.sqrt()))
}

/// Joint-radius estimate sequence.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JsrTrace {
    /// (n, ‖Σ_g T_g♯ T_g‖_A^{1/2n}) recorded on a geometric schedule.
    pub estimates: Vec<(u64, f64)>,
    pub final_value: f64,
}

/// A-joint spectral radius of a tuple (T_1, ..., T_d).
///
/// Works on the reduced compressions U_i, where the sharp adjoint becomes
/// the plain adjoint, via the positive recursion
/// N_{n+1} = Σ_i U_i* N_n U_i with N_1 = Σ_i U_i* U_i and the estimate
/// lambda_max(N_n)^{1/2n}. A single-operator tuple takes the doubling route
/// and agrees with [`a_spectral_radius`] within `conv_tol`.
pub fn a_joint_spectral_radius(
    ctx: &SemiHilbertContext,
    tuple: &[ComplexMatrix],
    n_max: u64,
) -> Result<JsrTrace> {
    if tuple.is_empty() {
        return Err(Error::EmptyTuple);
    }
    if n_max == 0 {
        return Err(Error::InvalidConfig("joint radius needs n_max >= 1"));
    }
    let mut reduced = Vec::with_capacity(tuple.len());
    for t in tuple {
        ctx.require_member(t)?;
        reduced.push(ctx.reduce_unchecked(t).s_r);
    }
    let conv_tol = ctx.config().conv_tol;

    if reduced.len() == 1 {
        let doublings = n_max.ilog2() as usize;
        let (estimates, final_value) = squaring_estimates(&reduced[0], conv_tol, doublings);
        return Ok(JsrTrace { estimates, final_value });
    }

    let rank = reduced[0].rows();
    let mut n_mat = ComplexMatrix::zeros(rank, rank);
    for u in &reduced {
        n_mat = &n_mat + &(&u.adjoint() * u);
    }

    let mut estimates = Vec::new();
    let mut log_scale = 0.0f64; // true N_n = n_mat * exp(log_scale)
    let mut record_at: u64 = 1;
    let mut last_recorded_log: Option<f64> = None;
    let mut final_log = 0.0f64;
    for n in 1..=n_max {
        if n > 1 {
            let mut next = ComplexMatrix::zeros(rank, rank);
            for u in &reduced {
                next = &next + &(&(&u.adjoint() * &n_mat) * u);
            }
            n_mat = next;
        }
        let lam = lambda_max(&n_mat)?.max(0.0);
        if lam == 0.0 {
            estimates.push((n, 0.0));
            return Ok(JsrTrace { estimates, final_value: 0.0 });
        }
        let log_norm = log_scale + lam.ln();
        final_log = log_norm / (2 * n) as f64;
        if n == record_at || n == n_max {
            estimates.push((n, final_log.exp()));
            if n == record_at {
                record_at *= 2;
            }
            if let Some(prev) = last_recorded_log {
                if (final_log - prev).abs() <= conv_tol * final_log.abs().max(1.0) {
                    break;
                }
            }
            last_recorded_log = Some(final_log);
        }
        n_mat = n_mat.scale(1.0 / lam);
        log_scale = log_norm;
    }
    Ok(JsrTrace { estimates: estimates.clone(), final_value: final_log.exp() })
}

/// A-maximal numerical radius via the compression to the top singular
/// cluster of the reduced operator: in finite dimension the norming
/// sequences concentrate there, so the maximal range is attained on it.
pub fn a_maximal_numerical_radius(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<f64> {
    ctx.require_member(t)?;
    let s_r = ctx.reduce_unchecked(t).s_r;
    let decomposition = svd(&s_r, ctx.config())?;
    let sigma_max = decomposition.singular_values.first().copied().unwrap_or(0.0);
    if sigma_max == 0.0 {
        return Ok(0.0);
    }
    let keep: Vec<usize> = decomposition
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s >= sigma_max * (1.0 - SIGMA_CLUSTER_REL_TOL))
        .map(|(i, _)| i)
        .collect();
    let rank = s_r.rows();
    let mut basis = ComplexMatrix::zeros(rank, keep.len());
    for (col, &j) in keep.iter().enumerate() {
        for i in 0..rank {
            basis[(i, col)] = decomposition.v[(i, j)];
        }
    }
    let compression = &(&basis.adjoint() * &s_r) * &basis;
    classical_numerical_radius(&compression, ctx.config())
}

/// All radius quantities of one member operator, computed off a single
/// reduction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiiBundle {
    pub a_norm: f64,
    pub a_numerical_radius: f64,
    pub a_spectral_radius: f64,
    pub omega_max: f64,
    pub kittaneh_bound: f64,
}

impl RadiiBundle {
    pub fn compute(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<Self> {
        ctx.require_member(t)?;
        let s_r = ctx.reduce_unchecked(t).s_r;
        let cfg = ctx.config();
        let a_norm = spectral_norm(&s_r);
        let omega = classical_numerical_radius(&s_r, cfg)?;
        let (_, radius) = squaring_estimates(&s_r, cfg.conv_tol, cfg.max_squarings);
        let norm_sq = spectral_norm(&(&s_r * &s_r));
        Ok(Self {
            a_norm,
            a_numerical_radius: omega,
            a_spectral_radius: radius,
            omega_max: a_maximal_numerical_radius(ctx, t)?,
            kittaneh_bound: 0.5 * (a_norm + norm_sq.sqrt()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ComplexMatrix;
    use num_complex::Complex64;

    fn ctx(a: ComplexMatrix) -> SemiHilbertContext {
        SemiHilbertContext::new(a, ToleranceConfig::default()).unwrap()
    }

    fn identity_ctx(n: usize) -> SemiHilbertContext {
        ctx(ComplexMatrix::identity(n))
    }

    fn jordan() -> ComplexMatrix {
        ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap()
    }

    fn phi() -> f64 {
        (1.0 + 5f64.sqrt()) / 2.0
    }

    #[test]
    fn seminorm_examples() {
        let id = identity_ctx(2);
        assert!((a_operator_seminorm(&id, &jordan()).unwrap() - phi()).abs() < 1e-12);

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let t = ComplexMatrix::from_real_rows(&[&[2.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert!((a_operator_seminorm(&ones, &t).unwrap() - 2.0).abs() < 1e-12);

        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        let swap = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(matches!(
            a_operator_seminorm(&degenerate, &swap),
            Err(Error::NotAdjointable { .. })
        ));
        // the range-restricted value exists for the non-member
        assert!(range_restricted_seminorm(&degenerate, &swap).is_ok());
    }

    #[test]
    fn seminorm_zero_iff_weight_kills_range_action() {
        // T maps N(A) to N(A) and R(A) to 0: member with zero seminorm
        let a = ComplexMatrix::diag_real(&[1.0, 0.0]);
        let t = ComplexMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 3.0]]).unwrap();
        let ctx = ctx(a);
        assert!(ctx.is_a_bounded(&t).unwrap().0);
        assert!(a_operator_seminorm(&ctx, &t).unwrap() < 1e-14);
        let atp = &(ctx.weight() * &t) * ctx.range_projector();
        assert!(atp.frobenius_norm() < 1e-14);
    }

    #[test]
    fn classical_radius_examples() {
        let cfg = ToleranceConfig::default();
        let normal = ComplexMatrix::new(
            2,
            2,
            vec![
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.0, 1.0),
            ],
        )
        .unwrap();
        assert!((classical_numerical_radius(&normal, &cfg).unwrap() - 1.0).abs() < 1e-9);

        let nilpotent = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert!((classical_numerical_radius(&nilpotent, &cfg).unwrap() - 0.5).abs() < 1e-10);

        assert!((classical_numerical_radius(&jordan(), &cfg).unwrap() - 1.5).abs() < 1e-10);

        assert!(matches!(
            classical_numerical_radius(&ComplexMatrix::zeros(2, 3), &cfg),
            Err(Error::NonSquare { .. })
        ));
    }

    #[test]
    fn a_numerical_radius_examples() {
        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        let swap = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert_eq!(a_numerical_radius(&degenerate, &swap).unwrap(), MaybeInfinite::Infinite);

        let id = identity_ctx(2);
        let omega = a_numerical_radius(&id, &jordan()).unwrap().finite().unwrap();
        assert!((omega - 1.5).abs() < 1e-9);

        let a = ComplexMatrix::from_real_rows(&[&[2.0, 0.0, 2.0], &[0.0, 1.0, 0.0], &[2.0, 0.0, 2.0]])
            .unwrap();
        let t = ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 1.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]])
            .unwrap();
        let omega = a_numerical_radius(&ctx(a), &t).unwrap().finite().unwrap();
        assert!((omega - 1.0).abs() < 1e-9);
    }

    #[test]
    fn gelfand_examples() {
        let id = identity_ctx(2);
        let zero = ComplexMatrix::zeros(2, 2);
        let trace = gelfand_sequence(&id, &zero, 5).unwrap();
        assert!(trace.estimates.iter().all(|&(_, v)| v == 0.0));
        assert_eq!(trace.final_value, 0.0);

        let diag = ComplexMatrix::diag_real(&[2.0, 1.0]);
        let trace = gelfand_sequence(&id, &diag, 8).unwrap();
        for &(_, v) in &trace.estimates {
            assert!((v - 2.0).abs() < 1e-12);
        }

        let trace = gelfand_sequence(&id, &jordan(), 64).unwrap();
        assert!((trace.final_value - 1.0).abs() < 0.08);
        // inf over the recorded estimates is attained at the tail
        let inf = trace.estimates.iter().map(|&(_, v)| v).fold(f64::INFINITY, f64::min);
        assert!(inf >= trace.final_value - 1e-10);
        assert!(gelfand_sequence(&id, &jordan(), 0).is_err());
    }

    #[test]
    fn spectral_radius_examples() {
        let id2 = identity_ctx(2);
        assert!((a_spectral_radius(&id2, &jordan()).unwrap() - 1.0).abs() < 1e-6);

        let id3 = identity_ctx(3);
        let t = ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 2.0], &[0.0, 0.0, 0.0]])
            .unwrap();
        assert!((a_spectral_radius(&id3, &t).unwrap() - 1.0).abs() < 1e-6);

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let t = ComplexMatrix::from_real_rows(&[&[2.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert!((a_spectral_radius(&ones, &t).unwrap() - 2.0).abs() < 1e-9);

        // strictly nilpotent input drops to exactly zero
        let nilpotent = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        assert_eq!(a_spectral_radius(&id2, &nilpotent).unwrap(), 0.0);
    }

    #[test]
    fn kittaneh_examples() {
        let id = identity_ctx(2);
        let nilpotent = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[0.0, 0.0]]).unwrap();
        let bound = kittaneh_bound(&id, &nilpotent).unwrap();
        assert!((bound - 0.5).abs() < 1e-12);
        let omega = a_numerical_radius(&id, &nilpotent).unwrap().finite().unwrap();
        assert!((omega - bound).abs() < 1e-9);

        assert!((kittaneh_bound(&id, &ComplexMatrix::identity(2)).unwrap() - 1.0).abs() < 1e-12);

        let bound = kittaneh_bound(&id, &jordan()).unwrap();
        let expected = 0.5 * (phi() + (1.0 + 2f64.sqrt()).sqrt());
        assert!((bound - expected).abs() < 1e-12);
        assert!(bound >= 1.5 - 1e-12);
        assert!(bound <= a_operator_seminorm(&id, &jordan()).unwrap() + 1e-12);
    }

    #[test]
    fn jsr_single_operator_reduces_to_spectral_radius() {
        let id = identity_ctx(2);
        let trace = a_joint_spectral_radius(&id, &[jordan()], 2048).unwrap();
        // the estimate at n = 2048 is 1.0037...; the doubling schedule is
        // capped there so the final value reflects that point
        assert!((trace.final_value - 1.0).abs() < 5e-3);

        let deep = a_joint_spectral_radius(&id, &[jordan()], 1 << 50).unwrap();
        let direct = a_spectral_radius(&id, &jordan()).unwrap();
        assert!((deep.final_value - direct).abs() < 1e-9);
    }

    #[test]
    fn jsr_pair_examples() {
        let id = identity_ctx(2);
        let pair = [ComplexMatrix::identity(2), ComplexMatrix::identity(2)];
        let trace = a_joint_spectral_radius(&id, &pair, 64).unwrap();
        assert!((trace.final_value - 2f64.sqrt()).abs() < 1e-12);

        let pair = [ComplexMatrix::diag_real(&[1.0, 0.0]), ComplexMatrix::diag_real(&[0.0, 1.0])];
        let trace = a_joint_spectral_radius(&id, &pair, 64).unwrap();
        assert!((trace.final_value - 1.0).abs() < 1e-12);

        let zeros = [ComplexMatrix::zeros(2, 2), ComplexMatrix::zeros(2, 2)];
        let trace = a_joint_spectral_radius(&id, &zeros, 16).unwrap();
        assert_eq!(trace.final_value, 0.0);

        assert!(matches!(a_joint_spectral_radius(&id, &[], 4), Err(Error::EmptyTuple)));
    }

    #[test]
    fn maximal_radius_examples() {
        let id = identity_ctx(2);
        let diag = ComplexMatrix::diag_real(&[2.0, 1.0]);
        assert!((a_maximal_numerical_radius(&id, &diag).unwrap() - 2.0).abs() < 1e-9);

        assert!(
            (a_maximal_numerical_radius(&id, &ComplexMatrix::identity(2)).unwrap() - 1.0).abs()
                < 1e-9
        );

        // strictly below omega for the non-normaloid Jordan block
        let max_radius = a_maximal_numerical_radius(&id, &jordan()).unwrap();
        let expected = 2.0 * (1.0 + phi()) / (2.0 + phi());
        assert!((max_radius - expected).abs() < 1e-9);
        assert!(max_radius < 1.5 - 1e-3);

        let zero = ComplexMatrix::zeros(2, 2);
        assert_eq!(a_maximal_numerical_radius(&id, &zero).unwrap(), 0.0);
    }

    #[test]
    fn bundle_satisfies_sandwich() {
        let id = identity_ctx(2);
        let bundle = RadiiBundle::compute(&id, &jordan()).unwrap();
        assert!(bundle.a_spectral_radius <= bundle.a_numerical_radius + 1e-8);
        assert!(bundle.a_numerical_radius <= bundle.a_norm + 1e-8);
        assert!(bundle.a_norm <= 2.0 * bundle.a_numerical_radius + 1e-8);
        assert!(bundle.a_numerical_radius <= bundle.kittaneh_bound + 1e-8);
        assert!(bundle.kittaneh_bound <= bundle.a_norm + 1e-8);
    }
}
