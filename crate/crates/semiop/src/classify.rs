//! The seven operator-class predicates and the full classification lattice.
//!
//! Decision conventions: residual predicates (A-selfadjoint, A-normal)
//! compare a Frobenius residual against a psd_tol-scaled threshold; cone
//! predicates (A-positive, A-hyponormal, A-paranormal) test a Hermitian
//! form for positivity within psd_tol; equality predicates (A-normaloid,
//! A-spectraloid) compare radii within conv_tol. Verdicts at the boundary
//! resolve to true, and the signed witness is always reported so callers
//! can apply stricter policies.
//!
//! Each outcome also records whether it is *decisive*: whether the verdict
//! survives moving the threshold by a factor of ten. Implication-chain and
//! certificate consistency are enforced as hard errors, but only between
//! decisive verdicts, so boundary operators cannot trip them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{is_psd, lambda_min, spectral_norm, ComplexMatrix, ToleranceConfig};
use crate::radii::{a_numerical_radius, a_spectral_radius, classical_numerical_radius};
use crate::semispace::SemiHilbertContext;

/// Factor separating a boundary verdict from a decisive one.
const DECISIVE_FACTOR: f64 = 10.0;

/// Verdict of one class predicate together with its numeric evidence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredicateOutcome {
    pub verdict: bool,
    /// Residual, minimum eigenvalue, or signed gap, depending on the
    /// predicate; documented on each constructor.
    pub witness: f64,
    /// Threshold the witness was judged against.
    pub threshold: f64,
    /// Whether the verdict survives a tenfold change of the threshold.
    pub decisive: bool,
}

impl PredicateOutcome {
    /// witness is a non-negative residual; true iff witness <= threshold.
    fn residual(witness: f64, threshold: f64) -> Self {
        let verdict = witness <= threshold;
        let decisive = if verdict {
            witness <= threshold / DECISIVE_FACTOR
        } else {
            witness > threshold * DECISIVE_FACTOR
        };
        Self { verdict, witness, threshold, decisive }
    }

    /// witness is a signed slack (min eigenvalue); true iff witness >= -threshold.
    fn cone(witness: f64, threshold: f64) -> Self {
        let verdict = witness >= -threshold;
        let decisive = if verdict {
            witness >= -threshold / DECISIVE_FACTOR
        } else {
            witness < -threshold * DECISIVE_FACTOR
        };
        Self { verdict, witness, threshold, decisive }
    }

    /// witness is a signed gap; true iff |witness| <= threshold.
    fn equality(witness: f64, threshold: f64) -> Self {
        let verdict = witness.abs() <= threshold;
        let decisive = if verdict {
            witness.abs() <= threshold / DECISIVE_FACTOR
        } else {
            witness.abs() > threshold * DECISIVE_FACTOR
        };
        Self { verdict, witness, threshold, decisive }
    }
}

/// T is A-selfadjoint when AT is Hermitian. Witness: the Hermitian residual
/// of AT relative to its size.
pub fn is_a_selfadjoint(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    ctx.require_dim(t)?;
    let at = ctx.weight() * t;
    let threshold = ctx.config().psd_tol * (1.0 + at.frobenius_norm());
    Ok(PredicateOutcome::residual(at.hermitian_residual(), threshold))
}

/// T is A-positive when AT is Hermitian PSD. Witness: the minimum
/// eigenvalue of the Hermitian part of AT (meaningless as a positivity
/// certificate unless the Hermitian residual also passes, which the verdict
/// accounts for).
pub fn is_a_positive(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    ctx.require_dim(t)?;
    let at = ctx.weight() * t;
    let hermitian =
        at.hermitian_residual() <= ctx.config().psd_tol * (1.0 + at.frobenius_norm());
    let min = lambda_min(&at)?;
    let threshold = ctx.config().psd_tol * lambda_max_floor(&at)?;
    let mut outcome = PredicateOutcome::cone(min, threshold);
    if !hermitian {
        outcome.verdict = false;
        outcome.decisive = true;
    }
    Ok(outcome)
}

fn lambda_max_floor(h: &ComplexMatrix) -> Result<f64> {
    Ok(crate::numerics::lambda_max(h)?.max(1.0))
}

/// T is A-normal when the commutator [T♯, T] vanishes as a matrix — not
/// merely A[T♯, T] = 0, which can hold for non-normal members. Witness:
/// ‖T♯T − TT♯‖_F relative to ‖T‖_F².
pub fn is_a_normal(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    let sharp = ctx.sharp_adjoint(t)?;
    let commutator = &(&sharp * t) - &(t * &sharp);
    let scale = t.frobenius_norm();
    let threshold = ctx.config().psd_tol * (1.0 + scale * scale);
    Ok(PredicateOutcome::residual(commutator.frobenius_norm(), threshold))
}

/// T is A-hyponormal when ‖Tx‖_A ≥ ‖T♯x‖_A for every x, i.e. when the
/// Hermitian form D = T*AT − (T♯)*A(T♯) is PSD. Witness: lambda_min(D).
pub fn is_a_hyponormal(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    let d = hyponormal_defect(ctx, t)?;
    let (_, min) = is_psd(&d, ctx.config())?;
    let threshold = ctx.config().psd_tol * lambda_max_floor(&d)?;
    Ok(PredicateOutcome::cone(min, threshold))
}

/// The seminorm defect form D = T*AT − (T♯)*A(T♯), Hermitian by
/// construction (symmetrized against roundoff). Algebraically identical to
/// A(T♯T − TT♯); the verify suites compare the two routes.
pub fn hyponormal_defect(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<ComplexMatrix> {
    let sharp = ctx.sharp_adjoint(t)?;
    let a = ctx.weight();
    let lhs = &(&t.adjoint() * a) * t;
    let rhs = &(&sharp.adjoint() * a) * &sharp;
    (&lhs - &rhs).hermitian_part()
}

/// T is A-paranormal when ‖Tx‖_A² ≤ ‖T²x‖_A on the A-unit sphere, decided
/// on the reduced compression S via the one-parameter family of Hermitian
/// tests M(λ) = (S*)²S² − 2λ S*S + λ²I ⪰ 0 for all λ > 0. The minimum of
/// λ_min(M(λ)) over λ equals the worst slack min_x(‖S²x‖² − ‖Sx‖⁴) on the
/// unit sphere. Witness: that slack.
pub fn is_a_paranormal(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    ctx.require_member(t)?;
    let s_r = ctx.reduce_unchecked(t).s_r;
    let slack = paranormal_slack(&s_r, ctx.config())?;
    let norm = spectral_norm(&s_r);
    let threshold = ctx.config().psd_tol * (norm.powi(4)).max(1.0);
    Ok(PredicateOutcome::cone(slack, threshold))
}

/// min over λ in [0, λ_max(S*S)] of λ_min((S*)²S² − 2λ S*S + λ²I), found by
/// a grid scan plus golden-section refinement of every cell that could
/// still undercut the best value (certified by the Lipschitz bound
/// |g'(λ)| ≤ 2 λ_max).
pub(crate) fn paranormal_slack(s_r: &ComplexMatrix, cfg: &ToleranceConfig) -> Result<f64> {
    let b = &s_r.adjoint() * s_r;
    let s2 = s_r * s_r;
    let c = &s2.adjoint() * &s2;
    let lam_hi = crate::numerics::lambda_max(&b)?.max(0.0);
    if lam_hi == 0.0 {
        return lambda_min(&c);
    }
    let rank = s_r.rows();
    let identity = ComplexMatrix::identity(rank);

    let eval = |lam: f64| -> f64 {
        let m = &(&c - &b.scale(2.0 * lam)) + &identity.scale(lam * lam);
        lambda_min(&m).expect("square by construction")
    };

    let grid = cfg.lambda_grid;
    let step = lam_hi / (grid - 1) as f64;
    let values: Vec<f64> = (0..grid).map(|k| eval(step * k as f64)).collect();
    let mut best = values.iter().copied().fold(f64::INFINITY, f64::min);

    let lipschitz = 2.0 * lam_hi;
    let target = 0.05 * cfg.psd_tol * (lam_hi * lam_hi).max(1.0);
    let width_target = (2.0 * target / lipschitz).min(step * 0.5).max(1e-13);

    let mut cells: Vec<(f64, usize)> = (0..grid - 1)
        .map(|k| {
            let lower = values[k].min(values[k + 1]) - lipschitz * step * 0.5;
            (lower, k)
        })
        .collect();
    cells.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite"));

    for (potential, k) in cells {
        if potential >= best - target {
            break;
        }
        let a = step * k as f64;
        let refined = golden_section_min(&eval, a, a + step, width_target);
        best = best.min(refined);
    }
    Ok(best)
}

fn golden_section_min(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, width: f64) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    let mut best = f1.min(f2);
    while b - a > width {
        if f1 > f2 {
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
        best = best.min(f1.min(f2));
    }
    best
}

/// T is A-normaloid when r_A(T) = ‖T‖_A. Witness: r_A − ‖T‖_A. Two
/// further certificates — ‖Tⁿ‖_A = ‖T‖_Aⁿ at n = 2, 3 and ω_A = ‖T‖_A —
/// must not decisively contradict the verdict.
pub fn is_a_normaloid(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    ctx.require_member(t)?;
    let cfg = ctx.config();
    let s_r = ctx.reduce_unchecked(t).s_r;
    let norm = spectral_norm(&s_r);
    let radius = a_spectral_radius(ctx, t)?;
    let omega = classical_numerical_radius(&s_r, cfg)?;

    let threshold = cfg.conv_tol * norm.max(1.0);
    let outcome = PredicateOutcome::equality(radius - norm, threshold);

    let norm2 = spectral_norm(&(&s_r * &s_r));
    let norm3 = spectral_norm(&(&(&s_r * &s_r) * &s_r));
    let pow2_gap = (norm2 - norm * norm).abs();
    let pow3_gap = (norm3 - norm.powi(3)).abs();
    let omega_gap = (omega - norm).abs();

    if outcome.verdict && outcome.decisive {
        let pow2_bad = pow2_gap > DECISIVE_FACTOR * cfg.conv_tol * (norm * norm).max(1.0);
        let pow3_bad = pow3_gap > DECISIVE_FACTOR * cfg.conv_tol * norm.powi(3).max(1.0);
        let omega_bad = omega_gap > DECISIVE_FACTOR * threshold;
        if pow2_bad || pow3_bad || omega_bad {
            return Err(Error::CertificateMismatch(format!(
                "r_A matches the seminorm (gap {:.3e}) but power/radius certificates disagree \
                 (power gaps {:.3e}, {:.3e}; omega gap {:.3e})",
                outcome.witness, pow2_gap, pow3_gap, omega_gap
            )));
        }
    } else if !outcome.verdict && outcome.decisive && omega_gap <= threshold / DECISIVE_FACTOR {
        return Err(Error::CertificateMismatch(format!(
            "r_A differs from the seminorm by {:.3e} but omega_A matches it (gap {:.3e})",
            outcome.witness, omega_gap
        )));
    }
    Ok(outcome)
}

/// T is A-spectraloid when r_A(T) = ω_A(T). Witness: r_A − ω_A. The power
/// certificate ω_A(Tⁿ) = ω_A(T)ⁿ at n = 2, 3 must not decisively
/// contradict a positive verdict.
pub fn is_a_spectraloid(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<PredicateOutcome> {
    ctx.require_member(t)?;
    let cfg = ctx.config();
    let radius = a_spectral_radius(ctx, t)?;
    let omega = a_numerical_radius(ctx, t)?.finite().expect("member");

    let threshold = cfg.conv_tol * omega.max(1.0);
    let outcome = PredicateOutcome::equality(radius - omega, threshold);

    if outcome.verdict && outcome.decisive {
        let omega2 = a_numerical_radius(ctx, &t.power(2)?)?.finite().expect("member");
        let omega3 = a_numerical_radius(ctx, &t.power(3)?)?.finite().expect("member");
        let gap2 = (omega2 - omega * omega).abs();
        let gap3 = (omega3 - omega.powi(3)).abs();
        let bad2 = gap2 > DECISIVE_FACTOR * cfg.conv_tol * (omega * omega).max(1.0);
        let bad3 = gap3 > DECISIVE_FACTOR * cfg.conv_tol * omega.powi(3).max(1.0);
        if bad2 || bad3 {
            return Err(Error::CertificateMismatch(format!(
                "r_A matches omega_A (gap {:.3e}) but the power certificate disagrees \
                 (gaps {:.3e}, {:.3e})",
                outcome.witness, gap2, gap3
            )));
        }
    }
    Ok(outcome)
}

/// Boolean lattice of the class predicates for one operator. Adjoint-based
/// predicates are absent for non-members, whose A-numerical radius is the
/// infinite marker.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub member: bool,
    pub membership_residual: f64,
    /// Set exactly when `member` is false.
    pub omega_infinite: bool,
    pub a_selfadjoint: PredicateOutcome,
    pub a_positive: PredicateOutcome,
    pub a_normal: Option<PredicateOutcome>,
    pub a_hyponormal: Option<PredicateOutcome>,
    pub a_paranormal: Option<PredicateOutcome>,
    pub a_normaloid: Option<PredicateOutcome>,
    pub a_spectraloid: Option<PredicateOutcome>,
}

/// Runs every predicate and asserts the implication chain
/// normal ⟹ hyponormal ⟹ paranormal ⟹ normaloid ⟹ spectraloid, plus
/// selfadjoint ⟹ paranormal, between decisive verdicts. A decisive
/// violation is a hard error: it signals a tolerance or implementation
/// bug, not a mathematical outcome.
pub fn classify_full(ctx: &SemiHilbertContext, t: &ComplexMatrix) -> Result<ClassificationResult> {
    let (member, membership_residual) = ctx.is_a_bounded(t)?;
    let a_selfadjoint = is_a_selfadjoint(ctx, t)?;
    let a_positive = is_a_positive(ctx, t)?;

    let result = if member {
        ClassificationResult {
            member,
            membership_residual,
            omega_infinite: false,
            a_selfadjoint,
            a_positive,
            a_normal: Some(is_a_normal(ctx, t)?),
            a_hyponormal: Some(is_a_hyponormal(ctx, t)?),
            a_paranormal: Some(is_a_paranormal(ctx, t)?),
            a_normaloid: Some(is_a_normaloid(ctx, t)?),
            a_spectraloid: Some(is_a_spectraloid(ctx, t)?),
        }
    } else {
        ClassificationResult {
            member,
            membership_residual,
            omega_infinite: true,
            a_selfadjoint,
            a_positive,
            a_normal: None,
            a_hyponormal: None,
            a_paranormal: None,
            a_normaloid: None,
            a_spectraloid: None,
        }
    };

    if member {
        let chain = [
            ("A-normal", result.a_normal, "A-hyponormal", result.a_hyponormal),
            ("A-hyponormal", result.a_hyponormal, "A-paranormal", result.a_paranormal),
            ("A-paranormal", result.a_paranormal, "A-normaloid", result.a_normaloid),
            ("A-normaloid", result.a_normaloid, "A-spectraloid", result.a_spectraloid),
            ("A-selfadjoint", Some(result.a_selfadjoint), "A-paranormal", result.a_paranormal),
        ];
        for (up_name, up, down_name, down) in chain {
            let (up, down) = match (up, down) {
                (Some(u), Some(d)) => (u, d),
                _ => continue,
            };
            if up.verdict && up.decisive && !down.verdict && down.decisive {
                return Err(Error::ChainViolation(format!(
                    "{up_name} holds (witness {:.3e}) but {down_name} decisively fails \
                     (witness {:.3e}, threshold {:.3e})",
                    up.witness, down.witness, down.threshold
                )));
            }
        }
    }
    Ok(result)
}
