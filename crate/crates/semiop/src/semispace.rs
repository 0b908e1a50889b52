//! The semi-Hilbertian context induced by a positive operator A: the
//! semi-inner product ⟨x|y⟩_A = ⟨Ax, y⟩, the vector seminorm, membership in
//! the A-bounded classes, the sharp adjoint T♯ = A†T*A, and the reduced
//! operator realizing the action on the range of A.
//!
//! For matrices the two membership classes B_A and B_{A^{1/2}} coincide:
//! both reduce to T leaving N(A) invariant, i.e. A·T·(I−P) = 0 where P is
//! the orthogonal projector onto R(A). The single residual test here
//! decides both; the Douglas range criterion R(T*A) ⊆ R(A) is equivalent
//! and kept available as an independent check.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{
    hermitian_eigen, rebuild, spectral_norm, ComplexMatrix, HermitianEigen, ToleranceConfig,
};

/// Scale-aware relative threshold deciding membership: the residual
/// ‖A·T·(I−P)‖_F is compared against this multiple of (1 + ‖A‖·‖T‖).
pub const MEMBERSHIP_REL_TOL: f64 = 1e-10;

/// Validated positive operator A with every derived object cached:
/// eigendecomposition, rank, A^{1/2}, (A^{1/2})†, A†, and the orthogonal
/// projector onto R(A). Immutable after construction and freely shareable
/// across threads.
#[derive(Debug, Clone)]
pub struct SemiHilbertContext {
    dim: usize,
    a: ComplexMatrix,
    eig: HermitianEigen,
    rank: usize,
    sqrt_a: ComplexMatrix,
    sqrt_a_pinv: ComplexMatrix,
    a_pinv: ComplexMatrix,
    projector: ComplexMatrix,
    range_basis: ComplexMatrix,
    a_operator_norm: f64,
    cfg: ToleranceConfig,
}

impl SemiHilbertContext {
    /// Builds the context. The input must be square, Hermitian within
    /// `eig_tol`, PSD within `psd_tol` and nonzero.
    pub fn new(a: ComplexMatrix, cfg: ToleranceConfig) -> Result<Self> {
        cfg.validate()?;
        let dim = a.require_square()?;
        let eig = hermitian_eigen(&a, &cfg)?;
        let lam_max = eig.eigenvalues.last().copied().unwrap_or(0.0);
        let lam_min = eig.eigenvalues[0];
        if lam_max <= 0.0 {
            if lam_min < 0.0 {
                return Err(Error::NotPositive { min_eigenvalue: lam_min });
            }
            return Err(Error::ZeroOperator);
        }
        if lam_min < -cfg.psd_tol * lam_max {
            return Err(Error::NotPositive { min_eigenvalue: lam_min });
        }

        let cutoff = cfg.rank_cutoff(dim) * lam_max;
        let clamped: Vec<f64> =
            eig.eigenvalues.iter().map(|&l| if l > cutoff { l } else { 0.0 }).collect();
        let rank = clamped.iter().filter(|&&l| l > 0.0).count();

        let sqrt: Vec<f64> = clamped.iter().map(|&l| l.sqrt()).collect();
        let sqrt_inv: Vec<f64> =
            clamped.iter().map(|&l| if l > 0.0 { 1.0 / l.sqrt() } else { 0.0 }).collect();
        let inv: Vec<f64> = clamped.iter().map(|&l| if l > 0.0 { 1.0 / l } else { 0.0 }).collect();
        let ind: Vec<f64> = clamped.iter().map(|&l| if l > 0.0 { 1.0 } else { 0.0 }).collect();

        let v = &eig.eigenvectors;
        let sqrt_a = rebuild(v, &sqrt);
        let sqrt_a_pinv = rebuild(v, &sqrt_inv);
        let a_pinv = rebuild(v, &inv);
        let projector = rebuild(v, &ind);

        let mut range_basis = ComplexMatrix::zeros(dim, rank);
        let mut col = 0;
        for j in 0..dim {
            if clamped[j] > 0.0 {
                for i in 0..dim {
                    range_basis[(i, col)] = v[(i, j)];
                }
                col += 1;
            }
        }

        Ok(Self {
            dim,
            a,
            eig,
            rank,
            sqrt_a,
            sqrt_a_pinv,
            a_pinv,
            projector,
            range_basis,
            a_operator_norm: lam_max,
            cfg,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn weight(&self) -> &ComplexMatrix {
        &self.a
    }

    pub fn weight_eigen(&self) -> &HermitianEigen {
        &self.eig
    }

    pub fn sqrt_weight(&self) -> &ComplexMatrix {
        &self.sqrt_a
    }

    pub fn sqrt_weight_pinv(&self) -> &ComplexMatrix {
        &self.sqrt_a_pinv
    }

    pub fn weight_pinv(&self) -> &ComplexMatrix {
        &self.a_pinv
    }

    /// Orthogonal projector onto R(A).
    pub fn range_projector(&self) -> &ComplexMatrix {
        &self.projector
    }

    /// Orthonormal basis of R(A), one column per positive eigenvalue.
    pub fn range_basis(&self) -> &ComplexMatrix {
        &self.range_basis
    }

    pub fn config(&self) -> &ToleranceConfig {
        &self.cfg
    }

    pub fn require_dim(&self, m: &ComplexMatrix) -> Result<()> {
        let n = m.require_square()?;
        if n != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: n });
        }
        Ok(())
    }

    /// ⟨x|y⟩_A = ⟨Ax, y⟩, linear in the first argument and conjugate-linear
    /// in the second.
    pub fn a_inner(&self, x: &[Complex64], y: &[Complex64]) -> Result<Complex64> {
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: y.len() });
        }
        let ax = self.a.matvec(x)?;
        Ok(ax.iter().zip(y).map(|(a, b)| a * b.conj()).sum())
    }

    /// ‖x‖_A = ⟨x|x⟩_A^{1/2}, clamped at zero against roundoff.
    pub fn a_vec_seminorm(&self, x: &[Complex64]) -> Result<f64> {
        let q = self.a_inner(x, x)?;
        Ok(q.re.max(0.0).sqrt())
    }

    /// Membership residual ‖A·T·(I−P)‖_F. Zero exactly when T leaves N(A)
    /// invariant, which for matrices characterises both B_A and B_{A^{1/2}}.
    pub fn membership_residual(&self, t: &ComplexMatrix) -> Result<f64> {
        self.require_dim(t)?;
        let off_range = &ComplexMatrix::identity(self.dim) - &self.projector;
        Ok((&(&self.a * t) * &off_range).frobenius_norm())
    }

    /// Residual of the Douglas range criterion, ‖(I−P)·T*·A‖_F. Equivalent
    /// to [`membership_residual`] up to adjoints; kept as a second route for
    /// cross-checking.
    pub fn douglas_residual(&self, t: &ComplexMatrix) -> Result<f64> {
        self.require_dim(t)?;
        let off_range = &ComplexMatrix::identity(self.dim) - &self.projector;
        Ok((&(&off_range * &t.adjoint()) * &self.a).frobenius_norm())
    }

    fn membership_tol(&self, t: &ComplexMatrix) -> f64 {
        MEMBERSHIP_REL_TOL * (1.0 + self.a_operator_norm * spectral_norm(t))
    }

    /// Decides membership in B_{A^{1/2}} (equivalently B_A), returning the
    /// verdict together with the residual actually measured.
    pub fn is_a_bounded(&self, t: &ComplexMatrix) -> Result<(bool, f64)> {
        let residual = self.membership_residual(t)?;
        Ok((residual <= self.membership_tol(t), residual))
    }

    pub(crate) fn require_member(&self, t: &ComplexMatrix) -> Result<()> {
        let (member, residual) = self.is_a_bounded(t)?;
        if member {
            Ok(())
        } else {
            Err(Error::NotAdjointable { residual })
        }
    }

    /// The distinguished A-adjoint T♯ = A†·T*·A, defined exactly when T is
    /// a member; it solves A·X = T*·A with R(X) ⊆ R(A).
    pub fn sharp_adjoint(&self, t: &ComplexMatrix) -> Result<ComplexMatrix> {
        self.require_member(t)?;
        Ok(&(&self.a_pinv * &t.adjoint()) * &self.a)
    }

    /// Reduced operator data for T; requires membership.
    pub fn reduced_operator(&self, t: &ComplexMatrix) -> Result<ReducedOperator> {
        self.require_member(t)?;
        Ok(self.reduce_unchecked(t))
    }

    /// The same construction without the membership requirement. The
    /// compression still encodes the seminorm of T restricted to R(A),
    /// which is finite for every matrix; only for members does it represent
    /// the full operator.
    pub(crate) fn reduce_unchecked(&self, t: &ComplexMatrix) -> ReducedOperator {
        let s = &(&self.sqrt_a * t) * &self.sqrt_a_pinv;
        let s_r = &(&self.range_basis.adjoint() * &s) * &self.range_basis;
        ReducedOperator { s, s_r }
    }
}

/// Concrete finite-dimensional realization of the operator induced on the
/// completion of R(A): `s = A^{1/2}·T·(A^{1/2})†` annihilates N(A), maps
/// into R(A), and for members intertwines as s·A^{1/2} = A^{1/2}·T.
/// `s_r` is its compression to the range basis.
#[derive(Debug, Clone)]
pub struct ReducedOperator {
    pub s: ComplexMatrix,
    pub s_r: ComplexMatrix,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ToleranceConfig;

    fn ctx(a: ComplexMatrix) -> SemiHilbertContext {
        SemiHilbertContext::new(a, ToleranceConfig::default()).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn context_identity() {
        let ctx = ctx(ComplexMatrix::identity(2));
        assert_eq!(ctx.rank(), 2);
        assert!(ctx.range_projector().max_abs_diff(&ComplexMatrix::identity(2)) < 1e-14);
        assert!(ctx.weight_pinv().max_abs_diff(&ComplexMatrix::identity(2)) < 1e-14);
    }

    #[test]
    fn context_rank_deficient_diag() {
        let ctx = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        assert_eq!(ctx.rank(), 1);
        assert!(ctx
            .range_projector()
            .max_abs_diff(&ComplexMatrix::diag_real(&[1.0, 0.0]))
            < 1e-14);
    }

    #[test]
    fn context_all_ones() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        let ctx = ctx(a.clone());
        assert_eq!(ctx.rank(), 1);
        assert!(ctx.weight_pinv().max_abs_diff(&a.scale(0.25)) < 1e-13);
        // cached consistency: A·A† = P, sqrtA² = A
        let p = &ctx.a * ctx.weight_pinv();
        assert!(p.max_abs_diff(ctx.range_projector()) < 1e-13);
        let sq = ctx.sqrt_weight();
        assert!((sq * sq).max_abs_diff(&a) < 1e-13);
    }

    #[test]
    fn context_rejects_bad_weights() {
        let cfg = ToleranceConfig::default();
        let skew = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[-1.0, 0.0]]).unwrap();
        assert!(matches!(
            SemiHilbertContext::new(skew, cfg),
            Err(Error::NotHermitian { .. })
        ));
        let indef = ComplexMatrix::diag_real(&[1.0, -1.0]);
        assert!(matches!(
            SemiHilbertContext::new(indef, cfg),
            Err(Error::NotPositive { .. })
        ));
        let zero = ComplexMatrix::zeros(2, 2);
        assert!(matches!(SemiHilbertContext::new(zero, cfg), Err(Error::ZeroOperator)));
    }

    #[test]
    fn inner_product_examples() {
        let id = ctx(ComplexMatrix::identity(2));
        let x = [c(1.0), c(2.0)];
        let y = [c(3.0), c(-1.0)];
        assert_eq!(id.a_inner(&x, &y).unwrap(), c(1.0));

        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        let e2 = [c(0.0), c(1.0)];
        assert_eq!(degenerate.a_inner(&e2, &e2).unwrap(), c(0.0));

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let e1 = [c(1.0), c(0.0)];
        let e2 = [c(0.0), c(1.0)];
        assert_eq!(ones.a_inner(&e1, &e2).unwrap(), c(1.0));
    }

    #[test]
    fn vec_seminorm_examples() {
        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        assert_eq!(degenerate.a_vec_seminorm(&[c(0.0), c(0.0)]).unwrap(), 0.0);
        assert_eq!(degenerate.a_vec_seminorm(&[c(0.0), c(5.0)]).unwrap(), 0.0);

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        assert!((ones.a_vec_seminorm(&[c(1.0), c(0.0)]).unwrap() - 1.0).abs() < 1e-14);

        assert!(matches!(
            ones.a_vec_seminorm(&[c(1.0)]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let id = ctx(ComplexMatrix::identity(2));
        assert!(id.is_a_bounded(&ComplexMatrix::identity(2)).unwrap().0);

        // swap does not leave N(diag(1,0)) invariant
        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        let swap = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let (member, residual) = degenerate.is_a_bounded(&swap).unwrap();
        assert!(!member);
        assert!(residual > 0.5);

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let t = ComplexMatrix::from_real_rows(&[&[2.0, 2.0], &[0.0, 0.0]]).unwrap();
        assert!(ones.is_a_bounded(&t).unwrap().0);
    }

    #[test]
    fn sharp_adjoint_examples() {
        // A = I reduces to the classical adjoint
        let id = ctx(ComplexMatrix::identity(2));
        let t = ComplexMatrix::new(
            2,
            2,
            vec![c(1.0), Complex64::new(0.0, 1.0), c(0.0), c(2.0)],
        )
        .unwrap();
        assert!(id.sharp_adjoint(&t).unwrap().max_abs_diff(&t.adjoint()) < 1e-14);

        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let t = ComplexMatrix::from_real_rows(&[&[2.0, 2.0], &[0.0, 0.0]]).unwrap();
        let sharp = ones.sharp_adjoint(&t).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap();
        assert!(sharp.max_abs_diff(&expected) < 1e-12);

        // defining identity A·T♯ = T*·A and range inclusion R(T♯) ⊆ R(A)
        let lhs = ones.weight() * &sharp;
        let rhs = &t.adjoint() * ones.weight();
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        let off = &ComplexMatrix::identity(2) - ones.range_projector();
        assert!((&off * &sharp).frobenius_norm() < 1e-12);
    }

    #[test]
    fn sharp_adjoint_three_dim_selfadjoint_example() {
        // forced by A·X = T*·A: the third column repeats the first
        let a = ComplexMatrix::from_real_rows(&[&[2.0, 0.0, 2.0], &[0.0, 1.0, 0.0], &[2.0, 0.0, 2.0]])
            .unwrap();
        let t = ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 1.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]])
            .unwrap();
        let ctx = ctx(a.clone());
        let sharp = ctx.sharp_adjoint(&t).unwrap();
        let expected = ComplexMatrix::from_real_rows(&[
            &[0.5, 0.0, 0.5],
            &[0.0, 0.0, 0.0],
            &[0.5, 0.0, 0.5],
        ])
        .unwrap();
        assert!(sharp.max_abs_diff(&expected) < 1e-12);
        let residual = (&(&a * &sharp) - &(&t.adjoint() * &a)).frobenius_norm();
        assert!(residual < 1e-12);
    }

    #[test]
    fn sharp_adjoint_rejects_non_members() {
        let degenerate = ctx(ComplexMatrix::diag_real(&[1.0, 0.0]));
        let swap = ComplexMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        assert!(matches!(
            degenerate.sharp_adjoint(&swap),
            Err(Error::NotAdjointable { .. })
        ));
    }

    #[test]
    fn reduced_operator_examples() {
        // A = I: S = T
        let id = ctx(ComplexMatrix::identity(2));
        let t = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        let red = id.reduced_operator(&t).unwrap();
        assert!(red.s.max_abs_diff(&t) < 1e-13);

        // rank-1 A: 1x1 compression (2)
        let ones = ctx(ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[1.0, 1.0]]).unwrap());
        let t = ComplexMatrix::from_real_rows(&[&[2.0, 2.0], &[0.0, 0.0]]).unwrap();
        let red = ones.reduced_operator(&t).unwrap();
        assert_eq!(red.s_r.rows(), 1);
        assert!((red.s_r[(0, 0)] - c(2.0)).norm() < 1e-12);

        // 3x3 A-selfadjoint pair: spectrum of the 2x2 compression is {0, 1}
        let a = ComplexMatrix::from_real_rows(&[&[2.0, 0.0, 2.0], &[0.0, 1.0, 0.0], &[2.0, 0.0, 2.0]])
            .unwrap();
        let t = ComplexMatrix::from_real_rows(&[&[1.0, 0.0, 1.0], &[0.0, 0.0, 0.0], &[0.0, 0.0, 0.0]])
            .unwrap();
        let ctx3 = ctx(a);
        let red = ctx3.reduced_operator(&t).unwrap();
        assert_eq!(red.s_r.rows(), 2);
        let vals =
            crate::numerics::hermitian_eigenvalues(&red.s_r, ctx3.config()).unwrap();
        assert!((vals[0] - 0.0).abs() < 1e-12 && (vals[1] - 1.0).abs() < 1e-12);

        // intertwining S·A^{1/2} = A^{1/2}·T on the whole space
        let lhs = &red.s * ctx3.sqrt_weight();
        let rhs = ctx3.sqrt_weight() * &t;
        assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }
}
