//! Residuals and predicates for the Yang-Baxter equation, the coupled
//! four-equation system in (R, Q), and the extended system satisfied by
//! (Q, Qbar, R) with Qbar = P R P Q R^-1.

use crate::arith::Field;
use crate::matrix::{Matrix, SingularMatrix};
use crate::tensor::{embed, permutation_p, LegPair};

/// A candidate pair (R, Q) of d^2 x d^2 matrices over one field.
#[derive(Clone, Debug, PartialEq)]
pub struct YbPair<F: Field> {
    pub r: Matrix<F>,
    pub q: Matrix<F>,
    pub d: usize,
}

impl<F: Field> YbPair<F> {
    pub fn new(r: Matrix<F>, q: Matrix<F>, d: usize) -> YbPair<F> {
        assert!(r.field() == q.field(), "R and Q over different fields");
        assert_eq!(r.rows(), d * d);
        assert_eq!(r.cols(), d * d);
        assert_eq!(q.rows(), d * d);
        assert_eq!(q.cols(), d * d);
        YbPair { r, q, d }
    }

    pub fn field(&self) -> &F {
        self.r.field()
    }
}

/// The residual A12 B13 C23 - C23 B13 A12 common to every equation of the
/// system.
fn triple_residual<F: Field>(a: &Matrix<F>, b: &Matrix<F>, c: &Matrix<F>, d: usize) -> Matrix<F> {
    let a12 = embed(a, LegPair::OneTwo, d);
    let b13 = embed(b, LegPair::OneThree, d);
    let c23 = embed(c, LegPair::TwoThree, d);
    a12.mul(&b13).mul(&c23).sub(&c23.mul(&b13).mul(&a12))
}

/// Residual of the Yang-Baxter equation R12 R13 R23 - R23 R13 R12; zero iff
/// R solves the YBE.
pub fn ybe_residual<F: Field>(r: &Matrix<F>, d: usize) -> Matrix<F> {
    triple_residual(r, r, r, d)
}

pub fn is_ybe_solution<F: Field>(r: &Matrix<F>, d: usize) -> bool {
    ybe_residual(r, d).is_zero()
}

/// The four residual matrices of the coupled system, named by the left-hand
/// product: qqq is Q12 Q13 Q23 - Q23 Q13 Q12, qrr is Q12 R13 R23 - R23 R13 Q12,
/// rrq is R12 R13 Q23 - Q23 R13 R12.
#[derive(Clone, Debug)]
pub struct SystemResiduals<F: Field> {
    pub qqq: Matrix<F>,
    pub rrr: Matrix<F>,
    pub qrr: Matrix<F>,
    pub rrq: Matrix<F>,
}

impl<F: Field> SystemResiduals<F> {
    pub fn all_zero(&self) -> bool {
        self.qqq.is_zero() && self.rrr.is_zero() && self.qrr.is_zero() && self.rrq.is_zero()
    }

    pub fn as_array(&self) -> [&Matrix<F>; 4] {
        [&self.qqq, &self.rrr, &self.qrr, &self.rrq]
    }

    pub const LABELS: [&'static str; 4] = [
        "Q12 Q13 Q23 = Q23 Q13 Q12",
        "R12 R13 R23 = R23 R13 R12",
        "Q12 R13 R23 = R23 R13 Q12",
        "R12 R13 Q23 = Q23 R13 R12",
    ];
}

/// R12 R13 Q23 - Q23 R13 R12 (the only equation whose unknown sits on legs
/// 2,3).
fn rrq_residual<F: Field>(r: &Matrix<F>, q: &Matrix<F>, d: usize) -> Matrix<F> {
    let r12 = embed(r, LegPair::OneTwo, d);
    let r13 = embed(r, LegPair::OneThree, d);
    let q23 = embed(q, LegPair::TwoThree, d);
    r12.mul(&r13).mul(&q23).sub(&q23.mul(&r13).mul(&r12))
}

pub fn system_residuals<F: Field>(pair: &YbPair<F>) -> SystemResiduals<F> {
    let YbPair { r, q, d } = pair;
    SystemResiduals {
        qqq: triple_residual(q, q, q, *d),
        rrr: triple_residual(r, r, r, *d),
        qrr: triple_residual(q, r, r, *d),
        rrq: rrq_residual(r, q, *d),
    }
}

/// Verdict on a candidate pair. Degenerate (non-invertible) matrices are
/// reported, not rejected; filtering is the caller's decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionReport {
    pub solves: bool,
    pub equation_zero: [bool; 4],
    pub invertible_r: bool,
    pub invertible_q: bool,
}

pub fn is_solution<F: Field>(pair: &YbPair<F>) -> SolutionReport {
    let res = system_residuals(pair);
    let equation_zero = [
        res.qqq.is_zero(),
        res.rrr.is_zero(),
        res.qrr.is_zero(),
        res.rrq.is_zero(),
    ];
    let f = pair.field();
    SolutionReport {
        solves: equation_zero.iter().all(|&b| b),
        equation_zero,
        invertible_r: !f.is_zero(&pair.r.determinant()),
        invertible_q: !f.is_zero(&pair.q.determinant()),
    }
}

/// The companion matrix Qbar = P R P Q R^-1.
pub fn qbar<F: Field>(pair: &YbPair<F>) -> Result<Matrix<F>, SingularMatrix> {
    let p = permutation_p(pair.field(), pair.d);
    let r_inv = pair.r.inverse()?;
    Ok(p.mul(&pair.r).mul(&p).mul(&pair.q).mul(&r_inv))
}

/// Residuals of the extended system in (Q, Qbar, R): the Yang-Baxter
/// equations for Q and for Qbar, the mixed equation
/// Qbar12 R23 R13 - R13 R23 Qbar12, and R12 R13 Q23 - Q23 R13 R12.
///
/// The mixed Qbar equation carries the two R factors in the opposite order
/// from the Q one. That orientation is forced: with the companion
/// Qbar = P R P Q R^-1 and Q = R, the same-order form already fails on
/// 4x4 examples, while this form holds for every solution pair.
pub fn extended_residuals<F: Field>(
    q: &Matrix<F>,
    qbar: &Matrix<F>,
    r: &Matrix<F>,
    d: usize,
) -> [Matrix<F>; 4] {
    let qbar_mixed = {
        let qb12 = embed(qbar, LegPair::OneTwo, d);
        let r13 = embed(r, LegPair::OneThree, d);
        let r23 = embed(r, LegPair::TwoThree, d);
        qb12.mul(&r23).mul(&r13).sub(&r13.mul(&r23).mul(&qb12))
    };
    [
        triple_residual(q, q, q, d),
        triple_residual(qbar, qbar, qbar, d),
        qbar_mixed,
        rrq_residual(r, q, d),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rationals};

    pub(crate) fn r_h02() -> Matrix<Rationals> {
        let e: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]];
        Matrix::from_fn(Rationals, 4, 4, |i, j| rat(e[i][j]))
    }

    #[test]
    fn ybe_holds_for_h02_and_identity() {
        assert!(ybe_residual(&r_h02(), 2).is_zero());
        assert!(ybe_residual(&Matrix::identity(Rationals, 4), 2).is_zero());
    }

    #[test]
    fn ybe_fails_for_single_jordan_bump() {
        let mut r = Matrix::identity(Rationals, 4);
        r.set(0, 1, rat(1));
        assert!(!ybe_residual(&r, 2).is_zero());
    }

    #[test]
    fn h02_with_flip_q_solves_the_system() {
        let p = permutation_p(&Rationals, 2);
        let pair = YbPair::new(r_h02(), p, 2);
        assert!(system_residuals(&pair).all_zero());
        let report = is_solution(&pair);
        assert!(report.solves && report.invertible_r && report.invertible_q);
    }

    #[test]
    fn identity_pair_solves() {
        let i4 = Matrix::identity(Rationals, 4);
        let pair = YbPair::new(i4.clone(), i4, 2);
        assert!(system_residuals(&pair).all_zero());
    }

    #[test]
    fn zero_q_solves_but_is_degenerate() {
        let pair = YbPair::new(r_h02(), Matrix::zero(Rationals, 4, 4), 2);
        let report = is_solution(&pair);
        assert!(report.solves);
        assert!(report.invertible_r);
        assert!(!report.invertible_q);
    }

    #[test]
    fn flip_r_with_non_ybe_q_fails_with_per_equation_detail() {
        let p = permutation_p(&Rationals, 2);
        let mut q = Matrix::identity(Rationals, 4);
        q.set(0, 1, rat(1)); // fails the YBE
        let pair = YbPair::new(p, q, 2);
        let report = is_solution(&pair);
        assert!(!report.solves);
        assert!(!report.equation_zero[0]); // Q-side YBE fails
        assert!(report.equation_zero[1]); // the flip itself solves the YBE
    }

    #[test]
    fn antidiagonal_pair_with_distinct_parameters_solves() {
        // R at t = 2 with the family Q at a = 3: a solution whose Q is
        // proportional to none of P, R, P R^-1 P
        let mut r = Matrix::zero(Rationals, 4, 4);
        r.set(0, 3, rat(1));
        r.set(1, 2, rat(2));
        r.set(2, 1, rat(2));
        r.set(3, 0, rat(1));
        let mut q = Matrix::zero(Rationals, 4, 4);
        q.set(0, 3, rat(1));
        q.set(1, 2, rat(3));
        q.set(2, 1, rat(3));
        q.set(3, 0, rat(1));
        let report = is_solution(&YbPair::new(r, q, 2));
        assert!(report.solves && report.invertible_r && report.invertible_q);
    }

    #[test]
    fn qbar_reductions() {
        let r = r_h02();
        let p = permutation_p(&Rationals, 2);
        // Q = P gives Qbar = P
        let qb = qbar(&YbPair::new(r.clone(), p.clone(), 2)).unwrap();
        assert_eq!(qb, p);
        // R = 1 gives Qbar = Q
        let i4 = Matrix::identity(Rationals, 4);
        let qb = qbar(&YbPair::new(i4, r.clone(), 2)).unwrap();
        assert_eq!(qb, r);
        // Q = R gives Qbar = P R P
        let qb = qbar(&YbPair::new(r.clone(), r.clone(), 2)).unwrap();
        assert_eq!(qb, p.mul(&r).mul(&p));
    }

    #[test]
    fn extended_system_from_companion() {
        // (R_H0.2, Q = R) solves; the derived triple must satisfy the
        // extended system identically.
        let r = r_h02();
        let pair = YbPair::new(r.clone(), r.clone(), 2);
        assert!(system_residuals(&pair).all_zero());
        let qb = qbar(&pair).unwrap();
        for res in extended_residuals(&pair.q, &qb, &pair.r, 2) {
            assert!(res.is_zero());
        }

        let i4 = Matrix::identity(Rationals, 4);
        for res in extended_residuals(&i4, &i4, &i4, 2) {
            assert!(res.is_zero());
        }
    }
}
