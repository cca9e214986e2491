use crate::arith::Field;
use crate::matrix::Matrix;
use crate::tensor::{embed, LegPair};

/// The linear map vec(Q) -> stacked residuals of the two mixed equations
/// Q12 R13 R23 - R23 R13 Q12 and R12 R13 Q23 - Q23 R13 R12, as an explicit
/// (2 d^6) x (d^4) matrix. Its kernel is the space of Q solving both.
#[derive(Clone, Debug)]
pub struct LinearOperator<F: Field> {
    pub matrix: Matrix<F>,
    pub d: usize,
}

impl<F: Field> LinearOperator<F> {
    /// Apply to a candidate Q; returns the stacked residual entries.
    pub fn apply(&self, q: &Matrix<F>) -> Vec<F::Elem> {
        let f = self.matrix.field();
        let v = q.vec();
        let mut out = Vec::with_capacity(self.matrix.rows());
        for i in 0..self.matrix.rows() {
            let mut acc = f.zero();
            for (j, qj) in v.iter().enumerate() {
                acc = f.add(&acc, &f.mul(self.matrix.get(i, j), qj));
            }
            out.push(acc);
        }
        out
    }

    pub fn annihilates(&self, q: &Matrix<F>) -> bool {
        let f = self.matrix.field();
        self.apply(q).iter().all(|e| f.is_zero(e))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// Build the operator column by column: column j is the stacked residual at
/// Q = E_j, the j-th elementary matrix in row-major order.
pub fn linear_operator_for_q<F: Field>(r: &Matrix<F>, d: usize) -> LinearOperator<F> {
    assert_eq!(r.rows(), d * d);
    assert_eq!(r.cols(), d * d);
    let f = r.field().clone();
    let n2 = d * d;
    let n3 = n2 * d;

    let r12 = embed(r, LegPair::OneTwo, d);
    let r13 = embed(r, LegPair::OneThree, d);
    let r23 = embed(r, LegPair::TwoThree, d);
    // Q12 * a - b * Q12  and  c * Q23 - Q23 * e
    let a = r13.mul(&r23);
    let b = r23.mul(&r13);
    let c = r12.mul(&r13);
    let e = r13.mul(&r12);

    let mut op = Matrix::zero(f.clone(), 2 * n3 * n3, n2 * n2);
    for col in 0..n2 * n2 {
        let mut unit = Matrix::zero(f.clone(), n2, n2);
        unit.set(col / n2, col % n2, f.one());
        let u12 = embed(&unit, LegPair::OneTwo, d);
        let u23 = embed(&unit, LegPair::TwoThree, d);
        let res5 = u12.mul(&a).sub(&b.mul(&u12));
        let res6 = c.mul(&u23).sub(&u23.mul(&e));
        for (row, v) in res5.entries().iter().chain(res6.entries()).enumerate() {
            op.set(row, col, v.clone());
        }
    }
    LinearOperator { matrix: op, d }
}

/// A basis of the Q-space solving the linear equations, in the deterministic
/// reduced-echelon gauge, with coordinate names c1..ck.
#[derive(Clone, Debug)]
pub struct NullSpaceBasis<F: Field> {
    pub basis: Vec<Matrix<F>>,
    pub coords: Vec<String>,
    pub d: usize,
}

impl<F: Field> NullSpaceBasis<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The combination `sum_k coeffs[k] * B_k`.
    pub fn combine(&self, coeffs: &[F::Elem]) -> Matrix<F> {
        assert_eq!(coeffs.len(), self.basis.len());
        let f = self.basis[0].field().clone();
        let n = self.d * self.d;
        let mut out = Matrix::zero(f.clone(), n, n);
        for (c, b) in coeffs.iter().zip(&self.basis) {
            out = out.add(&b.scale(c));
        }
        out
    }

    /// Construct a basis from explicitly supplied matrices (a display gauge).
    pub fn from_matrices(coords: Vec<String>, basis: Vec<Matrix<F>>, d: usize) -> Self {
        assert_eq!(coords.len(), basis.len());
        assert!(!basis.is_empty(), "empty display basis");
        NullSpaceBasis { basis, coords, d }
    }
}

pub fn null_space<F: Field>(op: &LinearOperator<F>) -> NullSpaceBasis<F> {
    let d = op.d;
    let n2 = d * d;
    let f = op.matrix.field().clone();
    let vectors = op.matrix.null_space();
    let basis: Vec<Matrix<F>> = vectors
        .into_iter()
        .map(|v| Matrix::new(f.clone(), n2, n2, v))
        .collect();
    let coords = (1..=basis.len()).map(|k| format!("c{k}")).collect();
    NullSpaceBasis { basis, coords, d }
}

/// Express a matrix in the basis: coefficients c with sum c_k B_k = m, if m
/// lies in the span.
pub fn coordinates_in_basis<F: Field>(
    basis: &NullSpaceBasis<F>,
    m: &Matrix<F>,
) -> Option<Vec<F::Elem>> {
    let f = basis.basis[0].field().clone();
    let n4 = basis.d * basis.d * basis.d * basis.d;
    let cols = basis.basis.len();
    let stacked = Matrix::from_fn(f, n4, cols, |i, j| basis.basis[j].entries()[i].clone());
    let coeffs = stacked.solve(&m.vec())?;
    // solve() guarantees consistency; the basis is independent, so the
    // coordinates are unique.
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, Rationals};
    use crate::tensor::permutation_p;

    fn r_h02() -> Matrix<Rationals> {
        let e: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]];
        Matrix::from_fn(Rationals, 4, 4, |i, j| rat(e[i][j]))
    }

    #[test]
    fn identity_r_gives_the_zero_operator() {
        let op = linear_operator_for_q(&Matrix::identity(Rationals, 4), 2);
        assert!(op.matrix.is_zero());
        assert_eq!(null_space(&op).dim(), 16);
    }

    #[test]
    fn h02_operator_has_rank_14() {
        let op = linear_operator_for_q(&r_h02(), 2);
        assert_eq!(op.rank(), 14);
        let ns = null_space(&op);
        assert_eq!(ns.dim(), 2);
        // every basis matrix really solves the two linear equations
        for b in &ns.basis {
            assert!(op.annihilates(b));
        }
    }

    #[test]
    fn h02_kernel_spans_p_and_the_second_generator() {
        let op = linear_operator_for_q(&r_h02(), 2);
        let ns = null_space(&op);
        let p = permutation_p(&Rationals, 2);
        assert!(coordinates_in_basis(&ns, &p).is_some());
        let b: [[i64; 4]; 4] = [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, -1, 0], [-1, 0, 0, 0]];
        let b = Matrix::from_fn(Rationals, 4, 4, |i, j| rat(b[i][j]));
        assert!(coordinates_in_basis(&ns, &b).is_some());
        // and R = P + B is in the span too, as it must be
        assert!(coordinates_in_basis(&ns, &r_h02()).is_some());
        // something outside the kernel is not
        assert!(coordinates_in_basis(&ns, &Matrix::identity(Rationals, 4)).is_none());
    }

    #[test]
    fn operator_columns_match_direct_residuals() {
        // L * vec(Q) must equal the directly computed residual stack
        let r = r_h02();
        let op = linear_operator_for_q(&r, 2);
        let mut v = 3i64;
        let q = Matrix::from_fn(Rationals, 4, 4, |_, _| {
            v = (v * 13 + 5) % 17;
            rat(v - 8)
        });
        let applied = op.apply(&q);
        let r12 = embed(&r, LegPair::OneTwo, 2);
        let r13 = embed(&r, LegPair::OneThree, 2);
        let r23 = embed(&r, LegPair::TwoThree, 2);
        let q12 = embed(&q, LegPair::OneTwo, 2);
        let q23 = embed(&q, LegPair::TwoThree, 2);
        let res5 = q12.mul(&r13.mul(&r23)).sub(&r23.mul(&r13).mul(&q12));
        let res6 = r12.mul(&r13).mul(&q23).sub(&q23.mul(&r13.mul(&r12)));
        let direct: Vec<_> = res5
            .entries()
            .iter()
            .chain(res6.entries())
            .cloned()
            .collect();
        assert_eq!(applied, direct);
    }

    #[test]
    fn superposition() {
        let r = r_h02();
        let op = linear_operator_for_q(&r, 2);
        let mut v = 7i64;
        let mut rand_m = || {
            Matrix::from_fn(Rationals, 4, 4, |_, _| {
                v = (v * 11 + 3) % 23;
                rat(v - 11)
            })
        };
        let q1 = rand_m();
        let q2 = rand_m();
        let lhs = op.apply(&q1.add(&q2));
        let rhs: Vec<_> = op
            .apply(&q1)
            .into_iter()
            .zip(op.apply(&q2))
            .map(|(a, b)| a + b)
            .collect();
        assert_eq!(lhs, rhs);
    }
}
