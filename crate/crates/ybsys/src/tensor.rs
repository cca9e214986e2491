//! Tensor-product structure on V (x) V and V (x) V (x) V: Kronecker products,
//! the flip operator, leg embeddings, and the partial transpose in the first
//! factor.
//!
//! Composite indices are row-major throughout: the pair (i, j) is the single
//! index i*d + j, and matrices copied from the literature are transcribed in
//! exactly this basis.

use crate::arith::Field;
use crate::matrix::{Matrix, SingularMatrix};

/// Which pair of tensor legs an operator on V (x) V acts on inside
/// V (x) V (x) V.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegPair {
    OneTwo,
    OneThree,
    TwoThree,
}

impl LegPair {
    pub const ALL: [LegPair; 3] = [LegPair::OneTwo, LegPair::OneThree, LegPair::TwoThree];
}

/// Kronecker product: `(A (x) B)[(i*rB + k), (j*cB + l)] = A[i,j] * B[k,l]`.
pub fn kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    assert!(a.field() == b.field(), "kron over different fields");
    let f = a.field().clone();
    let (rb, cb) = (b.rows(), b.cols());
    Matrix::from_fn(f.clone(), a.rows() * rb, a.cols() * cb, |i, j| {
        f.mul(a.get(i / rb, j / cb), b.get(i % rb, j % cb))
    })
}

/// The flip P on V (x) V: P(e_i (x) e_j) = e_j (x) e_i; P^2 = 1.
pub fn permutation_p<F: Field>(field: &F, d: usize) -> Matrix<F> {
    assert!(d >= 1);
    Matrix::from_fn(field.clone(), d * d, d * d, |r, c| {
        let (a, b) = (r / d, r % d);
        let (k, l) = (c / d, c % d);
        if a == l && b == k {
            field.one()
        } else {
            field.zero()
        }
    })
}

/// Embed an operator on V (x) V into V (x) V (x) V acting on the given legs.
///
/// Legs (1,3) are realized by conjugating the (1,2) embedding with
/// P_23 = 1 (x) P, which keeps a single source of truth for the index
/// conventions.
pub fn embed<F: Field>(m: &Matrix<F>, legs: LegPair, d: usize) -> Matrix<F> {
    assert_eq!(m.rows(), d * d, "operator must act on V (x) V");
    assert_eq!(m.cols(), d * d, "operator must act on V (x) V");
    let f = m.field().clone();
    let id = Matrix::identity(f.clone(), d);
    match legs {
        LegPair::OneTwo => kron(m, &id),
        LegPair::TwoThree => kron(&id, m),
        LegPair::OneThree => {
            let p23 = kron(&id, &permutation_p(&f, d));
            p23.mul(&kron(m, &id)).mul(&p23)
        }
    }
}

/// Partial transpose in the first tensor factor:
/// (R^t1)[(i,k),(j,l)] = R[(j,k),(i,l)].
pub fn partial_transpose_t1<F: Field>(r: &Matrix<F>, d: usize) -> Matrix<F> {
    assert_eq!(r.rows(), d * d);
    assert_eq!(r.cols(), d * d);
    Matrix::from_fn(r.field().clone(), d * d, d * d, |row, col| {
        let (i, k) = (row / d, row % d);
        let (j, l) = (col / d, col % d);
        r.get(j * d + k, i * d + l).clone()
    })
}

/// The second inversion (R^t1)^-1, when it exists.
pub fn second_inversion<F: Field>(r: &Matrix<F>, d: usize) -> Result<Matrix<F>, SingularMatrix> {
    partial_transpose_t1(r, d).inverse()
}
