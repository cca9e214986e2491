use thiserror::Error;

use super::linear::{linear_operator_for_q, null_space, NullSpaceBasis};
use crate::arith::{Field, PrimeField};
use crate::matrix::Matrix;
use crate::system::ybe_residual;
use crate::tensor::{embed, LegPair};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration needs {required} coordinate points, above the bound {bound}")]
    BoundExceeded { required: u128, bound: u64 },
    #[error("enumeration needs more than 2^128 coordinate points (kernel dimension {dim})")]
    Astronomical { dim: usize },
}

/// One solution found by exhaustive search: its coordinates in the kernel
/// basis, the matrix itself, and whether it is invertible.
#[derive(Clone, Debug, PartialEq)]
pub struct EnumeratedSolution {
    pub coords: Vec<u64>,
    pub matrix: Matrix<PrimeField>,
    pub invertible: bool,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub basis: NullSpaceBasis<PrimeField>,
    pub r_solves_ybe: bool,
    pub points_scanned: u128,
    /// All solutions of the full system, in lexicographic coordinate order.
    pub solutions: Vec<EnumeratedSolution>,
}

impl Enumeration {
    pub fn invertible_count(&self) -> usize {
        self.solutions.iter().filter(|s| s.invertible).count()
    }
}

/// Exhaust all Q over F_p with zero system residuals for the given R.
///
/// Every solution must lie in the kernel of the two linear equations, so the
/// scan runs over coordinate vectors in F_p^k against that basis and tests
/// the remaining Yang-Baxter equation for Q directly. If R itself fails its
/// Yang-Baxter equation the solution set is empty and the scan is skipped.
pub fn enumerate_fp(
    r: &Matrix<PrimeField>,
    d: usize,
    bound: u64,
) -> Result<Enumeration, EnumerateError> {
    let field = *r.field();
    let p = field.modulus();
    let basis = null_space(&linear_operator_for_q(r, d));
    let k = basis.dim();

    let mut required: u128 = 1;
    for _ in 0..k {
        required = required
            .checked_mul(p as u128)
            .ok_or(EnumerateError::Astronomical { dim: k })?;
    }
    if required > bound as u128 {
        return Err(EnumerateError::BoundExceeded { required, bound });
    }

    if !ybe_residual(r, d).is_zero() {
        return Ok(Enumeration {
            basis,
            r_solves_ybe: false,
            points_scanned: 0,
            solutions: Vec::new(),
        });
    }

    let mut solutions = Vec::new();
    let mut coords = vec![0u64; k];
    let mut scanned: u128 = 0;
    loop {
        scanned += 1;
        let q = basis.combine(&coords);
        if q_ybe_holds(&q, d) {
            let invertible = !field.is_zero(&q.determinant());
            solutions.push(EnumeratedSolution {
                coords: coords.clone(),
                matrix: q,
                invertible,
            });
        }
        // lexicographic odometer, last coordinate fastest
        let mut pos = k;
        loop {
            if pos == 0 {
                return Ok(Enumeration {
                    basis,
                    r_solves_ybe: true,
                    points_scanned: scanned,
                    solutions,
                });
            }
            pos -= 1;
            coords[pos] += 1;
            if coords[pos] < p {
                break;
            }
            coords[pos] = 0;
        }
    }
}

fn q_ybe_holds(q: &Matrix<PrimeField>, d: usize) -> bool {
    let q12 = embed(q, LegPair::OneTwo, d);
    let q13 = embed(q, LegPair::OneThree, d);
    let q23 = embed(q, LegPair::TwoThree, d);
    let lhs = q12.mul(&q13).mul(&q23);
    let rhs = q23.mul(&q13).mul(&q12);
    lhs == rhs
}
