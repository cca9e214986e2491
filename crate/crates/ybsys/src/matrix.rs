//! Dense matrices over an exact field, with Gaussian elimination for
//! determinant, inverse, rank, kernel and linear solving.
//!
//! Shape and field mismatches are programming errors and panic; genuinely
//! mathematical failures (inverting a singular matrix) return errors.

use thiserror::Error;

use crate::arith::{ArithError, Field};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("matrix is singular")]
pub struct SingularMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    field: F,
    rows: usize,
    cols: usize,
    entries: Vec<F::Elem>,
}

impl<F: Field> Matrix<F> {
    pub fn new(field: F, rows: usize, cols: usize, entries: Vec<F::Elem>) -> Matrix<F> {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        Matrix {
            field,
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(
        field: F,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> F::Elem,
    ) -> Matrix<F> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix::new(field, rows, cols, entries)
    }

    pub fn zero(field: F, rows: usize, cols: usize) -> Matrix<F> {
        let z = field.zero();
        Matrix::new(field, rows, cols, vec![z; rows * cols])
    }

    pub fn identity(field: F, n: usize) -> Matrix<F> {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    /// Parse a grid of expression strings into a matrix.
    pub fn from_exprs(field: F, rows: &[Vec<&str>]) -> Result<Matrix<F>, ArithError> {
        let r = rows.len();
        assert!(r > 0);
        let c = rows[0].len();
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged entry grid");
            for s in row {
                entries.push(crate::arith::parse_scalar(&field, s)?);
            }
        }
        Ok(Matrix::new(field, r, c, entries))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[F::Elem] {
        &self.entries
    }

    /// Row-major flattening, the `vec` of the matrix.
    pub fn vec(&self) -> Vec<F::Elem> {
        self.entries.clone()
    }

    fn assert_same_field(&self, other: &Matrix<F>) {
        assert!(self.field == other.field, "matrices over different fields");
    }

    pub fn add(&self, other: &Matrix<F>) -> Matrix<F> {
        self.assert_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.add(self.get(i, j), other.get(i, j))
        })
    }

    pub fn sub(&self, other: &Matrix<F>) -> Matrix<F> {
        self.assert_same_field(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.sub(self.get(i, j), other.get(i, j))
        })
    }

    pub fn neg(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.neg(self.get(i, j))
        })
    }

    pub fn scale(&self, k: &F::Elem) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.rows, self.cols, |i, j| {
            self.field.mul(self.get(i, j), k)
        })
    }

    pub fn mul(&self, other: &Matrix<F>) -> Matrix<F> {
        self.assert_same_field(other);
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        Matrix::from_fn(self.field.clone(), self.rows, other.cols, |i, j| {
            let mut acc = self.field.zero();
            for k in 0..self.cols {
                let t = self.field.mul(self.get(i, k), other.get(k, j));
                acc = self.field.add(&acc, &t);
            }
            acc
        })
    }

    pub fn transpose(&self) -> Matrix<F> {
        Matrix::from_fn(self.field.clone(), self.cols, self.rows, |i, j| {
            self.get(j, i).clone()
        })
    }

    pub fn trace(&self) -> F::Elem {
        assert!(self.is_square());
        let mut acc = self.field.zero();
        for i in 0..self.rows {
            acc = self.field.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.field.is_zero(e))
    }

    /// First entry (row-major) that is not zero.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &F::Elem)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !self.field.is_zero(self.get(i, j)) {
                    return Some((i, j, self.get(i, j)));
                }
            }
        }
        None
    }

    /// Entry-wise image in another field.
    pub fn map_into<G: Field>(
        &self,
        target: &G,
        mut f: impl FnMut(&F::Elem) -> Result<G::Elem, ArithError>,
    ) -> Result<Matrix<G>, ArithError> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(f(e)?);
        }
        Ok(Matrix::new(target.clone(), self.rows, self.cols, entries))
    }

    /// Reduced row echelon form. The pivot rule is "first row with a nonzero
    /// entry, columns left to right", which makes the result deterministic.
    pub fn rref(&self) -> Rref<F> {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !f.is_zero(m.get(r, col)));
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(row, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = f.inv(m.get(row, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let v = f.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            pivots,
            matrix: m,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the kernel in the standard reduced-echelon gauge: one vector
    /// per free column, with a 1 in the free coordinate.
    pub fn null_space(&self) -> Vec<Vec<F::Elem>> {
        let f = &self.field;
        let r = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &c) in r.pivots.iter().enumerate() {
                v[c] = Some(i);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![f.zero(); self.cols];
            vec[free] = f.one();
            for (i, &pc) in r.pivots.iter().enumerate() {
                vec[pc] = f.neg(r.matrix.get(i, free));
            }
            basis.push(vec);
        }
        basis
    }

    /// Determinant by forward elimination; exact in any field.
    pub fn determinant(&self) -> F::Elem {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = f.one();
        let mut negate = false;
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !f.is_zero(m.get(r, col)));
            let Some(pr) = pivot_row else {
                return f.zero();
            };
            if pr != col {
                negate = !negate;
                for j in 0..n {
                    let a = m.get(col, j).clone();
                    let b = m.get(pr, j).clone();
                    m.set(col, j, b);
                    m.set(pr, j, a);
                }
            }
            let pivot = m.get(col, col).clone();
            det = f.mul(&det, &pivot);
            let inv = f.inv(&pivot).expect("pivot is nonzero");
            for r in col + 1..n {
                if f.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = f.mul(m.get(r, col), &inv);
                for j in col..n {
                    let v = f.sub(m.get(r, j), &f.mul(&factor, m.get(col, j)));
                    m.set(r, j, v);
                }
            }
        }
        if negate {
            f.neg(&det)
        } else {
            det
        }
    }

    pub fn inverse(&self) -> Result<Matrix<F>, SingularMatrix> {
        assert!(self.is_square(), "inverse of a non-square matrix");
        let f = &self.field;
        let n = self.rows;
        // Gauss-Jordan on [A | I]
        let mut aug = Matrix::from_fn(f.clone(), n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                f.one()
            } else {
                f.zero()
            }
        });
        let r = aug.rref();
        if r.rank < n || r.pivots[..n.min(r.pivots.len())] != (0..n).collect::<Vec<_>>()[..] {
            return Err(SingularMatrix);
        }
        aug = r.matrix;
        Ok(Matrix::from_fn(f.clone(), n, n, |i, j| {
            aug.get(i, j + n).clone()
        }))
    }

    /// One exact solution of `self * x = rhs` (free variables set to zero),
    /// or None when the system is inconsistent.
    pub fn solve(&self, rhs: &[F::Elem]) -> Option<Vec<F::Elem>> {
        assert_eq!(rhs.len(), self.rows);
        let f = &self.field;
        let aug = Matrix::from_fn(f.clone(), self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                rhs[i].clone()
            }
        });
        let r = aug.rref();
        if r.pivots.contains(&self.cols) {
            return None; // a pivot in the augmented column
        }
        let mut x = vec![f.zero(); self.cols];
        for (i, &c) in r.pivots.iter().enumerate() {
            x[c] = r.matrix.get(i, self.cols).clone();
        }
        Some(x)
    }
}

#[derive(Clone, Debug)]
pub struct Rref<F: Field> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub rank: usize,
}
