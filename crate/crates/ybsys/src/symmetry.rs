//! The symmetry group of the system: simultaneous conjugation of R and Q by
//! S (x) S with independent rescalings, and conjugation by the flip P. Also
//! scaling-invariant fingerprints and the exact equivalence search under
//! (anti)diagonal S only.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{rat, Field, Rational, Rationals};
use crate::matrix::Matrix;
use crate::solver::linear_operator_for_q;
use crate::system::YbPair;
use crate::tensor::{kron, permutation_p};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymmetryError {
    #[error("S is singular")]
    SingularS,
    #[error("scale factors must be nonzero")]
    ZeroScale,
    #[error("R or Q is singular, fingerprint undefined")]
    SingularPair,
}

/// One symmetry of the system: Q -> lambda (S x S) Q (S x S)^-1,
/// R -> kappa (S x S) R (S x S)^-1, optionally followed by conjugating both
/// with the flip P.
///
/// S ranges over GL(2) rather than SL(2): the scalars absorb determinant
/// normalization and the orbits are the same.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetryElement<F: Field> {
    pub s: Matrix<F>,
    pub lambda: F::Elem,
    pub kappa: F::Elem,
    pub flip: bool,
}

impl<F: Field> SymmetryElement<F> {
    pub fn identity(field: &F, d: usize) -> SymmetryElement<F> {
        SymmetryElement {
            s: Matrix::identity(field.clone(), d),
            lambda: field.one(),
            kappa: field.one(),
            flip: false,
        }
    }

    /// Composition "first self, then outer"; defined here only when neither
    /// element flips (the conjugations and scalings then compose directly).
    pub fn then(&self, outer: &SymmetryElement<F>) -> Option<SymmetryElement<F>> {
        if self.flip || outer.flip {
            return None;
        }
        let f = self.s.field();
        Some(SymmetryElement {
            s: outer.s.mul(&self.s),
            lambda: f.mul(&self.lambda, &outer.lambda),
            kappa: f.mul(&self.kappa, &outer.kappa),
            flip: false,
        })
    }
}

pub fn apply_symmetry<F: Field>(
    pair: &YbPair<F>,
    g: &SymmetryElement<F>,
) -> Result<YbPair<F>, SymmetryError> {
    let f = pair.field().clone();
    if f.is_zero(&g.lambda) || f.is_zero(&g.kappa) {
        return Err(SymmetryError::ZeroScale);
    }
    let ss = kron(&g.s, &g.s);
    let ss_inv = ss.inverse().map_err(|_| SymmetryError::SingularS)?;
    let mut q = ss.mul(&pair.q).mul(&ss_inv).scale(&g.lambda);
    let mut r = ss.mul(&pair.r).mul(&ss_inv).scale(&g.kappa);
    if g.flip {
        let p = permutation_p(&f, pair.d);
        q = p.mul(&q).mul(&p);
        r = p.mul(&r).mul(&p);
    }
    Ok(YbPair::new(r, q, pair.d))
}

/// Conjugation- and scaling-invariant quantities of an invertible pair:
/// tr(R)tr(R^-1), tr(Q)tr(Q^-1), tr(RQ)tr(Q^-1 R^-1), tr(RQ^-1)tr(QR^-1),
/// and the kernel dimension of the linear operator attached to R.
///
/// Equal fingerprints prove nothing; distinct fingerprints certify that no
/// symmetry maps one pair to the other.
pub fn fingerprint<F: Field>(pair: &YbPair<F>) -> Result<Vec<F::Elem>, SymmetryError> {
    let f = pair.field().clone();
    let r_inv = pair.r.inverse().map_err(|_| SymmetryError::SingularPair)?;
    let q_inv = pair.q.inverse().map_err(|_| SymmetryError::SingularPair)?;
    let rq = pair.r.mul(&pair.q);
    let qi_ri = q_inv.mul(&r_inv);
    let rqi = pair.r.mul(&q_inv);
    let qri = pair.q.mul(&r_inv);
    let dim = pair.q.rows() * pair.q.cols() - linear_operator_for_q(&pair.r, pair.d).matrix.rank();
    Ok(vec![
        f.mul(&pair.r.trace(), &r_inv.trace()),
        f.mul(&pair.q.trace(), &q_inv.trace()),
        f.mul(&rq.trace(), &qi_ri.trace()),
        f.mul(&rqi.trace(), &qri.trace()),
        f.from_int(dim as i64),
    ])
}

// --------------------------------------------------------------------------
// Restricted equivalence: search S in {diag(1, s)} u {antidiag(1, s)} with
// exact rational s, plus scalings and the flip. The conjugation by S (x) S
// acts entrywise as a monomial in s, so the matching equations reduce to
// systems s^n = c solved by exact integer root extraction.

/// diag index weights: conjugation by diag(1,s) (x) diag(1,s) multiplies
/// entry (i, j) by s^(W[i] - W[j]); the same weights apply in the
/// antidiagonal case combined with the index complement.
const W: [i64; 4] = [0, 1, 1, 2];

fn complement(i: usize) -> usize {
    3 - i
}

fn flip_index(i: usize) -> usize {
    // P (i,j) -> (j,i) on the composite index
    [0, 2, 1, 3][i]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum SKind {
    Diagonal,
    Antidiagonal,
}

/// Find a witness g with apply_symmetry(a, g) = b where S is diagonal or
/// antidiagonal, or report that none exists. The search is exact and
/// exhaustive over that restricted family.
pub fn restricted_equivalence(
    a: &YbPair<Rationals>,
    b: &YbPair<Rationals>,
) -> Option<SymmetryElement<Rationals>> {
    assert_eq!(a.d, 2, "restricted search is defined for d = 2");
    assert_eq!(b.d, 2);
    for kind in [SKind::Diagonal, SKind::Antidiagonal] {
        for flip in [false, true] {
            if let Some(g) = try_combo(a, b, kind, flip) {
                // the construction already solved the equations; verify as a
                // final guard before reporting a witness
                if let Ok(image) = apply_symmetry(a, &g) {
                    if image == *b {
                        return Some(g);
                    }
                }
            }
        }
    }
    None
}

/// A power equation s^n = c with n >= 1.
struct PowerEq {
    n: u32,
    c: Rational,
}

#[allow(clippy::needless_range_loop)] // the index weights read clearer than zipped iterators
fn try_combo(
    a: &YbPair<Rationals>,
    b: &YbPair<Rationals>,
    kind: SKind,
    flip: bool,
) -> Option<SymmetryElement<Rationals>> {
    // target[i][j] = scale * s^(W[i]-W[j]) * source[rho(i)][rho(j)]
    let rho = |i: usize| -> usize {
        let i = if flip { flip_index(i) } else { i };
        match kind {
            SKind::Diagonal => i,
            SKind::Antidiagonal => complement(i),
        }
    };

    let mut power_eqs: Vec<PowerEq> = Vec::new();
    let mut collect =
        |src: &Matrix<Rationals>, dst: &Matrix<Rationals>| -> Option<Option<(i64, Rational)>> {
            // returns the reference equation (exponent, ratio), or None inside if
            // the matrix is identically zero; outer None = zero patterns clash
            let mut reference: Option<(i64, Rational)> = None;
            for i in 0..4 {
                for j in 0..4 {
                    let s_entry = src.get(rho(i), rho(j));
                    let d_entry = dst.get(i, j);
                    match (s_entry.is_zero(), d_entry.is_zero()) {
                        (true, true) => continue,
                        (true, false) | (false, true) => return None,
                        (false, false) => {}
                    }
                    let e = W[i] - W[j];
                    let ratio = d_entry / s_entry;
                    match &reference {
                        None => reference = Some((e, ratio)),
                        Some((e0, r0)) => {
                            // s^(e - e0) = ratio / r0
                            let n = e - e0;
                            let c = &ratio / r0;
                            if n == 0 {
                                if !c.is_one() {
                                    return None;
                                }
                            } else if n > 0 {
                                power_eqs.push(PowerEq { n: n as u32, c });
                            } else {
                                power_eqs.push(PowerEq {
                                    n: (-n) as u32,
                                    c: c.recip(),
                                });
                            }
                        }
                    }
                }
            }
            Some(reference)
        };

    let q_ref = collect(&a.q, &b.q)?;
    let r_ref = collect(&a.r, &b.r)?;

    // candidate values of s
    let candidates: Vec<Rational> = match power_eqs.first() {
        None => vec![rat(1)],
        Some(first) => nth_roots(&first.c, first.n)
            .into_iter()
            .filter(|s| power_eqs[1..].iter().all(|eq| s.pow(eq.n as i32) == eq.c))
            .collect(),
    };

    for s in candidates {
        if s.is_zero() {
            continue;
        }
        let scale_for = |reference: &Option<(i64, Rational)>| -> Rational {
            match reference {
                None => rat(1),
                Some((e0, r0)) => r0 * s.pow(-(*e0 as i32)),
            }
        };
        let lambda = scale_for(&q_ref);
        let kappa = scale_for(&r_ref);
        let s_matrix = match kind {
            SKind::Diagonal => {
                Matrix::new(Rationals, 2, 2, vec![rat(1), rat(0), rat(0), s.clone()])
            }
            SKind::Antidiagonal => {
                Matrix::new(Rationals, 2, 2, vec![rat(0), rat(1), s.clone(), rat(0)])
            }
        };
        return Some(SymmetryElement {
            s: s_matrix,
            lambda,
            kappa,
            flip,
        });
    }
    None
}

/// All rational solutions of x^n = c, n >= 1.
fn nth_roots(c: &Rational, n: u32) -> Vec<Rational> {
    assert!(n >= 1);
    if c.is_zero() {
        return vec![rat(0)];
    }
    let negative = c.is_negative();
    if negative && n.is_multiple_of(2) {
        return Vec::new();
    }
    let num = c.numer().abs();
    let den = c.denom().clone();
    let rn = num.nth_root(n);
    if BigInt::pow(&rn, n) != num {
        return Vec::new();
    }
    let rd = den.nth_root(n);
    if BigInt::pow(&rd, n) != den {
        return Vec::new();
    }
    let mut root = Rational::new(rn, rd);
    if negative {
        root = -root;
    }
    if n.is_multiple_of(2) && !root.is_zero() {
        vec![root.clone(), -root]
    } else {
        vec![root]
    }
}
