//! Verify candidate pairs against the four coupled equations, with
//! per-equation residual detail.

use ybsys::arith::{rat, Rationals};
use ybsys::catalog;
use ybsys::matrix::Matrix;
use ybsys::system::{is_solution, system_residuals, SystemResiduals, YbPair};
use ybsys::tensor::permutation_p;

fn report(name: &str, pair: &YbPair<Rationals>) {
    let res = system_residuals(pair);
    let verdict = is_solution(pair);
    println!("{name}:");
    for (label, matrix) in SystemResiduals::<Rationals>::LABELS
        .iter()
        .zip(res.as_array())
    {
        match matrix.first_nonzero() {
            None => println!("  {label}: residual zero"),
            Some((i, j, v)) => println!("  {label}: residual nonzero at ({i},{j}) = {v}"),
        }
    }
    println!(
        "  R invertible: {}, Q invertible: {}, solves: {}",
        verdict.invertible_r, verdict.invertible_q, verdict.solves
    );
}

fn main() {
    // the antidiagonal class at t = 2 paired with its own family member at
    // a = 3: a solution where Q is proportional to none of P, R, P R^-1 P
    let r = catalog::r_h14(&rat(2));
    let mut q = Matrix::zero(Rationals, 4, 4);
    q.set(0, 3, rat(1));
    q.set(1, 2, rat(3));
    q.set(2, 1, rat(3));
    q.set(3, 0, rat(1));
    report(
        "antidiagonal R(t=2) with family Q(a=3)",
        &YbPair::new(r, q, 2),
    );

    // the flip always pairs with a Yang-Baxter solution
    let p = permutation_p(&Rationals, 2);
    report(
        "generic-class R with Q = P",
        &YbPair::new(catalog::r_h02(), p, 2),
    );

    // a failing candidate: the identity Q does not commute with this R's
    // leg products
    report(
        "generic-class R with Q = 1 (not a solution)",
        &YbPair::new(catalog::r_h02(), Matrix::identity(Rationals, 4), 2),
    );
}
