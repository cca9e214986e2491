//! The linear half of the solving procedure: for each R-matrix class, the
//! space of Q solving the two mixed equations, computed over the exact field
//! the class lives in (rationals or rational functions in its parameters).

use ybsys::arith::Rationals;
use ybsys::catalog;
use ybsys::matfile;
use ybsys::matrix::Matrix;
use ybsys::solver::{linear_operator_for_q, null_space};

fn main() {
    let dim_q = |r: &Matrix<Rationals>| null_space(&linear_operator_for_q(r, 2)).dim();

    println!("kernel dimensions of the two linear equations, by R class:");
    println!(
        "  generic class (H0.2)        : {}",
        dim_q(&catalog::r_h02())
    );
    println!(
        "  special triangular (H1.2)   : {}",
        dim_q(&catalog::r_h12_special())
    );
    let (_, r14) = catalog::r_h14_symbolic();
    println!(
        "  antidiagonal, symbolic t     : {}",
        null_space(&linear_operator_for_q(&r14, 2)).dim()
    );
    let (_, r23) = catalog::r_h23_symbolic();
    println!(
        "  unipotent, symbolic x, y, z  : {}",
        null_space(&linear_operator_for_q(&r23, 2)).dim()
    );
    println!(
        "  identity                     : {}",
        dim_q(&Matrix::identity(Rationals, 4))
    );

    println!();
    println!("echelon-gauge basis for the generic class:");
    let ns = null_space(&linear_operator_for_q(&catalog::r_h02(), 2));
    for (coord, basis) in ns.coords.iter().zip(&ns.basis) {
        println!("{coord}:");
        print!("{}", matfile::format_matrix(basis));
    }
}
