//! The partial transpose in the first tensor factor and the "second
//! inversion" (R^t1)^-1, which separates solution pairs that quantize to
//! braided structures from those that do not.

use ybsys::arith::{Field, Rationals};
use ybsys::catalog;
use ybsys::matfile;
use ybsys::matrix::Matrix;
use ybsys::tensor::{partial_transpose_t1, second_inversion};

fn main() {
    let r = catalog::r_h02();
    let rt1 = partial_transpose_t1(&r, 2);
    println!("R^t1 for the generic-class R:");
    print!("{}", matfile::format_matrix(&rt1));
    println!("det R^t1 = {}", rt1.determinant());
    match second_inversion(&r, 2) {
        Ok(inv) => {
            println!(
                "second inversion exists; (R^t1)^-1 * R^t1 = 1: {}",
                inv.mul(&rt1) == Matrix::identity(Rationals, 4)
            );
        }
        Err(_) => println!("second inversion does not exist"),
    }

    // a rank-deficient partial transpose: the flip itself
    let p = ybsys::tensor::permutation_p(&Rationals, 2);
    let pt1 = partial_transpose_t1(&p, 2);
    println!(
        "flip P: det P^t1 = {} (second inversion {})",
        pt1.determinant(),
        if Rationals.is_zero(&pt1.determinant()) {
            "does not exist"
        } else {
            "exists"
        }
    );
}
