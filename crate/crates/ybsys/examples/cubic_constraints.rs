//! The nonlinear half of the solving procedure: substitute the kernel
//! combination Q = sum c_k B_k into the remaining Yang-Baxter equation and
//! print the cubic constraints on the coefficients, in the published display
//! bases.

use ybsys::arith::Field;
use ybsys::catalog;
use ybsys::solver::{cubic_constraints, NullSpaceBasis};

fn main() {
    let cs = cubic_constraints(&catalog::r_h02(), &catalog::display_gauge_h02(), 2).unwrap();
    println!("generic class, coordinates (alpha, beta):");
    for p in cs.polys() {
        println!("  {p} = 0");
    }
    println!("  roots: beta = 0 and beta = +-alpha, the three companion lines\n");

    let cs = cubic_constraints(
        &catalog::r_h12_special(),
        &catalog::display_gauge_h12_special(),
        2,
    )
    .unwrap();
    println!("special triangular class, coordinates (alpha, beta, gamma, delta):");
    for p in cs.polys() {
        println!("  {p} = 0");
    }
    println!();

    // the antidiagonal class keeps its R-parameter symbolic; the constraints
    // come out independent of it
    let (f, r14) = catalog::r_h14_symbolic();
    let gauge = catalog::display_gauge_h14();
    let lifted = NullSpaceBasis::from_matrices(
        gauge.coords.clone(),
        gauge
            .basis
            .iter()
            .map(|b| b.map_into(&f, |e| f.from_rational(e)).unwrap())
            .collect(),
        2,
    );
    let cs = cubic_constraints(&r14, &lifted, 2).unwrap();
    println!("antidiagonal class (symbolic t), coordinates (alpha, beta, gamma):");
    for p in cs.polys() {
        println!("  {p} = 0");
    }
}
