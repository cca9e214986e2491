//! Exhaustive solution search over a small prime field: every Q over F_5
//! solving the full system for the generic-class R, found by scanning the
//! kernel coordinates and testing the remaining cubic equation.

use ybsys::arith::{Field, PrimeField};
use ybsys::catalog;
use ybsys::solver::{enumerate_fp, DEFAULT_ENUM_BOUND};
use ybsys::tensor::permutation_p;

fn main() {
    let f = PrimeField::new(5).unwrap();
    let r = catalog::r_h02()
        .map_into(&f, |e| f.from_rational(e))
        .unwrap();
    let en = enumerate_fp(&r, 2, DEFAULT_ENUM_BOUND).unwrap();

    println!("prime: 5");
    println!("kernel dimension: {}", en.basis.dim());
    println!("points scanned: {}", en.points_scanned);
    println!(
        "solutions: {} (invertible: {})",
        en.solutions.len(),
        en.invertible_count()
    );

    // identify each invertible solution against the three companion lines
    let pm = permutation_p(&f, 2);
    let pr_inv_p = pm.mul(&r.inverse().unwrap()).mul(&pm);
    for s in &en.solutions {
        let coords: Vec<String> = s.coords.iter().map(|c| c.to_string()).collect();
        let mut line = "outside the three lines?!".to_string();
        if !s.invertible {
            line = "singular".to_string();
        } else {
            for alpha in 1..5u64 {
                if s.matrix == pm.scale(&alpha) {
                    line = format!("{alpha} * P");
                } else if s.matrix == r.scale(&alpha) {
                    line = format!("{alpha} * R");
                } else if s.matrix == pr_inv_p.scale(&alpha) {
                    line = format!("{alpha} * P R^-1 P");
                }
            }
        }
        println!("  coords ({}): {line}", coords.join(", "));
    }
}
