//! The symmetry group in action: move a solution around its orbit, watch the
//! fingerprint stay fixed, and decide reachability under (anti)diagonal S
//! exactly.

use ybsys::arith::{rat, ratio, Rationals};
use ybsys::catalog;
use ybsys::matrix::Matrix;
use ybsys::symmetry::{apply_symmetry, fingerprint, restricted_equivalence, SymmetryElement};
use ybsys::system::{system_residuals, YbPair};

fn main() {
    let entry = catalog::entry_by_name("H1.2-special/Q-tr").unwrap();
    let (pair, _) = entry.instantiate(7).unwrap();

    let g = SymmetryElement {
        s: Matrix::new(Rationals, 2, 2, vec![rat(2), rat(1), rat(-1), rat(3)]),
        lambda: ratio(5, 3),
        kappa: ratio(-7, 2),
        flip: true,
    };
    let moved = apply_symmetry(&pair, &g).unwrap();
    println!(
        "moved pair still solves: {}",
        system_residuals(&moved).all_zero()
    );
    let fp_before: Vec<String> = fingerprint(&pair)
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    let fp_after: Vec<String> = fingerprint(&moved)
        .unwrap()
        .iter()
        .map(|x| x.to_string())
        .collect();
    println!("fingerprint before: ({})", fp_before.join(", "));
    println!("fingerprint after:  ({})", fp_after.join(", "));

    // a diagonal witness is recovered exactly, scale factors and all
    let diag = SymmetryElement {
        s: Matrix::new(Rationals, 2, 2, vec![rat(1), rat(0), rat(0), ratio(2, 3)]),
        lambda: ratio(-3, 4),
        kappa: rat(5),
        flip: false,
    };
    let target = apply_symmetry(&pair, &diag).unwrap();
    match restricted_equivalence(&pair, &target) {
        Some(w) => println!(
            "witness found: S = [{}, {}; {}, {}], lambda = {}, kappa = {}, flip = {}",
            w.s.get(0, 0),
            w.s.get(0, 1),
            w.s.get(1, 0),
            w.s.get(1, 1),
            w.lambda,
            w.kappa,
            w.flip
        ),
        None => println!("witness found: none"),
    }

    // pairs with different kernel dimensions can never be related
    let p = ybsys::tensor::permutation_p(&Rationals, 2);
    let other = YbPair::new(catalog::r_h02(), p, 2);
    println!(
        "witness between different classes: {:?}",
        restricted_equivalence(&other, &pair).map(|_| ())
    );
}
