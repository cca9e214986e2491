//! From a solution (R, Q) of the four-equation system, build the companion
//! Qbar = P R P Q R^-1 and check the extended system for (Q, Qbar, R).

use ybsys::catalog;
use ybsys::matfile;
use ybsys::system::{extended_residuals, qbar, system_residuals};

fn main() {
    let entry = catalog::entry_by_name("H1.4/antidiag").unwrap();
    let (pair, bind) = entry.instantiate(11).unwrap();
    let shown: Vec<String> = bind.iter().map(|(k, v)| format!("{k}={v}")).collect();
    println!("family {} at {}", entry.name, shown.join(", "));
    println!(
        "solves the four-equation system: {}",
        system_residuals(&pair).all_zero()
    );

    let qb = qbar(&pair).unwrap();
    println!("companion Qbar = P R P Q R^-1:");
    print!("{}", matfile::format_matrix(&qb));

    let labels = [
        "Yang-Baxter equation for Q",
        "Yang-Baxter equation for Qbar",
        "mixed equation for Qbar (reversed R factors)",
        "mixed equation for Q",
    ];
    for (label, res) in labels
        .iter()
        .zip(extended_residuals(&pair.q, &qb, &pair.r, 2))
    {
        println!(
            "  {label}: {}",
            if res.is_zero() { "zero" } else { "NONZERO" }
        );
    }
}
