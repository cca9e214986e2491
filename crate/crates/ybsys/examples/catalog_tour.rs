//! Walk the catalog of known solution families: instantiate each with exact
//! rational parameters, verify the residuals vanish, and run the fully
//! symbolic pass over the family's function field.

use ybsys::catalog;
use ybsys::solver::verify_family;

fn main() {
    for entry in catalog::catalog_entries() {
        println!("{} [{}]", entry.name, entry.family);
        println!("  params: {}", entry.params.join(", "));
        if !entry.constraints.is_empty() {
            println!("  constraints: {} = 0", entry.constraints.join(" = 0, "));
        }
        let report = verify_family(entry, 5, 2024).unwrap();
        println!("  {report}");
        let (pair, bind) = entry.instantiate(2024).unwrap();
        let shown: Vec<String> = bind.iter().map(|(k, v)| format!("{k}={v}")).collect();
        println!("  sample binding: {}", shown.join(", "));
        let det_r = pair.r.determinant();
        let det_q = pair.q.determinant();
        println!("  det R = {det_r}, det Q = {det_q}");
    }
}
