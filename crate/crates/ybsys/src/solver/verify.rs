use std::fmt;

use thiserror::Error;

use crate::arith::Field;
use crate::catalog::{CatalogEntry, CatalogError};
use crate::system::{is_solution, system_residuals, YbPair};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Arith(#[from] crate::arith::ArithError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicOutcome {
    /// All branches have identically zero residuals and generically
    /// invertible R and Q.
    Verified {
        branches: usize,
    },
    Failed {
        branch: String,
        reason: String,
    },
}

/// Result of checking one catalog family: seeded numeric instantiations plus
/// the fully symbolic pass.
#[derive(Clone, Debug)]
pub struct FamilyReport {
    pub entry: &'static str,
    pub samples_requested: usize,
    pub samples_passed: usize,
    pub failures: Vec<String>,
    pub symbolic: SymbolicOutcome,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
            && self.samples_passed == self.samples_requested
            && matches!(self.symbolic, SymbolicOutcome::Verified { .. })
    }
}

impl fmt::Display for FamilyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {}/{} instantiations",
            self.entry, self.samples_passed, self.samples_requested
        )?;
        match &self.symbolic {
            SymbolicOutcome::Verified { branches } => {
                write!(f, ", symbolic ok ({branches} branch(es))")?
            }
            SymbolicOutcome::Failed { branch, reason } => {
                write!(f, ", symbolic FAILED on branch {branch}: {reason}")?
            }
        }
        for msg in &self.failures {
            write!(f, "\n  failure: {msg}")?;
        }
        Ok(())
    }
}

/// Verify a catalog family: `samples` seeded exact instantiations must have
/// zero residuals and invertible members, and every symbolic branch must
/// vanish identically over its function field.
pub fn verify_family(
    entry: &CatalogEntry,
    samples: usize,
    seed: u64,
) -> Result<FamilyReport, VerifyError> {
    let mut failures = Vec::new();
    let mut samples_passed = 0;
    for i in 0..samples {
        let (pair, bind) = entry.instantiate(seed.wrapping_add(i as u64))?;
        let report = is_solution(&pair);
        if report.solves && report.invertible_r && report.invertible_q {
            samples_passed += 1;
        } else {
            let bind_s: Vec<String> = bind.iter().map(|(k, v)| format!("{k}={v}")).collect();
            failures.push(format!(
                "seed {} binding {{{}}}: solves={} inv_r={} inv_q={}",
                seed.wrapping_add(i as u64),
                bind_s.join(", "),
                report.solves,
                report.invertible_r,
                report.invertible_q
            ));
        }
    }

    let branches = entry.symbolic_branches()?;
    let mut symbolic = SymbolicOutcome::Verified {
        branches: branches.len(),
    };
    for b in &branches {
        let pair = YbPair::new(b.r.clone(), b.q.clone(), 2);
        if !system_residuals(&pair).all_zero() {
            symbolic = SymbolicOutcome::Failed {
                branch: b.label.clone(),
                reason: "residual not identically zero".to_string(),
            };
            break;
        }
        let f = b.field.clone();
        if f.is_zero(&b.r.determinant()) || f.is_zero(&b.q.determinant()) {
            symbolic = SymbolicOutcome::Failed {
                branch: b.label.clone(),
                reason: "identically singular member".to_string(),
            };
            break;
        }
    }

    Ok(FamilyReport {
        entry: entry.name,
        samples_requested: samples,
        samples_passed,
        failures,
        symbolic,
    })
}
