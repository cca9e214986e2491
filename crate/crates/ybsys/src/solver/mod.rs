//! Given R, solve the two linear equations of the system for Q, extract the
//! cubic coefficient constraints from the remaining Yang-Baxter equation,
//! enumerate all solutions over prime fields, and verify catalog families.

mod constraints;
mod enumerate;
mod linear;
mod verify;

pub use constraints::{
    basis_from_template, cubic_constraints, proportional_over_base, ConstraintSystem, GaugeError,
    SymbolicBase,
};
pub use enumerate::{enumerate_fp, EnumerateError, EnumeratedSolution, Enumeration};
pub use linear::{
    coordinates_in_basis, linear_operator_for_q, null_space, LinearOperator, NullSpaceBasis,
};
pub use verify::{verify_family, FamilyReport, SymbolicOutcome, VerifyError};

/// Default cap on the number of coordinate points a prime-field enumeration
/// may scan.
pub const DEFAULT_ENUM_BOUND: u64 = 10_000_000;
