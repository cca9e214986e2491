//! Exact-arithmetic tools for the constant Yang-Baxter system in dimension
//! two: the four coupled equations
//!
//! ```text
//! Q12 Q13 Q23 = Q23 Q13 Q12        R12 R13 R23 = R23 R13 R12
//! Q12 R13 R23 = R23 R13 Q12        R12 R13 Q23 = Q23 R13 R12
//! ```
//!
//! for pairs of invertible 4x4 matrices (R, Q). The crate verifies candidate
//! pairs, solves the linear part for Q and extracts the cubic coefficient
//! constraints, enumerates all solutions over small prime fields, applies the
//! symmetry group of the system, and ships a catalog of the known solution
//! families in dimension two.
//!
//! Everything is computed over one of three exact fields - the rationals,
//! a prime field F_p, or a rational-function field Q(t1,...,tk) - so "the
//! residual is zero" always means identically zero, never "small".
//!
//! The `examples/` directory has one runnable program per capability; the
//! `ybsys` binary wraps the same operations for matrix files on disk.

pub mod arith;
pub mod catalog;
pub mod cli;
pub mod matfile;
pub mod matrix;
pub mod solver;
pub mod symmetry;
pub mod system;
pub mod tensor;

pub use arith::{parse_scalar, Field, FunctionField, PrimeField, Rational, Rationals};
pub use matrix::Matrix;
pub use system::YbPair;
pub use tensor::LegPair;
