//! Exact scalar arithmetic: arbitrary-precision rationals, prime fields,
//! sparse multivariate polynomials and rational functions, plus the
//! expression grammar used for matrix entries.
//!
//! Every value is immutable and every operation is a pure function, so the
//! whole module is safe to use from multiple threads.

mod fp;
mod parser;
mod poly;
mod ratfun;
mod rational;

pub use fp::PrimeField;
pub use parser::parse_scalar;
pub use poly::{Monomial, Polynomial, VarSet};
pub use ratfun::{FunctionField, RatFun};
pub use rational::{rat, ratio, Rational, Rationals};

use num_bigint::BigInt;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown identifier `{0}` (field has no variables)")]
    UnknownIdentifier(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("modulus {0} is not a supported prime (need a prime below 2^31)")]
    NotPrime(u64),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
}

/// A field of exact scalars. The descriptor object carries whatever context
/// elements need (modulus, variable names); elements themselves stay small.
#[allow(clippy::wrong_self_convention)]
pub trait Field: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    /// Image of a rational number; fails in F_p when p divides the denominator.
    fn from_rational(&self, r: &Rational) -> Result<Self::Elem, ArithError>;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, ArithError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, ArithError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn pow(&self, a: &Self::Elem, n: u32) -> Self::Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// The scalar named by an identifier. Only fields with variables have any.
    fn var(&self, name: &str) -> Result<Self::Elem, ArithError> {
        Err(ArithError::UnknownIdentifier(name.to_string()))
    }

    /// Serialize an element in the expression grammar; `parse_scalar` of the
    /// result is the element again.
    fn format(&self, a: &Self::Elem) -> String;
}
