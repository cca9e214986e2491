use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::poly::Monomial;
use super::rational::signum;
use super::{ArithError, Field, Polynomial, Rational, VarSet};

/// Quotient of two polynomials over one variable set.
///
/// Fractions are not gcd-reduced; instead construction strips the common
/// monomial factor, divides through by the denominator content, and makes
/// the denominator's leading coefficient positive. Equality is decided by
/// cross-multiplication, so it is mathematical equality regardless of the
/// representation reached by a computation.
#[derive(Clone, Debug)]
pub struct RatFun {
    num: Polynomial,
    den: Polynomial,
}

fn monomial_content(p: &Polynomial) -> Option<Monomial> {
    let mut it = p.terms().map(|(m, _)| m.clone());
    let first = it.next()?;
    Some(it.fold(first, |acc, m| {
        Monomial(acc.0.iter().zip(&m.0).map(|(a, b)| *a.min(b)).collect())
    }))
}

fn divide_monomial(p: &Polynomial, m: &Monomial) -> Polynomial {
    let terms = p
        .terms()
        .map(|(t, c)| {
            let e: Vec<u16> = t.0.iter().zip(&m.0).map(|(a, b)| a - b).collect();
            (Monomial(e), c.clone())
        })
        .collect();
    Polynomial::from_terms(p.vars(), terms)
}

impl RatFun {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RatFun, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        assert!(
            num.vars() == den.vars(),
            "numerator/denominator ring mismatch"
        );
        if num.is_zero() {
            return Ok(RatFun {
                num,
                den: Polynomial::one(den.vars()),
            });
        }
        // strip the common monomial factor
        let mc_num = monomial_content(&num).unwrap();
        let mc_den = monomial_content(&den).unwrap();
        let common = Monomial(
            mc_num
                .0
                .iter()
                .zip(&mc_den.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        );
        let (mut num, mut den) = if common.degree() > 0 {
            (
                divide_monomial(&num, &common),
                divide_monomial(&den, &common),
            )
        } else {
            (num, den)
        };
        // divide both by the denominator content, sign-fixed
        let mut c = den.content();
        if signum(den.leading().unwrap().1) < 0 {
            c = -c;
        }
        let inv = c.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
        Ok(RatFun { num, den })
    }

    pub fn from_poly(p: Polynomial) -> RatFun {
        let one = Polynomial::one(p.vars());
        RatFun::new(p, one).expect("denominator one is nonzero")
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial this fraction denotes, if the denominator is (a
    /// constant multiple of) one.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        let c = self.den.as_constant()?;
        Some(self.num.scale(&c.recip()))
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        RatFun::new(num, self.den.mul(&other.den)).expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        let num = self.num.mul(&other.den).sub(&other.num.mul(&self.den));
        RatFun::new(num, self.den.mul(&other.den)).expect("product of nonzero denominators")
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        RatFun::new(self.num.mul(&other.num), self.den.mul(&other.den))
            .expect("product of nonzero denominators")
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<RatFun, ArithError> {
        RatFun::new(self.den.clone(), self.num.clone())
    }

    /// Exact evaluation at a full rational binding.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Rational, ArithError> {
        let den = self.den.substitute(bindings)?;
        if den == Rational::from_integer(BigInt::from(0)) {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.num.substitute(bindings)? / den)
    }

    /// Evaluate at a point of an arbitrary field; fails if the denominator
    /// vanishes there.
    pub fn eval_in<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<F::Elem, ArithError> {
        let den = self.den.eval_in(field, point)?;
        if field.is_zero(&den) {
            return Err(ArithError::DivisionByZero);
        }
        let num = self.num.eval_in(field, point)?;
        field.div(&num, &den)
    }
}

impl PartialEq for RatFun {
    fn eq(&self, other: &Self) -> bool {
        // a/b = c/d  iff  a*d = c*b; no gcd needed
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

fn atomic_factor(p: &Polynomial) -> bool {
    // safe to print unparenthesized after '/': a positive integer, a single
    // variable power, or a variable power with coefficient 1
    if p.term_count() != 1 {
        return false;
    }
    let (m, c) = p.leading().unwrap();
    if m.degree() == 0 {
        return signum(c) > 0 && c.denom().is_one();
    }
    m.0.iter().filter(|&&e| e > 0).count() == 1 && c.is_one()
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() <= 1 {
            write!(f, "{}", self.num)?;
        } else {
            write!(f, "({})", self.num)?;
        }
        if atomic_factor(&self.den) {
            write!(f, "/{}", self.den)
        } else {
            write!(f, "/({})", self.den)
        }
    }
}

/// The field Q(x1,...,xk) of rational functions in named variables.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionField {
    vars: VarSet,
}

impl FunctionField {
    pub fn new(vars: VarSet) -> FunctionField {
        FunctionField { vars }
    }

    pub fn named<S: Into<String>>(names: Vec<S>) -> FunctionField {
        FunctionField {
            vars: VarSet::new(names),
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn poly(&self, p: Polynomial) -> RatFun {
        assert!(p.vars() == &self.vars, "polynomial from a different ring");
        RatFun::from_poly(p)
    }
}

impl Field for FunctionField {
    type Elem = RatFun;

    fn zero(&self) -> RatFun {
        RatFun::from_poly(Polynomial::zero(&self.vars))
    }

    fn one(&self) -> RatFun {
        RatFun::from_poly(Polynomial::one(&self.vars))
    }

    fn from_int(&self, n: i64) -> RatFun {
        RatFun::from_poly(Polynomial::constant(&self.vars, super::rat(n)))
    }

    fn from_bigint(&self, n: &BigInt) -> RatFun {
        RatFun::from_poly(Polynomial::constant(
            &self.vars,
            Rational::from_integer(n.clone()),
        ))
    }

    fn from_rational(&self, r: &Rational) -> Result<RatFun, ArithError> {
        Ok(RatFun::from_poly(Polynomial::constant(
            &self.vars,
            r.clone(),
        )))
    }

    fn add(&self, a: &RatFun, b: &RatFun) -> RatFun {
        a.add(b)
    }

    fn sub(&self, a: &RatFun, b: &RatFun) -> RatFun {
        a.sub(b)
    }

    fn mul(&self, a: &RatFun, b: &RatFun) -> RatFun {
        a.mul(b)
    }

    fn neg(&self, a: &RatFun) -> RatFun {
        a.neg()
    }

    fn inv(&self, a: &RatFun) -> Result<RatFun, ArithError> {
        a.inv()
    }

    fn is_zero(&self, a: &RatFun) -> bool {
        a.is_zero()
    }

    fn var(&self, name: &str) -> Result<RatFun, ArithError> {
        Ok(RatFun::from_poly(Polynomial::var(&self.vars, name)?))
    }

    fn format(&self, a: &RatFun) -> String {
        a.to_string()
    }
}
