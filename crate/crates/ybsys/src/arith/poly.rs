use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::signum;
use super::{ArithError, Field, Rational};

/// Ordered list of variable names shared by all polynomials of one ring.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> VarSet {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(
                !names[..i].contains(n),
                "duplicate variable name `{n}` in variable set"
            );
        }
        VarSet(Arc::new(names))
    }

    pub fn empty() -> VarSet {
        VarSet(Arc::new(Vec::new()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

/// Exponent vector with the graded-lexicographic order: higher total degree
/// first, ties broken by the earlier variable carrying the higher exponent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u16>);

impl Monomial {
    pub fn unit(nvars: usize) -> Monomial {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, idx: usize) -> Monomial {
        let mut e = vec![0; nvars];
        e[idx] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn degree_in(&self, select: &[bool]) -> u32 {
        self.0
            .iter()
            .zip(select)
            .filter(|(_, &s)| s)
            .map(|(&e, _)| e as u32)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    /// Split into the part supported on `select` and the rest.
    pub fn split(&self, select: &[bool]) -> (Monomial, Monomial) {
        let mut sel = vec![0; self.0.len()];
        let mut rest = vec![0; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            if select[i] {
                sel[i] = e;
            } else {
                rest[i] = e;
            }
        }
        (Monomial(sel), Monomial(rest))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            // lex tiebreak: first differing variable, larger exponent wins
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients. Stored zero
/// coefficients are never kept, so structural equality is mathematical
/// equality, and the BTreeMap keeps terms in graded-lex order.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Polynomial {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &VarSet) -> Polynomial {
        Polynomial::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Polynomial, ArithError> {
        let idx = vars
            .index(name)
            .ok_or_else(|| ArithError::UnknownIdentifier(name.to_string()))?;
        let mut p = Polynomial::zero(vars);
        p.terms
            .insert(Monomial::var(vars.len(), idx), Rational::one());
        Ok(p)
    }

    pub fn from_terms(vars: &VarSet, terms: Vec<(Monomial, Rational)>) -> Polynomial {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.0.len(), vars.len(), "monomial arity mismatch");
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty()
            || (self.terms.len() == 1 && self.terms.keys().next().unwrap().degree() == 0)
    }

    /// The constant value, if this polynomial is one.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            return Some(self.terms.values().next().unwrap().clone());
        }
        None
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().last().map_or(0, |m| m.degree())
    }

    pub fn degree_in(&self, select: &[bool]) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(select))
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous_in(&self, select: &[bool]) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree_in(select));
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Leading (graded-lex greatest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn assert_same_ring(&self, other: &Polynomial) {
        assert!(
            self.vars == other.vars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_same_ring(other);
        let mut out = Polynomial::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.vars);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a full rational binding.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Rational, ArithError> {
        let point: Vec<Rational> = self
            .vars
            .names()
            .iter()
            .map(|n| {
                bindings
                    .get(n)
                    .cloned()
                    .ok_or_else(|| ArithError::UnboundVariable(n.clone()))
            })
            .collect::<Result<_, _>>()?;
        self.eval_in(&super::Rationals, &point)
    }

    /// Evaluate at a point of an arbitrary field, coefficients mapped through
    /// `from_rational`. The point is indexed by the variable order.
    pub fn eval_in<F: Field>(&self, field: &F, point: &[F::Elem]) -> Result<F::Elem, ArithError> {
        assert_eq!(point.len(), self.vars.len(), "point arity mismatch");
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            let mut t = field.from_rational(c)?;
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = field.mul(&t, &field.pow(&point[i], e as u32));
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Largest rational `content` such that `self / content` has coprime
    /// integer coefficients; zero polynomial has content 1.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Divide by content and make the leading coefficient positive.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if signum(self.leading().unwrap().1) < 0 {
            c = -c;
        }
        self.scale(&c.recip())
    }

    /// Group terms by their monomial part in the selected variables; each
    /// value keeps only the unselected part of its monomials.
    pub fn group_by(&self, select: &[bool]) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (sel, rest) = m.split(select);
            out.entry(sel)
                .or_insert_with(|| Polynomial::zero(&self.vars))
                .add_term(rest, c.clone());
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = signum(c) < 0;
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let abs = c.abs();
            let mono: Vec<String> =
                m.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        if e == 1 {
                            self.vars.names()[v].clone()
                        } else {
                            format!("{}^{}", self.vars.names()[v], e)
                        }
                    })
                    .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn ab() -> VarSet {
        VarSet::new(vec!["a", "b"])
    }

    /// b*(b^2 - a^2) in the ring Q[a, b].
    fn cubic(vars: &VarSet) -> Polynomial {
        let a = Polynomial::var(vars, "a").unwrap();
        let b = Polynomial::var(vars, "b").unwrap();
        b.mul(&b.mul(&b).sub(&a.mul(&a)))
    }

    #[test]
    fn substitute_root_of_cubic() {
        let vars = ab();
        let p = cubic(&vars);
        let mut bind = BTreeMap::new();
        bind.insert("a".to_string(), rat(2));
        bind.insert("b".to_string(), rat(2));
        assert_eq!(p.substitute(&bind).unwrap(), rat(0));
    }

    #[test]
    fn substitute_generic_point() {
        // 3 * (9 - 1) = 24
        let vars = ab();
        let p = cubic(&vars);
        let mut bind = BTreeMap::new();
        bind.insert("a".to_string(), rat(1));
        bind.insert("b".to_string(), rat(3));
        assert_eq!(p.substitute(&bind).unwrap(), rat(24));
    }

    #[test]
    fn substitute_constant_empty_bindings() {
        let vars = VarSet::empty();
        let p = Polynomial::constant(&vars, rat(5));
        assert_eq!(p.substitute(&BTreeMap::new()).unwrap(), rat(5));
    }

    #[test]
    fn unbound_variable_is_an_error() {
        let vars = ab();
        let p = cubic(&vars);
        let mut bind = BTreeMap::new();
        bind.insert("a".to_string(), rat(1));
        assert!(matches!(
            p.substitute(&bind),
            Err(ArithError::UnboundVariable(_))
        ));
    }

    #[test]
    fn graded_lex_order() {
        // deg 3 beats deg 2; within deg 3, a^2*b beats b^3.
        let m_b3 = Monomial(vec![0, 3]);
        let m_a2b = Monomial(vec![2, 1]);
        let m_ab = Monomial(vec![1, 1]);
        assert!(m_a2b > m_b3);
        assert!(m_b3 > m_ab);
    }

    #[test]
    fn display_is_leading_first() {
        let vars = ab();
        let p = cubic(&vars);
        // leading term a^2*b carries coefficient -1
        assert_eq!(p.to_string(), "-a^2*b+b^3");
        assert_eq!(p.normalized().to_string(), "a^2*b-b^3");
    }

    #[test]
    fn content_normalization() {
        let vars = ab();
        let a = Polynomial::var(&vars, "a").unwrap();
        let p = a
            .scale(&ratio(4, 6))
            .add(&Polynomial::constant(&vars, ratio(2, 3)));
        let n = p.normalized();
        assert_eq!(n.to_string(), "a+1");
    }

    #[test]
    fn no_zero_terms_after_cancellation() {
        let vars = ab();
        let a = Polynomial::var(&vars, "a").unwrap();
        let diff = a.sub(&a);
        assert!(diff.is_zero());
        assert_eq!(diff.term_count(), 0);
    }
}
