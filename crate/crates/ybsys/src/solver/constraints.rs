use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use super::linear::{linear_operator_for_q, NullSpaceBasis};
use crate::arith::{
    ArithError, Field, FunctionField, Polynomial, RatFun, Rational, Rationals, VarSet,
};
use crate::matrix::Matrix;
use crate::system::ybe_residual;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GaugeError {
    #[error("basis matrix {0} does not solve the linear equations")]
    NotInKernel(usize),
    #[error("empty basis")]
    EmptyBasis,
    #[error("coordinate name `{0}` collides with a parameter of R")]
    NameClash(String),
    #[error("template entry ({0},{1}) is not linear homogeneous in the coordinates")]
    TemplateNotLinear(usize, usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Base fields whose elements can be lifted into a larger rational-function
/// field; the combined field hosts both R's parameters and the basis
/// coordinates during constraint extraction.
pub trait SymbolicBase: Field {
    fn param_names(&self) -> Vec<String>;
    fn lift(&self, e: &Self::Elem, target: &FunctionField) -> RatFun;
}

impl SymbolicBase for Rationals {
    fn param_names(&self) -> Vec<String> {
        Vec::new()
    }

    fn lift(&self, e: &Rational, target: &FunctionField) -> RatFun {
        target.from_rational(e).expect("rationals embed")
    }
}

impl SymbolicBase for FunctionField {
    fn param_names(&self) -> Vec<String> {
        self.vars().names().to_vec()
    }

    fn lift(&self, e: &RatFun, target: &FunctionField) -> RatFun {
        let point: Vec<RatFun> = self
            .vars()
            .names()
            .iter()
            .map(|n| target.var(n).expect("parameter present in combined field"))
            .collect();
        e.eval_in(target, &point)
            .expect("denominator stays nonzero under variable renaming")
    }
}

/// Normalized cubic constraints on the coordinates of a null-space basis.
///
/// The polynomials live over `params(R) ++ coords`; for numeric R they are
/// polynomials in the coordinates alone. The stored set is irredundant:
/// residual entries that are linear combinations (over the parameter field)
/// of smaller-sorted ones are dropped, which is exactly the reduction the
/// published derivations apply before printing their constraint lists.
#[derive(Clone, Debug)]
pub struct ConstraintSystem {
    vars: VarSet,
    coord_select: Vec<bool>,
    polys: Vec<Polynomial>,
}

impl ConstraintSystem {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn coord_names(&self) -> Vec<String> {
        self.vars
            .names()
            .iter()
            .zip(&self.coord_select)
            .filter(|(_, &s)| s)
            .map(|(n, _)| n.clone())
            .collect()
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    /// Exact evaluation of every constraint at a rational binding of all
    /// variables (parameters and coordinates).
    pub fn evaluate(
        &self,
        bindings: &BTreeMap<String, Rational>,
    ) -> Result<Vec<Rational>, ArithError> {
        self.polys.iter().map(|p| p.substitute(bindings)).collect()
    }

    pub fn all_vanish(&self, bindings: &BTreeMap<String, Rational>) -> Result<bool, ArithError> {
        use num_traits::Zero;
        Ok(self.evaluate(bindings)?.iter().all(|v| v.is_zero()))
    }

    /// Parse polynomials over this system's variables, for comparisons.
    pub fn parse_polys(&self, exprs: &[&str]) -> Result<Vec<Polynomial>, ArithError> {
        let f = FunctionField::new(self.vars.clone());
        exprs
            .iter()
            .map(|s| {
                let rf = crate::arith::parse_scalar(&f, s)?;
                rf.as_polynomial().ok_or(ArithError::DivisionByZero)
            })
            .collect()
    }

    /// Set equality up to scalar multiples (scalars free of the coordinates)
    /// and ordering.
    pub fn equivalent_to(&self, expected: &[Polynomial]) -> bool {
        if self.polys.len() != expected.len() {
            return false;
        }
        let mut used = vec![false; expected.len()];
        for p in &self.polys {
            let hit = expected
                .iter()
                .enumerate()
                .find(|(i, q)| !used[*i] && proportional_over_base(p, q, &self.coord_select));
            match hit {
                Some((i, _)) => used[i] = true,
                None => return false,
            }
        }
        true
    }
}

/// Are p and q equal up to a nonzero factor not involving the selected
/// variables? Decided by cross-multiplication of coefficient polynomials, no
/// gcd needed.
pub fn proportional_over_base(p: &Polynomial, q: &Polynomial, select: &[bool]) -> bool {
    if p.is_zero() || q.is_zero() {
        return p.is_zero() && q.is_zero();
    }
    let gp = p.group_by(select);
    let gq = q.group_by(select);
    if gp.keys().ne(gq.keys()) {
        return false;
    }
    let lead = gp.keys().next_back().expect("nonzero polynomial");
    let a = &gp[lead];
    let b = &gq[lead];
    p.mul(b) == q.mul(a)
}

/// Total order on polynomials: compare term sequences leading-first, so the
/// polynomial with the smaller leading monomial sorts first.
fn poly_cmp(a: &Polynomial, b: &Polynomial) -> Ordering {
    let mut ta = a.terms().collect::<Vec<_>>();
    let mut tb = b.terms().collect::<Vec<_>>();
    ta.reverse();
    tb.reverse();
    for ((ma, ca), (mb, cb)) in ta.iter().zip(&tb) {
        match ma.cmp(mb).then_with(|| ca.cmp(cb)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    ta.len().cmp(&tb.len())
}

/// Incremental Gaussian elimination over the parameter field, used to drop
/// constraints that are linear combinations of ones already kept.
struct SpanTracker {
    field: FunctionField,
    // rows normalized to a unit pivot, with their pivot column
    rows: Vec<(usize, Vec<RatFun>)>,
}

impl SpanTracker {
    fn new(field: FunctionField) -> SpanTracker {
        SpanTracker {
            field,
            rows: Vec::new(),
        }
    }

    /// Reduce the vector against the kept rows; if independent, absorb it and
    /// return true.
    fn insert(&mut self, mut v: Vec<RatFun>) -> bool {
        let f = &self.field;
        for (pivot, row) in &self.rows {
            if !f.is_zero(&v[*pivot]) {
                let factor = v[*pivot].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    *x = f.sub(x, &f.mul(&factor, r));
                }
            }
        }
        let Some(pivot) = v.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&v[pivot]).expect("pivot is nonzero");
        for x in v.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.rows.push((pivot, v));
        true
    }
}

/// Extract the constraint system: substitute Q = sum c_k B_k into the
/// Yang-Baxter equation for Q and collect the distinct nonzero entries of the
/// residual, content-normalized and deduplicated up to coordinate-free
/// scalars.
pub fn cubic_constraints<F: SymbolicBase>(
    r: &Matrix<F>,
    basis: &NullSpaceBasis<F>,
    d: usize,
) -> Result<ConstraintSystem, GaugeError> {
    if basis.basis.is_empty() {
        return Err(GaugeError::EmptyBasis);
    }
    let op = linear_operator_for_q(r, d);
    for (k, b) in basis.basis.iter().enumerate() {
        if !op.annihilates(b) {
            return Err(GaugeError::NotInKernel(k));
        }
    }

    let base = r.field();
    let params = base.param_names();
    for c in &basis.coords {
        if params.contains(c) {
            return Err(GaugeError::NameClash(c.clone()));
        }
    }
    let mut names = params.clone();
    names.extend(basis.coords.iter().cloned());
    let vars = VarSet::new(names);
    let field = FunctionField::new(vars.clone());
    let coord_select: Vec<bool> = vars
        .names()
        .iter()
        .map(|n| basis.coords.contains(n))
        .collect();

    // Q as a symbolic combination over the combined field
    let n2 = d * d;
    let mut q_sym = Matrix::zero(field.clone(), n2, n2);
    for (coord, b) in basis.coords.iter().zip(&basis.basis) {
        let c = field.var(coord).expect("coordinate is a variable");
        let lifted = b
            .map_into(&field, |e| Ok(base.lift(e, &field)))
            .expect("lift is total");
        q_sym = q_sym.add(&lifted.scale(&c));
    }

    let residual = ybe_residual(&q_sym, d);
    let mut candidates: Vec<Polynomial> = Vec::new();
    for entry in residual.entries() {
        if entry.is_zero() {
            continue;
        }
        // entry = n / den with den free of the coordinates; the constraint is n = 0
        let p = entry.num().normalized();
        debug_assert!(p.degree_in(&coord_select) <= 3);
        debug_assert!(p.is_homogeneous_in(&coord_select));
        if !candidates.contains(&p) {
            candidates.push(p);
        }
    }
    // smallest leading terms first, then drop anything in the span of what
    // is already kept: the result is the irredundant generating set the
    // published derivations print
    candidates.sort_by(poly_cmp);
    let param_vars = VarSet::new(params.clone());
    let param_field = FunctionField::new(param_vars.clone());
    let mono_index: Vec<_> = {
        let mut set = std::collections::BTreeSet::new();
        for p in &candidates {
            for m in p.group_by(&coord_select).keys() {
                set.insert(m.clone());
            }
        }
        set.into_iter().collect()
    };
    let mut tracker = SpanTracker::new(param_field.clone());
    let mut polys = Vec::new();
    for p in candidates {
        let groups = p.group_by(&coord_select);
        let v: Vec<RatFun> = mono_index
            .iter()
            .map(|m| match groups.get(m) {
                Some(coeff) => param_field.poly(project(coeff, &coord_select, &param_vars)),
                None => param_field.zero(),
            })
            .collect();
        if tracker.insert(v) {
            polys.push(p);
        }
    }
    Ok(ConstraintSystem {
        vars,
        coord_select,
        polys,
    })
}

/// Re-home a polynomial supported on the non-selected variables into the
/// smaller ring of just those variables.
fn project(p: &Polynomial, select: &[bool], target: &VarSet) -> Polynomial {
    let terms = p
        .terms()
        .map(|(m, c)| {
            let e: Vec<u16> =
                m.0.iter()
                    .zip(select)
                    .filter(|(_, &s)| !s)
                    .map(|(&e, _)| e)
                    .collect();
            (crate::arith::Monomial(e), c.clone())
        })
        .collect();
    Polynomial::from_terms(target, terms)
}

/// Read a display gauge out of a Q template: every entry must be a linear
/// homogeneous polynomial in the template variables, and the k-th basis
/// matrix is the coefficient of the k-th variable.
pub fn basis_from_template(
    template: &Matrix<FunctionField>,
) -> Result<(Vec<String>, Vec<Matrix<Rationals>>), GaugeError> {
    let field = template.field().clone();
    let names: Vec<String> = field.vars().names().to_vec();
    if names.is_empty() {
        return Err(GaugeError::EmptyBasis);
    }
    let n = template.rows();
    let mut basis = vec![Matrix::zero(Rationals, n, template.cols()); names.len()];
    for i in 0..n {
        for j in 0..template.cols() {
            let entry = template.get(i, j);
            let poly = entry
                .as_polynomial()
                .ok_or(GaugeError::TemplateNotLinear(i, j))?;
            for (m, c) in poly.terms() {
                if m.degree() != 1 {
                    return Err(GaugeError::TemplateNotLinear(i, j));
                }
                let k = m.0.iter().position(|&e| e == 1).expect("degree-one term");
                basis[k].set(i, j, c.clone());
            }
        }
    }
    Ok((names, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_scalar, rat};
    use crate::solver::linear::null_space;

    fn r_h02() -> Matrix<Rationals> {
        let e: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]];
        Matrix::from_fn(Rationals, 4, 4, |i, j| rat(e[i][j]))
    }

    fn h02_display_gauge() -> NullSpaceBasis<Rationals> {
        let p: [[i64; 4]; 4] = [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]];
        let b: [[i64; 4]; 4] = [[0, 0, 0, 1], [0, 1, 0, 0], [0, 0, -1, 0], [-1, 0, 0, 0]];
        NullSpaceBasis::from_matrices(
            vec!["alpha".into(), "beta".into()],
            vec![
                Matrix::from_fn(Rationals, 4, 4, |i, j| rat(p[i][j])),
                Matrix::from_fn(Rationals, 4, 4, |i, j| rat(b[i][j])),
            ],
            2,
        )
    }

    #[test]
    fn h02_display_gauge_yields_the_single_cubic() {
        let cs = cubic_constraints(&r_h02(), &h02_display_gauge(), 2).unwrap();
        assert_eq!(cs.len(), 1);
        let expected = cs.parse_polys(&["beta*(beta^2-alpha^2)"]).unwrap();
        assert!(cs.equivalent_to(&expected));
    }

    #[test]
    fn h02_echelon_gauge_has_equivalent_variety() {
        // in the tool's own gauge the single generator reappears after the
        // linear change of coordinates; here we check dimension and that the
        // trivial solutions satisfy the constraints
        let r = r_h02();
        let ns = null_space(&linear_operator_for_q(&r, 2));
        let cs = cubic_constraints(&r, &ns, 2).unwrap();
        assert_eq!(cs.coord_names(), vec!["c1", "c2"]);
        // coordinates of P in this basis
        let p = crate::tensor::permutation_p(&Rationals, 2);
        let coords = crate::solver::coordinates_in_basis(&ns, &p).unwrap();
        let bindings: BTreeMap<String, Rational> = ns.coords.iter().cloned().zip(coords).collect();
        assert!(cs.all_vanish(&bindings).unwrap());
    }

    #[test]
    fn basis_not_in_kernel_is_rejected() {
        let bad = NullSpaceBasis::from_matrices(
            vec!["a".into()],
            vec![Matrix::identity(Rationals, 4)],
            2,
        );
        assert_eq!(
            cubic_constraints(&r_h02(), &bad, 2).unwrap_err(),
            GaugeError::NotInKernel(0)
        );
    }

    #[test]
    fn proportionality_with_parameter_scalars() {
        let vars = VarSet::new(vec!["t", "c1", "c2"]);
        let f = FunctionField::new(vars.clone());
        let select = vec![false, true, true];
        let p = parse_scalar(&f, "t*c1^2*c2")
            .unwrap()
            .as_polynomial()
            .unwrap();
        let q = parse_scalar(&f, "(t^2+t)*c1^2*c2")
            .unwrap()
            .as_polynomial()
            .unwrap();
        assert!(proportional_over_base(&p, &q, &select));
        let r = parse_scalar(&f, "t*c1*c2^2")
            .unwrap()
            .as_polynomial()
            .unwrap();
        assert!(!proportional_over_base(&p, &r, &select));
        // c1^2*c2 + t*c1*c2^2 is not a t-multiple of c1^2*c2
        let s = parse_scalar(&f, "c1^2*c2+t*c1*c2^2")
            .unwrap()
            .as_polynomial()
            .unwrap();
        assert!(!proportional_over_base(&p, &s, &select));
    }

    #[test]
    fn template_extraction() {
        let f = FunctionField::named(vec!["alpha", "beta"]);
        let template = Matrix::from_exprs(
            f.clone(),
            &[
                vec!["alpha", "0", "0", "beta"],
                vec!["0", "beta", "alpha", "0"],
                vec!["0", "alpha", "beta", "0"],
                vec!["-beta", "0", "0", "alpha"],
            ],
        )
        .unwrap();
        let (names, basis) = basis_from_template(&template).unwrap();
        assert_eq!(names, vec!["alpha", "beta"]);
        assert_eq!(*basis[0].get(0, 0), rat(1));
        assert_eq!(*basis[1].get(3, 0), rat(-1));

        let bad = Matrix::from_exprs(
            f.clone(),
            &[
                vec!["alpha^2", "0", "0", "0"],
                vec!["0", "1", "0", "0"],
                vec!["0", "0", "1", "0"],
                vec!["0", "0", "0", "1"],
            ],
        )
        .unwrap();
        assert!(matches!(
            basis_from_template(&bad),
            Err(GaugeError::TemplateNotLinear(_, _))
        ));
    }
}
