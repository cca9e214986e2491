//! The known solution families of the dimension-two system, as machine
//! readable (R, Q) templates with parameter constraints, plus the named
//! R-matrices and display bases used throughout the tests and examples.
//!
//! Entry names follow the Hietarinta labels of the underlying R-matrix
//! class (H0.2, H1.2, H1.4, H2.3), with `diag` and `signdiag` for the
//! diagonal classes. Templates are stored exactly as printed in the source
//! classification; scalar multiples are reachable through the symmetry
//! scalings and are not enumerated.

use std::collections::BTreeMap;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::arith::{
    parse_scalar, rat, ratio, ArithError, Field, FunctionField, RatFun, Rational, Rationals,
};
use crate::matrix::Matrix;
use crate::solver::{basis_from_template, NullSpaceBasis};
use crate::system::{is_ybe_solution, YbPair};
use crate::tensor::permutation_p;

/// How one parameter of a family is instantiated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamStrategy {
    /// Seeded small nonzero rational.
    Free(&'static str),
    /// A sign: x^2 = 1.
    SignUnit(&'static str),
    /// dep = +-base, i.e. dep^2 = base^2.
    SignOf {
        dep: &'static str,
        base: &'static str,
    },
    /// hyp^2 = 1 + leg^2, instantiated as leg = (m^2-1)/(2m),
    /// hyp = (m^2+1)/(2m) for a random nonzero m.
    Pythagorean {
        leg: &'static str,
        hyp: &'static str,
    },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// R-matrix class this family belongs to.
    pub family: &'static str,
    /// Where the family comes from in the classification.
    pub derivation: &'static str,
    pub params: &'static [&'static str],
    pub r_template: [[&'static str; 4]; 4],
    pub q_template: [[&'static str; 4]; 4],
    /// Polynomial relations among the parameters that must vanish.
    pub constraints: &'static [&'static str],
    /// Expressions that must not vanish (beyond both determinants).
    pub nondegeneracy: &'static [&'static str],
    pub strategies: &'static [ParamStrategy],
    pub notes: &'static [&'static str],
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error("gave up instantiating `{entry}` after {attempts} attempts")]
    RejectionBudget { entry: String, attempts: usize },
    #[error("R is not a Yang-Baxter solution")]
    NotYbeSolution,
    #[error("R is singular")]
    SingularR,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "H1.2-special/Q-tr",
        family: "H1.2-special",
        derivation: "four-dimensional linear solution space; the invertible solutions beyond the flip line form this two-parameter family",
        params: &["t", "r"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "0", "1", "0"],
            ["1", "0", "0", "-1"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "1-t", "t", "0"],
            ["r", "0", "0", "-t"],
        ],
        constraints: &[],
        nondegeneracy: &["t"],
        strategies: &[ParamStrategy::Free("t"), ParamStrategy::Free("r")],
        notes: &["Q is generically proportional to none of P, R, P R^-1 P"],
    },
    CatalogEntry {
        name: "H1.4/antidiag",
        family: "H1.4",
        derivation: "three-dimensional linear solution space; antidiagonal Q with its own free parameter",
        params: &["t", "a"],
        r_template: [
            ["0", "0", "0", "1"],
            ["0", "0", "t", "0"],
            ["0", "t", "0", "0"],
            ["1", "0", "0", "0"],
        ],
        q_template: [
            ["0", "0", "0", "1"],
            ["0", "0", "a", "0"],
            ["0", "a", "0", "0"],
            ["1", "0", "0", "0"],
        ],
        constraints: &[],
        nondegeneracy: &["t", "a"],
        strategies: &[ParamStrategy::Free("t"), ParamStrategy::Free("a")],
        notes: &["Q is generically proportional to none of P, R, P R^-1 P"],
    },
    CatalogEntry {
        name: "H2.3/abc",
        family: "H2.3",
        derivation: "six-dimensional linear solution space; unit lower-triangular Q mirroring the shape of R",
        params: &["x", "y", "z", "a", "b", "c"],
        r_template: [
            ["1", "0", "0", "0"],
            ["x", "1", "0", "0"],
            ["y", "0", "1", "0"],
            ["z", "y", "x", "1"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["a", "1", "0", "0"],
            ["b", "0", "1", "0"],
            ["c", "b", "a", "1"],
        ],
        constraints: &[],
        nondegeneracy: &[],
        strategies: &[
            ParamStrategy::Free("x"),
            ParamStrategy::Free("y"),
            ParamStrategy::Free("z"),
            ParamStrategy::Free("a"),
            ParamStrategy::Free("b"),
            ParamStrategy::Free("c"),
        ],
        notes: &[
            "the source derivation calls the two H2.3 families noninvertible, yet both are unit lower triangular with determinant 1; they are treated as invertible here",
        ],
    },
    CatalogEntry {
        name: "H2.3/gh",
        family: "H2.3",
        derivation: "six-dimensional linear solution space; second unit lower-triangular family",
        params: &["x", "y", "z", "g", "h"],
        r_template: [
            ["1", "0", "0", "0"],
            ["x", "1", "0", "0"],
            ["y", "0", "1", "0"],
            ["z", "y", "x", "1"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["-g", "1", "0", "0"],
            ["g", "0", "1", "0"],
            ["-g*h", "h", "-h", "1"],
        ],
        constraints: &[],
        nondegeneracy: &[],
        strategies: &[
            ParamStrategy::Free("x"),
            ParamStrategy::Free("y"),
            ParamStrategy::Free("z"),
            ParamStrategy::Free("g"),
            ParamStrategy::Free("h"),
        ],
        notes: &[
            "the source derivation calls the two H2.3 families noninvertible, yet both are unit lower triangular with determinant 1; they are treated as invertible here",
        ],
    },
    CatalogEntry {
        name: "diag/six-vertex-q",
        family: "diagonal",
        derivation: "general diagonal R with a six-or-less-vertex Yang-Baxter solution Q",
        params: &["x", "y", "z", "q", "t"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["q", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "q-t", "q*t", "0"],
            ["0", "0", "0", "q"],
        ],
        constraints: &[],
        nondegeneracy: &["x", "y", "z", "q", "t"],
        strategies: &[
            ParamStrategy::Free("x"),
            ParamStrategy::Free("y"),
            ParamStrategy::Free("z"),
            ParamStrategy::Free("q"),
            ParamStrategy::Free("t"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "diag/six-vertex-qt",
        family: "diagonal",
        derivation: "general diagonal R with the second six-vertex solution branch",
        params: &["x", "y", "z", "q", "t"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["q", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "q-t", "q*t", "0"],
            ["0", "0", "0", "-t"],
        ],
        constraints: &[],
        nondegeneracy: &["x", "y", "z", "q", "t"],
        strategies: &[
            ParamStrategy::Free("x"),
            ParamStrategy::Free("y"),
            ParamStrategy::Free("z"),
            ParamStrategy::Free("q"),
            ParamStrategy::Free("t"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "diag/diag-Q",
        family: "diagonal",
        derivation: "general diagonal R with fully diagonal Q",
        params: &["x", "y", "z", "a", "b", "c"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["0", "a", "0", "0"],
            ["0", "0", "b", "0"],
            ["0", "0", "0", "c"],
        ],
        constraints: &[],
        nondegeneracy: &["x", "y", "z", "a", "b", "c"],
        strategies: &[
            ParamStrategy::Free("x"),
            ParamStrategy::Free("y"),
            ParamStrategy::Free("z"),
            ParamStrategy::Free("a"),
            ParamStrategy::Free("b"),
            ParamStrategy::Free("c"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "signdiag/Q1",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with the eight-vertex solution that also serves as R_H0.2",
        params: &["x", "y", "z"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["1", "0", "0", "1"],
            ["0", "1", "1", "0"],
            ["0", "1", "-1", "0"],
            ["-1", "0", "0", "1"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1"],
        nondegeneracy: &[],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "signdiag/Q2",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with the eight-vertex family constrained by s^2 = 1 + t^2",
        params: &["x", "y", "z", "s", "t"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["1+t", "0", "0", "1"],
            ["0", "s", "1", "0"],
            ["0", "1", "s", "0"],
            ["1", "0", "0", "1-t"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1", "s^2-1-t^2"],
        nondegeneracy: &["t"],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
            ParamStrategy::Pythagorean { leg: "t", hyp: "s" },
        ],
        notes: &[
            "the constraint is instantiated through t = (m^2-1)/(2m), s = (m^2+1)/(2m); the parametrization is a tool choice, not classification data",
        ],
    },
    CatalogEntry {
        name: "signdiag/Q3",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with the six-vertex solution shared with the H1.2-special family at r = 1",
        params: &["x", "y", "z", "t"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["0", "1", "0", "0"],
            ["0", "1-t", "t", "0"],
            ["1", "0", "0", "-t"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1"],
        nondegeneracy: &["t"],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
            ParamStrategy::Free("t"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "signdiag/Q4",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with an isolated six-vertex solution",
        params: &["x", "y", "z"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["1", "0", "0", "0"],
            ["0", "-1", "0", "0"],
            ["0", "0", "-1", "0"],
            ["1", "0", "0", "1"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1"],
        nondegeneracy: &[],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "signdiag/Q5",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with the antidiagonal solution shared with the H1.4 class",
        params: &["x", "y", "z", "t"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["0", "0", "0", "1"],
            ["0", "0", "t", "0"],
            ["0", "t", "0", "0"],
            ["1", "0", "0", "0"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1"],
        nondegeneracy: &["t"],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
            ParamStrategy::Free("t"),
        ],
        notes: &[],
    },
    CatalogEntry {
        name: "signdiag/Q6",
        family: "sign-diagonal",
        derivation: "sign-diagonal R with the eight-vertex family constrained by b^2 = a^2",
        params: &["x", "y", "z", "a", "b"],
        r_template: [
            ["1", "0", "0", "0"],
            ["0", "x", "0", "0"],
            ["0", "0", "y", "0"],
            ["0", "0", "0", "z"],
        ],
        q_template: [
            ["a", "0", "0", "1"],
            ["0", "b", "1", "0"],
            ["0", "1", "b", "0"],
            ["1", "0", "0", "a"],
        ],
        constraints: &["x^2-1", "y^2-1", "z^2-1", "b^2-a^2"],
        nondegeneracy: &["a^2-1"],
        strategies: &[
            ParamStrategy::SignUnit("x"),
            ParamStrategy::SignUnit("y"),
            ParamStrategy::SignUnit("z"),
            ParamStrategy::Free("a"),
            ParamStrategy::SignOf { dep: "b", base: "a" },
        ],
        notes: &[
            "agrees up to overall scale with the a,x eight-vertex family that the restricted (anti)diagonal symmetry cannot reduce; that identification is recorded as unverified",
        ],
    },
];

/// All catalog entries: the four exceptional non-diagonal families, the
/// three general-diagonal families, and the six sign-diagonal Q families.
pub fn catalog_entries() -> &'static [CatalogEntry] {
    ENTRIES
}

pub fn entry_by_name(name: &str) -> Option<&'static CatalogEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// A family instantiated with symbols: constraints are resolved by sign
/// choices or reparametrization, everything else stays a free variable.
#[derive(Clone, Debug)]
pub struct SymbolicBranch {
    pub field: FunctionField,
    pub r: Matrix<FunctionField>,
    pub q: Matrix<FunctionField>,
    pub label: String,
}

impl CatalogEntry {
    /// Templates parsed over Q(params).
    pub fn templates(
        &self,
    ) -> Result<(FunctionField, Matrix<FunctionField>, Matrix<FunctionField>), ArithError> {
        let field = FunctionField::named(self.params.to_vec());
        let r = parse_template(&field, &self.r_template)?;
        let q = parse_template(&field, &self.q_template)?;
        Ok((field, r, q))
    }

    /// Draw an exact rational instantiation satisfying all constraints and
    /// nondegeneracy conditions; both matrices come out invertible.
    pub fn instantiate(
        &self,
        seed: u64,
    ) -> Result<(YbPair<Rationals>, BTreeMap<String, Rational>), CatalogError> {
        const MAX_ATTEMPTS: usize = 1000;
        let (pfield, r_t, q_t) = self.templates()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..MAX_ATTEMPTS {
            let mut bind: BTreeMap<String, Rational> = BTreeMap::new();
            for strat in self.strategies {
                match strat {
                    ParamStrategy::Free(p) => {
                        bind.insert(p.to_string(), ratio(digit(&mut rng), digit(&mut rng)));
                    }
                    ParamStrategy::SignUnit(p) => {
                        bind.insert(p.to_string(), rat(sign(&mut rng)));
                    }
                    ParamStrategy::SignOf { dep, base } => {
                        let v = bind[*base].clone() * rat(sign(&mut rng));
                        bind.insert(dep.to_string(), v);
                    }
                    ParamStrategy::Pythagorean { leg, hyp } => {
                        let m = ratio(digit(&mut rng), digit(&mut rng));
                        let (t, s) = pythagorean_pair(&m);
                        bind.insert(leg.to_string(), t);
                        bind.insert(hyp.to_string(), s);
                    }
                }
            }
            if !self.binding_satisfies(&pfield, &bind)? {
                continue;
            }
            let q = Rationals;
            let r_m = r_t.map_into(&q, |e| e.substitute(&bind))?;
            let q_m = q_t.map_into(&q, |e| e.substitute(&bind))?;
            use num_traits::Zero;
            if r_m.determinant().is_zero() || q_m.determinant().is_zero() {
                continue;
            }
            return Ok((YbPair::new(r_m, q_m, 2), bind));
        }
        Err(CatalogError::RejectionBudget {
            entry: self.name.to_string(),
            attempts: MAX_ATTEMPTS,
        })
    }

    /// Check constraints vanish and nondegeneracy expressions do not.
    pub fn binding_satisfies(
        &self,
        pfield: &FunctionField,
        bind: &BTreeMap<String, Rational>,
    ) -> Result<bool, ArithError> {
        use num_traits::Zero;
        for c in self.constraints {
            let v = parse_scalar(pfield, c)?.substitute(bind)?;
            if !v.is_zero() {
                return Ok(false);
            }
        }
        for n in self.nondegeneracy {
            let v = parse_scalar(pfield, n)?.substitute(bind)?;
            if v.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All fully symbolic instances of the family. Sign constraints branch;
    /// the Pythagorean constraint is replaced by its rational parametrization
    /// in a fresh variable m; free parameters stay symbolic.
    pub fn symbolic_branches(&self) -> Result<Vec<SymbolicBranch>, ArithError> {
        let (_, r_t, q_t) = self.templates()?;

        let mut free: Vec<String> = Vec::new();
        let mut sign_slots: Vec<&ParamStrategy> = Vec::new();
        let mut pythagorean = None;
        for strat in self.strategies {
            match strat {
                ParamStrategy::Free(p) => free.push(p.to_string()),
                ParamStrategy::SignUnit(_) | ParamStrategy::SignOf { .. } => sign_slots.push(strat),
                ParamStrategy::Pythagorean { .. } => pythagorean = Some(strat),
            }
        }
        if pythagorean.is_some() {
            assert!(
                !self.params.contains(&"m"),
                "fresh variable m collides with a parameter"
            );
            free.push("m".to_string());
        }
        let field = FunctionField::named(free.clone());

        let mut branches = Vec::new();
        for mask in 0..(1usize << sign_slots.len()) {
            let mut image: BTreeMap<String, RatFun> = BTreeMap::new();
            let mut label_parts: Vec<String> = Vec::new();
            for p in self.params {
                if free.contains(&p.to_string()) {
                    image.insert(p.to_string(), field.var(p)?);
                }
            }
            for (bit, strat) in sign_slots.iter().enumerate() {
                let plus = mask & (1 << bit) == 0;
                let sgn = if plus { 1 } else { -1 };
                match strat {
                    ParamStrategy::SignUnit(p) => {
                        image.insert(p.to_string(), field.from_int(sgn));
                        label_parts.push(format!("{p}={sgn}"));
                    }
                    ParamStrategy::SignOf { dep, base } => {
                        let b = field.var(base)?;
                        let v = if plus { b } else { field.neg(&b) };
                        image.insert(dep.to_string(), v);
                        label_parts.push(format!("{dep}={}{base}", if plus { "" } else { "-" }));
                    }
                    _ => unreachable!(),
                }
            }
            if let Some(ParamStrategy::Pythagorean { leg, hyp }) = pythagorean {
                let m = field.var("m")?;
                let m2 = field.mul(&m, &m);
                let two_m = field.add(&m, &m);
                let t = field.div(&field.sub(&m2, &field.one()), &two_m)?;
                let s = field.div(&field.add(&m2, &field.one()), &two_m)?;
                image.insert(leg.to_string(), t);
                image.insert(hyp.to_string(), s);
                label_parts.push(format!("{leg}=(m^2-1)/(2m)"));
                label_parts.push(format!("{hyp}=(m^2+1)/(2m)"));
            }

            let point: Vec<RatFun> = self
                .params
                .iter()
                .map(|p| image[&p.to_string()].clone())
                .collect();
            let r = r_t.map_into(&field, |e| e.eval_in(&field, &point))?;
            let q = q_t.map_into(&field, |e| e.eval_in(&field, &point))?;
            branches.push(SymbolicBranch {
                field: field.clone(),
                r,
                q,
                label: if label_parts.is_empty() {
                    "generic".to_string()
                } else {
                    label_parts.join(",")
                },
            });
        }
        Ok(branches)
    }
}

fn parse_template(
    field: &FunctionField,
    rows: &[[&str; 4]; 4],
) -> Result<Matrix<FunctionField>, ArithError> {
    let grid: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
    Matrix::from_exprs(field.clone(), &grid)
}

/// Nonzero digit in [-9, 9].
fn digit(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = (rng.next_u64() % 19) as i64 - 9;
        if v != 0 {
            return v;
        }
    }
}

fn sign(rng: &mut ChaCha8Rng) -> i64 {
    if rng.next_u64() & 1 == 0 {
        1
    } else {
        -1
    }
}

/// The rational point (t, s) with s^2 = 1 + t^2 generated by m.
pub fn pythagorean_pair(m: &Rational) -> (Rational, Rational) {
    let two_m = m + m;
    let m2 = m * m;
    let one = rat(1);
    ((&m2 - &one) / &two_m, (&m2 + &one) / &two_m)
}

/// The always-present solutions for a Yang-Baxter R: Q = P, Q = R, and
/// Q = P R^-1 P.
pub fn builtin_triples(r: &Matrix<Rationals>) -> Result<Vec<YbPair<Rationals>>, CatalogError> {
    if !is_ybe_solution(r, 2) {
        return Err(CatalogError::NotYbeSolution);
    }
    let r_inv = r.inverse().map_err(|_| CatalogError::SingularR)?;
    let p = permutation_p(&Rationals, 2);
    Ok(vec![
        YbPair::new(r.clone(), p.clone(), 2),
        YbPair::new(r.clone(), r.clone(), 2),
        YbPair::new(r.clone(), p.mul(&r_inv).mul(&p), 2),
    ])
}

/// The scalar-R rule: R = lambda * 1 pairs with any Yang-Baxter solution Q.
/// This is a rule rather than a catalog family because it defers to the
/// whole YBE classification for Q.
pub fn scalar_r_pair(q: Matrix<Rationals>, lambda: &Rational) -> YbPair<Rationals> {
    let r = Matrix::identity(Rationals, 4).scale(lambda);
    YbPair::new(r, q, 2)
}

// ---------------------------------------------------------------------------
// Named R-matrices of the dimension-two landscape, in the row-major basis.

fn from_ints(e: [[i64; 4]; 4]) -> Matrix<Rationals> {
    Matrix::from_fn(Rationals, 4, 4, |i, j| rat(e[i][j]))
}

/// The generic-case demonstration matrix: diagonal-plus-antidiagonal with a
/// two-dimensional Q-space.
pub fn r_h02() -> Matrix<Rationals> {
    from_ints([[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]])
}

/// The special lower-triangular member of the H1.2 class.
pub fn r_h12_special() -> Matrix<Rationals> {
    from_ints([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 0, 0, -1]])
}

pub fn r_h14(t: &Rational) -> Matrix<Rationals> {
    let z = rat(0);
    let o = rat(1);
    Matrix::new(
        Rationals,
        4,
        4,
        vec![
            z.clone(),
            z.clone(),
            z.clone(),
            o.clone(),
            z.clone(),
            z.clone(),
            t.clone(),
            z.clone(),
            z.clone(),
            t.clone(),
            z.clone(),
            z.clone(),
            o,
            z.clone(),
            z.clone(),
            z,
        ],
    )
}

pub fn r_h14_symbolic() -> (FunctionField, Matrix<FunctionField>) {
    let f = FunctionField::named(vec!["t"]);
    let m = Matrix::from_exprs(
        f.clone(),
        &[
            vec!["0", "0", "0", "1"],
            vec!["0", "0", "t", "0"],
            vec!["0", "t", "0", "0"],
            vec!["1", "0", "0", "0"],
        ],
    )
    .expect("static template parses");
    (f, m)
}

pub fn r_h23(x: &Rational, y: &Rational, z: &Rational) -> Matrix<Rationals> {
    let zero = rat(0);
    let one = rat(1);
    Matrix::new(
        Rationals,
        4,
        4,
        vec![
            one.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
            x.clone(),
            one.clone(),
            zero.clone(),
            zero.clone(),
            y.clone(),
            zero.clone(),
            one.clone(),
            zero.clone(),
            z.clone(),
            y.clone(),
            x.clone(),
            one,
        ],
    )
}

pub fn r_h23_symbolic() -> (FunctionField, Matrix<FunctionField>) {
    let f = FunctionField::named(vec!["x", "y", "z"]);
    let m = Matrix::from_exprs(
        f.clone(),
        &[
            vec!["1", "0", "0", "0"],
            vec!["x", "1", "0", "0"],
            vec!["y", "0", "1", "0"],
            vec!["z", "y", "x", "1"],
        ],
    )
    .expect("static template parses");
    (f, m)
}

/// The eight-vertex family a*1 + x*(antidiagonal), with the sign choice in
/// the middle block, that the restricted (anti)diagonal symmetry cannot
/// reduce to the standard forms.
pub fn eight_vertex_xa(a: &Rational, x: &Rational, plus: bool) -> Matrix<Rationals> {
    let z = rat(0);
    let mid = if plus { a.clone() } else { -a.clone() };
    Matrix::new(
        Rationals,
        4,
        4,
        vec![
            a.clone(),
            z.clone(),
            z.clone(),
            x.clone(),
            z.clone(),
            mid.clone(),
            x.clone(),
            z.clone(),
            z.clone(),
            x.clone(),
            mid,
            z.clone(),
            x.clone(),
            z.clone(),
            z.clone(),
            a.clone(),
        ],
    )
}

// ---------------------------------------------------------------------------
// Display gauges: the published bases of the linear solution spaces, used
// for exact constraint regressions.

fn gauge(names: Vec<&str>, rows: &[Vec<&str>]) -> NullSpaceBasis<Rationals> {
    let f = FunctionField::named(names);
    let template = Matrix::from_exprs(f, rows).expect("static gauge parses");
    let (coords, basis) = basis_from_template(&template).expect("static gauge is linear");
    NullSpaceBasis::from_matrices(coords, basis, 2)
}

/// Basis {P, B} with Q = alpha P + beta B for the H0.2 matrix.
pub fn display_gauge_h02() -> NullSpaceBasis<Rationals> {
    gauge(
        vec!["alpha", "beta"],
        &[
            vec!["alpha", "0", "0", "beta"],
            vec!["0", "beta", "alpha", "0"],
            vec!["0", "alpha", "-beta", "0"],
            vec!["-beta", "0", "0", "alpha"],
        ],
    )
}

/// The four-dimensional space for the special H1.2 matrix.
pub fn display_gauge_h12_special() -> NullSpaceBasis<Rationals> {
    gauge(
        vec!["alpha", "beta", "gamma", "delta"],
        &[
            vec!["alpha+beta", "0", "0", "0"],
            vec!["0", "alpha-delta", "beta+delta", "0"],
            vec!["0", "alpha", "beta", "0"],
            vec!["gamma", "0", "0", "delta"],
        ],
    )
}

/// The three-dimensional space for the H1.4 matrix.
pub fn display_gauge_h14() -> NullSpaceBasis<Rationals> {
    gauge(
        vec!["alpha", "beta", "gamma"],
        &[
            vec!["alpha", "0", "0", "gamma"],
            vec!["0", "0", "beta", "0"],
            vec!["0", "beta", "0", "0"],
            vec!["gamma", "0", "0", "alpha"],
        ],
    )
}
