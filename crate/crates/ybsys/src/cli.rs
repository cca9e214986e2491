//! Command implementations behind the `ybsys` binary. Each command returns
//! its full report text and an exit code, so the binary stays a thin
//! argument-parsing shell and the commands are testable in-process.
//!
//! Exit codes: 0 = success / solution, 1 = verified not-a-solution,
//! 2 = input or usage error.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::arith::{parse_scalar, ArithError, Field, Rationals};
use crate::catalog::{self, CatalogError};
use crate::matfile::{self, FileError, Loaded};
use crate::matrix::Matrix;
use crate::solver::{
    basis_from_template, cubic_constraints, enumerate_fp, linear_operator_for_q, null_space,
    verify_family, EnumerateError, GaugeError, NullSpaceBasis, VerifyError, DEFAULT_ENUM_BOUND,
};
use crate::symmetry::{apply_symmetry, SymmetryElement, SymmetryError};
use crate::system::{is_solution, system_residuals, SystemResiduals, YbPair};

/// Environment variable overriding the default enumeration bound.
pub const ENUM_BOUND_ENV: &str = "YBSYS_ENUM_BOUND";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    File(#[from] FileError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Gauge(#[from] GaugeError),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
    #[error(transparent)]
    Symmetry(#[from] SymmetryError),
    #[error("{0}")]
    Usage(String),
}

/// Report text plus process exit code.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<Report, CliError> {
    Ok(Report { text, code: 0 })
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        msg: e.to_string(),
    })
}

fn load(path: &Path, prime: Option<u64>) -> Result<Loaded, CliError> {
    Ok(matfile::parse(&read(path)?)?.load(prime)?)
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

// ---------------------------------------------------------------------------
// verify

pub fn cmd_verify(path: &Path, prime: Option<u64>) -> Result<Report, CliError> {
    match load(path, prime)? {
        Loaded::Rational { d, r, q } => verify_body(d, r, q),
        Loaded::Symbolic { d, r, q, .. } => verify_body(d, r, q),
        Loaded::Prime { d, r, q, .. } => verify_body(d, r, q),
    }
}

fn verify_body<F: Field>(
    d: usize,
    r: Option<Matrix<F>>,
    q: Option<Matrix<F>>,
) -> Result<Report, CliError> {
    let r = r.ok_or_else(|| usage("verify needs an R matrix in the file"))?;
    let q = q.ok_or_else(|| usage("verify needs a Q matrix in the file"))?;
    let f = r.field().clone();
    let pair = YbPair::new(r, q, d);
    let res = system_residuals(&pair);
    let mut text = String::new();
    for (label, matrix) in SystemResiduals::<F>::LABELS.iter().zip(res.as_array()) {
        match matrix.first_nonzero() {
            None => writeln!(text, "equation {label}: residual zero").unwrap(),
            Some((i, j, v)) => writeln!(
                text,
                "equation {label}: residual nonzero at ({i},{j}): {}",
                f.format(v)
            )
            .unwrap(),
        }
    }
    let det_r = pair.r.determinant();
    let det_q = pair.q.determinant();
    writeln!(
        text,
        "R invertible: {} (det = {})",
        if f.is_zero(&det_r) { "no" } else { "yes" },
        f.format(&det_r)
    )
    .unwrap();
    writeln!(
        text,
        "Q invertible: {} (det = {})",
        if f.is_zero(&det_q) { "no" } else { "yes" },
        f.format(&det_q)
    )
    .unwrap();
    let solves = res.all_zero();
    writeln!(
        text,
        "verdict: {}",
        if solves { "solution" } else { "not a solution" }
    )
    .unwrap();
    Ok(Report {
        text,
        code: if solves { 0 } else { 1 },
    })
}

// ---------------------------------------------------------------------------
// nullspace

pub fn cmd_nullspace(path: &Path, prime: Option<u64>) -> Result<Report, CliError> {
    match load(path, prime)? {
        Loaded::Rational { d, r, .. } => nullspace_body(d, r),
        Loaded::Symbolic { d, r, .. } => nullspace_body(d, r),
        Loaded::Prime { d, r, .. } => nullspace_body(d, r),
    }
}

fn nullspace_body<F: Field>(d: usize, r: Option<Matrix<F>>) -> Result<Report, CliError> {
    let r = r.ok_or_else(|| usage("nullspace needs an R matrix in the file"))?;
    let ns = null_space(&linear_operator_for_q(&r, d));
    let mut text = String::new();
    writeln!(text, "kernel dimension: {}", ns.dim()).unwrap();
    for (coord, basis) in ns.coords.iter().zip(&ns.basis) {
        writeln!(text, "basis matrix {coord}:").unwrap();
        text.push_str(&matfile::format_matrix(basis));
    }
    ok(text)
}

// ---------------------------------------------------------------------------
// constraints

const PRINT_LIMIT: usize = 24;

pub fn cmd_constraints(path: &Path, gauge: Option<&Path>, full: bool) -> Result<Report, CliError> {
    match load(path, None)? {
        Loaded::Rational { d, r, .. } => {
            let r = r.ok_or_else(|| usage("constraints needs an R matrix"))?;
            let basis = match gauge {
                Some(g) => gauge_basis(g)?.0,
                None => null_space(&linear_operator_for_q(&r, d)),
            };
            constraints_body(&r, &basis, d, full)
        }
        Loaded::Symbolic { d, field, r, .. } => {
            let r = r.ok_or_else(|| usage("constraints needs an R matrix"))?;
            let basis = match gauge {
                Some(g) => {
                    let (ns, _) = gauge_basis(g)?;
                    lift_basis(&ns, &field)?
                }
                None => null_space(&linear_operator_for_q(&r, d)),
            };
            constraints_body(&r, &basis, d, full)
        }
        Loaded::Prime { .. } => Err(usage(
            "constraints are extracted over the rationals or a symbolic field, not F_p",
        )),
    }
}

fn gauge_basis(path: &Path) -> Result<(NullSpaceBasis<Rationals>, Vec<String>), CliError> {
    let loaded = load(path, None)?;
    let Loaded::Symbolic {
        d,
        q: Some(q),
        field,
        ..
    } = loaded
    else {
        return Err(usage(
            "gauge file must declare params and a symbolic Q template",
        ));
    };
    let (coords, basis) = basis_from_template(&q)?;
    Ok((
        NullSpaceBasis::from_matrices(coords, basis, d),
        field.vars().names().to_vec(),
    ))
}

fn lift_basis<F: Field>(
    ns: &NullSpaceBasis<Rationals>,
    field: &F,
) -> Result<NullSpaceBasis<F>, CliError> {
    let basis = ns
        .basis
        .iter()
        .map(|b| b.map_into(field, |e| field.from_rational(e)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NullSpaceBasis::from_matrices(
        ns.coords.clone(),
        basis,
        ns.d,
    ))
}

fn constraints_body<F: crate::solver::SymbolicBase>(
    r: &Matrix<F>,
    basis: &NullSpaceBasis<F>,
    d: usize,
    full: bool,
) -> Result<Report, CliError> {
    let cs = cubic_constraints(r, basis, d)?;
    let mut text = String::new();
    writeln!(text, "coordinates: {}", cs.coord_names().join(", ")).unwrap();
    writeln!(text, "constraints: {}", cs.len()).unwrap();
    if cs.len() <= PRINT_LIMIT || full {
        for p in cs.polys() {
            writeln!(text, "  {p}").unwrap();
        }
    } else {
        writeln!(text, "  (more than {PRINT_LIMIT}; use --full to print all)").unwrap();
    }
    ok(text)
}

// ---------------------------------------------------------------------------
// catalog

pub fn cmd_catalog_list() -> Result<Report, CliError> {
    let mut text = String::new();
    for e in catalog::catalog_entries() {
        writeln!(text, "{}", e.name).unwrap();
        writeln!(text, "  family: {}", e.family).unwrap();
        writeln!(text, "  params: {}", e.params.join(", ")).unwrap();
        if !e.constraints.is_empty() {
            writeln!(text, "  constraints: {}", e.constraints.join(", ")).unwrap();
        }
        if !e.nondegeneracy.is_empty() {
            writeln!(text, "  nonzero: {}", e.nondegeneracy.join(", ")).unwrap();
        }
        writeln!(text, "  derivation: {}", e.derivation).unwrap();
        for n in e.notes {
            writeln!(text, "  note: {n}").unwrap();
        }
    }
    ok(text)
}

pub fn cmd_catalog_verify(
    samples: usize,
    seed: u64,
    entry: Option<&str>,
) -> Result<Report, CliError> {
    let entries: Vec<_> = match entry {
        Some(name) => vec![catalog::entry_by_name(name)
            .ok_or_else(|| usage(format!("unknown catalog entry `{name}`")))?],
        None => catalog::catalog_entries().iter().collect(),
    };
    let mut text = String::new();
    let mut all_ok = true;
    for e in entries {
        let report = verify_family(e, samples, seed)?;
        all_ok &= report.passed();
        writeln!(text, "{report}").unwrap();
    }
    writeln!(
        text,
        "overall: {}",
        if all_ok { "all verified" } else { "FAILURES" }
    )
    .unwrap();
    Ok(Report {
        text,
        code: if all_ok { 0 } else { 1 },
    })
}

pub fn cmd_catalog_export(dir: &Path, seed: u64) -> Result<Report, CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io {
        path: dir.display().to_string(),
        msg: e.to_string(),
    })?;
    let mut text = String::new();
    for e in catalog::catalog_entries() {
        let contents = matfile::render_catalog_entry(e, seed)?;
        let filename = format!("{}.ybm", e.name.replace('/', "_"));
        let path = dir.join(&filename);
        std::fs::write(&path, contents).map_err(|err| CliError::Io {
            path: path.display().to_string(),
            msg: err.to_string(),
        })?;
        writeln!(text, "wrote {}", path.display()).unwrap();
    }
    ok(text)
}

// ---------------------------------------------------------------------------
// enumerate

pub fn cmd_enumerate(path: &Path, prime: u64, bound: Option<u64>) -> Result<Report, CliError> {
    let bound = bound
        .or_else(|| {
            std::env::var(ENUM_BOUND_ENV)
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(DEFAULT_ENUM_BOUND);
    let Loaded::Prime { d, field, r, .. } = load(path, Some(prime))? else {
        unreachable!("prime loads produce prime matrices");
    };
    let r = r.ok_or_else(|| usage("enumerate needs an R matrix"))?;
    let en = enumerate_fp(&r, d, bound)?;
    let mut text = String::new();
    writeln!(text, "prime: {}", field.modulus()).unwrap();
    writeln!(text, "kernel dimension: {}", en.basis.dim()).unwrap();
    writeln!(text, "points scanned: {}", en.points_scanned).unwrap();
    if !en.r_solves_ybe {
        writeln!(
            text,
            "R does not solve its Yang-Baxter equation; the system has no solutions"
        )
        .unwrap();
    }
    writeln!(
        text,
        "solutions: {} (invertible: {})",
        en.solutions.len(),
        en.invertible_count()
    )
    .unwrap();
    for s in &en.solutions {
        let coords: Vec<String> = s.coords.iter().map(|c| c.to_string()).collect();
        writeln!(
            text,
            "coords ({}){}",
            coords.join(", "),
            if s.invertible { " invertible" } else { "" }
        )
        .unwrap();
        text.push_str(&matfile::format_matrix(&s.matrix));
    }
    ok(text)
}

// ---------------------------------------------------------------------------
// orbit

pub struct OrbitArgs {
    pub s: Option<String>,
    pub lambda: Option<String>,
    pub kappa: Option<String>,
    pub flip: bool,
    pub prime: Option<u64>,
}

pub fn cmd_orbit(path: &Path, args: &OrbitArgs) -> Result<Report, CliError> {
    match load(path, args.prime)? {
        Loaded::Rational { d, r, q } => orbit_body(d, r, q, args, &[]),
        Loaded::Symbolic { d, field, r, q } => {
            let params = field.vars().names().to_vec();
            orbit_body(d, r, q, args, &params)
        }
        Loaded::Prime { d, r, q, .. } => orbit_body(d, r, q, args, &[]),
    }
}

fn orbit_body<F: Field>(
    d: usize,
    r: Option<Matrix<F>>,
    q: Option<Matrix<F>>,
    args: &OrbitArgs,
    params: &[String],
) -> Result<Report, CliError> {
    let r = r.ok_or_else(|| usage("orbit needs an R matrix in the file"))?;
    let q = q.ok_or_else(|| usage("orbit needs a Q matrix in the file"))?;
    let f = r.field().clone();
    let pair = YbPair::new(r, q, d);

    let s = match &args.s {
        None => Matrix::identity(f.clone(), d),
        Some(spec) => {
            let cells: Vec<&str> = spec.split(',').map(str::trim).collect();
            if cells.len() != d * d {
                return Err(usage(format!(
                    "--s expects {} comma-separated entries",
                    d * d
                )));
            }
            let entries = cells
                .iter()
                .map(|c| parse_scalar(&f, c))
                .collect::<Result<Vec<_>, _>>()?;
            Matrix::new(f.clone(), d, d, entries)
        }
    };
    let lambda = match &args.lambda {
        None => f.one(),
        Some(e) => parse_scalar(&f, e)?,
    };
    let kappa = match &args.kappa {
        None => f.one(),
        Some(e) => parse_scalar(&f, e)?,
    };
    let g = SymmetryElement {
        s,
        lambda,
        kappa,
        flip: args.flip,
    };
    let moved = apply_symmetry(&pair, &g)?;
    let report = is_solution(&moved);
    let mut text =
        matfile::render_pair(d, params, &BTreeMap::new(), Some(&moved.r), Some(&moved.q));
    // as a comment so the whole report stays a valid matrix file
    writeln!(
        text,
        "# transformed pair verifies: {}",
        if report.solves { "yes" } else { "no" }
    )
    .unwrap();
    Ok(Report {
        text,
        code: if report.solves { 0 } else { 1 },
    })
}
