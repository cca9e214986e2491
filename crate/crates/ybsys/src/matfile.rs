//! The line-oriented matrix file format used by the command-line front end.
//!
//! ```text
//! # free-form comments
//! dim 2
//! params t r
//! bind t 3/4          # optional; if present, every param must be bound
//! R
//! "1" "0" "0" "0"
//! "0" "1" "0" "0"
//! "0" "0" "1" "0"
//! "1" "0" "0" "-1"
//! Q
//! "1" "0"  "0" "0"
//! "0" "1"  "0" "0"
//! "0" "1-t" "t" "0"
//! "r" "0"  "0" "-t"
//! ```
//!
//! Entries are quoted expression strings in the scalar grammar. A file with
//! unbound params loads symbolically over Q(params); bound params substitute
//! to exact rationals; `--prime p` reduces everything into F_p.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::arith::{
    parse_scalar, ArithError, Field, FunctionField, PrimeField, Rational, Rationals,
};
use crate::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("{0}")]
    Validation(String),
    #[error("entry ({row},{col}) of {section}: {source}")]
    Entry {
        section: char,
        row: usize,
        col: usize,
        source: ArithError,
    },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Parsed but not yet interpreted matrix file.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct MatrixFile {
    pub dim: usize,
    pub params: Vec<String>,
    pub bindings: BTreeMap<String, String>,
    pub r: Option<Vec<Vec<String>>>,
    pub q: Option<Vec<Vec<String>>>,
}

fn syntax(line: usize, msg: impl Into<String>) -> FileError {
    FileError::Syntax {
        line,
        msg: msg.into(),
    }
}

/// Split a line into whitespace-separated tokens, honoring double quotes.
fn tokens(line: &str, lineno: usize) -> Result<Vec<String>, FileError> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '#' {
            break;
        } else if c == '"' {
            chars.next();
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(ch) => tok.push(ch),
                    None => return Err(syntax(lineno, "unterminated quote")),
                }
            }
            out.push(tok);
        } else {
            let mut tok = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() || ch == '#' || ch == '"' {
                    break;
                }
                tok.push(ch);
                chars.next();
            }
            out.push(tok);
        }
    }
    Ok(out)
}

pub fn parse(text: &str) -> Result<MatrixFile, FileError> {
    let mut file = MatrixFile {
        dim: 2,
        ..Default::default()
    };
    let mut lines = text.lines().enumerate().peekable();

    while let Some((idx, raw)) = lines.next() {
        let lineno = idx + 1;
        let toks = tokens(raw, lineno)?;
        if toks.is_empty() {
            continue;
        }
        match toks[0].as_str() {
            "dim" => {
                if toks.len() != 2 {
                    return Err(syntax(lineno, "expected `dim N`"));
                }
                let d: usize = toks[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "dimension is not a positive integer"))?;
                if d == 0 || d > 4 {
                    return Err(syntax(lineno, "dimension must be between 1 and 4"));
                }
                if file.r.is_some() || file.q.is_some() {
                    return Err(syntax(lineno, "dim must come before the matrices"));
                }
                file.dim = d;
            }
            "params" => {
                file.params = toks[1..].to_vec();
                if file.params.is_empty() {
                    return Err(syntax(lineno, "params line lists no names"));
                }
            }
            "bind" => {
                if toks.len() != 3 {
                    return Err(syntax(lineno, "expected `bind NAME EXPR`"));
                }
                file.bindings.insert(toks[1].clone(), toks[2].clone());
            }
            "R" | "Q" => {
                let section = toks[0].chars().next().unwrap();
                if toks.len() != 1 {
                    return Err(syntax(lineno, "matrix header takes no arguments"));
                }
                let n = file.dim * file.dim;
                let mut grid = Vec::with_capacity(n);
                for _ in 0..n {
                    let (idx2, raw2) = lines
                        .next()
                        .ok_or_else(|| syntax(lineno, format!("{section}: missing rows")))?;
                    let row = tokens(raw2, idx2 + 1)?;
                    if row.len() != n {
                        return Err(syntax(
                            idx2 + 1,
                            format!("expected {n} entries, found {}", row.len()),
                        ));
                    }
                    grid.push(row);
                }
                match section {
                    'R' => file.r = Some(grid),
                    _ => file.q = Some(grid),
                }
            }
            other => return Err(syntax(lineno, format!("unknown directive `{other}`"))),
        }
    }

    if !file.bindings.is_empty() {
        for name in file.bindings.keys() {
            if !file.params.contains(name) {
                return Err(FileError::Validation(format!(
                    "binding for `{name}` which is not a declared param"
                )));
            }
        }
        for p in &file.params {
            if !file.bindings.contains_key(p) {
                return Err(FileError::Validation(format!(
                    "param `{p}` is unbound while other bindings are present"
                )));
            }
        }
    }
    Ok(file)
}

/// A matrix file interpreted in its field.
pub enum Loaded {
    Rational {
        d: usize,
        r: Option<Matrix<Rationals>>,
        q: Option<Matrix<Rationals>>,
    },
    Symbolic {
        d: usize,
        field: FunctionField,
        r: Option<Matrix<FunctionField>>,
        q: Option<Matrix<FunctionField>>,
    },
    Prime {
        d: usize,
        field: PrimeField,
        r: Option<Matrix<PrimeField>>,
        q: Option<Matrix<PrimeField>>,
    },
}

impl MatrixFile {
    fn rational_bindings(&self) -> Result<BTreeMap<String, Rational>, FileError> {
        let mut out = BTreeMap::new();
        for (name, expr) in &self.bindings {
            let v = parse_scalar(&Rationals, expr)?;
            out.insert(name.clone(), v);
        }
        Ok(out)
    }

    fn grid<F: Field>(
        &self,
        field: &F,
        section: char,
        grid: &[Vec<String>],
    ) -> Result<Matrix<F>, FileError> {
        let n = self.dim * self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in grid.iter().enumerate() {
            for (j, s) in row.iter().enumerate() {
                entries.push(parse_scalar(field, s).map_err(|source| FileError::Entry {
                    section,
                    row: i,
                    col: j,
                    source,
                })?);
            }
        }
        Ok(Matrix::new(field.clone(), n, n, entries))
    }

    /// Interpret the file: symbolic over Q(params) when params are unbound,
    /// exact rationals when they are bound or absent, F_p when a prime is
    /// supplied.
    pub fn load(&self, prime: Option<u64>) -> Result<Loaded, FileError> {
        let d = self.dim;
        if let Some(p) = prime {
            let field = PrimeField::new(p)?;
            if !self.params.is_empty() && self.bindings.is_empty() {
                return Err(FileError::Validation(
                    "prime-field mode needs bound params (or none)".into(),
                ));
            }
            let (r, q) = if self.params.is_empty() {
                let r = self
                    .r
                    .as_ref()
                    .map(|g| self.grid(&field, 'R', g))
                    .transpose()?;
                let q = self
                    .q
                    .as_ref()
                    .map(|g| self.grid(&field, 'Q', g))
                    .transpose()?;
                (r, q)
            } else {
                // evaluate over Q first, then reduce mod p
                let (rq_r, rq_q) = self.rational_matrices()?;
                let reduce = |m: Matrix<Rationals>| -> Result<Matrix<PrimeField>, FileError> {
                    Ok(m.map_into(&field, |e| field.from_rational(e))?)
                };
                (rq_r.map(reduce).transpose()?, rq_q.map(reduce).transpose()?)
            };
            return Ok(Loaded::Prime { d, field, r, q });
        }

        if !self.params.is_empty() && self.bindings.is_empty() {
            let field = FunctionField::named(self.params.clone());
            let r = self
                .r
                .as_ref()
                .map(|g| self.grid(&field, 'R', g))
                .transpose()?;
            let q = self
                .q
                .as_ref()
                .map(|g| self.grid(&field, 'Q', g))
                .transpose()?;
            return Ok(Loaded::Symbolic { d, field, r, q });
        }

        let (r, q) = self.rational_matrices()?;
        Ok(Loaded::Rational { d, r, q })
    }

    fn rational_matrices(&self) -> Result<RationalPair, FileError> {
        if self.params.is_empty() {
            let r = self
                .r
                .as_ref()
                .map(|g| self.grid(&Rationals, 'R', g))
                .transpose()?;
            let q = self
                .q
                .as_ref()
                .map(|g| self.grid(&Rationals, 'Q', g))
                .transpose()?;
            return Ok((r, q));
        }
        let field = FunctionField::named(self.params.clone());
        let bind = self.rational_bindings()?;
        let subst = |section: char, g: &Vec<Vec<String>>| -> Result<Matrix<Rationals>, FileError> {
            let sym = self.grid(&field, section, g)?;
            Ok(sym.map_into(&Rationals, |e| e.substitute(&bind))?)
        };
        let r = self.r.as_ref().map(|g| subst('R', g)).transpose()?;
        let q = self.q.as_ref().map(|g| subst('Q', g)).transpose()?;
        Ok((r, q))
    }
}

type RationalPair = (Option<Matrix<Rationals>>, Option<Matrix<Rationals>>);

/// Render a matrix as file rows of quoted entries.
pub fn format_matrix<F: Field>(m: &Matrix<F>) -> String {
    let f = m.field();
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = (0..m.cols())
            .map(|j| format!("\"{}\"", f.format(m.get(i, j))))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Render a pair file (dim, optional params, R, Q sections).
pub fn render_pair<F: Field>(
    d: usize,
    params: &[String],
    bindings: &BTreeMap<String, String>,
    r: Option<&Matrix<F>>,
    q: Option<&Matrix<F>>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("dim {d}\n"));
    if !params.is_empty() {
        out.push_str(&format!("params {}\n", params.join(" ")));
    }
    for (name, expr) in bindings {
        out.push_str(&format!("bind {name} \"{expr}\"\n"));
    }
    if let Some(r) = r {
        out.push_str("R\n");
        out.push_str(&format_matrix(r));
    }
    if let Some(q) = q {
        out.push_str("Q\n");
        out.push_str(&format_matrix(q));
    }
    out
}

/// Render a catalog entry. Unconstrained families export symbolically;
/// constrained ones export with a concrete seeded binding so the file
/// verifies as-is.
pub fn render_catalog_entry(
    entry: &crate::catalog::CatalogEntry,
    seed: u64,
) -> Result<String, crate::catalog::CatalogError> {
    let mut out = String::new();
    out.push_str(&format!("# catalog entry {}\n", entry.name));
    out.push_str(&format!("# family: {}\n", entry.family));
    for c in entry.constraints {
        out.push_str(&format!("# constraint: {c} = 0\n"));
    }
    for n in entry.nondegeneracy {
        out.push_str(&format!("# nonzero: {n}\n"));
    }
    out.push_str("dim 2\n");
    out.push_str(&format!("params {}\n", entry.params.join(" ")));
    if !entry.constraints.is_empty() {
        let (_, bind) = entry.instantiate(seed)?;
        for (name, value) in &bind {
            out.push_str(&format!("bind {name} \"{value}\"\n"));
        }
    }
    let push_grid = |out: &mut String, header: &str, grid: &[[&str; 4]; 4]| {
        out.push_str(header);
        out.push('\n');
        for row in grid {
            let cells: Vec<String> = row.iter().map(|s| format!("\"{s}\"")).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
    };
    push_grid(&mut out, "R", &entry.r_template);
    push_grid(&mut out, "Q", &entry.q_template);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    const SAMPLE: &str = r#"
# a pair with one bound parameter
dim 2
params t
bind t "3/4"
R
"0" "0" "0" "1"
"0" "0" "t" "0"
"0" "t" "0" "0"
"1" "0" "0" "0"
Q
"0" "0" "0" "1"
"0" "0" "t" "0"
"0" "t" "0" "0"
"1" "0" "0" "0"
"#;

    #[test]
    fn parse_and_load_bound_file() {
        let mf = parse(SAMPLE).unwrap();
        assert_eq!(mf.dim, 2);
        assert_eq!(mf.params, vec!["t"]);
        match mf.load(None).unwrap() {
            Loaded::Rational {
                r: Some(r),
                q: Some(q),
                ..
            } => {
                assert_eq!(*r.get(1, 2), ratio(3, 4));
                assert_eq!(q, r);
            }
            _ => panic!("expected a rational load"),
        }
    }

    #[test]
    fn load_symbolic_when_unbound() {
        let text = SAMPLE.replace("bind t \"3/4\"\n", "");
        let mf = parse(&text).unwrap();
        match mf.load(None).unwrap() {
            Loaded::Symbolic {
                field, r: Some(r), ..
            } => {
                assert_eq!(field.vars().names(), ["t"]);
                assert_eq!(*r.get(1, 2), field.var("t").unwrap());
            }
            _ => panic!("expected a symbolic load"),
        }
    }

    #[test]
    fn load_mod_p_reduces_bindings() {
        let mf = parse(SAMPLE).unwrap();
        match mf.load(Some(5)).unwrap() {
            Loaded::Prime {
                field, r: Some(r), ..
            } => {
                // 3/4 mod 5 = 3 * 4 = 12 = 2
                assert_eq!(field.modulus(), 5);
                assert_eq!(*r.get(1, 2), 2);
            }
            _ => panic!("expected a prime-field load"),
        }
    }

    #[test]
    fn binding_and_param_mismatches_are_rejected() {
        let text = SAMPLE.replace("params t", "params t u");
        assert!(matches!(parse(&text), Err(FileError::Validation(_))));
        let text = SAMPLE.replace("bind t \"3/4\"", "bind v \"1\"");
        assert!(matches!(parse(&text), Err(FileError::Validation(_))));
    }

    #[test]
    fn malformed_entries_and_rows() {
        let bad = SAMPLE.replace("\"t\" \"0\"\n\"0\" \"t\"", "\"t\"\n\"0\" \"t\"");
        assert!(matches!(parse(&bad), Err(FileError::Syntax { .. })));
        let bad_expr = SAMPLE.replace("\"3/4\"", "\"1+*t\"");
        let mf = parse(&bad_expr).unwrap();
        assert!(mf.load(None).is_err());
    }

    #[test]
    fn dim_after_a_matrix_is_rejected() {
        let text = SAMPLE.to_owned() + "dim 3\n";
        assert!(matches!(parse(&text), Err(FileError::Syntax { .. })));
    }

    #[test]
    fn round_trip_through_render() {
        let mf = parse(SAMPLE).unwrap();
        let Loaded::Rational {
            r: Some(r),
            q: Some(q),
            ..
        } = mf.load(None).unwrap()
        else {
            panic!()
        };
        let text = render_pair(2, &[], &BTreeMap::new(), Some(&r), Some(&q));
        let mf2 = parse(&text).unwrap();
        let Loaded::Rational {
            r: Some(r2),
            q: Some(q2),
            ..
        } = mf2.load(None).unwrap()
        else {
            panic!()
        };
        assert_eq!(r, r2);
        assert_eq!(q, q2);
        assert_eq!(*r2.get(1, 2), ratio(3, 4));
        assert_eq!(*q2.get(0, 3), rat(1));
    }
}
