//! The matrix file format in its three field modes: symbolic over Q(params),
//! exact rationals via bindings, and reduction into a prime field.

use ybsys::matfile::{self, Loaded};

const FILE: &str = r#"
dim 2
params t
R
"0" "0" "0" "1"
"0" "0" "t" "0"
"0" "t" "0" "0"
"1" "0" "0" "0"
Q
"0" "0" "0" "1"
"0" "0" "t^2" "0"
"0" "t^2" "0" "0"
"1" "0" "0" "0"
"#;

fn main() {
    let parsed = matfile::parse(FILE).unwrap();
    println!("params: {:?}", parsed.params);

    match parsed.load(None).unwrap() {
        Loaded::Symbolic { field, r, .. } => {
            println!(
                "unbound params load symbolically over Q({})",
                field.vars().names().join(", ")
            );
            println!("R rendered back out:");
            print!("{}", matfile::format_matrix(&r.unwrap()));
        }
        _ => unreachable!(),
    }

    let mut bound = parsed.clone();
    bound.bindings.insert("t".to_string(), "3/4".to_string());
    match bound.load(None).unwrap() {
        Loaded::Rational { q, .. } => {
            println!("bound at t = 3/4, Q over the rationals:");
            print!("{}", matfile::format_matrix(&q.unwrap()));
        }
        _ => unreachable!(),
    }

    match bound.load(Some(5)).unwrap() {
        Loaded::Prime { field, q, .. } => {
            println!("same file reduced mod {}:", field.modulus());
            print!("{}", matfile::format_matrix(&q.unwrap()));
        }
        _ => unreachable!(),
    }
}
