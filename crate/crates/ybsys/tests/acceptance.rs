//! Acceptance suite: one test per headline claim, each printing a PASS line
//! with its measurements. Every assertion is exact; there are no numeric
//! tolerances anywhere in this file.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use ybsys::arith::{rat, ratio, Field, FunctionField, PrimeField, Rational, Rationals};
use ybsys::catalog;
use ybsys::matrix::Matrix;
use ybsys::solver::{
    cubic_constraints, enumerate_fp, linear_operator_for_q, null_space, verify_family,
    NullSpaceBasis, DEFAULT_ENUM_BOUND,
};
use ybsys::symmetry::{apply_symmetry, fingerprint, restricted_equivalence, SymmetryElement};
use ybsys::system::{extended_residuals, qbar, system_residuals, YbPair};
use ybsys::tensor::{kron, permutation_p};

const SEED: u64 = 20240811;

fn digit(rng: &mut ChaCha8Rng) -> i64 {
    loop {
        let v = (rng.next_u64() % 19) as i64 - 9;
        if v != 0 {
            return v;
        }
    }
}

fn small_nonzero(rng: &mut ChaCha8Rng) -> Rational {
    ratio(digit(rng), digit(rng))
}

fn mod_p(m: &Matrix<Rationals>, f: &PrimeField) -> Matrix<PrimeField> {
    m.map_into(f, |e| f.from_rational(e)).unwrap()
}

// ---------------------------------------------------------------------------

#[test]
fn acceptance_01_catalog_families_verify() {
    let start = Instant::now();
    let mut symbolic_branches = 0;
    for entry in catalog::catalog_entries() {
        let report = verify_family(entry, 20, SEED).unwrap();
        assert!(report.passed(), "family {} failed:\n{report}", entry.name);
        if let ybsys::solver::SymbolicOutcome::Verified { branches } = report.symbolic {
            symbolic_branches += branches;
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "catalog verification took {elapsed:?}, over the 30 s budget"
    );
    println!(
        "acceptance criterion 1 (catalog verification, 13 families x 20 seeds + {} symbolic branches in {:.1?}): PASS",
        symbolic_branches, elapsed
    );
}

#[test]
fn acceptance_02_kernel_dimensions() {
    let dim = |r: &Matrix<Rationals>| null_space(&linear_operator_for_q(r, 2)).dim();
    assert_eq!(dim(&catalog::r_h02()), 2);
    assert_eq!(dim(&catalog::r_h12_special()), 4);
    let (_, r14) = catalog::r_h14_symbolic();
    assert_eq!(null_space(&linear_operator_for_q(&r14, 2)).dim(), 3);
    let (_, r23) = catalog::r_h23_symbolic();
    assert_eq!(null_space(&linear_operator_for_q(&r23, 2)).dim(), 6);
    assert_eq!(dim(&Matrix::identity(Rationals, 4)), 16);
    println!("acceptance criterion 2 (kernel dimensions 2/4/3/6/16): PASS");
}

#[test]
fn acceptance_03_display_gauge_constraints() {
    // the published two-coordinate gauge gives the single cubic
    let cs = cubic_constraints(&catalog::r_h02(), &catalog::display_gauge_h02(), 2).unwrap();
    let expected = cs.parse_polys(&["beta*(beta^2-alpha^2)"]).unwrap();
    assert!(
        cs.equivalent_to(&expected),
        "H0.2 constraints {:?}",
        cs.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );

    let cs = cubic_constraints(
        &catalog::r_h12_special(),
        &catalog::display_gauge_h12_special(),
        2,
    )
    .unwrap();
    let expected = cs
        .parse_polys(&[
            "alpha*gamma*(beta+delta)",
            "alpha*beta*(beta+delta)",
            "alpha*(alpha-delta)*(beta+delta)",
        ])
        .unwrap();
    assert!(
        cs.equivalent_to(&expected),
        "H1.2-special constraints {:?}",
        cs.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );

    // H1.4 keeps its parameter symbolic; the constraints must not involve it
    let (f14, r14) = catalog::r_h14_symbolic();
    let gauge = catalog::display_gauge_h14();
    let lifted = NullSpaceBasis::from_matrices(
        gauge.coords.clone(),
        gauge
            .basis
            .iter()
            .map(|b| b.map_into(&f14, |e| f14.from_rational(e)).unwrap())
            .collect(),
        2,
    );
    let cs = cubic_constraints(&r14, &lifted, 2).unwrap();
    let expected = cs
        .parse_polys(&["alpha^2*gamma", "alpha*(gamma^2+alpha*beta-beta^2)"])
        .unwrap();
    assert!(
        cs.equivalent_to(&expected),
        "H1.4 constraints {:?}",
        cs.polys().iter().map(|p| p.to_string()).collect::<Vec<_>>()
    );
    println!("acceptance criterion 3 (display-gauge constraint regression): PASS");
}

#[test]
fn acceptance_04_generic_case_mod_p() {
    for p in [5u64, 7] {
        let f = PrimeField::new(p).unwrap();
        let r = mod_p(&catalog::r_h02(), &f);
        let en = enumerate_fp(&r, 2, DEFAULT_ENUM_BOUND).unwrap();

        // independent oracle: sweep the whole coordinate grid and test the
        // full four-equation residuals directly
        let basis = null_space(&linear_operator_for_q(&r, 2));
        assert_eq!(basis.dim(), 2);
        let mut oracle_solutions = BTreeSet::new();
        let mut oracle_invertible = BTreeSet::new();
        for c1 in 0..p {
            for c2 in 0..p {
                let q = basis.combine(&[c1, c2]);
                let pair = YbPair::new(r.clone(), q.clone(), 2);
                if system_residuals(&pair).all_zero() {
                    oracle_solutions.insert(q.vec());
                    if !f.is_zero(&q.determinant()) {
                        oracle_invertible.insert(q.vec());
                    }
                }
            }
        }
        let enumerated: BTreeSet<_> = en.solutions.iter().map(|s| s.matrix.vec()).collect();
        assert_eq!(enumerated, oracle_solutions, "oracle mismatch mod {p}");
        assert_eq!(en.invertible_count(), oracle_invertible.len());

        // the invertible solutions are exactly the three scalar lines
        let pm = permutation_p(&f, 2);
        let pr_inv_p = pm.mul(&r.inverse().unwrap()).mul(&pm);
        let mut lines = BTreeSet::new();
        for alpha in 1..p {
            for base in [&pm, &r, &pr_inv_p] {
                lines.insert(base.scale(&alpha).vec());
            }
        }
        let inv_enumerated: BTreeSet<_> = en
            .solutions
            .iter()
            .filter(|s| s.invertible)
            .map(|s| s.matrix.vec())
            .collect();
        assert_eq!(inv_enumerated, lines, "three-line structure fails mod {p}");
        assert_eq!(inv_enumerated.len(), 3 * (p as usize - 1));
    }
    println!("acceptance criterion 4 (generic case over F_5 and F_7, three lines, oracle-equal counts): PASS");
}

#[test]
fn acceptance_05_exceptional_case_mod_p() {
    // the antidiagonal family at its t = 1 member, over F_3 and F_5
    let mut failures = Vec::new();
    for p in [3u64, 5] {
        let f = PrimeField::new(p).unwrap();
        let r = mod_p(&catalog::r_h14(&rat(1)), &f);
        let en = enumerate_fp(&r, 2, DEFAULT_ENUM_BOUND).unwrap();
        let solutions: BTreeSet<_> = en.solutions.iter().map(|s| s.matrix.vec()).collect();

        // family members reduced mod p, plus the always-present companions
        let antidiag = |a: u64| -> Matrix<PrimeField> {
            let mut m = Matrix::zero(f, 4, 4);
            m.set(0, 3, 1);
            m.set(1, 2, a);
            m.set(2, 1, a);
            m.set(3, 0, 1);
            m
        };
        let pm = permutation_p(&f, 2);
        let pr_inv_p = pm.mul(&r.inverse().unwrap()).mul(&pm);
        let mut family: Vec<Matrix<PrimeField>> = (0..p).map(antidiag).collect();
        family.extend([pm.clone(), r.clone(), pr_inv_p.clone()]);
        for m in &family {
            assert!(
                solutions.contains(&m.vec()),
                "a printed family member mod {p} is missing from the enumeration"
            );
        }

        // completeness as literally stated: every enumerated invertible
        // solution inside the scalar sweep of the printed families
        let mut union = BTreeSet::new();
        for lambda in 1..p {
            for m in &family {
                union.insert(m.scale(&lambda).vec());
            }
        }
        let escapees: Vec<_> = en
            .solutions
            .iter()
            .filter(|s| s.invertible && !union.contains(&s.matrix.vec()))
            .collect();
        if !escapees.is_empty() {
            failures.push(format!(
                "mod {p}: {} of {} invertible solutions lie outside the printed families \
                 (kernel dimension {} instead of 3; e.g. Q = identity solves at t = 1)",
                escapees.len(),
                en.invertible_count(),
                en.basis.dim()
            ));
        }
    }
    assert!(
        failures.is_empty(),
        "acceptance criterion 5 (exceptional-case exhaustiveness at t=1): FAIL\n{}\n\
         the t = 1 specialization is degenerate: the printed list is exhaustive only up to\n\
         transformations unavailable at this member (general S conjugations that leave the\n\
         degenerate fiber, transposition for symmetric R, and rescalings blocked by the\n\
         square classes of F_p). tests/exhaustiveness.rs shows the same check passing at\n\
         non-degenerate specializations; the full analysis is in the project notes.",
        failures.join("\n")
    );
    println!("acceptance criterion 5 (exceptional-case exhaustiveness at t=1): PASS");
}

#[test]
fn acceptance_06_diagonal_lemma_suite() {
    // case 1: scalar R with an arbitrary Yang-Baxter solution Q
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x11);
    let entries = catalog::catalog_entries();
    for i in 0..20u64 {
        let entry = &entries[(i as usize) % entries.len()];
        let (pair, _) = entry.instantiate(SEED + i).unwrap();
        let lambda = small_nonzero(&mut rng);
        let scalar_pair = catalog::scalar_r_pair(pair.q.clone(), &lambda);
        assert!(
            system_residuals(&scalar_pair).all_zero(),
            "scalar-R case fails for Q of {}",
            entry.name
        );
    }

    // case 2: sign-diagonal R with each eight-vertex family
    for name in [
        "signdiag/Q1",
        "signdiag/Q2",
        "signdiag/Q3",
        "signdiag/Q4",
        "signdiag/Q5",
        "signdiag/Q6",
    ] {
        let entry = catalog::entry_by_name(name).unwrap();
        let report = verify_family(entry, 20, SEED ^ 0x22).unwrap();
        assert!(report.passed(), "{report}");
    }

    // case 3: general diagonal R with the six-vertex families
    for name in ["diag/six-vertex-q", "diag/six-vertex-qt", "diag/diag-Q"] {
        let entry = catalog::entry_by_name(name).unwrap();
        let report = verify_family(entry, 20, SEED ^ 0x33).unwrap();
        assert!(report.passed(), "{report}");
    }
    println!("acceptance criterion 6 (diagonal-R lemma, all three cases, 20 seeds each): PASS");
}

#[test]
fn acceptance_07_symmetry_invariance_and_fingerprints() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x77);
    let mut elements = Vec::with_capacity(100);
    while elements.len() < 100 {
        let s = Matrix::new(
            Rationals,
            2,
            2,
            vec![
                rat(digit(&mut rng)),
                rat(digit(&mut rng)),
                rat(digit(&mut rng)),
                rat(digit(&mut rng)),
            ],
        );
        use num_traits::Zero;
        if s.determinant().is_zero() {
            continue;
        }
        elements.push(SymmetryElement {
            s,
            lambda: small_nonzero(&mut rng),
            kappa: small_nonzero(&mut rng),
            flip: rng.next_u64() & 1 == 1,
        });
    }
    assert!(elements.iter().any(|g| g.flip) && elements.iter().any(|g| !g.flip));

    for entry in catalog::catalog_entries() {
        let (pair, _) = entry.instantiate(SEED ^ 0x55).unwrap();
        let base_fp = fingerprint(&pair).unwrap();
        for g in &elements {
            let moved = apply_symmetry(&pair, g).unwrap();
            assert!(
                system_residuals(&moved).all_zero(),
                "symmetry breaks the solution property for {}",
                entry.name
            );
            assert_eq!(
                fingerprint(&moved).unwrap(),
                base_fp,
                "fingerprint moved for {}",
                entry.name
            );
        }
    }
    println!("acceptance criterion 7 (100 random symmetries x 13 instantiations, invariant residuals and fingerprints): PASS");
}

#[test]
fn acceptance_08_extended_system_implication() {
    let mut checked = 0;
    for entry in catalog::catalog_entries() {
        for i in 0..3u64 {
            let (pair, _) = entry.instantiate(SEED + 1000 + i).unwrap();
            assert!(system_residuals(&pair).all_zero());
            let qb = qbar(&pair).unwrap();
            for res in extended_residuals(&pair.q, &qb, &pair.r, 2) {
                assert!(
                    res.is_zero(),
                    "extended system fails for {} seed {}",
                    entry.name,
                    SEED + 1000 + i
                );
            }
            checked += 1;

            // the always-present companions of this R, when R solves the YBE
            if let Ok(triples) = catalog::builtin_triples(&pair.r) {
                for t in triples {
                    assert!(system_residuals(&t).all_zero());
                    let qb = qbar(&t).unwrap();
                    for res in extended_residuals(&t.q, &qb, &t.r, 2) {
                        assert!(res.is_zero(), "extended system fails for a companion pair");
                    }
                    checked += 1;
                }
            }
        }
    }
    println!(
        "acceptance criterion 8 (extended-system implication over {checked} verified pairs): PASS"
    );
}

#[test]
fn acceptance_09_restricted_equivalence_negative_control() {
    // sign-diagonal R shared by both pairs
    let r = Matrix::from_fn(Rationals, 4, 4, |i, j| {
        if i != j {
            rat(0)
        } else if i == 1 || i == 2 {
            rat(-1)
        } else {
            rat(1)
        }
    });
    // the exceptional eight-vertex instance with a = 1, x = 1
    let special = catalog::eight_vertex_xa(&rat(1), &rat(1), true);
    let target = YbPair::new(r.clone(), special, 2);
    assert!(system_residuals(&target).all_zero());

    // standard eight-vertex forms over the same R
    let q1 = {
        let e: [[i64; 4]; 4] = [[1, 0, 0, 1], [0, 1, 1, 0], [0, 1, -1, 0], [-1, 0, 0, 1]];
        Matrix::from_fn(Rationals, 4, 4, |i, j| rat(e[i][j]))
    };
    let q2 = {
        // the s^2 = 1 + t^2 family at m = 2: t = 3/4, s = 5/4
        let (t, s) = catalog::pythagorean_pair(&rat(2));
        let mut m = Matrix::zero(Rationals, 4, 4);
        m.set(0, 0, rat(1) + t.clone());
        m.set(0, 3, rat(1));
        m.set(1, 1, s.clone());
        m.set(1, 2, rat(1));
        m.set(2, 1, rat(1));
        m.set(2, 2, s);
        m.set(3, 0, rat(1));
        m.set(3, 3, rat(1) - t);
        m
    };
    for (label, q_std) in [("plain eight-vertex", q1), ("pythagorean eight-vertex", q2)] {
        let source = YbPair::new(r.clone(), q_std, 2);
        assert!(system_residuals(&source).all_zero());
        assert!(
            restricted_equivalence(&source, &target).is_none(),
            "unexpected (anti)diagonal witness from the {label} form"
        );
        assert!(
            restricted_equivalence(&target, &source).is_none(),
            "unexpected reverse witness to the {label} form"
        );
    }
    println!(
        "acceptance criterion 9 (restricted-equivalence negative control, none-found proven): PASS"
    );
}

#[test]
fn acceptance_10_randomized_property_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0xaa);
    let rand2 = |rng: &mut ChaCha8Rng| {
        Matrix::from_fn(Rationals, 2, 2, |_, _| ratio(digit(rng), digit(rng)))
    };

    // mixed-product law over Q and over F_p
    for _ in 0..100 {
        let (a, b, c, d) = (
            rand2(&mut rng),
            rand2(&mut rng),
            rand2(&mut rng),
            rand2(&mut rng),
        );
        assert_eq!(
            kron(&a, &b).mul(&kron(&c, &d)),
            kron(&a.mul(&c), &b.mul(&d))
        );
    }
    let f5 = PrimeField::new(5).unwrap();
    for _ in 0..100 {
        let randp = |rng: &mut ChaCha8Rng| Matrix::from_fn(f5, 2, 2, |_, _| rng.next_u64() % 5);
        let (a, b, c, d) = (
            randp(&mut rng),
            randp(&mut rng),
            randp(&mut rng),
            randp(&mut rng),
        );
        assert_eq!(
            kron(&a, &b).mul(&kron(&c, &d)),
            kron(&a.mul(&c), &b.mul(&d))
        );
    }

    // embed respects multiplication on every leg pair
    for _ in 0..100 {
        let m = Matrix::from_fn(Rationals, 4, 4, |_, _| rat(digit(&mut rng)));
        let n = Matrix::from_fn(Rationals, 4, 4, |_, _| rat(digit(&mut rng)));
        for legs in ybsys::tensor::LegPair::ALL {
            assert_eq!(
                ybsys::tensor::embed(&m.mul(&n), legs, 2),
                ybsys::tensor::embed(&m, legs, 2).mul(&ybsys::tensor::embed(&n, legs, 2))
            );
        }
    }

    // the flip is an involution in every dimension we support
    for i in 0..100 {
        let d = 1 + (i % 4);
        let p = permutation_p(&Rationals, d);
        assert_eq!(p.mul(&p), Matrix::identity(Rationals, d * d));
    }

    // inverse round trip on random invertible matrices
    let mut done = 0;
    while done < 100 {
        let m = Matrix::from_fn(Rationals, 4, 4, |_, _| {
            ratio(digit(&mut rng), digit(&mut rng))
        });
        use num_traits::Zero;
        if m.determinant().is_zero() {
            continue;
        }
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(Rationals, 4));
        assert_eq!(inv.mul(&m), Matrix::identity(Rationals, 4));
        done += 1;
    }
    println!("acceptance criterion 10 (mixed-product, embed multiplicativity, flip involution, inverse round-trip; 100+ exact cases each): PASS");
}

// ---------------------------------------------------------------------------

/// The trivial and catalog solutions expressed in kernel coordinates satisfy
/// the extracted cubic constraints (checked at exact instantiations).
#[test]
fn trivial_solutions_satisfy_tool_gauge_constraints() {
    use num_traits::Zero;
    let diag = |x: i64, y: i64, z: i64| {
        Matrix::from_fn(Rationals, 4, 4, |i, j| {
            if i != j {
                rat(0)
            } else {
                rat([1, x, y, z][i])
            }
        })
    };
    for (name, r) in [
        ("H0.2", catalog::r_h02()),
        ("H1.2-special", catalog::r_h12_special()),
        ("H1.4(t=7/3)", catalog::r_h14(&ratio(7, 3))),
        (
            "H2.3(2,3,-1/2)",
            catalog::r_h23(&rat(2), &rat(3), &ratio(-1, 2)),
        ),
        ("diag(1,2,3,5)", diag(2, 3, 5)),
        ("signdiag(1,-1,-1,1)", diag(-1, -1, 1)),
    ] {
        let ns = null_space(&linear_operator_for_q(&r, 2));
        let cs = cubic_constraints(&r, &ns, 2).unwrap();
        for pair in catalog::builtin_triples(&r).unwrap() {
            let coords = ybsys::solver::coordinates_in_basis(&ns, &pair.q)
                .unwrap_or_else(|| panic!("companion Q of {name} must lie in the kernel"));
            let bindings: BTreeMap<String, Rational> =
                ns.coords.iter().cloned().zip(coords).collect();
            for v in cs.evaluate(&bindings).unwrap() {
                assert!(v.is_zero(), "constraint violated for a companion of {name}");
            }
        }
    }
    println!("tool-gauge constraints vanish on the P/R/PR^-1P companions: PASS");
}

/// The extended-system implication holds identically over the function
/// field, not just at sampled points: both antidiagonal parameters stay
/// symbolic and the companion's inverse lives in Q(t, a).
#[test]
fn extended_implication_holds_symbolically() {
    let entry = catalog::entry_by_name("H1.4/antidiag").unwrap();
    let branch = &entry.symbolic_branches().unwrap()[0];
    let pair = YbPair::new(branch.r.clone(), branch.q.clone(), 2);
    assert!(system_residuals(&pair).all_zero());
    let qb = qbar(&pair).unwrap();
    for res in extended_residuals(&pair.q, &qb, &pair.r, 2) {
        assert!(res.is_zero(), "extended system must vanish identically");
    }
}

/// Spot check that the symbolic verification really distinguishes failure:
/// perturbing one catalog template entry must break at least one residual.
#[test]
fn perturbed_family_fails_verification() {
    let entry = catalog::entry_by_name("H1.4/antidiag").unwrap();
    let (pair, _) = entry.instantiate(SEED).unwrap();
    let mut bad_q = pair.q.clone();
    bad_q.set(0, 0, rat(1));
    let bad = YbPair::new(pair.r.clone(), bad_q, 2);
    assert!(!system_residuals(&bad).all_zero());
}

/// The fingerprint distinguishes pairs that no symmetry can relate.
#[test]
fn fingerprints_separate_inequivalent_pairs() {
    let p = permutation_p(&Rationals, 2);
    let a = YbPair::new(catalog::r_h02(), p.clone(), 2);
    let b = YbPair::new(catalog::r_h12_special(), p, 2);
    let fa = fingerprint(&a).unwrap();
    let fb = fingerprint(&b).unwrap();
    assert_ne!(fa, fb);
    // the kernel-dimension component alone already separates them
    assert_eq!(fa[4], rat(2));
    assert_eq!(fb[4], rat(4));
}

/// FunctionField-level check of one published pair: the special-triangular R
/// with its printed Q is a solution identically in t and r.
#[test]
fn special_triangular_pair_verifies_symbolically() {
    let f = FunctionField::named(vec!["t", "r"]);
    let r_m = catalog::r_h12_special()
        .map_into(&f, |e| f.from_rational(e))
        .unwrap();
    let q_m = Matrix::from_exprs(
        f.clone(),
        &[
            vec!["1", "0", "0", "0"],
            vec!["0", "1", "0", "0"],
            vec!["0", "1-t", "t", "0"],
            vec!["r", "0", "0", "-t"],
        ],
    )
    .unwrap();
    let pair = YbPair::new(r_m, q_m, 2);
    assert!(system_residuals(&pair).all_zero());
}
