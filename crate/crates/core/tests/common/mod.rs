//! Strategies and property bodies shared by the property suite and the
//! acceptance run.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};

use sympow::betti::{betti_oracle, default_degree_cap, hilbert_identity_holds};
use sympow::{FieldSpec, Monomial, MonomialIdeal};

pub const CASES: u32 = 1000;
pub const MAX_VARS: usize = 4;
pub const MAX_GENS: usize = 6;
pub const MAX_DEGREE: u32 = 8;

/// Exponent vectors of total degree `1..=MAX_DEGREE` in `m` variables.
pub fn exponents(m: usize) -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(0..=MAX_DEGREE, m).prop_filter("degree in 1..=8", |e| {
        (1..=MAX_DEGREE).contains(&e.iter().sum::<u32>())
    })
}

/// A list of up to `MAX_GENS` raw (not necessarily minimal) generators.
pub fn raw_generators(m: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
    proptest::collection::vec(exponents(m), 1..=MAX_GENS)
}

pub fn ideal_in(m: usize) -> impl Strategy<Value = MonomialIdeal> {
    raw_generators(m)
        .prop_map(move |g| MonomialIdeal::minimize(m, g.into_iter().map(Monomial::new)).unwrap())
}

pub fn ideal() -> impl Strategy<Value = MonomialIdeal> {
    (1..=MAX_VARS).prop_flat_map(ideal_in)
}

pub fn runner() -> TestRunner {
    TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    })
}

pub fn minimize_idempotent(m: usize, raw: Vec<Vec<u32>>) -> Result<(), TestCaseError> {
    let gens: Vec<Monomial> = raw.into_iter().map(Monomial::new).collect();
    let once = MonomialIdeal::minimize(m, gens.clone()).unwrap();
    let twice = MonomialIdeal::minimize(m, once.generators().to_vec()).unwrap();
    prop_assert_eq!(&once, &twice);
    for g in &gens {
        prop_assert!(once.contains(g).unwrap());
    }
    for a in once.generators() {
        for b in once.generators() {
            prop_assert!(a == b || !a.divides(b).unwrap());
        }
    }
    Ok(())
}

pub fn intersection_membership(
    i: MonomialIdeal,
    j: MonomialIdeal,
    w: Vec<u32>,
) -> Result<(), TestCaseError> {
    let w = Monomial::new(w);
    let meet = i.intersect(&j).unwrap();
    prop_assert_eq!(
        meet.contains(&w).unwrap(),
        i.contains(&w).unwrap() && j.contains(&w).unwrap()
    );
    Ok(())
}

pub fn hilbert_identity(i: MonomialIdeal) -> Result<(), TestCaseError> {
    let cap = default_degree_cap(&i);
    let table = betti_oracle(&i, FieldSpec::default(), cap).unwrap();
    prop_assert!(hilbert_identity_holds(&i, &table, cap).unwrap());
    Ok(())
}

pub fn shift_law(i: MonomialIdeal, var: usize) -> Result<(), TestCaseError> {
    let l = var % i.ambient() + 1;
    let scaled = i.scale(l).unwrap();
    let field = FieldSpec::default();
    let base = betti_oracle(&i, field, default_degree_cap(&i)).unwrap();
    let moved = betti_oracle(&scaled, field, default_degree_cap(&scaled)).unwrap();
    prop_assert_eq!(moved, base.times_variable());
    Ok(())
}

fn outcome<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Run the four suites with `CASES` cases each; returns one
/// `(name, outcome)` per suite.
pub fn run_all() -> Vec<(&'static str, Result<(), String>)> {
    vec![
        (
            "minimize idempotence",
            outcome(runner().run(
                &(1..=MAX_VARS).prop_flat_map(|m| (Just(m), raw_generators(m))),
                |(m, raw)| minimize_idempotent(m, raw),
            )),
        ),
        (
            "intersection membership",
            outcome(runner().run(
                &(1..=MAX_VARS).prop_flat_map(|m| {
                    (
                        ideal_in(m),
                        ideal_in(m),
                        proptest::collection::vec(0..=MAX_DEGREE, m),
                    )
                }),
                |(i, j, w)| intersection_membership(i, j, w),
            )),
        ),
        (
            "Hilbert series identity",
            outcome(runner().run(&ideal(), hilbert_identity)),
        ),
        (
            "shift law",
            outcome(runner().run(&(ideal(), 0..MAX_VARS), |(i, v)| shift_law(i, v))),
        ),
    ]
}
