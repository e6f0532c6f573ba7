//! Seeded random inputs shared by the integration and acceptance tests.
#![allow(dead_code)]

use gorenstein::apolarity::reduce_essential;
use gorenstein::constructions::BigradedForm;
use gorenstein::graded_basis;
use gorenstein::poly::{monomials_of_degree, var_names, Monomial, Poly};
use gorenstein::Rational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn int(c: i64) -> Rational {
    Rational::from_integer(c.into())
}

/// Form in `n` variables of degree `d`; each monomial is kept with
/// probability one half, with a coefficient in `[-5, 5]`.
pub fn sparse_form(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Poly {
    let names = var_names(&["x", "y", "z", "w"][..n]);
    let mut terms = Vec::new();
    for m in monomials_of_degree(n, d) {
        if rng.gen_bool(0.5) {
            terms.push((m, int(rng.gen_range(-5..=5))));
        }
    }
    Poly::from_terms(names, terms)
}

/// Nonzero essential random form with at most `max_vars` variables and
/// degree in `degrees`, redrawn until the reduction succeeds.
pub fn essential_form(
    rng: &mut ChaCha8Rng,
    max_vars: usize,
    degrees: std::ops::RangeInclusive<usize>,
) -> Poly {
    loop {
        let n = rng.gen_range(1..=max_vars);
        let d = rng.gen_range(degrees.clone());
        let f = sparse_form(rng, n, d);
        if f.is_zero() {
            continue;
        }
        if let Ok(g) = reduce_essential(&f) {
            if graded_basis(&g).is_ok() {
                return g;
            }
        }
    }
}

/// Random form of degree `deg` in `names` with coefficients in `[-3, 3]`.
fn u_form(rng: &mut ChaCha8Rng, names: &[String], deg: usize) -> Poly {
    let terms = monomials_of_degree(names.len(), deg)
        .into_iter()
        .map(|m| (m, int(rng.gen_range(-3..=3))))
        .collect::<Vec<_>>();
    Poly::from_terms(var_names(names), terms)
}

fn power(names: &[String], i: usize, e: u32) -> Poly {
    let exps = (0..names.len())
        .map(|k| if k == i { e } else { 0 })
        .collect();
    Poly::monomial(var_names(names), Monomial::new(exps), int(1))
}

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

/// Random Perazzo form with `m` u-variables. With `last`, the final summand
/// is `u_m^{d-1}`; with `first`, the first one is `u_1^{d-1}`.
pub fn random_perazzo(
    rng: &mut ChaCha8Rng,
    prefix: (&str, &str),
    d: u32,
    m: usize,
    first: bool,
    last: bool,
) -> BigradedForm {
    loop {
        let n = rng.gen_range(m + 1..=m + 2);
        let xs = names(prefix.0, n);
        let us = names(prefix.1, m);
        let g = (0..n)
            .map(|i| {
                if first && i == 0 {
                    power(&us, 0, d - 1)
                } else if last && i == n - 1 {
                    power(&us, m - 1, d - 1)
                } else {
                    u_form(rng, &us, d as usize - 1)
                }
            })
            .collect();
        let Ok(f) = BigradedForm::new(xs, g) else {
            continue;
        };
        if graded_basis(&f.to_poly()).is_ok() {
            return f;
        }
    }
}
