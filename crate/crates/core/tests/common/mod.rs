#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use hardedge_core::mvop::{jacobi_poly, laguerre_poly, JacobiParams, LaguerreParams, PolyJson};
use hardedge_core::symfun::SymmetricPoly;
use hardedge_core::univariate::UniPoly;
use hardedge_core::{Field, Partition, Rational, Real, Scalar};
use serde::Deserialize;

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("explicit")
}

#[derive(Debug, Deserialize)]
pub struct PolyEntry {
    pub name: String,
    pub family: String,
    pub kappa: Vec<u32>,
    pub n_vars: usize,
    pub params: BTreeMap<String, String>,
    pub file: String,
    #[serde(default)]
    pub corrected: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
pub struct DiagonalEntry {
    pub name: String,
    pub family: String,
    pub kappa: Vec<u32>,
    pub n_vars: usize,
    pub field: String,
    pub params: BTreeMap<String, String>,
    pub argument_scale: String,
    pub coeffs: Vec<String>,
    #[serde(default)]
    pub corrected: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
pub struct Corpus {
    pub polynomials: Vec<PolyEntry>,
    pub diagonals: Vec<DiagonalEntry>,
}

pub fn corpus() -> Corpus {
    let text = std::fs::read_to_string(fixture_dir().join("corpus.json")).expect("corpus fixture");
    serde_json::from_str(&text).expect("corpus parses")
}

pub fn load_poly(entry: &PolyEntry) -> SymmetricPoly<Rational> {
    let text = std::fs::read_to_string(fixture_dir().join(&entry.file)).expect("polynomial fixture");
    PolyJson::from_json_str(&text).unwrap().to_poly().unwrap()
}

pub fn exact(s: &str) -> Rational {
    s.parse::<Scalar>().unwrap().as_rational().unwrap().clone()
}

pub fn param<F: Field>(params: &BTreeMap<String, String>, key: &str, real: bool) -> F {
    let s = &params[key];
    if real {
        F::parse_decimal(s).unwrap()
    } else {
        F::from_rational(&exact(s))
    }
}

/// Builds the family polynomial of an entry.
pub fn build<F: Field>(family: &str, kappa: &[u32], n: usize, params: &BTreeMap<String, String>, real: bool) -> SymmetricPoly<F> {
    let kappa = Partition::from_parts(kappa.to_vec()).unwrap();
    let beta: F = param(params, "beta", real);
    match family {
        "laguerre" => {
            let p = LaguerreParams::new(n, param(params, "gamma", real), beta).unwrap();
            (*laguerre_poly(&kappa, &p).unwrap()).clone()
        }
        "jacobi" => {
            let p = JacobiParams::new(n, param(params, "gamma1", real), param(params, "gamma2", real), beta).unwrap();
            (*jacobi_poly(&kappa, &p).unwrap()).clone()
        }
        other => panic!("unknown family {other}"),
    }
}

/// `f(s x I_n)` for the entry's argument scale `s`, and the printed coefficients.
pub fn diagonal_pair<F: Field>(entry: &DiagonalEntry) -> (UniPoly<F>, Vec<F>) {
    let real = entry.field == "real";
    let f: SymmetricPoly<F> = build(&entry.family, &entry.kappa, entry.n_vars, &entry.params, real);
    let scale: F = if real { F::parse_decimal(&entry.argument_scale).unwrap() } else { F::from_rational(&exact(&entry.argument_scale)) };
    let got = f.diagonal().scale_arg(&scale);
    let want = entry
        .coeffs
        .iter()
        .map(|c| if real { F::parse_decimal(c).unwrap() } else { F::from_rational(&exact(c)) })
        .collect();
    (got, want)
}

/// The printed polynomial with the corrected coefficients substituted.
pub fn verified_poly(entry: &PolyEntry) -> SymmetricPoly<Rational> {
    let mut p = load_poly(entry);
    for (key, v) in &entry.corrected {
        let lambda: Partition = key.parse().unwrap();
        let old = p.coeff(&lambda);
        p.add_term(lambda, exact(v) - old);
    }
    p
}

/// The printed coefficients with the corrected ones substituted.
pub fn verified_coeffs<F: Field>(entry: &DiagonalEntry, printed: Vec<F>) -> Vec<F> {
    let mut out = printed;
    for (key, v) in &entry.corrected {
        out[key.parse::<usize>().unwrap()] = F::from_rational(&exact(v));
    }
    out
}

/// Largest relative coefficient error between two real coefficient lists.
pub fn max_rel_error(got: &UniPoly<Real>, want: &[Real]) -> f64 {
    let n = want.len().max(got.coeffs().len());
    let mut worst = 0.0f64;
    for k in 0..n {
        let g = got.coeff(k);
        let w = want.get(k).cloned().unwrap_or_else(Real::zero);
        let err = (g - w.clone()).abs().to_f64() / w.abs().to_f64().max(1e-300);
        worst = worst.max(err);
    }
    worst
}

/// Floating-point evaluation of a symmetric polynomial (small `n` only).
pub fn eval_f64<F: Field>(p: &SymmetricPoly<F>, point: &[f64]) -> f64 {
    let n = point.len();
    let mut total = 0.0;
    for (lambda, c) in p.terms() {
        let padded = lambda.padded(n);
        let mut seen = std::collections::BTreeSet::new();
        for perm in permutations(n) {
            let exps: Vec<u32> = perm.iter().map(|&i| padded[i]).collect();
            if seen.insert(exps.clone()) {
                total += c.to_f64() * exps.iter().zip(point).map(|(&e, &x)| x.powi(e as i32)).product::<f64>();
            }
        }
    }
    total
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

pub fn part(v: &[u32]) -> Partition {
    Partition::from_parts(v.to_vec()).unwrap()
}
