//! Golden fixtures of explicit polynomials and their comparison against the
//! constructed ones.
//!
//! A fixture directory holds `corpus.json` plus one [`PolyJson`] file per
//! multivariate polynomial. Printed values known to be wrong are kept as
//! printed, with the constructed value recorded under `corrected`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::mvop::{jacobi_poly, laguerre_poly, JacobiParams, LaguerreParams, PolyJson};
use crate::scalar::{Field, Rational, Real, Scalar};
use crate::symfun::SymmetricPoly;
use crate::univariate::UniPoly;

/// Relative tolerance for fixtures stored as decimals.
pub const REAL_RTOL: f64 = 1e-40;

#[derive(Clone, Debug, Deserialize)]
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

/// A polynomial evaluated on `s x I_n`, stored by its univariate coefficients.
#[derive(Clone, Debug, Deserialize)]
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

#[derive(Clone, Debug, Deserialize)]
pub struct Corpus {
    pub polynomials: Vec<PolyEntry>,
    pub diagonals: Vec<DiagonalEntry>,
}

/// Comparison of one fixture with the constructed polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub field: String,
    /// Coefficient keys (partition or power) where the printed value differs.
    pub printed_mismatches: Vec<String>,
    /// Keys carrying a documented correction.
    pub corrected: Vec<String>,
    /// Whether the construction equals the printed values with corrections applied.
    pub matches_corrected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_rel_error: Option<f64>,
}

impl EntryReport {
    /// Exact match after corrections, and every printed mismatch is documented.
    pub fn pass(&self) -> bool {
        let a: BTreeSet<_> = self.printed_mismatches.iter().collect();
        let b: BTreeSet<_> = self.corrected.iter().collect();
        self.matches_corrected && a == b
    }
}

/// The fixture directory shipped with this crate.
pub fn default_fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join("explicit")
}

impl Corpus {
    pub fn load(dir: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(dir.join("corpus.json"))?;
        Ok(serde_json::from_str(&text)?)
    }
}

fn exact(s: &str) -> Result<Rational> {
    match s.parse::<Scalar>()? {
        Scalar::Exact(q) => Ok(q),
        Scalar::Real(_) => Err(Error::Parse(format!("{s:?} is not an exact rational"))),
    }
}

fn value<F: Field>(s: &str, real: bool) -> Result<F> {
    if real {
        F::parse_decimal(s)
    } else {
        Ok(F::from_rational(&exact(s)?))
    }
}

fn param<F: Field>(params: &BTreeMap<String, String>, key: &str, real: bool) -> Result<F> {
    let s = params.get(key).ok_or_else(|| Error::Parse(format!("fixture lacks parameter {key}")))?;
    value(s, real)
}

/// The family polynomial named by a fixture.
pub fn construct<F: Field>(
    family: &str,
    kappa: &[u32],
    n_vars: usize,
    params: &BTreeMap<String, String>,
    real: bool,
) -> Result<SymmetricPoly<F>> {
    let kappa = Partition::from_parts(kappa.to_vec())?;
    let beta: F = param(params, "beta", real)?;
    match family {
        "laguerre" => {
            let p = LaguerreParams::new(n_vars, param(params, "gamma", real)?, beta)?;
            Ok((*laguerre_poly(&kappa, &p)?).clone())
        }
        "jacobi" => {
            let p = JacobiParams::new(n_vars, param(params, "gamma1", real)?, param(params, "gamma2", real)?, beta)?;
            Ok((*jacobi_poly(&kappa, &p)?).clone())
        }
        other => Err(Error::Parse(format!("unknown family {other:?}"))),
    }
}

fn partition_key(lambda: &Partition) -> String {
    lambda.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn check_poly(dir: &Path, e: &PolyEntry) -> Result<EntryReport> {
    let got: SymmetricPoly<Rational> = construct(&e.family, &e.kappa, e.n_vars, &e.params, false)?;
    let printed: SymmetricPoly<Rational> =
        PolyJson::from_json_str(&std::fs::read_to_string(dir.join(&e.file))?)?.to_poly()?;
    let keys: BTreeSet<Partition> = got.terms().keys().chain(printed.terms().keys()).cloned().collect();
    let mut mismatches = Vec::new();
    let mut matches_corrected = true;
    for k in keys {
        let key = partition_key(&k);
        let want = match e.corrected.get(&key) {
            Some(v) => exact(v)?,
            None => printed.coeff(&k),
        };
        if got.coeff(&k) != printed.coeff(&k) {
            mismatches.push(key);
        }
        matches_corrected &= got.coeff(&k) == want;
    }
    Ok(EntryReport {
        name: e.name.clone(),
        field: "rational".into(),
        printed_mismatches: mismatches,
        corrected: e.corrected.keys().cloned().collect(),
        matches_corrected,
        max_rel_error: None,
    })
}

fn diagonal<F: Field>(e: &DiagonalEntry, real: bool) -> Result<(UniPoly<F>, Vec<F>)> {
    let f: SymmetricPoly<F> = construct(&e.family, &e.kappa, e.n_vars, &e.params, real)?;
    let scale: F = value(&e.argument_scale, real)?;
    let got = f.diagonal().scale_arg(&scale);
    let printed = e.coeffs.iter().map(|c| value(c, real)).collect::<Result<Vec<F>>>()?;
    Ok((got, printed))
}

fn check_diagonal(e: &DiagonalEntry) -> Result<EntryReport> {
    let mut corrected = BTreeMap::new();
    for (k, v) in &e.corrected {
        let idx: usize = k.parse().map_err(|_| Error::Parse(format!("bad corrected key {k:?}")))?;
        corrected.insert(idx, exact(v)?);
    }
    let mut mismatches = Vec::new();
    let mut matches_corrected = true;
    let mut max_rel_error = None;
    if e.field == "real" {
        let (got, printed) = diagonal::<Real>(e, true)?;
        let mut worst = 0.0f64;
        for k in 0..printed.len().max(got.coeffs().len()) {
            let w = printed.get(k).cloned().unwrap_or_else(Real::zero);
            let err = (got.coeff(k) - w.clone()).abs().to_f64() / w.abs().to_f64().max(f64::MIN_POSITIVE);
            worst = worst.max(err);
            if err >= REAL_RTOL {
                mismatches.push(k.to_string());
                matches_corrected &= corrected.contains_key(&k);
            }
        }
        max_rel_error = Some(worst);
    } else {
        let (got, printed) = diagonal::<Rational>(e, false)?;
        for k in 0..printed.len().max(got.coeffs().len()) {
            let p = printed.get(k).cloned().unwrap_or_default();
            if got.coeff(k) != p {
                mismatches.push(k.to_string());
            }
            matches_corrected &= got.coeff(k) == corrected.get(&k).cloned().unwrap_or(p);
        }
    }
    Ok(EntryReport {
        name: e.name.clone(),
        field: e.field.clone(),
        printed_mismatches: mismatches,
        corrected: e.corrected.keys().cloned().collect(),
        matches_corrected,
        max_rel_error,
    })
}

/// Checks every fixture in `dir`, in file order.
pub fn check_corpus(dir: &Path) -> Result<Vec<EntryReport>> {
    let corpus = Corpus::load(dir)?;
    let mut out = Vec::new();
    for e in &corpus.polynomials {
        out.push(check_poly(dir, e)?);
    }
    for e in &corpus.diagonals {
        out.push(check_diagonal(e)?);
    }
    Ok(out)
}
