//! Kolmogorov-Smirnov comparison of samples with exact laws, and CSV I/O.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hardedge::{EigLaw, Ensemble, LawKind};
use crate::scalar::{Field, Real};

use super::sample::SampleBatch;

/// Asymptotic 1% critical value `1.63 / sqrt(N)`.
pub fn ks_critical_value(count: usize) -> f64 {
    1.63 / (count as f64).sqrt()
}

fn sorted(values: &[f64]) -> Vec<f64> {
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// Sup distance between the empirical CDF of `values` and `cdf`.
pub fn ks_statistic(values: &[f64], cdf: impl Fn(f64) -> f64 + Sync) -> f64 {
    let v = sorted(values);
    let total = v.len() as f64;
    v.par_iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = cdf(x);
            ((i + 1) as f64 / total - f).max(f - i as f64 / total)
        })
        .reduce(|| 0.0, f64::max)
}

/// Two-sample KS distance: sup gap between the two empirical CDFs.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> f64 {
    let (a, b) = (sorted(a), sorted(b));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j, mut d) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    d
}

fn ensemble_matches<F, G>(batch: &Ensemble<F>, law: &Ensemble<G>) -> bool {
    matches!((batch, law), (Ensemble::Laguerre { .. }, Ensemble::Laguerre { .. }) | (Ensemble::Jacobi { .. }, Ensemble::Jacobi { .. }))
}

/// KS distance between a batch and a smallest-eigenvalue CDF, with the CDF
/// evaluated in high precision and rounded.
pub fn ks_distance<F: Field, G: Field>(batch: &SampleBatch<F>, law: &EigLaw<G>) -> Result<f64> {
    let want = match batch.ensemble {
        Ensemble::Laguerre { .. } => LawKind::LaguerreCdf,
        Ensemble::Jacobi { .. } => LawKind::JacobiCdf,
    };
    if law.kind != want || !ensemble_matches(&batch.ensemble, &law.params) {
        return Err(Error::Contract(format!("KS needs a {} law for this batch, got {}", want.name(), law.kind.name())));
    }
    if batch.values.is_empty() {
        return Err(Error::Contract("empty sample batch".into()));
    }
    let real = law.to_real();
    Ok(ks_statistic(&batch.values, |x| real.eval_f64(x)))
}

/// Rows `(x, empirical CDF, exact CDF)` at the given points.
pub fn cdf_plot_data<F: Field, G: Field>(batch: &SampleBatch<F>, law: &EigLaw<G>, grid: &[f64]) -> Result<Vec<(f64, f64, f64)>> {
    if !law.kind.is_cdf() {
        return Err(Error::Contract(format!("plot data needs a CDF, got {}", law.kind.name())));
    }
    let v = sorted(&batch.values);
    let total = v.len() as f64;
    let real = law.to_real();
    Ok(grid
        .par_iter()
        .map(|&x| {
            let below = v.partition_point(|&s| s <= x);
            (x, below as f64 / total, real.eval_f64(x))
        })
        .collect())
}

/// `x,empirical,exact` CSV.
pub fn plot_data_csv(rows: &[(f64, f64, f64)]) -> String {
    let mut out = String::from("x,empirical,exact\n");
    for (x, e, f) in rows {
        out.push_str(&format!("{x},{e},{f}\n"));
    }
    out
}

fn render<F: Field>(v: &F) -> String {
    match v.to_rational() {
        Some(r) => r.to_string(),
        None => v.to_decimal(crate::mvop::DECIMAL_DIGITS),
    }
}

impl<F: Field> SampleBatch<F> {
    /// One value per line after a `#` header carrying the ensemble, parameters and seed.
    pub fn to_csv(&self) -> String {
        let params = match &self.ensemble {
            Ensemble::Laguerre { n, beta, gamma } => {
                format!("ensemble=lbe n={n} beta={} gamma={}", render(beta), render(gamma))
            }
            Ensemble::Jacobi { n, beta, gamma1, gamma2 } => format!(
                "ensemble=jbe n={n} beta={} gamma1={} gamma2={}",
                render(beta),
                render(gamma1),
                render(gamma2)
            ),
        };
        let mut out = format!("# {params} seed={} count={}\nvalue\n", self.seed, self.count);
        for v in &self.values {
            out.push_str(&format!("{v:e}\n"));
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let header = lines
            .next()
            .and_then(|l| l.strip_prefix('#'))
            .ok_or_else(|| Error::Parse("sample file must start with a '#' header".into()))?;
        let fields: Vec<(&str, &str)> = header.split_whitespace().filter_map(|kv| kv.split_once('=')).collect();
        let get = |key: &str| {
            fields
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::Parse(format!("sample header lacks {key}")))
        };
        let num = |key: &str| -> Result<F> { parse_field(get(key)?) };
        let int = |key: &str| -> Result<u64> {
            get(key)?.parse().map_err(|e| Error::Parse(format!("bad {key} in sample header: {e}")))
        };
        let n = int("n")? as usize;
        let ensemble = match get("ensemble")? {
            "lbe" => Ensemble::Laguerre { n, beta: num("beta")?, gamma: num("gamma")? },
            "jbe" => Ensemble::Jacobi { n, beta: num("beta")?, gamma1: num("gamma1")?, gamma2: num("gamma2")? },
            other => return Err(Error::Parse(format!("unknown ensemble {other:?}"))),
        };
        let seed = int("seed")?;
        let count = int("count")? as usize;
        let values = lines
            .filter(|l| !l.trim().is_empty() && l.trim() != "value")
            .map(|l| l.trim().parse::<f64>().map_err(|e| Error::Parse(format!("bad sample {l:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        if values.len() != count {
            return Err(Error::Parse(format!("header says {count} samples, file has {}", values.len())));
        }
        Ok(SampleBatch { ensemble, seed, values, count })
    }
}

fn parse_field<F: Field>(s: &str) -> Result<F> {
    if s.contains('/') {
        let r: rug::Rational = s.parse().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
        Ok(F::from_rational(&r))
    } else {
        F::parse_decimal(s)
    }
}

/// The exact smallest-eigenvalue CDF matching a batch's parameters.
pub fn matching_cdf<F: Field>(batch: &SampleBatch<F>) -> Result<EigLaw<F>> {
    match &batch.ensemble {
        Ensemble::Laguerre { n, beta, gamma } => crate::hardedge::laguerre_smallest_cdf(*n, beta, gamma),
        Ensemble::Jacobi { n, beta, gamma1, gamma2 } => crate::hardedge::jacobi_smallest_cdf(*n, beta, gamma1, gamma2),
    }
}

/// Converts a batch read with exact parameters to high-precision ones.
pub fn batch_to_real<F: Field>(batch: &SampleBatch<F>) -> SampleBatch<Real> {
    let t = crate::scalar::to_real;
    let ensemble = match &batch.ensemble {
        Ensemble::Laguerre { n, beta, gamma } => Ensemble::Laguerre { n: *n, beta: t(beta), gamma: t(gamma) },
        Ensemble::Jacobi { n, beta, gamma1, gamma2 } => {
            Ensemble::Jacobi { n: *n, beta: t(beta), gamma1: t(gamma1), gamma2: t(gamma2) }
        }
    };
    SampleBatch { ensemble, seed: batch.seed, values: batch.values.clone(), count: batch.count }
}
