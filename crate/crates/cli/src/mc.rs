use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hardedge_core::hardedge::Ensemble;
use hardedge_core::mc::{
    cdf_plot_data, ks_critical_value, ks_distance, matching_cdf, plot_data_csv, sample_jbe, sample_lbe, SampleBatch,
};
use hardedge_core::{Field, Rational, Real};

use crate::law::{parse_ensemble, Parsed};
use crate::params::{all_exact, field};
use crate::{output_path, usage, CmdResult, EnsembleFlags, Failure, Format};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Model {
    /// beta-Laguerre bidiagonal model.
    Lbe,
    /// beta-Jacobi CMV-derived tridiagonal model.
    Jbe,
}

#[derive(Args, Debug)]
pub struct SampleArgs {
    #[arg(value_enum)]
    pub model: Model,
    #[command(flatten)]
    pub params: EnsembleFlags,
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Write the sample dump here instead of standard output.
    #[arg(long, short = 'o')]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct KsArgs {
    /// Sample inline from this model instead of reading --samples.
    #[arg(value_enum)]
    pub model: Option<Model>,
    #[command(flatten)]
    pub params: EnsembleFlags,
    /// Sample dump written by `sample`.
    #[arg(long, conflicts_with = "model")]
    pub samples: Option<PathBuf>,
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Pass threshold on the KS distance; defaults to 1.63/sqrt(count).
    #[arg(long)]
    pub threshold: Option<f64>,
    /// Write empirical and exact CDFs on a grid as CSV.
    #[arg(long)]
    pub plot: Option<PathBuf>,
    #[arg(long, default_value_t = 201)]
    pub plot_points: usize,
}

fn draw<F: Field>(model: Model, p: &Parsed, count: usize, seed: u64) -> Result<SampleBatch<F>, Failure> {
    let v = p.values.iter().map(field::<F>).collect::<Result<Vec<F>, _>>()?;
    Ok(match model {
        Model::Lbe => sample_lbe(p.n, &v[0], &v[1], count, seed)?,
        Model::Jbe => sample_jbe(p.n, &v[0], &v[1], &v[2], count, seed)?,
    })
}

pub fn run_sample(a: &SampleArgs, fmt: Format) -> CmdResult {
    if a.count == 0 {
        return Err(usage("--count must be positive"));
    }
    let parsed = parse_ensemble(a.model == Model::Lbe, &a.params)?;
    let csv = if all_exact(&parsed.values) {
        draw::<Rational>(a.model, &parsed, a.count, a.seed)?.to_csv()
    } else {
        draw::<Real>(a.model, &parsed, a.count, a.seed)?.to_csv()
    };
    match &a.output {
        None => Ok(csv),
        Some(path) => {
            output_path(&a.output, &csv)?;
            Ok(match fmt {
                Format::Json => format!(
                    "{}\n",
                    serde_json::json!({ "output": path.display().to_string(), "count": a.count, "seed": a.seed })
                ),
                _ => format!("wrote {} samples to {}\n", a.count, path.display()),
            })
        }
    }
}

pub fn run_kstest(a: &KsArgs, fmt: Format) -> CmdResult {
    match (&a.samples, a.model) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path)?;
            let header = text.lines().next().unwrap_or_default();
            if header.contains('.') {
                report(&SampleBatch::<Real>::from_csv(&text)?, a, fmt)
            } else {
                report(&SampleBatch::<Rational>::from_csv(&text)?, a, fmt)
            }
        }
        (None, Some(model)) => {
            if a.count == 0 {
                return Err(usage("--count must be positive"));
            }
            let parsed = parse_ensemble(model == Model::Lbe, &a.params)?;
            if all_exact(&parsed.values) {
                report(&draw::<Rational>(model, &parsed, a.count, a.seed)?, a, fmt)
            } else {
                report(&draw::<Real>(model, &parsed, a.count, a.seed)?, a, fmt)
            }
        }
        (None, None) => Err(usage("kstest needs --samples FILE or a model (lbe|jbe) with its parameters")),
    }
}

fn show<F: Field>(v: &F) -> String {
    match (v.to_rational(), v.to_integer()) {
        (Some(r), _) => r.to_string(),
        (None, Some(k)) => k.to_string(),
        (None, None) => v.to_decimal(20),
    }
}

fn describe<F: Field>(batch: &SampleBatch<F>) -> Vec<(&'static str, String)> {
    let mut out = match &batch.ensemble {
        Ensemble::Laguerre { n, beta, gamma } => {
            vec![("ensemble", "lbe".into()), ("n", n.to_string()), ("beta", show(beta)), ("gamma", show(gamma))]
        }
        Ensemble::Jacobi { n, beta, gamma1, gamma2 } => vec![
            ("ensemble", "jbe".into()),
            ("n", n.to_string()),
            ("beta", show(beta)),
            ("gamma1", show(gamma1)),
            ("gamma2", show(gamma2)),
        ],
    };
    out.push(("seed", batch.seed.to_string()));
    out.push(("count", batch.count.to_string()));
    out
}

fn report<F: Field>(batch: &SampleBatch<F>, a: &KsArgs, fmt: Format) -> CmdResult {
    let law = matching_cdf(batch)?;
    let distance = ks_distance(batch, &law)?;
    let threshold = a.threshold.unwrap_or_else(|| ks_critical_value(batch.values.len()));
    let pass = distance <= threshold;
    if let Some(path) = &a.plot {
        let hi = match batch.ensemble {
            Ensemble::Laguerre { .. } => batch.values.iter().cloned().fold(0.0, f64::max),
            Ensemble::Jacobi { .. } => 1.0,
        };
        let m = a.plot_points.max(2);
        let grid: Vec<f64> = (0..m).map(|i| hi * i as f64 / (m - 1) as f64).collect();
        std::fs::write(path, plot_data_csv(&cdf_plot_data(batch, &law, &grid)?))?;
    }
    let params = describe(batch);
    let text = match fmt {
        Format::Json => {
            let p: serde_json::Map<String, serde_json::Value> =
                params.iter().map(|(k, v)| (k.to_string(), v.clone().into())).collect();
            format!(
                "{}\n",
                serde_json::json!({ "params": p, "distance": distance, "threshold": threshold, "pass": pass })
            )
        }
        Format::Csv => format!("distance,threshold,pass\n{distance},{threshold},{pass}\n"),
        Format::Human => {
            let p: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!(
                "{} kstest {}: distance={distance:.6} threshold={threshold:.6}\n",
                if pass { "PASS" } else { "FAIL" },
                p.join(" ")
            )
        }
    };
    if pass {
        Ok(text)
    } else {
        Err(Failure::Check(text))
    }
}
