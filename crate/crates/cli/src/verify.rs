use std::path::PathBuf;

use clap::{Args, ValueEnum};
use hardedge_core::corpus::{check_corpus, default_fixture_dir};
use hardedge_core::identities::{
    jacobi_diff_residual, kaneko_laguerre_n2, laguerre_diff_residual, painleve5_report, sigma_consistency_jacobi,
    sigma_consistency_laguerre, DiffReport,
};
use hardedge_core::{Field, Rational, Real, Scalar};

use crate::params::{all_exact, field, list_or, usize_list};
use crate::{usage, CmdResult, Failure, Format};

/// Relative tolerance of the quadrature side of the Kaneko check.
pub const KANEKO_RTOL: f64 = 1e-7;

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Diff,
    Painleve5,
    Painleve6,
    Kaneko,
    Corpus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Laguerre,
    Jacobi,
    Both,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Matrix sizes, comma-separated.
    #[arg(short = 'n', long = "n")]
    pub n: Option<String>,
    #[arg(long)]
    pub beta: Option<String>,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub gamma1: Option<String>,
    #[arg(long)]
    pub gamma2: Option<String>,
    /// Evaluation points of the Kaneko check.
    #[arg(long)]
    pub y: Option<String>,
    /// Ensemble of the differentiation suite.
    #[arg(long, value_enum, default_value_t = Which::Both)]
    pub ensemble: Which,
    /// Fixture directory of the corpus suite.
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
}

/// One checked item.
struct Line {
    pass: bool,
    human: String,
    json: String,
}

impl Line {
    fn from_report<F: Field>(r: &DiffReport<F>) -> Result<Self, Failure> {
        let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut human = format!("{} {} {}", if r.pass { "PASS" } else { "FAIL" }, r.identity, params.join(" "));
        if !r.pass {
            human.push_str(&format!(" residual at 1/3,1/2,3/4: {}", r.sample_values().join(", ")));
        }
        if let Some(note) = &r.note {
            human.push_str(&format!(" ({note})"));
        }
        Ok(Line { pass: r.pass, human, json: r.to_json_line()? })
    }
}

struct Grid {
    n: Vec<usize>,
    beta: Vec<Scalar>,
    gamma: Vec<Scalar>,
    gamma1: Vec<Scalar>,
    gamma2: Vec<Scalar>,
}

pub fn run(a: &VerifyArgs, fmt: Format) -> CmdResult {
    let lines = match a.suite {
        Suite::Corpus => corpus(a)?,
        Suite::Kaneko => kaneko(a)?,
        _ => {
            let g = Grid {
                n: usize_list("n", &a.n, "2,3,4")?,
                beta: list_or("beta", &a.beta, "1/2,1,2,3")?,
                gamma: list_or("gamma", &a.gamma, if a.suite == Suite::Painleve5 { "1,2,3" } else { "0,1,2,3" })?,
                gamma1: list_or("gamma1", &a.gamma1, "0,1,2,3")?,
                gamma2: list_or("gamma2", &a.gamma2, "1/2,1,2")?,
            };
            let values = g.beta.iter().chain(&g.gamma).chain(&g.gamma1).chain(&g.gamma2);
            if all_exact(values) {
                identities::<Rational>(a, &g)?
            } else {
                identities::<Real>(a, &g)?
            }
        }
    };
    let passed = lines.iter().filter(|l| l.pass).count();
    let mut out = String::new();
    for l in &lines {
        out.push_str(if fmt == Format::Json { &l.json } else { &l.human });
        out.push('\n');
    }
    if fmt != Format::Json {
        out.push_str(&format!("{passed}/{} checks pass\n", lines.len()));
    }
    if passed == lines.len() {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn identities<F: Field>(a: &VerifyArgs, g: &Grid) -> Result<Vec<Line>, Failure> {
    let f = |v: &Scalar| field::<F>(v);
    let mut out = Vec::new();
    for &n in &g.n {
        match a.suite {
            Suite::Diff => {
                for beta in &g.beta {
                    if a.ensemble != Which::Jacobi {
                        for gamma in &g.gamma {
                            out.push(Line::from_report(&laguerre_diff_residual(n, &f(beta)?, &f(gamma)?)?)?);
                        }
                    }
                    if a.ensemble != Which::Laguerre {
                        for g1 in &g.gamma1 {
                            for g2 in &g.gamma2 {
                                out.push(Line::from_report(&jacobi_diff_residual(n, &f(beta)?, &f(g1)?, &f(g2)?)?)?);
                            }
                        }
                    }
                }
            }
            Suite::Painleve5 => {
                for gamma in &g.gamma {
                    out.push(Line::from_report(&painleve5_report(n, &f(gamma)?)?)?);
                    out.push(Line::from_report(&sigma_consistency_laguerre(n, &f(gamma)?)?)?);
                }
            }
            Suite::Painleve6 => {
                for g1 in &g.gamma1 {
                    for g2 in &g.gamma2 {
                        out.push(Line::from_report(&sigma_consistency_jacobi(n, &f(g1)?, &f(g2)?)?)?);
                    }
                }
            }
            Suite::Kaneko | Suite::Corpus => unreachable!("handled separately"),
        }
    }
    Ok(out)
}

fn kaneko(a: &VerifyArgs) -> Result<Vec<Line>, Failure> {
    let betas = list_or("beta", &a.beta, "1,2")?;
    let gammas = list_or("gamma", &a.gamma, "0,1")?;
    let ys = list_or("y", &a.y, "1/2,1,2")?;
    if !all_exact(betas.iter().chain(&gammas)) {
        return Err(usage("the Kaneko check takes rational beta and gamma"));
    }
    let mut out = Vec::new();
    for beta in &betas {
        for gamma in &gammas {
            for y in &ys {
                let (lhs, rhs) = kaneko_laguerre_n2::<Rational>(&field(beta)?, &field(gamma)?, y.to_f64())?;
                let rel = (lhs - rhs).abs() / rhs.abs().max(f64::MIN_POSITIVE);
                let pass = rel <= KANEKO_RTOL;
                let human = format!(
                    "{} kaneko_laguerre beta={beta} gamma={gamma} y={y} quadrature={lhs:.12e} closed_form={rhs:.12e} rel_error={rel:.2e}",
                    if pass { "PASS" } else { "FAIL" }
                );
                let json = serde_json::json!({
                    "identity": "kaneko_laguerre",
                    "params": { "n": "2", "beta": beta.to_string(), "gamma": gamma.to_string(), "y": y.to_string() },
                    "pass": pass,
                    "quadrature": lhs,
                    "closed_form": rhs,
                    "rel_error": rel,
                });
                out.push(Line { pass, human, json: json.to_string() });
            }
        }
    }
    Ok(out)
}

fn corpus(a: &VerifyArgs) -> Result<Vec<Line>, Failure> {
    let dir = a.fixtures.clone().unwrap_or_else(default_fixture_dir);
    let mut reports = check_corpus(&dir)?;
    reports.sort_by(|x, y| x.name.cmp(&y.name));
    reports
        .iter()
        .map(|r| {
            let pass = r.pass();
            let mut human = format!("{} corpus {} ({})", if pass { "PASS" } else { "FAIL" }, r.name, r.field);
            if !r.printed_mismatches.is_empty() {
                human.push_str(&format!(" printed values differ at [{}]", r.printed_mismatches.join("; ")));
                if r.matches_corrected {
                    human.push_str(", matching the documented corrections");
                }
            }
            if let Some(e) = r.max_rel_error {
                human.push_str(&format!(" max_rel_error={e:.1e}"));
            }
            let mut json = serde_json::to_value(r).map_err(|e| usage(e.to_string()))?;
            json["identity"] = "corpus".into();
            json["pass"] = pass.into();
            Ok(Line { pass, human, json: json.to_string() })
        })
        .collect()
}
