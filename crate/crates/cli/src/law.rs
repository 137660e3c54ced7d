use clap::{Args, ValueEnum};
use hardedge_core::hardedge::{
    jacobi_largest_cdf, jacobi_smallest_cdf, jacobi_smallest_pdf, laguerre_smallest_cdf, laguerre_smallest_pdf, EigLaw,
    LawJson, LawKind,
};
use hardedge_core::scalar::Integer;
use hardedge_core::univariate::UniPoly;
use hardedge_core::{Field, Rational, Real, Scalar};

use crate::params::{all_exact, field, grid, required_scalar};
use crate::{usage, CmdResult, EnsembleFlags, Failure, Format};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LawEnsemble {
    Laguerre,
    Jacobi,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stat {
    Cdf,
    Pdf,
    LargestCdf,
}

#[derive(Args, Debug)]
pub struct LawArgs {
    #[arg(value_enum)]
    pub ensemble: LawEnsemble,
    #[arg(value_enum)]
    pub stat: Stat,
    #[command(flatten)]
    pub params: EnsembleFlags,
    /// Evaluation grid `lo:hi:step`.
    #[arg(long)]
    pub grid: Option<String>,
}

/// Parsed ensemble parameters: `n`, then beta and the gammas in flag order.
pub struct Parsed {
    pub n: usize,
    pub values: Vec<Scalar>,
}

pub fn parse_ensemble(laguerre: bool, p: &EnsembleFlags) -> Result<Parsed, Failure> {
    let n = p.n.ok_or_else(|| usage("-n is required here"))?;
    let mut values = vec![required_scalar("beta", &p.beta)?];
    if laguerre {
        values.push(required_scalar("gamma", &p.gamma)?);
    } else {
        values.push(required_scalar("gamma1", &p.gamma1)?);
        values.push(required_scalar("gamma2", &p.gamma2)?);
    }
    Ok(Parsed { n, values })
}

pub fn build<F: Field>(ensemble: LawEnsemble, stat: Stat, p: &Parsed) -> Result<EigLaw<F>, Failure> {
    let v = p.values.iter().map(field::<F>).collect::<Result<Vec<F>, _>>()?;
    let n = p.n;
    Ok(match (ensemble, stat) {
        (LawEnsemble::Laguerre, Stat::Cdf) => laguerre_smallest_cdf(n, &v[0], &v[1])?,
        (LawEnsemble::Laguerre, Stat::Pdf) => laguerre_smallest_pdf(n, &v[0], &v[1])?,
        (LawEnsemble::Laguerre, Stat::LargestCdf) => {
            return Err(usage("largest-cdf is only available for the Jacobi ensemble"))
        }
        (LawEnsemble::Jacobi, Stat::Cdf) => jacobi_smallest_cdf(n, &v[0], &v[1], &v[2])?,
        (LawEnsemble::Jacobi, Stat::Pdf) => jacobi_smallest_pdf(n, &v[0], &v[1], &v[2])?,
        (LawEnsemble::Jacobi, Stat::LargestCdf) => jacobi_largest_cdf(n, &v[0], &v[1], &v[2])?,
    })
}

pub fn run(a: &LawArgs, fmt: Format) -> CmdResult {
    let parsed = parse_ensemble(a.ensemble == LawEnsemble::Laguerre, &a.params)?;
    let grid = a.grid.as_deref().map(grid).transpose()?;
    if fmt == Format::Csv && grid.is_none() {
        return Err(usage("--format csv needs --grid"));
    }
    if all_exact(&parsed.values) {
        render(&build::<Rational>(a.ensemble, a.stat, &parsed)?, grid.as_deref(), fmt)
    } else {
        render(&build::<Real>(a.ensemble, a.stat, &parsed)?, grid.as_deref(), fmt)
    }
}

fn render<F: Field>(law: &EigLaw<F>, grid: Option<&[Rational]>, fmt: Format) -> CmdResult {
    let real = law.to_real();
    let points: Vec<Real> = grid.unwrap_or_default().iter().map(Real::from_rational).collect();
    Ok(match fmt {
        Format::Csv => real.to_csv(&points)?,
        Format::Json => {
            let law_json = LawJson::from_law(law);
            match grid {
                None => format!("{}\n", law_json.to_json_string()?),
                Some(_) => {
                    let rows = values(&real, &points)?
                        .into_iter()
                        .map(|(x, v)| serde_json::json!({ "x": x, "value": v }))
                        .collect::<Vec<_>>();
                    let law_value = serde_json::to_value(law_json).map_err(|e| usage(e.to_string()))?;
                    let value = serde_json::json!({ "law": law_value, "grid": rows });
                    format!("{}\n", serde_json::to_string_pretty(&value).map_err(|e| usage(e.to_string()))?)
                }
            }
        }
        Format::Human => {
            let mut out = format!("{} = {}\n", lhs(law.kind), closed_form(law));
            for (x, v) in values(&real, &points)? {
                out.push_str(&format!("{x}\t{v}\n"));
            }
            out
        }
    })
}

fn values(law: &EigLaw<Real>, points: &[Real]) -> Result<Vec<(String, String)>, Failure> {
    points.iter().map(|x| Ok((x.to_decimal(17), law.eval(x)?.to_decimal(20)))).collect()
}

fn lhs(kind: LawKind) -> &'static str {
    match kind {
        LawKind::LaguerreCdf | LawKind::JacobiCdf => "F(x)",
        LawKind::LaguerrePdf | LawKind::JacobiPdf => "f(x)",
        LawKind::JacobiLargestCdf => "F_max(x)",
    }
}

fn exponent<F: Field>(v: &F) -> String {
    match v.to_integer() {
        Some(k) => k.to_string(),
        None => format!("({v})"),
    }
}

/// The law with the constant folded into an integer polynomial over a
/// common denominator when the field is exact.
pub fn closed_form<F: Field>(law: &EigLaw<F>) -> String {
    let mut factors = Vec::new();
    if !law.power.is_zero() {
        factors.push(format!("x^{}", exponent(&law.power)));
    }
    if let Some(r) = &law.exp_rate {
        if *r == F::one() {
            factors.push("exp(-x)".to_string());
        } else {
            factors.push(format!("exp(-{}*x)", exponent(r)));
        }
    }
    if let Some(q) = law.one_minus_x.as_ref().filter(|q| !q.is_zero()) {
        factors.push(format!("(1 - x)^{}", exponent(q)));
    }
    let exact: Option<Vec<Rational>> =
        law.poly.coeffs().iter().map(|c| (c.clone() * law.constant.clone()).to_rational()).collect();
    let mut denom = None;
    match exact {
        Some(coeffs) => {
            let d = coeffs.iter().fold(Integer::from(1), |acc, c| acc.lcm(c.denom()));
            let scaled = UniPoly::new(
                coeffs.iter().map(|c| c * Rational::from(d.clone()) ).collect(),
            );
            if scaled != UniPoly::one() {
                factors.push(format!("({scaled})"));
            }
            if d != 1 {
                denom = Some(d.to_string());
            }
        }
        None => {
            if law.constant != F::one() {
                factors.insert(0, format!("({})", law.constant));
            }
            if law.poly != UniPoly::one() {
                factors.push(format!("({})", law.poly));
            }
        }
    }
    let mut body = if factors.is_empty() { "1".to_string() } else { factors.join(" * ") };
    if let Some(d) = denom {
        body = format!("{body} / {d}");
    }
    if matches!(law.kind, LawKind::LaguerreCdf | LawKind::JacobiCdf) {
        format!("1 - {body}")
    } else {
        body
    }
}
