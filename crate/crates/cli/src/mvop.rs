use clap::{Args, ValueEnum};
use hardedge_core::mvop::{jacobi_poly, laguerre_poly, JacobiParams, LaguerreParams, PolyJson};
use hardedge_core::symfun::{jack_expand, SymmetricPoly};
use hardedge_core::{Field, Partition, Rational, Real, Scalar};

use crate::params::{all_exact, field, kappa, required_scalar};
use crate::{usage, CmdResult, Format};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Laguerre,
    Jacobi,
    Jack,
}

#[derive(Args, Debug)]
pub struct MvopArgs {
    #[arg(value_enum)]
    pub family: Family,
    /// Partition, e.g. `2,1`.
    #[arg(long)]
    pub kappa: String,
    #[arg(long)]
    pub beta: String,
    /// Number of variables.
    #[arg(long)]
    pub nvars: usize,
    #[arg(long)]
    pub gamma: Option<String>,
    #[arg(long)]
    pub gamma1: Option<String>,
    #[arg(long)]
    pub gamma2: Option<String>,
}

struct Inputs {
    kappa: Partition,
    beta: Scalar,
    gammas: Vec<Scalar>,
}

pub fn run(a: &MvopArgs, fmt: Format) -> CmdResult {
    let beta = crate::params::scalar("beta", &a.beta)?;
    let gammas = match a.family {
        Family::Laguerre => vec![required_scalar("gamma", &a.gamma)?],
        Family::Jacobi => vec![required_scalar("gamma1", &a.gamma1)?, required_scalar("gamma2", &a.gamma2)?],
        Family::Jack => Vec::new(),
    };
    let inputs = Inputs { kappa: kappa(&a.kappa)?, beta, gammas };
    if a.nvars == 0 {
        return Err(usage("--nvars must be at least 1"));
    }
    if all_exact(std::iter::once(&inputs.beta).chain(&inputs.gammas)) {
        render(&build::<Rational>(a, &inputs)?, fmt)
    } else {
        render(&build::<Real>(a, &inputs)?, fmt)
    }
}

fn build<F: Field>(a: &MvopArgs, inputs: &Inputs) -> Result<SymmetricPoly<F>, crate::Failure> {
    let beta: F = field(&inputs.beta)?;
    let g = |i: usize| field::<F>(&inputs.gammas[i]);
    Ok(match a.family {
        Family::Laguerre => {
            let p = LaguerreParams::new(a.nvars, g(0)?, beta)?;
            (*laguerre_poly(&inputs.kappa, &p)?).clone()
        }
        Family::Jacobi => {
            let p = JacobiParams::new(a.nvars, g(0)?, g(1)?, beta)?;
            (*jacobi_poly(&inputs.kappa, &p)?).clone()
        }
        Family::Jack => (*jack_expand(&inputs.kappa, &beta, a.nvars)?).clone(),
    })
}

fn render<F: Field>(p: &SymmetricPoly<F>, fmt: Format) -> CmdResult {
    Ok(match fmt {
        Format::Human => format!("{p}\n"),
        Format::Json => format!("{}\n", PolyJson::from_poly(p).to_json_string()?),
        Format::Csv => {
            let mut out = String::from("partition,coefficient\n");
            for (lambda, c) in p.terms().iter().rev() {
                let parts: Vec<String> = lambda.parts().iter().map(u32::to_string).collect();
                let value = match c.to_rational() {
                    Some(r) => r.to_string(),
                    None => c.to_decimal(hardedge_core::mvop::DECIMAL_DIGITS),
                };
                out.push_str(&format!("\"{}\",{value}\n", parts.join(",")));
            }
            out
        }
    })
}
