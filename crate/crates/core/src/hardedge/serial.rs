use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mvop::DECIMAL_DIGITS;
use crate::scalar::Field;
use crate::univariate::UniPoly;

use super::{EigLaw, Ensemble, LawKind};

/// Ensemble parameters as strings (`p/q` or decimal).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub n: usize,
    pub beta: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma1: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma2: Option<String>,
}

/// On-disk form of an [`EigLaw`]; numbers are rational strings for exact
/// laws and decimal strings otherwise.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LawJson {
    pub kind: String,
    pub params: ParamsJson,
    pub constant: String,
    pub power_exponent: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exp_rate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub one_minus_x_exponent: Option<String>,
    pub poly_coeffs: Vec<String>,
}

fn render<F: Field>(v: &F) -> String {
    match v.to_rational() {
        Some(r) => r.to_string(),
        None => v.to_decimal(DECIMAL_DIGITS),
    }
}

fn parse<F: Field>(s: &str) -> Result<F> {
    if s.contains('/') {
        let r: rug::Rational = s.trim().parse().map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}")))?;
        Ok(F::from_rational(&r))
    } else {
        F::parse_decimal(s.trim())
    }
}

impl LawJson {
    pub fn from_law<F: Field>(law: &EigLaw<F>) -> Self {
        let params = match &law.params {
            Ensemble::Laguerre { n, beta, gamma } => {
                ParamsJson { n: *n, beta: render(beta), gamma: Some(render(gamma)), gamma1: None, gamma2: None }
            }
            Ensemble::Jacobi { n, beta, gamma1, gamma2 } => ParamsJson {
                n: *n,
                beta: render(beta),
                gamma: None,
                gamma1: Some(render(gamma1)),
                gamma2: Some(render(gamma2)),
            },
        };
        LawJson {
            kind: law.kind.name().into(),
            params,
            constant: render(&law.constant),
            power_exponent: render(&law.power),
            exp_rate: law.exp_rate.as_ref().map(render),
            one_minus_x_exponent: law.one_minus_x.as_ref().map(render),
            poly_coeffs: law.poly.coeffs().iter().map(render).collect(),
        }
    }

    pub fn to_law<F: Field>(&self) -> Result<EigLaw<F>> {
        let kind = LawKind::from_name(&self.kind)?;
        let p = &self.params;
        let need = |v: &Option<String>, name: &str| -> Result<F> {
            v.as_deref().ok_or_else(|| Error::Parse(format!("missing parameter {name}"))).and_then(parse)
        };
        let params = if kind.is_laguerre() {
            Ensemble::Laguerre { n: p.n, beta: parse(&p.beta)?, gamma: need(&p.gamma, "gamma")? }
        } else {
            Ensemble::Jacobi {
                n: p.n,
                beta: parse(&p.beta)?,
                gamma1: need(&p.gamma1, "gamma1")?,
                gamma2: need(&p.gamma2, "gamma2")?,
            }
        };
        let poly = UniPoly::new(self.poly_coeffs.iter().map(|c| parse(c)).collect::<Result<_>>()?);
        Ok(EigLaw {
            kind,
            params,
            constant: parse(&self.constant)?,
            power: parse(&self.power_exponent)?,
            exp_rate: self.exp_rate.as_deref().map(parse).transpose()?,
            one_minus_x: self.one_minus_x_exponent.as_deref().map(parse).transpose()?,
            poly,
        })
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
