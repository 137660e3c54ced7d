use serde::{Deserialize, Serialize};

use crate::combinat::Partition;
use crate::error::{Error, Result};
use crate::scalar::{Field, Rational};
use crate::symfun::SymmetricPoly;

/// Significant digits written for real coefficients.
pub const DECIMAL_DIGITS: usize = 60;

/// One coefficient of a serialized polynomial.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyTerm {
    Exact { partition: Vec<u32>, num: String, den: String },
    Real { partition: Vec<u32>, value_decimal: String },
}

impl PolyTerm {
    pub fn partition(&self) -> &[u32] {
        match self {
            PolyTerm::Exact { partition, .. } | PolyTerm::Real { partition, .. } => partition,
        }
    }
}

/// A symmetric polynomial in the monomial basis, as stored on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n_vars: usize,
    pub basis: String,
    pub field: String,
    pub terms: Vec<PolyTerm>,
}

impl PolyJson {
    /// Terms are written from the highest partition down.
    pub fn from_poly<F: Field>(p: &SymmetricPoly<F>) -> Self {
        let field = if F::EXACT { "rational" } else { "real" };
        let terms = p
            .terms()
            .iter()
            .rev()
            .map(|(lambda, c)| match c.to_rational() {
                Some(r) => PolyTerm::Exact {
                    partition: lambda.parts().to_vec(),
                    num: r.numer().to_string(),
                    den: r.denom().to_string(),
                },
                None => PolyTerm::Real { partition: lambda.parts().to_vec(), value_decimal: c.to_decimal(DECIMAL_DIGITS) },
            })
            .collect();
        PolyJson { n_vars: p.n_vars(), basis: "monomial".into(), field: field.into(), terms }
    }

    pub fn to_poly<F: Field>(&self) -> Result<SymmetricPoly<F>> {
        if self.basis != "monomial" {
            return Err(Error::Parse(format!("unsupported basis {:?}", self.basis)));
        }
        let mut out = SymmetricPoly::zero(self.n_vars);
        for term in &self.terms {
            let lambda = Partition::from_parts(term.partition().to_vec())?;
            if lambda.len() > self.n_vars {
                return Err(Error::Parse(format!("term {lambda} exceeds {} variables", self.n_vars)));
            }
            let c = match term {
                PolyTerm::Exact { num, den, .. } => {
                    let q: Rational = format!("{num}/{den}")
                        .parse()
                        .map_err(|e| Error::Parse(format!("bad coefficient {num}/{den}: {e}")))?;
                    F::from_rational(&q)
                }
                PolyTerm::Real { value_decimal, .. } => F::parse_decimal(value_decimal)?,
            };
            out.add_term(lambda, c);
        }
        Ok(out)
    }

    pub fn to_json_string(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}
