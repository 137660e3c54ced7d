//! Products and quotients of Gamma values, evaluated exactly where possible.
//!
//! Normalization constants are ratios of many Gamma factors whose arguments
//! often differ by integers. Collecting them symbolically first lets those
//! pairs collapse into Pochhammer symbols, so many ratios come out as exact
//! rationals even when individual factors are transcendental.

use crate::combinat::rising;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// `factor * 2^pow2 * pi^pi_exp * prod Gamma(num) / prod Gamma(den)`.
#[derive(Clone, Debug)]
pub struct GammaRatio<F> {
    factor: F,
    num: Vec<F>,
    den: Vec<F>,
    pow2: F,
    pi_exp: F,
}

impl<F: Field> Default for GammaRatio<F> {
    fn default() -> Self {
        Self::one()
    }
}

impl<F: Field> GammaRatio<F> {
    pub fn one() -> Self {
        GammaRatio { factor: F::one(), num: Vec::new(), den: Vec::new(), pow2: F::zero(), pi_exp: F::zero() }
    }

    pub fn gamma(mut self, a: F) -> Self {
        self.num.push(a);
        self
    }

    pub fn over_gamma(mut self, a: F) -> Self {
        self.den.push(a);
        self
    }

    pub fn times(mut self, c: &F) -> Self {
        self.factor *= c;
        self
    }

    pub fn pow2(mut self, e: &F) -> Self {
        self.pow2 += e;
        self
    }

    pub fn pi_pow(mut self, e: &F) -> Self {
        self.pi_exp += e;
        self
    }

    pub fn mul(mut self, other: &GammaRatio<F>) -> Self {
        self.factor *= &other.factor;
        self.num.extend(other.num.iter().cloned());
        self.den.extend(other.den.iter().cloned());
        self.pow2 += &other.pow2;
        self.pi_exp += &other.pi_exp;
        self
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.factor.is_zero() {
            return Err(Error::Domain("inverse of a zero Gamma ratio".into()));
        }
        Ok(GammaRatio {
            factor: self.factor.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
            pow2: -self.pow2.clone(),
            pi_exp: -self.pi_exp.clone(),
        })
    }

    pub fn div(self, other: &GammaRatio<F>) -> Result<Self> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Evaluates the ratio. Gamma arguments that differ by integers are
    /// paired into rising factorials first; leftover arguments must be
    /// positive integers in an exact field, or `Error::NotExact` is returned.
    pub fn eval(&self) -> Result<F> {
        for a in self.num.iter().chain(&self.den) {
            if a.is_nonpositive_integer() {
                return Err(Error::Domain(format!("Gamma pole at {a}")));
            }
        }
        let mut acc = self.factor.clone();
        let mut den: Vec<Option<F>> = self.den.iter().cloned().map(Some).collect();
        let mut leftover_num = Vec::new();
        for a in &self.num {
            let partner = den.iter().position(|b| b.as_ref().is_some_and(|b| (a.clone() - b.clone()).to_integer().is_some()));
            match partner {
                Some(idx) => {
                    let b = den[idx].take().expect("partner present");
                    let shift = (a.clone() - b.clone()).to_integer().expect("integer shift");
                    if shift >= 0 {
                        acc *= &rising(&b, shift as u32);
                    } else {
                        acc /= &rising(a, (-shift) as u32);
                    }
                }
                None => leftover_num.push(a.clone()),
            }
        }
        for a in leftover_num {
            acc *= &a.gamma()?;
        }
        for b in den.into_iter().flatten() {
            acc /= &b.gamma()?;
        }
        if !self.pow2.is_zero() {
            acc *= &F::from_i64(2).powf(&self.pow2)?;
        }
        if !self.pi_exp.is_zero() {
            acc *= &F::pi()?.powf(&self.pi_exp)?;
        }
        Ok(acc)
    }
}
