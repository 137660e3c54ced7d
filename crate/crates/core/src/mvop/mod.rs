//! Multivariate Laguerre and Jacobi polynomials, Selberg constants and the
//! closed-form special values that anchor their normalizations.

mod construct;
mod serial;

use std::sync::Arc;

use crate::combinat::{factorial, gen_pochhammer, hook_product_j, multivariate_gamma, square_partition, Partition};
use crate::error::{Error, Result};
use crate::gamma::GammaRatio;
use crate::scalar::Field;
use crate::symfun::{jack_at_identity, SymmetricPoly};

pub use construct::{jacobi_poly, laguerre_poly};
pub use serial::{PolyJson, PolyTerm, DECIMAL_DIGITS};

/// Parameters of the Laguerre weight `prod |x_i - x_j|^beta prod x_i^gamma e^{-x_i/2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaguerreParams<F> {
    pub n_vars: usize,
    pub gamma: F,
    pub beta: F,
}

/// Parameters of the Jacobi weight `prod |x_i - x_j|^beta prod x_i^gamma1 (1 - x_i)^gamma2`.
#[derive(Clone, Debug, PartialEq)]
pub struct JacobiParams<F> {
    pub n_vars: usize,
    pub gamma1: F,
    pub gamma2: F,
    pub beta: F,
}

fn check_beta<F: Field>(beta: &F) -> Result<()> {
    if beta.is_positive() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("beta must be positive, got {beta}")))
    }
}

fn check_exponent<F: Field>(name: &str, g: &F) -> Result<()> {
    if g.clone() + F::one() > F::zero() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("{name} must exceed -1, got {g}")))
    }
}

impl<F: Field> LaguerreParams<F> {
    pub fn new(n_vars: usize, gamma: F, beta: F) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::Parameter("need at least one variable".into()));
        }
        check_beta(&beta)?;
        check_exponent("gamma", &gamma)?;
        Ok(LaguerreParams { n_vars, gamma, beta })
    }

    pub(crate) fn cache_key(&self, kappa: &Partition) -> String {
        format!("L|{kappa}|{}|{}|{}", self.gamma.cache_key(), self.beta.cache_key(), self.n_vars)
    }
}

impl<F: Field> JacobiParams<F> {
    pub fn new(n_vars: usize, gamma1: F, gamma2: F, beta: F) -> Result<Self> {
        if n_vars == 0 {
            return Err(Error::Parameter("need at least one variable".into()));
        }
        check_beta(&beta)?;
        check_exponent("gamma1", &gamma1)?;
        check_exponent("gamma2", &gamma2)?;
        Ok(JacobiParams { n_vars, gamma1, gamma2, beta })
    }

    pub(crate) fn cache_key(&self, kappa: &Partition) -> String {
        format!(
            "J|{kappa}|{}|{}|{}|{}",
            self.gamma1.cache_key(),
            self.gamma2.cache_key(),
            self.beta.cache_key(),
            self.n_vars
        )
    }
}

/// A weight of either family.
#[derive(Clone, Debug, PartialEq)]
pub enum Weight<F> {
    Laguerre(LaguerreParams<F>),
    Jacobi(JacobiParams<F>),
}

impl<F: Field> Weight<F> {
    pub fn n_vars(&self) -> usize {
        match self {
            Weight::Laguerre(p) => p.n_vars,
            Weight::Jacobi(p) => p.n_vars,
        }
    }

    pub fn beta(&self) -> &F {
        match self {
            Weight::Laguerre(p) => &p.beta,
            Weight::Jacobi(p) => &p.beta,
        }
    }
}

fn half<F: Field>(v: &F) -> F {
    v.clone() / F::from_i64(2)
}

/// The Laguerre Selberg constant as an unevaluated Gamma ratio.
pub fn selberg_ratio_laguerre<F: Field>(n: usize, gamma: &F, beta: &F) -> Result<GammaRatio<F>> {
    check_beta(beta)?;
    check_exponent("gamma", gamma)?;
    let nf = F::from_i64(n as i64);
    let exponent = -(nf.clone() * (gamma.clone() + F::one() + half(beta) * F::from_i64(n as i64 - 1)));
    let mut r = GammaRatio::one().pow2(&exponent);
    for i in 0..n {
        let fi = F::from_i64(i as i64);
        r = r
            .gamma(F::one() + half(beta))
            .over_gamma(F::one() + half(beta) * F::from_i64(i as i64 + 1))
            .over_gamma(gamma.clone() + F::one() + half(beta) * fi);
    }
    Ok(r)
}

/// The Jacobi Selberg constant as an unevaluated Gamma ratio.
pub fn selberg_ratio_jacobi<F: Field>(n: usize, gamma1: &F, gamma2: &F, beta: &F) -> Result<GammaRatio<F>> {
    check_beta(beta)?;
    check_exponent("gamma1", gamma1)?;
    check_exponent("gamma2", gamma2)?;
    let mut r = GammaRatio::one();
    for i in 0..n {
        let fi = F::from_i64(i as i64);
        r = r
            .gamma(F::one() + half(beta))
            .gamma(gamma1.clone() + gamma2.clone() + half(beta) * F::from_i64((n + i) as i64 - 1) + F::from_i64(2))
            .over_gamma(F::one() + half(beta) * F::from_i64(i as i64 + 1))
            .over_gamma(F::one() + gamma1.clone() + half(beta) * fi.clone())
            .over_gamma(F::one() + gamma2.clone() + half(beta) * fi);
    }
    Ok(r)
}

/// `Z^{L,beta}_{n,gamma}`, the reciprocal of the Laguerre weight's total mass.
pub fn selberg_const_laguerre<F: Field>(n: usize, gamma: &F, beta: &F) -> Result<F> {
    selberg_ratio_laguerre(n, gamma, beta)?.eval()
}

/// `Z^{J,beta}_{n,gamma1,gamma2}`, the reciprocal of the Jacobi weight's total mass.
pub fn selberg_const_jacobi<F: Field>(n: usize, gamma1: &F, gamma2: &F, beta: &F) -> Result<F> {
    selberg_ratio_jacobi(n, gamma1, gamma2, beta)?.eval()
}

/// `L_{kappa,gamma}^beta(0, ..., 0)` in `n` variables.
pub fn laguerre_at_zero<F: Field>(kappa: &Partition, gamma: &F, beta: &F, n: usize) -> Result<F> {
    check_beta(beta)?;
    let k = kappa.weight();
    let alpha = F::from_i64(2) / beta.clone();
    let a1 = beta.clone() * F::from_i64(n as i64) / F::from_i64(2);
    let a2 = F::one() + gamma.clone() + half(beta) * F::from_i64(n as i64 - 1);
    Ok(alpha.powi(2 * k as i64) * F::from_integer(&factorial(k)) / hook_product_j(kappa, beta)?
        * gen_pochhammer(&a1, kappa, beta)?
        * gen_pochhammer(&a2, kappa, beta)?)
}

/// The squared norm of `L_{kappa,gamma}^beta` under the Laguerre weight.
pub fn laguerre_norm_sq<F: Field>(kappa: &Partition, gamma: &F, beta: &F, n: usize) -> Result<F> {
    check_beta(beta)?;
    let k = kappa.weight() as i64;
    let nf = F::from_i64(n as i64);
    let shift = F::one() + gamma.clone() + half(beta) * F::from_i64(n as i64 - 1);
    let a1 = beta.clone() * nf.clone() / F::from_i64(2);
    let exp2 = F::from_i64(2 * k) + nf.clone() * shift.clone();
    let kf = F::from_integer(&factorial(k as u32));
    let mut v = F::from_i64(2).powf(&exp2)? * kf.clone() * kf / (beta.powi(2 * k) * hook_product_j(kappa, beta)?)
        * gen_pochhammer(&a1, kappa, beta)?
        * gen_pochhammer(&shift, kappa, beta)?;
    v *= &multivariate_gamma(&(F::one() + a1), n, beta)?;
    v *= &multivariate_gamma(&shift, n, beta)?;
    v /= &(F::one() + half(beta)).gamma()?.powi(n as i64);
    Ok(v)
}

/// `E[C_kappa]` under the normalized weight (the integral divided by the total mass).
pub fn jack_expectation<F: Field>(kappa: &Partition, weight: &Weight<F>) -> Result<F> {
    let n = weight.n_vars();
    let beta = weight.beta();
    let at_one = jack_at_identity(kappa, beta, n)?;
    let shift_n = half(beta) * F::from_i64(n as i64 - 1);
    match weight {
        Weight::Laguerre(p) => {
            let a = p.gamma.clone() + F::one() + shift_n;
            Ok(F::from_i64(2).powi(kappa.weight() as i64) * gen_pochhammer(&a, kappa, beta)? * at_one)
        }
        Weight::Jacobi(p) => {
            let a = p.gamma1.clone() + F::one() + shift_n;
            let b = p.gamma1.clone() + p.gamma2.clone() + F::from_i64(2) + beta.clone() * F::from_i64(n as i64 - 1);
            let den = gen_pochhammer(&b, kappa, beta)?;
            if den.is_zero() {
                return Err(Error::Domain(format!("vanishing Pochhammer in the Jacobi moment of {kappa}")));
            }
            Ok(gen_pochhammer(&a, kappa, beta)? * at_one / den)
        }
    }
}

/// `int C_kappa^beta(x) w(x) dx` over the weight's domain.
pub fn jack_moment<F: Field>(kappa: &Partition, weight: &Weight<F>) -> Result<F> {
    let z = match weight {
        Weight::Laguerre(p) => selberg_const_laguerre(p.n_vars, &p.gamma, &p.beta)?,
        Weight::Jacobi(p) => selberg_const_jacobi(p.n_vars, &p.gamma1, &p.gamma2, &p.beta)?,
    };
    Ok(jack_expectation(kappa, weight)? / z)
}

/// Checks that `kappa` is a square partition `n^(nu)` and returns `(n, nu)`.
fn square_shape(kappa: &Partition) -> Result<(u32, u32)> {
    let n = kappa.part(0);
    if kappa.parts().iter().any(|&p| p != n) {
        return Err(Error::Contract(format!("{kappa} is not a square partition")));
    }
    Ok((n, kappa.len() as u32))
}

/// Moves `a` variables to zero: returns `(n^(nu+a), ratio)` with
/// `L_{n^(nu),gamma}(x) = ratio * L_{n^(nu+a), gamma - beta a/2}(x, 0, ..., 0)`.
pub fn reduce_vars_laguerre<F: Field>(kappa: &Partition, gamma: &F, beta: &F, a: u32) -> Result<(Partition, F)> {
    let (n, nu) = square_shape(kappa)?;
    let new_gamma = gamma.clone() - beta.clone() * F::from_i64(a as i64) / F::from_i64(2);
    check_exponent("reduced gamma", &new_gamma)?;
    let big = square_partition(n, nu + a);
    let left = laguerre_at_zero(kappa, gamma, beta, nu as usize)?;
    let right = laguerre_at_zero(&big, &new_gamma, beta, (nu + a) as usize)?;
    Ok((big, left / right))
}

/// Appends `a` zeros and `b` ones: returns `(n^(nu+a+b), ratio)` with
/// `P_{n^(nu),g1,g2}(x) = ratio * P_{n^(nu+a+b), g1 - beta a/2, g2 - beta b/2}(x, 0^a, 1^b)`.
pub fn reduce_vars_jacobi<F: Field>(
    kappa: &Partition,
    gamma1: &F,
    gamma2: &F,
    beta: &F,
    a: u32,
    b: u32,
) -> Result<(Partition, F)> {
    let (n, nu) = square_shape(kappa)?;
    let g1 = gamma1.clone() - beta.clone() * F::from_i64(a as i64) / F::from_i64(2);
    let g2 = gamma2.clone() - beta.clone() * F::from_i64(b as i64) / F::from_i64(2);
    check_exponent("reduced gamma1", &g1)?;
    check_exponent("reduced gamma2", &g2)?;
    let total = (nu + a + b) as usize;
    let big = square_partition(n, nu + a + b);
    let params = JacobiParams::new(total, g1, g2, beta.clone())?;
    let poly = jacobi_poly(&big, &params)?;
    let mut point = vec![F::zero(); total];
    for v in point.iter_mut().skip(nu as usize + a as usize) {
        *v = F::one();
    }
    let at = poly.eval(&point)?;
    if at.is_zero() {
        return Err(Error::Domain("reduced Jacobi polynomial vanishes at the anchor point".into()));
    }
    Ok((big, at.recip()))
}

/// `L` restricted to its first `m` variables, with the rest set to zero.
pub fn restrict<F: Field>(p: &Arc<SymmetricPoly<F>>, m: usize) -> SymmetricPoly<F> {
    p.restrict_zeros(m)
}
