//! Hypergeometric closed forms used as independent checks of the laws.

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::symfun::hypergeometric_pfq;

fn jacobi_2f1_params<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> (F, F, F) {
    let shift = beta.clone() * F::from_i64(n as i64 - 1);
    let a = gamma2.clone() + F::one() + shift.clone() / F::from_i64(2);
    let b = -gamma1.clone();
    let c = gamma2.clone() + F::from_i64(2) + shift;
    (a, b, c)
}

fn terminating_2f1<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F, t: &F) -> Result<F> {
    let g1 = match gamma1.to_integer() {
        Some(k) if k >= 0 => k as u32,
        _ => return Err(Error::Unsupported(format!("gamma1 = {gamma1} does not terminate the series"))),
    };
    let (a, b, c) = jacobi_2f1_params(n, beta, gamma1, gamma2);
    let point = vec![t.clone(); n];
    let h = hypergeometric_pfq(&[a, b], &[c], beta, &point, g1 * n as u32)?;
    if !h.terminated {
        return Err(Error::Internal("terminating series was truncated".into()));
    }
    Ok(h.value)
}

/// `1 / 2F1(a, -g1; c; I_n)`, the factor that makes the series law equal 1 at `x = 0`.
pub fn jacobi_cdf_normalizer<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> Result<F> {
    let at_one = terminating_2f1(n, beta, gamma1, gamma2, &F::one())?;
    if at_one.is_zero() {
        return Err(Error::Domain("hypergeometric normalizer vanishes".into()));
    }
    Ok(at_one.recip())
}

/// Smallest-eigenvalue CDF of the beta-Jacobi ensemble as a terminating
/// `2F1` of matrix argument `(1-x) I_n`.
pub fn oracle_jacobi_cdf_hypergeometric<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F, x: &F) -> Result<F> {
    if n == 0 || !beta.is_positive() {
        return Err(Error::Parameter("need n >= 1 and beta > 0".into()));
    }
    if *x <= F::zero() {
        return Ok(F::zero());
    }
    if *x >= F::one() {
        return Ok(F::one());
    }
    let (a, _, _) = jacobi_2f1_params(n, beta, gamma1, gamma2);
    let u = F::one() - x.clone();
    let series = terminating_2f1(n, beta, gamma1, gamma2, &u)?;
    let k = jacobi_cdf_normalizer(n, beta, gamma1, gamma2)?;
    let tail = k * u.powf(&(F::from_i64(n as i64) * a))? * series;
    Ok(F::one() - tail)
}

/// Unnormalized smallest-eigenvalue density of the real (`beta = 1`) Laguerre
/// ensemble, `x^{n gamma} e^{-nx/2} 2F0(-gamma, 1 + n/2; -2 I_{n-1} / x)`.
/// Only ratios of values are meaningful.
pub fn oracle_laguerre_pdf_beta1<F: Field>(n: usize, gamma: &F, x: &F) -> Result<F> {
    if n == 0 {
        return Err(Error::Parameter("need n >= 1".into()));
    }
    if *x <= F::zero() {
        return Err(Error::Domain(format!("density oracle needs x > 0, got {x}")));
    }
    let g = match gamma.to_integer() {
        Some(k) if k >= 0 => k as u32,
        _ => return Err(Error::Unsupported(format!("gamma = {gamma} does not terminate the series"))),
    };
    let nf = F::from_i64(n as i64);
    let prefactor = x.powf(&(nf.clone() * gamma.clone()))? * (-(nf.clone() * x.clone()) / F::from_i64(2)).exp()?;
    if n == 1 {
        return Ok(prefactor);
    }
    let point = vec![-F::from_i64(2) / x.clone(); n - 1];
    let a = [-gamma.clone(), F::one() + nf / F::from_i64(2)];
    let h = hypergeometric_pfq(&a, &[], &F::one(), &point, g * (n as u32 - 1))?;
    Ok(prefactor * h.value)
}
