use std::collections::BTreeMap;
use std::sync::Arc;

use crate::combinat::{dominated_by, factorial, gen_pochhammer, hook_product_j, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::scalar::Field;

use super::SymmetricPoly;

/// A Jack polynomial `C_kappa^beta` in `n_vars` variables.
#[derive(Clone, Debug)]
pub struct JackIndex<F> {
    pub kappa: Partition,
    pub beta: F,
    pub n_vars: usize,
}

impl<F: Field> JackIndex<F> {
    pub fn new(kappa: Partition, beta: F, n_vars: usize) -> Result<Self> {
        if !beta.is_positive() {
            return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
        }
        if kappa.len() > n_vars {
            return Err(Error::Parameter(format!("partition {kappa} has more than {n_vars} parts")));
        }
        Ok(JackIndex { kappa, beta, n_vars })
    }

    pub fn expand(&self) -> Result<Arc<SymmetricPoly<F>>> {
        jack_expand(&self.kappa, &self.beta, self.n_vars)
    }
}

/// `sum_i lambda_i (lambda_i - 1 - beta (i - 1))`, the part of the operator
/// eigenvalue that varies within one degree.
fn rho<F: Field>(lambda: &[u32], beta: &F) -> F {
    let mut acc = F::zero();
    for (i, &l) in lambda.iter().enumerate() {
        if l == 0 {
            continue;
        }
        let t = F::from_i64(l as i64 - 1) - beta.mul_ref(&F::from_i64(i as i64));
        acc += &(t * F::from_i64(l as i64));
    }
    acc
}

/// Coefficient of `m_kappa` in `C_kappa`, from the hook formula.
pub fn jack_leading_coeff<F: Field>(kappa: &Partition, beta: &F) -> Result<F> {
    let alpha = F::from_i64(2) / beta.clone();
    let k = kappa.weight();
    let mut den = F::one();
    for (i, j) in kappa.boxes() {
        let s = kappa.box_stat(i, j);
        den *= &(F::from_i64(s.leg as i64) + alpha.mul_ref(&F::from_i64(1 + s.arm as i64)));
    }
    Ok(alpha.powi(k as i64) * F::from_integer(&factorial(k)) / den)
}

/// Monic eigenfunction: coefficients relative to `m_kappa = 1`.
fn monic_jack<F: Field>(kappa: &Partition, beta: &F, n: usize) -> Result<BTreeMap<Partition, F>> {
    let k = kappa.weight();
    let rho_kappa = rho(&kappa.padded(n), beta);
    let mut coeffs: BTreeMap<Partition, F> = BTreeMap::new();
    coeffs.insert(kappa.clone(), F::one());
    // partitions_of yields reverse-lexicographic order, so every partition a
    // target depends on (which dominates it) has been handled already.
    for nu in partitions_of(k, n) {
        if nu == *kappa || !dominated_by(&nu, kappa) {
            continue;
        }
        let v = nu.padded(n);
        let denom = rho_kappa.clone() - rho(&v, beta);
        if denom.is_zero() {
            return Err(Error::Internal(format!("eigenvalue collision between {kappa} and {nu}")));
        }
        let mut sum = F::zero();
        for i in 0..n {
            for j in i + 1..n {
                for t in 1..=v[j] {
                    let mut w = v.clone();
                    w[i] += t;
                    w[j] -= t;
                    let mu = Partition::new(w);
                    if let Some(c) = coeffs.get(&mu) {
                        let weight = F::from_i64(v[i] as i64 - v[j] as i64 + 2 * t as i64);
                        sum += &(c.mul_ref(&weight));
                    }
                }
            }
        }
        if !sum.is_zero() {
            let c = sum * beta.clone() / denom;
            coeffs.insert(nu, c);
        }
    }
    Ok(coeffs)
}

/// Computes and caches every `C_kappa^beta` of degree `k` in `n` variables.
///
/// The overall scale of each eigenfunction is fixed by matching
/// `(x_1 + ... + x_n)^k = sum_kappa C_kappa`, solved top-down in
/// lexicographic order, and checked against the hook formula.
fn jack_degree<F: Field>(k: u32, beta: &F, n: usize) -> Result<()> {
    let parts = partitions_of(k, n);
    let monic: Vec<(Partition, BTreeMap<Partition, F>)> =
        parts.iter().map(|kappa| monic_jack(kappa, beta, n).map(|c| (kappa.clone(), c))).collect::<Result<_>>()?;
    let target = SymmetricPoly::<F>::power_sum_power(n, k);
    let mut scales: Vec<F> = Vec::with_capacity(monic.len());
    for (idx, (lambda, _)) in monic.iter().enumerate() {
        let mut s = target.coeff(lambda);
        for (prev_scale, (_, prev)) in scales.iter().zip(&monic[..idx]) {
            if let Some(c) = prev.get(lambda) {
                s -= &prev_scale.mul_ref(c);
            }
        }
        scales.push(s);
    }
    let cache = &F::caches().jack;
    let bkey = beta.cache_key();
    for ((kappa, coeffs), s) in monic.into_iter().zip(scales) {
        let expected = jack_leading_coeff(&kappa, beta)?;
        let agrees = if F::EXACT {
            s == expected
        } else {
            ((s.clone() - expected.clone()).abs().to_f64()) <= 1e-30 * expected.abs().to_f64()
        };
        if !agrees {
            return Err(Error::Internal(format!("normalization of C_{kappa} disagrees with the hook formula: {s} vs {expected}")));
        }
        let mut poly = SymmetricPoly::zero(n);
        for (lambda, c) in coeffs {
            poly.add_term(lambda, c * s.clone());
        }
        cache.insert((kappa.parts().to_vec(), bkey.clone(), n), poly);
    }
    Ok(())
}

/// `C_kappa^beta` in the monomial basis of `n_vars` variables (memoized).
pub fn jack_expand<F: Field>(kappa: &Partition, beta: &F, n_vars: usize) -> Result<Arc<SymmetricPoly<F>>> {
    if !beta.is_positive() {
        return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
    }
    if kappa.len() > n_vars {
        return Err(Error::Parameter(format!("partition {kappa} has more than {n_vars} parts")));
    }
    let key = (kappa.parts().to_vec(), beta.cache_key(), n_vars);
    let cache = &F::caches().jack;
    if let Some(p) = cache.get(&key) {
        return Ok(p);
    }
    jack_degree(kappa.weight(), beta, n_vars)?;
    match cache.get(&key) {
        Some(p) => Ok(p),
        // The cache was too small to hold the whole degree; fall back to a
        // direct computation of this one polynomial.
        None => {
            let coeffs = monic_jack(kappa, beta, n_vars)?;
            let s = jack_leading_coeff(kappa, beta)?;
            let mut poly = SymmetricPoly::zero(n_vars);
            for (lambda, c) in coeffs {
                poly.add_term(lambda, c * s.clone());
            }
            Ok(cache.insert(key, poly))
        }
    }
}

/// `C_kappa^beta(1, ..., 1)` in `n` variables.
pub fn jack_at_identity<F: Field>(kappa: &Partition, beta: &F, n: usize) -> Result<F> {
    let k = kappa.weight();
    let alpha = F::from_i64(2) / beta.clone();
    let a = beta.clone() * F::from_i64(n as i64) / F::from_i64(2);
    Ok(alpha.powi(2 * k as i64) * F::from_integer(&factorial(k)) * gen_pochhammer(&a, kappa, beta)?
        / hook_product_j(kappa, beta)?)
}

/// `C_kappa^beta(x I_n) = x^{|kappa|} C_kappa^beta(I_n)`.
pub fn jack_at_scalar_matrix<F: Field>(kappa: &Partition, beta: &F, n: usize, x: &F) -> Result<F> {
    Ok(jack_at_identity(kappa, beta, n)? * x.powi(kappa.weight() as i64))
}

/// Coefficients `d_kappa` with `f = sum d_kappa C_kappa^beta`.
pub fn to_jack_basis<F: Field>(f: &SymmetricPoly<F>, beta: &F) -> Result<BTreeMap<Partition, F>> {
    let n = f.n_vars();
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    let mut guard = 0usize;
    while let Some((lambda, c)) = rest.leading_term().map(|(l, c)| (l.clone(), c.clone())) {
        let jack = jack_expand(&lambda, beta, n)?;
        let d = c / jack.coeff(&lambda);
        rest.add_scaled(&jack, &-d.clone());
        // Inexact fields leave rounding residue on the leading monomial.
        if !F::EXACT {
            rest.terms.remove(&lambda);
        }
        out.insert(lambda, d);
        guard += 1;
        if guard > 1_000_000 {
            return Err(Error::Internal("Jack back-substitution did not terminate".into()));
        }
    }
    Ok(out)
}
