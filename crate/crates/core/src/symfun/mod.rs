//! Symmetric polynomials in the monomial basis, Jack polynomials and
//! hypergeometric series of matrix argument.

mod hypergeom;
mod jack;

use std::collections::BTreeMap;
use std::fmt;

use rug::Integer;

use crate::combinat::{orbit_size, Partition};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::univariate::UniPoly;

pub use hypergeom::{hypergeometric_pfq, Hypergeometric};
pub use jack::{jack_at_identity, jack_at_scalar_matrix, jack_expand, jack_leading_coeff, to_jack_basis, JackIndex};

/// A symmetric polynomial `sum c_lambda m_lambda` in `n_vars` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricPoly<F> {
    n_vars: usize,
    pub(crate) terms: BTreeMap<Partition, F>,
}

impl<F: Field> SymmetricPoly<F> {
    pub fn zero(n_vars: usize) -> Self {
        SymmetricPoly { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: F) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(Partition::empty(), c);
        p
    }

    /// The monomial symmetric polynomial `m_lambda`.
    pub fn monomial(n_vars: usize, lambda: Partition) -> Result<Self> {
        let mut p = Self::zero(n_vars);
        p.try_add_term(lambda, F::one())?;
        Ok(p)
    }

    /// `(x_1 + ... + x_n)^k` expanded by the multinomial theorem.
    pub fn power_sum_power(n_vars: usize, k: u32) -> Self {
        let mut p = Self::zero(n_vars);
        for lambda in crate::combinat::partitions_of(k, n_vars) {
            let c = F::from_integer(&crate::combinat::multinomial(&lambda));
            p.add_term(lambda, c);
        }
        p
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (Partition, F)>) -> Result<Self> {
        let mut p = Self::zero(n_vars);
        for (lambda, c) in terms {
            p.try_add_term(lambda, c)?;
        }
        Ok(p)
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> &BTreeMap<Partition, F> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> F {
        self.terms.get(lambda).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|p| p.weight()).max()
    }

    /// The term with the largest partition in the (weight, lexicographic) order.
    pub fn leading_term(&self) -> Option<(&Partition, &F)> {
        self.terms.iter().next_back()
    }

    fn try_add_term(&mut self, lambda: Partition, c: F) -> Result<()> {
        if lambda.len() > self.n_vars {
            return Err(Error::Contract(format!("partition {lambda} is longer than {} variables", self.n_vars)));
        }
        self.add_term(lambda, c);
        Ok(())
    }

    /// Adds `c * m_lambda`; terms longer than `n_vars` vanish identically.
    pub fn add_term(&mut self, lambda: Partition, c: F) {
        if lambda.len() > self.n_vars || c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lambda) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&lambda);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymmetricPoly<F>, s: &F) {
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), c.mul_ref(s));
        }
    }

    pub fn scale(&self, s: &F) -> Self {
        let mut out = Self::zero(self.n_vars);
        out.add_scaled(self, s);
        out
    }

    pub fn add(&self, other: &SymmetricPoly<F>) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        Ok(out)
    }

    pub fn sub(&self, other: &SymmetricPoly<F>) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        Ok(out)
    }

    fn check_vars(&self, other: &SymmetricPoly<F>) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::Contract(format!("variable counts differ: {} vs {}", self.n_vars, other.n_vars)));
        }
        Ok(())
    }

    /// Evaluates at a point of length `n_vars`.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.n_vars {
            return Err(Error::Contract(format!("point has {} coordinates, expected {}", point.len(), self.n_vars)));
        }
        let mut acc = F::zero();
        for (lambda, c) in &self.terms {
            acc += &c.mul_ref(&monomial_eval(lambda, point));
        }
        Ok(acc)
    }

    /// Value at `x * I`.
    pub fn eval_scalar_matrix(&self, x: &F) -> F {
        self.diagonal().eval(x)
    }

    /// `f(x, ..., x)` as a univariate polynomial in `x`.
    pub fn diagonal(&self) -> UniPoly<F> {
        let deg = self.degree().unwrap_or(0) as usize;
        let mut coeffs = vec![F::zero(); deg + 1];
        for (lambda, c) in &self.terms {
            let k = lambda.weight() as usize;
            coeffs[k] += &c.mul_ref(&F::from_integer(&orbit_size(lambda, self.n_vars)));
        }
        UniPoly::new(coeffs)
    }

    /// `f(x_1, ..., x_m, 0, ..., 0)` as a polynomial in `m` variables.
    pub fn restrict_zeros(&self, m: usize) -> Self {
        let mut out = Self::zero(m);
        for (lambda, c) in &self.terms {
            if lambda.len() <= m {
                out.add_term(lambda.clone(), c.clone());
            }
        }
        out
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> SymmetricPoly<G> {
        let mut out = SymmetricPoly::zero(self.n_vars);
        for (lambda, c) in &self.terms {
            out.add_term(lambda.clone(), f(c));
        }
        out
    }

    /// Product in the monomial basis.
    pub fn mul(&self, other: &SymmetricPoly<F>) -> Result<Self> {
        msym_mul(self, other)
    }
}

/// `m_lambda` at a point: the sum over distinct rearrangements of the exponents.
pub fn monomial_eval<F: Field>(lambda: &Partition, point: &[F]) -> F {
    let n = point.len();
    let mut exps: Vec<u32> = lambda.padded(n);
    exps.sort_unstable();
    let mut acc = F::zero();
    loop {
        let mut term = F::one();
        for (x, &e) in point.iter().zip(&exps) {
            if e > 0 {
                term *= &x.powi(e as i64);
            }
        }
        acc += &term;
        if !next_permutation(&mut exps) {
            break;
        }
    }
    acc
}

/// Advances to the next lexicographic permutation; false after the last one.
pub(crate) fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Structure constants of `m_lambda * m_mu` in `n` variables.
pub fn monomial_product(lambda: &Partition, mu: &Partition, n: usize) -> Vec<(Partition, Integer)> {
    let a = lambda.padded(n);
    let mut b = mu.padded(n);
    b.sort_unstable();
    let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
    loop {
        let sum: Vec<u32> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        *counts.entry(Partition::new(sum)).or_insert(0) += 1;
        if !next_permutation(&mut b) {
            break;
        }
    }
    let orbit_lambda = orbit_size(lambda, n);
    counts
        .into_iter()
        .map(|(nu, c)| {
            let coeff = Integer::from(&orbit_lambda * c) / orbit_size(&nu, n);
            (nu, coeff)
        })
        .collect()
}

/// Product of two symmetric polynomials in the monomial basis.
pub fn msym_mul<F: Field>(f: &SymmetricPoly<F>, g: &SymmetricPoly<F>) -> Result<SymmetricPoly<F>> {
    f.check_vars(g)?;
    let n = f.n_vars;
    let mut out = SymmetricPoly::zero(n);
    for (lambda, a) in &f.terms {
        for (mu, b) in &g.terms {
            let ab = a.mul_ref(b);
            for (nu, c) in monomial_product(lambda, mu, n) {
                out.add_term(nu, ab.mul_ref(&F::from_integer(&c)));
            }
        }
    }
    Ok(out)
}

impl<F: Field> fmt::Display for SymmetricPoly<F> {
    /// Renders terms from the highest partition down, each monomial orbit
    /// written out in the variables `x1, ..., xn`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let single = self.terms.len() == 1;
        for (idx, (lambda, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.sign() == std::cmp::Ordering::Less;
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let orbit = orbit_text(lambda, self.n_vars);
            let unit = mag == F::one();
            if lambda.is_empty() {
                write!(f, "{mag}")?;
            } else if unit && (single || !orbit.contains(" + ")) {
                write!(f, "{orbit}")?;
            } else if unit {
                write!(f, "({orbit})")?;
            } else if orbit.contains(" + ") {
                write!(f, "{mag}*({orbit})")?;
            } else {
                write!(f, "{mag}*{orbit}")?;
            }
        }
        Ok(())
    }
}

fn orbit_text(lambda: &Partition, n: usize) -> String {
    let mut exps = lambda.padded(n);
    let mut words = Vec::new();
    loop {
        let word: Vec<String> = exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        words.push(word.join("*"));
        if !prev_permutation(&mut exps) {
            break;
        }
    }
    words.join(" + ")
}

fn prev_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] <= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] >= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
