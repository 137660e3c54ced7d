//! Partitions and the scalar special functions built on them.

use std::cmp::Ordering;
use std::fmt;

use rug::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// A non-increasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Accepts only an already non-increasing list of positive parts.
    pub fn from_parts(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("partition {parts:?} is not non-increasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (1..=width as u32).map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32).collect();
        Partition(parts)
    }

    /// Arm and leg of the box in row `i`, column `j` (both 0-based).
    pub fn box_stat(&self, i: usize, j: usize) -> BoxStat {
        let col = j as u32 + 1;
        BoxStat { arm: self.0[i] - col, leg: self.0[i + 1..].iter().filter(|&&p| p >= col).count() as u32 }
    }

    /// All boxes `(row, col)` of the Ferrers diagram, 0-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p as usize).map(move |j| (i, j)))
    }

    /// True if every part of `self` is at most the corresponding part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Multiplicities of each distinct part, in order of the parts.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            out.push((j - i) as u32);
            i = j;
        }
        out
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::from_parts(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Weight first, then lexicographic on the parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight().cmp(&other.weight()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    /// Parses `"3,2,1"`, `"[3,2,1]"` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad partition part {p:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::from_parts(parts)
    }
}

/// Arm and leg lengths of one box.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxStat {
    pub arm: u32,
    pub leg: u32,
}

/// All partitions of `k` with at most `max_len` parts, in reverse-lexicographic order.
pub fn partitions_of(k: u32, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(k, k, max_len, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: u32, max_part: u32, slots: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if slots == 0 {
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        fill_partitions(remaining - p, p, slots - 1, current, out);
        current.pop();
    }
}

/// Partitions contained in `kappa` (every part bounded by the matching part of `kappa`),
/// sorted by weight then reverse-lexicographically.
pub fn subpartitions(kappa: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_sub(kappa.parts(), 0, u32::MAX, &mut current, &mut out);
    out.sort_by(|a, b| a.weight().cmp(&b.weight()).then_with(|| b.0.cmp(&a.0)));
    out
}

fn fill_sub(bound: &[u32], i: usize, prev: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition(current.clone()));
    if i >= bound.len() {
        return;
    }
    for p in 1..=bound[i].min(prev) {
        current.push(p);
        fill_sub(bound, i + 1, p, current, out);
        current.pop();
    }
}

/// Dominance order: every prefix sum of `lambda` is at most that of `mu`.
pub fn dominance_leq(lambda: &Partition, mu: &Partition) -> Result<bool> {
    if lambda.weight() != mu.weight() {
        return Err(Error::Contract(format!("dominance order needs equal weights: {lambda} vs {mu}")));
    }
    Ok(dominated_by(lambda, mu))
}

/// Dominance test without the weight check.
pub(crate) fn dominated_by(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len());
    let (mut sl, mut sm) = (0u32, 0u32);
    for i in 0..n {
        sl += lambda.part(i);
        sm += mu.part(i);
        if sl > sm {
            return false;
        }
    }
    true
}

fn check_beta<F: Field>(beta: &F) -> Result<()> {
    if beta.is_positive() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("beta must be positive, got {beta}")))
    }
}

/// The hook product `j(kappa; beta)`.
pub fn hook_product_j<F: Field>(kappa: &Partition, beta: &F) -> Result<F> {
    check_beta(beta)?;
    let alpha = F::from_i64(2) / beta.clone();
    let mut acc = F::one();
    for (i, j) in kappa.boxes() {
        let s = kappa.box_stat(i, j);
        let a = F::from_i64(s.arm as i64);
        let l = F::from_i64(s.leg as i64);
        let upper = l.clone() + alpha.clone() * (F::one() + a.clone());
        let lower = l + F::one() + alpha.clone() * a;
        acc *= &upper;
        acc *= &lower;
    }
    Ok(acc)
}

/// Rising factorial `(a)_k`.
pub fn rising<F: Field>(a: &F, k: u32) -> F {
    let mut acc = F::one();
    let mut t = a.clone();
    let one = F::one();
    for _ in 0..k {
        acc *= &t;
        t += &one;
    }
    acc
}

/// Generalized Pochhammer symbol `(a)_kappa^beta`.
pub fn gen_pochhammer<F: Field>(a: &F, kappa: &Partition, beta: &F) -> Result<F> {
    check_beta(beta)?;
    let half_beta = beta.clone() / F::from_i64(2);
    let mut acc = F::one();
    for (i, &k) in kappa.parts().iter().enumerate() {
        let shift = a.clone() - half_beta.clone() * F::from_i64(i as i64);
        acc *= &rising(&shift, k);
    }
    Ok(acc)
}

/// Multivariate Gamma `Gamma_n^beta(a)`; needs a transcendental-capable field.
pub fn multivariate_gamma<F: Field>(a: &F, n: usize, beta: &F) -> Result<F> {
    check_beta(beta)?;
    let half_beta = beta.clone() / F::from_i64(2);
    let mut acc = F::one();
    for i in 0..n {
        let arg = a.clone() - half_beta.clone() * F::from_i64(i as i64);
        if arg.is_nonpositive_integer() {
            return Err(Error::Domain(format!("Gamma pole at {arg} in multivariate Gamma")));
        }
        acc *= &arg.gamma()?;
    }
    let pi_exp = beta.clone() * F::from_i64((n * n.saturating_sub(1)) as i64) / F::from_i64(4);
    if !pi_exp.is_zero() {
        acc *= &F::pi()?.powf(&pi_exp)?;
    }
    Ok(acc)
}

/// The square partition `[n, ..., n]` with `m` parts.
pub fn square_partition(n: u32, m: u32) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    Partition(vec![n; m as usize])
}

pub fn factorial(n: u32) -> Integer {
    Integer::from(Integer::factorial(n))
}

/// Number of distinct rearrangements of `lambda` padded to `n` entries.
pub fn orbit_size(lambda: &Partition, n: usize) -> Integer {
    let mut denom = factorial((n - lambda.len()) as u32);
    for m in lambda.multiplicities() {
        denom *= factorial(m);
    }
    factorial(n as u32) / denom
}

/// Multinomial `k! / prod(lambda_i!)`.
pub fn multinomial(lambda: &Partition) -> Integer {
    let mut denom = Integer::from(1);
    for &p in lambda.parts() {
        denom *= factorial(p);
    }
    factorial(lambda.weight()) / denom
}
