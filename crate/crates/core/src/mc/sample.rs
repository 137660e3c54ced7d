//! Tridiagonal matrix models of the beta-Laguerre and beta-Jacobi ensembles.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Gamma};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hardedge::Ensemble;
use crate::scalar::Field;

use super::tridiag::{smallest_eigenvalue, TridiagonalMatrix};

/// Draws per RNG stream. Stream `c` covers draws `c * CHUNK .. (c + 1) * CHUNK`,
/// so the output does not depend on the number of worker threads.
pub const CHUNK: usize = 4096;

/// Smallest eigenvalues drawn from one ensemble.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleBatch<F> {
    pub ensemble: Ensemble<F>,
    pub seed: u64,
    pub values: Vec<f64>,
    pub count: usize,
}

fn gamma_dist(shape: f64, scale: f64) -> Result<Gamma<f64>> {
    Gamma::new(shape, scale).map_err(|e| Error::Parameter(format!("Gamma({shape}, {scale}): {e}")))
}

/// `chi_k` as `sqrt(2 Gamma(k/2))`.
fn chi(k: f64) -> Result<Gamma<f64>> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::Parameter(format!("chi degrees of freedom must be positive, got {k}")));
    }
    gamma_dist(k / 2.0, 2.0)
}

/// Beta(s, t) on `[-1, 1]` with density proportional to `(1-x)^{s-1} (1+x)^{t-1}`.
struct SymBeta {
    left: Gamma<f64>,
    right: Gamma<f64>,
}

impl SymBeta {
    fn new(s: f64, t: f64) -> Result<Self> {
        if !(s > 0.0 && t > 0.0 && s.is_finite() && t.is_finite()) {
            return Err(Error::Parameter(format!("Beta parameters must be positive, got ({s}, {t})")));
        }
        Ok(SymBeta { left: gamma_dist(t, 1.0)?, right: gamma_dist(s, 1.0)? })
    }

    fn sample<R: Rng>(&self, rng: &mut R) -> f64 {
        let g = self.left.sample(rng);
        let h = self.right.sample(rng);
        (g - h) / (g + h)
    }
}

struct LaguerreModel {
    diag: Vec<Gamma<f64>>,
    sub: Vec<Gamma<f64>>,
}

impl LaguerreModel {
    fn new(n: usize, beta: f64, gamma: f64) -> Result<Self> {
        check(n, beta)?;
        if !(gamma > -1.0) {
            return Err(Error::Parameter(format!("need gamma > -1, got {gamma}")));
        }
        let a = gamma + 1.0 + beta * (n as f64 - 1.0) / 2.0;
        let diag = (0..n).map(|i| chi(2.0 * a - beta * i as f64)).collect::<Result<_>>()?;
        let sub = (1..n).map(|i| chi(beta * (n - i) as f64)).collect::<Result<_>>()?;
        Ok(LaguerreModel { diag, sub })
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        let d: Vec<f64> = self.diag.iter().map(|g| g.sample(rng).sqrt()).collect();
        let s: Vec<f64> = self.sub.iter().map(|g| g.sample(rng).sqrt()).collect();
        let m = TridiagonalMatrix::from_lower_bidiagonal(&d, &s).expect("sizes match");
        smallest_eigenvalue(&m).max(0.0)
    }
}

/// CMV-derived tridiagonal model on `[-2, 2]` with weight `(2-l)^a (2+l)^b`, read on
/// `[0, 1]` through `x = (2 + l) / 4`, so `a = gamma2` and `b = gamma1`.
struct JacobiModel {
    n: usize,
    alphas: Vec<SymBeta>,
}

impl JacobiModel {
    fn new(n: usize, beta: f64, gamma1: f64, gamma2: f64) -> Result<Self> {
        check(n, beta)?;
        if !(gamma1 > -1.0 && gamma2 > -1.0) {
            return Err(Error::Parameter(format!("need gamma1, gamma2 > -1, got {gamma1}, {gamma2}")));
        }
        let (a, b) = (gamma2, gamma1);
        let alphas = (0..2 * n - 1)
            .map(|k| {
                let m = (2 * n - k) as f64;
                if k % 2 == 0 {
                    SymBeta::new((m - 2.0) * beta / 4.0 + a + 1.0, (m - 2.0) * beta / 4.0 + b + 1.0)
                } else {
                    SymBeta::new((m - 3.0) * beta / 4.0 + a + b + 2.0, (m - 1.0) * beta / 4.0)
                }
            })
            .collect::<Result<_>>()?;
        Ok(JacobiModel { n, alphas })
    }

    fn draw<R: Rng>(&self, rng: &mut R) -> f64 {
        let n = self.n;
        // alpha[k + 2] holds alpha_k for k = -2..=2n-1
        let mut alpha = vec![-1.0; 2 * n + 2];
        for (k, dist) in self.alphas.iter().enumerate() {
            alpha[k + 2] = dist.sample(rng);
        }
        let at = |k: usize| alpha[k];
        let diag = (0..n)
            .map(|k| {
                let (prev, cur, before) = (at(2 * k + 1), at(2 * k + 2), at(2 * k));
                (1.0 - prev) * cur - (1.0 + prev) * before + 2.0
            })
            .collect();
        let off = (0..n - 1)
            .map(|k| {
                let (prev, cur, next) = (at(2 * k + 1), at(2 * k + 2), at(2 * k + 3));
                ((1.0 - prev) * (1.0 - cur * cur) * (1.0 + next)).max(0.0).sqrt()
            })
            .collect();
        let m = TridiagonalMatrix { diag, off };
        (smallest_eigenvalue(&m) / 4.0).clamp(0.0, 1.0)
    }
}

fn check(n: usize, beta: f64) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("need n >= 1".into()));
    }
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::Parameter(format!("need beta > 0, got {beta}")));
    }
    Ok(())
}

fn run(count: usize, seed: u64, draw: impl Fn(&mut ChaCha8Rng) -> f64 + Sync) -> Vec<f64> {
    let chunks = count.div_ceil(CHUNK);
    (0..chunks)
        .into_par_iter()
        .flat_map_iter(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c as u64);
            let len = CHUNK.min(count - c * CHUNK);
            let draw = &draw;
            (0..len).map(move |_| draw(&mut rng)).collect::<Vec<_>>()
        })
        .collect()
}

/// `count` smallest eigenvalues of the beta-Laguerre ensemble with weight
/// `x^gamma e^{-x/2}`, from the bidiagonal matrix model.
pub fn sample_lbe<F: Field>(n: usize, beta: &F, gamma: &F, count: usize, seed: u64) -> Result<SampleBatch<F>> {
    let model = LaguerreModel::new(n, beta.to_f64(), gamma.to_f64())?;
    let values = run(count, seed, |rng| model.draw(rng));
    Ok(SampleBatch { ensemble: Ensemble::Laguerre { n, beta: beta.clone(), gamma: gamma.clone() }, seed, values, count })
}

/// `count` smallest eigenvalues of the beta-Jacobi ensemble with weight
/// `x^gamma1 (1-x)^gamma2` on `[0, 1]`, from the CMV-derived tridiagonal model.
pub fn sample_jbe<F: Field>(
    n: usize,
    beta: &F,
    gamma1: &F,
    gamma2: &F,
    count: usize,
    seed: u64,
) -> Result<SampleBatch<F>> {
    let model = JacobiModel::new(n, beta.to_f64(), gamma1.to_f64(), gamma2.to_f64())?;
    let values = run(count, seed, |rng| model.draw(rng));
    Ok(SampleBatch {
        ensemble: Ensemble::Jacobi { n, beta: beta.clone(), gamma1: gamma1.clone(), gamma2: gamma2.clone() },
        seed,
        values,
        count,
    })
}
