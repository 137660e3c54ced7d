//! Symmetric tridiagonal matrices and Sturm-sequence bisection.

use crate::error::{Error, Result};

/// Relative width at which bisection stops.
pub const BISECTION_RTOL: f64 = 1e-13;

/// A symmetric tridiagonal matrix given by its diagonal and off-diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct TridiagonalMatrix {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl TridiagonalMatrix {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Contract(format!(
                "tridiagonal matrix needs n diagonal and n-1 off-diagonal entries, got {} and {}",
                diag.len(),
                off.len()
            )));
        }
        Ok(TridiagonalMatrix { diag, off })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// `B B^T` for the lower bidiagonal `B` with diagonal `d` and subdiagonal `s`.
    pub fn from_lower_bidiagonal(d: &[f64], s: &[f64]) -> Result<Self> {
        let n = d.len();
        if s.len() + 1 != n {
            return Err(Error::Contract("bidiagonal sizes do not match".into()));
        }
        let diag = (0..n).map(|i| d[i] * d[i] + if i > 0 { s[i - 1] * s[i - 1] } else { 0.0 }).collect();
        let off = (0..n - 1).map(|i| d[i] * s[i]).collect();
        Ok(TridiagonalMatrix { diag, off })
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let r = if i > 0 { self.off[i - 1].abs() } else { 0.0 } + if i + 1 < n { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x` (negative pivots of `T - x I`).
    pub fn count_below(&self, x: f64) -> usize {
        let scale = self.diag.iter().chain(&self.off).fold(0.0f64, |m, v| m.max(v.abs())).max(f64::MIN_POSITIVE);
        let tiny = f64::EPSILON * f64::EPSILON * scale;
        let mut count = 0;
        let mut q = self.diag[0] - x;
        for i in 0..self.diag.len() {
            if i > 0 {
                q = (self.diag[i] - x) - self.off[i - 1] * self.off[i - 1] / q;
            }
            if q == 0.0 {
                q = -tiny;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k`-th smallest eigenvalue (0-based) by bisection.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        let (mut lo, mut hi) = self.gershgorin();
        let pad = (hi - lo).abs().max(f64::MIN_POSITIVE) * 1e-12;
        lo -= pad;
        hi += pad;
        for _ in 0..2000 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) > k {
                hi = mid;
            } else {
                lo = mid;
            }
            if hi - lo <= BISECTION_RTOL * lo.abs().max(hi.abs()) {
                break;
            }
        }
        0.5 * (lo + hi)
    }

    /// All eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        (0..self.len()).map(|k| self.eigenvalue(k)).collect()
    }
}

/// Smallest eigenvalue of a symmetric tridiagonal matrix.
pub fn smallest_eigenvalue(m: &TridiagonalMatrix) -> f64 {
    m.eigenvalue(0)
}
