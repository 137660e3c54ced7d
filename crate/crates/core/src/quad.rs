//! Gauss quadrature rules (Golub-Welsch) and the small multi-dimensional
//! integrals used to cross-check closed forms.

use crate::mc::tridiag::TridiagonalMatrix;
use crate::scalar::{Field, Real};

/// Nodes and weights of a quadrature rule.
#[derive(Clone, Debug)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

fn gamma_f64(x: f64) -> f64 {
    Real::from_f64(x).gamma().map(|g| g.to_f64()).unwrap_or(f64::NAN)
}

/// Rule from the three-term recurrence `x p_k = p_{k+1} + a_k p_k + b_k p_{k-1}`
/// of the monic orthogonal polynomials and the total mass `mu0`.
fn golub_welsch(a: &[f64], b: &[f64], mu0: f64) -> Rule {
    let n = a.len();
    let off: Vec<f64> = b[1..n].iter().map(|v| v.sqrt()).collect();
    let t = TridiagonalMatrix::new(a.to_vec(), off.clone()).expect("consistent recurrence sizes");
    let nodes = t.eigenvalues();
    let weights = nodes
        .iter()
        .map(|&x| {
            // Orthonormal polynomials at the node; w = 1 / sum p_k(x)^2.
            let mut prev = 0.0;
            let mut cur = 1.0 / mu0.sqrt();
            let mut sum = cur * cur;
            for k in 0..n - 1 {
                let next = ((x - a[k]) * cur - if k > 0 { off[k - 1] * prev } else { 0.0 }) / off[k];
                prev = cur;
                cur = next;
                sum += cur * cur;
            }
            1.0 / sum
        })
        .collect();
    Rule { nodes, weights }
}

/// `int_0^inf x^alpha e^{-x} f(x) dx`.
pub fn gauss_laguerre(n: usize, alpha: f64) -> Rule {
    let a: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + alpha + 1.0).collect();
    let b: Vec<f64> = (0..n).map(|k| k as f64 * (k as f64 + alpha)).collect();
    golub_welsch(&a, &b, gamma_f64(alpha + 1.0))
}

/// `int_{-1}^1 (1-x)^a (1+x)^b f(x) dx`.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Rule {
    let ab = a + b;
    let alpha: Vec<f64> = (0..n)
        .map(|k| {
            let k = k as f64;
            let s = 2.0 * k + ab;
            if k == 0.0 {
                (b - a) / (ab + 2.0)
            } else {
                (b * b - a * a) / (s * (s + 2.0))
            }
        })
        .collect();
    let beta: Vec<f64> = (0..n)
        .map(|k| {
            let k = k as f64;
            if k == 0.0 {
                return 0.0;
            }
            let s = 2.0 * k + ab;
            if k == 1.0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0))
            }
        })
        .collect();
    let mu0 = 2f64.powf(ab + 1.0) * gamma_f64(a + 1.0) * gamma_f64(b + 1.0) / gamma_f64(ab + 2.0);
    golub_welsch(&alpha, &beta, mu0)
}

/// `int_0^1 x^p (1-x)^q f(x) dx`.
pub fn gauss_jacobi_unit(n: usize, p: f64, q: f64) -> Rule {
    let r = gauss_jacobi(n, q, p);
    let scale = 2f64.powf(-(p + q + 1.0));
    Rule {
        nodes: r.nodes.iter().map(|t| 0.5 * (1.0 + t)).collect(),
        weights: r.weights.iter().map(|w| w * scale).collect(),
    }
}

/// `int_lo^hi f(x) dx`.
pub fn gauss_legendre(n: usize, lo: f64, hi: f64) -> Rule {
    let r = gauss_jacobi(n, 0.0, 0.0);
    let half = 0.5 * (hi - lo);
    Rule {
        nodes: r.nodes.iter().map(|t| lo + half * (1.0 + t)).collect(),
        weights: r.weights.iter().map(|w| w * half).collect(),
    }
}

/// `int_{R_+^2} |x1 - x2|^beta (x1 x2)^gamma e^{-(x1+x2)/2} f(x1, x2)` for symmetric `f`.
///
/// Substituting `x2 = x1 + s` on the half `x2 > x1` turns the Vandermonde
/// factor into the weight `s^beta`, so the rule is exact for integer `gamma`
/// and polynomial `f` of moderate degree.
pub fn laguerre_pair_integral(beta: f64, gamma: f64, pts: usize, f: impl Fn(f64, f64) -> f64) -> f64 {
    let ru = gauss_laguerre(pts, gamma);
    let rs = gauss_laguerre(pts, beta);
    let mut total = 0.0;
    for (&u, &wu) in ru.nodes.iter().zip(&ru.weights) {
        for (&r, &wr) in rs.nodes.iter().zip(&rs.weights) {
            let s = 2.0 * r;
            total += wu * wr * (u + s).powf(gamma) * f(u, u + s);
        }
    }
    2.0 * 2f64.powf(beta + 1.0) * total
}

/// `int_{[0,1]^2} |x1 - x2|^beta (x1 x2)^g1 ((1-x1)(1-x2))^g2 f(x1, x2)` for symmetric `f`.
pub fn jacobi_pair_integral(beta: f64, g1: f64, g2: f64, pts: usize, f: impl Fn(f64, f64) -> f64) -> f64 {
    let ru = gauss_jacobi_unit(pts, g1, 2.0 * g2 + beta + 1.0);
    let rs = gauss_jacobi_unit(pts, beta, g2);
    let mut total = 0.0;
    for (&u, &wu) in ru.nodes.iter().zip(&ru.weights) {
        for (&s, &ws) in rs.nodes.iter().zip(&rs.weights) {
            let x2 = u + (1.0 - u) * s;
            total += wu * ws * x2.powf(g1) * f(u, x2);
        }
    }
    2.0 * total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laguerre_moments() {
        let r = gauss_laguerre(20, 0.0);
        for k in 0..30 {
            let want: f64 = (1..=k).map(|i| i as f64).product();
            let got = r.integrate(|x| x.powi(k));
            assert!((got - want).abs() <= 1e-12 * want, "k={k}: {got} vs {want}");
        }
        let r = gauss_laguerre(16, 1.5);
        let got = r.integrate(|x| x * x);
        let want = gamma_f64(4.5);
        assert!((got - want).abs() < 1e-12 * want);
    }

    #[test]
    fn jacobi_moments() {
        // int_0^1 x^p (1-x)^q x^k dx = B(p+k+1, q+1)
        let (p, q) = (2.0 / 3.0, 1.25);
        let r = gauss_jacobi_unit(24, p, q);
        for k in 0..20 {
            let want = gamma_f64(p + k as f64 + 1.0) * gamma_f64(q + 1.0) / gamma_f64(p + q + k as f64 + 2.0);
            let got = r.integrate(|x| x.powi(k));
            assert!((got - want).abs() < 1e-13 * want.max(1e-300) + 1e-16, "k={k}");
        }
        let r = gauss_legendre(10, 1.0, 3.0);
        assert!((r.integrate(|x| x.powi(5)) - (729.0 - 1.0) / 6.0).abs() < 1e-11);
    }

    #[test]
    fn pair_integrals_reduce_to_products() {
        // beta = 0 factorizes: (int x^g e^{-x/2})^2 = (2^{g+1} g!)^2
        let v = laguerre_pair_integral(0.0, 1.0, 20, |_, _| 1.0);
        assert!((v - 16.0).abs() < 1e-11, "{v}");
        // E[(x-y)^2] = 8 for i.i.d. Exp(1/2), total mass 4.
        let v = laguerre_pair_integral(2.0, 0.0, 20, |_, _| 1.0);
        assert!((v - 32.0).abs() < 1e-10, "{v}");
        // beta = 2 uniform square: int (x-y)^2 = 1/6
        let v = jacobi_pair_integral(2.0, 0.0, 0.0, 20, |_, _| 1.0);
        assert!((v - 1.0 / 6.0).abs() < 1e-12, "{v}");
        let v = jacobi_pair_integral(1.0, 0.0, 0.0, 20, |_, _| 1.0);
        assert!((v - 1.0 / 3.0).abs() < 1e-12, "{v}");
    }
}
