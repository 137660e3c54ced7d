//! Closed-form laws of the smallest (and, for Jacobi, largest) eigenvalue.

mod oracle;
mod serial;

use crate::combinat::{factorial, square_partition};
use crate::error::{Error, Result};
use crate::gamma::GammaRatio;
use crate::mvop::{
    jacobi_poly, laguerre_at_zero, laguerre_poly, selberg_ratio_jacobi, selberg_ratio_laguerre, JacobiParams,
    LaguerreParams,
};
use crate::scalar::{to_real, Field, Real};
use crate::univariate::{UniPoly, UnivariateRational};

pub use oracle::{jacobi_cdf_normalizer, oracle_jacobi_cdf_hypergeometric, oracle_laguerre_pdf_beta1};
pub use serial::LawJson;

/// The dual parameters `beta~ = 4/beta`, `gamma~ = (2/beta)(gamma + 1) - 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct DualParams<F> {
    pub beta: F,
    pub gamma: F,
}

pub fn dual_params<F: Field>(beta: &F, gamma: &F) -> Result<DualParams<F>> {
    if !beta.is_positive() {
        return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
    }
    Ok(DualParams {
        beta: F::from_i64(4) / beta.clone(),
        gamma: F::from_i64(2) / beta.clone() * (gamma.clone() + F::one()) - F::one(),
    })
}

impl<F: Field> DualParams<F> {
    pub fn dual(&self) -> Result<DualParams<F>> {
        dual_params(&self.beta, &self.gamma)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LawKind {
    LaguerreCdf,
    LaguerrePdf,
    JacobiCdf,
    JacobiPdf,
    JacobiLargestCdf,
}

impl LawKind {
    pub fn name(self) -> &'static str {
        match self {
            LawKind::LaguerreCdf => "laguerre_cdf",
            LawKind::LaguerrePdf => "laguerre_pdf",
            LawKind::JacobiCdf => "jacobi_cdf",
            LawKind::JacobiPdf => "jacobi_pdf",
            LawKind::JacobiLargestCdf => "jacobi_largest_cdf",
        }
    }

    pub fn from_name(s: &str) -> Result<Self> {
        Ok(match s {
            "laguerre_cdf" => LawKind::LaguerreCdf,
            "laguerre_pdf" => LawKind::LaguerrePdf,
            "jacobi_cdf" => LawKind::JacobiCdf,
            "jacobi_pdf" => LawKind::JacobiPdf,
            "jacobi_largest_cdf" => LawKind::JacobiLargestCdf,
            other => return Err(Error::Parse(format!("unknown law kind {other:?}"))),
        })
    }

    pub fn is_cdf(self) -> bool {
        !matches!(self, LawKind::LaguerrePdf | LawKind::JacobiPdf)
    }

    pub fn is_laguerre(self) -> bool {
        matches!(self, LawKind::LaguerreCdf | LawKind::LaguerrePdf)
    }

    /// CDFs written as `1 - term` rather than as `term`.
    fn is_complement(self) -> bool {
        matches!(self, LawKind::LaguerreCdf | LawKind::JacobiCdf)
    }
}

/// Ensemble parameters of a law.
#[derive(Clone, Debug, PartialEq)]
pub enum Ensemble<F> {
    Laguerre { n: usize, beta: F, gamma: F },
    Jacobi { n: usize, beta: F, gamma1: F, gamma2: F },
}

impl<F: Field> Ensemble<F> {
    pub fn n(&self) -> usize {
        match self {
            Ensemble::Laguerre { n, .. } | Ensemble::Jacobi { n, .. } => *n,
        }
    }

    pub fn beta(&self) -> &F {
        match self {
            Ensemble::Laguerre { beta, .. } | Ensemble::Jacobi { beta, .. } => beta,
        }
    }
}

/// `value(x) = c x^p e^{-r x} (1-x)^q poly(x)`, or one minus that for the
/// smallest-eigenvalue CDFs.
#[derive(Clone, Debug, PartialEq)]
pub struct EigLaw<F> {
    pub kind: LawKind,
    pub params: Ensemble<F>,
    pub constant: F,
    pub power: F,
    pub exp_rate: Option<F>,
    pub one_minus_x: Option<F>,
    pub poly: UniPoly<F>,
}

fn nonnegative_integer<F: Field>(name: &str, v: &F) -> Result<u32> {
    match v.to_integer() {
        Some(k) if k >= 0 => Ok(k as u32),
        _ => Err(Error::Unsupported(format!(
            "{name} = {v}: the closed form requires {name} to be a nonnegative integer"
        ))),
    }
}

fn check_common<F: Field>(n: usize, beta: &F) -> Result<()> {
    if n == 0 {
        return Err(Error::Parameter("matrix size n must be at least 1".into()));
    }
    if !beta.is_positive() {
        return Err(Error::Parameter(format!("beta must be positive, got {beta}")));
    }
    Ok(())
}

fn check_gamma2<F: Field>(g2: &F) -> Result<()> {
    if g2.clone() + F::one() > F::zero() {
        Ok(())
    } else {
        Err(Error::Parameter(format!("gamma2 must exceed -1, got {g2}")))
    }
}

fn half<F: Field>(v: &F) -> F {
    v.clone() / F::from_i64(2)
}

/// `Z_{n,gamma}^L / Z_{n-1,gamma+beta}^L` as an exact-when-possible Gamma ratio.
pub fn laguerre_z_ratio<F: Field>(n: usize, gamma: &F, beta: &F) -> Result<F> {
    let num = selberg_ratio_laguerre(n, gamma, beta)?;
    let den = selberg_ratio_laguerre(n - 1, &(gamma.clone() + beta.clone()), beta)?;
    num.div(&den)?.eval()
}

/// `Z_{n,g1,g2}^J / Z_{n-1,g1+beta,g2}^J`.
pub fn jacobi_z_ratio<F: Field>(n: usize, gamma1: &F, gamma2: &F, beta: &F) -> Result<F> {
    let num = selberg_ratio_jacobi(n, gamma1, gamma2, beta)?;
    let den = selberg_ratio_jacobi(n - 1, &(gamma1.clone() + beta.clone()), gamma2, beta)?;
    num.div(&den)?.eval()
}

/// `L_{n^(gamma), 2/beta-1}^{4/beta}(0)` from its product formula.
pub fn laguerre_cdf_constant<F: Field>(n: usize, beta: &F, gamma: u32) -> Result<F> {
    let two_over_beta = F::from_i64(2) / beta.clone();
    let nf = F::from_i64(n as i64);
    let mut r = GammaRatio::one().times(&F::from_integer(&factorial(gamma * n as u32)));
    for i in 0..gamma as i64 {
        let a = two_over_beta.clone() * F::from_i64(i + 1);
        let b = two_over_beta.clone() * F::from_i64(i);
        r = r
            .gamma(nf.clone() + a.clone())
            .gamma(F::one() + b.clone())
            .over_gamma(a)
            .over_gamma(nf.clone() + F::one() + b);
    }
    r.eval()
}

/// `(1-x)^d p(-x/(1-x))` as a polynomial, where `d = deg p`.
fn clear_substitution<F: Field>(p: &UniPoly<F>) -> Result<UniPoly<F>> {
    let d = p.degree().unwrap_or(0);
    let one_minus = UniPoly::linear(F::one(), -F::one());
    let minus_x = UniPoly::linear(F::zero(), -F::one());
    let mut out = UniPoly::zero();
    for (k, c) in p.coeffs().iter().enumerate() {
        let term = &minus_x.pow(k as u32) * &one_minus.pow((d - k) as u32);
        out = &out + &term.scale(c);
    }
    if F::EXACT {
        // the same substitution as rational functions must leave no denominator
        let t = UnivariateRational::new(minus_x.clone(), one_minus.clone())?;
        let mut acc = UnivariateRational::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            acc = &acc + &t.powi(k as u32).scale(c);
        }
        let cleared = &acc * &UnivariateRational::from_poly(one_minus.pow(d as u32));
        if cleared.denom().degree() != Some(0) || *cleared.numer() != out {
            return Err(Error::Internal("(1-x) powers failed to clear the substituted polynomial".into()));
        }
    }
    Ok(out)
}

/// `F(x) = 1 - e^{-nx/2} L(-(2x/beta) I_gamma) / L(0)` for the beta-Laguerre ensemble.
pub fn laguerre_smallest_cdf<F: Field>(n: usize, beta: &F, gamma: &F) -> Result<EigLaw<F>> {
    check_common(n, beta)?;
    let g = nonnegative_integer("gamma", gamma)?;
    let params = Ensemble::Laguerre { n, beta: beta.clone(), gamma: gamma.clone() };
    let rate = half(&F::from_i64(n as i64));
    let (constant, poly) = if g == 0 {
        (F::one(), UniPoly::one())
    } else if n == 1 {
        // Gamma tail: e^{-x/2} sum_k (x/2)^k / k!
        let coeffs = (0..=g)
            .map(|k| F::one() / (F::from_integer(&factorial(k)) * F::from_i64(2).powi(k as i64)))
            .collect();
        (F::one(), UniPoly::new(coeffs))
    } else {
        let dual_beta = F::from_i64(4) / beta.clone();
        let kappa = square_partition(n as u32, g);
        let shape = F::from_i64(2) / beta.clone() - F::one();
        let params = LaguerreParams::new(g as usize, shape.clone(), dual_beta.clone())?;
        let l = laguerre_poly(&kappa, &params)?;
        let q = l.diagonal().scale_arg(&(-F::from_i64(2) / beta.clone()));
        let l0 = laguerre_at_zero(&kappa, &shape, &dual_beta, g as usize)?;
        (l0.recip(), q)
    };
    Ok(EigLaw { kind: LawKind::LaguerreCdf, params, constant, power: F::zero(), exp_rate: Some(rate), one_minus_x: None, poly })
}

/// `f(x) = c x^gamma e^{-nx/2} L((n-1)^(gamma), 2/beta+1)(-(2x/beta) I_gamma)`.
pub fn laguerre_smallest_pdf<F: Field>(n: usize, beta: &F, gamma: &F) -> Result<EigLaw<F>> {
    check_common(n, beta)?;
    let g = nonnegative_integer("gamma", gamma)?;
    let params = Ensemble::Laguerre { n, beta: beta.clone(), gamma: gamma.clone() };
    let rate = half(&F::from_i64(n as i64));
    let (constant, poly) = if n == 1 {
        let c = F::one() / (F::from_i64(2).powi(g as i64 + 1) * F::from_integer(&factorial(g)));
        (c, UniPoly::one())
    } else {
        let ratio = F::from_i64(n as i64) * laguerre_z_ratio(n, gamma, beta)?;
        if g == 0 {
            (ratio, UniPoly::one())
        } else {
            let dual_beta = F::from_i64(4) / beta.clone();
            let kappa = square_partition(n as u32 - 1, g);
            let shape = F::from_i64(2) / beta.clone() + F::one();
            let params = LaguerreParams::new(g as usize, shape.clone(), dual_beta.clone())?;
            let l = laguerre_poly(&kappa, &params)?;
            let r = l.diagonal().scale_arg(&(-F::from_i64(2) / beta.clone()));
            let l0 = laguerre_at_zero(&kappa, &shape, &dual_beta, g as usize)?;
            (ratio / l0, r)
        }
    };
    Ok(EigLaw {
        kind: LawKind::LaguerrePdf,
        params,
        constant,
        power: gamma.clone(),
        exp_rate: Some(rate),
        one_minus_x: None,
        poly,
    })
}

fn jacobi_total_exponent<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> F {
    let nf = F::from_i64(n as i64);
    nf * (F::one() + gamma1.clone() + gamma2.clone() + half(beta) * F::from_i64(n as i64 - 1))
}

/// `P(-x/(1-x) I_g1)` for the dual Jacobi family, cleared of its denominator;
/// returns `(Q, deg)` with `(1-x)^deg P(-x/(1-x)) = Q(x)`.
fn jacobi_dual_poly<F: Field>(side: u32, g1: u32, beta: &F, gamma2: &F, shape: F) -> Result<(UniPoly<F>, usize)> {
    let dual = dual_params(beta, gamma2)?;
    let kappa = square_partition(side, g1);
    let params = JacobiParams::new(g1 as usize, shape, dual.gamma, dual.beta)?;
    let p = jacobi_poly(&kappa, &params)?.diagonal();
    let d = p.degree().unwrap_or(0);
    Ok((clear_substitution(&p)?, d))
}

/// `F(x) = 1 - (1-x)^{n(1+g1+g2+beta(n-1)/2)} P(-x/(1-x) I_g1)` for the beta-Jacobi ensemble.
pub fn jacobi_smallest_cdf<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> Result<EigLaw<F>> {
    check_common(n, beta)?;
    check_gamma2(gamma2)?;
    let g1 = nonnegative_integer("gamma1", gamma1)?;
    let params = Ensemble::Jacobi { n, beta: beta.clone(), gamma1: gamma1.clone(), gamma2: gamma2.clone() };
    let total = jacobi_total_exponent(n, beta, gamma1, gamma2);
    let (constant, poly, q) = if g1 == 0 {
        (F::one(), UniPoly::one(), total)
    } else if n == 1 {
        // Beta tail: (1-x)^{g2+1} / B * sum_j C(g1,j) (-1)^j (1-x)^j / (g2+j+1)
        let z = crate::mvop::selberg_const_jacobi(1, gamma1, gamma2, beta)?;
        let mut in_u = Vec::with_capacity(g1 as usize + 1);
        for j in 0..=g1 {
            let binom = F::from_integer(&(factorial(g1) / (factorial(j) * factorial(g1 - j))));
            let sign = if j % 2 == 0 { F::one() } else { -F::one() };
            in_u.push(binom * sign / (gamma2.clone() + F::from_i64(j as i64 + 1)));
        }
        let poly = UniPoly::new(in_u).compose(&UniPoly::linear(F::one(), -F::one()));
        (z, poly, gamma2.clone() + F::one())
    } else {
        let shape = F::from_i64(2) / beta.clone() - F::one();
        let (poly, d) = jacobi_dual_poly(n as u32, g1, beta, gamma2, shape)?;
        (F::one(), poly, total - F::from_i64(d as i64))
    };
    Ok(EigLaw { kind: LawKind::JacobiCdf, params, constant, power: F::zero(), exp_rate: None, one_minus_x: Some(q), poly })
}

/// `f(x) = c x^g1 (1-x)^{N-g1-1} P((n-1)^(g1), 2/beta+1)(-x/(1-x) I_g1)`.
pub fn jacobi_smallest_pdf<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> Result<EigLaw<F>> {
    check_common(n, beta)?;
    check_gamma2(gamma2)?;
    let g1 = nonnegative_integer("gamma1", gamma1)?;
    let params = Ensemble::Jacobi { n, beta: beta.clone(), gamma1: gamma1.clone(), gamma2: gamma2.clone() };
    let exponent = jacobi_total_exponent(n, beta, gamma1, gamma2) - gamma1.clone() - F::one();
    let constant = F::from_i64(n as i64) * jacobi_z_ratio(n, gamma1, gamma2, beta)?;
    let (poly, q) = if n == 1 || g1 == 0 {
        (UniPoly::one(), exponent)
    } else {
        let shape = F::from_i64(2) / beta.clone() + F::one();
        let (poly, d) = jacobi_dual_poly(n as u32 - 1, g1, beta, gamma2, shape)?;
        (poly, exponent - F::from_i64(d as i64))
    };
    Ok(EigLaw {
        kind: LawKind::JacobiPdf,
        params,
        constant,
        power: gamma1.clone(),
        exp_rate: None,
        one_minus_x: Some(q),
        poly,
    })
}

/// Law of the largest eigenvalue, from the smallest one with `g1` and `g2` exchanged.
pub fn jacobi_largest_cdf<F: Field>(n: usize, beta: &F, gamma1: &F, gamma2: &F) -> Result<EigLaw<F>> {
    let swapped = jacobi_smallest_cdf(n, beta, gamma2, gamma1)?;
    let reflect = UniPoly::linear(F::one(), -F::one());
    Ok(EigLaw {
        kind: LawKind::JacobiLargestCdf,
        params: Ensemble::Jacobi { n, beta: beta.clone(), gamma1: gamma1.clone(), gamma2: gamma2.clone() },
        constant: swapped.constant,
        power: swapped.one_minus_x.unwrap_or_else(F::zero),
        exp_rate: None,
        one_minus_x: None,
        poly: swapped.poly.compose(&reflect),
    })
}

impl<F: Field> EigLaw<F> {
    /// The law's value at `x`, extended by 0 (and 1 for CDFs) outside the support.
    pub fn eval(&self, x: &F) -> Result<F> {
        let laguerre = self.kind.is_laguerre();
        if *x <= F::zero() {
            let at_zero = match self.kind {
                LawKind::LaguerrePdf | LawKind::JacobiPdf if *x == F::zero() && self.power.is_zero() => {
                    self.constant.clone() * self.poly.eval(&F::zero())
                }
                _ => F::zero(),
            };
            return Ok(at_zero);
        }
        if !laguerre && *x >= F::one() {
            return Ok(if self.kind.is_cdf() { F::one() } else { F::zero() });
        }
        let mut term = self.constant.clone() * self.poly.eval(x);
        if !self.power.is_zero() {
            term *= &x.powf(&self.power)?;
        }
        if let Some(r) = &self.exp_rate {
            term *= &(-(r.clone() * x.clone())).exp()?;
        }
        if let Some(q) = &self.one_minus_x {
            if !q.is_zero() {
                term *= &(F::one() - x.clone()).powf(q)?;
            }
        }
        Ok(if self.kind.is_complement() { F::one() - term } else { term })
    }

    /// The same law over high-precision reals.
    pub fn to_real(&self) -> EigLaw<Real> {
        let params = match &self.params {
            Ensemble::Laguerre { n, beta, gamma } => Ensemble::Laguerre { n: *n, beta: to_real(beta), gamma: to_real(gamma) },
            Ensemble::Jacobi { n, beta, gamma1, gamma2 } => Ensemble::Jacobi {
                n: *n,
                beta: to_real(beta),
                gamma1: to_real(gamma1),
                gamma2: to_real(gamma2),
            },
        };
        EigLaw {
            kind: self.kind,
            params,
            constant: to_real(&self.constant),
            power: to_real(&self.power),
            exp_rate: self.exp_rate.as_ref().map(to_real),
            one_minus_x: self.one_minus_x.as_ref().map(to_real),
            poly: self.poly.map(to_real),
        }
    }

    /// Values on a grid, as `x,value` CSV with a header line.
    pub fn to_csv(&self, grid: &[F]) -> Result<String> {
        let mut out = String::from("x,value\n");
        for x in grid {
            let v = self.eval(x)?;
            out.push_str(&format!("{},{}\n", to_real(x).to_decimal(17), to_real(&v).to_decimal(20)));
        }
        Ok(out)
    }

    /// Human-readable closed form.
    pub fn describe(&self) -> String {
        let mut factors = vec![format!("({})", self.constant)];
        if !self.power.is_zero() {
            factors.push(format!("x^({})", self.power));
        }
        if let Some(r) = &self.exp_rate {
            factors.push(format!("exp(-({r})*x)"));
        }
        if let Some(q) = &self.one_minus_x {
            if !q.is_zero() {
                factors.push(format!("(1 - x)^({q})"));
            }
        }
        factors.push(format!("({})", self.poly));
        let body = factors.join(" * ");
        if self.kind.is_complement() {
            format!("1 - {body}")
        } else {
            body
        }
    }
}

impl EigLaw<Real> {
    pub fn eval_f64(&self, x: f64) -> f64 {
        self.eval(&Real::from_f64(x)).map(|v| v.to_f64()).unwrap_or(f64::NAN)
    }
}

/// Residual of `d/dx CDF = PDF` after removing the shared prefactors; zero
/// exactly when the two closed forms are consistent.
pub fn derivative_residual<F: Field>(cdf: &EigLaw<F>, pdf: &EigLaw<F>) -> Result<UniPoly<F>> {
    let pairing = matches!(
        (cdf.kind, pdf.kind),
        (LawKind::LaguerreCdf, LawKind::LaguerrePdf) | (LawKind::JacobiCdf, LawKind::JacobiPdf)
    );
    if !pairing || cdf.params != pdf.params {
        return Err(Error::Contract("derivative check needs the CDF and PDF of one ensemble".into()));
    }
    let p = pdf
        .power
        .to_integer()
        .filter(|&k| k >= 0)
        .ok_or_else(|| Error::Unsupported("PDF power must be a nonnegative integer".into()))?;
    let rhs = &UniPoly::monomial(pdf.constant.clone(), p as usize) * &pdf.poly;
    let lhs = if cdf.kind.is_laguerre() {
        let r = cdf.exp_rate.clone().unwrap_or_else(F::zero);
        if pdf.exp_rate.as_ref() != Some(&r) {
            return Err(Error::Contract("exponential rates differ".into()));
        }
        (&cdf.poly.scale(&r) - &cdf.poly.derivative()).scale(&cdf.constant)
    } else {
        let q = cdf.one_minus_x.clone().unwrap_or_else(F::zero);
        let q_pdf = pdf.one_minus_x.clone().unwrap_or_else(F::zero);
        let gap = q.clone() - q_pdf - F::one();
        let close = if F::EXACT { gap.is_zero() } else { gap.abs().to_f64() < 1e-30 };
        if !close {
            return Err(Error::Contract("(1-x) exponents of CDF and PDF are not one apart".into()));
        }
        let one_minus = UniPoly::linear(F::one(), -F::one());
        (&cdf.poly.scale(&q) - &(&one_minus * &cdf.poly.derivative())).scale(&cdf.constant)
    };
    Ok(&lhs - &rhs)
}
