//! Dense univariate polynomials and rational functions over a [`Field`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Field;

/// Dense polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct UniPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> UniPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        UniPoly::new(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(F::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        UniPoly::new(vec![F::zero(), F::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    /// `a + b x`.
    pub fn linear(a: F, b: F) -> Self {
        UniPoly::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(k, c)| c.clone() * F::from_i64(k as i64)).collect();
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, s: &F) -> Self {
        UniPoly::new(self.coeffs.iter().map(|c| c.mul_ref(s)).collect())
    }

    /// `p(a x)`.
    pub fn scale_arg(&self, a: &F) -> Self {
        let mut pow = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul_ref(&pow));
            pow *= a;
        }
        UniPoly::new(out)
    }

    /// `p(q(x))` by Horner's rule.
    pub fn compose(&self, q: &UniPoly<F>) -> Self {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &UniPoly::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = UniPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        UniPoly::new(v)
    }

    /// Euclidean division `self = q * d + r`.
    pub fn div_rem(&self, d: &UniPoly<F>) -> Result<(UniPoly<F>, UniPoly<F>)> {
        let dd = d.degree().ok_or_else(|| Error::Domain("polynomial division by zero".into()))?;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        let qlen = r.len().saturating_sub(dd);
        let mut q = vec![F::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = r[k + dd].clone() / lead.clone();
            if !c.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let t = c.mul_ref(dc);
                    r[k + i] -= &t;
                }
            }
            r[k + dd] = F::zero();
            q[k] = c;
        }
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Monic greatest common divisor; only meaningful over an exact field.
    pub fn gcd(&self, other: &UniPoly<F>) -> UniPoly<F> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.leading().recip();
        self.scale(&inv)
    }

    /// Multiplicity of the root `x = a`, found by repeated synthetic division.
    pub fn root_multiplicity(&self, a: &F) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let divisor = UniPoly::linear(-a.clone(), F::one());
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, r) = p.div_rem(&divisor).expect("nonzero divisor");
            if !r.is_zero() {
                return m;
            }
            p = q;
            m += 1;
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UniPoly<G> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<F: Field> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<F: Field> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<F: Field> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        UniPoly::new(out)
    }
}

impl<F: Field> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        UniPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<F: Field> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == std::cmp::Ordering::Less;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag == F::one();
            match k {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}*x")?,
                _ if unit => write!(f, "x^{k}")?,
                _ => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Ratio of two polynomials. Over an exact field the fraction is kept reduced
/// with a monic denominator, so a zero function always has numerator zero.
#[derive(Clone, Debug, PartialEq)]
pub struct UnivariateRational<F> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: Field> UnivariateRational<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("rational function with zero denominator".into()));
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        if num.is_zero() {
            return UnivariateRational { num, den: UniPoly::one() };
        }
        if F::EXACT {
            let g = num.gcd(&den);
            let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
            let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
            let lead = den.leading().recip();
            UnivariateRational { num: num.scale(&lead), den: den.scale(&lead) }
        } else {
            let lead = den.leading().recip();
            UnivariateRational { num: num.scale(&lead), den: den.scale(&lead) }
        }
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        UnivariateRational { num: p, den: UniPoly::one() }.normalized()
    }

    fn normalized(self) -> Self {
        Self::canonical(self.num, self.den)
    }

    pub fn zero() -> Self {
        UnivariateRational { num: UniPoly::zero(), den: UniPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    pub fn x() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn numer(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn eval(&self, x: &F) -> Result<F> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::Domain(format!("pole at {x}")));
        }
        Ok(self.num.eval(x) / d)
    }

    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::canonical(num, den)
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, s: &F) -> Self {
        Self::canonical(self.num.scale(s), self.den.clone())
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::Domain("division by the zero rational function".into()));
        }
        Ok(Self::canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn powi(&self, k: u32) -> Self {
        Self::canonical(self.num.pow(k), self.den.pow(k))
    }

    /// Degree of the numerator, a crude size measure for reports.
    pub fn degree(&self) -> Option<usize> {
        self.num.degree()
    }
}

impl<F: Field> Add for &UnivariateRational<F> {
    type Output = UnivariateRational<F>;
    fn add(self, rhs: &UnivariateRational<F>) -> UnivariateRational<F> {
        if self.den == rhs.den {
            return UnivariateRational::canonical(&self.num + &rhs.num, self.den.clone());
        }
        UnivariateRational::canonical(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl<F: Field> Sub for &UnivariateRational<F> {
    type Output = UnivariateRational<F>;
    fn sub(self, rhs: &UnivariateRational<F>) -> UnivariateRational<F> {
        self + &(-rhs)
    }
}

impl<F: Field> Mul for &UnivariateRational<F> {
    type Output = UnivariateRational<F>;
    fn mul(self, rhs: &UnivariateRational<F>) -> UnivariateRational<F> {
        UnivariateRational::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<F: Field> Neg for &UnivariateRational<F> {
    type Output = UnivariateRational<F>;
    fn neg(self) -> UnivariateRational<F> {
        UnivariateRational { num: -&self.num, den: self.den.clone() }
    }
}

impl<F: Field> fmt::Display for UnivariateRational<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
