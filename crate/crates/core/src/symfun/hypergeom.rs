use crate::combinat::{factorial, gen_pochhammer, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::scalar::Field;

use super::jack_expand;

/// Value of a truncated hypergeometric series and whether it is the exact sum.
#[derive(Clone, Debug)]
pub struct Hypergeometric<F> {
    pub value: F,
    /// True when a numerator parameter is a non-positive integer and every
    /// omitted term vanishes.
    pub terminated: bool,
    pub degree_used: u32,
}

/// `pFq^beta(a; b; point)` summed over partitions of weight at most `max_degree`.
pub fn hypergeometric_pfq<F: Field>(
    a: &[F],
    b: &[F],
    beta: &F,
    point: &[F],
    max_degree: u32,
) -> Result<Hypergeometric<F>> {
    let n = point.len();
    if n == 0 {
        return Err(Error::Contract("hypergeometric series needs at least one variable".into()));
    }
    // (-m)_kappa vanishes once kappa_1 > m, so the series stops at degree n*m.
    let cutoff = a.iter().filter_map(|ai| ai.to_integer().filter(|&v| v <= 0).map(|v| (-v) as u32)).min();
    let (last, terminated) = match cutoff {
        Some(m) => {
            let full = m * n as u32;
            (full.min(max_degree), full <= max_degree)
        }
        None => (max_degree, false),
    };
    let mut value = F::zero();
    for k in 0..=last {
        let kf = F::from_integer(&factorial(k));
        for kappa in partitions_of(k, n) {
            if let Some(m) = cutoff {
                if kappa.part(0) > m {
                    continue;
                }
            }
            let coeff = series_coeff(a, b, beta, &kappa)?;
            if coeff.is_zero() {
                continue;
            }
            let c = jack_expand(&kappa, beta, n)?;
            value += &(coeff * c.eval(point)? / kf.clone());
        }
    }
    Ok(Hypergeometric { value, terminated, degree_used: last })
}

fn series_coeff<F: Field>(a: &[F], b: &[F], beta: &F, kappa: &Partition) -> Result<F> {
    let mut num = F::one();
    for ai in a {
        num *= &gen_pochhammer(ai, kappa, beta)?;
    }
    let mut den = F::one();
    for bj in b {
        let p = gen_pochhammer(bj, kappa, beta)?;
        if p.is_zero() {
            return Err(Error::Domain(format!("lower parameter {bj} gives a vanishing Pochhammer at {kappa}")));
        }
        den *= &p;
    }
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn zero_argument() {
        let h = hypergeometric_pfq::<Rational>(&[], &[], &q(2, 1), &[q(0, 1), q(0, 1)], 6).unwrap();
        assert_eq!(h.value, q(1, 1));
    }

    #[test]
    fn one_variable_binomial_series() {
        // 1F0(a; x) = (1 - x)^{-a} = sum (a)_k x^k / k!
        let a = q(3, 2);
        let x = q(1, 5);
        let h = hypergeometric_pfq(std::slice::from_ref(&a), &[], &q(1, 1), std::slice::from_ref(&x), 8).unwrap();
        let mut want = q(0, 1);
        let mut term = q(1, 1);
        for k in 0..=8i64 {
            want += term.clone();
            term = term * (a.clone() + q(k, 1)) * x.clone() / q(k + 1, 1);
        }
        assert_eq!(h.value, want);
        assert!(!h.terminated);
    }

    #[test]
    fn terminating_series() {
        let h = hypergeometric_pfq(&[q(-2, 1), q(3, 4)], &[q(5, 2)], &q(2, 1), &[q(1, 3), q(1, 2)], 100).unwrap();
        assert!(h.terminated);
        assert_eq!(h.degree_used, 4);
        // one variable: 2F1(-1, b; c; x) = 1 - b x / c
        let h = hypergeometric_pfq(&[q(-1, 1), q(3, 1)], &[q(5, 1)], &q(2, 1), &[q(1, 2)], 10).unwrap();
        assert_eq!(h.value, q(1, 1) - q(3, 10));
    }

    #[test]
    fn vanishing_denominator() {
        let r = hypergeometric_pfq(&[q(1, 1)], &[q(-1, 1)], &q(2, 1), &[q(1, 2)], 4);
        assert!(matches!(r, Err(Error::Domain(_))));
    }
}
