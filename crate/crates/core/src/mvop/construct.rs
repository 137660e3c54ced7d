use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::combinat::{partitions_of, subpartitions, Partition};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::symfun::{jack_expand, monomial_product, SymmetricPoly};

use super::{jack_expectation, laguerre_at_zero, JacobiParams, LaguerreParams, Weight};

/// `L_{kappa,gamma}^beta` in the monomial basis (memoized).
pub fn laguerre_poly<F: Field>(kappa: &Partition, params: &LaguerreParams<F>) -> Result<Arc<SymmetricPoly<F>>> {
    check_length(kappa, params.n_vars)?;
    let key = params.cache_key(kappa);
    F::caches().orthogonal.get_or_try_insert(key, || {
        let anchor = laguerre_at_zero(kappa, &params.gamma, &params.beta, params.n_vars)?;
        orthogonal_poly(kappa, &Weight::Laguerre(params.clone()), anchor)
    })
}

/// `P_{kappa,gamma1,gamma2}^beta` in the monomial basis, normalized by `P(0) = 1` (memoized).
pub fn jacobi_poly<F: Field>(kappa: &Partition, params: &JacobiParams<F>) -> Result<Arc<SymmetricPoly<F>>> {
    check_length(kappa, params.n_vars)?;
    let key = params.cache_key(kappa);
    F::caches()
        .orthogonal
        .get_or_try_insert(key, || orthogonal_poly(kappa, &Weight::Jacobi(params.clone()), F::one()))
}

fn check_length(kappa: &Partition, n: usize) -> Result<()> {
    if kappa.len() > n {
        return Err(Error::Parameter(format!("partition {kappa} has more than {n} parts")));
    }
    Ok(())
}

/// Expectations `E[m_nu]` of every monomial symmetric function of degree at
/// most `max_degree`, recovered from the Jack moments by triangularity.
fn monomial_expectations<F: Field>(weight: &Weight<F>, max_degree: u32) -> Result<BTreeMap<Partition, F>> {
    let n = weight.n_vars();
    let beta = weight.beta();
    let mut out = BTreeMap::new();
    for k in 0..=max_degree {
        // partitions_of is reverse-lexicographic; walk upwards so every
        // dominated monomial is known before it is needed.
        for nu in partitions_of(k, n).into_iter().rev() {
            let jack = jack_expand(&nu, beta, n)?;
            let mut rest = jack_expectation(&nu, weight)?;
            for (mu, c) in jack.terms() {
                if *mu != nu {
                    let e = out.get(mu).ok_or_else(|| Error::Internal(format!("missing moment of m_{mu}")))?;
                    rest -= &c.mul_ref(e);
                }
            }
            let lead = jack.coeff(&nu);
            out.insert(nu, rest / lead);
        }
    }
    Ok(out)
}

/// Builds the polynomial `sum_{sigma in kappa} d_sigma C_sigma` with `d_kappa = 1`
/// orthogonal to every `C_tau`, `tau` strictly inside `kappa`, then rescales
/// the constant term to `anchor`.
fn orthogonal_poly<F: Field>(kappa: &Partition, weight: &Weight<F>, anchor: F) -> Result<SymmetricPoly<F>> {
    let n = weight.n_vars();
    let beta = weight.beta();
    let sigmas: Vec<Partition> = subpartitions(kappa).into_iter().filter(|s| s.len() <= n).collect();
    let jacks: Vec<Arc<SymmetricPoly<F>>> = sigmas.iter().map(|s| jack_expand(s, beta, n)).collect::<Result<_>>()?;

    let support: Vec<Partition> = jacks
        .iter()
        .flat_map(|j| j.terms().keys().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let index: BTreeMap<&Partition, usize> = support.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let moments = monomial_expectations(weight, 2 * kappa.weight())?;

    // T[l][m] = E[m_l m_m]
    let s = support.len();
    let mut t = vec![vec![F::zero(); s]; s];
    for i in 0..s {
        for j in i..s {
            let mut acc = F::zero();
            for (nu, c) in monomial_product(&support[i], &support[j], n) {
                let e = moments.get(&nu).ok_or_else(|| Error::Internal(format!("missing moment of m_{nu}")))?;
                acc += &(F::from_integer(&c) * e.clone());
            }
            t[j][i] = acc.clone();
            t[i][j] = acc;
        }
    }

    // U = C T, then G = U C^T
    let r = sigmas.len();
    let mut u = vec![vec![F::zero(); s]; r];
    for (a, jack) in jacks.iter().enumerate() {
        for (lambda, c) in jack.terms() {
            let li = index[lambda];
            for (col, tv) in t[li].iter().enumerate() {
                if !tv.is_zero() {
                    u[a][col] += &c.mul_ref(tv);
                }
            }
        }
    }
    let mut gram = vec![vec![F::zero(); r]; r];
    for a in 0..r {
        for (b, jack) in jacks.iter().enumerate() {
            let mut acc = F::zero();
            for (mu, c) in jack.terms() {
                acc += &u[a][index[mu]].mul_ref(c);
            }
            gram[a][b] = acc;
        }
    }

    let top = sigmas.iter().position(|s| s == kappa).ok_or_else(|| Error::Internal("partition missing from its own subpartitions".into()))?;
    let others: Vec<usize> = (0..r).filter(|&i| i != top).collect();
    let matrix: Vec<Vec<F>> = others.iter().map(|&a| others.iter().map(|&b| gram[a][b].clone()).collect()).collect();
    let rhs: Vec<F> = others.iter().map(|&a| -gram[a][top].clone()).collect();
    let sol = solve_linear(matrix, rhs)?;

    let mut d = vec![F::zero(); r];
    d[top] = F::one();
    for (&i, v) in others.iter().zip(sol) {
        d[i] = v;
    }
    let mut poly = SymmetricPoly::zero(n);
    for (di, jack) in d.iter().zip(&jacks) {
        poly.add_scaled(jack, di);
    }
    let constant = poly.coeff(&Partition::empty());
    if constant.is_zero() {
        return Err(Error::Internal(format!("orthogonal polynomial for {kappa} has zero constant term")));
    }
    let mut out = poly.scale(&(anchor.clone() / constant));
    if !F::EXACT {
        // pin the anchor exactly rather than up to rounding
        out.terms.remove(&Partition::empty());
        out.add_term(Partition::empty(), anchor);
    }
    Ok(out)
}

/// Gaussian elimination; pivots on the largest magnitude for inexact fields.
pub(crate) fn solve_linear<F: Field>(mut a: Vec<Vec<F>>, mut b: Vec<F>) -> Result<Vec<F>> {
    let n = b.len();
    for col in 0..n {
        let pivot = if F::EXACT {
            (col..n).find(|&r| !a[r][col].is_zero())
        } else {
            (col..n)
                .filter(|&r| !a[r][col].is_zero())
                .max_by(|&x, &y| a[x][col].abs().partial_cmp(&a[y][col].abs()).unwrap_or(std::cmp::Ordering::Equal))
        };
        let p = pivot.ok_or_else(|| Error::Internal("singular orthogonality system".into()))?;
        a.swap(col, p);
        b.swap(col, p);
        let inv = a[col][col].recip();
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].mul_ref(&inv);
            for k in col..n {
                let v = f.mul_ref(&a[col][k]);
                a[row][k] -= &v;
            }
            let v = f.mul_ref(&b[col]);
            b[row] -= &v;
        }
    }
    let mut x = vec![F::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for k in row + 1..n {
            acc -= &a[row][k].mul_ref(&x[k]);
        }
        x[row] = acc / a[row][row].clone();
    }
    Ok(x)
}
