mod common;

use common::{part, q};
use hardedge_core::combinat::{dominance_leq, partitions_of};
use hardedge_core::symfun::{jack_expand, to_jack_basis, SymmetricPoly};
use hardedge_core::{Field, Partition, Rational};
use proptest::prelude::*;

fn betas() -> [Rational; 5] {
    [q(1, 2), q(1, 1), q(2, 1), q(3, 1), q(4, 1)]
}

#[test]
fn jack_sum_is_power_of_first_power_sum() {
    for beta in betas() {
        for n in 1..=4usize {
            for k in 0..=6u32 {
                let mut total = SymmetricPoly::zero(n);
                for kappa in partitions_of(k, n) {
                    total = total.add(&jack_expand(&kappa, &beta, n).unwrap()).unwrap();
                }
                assert_eq!(total, SymmetricPoly::power_sum_power(n, k), "beta={beta} n={n} k={k}");
            }
        }
    }
}

#[test]
fn jack_is_dominance_triangular() {
    for beta in betas() {
        for k in 1..=6u32 {
            for kappa in partitions_of(k, 4) {
                let c = jack_expand(&kappa, &beta, 4).unwrap();
                assert!(!c.coeff(&kappa).is_zero());
                for lambda in c.terms().keys() {
                    assert!(dominance_leq(lambda, &kappa).unwrap(), "beta={beta}: m_{lambda:?} in C_{kappa:?}");
                }
            }
        }
    }
}

fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut out = q(1, 1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else { return q(0, 1) };
        if p != c {
            m.swap(p, c);
            out = -out;
        }
        let pivot = m[c][c].clone();
        out *= &pivot;
        for r in c + 1..n {
            let f = Rational::from(&m[r][c] / &pivot);
            for j in c..n {
                let t = Rational::from(&f * &m[c][j]);
                m[r][j] -= t;
            }
        }
    }
    out
}

/// Schur polynomial as a ratio of alternants.
fn schur_bialternant(lambda: &Partition, x: &[Rational]) -> Rational {
    let n = x.len();
    let parts = lambda.padded(n);
    let alt = |shift: &dyn Fn(usize) -> u32| {
        det((0..n).map(|i| (0..n).map(|j| x[i].clone().powi(shift(j) as i64)).collect()).collect())
    };
    alt(&|j| parts[j] + (n - 1 - j) as u32) / alt(&|j| (n - 1 - j) as u32)
}

#[test]
fn beta_two_jack_is_schur() {
    let points: Vec<Vec<Rational>> = vec![
        vec![q(1, 2), q(-3, 1), q(2, 5), q(7, 3)],
        vec![q(5, 1), q(1, 7), q(-2, 3), q(3, 4)],
        vec![q(-1, 4), q(9, 2), q(4, 1), q(1, 3)],
    ];
    for n in 1..=4usize {
        for k in 0..=5u32 {
            for kappa in partitions_of(k, n) {
                let c = jack_expand(&kappa, &q(2, 1), n).unwrap();
                let monic = c.scale(&c.coeff(&kappa).recip());
                for pt in &points {
                    let x = &pt[..n];
                    assert_eq!(monic.eval(x).unwrap(), schur_bialternant(&kappa, x), "kappa={kappa:?} n={n}");
                }
            }
        }
    }
}

#[test]
fn jack_basis_round_trip_exhaustive() {
    for beta in [q(1, 2), q(3, 1)] {
        for k in 0..=6u32 {
            for kappa in partitions_of(k, 4) {
                let c = jack_expand(&kappa, &beta, 4).unwrap();
                let coeffs = to_jack_basis(&c, &beta).unwrap();
                assert_eq!(coeffs.len(), 1);
                assert_eq!(coeffs[&kappa], q(1, 1));
            }
        }
    }
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(a, b)| q(a, b))
}

fn jack_case() -> impl Strategy<Value = (Partition, Rational)> {
    let kappa = (1u32..=6).prop_flat_map(|k| {
        let all = partitions_of(k, 4);
        (0..all.len()).prop_map(move |i| all[i].clone())
    });
    let beta = prop_oneof![Just(q(1, 2)), Just(q(1, 1)), Just(q(2, 1)), Just(q(3, 1)), Just(q(4, 1)), Just(q(2, 3))];
    (kappa, beta)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn jack_is_homogeneous((kappa, beta) in jack_case(), t in small_rational(), pt in prop::collection::vec(small_rational(), 4)) {
        let c = jack_expand(&kappa, &beta, 4).unwrap();
        let scaled: Vec<Rational> = pt.iter().map(|v| Rational::from(v * &t)).collect();
        let lhs = c.eval(&scaled).unwrap();
        let rhs = c.eval(&pt).unwrap() * t.powi(kappa.weight() as i64);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jack_coefficients_round_trip(k in 1u32..=5, beta in prop_oneof![Just(q(1, 2)), Just(q(2, 1)), Just(q(5, 3))],
                                    seed in prop::collection::vec(small_rational(), 7)) {
        let parts = partitions_of(k, 3);
        let mut f = SymmetricPoly::zero(3);
        let mut want = std::collections::BTreeMap::new();
        for (kappa, c) in parts.iter().zip(seed.iter().cycle()) {
            if c.is_zero() {
                continue;
            }
            f.add_scaled(&jack_expand(kappa, &beta, 3).unwrap(), c);
            want.insert(kappa.clone(), c.clone());
        }
        prop_assert_eq!(to_jack_basis(&f, &beta).unwrap(), want);
    }

    #[test]
    fn product_is_commutative_and_matches_evaluation(
        a in jack_case(), b in 1u32..=3, pt in prop::collection::vec(small_rational(), 3)
    ) {
        let (kappa, beta) = a;
        prop_assume!(kappa.len() <= 3);
        let f = jack_expand(&kappa, &beta, 3).unwrap();
        let g = jack_expand(&part(&[b]), &beta, 3).unwrap();
        let fg = f.mul(&g).unwrap();
        prop_assert_eq!(&fg, &g.mul(&f).unwrap());
        prop_assert_eq!(fg.eval(&pt).unwrap(), f.eval(&pt).unwrap() * g.eval(&pt).unwrap());
    }
}
