mod common;

use common::*;
use hardedge_core::combinat::partitions_of;
use hardedge_core::mvop::*;
use hardedge_core::quad::{gauss_jacobi_unit, gauss_laguerre, jacobi_pair_integral, laguerre_pair_integral};
use hardedge_core::{Field, Partition, Rational, Real};

fn real(v: &Rational) -> Real {
    Real::from_rational(v)
}

#[test]
fn selberg_constants_match_quadrature() {
    let z = selberg_const_laguerre(2, &real(&q(0, 1)), &real(&q(2, 1))).unwrap().to_f64();
    let mass = laguerre_pair_integral(2.0, 0.0, 30, |_, _| 1.0);
    assert!((z * mass - 1.0).abs() < 1e-10, "{}", z * mass);
    // exact for integer parameters
    assert_eq!(selberg_const_laguerre(2, &q(0, 1), &q(2, 1)).unwrap(), q(1, 32));

    let z = selberg_const_jacobi(2, &q(1, 1), &q(1, 1), &q(2, 1)).unwrap().to_f64();
    let mass = jacobi_pair_integral(2.0, 1.0, 1.0, 30, |_, _| 1.0);
    assert!((z * mass - 1.0).abs() < 1e-10, "{}", z * mass);
}

#[test]
fn jack_moments_match_quadrature() {
    let w = Weight::Laguerre(LaguerreParams::new(2, q(0, 1), q(2, 1)).unwrap());
    let got = jack_moment(&part(&[1]), &w).unwrap().to_f64();
    let want = laguerre_pair_integral(2.0, 0.0, 30, |x, y| x + y);
    assert!((got - want).abs() < 1e-9 * want, "{got} vs {want}");

    let w = Weight::Jacobi(JacobiParams::new(2, real(&q(0, 1)), real(&q(0, 1)), real(&q(1, 1))).unwrap());
    let c2 = hardedge_core::symfun::jack_expand(&part(&[2]), &q(1, 1), 2).unwrap();
    let got = jack_moment(&part(&[2]), &w).unwrap().to_f64();
    let want = jacobi_pair_integral(1.0, 0.0, 0.0, 30, |x, y| eval_f64(&c2, &[x, y]));
    assert!((got - want).abs() < 1e-9 * want, "{got} vs {want}");
}

#[test]
fn norms_match_quadrature() {
    for (kappa, gamma) in [(part(&[1]), 0i64), (part(&[2]), 1)] {
        let params = LaguerreParams::new(1, q(gamma, 1), q(2, 1)).unwrap();
        let l = laguerre_poly(&kappa, &params).unwrap();
        // int L(x)^2 x^g e^{-x/2} dx with x = 2t
        let rule = gauss_laguerre(20, gamma as f64);
        let want = 2f64.powi(gamma as i32 + 1) * rule.integrate(|t| eval_f64(&l, &[2.0 * t]).powi(2));
        let got = laguerre_norm_sq(&kappa, &real(&q(gamma, 1)), &real(&q(2, 1)), 1).unwrap().to_f64();
        assert!((got - want).abs() < 1e-10 * want, "{kappa}: {got} vs {want}");
    }
}

fn lower_partitions(max: u32, n: usize) -> Vec<Partition> {
    (0..=max).flat_map(|k| partitions_of(k, n)).collect()
}

#[test]
fn laguerre_polynomials_are_orthogonal() {
    for beta in [1i64, 2] {
        for n in 1..=2usize {
            let params = LaguerreParams::new(n, q(1, 1), q(beta, 1)).unwrap();
            let parts = lower_partitions(3, n);
            let polys: Vec<_> = parts.iter().map(|k| laguerre_poly(k, &params).unwrap()).collect();
            let inner = |a: usize, b: usize| {
                if n == 1 {
                    let rule = gauss_laguerre(24, 1.0);
                    4.0 * rule.integrate(|t| eval_f64(&polys[a], &[2.0 * t]) * eval_f64(&polys[b], &[2.0 * t]))
                } else {
                    laguerre_pair_integral(beta as f64, 1.0, 24, |x, y| {
                        eval_f64(&polys[a], &[x, y]) * eval_f64(&polys[b], &[x, y])
                    })
                }
            };
            for a in 0..parts.len() {
                let na = inner(a, a);
                for b in 0..a {
                    let scale = (na * inner(b, b)).sqrt();
                    let v = inner(a, b);
                    assert!(v.abs() < 1e-8 * scale, "beta={beta} n={n} {} {}: {v:e}", parts[a], parts[b]);
                }
            }
        }
    }
}

#[test]
fn jacobi_polynomials_are_orthogonal() {
    for beta in [1i64, 2] {
        for n in 1..=2usize {
            let params = JacobiParams::new(n, q(1, 1), q(1, 2), q(beta, 1)).unwrap();
            let parts = lower_partitions(3, n);
            let polys: Vec<_> = parts.iter().map(|k| jacobi_poly(k, &params).unwrap()).collect();
            let inner = |a: usize, b: usize| {
                if n == 1 {
                    gauss_jacobi_unit(24, 1.0, 0.5).integrate(|x| eval_f64(&polys[a], &[x]) * eval_f64(&polys[b], &[x]))
                } else {
                    jacobi_pair_integral(beta as f64, 1.0, 0.5, 24, |x, y| {
                        eval_f64(&polys[a], &[x, y]) * eval_f64(&polys[b], &[x, y])
                    })
                }
            };
            for a in 0..parts.len() {
                let na = inner(a, a);
                for b in 0..a {
                    let scale = (na * inner(b, b)).sqrt();
                    let v = inner(a, b);
                    assert!(v.abs() < 1e-8 * scale, "beta={beta} n={n} {} {}: {v:e}", parts[a], parts[b]);
                }
            }
        }
    }
}

#[test]
fn constant_terms_are_anchored() {
    for kappa in lower_partitions(4, 3) {
        let lp = LaguerreParams::new(3, q(2, 3), q(5, 2)).unwrap();
        let l = laguerre_poly(&kappa, &lp).unwrap();
        assert_eq!(l.coeff(&Partition::empty()), laguerre_at_zero(&kappa, &q(2, 3), &q(5, 2), 3).unwrap());
        let jp = JacobiParams::new(3, q(1, 3), q(3, 4), q(1, 2)).unwrap();
        assert_eq!(jacobi_poly(&kappa, &jp).unwrap().coeff(&Partition::empty()), q(1, 1));
    }
}

#[test]
fn rejects_long_partitions() {
    let lp = LaguerreParams::new(2, q(1, 1), q(2, 1)).unwrap();
    assert!(laguerre_poly(&part(&[1, 1, 1]), &lp).is_err());
    assert!(LaguerreParams::new(2, q(-1, 1), q(2, 1)).is_err());
    assert!(JacobiParams::new(2, q(0, 1), q(1, 1), q(0, 1)).is_err());
}

fn sample_points() -> Vec<Rational> {
    vec![q(1, 3), q(-2, 1), q(5, 7), q(3, 1), q(-1, 4)]
}

#[test]
fn laguerre_variable_reduction() {
    let (gamma, beta) = (q(2, 1), q(2, 1));
    let (big, ratio) = reduce_vars_laguerre(&part(&[2]), &gamma, &beta, 1).unwrap();
    let small = laguerre_poly(&part(&[2]), &LaguerreParams::new(1, gamma.clone(), beta.clone()).unwrap()).unwrap();
    let large = laguerre_poly(&big, &LaguerreParams::new(2, q(1, 1), beta.clone()).unwrap()).unwrap();
    for x in sample_points() {
        let lhs = small.eval(std::slice::from_ref(&x)).unwrap();
        let rhs = ratio.clone() * large.eval(&[x, q(0, 1)]).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn jacobi_variable_reduction() {
    let (g1, g2, beta) = (q(2, 1), q(2, 1), q(2, 1));
    let small = jacobi_poly(&part(&[2]), &JacobiParams::new(1, g1.clone(), g2.clone(), beta.clone()).unwrap()).unwrap();
    for (a, b) in [(0u32, 0u32), (1, 0), (0, 1)] {
        let (big, ratio) = reduce_vars_jacobi(&part(&[2]), &g1, &g2, &beta, a, b).unwrap();
        let ng1 = g1.clone() - q(a as i64, 1);
        let ng2 = g2.clone() - q(b as i64, 1);
        let n = 1 + (a + b) as usize;
        let large = jacobi_poly(&big, &JacobiParams::new(n, ng1, ng2, beta.clone()).unwrap()).unwrap();
        if a + b == 0 {
            assert_eq!(ratio, q(1, 1));
        }
        for x in sample_points() {
            let mut point = vec![x.clone()];
            point.extend(std::iter::repeat_n(q(0, 1), a as usize));
            point.extend(std::iter::repeat_n(q(1, 1), b as usize));
            let lhs = small.eval(&[x]).unwrap();
            assert_eq!(lhs, ratio.clone() * large.eval(&point).unwrap(), "a={a} b={b}");
        }
    }
}

#[test]
fn kaneko_laguerre_integral() {
    for beta in [1i64, 2] {
        for gamma in [0i64, 1] {
            let b = q(beta, 1);
            let g = q(gamma, 1);
            let dual_beta = q(4, 1) / b.clone();
            let dual_gamma = q(2, 1) / b.clone() * (g.clone() + q(1, 1)) - q(1, 1);
            let l = laguerre_poly(&part(&[2]), &LaguerreParams::new(1, dual_gamma.clone(), dual_beta.clone()).unwrap()).unwrap();
            let l0 = laguerre_at_zero(&part(&[2]), &dual_gamma, &dual_beta, 1).unwrap();
            let z = selberg_const_laguerre(2, &real(&(g.clone() + q(1, 1))), &real(&b)).unwrap();
            let d = 1.0 / (z.to_f64() * l0.to_f64());
            for y in [0.5f64, 1.0, 2.0] {
                let lhs = laguerre_pair_integral(beta as f64, gamma as f64, 30, |x1, x2| (x1 - y) * (x2 - y));
                let rhs = d * eval_f64(&l, &[2.0 * y / beta as f64]);
                assert!((lhs - rhs).abs() < 1e-7 * lhs.abs().max(rhs.abs()), "beta={beta} gamma={gamma} y={y}: {lhs} vs {rhs}");
            }
        }
    }
}

#[test]
fn serialization_round_trips_constructed_polynomials() {
    let l = laguerre_poly(&part(&[2, 1]), &LaguerreParams::new(3, q(1, 1), q(3, 1)).unwrap()).unwrap();
    let text = PolyJson::from_poly(&*l).to_json_string().unwrap();
    let back: hardedge_core::symfun::SymmetricPoly<Rational> = PolyJson::from_json_str(&text).unwrap().to_poly().unwrap();
    assert_eq!(back, *l);
    assert!(text.find("[\n        2,\n        1\n      ]").unwrap() < text.find("\"partition\": []").unwrap());
}
