//! Acceptance gate: prints one line per criterion and exits non-zero if any
//! gated check fails.

mod common;

use std::collections::BTreeSet;
use std::time::Instant;

use common::*;
use hardedge_core::combinat::{dominance_leq, partitions_of};
use hardedge_core::hardedge::{
    jacobi_smallest_cdf, laguerre_smallest_cdf, laguerre_smallest_pdf, laguerre_z_ratio,
    oracle_jacobi_cdf_hypergeometric, oracle_laguerre_pdf_beta1,
};
use hardedge_core::identities::{
    jacobi_diff_residual, laguerre_diff_residual, leading_term_at_zero, painleve5_leading_coefficient,
    painleve5_residual, painleve5_sigma, sigma_consistency_jacobi, sigma_consistency_laguerre,
};
use hardedge_core::mc::{ks_distance, sample_jbe, sample_lbe};
use hardedge_core::mvop::{laguerre_at_zero, laguerre_poly, selberg_const_laguerre, LaguerreParams};
use hardedge_core::quad::{gauss_laguerre, laguerre_pair_integral};
use hardedge_core::symfun::{jack_expand, SymmetricPoly};
use hardedge_core::univariate::UniPoly;
use hardedge_core::{Field, Partition, Rational, Real};

const REAL_CORPUS_RTOL: f64 = 1e-40;
const MASS_TOL: f64 = 1e-10;
const HYPERGEOMETRIC_TOL: f64 = 1e-10;
const BETA1_DENSITY_TOL: f64 = 1e-9;
const KANEKO_TOL: f64 = 1e-7;
const KS_COUNT: usize = 100_000;
const KS_THRESHOLD: f64 = 0.006;
const KS_SEEDS: [u64; 3] = [7, 2024, 31337];

struct Line {
    pass: bool,
    gated: bool,
    text: String,
}

fn report(id: u32, name: &str, pass: bool, detail: String, started: Instant) -> Line {
    let status = if pass { "PASS" } else { "FAIL" };
    Line { pass, gated: pass, text: format!("criterion {id} [{name}]: {status} ({detail}; {:.1}s)", started.elapsed().as_secs_f64()) }
}

type Mismatch = (String, String);

/// Coefficients where the constructed corpus differs from `want`, per entry.
fn rational_poly_mismatches(name: &str, got: &SymmetricPoly<Rational>, want: &SymmetricPoly<Rational>) -> Vec<Mismatch> {
    let keys: BTreeSet<Partition> = got.terms().keys().chain(want.terms().keys()).cloned().collect();
    keys.into_iter()
        .filter(|k| got.coeff(k) != want.coeff(k))
        .map(|k| (name.to_string(), k.parts().iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
        .collect()
}

fn rational_diag_mismatches(name: &str, got: &UniPoly<Rational>, want: &[Rational]) -> Vec<Mismatch> {
    (0..want.len().max(got.coeffs().len()))
        .filter(|&k| got.coeff(k) != want.get(k).cloned().unwrap_or_default())
        .map(|k| (name.to_string(), k.to_string()))
        .collect()
}

fn real_diag_mismatches(name: &str, got: &UniPoly<Real>, want: &[Real]) -> Vec<Mismatch> {
    (0..want.len().max(got.coeffs().len()))
        .filter(|&k| {
            let w = want.get(k).cloned().unwrap_or_else(Real::zero);
            let err = (got.coeff(k) - w.clone()).abs().to_f64() / w.abs().to_f64().max(1e-300);
            err >= REAL_CORPUS_RTOL
        })
        .map(|k| (name.to_string(), k.to_string()))
        .collect()
}

struct Built {
    polys: Vec<(String, SymmetricPoly<Rational>, SymmetricPoly<Rational>)>,
    rational: Vec<(String, UniPoly<Rational>, Vec<Rational>)>,
    real: Vec<(String, UniPoly<Real>, Vec<Real>)>,
    documented: BTreeSet<Mismatch>,
}

fn build_corpus() -> Built {
    let c = corpus();
    let mut documented = BTreeSet::new();
    let mut polys = Vec::new();
    for e in &c.polynomials {
        let got = build::<Rational>(&e.family, &e.kappa, e.n_vars, &e.params, false);
        polys.push((e.name.clone(), got, load_poly(e)));
        documented.extend(e.corrected.keys().map(|k| (e.name.clone(), k.clone())));
    }
    let (mut rational, mut real) = (Vec::new(), Vec::new());
    for e in &c.diagonals {
        documented.extend(e.corrected.keys().map(|k| (e.name.clone(), k.clone())));
        if e.field == "real" {
            let (got, want) = diagonal_pair::<Real>(e);
            real.push((e.name.clone(), got, want));
        } else {
            let (got, want) = diagonal_pair::<Rational>(e);
            rational.push((e.name.clone(), got, want));
        }
    }
    Built { polys, rational, real, documented }
}

fn corpus_mismatches(b: &Built) -> BTreeSet<Mismatch> {
    let mut out = BTreeSet::new();
    for (name, got, want) in &b.polys {
        out.extend(rational_poly_mismatches(name, got, want));
    }
    for (name, got, want) in &b.rational {
        out.extend(rational_diag_mismatches(name, got, want));
    }
    for (name, got, want) in &b.real {
        out.extend(real_diag_mismatches(name, got, want));
    }
    out
}

fn criterion_1() -> (Line, Built) {
    let t = Instant::now();
    let built = build_corpus();
    let mismatches = corpus_mismatches(&built);
    let entries = built.polys.len() + built.rational.len() + built.real.len();
    let bad: BTreeSet<&String> = mismatches.iter().map(|(n, _)| n).collect();
    let listed: Vec<String> = mismatches.iter().map(|(n, k)| format!("{n}@{k}")).collect();
    let explained = mismatches == built.documented;
    let detail = format!(
        "{}/{} printed entries reproduced exactly; mismatching coefficients [{}]; mismatch set {} the documented corrections",
        entries - bad.len(),
        entries,
        listed.join(" "),
        if explained { "equals" } else { "DIFFERS FROM" }
    );
    let mut line = report(1, "explicit-polynomial corpus", mismatches.is_empty(), detail, t);
    // unattainable against the printed text; gated on matching the documented corrections
    line.gated = explained && t.elapsed().as_secs() < 60;
    (line, built)
}

fn criterion_2() -> Line {
    let t = Instant::now();
    let ints = |v: &[i64]| UniPoly::new(v.iter().map(|&c| Rational::from(c)).collect::<Vec<_>>());
    let cdf = laguerre_smallest_cdf(4, &q(1, 2), &q(3, 1)).unwrap();
    let cdf_printed = ints(&[
        212837625, 425675250, 425675250, 283783500, 136070550, 48440700, 13020084, 2644488, 401814, 44604, 3444, 168, 4,
    ])
    .scale(&q(1, 212837625));
    let pdf = laguerre_smallest_pdf(4, &q(1, 2), &q(3, 1)).unwrap();
    let pdf_printed = ints(&[2910600, 3742200, 2345112, 941094, 259308, 50274, 6846, 630, 36, 1]).scale(&q(8, 212837625));
    let cdf_ok = cdf.poly.scale(&cdf.constant) == cdf_printed && cdf.exp_rate == Some(q(2, 1));
    let pdf_ok = pdf.poly.scale(&pdf.constant) == pdf_printed && pdf.power == q(3, 1) && pdf.exp_rate == Some(q(2, 1));
    let z = laguerre_z_ratio(4, &q(3, 1), &q(1, 2)).unwrap();
    let l0 = laguerre_at_zero(&Partition::new(vec![3, 3, 3]), &q(5, 1), &q(8, 1), 3).unwrap();
    let real = pdf.to_real();
    let coeffs: Vec<f64> = real.poly.coeffs().iter().map(|v| v.to_f64()).collect();
    let eval = |x: f64| coeffs.iter().rev().fold(0.0, |acc, &a| acc * x + a);
    // x = t / 2
    let mass = real.constant.to_f64() / 16.0 * gauss_laguerre(40, 3.0).integrate(|s| eval(s / 2.0));
    let pass = cdf_ok && pdf_ok && z == q(16, 585) && l0 == q(433520640, 1) && (mass - 1.0).abs() < MASS_TOL;
    let detail = format!(
        "F coefficients {} (401814 x^8), f coefficients {}, Z-ratio {z}, L(0) = {l0}, |mass - 1| = {:.1e} < {MASS_TOL:e}",
        if cdf_ok { "match" } else { "DIFFER" },
        if pdf_ok { "match" } else { "DIFFER" },
        (mass - 1.0).abs()
    );
    report(2, "worked example", pass, detail, t)
}

fn criterion_3() -> Line {
    let t = Instant::now();
    let betas = [q(1, 2), q(1, 1), q(2, 1), q(3, 1)];
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 2..=4usize {
        for g in 0..=3i64 {
            for b in &betas {
                checked += 1;
                if !laguerre_diff_residual(n, b, &Rational::from(g)).unwrap().pass {
                    failures.push(format!("laguerre-diff({n},{b},{g})"));
                }
                for g2 in [q(1, 2), q(1, 1), q(2, 1)] {
                    checked += 1;
                    if !jacobi_diff_residual(n, b, &Rational::from(g), &g2).unwrap().pass {
                        failures.push(format!("jacobi-diff({n},{b},{g},{g2})"));
                    }
                }
            }
            checked += 1;
            if !sigma_consistency_laguerre(n, &Rational::from(g)).unwrap().pass {
                failures.push(format!("lue-sigma({n},{g})"));
            }
            for g2 in [q(1, 2), q(1, 1), q(2, 1)] {
                checked += 1;
                if !sigma_consistency_jacobi(n, &Rational::from(g), &g2).unwrap().pass {
                    failures.push(format!("jue-sigma({n},{g},{g2})"));
                }
            }
            if g == 0 {
                continue;
            }
            checked += 1;
            let sigma = painleve5_sigma(n, &Rational::from(g)).unwrap();
            let lead = leading_term_at_zero(&sigma).unwrap();
            let want = (g as usize + 1, painleve5_leading_coefficient::<Rational>(n, g as u32));
            if !painleve5_residual(&sigma, n, &Rational::from(g)).is_zero() || lead != want {
                failures.push(format!("painleve5({n},{g})"));
            }
        }
    }
    let pass = failures.is_empty() && t.elapsed().as_secs() < 120;
    let detail = format!("{checked} exact identity checks, {} nonzero residuals {:?}", failures.len(), failures);
    report(3, "identity suites", pass, detail, t)
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
                let s = Rational::from(&f * &m[c][j]);
                m[r][j] -= s;
            }
        }
    }
    out
}

fn schur(lambda: &Partition, x: &[Rational]) -> Rational {
    let n = x.len();
    let parts = lambda.padded(n);
    let alt = |e: &dyn Fn(usize) -> u32| det((0..n).map(|i| (0..n).map(|j| x[i].powi(e(j) as i64)).collect()).collect());
    alt(&|j| parts[j] + (n - 1 - j) as u32) / alt(&|j| (n - 1 - j) as u32)
}

fn criterion_4() -> Line {
    let t = Instant::now();
    let betas = [q(1, 2), q(1, 1), q(2, 1), q(3, 1), q(4, 1)];
    let point = [q(1, 2), q(-3, 1), q(2, 5), q(7, 3)];
    let scale = q(-5, 3);
    let (mut sums, mut tri, mut schur_ok, mut homog) = (true, true, true, true);
    for b in &betas {
        for n in 1..=4usize {
            for k in 0..=6u32 {
                let mut total = SymmetricPoly::zero(n);
                for kappa in partitions_of(k, n) {
                    let c = jack_expand(&kappa, b, n).unwrap();
                    total = total.add(&c).unwrap();
                    tri &= c.terms().keys().all(|l| dominance_leq(l, &kappa).unwrap());
                    let x = &point[..n];
                    let scaled: Vec<Rational> = x.iter().map(|v| Rational::from(v * &scale)).collect();
                    homog &= c.eval(&scaled).unwrap() == c.eval(x).unwrap() * scale.powi(k as i64);
                    if *b == q(2, 1) && k <= 5 {
                        let monic = c.scale(&c.coeff(&kappa).recip());
                        schur_ok &= monic.eval(x).unwrap() == schur(&kappa, x);
                    }
                }
                sums &= total == SymmetricPoly::power_sum_power(n, k);
            }
        }
    }
    let detail = format!(
        "sum identity k<=6 n<=4 5 betas: {sums}; dominance triangularity: {tri}; beta=2 Schur: {schur_ok}; homogeneity: {homog}"
    );
    report(4, "jack layer", sums && tri && schur_ok && homog, detail, t)
}

fn criterion_5() -> Line {
    let t = Instant::now();
    let mut dk = 0.0f64;
    for (n, b, g1, g2) in [(3, q(4, 3), 2, q(2, 3)), (2, q(1, 2), 3, q(1, 4))] {
        let (b, g1, g2) = (Real::from_rational(&b), Real::from_i64(g1), Real::from_rational(&g2));
        let law = jacobi_smallest_cdf(n, &b, &g1, &g2).unwrap();
        for x in [0.25, 0.5, 0.75] {
            let xr = Real::from_f64(x);
            let want = oracle_jacobi_cdf_hypergeometric(n, &b, &g1, &g2, &xr).unwrap();
            dk = dk.max((law.eval(&xr).unwrap() - want).abs().to_f64());
        }
    }
    let mut kr = 0.0f64;
    for (n, g) in [(3usize, 1i64), (2, 2), (4, 1)] {
        let law = laguerre_smallest_pdf(n, &q(1, 1), &Rational::from(g)).unwrap().to_real();
        let gamma = Real::from_i64(g);
        let one = Real::from_i64(1);
        let (base, f1) = (oracle_laguerre_pdf_beta1(n, &gamma, &one).unwrap(), law.eval(&one).unwrap());
        for x in [0.5, 2.0, 3.7] {
            let xr = Real::from_f64(x);
            let want = oracle_laguerre_pdf_beta1(n, &gamma, &xr).unwrap() / base.clone();
            let got = law.eval(&xr).unwrap() / f1.clone();
            kr = kr.max(((got - want.clone()) / want).abs().to_f64());
        }
    }
    let mut kan = 0.0f64;
    for beta in [1i64, 2] {
        for gamma in [0i64, 1] {
            let (b, g) = (q(beta, 1), q(gamma, 1));
            let dual_beta = q(4, 1) / b.clone();
            let dual_gamma = q(2, 1) / b.clone() * (g.clone() + q(1, 1)) - q(1, 1);
            let l = laguerre_poly(&part(&[2]), &LaguerreParams::new(1, dual_gamma.clone(), dual_beta.clone()).unwrap()).unwrap();
            let l0 = laguerre_at_zero(&part(&[2]), &dual_gamma, &dual_beta, 1).unwrap();
            let z = selberg_const_laguerre(2, &Real::from_rational(&(g + q(1, 1))), &Real::from_rational(&b)).unwrap();
            let d = 1.0 / (z.to_f64() * l0.to_f64());
            for y in [0.5f64, 1.0, 2.0] {
                let lhs = laguerre_pair_integral(beta as f64, gamma as f64, 30, |x1, x2| (x1 - y) * (x2 - y));
                let rhs = d * eval_f64(&l, &[2.0 * y / beta as f64]);
                kan = kan.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()));
            }
        }
    }
    let pass = dk < HYPERGEOMETRIC_TOL && kr < BETA1_DENSITY_TOL && kan < KANEKO_TOL;
    let detail = format!(
        "hypergeometric oracle max abs err {dk:.1e} < {HYPERGEOMETRIC_TOL:e}; beta=1 density oracle max rel err {kr:.1e} < {BETA1_DENSITY_TOL:e}; Kaneko-Laguerre max rel err {kan:.1e} < {KANEKO_TOL:e}"
    );
    report(5, "oracle agreement", pass, detail, t)
}

/// KS distances for the four desk-scale sets at every seed, with the
/// distance against the same law with gamma (resp. gamma1) raised by one.
fn ks_runs() -> Vec<(String, Vec<f64>, f64)> {
    let mut out = Vec::new();
    let (b, g) = (q(5, 2), q(2, 1));
    let law = laguerre_smallest_cdf(4, &b, &g).unwrap();
    let wrong = laguerre_smallest_cdf(4, &b, &q(3, 1)).unwrap();
    let ds = KS_SEEDS.iter().map(|&s| ks_distance(&sample_lbe(4, &b, &g, KS_COUNT, s).unwrap(), &law).unwrap()).collect();
    let w = ks_distance(&sample_lbe(4, &b, &g, KS_COUNT, KS_SEEDS[0]).unwrap(), &wrong).unwrap();
    out.push(("lbe(n=4,beta=5/2,gamma=2)".to_string(), ds, w));

    let (e, g) = (Real::e(), Real::from_i64(2));
    let law = laguerre_smallest_cdf(3, &e, &g).unwrap();
    let wrong = laguerre_smallest_cdf(3, &e, &Real::from_i64(3)).unwrap();
    let ds = KS_SEEDS.iter().map(|&s| ks_distance(&sample_lbe(3, &e, &g, KS_COUNT, s).unwrap(), &law).unwrap()).collect();
    let w = ks_distance(&sample_lbe(3, &e, &g, KS_COUNT, KS_SEEDS[0]).unwrap(), &wrong).unwrap();
    out.push(("lbe(n=3,beta=e,gamma=2)".to_string(), ds, w));

    for (n, b, g1, g2, label) in
        [(3, q(4, 3), 2, q(2, 3), "jbe(n=3,beta=4/3,gamma1=2,gamma2=2/3)"), (2, q(1, 2), 3, q(1, 4), "jbe(n=2,beta=1/2,gamma1=3,gamma2=1/4)")]
    {
        let g1r = Rational::from(g1);
        let law = jacobi_smallest_cdf(n, &b, &g1r, &g2).unwrap();
        let wrong = jacobi_smallest_cdf(n, &b, &Rational::from(g1 + 1), &g2).unwrap();
        let ds = KS_SEEDS
            .iter()
            .map(|&s| ks_distance(&sample_jbe(n, &b, &g1r, &g2, KS_COUNT, s).unwrap(), &law).unwrap())
            .collect();
        let w = ks_distance(&sample_jbe(n, &b, &g1r, &g2, KS_COUNT, KS_SEEDS[0]).unwrap(), &wrong).unwrap();
        out.push((label.to_string(), ds, w));
    }
    out
}

fn criterion_6(runs: &[(String, Vec<f64>, f64)], started: Instant) -> Line {
    let worst = runs.iter().flat_map(|(_, d, _)| d.iter().copied()).fold(0.0, f64::max);
    let cells: Vec<String> = runs
        .iter()
        .map(|(l, d, _)| format!("{l}: {}", d.iter().map(|v| format!("{v:.5}")).collect::<Vec<_>>().join("/")))
        .collect();
    let pass = worst < KS_THRESHOLD && started.elapsed().as_secs() < 300;
    let detail = format!("N={KS_COUNT}, seeds {KS_SEEDS:?}, max KS {worst:.5} < {KS_THRESHOLD}; {}", cells.join("; "));
    report(6, "monte carlo", pass, detail, started)
}

fn perturbation_escapes(b: &Built) -> Vec<String> {
    let mut escaped = Vec::new();
    let bump = q(1, 1000);
    for (name, got, _) in &b.polys {
        for (k, c) in got.terms() {
            let mut p = got.clone();
            p.add_term(k.clone(), c.clone() * bump.clone() + q(1, 1000));
            if rational_poly_mismatches(name, got, &p).is_empty() {
                escaped.push(format!("{name}@{k:?}"));
            }
        }
    }
    for (name, got, _) in &b.rational {
        for k in 0..got.coeffs().len() {
            let mut w = got.coeffs().to_vec();
            w[k] = w[k].clone() * (q(1, 1) + bump.clone()) + q(1, 1000);
            if rational_diag_mismatches(name, got, &w).is_empty() {
                escaped.push(format!("{name}@{k}"));
            }
        }
    }
    for (name, got, _) in &b.real {
        for k in 0..got.coeffs().len() {
            let mut w = got.coeffs().to_vec();
            w[k] = w[k].clone() * (Real::one() + Real::from_f64(1e-30));
            if real_diag_mismatches(name, got, &w).is_empty() {
                escaped.push(format!("{name}@{k}"));
            }
        }
    }
    escaped
}

fn criterion_7(runs: &[(String, Vec<f64>, f64)], built: &Built) -> Line {
    let t = Instant::now();
    let weakest = runs.iter().map(|(_, _, w)| *w).fold(f64::INFINITY, f64::min);
    let total: usize = built.polys.iter().map(|(_, g, _)| g.len()).sum::<usize>()
        + built.rational.iter().map(|(_, g, _)| g.coeffs().len()).sum::<usize>()
        + built.real.iter().map(|(_, g, _)| g.coeffs().len()).sum::<usize>();
    let escaped = perturbation_escapes(built);
    let pass = weakest >= 10.0 * KS_THRESHOLD && escaped.is_empty();
    let detail = format!(
        "mis-parameterized KS min {weakest:.4} >= {:.3}; {}/{total} single-coefficient corpus perturbations detected{}",
        10.0 * KS_THRESHOLD,
        total - escaped.len(),
        if escaped.is_empty() { String::new() } else { format!(", escaped {escaped:?}") }
    );
    report(7, "negative controls", pass, detail, t)
}

fn main() {
    let (c1, built) = criterion_1();
    println!("{}", c1.text);
    let mut lines = vec![c1];
    for f in [criterion_2, criterion_3, criterion_4, criterion_5] {
        let l = f();
        println!("{}", l.text);
        lines.push(l);
    }
    let t = Instant::now();
    let runs = ks_runs();
    let c6 = criterion_6(&runs, t);
    println!("{}", c6.text);
    let c7 = criterion_7(&runs, &built);
    println!("{}", c7.text);
    lines.push(c6);
    lines.push(c7);
    let passed = lines.iter().filter(|l| l.pass).count();
    let gated = lines.iter().all(|l| l.gated);
    println!("acceptance: {passed}/{} criteria pass; gate {}", lines.len(), if gated { "ok" } else { "FAILED" });
    if !gated {
        std::process::exit(1);
    }
}
