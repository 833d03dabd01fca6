//! End-to-end acceptance gates, one test per criterion. Each test prints a
//! single `criterion NN PASS|FAIL <name>: <numbers>` line before asserting,
//! so a plain `--nocapture` run yields a ten-line scoreboard.
//!
//! - 1-3 gate the symmetric-function layer: the eigen-operator kernel, the
//!   series collapse identities, and the unitary-group sampling oracle.
//! - 4-6 gate the ensemble layer: density normalization, the size/coupling
//!   swap, and closed averages against direct sampling.
//! - 7-8 gate the limit windows and the circular first moments.
//! - 9-10 gate the desk-scale convergence scans and byte reproducibility.

use charpoly::{
    cue_moment, cue_moment_mc, duality_check_gaussian, duality_check_laguerre, exact_k_gaussian,
    exact_k_laguerre, mc_charpoly_avg, CharPolyQuery, DualityMode, Sampler,
};
use combinatorics::{
    eigen_residual, enumerate_partitions, jack_eval, jack_polynomial, JackParams,
};
use ensembles::{density, EnsembleSpec};
use hyperfun::{
    check_1f1_identity, haar_mc_0f0, hyperg_two_set, HypergeometricSpec, TruncationPolicy,
};
use num_complex::Complex64;
use numeric::{integrate, QuadOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use scalinglimits::{crit_b_z, gauss_g_z, hard_w_z, pearcey_p_z, EvalPolicy};
use statrs::function::gamma::gamma;
use std::f64::consts::PI;
use transition_cli::{
    render, run_convergence_scan, ExperimentConfig, Family, OutputFormat,
};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Prints the per-criterion verdict line, then asserts it.
fn report(index: usize, name: &str, pass: bool, detail: &str) {
    let verdict = if pass { "PASS" } else { "FAIL" };
    println!("criterion {index:02} {verdict} {name}: {detail}");
    assert!(pass, "criterion {index:02} {name}: {detail}");
}

/// Complex determinant by Gaussian elimination with partial pivoting;
/// the matrices here stay at size four or below.
fn det(mut m: Vec<Vec<Complex64>>) -> Complex64 {
    let n = m.len();
    let mut d = Complex64::new(1.0, 0.0);
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| m[i][col].norm().total_cmp(&m[j][col].norm()))
            .expect("non-empty pivot range");
        if m[pivot][col].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if pivot != col {
            m.swap(pivot, col);
            d = -d;
        }
        d *= m[col][col];
        for row in (col + 1)..n {
            let factor = m[row][col] / m[col][col];
            for k in col..n {
                let sub = factor * m[col][k];
                m[row][k] -= sub;
            }
        }
    }
    d
}

/// Independent ratio-of-alternants evaluation of the alpha = 1 polynomial:
/// `det(x_i^(k_j + n - j)) / det(x_i^(n - j))` with the index padded by
/// zeros to the variable count.
fn bialternant(parts: &[usize], xs: &[Complex64]) -> Complex64 {
    let n = xs.len();
    let mut padded = vec![0usize; n];
    padded[..parts.len()].copy_from_slice(parts);
    let num: Vec<Vec<Complex64>> = xs
        .iter()
        .map(|&x| (0..n).map(|j| x.powu((padded[j] + n - 1 - j) as u32)).collect())
        .collect();
    let den: Vec<Vec<Complex64>> =
        xs.iter().map(|&x| (0..n).map(|j| x.powu((n - 1 - j) as u32)).collect()).collect();
    det(num) / det(den)
}

/// Random complex points kept away from zero and from each other, so both
/// the operator residual and the alternant ratio stay well conditioned.
fn distinct_points(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    loop {
        let pt: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let apart = (0..n).all(|i| ((i + 1)..n).all(|j| (pt[i] - pt[j]).norm() > 0.3));
        if apart && pt.iter().all(|z| z.norm() > 0.15) {
            return pt;
        }
    }
}

#[test]
fn criterion_01_jack_kernel() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut worst_resid = 0.0f64;
    let mut worst_spread = 0.0f64;
    let mut kernels = 0usize;
    for n in 1..=4usize {
        for weight in 1..=6usize {
            for kappa in enumerate_partitions(weight, n) {
                for alpha in [0.5, 1.0, 2.0] {
                    let poly = jack_polynomial(&kappa, &JackParams { alpha, nvars: n })
                        .expect("index fits the variable count");
                    kernels += 1;
                    let mut ratios: Vec<Complex64> = Vec::new();
                    for _ in 0..20 {
                        let pt = distinct_points(&mut rng, n);
                        let resid = eigen_residual(&poly, &pt).expect("distinct coordinates");
                        worst_resid = worst_resid.max(resid);
                        if alpha == 1.0 {
                            let value = jack_eval(&poly, &pt).expect("matching arity");
                            ratios.push(value / bialternant(kappa.parts(), &pt));
                        }
                    }
                    if let Some(&first) = ratios.first() {
                        for &r in &ratios[1..] {
                            worst_spread = worst_spread.max((r - first).norm() / first.norm());
                        }
                    }
                }
            }
        }
    }
    let pass = worst_resid < 1e-8 && worst_spread < 1e-10;
    report(
        1,
        "jack kernel",
        pass,
        &format!(
            "{kernels} polynomials at 20 points each, worst operator residual {worst_resid:.1e} \
             (tol 1e-8), alpha=1 alternant-ratio spread {worst_spread:.1e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_02_hypergeometric_identities() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let policy = TruncationPolicy { max_degree: 60, tail_tol: 1e-13 };
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for beta in [1.0, 2.0, 4.0] {
        let alpha = 2.0 / beta;
        for n in [2usize, 4] {
            let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let yc: Vec<Complex64> = y.iter().map(|&v| c(v)).collect();
            // A zero first argument kills every positive-weight term.
            for (upper, lower) in [(vec![], vec![]), (vec![0.9], vec![1.7])] {
                let spec = HypergeometricSpec::new(upper, lower, alpha, n).expect("valid spec");
                let zeros = vec![Complex64::new(0.0, 0.0); n];
                let v = hyperg_two_set(&spec, &zeros, &yc, &policy).expect("series evaluates");
                worst = worst.max((v.value - c(1.0)).norm());
                if !v.converged {
                    worst = f64::INFINITY;
                }
                checks += 1;
            }
            // An equal-entries second argument collapses the two-set series
            // to a plain exponential of the coordinate sum.
            let y0 = rng.gen_range(-0.8..0.8);
            let xs: Vec<Complex64> = (0..n).map(|_| c(rng.gen_range(-1.0..1.0))).collect();
            let spec00 = HypergeometricSpec::new(vec![], vec![], alpha, n).expect("valid spec");
            let equal = vec![c(y0); n];
            let v = hyperg_two_set(&spec00, &xs, &equal, &policy).expect("series evaluates");
            let sum: Complex64 = xs.iter().sum();
            let want = (sum * y0).exp();
            worst = worst.max((v.value - want).norm() / want.norm());
            if !v.converged {
                worst = f64::INFINITY;
            }
            checks += 1;
            // Balanced (+1, -1) first argument against the confluent series.
            let resid = check_1f1_identity(beta, n, &y, &policy).expect("even count");
            worst = worst.max(resid);
            checks += 1;
        }
    }
    let pass = worst < 1e-8;
    report(
        2,
        "hypergeometric identities",
        pass,
        &format!("{checks} identities over beta in {{1,2,4}}, worst residual {worst:.1e} (tol 1e-8)"),
    );
}

#[test]
fn criterion_03_haar_oracle() {
    let policy = TruncationPolicy { max_degree: 40, tail_tol: 1e-13 };
    let cases: [(usize, &[f64], &[f64]); 2] = [
        (2, &[0.3, -0.2], &[0.5, 0.1]),
        (3, &[0.3, -0.2, 0.7], &[0.5, 0.1, -0.4]),
    ];
    let mut pass = true;
    let mut detail = String::new();
    for (n, x, f) in cases {
        let spec = HypergeometricSpec::new(vec![], vec![], 1.0, n).expect("valid spec");
        let xc: Vec<Complex64> = x.iter().map(|&v| c(v)).collect();
        let fc: Vec<Complex64> = f.iter().map(|&v| c(v)).collect();
        let series = hyperg_two_set(&spec, &xc, &fc, &policy).expect("series evaluates");
        assert!(series.converged);
        let mut hits = 0usize;
        for trial in 0..100u64 {
            let est = haar_mc_0f0(n, x, f, 100_000, trial).expect("sampling succeeds");
            if (est.mean - series.value.re).abs() <= 3.0 * est.stderr {
                hits += 1;
            }
        }
        pass &= hits >= 99;
        detail.push_str(&format!("N={n}: {hits}/100 trials inside three stderr; "));
    }
    report(3, "haar oracle", pass, detail.trim_end_matches("; "));
}

fn norm_policy() -> TruncationPolicy {
    TruncationPolicy { max_degree: 60, tail_tol: 1e-12 }
}

fn norm_opts() -> QuadOptions {
    QuadOptions { tol_abs: 1e-9, tol_rel: 1e-7, max_intervals: 400 }
}

fn mass_1d(spec: &EnsembleSpec, lo: f64, hi: f64, hints: &[f64]) -> f64 {
    let p = norm_policy();
    integrate(|x| Complex64::new(density(spec, &[x], &p).unwrap(), 0.0), lo, hi, hints, &norm_opts())
        .value
        .re
}

/// Two-dimensional mass over the ordered sector via the gap substitution
/// `x = (u, u + v)`, doubled; the substitution keeps the interaction factor
/// smooth inside integration cells for every coupling.
fn mass_2d(spec: &EnsembleSpec, lo: f64, hi: f64) -> f64 {
    let p = norm_policy();
    let inner_opts = QuadOptions { tol_abs: 1e-10, tol_rel: 1e-8, max_intervals: 400 };
    let outer = integrate(
        |v| {
            integrate(
                |u| {
                    if u + v > hi {
                        return Complex64::new(0.0, 0.0);
                    }
                    Complex64::new(density(spec, &[u, u + v], &p).unwrap(), 0.0)
                },
                lo,
                hi,
                &[0.0f64.clamp(lo, hi)],
                &inner_opts,
            )
            .value
        },
        0.0,
        hi - lo,
        &[],
        &norm_opts(),
    );
    2.0 * outer.value.re
}

#[test]
fn criterion_04_density_normalization() {
    let mut worst = 0.0f64;
    let mut checks = 0usize;
    for &beta in &[1.0, 2.0, 4.0] {
        let spec = EnsembleSpec::gaussian(beta, 1, 0.7, vec![0.6]).unwrap();
        worst = worst.max((mass_1d(&spec, -9.0, 10.0, &[0.6]) - 1.0).abs());
        let spec = EnsembleSpec::laguerre(beta, 1, 0.8, vec![0.9], 1.3, None).unwrap();
        worst = worst.max((mass_1d(&spec, 1e-12, 30.0, &[0.8, 2.0]) - 1.0).abs());
        let spec = EnsembleSpec::gaussian(beta, 2, 0.6, vec![0.8, -0.5]).unwrap();
        worst = worst.max((mass_2d(&spec, -8.0, 8.0) - 1.0).abs());
        let spec = EnsembleSpec::laguerre(beta, 2, 0.5, vec![0.4, 1.1], 1.2, None).unwrap();
        worst = worst.max((mass_2d(&spec, 1e-12, 22.0) - 1.0).abs());
        checks += 4;
    }
    let pass = worst < 1e-4;
    report(
        4,
        "density normalization",
        pass,
        &format!("{checks} densities, worst |mass - 1| = {worst:.1e} (tol 1e-4)"),
    );
}

#[test]
fn criterion_05_size_coupling_swap() {
    let policy = TruncationPolicy { max_degree: 80, tail_tol: 1e-12 };
    let opts = QuadOptions { tol_abs: 1e-11, tol_rel: 1e-9, max_intervals: 300 };
    // (arguments, real-line source, half-line source) per size pairing; the
    // sampled passes reuse the real parts of the arguments.
    let cases: [(Vec<Complex64>, Vec<f64>, Vec<f64>); 3] = [
        (vec![Complex64::new(0.4, 0.1)], vec![0.3], vec![0.3]),
        (vec![Complex64::new(0.4, 0.1)], vec![0.5, -0.2], vec![0.4, 0.1]),
        (vec![c(0.5), Complex64::new(-0.3, 0.2)], vec![0.0, 0.0, 0.0], vec![0.3, 0.1, 0.2]),
    ];
    let mut worst_quad = 0.0f64;
    let mut worst_mc = 0.0f64;
    for beta in [1.0, 2.0] {
        for (s, f_line, f_half) in &cases {
            let q = duality_check_gaussian(s, f_line, beta, 0.7, &DualityMode::Quadrature, &policy, &opts)
                .expect("quadrature sides evaluate");
            worst_quad = worst_quad.max(q.gap());
            let q = duality_check_laguerre(
                s,
                f_half,
                1.0,
                beta,
                0.75,
                &DualityMode::Quadrature,
                &policy,
                &opts,
            )
            .expect("quadrature sides evaluate");
            worst_quad = worst_quad.max(q.gap());

            let s_real: Vec<Complex64> = s.iter().map(|z| c(z.re)).collect();
            let mode = DualityMode::MonteCarlo { samples: 100_000, seed: 505 };
            let m = duality_check_gaussian(&s_real, f_line, beta, 0.7, &mode, &policy, &opts)
                .expect("sampled sides evaluate");
            worst_mc = worst_mc.max(m.gap() / m.combined_err());
            let m = duality_check_laguerre(&s_real, f_half, 1.0, beta, 0.75, &mode, &policy, &opts)
                .expect("sampled sides evaluate");
            worst_mc = worst_mc.max(m.gap() / m.combined_err());
        }
    }
    let pass = worst_quad < 1e-6 && worst_mc <= 3.0;
    report(
        5,
        "size/coupling swap",
        pass,
        &format!(
            "12 quadrature pairings worst gap {worst_quad:.1e} (tol 1e-6); \
             12 sampled pairings worst gap {worst_mc:.2} stderr units (tol 3)"
        ),
    );
}

#[test]
fn criterion_06_closed_average_vs_sampling() {
    let policy = TruncationPolicy { max_degree: 80, tail_tol: 1e-12 };
    let opts = QuadOptions { tol_abs: 1e-11, tol_rel: 1e-9, max_intervals: 400 };
    let mut pass = true;
    let mut detail = String::new();
    for n_dim in [2usize, 4] {
        // Real line: bulk source +-b in equal halves.
        let kv = exact_k_gaussian(&[c(0.5)], 2.0, n_dim, 0.6, 0.8, &[], &policy, &opts)
            .expect("closed form evaluates");
        let mut f = vec![0.8; n_dim / 2];
        f.extend(std::iter::repeat(-0.8).take(n_dim / 2));
        let spec = EnsembleSpec::gaussian(2.0, n_dim, 0.6, f).unwrap();
        let sampler = Sampler::auto(&spec);
        let query = CharPolyQuery::new(vec![c(0.5)], spec).unwrap();
        let est = mc_charpoly_avg(&query, &sampler, 100_000, 606).expect("sampling succeeds");
        let gap = (kv.value - est.mean).norm();
        let bound = 3.0 * est.stderr + kv.est_error;
        pass &= gap <= bound;
        detail.push_str(&format!("real-line N={n_dim}: gap {gap:.1e} <= {bound:.1e}; "));

        // Half line: constant bulk source beta b / 2.
        let kv = exact_k_laguerre(&[c(1.3)], 2.0, n_dim, 0.5, 1.0, 0.9, &[], &policy, &opts)
            .expect("closed form evaluates");
        let spec = EnsembleSpec::laguerre(2.0, n_dim, 0.5, vec![0.9; n_dim], 1.0, None).unwrap();
        let sampler = Sampler::auto(&spec);
        let query = CharPolyQuery::new(vec![c(1.3)], spec).unwrap();
        let est = mc_charpoly_avg(&query, &sampler, 100_000, 707).expect("sampling succeeds");
        let gap = (kv.value - est.mean).norm();
        let bound = 3.0 * est.stderr + kv.est_error;
        pass &= gap <= bound;
        detail.push_str(&format!("half-line N={n_dim}: gap {gap:.1e} <= {bound:.1e}; "));
    }
    report(6, "closed average vs sampling", pass, detail.trim_end_matches("; "));
}

#[test]
fn criterion_07_limit_window_identities() {
    let pol = EvalPolicy::default();
    let none: [Complex64; 0] = [];
    let mut worst_one = 0.0f64;
    let mut worst_swap = 0.0f64;

    // A single window coordinate with no linear factors is identically one.
    for alpha in [0.5, 1.0, 2.0] {
        for yv in [-1.5, -0.4, 0.8, 2.2] {
            let g = gauss_g_z(alpha, &[c(yv)], &[], &pol).expect("window evaluates");
            worst_one = worst_one.max((g.value - c(1.0)).norm());
        }
    }
    for (a, alpha) in [(1.0, 2.0), (2.5, 0.5)] {
        for yv in [0.3, 1.2, 3.0] {
            let w = hard_w_z(a, alpha, &[c(yv)], &[], &pol).expect("window evaluates");
            worst_one = worst_one.max((w.value - c(1.0)).norm());
        }
    }

    // With zero integration dimensions every window is exactly one.
    for v in [
        pearcey_p_z(1.0, 0.0, &none, &none, &pol).unwrap().value,
        gauss_g_z(2.0, &none, &none, &pol).unwrap().value,
        crit_b_z(1.0, 1.0, 0.0, &none, &none, &pol).unwrap().value,
        hard_w_z(1.0, 2.0, &none, &none, &pol).unwrap().value,
    ] {
        worst_one = worst_one.max((v - c(1.0)).norm());
    }

    // The two critical windows at a single zero coordinate take their
    // closed-form values instead of one.
    let p0 = pearcey_p_z(1.0, 0.0, &[c(0.0)], &none, &pol).unwrap();
    worst_one = worst_one.max((p0.value - c(gamma(0.25) / (2.0 * PI.sqrt()))).norm());
    let b0 = crit_b_z(1.0, 1.0, 0.0, &[c(0.0)], &none, &pol).unwrap();
    worst_one = worst_one.max((b0.value - c((PI / 2.0).sqrt())).norm());

    // Swap identities with one factor on each side.
    for alpha in [0.5, 2.0] {
        let (y, s) = (0.3, 0.5);
        let lhs = gauss_g_z(alpha, &[c(y)], &[c(s)], &pol).unwrap().value;
        let rot = Complex64::new(0.0, alpha.sqrt());
        let phase = Complex64::new(0.0, 1.0) / alpha.sqrt();
        let rhs =
            phase * gauss_g_z(1.0 / alpha, &[rot * s], &[rot * y], &pol).unwrap().value;
        worst_swap = worst_swap.max((lhs - rhs).norm());

        let a = 2.0;
        let lhs = hard_w_z(a, alpha, &[c(y)], &[c(s)], &pol).unwrap().value;
        let rhs = hard_w_z(a * alpha, 1.0 / alpha, &[c(-s)], &[c(-y)], &pol).unwrap().value
            / alpha;
        worst_swap = worst_swap.max((lhs - rhs).norm());
    }

    let pass = worst_one < 1e-8 && worst_swap < 1e-6;
    report(
        7,
        "limit window identities",
        pass,
        &format!(
            "factor-free and zero-dimension windows at one (critical windows at their \
             closed forms), worst {worst_one:.1e} (tol 1e-8); swap identities worst \
             {worst_swap:.1e} (tol 1e-6)"
        ),
    );
}

#[test]
fn criterion_08_circular_moments() {
    let mut exact_ok = true;
    let mut growth_ok = true;
    for n in 1..=50usize {
        let m = cue_moment(n, 1).expect("exact moment");
        exact_ok &= m == (n + 1) as f64;
        growth_ok &= (m / n as f64 - 1.0).abs() <= 2.0 / n as f64;
    }
    let mut detail = String::from("first moments equal N+1 exactly up to N=50; ");
    let mut mc_ok = true;
    for (n, want) in [(1usize, 2.0), (2, 3.0)] {
        let est = cue_moment_mc(n, 1, 200_000, 88).expect("sampling succeeds");
        let gap = (est.mean.re - want).abs();
        mc_ok &= gap <= 3.0 * est.stderr;
        detail.push_str(&format!("sampled U({n}) gap {gap:.1e} <= {:.1e}; ", 3.0 * est.stderr));
    }
    let pass = exact_ok && growth_ok && mc_ok;
    report(8, "circular moments", pass, detail.trim_end_matches("; "));
}

fn scan_config(family: Family, n: usize, t: Option<f64>, a: Option<f64>) -> ExperimentConfig {
    ExperimentConfig {
        family,
        beta: 2.0,
        n,
        r: 0,
        m: 0,
        b: 1.0,
        a,
        t,
        tau: 0.0,
        y_grid: vec![vec![0.0; n]],
        sigma: vec![],
        f_tail: vec![],
        n_list: vec![16, 64, 256],
        max_degree: 80,
        tail_tol: 1e-12,
        samples: 20_000,
        seed: Some(1),
        workers: 1,
        out: None,
        format: OutputFormat::Csv,
    }
}

#[test]
fn criterion_09_convergence_scans() {
    // The real-line off-critical window admits only even argument counts,
    // so that scan runs the smallest even one; the other five run a single
    // argument. All six scans use the quadrature route at sizes up to 256.
    let cases = [
        ("real-line wide", scan_config(Family::Gaussian, 2, Some(2.0), None)),
        ("real-line merging", scan_config(Family::Gaussian, 1, None, None)),
        ("real-line separated", scan_config(Family::Gaussian, 1, Some(0.5), None)),
        ("half-line wide", scan_config(Family::Laguerre, 1, Some(2.0), Some(1.0))),
        ("half-line merging", scan_config(Family::Laguerre, 1, None, Some(1.0))),
        ("half-line separated", scan_config(Family::Laguerre, 1, Some(0.5), Some(1.0))),
    ];
    let mut pass = true;
    let mut detail = String::new();
    for (label, config) in cases {
        let result = run_convergence_scan(&config).expect("scan runs");
        let rows = &result.rows;
        let clean = rows.iter().all(|r| r.error.is_none());
        let first = &rows[0];
        let last = &rows[rows.len() - 1];
        let ok = clean
            && last.abs_error <= 0.05 * last.limit_value.norm()
            && last.abs_error < first.abs_error;
        pass &= ok;
        detail.push_str(&format!(
            "{label} {:.1e}->{:.1e}{}; ",
            first.abs_error,
            last.abs_error,
            if ok { "" } else { " OUT OF BAND" },
        ));
    }
    detail.push_str("(|ratio - limit| from size 16 to 256, tol 5% of |limit|)");
    report(9, "convergence scans", pass, &detail);
}

#[test]
fn criterion_10_reproducible_emission() {
    let mut config = ExperimentConfig {
        family: Family::Gaussian,
        beta: 2.0,
        n: 4,
        r: 0,
        m: 0,
        b: 1.0,
        a: None,
        t: Some(2.0),
        tau: 0.0,
        y_grid: vec![vec![0.2, -0.1, 0.4, -0.3]],
        sigma: vec![],
        f_tail: vec![],
        n_list: vec![6, 8],
        max_degree: 80,
        tail_tol: 1e-12,
        samples: 3000,
        seed: Some(42),
        workers: 1,
        out: None,
        format: OutputFormat::Csv,
    };
    let mut tables = Vec::new();
    for workers in [1usize, 4, 8] {
        config.workers = workers;
        let result = run_convergence_scan(&config).expect("scan runs");
        assert!(result.rows.iter().all(|r| r.error.is_none()));
        tables.push(render(&result, OutputFormat::Csv).expect("table renders"));
    }
    // A rerun at the same seed reproduces the same bytes as well.
    config.workers = 4;
    let again = render(&run_convergence_scan(&config).expect("scan runs"), OutputFormat::Csv)
        .expect("table renders");
    let pass = tables[1] == tables[0] && tables[2] == tables[0] && again == tables[0];
    report(
        10,
        "reproducible emission",
        pass,
        &format!(
            "{}-byte sampled table identical across 1/4/8 workers and a rerun: {pass}",
            tables[0].len()
        ),
    );
}
