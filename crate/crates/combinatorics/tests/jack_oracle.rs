//! Cross-checks of the Jack solver against independent constructions.
//!
//! - At `alpha = 1` the monic Jack polynomial equals the Schur polynomial,
//!   which has a bialternant evaluation `det(x_i^{kappa_j + n - j}) /
//!   det(x_i^{n - j})` requiring nothing from the solver.
//! - The defining eigen-equation is re-applied numerically from the
//!   coefficient table at random complex points.

use combinatorics::{
    eigen_residual, enumerate_partitions, jack_eval, jack_polynomial, JackParams, Partition,
};
use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn schur_bialternant(kappa: &Partition, xs: &[Complex64]) -> Complex64 {
    let n = xs.len();
    let padded = kappa.padded(n);
    let numer = DMatrix::from_fn(n, n, |i, j| xs[i].powu((padded[j] + n - 1 - j) as u32));
    let denom = DMatrix::from_fn(n, n, |i, j| xs[i].powu((n - 1 - j) as u32));
    numer.lu().determinant() / denom.lu().determinant()
}

fn random_point(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    loop {
        let xs: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let mut ok = xs.iter().all(|x| x.norm() > 0.05);
        for i in 0..n {
            for j in (i + 1)..n {
                ok &= (xs[i] - xs[j]).norm() > 0.05;
            }
        }
        if ok {
            return xs;
        }
    }
}

#[test]
fn alpha_one_matches_schur_determinant() {
    let mut rng = ChaCha8Rng::seed_from_u64(01234);
    for weight in 1..=4usize {
        for kappa in enumerate_partitions(weight, 4) {
            for n in kappa.length()..=4 {
                let poly =
                    jack_polynomial(&kappa, &JackParams::new(1.0, n).unwrap()).unwrap();
                let mut ratios = Vec::new();
                for _ in 0..6 {
                    let xs = random_point(&mut rng, n);
                    let ours = jack_eval(&poly, &xs).unwrap();
                    let schur = schur_bialternant(&kappa, &xs);
                    ratios.push(ours / schur);
                }
                for r in &ratios {
                    assert!(
                        (r - ratios[0]).norm() < 1e-10 * ratios[0].norm(),
                        "ratio drift for kappa={kappa} n={n}: {ratios:?}"
                    );
                    assert!(
                        (r - Complex64::new(1.0, 0.0)).norm() < 1e-8,
                        "alpha=1 should reproduce Schur exactly, kappa={kappa} n={n}, ratio={r}"
                    );
                }
            }
        }
    }
}

#[test]
fn eigen_equation_residuals_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(0o1234);
    for weight in 0..=6usize {
        for kappa in enumerate_partitions(weight, 4) {
            for n in kappa.length().max(1)..=4 {
                for &alpha in &[0.5, 1.0, 2.0] {
                    let poly =
                        jack_polynomial(&kappa, &JackParams::new(alpha, n).unwrap()).unwrap();
                    for _ in 0..20 {
                        let xs = random_point(&mut rng, n);
                        let r = eigen_residual(&poly, &xs).unwrap();
                        assert!(
                            r < 1e-8,
                            "residual {r:.3e} for kappa={kappa} n={n} alpha={alpha}"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn permutation_invariance_and_homogeneity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for weight in 1..=5usize {
        for kappa in enumerate_partitions(weight, 4) {
            let n = 4;
            let poly = jack_polynomial(&kappa, &JackParams::new(1.5, n).unwrap()).unwrap();
            let xs = random_point(&mut rng, n);
            let base = jack_eval(&poly, &xs).unwrap();

            let mut swapped = xs.clone();
            swapped.swap(0, 3);
            swapped.swap(1, 2);
            let perm = jack_eval(&poly, &swapped).unwrap();
            assert!((perm - base).norm() <= 1e-12 * base.norm().max(1.0));

            let c = Complex64::new(0.8, -0.55);
            let scaled: Vec<Complex64> = xs.iter().map(|x| x * c).collect();
            let hom = jack_eval(&poly, &scaled).unwrap();
            let want = base * c.powu(weight as u32);
            assert!((hom - want).norm() <= 1e-12 * want.norm().max(1.0));
        }
    }
}
