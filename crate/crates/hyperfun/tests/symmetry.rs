//! Structural symmetries of the series: permutation invariance in each
//! argument, exchange symmetry between the two arguments, and monotone
//! partial sums for non-negative arguments.

use hyperfun::{hyperg_one_set, hyperg_two_set, HypergeometricSpec, TruncationPolicy};
use num_complex::Complex64;
use rand::{seq::SliceRandom, Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_vec(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    (0..n).map(|_| Complex64::new(rng.gen_range(-0.8..0.8), rng.gen_range(-0.8..0.8))).collect()
}

#[test]
fn permutation_symmetry_in_each_argument() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let policy = TruncationPolicy { max_degree: 25, tail_tol: 1e-13 };
    for &alpha in &[0.5, 2.0] {
        let spec = HypergeometricSpec::new(vec![0.8], vec![2.6], alpha, 3).unwrap();
        let x = random_vec(&mut rng, 3);
        let y = random_vec(&mut rng, 3);
        let base = hyperg_two_set(&spec, &x, &y, &policy).unwrap().value;

        let mut xp = x.clone();
        xp.shuffle(&mut rng);
        let vx = hyperg_two_set(&spec, &xp, &y, &policy).unwrap().value;
        assert!((vx - base).norm() <= 1e-12 * base.norm().max(1.0));

        let mut yp = y.clone();
        yp.shuffle(&mut rng);
        let vy = hyperg_two_set(&spec, &x, &yp, &policy).unwrap().value;
        assert!((vy - base).norm() <= 1e-12 * base.norm().max(1.0));
    }
}

#[test]
fn exchange_symmetry_between_arguments() {
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let policy = TruncationPolicy { max_degree: 25, tail_tol: 1e-13 };
    let spec = HypergeometricSpec::new(vec![], vec![1.9], 1.5, 2).unwrap();
    for _ in 0..4 {
        let x = random_vec(&mut rng, 2);
        let y = random_vec(&mut rng, 2);
        let xy = hyperg_two_set(&spec, &x, &y, &policy).unwrap().value;
        let yx = hyperg_two_set(&spec, &y, &x, &policy).unwrap().value;
        assert!((xy - yx).norm() <= 1e-12 * xy.norm().max(1.0));
    }
}

#[test]
fn partial_sums_monotone_for_nonnegative_arguments() {
    // For 0F0- and 0F1-type one-set series every shell is non-negative when
    // all coordinates are, so truncations increase with the degree cap.
    let x = vec![
        Complex64::new(0.9, 0.0),
        Complex64::new(0.4, 0.0),
        Complex64::new(0.1, 0.0),
    ];
    for lower in [vec![], vec![2.2]] {
        let spec = HypergeometricSpec::new(vec![], lower, 2.0, 3).unwrap();
        let mut prev = 0.0f64;
        for degree in 1..=12 {
            let policy = TruncationPolicy { max_degree: degree, tail_tol: 0.0 };
            let v = hyperg_one_set(&spec, &x, &policy).unwrap().value.re;
            assert!(
                v >= prev - 1e-15,
                "partial sum decreased at degree {degree}: {v} < {prev}"
            );
            prev = v;
        }
    }
}
