//! Adaptive Gauss-Kronrod 15(7) quadrature for complex-valued integrands.
//!
//! - Finite intervals with optional interior split hints (saddle locations),
//!   refined by bisecting the subinterval with the largest error estimate.
//! - Iterated 2- and 3-dimensional drivers for low-dimensional integrals.
//! - `decay_radius` finds where a log-weight has dropped a given amount below
//!   its peak, for truncating integrals over the whole line or half-line.

use num_complex::Complex64;

// 15-point Kronrod abscissae on [0, 1] side of the symmetric rule.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

// Kronrod weights matching XGK.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839998060075660,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

// 7-point Gauss weights for the embedded rule (odd-indexed Kronrod nodes).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Tolerances and work limits for adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadOptions {
    pub tol_abs: f64,
    pub tol_rel: f64,
    pub max_intervals: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        QuadOptions { tol_abs: 1e-12, tol_rel: 1e-10, max_intervals: 512 }
    }
}

/// Integral value with its accumulated error estimate.
#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: Complex64,
    pub est_error: f64,
    pub intervals: usize,
    pub converged: bool,
}

/// One GK15 application on [a, b]: returns (kronrod, |kronrod - gauss|, resasc).
fn gk15<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> (Complex64, f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut result_kronrod = fc * WGK[7];
    let mut result_gauss = fc * WG[3];
    let mut resabs = fc.norm() * WGK[7];

    let mut values = [[Complex64::new(0.0, 0.0); 2]; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        values[j] = [f1, f2];
        let sum = f1 + f2;
        result_kronrod += sum * WGK[j];
        resabs += (f1.norm() + f2.norm()) * WGK[j];
        if j % 2 == 1 {
            result_gauss += sum * WG[j / 2];
        }
    }

    // Scaled deviation from the mean, guarding against pure cancellation.
    let mean = result_kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).norm();
    for j in 0..7 {
        resasc += WGK[j] * ((values[j][0] - mean).norm() + (values[j][1] - mean).norm());
    }
    resasc *= half.abs();
    resabs *= half.abs();

    let kronrod = result_kronrod * half;
    let gauss = result_gauss * half;
    let mut err = (kronrod - gauss).norm();
    if resasc != 0.0 && err != 0.0 {
        err = resasc * (200.0 * err / resasc).powf(1.5).min(1.0);
    }
    let round = 50.0 * f64::EPSILON * resabs;
    if round > err {
        err = round;
    }
    (kronrod, err, resasc)
}

struct Interval {
    a: f64,
    b: f64,
    value: Complex64,
    err: f64,
}

/// Adaptively integrate `f` over [a, b].
///
/// # Arguments
/// - `hints`: interior points (e.g. saddle locations or kinks) used as
///   initial subdivision boundaries; points outside (a, b) are ignored.
///
/// # Returns
/// The integral with an error estimate; `converged` is advisory and the
/// value is always returned.
pub fn integrate<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    hints: &[f64],
    opts: &QuadOptions,
) -> QuadResult {
    let mut cuts: Vec<f64> = vec![a];
    let mut interior: Vec<f64> =
        hints.iter().copied().filter(|&x| x > a && x < b).collect();
    interior.sort_by(|p, q| p.partial_cmp(q).unwrap());
    interior.dedup();
    cuts.extend(interior);
    cuts.push(b);

    let mut intervals: Vec<Interval> = Vec::new();
    for w in cuts.windows(2) {
        let (value, err, _) = gk15(&mut f, w[0], w[1]);
        intervals.push(Interval { a: w[0], b: w[1], value, err });
    }

    loop {
        let total: Complex64 = intervals.iter().map(|iv| iv.value).sum();
        let total_err: f64 = intervals.iter().map(|iv| iv.err).sum();
        let target = opts.tol_abs.max(opts.tol_rel * total.norm());
        if total_err <= target {
            return QuadResult {
                value: total,
                est_error: total_err,
                intervals: intervals.len(),
                converged: true,
            };
        }
        if intervals.len() >= opts.max_intervals {
            return QuadResult {
                value: total,
                est_error: total_err,
                intervals: intervals.len(),
                converged: false,
            };
        }
        // Bisect the worst interval.
        let worst = intervals
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .map(|(i, _)| i)
            .unwrap();
        let iv = intervals.swap_remove(worst);
        let mid = 0.5 * (iv.a + iv.b);
        if mid <= iv.a || mid >= iv.b {
            // Interval too narrow to split further.
            intervals.push(iv);
            let total: Complex64 = intervals.iter().map(|x| x.value).sum();
            let total_err: f64 = intervals.iter().map(|x| x.err).sum();
            return QuadResult {
                value: total,
                est_error: total_err,
                intervals: intervals.len(),
                converged: false,
            };
        }
        let (v1, e1, _) = gk15(&mut f, iv.a, mid);
        let (v2, e2, _) = gk15(&mut f, mid, iv.b);
        intervals.push(Interval { a: iv.a, b: mid, value: v1, err: e1 });
        intervals.push(Interval { a: mid, b: iv.b, value: v2, err: e2 });
    }
}

/// Iterated 2-dimensional integral over [a0,b0] x [a1,b1].
///
/// The inner integral runs at a tighter tolerance so the outer error
/// estimate remains meaningful.
pub fn integrate2<F: FnMut(f64, f64) -> Complex64>(
    mut f: F,
    range0: (f64, f64),
    range1: (f64, f64),
    hints0: &[f64],
    hints1: &[f64],
    opts: &QuadOptions,
) -> QuadResult {
    let inner_opts = QuadOptions {
        tol_abs: opts.tol_abs * 0.1,
        tol_rel: opts.tol_rel * 0.1,
        max_intervals: opts.max_intervals,
    };
    let mut inner_err: f64 = 0.0;
    let mut inner_cells: usize = 0;
    let mut all_converged = true;
    let outer = integrate(
        |x0| {
            let r = integrate(|x1| f(x0, x1), range1.0, range1.1, hints1, &inner_opts);
            inner_err = inner_err.max(r.est_error);
            inner_cells = inner_cells.max(r.intervals);
            all_converged &= r.converged;
            r.value
        },
        range0.0,
        range0.1,
        hints0,
        opts,
    );
    QuadResult {
        value: outer.value,
        est_error: outer.est_error + inner_err * (range0.1 - range0.0).abs(),
        intervals: outer.intervals * inner_cells.max(1),
        converged: outer.converged && all_converged,
    }
}

/// Iterated 3-dimensional integral.
pub fn integrate3<F: FnMut(f64, f64, f64) -> Complex64>(
    mut f: F,
    range0: (f64, f64),
    range1: (f64, f64),
    range2: (f64, f64),
    hints: &[f64],
    opts: &QuadOptions,
) -> QuadResult {
    let inner_opts = QuadOptions {
        tol_abs: opts.tol_abs * 0.1,
        tol_rel: opts.tol_rel * 0.1,
        max_intervals: opts.max_intervals,
    };
    let mut inner_err: f64 = 0.0;
    let mut all_converged = true;
    let outer = integrate(
        |x0| {
            let r = integrate2(
                |x1, x2| f(x0, x1, x2),
                range1,
                range2,
                hints,
                hints,
                &inner_opts,
            );
            inner_err = inner_err.max(r.est_error);
            all_converged &= r.converged;
            r.value
        },
        range0.0,
        range0.1,
        hints,
        opts,
    );
    QuadResult {
        value: outer.value,
        est_error: outer.est_error + inner_err * (range0.1 - range0.0).abs(),
        intervals: outer.intervals,
        converged: outer.converged && all_converged,
    }
}

/// Smallest radius `R >= lo` such that `log_weight(R) <= peak - drop`,
/// found by doubling then bisection. `log_weight` must eventually decrease.
///
/// Used to truncate line and half-line integrals where the weight has
/// fallen below any contribution worth resolving.
pub fn decay_radius<F: Fn(f64) -> f64>(log_weight: F, peak: f64, lo: f64, drop: f64) -> f64 {
    let target = peak - drop;
    let mut hi = if lo.abs() < 1.0 { 1.0 } else { lo.abs() * 2.0 };
    let mut guard = 0;
    while log_weight(hi) > target {
        hi *= 2.0;
        guard += 1;
        if guard > 200 {
            return hi;
        }
    }
    let mut a = lo;
    let mut b = hi;
    for _ in 0..80 {
        let mid = 0.5 * (a + b);
        if log_weight(mid) > target {
            a = mid;
        } else {
            b = mid;
        }
    }
    b
}
