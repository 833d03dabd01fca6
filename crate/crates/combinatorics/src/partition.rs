//! Integer partitions: enumeration, conjugation, dominance order, and
//! monomial symmetric function evaluation.

use crate::error::CombinatoricsError;
use num_complex::Complex64;
use std::fmt;

/// An integer partition: a non-increasing sequence of positive parts.
/// The empty partition (weight zero) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validate that `parts` is non-increasing and strictly positive.
    pub fn new(parts: Vec<usize>) -> Result<Self, CombinatoricsError> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(CombinatoricsError::Domain(format!(
                "partition parts must be non-increasing, got {parts:?}"
            )));
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(CombinatoricsError::Domain(
                "partition parts must be positive (drop trailing zeros)".into(),
            ));
        }
        Ok(Partition { parts })
    }

    /// Sort a non-negative multiset into a partition, dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 1-based row `i`; zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// Transpose of the Young diagram: row `j` of the conjugate counts the
    /// parts of `self` that are at least `j`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(1);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().filter(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Parts padded with zeros to `n` entries (still non-increasing).
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(n.max(v.len()), 0);
        v
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `weight` with at most `max_length` parts, in descending
/// lexicographic order (e.g. weight 3: `(3), (2,1), (1,1,1)`).
///
/// Descending lexicographic order is a linear extension of dominance order,
/// which the Jack triangular solve relies on.
pub fn enumerate_partitions(weight: usize, max_length: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    descend(weight, weight, max_length, &mut cur, &mut out);
    out
}

fn descend(
    remaining: usize,
    max_part: usize,
    slots: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if slots == 0 {
        return;
    }
    let hi = remaining.min(max_part);
    let lo = remaining.div_ceil(slots);
    if lo > hi {
        return;
    }
    for p in (lo..=hi).rev() {
        cur.push(p);
        descend(remaining - p, p, slots - 1, cur, out);
        cur.pop();
    }
}

/// Dominance order test: does `a` precede `b` (all prefix sums of `a` at
/// most those of `b`)? Only defined between partitions of equal weight.
///
/// # Edge cases
/// Unequal weights are a domain error, not `false`: the comparison is
/// meaningless there and callers should not silently branch on it.
pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool, CombinatoricsError> {
    if a.weight() != b.weight() {
        return Err(CombinatoricsError::Domain(format!(
            "dominance order compares equal weights only, got |{a}| = {} and |{b}| = {}",
            a.weight(),
            b.weight()
        )));
    }
    let n = a.length().max(b.length());
    let mut sa = 0usize;
    let mut sb = 0usize;
    for i in 1..=n {
        sa += a.part(i);
        sb += b.part(i);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Advance `v` to its next distinct permutation in ascending lexicographic
/// order; `false` once `v` is the descending arrangement. Starting from the
/// ascending arrangement this visits every distinct permutation exactly once.
pub(crate) fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Evaluate the monomial symmetric polynomial `m_mu` at `xs`: the sum of
/// `x^w` over distinct permutations `w` of `mu` padded to `xs.len()`.
/// Zero when `mu` has more parts than there are variables.
pub fn monomial_eval(mu: &Partition, xs: &[Complex64]) -> Complex64 {
    let n = xs.len();
    if mu.length() > n {
        return Complex64::new(0.0, 0.0);
    }
    let mut v = mu.padded(n);
    v.reverse(); // ascending start for the permutation walk
    let mut sum = Complex64::new(0.0, 0.0);
    loop {
        let mut term = Complex64::new(1.0, 0.0);
        for (x, &e) in xs.iter().zip(&v) {
            if e > 0 {
                term *= x.powu(e as u32);
            }
        }
        sum += term;
        if !next_permutation(&mut v) {
            break;
        }
    }
    sum
}

/// `m_mu` at the all-ones point: the number of distinct permutations of the
/// padded exponent vector, `n! / prod_v mult(v)!`.
pub fn monomial_eval_ones(mu: &Partition, n: usize) -> f64 {
    if mu.length() > n {
        return 0.0;
    }
    let v = mu.padded(n);
    let mut count = 1.0f64;
    let mut run = 1usize;
    let mut seen = 1usize;
    // n! / prod mult! accumulated incrementally to stay in range.
    for k in 1..n {
        seen += 1;
        count *= seen as f64;
        if v[k] == v[k - 1] {
            run += 1;
        } else {
            run = 1;
        }
        count /= run as f64;
    }
    count.round()
}
