//! Deformed hook products and generalized Pochhammer symbols indexed by a
//! partition, both depending on a positive deformation parameter `alpha`.

use crate::partition::Partition;

/// Hook normalization constant: over the cells `(i, j)` of the diagram,
/// the product of `1 + arm + leg/alpha` where `arm = kappa_i - j` and
/// `leg = kappa'_j - i`.
pub fn hook_norm(kappa: &Partition, alpha: f64) -> f64 {
    let conj = kappa.conjugate();
    let mut prod = 1.0;
    for (row0, &ki) in kappa.parts().iter().enumerate() {
        for col in 1..=ki {
            let arm = (ki - col) as f64;
            let leg = (conj.part(col) - (row0 + 1)) as f64;
            prod *= 1.0 + arm + leg / alpha;
        }
    }
    prod
}

/// Generalized Pochhammer symbol: `prod_i (x - (i-1)/alpha)_{kappa_i}` with
/// `(y)_k` the rising factorial `y (y+1) ... (y+k-1)`.
pub fn deformed_pochhammer(x: f64, kappa: &Partition, alpha: f64) -> f64 {
    let mut prod = 1.0;
    for (row0, &ki) in kappa.parts().iter().enumerate() {
        let base = x - row0 as f64 / alpha;
        for m in 0..ki {
            prod *= base + m as f64;
        }
    }
    prod
}
