//! Observed versus predicted shape of `u_{2n} = P_{m(n)}(s) / prod_k (s+k^2)^{n_k}`.

use super::engine::CoeffTable;
use crate::algebra::PolyZ;

/// Predicted exponents `n_k = floor((n+1)/(k+1))` for `k = 1..=n`.
pub fn predicted_exponents(n: usize) -> Vec<(u64, u32)> {
    (1..=n).map(|k| (k as u64, ((n + 1) / (k + 1)) as u32)).collect()
}

/// Predicted numerator degree `m(n) = sum_k n_k - n`.
pub fn m_of(n: usize) -> usize {
    predicted_exponents(n).iter().map(|&(_, e)| e as usize).sum::<usize>() - n
}

pub fn predicted_structure(n: usize) -> (Vec<(u64, u32)>, usize) {
    (predicted_exponents(n), m_of(n))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub n: usize,
    /// Observed `(k, n_k)` of the reduced denominator.
    pub exponents: Vec<(u64, u32)>,
    /// Observed numerator degree.
    pub m: usize,
    pub numerator: PolyZ,
    pub matches_prediction: bool,
}

pub fn decompose(table: &CoeffTable, n: usize) -> Decomposition {
    let u = table.get(n);
    let exponents: Vec<(u64, u32)> = u.den.iter().collect();
    let m = u.num.degree().unwrap_or(0);
    let (pred, pm) = predicted_structure(n);
    Decomposition {
        n,
        matches_prediction: exponents == pred && m == pm,
        exponents,
        m,
        numerator: u.num.clone(),
    }
}

/// Indices `n` whose numerator is not a degree `m(n)` polynomial with all
/// coefficients strictly positive.
pub fn check_positivity(table: &CoeffTable) -> Vec<usize> {
    (1..=table.n_max())
        .filter(|&n| {
            let p = &table.get(n).num;
            !(p.all_positive() && p.degree() == Some(m_of(n)))
        })
        .collect()
}
