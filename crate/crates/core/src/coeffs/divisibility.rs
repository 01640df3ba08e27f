//! Cancellation of `(s + (l-1)^2)` in certain quadratic/cubic combinations.

use super::engine::CoeffTable;
use crate::algebra::{FactoredDenom, PolyZ};
use crate::error::{Error, Result};
use rug::Integer;

#[derive(Clone, Debug, PartialEq)]
pub struct DivisibilityReport {
    pub k: usize,
    pub l: usize,
    /// Numerator of the combination written over `lcm`.
    pub numerator: PolyZ,
    pub lcm: FactoredDenom,
    /// Whether `(s + (l-1)^2)` divides `numerator`.
    pub divisible: bool,
}

/// With `K = (k+2)/l`, the combination
///
/// ```text
/// sum_{m1+m2+m3=K} u_{2(l m1-1)} u_{2(l m2-1)} u_{2(l m3-1)}
///   - sum_{m4+m5=K, m4<K/2} [l(m5-m4)]^2 u_{2(l m4-1)} u_{2(l m5-1)}
/// ```
///
/// over the lcm of the (reduced) term denominators; all `m_i >= 1`.
pub fn strange_divisibility(table: &CoeffTable, k: usize, l: usize) -> Result<DivisibilityReport> {
    if l < 2 || (k + 2) % l != 0 || (k + 2) / l < 2 {
        return Err(Error::Invalid(format!("(k, l) = ({k}, {l}) is not admissible")));
    }
    let kk = (k + 2) / l;
    let need = l * (kk - 1) - 1;
    if table.n_max() < need {
        return Err(Error::TableTooShort { have: table.n_max(), need });
    }
    let u = |m: usize| table.get(l * m - 1);
    let mut terms = Vec::new();
    for m1 in 1..kk {
        for m2 in 1..kk - m1 {
            let m3 = kk - m1 - m2;
            terms.push(u(m1).mul(u(m2)).mul(u(m3)));
        }
    }
    for m4 in 1..kk {
        let m5 = kk - m4;
        if 2 * m4 >= kk {
            break;
        }
        let c = (l * (m5 - m4)) as i64;
        terms.push(u(m4).mul(u(m5)).scale_i64(-c * c));
    }
    let mut lcm = FactoredDenom::one();
    for t in &terms {
        lcm = lcm.lcm(&t.den);
    }
    let mut numerator = PolyZ::zero();
    for t in &terms {
        numerator.add_assign(&lcm.cofactor(&t.den).mul_into(&t.num));
    }
    let root = Integer::from((l - 1) * (l - 1));
    let divisible = numerator.is_zero() || numerator.eval_neg_int(&root) == 0;
    Ok(DivisibilityReport { k, l, numerator, lcm, divisible })
}
