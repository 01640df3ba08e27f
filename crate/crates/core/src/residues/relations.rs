//! Linear relations among residues and the divisor-count audit.

use super::table::ResidueTable;
use crate::coeffs::{predicted_exponents, CoeffTable};
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct SumRelations {
    pub n: usize,
    /// `sum_k gamma_{k,1}(n) = 0`, `None` for `n = 1`.
    pub first_order_sum: Option<bool>,
    /// `sum gamma_{k,i} / k^{2i} = (n+1)/2^n`.
    pub value_at_zero: bool,
    /// `sum i gamma_{k,i} / k^{2i+2} = (61/144)(n+1)^2/2^n`, `None` for `n < 3`.
    pub slope_at_zero: Option<bool>,
}

pub fn residue_sum_relations(res: &ResidueTable, n: usize) -> Result<SumRelations> {
    let pf = res.parts(n).ok_or(Error::TableTooShort { have: res.n_max(), need: n })?;
    let mut s1 = Rational::new();
    let mut s0 = Rational::new();
    let mut s2 = Rational::new();
    for (&k, g) in pf.seniors() {
        let k2 = Integer::from(k * k);
        for (idx, gi) in g.iter().enumerate() {
            let i = idx as u32 + 1;
            if i == 1 {
                s1 += gi;
            }
            s0 += Rational::from(gi / Rational::from(k2.clone().pow(i)));
            s2 += Rational::from(gi * Rational::from(i)) / Rational::from(k2.clone().pow(i + 1));
        }
    }
    let two_n = Integer::from(1) << n as u32;
    let n1 = Integer::from(n + 1);
    Ok(SumRelations {
        n,
        first_order_sum: (n > 1).then(|| s1 == 0),
        value_at_zero: s0 == Rational::from((n1.clone(), two_n.clone())),
        slope_at_zero: (n >= 3)
            .then(|| s2 == Rational::from((61, 144)) * Rational::from((n1.clone() * &n1, two_n.clone()))),
    })
}

/// Both sides of the two identities linking `P(-1)`, `P'(-1)` to the residues at `k = 1`:
/// `P(-1) = gamma_{1,n_1} W` and `P'(-1) = (gamma_{1,n_1-1} + gamma_{1,n_1} sum_{k>=2} n_k/(k^2-1)) W`
/// with `W = prod_{k>=2} (k^2-1)^{n_k}`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlternatingSums {
    pub p_at_minus_one: Integer,
    pub predicted: Rational,
    pub dp_at_minus_one: Integer,
    pub predicted_derivative: Rational,
}

pub fn alternating_sums(table: &CoeffTable, res: &ResidueTable, n: usize) -> Result<AlternatingSums> {
    let u = table.get(n);
    let p = &u.num;
    let mut alt = Integer::new();
    let mut dalt = Integer::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            alt += c;
            dalt -= Integer::from(c * k as u64);
        } else {
            alt -= c;
            dalt += Integer::from(c * k as u64);
        }
    }
    let n1 = u.den.exp(1) as i64;
    let top = res.gamma(1, n1, n).ok_or(Error::TableTooShort { have: res.n_max(), need: n })?;
    let next = res.gamma(1, n1 - 1, n).ok_or(Error::TableTooShort { have: res.n_max(), need: n })?;
    let mut w = Integer::from(1);
    let mut frac = Rational::new();
    for (k, e) in u.den.iter() {
        if k < 2 {
            continue;
        }
        let f = Integer::from(k * k - 1);
        w *= f.clone().pow(e);
        frac += Rational::from((Integer::from(e), f));
    }
    let wq = Rational::from(w);
    Ok(AlternatingSums {
        p_at_minus_one: alt,
        predicted: Rational::from(&top * &wq),
        dp_at_minus_one: dalt,
        predicted_derivative: (next + top * frac) * wq,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DivisorAudit {
    pub n_max: usize,
    /// `sum_{k<=n} n_k = sum_{k<=n+1} d(k) - (n+1)` for every `n`.
    pub count_identity: bool,
    /// `n` where `|D(n) - n ln n - (2 gamma - 1) n| > 2.3 (n ln n)^{1/4}`.
    pub bound_exceeded: Vec<usize>,
    /// `max |error| / (n ln n)^{1/4}` over `n >= 2`.
    pub worst_ratio: f64,
}

/// `d(k)` for `k <= n` by sieving.
pub fn divisor_counts(n: usize) -> Vec<u64> {
    let mut d = vec![0u64; n + 1];
    for i in 1..=n {
        for j in (i..=n).step_by(i) {
            d[j] += 1;
        }
    }
    d
}

pub fn divisor_count_audit(n_max: usize) -> DivisorAudit {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    let d = divisor_counts(n_max + 1);
    let mut prefix = vec![0u64; n_max + 2];
    for k in 1..=n_max + 1 {
        prefix[k] = prefix[k - 1] + d[k];
    }
    let mut count_identity = true;
    let mut bound_exceeded = Vec::new();
    let mut worst_ratio = 0.0f64;
    for n in 1..=n_max {
        let nk: u64 = predicted_exponents(n).into_iter().map(|(_, e)| e as u64).sum();
        if nk + (n as u64 + 1) != prefix[n + 1] {
            count_identity = false;
        }
        let nf = n as f64;
        let err = (prefix[n] as f64 - nf * nf.ln() - (2.0 * EULER_GAMMA - 1.0) * nf).abs();
        let scale = (nf * nf.ln()).powf(0.25);
        if err > 2.3 * scale {
            bound_exceeded.push(n);
        }
        if n >= 2 {
            worst_ratio = worst_ratio.max(err / scale);
        }
    }
    DivisorAudit { n_max, count_identity, bound_exceeded, worst_ratio }
}
