//! Growth of `A_k[n]` in `n` and in `k`.

use rug::{Integer, Rational};

/// `Gamma(m/2)` for an integer `m` that is not a nonpositive even number.
pub fn gamma_half(m: i64) -> f64 {
    let sqrt_pi = std::f64::consts::PI.sqrt();
    if m % 2 == 0 {
        assert!(m > 0, "pole of Gamma");
        return (1..m / 2).map(|j| j as f64).product();
    }
    // start from Gamma(1/2) and step by one in either direction
    let mut g = sqrt_pi;
    let mut x = 0.5;
    let target = m as f64 / 2.0;
    while x < target {
        g *= x;
        x += 1.0;
    }
    while x > target {
        x -= 1.0;
        g /= x;
    }
    g
}

/// Limit of `A_k[n] n^{-(5k-3)/2} (4/27)^n`:
/// `3^{(5-k)/2} / 2^{2k+3} * R(1/2) / Gamma((5k-1)/2)`.
pub fn limit_constant(k: usize, r_half: &Rational) -> f64 {
    let k = k as i64;
    3f64.powf((5 - k) as f64 / 2.0) / 2f64.powi((2 * k + 3) as i32) * r_half.to_f64()
        / gamma_half(5 * k - 1)
}

/// `ln(A_k[n] n^{-(5k-3)/2} (4/27)^n)`.
pub fn log_normalised(a: &Integer, k: usize, n: usize) -> f64 {
    let (m, e) = a.to_f64_exp();
    let ln_a = m.ln() + e as f64 * std::f64::consts::LN_2;
    let nf = n as f64;
    ln_a - (5.0 * k as f64 - 3.0) / 2.0 * nf.ln() + nf * (4.0f64 / 27.0).ln()
}

#[derive(Clone, Debug)]
pub struct GrowthReport {
    pub k: usize,
    /// `(n, A_k[n] n^{-(5k-3)/2} (4/27)^n)`
    pub normalised: Vec<(usize, f64)>,
    pub limit: f64,
    /// Exact: the normalised sequence strictly increases on the range.
    pub increasing: bool,
    pub below_limit: bool,
}

/// `row[n] = A_k[n]`; checks `n in n_lo..row.len()`.
pub fn growth_check(row: &[Integer], k: usize, n_lo: usize, r_half: &Rational) -> GrowthReport {
    let limit = limit_constant(k, r_half);
    let mut normalised = Vec::new();
    let mut increasing = true;
    for n in n_lo..row.len() {
        normalised.push((n, log_normalised(&row[n], k, n).exp()));
        if n + 1 < row.len() && !step_increases(&row[n], &row[n + 1], k, n) {
            increasing = false;
        }
    }
    let below_limit = normalised.iter().all(|&(_, v)| v < limit);
    GrowthReport { k, normalised, limit, increasing, below_limit }
}

/// Exact test of `r_{n+1} > r_n` for `r_n = A[n] n^{-(5k-3)/2} (4/27)^n`,
/// done on squares to stay rational.
fn step_increases(a_n: &Integer, a_n1: &Integer, k: usize, n: usize) -> bool {
    let ratio = Rational::from((a_n1.clone(), a_n.clone()));
    let mut lhs = Rational::from(&ratio * &ratio) * Rational::from((16, 729));
    let e = 5 * k as i64 - 3;
    let base = Rational::from((n as u64, n as u64 + 1));
    let p = if e >= 0 { base.pow(e as i32) } else { base.recip().pow((-e) as i32) };
    lhs *= p;
    lhs > 1
}

/// `n^{3(n-1)} / (2^{n-1} ((n-1)!)^3)`, the `k -> infinity` limit of `A_k[n] / n^{2k}`.
pub fn k_limit(n: u32) -> Rational {
    let f = Integer::from(Integer::factorial(n - 1));
    let num = Integer::from(n).pow(3 * (n - 1));
    let den = Integer::from(1) << (n - 1);
    Rational::from((num, den * f.clone() * &f * f))
}

use rug::ops::Pow;
