//! The link between the tower and the coefficient table:
//! `u_{2n} a^{2n} = sum_k (-1)^k A_k[n] a^{-2k}`.

use crate::algebra::PolyZ;
use crate::coeffs::{predicted_exponents, CoeffTable};
use crate::series::SeriesZ;
use rug::Integer;

/// `Q_n(t) = prod_k (1 + k^2 t)^{n_k}` with the predicted exponents.
pub fn q_poly(n: usize) -> PolyZ {
    let mut p = PolyZ::one();
    for (k, e) in predicted_exponents(n) {
        let f = PolyZ::from_i64s(&[1, (k * k) as i64]);
        for _ in 0..e {
            p = p.mul(&f);
        }
    }
    p
}

/// Coefficients of `t^k`, `k < len`, in the expansion of `a^{2n} u_{2n}` in
/// `t = a^{-2}`, read off the table entry. Entry `k` should be `(-1)^k A_k[n]`.
pub fn laurent_from_table(table: &CoeffTable, n: usize, len: usize) -> Vec<Integer> {
    let u = table.get(n);
    let m = u.num.degree().unwrap_or(0);
    let big = u.den.degree() as usize;
    let num = u.num.reversed(m);
    let mut den = PolyZ::one();
    for (k, e) in u.den.iter() {
        let f = PolyZ::from_i64s(&[1, (k * k) as i64]);
        for _ in 0..e {
            den = den.mul(&f);
        }
    }
    // s^n P(s)/D(s) = t^{big-m-n} Prev(t)/Drev(t)
    let shift = big as i64 - m as i64 - n as i64;
    assert!(shift >= 0, "u_2n must vanish like s^-n");
    let s = SeriesZ::from_poly(&num, len)
        .div(&SeriesZ::from_poly(&den, len))
        .expect("Q(0) = 1")
        .shift(shift as usize);
    s.into_coeffs()
}

/// `p_{m-k}(n) = sum_{i<=k} (-1)^{k-i} q_i A_{k-i}[n]` for `k = 0..=m+extra`,
/// where `a_col[k] = A_k[n]` (sign normalised). Returns the coefficient list
/// `p_0..p_m` (ascending in `s`) and the tail entries for `k = m+1..=m+extra`,
/// which must vanish.
pub fn pk_from_ak(n: usize, a_col: &[Integer], extra: usize) -> (PolyZ, Vec<Integer>) {
    let m = crate::coeffs::m_of(n);
    let q = q_poly(n);
    let qc = q.coeffs();
    let mut conv = Vec::with_capacity(m + extra + 1);
    for k in 0..=m + extra {
        let mut acc = Integer::new();
        for i in 0..=k.min(qc.len() - 1) {
            let t = Integer::from(&qc[i] * &a_col[k - i]);
            if (k - i) % 2 == 0 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        conv.push(acc);
    }
    let tail = conv.split_off(m + 1);
    conv.reverse();
    (PolyZ::new(conv), tail)
}

