//! Closed-form and conjectured residue formulas.

use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};

fn pow_i(b: i64, e: u32) -> Integer {
    Integer::from(b).pow(e)
}

fn fact(n: u64) -> Integer {
    Integer::from(Integer::factorial(n as u32))
}

fn frac(num: Integer, den: Integer) -> Rational {
    Rational::from((num, den))
}

/// `gamma_{1, n_1 - offset}(n)` for `offset` in `0..=2`; offset 2 only for odd `n`.
pub fn closed_residues_k1(offset: u32, n: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Invalid("n starts at 1".into()));
    }
    let odd = n % 2 == 1;
    let k = ((n + 1) / 2) as i64;
    let out_of_range = || Error::Invalid(format!("no closed form for offset {offset} at n = {n}"));
    match offset {
        0 => Ok(if odd {
            frac(Integer::from(k), pow_i(8, k as u32 - 1))
        } else {
            frac(pow_i(2 * k + 1, 2), 9 * pow_i(8, k as u32 - 1))
        }),
        1 => Ok(match n {
            1 => Rational::new(),
            2 => Rational::from((-1, 3)),
            3 => Rational::from((37, 96)),
            4 => Rational::from((-17, 576)),
            // the odd branch is stated one step late in k: shift k -> k - 1
            _ if odd => frac((128 * k - 131) * pow_i(k, 2), 162 * pow_i(8, k as u32 - 1)),
            _ => frac(
                (3200 * k * k - 6625 * k - 582) * pow_i(2 * k + 1, 2),
                109350 * pow_i(8, k as u32 - 1),
            ),
        }),
        2 if odd => Ok(match k {
            1 => Rational::new(),
            2 => Rational::from((-431, 2304)),
            3 => Rational::from((-62743, 552960)),
            4 => Rational::from((-222359, 11059200)),
            _ => {
                let m = k - 1;
                let poly = 13107200 * pow_i(m, 3) - 41164800 * pow_i(m, 2) - 22621088 * m + 3402171;
                frac(poly * pow_i(k, 2), 1968300 * pow_i(8, k as u32 + 1))
            }
        }),
        _ => Err(out_of_range()),
    }
}

/// Residue classes of `n` modulo 3 for the senior residues at `k = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum K2Branch {
    /// `n = 3p + 2`, `gamma_{2,p+1}`.
    ThreePPlus2,
    /// `n = 3p`, `gamma_{2,p}`.
    ThreeP,
    /// `n = 3p + 1`, `gamma_{2,p}`.
    ThreePPlus1,
}

impl K2Branch {
    /// `(n, i)` addressed by the branch at `p`.
    pub fn target(self, p: u32) -> (usize, i64) {
        let p_ = p as usize;
        match self {
            K2Branch::ThreePPlus2 => (3 * p_ + 2, p as i64 + 1),
            K2Branch::ThreeP => (3 * p_, p as i64),
            K2Branch::ThreePPlus1 => (3 * p_ + 1, p as i64),
        }
    }
}

pub fn closed_residues_k2(branch: K2Branch, p: u32) -> Result<Rational> {
    let sign = |e: u32| if e % 2 == 0 { 1 } else { -1 };
    let p_ = p as i64;
    match branch {
        K2Branch::ThreePPlus2 => Ok(frac(Integer::from(sign(p + 1) * (p_ + 1)), pow_i(18, p))),
        K2Branch::ThreeP => {
            if p == 0 {
                return Err(Error::Invalid("branch 3p needs p >= 1".into()));
            }
            Ok(frac(sign(p) * 3 * pow_i(3 * p_ + 1, 2), 4 * pow_i(18, p)))
        }
        K2Branch::ThreePPlus1 => Ok(match p {
            0 => Rational::from((-1, 3)),
            1 => Rational::from((-2, 27)),
            _ => frac(sign(p) * 9 * (50 * p_ - 31) * pow_i(3 * p_ + 2, 2), 3200 * pow_i(18, p)),
        }),
    }
}

/// Conjectured `C_{1,k} = (-k)^{k-1} / (2^k (k+1)^2 ((k-1)!)^3)`.
pub fn c1k_conjecture(k: u64) -> Rational {
    let num = pow_i(-(k as i64), k as u32 - 1);
    let den = pow_i(2, k as u32) * pow_i(k as i64 + 1, 2) * fact(k - 1).pow(3);
    frac(num, den)
}

/// Conjectured `gamma_{k,p+1}(p(k+1)+k)`.
pub fn gamma_top_conjecture(k: u64, p: u32) -> Rational {
    let kk = k as i64;
    let num = Integer::from(p + 1) * pow_i(-kk, (p + 1) * (k as u32 - 1));
    let den = pow_i(2, (p + 1) * k as u32 - 1) * pow_i(kk + 1, 2 * p) * fact(k - 1).pow(3 * (p + 1));
    frac(num, den)
}

/// Conjectured `gamma_{k,p}(p(k+1))`, `p >= 1`.
pub fn gamma_zero_conjecture(k: u64, p: u32) -> Rational {
    let kk = k as i64;
    let pp = p as i64;
    let num = pow_i(pp * kk + pp + 1, 2) * pow_i(-kk, p * (k as u32 - 1));
    let den = pow_i(kk + 2, 2) * pow_i(kk + 1, 2 * p - 1) * fact(k - 1).pow(3 * p);
    // 2^{pk-2} may be 1/2 when p = k = 1
    let e = p as i64 * kk - 2;
    let mut r = frac(num, den);
    if e >= 0 {
        r /= Rational::from(pow_i(2, e as u32));
    } else {
        r *= Rational::from(pow_i(2, (-e) as u32));
    }
    r
}

/// Conjectured `(a_k, b_k, c_k)` of `v_{k,0} = z^{k+1}(a z^{2k+2} + b z^{k+1} + c)/(1 - C_{1,k} z^{k+1})^3`.
pub fn vk0_conjecture(k: u64) -> (Rational, Rational, Rational) {
    let kk = k as i64;
    let kw = k as u32;
    let f = fact(k - 1);
    let two = |e: i64| {
        if e >= 0 {
            Rational::from(pow_i(2, e as u32))
        } else {
            Rational::from((1, pow_i(2, (-e) as u32)))
        }
    };
    let a = two(2 - 3 * kk)
        * frac(pow_i(-kk, 3 * kw - 3), pow_i(kk + 2, 2) * pow_i(kk + 1, 5) * f.clone().pow(9));
    let b = two(2 - 2 * kk)
        * frac(pow_i(-kk, 2 * kw - 2) * (kk * kk - 3), pow_i(kk + 2, 2) * pow_i(kk + 1, 3) * f.clone().pow(6));
    let c = two(2 - kk) * frac(pow_i(-kk, kw - 1), (kk + 1) * f.pow(3));
    (a, b, c)
}
