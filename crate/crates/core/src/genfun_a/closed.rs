//! Closed forms for `A_0`, `A_1[n]` and `A_2[n]`.

use crate::algebra::binom;
use num_complex::Complex64;
use rug::{Integer, Rational};

/// `A_0(z) = -1 + 2/sqrt(-3z) sinh( asinh(3 sqrt(-3z)/2) / 3 )`, principal
/// branches, valid for `|z| < 4/27`.
pub fn a0_eval(z: Complex64) -> Complex64 {
    if z.norm() < 1e-300 {
        return Complex64::new(0.0, 0.0);
    }
    let r = (-3.0 * z).sqrt();
    -1.0 + 2.0 / r * ((1.5 * r).asinh() / 3.0).sinh()
}

/// [`a0_eval`] plus a warning when `z` is outside the disc `|z| < 4/27`
/// where the principal branches are known to give `A_0`.
pub fn a0_eval_checked(z: Complex64) -> (Complex64, Option<String>) {
    let warn = (z.norm() >= 4.0 / 27.0)
        .then(|| format!("|z| = {} is outside |z| < 4/27; the principal branch may not be A_0", z.norm()));
    (a0_eval(z), warn)
}

/// Terminating `2F1(1, -m; c; x)` as an exact rational.
pub fn hyp_1_negm(m: u32, c: &Rational, x: &Rational) -> Rational {
    let mut sum = Rational::from(1);
    let mut term = Rational::from(1);
    for j in 0..m {
        // (1)_j (-m)_j / ((c)_j j!) x^j, the (1)_j and j! cancel
        term *= Rational::from(Integer::from(j) - m);
        term /= Rational::from(c + j);
        term *= x;
        sum += &term;
    }
    sum
}

/// `A_1[n] = (n+1)/18 C(3n+4, n+1) (F(1,-n-1; 2n+4; -2) - (4n+6)/(3n+4))`.
pub fn a1n_closed(n: u32) -> Rational {
    let f = hyp_1_negm(n + 1, &Rational::from(2 * n + 4), &Rational::from(-2));
    let t = f - Rational::from((4 * n + 6, 3 * n + 4));
    Rational::from((n + 1, 18)) * binom(3 * n + 4, n + 1) * t
}

/// `A_2[n] = (n+1)/128 C(3n+1, n) ((168n^3+846n^2+1211n+510)/5
///           - 3(n+1)(25n+34) F(1,-n; 2n+2; -2))`.
pub fn a2n_closed(n: u32) -> Rational {
    let nn = Integer::from(n);
    let poly = Integer::from(168) * nn.clone().pow(3) + Integer::from(846) * nn.clone().pow(2)
        + Integer::from(1211) * &nn
        + Integer::from(510);
    let f = hyp_1_negm(n, &Rational::from(2 * n + 2), &Rational::from(-2));
    let t = Rational::from((poly, Integer::from(5))) - f * Integer::from(3 * (n + 1) * (25 * n + 34));
    Rational::from((n + 1, 128)) * binom(3 * n + 1, n) * t
}

/// Coefficients of `1/(1 - 2 A_0)` from the closed form `C(3n-1, n)` (with `1` at `n = 0`).
pub fn inv_one_minus_2a0_closed(len: usize) -> Vec<Integer> {
    (0..len)
        .map(|n| if n == 0 { Integer::from(1) } else { binom(3 * n as u32 - 1, n as u32) })
        .collect()
}

use rug::ops::Pow;
