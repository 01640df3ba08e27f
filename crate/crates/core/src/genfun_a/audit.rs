//! Exact values of the auxiliary sequences used to bound `p_{m-1}` from below.

use crate::algebra::binom;
use rug::Rational;

fn four_27_pow(n: u32) -> Rational {
    Rational::from((4, 27)).pow(n)
}

/// `X_n = C(3n, n-1) 2^{2n+1} / 3^{3n+2} (3n^2+3n+2)/(n+1)`.
pub fn x_n(n: u32) -> Rational {
    let c = Rational::from(binom(3 * n, n - 1));
    let p = Rational::from((rug::Integer::from(1) << (2 * n + 1), rug::Integer::from(3).pow(3 * n + 2)));
    c * p * Rational::from((3 * n * n + 3 * n + 2, n + 1))
}

/// `Z_n = 8/81 (4/27)^n (n+1) sum_{l=1}^5 C(3n+4, l+n+1) / 2^l`.
pub fn z_n(n: u32) -> Rational {
    let mut s = Rational::new();
    for l in 1..=5u32 {
        s += Rational::from((binom(3 * n + 4, l + n + 1), rug::Integer::from(1) << l));
    }
    Rational::from((8, 81)) * four_27_pow(n) * (n + 1) * s
}

/// `Y_n = 8/9 (4/27)^n C(3n, n-1) ((3n+1)(3n+2)/(3n) + (3n^2+3n+2)/4)`.
pub fn y_n(n: u32) -> Rational {
    let inner = Rational::from(((3 * n + 1) * (3 * n + 2), 3 * n)) + Rational::from((3 * n * n + 3 * n + 2, 4));
    Rational::from((8, 9)) * four_27_pow(n) * binom(3 * n, n - 1) * inner
}

pub fn delta_y(n: u32) -> Rational {
    y_n(n + 1) - y_n(n)
}

#[derive(Clone, Debug)]
pub struct Pmn1Audit {
    /// First `n >= 1` with `X_n > 1`.
    pub x_crossing: u32,
    /// `X_n` increases on `1..=n_hi`.
    pub x_increasing: bool,
    /// First `n >= 1` with `Y_{n+1} - Y_n > 1`.
    pub dy_crossing: u32,
    /// `(n, Y_n + Z_n - (n+1))` for `n = 3..=14`.
    pub yz_margins: Vec<(u32, Rational)>,
}

pub fn pmn1_audit(n_hi: u32) -> Pmn1Audit {
    let xs: Vec<Rational> = (1..=n_hi).map(x_n).collect();
    let x_crossing = (1..=n_hi).find(|&n| xs[n as usize - 1] > 1).unwrap_or(0);
    let x_increasing = xs.windows(2).all(|w| w[1] > w[0]);
    let dy_crossing = (1..=n_hi).find(|&n| delta_y(n) > 1).unwrap_or(0);
    let yz_margins = (3..=14).map(|n| (n, y_n(n) + z_n(n) - Rational::from(n + 1))).collect();
    Pmn1Audit { x_crossing, x_increasing, dy_crossing, yz_margins }
}

/// Truncate a positive rational to `digits` decimal places.
pub fn truncate_decimal(x: &Rational, digits: u32) -> Rational {
    let scale = rug::Integer::from(10).pow(digits);
    let t = Rational::from(x * &scale).floor();
    Rational::from((t.numer().clone(), scale))
}

use rug::ops::Pow;
