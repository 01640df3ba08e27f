//! Closed forms for the first three Taylor coefficients of `u_{2n}` at `s = 0`
//! and for the low coefficients `p_0, p_1, p_2` of the numerators.

use crate::coeffs::{predicted_exponents, CoeffTable};
use crate::series::SeriesQ;
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::{Integer, Rational};

fn two_pow(e: usize) -> Integer {
    Integer::from(1) << (e as u32)
}

/// `u_{2n}^k`, the coefficient of `s^k` in `u_{2n}(s)`, for `k <= 2`.
pub fn closed_forms_u2nk(n: usize, k: usize) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Invalid("n starts at 1".into()));
    }
    let n1 = Integer::from(n + 1);
    match k {
        0 => Ok(Rational::from((n1, two_pow(n)))),
        1 => Ok(match n {
            1 => Rational::from(-1),
            2 => Rational::from((-15, 16)),
            _ => Rational::from((-61, 144)) * Rational::from((n1.clone() * &n1, two_pow(n))),
        }),
        2 => Ok(match n {
            1 => Rational::from(1),
            2 => Rational::from((63, 64)),
            3 => Rational::from((2917, 2592)),
            4 => Rational::from((335485, 331776)),
            5 => Rational::from((382273, 460800)),
            _ => {
                let lead = Rational::from((61 * 61, 12i64.pow(4)));
                let shift = Rational::from((4 * 29 * 29 * 89, 25 * 61 * 61));
                lead * Rational::from((n1.clone() * &n1, two_pow(n + 1))) * (shift + Integer::from(n))
            }
        }),
        _ => Err(Error::Invalid(format!("no closed form for k = {k}"))),
    }
}

/// `prod_k k^{2 n_k}` with the predicted exponents.
fn weight(n: usize) -> Integer {
    predicted_exponents(n)
        .into_iter()
        .fold(Integer::from(1), |acc, (k, e)| acc * Integer::from(k).pow(2 * e))
}

/// `sum_k n_k / k^{2r}`.
fn moment(n: usize, r: u32) -> Rational {
    predicted_exponents(n)
        .into_iter()
        .fold(Rational::new(), |acc, (k, e)| acc + Rational::from((e, Integer::from(k).pow(2 * r))))
}

fn as_integer(v: Rational) -> Result<Integer> {
    if *v.denom() != 1 {
        return Err(Error::Invalid(format!("closed form gave non-integer {v}")));
    }
    Ok(v.numer().clone())
}

/// `p_k(n)` from the closed forms; `k = 1` needs `n >= 3`, `k = 2` needs `n >= 5`.
pub fn closed_forms_pk(n: usize, k: usize) -> Result<Integer> {
    let w = Rational::from(weight(n));
    let n1 = Rational::from(n + 1);
    match k {
        0 => as_integer(n1 / Rational::from(two_pow(n)) * w),
        1 => {
            if n < 3 {
                return Err(Error::Invalid("p_1 closed form needs n >= 3".into()));
            }
            let inner = moment(n, 1) / n1.clone() - Rational::from((61, 144));
            as_integer(Rational::from(&n1 * &n1) / Rational::from(two_pow(n)) * inner * w)
        }
        2 => {
            if n < 5 {
                return Err(Error::Invalid("p_2 closed form needs n >= 5".into()));
            }
            if n == 5 {
                return Ok(Integer::from(3345));
            }
            let t = moment(n, 1) / n1.clone() - Rational::from((61, 144));
            let c = Rational::from((11 * 73 * 257, 25 * 12i64.pow(4)));
            let inner = Rational::from(&t * &t) + c / n1.clone() - moment(n, 2) / Rational::from(&n1 * &n1);
            let n3 = Rational::from(&n1 * &n1) * &n1;
            as_integer(n3 / Rational::from(two_pow(n + 1)) * inner * w)
        }
        _ => Err(Error::Invalid(format!("no closed form for k = {k}"))),
    }
}

/// Coefficients of `x^n`, `n < len`, in `B_k(x)`, read off the table.
pub fn b_series_from_table(table: &CoeffTable, k: usize, len: usize) -> Result<SeriesQ> {
    if table.n_max() + 1 < len {
        return Err(Error::TableTooShort { have: table.n_max(), need: len - 1 });
    }
    let mut out = vec![Rational::new()];
    for n in 1..len {
        out.push(table.get(n).taylor_at_zero(k + 1).swap_remove(k));
    }
    Ok(SeriesQ::from_coeffs(out, len))
}
