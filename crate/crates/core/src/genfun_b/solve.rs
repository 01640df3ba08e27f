//! The tower `B_k(x)` from `B = sum_k s^k B_k`, `u = -(tau/2)(1+B)`, `x = tau^2`.
//!
//! With `Y = 1 + B`, the coefficient recurrence is equivalent to
//! `delta^2 ln Y - x Y = -s B/(1+B)^2`. Writing `Y = Y_0 (1 + sum_k s^k beta_k)`
//! with `Y_0 = 1/f`, `f = (1-x/2)^2`, `beta_k = f B_k`, order `s^k` reads
//!
//! ```text
//! delta^2 (f B_k) - x B_k = -delta^2 [ln(1+beta)]_k^{lower} - [B/(1+B)^2]_{k-1}.
//! ```

use super::xrat::{RationalAnsatz, XRat};
use crate::series::SeriesQ;
use crate::algebra::{solve_linear, PolyQ};
use crate::error::{Error, Result};
use rug::Rational;

fn f_poly() -> XRat {
    // (1 - x/2)^2
    XRat::poly(PolyQ::new(vec![Rational::from(1), Rational::from(-1), Rational::from((1, 4))]))
}

/// `1 + B_0 = (1-x/2)^{-2} = 4/(x-2)^2`, so `B_0 = 4/(x-2)^2 - 1`.
pub fn b0() -> XRat {
    XRat::pole(Rational::from(4), 2).sub(&XRat::constant(Rational::from(1)))
}

/// Truncated series in `s` with coefficients in `x`.
type SSer = Vec<XRat>;

fn s_mul(a: &SSer, b: &SSer, len: usize) -> SSer {
    let mut r = vec![XRat::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            if !y.is_zero() {
                r[i + j] = r[i + j].add(&x.mul(y));
            }
        }
    }
    r
}

/// `ln(1+beta)` for `beta` without constant term.
fn s_log1p(beta: &SSer, len: usize) -> SSer {
    let mut out = vec![XRat::zero(); len];
    let mut pw = beta.clone();
    for m in 1..len {
        let c = Rational::from((if m % 2 == 1 { 1 } else { -1 }, m as i64));
        for i in 0..len {
            out[i] = out[i].add(&pw[i].scale(&c));
        }
        pw = s_mul(&pw, beta, len);
    }
    out
}

/// `1/(1+beta)` for `beta` without constant term.
fn s_inv1p(beta: &SSer, len: usize) -> SSer {
    let mut out = vec![XRat::zero(); len];
    let mut pw = vec![XRat::zero(); len];
    pw[0] = XRat::constant(Rational::from(1));
    for m in 0..len {
        let sign = Rational::from(if m % 2 == 0 { 1 } else { -1 });
        for i in 0..len {
            out[i] = out[i].add(&pw[i].scale(&sign));
        }
        pw = s_mul(&pw, beta, len);
    }
    out
}

/// Right side `G_k` of `delta^2(f B_k) - x B_k = G_k`, given `B_0..B_{k-1}`.
pub fn b_rhs(lower: &[XRat]) -> XRat {
    let k = lower.len();
    assert!(k >= 1);
    let len = k + 1;
    let f = f_poly();
    let mut beta = vec![XRat::zero(); len];
    for j in 1..k {
        beta[j] = f.mul(&lower[j]);
    }
    let log = s_log1p(&beta, len);
    let inv = s_inv1p(&beta, len);
    let inv2 = s_mul(&inv, &inv, len);
    // B/(1+B)^2 = f/(1+beta) - f^2/(1+beta)^2
    let f2 = f.mul(&f);
    let q = inv[k - 1].mul(&f).sub(&inv2[k - 1].mul(&f2));
    log[k].delta().delta().neg().sub(&q)
}

/// `delta^2(f B) - x B`.
pub fn b_operator(b: &XRat) -> XRat {
    f_poly().mul(b).delta().delta().sub(&b.mul_x())
}

/// Right side for the reduced operator
/// `x(1-x/2)B'' + (1-5x/2)B' - 2B`, i.e. `G_k / (x(1-x/2))`.
pub fn reduced_rhs(g: &XRat) -> Option<XRat> {
    // x(1-x/2) = -(x/2)(x-2): divide the numerator by x, then by (x-2)
    let (q, r) = g.num.div_linear(&rug::Integer::new());
    if r != 0 {
        return None;
    }
    Some(XRat::new(q.scale(&Rational::from(-2)), g.j + 1))
}

/// Solve `delta^2(f B) - x B = g` with `B(0) = 0` on the ansatz `P(x)/(x-2)^J`,
/// enlarging the bounds until a unique solution exists.
pub fn solve_b_equation(g: &XRat) -> Result<XRat> {
    let mut jj = g.j + 1;
    for _ in 0..6 {
        let gnum_deg = g.lifted(jj.max(g.j)).degree().unwrap_or(0);
        let d = gnum_deg + 2;
        let basis: Vec<XRat> = (0..=d)
            .map(|i| b_operator(&XRat { num: PolyQ::monomial(Rational::from(1), i), j: jj }))
            .collect();
        let jc = basis.iter().map(|b| b.j).max().unwrap_or(0).max(g.j);
        let cols: Vec<PolyQ> = basis.iter().map(|b| b.lifted(jc)).collect();
        let rhs = g.lifted(jc);
        let rows = cols.iter().map(|c| c.len()).max().unwrap_or(0).max(rhs.len());
        let mut a = Vec::with_capacity(rows + 1);
        let mut bvec = Vec::with_capacity(rows + 1);
        for r in 0..rows {
            a.push(cols.iter().map(|c| c.coeff(r)).collect::<Vec<_>>());
            bvec.push(rhs.coeff(r));
        }
        // B(0) = 0 forces P(0) = 0
        let mut row = vec![Rational::new(); d + 1];
        row[0] = Rational::from(1);
        a.push(row);
        bvec.push(Rational::new());
        if let Some((sol, free)) = solve_linear(a, bvec) {
            if free == 0 {
                return Ok(XRat::new(PolyQ::new(sol), jj));
            }
        }
        jj += 1;
    }
    Err(Error::Invalid("no rational solution at stated ansatz bounds".into()))
}

/// `B_0, ..., B_{k_max}` in closed form.
pub fn b_tower(k_max: usize) -> Result<Vec<XRat>> {
    let mut out = vec![b0()];
    for _ in 1..=k_max {
        let g = b_rhs(&out);
        out.push(solve_b_equation(&g)?);
    }
    Ok(out)
}

pub fn solve_b_ode(k: usize) -> Result<RationalAnsatz> {
    Ok(b_tower(k)?.pop().expect("nonempty").to_ansatz())
}

/// `1 + B` for the two-parameter family `u = -(C_1 C_2/4) tau^{sqrt C_1 - 1}/(1 - C_2 tau^{sqrt C_1})^2`
/// at `C_1 = 4`: `2 C_2 / (1 - C_2 x)^2`, as an `x`-series.
pub fn integrable_solution(c2: &Rational, len: usize) -> SeriesQ {
    let den = PolyQ::new(vec![Rational::from(1), Rational::from(-c2)]);
    let d = SeriesQ::from_poly(&den, len);
    let top = SeriesQ::from_poly(&PolyQ::constant(Rational::from(2 * c2)), len);
    top.div(&d.mul(&d)).expect("unit at 0")
}

/// `delta^2 ln Y - x Y` for a series `Y` with `Y(0) != 0`.
pub fn integrable_defect(y: &SeriesQ) -> Result<SeriesQ> {
    // delta ln Y = delta Y / Y
    let dl = y.delta().div(y).ok_or_else(|| Error::Invalid("Y(0) = 0".into()))?;
    Ok(dl.delta().sub(&y.shift(1)))
}
