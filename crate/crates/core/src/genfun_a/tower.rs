//! The tower `A_k`, generating functions of `A_k[n]` in `z`.
//!
//! `A = sum_k A_k a^{-2k}` solves `a^2 (z(1+A)^3 - A) = (1+A) delta^2 A - (delta A)^2`
//! with `delta = z d/dz`. Collecting powers of `a^{-2}`,
//!
//! ```text
//! A_{k+1} = (1+A_0)/(2A_0-1) * ( delta^2 A_k + sum_{i+j=k} (A_i delta^2 A_j - delta A_i delta A_j)
//!           - 3z sum_{i+j=k+1; i,j<=k} A_i A_j - z sum_{i+j+l=k+1; all<=k} A_i A_j A_l ).
//! ```

use super::wrat::WRat;
use crate::algebra::PolyQ;
use crate::series::{SeriesQ, SeriesZ};
use rug::{Integer, Rational};

/// Operations the recursion needs; implemented symbolically (in `w`) and on
/// truncated integer series (in `z`).
trait TowerElt: Clone {
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn scale(&self, c: i64) -> Self;
    fn delta(&self) -> Self;
    fn mul_z(&self) -> Self;
    fn mul_lift(&self) -> Self;
}

impl TowerElt for WRat {
    fn add(&self, o: &Self) -> Self {
        WRat::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        WRat::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        WRat::mul(self, o)
    }
    fn scale(&self, c: i64) -> Self {
        self.scale_i64(c)
    }
    fn delta(&self) -> Self {
        WRat::delta(self)
    }
    fn mul_z(&self) -> Self {
        WRat::mul_z(self)
    }
    fn mul_lift(&self) -> Self {
        self.mul_lift_factor()
    }
}

/// Series element carrying the precomputed lift factor `(1+A_0)/(2A_0-1)`.
#[derive(Clone)]
struct ZSer {
    s: SeriesZ,
    lift: std::rc::Rc<SeriesZ>,
}

impl TowerElt for ZSer {
    fn add(&self, o: &Self) -> Self {
        ZSer { s: self.s.add(&o.s), lift: self.lift.clone() }
    }
    fn sub(&self, o: &Self) -> Self {
        ZSer { s: self.s.sub(&o.s), lift: self.lift.clone() }
    }
    fn mul(&self, o: &Self) -> Self {
        ZSer { s: self.s.mul(&o.s), lift: self.lift.clone() }
    }
    fn scale(&self, c: i64) -> Self {
        ZSer { s: self.s.scale_i64(c), lift: self.lift.clone() }
    }
    fn delta(&self) -> Self {
        ZSer { s: self.s.delta(), lift: self.lift.clone() }
    }
    fn mul_z(&self) -> Self {
        ZSer { s: self.s.shift(1), lift: self.lift.clone() }
    }
    fn mul_lift(&self) -> Self {
        ZSer { s: self.s.mul(&self.lift), lift: self.lift.clone() }
    }
}

fn run_tower<T: TowerElt>(a0: T, zero: T, k_max: usize) -> Vec<T> {
    let mut a = vec![a0];
    let mut d1 = vec![a[0].delta()];
    let mut d2 = vec![d1[0].delta()];
    // s2[m] = sum_{i+j=m} A_i A_j
    let mut s2 = vec![a[0].mul(&a[0])];
    for k in 0..k_max {
        let mut acc = d2[k].clone();
        for i in 0..=k {
            let j = k - i;
            acc = acc.add(&a[i].mul(&d2[j])).sub(&d1[i].mul(&d1[j]));
        }
        let mut quad = zero.clone();
        for i in 1..=k {
            quad = quad.add(&a[i].mul(&a[k + 1 - i]));
        }
        let mut cubic = a[0].mul(&quad);
        for i in 1..=k {
            cubic = cubic.add(&a[i].mul(&s2[k + 1 - i]));
        }
        acc = acc.sub(&quad.scale(3).mul_z()).sub(&cubic.mul_z());
        let next = acc.mul_lift();
        a.push(next);
        let dn = a[k + 1].delta();
        d2.push(dn.delta());
        d1.push(dn);
        let mut s = zero.clone();
        for i in 0..=k + 1 {
            s = s.add(&a[i].mul(&a[k + 1 - i]));
        }
        s2.push(s);
    }
    a
}

/// `A_0, ..., A_{k_max}` as exact rational functions of `w`.
pub fn ak_rational(k_max: usize) -> Vec<WRat> {
    run_tower(WRat::w(), WRat::zero(), k_max)
}

/// `A_0[n] = C(3n, n)/(2n+1)` for `n < len`.
pub fn a0_series(len: usize) -> SeriesZ {
    let c = (0..len)
        .map(|n| {
            if n == 0 {
                Integer::new()
            } else {
                let n = n as u32;
                crate::algebra::binom(3 * n, n) / Integer::from(2 * n + 1)
            }
        })
        .collect();
    SeriesZ::from_coeffs(c, len)
}

/// Table of sign normalised `A_k[n]`, `0 <= k <= k_max`, `0 <= n < len`,
/// computed by running the recursion directly on series in `z`.
pub fn ak_series_direct(k_max: usize, len: usize) -> Vec<Vec<Integer>> {
    let a0 = a0_series(len);
    let one = SeriesZ::one(len);
    let lift = one.add(&a0).div(&a0.scale_i64(2).sub(&one)).expect("2A_0 - 1 is a unit");
    let lift = std::rc::Rc::new(lift);
    let z0 = ZSer { s: a0, lift: lift.clone() };
    let zero = ZSer { s: SeriesZ::zero(len), lift };
    run_tower(z0, zero, k_max)
        .into_iter()
        .enumerate()
        .map(|(k, t)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            t.s.into_coeffs().into_iter().map(|x| x * sign).collect()
        })
        .collect()
}

/// Sign normalised `A_k[n]`, `n < len`, from the rational form of `A_k`
/// composed with the series of `A_0`.
pub fn ak_series_from_rational(ak: &WRat, k: usize, len: usize) -> Vec<Rational> {
    let w = a0_series(len).to_q();
    let one = SeriesQ::one(len);
    let num = SeriesQ::from_poly(&ak.num, len).compose(&w);
    let d1 = one.sub(&w.scale_i64(2)).pow(ak.e);
    let d2 = one.add(&w).pow(ak.f);
    let s = num.div(&d1.mul(&d2)).expect("unit denominator");
    let sign = if k % 2 == 0 { 1 } else { -1 };
    s.into_coeffs().into_iter().map(|x| x * Integer::from(sign)).collect()
}

/// The polynomial `R_{3(k-1)}` in `A_k = -w (1+w)^{2(k+1)} R(w) / (2w-1)^{5k-1}`,
/// `None` when `A_k` does not have that shape.
pub fn r_poly(ak: &WRat, k: usize) -> Option<PolyQ> {
    if k == 0 || ak.f != 0 || ak.e as usize != 5 * k - 1 {
        return None;
    }
    let mut div = PolyQ::from_i64s(&[0, -1]).mul(&PolyQ::from_i64s(&[1, 1]).pow(2 * k as u32 + 2));
    if (5 * k - 1) % 2 == 1 {
        div = div.neg();
    }
    let (q, r) = ak.num.div_rem(&div);
    if !r.is_zero() || q.degree() != Some(3 * (k - 1)) {
        return None;
    }
    Some(q)
}

/// `R_{3(k-1)}(1/2)`, with the convention `R_{-3}(1/2) = -(2/3)^2` at `k = 0`.
pub fn r_at_half(tower: &[WRat], k: usize) -> Option<Rational> {
    if k == 0 {
        return Some(Rational::from((-4, 9)));
    }
    r_poly(&tower[k], k).map(|p| p.eval(&Rational::from((1, 2))))
}


/// One sequence as a b-file: `n value` per line, starting at `n = offset`.
pub fn write_bfile<W: std::io::Write>(row: &[Integer], offset: usize, mut out: W) -> std::io::Result<()> {
    for (i, v) in row.iter().enumerate().skip(offset) {
        writeln!(out, "{i} {v}")?;
    }
    Ok(())
}
