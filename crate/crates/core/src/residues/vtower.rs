//! The generating functions `v_{k,l}(z)` of the residues near `a^2 = -k^2`.
//!
//! With `xi^{k+1} = a^2 + k^2` and `V(xi, z) = U(a, xi z)`,
//!
//! ```text
//! (delta^2 + xi^{k+1} - k^2) V = xi z (1+V)^3 + (delta V)^2 - V delta^2 V,
//! V = sum_{l >= -1} v_{k,l}(z) xi^l.
//! ```
//!
//! Each level is linear in the new unknown with the operator
//! `L[y] = v_{-1} delta^2 y - 2 delta v_{-1} delta y + (delta^2 v_{-1} - 3 z v_{-1}^2) y`.
//! Levels are solved as `z`-series seeded by the table at `z^k`, then
//! reconstructed over powers of `1 - C_{1,k} z^{k+1}` and checked exactly.

use super::table::ResidueTable;
use crate::algebra::PolyQ;
use crate::error::{Error, Result};
use crate::series::SeriesQ;
use rug::Rational;

/// Arithmetic on `N(z) / d(z)^j` with `d = 1 - C z^{k+1}` fixed.
#[derive(Clone, Debug)]
struct ZCtx {
    d: PolyQ,
    /// `z d'(z)`
    zdd: PolyQ,
}

#[derive(Clone, Debug, PartialEq)]
struct ZRat {
    num: PolyQ,
    j: u32,
}

impl ZCtx {
    fn new(k: u64, c: &Rational) -> Self {
        let e = k as usize + 1;
        let d = PolyQ::one().sub(&PolyQ::monomial(c.clone(), e));
        let zdd = PolyQ::monomial(Rational::from(c * Rational::from(e)) * Rational::from(-1), e);
        ZCtx { d, zdd }
    }

    fn reduce(&self, mut r: ZRat) -> ZRat {
        if r.num.is_zero() {
            r.j = 0;
            return r;
        }
        while r.j > 0 {
            let (q, rem) = r.num.div_rem(&self.d);
            if !rem.is_zero() {
                break;
            }
            r.num = q;
            r.j -= 1;
        }
        r
    }

    fn lift(&self, r: &ZRat, j: u32) -> PolyQ {
        r.num.mul(&self.d.pow(j - r.j))
    }

    fn add(&self, a: &ZRat, b: &ZRat) -> ZRat {
        let j = a.j.max(b.j);
        self.reduce(ZRat { num: self.lift(a, j).add(&self.lift(b, j)), j })
    }

    fn sub(&self, a: &ZRat, b: &ZRat) -> ZRat {
        self.add(a, &ZRat { num: b.num.neg(), j: b.j })
    }

    fn mul(&self, a: &ZRat, b: &ZRat) -> ZRat {
        if a.num.is_zero() || b.num.is_zero() {
            return ZRat::zero();
        }
        self.reduce(ZRat { num: a.num.mul(&b.num), j: a.j + b.j })
    }

    fn delta(&self, a: &ZRat) -> ZRat {
        if a.num.is_zero() {
            return ZRat::zero();
        }
        let zn = a.num.derivative().mul(&PolyQ::monomial(Rational::from(1), 1));
        let num = zn.mul(&self.d).sub(&a.num.mul(&self.zdd).scale(&Rational::from(a.j)));
        self.reduce(ZRat { num, j: a.j + 1 })
    }

    fn series(&self, a: &ZRat, len: usize) -> SeriesQ {
        let den = SeriesQ::from_poly(&self.d, len).pow(a.j);
        SeriesQ::from_poly(&a.num, len).div(&den).expect("d(0) = 1")
    }
}

impl ZRat {
    fn zero() -> Self {
        ZRat { num: PolyQ::zero(), j: 0 }
    }

    fn mul_z(&self) -> Self {
        ZRat { num: self.num.mul(&PolyQ::monomial(Rational::from(1), 1)), j: self.j }
    }

    fn scale(&self, c: &Rational) -> Self {
        if *c == 0 {
            return ZRat::zero();
        }
        ZRat { num: self.num.scale(c), j: self.j }
    }
}

/// `v_{k,l}(z) = num(z) / (1 - c1 z^{k+1})^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct VFunction {
    pub k: u64,
    pub l: i64,
    pub c1: Rational,
    pub num: PolyQ,
    pub j: u32,
}

impl VFunction {
    pub fn denominator(&self) -> PolyQ {
        ZCtx::new(self.k, &self.c1).d.pow(self.j)
    }

    /// True when `v = p / q`.
    pub fn equals(&self, p: &PolyQ, q: &PolyQ) -> bool {
        self.num.mul(q) == p.mul(&self.denominator())
    }

    pub fn series(&self, len: usize) -> SeriesQ {
        ZCtx::new(self.k, &self.c1).series(&ZRat { num: self.num.clone(), j: self.j }, len)
    }

    pub fn eval(&self, z: &Rational) -> Option<Rational> {
        let d = self.denominator().eval(z);
        if d == 0 {
            return None;
        }
        Some(self.num.eval(z) / d)
    }
}

/// Which residue sits at `z^n` in `v_{k,l}`: `Some(i)` for `gamma_{k,i}(n)`,
/// `None` where the coefficient vanishes.
pub fn index_map(k: u64, l: i64, n: usize) -> Option<i64> {
    let kp = k as i64 + 1;
    let n = n as i64;
    if (l + 1) % kp == 0 {
        let i = (l + 1) / kp;
        if n % kp != k as i64 {
            return None;
        }
        Some(n / kp + 1 - i)
    } else {
        let (i, q) = (l.div_euclid(kp), l.rem_euclid(kp));
        if n % kp != q {
            return None;
        }
        Some(n / kp - i)
    }
}

/// Coefficient of `xi^m` in `xi^2 (LHS - RHS)`, written for `W = xi V` with
/// `w_i = v_{i-1}` and `w_i = 0` past the end of `ws`.
struct Level<'a> {
    ctx: &'a ZCtx,
    k: u64,
    ws: Vec<ZRat>,
    d1: Vec<ZRat>,
    d2: Vec<ZRat>,
}

impl<'a> Level<'a> {
    fn new(ctx: &'a ZCtx, k: u64) -> Self {
        Level { ctx, k, ws: Vec::new(), d1: Vec::new(), d2: Vec::new() }
    }

    fn push(&mut self, w: ZRat) {
        let d1 = self.ctx.delta(&w);
        let d2 = self.ctx.delta(&d1);
        self.ws.push(w);
        self.d1.push(d1);
        self.d2.push(d2);
    }

    fn pop(&mut self) {
        self.ws.pop();
        self.d1.pop();
        self.d2.pop();
    }

    fn w(&self, i: usize) -> Option<&ZRat> {
        self.ws.get(i).filter(|w| !w.num.is_zero())
    }

    /// `x_i` of `X = xi + W`.
    fn x(&self, i: usize) -> ZRat {
        let mut r = self.ws.get(i).cloned().unwrap_or_else(ZRat::zero);
        if i == 1 {
            r = self.ctx.add(&r, &ZRat { num: PolyQ::one(), j: 0 });
        }
        r
    }

    fn coeff(&self, m: usize) -> ZRat {
        let c = self.ctx;
        let k2 = Rational::from(self.k * self.k);
        let mut acc = ZRat::zero();
        if m >= 1 && self.w(m - 1).is_some() {
            acc = c.add(&acc, &self.d2[m - 1]);
            acc = c.sub(&acc, &self.ws[m - 1].scale(&k2));
        }
        let kk = self.k as usize + 2;
        if m >= kk {
            if let Some(w) = self.w(m - kk) {
                acc = c.add(&acc, w);
            }
        }
        let xs: Vec<ZRat> = (0..=m).map(|i| self.x(i)).collect();
        let mut cubic = ZRat::zero();
        for a in 0..=m {
            if xs[a].num.is_zero() {
                continue;
            }
            for b in 0..=m - a {
                if xs[b].num.is_zero() || xs[m - a - b].num.is_zero() {
                    continue;
                }
                cubic = c.add(&cubic, &c.mul(&c.mul(&xs[a], &xs[b]), &xs[m - a - b]));
            }
        }
        acc = c.sub(&acc, &cubic.mul_z());
        for a in 0..=m {
            let b = m - a;
            if self.w(a).is_none() || self.w(b).is_none() {
                continue;
            }
            acc = c.sub(&acc, &c.mul(&self.d1[a], &self.d1[b]));
            acc = c.add(&acc, &c.mul(&self.ws[a], &self.d2[b]));
        }
        acc
    }
}

/// Seed for the free coefficient at `z^k` of `v_{k,l}`.
fn seed(res: &ResidueTable, k: u64, l: i64) -> Result<Rational> {
    match index_map(k, l, k as usize) {
        None => Ok(Rational::new()),
        Some(i) => res.gamma(k, i, k as usize).ok_or(Error::TableTooShort {
            have: res.n_max(),
            need: k as usize,
        }),
    }
}

/// Series solution of `L[y] = -f` with `y_k = y_seed`.
fn solve_series(ctx: &ZCtx, w0: &ZRat, f: &ZRat, k: usize, y_seed: &Rational, len: usize) -> Result<Vec<Rational>> {
    let full = len + k + 1;
    let a = ctx.series(w0, full);
    let cz = ctx.sub(&ctx.delta(&ctx.delta(w0)), &ctx.mul(w0, w0).mul_z().scale(&Rational::from(3)));
    let cser = ctx.series(&cz, full);
    let fser = ctx.series(f, full);
    if (0..k).any(|m| *fser.coeff(m) != 0) {
        return Err(Error::Invalid("inhomogeneity below the leading order".into()));
    }
    let ak = a.coeff(k).clone();
    let mut y: Vec<Rational> = Vec::with_capacity(len);
    for jj in 0..len {
        let m = jj + k;
        let mut acc = fser.coeff(m).clone();
        for (i, yi) in y.iter().enumerate() {
            if *yi == 0 {
                continue;
            }
            let r = m - i;
            let ii = Rational::from(i);
            let rr = Rational::from(r);
            let ell = Rational::from(a.coeff(r) * (Rational::from(&ii * &ii) - Rational::from(2 * rr * &ii)))
                + cser.coeff(r);
            acc += ell * yi;
        }
        if jj == k {
            if acc != 0 {
                return Err(Error::Invalid("level needs a logarithmic term".into()));
            }
            y.push(y_seed.clone());
        } else {
            let dk = Rational::from(jj as i64 - k as i64);
            y.push(Rational::from(-acc) / (Rational::from(&dk * &dk) * &ak));
        }
    }
    Ok(y)
}

/// Rational candidates `P / d^J` read off a truncated series, smallest `J` first.
fn reconstruct(ctx: &ZCtx, y: &[Rational], k: usize) -> Vec<ZRat> {
    let len = y.len();
    let margin = 2 * (k + 1) + 8;
    let ys = SeriesQ::from_coeffs(y.to_vec(), len);
    let ds = SeriesQ::from_poly(&ctx.d, len);
    let mut out = Vec::new();
    let mut cur = ys;
    for jj in 0..(len / (k + 1)) as u32 {
        let last = cur.coeffs().iter().rposition(|c| *c != 0);
        match last {
            None => out.push(ZRat::zero()),
            Some(deg) if deg + margin < len => {
                out.push(ZRat { num: PolyQ::new(cur.coeffs()[..=deg].to_vec()), j: jj });
            }
            _ => {}
        }
        cur = cur.mul(&ds);
    }
    out
}

/// `v_{k,-1}, ..., v_{k,levels}`. `C_{1,k}` is fixed by `gamma_{k,1}(k)` and
/// each level is checked as an exact rational identity.
pub fn v_tower(k: u64, levels: i64, res: &ResidueTable) -> Result<Vec<VFunction>> {
    if k == 0 {
        return Err(Error::Invalid("k starts at 1".into()));
    }
    let g = seed(res, k, -1)?;
    if g == 0 {
        return Err(Error::Invalid(format!("gamma_{{{k},1}}({k}) vanishes")));
    }
    let kp1 = Rational::from(k + 1);
    let c1 = Rational::from(&g / Rational::from(2 * Rational::from(&kp1 * &kp1)));
    let ctx = ZCtx::new(k, &c1);
    let w0 = ZRat { num: PolyQ::monomial(g, k as usize), j: 2 };
    let mut lev = Level::new(&ctx, k);
    lev.push(w0.clone());
    if !lev.coeff(0).num.is_zero() {
        return Err(Error::Invalid("level -1 identity fails".into()));
    }
    let mut out = vec![VFunction { k, l: -1, c1: c1.clone(), num: w0.num.clone(), j: w0.j }];
    for l in 0..=levels {
        let m = (l + 1) as usize;
        let f = lev.coeff(m);
        let s = seed(res, k, l)?;
        let mut len = 48usize;
        let sol = loop {
            let y = solve_series(&ctx, &w0, &f, k as usize, &s, len)
                .map_err(|e| Error::Invalid(format!("level {l}: {e}")))?;
            let mut found = None;
            for cand in reconstruct(&ctx, &y, k as usize) {
                lev.push(cand.clone());
                let ok = lev.coeff(m).num.is_zero();
                lev.pop();
                if ok {
                    found = Some(cand);
                    break;
                }
            }
            if let Some(c) = found {
                break c;
            }
            len *= 2;
            if len > 2048 {
                return Err(Error::Invalid(format!("level {l}: no rational solution found")));
            }
        };
        lev.push(sol.clone());
        out.push(VFunction { k, l, c1: c1.clone(), num: sol.num, j: sol.j });
    }
    Ok(out)
}

/// Orders `n <= n_max` where the Taylor coefficient of `v` differs from the
/// table entry under the index map, with `(n, expected, found)`.
pub fn index_map_mismatches(v: &VFunction, res: &ResidueTable, n_max: usize) -> Result<Vec<(usize, Rational, Rational)>> {
    let s = v.series(n_max + 1);
    let mut bad = Vec::new();
    for n in 0..=n_max {
        let want = match index_map(v.k, v.l, n) {
            None => Rational::new(),
            Some(i) => res.gamma(v.k, i, n).ok_or(Error::TableTooShort { have: res.n_max(), need: n })?,
        };
        if *s.coeff(n) != want {
            bad.push((n, want, s.coeff(n).clone()));
        }
    }
    Ok(bad)
}

/// Observed `C_{1,k} = gamma_{k,1}(k) / (2 (k+1)^2)` for `k = 1..=k_max`.
pub fn c1k_determination(res: &ResidueTable, k_max: u64) -> Result<Vec<Rational>> {
    (1..=k_max)
        .map(|k| {
            let g = res.gamma(k, 1, k as usize).ok_or(Error::TableTooShort { have: res.n_max(), need: k as usize })?;
            Ok(g / Rational::from(2 * (k + 1) * (k + 1)))
        })
        .collect()
}
