//! Partial fractions over the factors `(s + k^2)` and related integer utilities.

use super::denom::FactoredDenom;
use super::poly::{PolyQ, PolyZ};
use super::ratfunc::RatFuncQ;
use rug::{Integer, Rational};
use std::collections::BTreeMap;

/// `r = poly + sum_k sum_{i>=1} gamma_{k,i} / (s + k^2)^i`, together with the
/// Taylor coefficients of the regular part at each requested `s = -k^2`
/// (the junior coefficients `gamma_{k,-j}`, `j >= 0`, of `(s + k^2)^j`).
#[derive(Clone, Debug, PartialEq)]
pub struct PartialFractions {
    senior: BTreeMap<u64, Vec<Rational>>,
    junior: BTreeMap<u64, Vec<Rational>>,
    poly: PolyQ,
}

impl PartialFractions {
    /// Decompose `r`, computing `junior_depth` regular-part coefficients at every
    /// pole of `r` and at each extra point in `extra_ks`.
    pub fn of(r: &RatFuncQ, junior_depth: usize, extra_ks: &[u64]) -> Self {
        let mut ks: Vec<u64> = r.den.iter().map(|(k, _)| k).collect();
        for &k in extra_ks {
            if !ks.contains(&k) {
                ks.push(k);
            }
        }
        ks.sort_unstable();
        let mut senior = BTreeMap::new();
        let mut junior = BTreeMap::new();
        for k in ks {
            let e = r.den.exp(k) as usize;
            let g = local_expansion(r, k, e + junior_depth);
            if e > 0 {
                // g_j multiplies t^{j-e}, so gamma_{k,i} = g_{e-i}
                senior.insert(k, (1..=e).map(|i| g[e - i].clone()).collect());
            }
            junior.insert(k, g[e..].to_vec());
        }
        let poly = if r.num.len() as u64 > r.den.degree() {
            r.num.div_rem(&r.den.expand().to_rational()).0
        } else {
            PolyQ::zero()
        };
        PartialFractions { senior, junior, poly }
    }

    /// `gamma_{k,i}`: senior for `i >= 1`, junior (regular part) for `i <= 0`.
    pub fn gamma(&self, k: u64, i: i64) -> Option<Rational> {
        if i >= 1 {
            Some(
                self.senior
                    .get(&k)
                    .and_then(|v| v.get(i as usize - 1).cloned())
                    .unwrap_or_default(),
            )
        } else {
            self.junior.get(&k).and_then(|v| v.get((-i) as usize).cloned())
        }
    }

    pub fn seniors(&self) -> &BTreeMap<u64, Vec<Rational>> {
        &self.senior
    }

    pub fn polynomial_part(&self) -> &PolyQ {
        &self.poly
    }

    /// Rebuild the rational function from the principal parts and polynomial part.
    pub fn recombine(&self) -> RatFuncQ {
        let mut terms = vec![RatFuncQ::raw(self.poly.clone(), FactoredDenom::one())];
        for (&k, g) in &self.senior {
            for (idx, v) in g.iter().enumerate() {
                terms.push(RatFuncQ::raw(PolyQ::constant(v.clone()), FactoredDenom::single(k, idx as u32 + 1)));
            }
        }
        RatFuncQ::sum(&terms)
    }
}

/// Taylor coefficients of `(s + k^2)^e r(s)` at `s = -k^2`.
fn local_expansion(r: &RatFuncQ, k: u64, len: usize) -> Vec<Rational> {
    let a = Integer::from(k * k);
    let mut g = r.num.expand_at_neg(&a, len);
    for (k2, e2) in r.den.iter() {
        if k2 == k {
            continue;
        }
        let c = Rational::from(Integer::from(k2 * k2) - &a);
        for _ in 0..e2 {
            // h = g / (c + t)
            let mut prev = Rational::new();
            for x in g.iter_mut() {
                let h = Rational::from(&*x - &prev) / &c;
                prev = h.clone();
                *x = h;
            }
        }
    }
    g
}

/// Content of an integer polynomial and the 3-adic valuation of that content.
pub fn content_and_val3(p: &PolyZ) -> (Integer, u32) {
    let c = p.content();
    let v = val_p(&c, 3);
    (c, v)
}

/// `p`-adic valuation of a nonzero integer, zero for zero.
pub fn val_p(n: &Integer, p: u32) -> u32 {
    if *n == 0 {
        return 0;
    }
    let mut m = Integer::from(n.abs_ref());
    let mut v = 0;
    while m.is_divisible_u(p) {
        m.div_exact_u_mut(p);
        v += 1;
    }
    v
}
