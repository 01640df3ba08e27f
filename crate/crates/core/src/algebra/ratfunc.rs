//! Rational functions in `s` with denominators supported on `s = -k^2`.

use super::denom::FactoredDenom;
use super::poly::Poly;
use super::ring::Ring;
use rug::{Integer, Rational};
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct RatFunc<T: Ring> {
    pub num: Poly<T>,
    pub den: FactoredDenom,
}

pub type RatFuncZ = RatFunc<Integer>;
pub type RatFuncQ = RatFunc<Rational>;

impl<T: Ring> RatFunc<T> {
    /// Builds and cancels common linear factors.
    pub fn new(num: Poly<T>, den: FactoredDenom) -> Self {
        let mut r = RatFunc { num, den };
        r.reduce();
        r
    }

    /// Builds without cancellation.
    pub fn raw(num: Poly<T>, den: FactoredDenom) -> Self {
        RatFunc { num, den }
    }

    pub fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: FactoredDenom::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Cancel factors `(s + k^2)` dividing the numerator.
    pub fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = FactoredDenom::one();
            return;
        }
        let ks: Vec<(u64, u32)> = self.den.iter().collect();
        for (k, e) in ks {
            let a = Integer::from(k * k);
            let mut left = e;
            while left > 0 {
                let (q, r) = self.num.div_linear(&a);
                if !r.is_zero() {
                    break;
                }
                self.num = q;
                left -= 1;
            }
            self.den.set(k, left);
        }
    }

    /// Sum of several terms over the lcm of their denominators, then reduced.
    pub fn sum(terms: &[Self]) -> Self {
        let mut l = FactoredDenom::one();
        for t in terms {
            if !t.is_zero() {
                l = l.lcm(&t.den);
            }
        }
        let mut acc = Poly::zero();
        for t in terms {
            if t.is_zero() {
                continue;
            }
            let co = l.cofactor(&t.den);
            acc.add_assign(&co.mul_into(&t.num));
        }
        Self::new(acc, l)
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::sum(&[self.clone(), o.clone()])
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::sum(&[self.clone(), o.neg()])
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    /// Product without cancellation.
    pub fn mul_raw(&self, o: &Self) -> Self {
        RatFunc { num: self.num.mul(&o.num), den: self.den.mul(&o.den) }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.mul_raw(o);
        r.reduce();
        r
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        RatFunc { num: self.num.scale_i64(c), den: self.den.clone() }
    }

    /// Divide by `(s + k^2)`.
    pub fn div_factor(&self, k: u64) -> Self {
        let mut d = self.den.clone();
        d.set(k, d.exp(k) + 1);
        Self::new(self.num.clone(), d)
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let mut d = Rational::from(1);
        for (k, e) in self.den.iter() {
            let f = Rational::from(x + Integer::from(k * k));
            if f == 0 {
                return None;
            }
            for _ in 0..e {
                d *= &f;
            }
        }
        Some(self.num.eval_rational(x) / d)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut d = 1.0;
        for (k, e) in self.den.iter() {
            d *= (x + (k * k) as f64).powi(e as i32);
        }
        self.num.eval_f64(x) / d
    }

    /// Taylor coefficients at `s = 0`.
    pub fn taylor_at_zero(&self, len: usize) -> Vec<Rational> {
        let d = self.den.expand().to_rational();
        let n = self.num.to_rational();
        crate::series::SeriesQ::from_poly(&n, len)
            .div(&crate::series::SeriesQ::from_poly(&d, len))
            .expect("denominator vanishes at zero")
            .into_coeffs()
    }

    pub fn to_q(&self) -> RatFuncQ {
        RatFunc { num: self.num.to_rational(), den: self.den.clone() }
    }

    /// True when both sides agree as rational functions.
    pub fn equals(&self, o: &Self) -> bool {
        let l = self.den.lcm(&o.den);
        let a = l.cofactor(&self.den).mul_into(&self.num);
        let b = l.cofactor(&o.den).mul_into(&o.num);
        a == b
    }
}

impl RatFuncQ {
    /// Integer numerator and scalar with `self = c * (num / den)`.
    pub fn to_integral(&self) -> (RatFuncZ, Integer) {
        let (p, d) = self.num.clear_denominators();
        (RatFunc { num: p, den: self.den.clone() }, d)
    }
}

impl From<&RatFuncZ> for RatFuncQ {
    fn from(r: &RatFuncZ) -> Self {
        r.to_q()
    }
}

impl<T: Ring> fmt::Display for RatFunc<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / {}", self.num, self.den)
    }
}
