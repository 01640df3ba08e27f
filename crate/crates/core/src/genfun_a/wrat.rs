//! Rational functions of `w` with poles only at `w = 1/2` and `w = -1`.
//!
//! `w` is the parametrisation `z = w/(1+w)^3` of the leading generating
//! function, so `A_0 = w` and `delta_z = w(1+w)/(1-2w) d/dw`.

use crate::algebra::PolyQ;
use rug::Rational;

/// `num(w) / ((1-2w)^e (1+w)^f)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WRat {
    pub num: PolyQ,
    pub e: u32,
    pub f: u32,
}

fn one_minus_2w() -> PolyQ {
    PolyQ::from_i64s(&[1, -2])
}

fn one_plus_w() -> PolyQ {
    PolyQ::from_i64s(&[1, 1])
}

fn w_poly() -> PolyQ {
    PolyQ::from_i64s(&[0, 1])
}

impl WRat {
    pub fn new(num: PolyQ, e: u32, f: u32) -> Self {
        let mut r = WRat { num, e, f };
        r.reduce();
        r
    }

    pub fn zero() -> Self {
        WRat { num: PolyQ::zero(), e: 0, f: 0 }
    }

    /// `A_0 = w`.
    pub fn w() -> Self {
        WRat { num: w_poly(), e: 0, f: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.e = 0;
            self.f = 0;
            return;
        }
        let half = Rational::from((1, 2));
        while self.e > 0 && self.num.eval(&half) == 0 {
            self.num = self.num.div_rem(&one_minus_2w()).0;
            self.e -= 1;
        }
        let m1 = Rational::from(-1);
        while self.f > 0 && self.num.eval(&m1) == 0 {
            self.num = self.num.div_rem(&one_plus_w()).0;
            self.f -= 1;
        }
    }

    fn lift(&self, e: u32, f: u32) -> PolyQ {
        self.num
            .mul(&one_minus_2w().pow(e - self.e))
            .mul(&one_plus_w().pow(f - self.f))
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.e.max(o.e);
        let f = self.f.max(o.f);
        Self::new(self.lift(e, f).add(&o.lift(e, f)), e, f)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale_i64(-1))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.e + o.e, self.f + o.f)
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        Self::new(self.num.scale_i64(c), self.e, self.f)
    }

    /// Multiply by `z = w / (1+w)^3`.
    pub fn mul_z(&self) -> Self {
        Self::new(self.num.mul(&w_poly()), self.e, self.f + 3)
    }

    /// `delta_z = z d/dz`.
    pub fn delta(&self) -> Self {
        let p = &self.num;
        let e = Rational::from(self.e);
        let f = Rational::from(self.f);
        let t1 = p.derivative().mul(&one_minus_2w()).mul(&one_plus_w());
        let t2 = p.mul(&one_plus_w()).scale(&(e * 2u32));
        let t3 = p.mul(&one_minus_2w()).scale(&f);
        let inner = t1.add(&t2).sub(&t3);
        Self::new(inner.mul(&w_poly()), self.e + 2, self.f)
    }

    /// Multiply by `(1+w)/(2w-1)`.
    pub fn mul_lift_factor(&self) -> Self {
        Self::new(self.num.mul(&one_plus_w()).neg(), self.e + 1, self.f)
    }

    pub fn eval(&self, w: &Rational) -> Rational {
        let d1 = Rational::from(1) - Rational::from(w * 2u32);
        let d2 = Rational::from(w + 1u32);
        let mut den = Rational::from(1);
        for _ in 0..self.e {
            den *= &d1;
        }
        for _ in 0..self.f {
            den *= &d2;
        }
        self.num.eval(w) / den
    }

    pub fn eval_f64(&self, w: f64) -> f64 {
        self.num.eval_f64(w) / ((1.0 - 2.0 * w).powi(self.e as i32) * (1.0 + w).powi(self.f as i32))
    }
}

