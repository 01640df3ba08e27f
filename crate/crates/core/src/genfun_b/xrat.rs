//! Rational functions of `x` whose only pole is at `x = 2`.

use crate::algebra::PolyQ;
use crate::series::SeriesQ;
use rug::{Integer, Rational};

/// `num(x) / (x-2)^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct XRat {
    pub num: PolyQ,
    pub j: u32,
}

/// Polynomial part plus `sum_{j=1}^J poles[j-1] / (x-2)^j`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalAnsatz {
    pub poly: PolyQ,
    pub poles: Vec<Rational>,
}

fn x_minus_2() -> PolyQ {
    PolyQ::from_i64s(&[-2, 1])
}

impl XRat {
    pub fn new(num: PolyQ, j: u32) -> Self {
        let mut r = XRat { num, j };
        r.reduce();
        r
    }

    pub fn poly(p: PolyQ) -> Self {
        XRat { num: p, j: 0 }
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(PolyQ::constant(c))
    }

    pub fn zero() -> Self {
        Self::poly(PolyQ::zero())
    }

    /// `c / (x-2)^j`
    pub fn pole(c: Rational, j: u32) -> Self {
        XRat { num: PolyQ::constant(c), j }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.j = 0;
            return;
        }
        let two = Integer::from(-2);
        while self.j > 0 {
            let (q, r) = self.num.div_linear(&two);
            if r != 0 {
                break;
            }
            self.num = q;
            self.j -= 1;
        }
    }

    /// Numerator over `(x-2)^j` for `j >= self.j`.
    pub fn lifted(&self, j: u32) -> PolyQ {
        assert!(j >= self.j);
        self.num.mul(&x_minus_2().pow(j - self.j))
    }

    pub fn add(&self, o: &Self) -> Self {
        let j = self.j.max(o.j);
        Self::new(self.lifted(j).add(&o.lifted(j)), j)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let j = self.j.max(o.j);
        Self::new(self.lifted(j).sub(&o.lifted(j)), j)
    }

    pub fn neg(&self) -> Self {
        XRat { num: self.num.neg(), j: self.j }
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.j + o.j)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.j)
    }

    pub fn mul_x(&self) -> Self {
        Self::new(self.num.mul(&PolyQ::from_i64s(&[0, 1])), self.j)
    }

    /// `x d/dx`
    pub fn delta(&self) -> Self {
        let p = &self.num;
        let inner = p.derivative().mul(&x_minus_2()).sub(&p.scale(&Rational::from(self.j)));
        Self::new(inner.mul(&PolyQ::from_i64s(&[0, 1])), self.j + 1)
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = Rational::from(x - 2u32);
        if self.j > 0 && d == 0 {
            return None;
        }
        let mut den = Rational::from(1);
        for _ in 0..self.j {
            den *= &d;
        }
        Some(self.num.eval(x) / den)
    }

    /// Taylor coefficients at `x = 0`.
    pub fn series(&self, len: usize) -> SeriesQ {
        let d = SeriesQ::from_poly(&x_minus_2(), len).pow(self.j);
        SeriesQ::from_poly(&self.num, len).div(&d).expect("(x-2)^j is a unit at 0")
    }

    pub fn to_ansatz(&self) -> RationalAnsatz {
        let d = x_minus_2().pow(self.j);
        let (q, r) = self.num.div_rem(&d);
        // r(x) = sum_i r_i (x-2)^i contributes r_i / (x-2)^{j-i}
        let shifted = r.taylor_shift(&Integer::from(2));
        let mut poles = vec![Rational::new(); self.j as usize];
        for (i, c) in shifted.coeffs().iter().enumerate() {
            poles[self.j as usize - 1 - i] = c.clone();
        }
        while poles.last().map_or(false, |c| *c == 0) {
            poles.pop();
        }
        RationalAnsatz { poly: q, poles }
    }

    pub fn from_ansatz(a: &RationalAnsatz) -> Self {
        let mut r = Self::poly(a.poly.clone());
        for (i, c) in a.poles.iter().enumerate() {
            r = r.add(&Self::pole(c.clone(), i as u32 + 1));
        }
        r
    }
}
