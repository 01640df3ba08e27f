//! Truncated power series with exact coefficients.

use crate::algebra::{Poly, Ring};
use rug::{Integer, Rational};

/// Power series `sum_{i < len} c_i x^i`, all operations truncate at `len`.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<T: Ring> {
    c: Vec<T>,
}

pub type SeriesQ = Series<Rational>;
pub type SeriesZ = Series<Integer>;

impl<T: Ring> Series<T> {
    pub fn zero(len: usize) -> Self {
        Series { c: vec![T::zero(); len] }
    }

    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 0 {
            s.c[0] = T::one();
        }
        s
    }

    pub fn from_coeffs(mut c: Vec<T>, len: usize) -> Self {
        c.resize(len, T::zero());
        Series { c }
    }

    pub fn from_poly(p: &Poly<T>, len: usize) -> Self {
        Self::from_coeffs(p.coeffs().iter().take(len).cloned().collect(), len)
    }

    /// The series `x`.
    pub fn var(len: usize) -> Self {
        let mut s = Self::zero(len);
        if len > 1 {
            s.c[1] = T::one();
        }
        s
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.c[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.c
    }

    pub fn set(&mut self, i: usize, v: T) {
        self.c[i] = v;
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (x, y) in r.c.iter_mut().zip(&o.c) {
            x.add_assign_ref(y);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (x, y) in r.c.iter_mut().zip(&o.c) {
            x.sub_assign_ref(y);
        }
        r
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            x.add_assign_ref(y);
        }
    }

    pub fn sub_assign(&mut self, o: &Self) {
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            x.sub_assign_ref(y);
        }
    }

    pub fn neg(&self) -> Self {
        Series { c: self.c.iter().map(|x| x.neg_ref()).collect() }
    }

    pub fn scale(&self, v: &T) -> Self {
        Series { c: self.c.iter().map(|x| x.mul_ref(v)).collect() }
    }

    pub fn scale_i64(&self, v: i64) -> Self {
        Series { c: self.c.iter().map(|x| x.mul_i64(v)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.c.len().min(o.c.len());
        let mut r = vec![T::zero(); n];
        for (i, x) in self.c.iter().enumerate().take(n) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate().take(n - i) {
                r[i + j].add_mul(x, y);
            }
        }
        Series { c: r }
    }

    /// `self / o`, `None` when the constant term of `o` is not invertible.
    pub fn div(&self, o: &Self) -> Option<Self> {
        let n = self.c.len().min(o.c.len());
        let inv0 = o.c.first()?.inverse()?;
        let mut q: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            let mut v = self.c[k].clone();
            for i in 1..=k {
                v.sub_mul(&o.c[i], &q[k - i]);
            }
            q.push(v.mul_ref(&inv0));
        }
        Some(Series { c: q })
    }

    pub fn inv(&self) -> Option<Self> {
        Self::one(self.c.len()).div(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.c.len());
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Euler operator `x d/dx`.
    pub fn delta(&self) -> Self {
        Series { c: self.c.iter().enumerate().map(|(i, x)| x.mul_i64(i as i64)).collect() }
    }

    pub fn derivative(&self) -> Self {
        let n = self.c.len();
        let mut c: Vec<T> = self.c.iter().enumerate().skip(1).map(|(i, x)| x.mul_i64(i as i64)).collect();
        c.resize(n, T::zero());
        Series { c }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.c.len();
        let mut c = vec![T::zero(); k.min(n)];
        c.extend(self.c.iter().take(n.saturating_sub(k)).cloned());
        Series { c }
    }

    /// Substitute a series with zero constant term: `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        assert!(g.c.first().map_or(true, |x| x.is_zero()), "inner series must vanish at zero");
        let n = self.c.len().min(g.c.len());
        let mut r = Self::zero(n);
        for x in self.c.iter().take(n).rev() {
            r = r.mul(g);
            r.c[0].add_assign_ref(x);
        }
        r
    }

    pub fn truncate(&self, len: usize) -> Self {
        Self::from_coeffs(self.c.iter().take(len).cloned().collect(), len)
    }
}

impl SeriesZ {
    pub fn to_q(&self) -> SeriesQ {
        Series { c: self.c.iter().map(|x| Rational::from(x.clone())).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let one_minus_x = SeriesQ::from_coeffs(vec![Rational::from(1), Rational::from(-1)], 6);
        let g = one_minus_x.inv().unwrap();
        assert!(g.coeffs().iter().all(|c| *c == 1));
    }

    #[test]
    fn compose_matches_product() {
        let x = SeriesZ::var(8);
        let f = SeriesZ::from_coeffs(vec![Integer::from(1), Integer::from(2), Integer::from(1)], 8);
        let g = x.add(&x.mul(&x));
        let lhs = f.compose(&g);
        let one_g = g.add(&SeriesZ::one(8));
        assert_eq!(lhs, one_g.mul(&one_g));
    }
}
