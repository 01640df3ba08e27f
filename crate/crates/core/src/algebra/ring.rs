//! Minimal ring interface over the two exact number types in use.

use rug::{Integer, Rational};
use std::fmt;

/// Exact coefficient ring. Implemented for `Integer` and `Rational`.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_integer(v: &Integer) -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, o: &Self);
    fn sub_assign_ref(&mut self, o: &Self);
    /// `self += a * b`
    fn add_mul(&mut self, a: &Self, b: &Self);
    /// `self -= a * b`
    fn sub_mul(&mut self, a: &Self, b: &Self);
    fn mul_ref(&self, o: &Self) -> Self;
    fn mul_int(&self, c: &Integer) -> Self;
    fn mul_i64(&self, c: i64) -> Self;
    fn neg_ref(&self) -> Self;
    /// Exact division by an integer. For `Integer` the caller guarantees divisibility.
    fn div_exact_int(&self, c: &Integer) -> Self;
    fn to_rational(&self) -> Rational;
    fn to_f64(&self) -> f64;
    /// Multiplicative inverse when it exists in the ring.
    fn inverse(&self) -> Option<Self>;
    /// The rational `v` as a ring element, if it is one.
    fn from_rational(v: &Rational) -> Option<Self>;
    /// Full product of two coefficient slices (both nonempty).
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        super::poly::schoolbook(a, b)
    }
}

impl Ring for Integer {
    fn zero() -> Self {
        Integer::new()
    }
    fn one() -> Self {
        Integer::from(1)
    }
    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }
    fn from_integer(v: &Integer) -> Self {
        v.clone()
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Integer::from(self * o)
    }
    fn mul_int(&self, c: &Integer) -> Self {
        Integer::from(self * c)
    }
    fn mul_i64(&self, c: i64) -> Self {
        Integer::from(self * c)
    }
    fn neg_ref(&self) -> Self {
        Integer::from(-self)
    }
    fn div_exact_int(&self, c: &Integer) -> Self {
        Integer::from(self.div_exact_ref(c))
    }
    fn to_rational(&self) -> Rational {
        Rational::from(self.clone())
    }
    fn to_f64(&self) -> f64 {
        Integer::to_f64(self)
    }
    fn poly_mul(a: &[Self], b: &[Self]) -> Vec<Self> {
        super::poly::int_poly_mul(a, b)
    }
    fn inverse(&self) -> Option<Self> {
        (*self == 1 || *self == -1).then(|| self.clone())
    }
    fn from_rational(v: &Rational) -> Option<Self> {
        (*v.denom() == 1).then(|| v.numer().clone())
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::new()
    }
    fn one() -> Self {
        Rational::from(1)
    }
    fn from_i64(v: i64) -> Self {
        Rational::from(v)
    }
    fn from_integer(v: &Integer) -> Self {
        Rational::from(v.clone())
    }
    fn is_zero(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn add_assign_ref(&mut self, o: &Self) {
        *self += o;
    }
    fn sub_assign_ref(&mut self, o: &Self) {
        *self -= o;
    }
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += Rational::from(a * b);
    }
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= Rational::from(a * b);
    }
    fn mul_ref(&self, o: &Self) -> Self {
        Rational::from(self * o)
    }
    fn mul_int(&self, c: &Integer) -> Self {
        Rational::from(self * c)
    }
    fn mul_i64(&self, c: i64) -> Self {
        Rational::from(self * Integer::from(c))
    }
    fn neg_ref(&self) -> Self {
        Rational::from(-self)
    }
    fn div_exact_int(&self, c: &Integer) -> Self {
        Rational::from(self / c)
    }
    fn to_rational(&self) -> Rational {
        self.clone()
    }
    fn to_f64(&self) -> f64 {
        Rational::to_f64(self)
    }
    fn inverse(&self) -> Option<Self> {
        (!Ring::is_zero(self)).then(|| Rational::from(self.recip_ref()))
    }
    fn from_rational(v: &Rational) -> Option<Self> {
        Some(v.clone())
    }
}

/// `n/d` as an exact rational.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Binomial coefficient as an exact integer.
pub fn binom(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    Integer::from(Integer::binomial_u(n, k))
}
