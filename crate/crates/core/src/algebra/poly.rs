//! Dense univariate polynomials in `s`, coefficients stored low to high.

use super::ring::Ring;
use rug::integer::Order;
use rug::{Integer, Rational};
use std::fmt;

#[derive(Clone, PartialEq, Debug)]
pub struct Poly<T: Ring> {
    c: Vec<T>,
}

pub type PolyZ = Poly<Integer>;
pub type PolyQ = Poly<Rational>;

impl<T: Ring> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Ring> Poly<T> {
    pub fn new(mut c: Vec<T>) -> Self {
        while c.last().map_or(false, |x| x.is_zero()) {
            c.pop();
        }
        Poly { c }
    }

    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn constant(v: T) -> Self {
        Self::new(vec![v])
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// `v * s^k`
    pub fn monomial(v: T, k: usize) -> Self {
        let mut c = vec![T::zero(); k + 1];
        c[k] = v;
        Self::new(c)
    }

    pub fn from_i64s(v: &[i64]) -> Self {
        Self::new(v.iter().map(|&x| T::from_i64(x)).collect())
    }

    /// `s + a`
    pub fn linear(a: T) -> Self {
        Self::new(vec![a, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn coeff(&self, i: usize) -> T {
        self.c.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn lead(&self) -> Option<&T> {
        self.c.last()
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        let (long, short) = if self.c.len() >= o.c.len() { (self, o) } else { (o, self) };
        let mut c = long.c.clone();
        for (x, y) in c.iter_mut().zip(&short.c) {
            x.add_assign_ref(y);
        }
        Self::new(c)
    }

    pub fn add_assign(&mut self, o: &Self) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), T::zero());
        }
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            x.add_assign_ref(y);
        }
        self.trim();
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.sub_assign(o);
        r
    }

    pub fn sub_assign(&mut self, o: &Self) {
        if self.c.len() < o.c.len() {
            self.c.resize(o.c.len(), T::zero());
        }
        for (x, y) in self.c.iter_mut().zip(&o.c) {
            x.sub_assign_ref(y);
        }
        self.trim();
    }

    pub fn neg(&self) -> Self {
        Poly { c: self.c.iter().map(|x| x.neg_ref()).collect() }
    }

    pub fn scale(&self, v: &T) -> Self {
        if v.is_zero() {
            return Self::zero();
        }
        Self::new(self.c.iter().map(|x| x.mul_ref(v)).collect())
    }

    pub fn scale_i64(&self, v: i64) -> Self {
        if v == 0 {
            return Self::zero();
        }
        Poly { c: self.c.iter().map(|x| x.mul_i64(v)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::new(T::poly_mul(&self.c, &o.c))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    /// Multiply in place by `s + a`.
    pub fn mul_linear_assign(&mut self, a: &Integer) {
        if self.is_zero() {
            return;
        }
        let n = self.c.len();
        self.c.push(T::zero());
        for i in (0..n).rev() {
            let hi = self.c[i].clone();
            self.c[i + 1].add_assign_ref(&hi);
            self.c[i] = self.c[i].mul_int(a);
        }
    }

    /// Divide by `s + a`, returning quotient and remainder `P(-a)`.
    pub fn div_linear(&self, a: &Integer) -> (Self, T) {
        if self.is_zero() {
            return (Self::zero(), T::zero());
        }
        let n = self.c.len();
        let mut q = vec![T::zero(); n - 1];
        let mut carry = T::zero();
        for i in (0..n).rev() {
            let mut v = self.c[i].clone();
            v.sub_assign_ref(&carry.mul_int(a));
            if i == 0 {
                return (Self::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    /// `self / d` when `d` divides `self` exactly in the coefficient ring.
    pub fn exact_div(&self, d: &Self) -> crate::Result<Self> {
        if d.is_zero() {
            return Err(crate::Error::Invalid("division by the zero polynomial".into()));
        }
        let (q, r) = self.to_rational().div_rem(&d.to_rational());
        let inexact = || crate::Error::Invalid("inexact division".into());
        if !r.is_zero() {
            return Err(inexact());
        }
        let c = q.coeffs().iter().map(T::from_rational).collect::<Option<Vec<T>>>().ok_or_else(inexact)?;
        Ok(Self::new(c))
    }

    /// Value at `s = -a`, the remainder on division by `s + a`.
    pub fn eval_neg_int(&self, a: &Integer) -> T {
        let mut acc = T::zero();
        let m = Integer::from(-a);
        for x in self.c.iter().rev() {
            acc = acc.mul_int(&m);
            acc.add_assign_ref(x);
        }
        acc
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for v in self.c.iter().rev() {
            acc = acc.mul_ref(x);
            acc.add_assign_ref(v);
        }
        acc
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for v in self.c.iter().rev() {
            acc *= x;
            acc += v.to_rational();
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.c.iter().rev().fold(0.0, |acc, v| acc * x + v.to_f64())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.c.iter().enumerate().skip(1).map(|(i, x)| x.mul_i64(i as i64)).collect())
    }

    /// `P(s + a)`.
    pub fn taylor_shift(&self, a: &Integer) -> Self {
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = c[j + 1].mul_int(a);
                c[j].add_assign_ref(&t);
            }
        }
        Self::new(c)
    }

    /// Coefficients of `P(s)` expanded around `s = -a`, truncated to `len` terms.
    pub fn expand_at_neg(&self, a: &Integer, len: usize) -> Vec<T> {
        let m = Integer::from(-a);
        let mut out = Vec::with_capacity(len);
        let mut cur = self.clone();
        for _ in 0..len {
            let (q, r) = cur.div_linear(&Integer::from(-&m));
            out.push(r);
            cur = q;
            if cur.is_zero() {
                break;
            }
        }
        out.resize(len, T::zero());
        out
    }

    /// Reverse coefficient order with respect to degree `d`: `s^d P(1/s)`.
    pub fn reversed(&self, d: usize) -> Self {
        let mut c = vec![T::zero(); d + 1];
        for (i, x) in self.c.iter().enumerate() {
            assert!(i <= d, "degree exceeds reversal width");
            c[d - i] = x.clone();
        }
        Self::new(c)
    }

    pub fn to_rational(&self) -> PolyQ {
        Poly { c: self.c.iter().map(|x| x.to_rational()).collect() }
    }

    fn trim(&mut self) {
        while self.c.last().map_or(false, |x| x.is_zero()) {
            self.c.pop();
        }
    }
}

impl PolyZ {
    /// Gcd of the coefficients, nonnegative.
    pub fn content(&self) -> Integer {
        let mut g = Integer::new();
        for x in &self.c {
            g.gcd_mut(x);
            if g == 1 {
                break;
            }
        }
        g
    }

    pub fn div_exact(&self, d: &Integer) -> Self {
        Poly { c: self.c.iter().map(|x| Integer::from(x.div_exact_ref(d))).collect() }
    }

    pub fn all_positive(&self) -> bool {
        self.c.iter().all(|x| x.cmp0() == std::cmp::Ordering::Greater)
    }

    pub fn max_bits(&self) -> u32 {
        self.c.iter().map(|x| x.significant_bits()).max().unwrap_or(0)
    }
}

impl PolyQ {
    /// Integer polynomial and positive denominator with `self = p / d`.
    pub fn clear_denominators(&self) -> (PolyZ, Integer) {
        let mut d = Integer::from(1);
        for x in &self.c {
            d.lcm_mut(x.denom());
        }
        let p = self
            .c
            .iter()
            .map(|x| Integer::from(x.numer() * Integer::from(&d / x.denom())))
            .collect();
        (Poly::new(p), d)
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lc = d.c[dd].clone();
        let mut r = self.c.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::new(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let f = Rational::from(&r[i + dd] / &lc);
            if f != 0 {
                for j in 0..=dd {
                    r[i + j] -= Rational::from(&f * &d.c[j]);
                }
            }
            q[i] = f;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }
}

impl<T: Ring> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, x) in self.c.iter().enumerate().rev() {
            if x.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{x}")?,
                1 => write!(f, "({x})*s")?,
                _ => write!(f, "({x})*s^{i}")?,
            }
        }
        Ok(())
    }
}

/// Schoolbook product of coefficient slices.
pub fn schoolbook<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    out
}

const KRONECKER_MIN_LEN: usize = 12;

/// Product of integer coefficient slices. Large inputs are packed into single
/// integers (Kronecker substitution) so GMP's fast multiplication does the work.
pub fn int_poly_mul(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.len().min(b.len()) < KRONECKER_MIN_LEN {
        return schoolbook(a, b);
    }
    let (ap, an) = split_signs(a);
    let (bp, bn) = split_signs(b);
    let n = a.len() + b.len() - 1;
    let mut out = vec![Integer::new(); n];
    let mut acc = |x: &Option<Vec<Integer>>, y: &Option<Vec<Integer>>, plus: bool| {
        if let (Some(x), Some(y)) = (x, y) {
            for (o, v) in out.iter_mut().zip(kron_nonneg(x, y)) {
                if plus {
                    *o += v;
                } else {
                    *o -= v;
                }
            }
        }
    };
    acc(&ap, &bp, true);
    acc(&an, &bn, true);
    acc(&ap, &bn, false);
    acc(&an, &bp, false);
    out
}

fn split_signs(a: &[Integer]) -> (Option<Vec<Integer>>, Option<Vec<Integer>>) {
    let has_pos = a.iter().any(|x| x.cmp0() == std::cmp::Ordering::Greater);
    let has_neg = a.iter().any(|x| x.cmp0() == std::cmp::Ordering::Less);
    let pos = has_pos.then(|| {
        a.iter()
            .map(|x| if x.cmp0() == std::cmp::Ordering::Greater { x.clone() } else { Integer::new() })
            .collect()
    });
    let neg = has_neg.then(|| {
        a.iter()
            .map(|x| if x.cmp0() == std::cmp::Ordering::Less { Integer::from(-x) } else { Integer::new() })
            .collect()
    });
    (pos, neg)
}

fn kron_nonneg(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    let ba = a.iter().map(|x| x.significant_bits()).max().unwrap_or(0);
    let bb = b.iter().map(|x| x.significant_bits()).max().unwrap_or(0);
    let terms = a.len().min(b.len()) as u64;
    let bits = ba as u64 + bb as u64 + (64 - terms.leading_zeros() as u64) + 1;
    let limbs = ((bits + 63) / 64) as usize;
    let pack = |v: &[Integer]| {
        let mut buf = vec![0u64; v.len() * limbs];
        for (i, x) in v.iter().enumerate() {
            let d = x.to_digits::<u64>(Order::Lsf);
            buf[i * limbs..i * limbs + d.len()].copy_from_slice(&d);
        }
        Integer::from_digits(&buf, Order::Lsf)
    };
    let prod = pack(a) * pack(b);
    let digits = prod.to_digits::<u64>(Order::Lsf);
    let n = a.len() + b.len() - 1;
    (0..n)
        .map(|i| {
            let lo = (i * limbs).min(digits.len());
            let hi = ((i + 1) * limbs).min(digits.len());
            Integer::from_digits(&digits[lo..hi], Order::Lsf)
        })
        .collect()
}
