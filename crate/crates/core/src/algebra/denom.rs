//! Denominators of the form `prod_k (s + k^2)^{e_k}`.

use super::poly::PolyZ;
use super::ring::Ring;
use rug::Integer;
use std::collections::BTreeMap;
use std::fmt;

/// Map `k -> e_k` for the factor `(s + k^2)^{e_k}`. Zero exponents are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct FactoredDenom {
    e: BTreeMap<u64, u32>,
}

impl FactoredDenom {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn single(k: u64, e: u32) -> Self {
        let mut d = Self::default();
        d.set(k, e);
        d
    }

    pub fn from_pairs<I: IntoIterator<Item = (u64, u32)>>(it: I) -> Self {
        let mut d = Self::default();
        for (k, e) in it {
            let cur = d.exp(k);
            d.set(k, cur + e);
        }
        d
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.e.get(&k).copied().unwrap_or(0)
    }

    pub fn set(&mut self, k: u64, e: u32) {
        if e == 0 {
            self.e.remove(&k);
        } else {
            self.e.insert(k, e);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.e.iter().map(|(&k, &e)| (k, e))
    }

    pub fn is_one(&self) -> bool {
        self.e.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.e.values().map(|&e| e as u64).sum()
    }

    pub fn max_k(&self) -> u64 {
        self.e.keys().next_back().copied().unwrap_or(0)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, e) in o.iter() {
            let cur = r.exp(k);
            r.set(k, cur + e);
        }
        r
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, e) in o.iter() {
            let cur = r.exp(k);
            r.set(k, cur.max(e));
        }
        r
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.iter().all(|(k, e)| o.exp(k) >= e)
    }

    /// `self / o`, requires `o | self`.
    pub fn cofactor(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, e) in o.iter() {
            let cur = r.exp(k);
            assert!(cur >= e, "cofactor of non-dividing denominator");
            r.set(k, cur - e);
        }
        r
    }

    /// Expanded integer polynomial.
    pub fn expand(&self) -> PolyZ {
        let mut p = PolyZ::one();
        for (k, e) in self.iter() {
            let a = Integer::from(k * k);
            for _ in 0..e {
                p.mul_linear_assign(&a);
            }
        }
        p
    }

    /// Multiply a polynomial by the expansion of this denominator.
    pub fn mul_into<T: Ring>(&self, p: &super::poly::Poly<T>) -> super::poly::Poly<T> {
        if self.degree() <= 8 {
            let mut r = p.clone();
            for (k, e) in self.iter() {
                let a = Integer::from(k * k);
                for _ in 0..e {
                    r.mul_linear_assign(&a);
                }
            }
            r
        } else {
            let ex = self.expand();
            let ex: super::poly::Poly<T> =
                super::poly::Poly::new(ex.coeffs().iter().map(T::from_integer).collect());
            p.mul(&ex)
        }
    }

    /// Value at an integer point, as an exact integer.
    pub fn eval_int(&self, s: &Integer) -> Integer {
        let mut v = Integer::from(1);
        for (k, e) in self.iter() {
            let f = Integer::from(s + k * k);
            v *= f.pow(e);
        }
        v
    }
}

use rug::ops::Pow;

impl fmt::Display for FactoredDenom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e.is_empty() {
            return write!(f, "1");
        }
        for (k, e) in self.iter() {
            if e == 1 {
                write!(f, "(s+{})", k * k)?;
            } else {
                write!(f, "(s+{})^{}", k * k, e)?;
            }
        }
        Ok(())
    }
}
