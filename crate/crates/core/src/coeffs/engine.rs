//! The coefficient recurrence, run exactly over factored denominators.
//!
//! With `s = a^2` and `u_2 = 1/(s+1)`, for `n >= 2`
//!
//! ```text
//! (s+n^2) u_{2n} = 3 u_{2(n-1)} + 3 sum_{j1+j2=n-1} u_{2j1} u_{2j2}
//!                + sum_{j1+j2+j3=n-1} u_{2j1} u_{2j2} u_{2j3}
//!                - sum_{j>=1, 2j<n} (n-2j)^2 u_{2j} u_{2(n-j)}
//! ```
//!
//! where every index in the sums is at least 1.

use crate::algebra::{FactoredDenom, PolyZ, RatFuncZ};
use rug::Integer;

/// Exact table of `u_{2n}(s)` for `1 <= n <= n_max`, each in lowest terms.
#[derive(Clone, Debug, Default)]
pub struct CoeffTable {
    u: Vec<RatFuncZ>,
    // w[m] = sum_{j1+j2=m} u_{2j1} u_{2j2}, used by the cubic term
    w: Vec<RatFuncZ>,
}

impl CoeffTable {
    pub fn build(n_max: usize) -> Self {
        let mut t = CoeffTable::default();
        t.extend_to(n_max);
        t
    }

    /// Wrap already computed entries (e.g. parsed from disk).
    pub fn from_entries(u: Vec<RatFuncZ>) -> Self {
        CoeffTable { u, w: Vec::new() }
    }

    pub fn n_max(&self) -> usize {
        self.u.len()
    }

    /// `u_{2n}`, `n >= 1`.
    pub fn get(&self, n: usize) -> &RatFuncZ {
        assert!(n >= 1 && n <= self.u.len(), "u_{{2n}} with n = {n} not in table");
        &self.u[n - 1]
    }

    pub fn entries(&self) -> &[RatFuncZ] {
        &self.u
    }

    pub fn extend_to(&mut self, n_max: usize) {
        if self.u.is_empty() && n_max >= 1 {
            self.u.push(RatFuncZ::raw(PolyZ::one(), FactoredDenom::single(1, 1)));
        }
        while self.u.len() < n_max {
            let n = self.u.len() + 1;
            let next = self.step(n);
            self.u.push(next);
        }
    }

    fn w(&mut self, m: usize) -> RatFuncZ {
        while self.w.len() <= m {
            let k = self.w.len();
            let v = self.double_sum(k);
            self.w.push(v);
        }
        self.w[m].clone()
    }

    fn double_sum(&self, m: usize) -> RatFuncZ {
        let mut terms = Vec::new();
        for j in 1..m {
            let i = m - j;
            if j > i {
                break;
            }
            let p = self.get(j).mul_raw(self.get(i));
            terms.push(if j == i { p } else { p.scale_i64(2) });
        }
        RatFuncZ::sum(&terms)
    }

    fn step(&mut self, n: usize) -> RatFuncZ {
        let mut terms = vec![self.get(n - 1).scale_i64(3)];
        let w = self.w(n - 1);
        if !w.is_zero() {
            terms.push(w.scale_i64(3));
        }
        for j in 1..n.saturating_sub(2) {
            let wj = self.w(n - 1 - j);
            if !wj.is_zero() {
                terms.push(self.get(j).mul_raw(&wj));
            }
        }
        for j in 1.. {
            if 2 * j >= n {
                break;
            }
            let c = ((n - 2 * j) * (n - 2 * j)) as i64;
            terms.push(self.get(j).mul_raw(self.get(n - j)).scale_i64(-c));
        }
        RatFuncZ::sum(&terms).div_factor(n as u64)
    }

    /// Check the recurrence at a rational point, independently of how the
    /// table was produced.
    pub fn check_recurrence_at(&self, s0: &rug::Rational) -> Option<bool> {
        let vals: Vec<rug::Rational> = (1..=self.n_max())
            .map(|n| self.get(n).eval(s0))
            .collect::<Option<_>>()?;
        let u = |j: usize| &vals[j - 1];
        if u(1).clone() * (s0.clone() + 1u32) != 1 {
            return Some(false);
        }
        for n in 2..=self.n_max() {
            let mut rhs = rug::Rational::from(u(n - 1) * 3u32);
            for j1 in 1..n - 1 {
                rhs += rug::Rational::from(u(j1) * u(n - 1 - j1)) * 3u32;
                for j2 in 1..n - 1 - j1 {
                    let j3 = n - 1 - j1 - j2;
                    rhs += rug::Rational::from(u(j1) * u(j2)) * u(j3);
                }
            }
            let mut j = 1;
            while 2 * j < n {
                let c = Integer::from((n - 2 * j) * (n - 2 * j));
                rhs -= rug::Rational::from(u(j) * u(n - j)) * c;
                j += 1;
            }
            let lhs = rug::Rational::from(s0 + Integer::from(n * n)) * u(n);
            if lhs != rhs {
                return Some(false);
            }
        }
        Some(true)
    }
}
