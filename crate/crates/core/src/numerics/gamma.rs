//! Complex Gamma function: upward shift followed by the Stirling series.

use super::real::{cexp, cln, creal, Cx, Real};
use num_traits::One;
use rug::{Integer, Rational};

/// `B_2, B_4, ..., B_{2k}`.
fn bernoulli_even(k: usize) -> Vec<Rational> {
    // B_m from sum_{j=0}^{m} C(m+1, j) B_j = 0
    let m_max = 2 * k;
    let mut b: Vec<Rational> = vec![Rational::from(1)];
    for m in 1..=m_max {
        let mut s = Rational::new();
        let mut c = Integer::from(1);
        for (j, bj) in b.iter().enumerate() {
            s += Rational::from(bj * &c);
            c *= (m + 1 - j) as u32;
            c /= (j + 1) as u32;
        }
        b.push(-s / Integer::from(m + 1));
    }
    (1..=k).map(|i| b[2 * i].clone()).collect()
}

fn stirling_terms<T: Real>() -> (f64, Vec<T>) {
    let bits = (-T::eps().log2()).round();
    let shift = (bits / 3.0).max(16.0);
    let k = ((bits / 6.0).ceil() as usize).max(8);
    let coeffs = bernoulli_even(k)
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            let n = 2 * (i + 1);
            T::from_rational(&(b / Integer::from(n * (n - 1))))
        })
        .collect();
    (shift, coeffs)
}

/// `ln Gamma(w)` for `Re w` large, principal branch of `ln w`.
fn ln_gamma_stirling<T: Real>(w: &Cx<T>, coeffs: &[T]) -> Cx<T> {
    let half = creal(T::from_f64(0.5));
    let lw = cln(w);
    let two_pi = T::pi() * T::from_f64(2.0);
    let mut s = (w.clone() - half.clone()) * lw - w.clone() + creal(two_pi.ln() * T::from_f64(0.5));
    let inv = Cx::<T>::one() / w.clone();
    let inv2 = inv.clone() * inv.clone();
    let mut p = inv;
    for c in coeffs {
        s = s + p.clone() * creal(c.clone());
        p = p * inv2.clone();
    }
    s
}

/// `Gamma(z)`; `None` at the poles `z = 0, -1, -2, ...`.
pub fn gamma<T: Real>(z: &Cx<T>) -> Option<Cx<T>> {
    let (shift, coeffs) = stirling_terms::<T>();
    let mut w = z.clone();
    let mut prod = Cx::<T>::one();
    while w.re.to_f64() < shift {
        if w.norm_sqr().is_zero() {
            return None;
        }
        prod = prod * w.clone();
        w = w + Cx::<T>::one();
    }
    if prod.norm_sqr().is_zero() {
        return None;
    }
    Some(cexp(&ln_gamma_stirling(&w, &coeffs)) / prod)
}

/// Principal argument of `Gamma(z)`.
pub fn arg_gamma<T: Real>(z: &Cx<T>) -> Option<T> {
    gamma(z).map(|g| g.im.atan2(&g.re))
}
