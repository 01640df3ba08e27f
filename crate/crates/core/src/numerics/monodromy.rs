//! Monodromy data of the solution and the validity gates of the
//! large-`tau` formula.

use super::gamma::gamma;
use super::param::CParam;
use super::real::{cexp, cln, creal, csqrt, Cx, Real};
use crate::{Error, Result};
use num_traits::One;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gate {
    /// `|Re((i/2pi) ln(g11 g22))| < 1/6`.
    Strict,
    /// The same quantity below `1/2`.
    Weak,
}

impl Gate {
    pub fn bound(self) -> f64 {
        match self {
            Gate::Strict => 1.0 / 6.0,
            Gate::Weak => 0.5,
        }
    }

    pub fn inequality(self) -> &'static str {
        match self {
            Gate::Strict => "|Re((i/2pi) ln(1 - e^{2 pi a}))| < 1/6",
            Gate::Weak => "|Re((i/2pi) ln(1 - e^{2 pi a}))| < 1/2",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MonodromyParams<T: Real> {
    pub s00: Cx<T>,
    pub g11g22: Cx<T>,
    pub g11g12: Cx<T>,
    /// `nu + 1 = (i/2pi) ln(g11 g22)` on the branch minimising `|Re|`.
    pub nu_plus_1: Cx<T>,
    /// The shift `z` inside the `cosh`.
    pub z_shift: Cx<T>,
    /// `omega = g11 g12`.
    pub omega: Cx<T>,
    /// Branch index `k` of `ln(g11 g22) + 2 pi i k`.
    pub branch: i64,
}

impl<T: Real> MonodromyParams<T> {
    /// `|Re(nu + 1)|`, the quantity both gates bound.
    pub fn gate_measure(&self) -> f64 {
        self.nu_plus_1.re.to_f64().abs()
    }

    pub fn passes(&self, gate: Gate) -> bool {
        self.gate_measure() < gate.bound()
    }
}

fn i_unit<T: Real>() -> Cx<T> {
    Cx::new(T::zero(), T::one())
}

/// `ln(1 + w)` without the cancellation of `1 + w` for small `w`.
fn ln_1p<T: Real>(w: &Cx<T>) -> Cx<T> {
    let y = Cx::<T>::one() + w.clone();
    let d = y.clone() - Cx::<T>::one();
    if d.re == T::zero() && d.im == T::zero() {
        return w.clone();
    }
    cln(&y) * w.clone() / d
}

pub fn monodromy_params<T: Real>(a: &CParam) -> Result<MonodromyParams<T>> {
    if a.re == 0 && a.im.is_integer() {
        return Err(Error::Invalid(format!(
            "a = {a} lies in iZ: g11 g22 (1 - e^{{2 pi a}}) = 1 has no solution, so the solution does not exist"
        )));
    }
    let i = i_unit::<T>();
    let pi = T::pi();
    let two = T::from_f64(2.0);
    let av: Cx<T> = a.to();
    let e = cexp(&(av.clone() * creal(pi.clone())));
    let q = e.clone() * e.clone();
    let q_copy = q.clone();
    let one_m_q = Cx::<T>::one() - q;
    let s00 = i.clone() * (e.clone() + Cx::<T>::one() / e.clone());
    let g11g22 = Cx::<T>::one() / one_m_q.clone();
    let g11g12 = i.clone() * e / one_m_q;
    let l = -ln_1p(&(-q_copy));
    let two_pi = two.clone() * pi.clone();
    // Re((i/2pi)(L + 2 pi i k)) = -Im L / 2pi - k
    let k = (-l.im.to_f64() / two_pi.to_f64()).round() as i64;
    let lk = l + i.clone() * creal(two_pi.clone() * T::from_f64(k as f64));
    let mut nu1 = i.clone() * lk / creal(two_pi.clone());
    if a.is_real() {
        // g11 g22 is real: Re(nu + 1) is exactly 0 (a < 0) or +-1/2 (a > 0)
        nu1.re = if a.re < 0 { T::zero() } else { T::from_ratio(1, 2) * T::from_f64(nu1.re.to_f64().signum()) };
    }
    let omega = g11g12.clone();
    let sqrt3 = T::from_f64(3.0).sqrt();
    let g = gamma(&nu1).ok_or_else(|| Error::Invalid("Gamma(nu + 1) has a pole".into()))?;
    let half = T::from_ratio(1, 2);
    let z = creal(two_pi.ln() * half.clone()) - i.clone() * creal(pi.clone() * half)
        - i.clone() * creal(T::from_ratio(3, 2) * pi) * nu1.clone()
        + i * av * creal((two + sqrt3).ln())
        + nu1.clone() * creal(T::from_f64(12.0).ln())
        - cln(&(omega.clone() * csqrt(&nu1) * g));
    Ok(MonodromyParams { s00, g11g22, g11g12, nu_plus_1: nu1, z_shift: z, omega, branch: k })
}
