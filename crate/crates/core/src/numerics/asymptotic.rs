//! Leading term `u_as(tau)` of the large-`tau` asymptotics on the positive
//! axis, for `|Im a| < 1` and `b > 0`.

use super::gamma::gamma;
use super::monodromy::{monodromy_params, Gate, MonodromyParams};
use super::param::CParam;
use super::real::{cabs, carg, ccosh, cexp, creal, csqrt, Cx, Real};
use crate::{Error, Result};
use rug::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Form {
    /// `cosh` form with the shift `z` built from the monodromy data.
    General,
    /// Real and imaginary parts for `a = i alpha`, `alpha` in `(0,1/2) u (1/2,1)`.
    ImaginaryA,
    /// `a = +-i/2`.
    Suleimanov,
    /// Real `a < 0`.
    NegativeA,
}

impl Form {
    /// The closed form written for this `a`, or [`Form::General`].
    pub fn natural(a: &CParam) -> Form {
        let half = Rational::from((1, 2));
        if a.is_real() && a.re < 0 {
            Form::NegativeA
        } else if a.re == 0 && (a.im == half || a.im == -half.clone()) {
            Form::Suleimanov
        } else if a.re == 0 && a.im > 0 && a.im < 1 {
            Form::ImaginaryA
        } else {
            Form::General
        }
    }
}

#[derive(Clone, Debug)]
pub struct AsymptoticEvaluator<T: Real> {
    a: CParam,
    b: T,
    params: MonodromyParams<T>,
}

impl<T: Real> AsymptoticEvaluator<T> {
    /// Requires `b > 0`, `|Im a| < 1` and the weak gate.
    pub fn new(a: CParam, b: &CParam) -> Result<Self> {
        if !b.is_real() || b.re <= 0 {
            return Err(Error::Invalid(format!("b = {b} must be real and positive")));
        }
        if a.im.clone().abs() >= 1 {
            return Err(Error::Invalid(format!("|Im a| < 1 violated for a = {a}")));
        }
        let params = monodromy_params::<T>(&a)?;
        let ae = AsymptoticEvaluator { a, b: T::from_rational(&b.re), params };
        ae.require(Gate::Weak)?;
        Ok(ae)
    }

    pub fn require(&self, gate: Gate) -> Result<&Self> {
        if self.params.passes(gate) {
            Ok(self)
        } else {
            Err(Error::Invalid(format!(
                "{} violated: measured {:.6}",
                gate.inequality(),
                self.params.gate_measure()
            )))
        }
    }

    pub fn params(&self) -> &MonodromyParams<T> {
        &self.params
    }

    pub fn a(&self) -> &CParam {
        &self.a
    }

    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn passes(&self, gate: Gate) -> bool {
        self.params.passes(gate)
    }

    /// `theta(tau) = 3^{3/2} b^{1/3} tau^{2/3}`.
    pub fn theta(&self, tau: &T) -> T {
        T::from_f64(27.0).sqrt() * self.b.powf(&T::from_ratio(1, 3)) * tau.powf(&T::from_ratio(2, 3))
    }

    /// `b^{2/3} tau^{1/3} / 2`.
    pub fn leading(&self, tau: &T) -> T {
        self.b.powf(&T::from_ratio(2, 3)) * tau.powf(&T::from_ratio(1, 3)) / T::from_f64(2.0)
    }

    /// `a b^{1/3} / (6 tau^{1/3})`: the non-oscillating shift forced by the
    /// `2ab/tau` term when `u = b^{2/3} tau^{1/3}/2 + ...` is put into the
    /// equation. It omits the mean of the squared oscillation, which is of the
    /// same order but proportional to `|nu + 1|`.
    pub fn ab_correction(&self, tau: &T) -> Cx<T> {
        let s = self.b.powf(&T::from_ratio(1, 3)) / (T::from_f64(6.0) * tau.powf(&T::from_ratio(1, 3)));
        let a: Cx<T> = self.a.to();
        a * creal(s)
    }

    /// `b^{1/2} 3^{-1/4} |nu + 1|^{1/2}`, the scale of the oscillation.
    pub fn amplitude(&self) -> f64 {
        self.b.to_f64().sqrt() * 3f64.powf(-0.25) * cabs(&self.params.nu_plus_1).to_f64().sqrt()
    }

    pub fn u_asymptotic(&self, tau: &T, form: Form) -> Result<Cx<T>> {
        if *tau <= T::zero() {
            return Err(Error::Invalid("u_as is defined for tau > 0".into()));
        }
        match form {
            Form::General => Ok(self.general(tau)),
            Form::ImaginaryA => self.imaginary_a(tau),
            Form::Suleimanov => self.suleimanov(tau),
            Form::NegativeA => self.negative_a(tau),
        }
    }

    fn prefactor(&self) -> T {
        self.b.sqrt() / T::from_f64(3.0).powf(&T::from_ratio(1, 4))
    }

    fn general(&self, tau: &T) -> Cx<T> {
        let th = self.theta(tau);
        let nu1 = &self.params.nu_plus_1;
        let i = Cx::new(T::zero(), T::one());
        let arg = i.clone() * creal(th.clone()) + nu1.clone() * creal(th.ln()) + self.params.z_shift.clone();
        let rot = cexp(&(i * creal(T::from_ratio(3, 4) * T::pi())));
        let osc = csqrt(nu1) * rot * ccosh(&arg);
        let lead = creal((th / T::from_f64(12.0)).sqrt());
        (lead + osc) * creal(self.prefactor())
    }

    fn imaginary_a(&self, tau: &T) -> Result<Cx<T>> {
        let half = Rational::from((1, 2));
        if !(self.a.re == 0 && self.a.im > 0 && self.a.im < 1 && self.a.im != half) {
            return Err(Error::Invalid(format!(
                "imaginary-a form needs a = i alpha with alpha in (0,1/2) u (1/2,1), got a = {}",
                self.a
            )));
        }
        let al = T::from_rational(&self.a.im);
        let pi = T::pi();
        let two = T::from_f64(2.0);
        let h = al.clone() - T::from_ratio(1, 2);
        let l = (two.clone() * (pi.clone() * al.clone()).sin()).ln();
        let nu1 = (h.clone() * h.clone() + l.clone() * l.clone() / (pi.clone() * pi.clone())).sqrt() / two.clone();
        let sgn = if h > T::zero() { T::one() } else { -T::one() };
        let psi = -(l.clone() / (pi.clone() * h.clone())).atan2(&T::one()) / two.clone()
            + pi.clone() / T::from_f64(4.0) * (sgn - T::one());
        let th = self.theta(tau);
        let g_arg = Cx::new(h.clone() / two.clone(), -l.clone() / (two.clone() * pi.clone()));
        let g = gamma(&g_arg).ok_or_else(|| Error::Invalid("Gamma pole".into()))?;
        let ln12 = T::from_f64(12.0).ln();
        let chi0 = (two.clone() * pi.clone()).ln() / two.clone() + l.clone() / T::from_f64(4.0)
            - al.clone() * (two.clone() + T::from_f64(3.0).sqrt()).ln()
            + ln12.clone() / two.clone() * h.clone()
            - (nu1.sqrt() * cabs(&g)).ln();
        let chi = h.clone() / two.clone() * th.ln() + chi0;
        let phi0 = pi.clone() / two.clone() - psi.clone() - T::from_ratio(3, 4) * pi.clone() * h
            - ln12 / (two.clone() * pi.clone()) * l.clone()
            - carg(&g);
        let phi = th.clone() - l / (two * pi.clone()) * th.ln() + phi0;
        let amp = self.prefactor() * nu1.sqrt();
        let q = pi / T::from_f64(4.0) + psi;
        let (ch, sh) = cosh_sinh(&chi);
        let re = self.leading(tau)
            + amp.clone() * (q.sin() * ch.clone() * phi.cos() + q.cos() * sh.clone() * phi.sin());
        let im = amp * (q.sin() * sh * phi.sin() - q.cos() * ch * phi.cos());
        Ok(Cx::new(re, im))
    }

    fn suleimanov(&self, tau: &T) -> Result<Cx<T>> {
        let half = Rational::from((1, 2));
        let sign = if self.a.re == 0 && self.a.im == half {
            T::one()
        } else if self.a.re == 0 && self.a.im == -half {
            -T::one()
        } else {
            return Err(Error::Invalid(format!("Suleimanov form needs a = +-i/2, got a = {}", self.a)));
        };
        let pi = T::pi();
        let ln2 = T::from_f64(2.0).ln();
        let sqrt3 = T::from_f64(3.0).sqrt();
        let th = self.theta(tau);
        let g = gamma(&Cx::new(T::zero(), -ln2.clone() / (T::from_f64(2.0) * pi.clone())))
            .ok_or_else(|| Error::Invalid("Gamma pole".into()))?;
        let phi0 = T::from_ratio(3, 4) * pi.clone()
            - ln2.clone() * T::from_f64(12.0).ln() / (T::from_f64(2.0) * pi.clone())
            - carg(&g);
        let phi = th.clone() - ln2.clone() / (T::from_f64(2.0) * pi.clone()) * th.ln() + phi0;
        let b = self.b.clone();
        let four_pi = T::from_f64(4.0) * pi;
        let im = -sign * (b.clone() * sqrt3.clone() * ln2.clone() / four_pi.clone()).sqrt() * phi.cos();
        let re = self.leading(tau) - (b * ln2 / (four_pi * sqrt3)).sqrt() * phi.sin();
        Ok(Cx::new(re, im))
    }

    fn negative_a(&self, tau: &T) -> Result<Cx<T>> {
        if !(self.a.is_real() && self.a.re < 0) {
            return Err(Error::Invalid(format!("negative-a form needs real a < 0, got a = {}", self.a)));
        }
        let a = T::from_rational(&self.a.re);
        let pi = T::pi();
        let two_pi = T::from_f64(2.0) * pi.clone();
        let lq = (T::one() - (two_pi.clone() * a.clone()).exp()).ln();
        let th = self.theta(tau);
        let g = gamma(&Cx::new(T::zero(), -lq.clone() / two_pi.clone()))
            .ok_or_else(|| Error::Invalid("Gamma pole".into()))?;
        let phi0 = a * (T::from_f64(2.0) + T::from_f64(3.0).sqrt()).ln()
            - T::from_f64(12.0).ln() * lq.clone() / two_pi.clone()
            - pi / T::from_f64(4.0)
            - carg(&g);
        let phase = th.clone() - lq.clone() / two_pi.clone() * th.ln() + phi0;
        let amp = self.prefactor() * (-lq / two_pi).sqrt();
        Ok(creal(self.leading(tau) - amp * phase.cos()))
    }
}

fn cosh_sinh<T: Real>(x: &T) -> (T, T) {
    let e = x.exp();
    let ei = T::one() / e.clone();
    let two = T::from_f64(2.0);
    ((e.clone() + ei.clone()) / two.clone(), (e - ei) / two)
}
