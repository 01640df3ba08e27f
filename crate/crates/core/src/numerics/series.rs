//! Taylor expansion at the origin,
//! `u = -(b/2a) tau (1 + sum_n u_{2n}(a) (b tau^2 / a)^n)`.

use super::param::CParam;
use super::real::{cabs, creal, Cx, Real};
use crate::{Error, Result};
use num_traits::{One, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Precision {
    /// Hardware doubles.
    #[default]
    Double,
    /// MPFR floats with [`super::real::MP_BITS`] bits.
    Extended,
}

#[derive(Clone, Debug)]
pub struct SolutionEvaluator {
    a: CParam,
    b: CParam,
    horizon: usize,
    tol: f64,
    margin: f64,
    precision: Precision,
}

impl SolutionEvaluator {
    /// The solution vanishing at the origin; for `a` in `i(Z + 1/2)` this
    /// is the odd one.
    pub fn new(a: CParam, b: CParam) -> Result<Self> {
        if b.is_zero() {
            return Err(Error::Invalid("b must be nonzero".into()));
        }
        if a.re == 0 && a.im.is_integer() {
            return Err(Error::Invalid(format!(
                "a = {a} lies in iZ: the solution vanishing at the origin does not exist"
            )));
        }
        Ok(SolutionEvaluator { a, b, horizon: 400, tol: 1e-10, margin: 0.25, precision: Precision::Double })
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_horizon(mut self, horizon: usize) -> Self {
        self.horizon = horizon;
        self
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    pub fn a(&self) -> &CParam {
        &self.a
    }
    pub fn b(&self) -> &CParam {
        &self.b
    }
    pub fn tol(&self) -> f64 {
        self.tol
    }
    pub fn horizon(&self) -> usize {
        self.horizon
    }
    pub fn margin(&self) -> f64 {
        self.margin
    }
    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Same `b`, horizon and tolerance, different `a`.
    pub fn with_a(&self, a: CParam) -> Result<Self> {
        let mut e = SolutionEvaluator::new(a, self.b.clone())?;
        e.horizon = self.horizon;
        e.tol = self.tol;
        e.margin = self.margin;
        e.precision = self.precision;
        Ok(e)
    }

    /// Largest `|tau|` with `|b/a tau^2| <= margin`.
    pub fn series_radius(&self) -> f64 {
        let ratio = self.b.to_c64().norm() / self.a.to_c64().norm();
        (self.margin / ratio).sqrt()
    }

    /// Default seed for the continuation: the edge of the series margin.
    pub fn seed(&self) -> f64 {
        self.series_radius()
    }
}

/// `[1, u_2, u_4, ..., u_{2n}]` at complex `s = a^2`.
pub fn coefficients<T: Real>(s: &Cx<T>, n: usize) -> Vec<Cx<T>> {
    let mut u: Vec<Cx<T>> = Vec::with_capacity(n + 1);
    u.push(Cx::one());
    if n == 0 {
        return u;
    }
    u.push(Cx::<T>::one() / (s.clone() + Cx::one()));
    // w[m] = sum_{j1+j2=m, j>=1} u_{2j1} u_{2j2}
    let mut w: Vec<Cx<T>> = vec![Cx::zero()];
    let three = creal(T::from_f64(3.0));
    for k in 2..=n {
        let m = k - 1;
        let mut wm = Cx::<T>::zero();
        for j in 1..m {
            wm = wm + u[j].clone() * u[m - j].clone();
        }
        w.push(wm);
        let mut r = three.clone() * (u[k - 1].clone() + w[k - 1].clone());
        for j in 1..k.saturating_sub(2) {
            r = r + u[j].clone() * w[k - 1 - j].clone();
        }
        let mut j = 1;
        while 2 * j < k {
            let c = ((k - 2 * j) * (k - 2 * j)) as f64;
            r = r - creal(T::from_f64(c)) * u[j].clone() * u[k - j].clone();
            j += 1;
        }
        let d = s.clone() + creal(T::from_f64((k * k) as f64));
        u.push(r / d);
    }
    u
}

#[derive(Clone, Debug)]
pub struct SeriesValue<T: Real> {
    pub u: Cx<T>,
    /// `du/dtau`.
    pub du: Cx<T>,
    /// Estimated bound on the neglected tail of `u`, absolute.
    pub tail: f64,
    pub terms: usize,
}

/// Partial sum of the Taylor series with a geometric tail estimate.
pub fn eval_series<T: Real>(ev: &SolutionEvaluator, tau: &Cx<T>) -> Result<SeriesValue<T>> {
    let a: Cx<T> = ev.a.to();
    let b: Cx<T> = ev.b.to();
    let x = b.clone() / a.clone() * tau.clone() * tau.clone();
    let xabs = cabs(&x).to_f64();
    if xabs > ev.margin * (1.0 + 1e-12) {
        return Err(Error::Invalid(format!(
            "|b/a tau^2| = {xabs:.4} exceeds the series margin {}; use ODE continuation",
            ev.margin
        )));
    }
    let pre = -(b / (a.clone() * creal(T::from_f64(2.0))));
    if xabs == 0.0 {
        return Ok(SeriesValue { u: Cx::zero(), du: pre, tail: 0.0, terms: 0 });
    }
    let coeffs = coefficients(&(a.clone() * a), ev.horizon);
    let target = 0.1 * ev.tol.max(T::eps() * 10.0);
    let mut s = Cx::<T>::one();
    let mut ds = Cx::<T>::one();
    let mut xn = Cx::<T>::one();
    let mut mags: Vec<f64> = vec![1.0];
    let mut tail = f64::INFINITY;
    let mut terms = 0;
    for (n, c) in coeffs.iter().enumerate().skip(1) {
        xn = xn * x.clone();
        let t = c.clone() * xn.clone();
        mags.push(cabs(&t).to_f64());
        s = s + t.clone();
        ds = ds + t * creal(T::from_f64((2 * n + 1) as f64));
        terms = n;
        if n >= 6 {
            let r = mags[n - 2..=n]
                .windows(2)
                .map(|w| if w[0] > 0.0 { w[1] / w[0] } else { 0.0 })
                .fold(0.0f64, f64::max);
            if r < 1.0 {
                let scale = (2 * n + 3) as f64 / (1.0 - r).powi(2);
                tail = mags[n] * r * scale;
                if tail <= target * cabs(&s).to_f64() {
                    break;
                }
            }
        }
    }
    if tail > target * cabs(&s).to_f64() {
        return Err(Error::Invalid(format!(
            "series did not reach tolerance within {} terms (tail {tail:.2e})",
            ev.horizon
        )));
    }
    let tau_abs = cabs(tau).to_f64();
    Ok(SeriesValue {
        u: pre.clone() * tau.clone() * s,
        du: pre.clone() * ds,
        tail: tail * cabs(&pre).to_f64() * tau_abs,
        terms,
    })
}
