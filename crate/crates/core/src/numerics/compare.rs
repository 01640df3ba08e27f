//! Solution against asymptotics, oscillation fits, positivity and symmetry
//! scans. All of these run in double precision.

use super::asymptotic::{AsymptoticEvaluator, Form};
use super::ode::{Ray, Trajectory};
use super::series::{eval_series, SolutionEvaluator};
use crate::{Error, Result};
use num_complex::Complex;
use std::f64::consts::PI;
use std::io::Write;

type C64 = Complex<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Component {
    Re,
    Im,
}

impl Component {
    fn of(self, z: C64) -> f64 {
        match self {
            Component::Re => z.re,
            Component::Im => z.im,
        }
    }
}

fn uniform(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let n = n.max(2);
    (0..n).map(move |j| lo + (hi - lo) * j as f64 / (n - 1) as f64)
}

fn traj_to(ev: &SolutionEvaluator, ray: Ray, t: f64) -> Result<Trajectory<f64>> {
    Trajectory::<f64>::integrate(ev, ray, t, None)
}

fn u_at(traj: &Trajectory<f64>, ev: &SolutionEvaluator, t: f64) -> Result<C64> {
    if t < ev.seed() {
        return Ok(eval_series::<f64>(ev, &C64::new(t, 0.0))?.u);
    }
    traj.u(t).ok_or_else(|| Error::Invalid(format!("tau = {t} outside the integrated range")))
}

#[derive(Clone, Debug)]
pub struct ComparisonSample {
    pub tau: f64,
    pub u: C64,
    pub u_as: C64,
    pub abs_err: f64,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub form: Form,
    pub window: (f64, f64),
    pub samples: Vec<ComparisonSample>,
    pub sup_error: f64,
    /// `sup_error` over the oscillation scale `b^{1/2} 3^{-1/4} |nu+1|^{1/2}`.
    pub sup_rel_error: f64,
    /// `(lo, hi, sup |u - u_as|)` on `[T, 2T], [2T, 4T], ...` from `T = T1`.
    pub dyadic: Vec<(f64, f64, f64)>,
    /// The same sups for `u - u_as - a b^{1/3}/(6 tau^{1/3})`.
    pub dyadic_ab_corrected: Vec<(f64, f64, f64)>,
    /// Each dyadic sup below the previous one.
    pub decreasing: bool,
    /// `p` in a least squares fit `sup ~ C T^{-p}` over the dyadic windows.
    pub decay_exponent: Option<f64>,
    pub strict_gate: bool,
    /// Circular mean of the phase of the solution's oscillation minus that
    /// of `u_as`, on the component carrying the larger oscillation.
    pub phase_offset: Option<f64>,
}

/// `sup |u - u_as|` over `n` uniform points of `[lo, hi]`.
pub fn window_sup_error(
    ev: &SolutionEvaluator,
    ae: &AsymptoticEvaluator<f64>,
    form: Form,
    lo: f64,
    hi: f64,
    n: usize,
) -> Result<f64> {
    let tr = traj_to(ev, Ray::Pos, hi)?;
    let mut sup = 0.0f64;
    for t in uniform(lo, hi, n) {
        let u = u_at(&tr, ev, t)?;
        sup = sup.max((u - ae.u_asymptotic(&t, form)?).norm());
    }
    Ok(sup)
}

pub fn compare_asymptotics(
    ev: &SolutionEvaluator,
    ae: &AsymptoticEvaluator<f64>,
    form: Form,
    window: (f64, f64),
    samples: usize,
) -> Result<ComparisonReport> {
    let (t1, t2) = window;
    if !(t1 > 0.0 && t2 > t1) {
        return Err(Error::Invalid(format!("window [{t1}, {t2}] must satisfy 0 < T1 < T2")));
    }
    let tr = traj_to(ev, Ray::Pos, t2)?;
    let mut out = Vec::with_capacity(samples);
    let mut sup = 0.0f64;
    for t in uniform(t1, t2, samples) {
        let u = u_at(&tr, ev, t)?;
        let ua = ae.u_asymptotic(&t, form)?;
        let err = (u - ua).norm();
        sup = sup.max(err);
        out.push(ComparisonSample { tau: t, u, u_as: ua, abs_err: err });
    }
    let mut dyadic = Vec::new();
    let mut corrected = Vec::new();
    let mut lo = t1;
    while 2.0 * lo <= t2 * (1.0 + 1e-12) {
        let hi = 2.0 * lo;
        let (mut s, mut sc) = (0.0f64, 0.0f64);
        for t in uniform(lo, hi, 400) {
            let d = u_at(&tr, ev, t)? - ae.u_asymptotic(&t, form)?;
            s = s.max(d.norm());
            sc = sc.max((d - ae.ab_correction(&t)).norm());
        }
        dyadic.push((lo, hi, s));
        corrected.push((lo, hi, sc));
        lo = hi;
    }
    let decreasing = dyadic.windows(2).all(|w| w[1].2 < w[0].2);
    let decay_exponent = if dyadic.len() >= 2 {
        let pts: Vec<(f64, f64)> = dyadic.iter().map(|&(l, h, s)| (((l * h).sqrt()).ln(), s.ln())).collect();
        let (slope, _) = line_fit(&pts);
        Some(-slope)
    } else {
        None
    };
    let amp = ae.amplitude();
    let comp = if ev.a().is_real() { Component::Re } else { Component::Im };
    let grid = (samples * 4).max(4000);
    let phase_offset = phase_offset(&tr, ev, ae, form, comp, window, grid).ok();
    Ok(ComparisonReport {
        form,
        window,
        samples: out,
        sup_error: sup,
        sup_rel_error: if amp > 0.0 { sup / amp } else { f64::INFINITY },
        dyadic,
        dyadic_ab_corrected: corrected,
        decreasing,
        decay_exponent,
        strict_gate: ae.passes(super::monodromy::Gate::Strict),
        phase_offset,
    })
}

fn line_fit(pts: &[(f64, f64)]) -> (f64, f64) {
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    (slope, (sy - slope * sx) / n)
}

/// Extrema `(tau, value, is_max)` of a sampled signal, refined by parabolas.
fn extrema(ts: &[f64], ys: &[f64]) -> Vec<(f64, f64, bool)> {
    let mut out = Vec::new();
    for j in 1..ys.len().saturating_sub(1) {
        let (y0, y1, y2) = (ys[j - 1], ys[j], ys[j + 1]);
        let is_max = y1 > y0 && y1 >= y2;
        let is_min = y1 < y0 && y1 <= y2;
        if !(is_max || is_min) {
            continue;
        }
        let h = ts[j + 1] - ts[j];
        let den = y0 - 2.0 * y1 + y2;
        let (dt, val) = if den != 0.0 {
            let d = 0.5 * (y0 - y2) / den;
            (d * h, y1 - 0.25 * (y0 - y2) * d)
        } else {
            (0.0, y1)
        };
        out.push((ts[j] + dt, val, is_max));
    }
    out
}

#[derive(Clone, Debug)]
pub struct PhaseFit {
    pub component: Component,
    pub window: (f64, f64),
    /// Fitted coefficient of `tau^{2/3}` in the phase.
    pub frequency: f64,
    /// `3^{3/2} b^{1/3}`.
    pub expected_frequency: f64,
    pub frequency_rel_err: f64,
    /// Coefficient of `ln tau`.
    pub log_coeff: f64,
    /// Mean half distance between consecutive extrema.
    pub amplitude: f64,
    pub extrema: usize,
}

/// Sample the oscillating part of one component of `u` on `grid` points and
/// fit its extrema with a phase `c tau^{2/3} + d ln tau + e`.
pub fn fit_phase(ev: &SolutionEvaluator, component: Component, window: (f64, f64), grid: usize) -> Result<PhaseFit> {
    let (t1, t2) = window;
    let b = ev.b().to_c64();
    if b.im != 0.0 || b.re <= 0.0 {
        return Err(Error::Invalid("oscillation fits need real b > 0".into()));
    }
    let b = b.re;
    let tr = traj_to(ev, Ray::Pos, t2)?;
    let ts: Vec<f64> = uniform(t1, t2, grid).collect();
    let mut ys = Vec::with_capacity(ts.len());
    for &t in &ts {
        let u = u_at(&tr, ev, t)?;
        let trend = match component {
            Component::Re => b.powf(2.0 / 3.0) * t.cbrt() / 2.0,
            Component::Im => 0.0,
        };
        ys.push(component.of(u) - trend);
    }
    let ex = extrema(&ts, &ys);
    if ex.len() < 4 {
        return Err(Error::Invalid(format!("only {} extrema in [{t1}, {t2}]", ex.len())));
    }
    // normal equations for phase_k = k pi = c x_k + d l_k + e
    let mut m = [[0.0f64; 3]; 3];
    let mut r = [0.0f64; 3];
    for (k, &(t, _, _)) in ex.iter().enumerate() {
        let row = [t.powf(2.0 / 3.0), t.ln(), 1.0];
        let y = k as f64 * PI;
        for i in 0..3 {
            for j in 0..3 {
                m[i][j] += row[i] * row[j];
            }
            r[i] += row[i] * y;
        }
    }
    let sol = solve3(m, r).ok_or_else(|| Error::Invalid("degenerate phase fit".into()))?;
    let amps: Vec<f64> = ex.windows(2).map(|w| (w[1].1 - w[0].1).abs() / 2.0).collect();
    let amplitude = amps.iter().sum::<f64>() / amps.len() as f64;
    let expected = 27f64.sqrt() * b.cbrt();
    Ok(PhaseFit {
        component,
        window,
        frequency: sol[0],
        expected_frequency: expected,
        frequency_rel_err: (sol[0] - expected).abs() / expected,
        log_coeff: sol[1],
        amplitude,
        extrema: ex.len(),
    })
}

fn solve3(mut m: [[f64; 3]; 3], mut r: [f64; 3]) -> Option<[f64; 3]> {
    for c in 0..3 {
        let p = (c..3).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs()))?;
        if m[p][c] == 0.0 {
            return None;
        }
        m.swap(c, p);
        r.swap(c, p);
        for i in c + 1..3 {
            let f = m[i][c] / m[c][c];
            for j in c..3 {
                m[i][j] -= f * m[c][j];
            }
            r[i] -= f * r[c];
        }
    }
    let mut x = [0.0f64; 3];
    for i in (0..3).rev() {
        let s: f64 = (i + 1..3).map(|j| m[i][j] * x[j]).sum();
        x[i] = (r[i] - s) / m[i][i];
    }
    Some(x)
}

/// Phase of a detrended oscillation, read off its extrema: `0` mod `2 pi` at
/// maxima, `pi` at minima, linear in between.
fn extremal_phase(ex: &[(f64, f64, bool)], t: f64) -> Option<f64> {
    let j = ex.partition_point(|e| e.0 <= t);
    if j == 0 || j >= ex.len() {
        return None;
    }
    let (ta, _, ma) = ex[j - 1];
    let (tb, _, _) = ex[j];
    let base = if ma { 0.0 } else { PI };
    Some(base + PI * (t - ta) / (tb - ta))
}

fn phase_offset(
    tr: &Trajectory<f64>,
    ev: &SolutionEvaluator,
    ae: &AsymptoticEvaluator<f64>,
    form: Form,
    comp: Component,
    window: (f64, f64),
    grid: usize,
) -> Result<f64> {
    let ts: Vec<f64> = uniform(window.0, window.1, grid).collect();
    let b = ev.b().to_c64().re;
    let trend = |t: f64| match comp {
        Component::Re => b.powf(2.0 / 3.0) * t.cbrt() / 2.0,
        Component::Im => 0.0,
    };
    let mut ys = Vec::new();
    let mut zs = Vec::new();
    for &t in &ts {
        ys.push(comp.of(u_at(tr, ev, t)?) - trend(t));
        zs.push(comp.of(ae.u_asymptotic(&t, form)?) - trend(t));
    }
    let (ea, eb) = (extrema(&ts, &ys), extrema(&ts, &zs));
    let (mut sx, mut sy) = (0.0, 0.0);
    for &t in &ts {
        if let (Some(p), Some(q)) = (extremal_phase(&ea, t), extremal_phase(&eb, t)) {
            sx += (p - q).cos();
            sy += (p - q).sin();
        }
    }
    if sx == 0.0 && sy == 0.0 {
        return Err(Error::Invalid("too few extrema for a phase offset".into()));
    }
    Ok(sy.atan2(sx))
}

#[derive(Clone, Debug)]
pub struct PositivityReport {
    pub min_re: f64,
    pub argmin: f64,
    /// `max |Im u| / |u|`; only meaningful for real `a`.
    pub max_im_ratio: f64,
    pub points: usize,
    pub passed: bool,
}

/// `Re u > 0` (and `u` real for real `a`) on `grid` points of `[0.01, tau_max]`.
pub fn positivity_scan(ev: &SolutionEvaluator, tau_max: f64, grid: usize) -> Result<PositivityReport> {
    let a = ev.a();
    if a.re > 0 || a.im.clone().abs() >= 1 {
        return Err(Error::Invalid(format!("positivity scan needs Re a <= 0 and |Im a| < 1, got a = {a}")));
    }
    let tr = traj_to(ev, Ray::Pos, tau_max)?;
    let mut min_re = f64::INFINITY;
    let mut argmin = 0.0;
    let mut max_im = 0.0f64;
    let mut n = 0;
    for t in uniform(0.01, tau_max, grid) {
        let u = u_at(&tr, ev, t)?;
        if u.re < min_re {
            min_re = u.re;
            argmin = t;
        }
        max_im = max_im.max(u.im.abs() / u.norm());
        n += 1;
    }
    let real_ok = !a.is_real() || max_im == 0.0;
    Ok(PositivityReport { min_re, argmin, max_im_ratio: max_im, points: n, passed: min_re > 0.0 && real_ok })
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub max_abs: f64,
    pub max_rel: f64,
    /// Relative deviation from the alternative reading of the identity.
    pub alt_max_rel: Option<f64>,
    pub points: usize,
}

/// `u(-tau) + u(tau)` along the real axis, the negative side continued from a
/// different seed so the two paths share no steps.
pub fn oddness_check(ev: &SolutionEvaluator, tau_max: f64, grid: usize) -> Result<SymmetryReport> {
    let seed = ev.seed();
    let pos = Trajectory::<f64>::integrate(ev, Ray::Pos, tau_max, Some(seed))?;
    let neg = Trajectory::<f64>::integrate(ev, Ray::Neg, tau_max, Some(0.7 * seed))?;
    let (mut ma, mut mr) = (0.0f64, 0.0f64);
    let mut n = 0;
    for t in uniform(seed, tau_max, grid) {
        let up = pos.u(t).ok_or_else(|| Error::Invalid("outside range".into()))?;
        let un = neg.u(t).ok_or_else(|| Error::Invalid("outside range".into()))?;
        let d = (up + un).norm();
        ma = ma.max(d);
        mr = mr.max(d / up.norm());
        n += 1;
    }
    Ok(SymmetryReport { max_abs: ma, max_rel: mr, alt_max_rel: None, points: n })
}

/// `u(tau; a) = i u(i tau; -a)` with `b` fixed, on `grid` points of
/// `[seed, tau_max]`; `alt_max_rel` measures the same identity with `-i`.
pub fn rotation_check(ev: &SolutionEvaluator, tau_max: f64, grid: usize) -> Result<SymmetryReport> {
    let ev2 = ev.with_a(ev.a().neg())?;
    let seed = ev.seed().min(ev2.seed());
    let pos = Trajectory::<f64>::integrate(ev, Ray::Pos, tau_max, Some(seed))?;
    let rot = Trajectory::<f64>::integrate(&ev2, Ray::PosImag, tau_max, Some(0.7 * seed))?;
    let i = C64::new(0.0, 1.0);
    let (mut ma, mut mr, mut alt) = (0.0f64, 0.0f64, 0.0f64);
    let mut n = 0;
    for t in uniform(seed, tau_max, grid) {
        let u = pos.u(t).ok_or_else(|| Error::Invalid("outside range".into()))?;
        let v = rot.u(t).ok_or_else(|| Error::Invalid("outside range".into()))?;
        let d = (u - i * v).norm();
        ma = ma.max(d);
        mr = mr.max(d / u.norm());
        alt = alt.max((u + i * v).norm() / u.norm());
        n += 1;
    }
    Ok(SymmetryReport { max_abs: ma, max_rel: mr, alt_max_rel: Some(alt), points: n })
}

/// Largest relative gap between the series and the continuation started from
/// the series at `0.3 R`, over `points` positions in `(0.3 R, R]` where `R` is
/// the series margin.
pub fn series_ode_agreement(ev: &SolutionEvaluator, points: usize) -> Result<f64> {
    let r = ev.series_radius();
    let t0 = 0.3 * r;
    let tr = Trajectory::<f64>::integrate(ev, Ray::Pos, r, Some(t0))?;
    let mut worst = 0.0f64;
    for j in 1..=points {
        let t = t0 + (r - t0) * j as f64 / points as f64;
        let s = eval_series::<f64>(ev, &C64::new(t, 0.0))?.u;
        let o = tr.u(t).ok_or_else(|| Error::Invalid("outside range".into()))?;
        worst = worst.max((s - o).norm() / s.norm());
    }
    Ok(worst)
}

/// Columns `tau, re_u, im_u, re_u_as, im_u_as, abs_err`.
pub fn write_comparison_csv<W: Write>(w: &mut W, report: &ComparisonReport) -> Result<()> {
    writeln!(w, "tau,re_u,im_u,re_u_as,im_u_as,abs_err")?;
    for s in &report.samples {
        writeln!(w, "{:e},{:e},{:e},{:e},{:e},{:e}", s.tau, s.u.re, s.u.im, s.u_as.re, s.u_as.im, s.abs_err)?;
    }
    Ok(())
}
