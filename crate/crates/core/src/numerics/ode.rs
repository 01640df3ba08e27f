//! Adaptive Dormand-Prince 5(4) continuation of the series along a ray
//! `tau = dir * t`, `t >= 0`, with dense output.

use super::real::{cabs, creal, Cx, Real};
use super::series::{eval_series, SolutionEvaluator};
use crate::{Error, Result};
use num_traits::Zero;

/// Direction of the ray `tau = dir * t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ray {
    Pos,
    Neg,
    PosImag,
    NegImag,
}

impl Ray {
    fn unit<T: Real>(self) -> Cx<T> {
        let (re, im) = match self {
            Ray::Pos => (1.0, 0.0),
            Ray::Neg => (-1.0, 0.0),
            Ray::PosImag => (0.0, 1.0),
            Ray::NegImag => (0.0, -1.0),
        };
        Cx::new(T::from_f64(re), T::from_f64(im))
    }
}

type State<T> = [Cx<T>; 2];

/// Interior points per step at which the interpolant is checked against the
/// equation, and the allowed residual in units of the local tolerance.
const DENSE_CHECKS: usize = 1;
const RESIDUAL_FACTOR: f64 = 10.0;

fn axpy<T: Real>(y: &State<T>, terms: &[(T, &State<T>)]) -> State<T> {
    let mut out = y.clone();
    for (c, k) in terms {
        for i in 0..2 {
            out[i] = out[i].clone() + k[i].clone() * creal(c.clone());
        }
    }
    out
}

struct Tableau<T> {
    c: [T; 7],
    a: Vec<Vec<T>>,
    e: [T; 7],
    d: [T; 7],
}

impl<T: Real> Tableau<T> {
    fn new() -> Self {
        let r = |n: i64, d: i64| T::from_ratio(n, d);
        Tableau {
            c: [r(0, 1), r(1, 5), r(3, 10), r(4, 5), r(8, 9), r(1, 1), r(1, 1)],
            a: vec![
                vec![],
                vec![r(1, 5)],
                vec![r(3, 40), r(9, 40)],
                vec![r(44, 45), r(-56, 15), r(32, 9)],
                vec![r(19372, 6561), r(-25360, 2187), r(64448, 6561), r(-212, 729)],
                vec![r(9017, 3168), r(-355, 33), r(46732, 5247), r(49, 176), r(-5103, 18656)],
                vec![r(35, 384), r(0, 1), r(500, 1113), r(125, 192), r(-2187, 6784), r(11, 84)],
            ],
            e: [r(71, 57600), r(0, 1), r(-71, 16695), r(71, 1920), r(-17253, 339200), r(22, 525), r(-1, 40)],
            d: [
                r(-12715105075, 11282082432),
                r(0, 1),
                r(87487479700, 32700410799),
                r(-10690763975, 1880347072),
                r(701980252875, 199316789632),
                r(-1453857185, 822651844),
                r(69997945, 29380423),
            ],
        }
    }
}

/// One accepted step with its continuous extension.
#[derive(Clone, Debug)]
struct DenseStep<T: Real> {
    t0: T,
    h: T,
    r: [State<T>; 5],
}

impl<T: Real> DenseStep<T> {
    fn theta(&self, t: &T) -> T {
        (t.clone() - self.t0.clone()) / self.h.clone()
    }

    fn value(&self, t: &T) -> State<T> {
        let th = self.theta(t);
        let one = T::one();
        let mut out: State<T> = [Cx::zero(), Cx::zero()];
        for i in 0..2 {
            let p = self.r[2][i].clone()
                + creal(th.clone()) * (self.r[3][i].clone() + creal(one.clone() - th.clone()) * self.r[4][i].clone());
            out[i] = self.r[0][i].clone()
                + creal(th.clone()) * (self.r[1][i].clone() + creal(one.clone() - th.clone()) * p);
        }
        out
    }

    /// `dy/dt` of the interpolant.
    fn slope(&self, t: &T) -> State<T> {
        let th = self.theta(t);
        let one = T::one();
        let two = T::from_f64(2.0);
        let omt = one - th.clone();
        let lin = omt.clone() - th.clone();
        let mut out: State<T> = [Cx::zero(), Cx::zero()];
        for i in 0..2 {
            let p = self.r[2][i].clone() + creal(th.clone()) * (self.r[3][i].clone() + creal(omt.clone()) * self.r[4][i].clone());
            let dp = self.r[3][i].clone() + creal(T::one() - two.clone() * th.clone()) * self.r[4][i].clone();
            let dy = self.r[1][i].clone() + creal(lin.clone()) * p + creal(th.clone() * omt.clone()) * dp;
            out[i] = dy / creal(self.h.clone());
        }
        out
    }
}

/// Dense solution along one ray from the seed point to `t_end`.
#[derive(Clone, Debug)]
pub struct Trajectory<T: Real> {
    ray: Ray,
    a: Cx<T>,
    b: Cx<T>,
    rtol: f64,
    atol: f64,
    t_seed: T,
    steps: Vec<DenseStep<T>>,
    rejected: usize,
}

fn rhs<T: Real>(dir: &Cx<T>, a: &Cx<T>, b: &Cx<T>, t: &T, y: &State<T>) -> State<T> {
    let tau = dir.clone() * creal(t.clone());
    let [u, v] = y.clone();
    let eight = creal(T::from_f64(8.0));
    let two = creal(T::from_f64(2.0));
    let upp = v.clone() * v.clone() / u.clone() - v.clone() / tau.clone()
        + (two * a.clone() * b.clone() - eight * u.clone() * u.clone()) / tau
        + b.clone() * b.clone() / u;
    [dir.clone() * v, dir.clone() * upp]
}

impl<T: Real> Trajectory<T> {
    /// Integrate from the series seed `t_seed` (or the default seed) to
    /// `t_end` along `ray`. Either end may be the larger one.
    pub fn integrate(ev: &SolutionEvaluator, ray: Ray, t_end: f64, t_seed: Option<f64>) -> Result<Self> {
        let dir: Cx<T> = ray.unit();
        let a: Cx<T> = ev.a().to();
        let b: Cx<T> = ev.b().to();
        let ts = t_seed.unwrap_or_else(|| ev.seed());
        let t_seed_t = T::from_f64(ts);
        let sv = eval_series::<T>(ev, &(dir.clone() * creal(t_seed_t.clone())))?;
        let rtol = ev.tol().max(T::eps() * 100.0);
        let atol = rtol * 1e-3;
        let mut traj = Trajectory {
            ray,
            a: a.clone(),
            b: b.clone(),
            rtol,
            atol,
            t_seed: t_seed_t.clone(),
            steps: Vec::new(),
            rejected: 0,
        };
        if (t_end - ts).abs() == 0.0 {
            traj.steps.push(DenseStep {
                t0: t_seed_t,
                h: T::one(),
                r: [[sv.u, sv.du], [Cx::zero(), Cx::zero()], [Cx::zero(), Cx::zero()], [Cx::zero(), Cx::zero()], [Cx::zero(), Cx::zero()]],
            });
            return Ok(traj);
        }
        traj.run([sv.u, sv.du], T::from_f64(t_end), ev.b().to_c64().norm())?;
        Ok(traj)
    }

    fn err_norm(&self, y0: &State<T>, y1: &State<T>, e: &State<T>) -> f64 {
        let mut m = 0.0f64;
        for i in 0..2 {
            let sc = self.atol + self.rtol * cabs(&y0[i]).to_f64().max(cabs(&y1[i]).to_f64());
            m = m.max(cabs(&e[i]).to_f64() / sc);
        }
        m
    }

    fn run(&mut self, y0: State<T>, t_end: T, b_abs: f64) -> Result<()> {
        let tab = Tableau::<T>::new();
        let dir: Cx<T> = self.ray.unit();
        let (a, b) = (self.a.clone(), self.b.clone());
        let f = |t: &T, y: &State<T>| rhs(&dir, &a, &b, t, y);
        let sign = if t_end > self.t_seed { 1.0 } else { -1.0 };
        let span = (t_end.clone() - self.t_seed.clone()).to_f64().abs();
        let mut t = self.t_seed.clone();
        let mut y = y0;
        let mut k1 = f(&t, &y);
        let mut h = sign * (span / 100.0).min(0.05 * t.to_f64().abs().max(0.1));
        let max_steps = 2_000_000usize;
        let order_exp = 1.0 / 5.0;
        loop {
            let remaining = (t_end.clone() - t.clone()).to_f64();
            if remaining * sign <= 0.0 {
                break;
            }
            if h.abs() > remaining.abs() {
                h = remaining;
            }
            let scale_t = t.to_f64().abs().max(1.0);
            if h.abs() < 1e-13 * scale_t {
                return Err(singular(&y, t.to_f64(), self.ray, b_abs));
            }
            if self.steps.len() + self.rejected > max_steps {
                return Err(Error::Invalid(format!("step budget exhausted at t = {:.6}", t.to_f64())));
            }
            let ht = T::from_f64(h);
            let mut k: Vec<State<T>> = vec![k1.clone()];
            for s in 1..7 {
                let terms: Vec<(T, &State<T>)> =
                    tab.a[s].iter().zip(k.iter()).map(|(c, kk)| (c.clone() * ht.clone(), kk)).collect();
                let ys = axpy(&y, &terms);
                let ts = t.clone() + tab.c[s].clone() * ht.clone();
                k.push(f(&ts, &ys));
            }
            let terms: Vec<(T, &State<T>)> =
                tab.a[6].iter().zip(k.iter()).map(|(c, kk)| (c.clone() * ht.clone(), kk)).collect();
            let y_new = axpy(&y, &terms);
            let mut err: State<T> = [Cx::zero(), Cx::zero()];
            err = axpy(&err, &tab.e.iter().zip(k.iter()).map(|(c, kk)| (c.clone() * ht.clone(), kk)).collect::<Vec<_>>());
            let mut en = self.err_norm(&y, &y_new, &err);
            let finite = en.is_finite() && y_new.iter().all(|z| z.re.to_f64().is_finite() && z.im.to_f64().is_finite());
            let mut step = None;
            if finite && en <= 1.0 {
                let dense5 = axpy(
                    &[Cx::zero(), Cx::zero()],
                    &tab.d.iter().zip(k.iter()).map(|(c, kk)| (c.clone() * ht.clone(), kk)).collect::<Vec<_>>(),
                );
                let mut r: [State<T>; 5] = std::array::from_fn(|_| [Cx::zero(), Cx::zero()]);
                for i in 0..2 {
                    let r1 = y[i].clone();
                    let r2 = y_new[i].clone() - y[i].clone();
                    let r3 = k[0][i].clone() * creal(ht.clone()) - r2.clone();
                    let r4 = r2.clone() - k[6][i].clone() * creal(ht.clone()) - r3.clone();
                    r[0][i] = r1;
                    r[1][i] = r2;
                    r[2][i] = r3;
                    r[3][i] = r4;
                    r[4][i] = dense5[i].clone();
                }
                let ds = DenseStep { t0: t.clone(), h: ht.clone(), r };
                // the interpolant must also satisfy the equation, not only the endpoints
                en = en.max(self.step_residual(&ds, &f, DENSE_CHECKS) / RESIDUAL_FACTOR);
                if en <= 1.0 {
                    step = Some(ds);
                }
            }
            if let Some(ds) = step {
                self.steps.push(ds);
                t = t + ht;
                y = y_new;
                k1 = k[6].clone();
                let u_abs = cabs(&y[0]).to_f64();
                let typical = b_abs.powf(2.0 / 3.0) * t.to_f64().abs().max(1.0).powf(1.0 / 3.0) + 1.0;
                if u_abs > 1e6 * typical || u_abs < 1e-12 * typical {
                    return Err(singular(&y, t.to_f64(), self.ray, b_abs));
                }
                let fac = if en == 0.0 { 5.0 } else { (0.9 * en.powf(-order_exp)).clamp(0.2, 5.0) };
                h *= fac;
            } else {
                self.rejected += 1;
                let fac = if finite { (0.9 * en.powf(-order_exp)).clamp(0.1, 0.9) } else { 0.25 };
                h *= fac;
            }
        }
        Ok(())
    }

    pub fn ray(&self) -> Ray {
        self.ray
    }

    pub fn accepted_steps(&self) -> usize {
        self.steps.len()
    }

    pub fn rejected_steps(&self) -> usize {
        self.rejected
    }

    /// Covered range of `t`, ordered.
    pub fn t_range(&self) -> (f64, f64) {
        let first = self.steps.first().expect("trajectory has at least one step");
        let last = self.steps.last().expect("trajectory has at least one step");
        let a = first.t0.to_f64();
        let b = (last.t0.clone() + last.h.clone()).to_f64();
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }

    fn locate(&self, t: &T) -> Option<&DenseStep<T>> {
        let (lo, hi) = self.t_range();
        let tf = t.to_f64();
        if tf < lo - 1e-12 * lo.abs().max(1.0) || tf > hi + 1e-12 * hi.abs().max(1.0) {
            return None;
        }
        let forward = self.steps[0].h > T::zero();
        let idx = self.steps.partition_point(|s| {
            let end = s.t0.clone() + s.h.clone();
            if forward {
                end < *t
            } else {
                end > *t
            }
        });
        self.steps.get(idx.min(self.steps.len() - 1))
    }

    /// `(u, du/dtau)` at `tau = dir * t`.
    pub fn at(&self, t: f64) -> Option<(Cx<T>, Cx<T>)> {
        let tt = T::from_f64(t);
        let s = self.locate(&tt)?;
        let [u, ud] = s.value(&tt);
        Some((u, ud))
    }

    /// `u` at `tau = dir * t`.
    pub fn u(&self, t: f64) -> Option<Cx<T>> {
        self.at(t).map(|p| p.0)
    }

    /// Largest scaled residual `h |y'_dense - f(y_dense)|` over `per_step`
    /// interior points of every step, in units of the step's local tolerance
    /// `atol + rtol max(|y_start|, |y_end|)`.
    pub fn max_scaled_residual(&self, per_step: usize) -> f64 {
        let dir: Cx<T> = self.ray.unit();
        let f = |t: &T, y: &State<T>| rhs(&dir, &self.a, &self.b, t, y);
        self.steps.iter().map(|s| self.step_residual(s, &f, per_step)).fold(0.0, f64::max)
    }

    fn step_residual<F: Fn(&T, &State<T>) -> State<T>>(&self, s: &DenseStep<T>, f: &F, per_step: usize) -> f64 {
        let mut worst = 0.0f64;
        for j in 1..=per_step {
            let th = T::from_ratio(j as i64, per_step as i64 + 1);
            let t = s.t0.clone() + th * s.h.clone();
            let y = s.value(&t);
            let dy = s.slope(&t);
            let fy = f(&t, &y);
            for i in 0..2 {
                let r = cabs(&(dy[i].clone() - fy[i].clone())).to_f64() * s.h.to_f64().abs();
                let ends = cabs(&s.r[0][i]).to_f64().max(cabs(&(s.r[0][i].clone() + s.r[1][i].clone())).to_f64());
                worst = worst.max(r / (self.atol + self.rtol * ends));
            }
        }
        worst
    }
}

fn singular<T: Real>(y: &State<T>, t: f64, ray: Ray, b_abs: f64) -> Error {
    let u = cabs(&y[0]).to_f64();
    let typical = b_abs.powf(2.0 / 3.0) * t.abs().max(1.0).powf(1.0 / 3.0);
    if u > typical {
        // u ~ -tau_p / (4 (tau - tau_p)^2) near a pole
        let est = t + (t.abs() / (4.0 * u)).sqrt();
        Error::Invalid(format!("pole encountered on the path near tau = {est:.6} (ray {ray:?})"))
    } else {
        Error::Invalid(format!("zero of u encountered on the path near tau = {t:.6} (ray {ray:?})"))
    }
}

/// `u(tau)` for real `tau`, continued from the series seed.
pub fn eval_ode<T: Real>(ev: &SolutionEvaluator, tau: f64, tau_seed: Option<f64>) -> Result<Cx<T>> {
    eval_ode_ray(ev, Ray::Pos, tau, tau_seed)
}

/// `u(dir * t)` continued along the ray.
pub fn eval_ode_ray<T: Real>(ev: &SolutionEvaluator, ray: Ray, t: f64, t_seed: Option<f64>) -> Result<Cx<T>> {
    let tr = Trajectory::<T>::integrate(ev, ray, t, t_seed)?;
    tr.u(t).ok_or_else(|| Error::Invalid(format!("t = {t} outside the integrated range")))
}
