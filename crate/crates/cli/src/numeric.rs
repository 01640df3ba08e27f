//! `dp3 eval` and `dp3 compare`.

use crate::config::{Format, FormArg};
use crate::Failure;
use dp3::numerics::{
    compare_asymptotics, eval_ode, eval_series, write_comparison_csv, AsymptoticEvaluator, CParam, ComparisonReport,
    Form, SolutionEvaluator,
};
use num_complex::Complex64;
use serde_json::json;
use std::io::Write;

fn param(name: &str, s: &str) -> Result<CParam, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("--{name}: {e}")))
}

/// `a` from `--a`, or `i alpha` from `--alpha`.
pub fn a_from(a: Option<&str>, alpha: Option<&str>) -> Result<String, Failure> {
    match (a, alpha) {
        (Some(a), None) => Ok(a.to_string()),
        (None, Some(al)) => {
            let v = param("alpha", al)?;
            if !v.is_real() {
                return Err(Failure::Usage("--alpha must be real".into()));
            }
            Ok(CParam::imag(v.re).to_string())
        }
        _ => Err(Failure::Usage("give exactly one of --a and --alpha".into())),
    }
}

fn evaluator(a: &str, b: &str, tol: Option<f64>) -> Result<SolutionEvaluator, Failure> {
    let ev = SolutionEvaluator::new(param("a", a)?, param("b", b)?).map_err(|e| Failure::Usage(e.to_string()))?;
    Ok(match tol {
        Some(t) => ev.with_tol(t),
        None => ev,
    })
}

fn u_at(ev: &SolutionEvaluator, tau: f64) -> Result<(Complex64, &'static str), Failure> {
    if tau.abs() < ev.seed() {
        let v = eval_series::<f64>(ev, &Complex64::new(tau, 0.0)).map_err(|e| Failure::Run(e.to_string()))?;
        return Ok((v.u, "series"));
    }
    // the solution is odd
    let u = eval_ode::<f64>(ev, tau.abs(), None).map_err(|e| Failure::Run(e.to_string()))?;
    Ok((if tau < 0.0 { -u } else { u }, "ode"))
}

pub fn eval<W: Write>(a: &str, b: &str, tau: &str, tol: Option<f64>, out: &mut W) -> Result<(), Failure> {
    let ev = evaluator(a, b, tol)?;
    let t = param("tau", tau)?;
    let (u, method) = if t.is_real() {
        u_at(&ev, t.re.to_f64())?
    } else {
        let z = t.to_c64();
        if z.norm() >= ev.seed() {
            return Err(Failure::Usage(format!(
                "complex tau = {t} lies outside the series disk |tau| < {:.6}",
                ev.seed()
            )));
        }
        (eval_series::<f64>(&ev, &z).map_err(|e| Failure::Run(e.to_string()))?.u, "series")
    };
    writeln!(out, "tau,re_u,im_u,method")?;
    writeln!(out, "{t},{:e},{:e},{method}", u.re, u.im)?;
    Ok(())
}

fn form_of(arg: FormArg, a: &CParam) -> Form {
    match arg {
        FormArg::Natural => Form::natural(a),
        FormArg::General => Form::General,
        FormArg::ImaginaryA => Form::ImaginaryA,
        FormArg::Suleimanov => Form::Suleimanov,
        FormArg::NegativeA => Form::NegativeA,
    }
}

pub struct CompareArgs<'a> {
    pub a: &'a str,
    pub b: &'a str,
    pub t1: f64,
    pub t2: f64,
    pub samples: usize,
    pub form: FormArg,
    pub format: Format,
    pub tol: Option<f64>,
}

pub fn compare<W: Write>(args: &CompareArgs, out: &mut W, log: &mut dyn Write) -> Result<(), Failure> {
    let ev = evaluator(args.a, args.b, args.tol)?;
    let a = param("a", args.a)?;
    let ae = AsymptoticEvaluator::<f64>::new(a.clone(), &param("b", args.b)?)
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let form = form_of(args.form, &a);
    let report = compare_asymptotics(&ev, &ae, form, (args.t1, args.t2), args.samples)
        .map_err(|e| Failure::Run(e.to_string()))?;
    match args.format {
        Format::Csv => write_comparison_csv(out, &report).map_err(|e| Failure::Run(e.to_string()))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report_json(&report))?)?,
        Format::Text => {
            return Err(Failure::Usage("compare writes csv or json".into()));
        }
    }
    writeln!(
        log,
        "form {:?}: sup |u - u_as| = {:e} on [{}, {}]; strict gate {}",
        report.form,
        report.sup_error,
        args.t1,
        args.t2,
        if report.strict_gate { "passes" } else { "fails" }
    )?;
    Ok(())
}

fn report_json(r: &ComparisonReport) -> serde_json::Value {
    let windows = |v: &[(f64, f64, f64)]| v.iter().map(|&(lo, hi, s)| json!([lo, hi, s])).collect::<Vec<_>>();
    json!({
        "form": format!("{:?}", r.form),
        "window": [r.window.0, r.window.1],
        "sup_error": r.sup_error,
        "sup_rel_error": r.sup_rel_error,
        "dyadic": windows(&r.dyadic),
        "dyadic_ab_corrected": windows(&r.dyadic_ab_corrected),
        "decreasing": r.decreasing,
        "decay_exponent": r.decay_exponent,
        "strict_gate": r.strict_gate,
        "phase_offset": r.phase_offset,
        "samples": r.samples.iter().map(|s| json!({
            "tau": s.tau,
            "u": [s.u.re, s.u.im],
            "u_as": [s.u_as.re, s.u_as.im],
            "abs_err": s.abs_err,
        })).collect::<Vec<_>>(),
    })
}
