use dp3::coeffs::CoeffTable;
use dp3::numerics::real::Cx;
use dp3::numerics::*;
use num_complex::Complex;
use proptest::prelude::*;
use rug::Rational;
use std::f64::consts::PI;

type C64 = Complex<f64>;

fn p(s: &str) -> CParam {
    s.parse().unwrap()
}

fn ev(a: &str, b: &str) -> SolutionEvaluator {
    SolutionEvaluator::new(p(a), p(b)).unwrap()
}

fn mp(x: f64) -> Mp {
    Mp::from_f64(x)
}

#[test]
fn parameter_strings() {
    let r = |n: i64, d: i64| Rational::from((n, d));
    assert_eq!(p("-2/3"), CParam::real(r(-2, 3)));
    assert_eq!(p("0.125"), CParam::real(r(1, 8)));
    assert_eq!(p("-0.6667"), CParam::real(r(-6667, 10000)));
    assert_eq!(p("1e-3"), CParam::real(r(1, 1000)));
    assert_eq!(p("i0.5"), CParam::imag(r(1, 2)));
    assert_eq!(p("0.5i"), CParam::imag(r(1, 2)));
    assert_eq!(p("2/7i"), CParam::imag(r(2, 7)));
    assert_eq!(p("i/2"), CParam::imag(r(1, 2)));
    assert_eq!(p("-i"), CParam::imag(r(-1, 1)));
    assert_eq!(p("-1/3+1/5i"), CParam::new(r(-1, 3), r(1, 5)));
    assert_eq!(p("0.5 - 2i"), CParam::new(r(1, 2), r(-2, 1)));
    assert_eq!(p("1e-2-3e-1i"), CParam::new(r(1, 100), r(-3, 10)));
    for bad in ["", "abc", "1/0x", "i+i", "2..3"] {
        assert!(bad.parse::<CParam>().is_err(), "{bad}");
    }
    assert_eq!(p("-1/3+1/5i").to_string(), "-1/3+1/5i");
}

#[test]
fn gamma_reference_values() {
    let g = gamma(&C64::new(0.5, 0.0)).unwrap();
    assert!((g.re - PI.sqrt()).abs() < 1e-13 * PI.sqrt() && g.im.abs() < 1e-15);
    // Gamma(1+i)
    let g = gamma(&C64::new(1.0, 1.0)).unwrap();
    assert!((g - C64::new(0.498_015_668_118_356, -0.154_949_828_301_810_7)).norm() < 1e-14);
    assert!(gamma(&C64::new(-2.0, 0.0)).is_none());
    // Gamma(1/3) to 38 digits
    let g = gamma(&Complex::new(Mp::from_ratio(1, 3), mp(0.0))).unwrap();
    let want = Mp(rug::Float::with_val(128, rug::Float::parse("2.678938534707747633655692940974677644128689").unwrap()));
    let err = (g.re - want).abs().to_f64();
    assert!(err < 1e-36, "{err}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn gamma_functional_equation(x in -4.5f64..6.0, y in -3.0f64..3.0) {
        prop_assume!(y.abs() > 0.05 || (x - x.round()).abs() > 0.05);
        let z = C64::new(x, y);
        let lhs = gamma(&(z + 1.0)).unwrap();
        let rhs = z * gamma(&z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(1e-300));
        // reflection
        let refl = gamma(&z).unwrap() * gamma(&(C64::new(1.0, 0.0) - z)).unwrap();
        let s = (z * PI).sin();
        let want = C64::new(PI, 0.0) / s;
        prop_assert!((refl - want).norm() <= 1e-11 * want.norm());
    }
}

#[test]
fn complex_recurrence_matches_exact_table() {
    let table = CoeffTable::build(14);
    for s in [Rational::from((3, 7)), Rational::from((-1, 4)), Rational::from(9)] {
        let sf = C64::new(s.to_f64(), 0.0);
        let c = coefficients(&sf, 14);
        let cm = coefficients(&Complex::new(Mp::from_rational(&s), mp(0.0)), 14);
        assert_eq!(c[0], C64::new(1.0, 0.0));
        for n in 1..=14 {
            let exact = table.get(n).eval(&s).unwrap();
            let e = exact.to_f64();
            assert!((c[n].re - e).abs() <= 1e-13 * e.abs(), "n={n} s={s}");
            let diff = (cm[n].re.clone() - Mp::from_rational(&exact)).abs().to_f64();
            assert!(diff <= 1e-34 * e.abs(), "n={n} s={s} mp diff {diff}");
        }
    }
}

#[test]
fn series_leading_terms() {
    let e = ev("-2/3", "1/8");
    let z = eval_series::<f64>(&e, &C64::new(0.0, 0.0)).unwrap();
    assert_eq!(z.u, C64::new(0.0, 0.0));
    assert!((z.du - C64::new(3.0 / 32.0, 0.0)).norm() < 1e-16);
    let t = 1e-3;
    let v = eval_series::<f64>(&e, &C64::new(t, 0.0)).unwrap();
    // next order: u_2 (b t^2 / a) with u_2 = 1/(a^2 + 1)
    let two = 3.0 / 32.0 * t * (1.0 + (1.0 / 1.0 + 0.0) / (4.0 / 9.0 + 1.0) * (-0.1875) * t * t);
    assert!((v.u.re - two).abs() < 1e-12 * t, "{}", v.u.re - two);
    // b = a: u = -tau/2 (1 + tau^2/(a^2+1) + ...)
    let e = ev("-1/3+1/5i", "-1/3+1/5i");
    let a = C64::new(-1.0 / 3.0, 0.2);
    let t = 1e-3;
    let v = eval_series::<f64>(&e, &C64::new(t, 0.0)).unwrap();
    let want = -t / 2.0 * (1.0 + t * t / (a * a + 1.0));
    assert!((v.u - want).norm() < 1e-10 * t);
}

#[test]
fn series_refuses_outside_margin() {
    let e = ev("-2/3", "1/8");
    let r = e.series_radius();
    assert!((r * r * (1.0 / 8.0) / (2.0 / 3.0) - 0.25).abs() < 1e-12);
    let err = eval_series::<f64>(&e, &C64::new(1.01 * r, 0.0)).unwrap_err();
    assert!(err.to_string().contains("use ODE continuation"));
    assert!(eval_series::<f64>(&e, &C64::new(r, 0.0)).is_ok());
}

#[test]
fn extended_series_agrees_with_double() {
    let e = ev("-2/3", "1/8").with_tol(1e-32).with_precision(Precision::Extended);
    assert_eq!(e.precision(), Precision::Extended);
    let x = eval_series::<Mp>(&e, &Complex::new(mp(1.0), mp(0.0))).unwrap();
    let d = eval_series::<f64>(&ev("-2/3", "1/8"), &C64::new(1.0, 0.0)).unwrap();
    assert!(x.tail < 1e-33);
    assert!((x.u.re.to_f64() - d.u.re).abs() < 1e-12);
    assert!((x.u.re.to_f64() - d.u.re).abs() <= d.tail * 10.0);
    assert!(x.u.im.to_f64() == 0.0);
}

#[test]
fn rejects_imaginary_integers() {
    for a in ["0", "i", "-2i", "3i"] {
        let e = SolutionEvaluator::new(p(a), p("1")).unwrap_err();
        assert!(e.to_string().contains("does not exist"), "{a}");
        assert!(monodromy_params::<f64>(&p(a)).unwrap_err().to_string().contains("does not exist"));
    }
    assert!(SolutionEvaluator::new(p("1/2i"), p("0")).is_err());
    // half odd multiples of i are fine: the odd solution
    let e = ev("3/2i", "1");
    let v = eval_series::<f64>(&e, &C64::new(0.2, 0.0)).unwrap();
    let w = eval_series::<f64>(&e, &C64::new(-0.2, 0.0)).unwrap();
    assert!((v.u + w.u).norm() == 0.0);
}

#[test]
fn figure_parameters_series_ode_agree() {
    for (a, b) in [("-2/3", "1/8"), ("-3", "10"), ("2/7i", "1/80"), ("5/7i", "1"), ("1/2i", "1")] {
        let d = series_ode_agreement(&ev(a, b), 20).unwrap();
        assert!(d < 1e-9, "a={a} b={b}: {d:e}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn random_series_ode_agree(re in -3.0f64..-0.05, im in -0.9f64..0.9, b in 0.05f64..10.0) {
        let a = CParam::new(Rational::from_f64(re).unwrap(), Rational::from_f64(im).unwrap());
        let e = SolutionEvaluator::new(a, CParam::real(Rational::from_f64(b).unwrap())).unwrap();
        let d = series_ode_agreement(&e, 12).unwrap();
        prop_assert!(d < 1e-9, "{d:e}");
    }
}

#[test]
fn dense_output_residual_stays_near_tolerance() {
    for (a, b) in [("-2/3", "1/8"), ("-3", "10"), ("2/7i", "1/80"), ("5/7i", "1"), ("1/2i", "1"), ("-1/3+1/5i", "2")] {
        let tr = Trajectory::<f64>::integrate(&ev(a, b), Ray::Pos, 40.0, None).unwrap();
        let r = tr.max_scaled_residual(3);
        assert!(r < 10.0, "a={a} b={b}: residual {r}");
        assert!(tr.accepted_steps() > 10);
    }
}

#[test]
fn odd_symmetry() {
    for (a, b) in [("-2/3", "1/8"), ("1/2i", "1"), ("-1/3+1/5i", "2")] {
        let r = oddness_check(&ev(a, b), 20.0, 300).unwrap();
        assert!(r.max_rel < 1e-9, "a={a}: {}", r.max_rel);
    }
}

#[test]
fn rotation_identity_holds_with_plus_i() {
    // u(tau; a) = i u(i tau; -a) at fixed b, which is what the expansion gives;
    // with -i the two sides are negatives of each other
    for (a, b) in [("-2/3", "1/8"), ("2/7i", "1/80"), ("-1/3+1/5i", "2")] {
        let r = rotation_check(&ev(a, b), 10.0, 200).unwrap();
        assert!(r.max_rel < 1e-9, "a={a}: {}", r.max_rel);
        assert!((r.alt_max_rel.unwrap() - 2.0).abs() < 1e-8);
    }
}

#[test]
fn pole_on_path_is_reported() {
    // real a > 0 gives a negative solution with a double pole near 1.048769
    let e = ev("1/2", "1");
    let msg = eval_ode::<f64>(&e, 30.0, None).unwrap_err().to_string();
    assert!(msg.contains("pole"), "{msg}");
    let at: f64 = msg.split("tau = ").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap();
    assert!((at - 1.048769).abs() < 1e-4, "{at}");
    assert!(eval_ode::<f64>(&e, 1.0, None).is_ok());
}

#[test]
fn monodromy_data_examples() {
    let m = monodromy_params::<f64>(&p("1/2i")).unwrap();
    assert!(m.s00.norm() < 1e-15);
    assert!((m.g11g22 - C64::new(0.5, 0.0)).norm() < 1e-15);
    let want = C64::new(0.0, -(2f64.ln()) / (2.0 * PI));
    assert!((m.nu_plus_1 - want).norm() < 1e-15);
    assert_eq!(m.branch, 0);
    assert!(m.passes(Gate::Strict));
    // a < 0: nu + 1 is purely imaginary, -(i/2pi) ln(1 - e^{2 pi a})
    let a = -2.0 / 3.0;
    let m = monodromy_params::<f64>(&p("-2/3")).unwrap();
    assert!(m.nu_plus_1.re.abs() < 1e-17);
    let l = (1.0 - (2.0 * PI * a).exp()).ln();
    assert!((m.nu_plus_1.im + l / (2.0 * PI)).abs() < 1e-15);
    assert_eq!(m.omega, m.g11g12);
    let m = monodromy_params::<Mp>(&p("1/2i")).unwrap();
    assert!(m.s00.norm_sqr().to_f64().sqrt() < 1e-36);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn monodromy_relations(re in -2.0f64..2.0, im in -0.95f64..0.95) {
        prop_assume!(re.abs() > 0.01);
        let a = CParam::new(Rational::from_f64(re).unwrap(), Rational::from_f64(im).unwrap());
        let m = monodromy_params::<f64>(&a).unwrap();
        let av = a.to_c64();
        let e = (av * PI).exp();
        let one = C64::new(1.0, 0.0);
        // g11 g22 (1 - e^{2 pi a}) = 1 and g12 = i e^{pi a} g22
        prop_assert!((m.g11g22 * (one - e * e) - one).norm() < 1e-12);
        prop_assert!((m.g11g12 - C64::new(0.0, 1.0) * e * m.g11g22).norm() < 1e-12 * m.g11g12.norm());
        prop_assert!((m.s00 - C64::new(0.0, 2.0) * (av * PI).cosh()).norm() < 1e-12 * m.s00.norm().max(1.0));
        // the branch minimises |Re(nu + 1)|
        prop_assert!(m.nu_plus_1.re.abs() <= 0.5 + 1e-12);
    }

    #[test]
    fn gates_on_the_imaginary_axis(alpha in -0.99f64..0.99) {
        prop_assume!(alpha.abs() > 0.01);
        prop_assume!((alpha.abs() - 1.0 / 6.0).abs() > 1e-9 && (alpha.abs() - 5.0 / 6.0).abs() > 1e-9);
        let a = CParam::imag(Rational::from_f64(alpha).unwrap());
        let m = monodromy_params::<f64>(&a).unwrap();
        let strict = alpha.abs() > 1.0 / 6.0 && alpha.abs() < 5.0 / 6.0;
        prop_assert_eq!(m.passes(Gate::Strict), strict);
        prop_assert!(m.passes(Gate::Weak));
        prop_assert!(AsymptoticEvaluator::<f64>::new(a, &CParam::from((1, 1))).is_ok());
    }
}

#[test]
fn gate_and_domain_errors_name_the_condition() {
    let e = AsymptoticEvaluator::<f64>::new(p("1/2+3/2i"), &p("1")).unwrap_err();
    assert!(e.to_string().contains("|Im a| < 1"));
    let e = AsymptoticEvaluator::<f64>::new(p("-1/2"), &p("-1")).unwrap_err();
    assert!(e.to_string().contains("positive"));
    let ae = AsymptoticEvaluator::<f64>::new(p("1/10i"), &p("1")).unwrap();
    let e = ae.require(Gate::Strict).unwrap_err();
    assert!(e.to_string().contains("< 1/6"));
    // the weak gate fails only through the branch, e.g. for real a > 0 far from 0
    let e = AsymptoticEvaluator::<f64>::new(p("1/5"), &p("1")).unwrap_err();
    assert!(e.to_string().contains("< 1/2"), "{e}");
    assert!(ae.u_asymptotic(&10.0, Form::NegativeA).is_err());
    assert!(ae.u_asymptotic(&10.0, Form::Suleimanov).is_err());
    assert!(ae.u_asymptotic(&-1.0, Form::General).is_err());
}

#[test]
fn forms_pick_themselves() {
    assert_eq!(Form::natural(&p("-2/3")), Form::NegativeA);
    assert_eq!(Form::natural(&p("1/2i")), Form::Suleimanov);
    assert_eq!(Form::natural(&p("-1/2i")), Form::Suleimanov);
    assert_eq!(Form::natural(&p("2/7i")), Form::ImaginaryA);
    assert_eq!(Form::natural(&p("-1/3+1/5i")), Form::General);
}

#[test]
fn closed_forms_share_the_leading_term() {
    for (a, b, f) in [("-2/3", "1/8", Form::NegativeA), ("2/7i", "1/80", Form::ImaginaryA), ("1/2i", "1", Form::Suleimanov)] {
        let ae = AsymptoticEvaluator::<f64>::new(p(a), &p(b)).unwrap();
        for t in [10.0, 100.0, 1000.0] {
            let lead = ae.leading(&t);
            let bb = p(b).to_c64().re;
            assert!((lead - bb.powf(2.0 / 3.0) * f64::cbrt(t) / 2.0).abs() < 1e-14 * lead);
            let u = ae.u_asymptotic(&t, f).unwrap();
            let osc = (u - lead).norm();
            assert!(osc < 3.0 * ae.amplitude(), "{a} {t}");
        }
    }
}

#[test]
fn general_shift_differs_from_closed_forms_by_i_pi() {
    // cosh(w + i pi) = -cosh(w): the general form mirrors every closed form
    // about the leading term
    for (a, b, f) in [
        ("-2/3", "1/8", Form::NegativeA),
        ("-3", "10", Form::NegativeA),
        ("2/7i", "1/80", Form::ImaginaryA),
        ("5/7i", "1", Form::ImaginaryA),
        ("1/2i", "1", Form::Suleimanov),
    ] {
        let ae = AsymptoticEvaluator::<f64>::new(p(a), &p(b)).unwrap();
        for t in [3.0, 17.0, 250.0] {
            let g = ae.u_asymptotic(&t, Form::General).unwrap();
            let c = ae.u_asymptotic(&t, f).unwrap();
            let lead = ae.leading(&t);
            let mirrored = C64::new(2.0 * lead, 0.0) - g;
            assert!((mirrored - c).norm() < 1e-11 * lead, "a={a} t={t}: {g} vs {c}");
        }
    }
}

#[test]
fn suleimanov_minus_half_flips_the_imaginary_part() {
    let plus = AsymptoticEvaluator::<f64>::new(p("1/2i"), &p("1")).unwrap();
    let minus = AsymptoticEvaluator::<f64>::new(p("-1/2i"), &p("1")).unwrap();
    for t in [5.0, 50.0] {
        let u = plus.u_asymptotic(&t, Form::Suleimanov).unwrap();
        let v = minus.u_asymptotic(&t, Form::Suleimanov).unwrap();
        assert_eq!(u.re, v.re);
        assert_eq!(u.im, -v.im);
    }
}

#[test]
fn negative_a_amplitude_vanishes_as_a_decreases() {
    let mut last = f64::INFINITY;
    for a in ["-1/2", "-1", "-2", "-3", "-5"] {
        let ae = AsymptoticEvaluator::<f64>::new(p(a), &p("1")).unwrap();
        let av = p(a).to_c64().re;
        let want = (1.0 / 3f64.powf(0.25)) * (-(-(2.0 * PI * av).exp()).ln_1p() / (2.0 * PI)).sqrt();
        assert!((ae.amplitude() - want).abs() < 1e-13 * want, "{a}");
        assert!(ae.amplitude() < last);
        last = ae.amplitude();
    }
    assert!(last < 1e-6);
}

#[test]
fn extended_asymptotics_agree_with_double() {
    for (a, b, f) in [("-2/3", "1/8", Form::NegativeA), ("2/7i", "1/80", Form::ImaginaryA), ("1/2i", "1", Form::General)] {
        let x = AsymptoticEvaluator::<Mp>::new(p(a), &p(b)).unwrap();
        let d = AsymptoticEvaluator::<f64>::new(p(a), &p(b)).unwrap();
        for t in [10.0, 1000.0, 1e5] {
            let ux: Cx<Mp> = x.u_asymptotic(&mp(t), f).unwrap();
            let ud = d.u_asymptotic(&t, f).unwrap();
            let diff = (C64::new(ux.re.to_f64(), ux.im.to_f64()) - ud).norm();
            assert!(diff < 1e-11 * ud.norm(), "a={a} t={t}: {diff:e}");
        }
    }
}

#[test]
fn comparison_for_a_minus_two_thirds() {
    let e = ev("-2/3", "1/8");
    let ae = AsymptoticEvaluator::<f64>::new(p("-2/3"), &p("1/8")).unwrap();
    let r = compare_asymptotics(&e, &ae, Form::NegativeA, (5.0, 40.0), 351).unwrap();
    assert_eq!(r.samples.len(), 351);
    assert_eq!(r.dyadic.len(), 3);
    assert!(r.decreasing, "{:?}", r.dyadic);
    assert!(r.strict_gate);
    assert!(r.decay_exponent.unwrap() > 0.0);
    // the solution's oscillation is in phase with the closed form
    assert!(r.phase_offset.unwrap().abs() < 0.3, "{:?}", r.phase_offset);
    // and half a period away from the general cosh form
    let g = compare_asymptotics(&e, &ae, Form::General, (5.0, 40.0), 351).unwrap();
    assert!((g.phase_offset.unwrap().abs() - PI).abs() < 0.3, "{:?}", g.phase_offset);
    // removing the 2ab/tau shift leaves an error that halves per doubling
    let c = &r.dyadic_ab_corrected;
    assert!(c[2].2 < 0.6 * c[1].2, "{c:?}");
}

#[test]
fn comparison_small_b_and_large_negative_a() {
    let e = ev("2/7i", "1/80");
    let ae = AsymptoticEvaluator::<f64>::new(p("2/7i"), &p("1/80")).unwrap();
    let r = compare_asymptotics(&e, &ae, Form::ImaginaryA, (5.0, 40.0), 200).unwrap();
    assert!(r.sup_error.is_finite());
    assert!(r.sup_rel_error < 1.5, "{}", r.sup_rel_error);

    let e = ev("-3", "10");
    let ae = AsymptoticEvaluator::<f64>::new(p("-3"), &p("10")).unwrap();
    let r = compare_asymptotics(&e, &ae, Form::NegativeA, (5.0, 40.0), 200).unwrap();
    // the oscillation is tiny here and the gap is the smooth 2ab/tau shift
    for s in &r.samples {
        let corr = ae.ab_correction(&s.tau).norm();
        assert!((s.abs_err - corr).abs() < 0.02 * corr, "tau={}", s.tau);
    }
}

#[test]
fn suleimanov_amplitude_and_frequency() {
    let e = ev("1/2i", "1");
    let f = fit_phase(&e, Component::Im, (10.0, 100.0), 20000).unwrap();
    let amp = (3f64.sqrt() * 2f64.ln() / (4.0 * PI)).sqrt();
    assert!((f.amplitude - amp).abs() < 0.05 * amp, "{f:?}");
    assert!(f.frequency_rel_err < 0.01, "{f:?}");
    assert!(f.extrema > 20);
}

#[test]
fn negative_a_frequency_over_a_decade() {
    let f = fit_phase(&ev("-2/3", "1/8"), Component::Re, (10.0, 100.0), 20000).unwrap();
    assert!(f.frequency_rel_err < 0.01, "{f:?}");
    assert!((f.expected_frequency - 27f64.sqrt() * 0.5).abs() < 1e-15);
}

#[test]
fn positivity_on_figure_parameters() {
    for (a, b) in [("-2/3", "1/8"), ("-3", "10"), ("2/7i", "1/80"), ("5/7i", "1"), ("1/2i", "1")] {
        let r = positivity_scan(&ev(a, b), 40.0, 2000).unwrap();
        assert!(r.passed, "a={a} b={b}: {r:?}");
        assert_eq!(r.points, 2000);
        if p(a).is_real() {
            assert_eq!(r.max_im_ratio, 0.0);
        }
    }
    assert!(positivity_scan(&ev("1/2", "1"), 40.0, 10).is_err());
}

#[test]
fn comparison_csv_is_deterministic() {
    let run = || {
        let e = ev("-2/3", "1/8");
        let ae = AsymptoticEvaluator::<f64>::new(p("-2/3"), &p("1/8")).unwrap();
        let r = compare_asymptotics(&e, &ae, Form::NegativeA, (5.0, 40.0), 50).unwrap();
        let mut buf = Vec::new();
        write_comparison_csv(&mut buf, &r).unwrap();
        buf
    };
    let a = run();
    assert_eq!(a, run());
    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "tau,re_u,im_u,re_u_as,im_u_as,abs_err");
    assert_eq!(lines.count(), 50);
    let w = window_sup_error(&ev("-2/3", "1/8"), &AsymptoticEvaluator::<f64>::new(p("-2/3"), &p("1/8")).unwrap(), Form::NegativeA, 10.0, 20.0, 400).unwrap();
    assert!(w > 0.0 && w < 0.05);
}
