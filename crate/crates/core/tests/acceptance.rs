//! The ten acceptance criteria, one PASS/FAIL line each.
//!
//! Run with `cargo test -p dp3-core --test acceptance -- --nocapture`.
//! Sub-items that cannot hold as printed are listed in `KNOWN`; they are
//! computed faithfully, reported as FAIL, and only they may fail.

use dp3::coeffs::{check_positivity, decompose, m_of, strange_divisibility, CoeffTable};
use dp3::fence::{build_fence, connected_parts, fence_conjecture_audit, measured_profile};
use dp3::genfun_a::*;
use dp3::genfun_b::{b_series_from_table, closed_forms_pk, closed_forms_u2nk, solve_b_ode, RationalAnsatz, XRat};
use dp3::numerics::*;
use dp3::reference;
use dp3::residues::*;
use rug::{Integer, Rational};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

type Items = Vec<(&'static str, Result<(), String>)>;

/// `(criterion, sub-item, reason)` for sub-items that are unattainable as printed.
const KNOWN: [(u32, &str, &str); 2] = [
    (
        7,
        "printed v_(1,3)",
        "two printed constants lack a trailing digit (18902632366080, 1884368); the literal form contradicts the printed gamma_(1,1)(5)",
    ),
    (
        9,
        "error halves from [10,20] to [20,40] for (-2/3, 1/8)",
        "the error of the leading term decays like tau^(-1/3), driven by a b^(1/3) / (6 tau^(1/3))",
    ),
];

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first<T>(it: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Option<String>) -> Result<(), String> {
    match it.into_iter().find_map(|x| bad(&x)) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

fn c1_coefficients() -> Items {
    let table = CoeffTable::build(5);
    let head = reference::u_head();
    vec![(
        "u_2..u_10 equal the display",
        first(1..=5, |&n| (table.get(n) != &head[n - 1]).then(|| format!("u_{} = {}", 2 * n, table.get(n)))),
    )]
}

fn c2_structure(table: &CoeffTable) -> Items {
    vec![
        (
            "(n_k, m(n)) as predicted for n <= 60",
            first(1..=60, |&n| (!decompose(table, n).matches_prediction).then(|| format!("n = {n}"))),
        ),
        ("p_k(n) positive integers for n <= 60", ensure(check_positivity(table).is_empty(), || {
            format!("{:?}", check_positivity(table))
        })),
        (
            "printed m(n), n <= 14",
            first(reference::M_VALUES, |&(n, m)| {
                (m_of(n) != m || decompose(table, n).m != m).then(|| format!("n = {n}"))
            }),
        ),
    ]
}

fn c3_divisibility(table: &CoeffTable) -> Items {
    vec![(
        "8 printed factored numerators",
        first(reference::divisibility_items(), |it| match strange_divisibility(table, it.k, it.l) {
            Ok(r) if r.divisible && r.numerator == it.expanded() => None,
            Ok(_) => Some(format!("k = {}, l = {}", it.k, it.l)),
            Err(e) => Some(e.to_string()),
        }),
    )]
}

fn c4_tower() -> Items {
    let d = ak_series_direct(3, 26);
    let head = ak_series_direct(30, 3);
    vec![
        (
            "printed rows k <= 3, n <= 11",
            first(0..4, |&k| {
                (1..=11).find(|&n| d[k][n] != reference::AK_ROWS[k][n - 1]).map(|n| format!("A_{k}[{n}]"))
            }),
        ),
        (
            "A_k[1] = 1, A_k[2] = 2^(2k+2) - 1 for k <= 30",
            first(0..=30usize, |&k| {
                let want = (Integer::from(1) << (2 * k as u32 + 2)) - 1u32;
                (head[k][1] != 1 || head[k][2] != want).then(|| format!("k = {k}"))
            }),
        ),
        (
            "a1n_closed and a2n_closed agree with the series for n <= 25",
            first(1..=25usize, |&n| {
                (a1n_closed(n as u32) != d[1][n] || a2n_closed(n as u32) != d[2][n]).then(|| format!("n = {n}"))
            }),
        ),
    ]
}

fn c5_bridge(table: &CoeffTable) -> Items {
    let rows = ak_series_direct(10, 21);
    let np = 30;
    let cols = ak_series_direct((1..=np).map(|n| m_of(n) + n).max().unwrap(), np + 1);
    vec![
        (
            "Laurent expansion exact for n <= 20, k <= 10",
            first(1..=20usize, |&n| {
                let l = laurent_from_table(table, n, 11);
                (0..=10usize)
                    .find(|&k| l[k] != if k % 2 == 0 { rows[k][n].clone() } else { -rows[k][n].clone() })
                    .map(|k| format!("n = {n}, k = {k}"))
            }),
        ),
        (
            "pk_from_ak reproduces p_k(n) for n <= 30 with zero tail",
            first(1..=np, |&n| {
                let col: Vec<Integer> = (0..=m_of(n) + n).map(|k| cols[k][n].clone()).collect();
                let (p, tail) = pk_from_ak(n, &col, n);
                (p != table.get(n).num || tail.iter().any(|t| *t != 0)).then(|| format!("n = {n}"))
            }),
        ),
    ]
}

fn c6_b_tower(table: &CoeffTable) -> Items {
    let same = |k: usize, want: RationalAnsatz| -> Result<(), String> {
        let b = solve_b_ode(k).map_err(|e| e.to_string())?;
        ensure(XRat::from_ansatz(&b) == XRat::from_ansatz(&want), || format!("B_{k} = {b:?}"))
    };
    let lists: [(usize, usize, &[u64]); 3] =
        [(0, 1, &reference::P0_HEAD), (1, 3, &reference::P1_FROM_3), (2, 5, &reference::P2_FROM_5)];
    vec![
        ("B_1 as printed", same(1, reference::b1())),
        ("B_2 as printed", same(2, reference::b2())),
        (
            "u_2n^(0,1,2) closed forms match the series for n <= 40",
            first(0..=2usize, |&k| {
                let s = match b_series_from_table(table, k, 41) {
                    Ok(s) => s,
                    Err(e) => return Some(e.to_string()),
                };
                (1..=40).find(|&n| closed_forms_u2nk(n, k).ok().as_ref() != Some(s.coeff(n))).map(|n| format!("n = {n}, k = {k}"))
            }),
        ),
        (
            "printed p_0, p_1, p_2 sequences",
            first(lists, |&(k, start, vals)| {
                vals.iter().zip(start..).find_map(|(&v, n)| {
                    let c = closed_forms_pk(n, k).ok();
                    (c.as_ref() != Some(&Integer::from(v)) || table.get(n).num.coeff(k) != v)
                        .then(|| format!("p_{k}({n})"))
                })
            }),
        ),
    ]
}

fn c7_residues(table: &CoeffTable) -> Items {
    let res = ResidueTable::build(table, 4, 10);
    let forms = reference::v_forms();
    let towers = [v_tower(1, 3, &res), v_tower(2, 1, &res)];
    let form_ok = |k: u64, l: i64| -> Result<(), String> {
        let v = forms.iter().find(|v| v.k == k && v.l == l).unwrap();
        match &towers[k as usize - 1] {
            Err(e) => Err(e.to_string()),
            Ok(t) => ensure(t[(l + 1) as usize].equals(&v.num, &v.den), || format!("v_({k},{l}) differs")),
        }
    };
    let mut items: Items = vec![
        (
            "printed gamma values",
            first(reference::gammas(), |(k, i, n, want)| {
                (res.gamma(*k, *i, *n).as_ref() != Some(want)).then(|| format!("gamma_({k},{i})({n})"))
            }),
        ),
        (
            "C_(1,k), k <= 8",
            match c1k_determination(&res, 8) {
                Err(e) => Err(e.to_string()),
                Ok(c) => ensure(c == reference::c1k(), || format!("{c:?}")),
            },
        ),
        ("printed v_(1,-1)", form_ok(1, -1)),
        ("printed v_(1,0)", form_ok(1, 0)),
        ("printed v_(1,1)", form_ok(1, 1)),
        ("printed v_(1,2)", form_ok(1, 2)),
        ("printed v_(1,3)", form_ok(1, 3)),
        ("printed v_(2,-1)", form_ok(2, -1)),
        ("printed v_(2,0)", form_ok(2, 0)),
        ("printed v_(2,1)", form_ok(2, 1)),
    ];
    items.push((
        "sum relations for n <= 40",
        first(1..=40usize, |&n| match residue_sum_relations(&res, n) {
            Ok(s) if s.value_at_zero && s.first_order_sum != Some(false) && s.slope_at_zero != Some(false) => None,
            Ok(_) => Some(format!("n = {n}")),
            Err(e) => Some(e.to_string()),
        }),
    ));
    items
}

fn c8_fence(table: &CoeffTable) -> Items {
    let measured = match measured_profile(table) {
        Ok(m) => m,
        Err(e) => return vec![("gcd shape for n <= 150", Err(e.to_string()))],
    };
    let predicted = match build_fence(150) {
        Ok(p) => p,
        Err(e) => return vec![("grammar fence", Err(e.to_string()))],
    };
    let audit = fence_conjecture_audit(&measured, &predicted);
    let (parts, _) = connected_parts(&measured);
    let areas: Vec<Rational> = parts.iter().take(3).map(|p| p.area.clone()).collect();
    vec![
        ("gcd shape for n <= 150", ensure(measured.len() == 150, || format!("{} values", measured.len()))),
        ("measured = predicted pointwise", ensure(audit.first_mismatch.is_none(), || format!("{:?}", audit.first_mismatch))),
        ("zeros exactly on plaindromes", ensure(audit.zero_set_violations.is_empty(), || {
            format!("{:?}", audit.zero_set_violations)
        })),
        ("z_(b_k) = k for k <= 4", first(1..=4u32, |&k| {
            let bk = dp3::fence::b_k(k) as usize;
            (measured.z(bk) != k).then(|| format!("k = {k}: {}", measured.z(bk)))
        })),
        ("S_1, S_2, S_3 = 1, 7, 34", ensure(areas == reference::AREAS.map(Rational::from).to_vec(), || format!("{areas:?}"))),
    ]
}

fn ev(a: &str, b: &str) -> SolutionEvaluator {
    SolutionEvaluator::new(a.parse().unwrap(), b.parse().unwrap()).unwrap()
}

fn c9_numerics() -> Items {
    let figure = [("-2/3", "1/8"), ("-3", "10"), ("2/7i", "1/80"), ("5/7i", "1"), ("1/2i", "1")];
    let run = |f: &dyn Fn() -> Result<(), String>| f();
    let halving = run(&|| {
        let e = ev("-2/3", "1/8");
        let ae = AsymptoticEvaluator::<f64>::new("-2/3".parse().unwrap(), &"1/8".parse().unwrap())
            .map_err(|x| x.to_string())?;
        let w1 = window_sup_error(&e, &ae, Form::NegativeA, 10.0, 20.0, 400).map_err(|x| x.to_string())?;
        let w2 = window_sup_error(&e, &ae, Form::NegativeA, 20.0, 40.0, 400).map_err(|x| x.to_string())?;
        let r = compare_asymptotics(&e, &ae, Form::NegativeA, (10.0, 40.0), 50).map_err(|x| x.to_string())?;
        let c = &r.dyadic_ab_corrected;
        ensure(w2 <= 0.5 * w1, || {
            format!(
                "ratio {:.3} ({w1:.3e} -> {w2:.3e}); with the shift removed {:.3}",
                w2 / w1,
                c[1].2 / c[0].2
            )
        })
    });
    let sul = fit_phase(&ev("1/2i", "1"), Component::Im, (10.0, 100.0), 20000);
    let amp = (3f64.sqrt() * 2f64.ln() / (4.0 * PI)).sqrt();
    vec![
        (
            "series/ODE agreement 1e-9",
            first(figure, |&(a, b)| match series_ode_agreement(&ev(a, b), 20) {
                Ok(d) if d < 1e-9 => None,
                Ok(d) => Some(format!("a = {a}: {d:e}")),
                Err(e) => Some(e.to_string()),
            }),
        ),
        (
            "oddness",
            first(figure, |&(a, b)| match oddness_check(&ev(a, b), 20.0, 300) {
                Ok(r) if r.max_rel < 1e-9 => None,
                Ok(r) => Some(format!("a = {a}: {:e}", r.max_rel)),
                Err(e) => Some(e.to_string()),
            }),
        ),
        ("error halves from [10,20] to [20,40] for (-2/3, 1/8)", halving),
        (
            "Suleimanov amplitude within 5%",
            match &sul {
                Ok(f) => ensure((f.amplitude - amp).abs() < 0.05 * amp, || format!("{} vs {amp}", f.amplitude)),
                Err(e) => Err(e.to_string()),
            },
        ),
        (
            "phase frequency within 1% of 3^(3/2) b^(1/3)",
            match &sul {
                Ok(f) => ensure(f.frequency_rel_err < 0.01, || format!("{}", f.frequency_rel_err)),
                Err(e) => Err(e.to_string()),
            },
        ),
        (
            "positivity on the figure parameter sets",
            first(figure, |&(a, b)| match positivity_scan(&ev(a, b), 40.0, 2000) {
                Ok(r) if r.passed => None,
                Ok(r) => Some(format!("a = {a}: {r:?}")),
                Err(e) => Some(e.to_string()),
            }),
        ),
    ]
}

fn c10_inequalities() -> Items {
    let a = pmn1_audit(60);
    let (d13, d14) = reference::delta_y_13_14();
    let one = Rational::from(1);
    vec![
        ("X_38 < 1 < X_39", ensure(x_n(38) < one && x_n(39) > one, || format!("first crossing {}", a.x_crossing))),
        (
            "Delta Y_13 < 1 < Delta Y_14, printed decimals",
            ensure(
                delta_y(13) < one
                    && delta_y(14) > one
                    && truncate_decimal(&delta_y(13), 3) == d13
                    && truncate_decimal(&delta_y(14), 3) == d14,
                || format!("{} {}", delta_y(13).to_f64(), delta_y(14).to_f64()),
            ),
        ),
        (
            "twelve Y_n + Z_n - (n+1) to 3 places",
            first(a.yz_margins.iter().zip(reference::yz_margins()), |((n, m), (_, p))| {
                (truncate_decimal(m, 3) != *p).then(|| format!("n = {n}: {}", m.to_f64()))
            }),
        ),
    ]
}

#[test]
fn acceptance_criteria() {
    let mut unexpected = Vec::new();
    let mut report = |no: u32, name: &str, budget: Duration, f: &mut dyn FnMut() -> Items| {
        let t = Instant::now();
        let items = f();
        let dt = t.elapsed();
        let mut lines = Vec::new();
        for (sub, r) in &items {
            if let Err(e) = r {
                let known = KNOWN.iter().find(|k| k.0 == no && k.1 == *sub);
                match known {
                    Some(k) => lines.push(format!("    {sub}: {e} [unattainable as printed: {}]", k.2)),
                    None => {
                        lines.push(format!("    {sub}: {e}"));
                        unexpected.push(format!("criterion {no}: {sub}"));
                    }
                }
            }
        }
        if dt > budget {
            lines.push(format!("    over the time budget of {} s", budget.as_secs()));
            unexpected.push(format!("criterion {no}: time"));
        }
        let verdict = if lines.is_empty() { "PASS" } else { "FAIL" };
        println!("{verdict} {no:>2} {name} ({:.2} s)", dt.as_secs_f64());
        for l in lines {
            println!("{l}");
        }
    };
    let s = Duration::from_secs;
    report(1, "exact coefficients", s(1), &mut c1_coefficients);
    let mut table = CoeffTable::build(1);
    report(2, "structure", s(120), &mut || {
        table = CoeffTable::build(60);
        c2_structure(&table)
    });
    report(3, "divisibility", s(60), &mut || c3_divisibility(&table));
    report(4, "A-tower", s(30), &mut c4_tower);
    report(5, "Laurent bridge", s(120), &mut || c5_bridge(&table));
    report(6, "B-tower", s(120), &mut || c6_b_tower(&table));
    report(7, "residues", s(180), &mut || c7_residues(&table));
    report(8, "fence", s(1800), &mut || {
        table.extend_to(150);
        c8_fence(&table)
    });
    report(9, "numerics", s(300), &mut c9_numerics);
    report(10, "proof inequalities", s(10), &mut c10_inequalities);
    assert!(unexpected.is_empty(), "unexpected failures: {unexpected:?}");
}
