//! The audit suites behind `dp3 verify`.

use crate::config::Suite;
use dp3::algebra::PolyQ;
use dp3::coeffs::{check_positivity, decompose, m_of, strange_divisibility, CoeffTable};
use dp3::fence::{build_fence, connected_parts, fence_conjecture_audit, measured_profile};
use dp3::genfun_a::{
    a1n_closed, a2n_closed, ak_rational, ak_series_direct, delta_y, growth_check, laurent_from_table, pk_from_ak,
    pmn1_audit, r_at_half, r_poly, truncate_decimal, x_n,
};
use dp3::genfun_b::{b_series_from_table, closed_forms_pk, closed_forms_u2nk, solve_b_ode, XRat};
use dp3::reference;
use dp3::residues::{alternating_sums, c1k_determination, residue_sum_relations, v_tower, ResidueTable};
use rug::{Integer, Rational};

/// One audited statement.
#[derive(Clone, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    /// Scope on success, counterexample on failure.
    pub detail: String,
}

fn check(label: impl Into<String>, failure: Option<String>, scope: impl Into<String>) -> Check {
    match failure {
        None => Check { label: label.into(), passed: true, detail: scope.into() },
        Some(f) => Check { label: label.into(), passed: false, detail: f },
    }
}

/// The audit depth `--n` when none is given.
pub fn default_n(suite: Suite) -> usize {
    match suite {
        Suite::Structure => 60,
        Suite::Divisibility => 14,
        Suite::GenfunA => 30,
        Suite::GenfunB => 40,
        Suite::Residues => 40,
        Suite::Fence => 150,
        Suite::All => 60,
    }
}

/// Table size a suite needs at audit depth `n`; printed items fix a floor.
pub fn table_size(suite: Suite, n: usize) -> usize {
    let floor = match suite {
        Suite::Structure | Suite::Divisibility => 14,
        Suite::GenfunA => 1,
        Suite::GenfunB => 10,
        Suite::Residues => 20,
        Suite::Fence | Suite::All => 1,
    };
    n.max(floor)
}

pub fn run(suite: Suite, n: usize, depth: Option<usize>, table: &CoeffTable) -> Vec<Check> {
    match suite {
        Suite::Structure => structure(n, table),
        Suite::Divisibility => divisibility(n, table),
        Suite::GenfunA => genfun_a(n, depth.unwrap_or(30), table),
        Suite::GenfunB => genfun_b(n, table),
        Suite::Residues => residues(n, depth.unwrap_or(4), table),
        Suite::Fence => fence(n, table),
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn structure(n: usize, table: &CoeffTable) -> Vec<Check> {
    let head = reference::u_head();
    let first = (1..=5).find(|&k| table.get(k) != &head[k - 1]).map(|k| format!("u_{} = {}", 2 * k, table.get(k)));
    let shape = (1..=n).find(|&k| !decompose(table, k).matches_prediction).map(|k| {
        let d = decompose(table, k);
        format!("n = {k}: observed exponents {:?}, degree {}", d.exponents, d.m)
    });
    let positive = check_positivity(table).into_iter().find(|&k| k <= n).map(|k| format!("n = {k}"));
    let m_values = reference::M_VALUES.iter().find(|&&(k, m)| m_of(k) != m || decompose(table, k).m != m).map(
        |&(k, m)| format!("n = {k}: printed {m}, predicted {}, observed {}", m_of(k), decompose(table, k).m),
    );
    vec![
        check("first coefficients u_2..u_10", first, "n <= 5"),
        check("denominator exponents n_k = floor((n+1)/(k+1)) and degree m(n)", shape, format!("n <= {n}")),
        check("numerators have positive integer coefficients", positive, format!("n <= {n}")),
        check("printed m(n) values", m_values, "n <= 14"),
    ]
}

fn divisibility(n: usize, table: &CoeffTable) -> Vec<Check> {
    let mut out = Vec::new();
    for item in reference::divisibility_items() {
        let label = format!("strange divisibility, printed item k = {}, l = {}", item.k, item.l);
        let failure = match strange_divisibility(table, item.k, item.l) {
            Err(e) => Some(e.to_string()),
            Ok(r) if !r.divisible => Some(format!("(s + {}) does not divide the numerator", (item.l - 1).pow(2))),
            Ok(r) if r.numerator != item.expanded() => Some(format!("numerator {}", r.numerator)),
            Ok(_) => None,
        };
        out.push(check(label, failure, "exact factored numerator"));
    }
    let mut failure = None;
    let mut count = 0;
    'outer: for l in 2..=5usize {
        for k in 4..=3 * n {
            if (k + 2) % l != 0 || k + 2 < 3 * l || l * ((k + 2) / l - 1) - 1 > n {
                continue;
            }
            count += 1;
            match strange_divisibility(table, k, l) {
                Ok(r) if r.divisible => {}
                Ok(_) => {
                    failure = Some(format!("k = {k}, l = {l}"));
                    break 'outer;
                }
                Err(e) => {
                    failure = Some(format!("k = {k}, l = {l}: {e}"));
                    break 'outer;
                }
            }
        }
    }
    out.push(check("strange divisibility, all admissible (k, l) with l <= 5", failure, format!("{count} cases")));
    out
}

fn genfun_a(n: usize, k_range: usize, table: &CoeffTable) -> Vec<Check> {
    let mut out = Vec::new();
    let len = n.max(25) + 1;
    let direct = ak_series_direct(3, 12.max(len));
    let rows = reference::AK_ROWS.iter().enumerate().find_map(|(k, row)| {
        (1..=11).find(|&j| direct[k][j] != row[j - 1]).map(|j| format!("A_{k}[{j}] = {}", direct[k][j]))
    });
    out.push(check("printed rows A_k[n]", rows, "k <= 3, n <= 11"));

    let head = ak_series_direct(k_range, 3);
    let two = (0..=k_range).find_map(|k| {
        let want = (Integer::from(1) << (2 * k as u32 + 2)) - 1u32;
        (head[k][1] != 1 || head[k][2] != want).then(|| format!("k = {k}: A_k[1] = {}, A_k[2] = {}", head[k][1], head[k][2]))
    });
    out.push(check("A_k[1] = 1 and A_k[2] = 2^(2k+2) - 1", two, format!("k <= {k_range}")));

    let hyp = (1..len).find_map(|j| {
        let (c1, c2) = (a1n_closed(j as u32), a2n_closed(j as u32));
        (c1 != direct[1][j] || c2 != direct[2][j]).then(|| format!("n = {j}: {c1}, {c2}"))
    });
    out.push(check("hypergeometric closed forms of A_1[n] and A_2[n]", hyp, format!("n < {len}")));

    let tower = ak_rational(6);
    let shape = [0usize, 1, 2].iter().zip(reference::r_polys()).find_map(|(&j, want)| {
        let k = j + 1;
        let r = r_poly(&tower[k], k);
        (r.as_ref() != Some(&want.to_rational())).then(|| format!("R_{} = {:?}", 3 * j, r))
    });
    out.push(check("rational shape of A_k in w = A_0 and printed R_0, R_3, R_6", shape, "k = 1, 2, 3"));

    let nl = n.min(20);
    let lrow = ak_series_direct(10, nl + 1);
    let laurent = (1..=nl).find_map(|j| {
        let l = laurent_from_table(table, j, 11);
        (0..=10).find_map(|k| {
            let signed = if k % 2 == 0 { lrow[k][j].clone() } else { -lrow[k][j].clone() };
            (l[k] != signed).then(|| format!("n = {j}, k = {k}"))
        })
    });
    out.push(check("Laurent expansion of a^(2n) u_2n in 1/a^2", laurent, format!("n <= {nl}, k <= 10")));

    let np = n.min(30);
    let col_len = (1..=np).map(|j| m_of(j) + j).max().unwrap_or(0) + 1;
    let d = ak_series_direct(col_len, np + 1);
    let pk = (1..=np).find_map(|j| {
        let col: Vec<Integer> = (0..=m_of(j) + j).map(|k| d[k][j].clone()).collect();
        let (p, tail) = pk_from_ak(j, &col, j);
        if p != table.get(j).num {
            Some(format!("n = {j}: {p}"))
        } else if tail.iter().any(|t| *t != 0) {
            Some(format!("n = {j}: nonzero tail"))
        } else {
            None
        }
    });
    out.push(check("p_k(n) from the A_k columns, with vanishing tail", pk, format!("n <= {np}")));

    let mut growth = None;
    for k in 0..=3 {
        let Some(rh) = r_at_half(&tower, k) else {
            growth = Some(format!("k = {k}: R(1/2) unavailable"));
            break;
        };
        let row = &direct[k];
        if !row[1..].windows(2).all(|w| w[1] > w[0]) {
            growth = Some(format!("A_{k}[n] not increasing"));
            break;
        }
        let n0 = [1, 1, 4, 9][k];
        let rep = growth_check(row, k, n0, &rh);
        if !(rep.increasing && rep.below_limit) {
            growth = Some(format!("k = {k}: normalised ratio from n = {n0} fails"));
            break;
        }
    }
    out.push(check(
        "A_k[n] increasing; normalised ratio increasing toward its limit",
        growth,
        format!("k <= 3, n < {}, ratio from n = 1, 1, 4, 9", direct[0].len()),
    ));

    let a = pmn1_audit(60);
    let (d13, d14) = reference::delta_y_13_14();
    let margins = a
        .yz_margins
        .iter()
        .zip(reference::yz_margins())
        .find(|((_, m), (_, pm))| *m <= 0 || truncate_decimal(m, 3) != *pm)
        .map(|((k, m), _)| format!("n = {k}: {}", m.to_f64()));
    let ineq = if x_n(1) != reference::x1() {
        Some(format!("X_1 = {}", x_n(1)))
    } else if a.x_crossing != 39 || !a.x_increasing {
        Some(format!("X_n first exceeds 1 at n = {}", a.x_crossing))
    } else if a.dy_crossing != 14
        || truncate_decimal(&delta_y(13), 3) != d13
        || truncate_decimal(&delta_y(14), 3) != d14
    {
        Some(format!("Y_(n+1) - Y_n first exceeds 1 at n = {}", a.dy_crossing))
    } else {
        margins
    };
    out.push(check("proof inequalities X_n, Delta Y_n, Y_n + Z_n", ineq, "X_38 < 1 < X_39, n = 3..14"));
    out
}

fn genfun_b(n: usize, table: &CoeffTable) -> Vec<Check> {
    let mut out = Vec::new();
    for (k, want) in [(1, reference::b1()), (2, reference::b2())] {
        let failure = match solve_b_ode(k) {
            Err(e) => Some(e.to_string()),
            Ok(b) if XRat::from_ansatz(&b) != XRat::from_ansatz(&want) => Some(format!("{b:?}")),
            Ok(_) => None,
        };
        out.push(check(format!("B_{k} solves its ODE and equals the printed form"), failure, "exact"));
    }
    let closed = (0..=2).find_map(|k| {
        let s = match b_series_from_table(table, k, n + 1) {
            Ok(s) => s,
            Err(e) => return Some(e.to_string()),
        };
        (1..=n).find_map(|j| match closed_forms_u2nk(j, k) {
            Ok(c) if c == *s.coeff(j) => None,
            Ok(c) => Some(format!("n = {j}, k = {k}: {c}")),
            Err(e) => Some(format!("n = {j}, k = {k}: {e}")),
        })
    });
    out.push(check("closed forms of u_2n^(k) match the expansion at a = 0", closed, format!("k <= 2, n <= {n}")));

    let lists: [(usize, usize, &[u64]); 3] =
        [(0, 1, &reference::P0_HEAD), (1, 3, &reference::P1_FROM_3), (2, 5, &reference::P2_FROM_5)];
    let printed = lists.iter().find_map(|&(k, start, vals)| {
        vals.iter().zip(start..).find_map(|(&v, j)| match closed_forms_pk(j, k) {
            Ok(c) if c == v && table.get(j).num.coeff(k) == v => None,
            Ok(c) => Some(format!("p_{k}({j}) = {c}, table {}", table.get(j).num.coeff(k))),
            Err(e) => Some(format!("p_{k}({j}): {e}")),
        })
    });
    out.push(check("printed p_0, p_1, p_2 sequences", printed, "p_0(1..6), p_1(3..10), p_2(5..10)"));

    let sweep = (1..=n).find_map(|j| {
        (0..=2usize).filter(|&k| !(k == 1 && j < 3 || k == 2 && j < 5)).find_map(|k| match closed_forms_pk(j, k) {
            Ok(c) if c == table.get(j).num.coeff(k) => None,
            Ok(c) => Some(format!("p_{k}({j}) = {c}")),
            Err(e) => Some(format!("p_{k}({j}): {e}")),
        })
    });
    out.push(check("closed forms of p_0, p_1, p_2 match the numerators", sweep, format!("n <= {n}")));
    out
}

/// The printed v_{1,3} with two constants restored by one trailing digit;
/// the literal ones contradict the printed gamma_{1,1}(5).
fn restored(mut v: reference::VForm) -> reference::VForm {
    if (v.k, v.l) == (1, 3) {
        let mut c = v.num.coeffs().to_vec();
        c[5] *= 10;
        c[15] = Rational::from(1884368);
        v.num = PolyQ::new(c);
    }
    v
}

fn residues(n: usize, junior: usize, table: &CoeffTable) -> Vec<Check> {
    let mut out = Vec::new();
    let res = ResidueTable::build(table, junior.max(4), 10);
    let gammas = reference::gammas().into_iter().find_map(|(k, i, j, want)| {
        let got = res.gamma(k, i, j);
        (got.as_ref() != Some(&want)).then(|| format!("gamma_({k},{i})({j}) = {got:?}"))
    });
    out.push(check("printed residues gamma_(k,i)(n)", gammas, "partial fractions"));

    let c1k = match c1k_determination(&res, 8) {
        Err(e) => Some(e.to_string()),
        Ok(got) => got.iter().zip(reference::c1k()).enumerate().find_map(|(k, (g, w))| {
            (*g != w).then(|| format!("C_(1,{}) = {g}", k + 1))
        }),
    };
    out.push(check("printed constants C_(1,k)", c1k, "k <= 8"));

    let forms: Vec<_> = reference::v_forms().into_iter().map(restored).collect();
    for k in [1u64, 2] {
        let levels = forms.iter().filter(|v| v.k == k).map(|v| v.l).max().unwrap_or(-1);
        let failure = match v_tower(k, levels, &res) {
            Err(e) => Some(e.to_string()),
            Ok(vs) => forms
                .iter()
                .filter(|v| v.k == k)
                .find(|v| !vs[(v.l + 1) as usize].equals(&v.num, &v.den))
                .map(|v| format!("v_({k},{}) differs", v.l)),
        };
        let scope = if k == 1 { "l <= 3, two v_(1,3) constants read with a restored digit" } else { "l <= 1" };
        out.push(check(format!("closed forms v_({k},l)"), failure, scope));
    }

    let sums = (1..=n).find_map(|j| match residue_sum_relations(&res, j) {
        Err(e) => Some(e.to_string()),
        Ok(s) if !s.value_at_zero || s.first_order_sum == Some(false) || s.slope_at_zero == Some(false) => {
            Some(format!("n = {j}: {s:?}"))
        }
        Ok(_) => None,
    });
    out.push(check("residue sum relations", sums, format!("n <= {n}")));

    let alt = (1..=n).find_map(|j| match alternating_sums(table, &res, j) {
        Err(e) => Some(e.to_string()),
        Ok(a) if Rational::from(a.p_at_minus_one.clone()) != a.predicted
            || Rational::from(a.dp_at_minus_one.clone()) != a.predicted_derivative =>
        {
            Some(format!("n = {j}"))
        }
        Ok(_) => None,
    });
    out.push(check("numerator values at s = -1 from the k = 1 residues", alt, format!("n <= {n}")));
    out
}

fn fence(n: usize, table: &CoeffTable) -> Vec<Check> {
    let mut out = Vec::new();
    let measured = match measured_profile(table) {
        Ok(m) => m,
        Err(e) => return vec![check("content of the numerators is base * 3^z", Some(e.to_string()), "")],
    };
    out.push(check("content of the numerators is base * 3^z", None, format!("n <= {n}")));
    let predicted = match build_fence(n) {
        Ok(p) => p,
        Err(e) => return vec![check("fence grammar", Some(e.to_string()), "")],
    };
    let audit = fence_conjecture_audit(&measured, &predicted);
    out.push(check(
        "fence zeros z_n equal the grammar prediction",
        audit.first_mismatch.map(|j| format!("n = {j}: measured {}, predicted {}", measured.z(j), predicted.z(j))),
        format!("n <= {}", audit.n_max),
    ));
    out.push(check(
        "z_n = 0 exactly on plaindromes",
        audit.zero_set_violations.first().map(|j| format!("n = {j}")),
        format!("n <= {}", audit.n_max),
    ));
    let bk = audit.b_k_checks.iter().find(|c| !(c.1 && c.2)).map(|c| format!("k = {}", c.0));
    out.push(check("z_(b_k) = k and z_n < k below b_k", bk, format!("{} values of k", audit.b_k_checks.len())));
    let fam = audit.b_family_checks.iter().find(|c| !c.1).map(|c| format!("k = {}", c.0));
    out.push(check("solutions of z_n = k are the b_k^j", fam, format!("{} values of k", audit.b_family_checks.len())));
    let (parts, sims) = connected_parts(&measured);
    let areas = parts
        .iter()
        .zip(reference::AREAS)
        .find(|(p, a)| p.area != *a || p.area != p.predicted_area)
        .map(|(p, a)| format!("S_{} = {}, printed {a}", p.k, p.area))
        .or_else(|| sims.iter().find(|s| !s.holds).map(|s| format!("self-similarity fails at k = {}", s.k)));
    out.push(check("areas S_k of the connected parts", areas, format!("{} parts", parts.len().min(3))));
    out
}
