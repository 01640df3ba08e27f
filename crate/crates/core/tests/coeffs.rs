use dp3::algebra::{PolyZ, RatFuncZ};
use dp3::coeffs::*;
use dp3::genfun_a::{a0_series, laurent_from_table};
use dp3::reference;
use proptest::prelude::*;
use rug::{Integer, Rational};
use std::sync::OnceLock;

const N: usize = 60;

fn table() -> &'static CoeffTable {
    static T: OnceLock<CoeffTable> = OnceLock::new();
    T.get_or_init(|| CoeffTable::build(N))
}

#[test]
fn first_five_coefficients() {
    let head = reference::u_head();
    for (n, want) in (1..=5).zip(&head) {
        assert_eq!(table().get(n), want, "n = {n}");
    }
    assert_eq!(CoeffTable::build(1).entries(), &head[..1]);
}

#[test]
fn denominators_stay_below_index() {
    for n in 1..=N {
        let u = table().get(n);
        assert!(u.den.max_k() <= n as u64);
        // (s + n^2) never cancels
        assert_eq!(u.den.exp(n as u64), 1, "n = {n}");
    }
}

#[test]
fn predicted_structure_examples() {
    assert_eq!(predicted_structure(5).1, 3);
    assert_eq!(predicted_structure(7).1, 5);
    assert_eq!(predicted_structure(2), (vec![(1, 1), (2, 1)], 0));
    for (n, m) in reference::M_VALUES {
        assert_eq!(m_of(n), m, "n = {n}");
        assert_eq!(decompose(table(), n).m, m, "n = {n}");
    }
}

#[test]
fn decomposition_examples() {
    let d = decompose(table(), 4);
    assert_eq!(d.exponents, vec![(1, 2), (2, 1), (3, 1), (4, 1)]);
    assert_eq!(d.m, 1);
    let d = decompose(table(), 1);
    assert_eq!((d.exponents.clone(), d.m, d.numerator.clone()), (vec![(1, 1)], 0, PolyZ::one()));
    assert_eq!(decompose(table(), 14).m, 16);
    assert_eq!(decompose(table(), 3).numerator, PolyZ::from_i64s(&[18, 12]));
    assert_eq!(decompose(table(), 5).numerator, PolyZ::from_i64s(&[10800, 12657, 3345, 273]));
}

#[test]
fn structure_holds_to_sixty() {
    for n in 1..=N {
        let d = decompose(table(), n);
        assert!(d.matches_prediction, "n = {n}: {:?} m = {}", d.exponents, d.m);
        let back = RatFuncZ::raw(d.numerator.clone(), dp3::algebra::FactoredDenom::from_pairs(d.exponents.clone()));
        assert_eq!(&back, table().get(n));
    }
    assert!(check_positivity(table()).is_empty());
}

#[test]
fn divisibility_items_reproduce() {
    for item in reference::divisibility_items() {
        let rep = strange_divisibility(table(), item.k, item.l).unwrap();
        assert!(rep.divisible, "k={} l={}", item.k, item.l);
        assert_eq!(rep.numerator, item.expanded(), "k={} l={}", item.k, item.l);
    }
}

#[test]
fn divisibility_beyond_the_items() {
    for l in 2..=5usize {
        for k in 4..=40usize {
            if (k + 2) % l != 0 || k + 2 < 3 * l {
                continue;
            }
            let need = l * ((k + 2) / l - 1) - 1;
            if need > N {
                continue;
            }
            let rep = strange_divisibility(table(), k, l).unwrap();
            assert!(rep.divisible, "k={k} l={l}");
        }
    }
}

#[test]
fn divisibility_preconditions() {
    assert!(strange_divisibility(table(), 5, 2).is_err());
    assert!(strange_divisibility(table(), 4, 1).is_err());
    let short = CoeffTable::build(3);
    let e = strange_divisibility(&short, 8, 2).unwrap_err();
    assert!(matches!(e, dp3::Error::TableTooShort { .. }));
}

#[test]
fn text_format_round_trip() {
    let mut buf = Vec::new();
    write_table(table(), &mut buf).unwrap();
    let back = parse_table(&buf[..]).unwrap();
    assert_eq!(back.entries(), table().entries());
    let mut again = Vec::new();
    write_table(&back, &mut again).unwrap();
    assert_eq!(buf, again);
    let text = String::from_utf8(buf).unwrap();
    assert!(text.contains("\n3 | 18 12 | 1^2 2^1 3^1\n"));
}

#[test]
fn text_format_errors() {
    for (bad, line) in [
        ("1 | 1 | 1^1\n3 | 1 | 1^1\n", 2),
        ("1 | x | 1^1\n", 1),
        ("# c\n1 | 1 | 1-1\n", 2),
        ("1 | 1\n", 1),
    ] {
        match parse_table(bad.as_bytes()) {
            Err(dp3::Error::Parse { line: l, .. }) => assert_eq!(l, line, "{bad:?}"),
            other => panic!("{bad:?}: {other:?}"),
        }
    }
}

#[test]
fn leading_laurent_coefficient_is_fuss_catalan() {
    let a0 = a0_series(N + 1);
    for n in 1..=N {
        let l = laurent_from_table(table(), n, 1);
        assert_eq!(l[0], *a0.coeff(n), "n = {n}");
    }
}

#[test]
fn extending_matches_building() {
    let mut t = CoeffTable::build(7);
    t.extend_to(12);
    assert_eq!(t.entries(), &table().entries()[..12]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]
    #[test]
    fn recurrence_holds_at_rational_points(p in -400i64..400, q in 1i64..50) {
        let s0 = Rational::from((p, q));
        let sq = (1..=30i64).any(|k| s0 == Rational::from(-k * k));
        prop_assume!(!sq);
        let t = CoeffTable::from_entries(table().entries()[..30].to_vec());
        prop_assert_eq!(t.check_recurrence_at(&s0), Some(true));
    }

    #[test]
    fn corrupted_entries_fail_the_recurrence(n in 2usize..20, p in 1i64..100) {
        let mut e = table().entries()[..20].to_vec();
        e[n - 1] = e[n - 1].scale_i64(2);
        let t = CoeffTable::from_entries(e);
        prop_assert_eq!(t.check_recurrence_at(&Rational::from((p, 7))), Some(false));
    }
}

#[test]
fn numerators_have_integer_content() {
    for n in 1..=N {
        let c = table().get(n).num.content();
        assert!(c > Integer::from(0));
    }
}
