use dp3::coeffs::CoeffTable;
use dp3::fence::*;
use proptest::prelude::*;
use rug::Rational;
use std::sync::OnceLock;

const N: usize = 60;

fn measured() -> &'static FenceProfile {
    static M: OnceLock<FenceProfile> = OnceLock::new();
    M.get_or_init(|| measured_profile(&CoeffTable::build(N)).unwrap())
}

fn ternary(mut n: u64) -> String {
    let mut s = Vec::new();
    while n > 0 {
        s.push(char::from(b'0' + (n % 3) as u8));
        n /= 3;
    }
    s.iter().rev().collect()
}

#[test]
fn measured_examples() {
    let m = measured();
    assert_eq!(m.z(1), 0);
    assert_eq!(m.z(3), 1);
    for n in [3, 6, 7, 9, 10, 11] {
        assert_eq!(m.z(n), 1);
    }
    assert_eq!(m.z(12), 2);
    assert_eq!(m.z(39), 3);
    for n in 1..=40usize {
        assert_eq!(m.z(n) == 0, [1, 2, 4, 5, 8, 13, 14, 17, 26, 40].contains(&n), "n = {n}");
    }
}

#[test]
fn plaindrome_values() {
    assert_eq!(plaindromes(9), vec![1, 2, 4, 5, 8, 13, 14, 17, 26]);
    assert_eq!(triangular_decomposition(6), (3, 0));
    assert_eq!(triangular_decomposition(5), (2, 2));
    let brute: Vec<u64> = (1..5000u64).filter(|&n| is_plaindrome(n)).collect();
    assert_eq!(plaindromes(brute.len()), brute);
}

#[test]
fn b_values() {
    let bs: Vec<u64> = (1..=5).map(b_k).collect();
    assert_eq!(bs, vec![3, 12, 39, 120, 363]);
    for k in 1..=8u32 {
        assert_eq!(ternary(b_k(k)), format!("{}0", "1".repeat(k as usize)));
        let fam = b_family(k);
        assert_eq!(fam.len() as u32, (k + 2) * (k + 3) / 2);
        assert_eq!(fam[0].1, b_k(k));
        assert_eq!(fam[1].1, b_k(k) + 3u64.pow(k));
        assert_eq!(fam[2].1, fam[1].1 + 3u64.pow(k - 1));
        let n = fam.len();
        assert_eq!(fam[n - 1].1, b_k(k + 1) - 1);
        assert_eq!(fam[n - 2].1, b_k(k + 1) - 2);
        assert_eq!(fam[n - 3].1, b_k(k + 1) - 3);
        assert!(fam.windows(2).all(|w| w[0].1 < w[1].1));
    }
    assert_eq!(b_family(2)[1].1, 21);
    assert_eq!(b_family(2).last().unwrap().1, 38);
}

#[test]
fn shapes() {
    assert_eq!(Shape::a().offsets.len(), 14);
    assert_eq!(Shape::b().offsets.len(), 13);
    assert_eq!(Shape::c().offsets, vec![0, 0, 1, 0, 0, 1, 1, 0, 1, 1]);
    // p,p,p+1,p-1,p-1,p,p,p-1,p,p
    assert_eq!(Shape::c_deformed(1, 2).offsets, vec![0, 0, 1, -1, -1, 0, 0, -1, 0, 0]);
    // p,p,p+1,p,p,p+1,p+1,p-2,p-1,p-1
    assert_eq!(Shape::c_deformed(2, 3).offsets, vec![0, 0, 1, 0, 0, 1, 1, -2, -1, -1]);
}

#[test]
fn grammar_narrative_points() {
    let p = build_fence(400).unwrap();
    assert_eq!((p.z(12), p.z(13)), (2, 0));
    assert_eq!((p.z(25), p.z(26)), (2, 0));
    assert_eq!((p.z(39), p.z(40)), (3, 0));
    assert_eq!(p.z(120), 4);
    assert_eq!((p.z(121), p.z(122)), (0, 0));
}

#[test]
fn two_constructions_agree() {
    let (ab, _, g) = build_fence_ab(6000).unwrap();
    let (c, _, gc) = build_fence_c(6000).unwrap();
    assert_eq!(ab, c);
    assert!(g.starts_with("A' 2 B 2 A 3+ B 2 A 2 B 3+ A"));
    assert!(gc.starts_with("C^1 C1^2 C2^2 C^1 C1^3+ C2^2 C^1 C1^2 C2^3+ C^1"));
}

#[test]
fn measured_matches_grammar() {
    let p = build_fence(N).unwrap();
    let audit = fence_conjecture_audit(measured(), &p);
    assert!(audit.passed(), "{audit:?}");
    assert_eq!(audit.b_k_checks.len(), 3);
    assert_eq!(audit.b_family_checks.len(), 2);
}

#[test]
fn predicted_fence_through_part_five() {
    let p = build_fence(365).unwrap();
    let audit = fence_conjecture_audit(&p, &p);
    assert!(audit.passed(), "{audit:?}");
    assert_eq!(audit.b_family_checks.len(), 4);
    let (parts, sims) = connected_parts(&p);
    let areas: Vec<Rational> = parts.iter().map(|c| c.area.clone()).collect();
    assert_eq!(areas, [1, 7, 34, 142, 547].map(Rational::from).to_vec());
    assert!(parts.iter().all(|c| c.area == c.predicted_area));
    assert!(sims.iter().all(|s| s.holds));
    assert_eq!(parts[2].start, 14);
    assert_eq!(parts[2].end, 40);
    assert_eq!(sims[2].old_fragment_len, 26);
}

#[test]
fn resonance_locations() {
    let (_, events, _) = build_fence_c(1200).unwrap();
    let c1 = deep_resonances(&events, ShapeName::C1);
    assert_eq!(c1.iter().map(|r| r.0).take(2).collect::<Vec<_>>(), vec![121, 364]);
    assert_eq!(c1[0].1, 4);
    assert_eq!(c1[1].1, 5);
    for q in 5..=6u32 {
        assert_eq!(b_k(q - 1) + 1, c1[q as usize - 5].0);
    }
    let c2 = deep_resonances(&events, ShapeName::C2);
    assert_eq!(c2[0], (242, 4));
    assert!(events.iter().filter(|e| e.resonant).all(|e| is_plaindrome(e.n)));
}

#[test]
fn measured_areas() {
    let (parts, sims) = connected_parts(measured());
    let areas: Vec<Rational> = parts.iter().map(|c| c.area.clone()).collect();
    assert_eq!(areas, [1, 7, 34].map(Rational::from).to_vec());
    assert!(sims.iter().all(|s| s.holds));
}

#[test]
fn csv_export() {
    let (p, ev, _) = build_fence_ab(N).unwrap();
    let mut buf = Vec::new();
    write_profile_csv(&mut buf, measured(), &p, &ev).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,z_measured,z_predicted,resonance_flag");
    assert_eq!(lines.len(), N + 1);
    assert_eq!(lines[13], "13,0,0,1");
    assert_eq!(lines[12], "12,2,2,0");
}

proptest! {
    #[test]
    fn plaindromes_have_nondecreasing_digits(k in 1u64..800) {
        let a = plaindrome(k);
        let t = ternary(a);
        prop_assert!(t.as_bytes().windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(plaindrome(k + 1) > a);
    }

    #[test]
    fn fence_prefixes_are_stable(n in 1usize..800, m in 1usize..800) {
        let (lo, hi) = (n.min(m), n.max(m));
        let a = build_fence(lo).unwrap();
        let b = build_fence(hi).unwrap();
        prop_assert_eq!(&a.heights[..], &b.heights[..lo]);
    }
}
