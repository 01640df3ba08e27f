//! Published values the audits compare against, transcribed literally.
//!
//! Polynomials are in ascending powers of `s = a^2` (or of `x`, `z` where
//! noted). Nothing here is computed; a mismatch with the engines is a finding.

use crate::algebra::{FactoredDenom, PolyQ, PolyZ, RatFuncZ};
use crate::genfun_b::RationalAnsatz;
use rug::{Integer, Rational};

fn r(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

fn big(s: &str) -> Integer {
    s.parse().expect("literal integer")
}

fn pz(c: &[i64]) -> PolyZ {
    PolyZ::from_i64s(c)
}

/// `u_2, ..., u_10` with their printed numerators and denominators.
pub fn u_head() -> Vec<RatFuncZ> {
    let d = |p: &[(u64, u32)]| FactoredDenom::from_pairs(p.iter().copied());
    vec![
        RatFuncZ::raw(pz(&[1]), d(&[(1, 1)])),
        RatFuncZ::raw(pz(&[3]), d(&[(1, 1), (2, 1)])),
        RatFuncZ::raw(pz(&[18, 12]), d(&[(1, 2), (2, 1), (3, 1)])),
        RatFuncZ::raw(pz(&[180, 55]), d(&[(1, 2), (2, 1), (3, 1), (4, 1)])),
        RatFuncZ::raw(pz(&[10800, 12657, 3345, 273]), d(&[(1, 3), (2, 2), (3, 1), (4, 1), (5, 1)])),
    ]
}

/// `(n, m(n))` for `n = 1..=14`.
pub const M_VALUES: [(usize, usize); 14] = [
    (1, 0),
    (2, 0),
    (3, 1),
    (4, 1),
    (5, 3),
    (6, 3),
    (7, 5),
    (8, 6),
    (9, 8),
    (10, 8),
    (11, 12),
    (12, 12),
    (13, 14),
    (14, 16),
];

/// A worked divisibility item: the numerator equals `constant * prod factors`.
#[derive(Clone, Debug)]
pub struct DivisibilityItem {
    pub k: usize,
    pub l: usize,
    pub constant: Integer,
    pub factors: Vec<PolyZ>,
}

impl DivisibilityItem {
    pub fn expanded(&self) -> PolyZ {
        let mut p = PolyZ::constant(self.constant.clone());
        for f in &self.factors {
            p = p.mul(f);
        }
        p
    }
}

/// Descending coefficient strings to an ascending polynomial.
fn desc(c: &[&str]) -> PolyZ {
    PolyZ::new(c.iter().rev().map(|x| big(x)).collect())
}

pub fn divisibility_items() -> Vec<DivisibilityItem> {
    let item = |k, l, c: i64, factors: Vec<PolyZ>| DivisibilityItem { k, l, constant: Integer::from(c), factors };
    let s1 = pz(&[1, 1]);
    let s4 = pz(&[4, 1]);
    let s9 = pz(&[9, 1]);
    let f23 = pz(&[3, 2]);
    vec![
        item(4, 2, 1, vec![s1.clone(), pz(&[-36, 1])]),
        item(6, 2, 6, vec![s1.clone(), desc(&["6", "-455", "-4676", "-14400"])]),
        item(
            8,
            2,
            9,
            vec![
                s1,
                desc(&["139", "-16186", "-833966", "-15895545", "-128899248", "-449762544", "-533433600"]),
            ],
        ),
        item(7, 3, 27, vec![s4.clone(), desc(&["1", "-226", "-1622", "-1800"])]),
        item(
            10,
            3,
            81,
            vec![
                s4.clone(),
                desc(&["91", "-42555", "-2464380", "-55847687", "-573508161", "-1948922208", "-1828915200"]),
            ],
        ),
        item(
            13,
            3,
            81,
            vec![
                s4,
                desc(&[
                    "22702",
                    "-16646090",
                    "-4061032152",
                    "-413489537329",
                    "-23690569569496",
                    "-816781188263163",
                    "-17400650459323535",
                    "-229588162659563852",
                    "-1844596326528992619",
                    "-8649917000534607066",
                    "-21696167625164762400",
                    "-25866244844475840000",
                    "-11292874661376000000",
                ]),
            ],
        ),
        item(
            10,
            4,
            72,
            vec![s9.clone(), f23.clone(), desc(&["12", "-8896", "-272369", "-2858377", "-8718516", "-6350400"])],
        ),
        item(
            14,
            4,
            432,
            vec![
                s9,
                f23,
                desc(&[
                    "3876",
                    "-5756420",
                    "-1235083643",
                    "-114944445444",
                    "-6103132228087",
                    "-197871121155883",
                    "-3930475972840326",
                    "-47045222366439497",
                    "-336583346858652920",
                    "-1396061649915602256",
                    "-3170843975740838400",
                    "-3496575097981440000",
                    "-1434015830016000000",
                ]),
            ],
        ),
    ]
}

/// `A_k[n]` for `k = 0..=3`, `n = 1..=11`.
pub const AK_ROWS: [[u64; 11]; 4] = [
    [1, 3, 12, 55, 273, 1428, 7752, 43263, 246675, 1430715, 8414640],
    [1, 15, 162, 1525, 13308, 110691, 890724, 6996474, 53953605, 410084004, 3080715624],
    [1, 63, 1674, 30610, 452619, 5832225, 68232648, 743146326, 7659571500, 75562845204, 719340288408],
    [
        1,
        255,
        15924,
        546950,
        13372449,
        262072839,
        4394608056,
        65619977445,
        895717557900,
        11382479204349,
        136443463958412,
    ],
];

/// `R_0`, `R_3`, `R_6` of the rational tower, in powers of `w`.
pub fn r_polys() -> Vec<PolyZ> {
    vec![pz(&[1]), pz(&[1, 36, 135, 19]), pz(&[1, 216, 5952, 40875, 77922, 25821, 1262])]
}

/// `p_0(n)` for `n = 1..=6`.
pub const P0_HEAD: [u64; 6] = [1, 3, 18, 180, 10800, 226800];
/// `p_1(n)` for `n = 3..=10`.
pub const P1_FROM_3: [u64; 8] =
    [12, 55, 12657, 176022, 84817044, 10913409936, 11716666225920, 509615533152000];
/// `p_2(n)` for `n = 5..=10`.
pub const P2_FROM_5: [u64; 6] = [3345, 27825, 35168472, 4617359640, 7902853050240, 260852007650256];

/// `B_1(x) = x^2/64 - 11x/72 + 61/144 + (61/36)(x+2)/(x-2)^3`.
pub fn b1() -> RationalAnsatz {
    RationalAnsatz { poly: PolyQ::new(vec![r(61, 144), r(-11, 72), r(1, 64)]), poles: vec![r(0, 1), r(61, 36), r(61, 9)] }
}

pub fn b2() -> RationalAnsatz {
    RationalAnsatz {
        poly: PolyQ::new(vec![
            r(-74849, 259200),
            r(41993, 172800),
            r(-15923, 230400),
            r(1643, 172800),
            r(-263, 331776),
            r(1, 36864),
        ]),
        poles: vec![r(0, 1), r(-2099, 4800), r(2272, 2025), r(3721, 432)],
    }
}

/// `(k, i, n, gamma_{k,i}(n))`, junior entries with `i <= 0`.
pub fn gammas() -> Vec<(u64, i64, usize, Rational)> {
    vec![
        (1, 1, 3, r(37, 96)),
        (1, 1, 4, r(-17, 576)),
        (1, 0, 2, r(-1, 3)),
        (1, 0, 3, r(-431, 2304)),
        (1, 1, 5, r(-62743, 552960)),
        (1, 2, 7, r(-222359, 11059200)),
        (1, 2, 3, r(1, 4)),
        (2, 1, 4, r(-2, 27)),
        (2, 0, 1, r(-1, 3)),
        (2, 1, 2, r(-1, 1)),
        (2, 0, 2, r(-1, 3)),
        (2, -1, 2, r(-1, 9)),
    ]
}

/// `C_{1,k}` for `k = 1..=8`.
pub fn c1k() -> Vec<Rational> {
    vec![
        r(1, 8),
        r(-1, 18),
        r(9, 1024),
        r(-1, 1350),
        r(625, 15925248),
        r(-9, 6272000),
        Rational::from((117649, big("3057647616000"))),
        r(-2, 2531725875),
    ]
}

/// A closed form `num(z) / den(z)`.
#[derive(Clone, Debug)]
pub struct VForm {
    pub k: u64,
    pub l: i64,
    pub num: PolyQ,
    pub den: PolyQ,
}

fn sparse(terms: &[(usize, &str)]) -> PolyQ {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut c = vec![Rational::new(); deg + 1];
    for (p, v) in terms {
        c[*p] = Rational::from(big(v));
    }
    PolyQ::new(c)
}

fn q_poly(c: &[i64]) -> PolyQ {
    PolyQ::from_i64s(c)
}

/// `v_{1,l}` for `l = -1..=3` and `v_{2,l}` for `l = -1..=1`, with the
/// constants exactly as displayed.
pub fn v_forms() -> Vec<VForm> {
    let e8 = |e: u32| q_poly(&[-8, 0, 1]).pow(e);
    let one_m = |e: u32| q_poly(&[8, 0, -1]).scale(&r(1, 8)).pow(e);
    let d18 = q_poly(&[18, 0, 0, 1]);
    let v = |k, l, num, den| VForm { k, l, num, den };
    vec![
        v(1, -1, q_poly(&[0, 1]), one_m(2)),
        v(1, 0, q_poly(&[0, 0, 576, 0, -16, 0, 1]), one_m(3).scale(&r(576, 1))),
        v(
            1,
            1,
            sparse(&[(3, "4091904"), (5, "285696"), (7, "-1920"), (9, "80"), (11, "-1")]),
            e8(4).scale(&r(2592, 1)),
        ),
        v(
            1,
            2,
            sparse(&[
                (2, "12740198400"),
                (4, "-6834585600"),
                (6, "-946999296"),
                (8, "-10810368"),
                (10, "198784"),
                (12, "-3128"),
                (14, "-25"),
            ]),
            e8(5).scale(&r(1166400, 1)),
        ),
        v(
            1,
            3,
            sparse(&[
                (3, "-131784612249600"),
                (5, "1890263236608"),
                (7, "14900362739712"),
                (9, "215484420096"),
                (11, "5050358784"),
                (13, "-153847552"),
                (15, "188436"),
                (17, "-7365"),
                (19, "25"),
            ]),
            e8(6).scale(&Rational::from(big("2687385600"))),
        ),
        v(2, -1, q_poly(&[0, 0, -1]), d18.scale(&r(1, 18)).pow(2)),
        v(2, 0, q_poly(&[0, 0, 0, -15552, 0, 0, 54, 0, 0, -3]), d18.pow(3).scale(&r(4, 1))),
        v(
            2,
            1,
            sparse(&[(1, "-6046617600"), (4, "-2687385600"), (7, "284788224"), (10, "-468180"), (13, "4464"), (16, "25")]),
            d18.pow(4).scale(&r(172800, 1)),
        ),
    ]
}

/// `S_1, S_2, S_3`.
pub const AREAS: [u64; 3] = [1, 7, 34];

/// `X_1 = 2^5 / 3^5`.
pub fn x1() -> Rational {
    r(32, 243)
}

/// `Delta Y_13` and `Delta Y_14` to three decimals (truncated).
pub fn delta_y_13_14() -> (Rational, Rational) {
    (r(992, 1000), r(1021, 1000))
}

/// `Y_n + Z_n - (n+1)` for `n = 3..=14`, truncated to three decimals.
pub fn yz_margins() -> Vec<(u32, Rational)> {
    [45, 133, 258, 414, 599, 810, 1045, 1303, 1584, 1886, 2208, 2552]
        .iter()
        .zip(3u32..)
        .map(|(&m, n)| (n, r(m, 1000)))
        .collect()
}
