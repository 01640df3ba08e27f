//! Checks on measured and predicted fences.

use super::grammar::{FallEvent, ShapeName};
use super::sequences::{b_family, b_k, is_plaindrome};
use super::FenceProfile;
use rug::Rational;
use std::io::Write;

#[derive(Clone, Debug, PartialEq)]
pub struct FenceAudit {
    pub n_max: usize,
    /// First `n` where measured and predicted differ.
    pub first_mismatch: Option<usize>,
    /// `n` where `z_n = 0` and `n` is not a plaindrome, or the reverse.
    pub zero_set_violations: Vec<usize>,
    /// `(k, z_n < k for n < b_k, z_{b_k} = k)` for `b_k <= N`.
    pub b_k_checks: Vec<(u32, bool, bool)>,
    /// `(k, solutions of z_n = k below b_{k+1} are exactly b_k^j)` for `b_{k+1} - 1 <= N`.
    pub b_family_checks: Vec<(u32, bool)>,
}

impl FenceAudit {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
            && self.zero_set_violations.is_empty()
            && self.b_k_checks.iter().all(|c| c.1 && c.2)
            && self.b_family_checks.iter().all(|c| c.1)
    }
}

pub fn fence_conjecture_audit(measured: &FenceProfile, predicted: &FenceProfile) -> FenceAudit {
    let n_max = measured.len().min(predicted.len());
    let first_mismatch = (1..=n_max).find(|&n| measured.z(n) != predicted.z(n));
    let zero_set_violations =
        (1..=n_max).filter(|&n| (measured.z(n) == 0) != is_plaindrome(n as u64)).collect();
    let mut b_k_checks = Vec::new();
    let mut b_family_checks = Vec::new();
    for k in 1u32.. {
        let bk = b_k(k) as usize;
        if bk > n_max {
            break;
        }
        let below = (1..bk).all(|n| measured.z(n) < k);
        b_k_checks.push((k, below, measured.z(bk) == k));
        let next = b_k(k + 1) as usize;
        if next - 1 <= n_max {
            let found: Vec<u64> = (1..next).filter(|&n| measured.z(n) == k).map(|n| n as u64).collect();
            let mut want: Vec<u64> = b_family(k).into_iter().map(|(_, v)| v).collect();
            want.sort_unstable();
            b_family_checks.push((k, found == want));
        }
    }
    FenceAudit { n_max, first_mismatch, zero_set_violations, b_k_checks, b_family_checks }
}

/// `[b_{k-1} + 2, b_k + 1]`, with `b_0 = 0`.
pub fn part_bounds(k: u32) -> (usize, usize) {
    let lo = if k == 1 { 0 } else { b_k(k - 1) as usize };
    (lo + 2, b_k(k) as usize + 1)
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConnectedPart {
    pub k: u32,
    pub start: usize,
    pub end: usize,
    /// Sum of `(z_n + z_{n+1})/2` over the part.
    pub area: Rational,
    /// `((2k-1) 3^k + 1)/4`.
    pub predicted_area: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SelfSimilarity {
    pub k: u32,
    /// Heights on `[b_{k-1}+2, b_k]` equal those on `[b_k+2, 2 b_k - b_{k-1}]`.
    pub holds: bool,
    /// `b_k - b_{k-1} - 1`.
    pub old_fragment_len: usize,
}

/// Areas of every connected part inside the profile and the self-similarity
/// of consecutive parts.
pub fn connected_parts(profile: &FenceProfile) -> (Vec<ConnectedPart>, Vec<SelfSimilarity>) {
    let n_max = profile.len();
    let mut parts = Vec::new();
    let mut sims = Vec::new();
    for k in 1u32.. {
        let (start, end) = part_bounds(k);
        if end > n_max {
            break;
        }
        let mut twice = 0u64;
        for n in start..end {
            twice += (profile.z(n) + profile.z(n + 1)) as u64;
        }
        let pk = 3u64.pow(k);
        parts.push(ConnectedPart {
            k,
            start,
            end,
            area: Rational::from((twice, 2)),
            predicted_area: Rational::from(((2 * k as u64 - 1) * pk + 1, 4)),
        });
    }
    for k in 1u32.. {
        let prev = if k == 1 { 0 } else { b_k(k - 1) as usize };
        let bk = b_k(k) as usize;
        let hi = 2 * bk - prev;
        if hi > n_max {
            break;
        }
        let len = bk - (prev + 2) + 1;
        let holds = (0..len).all(|d| profile.z(prev + 2 + d) == profile.z(bk + 2 + d));
        sims.push(SelfSimilarity { k, holds, old_fragment_len: len });
    }
    (parts, sims)
}

/// CSV with columns `n,z_measured,z_predicted,resonance_flag`.
pub fn write_profile_csv<W: Write>(
    mut w: W,
    measured: &FenceProfile,
    predicted: &FenceProfile,
    events: &[FallEvent],
) -> std::io::Result<()> {
    writeln!(w, "n,z_measured,z_predicted,resonance_flag")?;
    let n_max = measured.len().min(predicted.len());
    for n in 1..=n_max {
        let flag = events.iter().any(|e| e.resonant && e.n as usize == n);
        writeln!(w, "{n},{},{},{}", measured.z(n), predicted.z(n), u8::from(flag))?;
    }
    Ok(())
}

/// Resonant falls of the `C_1` or `C_2` arrows deeper than 3.
pub fn deep_resonances(events: &[FallEvent], shape: ShapeName) -> Vec<(u64, i64)> {
    events
        .iter()
        .filter(|e| e.shape == shape && e.resonant && e.drop > 3)
        .map(|e| (e.n, e.drop))
        .collect()
}
