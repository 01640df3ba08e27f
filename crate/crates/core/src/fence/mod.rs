//! The 3-adic part `z_n` of the numerator content and its fence.

mod audit;
mod grammar;
mod sequences;

pub use audit::{
    connected_parts, deep_resonances, fence_conjecture_audit, part_bounds, write_profile_csv, ConnectedPart, FenceAudit,
    SelfSimilarity,
};
pub use grammar::{build_fence, build_fence_ab, build_fence_c, Depth, FallEvent, Shape, ShapeName};
pub use sequences::{b_family, b_k, b_sequences, is_plaindrome, plaindrome, plaindromes, triangular_decomposition};

use crate::algebra::val_p;
use crate::coeffs::CoeffTable;
use crate::error::{Error, Result};
use rug::ops::Pow;
use rug::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Source {
    Measured,
    Predicted,
}

/// Heights `z_1, ..., z_N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FenceProfile {
    pub heights: Vec<u32>,
    pub source: Source,
}

impl FenceProfile {
    pub fn len(&self) -> usize {
        self.heights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    /// `z_n`, 1-based.
    pub fn z(&self, n: usize) -> u32 {
        self.heights[n - 1]
    }
}

/// `z_n` from the content of the numerator:
/// content `= (n+1) 3^{z_n}` for odd `n+1`, `((n+1)/2) 3^{z_n}` for even `n+1`.
pub fn measured_profile(table: &CoeffTable) -> Result<FenceProfile> {
    let mut heights = Vec::with_capacity(table.n_max());
    for n in 1..=table.n_max() {
        let content = table.get(n).num.content();
        let base = if (n + 1) % 2 == 1 { n + 1 } else { (n + 1) / 2 };
        let violation = || Error::Invalid(format!("content of the numerator at n = {n} is not base * 3^z"));
        if !content.is_divisible_u(base as u32) {
            return Err(violation());
        }
        let rest = Integer::from(&content / base as u32);
        let z = val_p(&rest, 3);
        if rest != Integer::from(3).pow(z) {
            return Err(violation());
        }
        heights.push(z);
    }
    Ok(FenceProfile { heights, source: Source::Measured })
}
