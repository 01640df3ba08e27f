//! Residues `gamma_{k,i}(n)` of the coefficients at `a^2 = -k^2`.

use crate::algebra::PartialFractions;
use crate::coeffs::CoeffTable;
use rug::Rational;
use std::io::Write;

/// Senior residues (`i >= 1`) from partial fractions and junior ones (`i <= 0`)
/// from the regular part of the Laurent expansion in `a^2 + k^2`.
#[derive(Clone, Debug)]
pub struct ResidueTable {
    junior_depth: usize,
    k_max: u64,
    /// Index `n - 1`.
    parts: Vec<PartialFractions>,
}

impl ResidueTable {
    /// Junior residues are kept for every `k <= k_max`, poles or not.
    pub fn build(table: &CoeffTable, junior_depth: usize, k_max: u64) -> Self {
        let ks: Vec<u64> = (1..=k_max).collect();
        let parts = (1..=table.n_max())
            .map(|n| PartialFractions::of(&table.get(n).to_q(), junior_depth, &ks))
            .collect();
        ResidueTable { junior_depth, k_max, parts }
    }

    pub fn n_max(&self) -> usize {
        self.parts.len()
    }

    pub fn junior_depth(&self) -> usize {
        self.junior_depth
    }

    pub fn k_max(&self) -> u64 {
        self.k_max
    }

    pub fn parts(&self, n: usize) -> Option<&PartialFractions> {
        n.checked_sub(1).and_then(|i| self.parts.get(i))
    }

    /// `gamma_{k,i}(n)`; `n = 0` stands for the vanishing constant term.
    /// `None` when the entry lies outside what was computed.
    pub fn gamma(&self, k: u64, i: i64, n: usize) -> Option<Rational> {
        if n == 0 {
            return Some(Rational::new());
        }
        let pf = self.parts(n)?;
        if i >= 1 {
            return pf.gamma(k, i);
        }
        if k > self.k_max && pf.seniors().get(&k).is_none() {
            return None;
        }
        pf.gamma(k, i)
    }

    /// Senior residue `gamma_{k,n_k}(n)` with the observed `n_k`.
    pub fn senior(&self, k: u64, n: usize) -> Option<Rational> {
        let g = self.parts(n)?.seniors().get(&k)?;
        g.last().cloned()
    }

    /// CSV rows `n,k,i,numerator,denominator`: every senior residue, then
    /// junior residues down to `i = 1 - junior_depth` for each `k <= k_max`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "n,k,i,numerator,denominator")?;
        for n in 1..=self.n_max() {
            let pf = &self.parts[n - 1];
            let mut ks: Vec<u64> = pf.seniors().keys().copied().collect();
            ks.extend(1..=self.k_max);
            ks.sort_unstable();
            ks.dedup();
            for k in ks {
                let top = pf.seniors().get(&k).map_or(0, |g| g.len() as i64);
                for i in (1 - self.junior_depth as i64..=top).rev() {
                    if let Some(g) = pf.gamma(k, i) {
                        writeln!(w, "{n},{k},{i},{},{}", g.numer(), g.denom())?;
                    }
                }
            }
        }
        Ok(())
    }
}
