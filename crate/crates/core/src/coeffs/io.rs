//! Line-oriented text format for coefficient tables.
//!
//! One record per line: `n | c_0 c_1 ... c_m | k^e k^e ...` where the `c_i`
//! are the numerator coefficients in ascending powers of `s` and each `k^e`
//! stands for `(s + k^2)^e`. Lines starting with `#` are comments.

use super::engine::CoeffTable;
use crate::algebra::{FactoredDenom, PolyZ, RatFuncZ};
use crate::error::{Error, Result};
use rug::Integer;
use std::io::{BufRead, Write};

pub fn write_table<W: Write>(table: &CoeffTable, mut out: W) -> std::io::Result<()> {
    writeln!(out, "# u_2n(s) = numerator / prod_k (s + k^2)^e")?;
    writeln!(out, "# n | numerator coefficients, ascending | k^e")?;
    for (i, u) in table.entries().iter().enumerate() {
        write!(out, "{} |", i + 1)?;
        for c in u.num.coeffs() {
            write!(out, " {c}")?;
        }
        write!(out, " |")?;
        for (k, e) in u.den.iter() {
            write!(out, " {k}^{e}")?;
        }
        writeln!(out)?;
    }
    Ok(())
}

pub fn parse_table<R: BufRead>(input: R) -> Result<CoeffTable> {
    let mut entries = Vec::new();
    for (idx, line) in input.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        let parts: Vec<&str> = t.split('|').collect();
        if parts.len() != 3 {
            return Err(err("expected three '|' separated fields"));
        }
        let n: usize = parts[0].trim().parse().map_err(|_| err("bad index"))?;
        if n != entries.len() + 1 {
            return Err(err("indices must run 1, 2, 3, ..."));
        }
        let num = parts[1]
            .split_whitespace()
            .map(|w| w.parse::<Integer>().map_err(|_| err("bad coefficient")))
            .collect::<Result<Vec<_>>>()?;
        let mut den = FactoredDenom::one();
        for w in parts[2].split_whitespace() {
            let (k, e) = w.split_once('^').ok_or_else(|| err("bad factor, expected k^e"))?;
            let k: u64 = k.parse().map_err(|_| err("bad factor index"))?;
            let e: u32 = e.parse().map_err(|_| err("bad factor exponent"))?;
            den.set(k, den.exp(k) + e);
        }
        entries.push(RatFuncZ::raw(PolyZ::new(num), den));
    }
    Ok(CoeffTable::from_entries(entries))
}
