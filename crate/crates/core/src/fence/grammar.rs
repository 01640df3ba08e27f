//! The predicted fence from its shape grammar.
//!
//! Both constructions walk a sequence of unit steps. Marked steps (falls
//! between shapes `A`, `B`, or the deformed arrows of `C_1^j`, `C_2^j`) take
//! their depth from the grammar, except that a landing point that is a
//! plaindrome sends the fence down to height 0.

use super::sequences::is_plaindrome;
use super::FenceProfile;
use super::Source;
use crate::error::{Error, Result};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShapeName {
    A,
    B,
    C,
    C1,
    C2,
}

/// A named shape given by its height offsets from the first point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape {
    pub name: ShapeName,
    pub offsets: Vec<i64>,
}

impl Shape {
    pub fn a() -> Self {
        Shape { name: ShapeName::A, offsets: vec![0, 1, 1, 1, 2, 1, 1, 2, 2, 1, 2, 2, 2, 3] }
    }

    pub fn b() -> Self {
        Shape { name: ShapeName::B, offsets: vec![0, 0, 1, 1, 0, 1, 1, 1, 2, 1, 1, 2, 2] }
    }

    pub fn c() -> Self {
        Shape { name: ShapeName::C, offsets: vec![0, 0, 1, 0, 0, 1, 1, 0, 1, 1] }
    }

    /// `C_1^j` or `C_2^j`: the first or second descending side of `C` drops by `j`.
    pub fn c_deformed(which: u8, j: i64) -> Self {
        let arrow = if which == 1 { 3 } else { 7 };
        let offsets = Shape::c()
            .offsets
            .iter()
            .enumerate()
            .map(|(i, &o)| if i >= arrow { o - (j - 1) } else { o })
            .collect();
        let name = if which == 1 { ShapeName::C1 } else { ShapeName::C2 };
        Shape { name, offsets }
    }
}

/// Depth label of a marked step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Depth {
    One,
    Two,
    ThreePlus,
}

impl Depth {
    fn nominal(self) -> i64 {
        match self {
            Depth::One => 1,
            Depth::Two => 2,
            Depth::ThreePlus => 3,
        }
    }
}

/// A marked step landing at `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FallEvent {
    /// Shape whose deformation (or whose end) produced the step.
    pub shape: ShapeName,
    pub label: Depth,
    pub n: u64,
    /// Height before the step.
    pub from: i64,
    /// Actual drop.
    pub drop: i64,
    pub resonant: bool,
}

struct Walker {
    n_max: usize,
    z: Vec<i64>,
    events: Vec<FallEvent>,
    grammar: String,
}

impl Walker {
    fn new(n_max: usize) -> Self {
        Walker { n_max, z: Vec::with_capacity(n_max), events: Vec::new(), grammar: String::new() }
    }

    fn done(&self) -> bool {
        self.z.len() >= self.n_max
    }

    fn last(&self) -> i64 {
        *self.z.last().expect("walk started")
    }

    fn plain(&mut self, d: i64) {
        if !self.done() {
            let h = self.last() + d;
            self.z.push(h);
        }
    }

    fn marked(&mut self, shape: ShapeName, label: Depth) {
        if self.done() {
            return;
        }
        let from = self.last();
        let n = self.z.len() as u64 + 1;
        let resonant = is_plaindrome(n) && label != Depth::One;
        let to = if resonant { 0 } else { from - label.nominal() };
        self.z.push(to);
        if label != Depth::One {
            self.events.push(FallEvent { shape, label, n, from, drop: from - to, resonant });
        }
    }

    fn finish(self) -> Result<(FenceProfile, Vec<FallEvent>, String)> {
        let mut heights = Vec::with_capacity(self.n_max);
        for (i, &h) in self.z.iter().take(self.n_max).enumerate() {
            if h < 0 {
                return Err(Error::Invalid(format!("fence drops below the axis at n = {}", i + 1)));
            }
            heights.push(h as u32);
        }
        Ok((FenceProfile { heights, source: Source::Predicted }, self.events, self.grammar))
    }
}

fn label_text(d: Depth) -> &'static str {
    match d {
        Depth::One => "1",
        Depth::Two => "2",
        Depth::ThreePlus => "3+",
    }
}

/// `A' 2 B 2 A 3+ B 2 A 2 B 3+ A ...` from `(1, 0)`.
pub fn build_fence_ab(n_max: usize) -> Result<(FenceProfile, Vec<FallEvent>, String)> {
    let mut w = Walker::new(n_max);
    if n_max == 0 {
        return w.finish();
    }
    let a = Shape::a();
    let b = Shape::b();
    // A with its first two segments cut, first point at height 0
    w.z.push(0);
    for win in a.offsets[2..].windows(2) {
        w.plain(win[1] - win[0]);
    }
    w.grammar.push_str("A'");
    let mut i = 0usize;
    while !w.done() {
        let label = if i % 3 == 2 { Depth::ThreePlus } else { Depth::Two };
        let next = if i % 2 == 0 { &b } else { &a };
        let prev = if i % 2 == 0 { ShapeName::A } else { ShapeName::B };
        w.marked(prev, label);
        for win in next.offsets.windows(2) {
            w.plain(win[1] - win[0]);
        }
        let _ = write!(w.grammar, " {} {:?}", label_text(label), next.name);
        i += 1;
    }
    w.finish()
}

/// Superscripts `1 2 2 1 3+ 2 1 2 3+` repeating over `C, C_1, C_2`.
const C_DIGITS: [Depth; 9] = [
    Depth::One,
    Depth::Two,
    Depth::Two,
    Depth::One,
    Depth::ThreePlus,
    Depth::Two,
    Depth::One,
    Depth::Two,
    Depth::ThreePlus,
];

/// `C C_1^2 C_2^2 C C_1^{3+} C_2^2 C C_1^2 C_2^{3+} ...` glued end to end from `(1, 0)`.
pub fn build_fence_c(n_max: usize) -> Result<(FenceProfile, Vec<FallEvent>, String)> {
    let mut w = Walker::new(n_max);
    if n_max == 0 {
        return w.finish();
    }
    let c = Shape::c();
    let steps: Vec<i64> = c.offsets.windows(2).map(|p| p[1] - p[0]).collect();
    w.z.push(0);
    let mut idx = 0usize;
    while !w.done() {
        let label = C_DIGITS[idx % 9];
        let (shape, arrow) = match idx % 3 {
            0 => (ShapeName::C, None),
            1 => (ShapeName::C1, Some(2usize)),
            _ => (ShapeName::C2, Some(6usize)),
        };
        for (s, &d) in steps.iter().enumerate() {
            if Some(s) == arrow {
                w.marked(shape, label);
            } else {
                w.plain(d);
            }
        }
        let _ = write!(w.grammar, "{}{:?}^{}", if idx == 0 { "" } else { " " }, shape, label_text(label));
        idx += 1;
    }
    w.finish()
}

/// The predicted profile `z_1..z_N` (shape-A/B construction).
pub fn build_fence(n_max: usize) -> Result<FenceProfile> {
    Ok(build_fence_ab(n_max)?.0)
}
