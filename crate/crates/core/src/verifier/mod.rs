//! Ground-truth checking.
//!
//! Window checks run on every snapshot of a dynamic set; rectangle checks run
//! on every y-prefix of a planar set. Either way a violation names the
//! snapshot (`time`), the offending index range inside it, and a color. The
//! exhaustive searches in [`search`] and [`set_system`] certify or refute
//! colorability of small instances.

mod rectangles;
pub mod search;
pub mod set_system;
mod windows;

use std::fmt;

use crate::point::Rational;
use crate::sequence::Color;

pub use rectangles::{
    canonical_trapped_sets, naive_trapped_sets, rectangles_pass, verify_rectangles,
};
pub use search::{find_coloring, oracle_min_p, MinP, SearchBudget};
pub use set_system::{check_set_system_2colorable, SearchMode, SetSystem, TwoColoring};
pub use windows::{audit_semi_online, verify_gaps, verify_windows};

/// What a window must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WindowMode {
    /// Every window of exactly `w` points contains each of the colors `1..=k`.
    AllColorsPresent,
    /// Every window of `w` points, or the whole snapshot when it holds fewer
    /// than `w`, has pairwise distinct colors.
    NoRepeat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ViolationKind {
    WindowMissingColor,
    WindowRepeatedColor,
    GapTooLarge,
    InvariantB,
}

/// A failed check: at snapshot `time`, the index range `start..end` of the
/// value-sorted snapshot misses, repeats, or is a gap of `color`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub time: Rational,
    pub start: usize,
    pub end: usize,
    pub kind: ViolationKind,
    pub color: Color,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?} color {} at t={} indices {}..{}",
            self.kind, self.color, self.time, self.start, self.end
        )
    }
}

/// Checks every window of one snapshot, given its colors in value order.
/// Runs in `O(n + max_color)` plus the size of the output.
pub(crate) fn check_snapshot(
    colors: &[Color],
    w: usize,
    mode: WindowMode,
    k: u32,
    time: &Rational,
    out: &mut Vec<Violation>,
) {
    let n = colors.len();
    let width = match mode {
        WindowMode::AllColorsPresent => w,
        WindowMode::NoRepeat => w.min(n),
    };
    if width == 0 || n < width {
        return;
    }
    let palette = colors
        .iter()
        .map(|c| c.id())
        .max()
        .unwrap_or(0)
        .max(k) as usize;
    let mut count = vec![0usize; palette];
    // colors among 1..=k with zero count, and colors with count >= 2
    let mut missing = k as usize;
    let mut repeated = 0usize;
    let add = |c: Color, count: &mut Vec<usize>, missing: &mut usize, repeated: &mut usize| {
        let slot = &mut count[c.index()];
        *slot += 1;
        if *slot == 1 && c.id() <= k {
            *missing -= 1;
        }
        if *slot == 2 {
            *repeated += 1;
        }
    };
    let remove = |c: Color, count: &mut Vec<usize>, missing: &mut usize, repeated: &mut usize| {
        let slot = &mut count[c.index()];
        *slot -= 1;
        if *slot == 0 && c.id() <= k {
            *missing += 1;
        }
        if *slot == 1 {
            *repeated -= 1;
        }
    };
    for &c in &colors[..width] {
        add(c, &mut count, &mut missing, &mut repeated);
    }
    for start in 0..=n - width {
        if start > 0 {
            remove(colors[start - 1], &mut count, &mut missing, &mut repeated);
            add(colors[start + width - 1], &mut count, &mut missing, &mut repeated);
        }
        let (bad, kind) = match mode {
            WindowMode::AllColorsPresent => (missing > 0, ViolationKind::WindowMissingColor),
            WindowMode::NoRepeat => (repeated > 0, ViolationKind::WindowRepeatedColor),
        };
        if !bad {
            continue;
        }
        for (i, &cnt) in count.iter().enumerate() {
            let hit = match mode {
                WindowMode::AllColorsPresent => i < k as usize && cnt == 0,
                WindowMode::NoRepeat => cnt >= 2,
            };
            if hit {
                out.push(Violation {
                    time: time.clone(),
                    start,
                    end: start + width,
                    kind,
                    color: Color::new(i as u32 + 1),
                });
            }
        }
    }
}
