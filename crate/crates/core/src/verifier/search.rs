//! Exhaustive colorability search over bottomless-rectangle instances.
//!
//! Points are colored in increasing y, so after coloring the `t`-th point only
//! the windows of the `t`-th prefix that contain it are new; a violated window
//! prunes the whole subtree. Colors are interchangeable, so a point may only
//! open the next unused color.

use crate::error::{Error, Result};
use crate::geometry::PlanarPointSet;
use crate::sequence::Color;

use super::WindowMode;

/// Largest instance an exhaustive search accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    max_points: usize,
}

impl SearchBudget {
    /// 14 points for two colors, 10 for three, and in general the largest `n`
    /// with `colors^n <= 3^10`.
    pub fn default_for(colors: u32) -> Self {
        let max_points = match colors {
            0 | 1 => 64,
            2 => 14,
            3 => 10,
            c => {
                let mut n = 0;
                let mut total = 1u64;
                while total * c as u64 <= 59_049 {
                    total *= c as u64;
                    n += 1;
                }
                n
            }
        };
        Self { max_points }
    }

    pub fn points(max_points: usize) -> Self {
        Self { max_points }
    }

    pub fn max_points(&self) -> usize {
        self.max_points
    }
}

/// Result of a completed search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub coloring: Option<Vec<Color>>,
    /// Partial assignments tried.
    pub nodes: u64,
}

struct Backtracker {
    order: Vec<usize>,
    x_rank: Vec<usize>,
    colors: u32,
    w: usize,
    mode: WindowMode,
    prefix: Vec<usize>,
    assignment: Vec<Option<Color>>,
    nodes: u64,
}

impl Backtracker {
    fn window_ok(&self, window: &[usize]) -> bool {
        let mut seen = 0u64;
        for &p in window {
            let bit = 1u64 << self.assignment[p].expect("prefix is colored").index();
            if self.mode == WindowMode::NoRepeat && seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        match self.mode {
            WindowMode::AllColorsPresent => seen.count_ones() == self.colors,
            WindowMode::NoRepeat => true,
        }
    }

    /// Checks the windows of the current prefix that contain position `pos`.
    fn ok_at(&self, pos: usize) -> bool {
        let len = self.prefix.len();
        let width = match self.mode {
            WindowMode::AllColorsPresent => self.w,
            WindowMode::NoRepeat => self.w.min(len),
        };
        if len < width {
            return true;
        }
        let first = (pos + 1).saturating_sub(width);
        let last = pos.min(len - width);
        (first..=last).all(|s| self.window_ok(&self.prefix[s..s + width]))
    }

    fn solve(&mut self, t: usize, used: u32) -> bool {
        if t == self.order.len() {
            return true;
        }
        let p = self.order[t];
        let pos = self
            .prefix
            .partition_point(|&q| self.x_rank[q] < self.x_rank[p]);
        self.prefix.insert(pos, p);
        for c in 1..=self.colors.min(used + 1) {
            self.assignment[p] = Some(Color::new(c));
            self.nodes += 1;
            if self.ok_at(pos) && self.solve(t + 1, used.max(c)) {
                return true;
            }
        }
        self.assignment[p] = None;
        self.prefix.remove(pos);
        false
    }
}

/// Searches for a coloring of `s` with `colors` colors under which every
/// canonical bottomless rectangle passes `mode` at window size `w`.
pub fn find_coloring(
    s: &PlanarPointSet,
    colors: u32,
    w: usize,
    mode: WindowMode,
    budget: SearchBudget,
) -> Result<SearchOutcome> {
    if colors == 0 {
        return Err(Error::ZeroColors);
    }
    if colors > 64 {
        return Err(Error::Parameter {
            name: "colors",
            value: colors.into(),
            range: "1..=64",
        });
    }
    if w == 0 {
        return Err(Error::ZeroWindow);
    }
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if s.len() > budget.max_points {
        return Err(Error::BudgetExceeded {
            points: s.len(),
            colors,
            max_points: budget.max_points,
        });
    }
    let mut x_rank = vec![0; s.len()];
    for (r, i) in s.x_order().into_iter().enumerate() {
        x_rank[i] = r;
    }
    let mut bt = Backtracker {
        order: s.y_order(),
        x_rank,
        colors,
        w,
        mode,
        prefix: Vec::with_capacity(s.len()),
        assignment: vec![None; s.len()],
        nodes: 0,
    };
    let found = bt.solve(0, 0);
    Ok(SearchOutcome {
        coloring: found.then(|| bt.assignment.iter().map(|c| c.expect("complete")).collect()),
        nodes: bt.nodes,
    })
}

/// The exact `p` of a small instance, with a coloring attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinP {
    pub w: usize,
    pub coloring: Vec<Color>,
}

/// Smallest `w` such that some `k`-coloring of `s` puts all `k` colors in
/// every bottomless rectangle holding at least `w` points. Refuses instances
/// beyond [`SearchBudget::default_for`].
pub fn oracle_min_p(s: &PlanarPointSet, k: u32) -> Result<MinP> {
    oracle_min_p_with_budget(s, k, SearchBudget::default_for(k))
}

pub fn oracle_min_p_with_budget(s: &PlanarPointSet, k: u32, budget: SearchBudget) -> Result<MinP> {
    for w in 1..=s.len() + 1 {
        let outcome = find_coloring(s, k, w, WindowMode::AllColorsPresent, budget)?;
        if let Some(coloring) = outcome.coloring {
            return Ok(MinP { w, coloring });
        }
    }
    unreachable!("no rectangle holds n + 1 points, so that size always succeeds")
}
