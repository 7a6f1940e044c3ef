//! Online coloring with `2k-1` colors: every run of at most `k` consecutive
//! points has pairwise distinct colors.
//!
//! A new point sees at most `k-1` neighbors on each side, so at most `2k-2`
//! colors are blocked and the smallest free color always exists. Insertions
//! only push existing points further apart, so older windows stay valid.

use crate::error::{Error, Result};
use crate::point::Rational;
use crate::sequence::{Color, ColoredSequence};

#[derive(Debug, Clone)]
pub struct OnlineColorer {
    k: u32,
    seq: ColoredSequence,
}

impl OnlineColorer {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        Ok(Self {
            k,
            seq: ColoredSequence::new(2 * k - 1)?,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of colors available, `2k-1`.
    pub fn palette(&self) -> u32 {
        2 * self.k - 1
    }

    pub fn sequence(&self) -> &ColoredSequence {
        &self.seq
    }

    /// Inserts and colors `value` with the smallest color absent from its
    /// `k-1` nearest neighbors on either side.
    pub fn insert(&mut self, value: Rational) -> Result<Color> {
        let at = self.seq.insert(value, None)?;
        let reach = self.k as usize - 1;
        let lo = at.saturating_sub(reach);
        let hi = (at + reach + 1).min(self.seq.len());
        let mut blocked = vec![false; self.palette() as usize];
        for i in (lo..hi).filter(|&i| i != at) {
            if let Some(c) = self.seq.color_at(i) {
                blocked[c.index()] = true;
            }
        }
        let free = Color::all(self.palette())
            .find(|c| !blocked[c.index()])
            .ok_or(Error::NoFreeColor {
                index: at,
                max: self.palette(),
            })?;
        self.seq.assign(at, free)?;
        Ok(free)
    }

    /// Every run of `min(k, n)` consecutive points has distinct colors.
    pub fn check_invariant(&self) -> bool {
        let w = (self.k as usize).min(self.seq.len()).max(1);
        self.seq.colors().windows(w).all(|win| {
            let mut seen = vec![false; self.palette() as usize];
            win.iter().all(|c| {
                let c = c.expect("online colorer leaves nothing uncolored");
                !std::mem::replace(&mut seen[c.index()], true)
            })
        })
    }
}
