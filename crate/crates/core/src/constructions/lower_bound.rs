//! The point set `P(n, a) = L ∪ B ∪ R` used against small window sizes:
//!
//! * `L = {(i - n, 2i) : 1 <= i <= n}`, rising to the left,
//! * `B = {(i, 0) : 1 <= i <= a}`, a bottom row in the middle,
//! * `R = {(n + a + i, 2n + 1 - 2i) : 1 <= i <= n}`, falling to the right.
//!
//! Sorted by height, `L` and `R` alternate.

use crate::error::{Error, Result};
use crate::geometry::{PlanarPointSet, Point};
use crate::point::TiePolicy;
use crate::int;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    Left,
    Bottom,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowerBoundSet {
    pub n: usize,
    pub a: usize,
    pub left: Vec<Point>,
    pub bottom: Vec<Point>,
    pub right: Vec<Point>,
}

impl LowerBoundSet {
    /// All points, `L` then `B` then `R`, exactly as defined (the bottom row
    /// shares its y coordinate).
    pub fn points(&self) -> Vec<Point> {
        self.left
            .iter()
            .chain(&self.bottom)
            .chain(&self.right)
            .cloned()
            .collect()
    }

    pub fn part(&self, index: usize) -> Part {
        if index < self.n {
            Part::Left
        } else if index < self.n + self.a {
            Part::Bottom
        } else {
            Part::Right
        }
    }

    pub fn len(&self) -> usize {
        2 * self.n + self.a
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// General-position version: the bottom row is lifted by less than one
    /// unit, left to right, so its points become distinct in y while every
    /// other order is kept.
    pub fn planar(&self) -> PlanarPointSet {
        PlanarPointSet::normalized(self.points(), TiePolicy::Perturb)
            .expect("perturbation never fails")
    }

    /// Parts of `L ∪ R` in order of increasing y.
    pub fn side_order(&self) -> Vec<Part> {
        let mut side: Vec<(&Point, Part)> = self
            .left
            .iter()
            .map(|p| (p, Part::Left))
            .chain(self.right.iter().map(|p| (p, Part::Right)))
            .collect();
        side.sort_by(|a, b| a.0.y.cmp(&b.0.y));
        side.into_iter().map(|(_, part)| part).collect()
    }

    /// Cardinalities and the alternation of `L` and `R` by height.
    pub fn self_check(&self) -> Result<()> {
        if self.left.len() != self.n || self.right.len() != self.n || self.bottom.len() != self.a {
            return Err(Error::SelfCheck("part sizes differ from (n, a, n)".into()));
        }
        if self.side_order().windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::SelfCheck("L and R do not alternate by height".into()));
        }
        let mut xs: Vec<_> = self.points().into_iter().map(|p| p.x).collect();
        xs.sort();
        if xs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::SelfCheck("x coordinates repeat".into()));
        }
        Ok(())
    }
}

pub fn build_lower_bound_set(n: usize, a: usize) -> Result<LowerBoundSet> {
    if n == 0 {
        return Err(Error::Parameter {
            name: "n",
            value: 0,
            range: "1..",
        });
    }
    let (ni, ai) = (n as i64, a as i64);
    let set = LowerBoundSet {
        n,
        a,
        left: (1..=ni).map(|i| Point::new(int(i - ni), int(2 * i))).collect(),
        bottom: (1..=ai).map(|i| Point::new(int(i), int(0))).collect(),
        right: (1..=ni)
            .map(|i| Point::new(int(ni + ai + i), int(2 * ni + 1 - 2 * i)))
            .collect(),
    };
    set.self_check()?;
    Ok(set)
}

/// `(floor(0.655 k), floor(1.677 k - 2.5))`, evaluated in integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LowerBoundParams {
    pub a: i64,
    pub b: i64,
    /// The bound behind these parameters only applies from `k = 100` on.
    pub vacuous: bool,
}

pub fn suggested_params(k: u32) -> Result<LowerBoundParams> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let k = k as i64;
    Ok(LowerBoundParams {
        a: (655 * k).div_euclid(1000),
        b: (1677 * k - 2500).div_euclid(1000),
        vacuous: k < 100,
    })
}
