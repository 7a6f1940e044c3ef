//! The ordered sequence of present points with their color slots, and the
//! gap/window views on it.
//!
//! Storage is a plain sorted vector with linear-time insertion. Sequences in
//! this crate stay below ~10^5 points, where the memmove is cheaper than any
//! balanced tree; a rope or order-statistic tree can replace it behind the
//! same methods.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::point::Rational;

/// A color id in `1..=k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u32);

impl Color {
    /// Color 1, the red of two-colorings.
    pub const RED: Color = Color(1);
    /// Color 2.
    pub const BLUE: Color = Color(2);

    /// Panics if `id` is zero.
    pub fn new(id: u32) -> Self {
        assert!(id >= 1, "colors are numbered from 1");
        Color(id)
    }

    pub fn id(self) -> u32 {
        self.0
    }

    /// Zero-based index, for per-color tables.
    pub fn index(self) -> usize {
        (self.0 - 1) as usize
    }

    /// All colors `1..=k`.
    pub fn all(k: u32) -> impl Iterator<Item = Color> {
        (1..=k).map(Color)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GapKind {
    First,
    Internal,
    Last,
    WholeLine,
}

/// A maximal run of consecutive points without color `color`, as the
/// half-open index range `start..end`. First and last gaps may be empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gap {
    pub color: Color,
    pub start: usize,
    pub end: usize,
    pub kind: GapKind,
}

impl Gap {
    pub fn count(&self) -> usize {
        self.end - self.start
    }

    pub fn range(&self) -> Range<usize> {
        self.start..self.end
    }
}

/// Every contiguous index range of exactly `w` positions in a sequence of
/// length `len`; nothing when `len < w`.
pub fn windows(len: usize, w: usize) -> impl Iterator<Item = Range<usize>> {
    assert!(w >= 1, "window size must be at least 1");
    let count = (len + 1).saturating_sub(w);
    (0..count).map(move |s| s..s + w)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredSequence {
    k: u32,
    positions: Vec<Rational>,
    colors: Vec<Option<Color>>,
    // occ[c] holds the sorted indices colored c+1
    occ: Vec<Vec<usize>>,
}

impl ColoredSequence {
    pub fn new(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroColors);
        }
        Ok(Self {
            k,
            positions: Vec::new(),
            colors: Vec::new(),
            occ: vec![Vec::new(); k as usize],
        })
    }

    /// Builds a sequence from parallel position and color lists.
    pub fn from_parts(k: u32, positions: Vec<Rational>, colors: Vec<Option<Color>>) -> Result<Self> {
        let mut seq = Self::new(k)?;
        if positions.len() != colors.len() {
            return Err(Error::ColoringLength {
                expected: positions.len(),
                got: colors.len(),
            });
        }
        if let Some(w) = positions.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::DuplicateValue(w[1].clone()));
        }
        for (i, c) in colors.iter().enumerate() {
            if let Some(c) = c {
                seq.check_color(*c)?;
                seq.occ[c.index()].push(i);
            }
        }
        seq.positions = positions;
        seq.colors = colors;
        Ok(seq)
    }

    fn check_color(&self, c: Color) -> Result<()> {
        if c.id() > self.k {
            return Err(Error::ColorOutOfRange {
                color: c.id(),
                max: self.k,
            });
        }
        Ok(())
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn positions(&self) -> &[Rational] {
        &self.positions
    }

    pub fn colors(&self) -> &[Option<Color>] {
        &self.colors
    }

    pub fn color_at(&self, index: usize) -> Option<Color> {
        self.colors[index]
    }

    /// Sorted indices currently colored `c`.
    pub fn occurrences(&self, c: Color) -> &[usize] {
        &self.occ[c.index()]
    }

    pub fn index_of(&self, value: &Rational) -> Option<usize> {
        self.positions.binary_search(value).ok()
    }

    /// Inserts `value` with the given slot and returns its index.
    pub fn insert(&mut self, value: Rational, color: Option<Color>) -> Result<usize> {
        if let Some(c) = color {
            self.check_color(c)?;
        }
        let at = match self.positions.binary_search(&value) {
            Ok(_) => return Err(Error::DuplicateValue(value)),
            Err(at) => at,
        };
        self.positions.insert(at, value);
        self.colors.insert(at, color);
        for list in &mut self.occ {
            let from = list.partition_point(|&i| i < at);
            for i in &mut list[from..] {
                *i += 1;
            }
        }
        if let Some(c) = color {
            let list = &mut self.occ[c.index()];
            let pos = list.partition_point(|&i| i < at);
            list.insert(pos, at);
        }
        Ok(at)
    }

    /// Colors an uncolored slot. Assigned colors are permanent.
    pub fn assign(&mut self, index: usize, c: Color) -> Result<()> {
        self.check_color(c)?;
        match self.colors.get(index) {
            None => {
                return Err(Error::IndexOutOfBounds {
                    index,
                    len: self.len(),
                })
            }
            Some(Some(existing)) => {
                return Err(Error::Recolor {
                    index,
                    color: *existing,
                })
            }
            Some(None) => {}
        }
        self.colors[index] = Some(c);
        let list = &mut self.occ[c.index()];
        let pos = list.partition_point(|&i| i < index);
        list.insert(pos, index);
        Ok(())
    }

    /// All gaps for color `c`, left to right. When `c` occurs, the list starts
    /// with the (possibly empty) first gap and ends with the (possibly empty)
    /// last gap; otherwise it is the single whole-line gap.
    pub fn gaps(&self, c: Color) -> Vec<Gap> {
        let occ = &self.occ[c.index()];
        let n = self.len();
        let Some((&first, &last)) = occ.first().zip(occ.last()) else {
            return vec![Gap {
                color: c,
                start: 0,
                end: n,
                kind: GapKind::WholeLine,
            }];
        };
        let mut out = Vec::with_capacity(occ.len() + 1);
        out.push(Gap {
            color: c,
            start: 0,
            end: first,
            kind: GapKind::First,
        });
        out.extend(occ.windows(2).map(|w| Gap {
            color: c,
            start: w[0] + 1,
            end: w[1],
            kind: GapKind::Internal,
        }));
        out.push(Gap {
            color: c,
            start: last + 1,
            end: n,
            kind: GapKind::Last,
        });
        out
    }

    /// The gap for color `c` that contains `index`, or `None` if the point at
    /// `index` itself has color `c`.
    pub fn gap_containing(&self, index: usize, c: Color) -> Option<Gap> {
        let occ = &self.occ[c.index()];
        let p = occ.partition_point(|&i| i < index);
        if occ.get(p) == Some(&index) {
            return None;
        }
        let left = p.checked_sub(1).map(|q| occ[q]);
        let right = occ.get(p).copied();
        let (start, end, kind) = match (left, right) {
            (None, None) => (0, self.len(), GapKind::WholeLine),
            (None, Some(r)) => (0, r, GapKind::First),
            (Some(l), Some(r)) => (l + 1, r, GapKind::Internal),
            (Some(l), None) => (l + 1, self.len(), GapKind::Last),
        };
        Some(Gap {
            color: c,
            start,
            end,
            kind,
        })
    }

    /// Largest gap count over all colors.
    pub fn max_gap(&self) -> usize {
        Color::all(self.k)
            .flat_map(|c| self.gaps(c))
            .map(|g| g.count())
            .max()
            .unwrap_or(0)
    }

    /// Replaces every uncolored slot by `fill` and returns the result.
    pub fn filled(&self, fill: Color) -> Result<ColoredSequence> {
        let colors = self.colors.iter().map(|c| Some(c.unwrap_or(fill))).collect();
        ColoredSequence::from_parts(self.k, self.positions.clone(), colors)
    }

    /// The sequence is fully colored.
    pub fn is_total(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }
}
