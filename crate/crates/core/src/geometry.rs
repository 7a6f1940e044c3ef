//! Planar and spatial views of the line problem.
//!
//! Sweeping a planar set upward turns it into an insertion-only dynamic set on
//! the x-axis: the points trapped by a bottomless rectangle with top `c` are
//! exactly the x-interval `[a, b]` of the snapshot taken once every point with
//! `y <= c` has arrived.

use crate::colorer::{OnlineColorer, SemiOnlineColorer};
use crate::error::{Error, Result};
use crate::point::{first_duplicate, perturb_ties, DynamicPoint, DynamicPointSet, Rational, TiePolicy};
use crate::sequence::Color;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Self { x, y }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlanarPointSet {
    points: Vec<Point>,
    normalized: bool,
}

impl PlanarPointSet {
    /// Wraps `points` as given. The set counts as normalized when all x and
    /// all y coordinates are already pairwise distinct.
    pub fn new(points: Vec<Point>) -> Self {
        let xs: Vec<Rational> = points.iter().map(|p| p.x.clone()).collect();
        let ys: Vec<Rational> = points.iter().map(|p| p.y.clone()).collect();
        let normalized = first_duplicate(&xs).is_none() && first_duplicate(&ys).is_none();
        Self { points, normalized }
    }

    /// Puts the set in general position. With [`TiePolicy::Perturb`], tied
    /// coordinates are separated by input order; with [`TiePolicy::Reject`]
    /// the first tie is an error.
    pub fn normalized(points: Vec<Point>, policy: TiePolicy) -> Result<Self> {
        let xs: Vec<Rational> = points.iter().map(|p| p.x.clone()).collect();
        let ys: Vec<Rational> = points.iter().map(|p| p.y.clone()).collect();
        match policy {
            TiePolicy::Reject => {
                for (what, vals) in [("x coordinate", &xs), ("y coordinate", &ys)] {
                    if let Some((first, second)) = first_duplicate(vals) {
                        return Err(Error::Degenerate {
                            what,
                            value: vals[first].clone(),
                            first,
                            second,
                        });
                    }
                }
                Ok(Self {
                    points,
                    normalized: true,
                })
            }
            TiePolicy::Perturb => {
                let points = perturb_ties(&xs, &[])
                    .into_iter()
                    .zip(perturb_ties(&ys, &[]))
                    .map(|(x, y)| Point::new(x, y))
                    .collect();
                Ok(Self {
                    points,
                    normalized: true,
                })
            }
        }
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    fn require_normalized(&self) -> Result<()> {
        if self.normalized {
            Ok(())
        } else {
            Err(Error::NotNormalized)
        }
    }

    /// Point indices sorted by y.
    pub fn y_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].y.cmp(&self.points[b].y));
        idx
    }

    /// Point indices sorted by x.
    pub fn x_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by(|&a, &b| self.points[a].x.cmp(&self.points[b].x));
        idx
    }
}

/// `{(x, y) : a <= x <= b, y <= c}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BottomlessRect {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl BottomlessRect {
    /// `None` when `a > b`.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Option<Self> {
        (a <= b).then_some(Self { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.a <= p.x && p.x <= self.b && p.y <= self.c
    }

    /// Indices of the points of `s` inside the rectangle.
    pub fn trapped(&self, s: &PlanarPointSet) -> Vec<usize> {
        (0..s.len()).filter(|&i| self.contains(&s.points[i])).collect()
    }
}

/// Insertion-only dynamic set: point `i` becomes value `x_i` arriving at the
/// rank of `y_i` among all y coordinates. Indices are preserved.
pub fn sweep_reduce(s: &PlanarPointSet) -> Result<DynamicPointSet> {
    s.require_normalized()?;
    let mut arrival = vec![0i64; s.len()];
    for (rank, i) in s.y_order().into_iter().enumerate() {
        arrival[i] = rank as i64;
    }
    DynamicPointSet::new(
        s.points
            .iter()
            .zip(arrival)
            .map(|(p, r)| DynamicPoint::permanent(p.x.clone(), Rational::from_integer(r.into())))
            .collect(),
        TiePolicy::Reject,
    )
}

/// Colors `s` with `k` colors so that every bottomless rectangle holding at
/// least `3k-2` points sees every color. The result is indexed like `s`.
pub fn color_bottomless(s: &PlanarPointSet, k: u32) -> Result<Vec<Color>> {
    let reduced = sweep_reduce(s)?;
    let mut colorer = SemiOnlineColorer::new(k)?;
    for i in reduced.arrival_order() {
        colorer.insert(reduced.points()[i].value.clone())?;
    }
    let total = colorer.finalize();
    Ok(reduced
        .points()
        .iter()
        .map(|p| {
            let at = total.index_of(&p.value).expect("every point was inserted");
            total.color_at(at).expect("finalized sequences are total")
        })
        .collect())
}

/// Colors `s` with `2k-1` colors so that every bottomless rectangle holding
/// at most `k` points has distinct colors. The result is indexed like `s`.
pub fn color_bottomless_online(s: &PlanarPointSet, k: u32) -> Result<Vec<Color>> {
    let reduced = sweep_reduce(s)?;
    let mut colorer = OnlineColorer::new(k)?;
    let mut out = vec![None; s.len()];
    for i in reduced.arrival_order() {
        out[i] = Some(colorer.insert(reduced.points()[i].value.clone())?);
    }
    Ok(out.into_iter().map(|c| c.expect("every point was colored")).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Point3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Self { x, y, z }
    }
}

/// `{(x, y, z) : a <= x <= b, y <= c <= z}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Corner {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl Corner {
    /// `None` when `a > b`.
    pub fn new(a: Rational, b: Rational, c: Rational) -> Option<Self> {
        (a <= b).then_some(Self { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn contains(&self, p: &Point3) -> bool {
        self.a <= p.x && p.x <= self.b && p.y <= self.c && self.c <= p.z
    }

    /// The horizontal segment `(a, c)-(b, c)` the corner projects to.
    pub fn segment(&self) -> HSegment {
        HSegment {
            x_lo: self.a.clone(),
            x_hi: self.b.clone(),
            y: self.c.clone(),
        }
    }
}

/// Closed horizontal segment from `(x_lo, y)` to `(x_hi, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HSegment {
    pub x_lo: Rational,
    pub x_hi: Rational,
    pub y: Rational,
}

impl HSegment {
    /// `None` when `x_lo > x_hi`.
    pub fn new(x_lo: Rational, x_hi: Rational, y: Rational) -> Option<Self> {
        (x_lo <= x_hi).then_some(Self { x_lo, x_hi, y })
    }

    pub fn spans(&self, x: &Rational) -> bool {
        &self.x_lo <= x && x <= &self.x_hi
    }

    /// Meets the upward vertical segment `{(x, t) : lo <= t <= hi}`, which is
    /// empty when `lo > hi`.
    pub fn meets_vertical(&self, x: &Rational, lo: &Rational, hi: &Rational) -> bool {
        self.spans(x) && lo <= &self.y && &self.y <= hi
    }

    pub fn corner(&self) -> Corner {
        Corner {
            a: self.x_lo.clone(),
            b: self.x_hi.clone(),
            c: self.y.clone(),
        }
    }
}

pub fn corner_contains(c: &Corner, p: &Point3) -> bool {
    c.contains(p)
}

/// Both sides of the corner/segment correspondence for query `p`: whether `c`
/// contains `p`, and whether the vertical segment from `(p.x, p.y)` up to
/// `(p.x, p.z)` meets the horizontal segment of `c`.
pub fn corner_segment_equiv(c: &Corner, p: &Point3) -> (bool, bool) {
    (c.contains(p), c.segment().meets_vertical(&p.x, &p.y, &p.z))
}
