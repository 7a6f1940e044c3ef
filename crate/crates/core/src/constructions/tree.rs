//! Horizontal segments realising the `p`-regular tree of depth `p`.
//!
//! Each tree vertex becomes a horizontal segment. Siblings are stacked with a
//! shared right endpoint, so they are consecutive on the vertical line through
//! it; every subtree is shrunk into the slot just above its parent segment,
//! so the segments below a leaf's left endpoint are exactly its ancestors.
//! Since the sibling sets and root-to-leaf paths admit no proper 2-coloring,
//! neither does the segment family: some vertical line always crosses `p`
//! consecutive segments of one color.

use num::{BigInt, Integer, One};

use crate::error::{Error, Result};
use crate::geometry::{Corner, HSegment, Point3};
use crate::point::Rational;
use crate::sequence::Color;
use crate::verifier::SetSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MemberKind {
    Siblings,
    Path,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MemberSet {
    pub kind: MemberKind,
    /// Vertex ids; paths are listed from the root down.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct TreeSystem {
    p: usize,
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    segments: Vec<HSegment>,
    scale: BigInt,
    members: Vec<MemberSet>,
}

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Segments of the block with `levels` sibling levels, in local
/// coordinates, each with its parent's local index (`None` for the top
/// siblings). The top siblings occupy indices `0..p`.
fn block(p: i64, levels: usize) -> Result<Vec<(HSegment, Option<usize>)>> {
    let mut out: Vec<(HSegment, Option<usize>)> = (1..=p)
        .map(|i| (HSegment::new(r(-i, p), r(0, 1), r(i, 1)).expect("ordered"), None))
        .collect();
    if levels == 1 {
        return Ok(out);
    }
    let inner = block(p, levels - 1)?;
    for i in 1..=p {
        // copy i sits strictly inside the box (-i/p, -(i-1)/p) x (i, i+1)
        let map_x = |x: &Rational| r(-i, p) + ((x + r(1, 1)) / r(2, 1) + r(1, 4)) / r(p, 1);
        let map_y = |y: &Rational| r(i, 1) + r(1, 4) + y / r(2 * (p + 1), 1);
        let base = out.len();
        for (seg, parent) in &inner {
            let moved = HSegment::new(map_x(&seg.x_lo), map_x(&seg.x_hi), map_y(&seg.y)).expect("monotone map");
            let inside = moved.x_lo > r(-i, p)
                && moved.x_hi < r(-(i - 1), p)
                && moved.y > r(i, 1)
                && moved.y < r(i + 1, 1);
            if !inside {
                return Err(Error::SelfCheck(format!(
                    "copy {i} of a {}-level block leaves its slot",
                    levels - 1
                )));
            }
            out.push((moved, Some(parent.map_or(i as usize - 1, |q| base + q))));
        }
    }
    Ok(out)
}

impl TreeSystem {
    /// Builds the system for `2 <= p <= 4`, scaled to integer coordinates,
    /// and runs [`TreeSystem::self_check`].
    pub fn build(p: usize) -> Result<Self> {
        if !(2..=4).contains(&p) {
            return Err(Error::Parameter {
                name: "p",
                value: p as i64,
                range: "2..=4",
            });
        }
        let pi = p as i64;
        let mut segments = vec![HSegment::new(r(-1, 1), r(0, 1), r(-1, 1)).expect("ordered")];
        let mut parent = vec![None];
        for (seg, par) in block(pi, p - 1)? {
            segments.push(seg);
            parent.push(Some(par.map_or(0, |q| q + 1)));
        }
        let mut depth = vec![0; segments.len()];
        for v in 1..segments.len() {
            depth[v] = depth[parent[v].expect("non-root")] + 1;
        }

        let scale = segments
            .iter()
            .flat_map(|s| [&s.x_lo, &s.x_hi, &s.y])
            .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let scale_r = Rational::from_integer(scale.clone());
        let segments = segments
            .into_iter()
            .map(|s| HSegment {
                x_lo: s.x_lo * &scale_r,
                x_hi: s.x_hi * &scale_r,
                y: s.y * &scale_r,
            })
            .collect();

        let n = parent.len();
        let mut children = vec![Vec::new(); n];
        for v in 1..n {
            children[parent[v].expect("non-root")].push(v);
        }
        let mut members: Vec<MemberSet> = children
            .iter()
            .filter(|c| !c.is_empty())
            .map(|c| MemberSet {
                kind: MemberKind::Siblings,
                members: c.clone(),
            })
            .collect();
        for leaf in (0..n).filter(|&v| children[v].is_empty()) {
            let mut path = vec![leaf];
            while let Some(up) = parent[*path.last().expect("nonempty")] {
                path.push(up);
            }
            path.reverse();
            members.push(MemberSet {
                kind: MemberKind::Path,
                members: path,
            });
        }

        let ts = Self {
            p,
            parent,
            depth,
            segments,
            scale,
            members,
        };
        ts.self_check()?;
        Ok(ts)
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Integer-coordinate segments, indexed by vertex id (root is 0).
    pub fn segments(&self) -> &[HSegment] {
        &self.segments
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn depth(&self, v: usize) -> usize {
        self.depth[v]
    }

    /// Factor that turned the construction's rational coordinates into integers.
    pub fn scale(&self) -> &BigInt {
        &self.scale
    }

    pub fn members(&self) -> &[MemberSet] {
        &self.members
    }

    pub fn set_system(&self) -> SetSystem {
        SetSystem::new(
            self.len(),
            self.members.iter().map(|m| m.members.clone()).collect(),
        )
    }

    fn ancestors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = self.parent[v];
        while let Some(u) = cur {
            out.push(u);
            cur = self.parent[u];
        }
        out
    }

    /// Vertex ids of the segments crossing the vertical line at `x`, by increasing y.
    pub fn crossing(&self, x: &Rational) -> Vec<usize> {
        let mut ids: Vec<usize> = (0..self.len())
            .filter(|&v| self.segments[v].spans(x))
            .collect();
        ids.sort_by(|&a, &b| self.segments[a].y.cmp(&self.segments[b].y));
        ids
    }

    /// The members form one contiguous block of the segments crossing `x`.
    pub fn consecutive_at(&self, members: &[usize], x: &Rational) -> bool {
        let line = self.crossing(x);
        let mut pos: Vec<usize> = Vec::with_capacity(members.len());
        for m in members {
            match line.iter().position(|v| v == m) {
                Some(p) => pos.push(p),
                None => return false,
            }
        }
        let (lo, hi) = (pos.iter().min(), pos.iter().max());
        matches!((lo, hi), (Some(lo), Some(hi)) if hi - lo + 1 == members.len())
    }

    /// The x of a vertical line on which the members of `set` are
    /// consecutive. Tries the shared right endpoint of siblings, or the left
    /// endpoint of a path's leaf, before every other segment endpoint.
    pub fn consecutive_at_some_time(&self, set: &MemberSet) -> Option<Rational> {
        let natural = match set.kind {
            MemberKind::Siblings => self.segments[set.members[0]].x_hi.clone(),
            MemberKind::Path => self.segments[*set.members.last()?].x_lo.clone(),
        };
        let mut candidates: Vec<Rational> = self
            .segments
            .iter()
            .flat_map(|s| [s.x_lo.clone(), s.x_hi.clone()])
            .collect();
        candidates.sort();
        candidates.dedup();
        std::iter::once(natural)
            .chain(candidates)
            .find(|x| self.consecutive_at(&set.members, x))
    }

    /// Structural checks: vertex and set counts, set sizes, distinct heights,
    /// sibling right endpoints, the ancestor property and a consecutiveness
    /// witness for every member set.
    pub fn self_check(&self) -> Result<()> {
        let p = self.p;
        let fail = |msg: String| Err(Error::SelfCheck(msg));
        let pow = |e: u32| p.pow(e);
        let vertices = (pow(p as u32) - 1) / (p - 1);
        let sibling_sets = (pow(p as u32 - 1) - 1) / (p - 1);
        let paths = pow(p as u32 - 1);
        let count = |k| self.members.iter().filter(|m| m.kind == k).count();
        if self.len() != vertices {
            return fail(format!("{} vertices, expected {vertices}", self.len()));
        }
        if count(MemberKind::Siblings) != sibling_sets || count(MemberKind::Path) != paths {
            return fail(format!(
                "{} sibling sets and {} paths, expected {sibling_sets} and {paths}",
                count(MemberKind::Siblings),
                count(MemberKind::Path)
            ));
        }
        if let Some(m) = self.members.iter().find(|m| m.members.len() != p) {
            return fail(format!("member set {:?} does not have {p} elements", m.members));
        }
        if !self.segments.iter().all(|s| s.x_lo.is_integer() && s.x_hi.is_integer() && s.y.is_integer()) {
            return fail("scaled coordinates are not integral".into());
        }
        let mut ys: Vec<&Rational> = self.segments.iter().map(|s| &s.y).collect();
        ys.sort();
        if ys.windows(2).any(|w| w[0] == w[1]) {
            return fail("two segments share a height".into());
        }
        if self.segments[1..].iter().any(|s| s.y <= self.segments[0].y) {
            return fail("root is not the lowest segment".into());
        }
        for m in self.members.iter().filter(|m| m.kind == MemberKind::Siblings) {
            let x = &self.segments[m.members[0]].x_hi;
            if m.members.iter().any(|&v| &self.segments[v].x_hi != x) {
                return fail(format!("siblings {:?} do not share a right endpoint", m.members));
            }
        }
        for v in 0..self.len() {
            let x = &self.segments[v].x_lo;
            let y = &self.segments[v].y;
            let mut below: Vec<usize> = (0..self.len())
                .filter(|&u| self.segments[u].spans(x) && &self.segments[u].y < y)
                .collect();
            let mut anc = self.ancestors(v);
            below.sort_unstable();
            anc.sort_unstable();
            if below != anc {
                return fail(format!("segments below vertex {v} are {below:?}, ancestors {anc:?}"));
            }
        }
        for m in &self.members {
            if self.consecutive_at_some_time(m).is_none() {
                return fail(format!("no vertical line makes {:?} consecutive", m.members));
            }
        }
        Ok(())
    }
}

/// The corner `(x_lo, x_hi, y)` of every segment, indexed like the segments.
pub fn tree_to_corners(ts: &TreeSystem) -> Vec<Corner> {
    ts.segments().iter().map(HSegment::corner).collect()
}

/// A query point contained in exactly the corners of `set`: on the witness
/// line, from the lowest to the highest member height.
pub fn corner_query(ts: &TreeSystem, set: &MemberSet) -> Option<Point3> {
    let x = ts.consecutive_at_some_time(set)?;
    let ys = set.members.iter().map(|&v| &ts.segments()[v].y);
    let lo = ys.clone().min()?.clone();
    let hi = ys.max()?.clone();
    Some(Point3::new(x, lo, hi))
}

/// For one 2-coloring of the corners, a point covered by exactly `p`
/// corners, all of one color, if any.
pub fn monochromatic_cover(
    ts: &TreeSystem,
    corners: &[Corner],
    queries: &[Point3],
    coloring: &[Color],
) -> Option<Point3> {
    queries
        .iter()
        .find(|q| {
            let covering: Vec<usize> = (0..corners.len()).filter(|&i| corners[i].contains(q)).collect();
            covering.len() == ts.p()
                && covering.iter().all(|&i| coloring[i] == coloring[covering[0]])
        })
        .cloned()
}

/// Runs every 2-coloring of the corners of `ts` (at most `2^24`) and returns
/// how many were checked, or the first coloring with no monochromatically
/// `p`-covered point.
pub fn check_corners_not_decomposable(ts: &TreeSystem) -> Result<u64> {
    let n = ts.len();
    if n > 24 {
        return Err(Error::Parameter {
            name: "segments",
            value: n as i64,
            range: "0..=24",
        });
    }
    let corners = tree_to_corners(ts);
    let queries: Vec<Point3> = ts
        .members()
        .iter()
        .map(|m| corner_query(ts, m).ok_or_else(|| Error::SelfCheck(format!("no witness for {:?}", m.members))))
        .collect::<Result<_>>()?;
    let total = 1u64 << n;
    let mut coloring = vec![Color::new(1); n];
    for code in 0..total {
        for (i, c) in coloring.iter_mut().enumerate() {
            *c = Color::new(if code >> i & 1 == 1 { 1 } else { 2 });
        }
        if monochromatic_cover(ts, &corners, &queries, &coloring).is_none() {
            return Err(Error::SelfCheck(format!(
                "coloring {code:#b} covers no point monochromatically {} times",
                ts.p()
            )));
        }
    }
    Ok(total)
}
