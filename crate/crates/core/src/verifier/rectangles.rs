use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::geometry::{BottomlessRect, PlanarPointSet};
use crate::point::Rational;
use crate::sequence::Color;

use super::windows::check_coloring;
use super::{check_snapshot, Violation, WindowMode};

/// Walks the y-prefixes of `s`, handing each prefix's point indices in
/// x-order to `visit` together with the prefix rank. Stops early when
/// `visit` returns `false`.
fn for_each_prefix(s: &PlanarPointSet, mut visit: impl FnMut(usize, &[usize]) -> bool) {
    let x_order = s.x_order();
    let mut x_rank = vec![0usize; s.len()];
    for (r, &i) in x_order.iter().enumerate() {
        x_rank[i] = r;
    }
    let mut present = vec![false; s.len()];
    let mut prefix = Vec::with_capacity(s.len());
    for (t, i) in s.y_order().into_iter().enumerate() {
        present[x_rank[i]] = true;
        prefix.clear();
        prefix.extend(
            x_order
                .iter()
                .enumerate()
                .filter(|&(r, _)| present[r])
                .map(|(_, &p)| p),
        );
        if !visit(t, &prefix) {
            return;
        }
    }
}

/// Checks every combinatorially distinct bottomless rectangle of `s`: the
/// contiguous x-windows of each y-prefix. Violations are stamped with the
/// prefix rank as their time, matching [`super::verify_windows`] on the
/// sweep reduction.
pub fn verify_rectangles(
    s: &PlanarPointSet,
    coloring: &[Color],
    w: usize,
    mode: WindowMode,
    k: u32,
) -> Result<Vec<Violation>> {
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    check_coloring(s.len(), coloring, w)?;
    let mut out = Vec::new();
    let mut colors = Vec::with_capacity(s.len());
    for_each_prefix(s, |t, prefix| {
        colors.clear();
        colors.extend(prefix.iter().map(|&i| coloring[i]));
        check_snapshot(&colors, w, mode, k, &Rational::from_integer(t.into()), &mut out);
        true
    });
    out.sort();
    Ok(out)
}

/// Like [`verify_rectangles`] but stops at the first violation.
pub fn rectangles_pass(
    s: &PlanarPointSet,
    coloring: &[Color],
    w: usize,
    mode: WindowMode,
    k: u32,
) -> Result<bool> {
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    check_coloring(s.len(), coloring, w)?;
    let mut ok = true;
    let mut colors = Vec::with_capacity(s.len());
    let mut scratch = Vec::new();
    let zero = Rational::from_integer(0.into());
    for_each_prefix(s, |_, prefix| {
        colors.clear();
        colors.extend(prefix.iter().map(|&i| coloring[i]));
        check_snapshot(&colors, w, mode, k, &zero, &mut scratch);
        ok = scratch.is_empty();
        ok
    });
    Ok(ok)
}

/// Point sets (as sorted index lists) trapped by the canonical rectangles of
/// size exactly `w`: contiguous x-windows of the y-prefixes.
pub fn canonical_trapped_sets(s: &PlanarPointSet, w: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    for_each_prefix(s, |_, prefix| {
        for win in prefix.windows(w.max(1)) {
            let mut v = win.to_vec();
            v.sort_unstable();
            out.insert(v);
        }
        true
    });
    out
}

/// Point sets of size exactly `w` trapped by some bottomless rectangle whose
/// sides pass through point coordinates, found by testing every such
/// rectangle point by point. Cubic in the number of rectangles; meant for
/// cross-checking at small `n`.
pub fn naive_trapped_sets(s: &PlanarPointSet, w: usize) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let pts = s.points();
    for a in pts {
        for b in pts {
            for c in pts {
                let Some(rect) = BottomlessRect::new(a.x.clone(), b.x.clone(), c.y.clone()) else {
                    continue;
                };
                let trapped = rect.trapped(s);
                if trapped.len() == w {
                    out.insert(trapped);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{color_bottomless, sweep_reduce, Point};
    use crate::point::TiePolicy;
    use crate::verifier::verify_windows;
    use crate::int;
    use proptest::prelude::*;

    fn planar(raw: &[(i64, i64)]) -> PlanarPointSet {
        PlanarPointSet::normalized(
            raw.iter().map(|&(x, y)| Point::new(int(x), int(y))).collect(),
            TiePolicy::Perturb,
        )
        .unwrap()
    }

    #[test]
    fn single_point_single_color() {
        let s = planar(&[(3, 3)]);
        let v = verify_rectangles(&s, &[Color::new(1)], 1, WindowMode::AllColorsPresent, 1).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn rejects_unnormalized() {
        let s = PlanarPointSet::new(vec![Point::new(int(0), int(0)), Point::new(int(0), int(1))]);
        let c = [Color::new(1), Color::new(1)];
        assert_eq!(
            verify_rectangles(&s, &c, 1, WindowMode::NoRepeat, 1),
            Err(Error::NotNormalized)
        );
    }

    fn instance() -> impl Strategy<Value = (Vec<(i64, i64)>, Vec<u32>)> {
        prop::collection::vec((-30i64..30, -30i64..30), 1..16).prop_flat_map(|pts| {
            let n = pts.len();
            (Just(pts), prop::collection::vec(1u32..4, n))
        })
    }

    proptest! {
        #[test]
        fn rectangles_match_windows_of_reduction((raw, ids) in instance(), w in 1usize..6, k in 1u32..4) {
            let s = planar(&raw);
            let c: Vec<Color> = ids.iter().map(|&i| Color::new(i)).collect();
            let d = sweep_reduce(&s).unwrap();
            for mode in [WindowMode::AllColorsPresent, WindowMode::NoRepeat] {
                let r = verify_rectangles(&s, &c, w, mode, k).unwrap();
                prop_assert_eq!(&r, &verify_windows(&d, &c, w, mode, k).unwrap());
                prop_assert_eq!(r.is_empty(), rectangles_pass(&s, &c, w, mode, k).unwrap());
            }
        }

        #[test]
        fn canonical_enumeration_matches_naive(raw in prop::collection::vec((-20i64..20, -20i64..20), 1..12), w in 1usize..6) {
            let s = planar(&raw);
            prop_assert_eq!(canonical_trapped_sets(&s, w), naive_trapped_sets(&s, w));
        }

        #[test]
        fn bottomless_coloring_passes(raw in prop::collection::vec((-100i64..100, -100i64..100), 1..60), k in 1u32..5) {
            let s = planar(&raw);
            let c = color_bottomless(&s, k).unwrap();
            let w = 3 * k as usize - 2;
            prop_assert!(verify_rectangles(&s, &c, w, WindowMode::AllColorsPresent, k).unwrap().is_empty());
        }
    }
}
