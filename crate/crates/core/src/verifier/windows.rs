use crate::colorer::SemiOnlineColorer;
use crate::error::{Error, Result};
use crate::point::{DynamicPointSet, Rational};
use crate::sequence::{Color, ColoredSequence, GapKind};

use super::{check_snapshot, Violation, ViolationKind, WindowMode};

pub(crate) fn check_coloring(len: usize, coloring: &[Color], w: usize) -> Result<()> {
    if w == 0 {
        return Err(Error::ZeroWindow);
    }
    if coloring.len() != len {
        return Err(Error::ColoringLength {
            expected: len,
            got: coloring.len(),
        });
    }
    Ok(())
}

/// Checks every window of every snapshot of `set`. `coloring[i]` is the
/// color of `set.points()[i]`. Snapshots only change at arrival and departure
/// times, so those are the times examined. Returns the sorted violations.
pub fn verify_windows(
    set: &DynamicPointSet,
    coloring: &[Color],
    w: usize,
    mode: WindowMode,
    k: u32,
) -> Result<Vec<Violation>> {
    check_coloring(set.len(), coloring, w)?;
    let index = set.event_index();
    let mut out = Vec::new();
    let mut snapshot = Vec::with_capacity(set.len());
    for (e, time) in index.times.iter().enumerate() {
        snapshot.clear();
        snapshot.extend(index.present_at(e).map(|i| coloring[i]));
        check_snapshot(&snapshot, w, mode, k, time, &mut out);
    }
    out.sort();
    Ok(out)
}

/// The gap formulation of [`WindowMode::AllColorsPresent`]: reports every
/// gap holding `w` or more points, at every snapshot.
pub fn verify_gaps(
    set: &DynamicPointSet,
    coloring: &[Color],
    w: usize,
    k: u32,
) -> Result<Vec<Violation>> {
    check_coloring(set.len(), coloring, w)?;
    let palette = coloring.iter().map(|c| c.id()).max().unwrap_or(0).max(k);
    let mut out = Vec::new();
    for time in set.event_times() {
        let present = set.snapshot_indices(&time);
        let seq = ColoredSequence::from_parts(
            palette,
            present.iter().map(|&i| set.points()[i].value.clone()).collect(),
            present.iter().map(|&i| Some(coloring[i])).collect(),
        )?;
        for c in Color::all(k) {
            out.extend(seq.gaps(c).into_iter().filter(|g| g.count() >= w).map(|g| Violation {
                time: time.clone(),
                start: g.start,
                end: g.end,
                kind: ViolationKind::GapTooLarge,
                color: c,
            }));
        }
    }
    out.sort();
    Ok(out)
}

/// Independent audit of a semi-online state, scanning the color slots
/// directly: gaps above `3k-3` points and internal gaps below `k-1` points.
/// Violations are stamped with the colorer's step count.
pub fn audit_semi_online(colorer: &SemiOnlineColorer) -> Vec<Violation> {
    let k = colorer.k() as usize;
    let slots = colorer.sequence().colors();
    let n = slots.len();
    let time = Rational::from_integer(colorer.steps().into());
    let mut out = Vec::new();
    for c in Color::all(colorer.k()) {
        let hits: Vec<usize> = (0..n).filter(|&i| slots[i] == Some(c)).collect();
        let mut bounds: Vec<(usize, usize, GapKind)> = Vec::new();
        match (hits.first(), hits.last()) {
            (Some(&f), Some(&l)) => {
                bounds.push((0, f, GapKind::First));
                bounds.extend(hits.windows(2).map(|p| (p[0] + 1, p[1], GapKind::Internal)));
                bounds.push((l + 1, n, GapKind::Last));
            }
            _ => bounds.push((0, n, GapKind::WholeLine)),
        }
        for (start, end, kind) in bounds {
            let count = end - start;
            let violation = |kind| Violation {
                time: time.clone(),
                start,
                end,
                kind,
                color: c,
            };
            if count > 3 * k - 3 {
                out.push(violation(ViolationKind::GapTooLarge));
            }
            if kind == GapKind::Internal && count < k - 1 {
                out.push(violation(ViolationKind::InvariantB));
            }
        }
    }
    out.sort();
    out
}

impl Violation {
    /// Re-evaluates the reported window on `set` and confirms the failure.
    pub fn recheck(
        &self,
        set: &DynamicPointSet,
        coloring: &[Color],
        w: usize,
        mode: WindowMode,
    ) -> bool {
        let present = set.snapshot_indices(&self.time);
        let Some(window) = present.get(self.start..self.end) else {
            return false;
        };
        let hits = window.iter().filter(|&&i| coloring[i] == self.color).count();
        match (self.kind, mode) {
            (ViolationKind::WindowMissingColor, WindowMode::AllColorsPresent) => {
                window.len() == w && hits == 0
            }
            (ViolationKind::WindowRepeatedColor, WindowMode::NoRepeat) => {
                window.len() == w.min(present.len()) && hits >= 2
            }
            (ViolationKind::GapTooLarge, _) => {
                window.len() >= w
                    && hits == 0
                    && (self.start == 0 || coloring[present[self.start - 1]] == self.color)
                    && (self.end == present.len() || coloring[present[self.end]] == self.color)
            }
            _ => false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::{Departure, DynamicPoint, TiePolicy};
    use crate::{int, ratio};
    use proptest::prelude::*;

    fn co_present(n: i64) -> DynamicPointSet {
        DynamicPointSet::insertion_only((0..n).map(|i| (int(i), int(0))), TiePolicy::Perturb).unwrap()
    }

    fn colors(ids: &[u32]) -> Vec<Color> {
        ids.iter().map(|&c| Color::new(c)).collect()
    }

    #[test]
    fn single_color_always_present() {
        let set = co_present(5);
        let v = verify_windows(&set, &colors(&[1; 5]), 1, WindowMode::AllColorsPresent, 1).unwrap();
        assert!(v.is_empty());
    }

    #[test]
    fn monochrome_window_reports_missing_color() {
        let set = DynamicPointSet::insertion_only(
            (0..4).map(|i| (int(i), int(0))),
            TiePolicy::Perturb,
        )
        .unwrap();
        // ties perturbed: arrivals 0, 1/4, 1/2, 3/4; full window only at the last
        let v = verify_windows(&set, &colors(&[1, 1, 1, 1]), 4, WindowMode::AllColorsPresent, 2).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].kind, ViolationKind::WindowMissingColor);
        assert_eq!(v[0].color, Color::new(2));
        assert_eq!((v[0].start, v[0].end), (0, 4));
        assert_eq!(v[0].time, ratio(3, 4));
        assert!(v[0].recheck(&set, &colors(&[1, 1, 1, 1]), 4, WindowMode::AllColorsPresent));
    }

    #[test]
    fn zero_window_and_length_mismatch() {
        let set = co_present(2);
        assert_eq!(
            verify_windows(&set, &colors(&[1, 1]), 0, WindowMode::NoRepeat, 1),
            Err(Error::ZeroWindow)
        );
        assert!(matches!(
            verify_windows(&set, &colors(&[1]), 1, WindowMode::NoRepeat, 1),
            Err(Error::ColoringLength { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn departures_are_checked() {
        // 1 and 3 share color 1 and become adjacent once 2 leaves at t=2
        let set = DynamicPointSet::new(
            vec![
                DynamicPoint::permanent(int(1), int(0)),
                DynamicPoint::new(int(2), int(1), Departure::At(int(2))),
                DynamicPoint::permanent(int(3), ratio(1, 2)),
            ],
            TiePolicy::Reject,
        )
        .unwrap();
        let c = colors(&[1, 2, 1]);
        let v = verify_windows(&set, &c, 2, WindowMode::NoRepeat, 2).unwrap();
        assert_eq!(v.len(), 2);
        assert!(v.iter().all(|x| x.recheck(&set, &c, 2, WindowMode::NoRepeat)));
        assert_eq!(v[0].time, ratio(1, 2));
        assert_eq!(v[1].time, int(2));
    }

    #[test]
    fn audit_flags_both_invariants() {
        let mut colorer = SemiOnlineColorer::new(3).unwrap();
        for v in 0..6 {
            colorer.insert(int(v)).unwrap();
        }
        assert!(audit_semi_online(&colorer).is_empty());
    }

    /// `(value, arrival, stay)` triples; `None` never departs.
    type Spec = Vec<(i64, i64, Option<i64>)>;

    fn random_dynamic() -> impl Strategy<Value = (Spec, Vec<u32>)> {
        prop::collection::vec((0i64..60, 0i64..30, prop::option::of(0i64..15)), 0..25).prop_flat_map(|pts| {
            let n = pts.len();
            (Just(pts), prop::collection::vec(1u32..4, n))
        })
    }

    fn build(pts: &[(i64, i64, Option<i64>)]) -> DynamicPointSet {
        DynamicPointSet::new(
            pts.iter()
                .map(|&(v, a, d)| {
                    DynamicPoint::new(int(v), int(a), d.map_or(Departure::Never, |d| Departure::At(int(a + d))))
                })
                .collect(),
            TiePolicy::Perturb,
        )
        .unwrap()
    }

    proptest! {
        #[test]
        fn window_and_gap_checks_agree((pts, ids) in random_dynamic(), w in 1usize..6, k in 1u32..4) {
            let set = build(&pts);
            let c = colors(&ids);
            let by_window = verify_windows(&set, &c, w, WindowMode::AllColorsPresent, k).unwrap();
            let by_gap = verify_gaps(&set, &c, w, k).unwrap();
            prop_assert_eq!(by_window.is_empty(), by_gap.is_empty());
            for v in by_window.iter().chain(&by_gap) {
                prop_assert!(v.recheck(&set, &c, w, WindowMode::AllColorsPresent));
            }
        }

        #[test]
        fn exact_width_agrees_with_all_wider_windows((pts, ids) in random_dynamic(), w in 1usize..6, k in 1u32..4) {
            let set = build(&pts);
            let c = colors(&ids);
            let exact = verify_windows(&set, &c, w, WindowMode::AllColorsPresent, k).unwrap().is_empty();
            let wider = (w..=set.len().max(w)).all(|ww| {
                verify_windows(&set, &c, ww, WindowMode::AllColorsPresent, k).unwrap().is_empty()
            });
            prop_assert_eq!(exact, wider);
        }

        #[test]
        fn repeated_violations_recheck((pts, ids) in random_dynamic(), w in 1usize..5) {
            let set = build(&pts);
            let c = colors(&ids);
            for v in verify_windows(&set, &c, w, WindowMode::NoRepeat, 3).unwrap() {
                prop_assert!(v.recheck(&set, &c, w, WindowMode::NoRepeat));
            }
        }
    }
}
