//! Semi-online gap repair.
//!
//! Points arrive one at a time and are inserted uncolored. The colorer keeps
//! two invariants over the gaps of every color `i`:
//!
//! * (a) every gap holds at most `3k-3` points;
//! * (b) if `i` occurs, every internal gap for `i` holds at least `k-1` points.
//!
//! An arrival grows exactly one gap per color by one. When a gap reaches
//! `3k-2` points it is split as `l_1..l_{k-1} | m_1..m_k | r_1..r_{k-1}`: by
//! (b) no other color appears twice among the `m` block, so one of the `k`
//! middle points is uncolored, and it receives the gap's color. Both halves
//! keep at least `k-1` points.

use crate::error::{Error, Result};
use crate::point::Rational;
use crate::sequence::{Color, ColoredSequence, Gap, GapKind};

/// One repair: at insertion `step` (1-based), the point at `index` received `color`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub step: usize,
    pub index: usize,
    pub value: Rational,
    pub color: Color,
}

#[derive(Debug, Clone)]
pub struct SemiOnlineColorer {
    seq: ColoredSequence,
    steps: usize,
    repair_log: Vec<Repair>,
}

impl SemiOnlineColorer {
    pub fn new(k: u32) -> Result<Self> {
        Ok(Self {
            seq: ColoredSequence::new(k)?,
            steps: 0,
            repair_log: Vec::new(),
        })
    }

    pub fn k(&self) -> u32 {
        self.seq.k()
    }

    /// Window size guaranteed to be rainbow: `3k-2`.
    pub fn window(&self) -> usize {
        3 * self.k() as usize - 2
    }

    pub fn sequence(&self) -> &ColoredSequence {
        &self.seq
    }

    pub fn repair_log(&self) -> &[Repair] {
        &self.repair_log
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    /// Inserts `value` uncolored, then repairs until every gap holds at most
    /// `3k-3` points. Returns the number of repairs performed.
    pub fn insert(&mut self, value: Rational) -> Result<usize> {
        let at = self.seq.insert(value, None)?;
        self.steps += 1;
        let limit = self.window();
        let before = self.repair_log.len();
        // Only the gaps holding the new point can have grown. Colors are
        // scanned in ascending order until a pass makes no repair.
        loop {
            let mut repaired = false;
            for c in Color::all(self.k()) {
                if let Some(gap) = self.seq.gap_containing(at, c) {
                    if gap.count() >= limit {
                        self.repair(&gap)?;
                        repaired = true;
                    }
                }
            }
            if !repaired {
                break;
            }
        }
        Ok(self.repair_log.len() - before)
    }

    fn repair(&mut self, gap: &Gap) -> Result<()> {
        let k = self.k() as usize;
        let expected = self.window();
        if gap.count() != expected {
            return Err(Error::GapSize {
                color: gap.color,
                start: gap.start,
                end: gap.end,
                count: gap.count(),
                expected,
            });
        }
        let middle = gap.start + (k - 1)..gap.start + (2 * k - 1);
        let pick = middle
            .clone()
            .find(|&i| self.seq.color_at(i).is_none())
            .ok_or(Error::NoUncoloredMiddle {
                color: gap.color,
                start: gap.start,
                end: gap.end,
            })?;
        assert!(
            pick - gap.start >= k - 1 && gap.end - pick > k - 1,
            "repair point needs k-1 gap points on each side"
        );
        self.seq.assign(pick, gap.color)?;
        self.repair_log.push(Repair {
            step: self.steps,
            index: pick,
            value: self.seq.positions()[pick].clone(),
            color: gap.color,
        });
        Ok(())
    }

    /// Full check of invariants (a) and (b) over every gap.
    pub fn check_invariants(&self) -> Result<()> {
        let k = self.k() as usize;
        for c in Color::all(self.k()) {
            for g in self.seq.gaps(c) {
                let broken = if g.count() > 3 * k - 3 {
                    Some('a')
                } else if g.kind == GapKind::Internal && g.count() < k - 1 {
                    Some('b')
                } else {
                    None
                };
                if let Some(invariant) = broken {
                    return Err(Error::Invariant {
                        invariant,
                        color: c,
                        kind: g.kind,
                        start: g.start,
                        end: g.end,
                        count: g.count(),
                    });
                }
            }
        }
        Ok(())
    }

    /// The total coloring: every still-uncolored point gets color 1.
    pub fn finalize(&self) -> ColoredSequence {
        self.seq
            .filled(Color::new(1))
            .expect("color 1 is always in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use proptest::prelude::*;

    fn colors(c: &SemiOnlineColorer) -> Vec<u32> {
        c.sequence()
            .colors()
            .iter()
            .map(|c| c.map_or(0, Color::id))
            .collect()
    }

    #[test]
    fn single_color_colors_on_arrival() {
        let mut c = SemiOnlineColorer::new(1).unwrap();
        assert_eq!(c.insert(int(7)).unwrap(), 1);
        assert_eq!(colors(&c), vec![1]);
        c.insert(int(3)).unwrap();
        c.insert(int(5)).unwrap();
        assert_eq!(colors(&c), vec![1, 1, 1]);
    }

    #[test]
    fn two_colors_trace() {
        let mut c = SemiOnlineColorer::new(2).unwrap();
        for v in 1..=3 {
            assert_eq!(c.insert(int(v)).unwrap(), 0);
        }
        assert_eq!(colors(&c), vec![0, 0, 0]);
        assert_eq!(c.insert(int(4)).unwrap(), 2);
        assert_eq!(colors(&c), vec![0, 1, 2, 0]);
        let log: Vec<_> = c
            .repair_log()
            .iter()
            .map(|r| (r.step, r.index, r.value.clone(), r.color.id()))
            .collect();
        assert_eq!(log, vec![(4, 1, int(2), 1), (4, 2, int(3), 2)]);
        c.check_invariants().unwrap();
    }

    #[test]
    fn finalize_fills_with_color_one() {
        let mut c = SemiOnlineColorer::new(2).unwrap();
        for v in 1..=4 {
            c.insert(int(v)).unwrap();
        }
        let f = c.finalize();
        let ids: Vec<u32> = f.colors().iter().map(|c| c.unwrap().id()).collect();
        assert_eq!(ids, vec![1, 1, 2, 1]);
        assert!(SemiOnlineColorer::new(3).unwrap().finalize().is_empty());
    }

    #[test]
    fn duplicate_rejected() {
        let mut c = SemiOnlineColorer::new(2).unwrap();
        c.insert(int(1)).unwrap();
        assert_eq!(c.insert(int(1)), Err(Error::DuplicateValue(int(1))));
        assert_eq!(c.steps(), 1);
    }

    #[test]
    fn zero_colors_rejected() {
        assert!(SemiOnlineColorer::new(0).is_err());
    }

    /// Every run of `w` consecutive slots contains all of `1..=k`.
    fn all_windows_rainbow(colors: &[Option<Color>], k: u32, w: usize) -> bool {
        colors.windows(w).all(|win| {
            Color::all(k).all(|c| win.contains(&Some(c)))
        })
    }

    proptest! {
        #[test]
        fn invariants_hold_after_every_insert(
            k in 1u32..6,
            values in prop::collection::hash_set(-500i64..500, 0..150),
        ) {
            let mut c = SemiOnlineColorer::new(k).unwrap();
            let w = 3 * k as usize - 2;
            for v in values {
                let before: Vec<(Rational, Color)> = c.sequence().positions().iter().cloned()
                    .zip(c.sequence().colors().iter().copied())
                    .filter_map(|(p, col)| col.map(|col| (p, col)))
                    .collect();
                c.insert(int(v)).unwrap();
                c.check_invariants().unwrap();
                prop_assert!(all_windows_rainbow(c.sequence().colors(), k, w));
                for (p, col) in before {
                    let i = c.sequence().index_of(&p).unwrap();
                    prop_assert_eq!(c.sequence().color_at(i), Some(col));
                }
            }
            let f = c.finalize();
            prop_assert!(f.is_total());
            prop_assert!(all_windows_rainbow(f.colors(), k, w));
        }

        #[test]
        fn replay_is_deterministic(values in prop::collection::hash_set(0i64..1000, 0..100), k in 1u32..5) {
            let order: Vec<i64> = values.into_iter().collect();
            let run = || {
                let mut c = SemiOnlineColorer::new(k).unwrap();
                for &v in &order { c.insert(int(v)).unwrap(); }
                c.repair_log().to_vec()
            };
            prop_assert_eq!(run(), run());
        }
    }
}
