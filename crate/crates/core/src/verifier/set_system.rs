//! 2-colorability of small set systems: a coloring of the ground set is
//! proper when no member set is monochromatic.

use crate::sequence::Color;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SetSystem {
    ground: usize,
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Panics if a member set names an element outside `0..ground`.
    pub fn new(ground: usize, sets: Vec<Vec<usize>>) -> Self {
        for s in &sets {
            assert!(s.iter().all(|&e| e < ground), "element outside the ground set");
        }
        Self { ground, sets }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    /// No member set is monochromatic. Empty sets count as monochromatic.
    pub fn is_proper(&self, coloring: &[Color]) -> bool {
        self.sets.iter().all(|s| {
            s.iter().any(|&e| coloring[e] != coloring[s[0]]) && !s.is_empty()
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Every one of the `2^n` colorings; ground sets up to 24 elements.
    Exhaustive,
    Backtracking,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoColoring {
    Proper(Vec<Color>),
    /// The search ran to completion without finding a proper coloring.
    NoneExists { mode: SearchMode, examined: u64 },
}

impl TwoColoring {
    pub fn is_none(&self) -> bool {
        matches!(self, TwoColoring::NoneExists { .. })
    }
}

/// Exhaustive for ground sets of at most 24 elements, backtracking beyond.
pub fn check_set_system_2colorable(sys: &SetSystem) -> TwoColoring {
    let mode = if sys.ground <= 24 {
        SearchMode::Exhaustive
    } else {
        SearchMode::Backtracking
    };
    check_set_system_2colorable_with(sys, mode)
}

pub fn check_set_system_2colorable_with(sys: &SetSystem, mode: SearchMode) -> TwoColoring {
    match mode {
        SearchMode::Exhaustive => exhaustive(sys),
        SearchMode::Backtracking => backtrack(sys),
    }
}

fn exhaustive(sys: &SetSystem) -> TwoColoring {
    assert!(sys.ground <= 24, "exhaustive mode is limited to 24 elements");
    let masks: Vec<u32> = sys
        .sets
        .iter()
        .map(|s| s.iter().fold(0u32, |m, &e| m | 1 << e))
        .collect();
    let total = 1u64 << sys.ground;
    // bit set means color 1
    for code in 0..total {
        let m = code as u32;
        if masks.iter().all(|&s| m & s != 0 && m & s != s) {
            let coloring = (0..sys.ground)
                .map(|e| Color::new(if m >> e & 1 == 1 { 1 } else { 2 }))
                .collect();
            return TwoColoring::Proper(coloring);
        }
    }
    TwoColoring::NoneExists {
        mode: SearchMode::Exhaustive,
        examined: total,
    }
}

fn backtrack(sys: &SetSystem) -> TwoColoring {
    if sys.sets.iter().any(|s| s.is_empty()) {
        return TwoColoring::NoneExists {
            mode: SearchMode::Backtracking,
            examined: 0,
        };
    }
    // each set is checked once its largest element is colored
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); sys.ground];
    for (i, s) in sys.sets.iter().enumerate() {
        let last = *s.iter().max().expect("nonempty");
        closing[last].push(i);
    }
    let mut color = vec![0u8; sys.ground];
    let mut examined = 0u64;

    fn go(
        e: usize,
        sys: &SetSystem,
        closing: &[Vec<usize>],
        color: &mut [u8],
        examined: &mut u64,
    ) -> bool {
        if e == sys.ground {
            return true;
        }
        // the first element is fixed to color 1; swapping colors preserves properness
        let choices: &[u8] = if e == 0 { &[1] } else { &[1, 2] };
        for &c in choices {
            color[e] = c;
            *examined += 1;
            let ok = closing[e].iter().all(|&i| {
                let s = &sys.sets[i];
                s.iter().any(|&x| color[x] != color[s[0]])
            });
            if ok && go(e + 1, sys, closing, color, examined) {
                return true;
            }
        }
        color[e] = 0;
        false
    }

    if go(0, sys, &closing, &mut color, &mut examined) {
        TwoColoring::Proper(color.into_iter().map(|c| Color::new(c.max(1) as u32)).collect())
    } else {
        TwoColoring::NoneExists {
            mode: SearchMode::Backtracking,
            examined,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_element_set_gets_one_of_each() {
        let sys = SetSystem::new(2, vec![vec![0, 1]]);
        assert_eq!(
            check_set_system_2colorable(&sys),
            TwoColoring::Proper(vec![Color::new(1), Color::new(2)])
        );
    }

    #[test]
    fn root_with_two_children() {
        // vertices r=0, v1=1, v2=2: siblings {1,2}, paths {0,1}, {0,2}
        let sys = SetSystem::new(3, vec![vec![1, 2], vec![0, 1], vec![0, 2]]);
        assert_eq!(
            check_set_system_2colorable(&sys),
            TwoColoring::NoneExists {
                mode: SearchMode::Exhaustive,
                examined: 8
            }
        );
        assert!(check_set_system_2colorable_with(&sys, SearchMode::Backtracking).is_none());
    }

    #[test]
    fn singletons_and_empty_sets_are_never_proper() {
        assert!(check_set_system_2colorable(&SetSystem::new(3, vec![vec![1]])).is_none());
        for mode in [SearchMode::Exhaustive, SearchMode::Backtracking] {
            assert!(check_set_system_2colorable_with(&SetSystem::new(2, vec![vec![]]), mode).is_none());
        }
        assert!(!check_set_system_2colorable(&SetSystem::new(0, vec![])).is_none());
    }

    proptest! {
        #[test]
        fn modes_agree(
            ground in 1usize..10,
            raw in prop::collection::vec(prop::collection::btree_set(0usize..10, 1..4), 0..8),
        ) {
            let sets: Vec<Vec<usize>> = raw
                .into_iter()
                .map(|s| s.into_iter().filter(|&e| e < ground).collect::<Vec<_>>())
                .filter(|s| !s.is_empty())
                .collect();
            let sys = SetSystem::new(ground, sets);
            let a = check_set_system_2colorable_with(&sys, SearchMode::Exhaustive);
            let b = check_set_system_2colorable_with(&sys, SearchMode::Backtracking);
            prop_assert_eq!(a.is_none(), b.is_none());
            for r in [a, b] {
                if let TwoColoring::Proper(c) = r {
                    prop_assert!(sys.is_proper(&c));
                }
            }
        }
    }
}
