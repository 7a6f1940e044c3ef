//! The adversary that defeats every online 2-coloring.
//!
//! The sequence is always a run of red points followed by a run of blue
//! points, and each new point is placed at the boundary between the runs.
//! Whatever color the strategy picks, the new point extends one of the runs,
//! so after `n` steps one run holds at least `ceil(n/2)` points.
//! Positions are ranks in the sequence rather than coordinates.

use crate::error::{Error, Result};
use crate::sequence::Color;

pub const RED: Color = Color::RED;
pub const BLUE: Color = Color::BLUE;

/// An online 2-coloring. It sees the sequence after insertion, with the new
/// point as the only `None`, and must answer 1 (red) or 2 (blue) at once.
pub trait OnlineStrategy {
    fn name(&self) -> &str;
    fn choose(&mut self, view: &[Option<Color>]) -> Result<u32>;
}

pub struct AlwaysRed;

impl OnlineStrategy for AlwaysRed {
    fn name(&self) -> &str {
        "always-red"
    }

    fn choose(&mut self, _view: &[Option<Color>]) -> Result<u32> {
        Ok(1)
    }
}

/// Red, blue, red, ...
#[derive(Default)]
pub struct Alternate {
    step: usize,
}

impl OnlineStrategy for Alternate {
    fn name(&self) -> &str {
        "alternate"
    }

    fn choose(&mut self, _view: &[Option<Color>]) -> Result<u32> {
        self.step += 1;
        Ok(if self.step % 2 == 1 { 1 } else { 2 })
    }
}

/// The color used less often so far; red on ties.
pub struct BalanceGreedy;

impl OnlineStrategy for BalanceGreedy {
    fn name(&self) -> &str {
        "balance-greedy"
    }

    fn choose(&mut self, view: &[Option<Color>]) -> Result<u32> {
        let red = view.iter().filter(|c| **c == Some(RED)).count();
        let blue = view.iter().filter(|c| **c == Some(BLUE)).count();
        Ok(if red <= blue { 1 } else { 2 })
    }
}

/// Wraps a closure as a strategy.
pub struct FnStrategy<F> {
    name: String,
    f: F,
}

impl<F> FnStrategy<F>
where
    F: FnMut(&[Option<Color>]) -> Result<u32>,
{
    pub fn new(name: impl Into<String>, f: F) -> Self {
        Self { name: name.into(), f }
    }
}

impl<F> OnlineStrategy for FnStrategy<F>
where
    F: FnMut(&[Option<Color>]) -> Result<u32>,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn choose(&mut self, view: &[Option<Color>]) -> Result<u32> {
        (self.f)(view)
    }
}

/// Looks up a built-in strategy by name.
pub fn builtin(name: &str) -> Option<Box<dyn OnlineStrategy>> {
    match name {
        "always-red" => Some(Box::new(AlwaysRed)),
        "alternate" => Some(Box::new(Alternate::default())),
        "balance-greedy" => Some(Box::new(BalanceGreedy)),
        _ => None,
    }
}

pub const BUILTIN_STRATEGIES: [&str; 3] = ["always-red", "alternate", "balance-greedy"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    /// 1-based step number.
    pub step: usize,
    /// Rank of the new point in the sequence after insertion.
    pub position: usize,
    pub color: Color,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AdversaryState {
    colors: Vec<Color>,
    boundary: usize,
}

impl AdversaryState {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Index of the first blue point, i.e. the length of the red run.
    pub fn boundary(&self) -> usize {
        self.boundary
    }

    pub fn max_run(&self) -> usize {
        let mut best = 0;
        let mut run = 0;
        for (i, c) in self.colors.iter().enumerate() {
            run = if i > 0 && self.colors[i - 1] == *c { run + 1 } else { 1 };
            best = best.max(run);
        }
        best
    }

    /// Red run followed by blue run, split at `boundary`.
    pub fn invariant_holds(&self) -> bool {
        self.boundary <= self.colors.len()
            && self.colors[..self.boundary].iter().all(|&c| c == RED)
            && self.colors[self.boundary..].iter().all(|&c| c == BLUE)
    }

    /// Places a point at the run boundary and lets `strategy` color it.
    pub fn step(&mut self, strategy: &mut dyn OnlineStrategy) -> Result<Step> {
        let position = self.boundary;
        let mut view: Vec<Option<Color>> = self.colors.iter().copied().map(Some).collect();
        view.insert(position, None);
        let color = match strategy.choose(&view)? {
            1 => RED,
            2 => BLUE,
            other => {
                return Err(Error::Strategy(format!(
                    "{} answered {other}, expected 1 or 2",
                    strategy.name()
                )))
            }
        };
        self.colors.insert(position, color);
        if color == RED {
            self.boundary += 1;
        }
        Ok(Step {
            step: self.colors.len(),
            position,
            color,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdversaryReport {
    pub strategy: String,
    pub transcript: Vec<Step>,
    pub final_state: AdversaryState,
    pub max_run: usize,
}

/// Plays `steps` rounds against `strategy`, checking the run invariant after
/// each one and the final run bound.
pub fn run_adversary(strategy: &mut dyn OnlineStrategy, steps: usize) -> Result<AdversaryReport> {
    let mut state = AdversaryState::new();
    let mut transcript = Vec::with_capacity(steps);
    for _ in 0..steps {
        transcript.push(state.step(strategy)?);
        if !state.invariant_holds() {
            return Err(Error::SelfCheck(format!(
                "run invariant broken after step {}",
                state.len()
            )));
        }
    }
    let max_run = state.max_run();
    if max_run < steps.div_ceil(2) {
        return Err(Error::SelfCheck(format!(
            "longest run {max_run} is below {}",
            steps.div_ceil(2)
        )));
    }
    Ok(AdversaryReport {
        strategy: strategy.name().to_string(),
        transcript,
        final_state: state,
        max_run,
    })
}
