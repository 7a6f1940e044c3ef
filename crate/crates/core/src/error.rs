use thiserror::Error;

use crate::point::Rational;
use crate::sequence::{Color, GapKind};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} is already present in the sequence")]
    DuplicateValue(Rational),

    #[error("duplicate {what} {value} (inputs #{first} and #{second})")]
    Degenerate {
        what: &'static str,
        value: Rational,
        first: usize,
        second: usize,
    },

    #[error("point #{index} departs at {departure} before it arrives at {arrival}")]
    DepartsBeforeArrival {
        index: usize,
        arrival: Box<Rational>,
        departure: Box<Rational>,
    },

    #[error("point set is not normalized (x and y coordinates must be pairwise distinct)")]
    NotNormalized,

    #[error("index {index} is already colored {color}; colors are permanent")]
    Recolor { index: usize, color: Color },

    #[error("index {index} is out of bounds for a sequence of length {len}")]
    IndexOutOfBounds { index: usize, len: usize },

    #[error("number of colors must be at least 1")]
    ZeroColors,

    #[error("window size must be at least 1")]
    ZeroWindow,

    #[error("coloring has {got} entries but the point set has {expected}")]
    ColoringLength { expected: usize, got: usize },

    #[error("color {color} is outside 1..={max}")]
    ColorOutOfRange { color: u32, max: u32 },

    #[error("repair of a gap for color {color} at {start}..{end} found no uncolored middle point")]
    NoUncoloredMiddle { color: Color, start: usize, end: usize },

    #[error("gap for color {color} at {start}..{end} holds {count} points, expected {expected}")]
    GapSize {
        color: Color,
        start: usize,
        end: usize,
        count: usize,
        expected: usize,
    },

    #[error("invariant ({invariant}) violated by the {kind:?} gap for color {color} at {start}..{end} holding {count} points")]
    Invariant {
        invariant: char,
        color: Color,
        kind: GapKind,
        start: usize,
        end: usize,
        count: usize,
    },

    #[error("no free color among 1..={max} for the point inserted at index {index}")]
    NoFreeColor { index: usize, max: u32 },

    #[error("exhaustive search refused: {points} points with {colors} colors exceeds the budget of {max_points} points")]
    BudgetExceeded {
        points: usize,
        colors: u32,
        max_points: usize,
    },

    #[error("parameter {name} = {value} is outside the supported range {range}")]
    Parameter {
        name: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("strategy error: {0}")]
    Strategy(String),

    #[error("construction self-check failed: {0}")]
    SelfCheck(String),
}
