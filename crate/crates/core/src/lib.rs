//! Polychromatic colorings of dynamic point sets on a line and of planar
//! point sets with respect to bottomless rectangles.
//!
//! The crate is organised around a handful of modules:
//!
//! * [`point`] and [`sequence`]: exact-rational dynamic point sets, snapshots,
//!   the colored sequence with its per-color occurrence index, gaps and windows.
//! * [`colorer`]: the semi-online gap-repair colorer (every window of `3k-2`
//!   consecutive points is rainbow) and the online `2k-1` colorer (every window
//!   of `k` consecutive points has distinct colors).
//! * [`geometry`]: bottomless rectangles, the vertical sweep that turns a
//!   planar set into an insertion-only dynamic set, and corners in 3D.
//! * [`verifier`]: window and rectangle checkers, gap audits and exhaustive
//!   small-instance oracles.
//! * [`constructions`]: generators for the adversarial objects (segment trees
//!   that defeat 2-colorings, the lower-bound point sets, the `c(k)` witness and
//!   the online adversary).

pub mod colorer;
pub mod constructions;
pub mod error;
pub mod geometry;
pub mod point;
pub mod sequence;
pub mod verifier;

pub use error::{Error, Result};
pub use point::{Departure, DynamicPoint, DynamicPointSet, Rational, TiePolicy};
pub use sequence::{Color, ColoredSequence, Gap, GapKind};

/// Shorthand for an integral rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Shorthand for `num / den`.
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
