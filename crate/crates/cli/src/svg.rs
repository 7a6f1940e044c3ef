//! Deterministic SVG 1.1 figures of colored points and segments.
//!
//! Data coordinates map linearly onto a fixed 640x640 canvas with a margin,
//! y pointing up. Numbers are written with two decimals so identical inputs
//! give identical bytes.

use std::fmt::Write;

use bottomless::geometry::{BottomlessRect, HSegment, Point};
use bottomless::{Color, Rational};
use num::ToPrimitive;

const SIZE: f64 = 640.0;
const MARGIN: f64 = 40.0;

/// Distinguishable fill colors, indexed by color id minus one.
pub const PALETTE: [&str; 10] = [
    "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22",
    "#17becf",
];
const UNCOLORED: &str = "#000000";

pub fn max_colors() -> usize {
    PALETTE.len()
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Viewport {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl Viewport {
    /// Fits the box of `xs` by `ys` into the canvas with equal scales on
    /// both axes, centred.
    fn fit(xs: &[f64], ys: &[f64]) -> Self {
        let span = |v: &[f64]| {
            let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if lo.is_finite() {
                (lo, hi)
            } else {
                (0.0, 0.0)
            }
        };
        let (xl, xh) = span(xs);
        let (yl, yh) = span(ys);
        let extent = (xh - xl).max(yh - yl);
        let scale = if extent > 0.0 { (SIZE - 2.0 * MARGIN) / extent } else { 1.0 };
        Self {
            x0: (xl + xh) / 2.0,
            y0: (yl + yh) / 2.0,
            scale,
        }
    }

    fn x(&self, x: f64) -> f64 {
        (SIZE / 2.0 + (x - self.x0) * self.scale).clamp(0.0, SIZE)
    }

    fn y(&self, y: f64) -> f64 {
        (SIZE / 2.0 - (y - self.y0) * self.scale).clamp(0.0, SIZE)
    }
}

pub enum Item<'a> {
    Point(&'a Point),
    Segment(&'a HSegment),
}

fn fill(color: Option<Color>) -> &'static str {
    color.map_or(UNCOLORED, |c| PALETTE[c.index()])
}

/// Renders `items` (with optional colors, same order) and shaded bottomless
/// rectangles. Colors must lie within the palette.
pub fn render(items: &[Item<'_>], colors: Option<&[Color]>, rects: &[BottomlessRect]) -> String {
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for item in items {
        match item {
            Item::Point(p) => {
                xs.push(f(&p.x));
                ys.push(f(&p.y));
            }
            Item::Segment(s) => {
                xs.extend([f(&s.x_lo), f(&s.x_hi)]);
                ys.push(f(&s.y));
            }
        }
    }
    let view = Viewport::fit(&xs, &ys);
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{SIZE}\" height=\"{SIZE}\" viewBox=\"0 0 {SIZE} {SIZE}\">"
    );
    let _ = writeln!(out, "<rect x=\"0\" y=\"0\" width=\"{SIZE}\" height=\"{SIZE}\" fill=\"#ffffff\"/>");
    for r in rects {
        let (left, right, top) = (view.x(f(r.a())), view.x(f(r.b())), view.y(f(r.c())));
        let _ = writeln!(
            out,
            "<rect class=\"range\" x=\"{left:.2}\" y=\"{top:.2}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"#4a90d9\" fill-opacity=\"0.2\" stroke=\"#4a90d9\"/>",
            right - left,
            SIZE - top
        );
    }
    for (i, item) in items.iter().enumerate() {
        let color = fill(colors.map(|c| c[i]));
        match item {
            Item::Point(p) => {
                let _ = writeln!(
                    out,
                    "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"5\" fill=\"{color}\"/>",
                    view.x(f(&p.x)),
                    view.y(f(&p.y))
                );
            }
            Item::Segment(s) => {
                let y = view.y(f(&s.y));
                let _ = writeln!(
                    out,
                    "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"{color}\" stroke-width=\"2\"/>",
                    view.x(f(&s.x_lo)),
                    view.x(f(&s.x_hi))
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use bottomless::int;

    fn pts() -> Vec<Point> {
        (0..4).map(|i| Point::new(int(i), int(3 - i))).collect()
    }

    #[test]
    fn one_circle_per_point() {
        let p = pts();
        let items: Vec<Item> = p.iter().map(Item::Point).collect();
        let svg = render(&items, None, &[]);
        assert_eq!(svg.matches("<circle").count(), 4);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.contains("version=\"1.1\""));
    }

    #[test]
    fn rectangle_is_clipped() {
        let p = pts();
        let items: Vec<Item> = p.iter().map(Item::Point).collect();
        let rect = BottomlessRect::new(int(-100), int(1), int(1)).unwrap();
        let svg = render(&items, None, &[rect]);
        assert_eq!(svg.matches("class=\"range\"").count(), 1);
        assert!(svg.contains("<rect class=\"range\" x=\"0.00\""));
    }

    #[test]
    fn identical_inputs_identical_bytes() {
        let p = pts();
        let items: Vec<Item> = p.iter().map(Item::Point).collect();
        let colors = [Color::new(1), Color::new(2), Color::new(10), Color::new(1)];
        assert_eq!(render(&items, Some(&colors), &[]), render(&items, Some(&colors), &[]));
    }

    #[test]
    fn empty_input_renders() {
        assert!(render(&[], None, &[]).ends_with("</svg>\n"));
    }
}
