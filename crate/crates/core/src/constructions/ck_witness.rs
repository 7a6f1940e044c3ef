use crate::error::{Error, Result};
use crate::geometry::{BottomlessRect, PlanarPointSet, Point};
use crate::int;

/// `{(i, 2i) : 0 <= i < k} ∪ {(2k - i, 2i - 1) : 1 <= i < k}`: every pair of
/// its `2k-1` points shares a bottomless rectangle holding at most `k`
/// points, so no window rule with `k` can reuse a color.
pub fn build_ck_witness(k: u32) -> Result<PlanarPointSet> {
    if k == 0 {
        return Err(Error::ZeroColors);
    }
    let k = k as i64;
    let points: Vec<Point> = (0..k)
        .map(|i| Point::new(int(i), int(2 * i)))
        .chain((1..k).map(|i| Point::new(int(2 * k - i), int(2 * i - 1))))
        .collect();
    let set = PlanarPointSet::new(points);
    ck_witness_self_check(&set, k as usize)?;
    Ok(set)
}

/// Every pair of points lies in a common bottomless rectangle with at most
/// `k` points: the smallest rectangle spanning both is tested.
pub fn ck_witness_self_check(s: &PlanarPointSet, k: usize) -> Result<()> {
    if !s.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let pts = s.points();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (p, q) = (&pts[i], &pts[j]);
            let rect = BottomlessRect::new(
                p.x.clone().min(q.x.clone()),
                p.x.clone().max(q.x.clone()),
                p.y.clone().max(q.y.clone()),
            )
            .expect("min <= max");
            let trapped = rect.trapped(s).len();
            if trapped > k {
                return Err(Error::SelfCheck(format!(
                    "points #{i} and #{j} share no rectangle with at most {k} points ({trapped})"
                )));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::Color;
    use crate::verifier::{find_coloring, rectangles_pass, SearchBudget, WindowMode};

    #[test]
    fn four_has_seven_points() {
        let s = build_ck_witness(4).unwrap();
        let raw: Vec<(i64, i64)> = s
            .points()
            .iter()
            .map(|p| (p.x.to_integer().try_into().unwrap(), p.y.to_integer().try_into().unwrap()))
            .collect();
        assert_eq!(raw, vec![(0, 0), (1, 2), (2, 4), (3, 6), (7, 1), (6, 3), (5, 5)]);
    }

    #[test]
    fn one_is_origin() {
        let s = build_ck_witness(1).unwrap();
        assert_eq!(s.points(), &[Point::new(int(0), int(0))]);
    }

    #[test]
    fn self_check_up_to_32() {
        for k in 1..=32 {
            build_ck_witness(k).unwrap();
        }
    }

    #[test]
    fn three_needs_five_colors() {
        let s = build_ck_witness(3).unwrap();
        let n = s.len() as u32;
        // every assignment of 4 colors, one by one
        let mut any = false;
        for code in 0..4u32.pow(n) {
            let mut c = code;
            let coloring: Vec<Color> = (0..n)
                .map(|_| {
                    let col = Color::new(c % 4 + 1);
                    c /= 4;
                    col
                })
                .collect();
            any |= rectangles_pass(&s, &coloring, 3, WindowMode::NoRepeat, 4).unwrap();
        }
        assert!(!any);
        let five = find_coloring(&s, 5, 3, WindowMode::NoRepeat, SearchBudget::points(8)).unwrap();
        assert!(five.coloring.is_some());
    }

    #[test]
    fn pairs_fail_when_rectangles_are_too_small() {
        let s = build_ck_witness(4).unwrap();
        assert!(ck_witness_self_check(&s, 3).is_err());
    }
}
