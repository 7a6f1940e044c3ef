//! Dynamic point sets on the real line.
//!
//! A point appears at its arrival time and is present on the half-open
//! interval `[arrival, departure)`. All coordinates and times are exact
//! rationals.

use std::fmt;

use num::BigRational;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Departure time of a point; `Never` sorts after every finite time.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Departure {
    At(Rational),
    Never,
}

impl Departure {
    pub fn is_after(&self, t: &Rational) -> bool {
        match self {
            Departure::At(d) => d > t,
            Departure::Never => true,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Departure::At(d) => Some(d),
            Departure::Never => None,
        }
    }
}

impl fmt::Display for Departure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Departure::At(d) => write!(f, "{d}"),
            Departure::Never => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynamicPoint {
    pub value: Rational,
    pub arrival: Rational,
    pub departure: Departure,
}

impl DynamicPoint {
    pub fn new(value: Rational, arrival: Rational, departure: Departure) -> Self {
        Self {
            value,
            arrival,
            departure,
        }
    }

    /// A point that never departs.
    pub fn permanent(value: Rational, arrival: Rational) -> Self {
        Self::new(value, arrival, Departure::Never)
    }

    pub fn is_present_at(&self, t: &Rational) -> bool {
        &self.arrival <= t && self.departure.is_after(t)
    }
}

/// What to do with coinciding values or arrival times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TiePolicy {
    /// Break ties by input order with an exact perturbation smaller than any
    /// gap between distinct values.
    #[default]
    Perturb,
    Reject,
}

/// Breaks ties among `values` by input index. Members of a tie group keep
/// their first value for the earliest input and are shifted up by
/// `j * delta / m` for the `j`-th later one, where `delta` is the smallest gap
/// between distinct entries of `values` and `context`. Strict order between
/// distinct entries (including `context` entries) is preserved.
pub(crate) fn perturb_ties(values: &[Rational], context: &[Rational]) -> Vec<Rational> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));

    let mut all: Vec<&Rational> = values.iter().chain(context.iter()).collect();
    all.sort();
    all.dedup();
    let delta = all
        .windows(2)
        .map(|w| w[1] - w[0])
        .min()
        .unwrap_or_else(|| Rational::from_integer(1.into()));

    let mut out = values.to_vec();
    let mut i = 0;
    while i < order.len() {
        let mut j = i + 1;
        while j < order.len() && values[order[j]] == values[order[i]] {
            j += 1;
        }
        let m = j - i;
        for (rank, &idx) in order[i..j].iter().enumerate().skip(1) {
            out[idx] = &values[idx] + &delta * Rational::new(rank.into(), m.into());
        }
        i = j;
    }
    out
}

/// First pair of inputs sharing a value, in input order.
pub(crate) fn first_duplicate(values: &[Rational]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]).then(a.cmp(&b)));
    order
        .windows(2)
        .filter(|w| values[w[0]] == values[w[1]])
        .map(|w| (w[0], w[1]))
        .min()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DynamicPointSet {
    points: Vec<DynamicPoint>,
    insertion_only: bool,
}

impl DynamicPointSet {
    /// Builds a set in general position: distinct values and distinct
    /// arrival times, resolving ties according to `policy`.
    pub fn new(points: Vec<DynamicPoint>, policy: TiePolicy) -> Result<Self> {
        for (index, p) in points.iter().enumerate() {
            if let Departure::At(d) = &p.departure {
                if d < &p.arrival {
                    return Err(Error::DepartsBeforeArrival {
                        index,
                        arrival: Box::new(p.arrival.clone()),
                        departure: Box::new(d.clone()),
                    });
                }
            }
        }

        let values: Vec<Rational> = points.iter().map(|p| p.value.clone()).collect();
        let arrivals: Vec<Rational> = points.iter().map(|p| p.arrival.clone()).collect();
        let mut points = points;
        match policy {
            TiePolicy::Reject => {
                if let Some((first, second)) = first_duplicate(&values) {
                    return Err(Error::Degenerate {
                        what: "value",
                        value: values[first].clone(),
                        first,
                        second,
                    });
                }
                if let Some((first, second)) = first_duplicate(&arrivals) {
                    return Err(Error::Degenerate {
                        what: "arrival time",
                        value: arrivals[first].clone(),
                        first,
                        second,
                    });
                }
            }
            TiePolicy::Perturb => {
                let departures: Vec<Rational> = points
                    .iter()
                    .filter_map(|p| p.departure.finite().cloned())
                    .collect();
                let values = perturb_ties(&values, &[]);
                let arrivals = perturb_ties(&arrivals, &departures);
                for ((p, v), a) in points.iter_mut().zip(values).zip(arrivals) {
                    p.value = v;
                    p.arrival = a;
                    // A zero-length presence stays empty.
                    if let Departure::At(d) = &p.departure {
                        if d < &p.arrival {
                            p.departure = Departure::At(p.arrival.clone());
                        }
                    }
                }
            }
        }
        let insertion_only = points.iter().all(|p| p.departure == Departure::Never);
        Ok(Self {
            points,
            insertion_only,
        })
    }

    /// Insertion-only set from `(value, arrival)` pairs.
    pub fn insertion_only<I>(pairs: I, policy: TiePolicy) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        Self::new(
            pairs
                .into_iter()
                .map(|(v, a)| DynamicPoint::permanent(v, a))
                .collect(),
            policy,
        )
    }

    pub fn points(&self) -> &[DynamicPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_insertion_only(&self) -> bool {
        self.insertion_only
    }

    /// Values present at time `t`, sorted.
    pub fn snapshot(&self, t: &Rational) -> Vec<Rational> {
        self.snapshot_indices(t)
            .into_iter()
            .map(|i| self.points[i].value.clone())
            .collect()
    }

    /// Indices of the points present at time `t`, sorted by value.
    pub fn snapshot_indices(&self, t: &Rational) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.points.len())
            .filter(|&i| self.points[i].is_present_at(t))
            .collect();
        idx.sort_by(|&a, &b| self.points[a].value.cmp(&self.points[b].value));
        idx
    }

    /// Point indices in order of arrival (input order breaks ties).
    pub fn arrival_order(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.points.len()).collect();
        idx.sort_by(|&a, &b| {
            self.points[a]
                .arrival
                .cmp(&self.points[b].arrival)
                .then(a.cmp(&b))
        });
        idx
    }

    /// Sorted distinct arrival and finite departure times. The snapshot is
    /// constant between consecutive event times.
    pub fn event_times(&self) -> Vec<Rational> {
        let mut times: Vec<Rational> = self
            .points
            .iter()
            .flat_map(|p| std::iter::once(p.arrival.clone()).chain(p.departure.finite().cloned()))
            .collect();
        times.sort();
        times.dedup();
        times
    }

    /// Integer-ranked view used by the checkers.
    pub fn event_index(&self) -> EventIndex {
        let times = self.event_times();
        let rank = |t: &Rational| -> u32 {
            times
                .binary_search(t)
                .expect("event time is indexed") as u32
        };
        let arrival = self.points.iter().map(|p| rank(&p.arrival)).collect();
        let departure = self
            .points
            .iter()
            .map(|p| p.departure.finite().map_or(u32::MAX, rank))
            .collect();
        let mut by_value: Vec<usize> = (0..self.points.len()).collect();
        by_value.sort_by(|&a, &b| {
            self.points[a]
                .value
                .cmp(&self.points[b].value)
                .then(a.cmp(&b))
        });
        EventIndex {
            times,
            arrival,
            departure,
            by_value,
        }
    }
}

/// Event times of a dynamic set with every point's presence expressed as a
/// half-open range of event ranks.
#[derive(Debug, Clone)]
pub struct EventIndex {
    pub times: Vec<Rational>,
    pub arrival: Vec<u32>,
    /// `u32::MAX` for points that never depart.
    pub departure: Vec<u32>,
    pub by_value: Vec<usize>,
}

impl EventIndex {
    /// Point indices present at the `event`-th event time, in value order.
    pub fn present_at(&self, event: usize) -> impl Iterator<Item = usize> + '_ {
        let e = event as u32;
        self.by_value
            .iter()
            .copied()
            .filter(move |&i| self.arrival[i] <= e && e < self.departure[i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, ratio};

    fn set(points: Vec<DynamicPoint>) -> DynamicPointSet {
        DynamicPointSet::new(points, TiePolicy::Reject).unwrap()
    }

    #[test]
    fn snapshot_at_arrival() {
        let s = set(vec![DynamicPoint::permanent(int(5), int(0))]);
        assert_eq!(s.snapshot(&int(0)), vec![int(5)]);
    }

    #[test]
    fn snapshot_excludes_departure_time() {
        let s = set(vec![
            DynamicPoint::new(int(1), int(0), Departure::At(int(2))),
            DynamicPoint::new(int(3), int(1), Departure::At(int(4))),
        ]);
        assert_eq!(s.snapshot(&int(2)), vec![int(3)]);
    }

    #[test]
    fn snapshot_between_arrivals() {
        let s = set(vec![
            DynamicPoint::permanent(int(1), int(0)),
            DynamicPoint::permanent(int(2), int(1)),
            DynamicPoint::permanent(int(0), int(2)),
        ]);
        assert_eq!(s.snapshot(&ratio(3, 2)), vec![int(1), int(2)]);
        assert!(s.is_insertion_only());
    }

    #[test]
    fn rejects_departure_before_arrival() {
        let err = DynamicPointSet::new(
            vec![DynamicPoint::new(int(0), int(3), Departure::At(int(2)))],
            TiePolicy::Perturb,
        )
        .unwrap_err();
        assert!(matches!(err, Error::DepartsBeforeArrival { index: 0, .. }));
    }

    #[test]
    fn reject_policy_reports_first_duplicate() {
        let err = DynamicPointSet::insertion_only(
            vec![(int(1), int(0)), (int(2), int(1)), (int(1), int(2))],
            TiePolicy::Reject,
        )
        .unwrap_err();
        assert_eq!(
            err,
            Error::Degenerate {
                what: "value",
                value: int(1),
                first: 0,
                second: 2
            }
        );
    }

    #[test]
    fn perturbation_keeps_input_order_within_ties() {
        let s = DynamicPointSet::insertion_only(
            vec![
                (int(1), int(0)),
                (int(1), int(0)),
                (int(2), int(0)),
                (int(1), int(5)),
            ],
            TiePolicy::Perturb,
        )
        .unwrap();
        let v: Vec<_> = s.points().iter().map(|p| p.value.clone()).collect();
        assert_eq!(v, vec![int(1), ratio(4, 3), int(2), ratio(5, 3)]);
        let a: Vec<_> = s.points().iter().map(|p| p.arrival.clone()).collect();
        // gap between distinct arrivals is 5, three tied at 0
        assert_eq!(a, vec![int(0), ratio(5, 3), ratio(10, 3), int(5)]);
    }

    #[test]
    fn perturbation_respects_departure_times() {
        let s = DynamicPointSet::new(
            vec![
                DynamicPoint::new(int(0), int(0), Departure::At(int(1))),
                DynamicPoint::new(int(1), int(0), Departure::Never),
            ],
            TiePolicy::Perturb,
        )
        .unwrap();
        assert_eq!(s.points()[1].arrival, ratio(1, 2));
        assert!(!s.is_insertion_only());
    }

    #[test]
    fn event_index_matches_snapshots() {
        let s = set(vec![
            DynamicPoint::new(int(4), int(0), Departure::At(int(3))),
            DynamicPoint::new(int(1), int(1), Departure::Never),
            DynamicPoint::new(int(2), int(2), Departure::At(int(5))),
        ]);
        let idx = s.event_index();
        assert_eq!(idx.times, vec![int(0), int(1), int(2), int(3), int(5)]);
        for (e, t) in idx.times.iter().enumerate() {
            let direct = s.snapshot_indices(t);
            let ranked: Vec<usize> = idx.present_at(e).collect();
            assert_eq!(direct, ranked, "event {e}");
        }
    }
}
