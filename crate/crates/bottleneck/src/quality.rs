//! Extended-real element qualities and the optimization direction.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// Quality of an element: an extended real with explicit infinities.
///
/// `NegInf` is the flag value for infeasible states (and for `Q` of the
/// empty set); `PosInf` marks elements that can never be the bottleneck,
/// such as interior points or neutral gadget edges.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub enum Quality<T> {
    NegInf,
    Finite(T),
    PosInf,
}

impl<T: Copy + PartialOrd + fmt::Debug> Quality<T> {
    pub fn finite(self) -> Option<T> {
        match self {
            Quality::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Quality::Finite(_))
    }

    /// Total order; panics on incomparable finite values (NaN).
    pub fn cmp_total(&self, other: &Self) -> Ordering {
        use Quality::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a
                .partial_cmp(b)
                .unwrap_or_else(|| panic!("incomparable qualities {a:?} and {b:?}")),
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self.cmp_total(&other) == Ordering::Greater {
            other
        } else {
            self
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self.cmp_total(&other) == Ordering::Less {
            other
        } else {
            self
        }
    }
}

impl<T: Copy + PartialOrd + fmt::Debug> PartialOrd for Quality<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp_total(other))
    }
}

impl<T: fmt::Display> fmt::Display for Quality<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quality::NegInf => write!(f, "-inf"),
            Quality::Finite(v) => v.fmt(f),
            Quality::PosInf => write!(f, "+inf"),
        }
    }
}

/// Whether a bottleneck solve maximizes the minimum weight or minimizes the
/// maximum weight. The solvers are max-min native; min-max is realized by
/// flipping every weight comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    MaxMin,
    MinMax,
}

impl Direction {
    /// Comparison in removal order: elements that compare `Less` here are
    /// removed earlier by the greedy.
    pub fn removal_cmp<T: PartialOrd + fmt::Debug>(self, a: &T, b: &T) -> Ordering {
        let ord = a
            .partial_cmp(b)
            .unwrap_or_else(|| panic!("incomparable weights {a:?} and {b:?}"));
        match self {
            Direction::MaxMin => ord,
            Direction::MinMax => ord.reverse(),
        }
    }
}
