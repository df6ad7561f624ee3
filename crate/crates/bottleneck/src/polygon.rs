//! Max-min-angle polygons in the plane.
//!
//! The quality of a point within a surviving set is its interior angle when
//! it is a hull vertex, pi when it lies on the hull boundary without being a
//! vertex, and 2 pi when it is strictly interior. The quality only drops as
//! points are removed, so the decremental greedy over hull angles finds the
//! polygon maximizing the minimum angle among all closed polygonal curves
//! with vertices in the set.

use num_traits::{Float, FloatConst};
use serde::Serialize;
use thiserror::Error;

use crate::geom::{convex_hull_2d, orient2d, Hull2, Point2};
use crate::greedy::{decremental_greedy, GreedyTrace, Instance, MinQuality};
use crate::quality::Quality;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolygonError {
    #[error("need at least 3 distinct points")]
    TooFewPoints,
    #[error("all points are collinear")]
    Collinear,
}

/// Mapping from original input indices to deduplicated indices.
#[derive(Clone, Debug, Serialize)]
pub struct DedupInfo {
    pub index_map: Vec<usize>,
    pub dropped: usize,
}

pub fn dedup_points2<T: Float>(points: &[Point2<T>]) -> (Vec<Point2<T>>, DedupInfo) {
    let mut kept: Vec<Point2<T>> = Vec::new();
    let mut index_map = Vec::with_capacity(points.len());
    for p in points {
        match kept.iter().position(|q| *q == *p) {
            Some(i) => index_map.push(i),
            None => {
                index_map.push(kept.len());
                kept.push(*p);
            }
        }
    }
    let dropped = points.len() - kept.len();
    (kept, DedupInfo { index_map, dropped })
}

/// Hull-angle quality instance over a planar point set.
///
/// Alive points that are not hull vertices report 2 pi without the
/// boundary/interior distinction: both classes sit above every strict
/// vertex angle, so they can never be the minimum or eligible for removal
/// while the hull is non-degenerate. [`point_quality_2d`] performs the full
/// classification.
#[derive(Clone)]
pub struct Polygon2dInstance<T> {
    hull: Hull2<T>,
}

impl<T: Float + FloatConst + std::fmt::Debug> Polygon2dInstance<T> {
    pub fn new(points: Vec<Point2<T>>) -> Self {
        Self { hull: Hull2::new(points) }
    }

    pub fn hull(&self) -> &Hull2<T> {
        &self.hull
    }
}

impl<T: Float + FloatConst + std::fmt::Debug> Instance for Polygon2dInstance<T> {
    type Value = T;

    fn universe(&self) -> usize {
        self.hull.points().len()
    }

    fn is_alive(&self, x: usize) -> bool {
        self.hull.is_alive(x)
    }

    fn quality(&self, x: usize) -> Quality<T> {
        debug_assert!(self.hull.is_alive(x));
        if self.hull.is_degenerate() {
            return Quality::NegInf;
        }
        match self.hull.hull_position(x) {
            Some(i) => Quality::Finite(self.hull.interior_angle(i)),
            None => Quality::Finite(T::PI() + T::PI()),
        }
    }

    fn remove(&mut self, x: usize) {
        self.hull.remove(x);
    }
}

/// Full point quality with the boundary distinction: interior angle for hull
/// vertices, pi on the boundary, 2 pi strictly inside; -inf in degenerate
/// states.
pub fn point_quality_2d<T: Float + FloatConst + std::fmt::Debug>(
    hull: &Hull2<T>,
    x: usize,
) -> Quality<T> {
    if hull.is_degenerate() {
        return Quality::NegInf;
    }
    if let Some(i) = hull.hull_position(x) {
        return Quality::Finite(hull.interior_angle(i));
    }
    if hull.on_boundary(x) {
        Quality::Finite(T::PI())
    } else {
        Quality::Finite(T::PI() + T::PI())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolygonResult<T> {
    /// The optimal minimum interior angle, in radians.
    pub theta: T,
    /// Counterclockwise cycle of hull vertex indices (into the deduplicated
    /// point list).
    pub polygon: Vec<usize>,
    /// The maximal bottleneck subset; includes interior and straight
    /// boundary points of the polygon.
    pub subset: Vec<usize>,
    #[serde(skip)]
    pub trace: GreedyTrace<T>,
    pub dedup: DedupInfo,
}

/// Finds the convex polygon maximizing the minimum interior angle among all
/// closed polygonal curves with vertices in the input set.
pub fn maxmin_angle_polygon<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point2<T>],
) -> Result<PolygonResult<T>, PolygonError> {
    let (pts, dedup) = dedup_points2(points);
    if pts.len() < 3 {
        return Err(PolygonError::TooFewPoints);
    }
    let mut inst = Polygon2dInstance::new(pts.clone());
    if inst.hull.is_degenerate() {
        return Err(PolygonError::Collinear);
    }
    let out = decremental_greedy(&mut inst, &mut MinQuality).expect("nonempty universe");
    let theta = out.theta.finite().expect("non-degenerate input has a finite optimum");

    let subset = out.subset;
    let subset_pts: Vec<Point2<T>> = subset.iter().map(|&i| pts[i]).collect();
    let polygon: Vec<usize> = convex_hull_2d(&subset_pts).into_iter().map(|i| subset[i]).collect();
    debug_assert!(polygon.len() >= 3);

    Ok(PolygonResult { theta, polygon, subset, trace: out.trace, dedup })
}

/// Minimum interior angle of the polygon cycle, recomputed from scratch.
pub fn min_polygon_angle<T: Float>(points: &[Point2<T>], cycle: &[usize]) -> T {
    let k = cycle.len();
    let mut best = T::infinity();
    for i in 0..k {
        let v = points[cycle[i]];
        let a = points[cycle[(i + k - 1) % k]];
        let c = points[cycle[(i + 1) % k]];
        let u = a.sub(v);
        let w = c.sub(v);
        let ang = u.cross(w).abs().atan2(u.dot(w));
        if ang < best {
            best = ang;
        }
    }
    best
}

/// The polygon cycle with straight boundary points of the subset spliced
/// into their edges, for callers that want them emitted.
pub fn polygon_with_straight_points<T: Float>(
    points: &[Point2<T>],
    polygon: &[usize],
    subset: &[usize],
) -> Vec<usize> {
    let k = polygon.len();
    let mut out = Vec::new();
    for i in 0..k {
        let (ia, ib) = (polygon[i], polygon[(i + 1) % k]);
        let (a, b) = (points[ia], points[ib]);
        out.push(ia);
        let mut on_edge: Vec<(T, usize)> = subset
            .iter()
            .copied()
            .filter(|&x| x != ia && x != ib && !polygon.contains(&x))
            .filter(|&x| {
                let p = points[x];
                orient2d(a, b, p) == T::zero()
                    && p.x >= a.x.min(b.x)
                    && p.x <= a.x.max(b.x)
                    && p.y >= a.y.min(b.y)
                    && p.y <= a.y.max(b.y)
            })
            .map(|x| (points[x].sub(a).dot(b.sub(a)), x))
            .collect();
        on_edge.sort_by(|p, q| p.0.partial_cmp(&q.0).unwrap());
        out.extend(on_edge.into_iter().map(|(_, x)| x));
    }
    out
}
