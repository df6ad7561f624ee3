//! Max-min-angle closed polygonal curves through 3d points.
//!
//! The segment graph of a point set has one polar vertex per line segment
//! (its poles are the segment endpoints) and one edge per three-point chain,
//! attached at the shared middle point on both sides and weighted by the
//! angle there. Regular cycles are closed curves that may repeat points but
//! not segments; directed cycles of the double cover also allow repeated
//! segments (traversed once per direction).

use num_traits::{Float, FloatConst};
use serde::Serialize;
use thiserror::Error;

use crate::geom::{angle_at, Point3};
use crate::graph::{bottleneck_cycle_directed, CycleError};
use crate::polar::{bottleneck_regular_cycle, double_cover, PolarGraph};
use crate::polygon::DedupInfo;
use crate::polyhedron::dedup_points3;
use crate::quality::Direction;

pub const DEFAULT_MAX_POINTS: usize = 400;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CurveError {
    #[error("need at least 3 distinct points")]
    TooFewPoints,
    #[error("{0} points would give a segment graph beyond the guard of {1}; raise the limit explicitly")]
    TooManyPoints(usize, usize),
    #[error("no closed curve exists")]
    NoCurve,
    #[error("internal: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CurveMode {
    RepeatedSegmentsAllowed,
    RepeatedPointsOnly,
}

/// The segment graph: one polar vertex per point pair, pole 0 at the lower
/// point index; one edge per chain (a, b, c) with distinct a, c, attached at
/// pole b on both sides. Returns the graph and the vertex -> (i, j) table.
pub fn build_polar_graph<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
    max_points: Option<usize>,
) -> Result<(PolarGraph<T>, Vec<(u32, u32)>), CurveError> {
    let n = points.len();
    if n < 3 {
        return Err(CurveError::TooFewPoints);
    }
    let limit = max_points.unwrap_or(DEFAULT_MAX_POINTS);
    if n > limit {
        return Err(CurveError::TooManyPoints(n, limit));
    }

    let mut seg_id = vec![vec![0u32; n]; n];
    let mut segments: Vec<(u32, u32)> = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            seg_id[i][j] = segments.len() as u32;
            seg_id[j][i] = segments.len() as u32;
            segments.push((i as u32, j as u32));
        }
    }
    let pole_of = |seg: u32, point: usize| -> u8 {
        u8::from(segments[seg as usize].1 == point as u32)
    };

    let mut g = PolarGraph::new(segments.len());
    for b in 0..n {
        for a in 0..n {
            if a == b {
                continue;
            }
            for c in (a + 1)..n {
                if c == b {
                    continue;
                }
                let sab = seg_id[a][b];
                let sbc = seg_id[b][c];
                let w = angle_at(points[a], points[b], points[c])
                    .map_err(|_| CurveError::Internal("coincident points after dedup".into()))?;
                g.add_edge(sab, pole_of(sab, b), sbc, pole_of(sbc, b), w);
            }
        }
    }
    Ok((g, segments))
}

#[derive(Clone, Debug, Serialize)]
pub struct CurveResult<T> {
    /// The optimal sharpest turn angle, in radians.
    pub theta: T,
    /// Cyclic point-index sequence (into the deduplicated list); entry `i`
    /// turns at angle `angles[i]`.
    pub curve: Vec<usize>,
    pub angles: Vec<T>,
    pub mode: CurveMode,
    pub dedup: DedupInfo,
}

/// Finds a closed polygonal curve through the points maximizing its minimum
/// angle. With repeated segments allowed the search runs over directed
/// cycles of the segment graph's double cover; otherwise over its regular
/// cycles.
pub fn maxmin_angle_closed_curve<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
    allow_repeated_segments: bool,
    max_points: Option<usize>,
) -> Result<CurveResult<T>, CurveError> {
    let (pts, dedup) = dedup_points3(points);
    let (g, segments) = build_polar_graph(&pts, max_points)?;

    let middle_of = |edge: &crate::polar::PolarEdge<T>| -> usize {
        let (i, j) = segments[edge.u as usize];
        if edge.pu == 0 {
            i as usize
        } else {
            j as usize
        }
    };

    let (theta, curve, mode) = if allow_repeated_segments {
        let cover = double_cover(&g);
        let r = bottleneck_cycle_directed(&cover.digraph, Direction::MaxMin).map_err(|e| match e {
            CycleError::NoCycle => CurveError::NoCurve,
            CycleError::Internal(s) => CurveError::Internal(s),
        })?;
        let curve: Vec<usize> = r
            .edges
            .iter()
            .map(|&i| middle_of(&g.edges[cover.polar_edge[i]]))
            .collect();
        (r.value, curve, CurveMode::RepeatedSegmentsAllowed)
    } else {
        let r = bottleneck_regular_cycle(&g, Direction::MaxMin).map_err(|e| match e {
            CycleError::NoCycle => CurveError::NoCurve,
            CycleError::Internal(s) => CurveError::Internal(s),
        })?;
        let curve: Vec<usize> = r.edges.iter().map(|&i| middle_of(&g.edges[i])).collect();
        (r.value, curve, CurveMode::RepeatedPointsOnly)
    };

    // re-evaluate every turn of the projected curve
    let k = curve.len();
    let mut angles = Vec::with_capacity(k);
    let mut sharpest = T::infinity();
    for i in 0..k {
        let a = pts[curve[(i + k - 1) % k]];
        let b = pts[curve[i]];
        let c = pts[curve[(i + 1) % k]];
        let ang = angle_at(a, b, c)
            .map_err(|_| CurveError::Internal("degenerate turn in projected curve".into()))?;
        if ang < sharpest {
            sharpest = ang;
        }
        angles.push(ang);
    }
    if (sharpest - theta).abs() > T::from(1e-9).unwrap() {
        return Err(CurveError::Internal(format!(
            "projected sharpest angle {sharpest:?} does not match the solve value {theta:?}"
        )));
    }
    if mode == CurveMode::RepeatedPointsOnly {
        let mut seen = std::collections::HashSet::new();
        for i in 0..k {
            let (a, b) = (curve[i], curve[(i + 1) % k]);
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(CurveError::Internal("segment repeated in points-only mode".into()));
            }
        }
    }

    Ok(CurveResult { theta, curve, angles, mode, dedup })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3};

    fn p(x: f64, y: f64, z: f64) -> Point3<f64> {
        Point3::new(x, y, z)
    }

    fn square() -> Vec<Point3<f64>> {
        vec![p(0., 0., 0.), p(1., 0., 0.), p(1., 1., 0.), p(0., 1., 0.)]
    }

    fn tetrahedron() -> Vec<Point3<f64>> {
        vec![p(1., 1., 1.), p(1., -1., -1.), p(-1., 1., -1.), p(-1., -1., 1.)]
    }

    #[test]
    fn segment_graph_counts() {
        let (g, segs) = build_polar_graph(&tetrahedron(), None).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(segs.len(), 6);
        let tri = vec![p(0., 0., 0.), p(1., 0., 0.), p(0., 1., 0.)];
        let (g3, _) = build_polar_graph(&tri, None).unwrap();
        assert_eq!(g3.vertex_count(), 3);
        assert_eq!(g3.edge_count(), 3);
        let (g6, _) = build_polar_graph(&crate::gen::random_points3(6, 1), None).unwrap();
        assert_eq!(g6.vertex_count(), 15);
        assert_eq!(g6.edge_count(), 3 * 20);
    }

    #[test]
    fn square_curve_both_modes() {
        for repeated in [false, true] {
            let r = maxmin_angle_closed_curve(&square(), repeated, None).unwrap();
            assert!((r.theta - FRAC_PI_2).abs() < 1e-12, "repeated={repeated}");
            assert_eq!(r.curve.len(), 4);
        }
    }

    #[test]
    fn tetrahedron_curve_both_modes() {
        for repeated in [false, true] {
            let r = maxmin_angle_closed_curve(&tetrahedron(), repeated, None).unwrap();
            assert!((r.theta - FRAC_PI_3).abs() < 1e-12, "repeated={repeated}");
        }
    }

    #[test]
    fn guard_rejects_oversized_inputs() {
        let pts = crate::gen::random_points3(12, 0);
        assert!(matches!(
            build_polar_graph(&pts, Some(10)),
            Err(CurveError::TooManyPoints(12, 10))
        ));
        assert!(build_polar_graph(&pts, Some(12)).is_ok());
    }

    #[test]
    fn too_few_points() {
        let pts = vec![p(0., 0., 0.), p(1., 0., 0.)];
        assert_eq!(
            maxmin_angle_closed_curve(&pts, false, None).unwrap_err(),
            CurveError::TooFewPoints
        );
        // duplicates collapse before the count check
        let dup = vec![p(0., 0., 0.), p(0., 0., 0.), p(1., 0., 0.)];
        assert_eq!(
            maxmin_angle_closed_curve(&dup, false, None).unwrap_err(),
            CurveError::TooFewPoints
        );
    }

    #[test]
    fn collinear_points_still_solve() {
        let pts = vec![p(0., 0., 0.), p(1., 0., 0.), p(2., 0., 0.)];
        let r = maxmin_angle_closed_curve(&pts, true, None).unwrap();
        // some turn is forced to double back
        assert!(r.theta.abs() < 1e-12);
    }

    #[test]
    fn rigid_motion_invariance() {
        for seed in 0..10u64 {
            let pts = crate::gen::random_points3(5, seed);
            let r0 = maxmin_angle_closed_curve(&pts, false, None).unwrap();
            let (s, c) = (0.3f64.sin(), 0.3f64.cos());
            let moved: Vec<Point3<f64>> = pts
                .iter()
                .map(|q| p(c * q.x - s * q.y + 4.0, s * q.x + c * q.y - 2.0, q.z + 9.0))
                .collect();
            let r1 = maxmin_angle_closed_curve(&moved, false, None).unwrap();
            assert!((r0.theta - r1.theta).abs() < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn planar_square_beats_every_triangle_in_it() {
        // with a center point the curve can still use only the corners
        let mut pts = square();
        pts.push(p(0.5, 0.5, 0.0));
        let r = maxmin_angle_closed_curve(&pts, false, None).unwrap();
        assert!(r.theta >= FRAC_PI_2 - 1e-12);
    }
}
