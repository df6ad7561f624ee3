//! Max-min-solid-angle convex polyhedra in 3d point sets.
//!
//! The quality of a point is its interior solid angle when it is a hull
//! vertex; points on a facet get the half-space 2 pi, points on a hull edge
//! get twice the interior dihedral angle, and strictly interior points get
//! the full sphere 4 pi. All of these dominate the solid angle of some hull
//! vertex, so removals are always hull vertices of minimum solid angle.

use num_traits::{Float, FloatConst};
use serde::Serialize;
use thiserror::Error;

use crate::geom::{convex_hull_3d_of, vertex_solid_angle, Hull3, Hull3Error, Point3};
use crate::greedy::{decremental_greedy, GreedyTrace, Instance, MinQuality};
use crate::polygon::DedupInfo;
use crate::quality::Quality;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PolyhedronError {
    #[error("need at least 4 distinct points")]
    TooFewPoints,
    #[error("all points are coplanar")]
    Coplanar,
    #[error(transparent)]
    Hull(#[from] Hull3Error),
}

pub fn dedup_points3<T: Float>(points: &[Point3<T>]) -> (Vec<Point3<T>>, DedupInfo) {
    let mut kept: Vec<Point3<T>> = Vec::new();
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

/// Solid-angle quality instance. Alive non-vertex points report 4 pi: the
/// full classification never affects removals because every boundary class
/// dominates the solid angle of an adjacent hull vertex.
#[derive(Clone)]
pub struct Polyhedron3dInstance<T> {
    points: Vec<Point3<T>>,
    alive: Vec<bool>,
    hull: Option<Hull3>,
    omega: Vec<Option<T>>,
}

impl<T: Float + FloatConst + std::fmt::Debug> Polyhedron3dInstance<T> {
    pub fn new(points: Vec<Point3<T>>) -> Self {
        let n = points.len();
        let mut inst = Self { points, alive: vec![true; n], hull: None, omega: vec![None; n] };
        inst.rebuild();
        inst
    }

    pub fn hull(&self) -> Option<&Hull3> {
        self.hull.as_ref()
    }

    pub fn points(&self) -> &[Point3<T>] {
        &self.points
    }

    fn rebuild(&mut self) {
        let ids: Vec<usize> = (0..self.points.len()).filter(|&i| self.alive[i]).collect();
        self.omega = vec![None; self.points.len()];
        if ids.len() < 4 {
            self.hull = None;
            return;
        }
        match convex_hull_3d_of(&self.points, &ids) {
            Ok(h) => {
                for &v in h.vertices() {
                    self.omega[v] =
                        Some(vertex_solid_angle(&self.points, &h, v).expect("closed hull"));
                }
                self.hull = Some(h);
            }
            Err(Hull3Error::DegenerateHull) => self.hull = None,
            Err(e) => panic!("hull rebuild failed: {e}"),
        }
    }
}

impl<T: Float + FloatConst + std::fmt::Debug> Instance for Polyhedron3dInstance<T> {
    type Value = T;

    fn universe(&self) -> usize {
        self.points.len()
    }

    fn is_alive(&self, x: usize) -> bool {
        self.alive[x]
    }

    fn quality(&self, x: usize) -> Quality<T> {
        debug_assert!(self.alive[x]);
        if self.hull.is_none() {
            return Quality::NegInf;
        }
        match self.omega[x] {
            Some(w) => Quality::Finite(w),
            None => Quality::Finite(T::from(4.0).unwrap() * T::PI()),
        }
    }

    fn remove(&mut self, x: usize) {
        debug_assert!(self.alive[x]);
        self.alive[x] = false;
        self.rebuild();
    }
}

/// Full quality with boundary classification: solid angle at hull vertices,
/// 2 pi on a facet, twice the interior dihedral angle on an edge, 4 pi
/// strictly inside.
pub fn point_quality_3d<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
    hull: &Hull3,
    x: usize,
) -> Quality<T> {
    if hull.is_vertex(x) {
        return Quality::Finite(vertex_solid_angle(points, hull, x).expect("closed hull"));
    }
    let p = points[x];
    let scale = hull
        .vertices()
        .iter()
        .map(|&v| points[v].norm())
        .fold(T::one(), |a, b| if b > a { b } else { a });
    let tol = T::from(1e-9).unwrap() * scale;

    // normals of facets whose triangle contains p within tolerance
    let mut planes: Vec<Point3<T>> = Vec::new();
    for (fi, &[a, b, c]) in hull.facets.iter().enumerate() {
        let d = hull.signed_distance(points, fi, p);
        if d.abs() > tol {
            continue;
        }
        let (pa, pb, pc) = (points[a], points[b], points[c]);
        let n = pb.sub(pa).cross(pc.sub(pa));
        let nn = n.norm();
        if nn == T::zero() {
            continue;
        }
        let inside = [(pa, pb), (pb, pc), (pc, pa)]
            .into_iter()
            .all(|(s, t)| t.sub(s).cross(p.sub(s)).dot(n) >= -tol * nn);
        if !inside {
            continue;
        }
        let unit = n.scale(T::one() / nn);
        if !planes.iter().any(|q| q.sub(unit).norm() < T::from(1e-7).unwrap()) {
            planes.push(unit);
        }
    }

    let pi = T::PI();
    match planes.len() {
        0 => Quality::Finite(T::from(4.0).unwrap() * pi),
        1 => Quality::Finite(pi + pi),
        _ => {
            // on an edge: twice the interior dihedral between the two planes
            let mut best = T::infinity();
            for i in 0..planes.len() {
                for j in i + 1..planes.len() {
                    let (n1, n2) = (planes[i], planes[j]);
                    let ang = n1.cross(n2).norm().atan2(n1.dot(n2));
                    let dihedral = pi - ang;
                    if dihedral + dihedral < best {
                        best = dihedral + dihedral;
                    }
                }
            }
            Quality::Finite(best)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolyhedronResult<T> {
    /// The optimal minimum vertex solid angle, in steradians.
    pub theta: T,
    /// Outward-oriented triangulated facets of the optimal hull, indexing
    /// the deduplicated point list.
    pub facets: Vec<[usize; 3]>,
    pub hull_vertices: Vec<usize>,
    /// The maximal bottleneck subset, including interior points.
    pub subset: Vec<usize>,
    #[serde(skip)]
    pub trace: GreedyTrace<T>,
    pub dedup: DedupInfo,
}

/// Finds the convex polyhedron maximizing the minimum vertex solid angle
/// among all non-self-intersecting polyhedral surfaces with vertices in the
/// input set.
pub fn maxmin_solid_angle_polyhedron<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
) -> Result<PolyhedronResult<T>, PolyhedronError> {
    let (pts, dedup) = dedup_points3(points);
    if pts.len() < 4 {
        return Err(PolyhedronError::TooFewPoints);
    }
    let mut inst = Polyhedron3dInstance::new(pts.clone());
    if inst.hull.is_none() {
        return Err(PolyhedronError::Coplanar);
    }
    let out = decremental_greedy(&mut inst, &mut MinQuality).expect("nonempty universe");
    let theta = out.theta.finite().expect("non-degenerate input has a finite optimum");

    let subset = out.subset;
    let hull = convex_hull_3d_of(&pts, &subset)?;
    let hull_vertices = hull.vertices().to_vec();
    Ok(PolyhedronResult { theta, facets: hull.facets, hull_vertices, subset, trace: out.trace, dedup })
}

/// Minimum vertex solid angle of a hull, recomputed from scratch.
pub fn min_solid_angle<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
    hull: &Hull3,
) -> T {
    hull.vertices()
        .iter()
        .map(|&v| vertex_solid_angle(points, hull, v).expect("closed hull"))
        .fold(T::infinity(), |a, b| if b < a { b } else { a })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::convex_hull_3d;
    use crate::greedy::known_beta;
    use std::f64::consts::PI;

    fn p(x: f64, y: f64, z: f64) -> Point3<f64> {
        Point3::new(x, y, z)
    }

    fn tetrahedron() -> Vec<Point3<f64>> {
        vec![p(1.0, 1.0, 1.0), p(1.0, -1.0, -1.0), p(-1.0, 1.0, -1.0), p(-1.0, -1.0, 1.0)]
    }

    fn cube() -> Vec<Point3<f64>> {
        let mut v = Vec::new();
        for z in [0.0, 1.0] {
            for y in [0.0, 1.0] {
                for x in [0.0, 1.0] {
                    v.push(p(x, y, z));
                }
            }
        }
        v
    }

    #[test]
    fn tetrahedron_is_its_own_optimum() {
        let r = maxmin_solid_angle_polyhedron(&tetrahedron()).unwrap();
        assert!((r.theta - (23.0f64 / 27.0).acos()).abs() < 1e-12);
        assert_eq!(r.subset, vec![0, 1, 2, 3]);
        assert_eq!(r.facets.len(), 4);
    }

    #[test]
    fn cube_with_centroid() {
        let mut pts = cube();
        pts.push(p(0.5, 0.5, 0.5));
        let r = maxmin_solid_angle_polyhedron(&pts).unwrap();
        assert!((r.theta - PI / 2.0).abs() < 1e-12);
        assert_eq!(r.hull_vertices, vec![0, 1, 2, 3, 4, 5, 6, 7]);
        assert!(r.subset.contains(&8));
    }

    #[test]
    fn boundary_qualities_on_the_cube() {
        let mut pts = cube();
        pts.push(p(0.5, 0.5, 0.5)); // centroid
        pts.push(p(0.5, 0.5, 0.0)); // face center
        pts.push(p(0.5, 0.0, 0.0)); // edge midpoint
        let hull = convex_hull_3d(&pts).unwrap();
        let q = |x: usize| point_quality_3d(&pts, &hull, x).finite().unwrap();
        assert!((q(8) - 4.0 * PI).abs() < 1e-12);
        assert!((q(9) - 2.0 * PI).abs() < 1e-12);
        assert!((q(10) - PI).abs() < 1e-12); // dihedral pi/2, doubled
        assert!((q(0) - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            maxmin_solid_angle_polyhedron(&[p(0., 0., 0.), p(1., 0., 0.), p(0., 1., 0.)]),
            Err(PolyhedronError::TooFewPoints)
        ));
        assert!(matches!(
            maxmin_solid_angle_polyhedron(&[
                p(0., 0., 0.),
                p(1., 0., 0.),
                p(0., 1., 0.),
                p(1., 1., 0.)
            ]),
            Err(PolyhedronError::Coplanar)
        ));
    }

    #[test]
    fn theta_equals_recomputed_minimum() {
        for seed in 0..30u64 {
            let pts = crate::gen::random_points3(8, seed);
            let r = maxmin_solid_angle_polyhedron(&pts).unwrap();
            let hull = convex_hull_3d_of(&pts, &r.subset).unwrap();
            assert!((min_solid_angle(&pts, &hull) - r.theta).abs() < 1e-12, "seed {seed}");
        }
    }

    #[test]
    fn invariant_under_rigid_motion_and_scaling() {
        for seed in 0..12u64 {
            let pts = crate::gen::random_points3(7, seed);
            let r0 = maxmin_solid_angle_polyhedron(&pts).unwrap();
            let (s, c) = (0.4f64.sin(), 0.4f64.cos());
            let moved: Vec<Point3<f64>> = pts
                .iter()
                .map(|q| {
                    p(
                        2.0 * (c * q.x - s * q.y) + 5.0,
                        2.0 * (s * q.x + c * q.y) - 3.0,
                        2.0 * q.z + 0.5,
                    )
                })
                .collect();
            let r1 = maxmin_solid_angle_polyhedron(&moved).unwrap();
            assert!((r0.theta - r1.theta).abs() < 1e-9, "seed {seed}");
        }
    }

    #[test]
    fn hull_stays_valid_through_removals() {
        let pts = crate::gen::random_points3(15, 3);
        let mut inst = Polyhedron3dInstance::new(pts.clone());
        for x in 0..10 {
            inst.remove(x);
            if let Some(h) = inst.hull() {
                for q in 0..pts.len() {
                    if !inst.is_alive(q) {
                        continue;
                    }
                    for f in 0..h.facets.len() {
                        assert!(h.signed_distance(&pts, f, pts[q]) <= 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn known_beta_reproduces_the_subset() {
        for seed in 0..15u64 {
            let pts = crate::gen::random_points3(7, seed);
            let r = maxmin_solid_angle_polyhedron(&pts).unwrap();
            let mut fresh = Polyhedron3dInstance::new(pts.clone());
            let kb = known_beta(&mut fresh, Quality::Finite(r.theta)).unwrap();
            assert_eq!(kb.subset, r.subset, "seed {seed}");
        }
    }
}
