//! Explicit 3d convex hulls as triangulated facet lists.
//!
//! Incremental construction with strict visibility: a point exactly on a
//! facet plane does not see the facet, so exactly-coplanar inputs yield
//! arbitrarily triangulated coplanar facets instead of degenerate ones.
//! Deletion is rebuild-from-scratch; the solvers own the alive sets.

use std::collections::HashMap;

use num_traits::Float;
use thiserror::Error;

use super::point::{orient3d, Point3};
use crate::gen::shuffled;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Hull3Error {
    #[error("input points are affinely degenerate (fewer than 4 distinct non-coplanar points)")]
    DegenerateHull,
    #[error("hull construction failed: {0}")]
    Internal(String),
    #[error("inconsistent facet incidence at vertex {0}")]
    InvalidIncidence(usize),
}

/// Triangulated convex hull over a subset of a point set. Facets are
/// outward-oriented index triples into the original point slice.
#[derive(Clone, Debug)]
pub struct Hull3 {
    pub facets: Vec<[usize; 3]>,
    vertices: Vec<usize>,
}

impl Hull3 {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn is_vertex(&self, x: usize) -> bool {
        self.vertices.binary_search(&x).is_ok()
    }

    /// Signed distance of `p` from the facet plane, positive outside.
    pub fn signed_distance<T: Float>(&self, points: &[Point3<T>], f: usize, p: Point3<T>) -> T {
        let [a, b, c] = self.facets[f];
        let n = points[b].sub(points[a]).cross(points[c].sub(points[a]));
        let len = n.norm();
        if len == T::zero() {
            return T::zero();
        }
        n.dot(p.sub(points[a])) / len
    }
}

/// Hull of all points; convenience over [`convex_hull_3d_of`].
pub fn convex_hull_3d<T: Float>(points: &[Point3<T>]) -> Result<Hull3, Hull3Error> {
    let ids: Vec<usize> = (0..points.len()).collect();
    convex_hull_3d_of(points, &ids)
}

/// Hull of the subset `ids`. Duplicated points are tolerated (they are never
/// strictly outside and so never become vertices).
pub fn convex_hull_3d_of<T: Float>(points: &[Point3<T>], ids: &[usize]) -> Result<Hull3, Hull3Error> {
    let mut attempt_order: Vec<usize> = ids.to_vec();
    for attempt in 0..4u64 {
        if attempt > 0 {
            attempt_order = shuffled(ids, attempt);
        }
        match build(points, &attempt_order) {
            Ok(h) => return Ok(h),
            Err(Hull3Error::Internal(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Hull3Error::Internal("no insertion order produced a consistent hull".into()))
}

// Picks the fattest starting tetrahedron: farthest point pair direction,
// then max-area third point, then max-volume fourth. A zero maximum at any
// stage means the input is affinely degenerate.
fn initial_simplex<T: Float>(points: &[Point3<T>], ids: &[usize]) -> Option<[usize; 4]> {
    let a = *ids.first()?;
    let measure_max = |f: &dyn Fn(usize) -> T| -> Option<usize> {
        let mut best: Option<(T, usize)> = None;
        for &i in ids {
            let m = f(i);
            if best.map_or(true, |(bm, _)| m > bm) {
                best = Some((m, i));
            }
        }
        match best {
            Some((m, i)) if m > T::zero() => Some(i),
            _ => None,
        }
    };
    let b = measure_max(&|i| {
        let d = points[i].sub(points[a]);
        d.dot(d)
    })?;
    let ab = points[b].sub(points[a]);
    let c = measure_max(&|i| {
        let cr = ab.cross(points[i].sub(points[a]));
        cr.dot(cr)
    })?;
    let d = measure_max(&|i| orient3d(points[a], points[b], points[c], points[i]).abs())?;
    Some([a, b, c, d])
}

fn build<T: Float>(points: &[Point3<T>], ids: &[usize]) -> Result<Hull3, Hull3Error> {
    let [a, mut b, mut c, d] =
        initial_simplex(points, ids).ok_or(Hull3Error::DegenerateHull)?;
    if orient3d(points[a], points[b], points[c], points[d]) < T::zero() {
        std::mem::swap(&mut b, &mut c);
    }
    let mut facets: Vec<[usize; 3]> = vec![[a, c, b], [a, b, d], [a, d, c], [b, c, d]];

    for &p in ids {
        if p == a || p == b || p == c || p == d {
            continue;
        }
        let pp = points[p];
        let visible: Vec<bool> = facets
            .iter()
            .map(|&[x, y, z]| orient3d(points[x], points[y], points[z], pp) > T::zero())
            .collect();
        if !visible.iter().any(|&v| v) {
            continue;
        }

        // In a closed oriented manifold each directed edge has exactly one
        // owner, so an edge of a visible facet is on the horizon exactly
        // when its reverse is not owned by another visible facet.
        let mut vis_edges: HashMap<(usize, usize), ()> = HashMap::new();
        for (f, &vis) in facets.iter().zip(&visible) {
            if !vis {
                continue;
            }
            for k in 0..3 {
                if vis_edges.insert((f[k], f[(k + 1) % 3]), ()).is_some() {
                    return Err(Hull3Error::Internal("duplicate directed edge".into()));
                }
            }
        }
        let mut horizon: Vec<(usize, usize)> = Vec::new();
        for (f, &vis) in facets.iter().zip(&visible) {
            if !vis {
                continue;
            }
            for k in 0..3 {
                let (u, v) = (f[k], f[(k + 1) % 3]);
                if !vis_edges.contains_key(&(v, u)) {
                    horizon.push((u, v));
                }
            }
        }
        // the horizon must be one simple cycle; a pinch means the strict
        // visible region was disconnected, so try another insertion order
        let mut next: HashMap<usize, usize> = HashMap::new();
        for &(u, v) in &horizon {
            if next.insert(u, v).is_some() {
                return Err(Hull3Error::Internal("pinched horizon".into()));
            }
        }
        let start = horizon
            .first()
            .ok_or_else(|| Hull3Error::Internal("empty horizon".into()))?
            .0;
        let mut cur = start;
        let mut steps = 0;
        loop {
            cur = *next.get(&cur).ok_or_else(|| Hull3Error::Internal("broken horizon".into()))?;
            steps += 1;
            if cur == start {
                break;
            }
            if steps > horizon.len() {
                return Err(Hull3Error::Internal("horizon not a cycle".into()));
            }
        }
        if steps != horizon.len() {
            return Err(Hull3Error::Internal("disconnected horizon".into()));
        }

        let mut kept: Vec<[usize; 3]> = facets
            .iter()
            .zip(&visible)
            .filter(|(_, &vis)| !vis)
            .map(|(f, _)| *f)
            .collect();
        for &(u, v) in &horizon {
            kept.push([u, v, p]);
        }
        facets = kept;
    }

    let mut vertices: Vec<usize> = facets.iter().flatten().copied().collect();
    vertices.sort_unstable();
    vertices.dedup();
    Ok(Hull3 { facets, vertices })
}

/// Solid angle subtended at the origin-side apex by the triangle of the
/// three given vectors (Van Oosterom–Strackee), signed by orientation.
pub fn solid_angle_triangle<T: Float>(a: Point3<T>, b: Point3<T>, c: Point3<T>) -> T {
    let num = a.triple(b, c);
    let (la, lb, lc) = (a.norm(), b.norm(), c.norm());
    let den = la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
    let two = T::one() + T::one();
    two * num.atan2(den)
}

/// Interior solid angle at hull vertex `v`, by summing the triangle fan of
/// the vertex link.
pub fn vertex_solid_angle<T: Float>(
    points: &[Point3<T>],
    hull: &Hull3,
    v: usize,
) -> Result<T, Hull3Error> {
    let mut next: HashMap<usize, usize> = HashMap::new();
    for f in &hull.facets {
        if let Some(k) = f.iter().position(|&x| x == v) {
            let a = f[(k + 1) % 3];
            let b = f[(k + 2) % 3];
            if next.insert(a, b).is_some() {
                return Err(Hull3Error::InvalidIncidence(v));
            }
        }
    }
    if next.len() < 3 {
        return Err(Hull3Error::InvalidIncidence(v));
    }
    let start = *next.keys().min().unwrap();
    let mut cyc = vec![start];
    let mut cur = start;
    loop {
        cur = *next.get(&cur).ok_or(Hull3Error::InvalidIncidence(v))?;
        if cur == start {
            break;
        }
        cyc.push(cur);
        if cyc.len() > next.len() {
            return Err(Hull3Error::InvalidIncidence(v));
        }
    }
    if cyc.len() != next.len() {
        return Err(Hull3Error::InvalidIncidence(v));
    }

    let apex = points[v];
    let base = points[cyc[0]].sub(apex);
    let mut total = T::zero();
    for i in 1..cyc.len() - 1 {
        total = total
            + solid_angle_triangle(base, points[cyc[i]].sub(apex), points[cyc[i + 1]].sub(apex));
    }
    Ok(total.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn p(x: f64, y: f64, z: f64) -> Point3<f64> {
        Point3::new(x, y, z)
    }

    fn tetrahedron() -> Vec<Point3<f64>> {
        vec![
            p(1.0, 1.0, 1.0),
            p(1.0, -1.0, -1.0),
            p(-1.0, 1.0, -1.0),
            p(-1.0, -1.0, 1.0),
        ]
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
    fn tetrahedron_has_four_facets() {
        let pts = tetrahedron();
        let h = convex_hull_3d(&pts).unwrap();
        assert_eq!(h.facets.len(), 4);
        assert_eq!(h.vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cube_with_centroid_keeps_corners_only() {
        let mut pts = cube();
        pts.push(p(0.5, 0.5, 0.5));
        let h = convex_hull_3d(&pts).unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(h.facets.len(), 12);
    }

    #[test]
    fn coplanar_input_is_degenerate() {
        let pts = vec![p(0.0, 0.0, 0.0), p(1.0, 0.0, 0.0), p(0.0, 1.0, 0.0), p(1.0, 1.0, 0.0)];
        assert_eq!(convex_hull_3d(&pts).unwrap_err(), Hull3Error::DegenerateHull);
    }

    #[test]
    fn random_points_contained() {
        for seed in 0..60u64 {
            let n = 4 + (seed as usize % 27);
            let pts = crate::gen::random_points3(n, seed);
            let h = match convex_hull_3d(&pts) {
                Ok(h) => h,
                Err(Hull3Error::DegenerateHull) => continue,
                Err(e) => panic!("seed {seed}: {e}"),
            };
            for q in 0..n {
                for f in 0..h.facets.len() {
                    assert!(
                        h.signed_distance(&pts, f, pts[q]) <= 1e-9,
                        "seed {seed}: point {q} outside facet {f}"
                    );
                }
            }
        }
    }

    #[test]
    fn cube_corner_subtends_one_octant() {
        let pts = cube();
        let h = convex_hull_3d(&pts).unwrap();
        for v in 0..8 {
            let omega = vertex_solid_angle(&pts, &h, v).unwrap();
            assert!((omega - PI / 2.0).abs() < 1e-12, "corner {v}: {omega}");
        }
    }

    #[test]
    fn tetrahedron_vertex_angle() {
        let pts = tetrahedron();
        let h = convex_hull_3d(&pts).unwrap();
        let expect = (23.0f64 / 27.0).acos();
        for v in 0..4 {
            let omega = vertex_solid_angle(&pts, &h, v).unwrap();
            assert!((omega - expect).abs() < 1e-12, "vertex {v}: {omega}");
        }
        // degree-3 vertex: the fan is a single Van Oosterom-Strackee triangle
        let direct = solid_angle_triangle(
            pts[1].sub(pts[0]),
            pts[2].sub(pts[0]),
            pts[3].sub(pts[0]),
        )
        .abs();
        assert!((direct - expect).abs() < 1e-12);
    }

    #[test]
    fn face_angle_defects_sum_to_four_pi() {
        // Descartes: total angular defect of a convex polytope is 4 pi
        for seed in 0..30u64 {
            let pts = crate::gen::random_points3(12, seed + 500);
            let h = match convex_hull_3d(&pts) {
                Ok(h) => h,
                Err(_) => continue,
            };
            let mut defect_sum = 0.0;
            for &v in h.vertices() {
                let mut corner = 0.0;
                for f in &h.facets {
                    if let Some(k) = f.iter().position(|&x| x == v) {
                        let a = pts[f[(k + 1) % 3]];
                        let b = pts[f[(k + 2) % 3]];
                        corner += crate::geom::angle_at(a, pts[v], b).unwrap();
                    }
                }
                defect_sum += 2.0 * PI - corner;
            }
            assert!((defect_sum - 4.0 * PI).abs() < 1e-6, "seed {seed}: {defect_sum}");
        }
    }

    #[test]
    fn solid_angles_close_around_interior_vertex_sum() {
        // per-vertex solid angles of a cube sum to 8 octants = 4 pi
        let pts = cube();
        let h = convex_hull_3d(&pts).unwrap();
        let total: f64 = (0..8).map(|v| vertex_solid_angle(&pts, &h, v).unwrap()).sum();
        assert!((total - 4.0 * PI).abs() < 1e-12);
    }
}

