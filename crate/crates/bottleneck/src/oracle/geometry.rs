//! Geometric reference implementations: gift-wrapping hulls, law-of-cosines
//! angles, Girard solid angles, and subset-enumeration optima.

use std::collections::HashMap;

use num_traits::{Float, FloatConst};

use crate::geom::{convex_hull_3d_of, orient2d, Hull3, Point2, Point3};

use super::OracleError;

/// Jarvis-march convex hull, counterclockwise, strict vertices only (among
/// collinear candidates the farthest wins). Intentionally unrelated to the
/// monotone-chain implementation.
pub fn gift_wrap_hull<T: Float>(points: &[Point2<T>]) -> Vec<usize> {
    let n = points.len();
    if n == 0 {
        return Vec::new();
    }
    let start = (0..n)
        .min_by(|&a, &b| {
            let (pa, pb) = (points[a], points[b]);
            pa.x.partial_cmp(&pb.x).unwrap().then(pa.y.partial_cmp(&pb.y).unwrap())
        })
        .unwrap();
    let mut hull = vec![start];
    let mut cur = start;
    loop {
        let mut cand: Option<usize> = None;
        for r in 0..n {
            if r == cur || points[r] == points[cur] {
                continue;
            }
            match cand {
                None => cand = Some(r),
                Some(c) => {
                    let o = orient2d(points[cur], points[c], points[r]);
                    let farther = {
                        let dc = points[c].sub(points[cur]);
                        let dr = points[r].sub(points[cur]);
                        dr.dot(dr) > dc.dot(dc)
                    };
                    if o < T::zero() || (o == T::zero() && farther) {
                        cand = Some(r);
                    }
                }
            }
        }
        match cand {
            None => break, // all points coincide
            Some(next) => {
                if next == start {
                    break;
                }
                hull.push(next);
                cur = next;
                if hull.len() > n {
                    break; // safety against degenerate loops
                }
            }
        }
    }
    hull
}

/// Minimum interior angle of a vertex cycle, by the law of cosines.
pub fn min_interior_angle<T: Float>(points: &[Point2<T>], cycle: &[usize]) -> T {
    let k = cycle.len();
    let mut best = T::infinity();
    for i in 0..k {
        let v = points[cycle[i]];
        let a = points[cycle[(i + k - 1) % k]];
        let c = points[cycle[(i + 1) % k]];
        let la = a.sub(v).norm();
        let lc = c.sub(v).norm();
        let lb = a.sub(c).norm();
        let cos = ((la * la + lc * lc - lb * lb) / ((T::one() + T::one()) * la * lc))
            .max(-T::one())
            .min(T::one());
        let ang = cos.acos();
        if ang < best {
            best = ang;
        }
    }
    best
}

const POLYGON_BUDGET: usize = 10;

/// Enumerates every subset of the points, scores it by the least interior
/// angle of its gift-wrapped hull (degenerate subsets score -inf), and
/// returns the optimum with the union of all optimal subsets.
pub fn polygon_subset_oracle<T: Float + FloatConst>(
    points: &[Point2<T>],
) -> Result<(T, Vec<usize>), OracleError> {
    let n = points.len();
    if n > POLYGON_BUDGET {
        return Err(OracleError::BudgetExceeded(n, POLYGON_BUDGET));
    }
    let mut scored: Vec<(u32, T)> = Vec::new();
    for mask in 1u32..(1 << n) {
        let ids: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if ids.len() < 3 {
            continue;
        }
        let sub: Vec<Point2<T>> = ids.iter().map(|&i| points[i]).collect();
        let hull = gift_wrap_hull(&sub);
        if hull.len() < 3 {
            continue;
        }
        scored.push((mask, min_interior_angle(&sub, &hull)));
    }
    union_of_ties(n, scored).ok_or(OracleError::BudgetExceeded(0, POLYGON_BUDGET))
}

/// Distinct subsets can attain the optimum through mathematically equal but
/// differently rounded evaluations, so the union of optima admits a 1e-12
/// absolute tie tolerance.
fn union_of_ties<T: Float>(n: usize, scored: Vec<(u32, T)>) -> Option<(T, Vec<usize>)> {
    let theta = scored
        .iter()
        .map(|&(_, q)| q)
        .fold(None::<T>, |acc, q| Some(acc.map_or(q, |a| if q > a { q } else { a })))?;
    let tol = T::from(1e-12).unwrap();
    let mut union = 0u32;
    for (mask, q) in scored {
        if q >= theta - tol {
            union |= mask;
        }
    }
    Some((theta, (0..n).filter(|&i| union & (1 << i) != 0).collect()))
}

/// Solid angle at a hull vertex from the interior dihedral angles of its
/// incident edges: sum of dihedrals minus (k - 2) pi.
pub fn girard_vertex_solid_angle<T: Float + FloatConst>(
    points: &[Point3<T>],
    hull: &Hull3,
    v: usize,
) -> T {
    let mut normals: HashMap<usize, Vec<Point3<T>>> = HashMap::new();
    for f in &hull.facets {
        if let Some(k) = f.iter().position(|&x| x == v) {
            let a = f[(k + 1) % 3];
            let b = f[(k + 2) % 3];
            let n = points[a].sub(points[v]).cross(points[b].sub(points[v]));
            let n = n.scale(T::one() / n.norm());
            normals.entry(a).or_default().push(n);
            normals.entry(b).or_default().push(n);
        }
    }
    let k = normals.len();
    let mut total = T::zero();
    for (_, ns) in normals {
        assert_eq!(ns.len(), 2, "hull edge must bound two facets");
        let ang = ns[0].cross(ns[1]).norm().atan2(ns[0].dot(ns[1]));
        total = total + (T::PI() - ang);
    }
    total - T::from(k as f64 - 2.0).unwrap() * T::PI()
}

fn oracle_point_quality<T: Float + FloatConst>(
    points: &[Point3<T>],
    hull: &Hull3,
    x: usize,
) -> T {
    if hull.is_vertex(x) {
        return girard_vertex_solid_angle(points, hull, x);
    }
    let p = points[x];
    let scale = hull
        .vertices()
        .iter()
        .map(|&v| points[v].norm())
        .fold(T::one(), |a, b| if b > a { b } else { a });
    let tol = T::from(1e-9).unwrap() * scale;
    let mut planes: Vec<Point3<T>> = Vec::new();
    for (fi, &[a, b, c]) in hull.facets.iter().enumerate() {
        if hull.signed_distance(points, fi, p).abs() > tol {
            continue;
        }
        let (pa, pb, pc) = (points[a], points[b], points[c]);
        let nrm = pb.sub(pa).cross(pc.sub(pa));
        let nn = nrm.norm();
        if nn == T::zero() {
            continue;
        }
        let inside = [(pa, pb), (pb, pc), (pc, pa)]
            .into_iter()
            .all(|(s, t)| t.sub(s).cross(p.sub(s)).dot(nrm) >= -tol * nn);
        if !inside {
            continue;
        }
        let unit = nrm.scale(T::one() / nn);
        if !planes.iter().any(|q| q.sub(unit).norm() < T::from(1e-7).unwrap()) {
            planes.push(unit);
        }
    }
    let pi = T::PI();
    match planes.len() {
        0 => T::from(4.0).unwrap() * pi,
        1 => pi + pi,
        _ => {
            let mut best = T::infinity();
            for i in 0..planes.len() {
                for j in i + 1..planes.len() {
                    let ang = planes[i].cross(planes[j]).norm().atan2(planes[i].dot(planes[j]));
                    let wedge = (pi - ang) + (pi - ang);
                    if wedge < best {
                        best = wedge;
                    }
                }
            }
            best
        }
    }
}

const POLYHEDRON_BUDGET: usize = 8;

/// Subset-enumeration optimum for the minimum-solid-angle problem; subsets
/// with degenerate hulls score -inf.
pub fn polyhedron_subset_oracle<T: Float + FloatConst + std::fmt::Debug>(
    points: &[Point3<T>],
) -> Result<(T, Vec<usize>), OracleError> {
    let n = points.len();
    if n > POLYHEDRON_BUDGET {
        return Err(OracleError::BudgetExceeded(n, POLYHEDRON_BUDGET));
    }
    let mut scored: Vec<(u32, T)> = Vec::new();
    for mask in 1u32..(1 << n) {
        let ids: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if ids.len() < 4 {
            continue;
        }
        let hull = match convex_hull_3d_of(points, &ids) {
            Ok(h) => h,
            Err(_) => continue,
        };
        let mut q = T::infinity();
        for &x in &ids {
            let qx = oracle_point_quality(points, &hull, x);
            if qx < q {
                q = qx;
            }
        }
        scored.push((mask, q));
    }
    union_of_ties(n, scored).ok_or(OracleError::BudgetExceeded(0, POLYHEDRON_BUDGET))
}
