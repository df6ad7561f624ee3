//! Threshold-search reference for max-min-angle closed curves: binary
//! search over the distinct chain angles, testing feasibility by exhaustive
//! search over directed-segment states. Angles come from the law of
//! cosines, independent of the solver's formula.

use num_traits::{Float, FloatConst};

use crate::curve::CurveMode;
use crate::geom::Point3;

use super::OracleError;

const CURVE_BUDGET: usize = 6;

#[derive(Clone, Debug)]
pub struct CurveOracleResult<T> {
    pub theta: T,
    pub curve: Vec<usize>,
}

fn chain_angle<T: Float>(points: &[Point3<T>], a: usize, b: usize, c: usize) -> T {
    let la = points[a].sub(points[b]).norm();
    let lc = points[c].sub(points[b]).norm();
    let lb = points[a].sub(points[c]).norm();
    let cos = ((la * la + lc * lc - lb * lb) / ((T::one() + T::one()) * la * lc))
        .max(-T::one())
        .min(T::one());
    cos.acos()
}

/// Any directed cycle among ordered segments (a, b) -> (b, c) whose turn
/// angles meet the threshold; repeated segments allowed.
fn witness_repeated<T: Float>(points: &[Point3<T>], theta: T) -> Option<Vec<usize>> {
    let n = points.len();
    let node = |a: usize, b: usize| a * n + b;
    let mut adj: Vec<Vec<u32>> = vec![Vec::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            for c in 0..n {
                if c == a || c == b {
                    continue;
                }
                if chain_angle(points, a, b, c) >= theta {
                    adj[node(a, b)].push(node(b, c) as u32);
                }
            }
        }
    }
    // DFS with a gray stack; any back edge closes a cycle
    let mut color = vec![0u8; n * n];
    let mut stack: Vec<(u32, usize)> = Vec::new();
    let mut trail: Vec<u32> = Vec::new();
    for root in 0..(n * n) as u32 {
        if color[root as usize] != 0 {
            continue;
        }
        color[root as usize] = 1;
        stack.push((root, 0));
        trail.push(root);
        while let Some(&mut (x, ref mut idx)) = stack.last_mut() {
            if *idx < adj[x as usize].len() {
                let y = adj[x as usize][*idx];
                *idx += 1;
                match color[y as usize] {
                    0 => {
                        color[y as usize] = 1;
                        stack.push((y, 0));
                        trail.push(y);
                    }
                    1 => {
                        let pos = trail.iter().position(|&t| t == y).unwrap();
                        let cycle_nodes = &trail[pos..];
                        // middles are the second components
                        return Some(cycle_nodes.iter().map(|&t| t as usize % n).collect());
                    }
                    _ => {}
                }
            } else {
                color[x as usize] = 2;
                stack.pop();
                trail.pop();
            }
        }
    }
    None
}

/// A closed chain of distinct segments meeting the threshold, repeated
/// points allowed. Canonical form: the start segment has the least id on
/// the cycle.
fn witness_points_only<T: Float>(points: &[Point3<T>], theta: T) -> Option<Vec<usize>> {
    let n = points.len();
    let seg = |a: usize, b: usize| -> usize {
        let (i, j) = (a.min(b), a.max(b));
        i * n + j
    };

    fn dfs<T: Float>(
        points: &[Point3<T>],
        theta: T,
        start: (usize, usize),
        cur: (usize, usize),
        used: &mut std::collections::HashSet<usize>,
        middles: &mut Vec<usize>,
        n: usize,
    ) -> bool {
        let (x, y) = cur;
        for z in 0..n {
            if z == y || z == x {
                continue;
            }
            if chain_angle(points, x, y, z) < theta {
                continue;
            }
            if (y, z) == start {
                middles.push(y);
                return true;
            }
            let s = {
                let (i, j) = (y.min(z), y.max(z));
                i * n + j
            };
            let s0 = {
                let (i, j) = (start.0.min(start.1), start.0.max(start.1));
                i * n + j
            };
            if s <= s0 || used.contains(&s) {
                continue;
            }
            used.insert(s);
            middles.push(y);
            if dfs(points, theta, start, (y, z), used, middles, n) {
                return true;
            }
            middles.pop();
            used.remove(&s);
        }
        false
    }

    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let mut used = std::collections::HashSet::new();
            used.insert(seg(a, b));
            let mut middles = Vec::new();
            if dfs(points, theta, (a, b), (a, b), &mut used, &mut middles, n) {
                return Some(middles);
            }
        }
    }
    None
}

/// Optimal curve by threshold search over the distinct chain angles.
pub fn curve_oracle<T: Float + FloatConst>(
    points: &[Point3<T>],
    mode: CurveMode,
) -> Result<Option<CurveOracleResult<T>>, OracleError> {
    let n = points.len();
    if n > CURVE_BUDGET {
        return Err(OracleError::BudgetExceeded(n, CURVE_BUDGET));
    }
    if n < 3 {
        return Ok(None);
    }
    let mut candidates: Vec<T> = Vec::new();
    for b in 0..n {
        for a in 0..n {
            for c in (a + 1)..n {
                if a != b && c != b {
                    candidates.push(chain_angle(points, a, b, c));
                }
            }
        }
    }
    candidates.sort_by(|x, y| x.partial_cmp(y).unwrap());
    candidates.dedup();

    let feasible = |theta: T| -> Option<Vec<usize>> {
        match mode {
            CurveMode::RepeatedSegmentsAllowed => witness_repeated(points, theta),
            CurveMode::RepeatedPointsOnly => witness_points_only(points, theta),
        }
    };

    if feasible(candidates[0]).is_none() {
        return Ok(None);
    }
    let (mut lo, mut hi) = (0usize, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if feasible(candidates[mid]).is_some() {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let curve = feasible(candidates[lo]).unwrap();
    // the witness's own sharpest angle is the exact optimum
    let k = curve.len();
    let mut theta = T::infinity();
    for i in 0..k {
        let ang = chain_angle(points, curve[(i + k - 1) % k], curve[i], curve[(i + 1) % k]);
        if ang < theta {
            theta = ang;
        }
    }
    Ok(Some(CurveOracleResult { theta, curve }))
}
