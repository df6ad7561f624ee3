//! Planar convex hulls with vertex deletion.
//!
//! Points are sorted once; after each deletion the hull of the surviving
//! points is rebuilt by a monotone-chain pass over the sorted order, O(n)
//! per deletion. The strict-turn test keeps collinear boundary points out
//! of the vertex list.

use num_traits::Float;

use super::point::{orient2d, Point2};

/// Counterclockwise list of hull vertex indices, strict vertices only.
/// Degenerate inputs yield fewer than three indices: one for a single
/// distinct point, two (the extremes) for collinear sets.
pub fn convex_hull_2d<T: Float>(points: &[Point2<T>]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| {
        let (pa, pb) = (points[a], points[b]);
        pa.x.partial_cmp(&pb.x)
            .unwrap()
            .then(pa.y.partial_cmp(&pb.y).unwrap())
            .then(a.cmp(&b))
    });
    chain(points, &idx)
}

fn chain<T: Float>(points: &[Point2<T>], sorted: &[usize]) -> Vec<usize> {
    let distinct = {
        let mut d = 0;
        let mut last: Option<Point2<T>> = None;
        for &i in sorted {
            if last.map_or(true, |p| p != points[i]) {
                d += 1;
                last = Some(points[i]);
            }
        }
        d
    };
    if distinct == 0 {
        return Vec::new();
    }
    if distinct == 1 {
        return vec![sorted[0]];
    }

    let build = |iter: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut h: Vec<usize> = Vec::new();
        for i in iter {
            while h.len() >= 2
                && orient2d(points[h[h.len() - 2]], points[h[h.len() - 1]], points[i])
                    <= T::zero()
            {
                h.pop();
            }
            h.push(i);
        }
        h
    };
    let mut lower = build(&mut sorted.iter().copied());
    let mut upper = build(&mut sorted.iter().rev().copied());
    if lower.len() < 2 {
        // all points collinear: report the two extremes
        return vec![*sorted.first().unwrap(), *sorted.last().unwrap()];
    }
    lower.pop();
    upper.pop();
    lower.append(&mut upper);
    lower
}

/// Convex hull over an alive subset of a fixed point set, rebuilt after
/// each deletion. Interior angles of the current hull are cached.
#[derive(Clone, Debug)]
pub struct Hull2<T> {
    points: Vec<Point2<T>>,
    sorted: Vec<u32>,
    alive: Vec<bool>,
    alive_count: usize,
    hull: Vec<usize>,
    angles: Vec<T>,
    hull_pos: Vec<Option<u32>>,
}

impl<T: Float> Hull2<T> {
    pub fn new(points: Vec<Point2<T>>) -> Self {
        let mut sorted: Vec<u32> = (0..points.len() as u32).collect();
        sorted.sort_by(|&a, &b| {
            let (pa, pb) = (points[a as usize], points[b as usize]);
            pa.x.partial_cmp(&pb.x)
                .unwrap()
                .then(pa.y.partial_cmp(&pb.y).unwrap())
                .then(a.cmp(&b))
        });
        let alive = vec![true; points.len()];
        let alive_count = points.len();
        let mut h = Self {
            points,
            sorted,
            alive,
            alive_count,
            hull: Vec::new(),
            angles: Vec::new(),
            hull_pos: Vec::new(),
        };
        h.rebuild();
        h
    }

    pub fn points(&self) -> &[Point2<T>] {
        &self.points
    }

    pub fn alive_count(&self) -> usize {
        self.alive_count
    }

    pub fn is_alive(&self, x: usize) -> bool {
        self.alive[x]
    }

    pub fn hull(&self) -> &[usize] {
        &self.hull
    }

    pub fn is_degenerate(&self) -> bool {
        self.hull.len() < 3
    }

    /// Interior angle at hull position `i`, in (0, pi).
    pub fn interior_angle(&self, i: usize) -> T {
        self.angles[i]
    }

    pub fn hull_position(&self, x: usize) -> Option<usize> {
        self.hull_pos[x].map(|p| p as usize)
    }

    pub fn remove(&mut self, x: usize) {
        debug_assert!(self.alive[x]);
        self.alive[x] = false;
        self.alive_count -= 1;
        // compact the sorted order so each rebuild scans only survivors
        self.sorted.retain(|&i| self.alive[i as usize]);
        self.rebuild();
    }

    fn rebuild(&mut self) {
        let order: Vec<usize> = self.sorted.iter().map(|&i| i as usize).collect();
        self.hull = chain(&self.points, &order);
        if self.hull.len() < 3 {
            self.hull.clear();
            self.angles.clear();
        } else {
            let k = self.hull.len();
            self.angles = (0..k)
                .map(|i| {
                    let v = self.points[self.hull[i]];
                    let a = self.points[self.hull[(i + k - 1) % k]];
                    let c = self.points[self.hull[(i + 1) % k]];
                    let u = a.sub(v);
                    let w = c.sub(v);
                    u.cross(w).abs().atan2(u.dot(w))
                })
                .collect();
        }
        self.hull_pos = vec![None; self.points.len()];
        for (i, &x) in self.hull.iter().enumerate() {
            self.hull_pos[x] = Some(i as u32);
        }
    }

    /// Least interior angle of the current hull with its vertex, or None
    /// when the hull is degenerate.
    pub fn sharpest(&self) -> Option<(usize, T)> {
        if self.is_degenerate() {
            return None;
        }
        let mut best = 0usize;
        for i in 1..self.hull.len() {
            let better = match self.angles[i].partial_cmp(&self.angles[best]).unwrap() {
                std::cmp::Ordering::Less => true,
                std::cmp::Ordering::Equal => self.hull[i] < self.hull[best],
                std::cmp::Ordering::Greater => false,
            };
            if better {
                best = i;
            }
        }
        Some((self.hull[best], self.angles[best]))
    }

    /// True when `x` (alive, not a hull vertex) lies on the boundary of the
    /// current hull.
    pub fn on_boundary(&self, x: usize) -> bool {
        let p = self.points[x];
        let k = self.hull.len();
        for i in 0..k {
            let a = self.points[self.hull[i]];
            let b = self.points[self.hull[(i + 1) % k]];
            if orient2d(a, b, p) == T::zero()
                && p.x >= a.x.min(b.x)
                && p.x <= a.x.max(b.x)
                && p.y >= a.y.min(b.y)
                && p.y <= a.y.max(b.y)
            {
                return true;
            }
        }
        false
    }
}
