//! Seeded random instance generators, shared by the test suite and the CLI.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::degeneracy::SimpleGraph;
use crate::geom::{Point2, Point3};
use crate::graph::{MixedGraph, WeightedDigraph, WeightedMultigraph};
use crate::polar::PolarGraph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A weight in (0, 1), optionally snapped to one of `distinct` values to
/// exercise ties.
fn weight(rng: &mut ChaCha8Rng, distinct: Option<u32>) -> f64 {
    match distinct {
        None => rng.gen_range(0.001..1.0),
        Some(k) => (rng.gen_range(0..k) as f64 + 1.0) / (k as f64 + 1.0),
    }
}

pub fn random_points2(n: usize, seed: u64) -> Vec<Point2<f64>> {
    let mut rng = rng(seed);
    (0..n).map(|_| Point2::new(rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0))).collect()
}

pub fn random_points3(n: usize, seed: u64) -> Vec<Point3<f64>> {
    let mut rng = rng(seed);
    (0..n)
        .map(|_| {
            Point3::new(
                rng.gen_range(0.0..1.0),
                rng.gen_range(0.0..1.0),
                rng.gen_range(0.0..1.0),
            )
        })
        .collect()
}

/// Simple graph with up to `m` edges (duplicates collapse).
pub fn random_simple_graph(n: usize, m: usize, seed: u64) -> SimpleGraph {
    let mut rng = rng(seed);
    let mut edges = Vec::with_capacity(m);
    if n >= 2 {
        for _ in 0..m {
            let u = rng.gen_range(0..n as u32);
            let mut v = rng.gen_range(0..n as u32);
            while v == u {
                v = rng.gen_range(0..n as u32);
            }
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

/// Erdos-Renyi style G(n, m) with distinct edges, for the large smoke runs.
pub fn random_simple_graph_distinct(n: usize, m: usize, seed: u64) -> SimpleGraph {
    let mut rng = rng(seed);
    let mut seen = std::collections::HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u == v {
            continue;
        }
        let key = if u < v { ((u as u64) << 32) | v as u64 } else { ((v as u64) << 32) | u as u64 };
        if seen.insert(key) {
            edges.push((u, v));
        }
    }
    SimpleGraph::from_edges(n, &edges).unwrap()
}

pub fn random_digraph(n: usize, m: usize, distinct: Option<u32>, seed: u64) -> WeightedDigraph<f64> {
    let mut rng = rng(seed);
    let mut g = WeightedDigraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        let w = weight(&mut rng, distinct);
        g.add_edge(u, v, w);
    }
    g
}

/// Multigraph with occasional parallel edges and self-loops.
pub fn random_multigraph(n: usize, m: usize, distinct: Option<u32>, seed: u64) -> WeightedMultigraph<f64> {
    let mut rng = rng(seed);
    let mut g = WeightedMultigraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n as u32);
        let v = if rng.gen_bool(0.05) { u } else { rng.gen_range(0..n as u32) };
        g.add_edge(u, v, weight(&mut rng, distinct));
    }
    g
}

pub fn random_mixed(n: usize, m: usize, seed: u64) -> MixedGraph<f64> {
    let mut rng = rng(seed);
    let mut g = MixedGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n as u32);
        let mut v = rng.gen_range(0..n as u32);
        while v == u {
            v = rng.gen_range(0..n as u32);
        }
        let w = weight(&mut rng, None);
        if rng.gen_bool(0.5) {
            g.add_directed(u, v, w);
        } else {
            g.add_undirected(u, v, w);
        }
    }
    g
}

pub fn random_polar(n: usize, m: usize, seed: u64) -> PolarGraph<f64> {
    let mut rng = rng(seed);
    let mut g = PolarGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n as u32);
        let mut v = rng.gen_range(0..n as u32);
        while v == u {
            v = rng.gen_range(0..n as u32);
        }
        let pu = rng.gen_range(0..2) as u8;
        let pv = rng.gen_range(0..2) as u8;
        g.add_edge(u, pu, v, pv, weight(&mut rng, None));
    }
    g
}

pub fn shuffled<T: Clone>(items: &[T], seed: u64) -> Vec<T> {
    let mut rng = rng(seed);
    let mut v = items.to_vec();
    v.shuffle(&mut rng);
    v
}

/// A random permutation of `0..n`.
pub fn permutation(n: usize, seed: u64) -> Vec<usize> {
    shuffled(&(0..n).collect::<Vec<_>>(), seed)
}
