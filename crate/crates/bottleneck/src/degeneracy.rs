//! Graph degeneracy and k-cores: the canonical bottleneck subset instance,
//! with quality = induced degree.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::sync::Arc;

use thiserror::Error;

use crate::greedy::Instance;
use crate::quality::Quality;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphBuildError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge endpoint {0} out of range for {1} vertices")]
    VertexOutOfRange(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
}

/// Undirected simple graph: no self-loops, parallel edges deduplicated.
#[derive(Clone, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: Arc<Vec<Vec<u32>>>,
    m: usize,
}

impl SimpleGraph {
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphBuildError> {
        if n == 0 {
            return Err(GraphBuildError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphBuildError::SelfLoop(u as usize));
            }
            for w in [u, v] {
                if w as usize >= n {
                    return Err(GraphBuildError::VertexOutOfRange(w as usize, n));
                }
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Self { n, adj: Arc::new(adj), m: m / 2 })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }
}

#[derive(Clone, Debug)]
pub struct DegeneracyResult {
    /// Max over nonempty vertex subsets of the minimum induced degree.
    pub degeneracy: usize,
    /// The maximal subset attaining it.
    pub core: Vec<usize>,
    /// Removal order (a degeneracy ordering).
    pub ordering: Vec<usize>,
    /// Degree each vertex had at the moment of its removal.
    pub removal_degrees: Vec<usize>,
    /// Bucket-queue operations performed; linear in n + m.
    pub operations: u64,
}

/// Peels minimum-degree vertices (lowest id on ties) with a bucket queue
/// indexed by current degree. Buckets hold lazily invalidated entries; each
/// degree decrement pushes one entry, so the operation count stays linear
/// in n + m even though each bucket orders its members by id.
pub fn degeneracy(g: &SimpleGraph) -> DegeneracyResult {
    let n = g.vertex_count();
    let mut deg: Vec<u32> = (0..n).map(|v| g.neighbors(v).len() as u32).collect();
    let mut alive = vec![true; n];
    let max_deg = deg.iter().copied().max().unwrap_or(0) as usize;
    let mut buckets: Vec<BinaryHeap<Reverse<u32>>> = vec![BinaryHeap::new(); max_deg + 1];
    let mut ops = 0u64;
    for v in 0..n {
        buckets[deg[v] as usize].push(Reverse(v as u32));
        ops += 1;
    }

    let mut cur = 0usize;
    let mut ordering = Vec::with_capacity(n);
    let mut removal_degrees = Vec::with_capacity(n);
    let mut best = 0usize;
    let mut best_prefix = 0usize;

    for _ in 0..n {
        let v = loop {
            while cur <= max_deg && buckets[cur].is_empty() {
                cur += 1;
                ops += 1;
            }
            let Reverse(v) = buckets[cur].pop().unwrap();
            ops += 1;
            if alive[v as usize] && deg[v as usize] as usize == cur {
                break v as usize;
            }
        };
        // cur is the minimum live degree, i.e. Q of the surviving set
        if ordering.is_empty() {
            best = cur;
            best_prefix = 0;
        } else if cur > best {
            best = cur;
            best_prefix = ordering.len();
        }
        alive[v] = false;
        ordering.push(v);
        removal_degrees.push(cur);
        for &u in g.neighbors(v) {
            let u = u as usize;
            if alive[u] {
                deg[u] -= 1;
                let d = deg[u] as usize;
                buckets[d].push(Reverse(u as u32));
                ops += 1;
                if d < cur {
                    cur = d;
                }
            }
        }
    }

    let mut in_core = vec![true; n];
    for &v in &ordering[..best_prefix] {
        in_core[v] = false;
    }
    let core = (0..n).filter(|&v| in_core[v]).collect();
    DegeneracyResult { degeneracy: best, core, ordering, removal_degrees, operations: ops }
}

/// The maximal vertex set inducing minimum degree >= k; empty if none.
pub fn k_core(g: &SimpleGraph, k: usize) -> Vec<usize> {
    let n = g.vertex_count();
    let mut deg: Vec<usize> = (0..n).map(|v| g.neighbors(v).len()).collect();
    let mut alive = vec![true; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
    for v in &queue {
        alive[*v] = false;
    }
    while let Some(v) = queue.pop() {
        for &u in g.neighbors(v) {
            let u = u as usize;
            if alive[u] {
                deg[u] -= 1;
                if deg[u] < k {
                    alive[u] = false;
                    queue.push(u);
                }
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

/// Runs the peeling and reports its bucket-queue operation count, for
/// checking the linear bound `ops <= c * (n + m)` with c = 8.
pub fn removal_complexity_check(g: &SimpleGraph) -> u64 {
    degeneracy(g).operations
}

pub const COMPLEXITY_CONSTANT: u64 = 8;

/// Degree-quality instance over a simple graph, for the generic framework.
#[derive(Clone, Debug)]
pub struct DegreeInstance {
    graph: SimpleGraph,
    alive: Vec<bool>,
    deg: Vec<u32>,
}

impl DegreeInstance {
    pub fn new(graph: &SimpleGraph) -> Self {
        let n = graph.vertex_count();
        let deg = (0..n).map(|v| graph.neighbors(v).len() as u32).collect();
        Self { graph: graph.clone(), alive: vec![true; n], deg }
    }
}

impl Instance for DegreeInstance {
    type Value = i64;

    fn universe(&self) -> usize {
        self.graph.vertex_count()
    }

    fn is_alive(&self, x: usize) -> bool {
        self.alive[x]
    }

    fn quality(&self, x: usize) -> Quality<i64> {
        debug_assert!(self.alive[x]);
        Quality::Finite(self.deg[x] as i64)
    }

    fn remove(&mut self, x: usize) {
        debug_assert!(self.alive[x]);
        self.alive[x] = false;
        for &u in self.graph.neighbors(x) {
            if self.alive[u as usize] {
                self.deg[u as usize] -= 1;
            }
        }
    }
}
