//! Bottleneck cycles in undirected multigraphs by weight-median recursion:
//! split the live edges at the median weight, test whether the better half
//! contains a cycle, and either drop the worse half or contract the better
//! half and recurse. The witness cycle is completed by a path search among
//! better-or-equal edges of the original graph.

use std::collections::VecDeque;

use serde::Serialize;

use super::{CycleError, CycleResult};
use crate::quality::Direction;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MultiEdge<W> {
    pub u: u32,
    pub v: u32,
    pub weight: W,
}

/// Undirected edge list; parallel edges and self-loops are allowed (the
/// recursion's contraction step produces both).
#[derive(Clone, Debug, Serialize)]
pub struct WeightedMultigraph<W> {
    n: usize,
    pub edges: Vec<MultiEdge<W>>,
}

impl<W: Copy + PartialOrd + std::fmt::Debug> WeightedMultigraph<W> {
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: u32, v: u32, weight: W) -> usize {
        assert!((u as usize) < self.n && (v as usize) < self.n);
        self.edges.push(MultiEdge { u, v, weight });
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Clone)]
struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cur = x;
        while self.parent[cur as usize] != root {
            let next = self.parent[cur as usize];
            self.parent[cur as usize] = root;
            cur = next;
        }
        root
    }

    /// False when the endpoints were already connected.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra as usize] = rb;
        true
    }
}

fn has_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedMultigraph<W>,
    base: &Dsu,
    edge_ids: &[usize],
) -> bool {
    let mut dsu = base.clone();
    for &i in edge_ids {
        let e = &g.edges[i];
        if !dsu.union(e.u, e.v) {
            return true;
        }
    }
    false
}

/// Max-min (or min-max) bottleneck cycle.
pub fn bottleneck_cycle_undirected<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedMultigraph<W>,
    dir: Direction,
) -> Result<CycleResult<W>, CycleError> {
    let mut live: Vec<usize> = (0..g.edges.len()).collect();
    let mut contracted = Dsu::new(g.n);
    let worse = |a: &W, b: &W| dir.removal_cmp(a, b).is_lt();

    let value = loop {
        if live.is_empty() {
            return Err(CycleError::NoCycle);
        }
        // multiset median by removal order (lower half = worse)
        let mut ws: Vec<W> = live.iter().map(|&i| g.edges[i].weight).collect();
        let mid = ws.len() / 2;
        ws.select_nth_unstable_by(mid, |a, b| dir.removal_cmp(a, b));
        let median = ws[mid];

        let better_half: Vec<usize> =
            live.iter().copied().filter(|&i| !worse(&g.edges[i].weight, &median)).collect();
        if has_cycle(g, &contracted, &better_half) {
            if better_half.len() == live.len() {
                // the median is the worst live weight; either the optimum is
                // strictly better, or it is exactly the median
                let strictly: Vec<usize> = live
                    .iter()
                    .copied()
                    .filter(|&i| worse(&median, &g.edges[i].weight))
                    .collect();
                if !strictly.is_empty() && has_cycle(g, &contracted, &strictly) {
                    live = strictly;
                } else {
                    break median;
                }
            } else {
                live = better_half;
            }
        } else {
            // no cycle among the better edges: they are free, contract them
            for &i in &better_half {
                let e = &g.edges[i];
                contracted.union(e.u, e.v);
            }
            live.retain(|&i| worse(&g.edges[i].weight, &median));
        }
    };

    // pick the bottleneck edge: a live median-weight edge on a cycle among
    // the live-or-contracted edges
    let ties = |w: &W| dir.removal_cmp(w, &value).is_eq();
    let mut bottleneck = None;
    for &i in &live {
        if !ties(&g.edges[i].weight) {
            continue;
        }
        let e = &g.edges[i];
        let mut dsu = contracted.clone();
        for &j in &live {
            if j != i {
                let f = &g.edges[j];
                dsu.union(f.u, f.v);
            }
        }
        if dsu.find(e.u) == dsu.find(e.v) {
            bottleneck = Some(i);
            break;
        }
    }
    let bottleneck = bottleneck
        .ok_or_else(|| CycleError::Internal("no bottleneck edge closes a cycle".into()))?;

    // complete the cycle with better-or-equal edges of the original graph
    let e = &g.edges[bottleneck];
    if e.u == e.v {
        return Ok(CycleResult { value, edges: vec![bottleneck], direction: dir });
    }
    let usable: Vec<usize> = (0..g.edges.len())
        .filter(|&i| i != bottleneck && !worse(&g.edges[i].weight, &value))
        .collect();
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); g.n];
    for &i in &usable {
        let f = &g.edges[i];
        adj[f.u as usize].push((f.v, i as u32));
        adj[f.v as usize].push((f.u, i as u32));
    }
    let mut via: Vec<Option<(u32, u32)>> = vec![None; g.n];
    let mut seen = vec![false; g.n];
    let mut queue = VecDeque::new();
    queue.push_back(e.u);
    seen[e.u as usize] = true;
    while let Some(v) = queue.pop_front() {
        if v == e.v {
            break;
        }
        for &(to, i) in &adj[v as usize] {
            if !seen[to as usize] {
                seen[to as usize] = true;
                via[to as usize] = Some((v, i));
                queue.push_back(to);
            }
        }
    }
    if !seen[e.v as usize] {
        return Err(CycleError::Internal("no completion path for the bottleneck edge".into()));
    }
    let mut path = Vec::new();
    let mut cur = e.v;
    while cur != e.u {
        let (prev, i) = via[cur as usize].unwrap();
        path.push(i as usize);
        cur = prev;
    }
    path.reverse();
    let mut edges = vec![bottleneck];
    edges.extend(path);
    Ok(CycleResult { value, edges, direction: dir })
}

/// Checks closure and simplicity of an undirected cycle (a self-loop and a
/// parallel pair are valid) and returns its extreme weight.
pub fn validate_undirected_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedMultigraph<W>,
    edges: &[usize],
    dir: Direction,
) -> Result<W, String> {
    if edges.is_empty() {
        return Err("empty cycle".into());
    }
    let first = &g.edges[edges[0]];
    if edges.len() == 1 {
        if first.u != first.v {
            return Err("single non-loop edge".into());
        }
    } else {
        // walk the edges, matching shared endpoints
        let mut ids = std::collections::HashSet::new();
        for &i in edges {
            if !ids.insert(i) {
                return Err("repeated edge".into());
            }
        }
        let mut cur = {
            let second = &g.edges[edges[1]];
            if first.v == second.u || first.v == second.v {
                first.u
            } else {
                first.v
            }
        };
        let start = cur;
        let mut visited = std::collections::HashSet::new();
        for &i in edges {
            if !visited.insert(cur) {
                return Err(format!("vertex {cur} repeated"));
            }
            let e = &g.edges[i];
            cur = if e.u == cur {
                e.v
            } else if e.v == cur {
                e.u
            } else {
                return Err(format!("edge {i} does not continue the walk at {cur}"));
            };
        }
        if cur != start {
            return Err("cycle does not close".into());
        }
    }
    let mut extreme = first.weight;
    for &i in edges {
        if dir.removal_cmp(&g.edges[i].weight, &extreme).is_lt() {
            extreme = g.edges[i].weight;
        }
    }
    Ok(extreme)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_triangle() {
        let mut g = WeightedMultigraph::new(3);
        g.add_edge(0, 1, 1.0);
        g.add_edge(1, 2, 2.0);
        g.add_edge(2, 0, 3.0);
        let r = bottleneck_cycle_undirected(&g, Direction::MaxMin).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.edges.len(), 3);
        assert_eq!(validate_undirected_cycle(&g, &r.edges, Direction::MaxMin).unwrap(), 1.0);
    }

    #[test]
    fn better_of_two_triangles() {
        let mut g = WeightedMultigraph::new(6);
        g.add_edge(0, 1, 2.0);
        g.add_edge(1, 2, 5.0);
        g.add_edge(2, 0, 9.0);
        g.add_edge(3, 4, 6.0);
        g.add_edge(4, 5, 7.0);
        g.add_edge(5, 3, 8.0);
        let r = bottleneck_cycle_undirected(&g, Direction::MaxMin).unwrap();
        assert_eq!(r.value, 6.0);
    }

    #[test]
    fn forest_has_no_cycle() {
        let mut g = WeightedMultigraph::new(5);
        g.add_edge(0, 1, 1.0);
        g.add_edge(1, 2, 2.0);
        g.add_edge(3, 4, 3.0);
        assert_eq!(
            bottleneck_cycle_undirected(&g, Direction::MaxMin).unwrap_err(),
            CycleError::NoCycle
        );
    }

    #[test]
    fn self_loop_and_parallel_pair() {
        let mut g = WeightedMultigraph::new(3);
        g.add_edge(0, 0, 4.0);
        g.add_edge(1, 2, 9.0);
        g.add_edge(1, 2, 8.0);
        let r = bottleneck_cycle_undirected(&g, Direction::MaxMin).unwrap();
        assert_eq!(r.value, 8.0); // the parallel pair beats the loop
        assert_eq!(r.edges.len(), 2);
        validate_undirected_cycle(&g, &r.edges, Direction::MaxMin).unwrap();
    }

    #[test]
    fn minmax_is_negated_maxmin() {
        for seed in 0..40u64 {
            let g = crate::gen::random_multigraph(6, 10, None, seed);
            let mm = bottleneck_cycle_undirected(&g, Direction::MinMax);
            let mut neg = WeightedMultigraph::new(6);
            for e in &g.edges {
                neg.add_edge(e.u, e.v, -e.weight);
            }
            let nm = bottleneck_cycle_undirected(&neg, Direction::MaxMin);
            match (mm, nm) {
                (Ok(a), Ok(b)) => assert_eq!(a.value, -b.value, "seed {seed}"),
                (Err(CycleError::NoCycle), Err(CycleError::NoCycle)) => {}
                (a, b) => panic!("seed {seed}: {a:?} vs {b:?}"),
            }
        }
    }
}
