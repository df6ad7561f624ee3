//! Exhaustive cycle enumeration for the four graph classes. Each oracle
//! walks every simple cycle (under the class's validity rules) and keeps
//! the one with the best extreme weight.

use crate::graph::{MixedEdgeRef, MixedGraph, WeightedDigraph, WeightedMultigraph};
use crate::polar::PolarGraph;
use crate::quality::Direction;

use super::OracleError;

const GRAPH_BUDGET: usize = 8;
const POLAR_BUDGET: usize = 9;

struct Best<W, C> {
    dir: Direction,
    found: Option<(W, C)>,
}

impl<W: Copy + PartialOrd + std::fmt::Debug, C> Best<W, C> {
    fn new(dir: Direction) -> Self {
        Self { dir, found: None }
    }

    fn offer(&mut self, value: W, witness: C) {
        let better = match &self.found {
            None => true,
            Some((v, _)) => self.dir.removal_cmp(&value, v).is_gt(),
        };
        if better {
            self.found = Some((value, witness));
        }
    }
}

fn extreme<W: Copy + PartialOrd + std::fmt::Debug>(dir: Direction, ws: &[W]) -> W {
    let mut e = ws[0];
    for w in &ws[1..] {
        if dir.removal_cmp(w, &e).is_lt() {
            e = *w;
        }
    }
    e
}

/// Best cycle in an undirected multigraph: self-loops, parallel pairs, and
/// vertex-simple cycles of three or more vertices.
pub fn undirected_cycle_oracle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedMultigraph<W>,
    dir: Direction,
) -> Result<Option<(W, Vec<usize>)>, OracleError> {
    let n = g.vertex_count();
    if n > GRAPH_BUDGET {
        return Err(OracleError::BudgetExceeded(n, GRAPH_BUDGET));
    }
    let mut best = Best::new(dir);
    for (i, e) in g.edges.iter().enumerate() {
        if e.u == e.v {
            best.offer(e.weight, vec![i]);
        }
        for (j, f) in g.edges.iter().enumerate().skip(i + 1) {
            if e.u != e.v && ((e.u, e.v) == (f.u, f.v) || (e.u, e.v) == (f.v, f.u)) {
                best.offer(extreme(dir, &[e.weight, f.weight]), vec![i, j]);
            }
        }
    }

    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        if e.u != e.v {
            adj[e.u as usize].push((e.v, i as u32));
            adj[e.v as usize].push((e.u, i as u32));
        }
    }

    fn dfs<W: Copy + PartialOrd + std::fmt::Debug>(
        adj: &[Vec<(u32, u32)>],
        g: &WeightedMultigraph<W>,
        start: u32,
        cur: u32,
        visited: &mut Vec<bool>,
        path: &mut Vec<usize>,
        best: &mut Best<W, Vec<usize>>,
    ) {
        for &(to, ei) in &adj[cur as usize] {
            if path.last() == Some(&(ei as usize)) {
                continue;
            }
            if to == start && path.len() >= 2 {
                let mut cycle = path.clone();
                cycle.push(ei as usize);
                let ws: Vec<W> = cycle.iter().map(|&k| g.edges[k].weight).collect();
                best.offer(extreme(best.dir, &ws), cycle);
                continue;
            }
            if to <= start || visited[to as usize] {
                continue;
            }
            visited[to as usize] = true;
            path.push(ei as usize);
            dfs(adj, g, start, to, visited, path, best);
            path.pop();
            visited[to as usize] = false;
        }
    }

    for s in 0..n as u32 {
        let mut visited = vec![false; n];
        visited[s as usize] = true;
        let mut path = Vec::new();
        dfs(&adj, g, s, s, &mut visited, &mut path, &mut best);
    }
    Ok(best.found)
}

/// Best simple directed cycle (self-loops included).
pub fn directed_cycle_oracle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    dir: Direction,
) -> Result<Option<(W, Vec<usize>)>, OracleError> {
    let n = g.vertex_count();
    if n > GRAPH_BUDGET {
        return Err(OracleError::BudgetExceeded(n, GRAPH_BUDGET));
    }
    let mut best = Best::new(dir);
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        if e.tail == e.head {
            best.offer(e.weight, vec![i]);
        } else {
            adj[e.tail as usize].push((e.head, i as u32));
        }
    }

    fn dfs<W: Copy + PartialOrd + std::fmt::Debug>(
        adj: &[Vec<(u32, u32)>],
        g: &WeightedDigraph<W>,
        start: u32,
        cur: u32,
        visited: &mut Vec<bool>,
        path: &mut Vec<usize>,
        best: &mut Best<W, Vec<usize>>,
    ) {
        for &(to, ei) in &adj[cur as usize] {
            if to == start && !path.is_empty() {
                let mut cycle = path.clone();
                cycle.push(ei as usize);
                let ws: Vec<W> = cycle.iter().map(|&k| g.edges[k].weight).collect();
                best.offer(extreme(best.dir, &ws), cycle);
                continue;
            }
            if to <= start || visited[to as usize] {
                continue;
            }
            visited[to as usize] = true;
            path.push(ei as usize);
            dfs(adj, g, start, to, visited, path, best);
            path.pop();
            visited[to as usize] = false;
        }
    }

    for s in 0..n as u32 {
        let mut visited = vec![false; n];
        visited[s as usize] = true;
        let mut path = Vec::new();
        dfs(&adj, g, s, s, &mut visited, &mut path, &mut best);
    }
    Ok(best.found)
}

/// Best mixed cycle: undirected edges either way, directed edges forward,
/// vertex- and edge-simple.
pub fn mixed_cycle_oracle<W: Copy + PartialOrd + std::fmt::Debug>(
    m: &MixedGraph<W>,
    dir: Direction,
) -> Result<Option<(W, Vec<MixedEdgeRef>)>, OracleError> {
    let n = m.vertex_count();
    if n > GRAPH_BUDGET {
        return Err(OracleError::BudgetExceeded(n, GRAPH_BUDGET));
    }
    let mut best = Best::new(dir);
    // moves: (to, edge ref, weight)
    let mut adj: Vec<Vec<(u32, MixedEdgeRef, W)>> = vec![Vec::new(); n];
    for (i, &(t, h, w)) in m.directed.iter().enumerate() {
        if t == h {
            best.offer(w, vec![MixedEdgeRef::Directed(i)]);
        } else {
            adj[t as usize].push((h, MixedEdgeRef::Directed(i), w));
        }
    }
    for (i, &(u, v, w)) in m.undirected.iter().enumerate() {
        adj[u as usize].push((v, MixedEdgeRef::Undirected(i), w));
        adj[v as usize].push((u, MixedEdgeRef::Undirected(i), w));
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<W: Copy + PartialOrd + std::fmt::Debug>(
        adj: &[Vec<(u32, MixedEdgeRef, W)>],
        start: u32,
        cur: u32,
        visited: &mut Vec<bool>,
        path: &mut Vec<(MixedEdgeRef, W)>,
        best: &mut Best<W, Vec<MixedEdgeRef>>,
    ) {
        for &(to, er, w) in &adj[cur as usize] {
            if path.iter().any(|&(used, _)| used == er) {
                continue;
            }
            if to == start && !path.is_empty() {
                let ws: Vec<W> = path.iter().map(|&(_, pw)| pw).chain([w]).collect();
                let cycle: Vec<MixedEdgeRef> =
                    path.iter().map(|&(e, _)| e).chain([er]).collect();
                best.offer(extreme(best.dir, &ws), cycle);
                continue;
            }
            if to <= start || visited[to as usize] {
                continue;
            }
            visited[to as usize] = true;
            path.push((er, w));
            dfs(adj, start, to, visited, path, best);
            path.pop();
            visited[to as usize] = false;
        }
    }

    for s in 0..n as u32 {
        let mut visited = vec![false; n];
        visited[s as usize] = true;
        let mut path = Vec::new();
        dfs(&adj, s, s, &mut visited, &mut path, &mut best);
    }
    Ok(best.found)
}

/// Best regular cycle in a polar graph: vertex-simple, opposite poles at
/// every vertex; an opposite-pole self-loop and a parallel pair across
/// opposite pole pairs both count.
pub fn regular_cycle_oracle<W: Copy + PartialOrd + std::fmt::Debug>(
    p: &PolarGraph<W>,
    dir: Direction,
) -> Result<Option<(W, Vec<usize>)>, OracleError> {
    let n = p.vertex_count();
    if n > POLAR_BUDGET {
        return Err(OracleError::BudgetExceeded(n, POLAR_BUDGET));
    }
    let mut best = Best::new(dir);
    let inc = p.incidence();

    for (i, e) in p.edges.iter().enumerate() {
        if e.u == e.v && e.pu != e.pv {
            best.offer(e.weight, vec![i]);
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs<W: Copy + PartialOrd + std::fmt::Debug>(
        p: &PolarGraph<W>,
        inc: &[[Vec<(u32, u8)>; 2]],
        first: usize,
        close_at: (u32, u8),
        cur: (u32, u8), // vertex, exit pole
        visited: &mut Vec<bool>,
        path: &mut Vec<usize>,
        best: &mut Best<W, Vec<usize>>,
    ) {
        for &(ei, side) in &inc[cur.0 as usize][cur.1 as usize] {
            let ei = ei as usize;
            if ei <= first || path.contains(&ei) {
                continue;
            }
            let (w, pw) = p.edges[ei].end(1 - side);
            if (w, pw) == close_at {
                let ws: Vec<W> =
                    path.iter().copied().chain([first, ei]).map(|k| p.edges[k].weight).collect();
                let cycle: Vec<usize> =
                    [first].into_iter().chain(path.iter().copied()).chain([ei]).collect();
                best.offer(extreme(best.dir, &ws), cycle);
                continue;
            }
            if visited[w as usize] {
                continue;
            }
            visited[w as usize] = true;
            path.push(ei);
            dfs(p, inc, first, close_at, (w, 1 - pw), visited, path, best);
            path.pop();
            visited[w as usize] = false;
        }
    }

    for (i, e) in p.edges.iter().enumerate() {
        if e.u == e.v {
            continue;
        }
        // traverse the first edge from side 0 to side 1; the reverse
        // traversal enumerates the same cycles
        let (su, spu) = e.end(0);
        let (sv, spv) = e.end(1);
        let mut visited = vec![false; n];
        visited[su as usize] = true;
        visited[sv as usize] = true;
        let mut path = Vec::new();
        dfs(p, &inc, i, (su, 1 - spu), (sv, 1 - spv), &mut visited, &mut path, &mut best);
    }
    Ok(best.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_is_found() {
        let mut g = WeightedMultigraph::new(3);
        g.add_edge(0, 1, 1.0);
        g.add_edge(1, 2, 2.0);
        g.add_edge(2, 0, 3.0);
        let (v, c) = undirected_cycle_oracle(&g, Direction::MaxMin).unwrap().unwrap();
        assert_eq!(v, 1.0);
        assert_eq!(c.len(), 3);
    }

    #[test]
    fn dag_yields_none() {
        let mut g = WeightedDigraph::new(4);
        g.add_edge(0, 1, 1.0);
        g.add_edge(1, 2, 1.0);
        g.add_edge(0, 2, 1.0);
        g.add_edge(2, 3, 1.0);
        assert!(directed_cycle_oracle(&g, Direction::MaxMin).unwrap().is_none());
    }

    #[test]
    fn budget_guards() {
        let g = WeightedMultigraph::<f64>::new(9);
        assert!(undirected_cycle_oracle(&g, Direction::MaxMin).is_err());
        let p = PolarGraph::<f64>::new(10);
        assert!(regular_cycle_oracle(&p, Direction::MaxMin).is_err());
    }

    #[test]
    fn mixed_two_cycle_with_undirected_return() {
        let mut m = MixedGraph::new(2);
        m.add_directed(0, 1, 3.0);
        m.add_undirected(0, 1, 5.0);
        let (v, c) = mixed_cycle_oracle(&m, Direction::MaxMin).unwrap().unwrap();
        assert_eq!(v, 3.0);
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn polar_ring_and_orientations() {
        let mut p = PolarGraph::new(4);
        p.add_edge(0, 1, 1, 0, 3.0);
        p.add_edge(1, 1, 2, 0, 1.0);
        p.add_edge(2, 1, 3, 0, 4.0);
        p.add_edge(3, 1, 0, 0, 1.0);
        let (v, c) = regular_cycle_oracle(&p, Direction::MaxMin).unwrap().unwrap();
        assert_eq!(v, 1.0);
        assert_eq!(c.len(), 4);
    }
}
