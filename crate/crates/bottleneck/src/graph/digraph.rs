//! Bottleneck cycles in directed graphs.
//!
//! The sorted greedy peels vertices with zero in- or out-degree and, when
//! none remain, removes the extreme-weight edge, remembering it; the last
//! remembered edge is the bottleneck and a path between its endpoints in
//! the surviving subgraph completes the cycle. The comparison-only driver
//! wraps the greedy in weight-clustering rounds so each run works on small
//! integer ranks.

use std::collections::VecDeque;

use serde::Serialize;

use super::{CycleError, CycleResult};
use crate::quality::Direction;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DiEdge<W> {
    pub tail: u32,
    pub head: u32,
    pub weight: W,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightedDigraph<W> {
    n: usize,
    pub edges: Vec<DiEdge<W>>,
}

impl<W: Copy + PartialOrd + std::fmt::Debug> WeightedDigraph<W> {
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, tail: u32, head: u32, weight: W) -> usize {
        assert!((tail as usize) < self.n && (head as usize) < self.n);
        self.edges.push(DiEdge { tail, head, weight });
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// Edge ids in removal order for the direction: ascending weight for
/// max-min, descending for min-max; ties by edge id.
pub fn sorted_edge_order<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    dir: Direction,
) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edges.len()).collect();
    order.sort_by(|&a, &b| {
        dir.removal_cmp(&g.edges[a].weight, &g.edges[b].weight).then(a.cmp(&b))
    });
    order
}

struct Adjacency {
    out_start: Vec<usize>,
    out_edges: Vec<u32>,
    in_start: Vec<usize>,
    in_edges: Vec<u32>,
}

fn adjacency<W: Copy + PartialOrd + std::fmt::Debug>(g: &WeightedDigraph<W>) -> Adjacency {
    let n = g.n;
    let mut out_count = vec![0usize; n + 1];
    let mut in_count = vec![0usize; n + 1];
    for e in &g.edges {
        out_count[e.tail as usize + 1] += 1;
        in_count[e.head as usize + 1] += 1;
    }
    for v in 0..n {
        out_count[v + 1] += out_count[v];
        in_count[v + 1] += in_count[v];
    }
    let mut out_edges = vec![0u32; g.edges.len()];
    let mut in_edges = vec![0u32; g.edges.len()];
    let mut out_pos = out_count.clone();
    let mut in_pos = in_count.clone();
    for (i, e) in g.edges.iter().enumerate() {
        out_edges[out_pos[e.tail as usize]] = i as u32;
        out_pos[e.tail as usize] += 1;
        in_edges[in_pos[e.head as usize]] = i as u32;
        in_pos[e.head as usize] += 1;
    }
    Adjacency { out_start: out_count, out_edges, in_start: in_count, in_edges }
}

struct GreedyRun {
    /// Index into `order` of the last remembered removal, if any.
    last_candidate: Option<usize>,
}

/// One pass of the sorted greedy. With `stop_at = Some(k)` the pass replays
/// deterministically and halts just before the candidate removal at order
/// position `k`, leaving `alive` describing that moment.
fn greedy_pass<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    adj: &Adjacency,
    order: &[usize],
    stop_at: Option<usize>,
    alive_out: Option<&mut Vec<bool>>,
) -> GreedyRun {
    let n = g.n;
    let m = g.edges.len();
    let mut edge_alive = vec![true; m];
    let mut vertex_alive = vec![true; n];
    let mut in_deg = vec![0u32; n];
    let mut out_deg = vec![0u32; n];
    for e in &g.edges {
        out_deg[e.tail as usize] += 1;
        in_deg[e.head as usize] += 1;
    }
    let mut ready: VecDeque<u32> = (0..n as u32)
        .filter(|&v| in_deg[v as usize] == 0 || out_deg[v as usize] == 0)
        .collect();
    let mut live_edges = m;
    let mut scan = 0usize;
    let mut last_candidate = None;

    let kill_edge = |i: usize,
                         edge_alive: &mut Vec<bool>,
                         in_deg: &mut Vec<u32>,
                         out_deg: &mut Vec<u32>,
                         ready: &mut VecDeque<u32>,
                         vertex_alive: &[bool],
                         live_edges: &mut usize| {
        if !edge_alive[i] {
            return;
        }
        edge_alive[i] = false;
        *live_edges -= 1;
        let e = &g.edges[i];
        let (t, h) = (e.tail as usize, e.head as usize);
        out_deg[t] -= 1;
        if vertex_alive[t] && out_deg[t] == 0 {
            ready.push_back(t as u32);
        }
        in_deg[h] -= 1;
        if vertex_alive[h] && in_deg[h] == 0 {
            ready.push_back(h as u32);
        }
    };

    while live_edges > 0 {
        if let Some(v) = ready.pop_front() {
            let v = v as usize;
            if !vertex_alive[v] {
                continue;
            }
            vertex_alive[v] = false;
            for &i in &adj.out_edges[adj.out_start[v]..adj.out_start[v + 1]] {
                kill_edge(
                    i as usize,
                    &mut edge_alive,
                    &mut in_deg,
                    &mut out_deg,
                    &mut ready,
                    &vertex_alive,
                    &mut live_edges,
                );
            }
            for &i in &adj.in_edges[adj.in_start[v]..adj.in_start[v + 1]] {
                kill_edge(
                    i as usize,
                    &mut edge_alive,
                    &mut in_deg,
                    &mut out_deg,
                    &mut ready,
                    &vertex_alive,
                    &mut live_edges,
                );
            }
            continue;
        }
        while scan < order.len() && !edge_alive[order[scan]] {
            scan += 1;
        }
        debug_assert!(scan < order.len());
        if stop_at == Some(scan) {
            break;
        }
        last_candidate = Some(scan);
        kill_edge(
            order[scan],
            &mut edge_alive,
            &mut in_deg,
            &mut out_deg,
            &mut ready,
            &vertex_alive,
            &mut live_edges,
        );
    }

    if let Some(out) = alive_out {
        *out = edge_alive;
    }
    GreedyRun { last_candidate }
}

fn complete_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    alive: &[bool],
    bottleneck: usize,
    dir: Direction,
) -> Result<CycleResult<W>, CycleError> {
    let e = &g.edges[bottleneck];
    let (src, dst) = (e.head as usize, e.tail as usize);
    if src == dst {
        return Ok(CycleResult { value: e.weight, edges: vec![bottleneck], direction: dir });
    }
    // BFS from head back to tail over the surviving edges
    let n = g.n;
    let mut via: Vec<Option<u32>> = vec![None; n];
    let mut queue = VecDeque::new();
    queue.push_back(src);
    let mut seen = vec![false; n];
    seen[src] = true;
    'bfs: while let Some(v) = queue.pop_front() {
        for (i, edge) in g.edges.iter().enumerate() {
            if i == bottleneck || !alive[i] || edge.tail as usize != v {
                continue;
            }
            let h = edge.head as usize;
            if !seen[h] {
                seen[h] = true;
                via[h] = Some(i as u32);
                if h == dst {
                    break 'bfs;
                }
                queue.push_back(h);
            }
        }
    }
    if !seen[dst] {
        return Err(CycleError::Internal(
            "no completion path from the bottleneck edge".into(),
        ));
    }
    let mut path = Vec::new();
    let mut cur = dst;
    while cur != src {
        let i = via[cur].unwrap() as usize;
        path.push(i);
        cur = g.edges[i].tail as usize;
    }
    path.reverse();
    let mut edges = vec![bottleneck];
    edges.extend(path);
    Ok(CycleResult { value: g.edges[bottleneck].weight, edges, direction: dir })
}

/// Bottleneck cycle given a precomputed removal order over the edges.
pub fn bottleneck_cycle_directed_sorted<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    order: &[usize],
    dir: Direction,
) -> Result<CycleResult<W>, CycleError> {
    assert_eq!(order.len(), g.edges.len());
    let adj = adjacency(g);
    let run = greedy_pass(g, &adj, order, None, None);
    let last = run.last_candidate.ok_or(CycleError::NoCycle)?;
    let mut alive = Vec::new();
    greedy_pass(g, &adj, order, Some(last), Some(&mut alive));
    alive[order[last]] = false;
    complete_cycle(g, &alive, order[last], dir)
}

/// Per-round log of the weight-clustering driver.
#[derive(Clone, Debug, Serialize)]
pub struct DriverStats {
    /// (alpha, block length) at entry to each executed refinement round.
    pub rounds: Vec<(u64, usize)>,
    /// Refinement runs plus the final reconstruction run.
    pub total_runs: usize,
}

/// Comparison-only bottleneck cycle: clusters edge weights into blocks with
/// the tower schedule alpha_1 = 1, alpha_{i+1} = 2^alpha_i, runs the sorted
/// greedy on block ranks, and narrows to the sub-block holding the
/// bottleneck until it is a single weight.
pub fn bottleneck_cycle_directed_with_stats<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    dir: Direction,
) -> Result<(CycleResult<W>, DriverStats), CycleError> {
    let m = g.edges.len();
    if m == 0 {
        return Err(CycleError::NoCycle);
    }
    let adj = adjacency(g);
    let cmp = |a: usize, b: usize| {
        dir.removal_cmp(&g.edges[a].weight, &g.edges[b].weight).then(a.cmp(&b))
    };

    let mut block: Vec<usize> = (0..m).collect();
    let mut below: Vec<usize> = Vec::new();
    let mut above: Vec<usize> = Vec::new();
    let mut alpha: u64 = 1;
    let mut stats = DriverStats { rounds: Vec::new(), total_runs: 0 };

    loop {
        let single_weight = block
            .windows(2)
            .all(|w| dir.removal_cmp(&g.edges[w[0]].weight, &g.edges[w[1]].weight).is_eq());
        if block.len() <= 1 || single_weight {
            break;
        }
        stats.rounds.push((alpha, block.len()));
        let alpha_next: u64 = if alpha >= 64 { u64::MAX } else { 1u64 << alpha };
        let chunk = ((m as u64) / alpha_next).max(1) as usize;

        block.sort_by(|&a, &b| cmp(a, b));
        let bounds: Vec<(usize, usize)> = (0..block.len())
            .step_by(chunk)
            .map(|s| (s, (s + chunk).min(block.len())))
            .collect();

        // rank 0 = below, 1..=k = sub-blocks, k+1 = above
        let k = bounds.len();
        let mut rank = vec![0u32; m];
        for &i in &above {
            rank[i] = (k + 1) as u32;
        }
        for (j, &(s, t)) in bounds.iter().enumerate() {
            for &i in &block[s..t] {
                rank[i] = (j + 1) as u32;
            }
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by(|&a, &b| rank[a].cmp(&rank[b]).then(a.cmp(&b)));

        let run = greedy_pass(g, &adj, &order, None, None);
        let last = run.last_candidate.ok_or(CycleError::NoCycle)?;
        let winner = rank[order[last]] as usize;
        debug_assert!(winner >= 1 && winner <= k, "bottleneck must stay inside the block");

        let (s, t) = bounds[winner - 1];
        below.extend_from_slice(&block[..s]);
        above.extend_from_slice(&block[t..]);
        block = block[s..t].to_vec();
        alpha = alpha_next;
    }

    // final run: ranks below / block / above, ties by edge id
    let mut rank = vec![1u32; m];
    for &i in &below {
        rank[i] = 0;
    }
    for &i in &above {
        rank[i] = 2;
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| rank[a].cmp(&rank[b]).then(a.cmp(&b)));
    let run = greedy_pass(g, &adj, &order, None, None);
    let last = run.last_candidate.ok_or(CycleError::NoCycle)?;
    debug_assert_eq!(rank[order[last]], 1);
    let mut alive = Vec::new();
    greedy_pass(g, &adj, &order, Some(last), Some(&mut alive));
    alive[order[last]] = false;
    let result = complete_cycle(g, &alive, order[last], dir)?;
    stats.total_runs = stats.rounds.len() + 1;
    Ok((result, stats))
}

pub fn bottleneck_cycle_directed<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    dir: Direction,
) -> Result<CycleResult<W>, CycleError> {
    bottleneck_cycle_directed_with_stats(g, dir).map(|(r, _)| r)
}

/// Checks that `edges` is a closed vertex-simple directed cycle and returns
/// its extreme weight for the direction.
pub fn validate_directed_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &WeightedDigraph<W>,
    edges: &[usize],
    dir: Direction,
) -> Result<W, String> {
    if edges.is_empty() {
        return Err("empty cycle".into());
    }
    let mut seen = std::collections::HashSet::new();
    for w in 0..edges.len() {
        let cur = &g.edges[edges[w]];
        let next = &g.edges[edges[(w + 1) % edges.len()]];
        if cur.head != next.tail {
            return Err(format!("edge {w} head {} != next tail {}", cur.head, next.tail));
        }
        if !seen.insert(cur.tail) {
            return Err(format!("vertex {} repeated", cur.tail));
        }
    }
    let mut extreme = g.edges[edges[0]].weight;
    for &i in edges {
        if dir.removal_cmp(&g.edges[i].weight, &extreme).is_lt() {
            extreme = g.edges[i].weight;
        }
    }
    Ok(extreme)
}
