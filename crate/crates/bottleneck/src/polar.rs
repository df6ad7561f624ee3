//! Bottleneck regular cycles in polar (switch) graphs.
//!
//! A regular cycle is vertex-simple and must enter and exit every visited
//! vertex through opposite poles. The solver expands the graph to maximum
//! degree three, then repeatedly removes vertices whose edges sit on a
//! single pole, bridges of the underlying graph, and otherwise the
//! worst-weight edge (remembering it); the last remembered edge is the
//! bottleneck, and a regular path between its endpoints on their opposite
//! poles completes the witness cycle. Large instances run the same removal
//! rules as a feasibility sweep over the sorted weights instead of one edge
//! at a time.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use serde::Serialize;

use crate::graph::{CycleError, WeightedDigraph};
use crate::quality::{Direction, Quality};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct PolarEdge<W> {
    pub u: u32,
    pub pu: u8,
    pub v: u32,
    pub pv: u8,
    pub weight: W,
}

impl<W> PolarEdge<W> {
    /// Endpoint (vertex, pole) on side 0 or 1.
    pub fn end(&self, side: u8) -> (u32, u8) {
        if side == 0 {
            (self.u, self.pu)
        } else {
            (self.v, self.pv)
        }
    }

    fn set_end(&mut self, side: u8, vertex: u32, pole: u8) {
        if side == 0 {
            self.u = vertex;
            self.pu = pole;
        } else {
            self.v = vertex;
            self.pv = pole;
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarGraph<W> {
    n: usize,
    pub edges: Vec<PolarEdge<W>>,
}

impl<W: Copy + PartialOrd + std::fmt::Debug> PolarGraph<W> {
    pub fn new(n: usize) -> Self {
        Self { n, edges: Vec::new() }
    }

    pub fn add_edge(&mut self, u: u32, pu: u8, v: u32, pv: u8, weight: W) -> usize {
        assert!((u as usize) < self.n && (v as usize) < self.n);
        assert!(pu < 2 && pv < 2);
        self.edges.push(PolarEdge { u, pu, v, pv, weight });
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Incidence lists indexed `[vertex][pole]`, entries (edge id, side).
    pub fn incidence(&self) -> Vec<[Vec<(u32, u8)>; 2]> {
        let mut inc: Vec<[Vec<(u32, u8)>; 2]> = vec![[Vec::new(), Vec::new()]; self.n];
        for (i, e) in self.edges.iter().enumerate() {
            inc[e.u as usize][e.pu as usize].push((i as u32, 0));
            inc[e.v as usize][e.pv as usize].push((i as u32, 1));
        }
        inc
    }
}

// ---------------------------------------------------------------- expansion

/// A polar graph of maximum total degree 3 whose regular cycles correspond
/// one-to-one with the original's. Added tree edges carry the neutral
/// weight and map to no original edge.
#[derive(Clone, Debug)]
pub struct ExpandedPolar<W> {
    pub graph: PolarGraph<Quality<W>>,
    /// Per expanded edge: the original edge it carries, None for added ones.
    pub orig_edge: Vec<Option<usize>>,
    /// Per expanded vertex: the original vertex it belongs to.
    pub orig_vertex: Vec<u32>,
}

/// Replaces every vertex of total degree above three by a tree of split
/// vertices: a vertex with two or more edges on both poles splits at the
/// poles, otherwise two same-pole edges are peeled onto a fresh vertex.
pub fn expand_degree3<W: Copy + PartialOrd + std::fmt::Debug>(
    p: &PolarGraph<W>,
    neutral: Quality<W>,
) -> ExpandedPolar<W> {
    let mut edges: Vec<PolarEdge<Quality<W>>> = p
        .edges
        .iter()
        .map(|e| PolarEdge { u: e.u, pu: e.pu, v: e.v, pv: e.pv, weight: Quality::Finite(e.weight) })
        .collect();
    let mut orig_edge: Vec<Option<usize>> = (0..edges.len()).map(Some).collect();
    let mut orig_vertex: Vec<u32> = (0..p.n as u32).collect();

    let mut inc: Vec<[Vec<(u32, u8)>; 2]> = vec![[Vec::new(), Vec::new()]; p.n];
    for (i, e) in edges.iter().enumerate() {
        inc[e.u as usize][e.pu as usize].push((i as u32, 0));
        inc[e.v as usize][e.pv as usize].push((i as u32, 1));
    }

    let mut work: VecDeque<u32> = (0..p.n as u32).collect();
    while let Some(v) = work.pop_front() {
        loop {
            let d0 = inc[v as usize][0].len();
            let d1 = inc[v as usize][1].len();
            if d0 + d1 <= 3 {
                break;
            }
            let nv = inc.len() as u32;
            inc.push([Vec::new(), Vec::new()]);
            orig_vertex.push(orig_vertex[v as usize]);

            if d0 >= 2 && d1 >= 2 {
                // split at the poles, moving the smaller side
                let moved_pole: u8 = if d0 <= d1 { 0 } else { 1 };
                let kept_pole = 1 - moved_pole;
                let moved = std::mem::take(&mut inc[v as usize][moved_pole as usize]);
                for &(ei, side) in &moved {
                    edges[ei as usize].set_end(side, nv, moved_pole);
                }
                inc[nv as usize][moved_pole as usize] = moved;
                // connector between the opposite poles of the two halves
                let g = edges.len() as u32;
                let mut conn = PolarEdge { u: 0, pu: 0, v: 0, pv: 0, weight: neutral };
                conn.set_end(0, v, moved_pole);
                conn.set_end(1, nv, kept_pole);
                edges.push(conn);
                orig_edge.push(None);
                inc[v as usize][moved_pole as usize].push((g, 0));
                inc[nv as usize][kept_pole as usize].push((g, 1));
                work.push_back(nv);
            } else {
                // peel two edges from the busy pole onto a degree-3 vertex
                let busy: u8 = if d0 >= d1 { 0 } else { 1 };
                let e1 = inc[v as usize][busy as usize].pop().unwrap();
                let e2 = inc[v as usize][busy as usize].pop().unwrap();
                for &(ei, side) in &[e1, e2] {
                    edges[ei as usize].set_end(side, nv, 1 - busy);
                    inc[nv as usize][(1 - busy) as usize].push((ei, side));
                }
                let g = edges.len() as u32;
                let mut conn = PolarEdge { u: 0, pu: 0, v: 0, pv: 0, weight: neutral };
                conn.set_end(0, v, busy);
                conn.set_end(1, nv, busy);
                edges.push(conn);
                orig_edge.push(None);
                inc[v as usize][busy as usize].push((g, 0));
                inc[nv as usize][busy as usize].push((g, 1));
            }
        }
    }

    let graph = PolarGraph { n: inc.len(), edges };
    ExpandedPolar { graph, orig_edge, orig_vertex }
}

// ------------------------------------------------------------- double cover

/// Skew-symmetric directed double cover: vertex `2v + q` is the copy of `v`
/// entered at pole `q` and exited at pole `1 - q`; each polar edge yields
/// one directed edge per traversal direction.
#[derive(Clone, Debug)]
pub struct DoubleCover<W> {
    pub digraph: WeightedDigraph<W>,
    /// Cover edge -> underlying polar edge.
    pub polar_edge: Vec<usize>,
    /// The swap-and-reverse involution, as a pairing of cover edges.
    pub involution: Vec<usize>,
}

pub fn double_cover<W: Copy + PartialOrd + std::fmt::Debug>(p: &PolarGraph<W>) -> DoubleCover<W> {
    let mut digraph = WeightedDigraph::new(2 * p.n);
    let mut polar_edge = Vec::with_capacity(2 * p.edges.len());
    let mut involution = Vec::with_capacity(2 * p.edges.len());
    for (i, e) in p.edges.iter().enumerate() {
        let exit_u = 2 * e.u + (1 - e.pu) as u32;
        let enter_v = 2 * e.v + e.pv as u32;
        let exit_v = 2 * e.v + (1 - e.pv) as u32;
        let enter_u = 2 * e.u + e.pu as u32;
        let a = digraph.add_edge(exit_u, enter_v, e.weight);
        let b = digraph.add_edge(exit_v, enter_u, e.weight);
        polar_edge.push(i);
        polar_edge.push(i);
        involution.push(b);
        involution.push(a);
    }
    DoubleCover { digraph, polar_edge, involution }
}

// ------------------------------------------------------------ regular paths

const PATH_SIZE_GUARD: usize = 10_000;

/// Vertex-simple path entering and exiting intermediate vertices on
/// opposite poles, from `start` = (vertex, exit pole) to `goal` = (vertex,
/// entry pole), as an edge id list. Exhaustive backtracking, pruned by
/// reachability in the double cover.
pub fn regular_path<W: Copy + PartialOrd + std::fmt::Debug>(
    p: &PolarGraph<W>,
    alive: Option<&[bool]>,
    start: (u32, u8),
    goal: (u32, u8),
) -> Option<Vec<usize>> {
    if p.n > PATH_SIZE_GUARD {
        log::warn!(
            "regular path search over {} vertices; backtracking may be slow",
            p.n
        );
    }
    let is_alive = |e: usize| alive.map_or(true, |a| a[e]);
    let mut inc: Vec<[Vec<(u32, u8)>; 2]> = vec![[Vec::new(), Vec::new()]; p.n];
    for (i, e) in p.edges.iter().enumerate() {
        if !is_alive(i) {
            continue;
        }
        inc[e.u as usize][e.pu as usize].push((i as u32, 0));
        inc[e.v as usize][e.pv as usize].push((i as u32, 1));
    }

    if start.0 == goal.0 {
        debug_assert!(false, "regular path endpoints must be distinct vertices");
        return None;
    }

    // Necessary condition for any continuation: the cover state
    // (entered w at pole pw) must reach the goal state. States are cover
    // vertex ids 2w + pw; a live polar edge (u,pu)-(v,pv) gives forward
    // moves (enter u at 1-pu) -> (enter v at pv) and the reverse traversal.
    let reachable = {
        let mut rev: Vec<Vec<u32>> = vec![Vec::new(); 2 * p.n];
        for (i, e) in p.edges.iter().enumerate() {
            if !is_alive(i) {
                continue;
            }
            let from_u = 2 * e.u as usize + (1 - e.pu) as usize;
            let to_v = 2 * e.v as usize + e.pv as usize;
            let from_v = 2 * e.v as usize + (1 - e.pv) as usize;
            let to_u = 2 * e.u as usize + e.pu as usize;
            rev[to_v].push(from_u as u32);
            rev[to_u].push(from_v as u32);
        }
        let goal_state = 2 * goal.0 as usize + goal.1 as usize;
        let mut seen = vec![false; 2 * p.n];
        seen[goal_state] = true;
        let mut queue = VecDeque::new();
        queue.push_back(goal_state as u32);
        while let Some(x) = queue.pop_front() {
            for &prev in &rev[x as usize] {
                if !seen[prev as usize] {
                    seen[prev as usize] = true;
                    queue.push_back(prev);
                }
            }
        }
        seen
    };

    let mut visited = vec![false; p.n];
    visited[start.0 as usize] = true;
    let mut path: Vec<u32> = Vec::new();
    // frame: (vertex, exit pole, next incidence index)
    let mut stack: Vec<(u32, u8, usize)> = vec![(start.0, start.1, 0)];
    'outer: while !stack.is_empty() {
        let frame = stack.len() - 1;
        let (v, pole, _) = stack[frame];
        while stack[frame].2 < inc[v as usize][pole as usize].len() {
            let (ei, side) = inc[v as usize][pole as usize][stack[frame].2];
            stack[frame].2 += 1;
            let (w, pw) = p.edges[ei as usize].end(1 - side);
            if (w, pw) == goal && !visited[w as usize] {
                path.push(ei);
                return Some(path.iter().map(|&e| e as usize).collect());
            }
            if visited[w as usize] || !reachable[2 * w as usize + pw as usize] {
                continue;
            }
            visited[w as usize] = true;
            path.push(ei);
            stack.push((w, 1 - pw, 0));
            continue 'outer;
        }
        stack.pop();
        if !stack.is_empty() {
            visited[v as usize] = false;
            path.pop();
        }
    }
    None
}

// -------------------------------------------------- removal-rule primitives

struct LiveState {
    alive: Vec<bool>,
    pole_deg: Vec<[u32; 2]>,
    live_edges: usize,
}

fn live_state<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    keep: impl Fn(usize) -> bool,
) -> LiveState {
    let mut alive = vec![false; g.edges.len()];
    let mut pole_deg = vec![[0u32; 2]; g.n];
    let mut live_edges = 0;
    for (i, e) in g.edges.iter().enumerate() {
        if keep(i) {
            alive[i] = true;
            live_edges += 1;
            pole_deg[e.u as usize][e.pu as usize] += 1;
            pole_deg[e.v as usize][e.pv as usize] += 1;
        }
    }
    LiveState { alive, pole_deg, live_edges }
}

impl LiveState {
    fn kill<W: Copy + PartialOrd + std::fmt::Debug>(
        &mut self,
        g: &PolarGraph<Quality<W>>,
        i: usize,
        singles: &mut VecDeque<u32>,
    ) {
        if !self.alive[i] {
            return;
        }
        self.alive[i] = false;
        self.live_edges -= 1;
        let e = &g.edges[i];
        for (v, pole) in [(e.u, e.pu), (e.v, e.pv)] {
            let d = &mut self.pole_deg[v as usize][pole as usize];
            *d -= 1;
            if *d == 0 {
                singles.push_back(v);
            }
        }
    }

    fn is_single_pole(&self, v: u32) -> bool {
        let [d0, d1] = self.pole_deg[v as usize];
        (d0 == 0) != (d1 == 0)
    }
}

/// Removes single-pole vertices (with their edges) until none remain.
fn cascade_singles<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    inc: &[[Vec<(u32, u8)>; 2]],
    state: &mut LiveState,
    singles: &mut VecDeque<u32>,
) {
    while let Some(v) = singles.pop_front() {
        if !state.is_single_pole(v) {
            continue;
        }
        for pole in 0..2 {
            for &(ei, _) in &inc[v as usize][pole] {
                state.kill(g, ei as usize, singles);
            }
        }
    }
}

/// Bridges of the live underlying multigraph, by an iterative lowpoint DFS.
fn bridges<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    state: &LiveState,
) -> Vec<usize> {
    let n = g.n;
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for (i, e) in g.edges.iter().enumerate() {
        if !state.alive[i] {
            continue;
        }
        adj[e.u as usize].push((e.v, i as u32));
        adj[e.v as usize].push((e.u, i as u32));
    }
    const UNSET: u32 = u32::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![UNSET; n];
    let mut time = 0u32;
    let mut out = Vec::new();
    // frame: (vertex, entering edge, next adjacency index)
    let mut stack: Vec<(u32, u32, usize)> = Vec::new();
    for root in 0..n as u32 {
        if disc[root as usize] != UNSET || adj[root as usize].is_empty() {
            continue;
        }
        disc[root as usize] = time;
        low[root as usize] = time;
        time += 1;
        stack.push((root, u32::MAX, 0));
        while let Some(&mut (v, via, ref mut idx)) = stack.last_mut() {
            if *idx < adj[v as usize].len() {
                let (to, ei) = adj[v as usize][*idx];
                *idx += 1;
                if ei == via {
                    continue;
                }
                if disc[to as usize] == UNSET {
                    disc[to as usize] = time;
                    low[to as usize] = time;
                    time += 1;
                    stack.push((to, ei, 0));
                } else {
                    low[v as usize] = low[v as usize].min(disc[to as usize]);
                }
            } else {
                stack.pop();
                if let Some(&mut (parent, _, _)) = stack.last_mut() {
                    low[parent as usize] = low[parent as usize].min(low[v as usize]);
                    if low[v as usize] > disc[parent as usize] {
                        out.push(via as usize);
                    }
                }
            }
        }
    }
    out
}

// ------------------------------------------------------------------ results

#[derive(Clone, Debug, Serialize)]
pub struct PolarCycle<W> {
    pub value: W,
    /// Original edge ids in traversal order.
    pub edges: Vec<usize>,
    pub direction: Direction,
}

/// Checks the regular-cycle invariants and returns the extreme weight and
/// the (vertex, entry pole, exit pole) sequence.
pub fn validate_regular_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    p: &PolarGraph<W>,
    edges: &[usize],
    dir: Direction,
) -> Result<(W, Vec<(u32, u8, u8)>), String> {
    if edges.is_empty() {
        return Err("empty cycle".into());
    }
    let first = &p.edges[edges[0]];
    if edges.len() == 1 {
        if first.u == first.v && first.pu != first.pv {
            return Ok((first.weight, vec![(first.u, first.pu, first.pv)]));
        }
        return Err("single edge is not an opposite-pole loop".into());
    }
    // try both orientations of the first edge
    'orient: for flip in [false, true] {
        let (mut cur, mut pole) = first.end(if flip { 0 } else { 1 });
        let start = first.end(if flip { 1 } else { 0 });
        let mut steps: Vec<(u32, u8, u8)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        seen.insert(start.0);
        for (j, &i) in edges.iter().enumerate().skip(1) {
            // arrive at `cur` on `pole`; leave through the opposite pole
            let e = &p.edges[i];
            let side = if e.end(0) == (cur, 1 - pole) {
                0
            } else if e.end(1) == (cur, 1 - pole) {
                1
            } else {
                continue 'orient;
            };
            if !seen.insert(cur) {
                continue 'orient;
            }
            steps.push((cur, pole, 1 - pole));
            let (nxt, npole) = e.end(1 - side);
            cur = nxt;
            pole = npole;
            let _ = j;
        }
        if (cur, 1 - pole) != (start.0, start.1) {
            continue 'orient;
        }
        steps.push((cur, pole, 1 - pole));
        let mut extreme = first.weight;
        for &i in edges {
            if dir.removal_cmp(&p.edges[i].weight, &extreme).is_lt() {
                extreme = p.edges[i].weight;
            }
        }
        return Ok((extreme, steps));
    }
    Err("edge sequence does not chain into a regular cycle".into())
}

// ------------------------------------------------------------------ solvers

const LITERAL_CUTOFF: usize = 2048;

/// Max-min (or min-max) bottleneck regular cycle.
pub fn bottleneck_regular_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    p: &PolarGraph<W>,
    dir: Direction,
) -> Result<PolarCycle<W>, CycleError> {
    if p.edges.is_empty() {
        return Err(CycleError::NoCycle);
    }
    let neutral = match dir {
        Direction::MaxMin => Quality::PosInf,
        Direction::MinMax => Quality::NegInf,
    };
    let ex = expand_degree3(p, neutral);
    let g = &ex.graph;
    let (value, cycle) = if g.edges.len() <= LITERAL_CUTOFF {
        literal_greedy(g, dir)?
    } else {
        sweep_greedy(g, dir)?
    };
    let value = value
        .finite()
        .ok_or_else(|| CycleError::Internal("bottleneck fell on an added tree edge".into()))?;
    let edges: Vec<usize> = cycle.iter().filter_map(|&i| ex.orig_edge[i]).collect();
    match validate_regular_cycle(p, &edges, dir) {
        Ok((extreme, _)) if dir.removal_cmp(&extreme, &value).is_eq() => {
            Ok(PolarCycle { value, edges, direction: dir })
        }
        Ok((extreme, _)) => Err(CycleError::Internal(format!(
            "witness extreme {extreme:?} does not match value {value:?}"
        ))),
        Err(e) => Err(CycleError::Internal(format!("witness validation failed: {e}"))),
    }
}

/// One-at-a-time removal with a priority queue, exactly in rule order.
fn literal_greedy<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    dir: Direction,
) -> Result<(Quality<W>, Vec<usize>), CycleError> {
    let inc = g.incidence();
    let mut state = live_state(g, |_| true);
    let mut singles: VecDeque<u32> =
        (0..g.n as u32).filter(|&v| state.is_single_pole(v)).collect();

    // lazy priority queue over edge ids, worst weight first
    let mut order: Vec<usize> = (0..g.edges.len()).collect();
    order.sort_by(|&a, &b| {
        dir.removal_cmp(&g.edges[a].weight, &g.edges[b].weight).then(a.cmp(&b))
    });
    let mut pq: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
    let rank_of = {
        let mut rank = vec![0usize; g.edges.len()];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        rank
    };
    for i in 0..g.edges.len() {
        pq.push(Reverse(rank_of[i]));
    }

    let mut remembered: Option<(usize, Vec<bool>)> = None;
    loop {
        cascade_singles(g, &inc, &mut state, &mut singles);
        if state.live_edges == 0 {
            break;
        }
        let bs = bridges(g, &state);
        if !bs.is_empty() {
            for b in bs {
                state.kill(g, b, &mut singles);
            }
            continue;
        }
        let lightest = loop {
            let Reverse(r) = pq.pop().expect("live edges remain");
            let i = order[r];
            if state.alive[i] {
                break i;
            }
        };
        remembered = Some((lightest, state.alive.clone()));
        state.kill(g, lightest, &mut singles);
    }

    let (bottleneck, alive_before) = remembered.ok_or(CycleError::NoCycle)?;
    complete_regular_cycle(g, bottleneck, alive_before)
}

/// Batched variant: binary search over the sorted distinct weights for the
/// best threshold whose kept-edge closure (single-pole and bridge removals
/// to a fixpoint) is nonempty. Equivalent to the one-at-a-time greedy by
/// tie-independence of the optimum.
fn sweep_greedy<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    dir: Direction,
) -> Result<(Quality<W>, Vec<usize>), CycleError> {
    let inc = g.incidence();
    let mut distinct: Vec<Quality<W>> =
        g.edges.iter().map(|e| e.weight).filter(|w| w.is_finite()).collect();
    distinct.sort_by(|a, b| dir.removal_cmp(a, b));
    distinct.dedup_by(|a, b| dir.removal_cmp(a, b).is_eq());
    if distinct.is_empty() {
        return Err(CycleError::NoCycle);
    }

    let closure = |threshold: &Quality<W>| -> LiveState {
        let mut state = live_state(g, |i| {
            !dir.removal_cmp(&g.edges[i].weight, threshold).is_lt()
        });
        let mut singles: VecDeque<u32> =
            (0..g.n as u32).filter(|&v| state.is_single_pole(v)).collect();
        loop {
            cascade_singles(g, &inc, &mut state, &mut singles);
            if state.live_edges == 0 {
                break;
            }
            let bs = bridges(g, &state);
            if bs.is_empty() {
                break;
            }
            for b in bs {
                state.kill(g, b, &mut singles);
            }
        }
        state
    };

    if closure(&distinct[0]).live_edges == 0 {
        return Err(CycleError::NoCycle);
    }
    let (mut lo, mut hi) = (0usize, distinct.len() - 1);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if closure(&distinct[mid]).live_edges > 0 {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let value = distinct[lo];
    let survivors = closure(&value);

    // some surviving edge of exactly the bottleneck weight lies on a
    // surviving regular cycle; try them in id order
    for i in 0..g.edges.len() {
        if !survivors.alive[i] || !dir.removal_cmp(&g.edges[i].weight, &value).is_eq() {
            continue;
        }
        if let Ok(r) = complete_regular_cycle(g, i, survivors.alive.clone()) {
            return Ok(r);
        }
    }
    Err(CycleError::Internal("no bottleneck-weight survivor closes a regular cycle".into()))
}

fn complete_regular_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    g: &PolarGraph<Quality<W>>,
    bottleneck: usize,
    mut alive: Vec<bool>,
) -> Result<(Quality<W>, Vec<usize>), CycleError> {
    let e = &g.edges[bottleneck];
    let value = e.weight;
    if e.u == e.v && e.pu != e.pv {
        return Ok((value, vec![bottleneck]));
    }
    alive[bottleneck] = false;
    let path = regular_path(g, Some(&alive), (e.u, 1 - e.pu), (e.v, 1 - e.pv))
        .ok_or_else(|| {
            CycleError::Internal("no regular path completes the bottleneck edge".into())
        })?;
    let mut edges = path;
    edges.push(bottleneck);
    Ok((value, edges))
}
