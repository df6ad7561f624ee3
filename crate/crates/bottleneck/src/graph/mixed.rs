//! Bottleneck cycles in mixed graphs.
//!
//! Each vertex with undirected degree d is expanded into a gadget with an
//! increasing path of d+1 nodes and a decreasing path of d-1 nodes; the
//! incoming and outgoing terminals of the undirected edges are wired so that
//! every in-terminal reaches every out-terminal except its own. Closed walks
//! of the expansion then correspond one-for-one to u-turn-free closed walks
//! of the mixed graph, and a vertex-simple cycle is extracted from the walk
//! by contracting its undirected edges.

use std::collections::{HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::digraph::{bottleneck_cycle_directed, WeightedDigraph};
use super::CycleError;
use crate::quality::{Direction, Quality};

#[derive(Clone, Debug, Serialize)]
pub struct MixedGraph<W> {
    n: usize,
    pub directed: Vec<(u32, u32, W)>,
    pub undirected: Vec<(u32, u32, W)>,
}

impl<W: Copy + PartialOrd + std::fmt::Debug> MixedGraph<W> {
    pub fn new(n: usize) -> Self {
        Self { n, directed: Vec::new(), undirected: Vec::new() }
    }

    pub fn add_directed(&mut self, tail: u32, head: u32, weight: W) -> usize {
        assert!((tail as usize) < self.n && (head as usize) < self.n);
        self.directed.push((tail, head, weight));
        self.directed.len() - 1
    }

    pub fn add_undirected(&mut self, u: u32, v: u32, weight: W) -> usize {
        assert!((u as usize) < self.n && (v as usize) < self.n);
        assert!(u != v, "undirected self-loops are not supported");
        self.undirected.push((u, v, weight));
        self.undirected.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.directed.len() + self.undirected.len()
    }
}

/// Where an edge of the expanded digraph came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeOrigin {
    Directed(usize),
    /// The `forward` copy runs from the undirected edge's `u` to its `v`.
    Undirected { index: usize, forward: bool },
    Gadget,
}

/// Expands a mixed graph into a directed graph whose closed walks are the
/// u-turn-free closed walks of the input. Gadget edges carry the neutral
/// weight for the direction, so they can never be the bottleneck.
pub fn mixed_to_directed<W: Copy + PartialOrd + std::fmt::Debug>(
    m: &MixedGraph<W>,
    dir: Direction,
) -> (WeightedDigraph<Quality<W>>, Vec<EdgeOrigin>) {
    let neutral = match dir {
        Direction::MaxMin => Quality::PosInf,
        Direction::MinMax => Quality::NegInf,
    };

    // undirected incidence, by edge id, sorted for determinism
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); m.n];
    for (i, &(u, v, _)) in m.undirected.iter().enumerate() {
        incident[u as usize].push(i);
        incident[v as usize].push(i);
    }

    let mut node_count = 0u32;
    let mut fresh = || {
        node_count += 1;
        node_count - 1
    };

    // per vertex: entry node (receives incoming directed edges), exit node
    // (sends outgoing directed edges), and per-incidence terminals
    let mut entry = vec![0u32; m.n];
    let mut exit = vec![0u32; m.n];
    let mut in_term: Vec<HashMap<usize, u32>> = vec![HashMap::new(); m.n];
    let mut out_term: Vec<HashMap<usize, u32>> = vec![HashMap::new(); m.n];
    struct Gadget {
        inc: Vec<u32>,
        dec: Vec<u32>, // dec[j] = node numbered j, for j in 1..=d-1
    }
    let mut gadgets: Vec<Option<Gadget>> = Vec::with_capacity(m.n);

    for v in 0..m.n {
        let d = incident[v].len();
        if d == 0 {
            let node = fresh();
            entry[v] = node;
            exit[v] = node;
            gadgets.push(None);
            continue;
        }
        let inc: Vec<u32> = (0..=d).map(|_| fresh()).collect();
        let dec: Vec<u32> = (0..d.saturating_sub(1)).map(|_| fresh()).collect();
        for &e in &incident[v] {
            in_term[v].insert(e, fresh());
            out_term[v].insert(e, fresh());
        }
        entry[v] = inc[0];
        exit[v] = inc[d];
        gadgets.push(Some(Gadget { inc, dec }));
    }

    let mut g = WeightedDigraph::new(node_count as usize);
    let mut origins = Vec::new();
    let add = |g: &mut WeightedDigraph<Quality<W>>,
                   origins: &mut Vec<EdgeOrigin>,
                   from: u32,
                   to: u32,
                   w: Quality<W>,
                   origin: EdgeOrigin| {
        g.add_edge(from, to, w);
        origins.push(origin);
    };

    for v in 0..m.n {
        let Some(gadget) = &gadgets[v] else { continue };
        let d = incident[v].len();
        // dec[k] in the numbering below is the node numbered k (1..=d-1)
        let dec_node = |k: usize| -> Option<u32> {
            if (1..d).contains(&k) {
                Some(gadget.dec[k - 1])
            } else {
                None
            }
        };
        for j in 0..d {
            add(&mut g, &mut origins, gadget.inc[j], gadget.inc[j + 1], neutral, EdgeOrigin::Gadget);
        }
        for j in (2..d).rev() {
            add(
                &mut g,
                &mut origins,
                dec_node(j).unwrap(),
                dec_node(j - 1).unwrap(),
                neutral,
                EdgeOrigin::Gadget,
            );
        }
        // the k-th incident undirected edge carries the half-integer k + 1/2:
        // its in-terminal feeds increasing node k+1 and decreasing node k,
        // its out-terminal is fed from increasing node k and decreasing node k+1
        for (k, &e) in incident[v].iter().enumerate() {
            let tin = in_term[v][&e];
            let tout = out_term[v][&e];
            add(&mut g, &mut origins, tin, gadget.inc[k + 1], neutral, EdgeOrigin::Gadget);
            if let Some(dk) = dec_node(k) {
                add(&mut g, &mut origins, tin, dk, neutral, EdgeOrigin::Gadget);
            }
            add(&mut g, &mut origins, gadget.inc[k], tout, neutral, EdgeOrigin::Gadget);
            if let Some(dk1) = dec_node(k + 1) {
                add(&mut g, &mut origins, dk1, tout, neutral, EdgeOrigin::Gadget);
            }
        }
    }

    for (i, &(t, h, w)) in m.directed.iter().enumerate() {
        add(
            &mut g,
            &mut origins,
            exit[t as usize],
            entry[h as usize],
            Quality::Finite(w),
            EdgeOrigin::Directed(i),
        );
    }
    for (i, &(u, v, w)) in m.undirected.iter().enumerate() {
        add(
            &mut g,
            &mut origins,
            out_term[u as usize][&i],
            in_term[v as usize][&i],
            Quality::Finite(w),
            EdgeOrigin::Undirected { index: i, forward: true },
        );
        add(
            &mut g,
            &mut origins,
            out_term[v as usize][&i],
            in_term[u as usize][&i],
            Quality::Finite(w),
            EdgeOrigin::Undirected { index: i, forward: false },
        );
    }

    (g, origins)
}

/// Reference to a mixed edge in a result cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MixedEdgeRef {
    Directed(usize),
    Undirected(usize),
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct MixedCycleStep {
    pub from: u32,
    pub to: u32,
    pub edge: MixedEdgeRef,
}

#[derive(Clone, Debug, Serialize)]
pub struct MixedCycle<W> {
    pub value: W,
    pub steps: Vec<MixedCycleStep>,
    pub direction: Direction,
}

/// Extracts a vertex-simple mixed cycle from a closed u-turn-free walk. The
/// walk's undirected edge set either contains a cycle outright, or forms a
/// forest whose contraction leaves a directed multigraph in which every
/// touched component has in- and out-arcs, hence a directed cycle.
fn extract_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    m: &MixedGraph<W>,
    walk: &[MixedCycleStep],
) -> Result<Vec<MixedCycleStep>, CycleError> {
    let und_set: Vec<usize> = {
        let mut seen = HashSet::new();
        walk.iter()
            .filter_map(|s| match s.edge {
                MixedEdgeRef::Undirected(i) if seen.insert(i) => Some(i),
                _ => None,
            })
            .collect()
    };

    // union-find over the undirected set
    let mut parent: Vec<u32> = (0..m.n as u32).collect();
    fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
        let mut r = x;
        while parent[r as usize] != r {
            r = parent[r as usize];
        }
        let mut c = x;
        while parent[c as usize] != r {
            let nx = parent[c as usize];
            parent[c as usize] = r;
            c = nx;
        }
        r
    }

    let mut closing: Option<usize> = None;
    let mut forest: Vec<usize> = Vec::new();
    for &i in &und_set {
        let (u, v, _) = m.undirected[i];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru == rv {
            closing = Some(i);
            break;
        }
        parent[ru as usize] = rv;
        forest.push(i);
    }

    let undirected_path = |edges: &[usize], from: u32, to: u32| -> Vec<(usize, u32, u32)> {
        // BFS path inside the forest; returns (edge, from, to) steps
        if from == to {
            return Vec::new();
        }
        let mut adj: HashMap<u32, Vec<(u32, usize)>> = HashMap::new();
        for &i in edges {
            let (u, v, _) = m.undirected[i];
            adj.entry(u).or_default().push((v, i));
            adj.entry(v).or_default().push((u, i));
        }
        let mut via: HashMap<u32, (u32, usize)> = HashMap::new();
        let mut queue = VecDeque::new();
        queue.push_back(from);
        while let Some(x) = queue.pop_front() {
            if x == to {
                break;
            }
            for &(y, i) in adj.get(&x).into_iter().flatten() {
                if y != from && !via.contains_key(&y) {
                    via.insert(y, (x, i));
                    queue.push_back(y);
                }
            }
        }
        let mut rev = Vec::new();
        let mut cur = to;
        while cur != from {
            let (prev, i) = via[&cur];
            rev.push((i, prev, cur));
            cur = prev;
        }
        rev.reverse();
        rev
    };

    if let Some(cl) = closing {
        // a cycle among the walk's undirected edges: the closing edge plus
        // the forest path between its endpoints
        let (u, v, _) = m.undirected[cl];
        let mut steps =
            vec![MixedCycleStep { from: u, to: v, edge: MixedEdgeRef::Undirected(cl) }];
        for (i, a, b) in undirected_path(&forest, v, u) {
            steps.push(MixedCycleStep { from: a, to: b, edge: MixedEdgeRef::Undirected(i) });
        }
        return Ok(steps);
    }

    // contract the forest; directed steps become arcs between components
    let arcs: Vec<(u32, u32, usize)> = walk
        .iter()
        .filter_map(|s| match s.edge {
            MixedEdgeRef::Directed(i) => {
                Some((find(&mut parent, s.from), find(&mut parent, s.to), i))
            }
            _ => None,
        })
        .collect();
    if arcs.is_empty() {
        return Err(CycleError::Internal(
            "closed u-turn-free walk over an undirected forest".into(),
        ));
    }

    // any directed cycle among the arcs, by DFS with a gray stack
    let mut out: HashMap<u32, Vec<(u32, usize)>> = HashMap::new();
    for &(a, b, i) in &arcs {
        out.entry(a).or_default().push((b, i));
    }
    let arc_cycle = {
        let mut color: HashMap<u32, u8> = HashMap::new();
        let mut cycle: Option<Vec<(u32, u32, usize)>> = None;

        fn dfs(
            x: u32,
            out: &HashMap<u32, Vec<(u32, usize)>>,
            color: &mut HashMap<u32, u8>,
            stack: &mut Vec<(u32, u32, usize)>,
            cycle: &mut Option<Vec<(u32, u32, usize)>>,
        ) {
            color.insert(x, 1);
            for &(y, i) in out.get(&x).into_iter().flatten() {
                if cycle.is_some() {
                    return;
                }
                match color.get(&y).copied().unwrap_or(0) {
                    0 => {
                        stack.push((x, y, i));
                        dfs(y, out, color, stack, cycle);
                        if cycle.is_some() {
                            return;
                        }
                        stack.pop();
                    }
                    1 => {
                        let pos = stack.iter().position(|&(a, _, _)| a == y).unwrap_or(0);
                        let mut c: Vec<(u32, u32, usize)> = stack[pos..].to_vec();
                        c.push((x, y, i));
                        *cycle = Some(c);
                        return;
                    }
                    _ => {}
                }
            }
            color.insert(x, 2);
        }

        let mut roots: Vec<u32> = out.keys().copied().collect();
        roots.sort_unstable();
        for r in roots {
            if color.get(&r).copied().unwrap_or(0) == 0 {
                let mut stack = Vec::new();
                dfs(r, &out, &mut color, &mut stack, &mut cycle);
                if cycle.is_some() {
                    break;
                }
            }
        }
        cycle.ok_or_else(|| {
            CycleError::Internal("contracted walk has no directed cycle".into())
        })?
    };

    // expand: inside each component, walk the forest from the arrival
    // vertex of the incoming arc to the departure vertex of the outgoing one
    let k = arc_cycle.len();
    let mut steps = Vec::new();
    for j in 0..k {
        let (_, _, i) = arc_cycle[j];
        let (tail, head, _) = m.directed[i];
        steps.push(MixedCycleStep { from: tail, to: head, edge: MixedEdgeRef::Directed(i) });
        let (next_tail, _, _) = m.directed[arc_cycle[(j + 1) % k].2];
        for (e, a, b) in undirected_path(&forest, head, next_tail) {
            steps.push(MixedCycleStep { from: a, to: b, edge: MixedEdgeRef::Undirected(e) });
        }
    }
    Ok(steps)
}

/// Max-min (or min-max) bottleneck cycle in a mixed graph: cycles may use
/// undirected edges in either direction but must orient all directed edges
/// consistently; vertex- and edge-simple.
pub fn bottleneck_cycle_mixed<W: Copy + PartialOrd + std::fmt::Debug>(
    m: &MixedGraph<W>,
    dir: Direction,
) -> Result<MixedCycle<W>, CycleError> {
    let (dg, origins) = mixed_to_directed(m, dir);
    let r = bottleneck_cycle_directed(&dg, dir)?;
    let value = r
        .value
        .finite()
        .ok_or_else(|| CycleError::Internal("bottleneck fell on a gadget edge".into()))?;

    let mut walk = Vec::new();
    for &i in &r.edges {
        match origins[i] {
            EdgeOrigin::Gadget => {}
            EdgeOrigin::Directed(d) => {
                let (t, h, _) = m.directed[d];
                walk.push(MixedCycleStep { from: t, to: h, edge: MixedEdgeRef::Directed(d) });
            }
            EdgeOrigin::Undirected { index, forward } => {
                let (u, v, _) = m.undirected[index];
                let (f, t) = if forward { (u, v) } else { (v, u) };
                walk.push(MixedCycleStep { from: f, to: t, edge: MixedEdgeRef::Undirected(index) });
            }
        }
    }
    let steps = extract_cycle(m, &walk)?;

    let cycle = MixedCycle { value, steps, direction: dir };
    debug_assert!(validate_mixed_cycle(m, &cycle).is_ok(), "{:?}", validate_mixed_cycle(m, &cycle));
    Ok(cycle)
}

/// Checks closure, vertex-simplicity, orientation consistency, and that the
/// extreme weight matches `value`.
pub fn validate_mixed_cycle<W: Copy + PartialOrd + std::fmt::Debug>(
    m: &MixedGraph<W>,
    cycle: &MixedCycle<W>,
) -> Result<(), String> {
    let steps = &cycle.steps;
    if steps.is_empty() {
        return Err("empty cycle".into());
    }
    let mut seen_vert = HashSet::new();
    let mut seen_edge = HashSet::new();
    let mut extreme: Option<W> = None;
    for (j, s) in steps.iter().enumerate() {
        let next = &steps[(j + 1) % steps.len()];
        if s.to != next.from {
            return Err(format!("step {j} does not chain"));
        }
        if !seen_vert.insert(s.from) {
            return Err(format!("vertex {} repeated", s.from));
        }
        let w = match s.edge {
            MixedEdgeRef::Directed(i) => {
                let (t, h, w) = m.directed[i];
                if (s.from, s.to) != (t, h) {
                    return Err(format!("directed edge {i} used against its orientation"));
                }
                if !seen_edge.insert((0, i)) {
                    return Err(format!("directed edge {i} repeated"));
                }
                w
            }
            MixedEdgeRef::Undirected(i) => {
                let (u, v, w) = m.undirected[i];
                if !((s.from, s.to) == (u, v) || (s.from, s.to) == (v, u)) {
                    return Err(format!("undirected edge {i} does not join the step"));
                }
                if !seen_edge.insert((1, i)) {
                    return Err(format!("undirected edge {i} repeated"));
                }
                w
            }
        };
        extreme = Some(match extreme {
            None => w,
            Some(e) => {
                if cycle.direction.removal_cmp(&w, &e).is_lt() {
                    w
                } else {
                    e
                }
            }
        });
    }
    let extreme = extreme.unwrap();
    if cycle.direction.removal_cmp(&extreme, &cycle.value).is_ne() {
        return Err(format!("extreme weight {extreme:?} != reported {:?}", cycle.value));
    }
    Ok(())
}
