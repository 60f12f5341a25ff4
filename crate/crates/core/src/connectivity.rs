//! Unit-capacity edge flows on multigraphs.
//!
//! Every undirected edge becomes a pair of mutually reverse arcs of
//! capacity one, multi-terminal queries attach a super-source and a
//! super-sink, and augmenting paths are found breadth-first with adjacency
//! scanned in edge-identifier order. Witnesses are therefore reproducible.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::indexed::Indexed;

/// A minimum edge cut together with the side that holds the sources.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub value: usize,
    #[serde(rename = "cut")]
    pub cut_edges: BTreeSet<String>,
    pub source_side: VertexSet,
}

/// Outcome of [`is_k_edge_connected_set`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EdgeConnectivity {
    Connected,
    /// `x` and `y` are separated by `cut`, whose value is below the bound.
    Separated { x: String, y: String, cut: CutWitness },
}

impl EdgeConnectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, EdgeConnectivity::Connected)
    }
}

const INF: i64 = i64::MAX / 4;

/// Residual network over the vertices of an [`Indexed`] graph plus two
/// extra terminal nodes.
pub(crate) struct Network {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
    /// Arc index of the forward arc for each graph edge, if present.
    edge_arc: Vec<Option<usize>>,
    initial_back: Vec<i64>,
    pub source: usize,
    pub sink: usize,
}

impl Network {
    /// `blocked[v]` forbids flow from entering `v` through a graph edge.
    pub fn new(g: &Indexed, blocked: Option<&[bool]>) -> Self {
        let n = g.n();
        let mut net = Network {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n + 2],
            edge_arc: vec![None; g.m()],
            initial_back: vec![0; g.m()],
            source: n,
            sink: n + 1,
        };
        let is_blocked = |v: usize| blocked.is_some_and(|b| b[v]);
        for (e, &(u, v)) in g.ends.iter().enumerate() {
            if u == v {
                continue;
            }
            let (cu, cv) = match (is_blocked(u), is_blocked(v)) {
                (false, false) => (1, 1),
                (false, true) => (1, 0),
                (true, false) => (0, 1),
                (true, true) => continue,
            };
            // Arc u->v has capacity `cv` (flow may enter v), its twin v->u `cu`.
            let a = net.push_pair(u, v, cv, cu);
            net.edge_arc[e] = Some(a);
            net.initial_back[e] = cu;
        }
        net
    }

    fn push_pair(&mut self, u: usize, v: usize, forward: i64, backward: i64) -> usize {
        let a = self.head.len();
        self.head.push(v);
        self.cap.push(forward);
        self.adj[u].push(a);
        self.head.push(u);
        self.cap.push(backward);
        self.adj[v].push(a + 1);
        a
    }

    pub fn supply(&mut self, v: usize, amount: i64) {
        let s = self.source;
        self.push_pair(s, v, amount, 0);
    }

    pub fn drain(&mut self, v: usize, amount: i64) {
        let t = self.sink;
        self.push_pair(v, t, amount, 0);
    }

    /// Edmonds-Karp; stops early once `limit` units have been routed.
    pub fn max_flow(&mut self, limit: Option<i64>) -> i64 {
        let mut total = 0;
        let nodes = self.adj.len();
        loop {
            if limit.is_some_and(|l| total >= l) {
                return total;
            }
            let mut pred: Vec<Option<usize>> = vec![None; nodes];
            let mut seen = vec![false; nodes];
            seen[self.source] = true;
            let mut queue = VecDeque::from([self.source]);
            while let Some(x) = queue.pop_front() {
                if x == self.sink {
                    break;
                }
                for &a in &self.adj[x] {
                    let y = self.head[a];
                    if self.cap[a] > 0 && !seen[y] {
                        seen[y] = true;
                        pred[y] = Some(a);
                        queue.push_back(y);
                    }
                }
            }
            if !seen[self.sink] {
                return total;
            }
            let mut push = INF;
            let mut y = self.sink;
            while let Some(a) = pred[y] {
                push = push.min(self.cap[a]);
                y = self.head[a ^ 1];
            }
            if let Some(l) = limit {
                push = push.min(l - total);
            }
            let mut y = self.sink;
            while let Some(a) = pred[y] {
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                y = self.head[a ^ 1];
            }
            total += push;
        }
    }

    /// Graph vertices reachable from the super-source in the residual network.
    pub fn residual_reachable(&self, n: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[self.source] = true;
        let mut stack = vec![self.source];
        while let Some(x) = stack.pop() {
            for &a in &self.adj[x] {
                let y = self.head[a];
                if self.cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.truncate(n);
        seen
    }

    /// Net flow on graph edge `e` from its first endpoint to its second:
    /// -1, 0 or 1.
    fn edge_flow(&self, e: usize) -> i64 {
        match self.edge_arc[e] {
            None => 0,
            Some(a) => self.cap[a ^ 1] - self.initial_back[e],
        }
    }

    /// Decomposes the current flow into edge-disjoint paths. Each returned
    /// path starts at a vertex with `is_start`, ends at a vertex with
    /// `is_end`, and meets neither set in its interior. Cycles are dropped.
    pub fn paths(
        &self,
        g: &Indexed,
        is_start: &dyn Fn(usize) -> bool,
        is_end: &dyn Fn(usize) -> bool,
    ) -> Vec<(Vec<usize>, Vec<usize>)> {
        let n = g.n();
        // Outgoing flow edges per vertex as (edge, head) pairs.
        let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for e in 0..g.m() {
            let f = self.edge_flow(e);
            let (u, v) = g.ends[e];
            if f > 0 {
                out[u].push((e, v));
            } else if f < 0 {
                out[v].push((e, u));
            }
        }
        let mut cursor = vec![0usize; n];
        // Supplies from the super-source, in arc order.
        let mut starts = Vec::new();
        for &a in &self.adj[self.source] {
            let v = self.head[a];
            if v < n {
                let sent = self.cap[a ^ 1];
                for _ in 0..sent {
                    starts.push(v);
                }
            }
        }
        let mut result = Vec::new();
        for s in starts {
            let mut verts = vec![s];
            let mut edges: Vec<usize> = Vec::new();
            let mut on_walk = vec![usize::MAX; n];
            on_walk[s] = 0;
            let mut x = s;
            while !is_end(x) {
                let Some(&(e, y)) = out[x].get(cursor[x]) else {
                    debug_assert!(false, "flow walk stuck at a non-terminal vertex");
                    break;
                };
                cursor[x] += 1;
                if on_walk[y] != usize::MAX {
                    let keep = on_walk[y];
                    for &z in &verts[keep + 1..] {
                        on_walk[z] = usize::MAX;
                    }
                    verts.truncate(keep + 1);
                    edges.truncate(keep);
                } else {
                    on_walk[y] = verts.len();
                    verts.push(y);
                    edges.push(e);
                }
                x = y;
            }
            // Trim to the segment after the last start and before the first end.
            let first = verts.iter().rposition(|&v| is_start(v)).unwrap_or(0);
            let last = verts[first..]
                .iter()
                .position(|&v| is_end(v))
                .map_or(verts.len() - 1, |p| p + first);
            result.push((verts[first..=last].to_vec(), edges[first..last].to_vec()));
        }
        result
    }
}

fn index_terminals(ix: &Indexed, s: &VertexSet, t: &VertexSet) -> Result<(Vec<usize>, Vec<usize>)> {
    if s.is_empty() || t.is_empty() {
        return Err(Error::EmptyTerminals);
    }
    if let Some(v) = s.intersection(t).next() {
        return Err(Error::OverlappingTerminals(v.clone()));
    }
    let lookup = |v: &String| ix.index.get(v).copied().ok_or_else(|| Error::UnknownVertex(v.clone()));
    let si = s.iter().map(lookup).collect::<Result<Vec<_>>>()?;
    let ti = t.iter().map(lookup).collect::<Result<Vec<_>>>()?;
    Ok((si, ti))
}

fn solve(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<(Indexed, Network, i64)> {
    let ix = Indexed::new(g);
    let (si, ti) = index_terminals(&ix, s, t)?;
    let mut net = Network::new(&ix, None);
    for v in si {
        net.supply(v, INF);
    }
    for v in ti {
        net.drain(v, INF);
    }
    let value = net.max_flow(None);
    Ok((ix, net, value))
}

fn witness_from(g: &Multigraph, ix: &Indexed, net: &Network, value: i64) -> CutWitness {
    let reach = net.residual_reachable(ix.n());
    let source_side: VertexSet = reach
        .iter()
        .enumerate()
        .filter(|(_, r)| **r)
        .map(|(v, _)| ix.names[v].clone())
        .collect();
    let cut_edges = g.boundary(&source_side).expect("side is a vertex subset");
    debug_assert_eq!(cut_edges.len() as i64, value);
    CutWitness {
        value: value as usize,
        cut_edges,
        source_side,
    }
}

/// Maximum number of edge-disjoint `S`–`T` paths, with a minimum cut.
pub fn max_flow_min_cut(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<CutWitness> {
    let (ix, net, value) = solve(g, s, t)?;
    Ok(witness_from(g, &ix, &net, value))
}

/// Among all minimum `S`–`T` cuts, the one with inclusion-minimal source
/// side: the residual reachability set of any maximum flow.
pub fn min_cut_min_source_side(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<CutWitness> {
    max_flow_min_cut(g, s, t)
}

/// A maximum family of pairwise edge-disjoint `S`–`T` paths, each given as
/// a sequence of edge identifiers from its `S` end to its `T` end. Paths
/// meet `S ∪ T` only at their ends.
pub fn edge_disjoint_paths(g: &Multigraph, s: &VertexSet, t: &VertexSet) -> Result<Vec<Vec<String>>> {
    let (ix, net, _) = solve(g, s, t)?;
    let (si, ti) = index_terminals(&ix, s, t)?;
    let mut is_s = vec![false; ix.n()];
    let mut is_t = vec![false; ix.n()];
    si.iter().for_each(|&v| is_s[v] = true);
    ti.iter().for_each(|&v| is_t[v] = true);
    Ok(net
        .paths(&ix, &|v| is_s[v], &|v| is_t[v])
        .into_iter()
        .map(|(_, edges)| edges.into_iter().map(|e| ix.edge_ids[e].clone()).collect())
        .collect())
}

/// Edge connectivity between two single vertices, capped at `limit`.
pub(crate) fn local_edge_connectivity(ix: &Indexed, x: usize, y: usize, limit: Option<i64>) -> i64 {
    let mut net = Network::new(ix, None);
    net.supply(x, INF);
    net.drain(y, INF);
    net.max_flow(limit)
}

/// Whether no two vertices of `w` are separated by fewer than `k` edges.
///
/// Pairwise edge connectivity satisfies λ(a, b) ≥ min(λ(a, c), λ(c, b)), so
/// it suffices to test the smallest member of `w` against every other one.
/// On failure the witness is the inclusion-minimal minimum cut between the
/// first violating pair.
pub fn is_k_edge_connected_set(g: &Multigraph, w: &VertexSet, k: usize) -> Result<EdgeConnectivity> {
    if let Some(v) = w.iter().find(|v| !g.contains_vertex(v)) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    let mut members = w.iter();
    let Some(x) = members.next() else {
        return Ok(EdgeConnectivity::Connected);
    };
    let ix = Indexed::new(g);
    let xi = ix.index[x];
    for y in members {
        let flow = local_edge_connectivity(&ix, xi, ix.index[y], Some(k as i64));
        if flow < k as i64 {
            let cut = min_cut_min_source_side(
                g,
                &VertexSet::from([x.clone()]),
                &VertexSet::from([y.clone()]),
            )?;
            return Ok(EdgeConnectivity::Separated {
                x: x.clone(),
                y: y.clone(),
                cut,
            });
        }
    }
    Ok(EdgeConnectivity::Connected)
}
