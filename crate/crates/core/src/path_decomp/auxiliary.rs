//! The auxiliary graph `G(m, W)` and the simple-graph questions asked about
//! it: star minors and linearizing sets.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::connectivity::Network;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::immersion::StarMinorModel;
use crate::indexed::Indexed;

/// Largest graph [`has_k1k_minor`] searches exhaustively.
pub const STAR_MINOR_VERTEX_CAP: usize = 24;
/// Largest graph [`min_linearizing_set`] searches exhaustively.
pub const LINEARIZING_VERTEX_CAP: usize = 22;

/// Loop-free graph without parallel edges. Edges are stored with their
/// smaller endpoint first.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    vertices: VertexSet,
    edges: BTreeSet<(String, String)>,
}

impl SimpleGraph {
    pub fn with_vertices<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        SimpleGraph {
            vertices: names.into_iter().map(Into::into).collect(),
            edges: BTreeSet::new(),
        }
    }

    /// Adds `ab`; loops and unknown endpoints are rejected, repeated edges
    /// are ignored.
    pub fn add_edge(&mut self, a: &str, b: &str) -> Result<()> {
        for v in [a, b] {
            if !self.vertices.contains(v) {
                return Err(Error::UnknownVertex(v.to_string()));
            }
        }
        if a == b {
            return Err(Error::InvalidParameter(format!("loop at {a} in a simple graph")));
        }
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.insert((a.to_string(), b.to_string()));
        Ok(())
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(String, String)> {
        &self.edges
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        self.edges.contains(&(a.to_string(), b.to_string()))
    }

    pub fn neighbors(&self, v: &str) -> VertexSet {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == v {
                    Some(b.clone())
                } else if b == v {
                    Some(a.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges.iter().filter(|(a, b)| a == v || b == v).count()
    }

    /// The subgraph induced on the vertices outside `x`.
    pub fn without(&self, x: &VertexSet) -> SimpleGraph {
        SimpleGraph {
            vertices: self.vertices.difference(x).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(a, b)| !x.contains(a) && !x.contains(b))
                .cloned()
                .collect(),
        }
    }

    /// Connected components, each listed in ascending order of its
    /// smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let adj = self.adjacency();
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            if seen.contains(v) {
                continue;
            }
            let mut comp = VertexSet::from([v.clone()]);
            let mut queue = VecDeque::from([v.as_str()]);
            while let Some(x) = queue.pop_front() {
                for y in &adj[x] {
                    if comp.insert(y.to_string()) {
                        queue.push_back(y);
                    }
                }
            }
            seen.extend(comp.iter().cloned());
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Whether every component is a path (isolated vertices included).
    pub fn is_linear_forest(&self) -> bool {
        let degrees_ok = self.vertices.iter().all(|v| self.degree(v) <= 2);
        degrees_ok && self.edges.len() + self.components().len() == self.vertices.len()
    }

    /// For a linear forest: its paths in ascending order of smallest
    /// vertex, each read from its smaller endpoint. `None` otherwise.
    pub fn path_order(&self) -> Option<Vec<String>> {
        if !self.is_linear_forest() {
            return None;
        }
        let adj = self.adjacency();
        let mut out = Vec::with_capacity(self.vertices.len());
        for comp in self.components() {
            let start = comp
                .iter()
                .find(|v| adj[v.as_str()].len() <= 1)
                .expect("a path has an endpoint");
            let mut prev: Option<&str> = None;
            let mut cur = start.as_str();
            loop {
                out.push(cur.to_string());
                let next = adj[cur].iter().copied().find(|&y| Some(y) != prev);
                match next {
                    Some(y) => {
                        prev = Some(cur);
                        cur = y;
                    }
                    None => break,
                }
            }
        }
        Some(out)
    }

    fn adjacency(&self) -> BTreeMap<&str, Vec<&str>> {
        let mut adj: BTreeMap<&str, Vec<&str>> =
            self.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
        for (a, b) in &self.edges {
            adj.get_mut(a.as_str()).expect("endpoint").push(b);
            adj.get_mut(b.as_str()).expect("endpoint").push(a);
        }
        adj
    }
}

/// `G(m, W)`: the simple graph on `W` in which `x ~ y` iff `G` minus
/// `W ∖ {x, y}` has at least `m` edge-disjoint `x`–`y` paths.
pub fn build_auxiliary_graph(g: &Multigraph, w: &VertexSet, m: usize) -> Result<SimpleGraph> {
    build_auxiliary_graph_with_jobs(g, w, m, 1)
}

/// [`build_auxiliary_graph`] with the pairwise flows spread over `jobs`
/// threads. The result does not depend on `jobs`.
pub fn build_auxiliary_graph_with_jobs(g: &Multigraph, w: &VertexSet, m: usize, jobs: usize) -> Result<SimpleGraph> {
    if m < 1 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if let Some(v) = w.iter().find(|v| !g.contains_vertex(v)) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    let ix = Indexed::new(g);
    let members: Vec<usize> = w.iter().map(|v| ix.index[v]).collect();
    let pairs: Vec<(usize, usize)> = members.iter().copied().tuple_combinations().collect();

    let linked = |&(x, y): &(usize, usize)| {
        let mut blocked = vec![false; ix.n()];
        for &u in &members {
            blocked[u] = u != x && u != y;
        }
        let mut net = Network::new(&ix, Some(&blocked));
        net.supply(x, m as i64);
        net.drain(y, m as i64);
        net.max_flow(Some(m as i64)) >= m as i64
    };
    let flags: Vec<bool> = if jobs <= 1 || pairs.len() < 2 {
        pairs.iter().map(linked).collect()
    } else {
        let chunk = pairs.len().div_ceil(jobs);
        std::thread::scope(|scope| {
            let handles: Vec<_> = pairs
                .chunks(chunk)
                .map(|part| scope.spawn(move || part.iter().map(linked).collect::<Vec<bool>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("flow worker panicked"))
                .collect()
        })
    };

    let mut aux = SimpleGraph::with_vertices(w.iter().cloned());
    for (&(x, y), linked) in pairs.iter().zip(flags) {
        if linked {
            aux.add_edge(&ix.names[x], &ix.names[y])?;
        }
    }
    Ok(aux)
}

/// A `K_{1,k}` minor model: a subtree with exactly `k` declared leaves and
/// a non-leaf center, or `None` after exhaustive search.
pub fn has_k1k_minor(h: &SimpleGraph, k: usize) -> Result<Option<StarMinorModel>> {
    let names: Vec<&String> = h.vertices.iter().collect();
    let n = names.len();
    if n == 0 {
        return Ok(None);
    }
    let adj: Vec<Vec<usize>> = names
        .iter()
        .map(|v| {
            h.neighbors(v)
                .iter()
                .map(|u| names.binary_search(&u).expect("vertex"))
                .collect()
        })
        .collect();
    let model = |center: usize, leaves: &[usize], tree: Vec<(usize, usize)>| StarMinorModel {
        center: names[center].clone(),
        leaves: leaves.iter().map(|&l| names[l].clone()).collect(),
        tree: tree
            .into_iter()
            .map(|(a, b)| (names[a].clone(), names[b].clone()))
            .collect(),
    };

    // A vertex of degree at least k is a star on its own.
    if let Some(c) = (0..n).find(|&v| adj[v].len() >= k) {
        let leaves = &adj[c][..k];
        return Ok(Some(model(c, leaves, leaves.iter().map(|&l| (c, l)).collect())));
    }
    if n > STAR_MINOR_VERTEX_CAP {
        return Err(Error::TooLarge(format!(
            "star minor search is limited to {STAR_MINOR_VERTEX_CAP} vertices, got {n}"
        )));
    }

    // Connected sets by increasing size; the first with k outside
    // neighbours yields the model.
    let nbr_mask: Vec<u32> = adj.iter().map(|a| a.iter().fold(0, |m, &u| m | 1 << u)).collect();
    let outside = |set: u32| -> u32 {
        let mut reach = 0;
        for v in 0..n {
            if set >> v & 1 == 1 {
                reach |= nbr_mask[v];
            }
        }
        reach & !set
    };
    let mut level: Vec<u32> = (0..n).map(|v| 1u32 << v).collect();
    let mut seen: HashSet<u32> = level.iter().copied().collect();
    while !level.is_empty() {
        for &set in &level {
            let out = outside(set);
            if out.count_ones() as usize >= k {
                return Ok(Some(star_from_set(&adj, set, out, k, &model)));
            }
        }
        let mut next = Vec::new();
        for &set in &level {
            let mut ext = outside(set);
            while ext != 0 {
                let v = ext.trailing_zeros();
                ext &= ext - 1;
                let bigger = set | 1 << v;
                if seen.insert(bigger) {
                    next.push(bigger);
                }
            }
        }
        next.sort_unstable();
        level = next;
    }
    Ok(None)
}

/// Builds a model from a centre, its leaves and the tree edges, all as
/// indices.
type ModelBuilder<'a> = &'a dyn Fn(usize, &[usize], Vec<(usize, usize)>) -> StarMinorModel;

fn star_from_set(
    adj: &[Vec<usize>],
    set: u32,
    out: u32,
    k: usize,
    model: ModelBuilder,
) -> StarMinorModel {
    let inside = |v: usize| set >> v & 1 == 1;
    let leaves: Vec<usize> = (0..32).filter(|&v| out >> v & 1 == 1).take(k).collect();
    let root = set.trailing_zeros() as usize;

    // BFS spanning tree of the set, then one attachment edge per leaf.
    let mut tree: Vec<(usize, usize)> = Vec::new();
    let mut reached = 1u32 << root;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if inside(y) && reached >> y & 1 == 0 {
                reached |= 1 << y;
                tree.push((x, y));
                queue.push_back(y);
            }
        }
    }
    for &l in &leaves {
        let anchor = (0..32).find(|&v| inside(v) && adj[v].contains(&l)).expect("leaf touches the set");
        tree.push((anchor, l));
    }

    // Prune set vertices that became tree leaves, keeping at least one.
    loop {
        let degree = |v: usize| tree.iter().filter(|&&(a, b)| a == v || b == v).count();
        let kept: Vec<usize> = (0..32)
            .filter(|&v| inside(v) && tree.iter().any(|&(a, b)| a == v || b == v))
            .collect();
        let prune = kept.iter().copied().find(|&v| degree(v) <= 1 && kept.len() > 1);
        match prune {
            Some(v) => tree.retain(|&(a, b)| a != v && b != v),
            None => break,
        }
    }
    let center = (0..32)
        .find(|&v| inside(v) && (tree.is_empty() || tree.iter().any(|&(a, b)| a == v || b == v)))
        .expect("set is non-empty");
    model(center, &leaves, tree)
}

/// A smallest vertex set whose removal leaves a disjoint union of paths;
/// among those of minimum size, the lexicographically first.
pub fn min_linearizing_set(h: &SimpleGraph) -> Result<VertexSet> {
    let n = h.vertices.len();
    if n > LINEARIZING_VERTEX_CAP {
        return Err(Error::TooLarge(format!(
            "linearizing set search is limited to {LINEARIZING_VERTEX_CAP} vertices, got {n}"
        )));
    }
    for size in 0..=n {
        for chosen in h.vertices.iter().combinations(size) {
            let x: VertexSet = chosen.into_iter().cloned().collect();
            if h.without(&x).is_linear_forest() {
                return Ok(x);
            }
        }
    }
    unreachable!("removing every vertex leaves the empty linear forest")
}

/// Checks that `model` is a star minor model inside `h`.
pub(crate) fn validate_star_model(h: &SimpleGraph, model: &StarMinorModel) -> Result<()> {
    let bad = |msg: String| Err(Error::InvalidModel(msg));
    let mut nodes = VertexSet::from([model.center.clone()]);
    for (a, b) in &model.tree {
        if !h.has_edge(a, b) {
            return bad(format!("tree edge {a}-{b} is not an edge of the graph"));
        }
        nodes.insert(a.clone());
        nodes.insert(b.clone());
    }
    if model.tree.len() + 1 != nodes.len() {
        return bad("tree edge count does not match its vertex count".into());
    }
    let mut tree = SimpleGraph::with_vertices(nodes.iter().cloned());
    for (a, b) in &model.tree {
        tree.add_edge(a, b)?;
    }
    if !tree.is_connected() {
        return bad("tree is not connected".into());
    }
    if model.leaves.contains(&model.center) {
        return bad(format!("center {} is listed as a leaf", model.center));
    }
    for v in &nodes {
        let d = tree.degree(v);
        let listed = model.leaves.contains(v);
        if listed && d != 1 {
            return bad(format!("leaf {v} has tree degree {d}"));
        }
        if !listed && d == 1 && *v != model.center {
            return bad(format!("{v} is an unlisted leaf of the tree"));
        }
    }
    if let Some(v) = model.leaves.iter().find(|v| !nodes.contains(*v)) {
        return bad(format!("leaf {v} is not on the tree"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{gen_complete, gen_pk};
    use crate::graph::vertex_set;

    fn simple(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::with_vertices((0..n).map(|i| format!("u{i}")));
        for &(a, b) in edges {
            g.add_edge(&format!("u{a}"), &format!("u{b}")).unwrap();
        }
        g
    }

    #[test]
    fn auxiliary_of_p2_is_a_path() {
        let g = gen_pk(2).unwrap();
        let aux = build_auxiliary_graph(&g, g.vertices(), 2).unwrap();
        assert!(aux.has_edge("v0", "v1") && aux.has_edge("v1", "v2"));
        assert!(!aux.has_edge("v0", "v2"));
        assert_eq!(aux, build_auxiliary_graph_with_jobs(&g, g.vertices(), 2, 3).unwrap());
    }

    #[test]
    fn auxiliary_of_k4() {
        let g = gen_complete(4);
        assert!(build_auxiliary_graph(&g, g.vertices(), 3).unwrap().edges().is_empty());
        assert_eq!(build_auxiliary_graph(&g, g.vertices(), 1).unwrap().edges().len(), 6);
        assert!(build_auxiliary_graph(&g, g.vertices(), 0).is_err());
        assert!(build_auxiliary_graph(&g, &vertex_set(["zz"]), 1).is_err());
    }

    #[test]
    fn star_minors() {
        let star = simple(4, &[(0, 1), (0, 2), (0, 3)]);
        let model = has_k1k_minor(&star, 3).unwrap().unwrap();
        assert_eq!(model.center, "u0");
        validate_star_model(&star, &model).unwrap();

        let c5 = simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(has_k1k_minor(&c5, 3).unwrap(), None);

        let k4 = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(has_k1k_minor(&k4, 3).unwrap().is_some());
    }

    #[test]
    fn star_minor_needs_contraction() {
        // Spider with legs of length two: no vertex of degree 4 but the
        // centre plus its neighbours has 4 outside neighbours.
        let spider = simple(9, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 8)]);
        let model = has_k1k_minor(&spider, 4).unwrap().unwrap();
        validate_star_model(&spider, &model).unwrap();
        let path = simple(3, &[(0, 1), (1, 2)]);
        let model = has_k1k_minor(&path, 2).unwrap().unwrap();
        assert_eq!(model.center, "u1");
        let h_shape = simple(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]);
        let model = has_k1k_minor(&h_shape, 4).unwrap().unwrap();
        validate_star_model(&h_shape, &model).unwrap();
        assert_eq!(model.leaves.len(), 4);
        assert_eq!(has_k1k_minor(&h_shape, 5).unwrap(), None);
    }

    #[test]
    fn linearizing_sets() {
        let path = simple(4, &[(0, 1), (1, 2), (2, 3)]);
        assert!(min_linearizing_set(&path).unwrap().is_empty());
        let star = simple(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(min_linearizing_set(&star).unwrap().len(), 1);
        let k4 = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(min_linearizing_set(&k4).unwrap().len(), 2);
    }

    #[test]
    fn path_orders() {
        let g = simple(5, &[(3, 1), (1, 4), (0, 2)]);
        assert_eq!(g.path_order().unwrap(), ["u0", "u2", "u3", "u1", "u4"]);
        let triangle = simple(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(triangle.path_order(), None);
    }
}
