use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::local_edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::indexed::Indexed;

use super::{Tree, TreeCutDecomposition};

/// The gluing data of an edge sum: the two deleted vertices and the
/// pairing of their incident edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeSum {
    pub v1: String,
    pub v2: String,
    /// `(e1, e2)` with `e1 ∈ δ(v1)` in the first graph and `e2 ∈ δ(v2)` in
    /// the second.
    pub pairing: Vec<(String, String)>,
}

/// Common preconditions; returns the order `k`.
fn check_sum_vertices(g1: &Multigraph, v1: &str, g2: &Multigraph, v2: &str) -> Result<usize> {
    for (g, v) in [(g1, v1), (g2, v2)] {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.to_string()));
        }
        if g.incident_edges(v).iter().any(|e| g.is_loop(e).expect("incident edge")) {
            return Err(Error::LoopAtSumVertex(v.to_string()));
        }
    }
    let (d1, d2) = (g1.degree(v1)?, g2.degree(v2)?);
    if d1 != d2 {
        return Err(Error::DegreeMismatch {
            v1: v1.to_string(),
            d1,
            v2: v2.to_string(),
            d2,
        });
    }
    Ok(d1)
}

fn other_end<'a>(g: &'a Multigraph, e: &str, v: &str) -> &'a str {
    let (a, b) = g.ends(e).expect("incident edge");
    if a == v {
        b
    } else {
        a
    }
}

/// `G1 ⊕_k G2`: deletes `v1` and `v2` and, for each pair `(e1, e2)` of
/// `pi`, joins the far ends of `e1` and `e2` by a new edge that keeps the
/// identifier of `e1`. The order `k = deg(v1) = deg(v2)` may be 0, which
/// gives a disjoint union.
pub fn edge_sum(g1: &Multigraph, v1: &str, g2: &Multigraph, v2: &str, pi: &[(String, String)]) -> Result<Multigraph> {
    let k = check_sum_vertices(g1, v1, g2, v2)?;
    let d1: BTreeSet<&str> = g1.incident_edges(v1).into_iter().collect();
    let d2: BTreeSet<&str> = g2.incident_edges(v2).into_iter().collect();
    let mut used1 = BTreeSet::new();
    let mut used2 = BTreeSet::new();
    for (e1, e2) in pi {
        if !d1.contains(e1.as_str()) || !used1.insert(e1.as_str()) {
            return Err(Error::NotBijection(format!("{e1} is not a fresh edge at {v1}")));
        }
        if !d2.contains(e2.as_str()) || !used2.insert(e2.as_str()) {
            return Err(Error::NotBijection(format!("{e2} is not a fresh edge at {v2}")));
        }
    }
    if used1.len() != k {
        return Err(Error::NotBijection(format!("pairing covers {} of {k} edges", used1.len())));
    }

    let mut out = g1.without(&[v1.to_string()].into());
    let right = g2.without(&[v2.to_string()].into());
    for v in right.vertices() {
        if !out.add_vertex(v.clone()) {
            return Err(Error::NameClash(v.clone()));
        }
    }
    for (id, [a, b]) in right.edges() {
        out.add_edge(id.clone(), a.clone(), b.clone())?;
    }
    for (e1, e2) in pi {
        let x = other_end(g1, e1, v1).to_string();
        let y = other_end(g2, e2, v2).to_string();
        out.add_edge(e1.clone(), x, y)?;
    }
    Ok(out)
}

/// Whether each `v_i` has `k` edge-disjoint paths to some other vertex of
/// its own graph, `k` being the common degree.
pub fn is_grounded(g1: &Multigraph, v1: &str, g2: &Multigraph, v2: &str) -> Result<bool> {
    let k = check_sum_vertices(g1, v1, g2, v2)? as i64;
    let grounded = |g: &Multigraph, v: &str| {
        let ix = Indexed::new(g);
        let vi = ix.index[v];
        (0..ix.n()).any(|u| u != vi && local_edge_connectivity(&ix, vi, u, Some(k)) >= k)
    };
    Ok(grounded(g1, v1) && grounded(g2, v2))
}

/// A decomposition of `G1 ⊕ G2` from decompositions of the summands: the
/// two trees are joined by an edge between the nodes holding `v1` and
/// `v2`, and those two vertices are dropped from their bags. Node names of
/// the two decompositions must be disjoint.
pub fn compose_decompositions(
    g1: &Multigraph,
    d1: &TreeCutDecomposition,
    g2: &Multigraph,
    d2: &TreeCutDecomposition,
    sum: &EdgeSum,
) -> Result<TreeCutDecomposition> {
    check_sum_vertices(g1, &sum.v1, g2, &sum.v2)?;
    d1.ensure_valid(g1)?;
    d2.ensure_valid(g2)?;
    if let Some(t) = d1.tree.nodes.intersection(&d2.tree.nodes).next() {
        return Err(Error::NameClash(t.clone()));
    }
    let t1 = d1.owner(&sum.v1).expect("valid decomposition covers v1").to_string();
    let t2 = d2.owner(&sum.v2).expect("valid decomposition covers v2").to_string();

    let mut nodes = d1.tree.nodes.clone();
    nodes.extend(d2.tree.nodes.iter().cloned());
    let mut edges = d1.tree.edges.clone();
    edges.extend(d2.tree.edges.iter().cloned());
    edges.push((t1, t2));

    let mut bags: BTreeMap<String, _> = BTreeMap::new();
    for (d, v) in [(d1, &sum.v1), (d2, &sum.v2)] {
        for (t, bag) in &d.bags {
            let mut bag = bag.clone();
            bag.remove(v);
            bags.insert(t.clone(), bag);
        }
    }
    Ok(TreeCutDecomposition {
        tree: Tree { nodes, edges },
        bags,
    })
}
