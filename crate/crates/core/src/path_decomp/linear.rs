//! Building a linearity certificate from the auxiliary graph and a chain
//! of nested minimum separators.

use serde::{Deserialize, Serialize};

use crate::connectivity::{min_cut_min_source_side, CutWitness};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};

use super::auxiliary::{build_auxiliary_graph_with_jobs, min_linearizing_set, SimpleGraph};
use super::{FailureWitness, LinearityCertificate, Outcome, PathLikeDecomposition};

/// `L_i` for an index `i` of the ordering, with its cost `s_i(L_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separator {
    pub index: usize,
    pub set: VertexSet,
    pub cost: usize,
    pub cut: CutWitness,
}

/// The cheapest set `Z ⊆ V(G) − A` with `x_1..x_{i-1} ∈ Z` and
/// `x_i, …, x_t ∉ Z`, where cost counts edges of `G − A` leaving `Z` other
/// than those to `x_i`; among the cheapest, the inclusion-minimal one.
/// Requires `2 ≤ i ≤ t − 1` (1-based).
pub fn compute_separator(g: &Multigraph, apex: &VertexSet, ordering: &[String], i: usize) -> Result<Separator> {
    let t = ordering.len();
    if i < 2 || i + 1 > t {
        return Err(Error::IndexOutOfRange {
            index: i,
            low: 2,
            high: t.saturating_sub(1),
        });
    }
    let mut removed = apex.clone();
    removed.insert(ordering[i - 1].clone());
    let rest = g.without(&removed);
    let before: VertexSet = ordering[..i - 1].iter().cloned().collect();
    let after: VertexSet = ordering[i..].iter().cloned().collect();
    let cut = min_cut_min_source_side(&rest, &before, &after)?;
    Ok(Separator {
        index: i,
        set: cut.source_side.clone(),
        cost: cut.value,
        cut,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LinearParams {
    /// Path count defining adjacency in the auxiliary graph.
    pub m: usize,
    /// Separators of this cost or more are reported as failures.
    pub w_limit: usize,
    /// Threads for the auxiliary-graph flows.
    pub jobs: usize,
}

/// A successful [`linear_decompose`] together with its intermediate data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearRun {
    pub certificate: LinearityCertificate,
    pub auxiliary: SimpleGraph,
    /// `L_2 … L_{t-1}` in order.
    pub separators: Vec<Separator>,
}

/// Decomposes `g` with respect to `w`:
///
/// 1. build `H = G(m, W)`; if it is disconnected, fail with the minimum
///    cut between the component of the smallest vertex and the rest of `W`;
/// 2. delete a minimum linearizing set `A` of `H` and read `W − A` path by
///    path;
/// 3. for `t ≤ 2` put every other vertex into one bag;
/// 4. otherwise take the minimal separators `L_2 … L_{t-1}`, set `L_1 = ∅`,
///    `L_t = V − A − x_t`, and `B_i = L_{i+1} − L_i − x_i`.
///
/// A separator costing `w_limit` or more ends the run with its cut.
pub fn linear_decompose(g: &Multigraph, w: &VertexSet, params: LinearParams) -> Result<Outcome<LinearRun>> {
    let aux = build_auxiliary_graph_with_jobs(g, w, params.m, params.jobs)?;
    let components = aux.components();
    if components.len() > 1 {
        let first = components[0].clone();
        let rest: VertexSet = w.difference(&first).cloned().collect();
        let cut = min_cut_min_source_side(g, &first, &rest)?;
        return Ok(Outcome::Failed(FailureWitness::SmallCut { cut }));
    }

    let apex = min_linearizing_set(&aux)?;
    let ordering = aux
        .without(&apex)
        .path_order()
        .expect("removing a linearizing set leaves paths");
    let others: VertexSet = g
        .vertices()
        .iter()
        .filter(|v| !apex.contains(*v) && !ordering.contains(v))
        .cloned()
        .collect();
    let t = ordering.len();

    let (bags, separators) = if t <= 2 {
        let mut bags = vec![VertexSet::new(); t + 1];
        bags[t.min(1)] = others;
        (bags, Vec::new())
    } else {
        let mut separators = Vec::with_capacity(t - 2);
        for i in 2..t {
            let sep = compute_separator(g, &apex, &ordering, i)?;
            if sep.cost >= params.w_limit {
                return Ok(Outcome::Failed(FailureWitness::SmallCut { cut: sep.cut }));
            }
            separators.push(sep);
        }
        // `l[i]` is L_i for 1 ≤ i ≤ t.
        let mut l = vec![VertexSet::new(); t + 1];
        for sep in &separators {
            l[sep.index] = sep.set.clone();
        }
        l[t] = g
            .vertices()
            .iter()
            .filter(|v| !apex.contains(*v) && **v != ordering[t - 1])
            .cloned()
            .collect();
        let mut bags = vec![VertexSet::new(); t + 1];
        for i in 1..t {
            bags[i] = l[i + 1]
                .iter()
                .filter(|v| !l[i].contains(*v) && **v != ordering[i - 1])
                .cloned()
                .collect();
        }
        (bags, separators)
    };

    let certificate = LinearityCertificate::measure(g, apex, PathLikeDecomposition { ordering, bags });
    Ok(Outcome::Certified(LinearRun {
        certificate,
        auxiliary: aux,
        separators,
    }))
}
