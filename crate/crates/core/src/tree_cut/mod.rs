//! Tree-cut decompositions: adhesion, torsos, edge sums, and the
//! recursive structure decomposition into `α`-basic torsos.

mod edge_sum;
mod structure;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{fresh_name, Multigraph, VertexSet};
use crate::path_decomp::{
    has_k1k_minor, linear_decompose, verify_linear_certificate, FailureWitness, LinearParams, LinearViolation,
    LinearityCertificate, Outcome, PathLikeDecomposition,
};

pub use edge_sum::{compose_decompositions, edge_sum, is_grounded, EdgeSum};
pub use structure::{structure_decompose, Split, StructureDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tree {
    pub nodes: BTreeSet<String>,
    pub edges: Vec<(String, String)>,
}

impl Tree {
    pub fn neighbors(&self, t: &str) -> BTreeSet<&str> {
        self.edges
            .iter()
            .filter_map(|(a, b)| {
                if a == t {
                    Some(b.as_str())
                } else if b == t {
                    Some(a.as_str())
                } else {
                    None
                }
            })
            .collect()
    }

    /// Nodes reachable from `start` without visiting `avoid`.
    fn reach(&self, start: &str, avoid: &str) -> BTreeSet<String> {
        let mut seen = BTreeSet::from([start.to_string()]);
        let mut queue = VecDeque::from([start.to_string()]);
        while let Some(x) = queue.pop_front() {
            for y in self.neighbors(&x) {
                if y != avoid && seen.insert(y.to_string()) {
                    queue.push_back(y.to_string());
                }
            }
        }
        seen
    }

    fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for (a, b) in &self.edges {
            for v in [a, b] {
                if !self.nodes.contains(v) {
                    out.push(format!("tree edge uses unknown node {v}"));
                }
            }
            if a == b {
                out.push(format!("tree has a loop at {a}"));
            }
            let key = if a < b { (a, b) } else { (b, a) };
            if !seen.insert(key) {
                out.push(format!("tree edge {a}-{b} is repeated"));
            }
        }
        if !out.is_empty() {
            return out;
        }
        if self.nodes.is_empty() {
            out.push("tree has no nodes".into());
        } else if self.edges.len() + 1 != self.nodes.len()
            || self.reach(self.nodes.first().expect("non-empty"), "").len() != self.nodes.len()
        {
            out.push("tree is not a tree".into());
        }
        out
    }
}

/// A tree together with a near-partition of the vertices indexed by its
/// nodes. Nodes without an entry in `bags` have empty bags.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeCutDecomposition {
    pub tree: Tree,
    pub bags: BTreeMap<String, VertexSet>,
}

impl TreeCutDecomposition {
    /// The one-node decomposition with every vertex in node `name`.
    pub fn single(g: &Multigraph, name: &str) -> Self {
        TreeCutDecomposition {
            tree: Tree {
                nodes: BTreeSet::from([name.to_string()]),
                edges: Vec::new(),
            },
            bags: BTreeMap::from([(name.to_string(), g.vertices().clone())]),
        }
    }

    pub fn bag(&self, t: &str) -> VertexSet {
        self.bags.get(t).cloned().unwrap_or_default()
    }

    /// The node whose bag holds `v`.
    pub fn owner(&self, v: &str) -> Option<&str> {
        self.bags.iter().find(|(_, bag)| bag.contains(v)).map(|(t, _)| t.as_str())
    }

    fn union_of(&self, nodes: &BTreeSet<String>) -> VertexSet {
        nodes.iter().flat_map(|t| self.bag(t)).collect()
    }

    /// Structural problems of the decomposition with respect to `g`.
    pub fn problems(&self, g: &Multigraph) -> Vec<String> {
        let mut out = self.tree.problems();
        let mut seen = VertexSet::new();
        for (t, bag) in &self.bags {
            if !self.tree.nodes.contains(t) {
                out.push(format!("bag for unknown node {t}"));
            }
            for v in bag {
                if !g.contains_vertex(v) {
                    out.push(format!("bag {t} holds unknown vertex {v}"));
                } else if !seen.insert(v.clone()) {
                    out.push(format!("{v} lies in more than one bag"));
                }
            }
        }
        if let Some(v) = g.vertices().difference(&seen).next() {
            out.push(format!("{v} lies in no bag"));
        }
        out
    }

    fn ensure_valid(&self, g: &Multigraph) -> Result<()> {
        match self.problems(g).into_iter().next() {
            Some(reason) => Err(Error::Malformed(reason)),
            None => Ok(()),
        }
    }
}

/// Largest `|δ(Y)|` where `Y` is the union of the bags on one side of a
/// tree edge; 0 without tree edges.
pub fn adhesion(g: &Multigraph, d: &TreeCutDecomposition) -> Result<usize> {
    d.ensure_valid(g)?;
    let mut best = 0;
    for (a, b) in &d.tree.edges {
        let side = d.union_of(&d.tree.reach(b, a));
        best = best.max(g.boundary(&side)?.len());
    }
    Ok(best)
}

/// The graph at a tree node: its bag as core vertices, and each component
/// of the tree minus the node consolidated into one peripheral vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Torso {
    pub graph: Multigraph,
    pub core: VertexSet,
    /// Peripheral vertex name mapped to the vertices it stands for.
    pub peripheral: BTreeMap<String, VertexSet>,
}

/// Peripheral vertices are named `<t|u>` after the tree edge `tu` leading
/// to their component (primed if that name is taken). A component whose
/// bags are all empty still yields an isolated peripheral vertex.
pub fn torso_at(g: &Multigraph, d: &TreeCutDecomposition, t: &str) -> Result<Torso> {
    d.ensure_valid(g)?;
    if !d.tree.nodes.contains(t) {
        return Err(Error::UnknownNode(t.to_string()));
    }
    let mut graph = g.clone();
    let mut peripheral = BTreeMap::new();
    for u in d.tree.neighbors(t) {
        let z = d.union_of(&d.tree.reach(u, t));
        let name = fresh_name(&format!("<{t}|{u}>"), |n| {
            g.contains_vertex(n) || graph.contains_vertex(n) || peripheral.contains_key(n)
        });
        if z.is_empty() {
            graph.add_vertex(name.clone());
        } else {
            graph = graph.consolidate_as(&z, &name)?;
        }
        peripheral.insert(name, z);
    }
    Ok(Torso {
        graph,
        core: d.bag(t),
        peripheral,
    })
}

/// Vertices of degree at least `alpha`.
pub fn high_degree_vertices(g: &Multigraph, alpha: usize) -> VertexSet {
    g.degrees()
        .into_iter()
        .filter(|&(_, d)| d >= alpha)
        .map(|(v, _)| v)
        .collect()
}

/// Whether the vertices of degree at least `alpha` are `(α, α, α)`-linear,
/// tried by [`linear_decompose`] for every `m` in `1..=alpha` with
/// separators limited to `alpha`. A certificate is always checked before
/// being returned; failure to find one is not a proof that none exists.
pub fn is_alpha_basic(h: &Multigraph, alpha: usize) -> Result<Outcome<LinearityCertificate>> {
    let w = high_degree_vertices(h, alpha);
    if w.is_empty() {
        let cert = LinearityCertificate::measure(h, VertexSet::new(), PathLikeDecomposition::trivial(h.vertices().clone()));
        return Ok(Outcome::Certified(cert));
    }
    let mut first_failure = None;
    for m in 1..=alpha.max(1) {
        let params = LinearParams {
            m,
            w_limit: alpha,
            jobs: 1,
        };
        let failure = match linear_decompose(h, &w, params)? {
            Outcome::Certified(run) => {
                let report = verify_linear_certificate(h, &w, &run.certificate, alpha, alpha, alpha)?;
                if report.is_empty() {
                    return Ok(Outcome::Certified(run.certificate));
                }
                explain(&run.certificate, &run.auxiliary, &report)?
            }
            Outcome::Failed(witness) => witness,
        };
        first_failure.get_or_insert(failure);
    }
    Ok(Outcome::Failed(first_failure.expect("at least one attempt")))
}

/// Turns a certificate that misses the bounds into a failure witness.
fn explain(
    cert: &LinearityCertificate,
    aux: &crate::path_decomp::SimpleGraph,
    report: &[LinearViolation],
) -> Result<FailureWitness> {
    if report.iter().any(|v| matches!(v, LinearViolation::ApexTooLarge { .. })) {
        for k in (3..=aux.vertices().len()).rev() {
            if let Some(model) = has_k1k_minor(aux, k)? {
                return Ok(FailureWitness::StarMinor {
                    auxiliary: aux.clone(),
                    model,
                });
            }
        }
        return Ok(FailureWitness::NotPathShaped {
            component: cert.apex.clone(),
            reason: format!("smallest linearizing set has {} vertices", cert.apex.len()),
        });
    }
    let reason = report
        .iter()
        .map(|v| serde_json::to_string(v).expect("serializable"))
        .collect::<Vec<_>>()
        .join("; ");
    Ok(FailureWitness::NotPathShaped {
        component: cert.apex.clone(),
        reason,
    })
}

/// One failed condition of a structure decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum StructureViolation {
    Malformed { reason: String },
    AdhesionTooLarge { adhesion: usize, alpha: usize },
    MissingCertificate { node: String },
    UnknownNode { node: String },
    UnreadableCertificate { node: String, reason: String },
    Certificate { node: String, problem: LinearViolation },
}

/// Checks that `d` is a tree-cut decomposition of `g` of adhesion below
/// `alpha` and that each node's certificate shows its torso `α`-basic.
pub fn verify_structure(
    g: &Multigraph,
    d: &TreeCutDecomposition,
    certs: &BTreeMap<String, LinearityCertificate>,
    alpha: usize,
) -> Result<Vec<StructureViolation>> {
    let problems = d.problems(g);
    if !problems.is_empty() {
        return Ok(problems
            .into_iter()
            .map(|reason| StructureViolation::Malformed { reason })
            .collect());
    }
    let mut out = Vec::new();
    let adh = adhesion(g, d)?;
    if adh >= alpha {
        out.push(StructureViolation::AdhesionTooLarge { adhesion: adh, alpha });
    }
    for node in certs.keys() {
        if !d.tree.nodes.contains(node) {
            out.push(StructureViolation::UnknownNode { node: node.clone() });
        }
    }
    for t in &d.tree.nodes {
        let Some(cert) = certs.get(t) else {
            out.push(StructureViolation::MissingCertificate { node: t.clone() });
            continue;
        };
        let torso = torso_at(g, d, t)?;
        let w = high_degree_vertices(&torso.graph, alpha);
        match verify_linear_certificate(&torso.graph, &w, cert, alpha, alpha, alpha) {
            Ok(report) => out.extend(report.into_iter().map(|problem| StructureViolation::Certificate {
                node: t.clone(),
                problem,
            })),
            Err(e) => out.push(StructureViolation::UnreadableCertificate {
                node: t.clone(),
                reason: e.to_string(),
            }),
        }
    }
    Ok(out)
}
