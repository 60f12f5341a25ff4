//! Weak and strong immersions: certificates, their verifier, an exhaustive
//! finder, and the construction of a strong immersion from a star minor of
//! the auxiliary graph.

mod search;
mod star;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;

pub use search::{find_immersion, ImmersionSearch};
pub use star::star_minor_to_immersion;

/// `vertex_map` sends pattern vertices to host vertices, `edge_map` sends
/// each pattern edge to the host edges forming its image.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionCertificate {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, Vec<String>>,
    pub strong: bool,
}

impl ImmersionCertificate {
    /// Maps every vertex and edge of `g` to itself.
    pub fn identity(g: &Multigraph, strong: bool) -> Self {
        ImmersionCertificate {
            vertex_map: g.vertices().iter().map(|v| (v.clone(), v.clone())).collect(),
            edge_map: g.edges().keys().map(|e| (e.clone(), vec![e.clone()])).collect(),
            strong,
        }
    }
}

/// A branch set for a star minor: a subtree of the auxiliary graph whose
/// leaves are `leaves` and which contains the non-leaf `center`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarMinorModel {
    pub center: String,
    pub leaves: BTreeSet<String>,
    pub tree: Vec<(String, String)>,
}

/// One failed condition of an [`ImmersionCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum ImmersionViolation {
    UnmappedVertex { vertex: String },
    UnmappedEdge { edge: String },
    NotInjective { vertices: [String; 2], image: String },
    SharedHostEdge { edges: [String; 2], host_edge: String },
    Disconnected { edge: String },
    MissingEndpoint { edge: String, vertex: String },
    NoCycle { edge: String, vertex: String },
    BranchVertexInside { edge: String, vertex: String },
}

/// Checks every immersion condition and reports each failure; an empty list
/// means the certificate is accepted. With `strong`, images must also avoid
/// branch vertices of non-incident pattern vertices.
///
/// Identifiers that do not exist in `g` or `h` are an error rather than a
/// violation. The image of an edge may be any connected edge set.
pub fn verify_immersion(
    g: &Multigraph,
    h: &Multigraph,
    cert: &ImmersionCertificate,
    strong: bool,
) -> Result<Vec<ImmersionViolation>> {
    for (hv, gv) in &cert.vertex_map {
        if !h.contains_vertex(hv) {
            return Err(Error::UnknownVertex(hv.clone()));
        }
        if !g.contains_vertex(gv) {
            return Err(Error::UnknownVertex(gv.clone()));
        }
    }
    for (he, ges) in &cert.edge_map {
        if !h.contains_edge(he) {
            return Err(Error::UnknownEdge(he.clone()));
        }
        if let Some(ge) = ges.iter().find(|e| !g.contains_edge(e)) {
            return Err(Error::UnknownEdge(ge.clone()));
        }
    }

    let mut out = Vec::new();
    for v in h.vertices() {
        if !cert.vertex_map.contains_key(v) {
            out.push(ImmersionViolation::UnmappedVertex { vertex: v.clone() });
        }
    }
    for e in h.edges().keys() {
        if !cert.edge_map.contains_key(e) {
            out.push(ImmersionViolation::UnmappedEdge { edge: e.clone() });
        }
    }

    let mut preimage: BTreeMap<&str, &str> = BTreeMap::new();
    for (hv, gv) in &cert.vertex_map {
        if let Some(first) = preimage.insert(gv, hv) {
            out.push(ImmersionViolation::NotInjective {
                vertices: [first.to_string(), hv.clone()],
                image: gv.clone(),
            });
        }
    }

    let mut owner: BTreeMap<&str, &str> = BTreeMap::new();
    for (he, ges) in &cert.edge_map {
        let distinct: BTreeSet<&str> = ges.iter().map(String::as_str).collect();
        for ge in distinct {
            if let Some(first) = owner.insert(ge, he) {
                out.push(ImmersionViolation::SharedHostEdge {
                    edges: [first.to_string(), he.clone()],
                    host_edge: ge.to_string(),
                });
            }
        }
    }

    let branch: BTreeMap<&str, &str> = cert
        .vertex_map
        .iter()
        .map(|(hv, gv)| (gv.as_str(), hv.as_str()))
        .collect();
    for (he, ges) in &cert.edge_map {
        let image = EdgeImage::new(g, ges);
        if !image.is_connected() {
            out.push(ImmersionViolation::Disconnected { edge: he.clone() });
        }
        let (a, b) = h.ends(he)?;
        for end in BTreeSet::from([a, b]) {
            let Some(gv) = cert.vertex_map.get(end) else { continue };
            if !image.vertices.contains(gv.as_str()) {
                out.push(ImmersionViolation::MissingEndpoint {
                    edge: he.clone(),
                    vertex: end.to_string(),
                });
            } else if a == b && !image.has_cycle_through(gv) {
                out.push(ImmersionViolation::NoCycle {
                    edge: he.clone(),
                    vertex: end.to_string(),
                });
            }
        }
        if strong {
            for x in &image.vertices {
                if let Some(&hv) = branch.get(x) {
                    if hv != a && hv != b {
                        out.push(ImmersionViolation::BranchVertexInside {
                            edge: he.clone(),
                            vertex: hv.to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// The subgraph spanned by an edge set.
struct EdgeImage<'a> {
    vertices: BTreeSet<&'a str>,
    edges: Vec<(&'a str, &'a str)>,
}

impl<'a> EdgeImage<'a> {
    fn new(g: &'a Multigraph, ids: &[String]) -> Self {
        let distinct: BTreeSet<&str> = ids.iter().map(String::as_str).collect();
        let edges: Vec<(&str, &str)> = distinct
            .into_iter()
            .map(|e| g.ends(e).expect("checked by caller"))
            .collect();
        let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        EdgeImage { vertices, edges }
    }

    /// Whether `to` is reachable from `from` without using edge `skip`.
    fn reaches(&self, from: &str, to: &str, skip: Option<usize>) -> bool {
        let mut seen = BTreeSet::from([from]);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                return true;
            }
            for (i, &(a, b)) in self.edges.iter().enumerate() {
                if Some(i) == skip {
                    continue;
                }
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        false
    }

    fn is_connected(&self) -> bool {
        match self.vertices.first() {
            None => true,
            Some(&start) => self.vertices.iter().all(|v| self.reaches(start, v, None)),
        }
    }

    /// A cycle passes through `v` iff `v` has a loop or some edge at `v`
    /// is not a bridge.
    fn has_cycle_through(&self, v: &str) -> bool {
        self.edges.iter().enumerate().any(|(i, &(a, b))| {
            if a == v && b == v {
                true
            } else if a == v || b == v {
                let other = if a == v { b } else { a };
                self.reaches(v, other, Some(i))
            } else {
                false
            }
        })
    }
}
