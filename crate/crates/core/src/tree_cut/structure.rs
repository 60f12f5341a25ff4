use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::{is_k_edge_connected_set, CutWitness, EdgeConnectivity};
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::path_decomp::{LinearityCertificate, Outcome, PathLikeDecomposition};

use super::{
    compose_decompositions, high_degree_vertices, is_alpha_basic, torso_at, EdgeSum, TreeCutDecomposition,
};

/// One recursion step: high-degree vertices `x` and `y` separated by
/// `cut`, which has fewer than `alpha` edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Split {
    pub x: String,
    pub y: String,
    pub cut: CutWitness,
}

/// A tree-cut decomposition with one certificate per node, each stating
/// that the node's torso is `alpha`-basic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureDecomposition {
    pub alpha: usize,
    pub decomposition: TreeCutDecomposition,
    pub certificates: BTreeMap<String, LinearityCertificate>,
    pub splits: Vec<Split>,
}

/// Recursively splits `g` along small cuts between high-degree vertices.
///
/// While two vertices of degree at least `alpha` are separated by fewer
/// than `alpha` edges, the inclusion-minimal minimum cut between the first
/// such pair splits the graph into `G_X` and `G_Y` (each side consolidated
/// in the other part), which are decomposed on their own and glued back
/// along the cut. Parts without such a pair become single nodes and must
/// pass [`is_alpha_basic`]; the first part that does not ends the run with
/// its failure witness.
pub fn structure_decompose(g: &Multigraph, alpha: usize) -> Result<Outcome<StructureDecomposition>> {
    if alpha < 1 {
        return Err(Error::InvalidParameter("alpha must be at least 1".into()));
    }
    let mut run = Run {
        alpha,
        next_node: 0,
        splits: Vec::new(),
    };
    let part = match run.decompose(g, BTreeMap::new())? {
        Outcome::Certified(part) => part,
        Outcome::Failed(witness) => return Ok(Outcome::Failed(witness)),
    };

    // Rename each leaf certificate from its part's vertex names to the
    // peripheral names of the matching torso.
    let mut certificates = BTreeMap::new();
    for (node, (cert, origins)) in part.certificates {
        let torso = torso_at(g, &part.decomposition, &node)?;
        let mut rename: BTreeMap<String, String> = BTreeMap::new();
        for (name, origin) in &origins {
            let target = torso
                .peripheral
                .iter()
                .find(|(_, z)| *z == origin)
                .map(|(p, _)| p.clone())
                .expect("every consolidated vertex matches a peripheral vertex");
            rename.insert(name.clone(), target);
        }
        certificates.insert(node, rename_certificate(&cert, &rename));
    }
    Ok(Outcome::Certified(StructureDecomposition {
        alpha,
        decomposition: part.decomposition,
        certificates,
        splits: run.splits,
    }))
}

fn rename_certificate(cert: &LinearityCertificate, rename: &BTreeMap<String, String>) -> LinearityCertificate {
    let map = |v: &String| rename.get(v).cloned().unwrap_or_else(|| v.clone());
    let set = |s: &VertexSet| s.iter().map(map).collect::<VertexSet>();
    LinearityCertificate {
        apex: set(&cert.apex),
        decomposition: PathLikeDecomposition {
            ordering: cert.decomposition.ordering.iter().map(map).collect(),
            bags: cert.decomposition.bags.iter().map(set).collect(),
        },
        achieved: cert.achieved,
    }
}

/// Original vertices behind each consolidated vertex of a part.
type Origins = BTreeMap<String, VertexSet>;

struct Part {
    decomposition: TreeCutDecomposition,
    certificates: BTreeMap<String, (LinearityCertificate, Origins)>,
}

struct Run {
    alpha: usize,
    next_node: usize,
    splits: Vec<Split>,
}

impl Run {
    fn decompose(&mut self, g: &Multigraph, origins: Origins) -> Result<Outcome<Part>> {
        let w = high_degree_vertices(g, self.alpha);
        let (x, y, cut) = match is_k_edge_connected_set(g, &w, self.alpha)? {
            EdgeConnectivity::Connected => return self.leaf(g, origins),
            EdgeConnectivity::Separated { x, y, cut } => (x, y, cut),
        };
        let side_x = cut.source_side.clone();
        let side_y: VertexSet = g.vertices().difference(&side_x).cloned().collect();
        let name_for_y = g.consolidated_name(&side_y);
        let name_for_x = g.consolidated_name(&side_x);
        let g_x = g.consolidate_as(&side_y, &name_for_y)?;
        let g_y = g.consolidate_as(&side_x, &name_for_x)?;
        assert!(
            g_x.edge_count() < g.edge_count() && g_y.edge_count() < g.edge_count(),
            "splitting along a cut below alpha must shrink both parts"
        );

        let origin_of = |set: &VertexSet| -> VertexSet {
            set.iter()
                .flat_map(|v| origins.get(v).cloned().unwrap_or_else(|| VertexSet::from([v.clone()])))
                .collect()
        };
        let mut origins_x: Origins = origins.iter().filter(|(v, _)| side_x.contains(*v)).map(|(v, o)| (v.clone(), o.clone())).collect();
        origins_x.insert(name_for_y.clone(), origin_of(&side_y));
        let mut origins_y: Origins = origins.iter().filter(|(v, _)| side_y.contains(*v)).map(|(v, o)| (v.clone(), o.clone())).collect();
        origins_y.insert(name_for_x.clone(), origin_of(&side_x));

        let pairing = cut.cut_edges.iter().map(|e| (e.clone(), e.clone())).collect();
        self.splits.push(Split { x, y, cut });

        let left = match self.decompose(&g_x, origins_x)? {
            Outcome::Certified(p) => p,
            Outcome::Failed(w) => return Ok(Outcome::Failed(w)),
        };
        let right = match self.decompose(&g_y, origins_y)? {
            Outcome::Certified(p) => p,
            Outcome::Failed(w) => return Ok(Outcome::Failed(w)),
        };
        let sum = EdgeSum {
            v1: name_for_y,
            v2: name_for_x,
            pairing,
        };
        let decomposition = compose_decompositions(&g_x, &left.decomposition, &g_y, &right.decomposition, &sum)?;
        let mut certificates = left.certificates;
        certificates.extend(right.certificates);
        Ok(Outcome::Certified(Part {
            decomposition,
            certificates,
        }))
    }

    fn leaf(&mut self, g: &Multigraph, origins: Origins) -> Result<Outcome<Part>> {
        let cert = match is_alpha_basic(g, self.alpha)? {
            Outcome::Certified(cert) => cert,
            Outcome::Failed(w) => return Ok(Outcome::Failed(w)),
        };
        let node = format!("t{}", self.next_node);
        self.next_node += 1;
        Ok(Outcome::Certified(Part {
            decomposition: TreeCutDecomposition::single(g, &node),
            certificates: BTreeMap::from([(node, (cert, origins))]),
        }))
    }
}
