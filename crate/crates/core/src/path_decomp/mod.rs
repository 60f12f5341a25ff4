//! Path-like decompositions and `(a, w, p)`-linearity.
//!
//! A path-like decomposition of `G` with respect to `X` orders `X` as
//! `x_1 … x_t` and splits the remaining vertices into bags `B_0 … B_t`.
//! Every vertex gets a rank: `x_j` sits at `2j` and members of `B_j` at
//! `2j + 1`, so the `x_i`-cut is the set of edges jumping over rank `2i`.

pub mod auxiliary;
mod linear;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::connectivity::CutWitness;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, VertexSet};
use crate::immersion::StarMinorModel;

pub use auxiliary::{
    build_auxiliary_graph, build_auxiliary_graph_with_jobs, has_k1k_minor, min_linearizing_set, SimpleGraph,
    LINEARIZING_VERTEX_CAP, STAR_MINOR_VERTEX_CAP,
};
pub use linear::{compute_separator, linear_decompose, LinearParams, LinearRun, Separator};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathLikeDecomposition {
    pub ordering: Vec<String>,
    /// `B_0 … B_t`; always one more bag than ordered vertices.
    pub bags: Vec<VertexSet>,
}

impl PathLikeDecomposition {
    /// The decomposition with empty ordering and everything in `B_0`.
    pub fn trivial(vertices: VertexSet) -> Self {
        PathLikeDecomposition {
            ordering: Vec::new(),
            bags: vec![vertices],
        }
    }

    pub fn t(&self) -> usize {
        self.ordering.len()
    }

    fn ranks(&self) -> BTreeMap<&str, usize> {
        let mut rank = BTreeMap::new();
        for (j, x) in self.ordering.iter().enumerate() {
            rank.insert(x.as_str(), 2 * (j + 1));
        }
        for (j, bag) in self.bags.iter().enumerate() {
            for v in bag {
                rank.insert(v.as_str(), 2 * j + 1);
            }
        }
        rank
    }

    /// Structural problems with respect to `g` and the ordered set `x`.
    pub fn problems(&self, g: &Multigraph, x: &VertexSet) -> Vec<String> {
        let mut out = Vec::new();
        if self.bags.len() != self.ordering.len() + 1 {
            out.push(format!(
                "{} bags for {} ordered vertices",
                self.bags.len(),
                self.ordering.len()
            ));
        }
        let ordered: VertexSet = self.ordering.iter().cloned().collect();
        if ordered.len() != self.ordering.len() {
            out.push("ordering repeats a vertex".into());
        }
        if &ordered != x {
            out.push("ordering is not exactly the decomposed vertex set".into());
        }
        let mut seen: VertexSet = VertexSet::new();
        for (j, bag) in self.bags.iter().enumerate() {
            for v in bag {
                if ordered.contains(v) {
                    out.push(format!("{v} is both ordered and in bag {j}"));
                } else if !seen.insert(v.clone()) {
                    out.push(format!("{v} lies in more than one bag"));
                }
            }
        }
        let rest: VertexSet = g.vertices().difference(x).cloned().collect();
        if seen != rest {
            out.push("bags are not a near-partition of the remaining vertices".into());
        }
        out
    }
}

/// The `x_i`-cut for `1 ≤ i ≤ t`: edges from `{x_1..x_{i-1}} ∪ B_0..B_{i-1}`
/// to `{x_{i+1}..x_t} ∪ B_i..B_t`.
pub fn xi_cut(g: &Multigraph, p: &PathLikeDecomposition, i: usize) -> Result<BTreeSet<String>> {
    if i < 1 || i > p.t() {
        return Err(Error::IndexOutOfRange {
            index: i,
            low: 1,
            high: p.t(),
        });
    }
    let rank = p.ranks();
    let pivot = 2 * i;
    let mut cut = BTreeSet::new();
    for (id, [a, b]) in g.edges() {
        let (Some(&ra), Some(&rb)) = (rank.get(a.as_str()), rank.get(b.as_str())) else {
            continue;
        };
        if ra.min(rb) < pivot && ra.max(rb) > pivot {
            cut.insert(id.clone());
        }
    }
    Ok(cut)
}

/// Largest `x_i`-cut; 0 when nothing is ordered.
pub fn width(g: &Multigraph, p: &PathLikeDecomposition) -> usize {
    (1..=p.t())
        .map(|i| xi_cut(g, p, i).expect("index in range").len())
        .max()
        .unwrap_or(0)
}

/// `|X ∩ Z|` plus the number of bags meeting `Z`.
pub fn boundedness(p: &PathLikeDecomposition, z: &VertexSet) -> usize {
    let ordered = p.ordering.iter().filter(|x| z.contains(*x)).count();
    let bags = p.bags.iter().filter(|bag| !bag.is_disjoint(z)).count();
    ordered + bags
}

pub fn is_p_bounded(p: &PathLikeDecomposition, z: &VertexSet, bound: usize) -> bool {
    boundedness(p, z) <= bound
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Achieved {
    pub a: usize,
    pub w: usize,
    pub p: usize,
}

/// A deleted set `A` plus a path-like decomposition of `G − A` with
/// respect to `W − A`, together with the parameters it attains.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearityCertificate {
    #[serde(rename = "A")]
    pub apex: VertexSet,
    #[serde(flatten)]
    pub decomposition: PathLikeDecomposition,
    pub achieved: Achieved,
}

impl LinearityCertificate {
    /// Builds a certificate and measures the parameters it achieves.
    pub fn measure(g: &Multigraph, apex: VertexSet, decomposition: PathLikeDecomposition) -> Self {
        let rest = g.without(&apex);
        let w = width(&rest, &decomposition) + 1;
        let p = max_apex_boundedness(g, &apex, &decomposition);
        LinearityCertificate {
            achieved: Achieved { a: apex.len(), w, p },
            apex,
            decomposition,
        }
    }
}

fn max_apex_boundedness(g: &Multigraph, apex: &VertexSet, d: &PathLikeDecomposition) -> usize {
    apex.iter()
        .map(|c| {
            let z: VertexSet = g.neighbors(c).difference(apex).cloned().collect();
            boundedness(d, &z)
        })
        .max()
        .unwrap_or(0)
}

/// Why a certificate does not show `(a, w, p)`-linearity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum LinearViolation {
    ApexNotInW { vertex: String },
    ApexTooLarge { size: usize, a: usize },
    Malformed { reason: String },
    WidthTooLarge { width: usize, w: usize },
    NotPBounded { vertex: String, boundedness: usize, p: usize },
    AchievedMismatch { field: String, claimed: usize, actual: usize },
}

/// Checks that `cert` shows `W` to be `(a, w, p)`-linear in `g`: `|A| ≤ a`,
/// a valid decomposition of `G − A` w.r.t. `W − A` of width below `w`, and
/// `N(v) − A` `p`-bounded for each `v ∈ A`. The claimed `achieved` values
/// must match the measured ones.
pub fn verify_linear_certificate(
    g: &Multigraph,
    w: &VertexSet,
    cert: &LinearityCertificate,
    a: usize,
    max_width: usize,
    p: usize,
) -> Result<Vec<LinearViolation>> {
    let d = &cert.decomposition;
    for v in cert.apex.iter().chain(w).chain(&d.ordering).chain(d.bags.iter().flatten()) {
        if !g.contains_vertex(v) {
            return Err(Error::UnknownVertex(v.clone()));
        }
    }
    let mut out = Vec::new();
    for v in cert.apex.difference(w) {
        out.push(LinearViolation::ApexNotInW { vertex: v.clone() });
    }
    if cert.apex.len() > a {
        out.push(LinearViolation::ApexTooLarge {
            size: cert.apex.len(),
            a,
        });
    }
    let rest = g.without(&cert.apex);
    let x: VertexSet = w.difference(&cert.apex).cloned().collect();
    let problems = d.problems(&rest, &x);
    let structural = !problems.is_empty();
    out.extend(problems.into_iter().map(|reason| LinearViolation::Malformed { reason }));
    if structural {
        return Ok(out);
    }

    let actual_w = width(&rest, d);
    if actual_w >= max_width {
        out.push(LinearViolation::WidthTooLarge {
            width: actual_w,
            w: max_width,
        });
    }
    let mut actual_p = 0;
    for c in &cert.apex {
        let z: VertexSet = g.neighbors(c).difference(&cert.apex).cloned().collect();
        let b = boundedness(d, &z);
        actual_p = actual_p.max(b);
        if b > p {
            out.push(LinearViolation::NotPBounded {
                vertex: c.clone(),
                boundedness: b,
                p,
            });
        }
    }
    for (field, claimed, actual) in [
        ("a", cert.achieved.a, cert.apex.len()),
        ("w", cert.achieved.w, actual_w + 1),
        ("p", cert.achieved.p, actual_p),
    ] {
        if claimed != actual {
            out.push(LinearViolation::AchievedMismatch {
                field: field.into(),
                claimed,
                actual,
            });
        }
    }
    Ok(out)
}

/// Why no linearity certificate was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum FailureWitness {
    /// An edge cut that is too small for the requested connectivity.
    SmallCut { cut: CutWitness },
    /// A `K_{1,k}` minor in the auxiliary graph.
    StarMinor { auxiliary: SimpleGraph, model: StarMinorModel },
    /// The auxiliary graph cannot be made a union of paths cheaply enough.
    NotPathShaped { component: VertexSet, reason: String },
}

/// Either a certificate or the reason there is none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome<T> {
    Certified(T),
    Failed(FailureWitness),
}

impl<T> Outcome<T> {
    pub fn certified(self) -> Option<T> {
        match self {
            Outcome::Certified(t) => Some(t),
            Outcome::Failed(_) => None,
        }
    }
}
