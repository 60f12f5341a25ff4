//! Multigraphs with individually identified edges.
//!
//! Parallel edges and loops are allowed. Every edge carries a stable string
//! identifier, so certificates can name edges unambiguously. Values are
//! immutable in spirit: the structural operations (consolidation, lifting,
//! splitting) return new graphs.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<String>;

/// Builds a [`VertexSet`] from anything yielding string-like names.
pub fn vertex_set<I, S>(names: I) -> VertexSet
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    names.into_iter().map(Into::into).collect()
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct Multigraph {
    vertices: BTreeSet<String>,
    edges: BTreeMap<String, [String; 2]>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<String>,
    edges: Vec<EdgeRepr>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRepr {
    id: String,
    ends: [String; 2],
}

impl TryFrom<GraphRepr> for Multigraph {
    type Error = Error;

    fn try_from(repr: GraphRepr) -> Result<Self> {
        let mut g = Multigraph::new();
        for v in repr.vertices {
            if !g.add_vertex(v.clone()) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        for e in repr.edges {
            let [u, v] = e.ends;
            g.add_edge(e.id, u, v)?;
        }
        Ok(g)
    }
}

impl From<Multigraph> for GraphRepr {
    fn from(g: Multigraph) -> Self {
        GraphRepr {
            vertices: g.vertices.into_iter().collect(),
            edges: g
                .edges
                .into_iter()
                .map(|(id, ends)| EdgeRepr { id, ends })
                .collect(),
        }
    }
}

impl Multigraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_vertices<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Multigraph {
            vertices: vertex_set(names),
            edges: BTreeMap::new(),
        }
    }

    /// Returns `false` if the vertex was already present.
    pub fn add_vertex(&mut self, v: impl Into<String>) -> bool {
        self.vertices.insert(v.into())
    }

    pub fn add_edge(
        &mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
    ) -> Result<()> {
        let (id, u, v) = (id.into(), u.into(), v.into());
        for end in [&u, &v] {
            if !self.vertices.contains(end) {
                return Err(Error::UnknownVertex(end.clone()));
            }
        }
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        self.edges.insert(id, [u, v]);
        Ok(())
    }

    pub fn remove_edge(&mut self, id: &str) -> Result<[String; 2]> {
        self.edges
            .remove(id)
            .ok_or_else(|| Error::UnknownEdge(id.to_owned()))
    }

    /// Removes `v` together with every edge incident to it.
    pub fn remove_vertex(&mut self, v: &str) -> Result<()> {
        if !self.vertices.remove(v) {
            return Err(Error::UnknownVertex(v.to_owned()));
        }
        self.edges.retain(|_, [a, b]| a != v && b != v);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<String> {
        &self.vertices
    }

    /// Edges keyed by identifier, in identifier order.
    pub fn edges(&self) -> &BTreeMap<String, [String; 2]> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains(v)
    }

    pub fn contains_edge(&self, id: &str) -> bool {
        self.edges.contains_key(id)
    }

    pub fn ends(&self, id: &str) -> Result<(&str, &str)> {
        self.edges
            .get(id)
            .map(|[u, v]| (u.as_str(), v.as_str()))
            .ok_or_else(|| Error::UnknownEdge(id.to_owned()))
    }

    pub fn is_loop(&self, id: &str) -> Result<bool> {
        self.ends(id).map(|(u, v)| u == v)
    }

    fn require_vertex(&self, v: &str) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_owned()))
        }
    }

    fn require_subset(&self, set: &VertexSet) -> Result<()> {
        match set.iter().find(|v| !self.vertices.contains(*v)) {
            Some(v) => Err(Error::UnknownVertex(v.clone())),
            None => Ok(()),
        }
    }

    /// Identifiers of the edges incident to `v`; a loop is listed once.
    pub fn incident_edges(&self, v: &str) -> Vec<&str> {
        self.edges
            .iter()
            .filter(|(_, [a, b])| a == v || b == v)
            .map(|(id, _)| id.as_str())
            .collect()
    }

    /// Neighbors of `v` other than `v` itself.
    pub fn neighbors(&self, v: &str) -> VertexSet {
        let mut out = VertexSet::new();
        for [a, b] in self.edges.values() {
            if a == v && b != v {
                out.insert(b.clone());
            } else if b == v && a != v {
                out.insert(a.clone());
            }
        }
        out
    }

    /// Number of edge incidences at `v`; each loop contributes 2.
    pub fn degree(&self, v: &str) -> Result<usize> {
        self.require_vertex(v)?;
        Ok(self
            .edges
            .values()
            .map(|[a, b]| usize::from(a == v) + usize::from(b == v))
            .sum())
    }

    pub fn degrees(&self) -> BTreeMap<String, usize> {
        let mut out: BTreeMap<String, usize> =
            self.vertices.iter().map(|v| (v.clone(), 0)).collect();
        for [a, b] in self.edges.values() {
            *out.get_mut(a).expect("endpoint is a vertex") += 1;
            *out.get_mut(b).expect("endpoint is a vertex") += 1;
        }
        out
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_values().max().unwrap_or(0)
    }

    /// δ(X): non-loop edges with exactly one endpoint in `x`.
    pub fn boundary(&self, x: &VertexSet) -> Result<BTreeSet<String>> {
        self.require_subset(x)?;
        Ok(self
            .edges
            .iter()
            .filter(|(_, [a, b])| x.contains(a) != x.contains(b))
            .map(|(id, _)| id.clone())
            .collect())
    }

    /// G[X]: the subgraph induced by `x`.
    pub fn induced(&self, x: &VertexSet) -> Result<Multigraph> {
        self.require_subset(x)?;
        Ok(Multigraph {
            vertices: x.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(_, [a, b])| x.contains(a) && x.contains(b))
                .map(|(id, ends)| (id.clone(), ends.clone()))
                .collect(),
        })
    }

    /// G − X. Names outside the vertex set are ignored.
    pub fn without(&self, x: &VertexSet) -> Multigraph {
        Multigraph {
            vertices: self.vertices.difference(x).cloned().collect(),
            edges: self
                .edges
                .iter()
                .filter(|(_, [a, b])| !x.contains(a) && !x.contains(b))
                .map(|(id, ends)| (id.clone(), ends.clone()))
                .collect(),
        }
    }

    /// G − K for a set of edge identifiers.
    pub fn without_edges(&self, ids: &BTreeSet<String>) -> Multigraph {
        Multigraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .filter(|(id, _)| !ids.contains(*id))
                .map(|(id, ends)| (id.clone(), ends.clone()))
                .collect(),
        }
    }

    /// Returns `base` if unused, otherwise `base` with primes appended until
    /// it is a fresh vertex name.
    pub fn fresh_vertex_name(&self, base: &str) -> String {
        fresh_name(base, |s| self.vertices.contains(s))
    }

    fn fresh_edge_id(&self, base: &str) -> String {
        fresh_name(base, |s| self.edges.contains_key(s))
    }

    /// The deterministic name [`Multigraph::consolidate`] gives to `x`.
    pub fn consolidated_name(&self, x: &VertexSet) -> String {
        let base = format!("[{}]", x.iter().cloned().collect::<Vec<_>>().join(","));
        fresh_name(&base, |s| self.vertices.contains(s) && !x.contains(s))
    }

    /// Identifies `x` to a single fresh vertex and deletes the loops this
    /// creates. Edges with exactly one end in `x` keep their identifiers.
    pub fn consolidate(&self, x: &VertexSet) -> Result<Multigraph> {
        let name = self.consolidated_name(x);
        self.consolidate_as(x, &name)
    }

    /// Like [`Multigraph::consolidate`] with an explicit name for the new
    /// vertex, which may reuse a member of `x` but no other vertex.
    pub fn consolidate_as(&self, x: &VertexSet, name: &str) -> Result<Multigraph> {
        if x.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        self.require_subset(x)?;
        if self.vertices.contains(name) && !x.contains(name) {
            return Err(Error::NameClash(name.to_owned()));
        }
        let mut vertices: BTreeSet<String> = self.vertices.difference(x).cloned().collect();
        vertices.insert(name.to_owned());
        let edges = self
            .edges
            .iter()
            .filter(|(_, [a, b])| !(x.contains(a) && x.contains(b)))
            .map(|(id, [a, b])| {
                let rename = |v: &String| {
                    if x.contains(v) {
                        name.to_owned()
                    } else {
                        v.clone()
                    }
                };
                (id.clone(), [rename(a), rename(b)])
            })
            .collect();
        Ok(Multigraph { vertices, edges })
    }

    /// Replaces `e = uv` and `f = vw` by one new edge `uw` (a loop when
    /// `u = w`). The pivot `v` must be given when `e` and `f` share both
    /// endpoints; lifting a loop at the pivot is rejected.
    pub fn lift(&self, e: &str, f: &str, pivot: Option<&str>) -> Result<Multigraph> {
        let (new_id, ends) = self.lifted_edge(e, f, pivot)?;
        let mut out = self.clone();
        out.edges.remove(e);
        out.edges.remove(f);
        out.edges.insert(new_id, ends);
        Ok(out)
    }

    fn lifted_edge(&self, e: &str, f: &str, pivot: Option<&str>) -> Result<(String, [String; 2])> {
        if e == f {
            return Err(Error::SameEdge(e.to_owned()));
        }
        let (e0, e1) = self.ends(e)?;
        let (f0, f1) = self.ends(f)?;
        let shared: BTreeSet<&str> = [e0, e1]
            .into_iter()
            .filter(|v| *v == f0 || *v == f1)
            .collect();
        let pivot = match pivot {
            Some(p) if shared.contains(p) => p,
            Some(_) => return Err(Error::NotIncident(e.to_owned(), f.to_owned())),
            None => match shared.len() {
                0 => return Err(Error::NotIncident(e.to_owned(), f.to_owned())),
                1 => *shared.iter().next().expect("one shared endpoint"),
                _ => return Err(Error::AmbiguousPivot(e.to_owned(), f.to_owned())),
            },
        };
        for (id, a, b) in [(e, e0, e1), (f, f0, f1)] {
            if a == pivot && b == pivot {
                return Err(Error::LoopAtPivot {
                    edge: id.to_owned(),
                    pivot: pivot.to_owned(),
                });
            }
        }
        let far = |a: &str, b: &str| if a == pivot { b.to_owned() } else { a.to_owned() };
        let id = self.fresh_edge_id(&format!("{e}+{f}"));
        Ok((id, [far(e0, e1), far(f0, f1)]))
    }

    /// Lifts every pair of `pairing` at `v`, then deletes `v` with all its
    /// remaining edges.
    pub fn split_off_vertex(&self, v: &str, pairing: &[(String, String)]) -> Result<Multigraph> {
        self.require_vertex(v)?;
        let mut seen = BTreeSet::new();
        for (e, f) in pairing {
            for id in [e, f] {
                if !seen.insert(id.as_str()) {
                    return Err(Error::OverlappingPairs(id.clone()));
                }
                let (a, b) = self.ends(id)?;
                if a != v && b != v {
                    return Err(Error::NotIncident(id.clone(), v.to_owned()));
                }
            }
        }
        let mut out = self.clone();
        for (e, f) in pairing {
            let (new_id, ends) = out.lifted_edge(e, f, Some(v))?;
            out.edges.remove(e.as_str());
            out.edges.remove(f.as_str());
            out.edges.insert(new_id, ends);
        }
        out.remove_vertex(v)?;
        Ok(out)
    }

    /// True iff `(x, y)` is a separation: both non-empty, disjoint, covering
    /// the vertex set, and no edge joins them.
    pub fn is_separation(&self, x: &VertexSet, y: &VertexSet) -> bool {
        if x.is_empty() || y.is_empty() || !x.is_disjoint(y) {
            return false;
        }
        if x.len() + y.len() != self.vertices.len()
            || !x.iter().chain(y).all(|v| self.vertices.contains(v))
        {
            return false;
        }
        self.edges
            .values()
            .all(|[a, b]| x.contains(a) == x.contains(b))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut adj: BTreeMap<&str, Vec<&str>> =
            self.vertices.iter().map(|v| (v.as_str(), Vec::new())).collect();
        for [a, b] in self.edges.values() {
            adj.get_mut(a.as_str()).expect("endpoint").push(b);
            adj.get_mut(b.as_str()).expect("endpoint").push(a);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for v in &self.vertices {
            if seen.contains(v.as_str()) {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![v.as_str()];
            seen.insert(v.as_str());
            while let Some(x) = stack.pop() {
                comp.insert(x.to_owned());
                for &y in &adj[x] {
                    if seen.insert(y) {
                        stack.push(y);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Copy with every vertex and edge name prefixed.
    pub fn prefixed(&self, vertex_prefix: &str, edge_prefix: &str) -> Multigraph {
        Multigraph {
            vertices: self
                .vertices
                .iter()
                .map(|v| format!("{vertex_prefix}{v}"))
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|(id, [a, b])| {
                    (
                        format!("{edge_prefix}{id}"),
                        [format!("{vertex_prefix}{a}"), format!("{vertex_prefix}{b}")],
                    )
                })
                .collect(),
        }
    }
}

pub(crate) fn fresh_name(base: &str, taken: impl Fn(&str) -> bool) -> String {
    let mut name = base.to_owned();
    while taken(&name) {
        name.push('\'');
    }
    name
}

/// A separation `(X, Y)` of a multigraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    left: VertexSet,
    right: VertexSet,
}

impl Separation {
    /// Returns `None` unless `(left, right)` is a separation of `g`.
    pub fn new(g: &Multigraph, left: VertexSet, right: VertexSet) -> Option<Self> {
        g.is_separation(&left, &right)
            .then_some(Separation { left, right })
    }

    pub fn left(&self) -> &VertexSet {
        &self.left
    }

    pub fn right(&self) -> &VertexSet {
        &self.right
    }
}
